#pragma once

// Shared test fixtures: an independent transcription of the two
// multiplication tables (the conformance oracle), random element
// generators, and a tiny process runner for CLI checks.

#include <array>
#include <cstdio>
#include <random>
#include <string>
#include <string_view>

#include "halg/octonion.hpp"
#include "halg/quaternion.hpp"
#include "halg/scalar.hpp"

namespace testsupport {

using halg::Octonion;
using halg::OctParams;
using halg::Quaternion;
using halg::QuatParams;
using halg::Rational;

// Cell grammar: optional '-', optional parameter letters (a, b, g), optional
// unit "e<k>"; "1" alone is the scalar unit. Transcribed row by row.
inline constexpr const char* kQuatTable[4][4] = {
    {"1", "e1", "e2", "e3"},
    {"e1", "-a", "e3", "-a e2"},
    {"e2", "-e3", "-b", "b e1"},
    {"e3", "a e2", "-b e1", "-ab"},
};

inline constexpr const char* kOctTable[8][8] = {
    {"1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"},
    {"e1", "-a", "e3", "-a e2", "e5", "-a e4", "-e7", "a e6"},
    {"e2", "-e3", "-b", "b e1", "e6", "e7", "-b e4", "-b e5"},
    {"e3", "a e2", "-b e1", "-ab", "e7", "-a e6", "b e5", "-ab e4"},
    {"e4", "-e5", "-e6", "-e7", "-g", "g e1", "g e2", "g e3"},
    {"e5", "a e4", "-e7", "a e6", "-g e1", "-ag", "-g e3", "ag e2"},
    {"e6", "e7", "b e4", "-b e5", "-g e2", "g e3", "-bg", "-bg e1"},
    {"e7", "-a e6", "b e5", "ab e4", "-g e3", "-ag e2", "bg e1", "-abg"},
};

struct CellValue {
    Rational coeff;
    std::size_t unit;  // 0 = scalar
};

// params: up to three values (a, b, g); quaternions ignore g.
inline CellValue eval_cell(std::string_view cell, const std::array<Rational, 3>& params) {
    CellValue out{Rational{1}, 0};
    std::size_t i = 0;
    if (i < cell.size() && cell[i] == '-') {
        out.coeff = -out.coeff;
        ++i;
    }
    for (; i < cell.size(); ++i) {
        const char c = cell[i];
        if (c == 'a') out.coeff *= params[0];
        else if (c == 'b') out.coeff *= params[1];
        else if (c == 'g') out.coeff *= params[2];
        else if (c == ' ') continue;
        else if (c == '1') break;
        else if (c == 'e') {
            out.unit = static_cast<std::size_t>(cell[i + 1] - '0');
            break;
        }
    }
    return out;
}

template <std::size_t N>
std::array<Rational, N> expected_coeffs(std::string_view cell, const std::array<Rational, 3>& params) {
    std::array<Rational, N> coeffs{};
    const CellValue v = eval_cell(cell, params);
    coeffs[v.unit] = v.coeff;
    return coeffs;
}

// ---------------------------------------------------------------------------

inline Rational random_coeff(std::mt19937_64& gen) {
    return Rational(static_cast<long long>(gen() % 19) - 9);
}

inline Quaternion<Rational> random_quat(std::mt19937_64& gen, const QuatParams<Rational>& params) {
    std::array<Rational, 4> c;
    for (auto& x : c) x = random_coeff(gen);
    return {c, params};
}

inline Octonion<Rational> random_oct(std::mt19937_64& gen, const OctParams<Rational>& params) {
    std::array<Rational, 8> c;
    for (auto& x : c) x = random_coeff(gen);
    return {c, params};
}

// ---------------------------------------------------------------------------

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

inline CliResult run_cli(const std::string& cli_path, const std::string& args) {
    CliResult result;
    const std::string cmd = cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

inline std::string read_file(const std::string& path) {
    std::string content;
    FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return content;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), f)) > 0) content.append(buf, got);
    std::fclose(f);
    return content;
}

}  // namespace testsupport
