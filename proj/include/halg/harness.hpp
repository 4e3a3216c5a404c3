#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "halg/scalar.hpp"

namespace halg {

// One failing input with both evaluated sides, replayable from the literals.
struct Counterexample {
    std::string input;  // JSON object mapping variable names to element literals
    std::string lhs;
    std::string rhs;
};

struct VerifyMode {
    bool exhaustive = true;
    std::uint64_t count = 500;  // random mode sample count
    std::uint64_t seed = 0;

    static VerifyMode exhaustive_basis() { return {true, 0, 0}; }
    static VerifyMode random(std::uint64_t count, std::uint64_t seed) {
        return {false, count, seed};
    }
};

struct PropositionReport {
    std::string id;
    std::string convention;  // "" or "paper"/"central" for the adjudicated checks
    std::string mode;        // "exhaustive-basis" or "random(count=N,seed=S)"
    std::uint64_t seed = 0;
    std::uint64_t cases_checked = 0;
    bool holds = true;  // on all tested inputs
    std::uint64_t failure_count = 0;
    std::vector<Counterexample> counterexamples;  // first kMaxStoredCounterexamples
    std::vector<std::string> notes;
};

inline constexpr std::size_t kMaxStoredCounterexamples = 8;

// Catalog ids, in report order:
//   2.3, 2.4.1..2.4.4, 2.5a..2.5d, 2.6, 2.7i..2.7iii, 2.8i, 2.8ii, 2.9,
//   R2.2a, R2.2b, E2.20..E2.24
const std::vector<std::string>& proposition_catalog();

// 2.6 and 2.9 are adjudicated (reported, never asserted); they emit one
// report per product convention.
bool proposition_adjudicated(std::string_view id);

// Runs one checker. Group prefixes ("2.4", "2.5", "2.7", "2.8", "R2.2")
// expand to their members. Throws UnknownProposition otherwise.
std::vector<PropositionReport> verify_proposition(std::string_view id, const VerifyMode& mode);

std::string report_to_json(const PropositionReport& report);

}  // namespace halg
