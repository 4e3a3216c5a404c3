#include "halg/literals.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <sstream>

#include "halg/errors.hpp"
#include "halg/reps.hpp"

namespace halg {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Scalar <-> JSON. Integers that fit in int64 stay numeric; everything else
// ("p/q", huge integers) becomes a string that parse_rational accepts.

json scalar_json(const Rational& r) {
    if (denominator(r) == 1) {
        const BigInt& n = numerator(r);
        if (n >= std::numeric_limits<std::int64_t>::min() &&
            n <= std::numeric_limits<std::int64_t>::max())
            return static_cast<std::int64_t>(n);
    }
    return scalar_to_string(r);
}

Rational scalar_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(BigInt{j.get<std::int64_t>()});
    if (j.is_number_unsigned()) return Rational(BigInt{j.get<std::uint64_t>()});
    if (j.is_number_float()) return rational_from_double(j.get<double>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("scalar entry must be a number or string, got: " + j.dump());
}

std::vector<Rational> coeff_array_from_json(const json& j, std::size_t expected) {
    if (!j.is_array() || j.size() != expected)
        throw ParseError("expected a coefficient array of length " + std::to_string(expected));
    std::vector<Rational> out;
    out.reserve(expected);
    for (const auto& entry : j) out.push_back(scalar_from_json(entry));
    return out;
}

json parse_json_checked(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON literal: " + std::string(text));
    return j;
}

// ---------------------------------------------------------------------------
// Term-grammar parser.

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos) + " in '" +
                         std::string(text) + "'");
    }
};

// i, j, ij, k, ik, jk, ijk name e1..e7 of the division algebras.
std::size_t alias_index(std::string_view word) {
    if (word == "i") return 1;
    if (word == "j") return 2;
    if (word == "ij") return 3;
    if (word == "k") return 4;
    if (word == "ik") return 5;
    if (word == "jk") return 6;
    if (word == "ijk") return 7;
    return 0;  // not an alias
}

bool is_unit_letter(char c) { return c == 'i' || c == 'j' || c == 'k'; }

// "e<digits>" or an ijk alias; returns 0 when the cursor is not at a unit.
std::size_t parse_unit(Cursor& cur, std::size_t dim) {
    cur.skip_ws();
    if (cur.pos >= cur.text.size()) return 0;
    const char c = cur.text[cur.pos];
    std::size_t index = 0;
    if (c == 'e' && cur.pos + 1 < cur.text.size() &&
        std::isdigit(static_cast<unsigned char>(cur.text[cur.pos + 1]))) {
        std::size_t p = cur.pos + 1;
        while (p < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[p]))) ++p;
        index = 0;
        for (std::size_t k = cur.pos + 1; k < p; ++k)
            index = index * 10 + static_cast<std::size_t>(cur.text[k] - '0');
        if (index == 0 || index >= dim) cur.fail("basis unit out of range for this algebra");
        cur.pos = p;
        return index;
    }
    if (is_unit_letter(c)) {
        std::size_t p = cur.pos;
        while (p < cur.text.size() && is_unit_letter(cur.text[p])) ++p;
        const std::string_view word = cur.text.substr(cur.pos, p - cur.pos);
        index = alias_index(word);
        if (index == 0) cur.fail("unknown basis unit '" + std::string(word) + "'");
        if (index >= dim) cur.fail("basis unit out of range for this algebra");
        cur.pos = p;
        return index;
    }
    return 0;
}

// Unsigned number: integer, p/q, or decimal (no exponent form; e digits are units).
Rational parse_number(Cursor& cur) {
    cur.skip_ws();
    const std::size_t start = cur.pos;
    auto digits = [&] {
        while (cur.pos < cur.text.size() &&
               std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
            ++cur.pos;
    };
    digits();
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == '.') {
        ++cur.pos;
        digits();
    } else if (cur.pos < cur.text.size() && cur.text[cur.pos] == '/') {
        ++cur.pos;
        const std::size_t den_start = cur.pos;
        digits();
        if (cur.pos == den_start) cur.fail("missing denominator");
    }
    return parse_rational(cur.text.substr(start, cur.pos - start));
}

// One "coef unit" term; at least one part must be present.
void parse_simple_term(Cursor& cur, std::size_t dim, bool negative, std::vector<Rational>& out) {
    cur.skip_ws();
    if (cur.pos >= cur.text.size()) cur.fail("expected a term");
    Rational coef{1};
    bool have_coef = false;
    const char c = cur.text[cur.pos];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        coef = parse_number(cur);
        have_coef = true;
        cur.skip_ws();
        if (cur.pos < cur.text.size() && cur.text[cur.pos] == '*') ++cur.pos;
    }
    const std::size_t unit = parse_unit(cur, dim);
    if (!have_coef && unit == 0) cur.fail("expected a coefficient or basis unit");
    if (negative) coef = -coef;
    out[unit] = out[unit] + coef;
}

void parse_sum(Cursor& cur, std::size_t dim, bool allow_complex, std::vector<Rational>& re,
               std::vector<Rational>& im);

// Group after an optional sign: "(...)", "i*(...)", "i*term" or a simple term.
void parse_group(Cursor& cur, std::size_t dim, bool allow_complex, bool negative,
                 std::vector<Rational>& re, std::vector<Rational>& im) {
    cur.skip_ws();
    // "i*" marks the imaginary half; distinguished from the alias i by the '*'.
    if (allow_complex && cur.pos + 1 < cur.text.size() && cur.text[cur.pos] == 'i' &&
        cur.text[cur.pos + 1] == '*') {
        cur.pos += 2;
        cur.skip_ws();
        if (cur.consume('(')) {
            std::vector<Rational> dummy(dim, Rational{0});
            std::vector<Rational> inner(dim, Rational{0});
            parse_sum(cur, dim, false, inner, dummy);
            if (!cur.consume(')')) cur.fail("expected ')'");
            for (std::size_t k = 0; k < dim; ++k) {
                if (negative) im[k] = im[k] - inner[k];
                else im[k] = im[k] + inner[k];
            }
        } else {
            parse_simple_term(cur, dim, negative, im);
        }
        return;
    }
    if (cur.peek() == '(') {
        cur.consume('(');
        std::vector<Rational> dummy(dim, Rational{0});
        std::vector<Rational> inner(dim, Rational{0});
        parse_sum(cur, dim, false, inner, dummy);
        if (!cur.consume(')')) cur.fail("expected ')'");
        for (std::size_t k = 0; k < dim; ++k) {
            if (negative) re[k] = re[k] - inner[k];
            else re[k] = re[k] + inner[k];
        }
        return;
    }
    parse_simple_term(cur, dim, negative, re);
}

void parse_sum(Cursor& cur, std::size_t dim, bool allow_complex, std::vector<Rational>& re,
               std::vector<Rational>& im) {
    bool negative = false;
    if (cur.consume('-')) negative = true;
    else cur.consume('+');
    parse_group(cur, dim, allow_complex, negative, re, im);
    while (true) {
        cur.skip_ws();
        if (cur.pos >= cur.text.size() || cur.text[cur.pos] == ')') return;
        if (cur.consume('-')) negative = true;
        else if (cur.consume('+')) negative = false;
        else cur.fail("expected '+' or '-'");
        parse_group(cur, dim, allow_complex, negative, re, im);
    }
}

struct ParsedElement {
    std::vector<Rational> re;
    std::vector<Rational> im;
};

ParsedElement parse_element(std::string_view text, std::size_t dim, bool allow_complex) {
    ParsedElement out{std::vector<Rational>(dim, Rational{0}),
                      std::vector<Rational>(dim, Rational{0})};
    // Array / object literals take the JSON path.
    Cursor probe{text};
    const char first = probe.peek();
    if (first == '[') {
        out.re = coeff_array_from_json(parse_json_checked(text), dim);
        return out;
    }
    if (first == '{') {
        if (!allow_complex) throw ParseError("object literal is only valid for complex elements");
        const json j = parse_json_checked(text);
        if (!j.contains("re") || !j.contains("im"))
            throw ParseError("complex element object needs \"re\" and \"im\" arrays");
        out.re = coeff_array_from_json(j.at("re"), dim);
        out.im = coeff_array_from_json(j.at("im"), dim);
        return out;
    }
    Cursor cur{text};
    if (cur.done()) cur.fail("empty element literal");
    parse_sum(cur, dim, allow_complex, out.re, out.im);
    if (!cur.done()) cur.fail("trailing input");
    return out;
}

template <std::size_t N>
std::array<Rational, N> to_array(const std::vector<Rational>& v) {
    std::array<Rational, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = v[i];
    return out;
}

std::string pretty_terms(const std::vector<Rational>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const Rational& c = coeffs[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (k == 0) {
            os << scalar_to_string(mag);
        } else {
            if (!(mag == 1)) os << scalar_to_string(mag);
            os << 'e' << k;
        }
    }
    if (first) return "0";
    return os.str();
}

std::vector<Rational> coeff_vector(const Quaternion<Rational>& q) {
    return {q[0], q[1], q[2], q[3]};
}

std::vector<Rational> coeff_vector(const Octonion<Rational>& a) {
    return {a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7]};
}

json coeff_json(const std::vector<Rational>& coeffs) {
    json arr = json::array();
    for (const Rational& c : coeffs) arr.push_back(scalar_json(c));
    return arr;
}

std::vector<Rational> split_params(std::string_view text, std::size_t expected) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (out.size() != expected)
        throw ParseError("expected " + std::to_string(expected) + " comma-separated parameters");
    return out;
}

}  // namespace

Quaternion<Rational> parse_quaternion(std::string_view text, const QuatParams<Rational>& params) {
    const auto parsed = parse_element(text, 4, false);
    return {to_array<4>(parsed.re), params};
}

Octonion<Rational> parse_octonion(std::string_view text, const OctParams<Rational>& params) {
    const auto parsed = parse_element(text, 8, false);
    return {to_array<8>(parsed.re), params};
}

ComplexQuaternion<Rational> parse_complex_quaternion(std::string_view text) {
    const auto parsed = parse_element(text, 4, true);
    return {Quaternion<Rational>(to_array<4>(parsed.re), {}),
            Quaternion<Rational>(to_array<4>(parsed.im), {})};
}

ComplexOctonion<Rational> parse_complex_octonion(std::string_view text) {
    const auto parsed = parse_element(text, 8, true);
    return {Octonion<Rational>(to_array<8>(parsed.re), {}),
            Octonion<Rational>(to_array<8>(parsed.im), {})};
}

ZornElement<Rational> parse_zorn(std::string_view text) {
    const auto coeffs = coeff_array_from_json(parse_json_checked(text), 8);
    ZornElement<Rational> z;
    z.a = coeffs[0];
    z.b = coeffs[1];
    for (std::size_t i = 0; i < 3; ++i) {
        z.u[i] = coeffs[2 + i];
        z.v[i] = coeffs[5 + i];
    }
    return z;
}

QuatParams<Rational> parse_quat_params(std::string_view text) {
    Cursor probe{text};
    if (probe.peek() == '{') {
        const json j = parse_json_checked(text);
        if (!j.contains("beta1") || !j.contains("beta2"))
            throw ParseError("quaternion params object needs \"beta1\" and \"beta2\"");
        return {scalar_from_json(j.at("beta1")), scalar_from_json(j.at("beta2"))};
    }
    const auto ps = split_params(text, 2);
    return {ps[0], ps[1]};
}

OctParams<Rational> parse_oct_params(std::string_view text) {
    Cursor probe{text};
    if (probe.peek() == '{') {
        const json j = parse_json_checked(text);
        if (!j.contains("alpha") || !j.contains("beta") || !j.contains("gamma"))
            throw ParseError("octonion params object needs \"alpha\", \"beta\" and \"gamma\"");
        return {scalar_from_json(j.at("alpha")), scalar_from_json(j.at("beta")),
                scalar_from_json(j.at("gamma"))};
    }
    const auto ps = split_params(text, 3);
    return {ps[0], ps[1], ps[2]};
}

std::string print_json(const Quaternion<Rational>& q) { return coeff_json(coeff_vector(q)).dump(); }

std::string print_json(const Octonion<Rational>& a) { return coeff_json(coeff_vector(a)).dump(); }

std::string print_json(const ComplexQuaternion<Rational>& q) {
    json j;
    j["re"] = coeff_json(coeff_vector(q.re()));
    j["im"] = coeff_json(coeff_vector(q.im()));
    return j.dump();
}

std::string print_json(const ComplexOctonion<Rational>& a) {
    json j;
    j["re"] = coeff_json(coeff_vector(a.re()));
    j["im"] = coeff_json(coeff_vector(a.im()));
    return j.dump();
}

std::string print_json(const ZornElement<Rational>& z) {
    return coeff_json({z.a, z.b, z.u[0], z.u[1], z.u[2], z.v[0], z.v[1], z.v[2]}).dump();
}

std::string print_pretty(const Quaternion<Rational>& q) { return pretty_terms(coeff_vector(q)); }

std::string print_pretty(const Octonion<Rational>& a) { return pretty_terms(coeff_vector(a)); }

std::string print_pretty(const ComplexQuaternion<Rational>& q) {
    return "(" + print_pretty(q.re()) + ") + i*(" + print_pretty(q.im()) + ")";
}

std::string print_pretty(const ComplexOctonion<Rational>& a) {
    return "(" + print_pretty(a.re()) + ") + i*(" + print_pretty(a.im()) + ")";
}

std::string print_pretty(const ZornElement<Rational>& z) {
    std::ostringstream os;
    os << "(" << scalar_to_string(z.a) << ", (" << scalar_to_string(z.u[0]) << ","
       << scalar_to_string(z.u[1]) << "," << scalar_to_string(z.u[2]) << "); ("
       << scalar_to_string(z.v[0]) << "," << scalar_to_string(z.v[1]) << ","
       << scalar_to_string(z.v[2]) << "), " << scalar_to_string(z.b) << ")";
    return os.str();
}

std::string matrix_csv(const RepMatrix<Rational>& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) os << ',';
            os << scalar_to_string(m.at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

std::string matrix_json(const RepMatrix<Rational>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(scalar_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

std::string vec_json(const VecRep<Rational>& v) {
    json arr = json::array();
    for (std::size_t i = 0; i < v.length(); ++i) arr.push_back(scalar_json(v[i]));
    return arr.dump();
}

bool parse_const_name(std::string_view name, ConstMat& out) {
    if (name == "M1") out = ConstMat::M1;
    else if (name == "L1") out = ConstMat::L1;
    else if (name == "R1") out = ConstMat::R1;
    else if (name == "eps") out = ConstMat::Eps;
    else if (name == "tau") out = ConstMat::Tau;
    else if (name == "sigma") out = ConstMat::Sigma;
    else if (name == "theta") out = ConstMat::Theta;
    else if (name == "T") out = ConstMat::T;
    else if (name == "S") out = ConstMat::S16;
    else return false;
    return true;
}

std::string const_name(ConstMat which) {
    switch (which) {
        case ConstMat::M1: return "M1";
        case ConstMat::L1: return "L1";
        case ConstMat::R1: return "R1";
        case ConstMat::Eps: return "eps";
        case ConstMat::Tau: return "tau";
        case ConstMat::Sigma: return "sigma";
        case ConstMat::Theta: return "theta";
        case ConstMat::T: return "T";
        case ConstMat::S16: return "S";
    }
    return "?";
}

}  // namespace halg
