#include "halg/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "halg/errors.hpp"

namespace halg {

std::string scalar_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;  // "p" or "p/q"
    return os.str();
}

std::string scalar_to_string(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty scalar");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
        if (s.empty()) throw ParseError("sign with no digits in scalar '" + std::string(text) + "'");
    }

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("bad rational '" + std::string(text) + "'");
        BigInt d{std::string(den)};
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        value = Rational(BigInt{std::string(num)}, d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) throw ParseError("bad decimal '" + std::string(text) + "'");
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw ParseError("bad decimal '" + std::string(text) + "'");
        BigInt scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        BigInt whole = ip.empty() ? BigInt{0} : BigInt{std::string(ip)};
        BigInt frac = fp.empty() ? BigInt{0} : BigInt{std::string(fp)};
        value = Rational(whole * scale + frac, scale);
    } else {
        if (!all_digits(s)) throw ParseError("bad integer '" + std::string(text) + "'");
        value = Rational(BigInt{std::string(s)});
    }
    return negative ? Rational(-value) : value;
}

Rational rational_from_double(double v) {
    if (!std::isfinite(v)) throw ParseError("non-finite float scalar");
    if (v == 0.0) return Rational{0};
    int exp = 0;
    double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
    // 53 doublings make the mantissa integral.
    BigInt num = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r{num};
    if (exp >= 0) {
        r *= Rational(BigInt{1} << exp);
    } else {
        r /= Rational(BigInt{1} << -exp);
    }
    return r;
}

}  // namespace halg
