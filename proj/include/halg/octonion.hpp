#pragma once

#include <array>
#include <cstddef>
#include <utility>

#include "halg/errors.hpp"
#include "halg/quaternion.hpp"
#include "halg/scalar.hpp"

namespace halg {

template <ScalarField S>
struct OctParams {
    S alpha{1};
    S beta{1};
    S gamma{1};

    friend bool operator==(const OctParams&, const OctParams&) = default;

    bool is_division_params() const {
        return alpha == S{1} && beta == S{1} && gamma == S{1};
    }
};

// All 64 basis products over (1, e1, ..., e7), stored verbatim.
// pmask: bit0 = alpha, bit1 = beta, bit2 = gamma.
inline constexpr BasisProduct kOctBasisTable[8][8] = {
    // 1 * ej
    {{0, +1, 0}, {1, +1, 0}, {2, +1, 0}, {3, +1, 0}, {4, +1, 0}, {5, +1, 0}, {6, +1, 0}, {7, +1, 0}},
    // e1 * ej: e1, -a, e3, -a e2, e5, -a e4, -e7, a e6
    {{1, +1, 0}, {0, -1, 1}, {3, +1, 0}, {2, -1, 1}, {5, +1, 0}, {4, -1, 1}, {7, -1, 0}, {6, +1, 1}},
    // e2 * ej: e2, -e3, -b, b e1, e6, e7, -b e4, -b e5
    {{2, +1, 0}, {3, -1, 0}, {0, -1, 2}, {1, +1, 2}, {6, +1, 0}, {7, +1, 0}, {4, -1, 2}, {5, -1, 2}},
    // e3 * ej: e3, a e2, -b e1, -ab, e7, -a e6, b e5, -ab e4
    {{3, +1, 0}, {2, +1, 1}, {1, -1, 2}, {0, -1, 3}, {7, +1, 0}, {6, -1, 1}, {5, +1, 2}, {4, -1, 3}},
    // e4 * ej: e4, -e5, -e6, -e7, -g, g e1, g e2, g e3
    {{4, +1, 0}, {5, -1, 0}, {6, -1, 0}, {7, -1, 0}, {0, -1, 4}, {1, +1, 4}, {2, +1, 4}, {3, +1, 4}},
    // e5 * ej: e5, a e4, -e7, a e6, -g e1, -ag, -g e3, ag e2
    {{5, +1, 0}, {4, +1, 1}, {7, -1, 0}, {6, +1, 1}, {1, -1, 4}, {0, -1, 5}, {3, -1, 4}, {2, +1, 5}},
    // e6 * ej: e6, e7, b e4, -b e5, -g e2, g e3, -bg, -bg e1
    {{6, +1, 0}, {7, +1, 0}, {4, +1, 2}, {5, -1, 2}, {2, -1, 4}, {3, +1, 4}, {0, -1, 6}, {1, -1, 6}},
    // e7 * ej: e7, -a e6, b e5, ab e4, -g e3, -ag e2, bg e1, -abg
    {{7, +1, 0}, {6, -1, 1}, {5, +1, 2}, {4, +1, 3}, {3, -1, 4}, {2, -1, 5}, {1, +1, 6}, {0, -1, 7}},
};

// Products of algebra parameters indexed by pmask.
template <ScalarField S>
std::array<S, 8> param_products(const OctParams<S>& p) {
    std::array<S, 8> out;
    for (unsigned m = 0; m < 8; ++m) {
        S v{1};
        if (m & 1u) v = v * p.alpha;
        if (m & 2u) v = v * p.beta;
        if (m & 4u) v = v * p.gamma;
        out[m] = v;
    }
    return out;
}

template <ScalarField S>
class Octonion {
public:
    using Scalar = S;
    using Params = OctParams<S>;
    static constexpr std::size_t dim = 8;

    Octonion() = default;
    Octonion(std::array<S, 8> coeffs, Params params)
        : coeffs_(std::move(coeffs)), params_(std::move(params)) {}

    static Octonion zero(Params p) {
        return Octonion(std::array<S, 8>{}, std::move(p));
    }
    static Octonion one(Params p) { return unit(0, std::move(p)); }
    // k = 0 gives the unit 1, k = 1..7 gives e_k.
    static Octonion unit(std::size_t k, Params p) {
        Octonion a = zero(std::move(p));
        a.coeffs_[k] = S{1};
        return a;
    }
    static Octonion scalar(S s, Params p) {
        Octonion a = zero(std::move(p));
        a.coeffs_[0] = std::move(s);
        return a;
    }

    const std::array<S, 8>& coeffs() const { return coeffs_; }
    const S& operator[](std::size_t i) const { return coeffs_[i]; }
    const Params& params() const { return params_; }

    bool is_zero() const {
        for (const S& c : coeffs_)
            if (!(c == S{0})) return false;
        return true;
    }

    friend bool operator==(const Octonion& a, const Octonion& b) = default;

private:
    std::array<S, 8> coeffs_{};
    Params params_{};
};

template <ScalarField S>
void require_same_params(const Octonion<S>& a, const Octonion<S>& b) {
    if (!(a.params() == b.params()))
        throw ParamsMismatch("octonion operands carry different algebra parameters");
}

template <ScalarField S>
void require_division_params(const Octonion<S>& a) {
    if (!a.params().is_division_params())
        throw DomainMismatch("operation is defined on O(1,1,1) only");
}

template <ScalarField S>
Octonion<S> operator+(const Octonion<S>& a, const Octonion<S>& b) {
    require_same_params(a, b);
    std::array<S, 8> out;
    for (std::size_t i = 0; i < 8; ++i) out[i] = a[i] + b[i];
    return {out, a.params()};
}

template <ScalarField S>
Octonion<S> operator-(const Octonion<S>& a, const Octonion<S>& b) {
    require_same_params(a, b);
    std::array<S, 8> out;
    for (std::size_t i = 0; i < 8; ++i) out[i] = a[i] - b[i];
    return {out, a.params()};
}

template <ScalarField S>
Octonion<S> operator-(const Octonion<S>& a) {
    std::array<S, 8> out;
    for (std::size_t i = 0; i < 8; ++i) out[i] = -a[i];
    return {out, a.params()};
}

template <ScalarField S>
Octonion<S> operator*(const S& s, const Octonion<S>& a) {
    std::array<S, 8> out;
    for (std::size_t i = 0; i < 8; ++i) out[i] = s * a[i];
    return {out, a.params()};
}

// Bilinear extension of the basis table.
template <ScalarField S>
Octonion<S> operator*(const Octonion<S>& a, const Octonion<S>& b) {
    require_same_params(a, b);
    const auto pp = param_products(a.params());
    std::array<S, 8> out{};
    for (std::size_t i = 0; i < 8; ++i) {
        if (a[i] == S{0}) continue;
        for (std::size_t j = 0; j < 8; ++j) {
            if (b[j] == S{0}) continue;
            const BasisProduct& e = kOctBasisTable[i][j];
            S term = a[i] * b[j] * pp[e.pmask];
            if (e.sign < 0) term = -term;
            out[static_cast<std::size_t>(e.target)] = out[static_cast<std::size_t>(e.target)] + term;
        }
    }
    return {out, a.params()};
}

template <ScalarField S>
Octonion<S> conj(const Octonion<S>& a) {
    return {{a[0], -a[1], -a[2], -a[3], -a[4], -a[5], -a[6], -a[7]}, a.params()};
}

template <ScalarField S>
S trace(const Octonion<S>& a) {
    return a[0] + a[0];
}

// n(a) = a0^2 + a*a1^2 + b*a2^2 + ab*a3^2 + g*a4^2 + ag*a5^2 + bg*a6^2 + abg*a7^2.
template <ScalarField S>
S norm(const Octonion<S>& a) {
    const auto pp = param_products(a.params());
    S out{0};
    for (std::size_t i = 0; i < 8; ++i) out = out + pp[i] * a[i] * a[i];
    return out;
}

// a = q1 + q2*e4 with q1 = (a0..a3), q2 = (a4..a7), both in H(1,1).
template <ScalarField S>
std::pair<Quaternion<S>, Quaternion<S>> oct_split(const Octonion<S>& a) {
    require_division_params(a);
    QuatParams<S> hp{};
    return {Quaternion<S>({a[0], a[1], a[2], a[3]}, hp),
            Quaternion<S>({a[4], a[5], a[6], a[7]}, hp)};
}

// Inverse of oct_split: embeds both halves and forms q1 + q2*e4 in O(1,1,1).
template <ScalarField S>
Octonion<S> oct_from_halves(const Quaternion<S>& q1, const Quaternion<S>& q2) {
    require_division_params(q1);
    require_division_params(q2);
    OctParams<S> op{};
    Octonion<S> lifted1({q1[0], q1[1], q1[2], q1[3], S{0}, S{0}, S{0}, S{0}}, op);
    Octonion<S> lifted2({q2[0], q2[1], q2[2], q2[3], S{0}, S{0}, S{0}, S{0}}, op);
    return lifted1 + lifted2 * Octonion<S>::unit(4, op);
}

// a* : sign pattern (+,+,-,-,-,-,-,-).
template <ScalarField S>
Octonion<S> star(const Octonion<S>& a) {
    require_division_params(a);
    return {{a[0], a[1], -a[2], -a[3], -a[4], -a[5], -a[6], -a[7]}, a.params()};
}

// q1 - q2*e4 : sign pattern (+,+,+,+,-,-,-,-).
template <ScalarField S>
Octonion<S> tilde(const Octonion<S>& a) {
    require_division_params(a);
    return {{a[0], a[1], a[2], a[3], -a[4], -a[5], -a[6], -a[7]}, a.params()};
}

// q1* + q2*·e4 : sign pattern (+,+,-,-,+,+,-,-).
template <ScalarField S>
Octonion<S> plus_sub(const Octonion<S>& a) {
    require_division_params(a);
    return {{a[0], a[1], -a[2], -a[3], a[4], a[5], -a[6], -a[7]}, a.params()};
}

// conj(q1) + q2*e4 : sign pattern (+,-,-,-,+,+,+,+).
template <ScalarField S>
Octonion<S> plus_sup(const Octonion<S>& a) {
    require_division_params(a);
    return {{a[0], -a[1], -a[2], -a[3], a[4], a[5], a[6], a[7]}, a.params()};
}

}  // namespace halg
