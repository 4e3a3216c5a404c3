#pragma once

#include <array>
#include <cstddef>

#include "halg/errors.hpp"
#include "halg/scalar.hpp"

namespace halg {

template <ScalarField S>
struct QuatParams {
    S beta1{1};
    S beta2{1};

    friend bool operator==(const QuatParams&, const QuatParams&) = default;

    bool is_division_params() const { return beta1 == S{1} && beta2 == S{1}; }
};

// One basis product: e_i * e_j = sign * (parameter product) * e_target.
// pmask selects the parameter factors; for quaternions bit0 = beta1,
// bit1 = beta2, for octonions bit0 = alpha, bit1 = beta, bit2 = gamma.
struct BasisProduct {
    int target;
    int sign;
    unsigned pmask;
};

// Structure constants over the basis (1, e1, e2, e3), stored verbatim:
//   e1^2 = -b1, e2^2 = -b2, e3^2 = -b1*b2,
//   e1e2 = e3 = -e2e1, e1e3 = -b1*e2, e3e1 = b1*e2, e2e3 = b2*e1, e3e2 = -b2*e1.
inline constexpr BasisProduct kQuatBasisTable[4][4] = {
    {{0, +1, 0}, {1, +1, 0}, {2, +1, 0}, {3, +1, 0}},
    {{1, +1, 0}, {0, -1, 1}, {3, +1, 0}, {2, -1, 1}},
    {{2, +1, 0}, {3, -1, 0}, {0, -1, 2}, {1, +1, 2}},
    {{3, +1, 0}, {2, +1, 1}, {1, -1, 2}, {0, -1, 3}},
};

// Products of algebra parameters indexed by pmask.
template <ScalarField S>
std::array<S, 4> param_products(const QuatParams<S>& p) {
    return {S{1}, p.beta1, p.beta2, p.beta1 * p.beta2};
}

template <ScalarField S>
class Quaternion {
public:
    using Scalar = S;
    using Params = QuatParams<S>;
    static constexpr std::size_t dim = 4;

    Quaternion() = default;
    Quaternion(std::array<S, 4> coeffs, Params params)
        : coeffs_(std::move(coeffs)), params_(std::move(params)) {}

    static Quaternion zero(Params p) { return Quaternion({S{0}, S{0}, S{0}, S{0}}, std::move(p)); }
    static Quaternion one(Params p) { return Quaternion({S{1}, S{0}, S{0}, S{0}}, std::move(p)); }
    // k = 0 gives the unit 1, k = 1..3 gives e_k.
    static Quaternion unit(std::size_t k, Params p) {
        Quaternion q = zero(std::move(p));
        q.coeffs_[k] = S{1};
        return q;
    }
    static Quaternion scalar(S s, Params p) {
        Quaternion q = zero(std::move(p));
        q.coeffs_[0] = std::move(s);
        return q;
    }

    const std::array<S, 4>& coeffs() const { return coeffs_; }
    const S& operator[](std::size_t i) const { return coeffs_[i]; }
    const Params& params() const { return params_; }

    bool is_zero() const {
        for (const S& c : coeffs_)
            if (!(c == S{0})) return false;
        return true;
    }

    friend bool operator==(const Quaternion& a, const Quaternion& b) = default;

private:
    std::array<S, 4> coeffs_{};
    Params params_{};
};

template <ScalarField S>
void require_same_params(const Quaternion<S>& a, const Quaternion<S>& b) {
    if (!(a.params() == b.params()))
        throw ParamsMismatch("quaternion operands carry different algebra parameters");
}

template <ScalarField S>
void require_division_params(const Quaternion<S>& q) {
    if (!q.params().is_division_params())
        throw DomainMismatch("operation is defined on H(1,1) only");
}

template <ScalarField S>
Quaternion<S> operator+(const Quaternion<S>& a, const Quaternion<S>& b) {
    require_same_params(a, b);
    std::array<S, 4> out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = a[i] + b[i];
    return {out, a.params()};
}

template <ScalarField S>
Quaternion<S> operator-(const Quaternion<S>& a, const Quaternion<S>& b) {
    require_same_params(a, b);
    std::array<S, 4> out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = a[i] - b[i];
    return {out, a.params()};
}

template <ScalarField S>
Quaternion<S> operator-(const Quaternion<S>& a) {
    std::array<S, 4> out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = -a[i];
    return {out, a.params()};
}

template <ScalarField S>
Quaternion<S> operator*(const S& s, const Quaternion<S>& a) {
    std::array<S, 4> out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = s * a[i];
    return {out, a.params()};
}

// Bilinear extension of the basis table.
template <ScalarField S>
Quaternion<S> operator*(const Quaternion<S>& a, const Quaternion<S>& b) {
    require_same_params(a, b);
    const auto pp = param_products(a.params());
    std::array<S, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (a[i] == S{0}) continue;
        for (std::size_t j = 0; j < 4; ++j) {
            if (b[j] == S{0}) continue;
            const BasisProduct& e = kQuatBasisTable[i][j];
            S term = a[i] * b[j] * pp[e.pmask];
            if (e.sign < 0) term = -term;
            out[static_cast<std::size_t>(e.target)] = out[static_cast<std::size_t>(e.target)] + term;
        }
    }
    return {out, a.params()};
}

template <ScalarField S>
Quaternion<S> conj(const Quaternion<S>& q) {
    return {{q[0], -q[1], -q[2], -q[3]}, q.params()};
}

template <ScalarField S>
S trace(const Quaternion<S>& q) {
    return q[0] + q[0];
}

// n(a) = a0^2 + b1*a1^2 + b2*a2^2 + b1*b2*a3^2; equals the scalar part of a*conj(a).
template <ScalarField S>
S norm(const Quaternion<S>& q) {
    const auto& p = q.params();
    return q[0] * q[0] + p.beta1 * q[1] * q[1] + p.beta2 * q[2] * q[2] +
           p.beta1 * p.beta2 * q[3] * q[3];
}

// a* = a0 + a1 e1 - a2 e2 - a3 e3 (division quaternions only).
template <ScalarField S>
Quaternion<S> star(const Quaternion<S>& q) {
    require_division_params(q);
    return {{q[0], q[1], -q[2], -q[3]}, q.params()};
}

}  // namespace halg
