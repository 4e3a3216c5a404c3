#pragma once

#include <array>
#include <cstddef>

#include "halg/scalar.hpp"

namespace halg {

// Vector-matrix element (a, u; v, b) with a, b scalars and u, v in R^3.
template <ScalarField S>
struct ZornElement {
    S a{0};
    S b{0};
    std::array<S, 3> u{};
    std::array<S, 3> v{};

    static ZornElement identity() {
        ZornElement e;
        e.a = S{1};
        e.b = S{1};
        return e;
    }

    // The 8 canonical basis elements: scalar corners first, then the u and v units.
    static ZornElement basis(std::size_t k) {
        ZornElement e;
        if (k == 0) e.a = S{1};
        else if (k == 1) e.b = S{1};
        else if (k < 5) e.u[k - 2] = S{1};
        else e.v[k - 5] = S{1};
        return e;
    }

    friend bool operator==(const ZornElement&, const ZornElement&) = default;
};

template <ScalarField S>
std::array<S, 3> cross(const std::array<S, 3>& x, const std::array<S, 3>& y) {
    return {x[1] * y[2] - x[2] * y[1],
            x[2] * y[0] - x[0] * y[2],
            x[0] * y[1] - x[1] * y[0]};
}

template <ScalarField S>
S dot(const std::array<S, 3>& x, const std::array<S, 3>& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

template <ScalarField S>
ZornElement<S> operator+(const ZornElement<S>& p, const ZornElement<S>& q) {
    ZornElement<S> r;
    r.a = p.a + q.a;
    r.b = p.b + q.b;
    for (std::size_t i = 0; i < 3; ++i) {
        r.u[i] = p.u[i] + q.u[i];
        r.v[i] = p.v[i] + q.v[i];
    }
    return r;
}

template <ScalarField S>
ZornElement<S> operator-(const ZornElement<S>& p, const ZornElement<S>& q) {
    ZornElement<S> r;
    r.a = p.a - q.a;
    r.b = p.b - q.b;
    for (std::size_t i = 0; i < 3; ++i) {
        r.u[i] = p.u[i] - q.u[i];
        r.v[i] = p.v[i] - q.v[i];
    }
    return r;
}

template <ScalarField S>
ZornElement<S> operator*(const S& s, const ZornElement<S>& p) {
    ZornElement<S> r;
    r.a = s * p.a;
    r.b = s * p.b;
    for (std::size_t i = 0; i < 3; ++i) {
        r.u[i] = s * p.u[i];
        r.v[i] = s * p.v[i];
    }
    return r;
}

// (a,u;v,b)(c,z;w,d) = (ac + <u,w>, az + du - v x w; cv + bw + u x z, bd + <v,z>).
template <ScalarField S>
ZornElement<S> zorn_mul(const ZornElement<S>& p, const ZornElement<S>& q) {
    const S& a = p.a;
    const S& b = p.b;
    const auto& u = p.u;
    const auto& v = p.v;
    const S& c = q.a;
    const S& d = q.b;
    const auto& z = q.u;
    const auto& w = q.v;

    ZornElement<S> r;
    r.a = a * c + dot(u, w);
    r.b = b * d + dot(v, z);
    const auto vxw = cross(v, w);
    const auto uxz = cross(u, z);
    for (std::size_t i = 0; i < 3; ++i) {
        r.u[i] = a * z[i] + d * u[i] - vxw[i];
        r.v[i] = c * v[i] + b * w[i] + uxz[i];
    }
    return r;
}

}  // namespace halg
