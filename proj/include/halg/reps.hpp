#pragma once

#include <array>
#include <string>
#include <string_view>

#include "halg/complex_elems.hpp"
#include "halg/errors.hpp"
#include "halg/matrix.hpp"
#include "halg/octonion.hpp"
#include "halg/quaternion.hpp"

namespace halg {

// ---------------------------------------------------------------------------
// Vector representations (coefficient columns).

template <ScalarField S>
VecRep<S> vec(const Quaternion<S>& q) {
    return VecRep<S>({q[0], q[1], q[2], q[3]});
}

template <ScalarField S>
VecRep<S> vec(const Octonion<S>& a) {
    return VecRep<S>({a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7]});
}

// Real part stacked over imaginary part; length 16.
template <ScalarField S>
VecRep<S> vec(const ComplexOctonion<S>& a) {
    std::vector<S> out;
    out.reserve(16);
    for (std::size_t i = 0; i < 8; ++i) out.push_back(a.re()[i]);
    for (std::size_t i = 0; i < 8; ++i) out.push_back(a.im()[i]);
    return VecRep<S>(std::move(out));
}

template <ScalarField S>
Octonion<S> octonion_from_vec(const VecRep<S>& v) {
    return Octonion<S>({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]}, {});
}

template <ScalarField S>
ComplexOctonion<S> coct_from_vec(const VecRep<S>& v) {
    return {Octonion<S>({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]}, {}),
            Octonion<S>({v[8], v[9], v[10], v[11], v[12], v[13], v[14], v[15]}, {})};
}

// ---------------------------------------------------------------------------
// 4x4 representations of division quaternions.

// Left representation: column k holds the coefficients of q*e_k.
template <ScalarField S>
RepMatrix<S> quat_left_rep(const Quaternion<S>& q) {
    require_division_params(q);
    const S& a0 = q[0];
    const S& a1 = q[1];
    const S& a2 = q[2];
    const S& a3 = q[3];
    return RepMatrix<S>(4, std::vector<S>{
        a0, -a1, -a2, -a3,
        a1,  a0, -a3,  a2,
        a2,  a3,  a0, -a1,
        a3, -a2,  a1,  a0});
}

// Right representation: column k holds the coefficients of e_k*q.
template <ScalarField S>
RepMatrix<S> quat_right_rep(const Quaternion<S>& q) {
    require_division_params(q);
    const S& a0 = q[0];
    const S& a1 = q[1];
    const S& a2 = q[2];
    const S& a3 = q[3];
    return RepMatrix<S>(4, std::vector<S>{
        a0, -a1, -a2, -a3,
        a1,  a0,  a3, -a2,
        a2, -a3,  a0,  a1,
        a3,  a2, -a1,  a0});
}

// ---------------------------------------------------------------------------
// Constant matrices.

enum class ConstMat { M1, L1, R1, Eps, Tau, Sigma, Theta, T, S16 };

template <ScalarField S>
RepMatrix<S> const_matrix(ConstMat which) {
    switch (which) {
        case ConstMat::M1:
            return RepMatrix<S>::diagonal({S{1}, S{-1}, S{-1}, S{-1}});
        case ConstMat::L1:
            return RepMatrix<S>(4, {0, -1, 0, 0,
                                    1,  0, 0, 0,
                                    0,  0, 0, -1,
                                    0,  0, 1, 0});
        case ConstMat::R1:
            return RepMatrix<S>(4, {0, -1, 0, 0,
                                    1,  0, 0, 0,
                                    0,  0, 0, 1,
                                    0,  0, -1, 0});
        case ConstMat::Eps:
            return RepMatrix<S>::diagonal(
                {S{1}, S{1}, S{1}, S{1}, S{-1}, S{-1}, S{-1}, S{-1}});
        case ConstMat::Tau:
            return RepMatrix<S>::diagonal(
                {S{1}, S{1}, S{-1}, S{-1}, S{1}, S{1}, S{-1}, S{-1}});
        case ConstMat::Sigma:
            return RepMatrix<S>::diagonal({S{1}, S{1}, S{-1}, S{-1}});
        case ConstMat::Theta:
            return RepMatrix<S>(8, {0, -1, 0, 0, 0, 0, 0, 0,
                                    1,  0, 0, 0, 0, 0, 0, 0,
                                    0,  0, 0, -1, 0, 0, 0, 0,
                                    0,  0, 1, 0, 0, 0, 0, 0,
                                    0,  0, 0, 0, 0, -1, 0, 0,
                                    0,  0, 0, 0, 1, 0, 0, 0,
                                    0,  0, 0, 0, 0, 0, 0, 1,
                                    0,  0, 0, 0, 0, 0, -1, 0});
        case ConstMat::T:
            return RepMatrix<S>::from_blocks(const_matrix<S>(ConstMat::M1),
                                             RepMatrix<S>(4),
                                             RepMatrix<S>(4),
                                             RepMatrix<S>::identity(4));
        case ConstMat::S16:
            return RepMatrix<S>::from_blocks(const_matrix<S>(ConstMat::T),
                                             RepMatrix<S>(8),
                                             RepMatrix<S>(8),
                                             const_matrix<S>(ConstMat::T));
    }
    throw std::invalid_argument("const_matrix: unknown name");
}

// CLI-facing names.
bool parse_const_name(std::string_view name, ConstMat& out);
std::string const_name(ConstMat which);

// ---------------------------------------------------------------------------
// 8x8 representations of division octonions, a = q1 + q2*e4.

// (quat_left(q1), -quat_right(q2)*M1; quat_left(q2)*M1, quat_right(q1)).
template <ScalarField S>
RepMatrix<S> oct_left_rep(const Octonion<S>& a) {
    const auto [q1, q2] = oct_split(a);
    const auto m1 = const_matrix<S>(ConstMat::M1);
    return RepMatrix<S>::from_blocks(quat_left_rep(q1), -(quat_right_rep(q2) * m1),
                                     quat_left_rep(q2) * m1, quat_right_rep(q1));
}

// (quat_right(q1), -quat_left(conj q2); quat_left(q2), quat_right(conj q1)).
template <ScalarField S>
RepMatrix<S> oct_right_rep(const Octonion<S>& a) {
    const auto [q1, q2] = oct_split(a);
    return RepMatrix<S>::from_blocks(quat_right_rep(q1), -quat_left_rep(conj(q2)),
                                     quat_left_rep(q2), quat_right_rep(conj(q1)));
}

// ---------------------------------------------------------------------------
// 8x8 representations of complex quaternions Q = a + ib.

template <ScalarField S>
RepMatrix<S> cquat_left_rep(const ComplexQuaternion<S>& q) {
    const auto& a = q.re();
    const auto& b = q.im();
    return RepMatrix<S>::from_blocks(quat_left_rep(a), -quat_left_rep(star(b)),
                                     quat_left_rep(b), quat_left_rep(star(a)));
}

template <ScalarField S>
RepMatrix<S> cquat_right_rep(const ComplexQuaternion<S>& q) {
    const auto& a = q.re();
    const auto& b = q.im();
    return RepMatrix<S>::from_blocks(quat_right_rep(a), -quat_right_rep(b),
                                     quat_right_rep(star(b)), quat_right_rep(star(a)));
}

// ---------------------------------------------------------------------------
// 16x16 representations of complex octonions A = x + iy.

template <ScalarField S>
RepMatrix<S> coct_left_rep(const ComplexOctonion<S>& a) {
    const auto& x = a.re();
    const auto& y = a.im();
    return RepMatrix<S>::from_blocks(oct_left_rep(x), -oct_left_rep(y),
                                     oct_left_rep(star(y)), oct_left_rep(star(x)));
}

template <ScalarField S>
RepMatrix<S> coct_right_rep(const ComplexOctonion<S>& a) {
    const auto& x = a.re();
    const auto& y = a.im();
    return RepMatrix<S>::from_blocks(oct_right_rep(x), -oct_right_rep(y),
                                     oct_right_rep(star(y)), oct_right_rep(star(x)));
}

// ---------------------------------------------------------------------------
// Octonion-entried columns of length 8.

template <ScalarField S>
struct OctColumn {
    std::array<Octonion<S>, 8> entries;

    friend bool operator==(const OctColumn&, const OctColumn&) = default;
};

// N = (1, e1, ..., e7)^t.
template <ScalarField S>
OctColumn<S> octcolumn_n() {
    OctColumn<S> c;
    for (std::size_t k = 0; k < 8; ++k) c.entries[k] = Octonion<S>::unit(k, {});
    return c;
}

// M = (1, -e1, ..., -e7)^t.
template <ScalarField S>
OctColumn<S> octcolumn_m() {
    OctColumn<S> c;
    c.entries[0] = Octonion<S>::one({});
    for (std::size_t k = 1; k < 8; ++k) c.entries[k] = -Octonion<S>::unit(k, {});
    return c;
}

// Row-wise scalar-by-octonion linear combination.
template <ScalarField S>
OctColumn<S> mat_apply_octcolumn(const RepMatrix<S>& m, const OctColumn<S>& c) {
    if (m.dim() != 8) throw std::invalid_argument("mat_apply_octcolumn: matrix must be 8x8");
    OctColumn<S> out;
    for (std::size_t i = 0; i < 8; ++i) {
        Octonion<S> acc = Octonion<S>::zero({});
        for (std::size_t j = 0; j < 8; ++j) acc = acc + m.at(i, j) * c.entries[j];
        out.entries[i] = acc;
    }
    return out;
}

template <ScalarField S>
OctColumn<S> octcolumn_scale_right(const OctColumn<S>& c, const Octonion<S>& a) {
    OctColumn<S> out;
    for (std::size_t i = 0; i < 8; ++i) out.entries[i] = c.entries[i] * a;
    return out;
}

template <ScalarField S>
OctColumn<S> octcolumn_scale_left(const Octonion<S>& a, const OctColumn<S>& c) {
    OctColumn<S> out;
    for (std::size_t i = 0; i < 8; ++i) out.entries[i] = a * c.entries[i];
    return out;
}

// N^t M = sum_k N_k * M_k.
template <ScalarField S>
Octonion<S> octcolumn_contract(const OctColumn<S>& n, const OctColumn<S>& m) {
    Octonion<S> acc = Octonion<S>::zero({});
    for (std::size_t i = 0; i < 8; ++i) acc = acc + n.entries[i] * m.entries[i];
    return acc;
}

}  // namespace halg
