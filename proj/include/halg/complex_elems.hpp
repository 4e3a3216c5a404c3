#pragma once

#include <utility>

#include "halg/errors.hpp"
#include "halg/octonion.hpp"
#include "halg/quaternion.hpp"

namespace halg {

// Q = a + i b with a, b in H(1,1). The i here is the formal complex unit
// pairing the two halves; it is not a basis unit of either half.
template <ScalarField S>
class ComplexQuaternion {
public:
    using Scalar = S;

    ComplexQuaternion()
        : re_(Quaternion<S>::zero({})), im_(Quaternion<S>::zero({})) {}
    ComplexQuaternion(Quaternion<S> re, Quaternion<S> im)
        : re_(std::move(re)), im_(std::move(im)) {
        require_division_params(re_);
        require_division_params(im_);
    }

    const Quaternion<S>& re() const { return re_; }
    const Quaternion<S>& im() const { return im_; }

    friend bool operator==(const ComplexQuaternion&, const ComplexQuaternion&) = default;

private:
    Quaternion<S> re_;
    Quaternion<S> im_;
};

// A = x + i y with x, y in O(1,1,1).
template <ScalarField S>
class ComplexOctonion {
public:
    using Scalar = S;

    ComplexOctonion()
        : re_(Octonion<S>::zero({})), im_(Octonion<S>::zero({})) {}
    ComplexOctonion(Octonion<S> re, Octonion<S> im)
        : re_(std::move(re)), im_(std::move(im)) {
        require_division_params(re_);
        require_division_params(im_);
    }

    static ComplexOctonion from_real(Octonion<S> x) {
        return {std::move(x), Octonion<S>::zero({})};
    }

    const Octonion<S>& re() const { return re_; }
    const Octonion<S>& im() const { return im_; }

    friend bool operator==(const ComplexOctonion&, const ComplexOctonion&) = default;

private:
    Octonion<S> re_;
    Octonion<S> im_;
};

template <ScalarField S>
ComplexOctonion<S> coct_conj(const ComplexOctonion<S>& a) {
    return {conj(a.re()), conj(a.im())};
}

template <ScalarField S>
ComplexOctonion<S> operator+(const ComplexOctonion<S>& a, const ComplexOctonion<S>& b) {
    return {a.re() + b.re(), a.im() + b.im()};
}

template <ScalarField S>
ComplexOctonion<S> operator-(const ComplexOctonion<S>& a, const ComplexOctonion<S>& b) {
    return {a.re() - b.re(), a.im() - b.im()};
}

// (x + iy)(v + iw) = xv - (yw*)* + i(x*w + (y*v*)*), the expansion obtained
// by treating i as the unit e1 acting through the octonion product.
template <ScalarField S>
ComplexOctonion<S> coct_mul_paper(const ComplexOctonion<S>& a, const ComplexOctonion<S>& b) {
    const Octonion<S>& x = a.re();
    const Octonion<S>& y = a.im();
    const Octonion<S>& v = b.re();
    const Octonion<S>& w = b.im();
    return {x * v - star(y * star(w)), star(x) * w + star(star(y) * star(v))};
}

// (x + iy)(v + iw) = (xv - yw) + i(xw + yv), i central with i^2 = -1.
template <ScalarField S>
ComplexOctonion<S> coct_mul_central(const ComplexOctonion<S>& a, const ComplexOctonion<S>& b) {
    const Octonion<S>& x = a.re();
    const Octonion<S>& y = a.im();
    const Octonion<S>& v = b.re();
    const Octonion<S>& w = b.im();
    return {x * v - y * w, x * w + y * v};
}

// x+ + i y+ (the element the 2.8ii and 2.9 checkers conjugate to).
template <ScalarField S>
ComplexOctonion<S> coct_plus_sup(const ComplexOctonion<S>& a) {
    return {plus_sup(a.re()), plus_sup(a.im())};
}

}  // namespace halg
