#include <doctest.h>

#include <random>

#include "halg/quaternion.hpp"
#include "support.hpp"

using halg::Quaternion;
using halg::QuatParams;
using halg::Rational;
using testsupport::random_quat;

namespace {

using Quat = Quaternion<Rational>;

const QuatParams<Rational> kH11{Rational{1}, Rational{1}};
const QuatParams<Rational> kH1m1{Rational{1}, Rational{-1}};
const QuatParams<Rational> kH23{Rational{2}, Rational{3}};

}  // namespace

TEST_CASE("basis products match the transcribed table") {
    for (const auto& params : {kH11, kH1m1, kH23}) {
        const std::array<Rational, 3> ps{params.beta1, params.beta2, Rational{0}};
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                const Quat product = Quat::unit(i, params) * Quat::unit(j, params);
                const auto expected =
                    testsupport::expected_coeffs<4>(testsupport::kQuatTable[i][j], ps);
                CAPTURE(i);
                CAPTURE(j);
                CHECK(product.coeffs() == expected);
            }
        }
    }
}

TEST_CASE("unit element and sample products") {
    std::mt19937_64 gen(11);
    for (int k = 0; k < 20; ++k) {
        const Quat q = random_quat(gen, kH23);
        CHECK(Quat::one(kH23) * q == q);
        CHECK(q * Quat::one(kH23) == q);
    }
    // e1*e3 = -b1*e2 in H(2,3)
    const Quat p = Quat::unit(1, kH23) * Quat::unit(3, kH23);
    CHECK(p == Quat({Rational{0}, Rational{0}, Rational{-2}, Rational{0}}, kH23));
}

TEST_CASE("conjugate, trace, norm") {
    CHECK(trace(Quat::unit(1, kH23)) == 0);
    CHECK(conj(Quat::unit(2, kH11)) == -Quat::unit(2, kH11));

    const Quat ones({Rational{1}, Rational{1}, Rational{1}, Rational{1}}, kH23);
    CHECK(norm(ones) == 12);  // 1 + 2 + 3 + 6

    // norm is the scalar part of q*conj(q); the other parts vanish
    const Quat prod = ones * conj(ones);
    CHECK(prod[0] == norm(ones));
    CHECK(prod[1] == 0);
    CHECK(prod[2] == 0);
    CHECK(prod[3] == 0);

    // split algebra H(1,-1) has nonzero elements of zero norm
    const Quat zero_norm =
        Quat::one(kH1m1) + Quat::unit(3, kH1m1);
    CHECK(norm(zero_norm) == 0);
    CHECK_FALSE(zero_norm.is_zero());
}

TEST_CASE("quadratic identity and norm multiplicativity") {
    std::mt19937_64 gen(17);
    for (const auto& params : {kH11, kH1m1, kH23}) {
        for (int k = 0; k < 100; ++k) {
            const Quat a = random_quat(gen, params);
            const Quat b = random_quat(gen, params);
            // a^2 - t(a)a + n(a) = 0
            const Quat lhs = a * a - trace(a) * a + Quat::scalar(norm(a), params);
            CHECK(lhs.is_zero());
            CHECK(norm(a * b) == norm(a) * norm(b));
        }
    }
}

TEST_CASE("star flips e2 and e3 only") {
    const Quat q({Rational{1}, Rational{2}, Rational{3}, Rational{4}}, kH11);
    CHECK(star(q) == Quat({Rational{1}, Rational{2}, Rational{-3}, Rational{-4}}, kH11));
    CHECK(star(star(q)) == q);
    CHECK_THROWS_AS(star(Quat::one(kH23)), halg::DomainMismatch);
}

TEST_CASE("mixed-params arithmetic is rejected") {
    CHECK_THROWS_AS(Quat::one(kH11) * Quat::one(kH23), halg::ParamsMismatch);
    CHECK_THROWS_AS(Quat::one(kH11) + Quat::one(kH1m1), halg::ParamsMismatch);
    CHECK_FALSE(Quat::one(kH11) == Quat::one(kH23));
}

TEST_CASE("double realization") {
    using QuatD = Quaternion<double>;
    const QuatParams<double> hd{1.0, 1.0};
    const QuatD a({0.5, 1.0, 0.0, -2.0}, hd);
    const QuatD b({1.0, 0.25, -1.0, 0.0}, hd);
    const QuatD ab = a * b;
    CHECK(halg::approx_equal(norm(ab), norm(a) * norm(b), 1e-12));
    // degenerate parameters stay usable, arithmetic is still defined
    const QuatParams<double> degenerate{0.0, 1.0};
    const QuatD d = QuatD::unit(1, degenerate) * QuatD::unit(1, degenerate);
    CHECK(d.is_zero());
}
