#include <doctest.h>

#include <random>

#include "halg/literals.hpp"
#include "halg/reps.hpp"
#include "support.hpp"

using halg::ComplexOctonion;
using halg::Octonion;
using halg::OctParams;
using halg::ParseError;
using halg::Quaternion;
using halg::QuatParams;
using halg::Rational;
using halg::ZornElement;
using testsupport::random_coeff;
using testsupport::random_oct;
using testsupport::random_quat;

namespace {

using Oct = Octonion<Rational>;
using Quat = Quaternion<Rational>;

const OctParams<Rational> kO111{};
const QuatParams<Rational> kH23{Rational{2}, Rational{3}};

}  // namespace

TEST_CASE("scalar parsing") {
    CHECK(halg::parse_rational("123") == 123);
    CHECK(halg::parse_rational("-4/7") == Rational(-4, 7));
    CHECK(halg::parse_rational("2.5") == Rational(5, 2));
    CHECK(halg::parse_rational(" -0.125 ") == Rational(-1, 8));
    CHECK_THROWS_AS(halg::parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(halg::parse_rational("abc"), ParseError);
    CHECK(halg::rational_from_double(0.5) == Rational(1, 2));
    CHECK(halg::rational_from_double(-3.0) == -3);
}

TEST_CASE("term grammar") {
    CHECK(halg::parse_octonion("e1", kO111) == Oct::unit(1, kO111));
    CHECK(halg::parse_octonion("1 + 2e1 - e3", kO111) ==
          Oct({1, 2, 0, -1, 0, 0, 0, 0}, kO111));
    CHECK(halg::parse_octonion("3/4e2", kO111) ==
          Oct({Rational{0}, Rational{0}, Rational(3, 4), Rational{0}, Rational{0}, Rational{0},
               Rational{0}, Rational{0}},
              kO111));
    CHECK(halg::parse_octonion("2.5e1", kO111) == halg::parse_octonion("5/2 e1", kO111));
    CHECK(halg::parse_octonion("2*e1 + e1", kO111) == halg::parse_octonion("3e1", kO111));
    CHECK(halg::parse_octonion("0", kO111) == Oct::zero(kO111));
    CHECK(halg::parse_octonion("-e7", kO111) == -Oct::unit(7, kO111));

    // paper basis aliases
    CHECK(halg::parse_octonion("i", kO111) == Oct::unit(1, kO111));
    CHECK(halg::parse_octonion("j", kO111) == Oct::unit(2, kO111));
    CHECK(halg::parse_octonion("ij", kO111) == Oct::unit(3, kO111));
    CHECK(halg::parse_octonion("k", kO111) == Oct::unit(4, kO111));
    CHECK(halg::parse_octonion("ik", kO111) == Oct::unit(5, kO111));
    CHECK(halg::parse_octonion("jk", kO111) == Oct::unit(6, kO111));
    CHECK(halg::parse_octonion("ijk", kO111) == Oct::unit(7, kO111));
    CHECK(halg::parse_quaternion("i", {}) == Quat::unit(1, {}));

    // array form with mixed scalar spellings
    CHECK(halg::parse_quaternion("[1, \"1/2\", 0.25, -3]", kH23) ==
          Quat({Rational{1}, Rational(1, 2), Rational(1, 4), Rational{-3}}, kH23));
}

TEST_CASE("complex literals") {
    const auto a = halg::parse_complex_octonion("i*e2");
    CHECK(a.re().is_zero());
    CHECK(a.im() == Oct::unit(2, kO111));

    const auto b = halg::parse_complex_octonion("(1 + e2) + i*(2e4)");
    CHECK(b.re() == Oct({1, 0, 1, 0, 0, 0, 0, 0}, kO111));
    CHECK(b.im() == Oct({0, 0, 0, 0, 2, 0, 0, 0}, kO111));

    const auto c = halg::parse_complex_octonion("e2 + i*e4 - i*1");
    CHECK(c.re() == Oct::unit(2, kO111));
    CHECK(c.im() == Oct({-1, 0, 0, 0, 1, 0, 0, 0}, kO111));

    const auto d = halg::parse_complex_octonion(R"({"re":[0,1,0,0,0,0,0,0],"im":[0,0,0,0,1,0,0,0]})");
    CHECK(d.re() == Oct::unit(1, kO111));
    CHECK(d.im() == Oct::unit(4, kO111));

    const auto q = halg::parse_complex_quaternion("(1 - e3) + i*(e1)");
    CHECK(q.re() == Quat({1, 0, 0, -1}, {}));
    CHECK(q.im() == Quat::unit(1, {}));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(halg::parse_octonion("e9", kO111), ParseError);
    CHECK_THROWS_AS(halg::parse_octonion("e0", kO111), ParseError);
    CHECK_THROWS_AS(halg::parse_quaternion("e4", {}), ParseError);
    CHECK_THROWS_AS(halg::parse_quaternion("k", {}), ParseError);
    CHECK_THROWS_AS(halg::parse_octonion("i*e2", kO111), ParseError);  // no complex part here
    CHECK_THROWS_AS(halg::parse_octonion("1 +", kO111), ParseError);
    CHECK_THROWS_AS(halg::parse_octonion("", kO111), ParseError);
    CHECK_THROWS_AS(halg::parse_octonion("2//3", kO111), ParseError);
    CHECK_THROWS_AS(halg::parse_octonion("ji", kO111), ParseError);
    CHECK_THROWS_AS(halg::parse_octonion("[1,2]", kO111), ParseError);
    CHECK_THROWS_AS(halg::parse_zorn("[1,2,3]"), ParseError);
    CHECK_THROWS_AS(halg::parse_quat_params("1"), ParseError);
    CHECK_THROWS_AS(halg::parse_oct_params("1,2,x"), ParseError);
}

TEST_CASE("params parsing") {
    const auto hp = halg::parse_quat_params("2,3");
    CHECK(hp.beta1 == 2);
    CHECK(hp.beta2 == 3);
    const auto op = halg::parse_oct_params("1,-1,2");
    CHECK(op.alpha == 1);
    CHECK(op.beta == -1);
    CHECK(op.gamma == 2);
    // JSON object form
    CHECK(halg::parse_quat_params(R"({"beta1": 2, "beta2": "1/3"})") ==
          QuatParams<Rational>{Rational{2}, Rational(1, 3)});
    CHECK(halg::parse_oct_params(R"({"alpha": 1, "beta": -1, "gamma": 2})") ==
          OctParams<Rational>{Rational{1}, Rational{-1}, Rational{2}});
    CHECK_THROWS_AS(halg::parse_oct_params(R"({"alpha": 1})"), ParseError);
}

TEST_CASE("round-trips") {
    std::mt19937_64 gen(79);
    for (int k = 0; k < 500; ++k) {
        const Quat q = random_quat(gen, kH23);
        CHECK(halg::parse_quaternion(halg::print_json(q), kH23) == q);
        CHECK(halg::parse_quaternion(halg::print_pretty(q), kH23) == q);

        const Oct a = random_oct(gen, {Rational{1}, Rational{-1}, Rational{2}});
        CHECK(halg::parse_octonion(halg::print_json(a), a.params()) == a);
        CHECK(halg::parse_octonion(halg::print_pretty(a), a.params()) == a);

        const ComplexOctonion<Rational> c{random_oct(gen, kO111), random_oct(gen, kO111)};
        CHECK(halg::parse_complex_octonion(halg::print_json(c)) == c);
        CHECK(halg::parse_complex_octonion(halg::print_pretty(c)) == c);

        ZornElement<Rational> z;
        z.a = random_coeff(gen);
        z.b = random_coeff(gen);
        for (int i = 0; i < 3; ++i) {
            z.u[i] = random_coeff(gen);
            z.v[i] = random_coeff(gen);
        }
        CHECK(halg::parse_zorn(halg::print_json(z)) == z);
    }
}

TEST_CASE("rational coefficients round-trip") {
    const Quat q({Rational(1, 3), Rational(-7, 2), Rational{0}, Rational{12}}, {});
    CHECK(halg::parse_quaternion(halg::print_json(q), {}) == q);
    CHECK(halg::parse_quaternion(halg::print_pretty(q), {}) == q);
    CHECK(halg::print_pretty(q) == "1/3 - 7/2e1 + 12e3");
}

TEST_CASE("complex quaternion round-trip") {
    std::mt19937_64 gen(83);
    for (int k = 0; k < 50; ++k) {
        const halg::ComplexQuaternion<Rational> q{random_quat(gen, {}), random_quat(gen, {})};
        CHECK(halg::parse_complex_quaternion(halg::print_json(q)) == q);
        CHECK(halg::parse_complex_quaternion(halg::print_pretty(q)) == q);
    }
}

TEST_CASE("matrix output") {
    const auto sigma = halg::const_matrix<Rational>(halg::ConstMat::Sigma);
    CHECK(halg::matrix_csv(sigma) == "1,0,0,0\n0,1,0,0\n0,0,-1,0\n0,0,0,-1\n");
    CHECK(halg::matrix_json(sigma) == "[[1,0,0,0],[0,1,0,0],[0,0,-1,0],[0,0,0,-1]]");
}
