#include <doctest.h>

#include <random>

#include "halg/complex_elems.hpp"
#include "halg/zorn.hpp"
#include "support.hpp"

using halg::ComplexOctonion;
using halg::ComplexQuaternion;
using halg::Octonion;
using halg::OctParams;
using halg::Rational;
using halg::ZornElement;
using testsupport::random_coeff;
using testsupport::random_oct;

namespace {

using Oct = Octonion<Rational>;
using COct = ComplexOctonion<Rational>;
using Zorn = ZornElement<Rational>;

Oct unit(std::size_t k) { return Oct::unit(k, {}); }

COct coct(const Oct& re, const Oct& im) { return {re, im}; }

}  // namespace

TEST_CASE("complex conjugation") {
    CHECK(coct_conj(COct::from_real(Oct::one({}))) == COct::from_real(Oct::one({})));
    CHECK(coct_conj(coct(unit(2), unit(4))) == coct(-unit(2), -unit(4)));
    std::mt19937_64 gen(43);
    for (int k = 0; k < 30; ++k) {
        const COct a = coct(random_oct(gen, {}), random_oct(gen, {}));
        CHECK(coct_conj(coct_conj(a)) == a);
    }
}

TEST_CASE("construction requires division components") {
    const OctParams<Rational> split{Rational{1}, Rational{1}, Rational{-1}};
    CHECK_THROWS_AS(COct(Oct::one(split), Oct::zero(split)), halg::DomainMismatch);
}

TEST_CASE("paper product") {
    std::mt19937_64 gen(47);
    // A = 1 leaves X unchanged
    for (int k = 0; k < 20; ++k) {
        const COct x = coct(random_oct(gen, {}), random_oct(gen, {}));
        CHECK(coct_mul_paper(COct::from_real(Oct::one({})), x) == x);
    }
    // (i*1)(i*1) = -1
    const COct i1 = coct(Oct::zero({}), Oct::one({}));
    CHECK(coct_mul_paper(i1, i1) == COct::from_real(-Oct::one({})));
    // (i*e2)(e2) = -i
    const COct ie2 = coct(Oct::zero({}), unit(2));
    CHECK(coct_mul_paper(ie2, COct::from_real(unit(2))) == coct(Oct::zero({}), -Oct::one({})));
}

TEST_CASE("central product") {
    const COct i1 = coct(Oct::zero({}), Oct::one({}));
    CHECK(coct_mul_central(i1, i1) == COct::from_real(-Oct::one({})));
    const COct ie2 = coct(Oct::zero({}), unit(2));
    CHECK(coct_mul_central(ie2, COct::from_real(unit(2))) == coct(Oct::zero({}), -Oct::one({})));
    // (e1 + i*1)(e1) = -1 + i*e1
    const COct a = coct(unit(1), Oct::one({}));
    CHECK(coct_mul_central(a, COct::from_real(unit(1))) == coct(-Oct::one({}), unit(1)));
    // central i commutes: (i*1)X = X(i*1)
    std::mt19937_64 gen(53);
    for (int k = 0; k < 20; ++k) {
        const COct x = coct(random_oct(gen, {}), random_oct(gen, {}));
        CHECK(coct_mul_central(i1, x) == coct_mul_central(x, i1));
    }
}

TEST_CASE("the two products differ in general") {
    // x = e1, y = e2, v = e4, w = e3: (y w*)* != y w
    const COct a = coct(unit(1), unit(2));
    const COct b = coct(unit(4), unit(3));
    CHECK_FALSE(coct_mul_paper(a, b) == coct_mul_central(a, b));
}

TEST_CASE("zorn identity and sample product") {
    const Zorn id = Zorn::identity();
    std::mt19937_64 gen(59);
    auto random_zorn = [&gen] {
        Zorn z;
        z.a = random_coeff(gen);
        z.b = random_coeff(gen);
        for (int i = 0; i < 3; ++i) {
            z.u[i] = random_coeff(gen);
            z.v[i] = random_coeff(gen);
        }
        return z;
    };
    for (int k = 0; k < 30; ++k) {
        const Zorn z = random_zorn();
        CHECK(zorn_mul(id, z) == z);
        CHECK(zorn_mul(z, id) == z);
    }

    // (0, u=(1,0,0); 0, 0) * (0, 0; w=(1,0,0), 0) = (1, 0; 0, 0)
    Zorn p;
    p.u[0] = Rational{1};
    Zorn q;
    q.v[0] = Rational{1};
    Zorn expected;
    expected.a = Rational{1};
    CHECK(zorn_mul(p, q) == expected);

    // alternativity and flexibility hold; multiplication is bilinear over
    // componentwise addition and scaling
    for (int k = 0; k < 30; ++k) {
        const Zorn x = random_zorn();
        const Zorn y = random_zorn();
        CHECK(zorn_mul(zorn_mul(x, x), y) == zorn_mul(x, zorn_mul(x, y)));
        CHECK(zorn_mul(y, zorn_mul(x, x)) == zorn_mul(zorn_mul(y, x), x));
        CHECK(zorn_mul(x, zorn_mul(y, x)) == zorn_mul(zorn_mul(x, y), x));
        const Rational s = random_coeff(gen);
        CHECK(zorn_mul(s * x, y) == s * zorn_mul(x, y));
        CHECK(zorn_mul(x + y, x) == zorn_mul(x, x) + zorn_mul(y, x));
    }
}

TEST_CASE("zorn multiplication is not associative") {
    bool found = false;
    for (std::size_t i = 0; i < 8 && !found; ++i)
        for (std::size_t j = 0; j < 8 && !found; ++j)
            for (std::size_t k = 0; k < 8 && !found; ++k) {
                const Zorn x = Zorn::basis(i);
                const Zorn y = Zorn::basis(j);
                const Zorn z = Zorn::basis(k);
                if (!(zorn_mul(zorn_mul(x, y), z) == zorn_mul(x, zorn_mul(y, z)))) found = true;
            }
    CHECK(found);
}
