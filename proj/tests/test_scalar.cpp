#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hopfstar/scalar.hpp"

using namespace hopfstar;

namespace {

// independent reduction oracle: naive schoolbook polynomial remainder
RatPoly naive_mod(RatPoly a, const RatPoly& m) {
    while (a.size() >= m.size()) {
        Rational c = a.back() / m.back();
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) a[shift + i] -= c * m[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

Scalar random_scalar(std::mt19937& rng, unsigned order) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> coeffs(cyclotomic_degree(order));
    for (auto& c : coeffs) {
        c = Rational(num(rng), den(rng));
        c.canonicalize();
    }
    return Scalar::from_coeffs(order, coeffs);
}

}  // namespace

TEST_CASE("cyclotomic polynomials by exact division") {
    CHECK(cyclotomic_polynomial(1) == RatPoly{-1, 1});
    CHECK(cyclotomic_polynomial(2) == RatPoly{1, 1});
    CHECK(cyclotomic_polynomial(3) == RatPoly{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == RatPoly{1, 0, 1});
    CHECK(cyclotomic_polynomial(8) == RatPoly{1, 0, 0, 0, 1});
    CHECK(cyclotomic_polynomial(12) == RatPoly{1, 0, -1, 0, 1});
    CHECK(cyclotomic_degree(8) == euler_phi(8));
}

TEST_CASE("conjugation fixes rationals") {
    Scalar s(Rational(3, 2));
    CHECK(s.conj() == s);
    CHECK(s.order() == 1);
}

TEST_CASE("conjugation on Q(i) negates the imaginary unit") {
    Scalar i = Scalar::root_of_unity(4);
    CHECK(i.conj() == -i);
    CHECK((i * i) == Scalar(-1));
}

TEST_CASE("conjugation in Q(zeta_8) matches the reduction oracle") {
    // conj(x + x^3) reduces x^7 + x^21 mod Phi_8 = x^4 + 1
    Scalar s = Scalar::from_coeffs(8, {0, 1, 0, 1});
    RatPoly big(22, Rational(0));
    big[7] = 1;
    big[21] = 1;
    RatPoly expect = naive_mod(big, cyclotomic_polynomial(8));
    expect.resize(4, Rational(0));
    CHECK(s.conj() == Scalar::from_coeffs(8, expect));
    CHECK(s.conj().conj() == s);
}

TEST_CASE("field axioms hold exactly for random scalars") {
    std::mt19937 rng(12345);
    for (unsigned order : {1u, 2u, 3u, 4u, 8u}) {
        for (int trial = 0; trial < 25; ++trial) {
            Scalar a = random_scalar(rng, order), b = random_scalar(rng, order), c = random_scalar(rng, order);
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a.conj()).conj() == a);
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK((a + b).conj() == a.conj() + b.conj());
            if (!a.is_zero()) CHECK(a * a.inv() == Scalar(1));
        }
    }
}

TEST_CASE("mixed-order arithmetic lifts to the lcm field") {
    Scalar i = Scalar::root_of_unity(4);
    Scalar w = Scalar::root_of_unity(3);
    Scalar p = i * w;
    CHECK(p.order() == 12);
    CHECK(p == Scalar::root_of_unity_power(12, 3 + 4));  // zeta_12^3 = i, zeta_12^4 = w
    CHECK(Scalar(2) + i == Scalar::from_coeffs(4, {2, 1}));
}

TEST_CASE("sign of zero and rationals") {
    CHECK(scalar_sign(Scalar(0)) == Sign::zero);
    CHECK(scalar_sign(Scalar(Rational(-5, 3))) == Sign::negative);
    CHECK(scalar_sign(Scalar(7)) == Sign::positive);
}

TEST_CASE("sign of sqrt(2) representative in Q(zeta_8)") {
    // zeta_8 + zeta_8^7 = 2 cos(pi/4) = sqrt(2); reduced form x - x^3
    Scalar s = Scalar::from_coeffs(8, {0, 1, 0, -1});
    CHECK(s.conj() == s);
    CHECK(scalar_sign(s) == Sign::positive);
    CHECK(scalar_sign(-s) == Sign::negative);
    CHECK(scalar_sign(s * s - Scalar(2)) == Sign::zero);
}

TEST_CASE("sign requires conjugation-fixed input") {
    Scalar i = Scalar::root_of_unity(4);
    CHECK_THROWS_AS(scalar_sign(i), NotReal);
}

TEST_CASE("sign refinement cap raises PrecisionExhausted") {
    Scalar s = Scalar::from_coeffs(8, {0, 1, 0, -1});
    CHECK_THROWS_AS(scalar_sign(s, 0), PrecisionExhausted);
}

TEST_CASE("exact signs agree with floating-point evaluation away from zero") {
    std::mt19937 rng(777);
    int tested = 0;
    for (unsigned order : {1u, 2u, 3u, 4u, 8u, 5u}) {
        while (true) {
            Scalar a = random_scalar(rng, order);
            Scalar real_part = a + a.conj();  // conj-fixed by construction
            double approx = real_part.to_double_real();
            if (std::abs(approx) <= 1e-6) continue;
            Sign s = scalar_sign(real_part);
            CHECK(s == (approx > 0 ? Sign::positive : Sign::negative));
            if (++tested % 20 == 0) break;
        }
    }
    CHECK(tested == 120);
}

TEST_CASE("scalar text form round-trips") {
    Scalar s = Scalar::from_coeffs(8, {Rational(1, 2), Rational(-3, 4), 0, 5});
    CHECK(s.to_string() == "cyclo(8)[1/2, -3/4, 0/1, 5/1]");
    CHECK(Scalar::parse(s.to_string()) == s);
    CHECK(Scalar::parse(Scalar::parse(s.to_string()).to_string()) == s);
    CHECK(Scalar::parse("3/2") == Scalar(Rational(3, 2)));
    CHECK(Scalar::parse("cyclo(1)[-7/3]") == Scalar(Rational(-7, 3)));
}

TEST_CASE("scalar parse rejects malformed text") {
    CHECK_THROWS_AS(Scalar::parse("cyclo(4)[1/1]"), DimensionMismatch);
    CHECK_THROWS_AS(Scalar::parse("cyclo(0)[1/1]"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("cyclo(4)[1/0, 0/1]"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("cyclo(4"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("zeta"), ParseError);
}

TEST_CASE("division by zero raises") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), NotInvertible);
}
