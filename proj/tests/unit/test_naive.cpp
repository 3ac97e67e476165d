#include <cmath>

#include <doctest.h>

#include "oracle.hpp"
#include "qzeta/errors.hpp"
#include "qzeta/naive.hpp"

using namespace qzeta;

namespace {

const QContext half(Rational(1, 2), 40);

Rational zeta_term(int s, int n, const Rational& q) {
    return q.pow(static_cast<long long>(n) * (s - 1)) / oracle::qint(n, q).pow(s);
}

}  // namespace

TEST_CASE("zeta_q_naive against frozen values") {
    CHECK((zeta_q_naive(2, half).value - oracle::frozen(oracle::half::zeta2)).abs() < Rational::pow10(-40));
    CHECK((zeta_q_naive(3, half).value - oracle::frozen(oracle::half::zeta3)).abs() < Rational::pow10(-40));
    const QContext third(Rational(1, 3), 40), tt(Rational(2, 3), 40);
    CHECK((zeta_q_naive(3, third).value - oracle::frozen(oracle::third::zeta3)).abs() < Rational::pow10(-40));
    CHECK((zeta_q_naive(2, tt).value - oracle::frozen(oracle::two_thirds::zeta2)).abs() < Rational::pow10(-40));
}

TEST_CASE("zeta_q_naive first term and brute partial sums") {
    auto src = zeta_q_naive_terms(2, half);
    CHECK(src.next() == Rational(1, 2));
    const Rational brute = oracle::partial_sum(200, [](int n) { return zeta_term(3, n, Rational(1, 2)); });
    const QContext c30 = half.with_digits(30);
    CHECK((zeta_q_naive(3, c30).value - brute).abs() < Rational::pow10(-30));
}

TEST_CASE("zeta_q_naive partial sums increase") {
    auto src = zeta_q_naive_terms(3, half);
    Rational prev = 0, sum = 0;
    for (int n = 1; n <= 60; ++n) {
        sum += src.next();
        CHECK(sum > prev);
        prev = sum;
    }
}

TEST_CASE("zeta_q_naive tail bound covers the remainder") {
    for (int s : {2, 3, 4}) {
        const SumResult coarse = zeta_q_naive(s, half.with_digits(15));
        const SumResult fine = zeta_q_naive(s, half.with_digits(45));
        CHECK(coarse.tail_bound.sign() >= 0);
        CHECK(coarse.tail_bound < Rational::pow10(-15));
        CHECK((fine.value - coarse.value).abs() <= coarse.tail_bound);
    }
}

TEST_CASE("zeta_q_naive preconditions") {
    CHECK_THROWS_AS(zeta_q_naive(1, half), PreconditionError);
    CHECK_THROWS_AS(zeta_q_naive(2, QContext(Rational(3, 2))), PreconditionError);
    CHECK_THROWS_AS(zeta_q_naive(2, QContext(Rational(-1, 2))), PreconditionError);
    CHECK_THROWS_AS(zeta_q_naive(3, half.with_max_terms(5)), BudgetExhausted);
}

TEST_CASE("genfunc_lhs_numeric") {
    auto lhs = genfunc_lhs_terms(Rational(0), half);
    auto z2 = zeta_q_naive_terms(2, half);
    for (int n = 1; n <= 30; ++n) CHECK(lhs.next() == z2.next());

    CHECK((genfunc_lhs_numeric(Rational(1, 3), half).value - oracle::frozen(oracle::half::lhs_a1_3)).abs() <
          Rational::pow10(-40));
    CHECK((genfunc_lhs_numeric(Rational(1, 5), half).value - oracle::frozen(oracle::half::lhs_a1_5)).abs() <
          Rational::pow10(-40));
    CHECK(genfunc_lhs_numeric(Rational(1, 3), half).value == genfunc_lhs_numeric(Rational(-1, 3), half).value);
    CHECK_THROWS_AS(genfunc_lhs_numeric(Rational(1), half), PreconditionError);
    CHECK_THROWS_AS(genfunc_lhs_numeric(Rational(-3, 2), half), PreconditionError);
}

TEST_CASE("genfunc_lhs_series coefficients are the even zeta values") {
    const SeriesSum k0 = genfunc_lhs_series(0, half);
    CHECK(k0.value.order() == 0);
    CHECK((k0.value[0] - zeta_q_naive(2, half).value).abs() < Rational::pow10(-39));

    const QContext c30 = half.with_digits(30);
    const SeriesSum s = genfunc_lhs_series(5, c30);
    for (std::size_t k = 0; k <= 5; ++k) {
        const SumResult z = zeta_q_naive(static_cast<int>(2 * k + 2), c30);
        CHECK((s.value[k] - z.value).abs() <= s.tail_bounds[k] + z.tail_bound);
        CHECK((s.value[k] - oracle::frozen(oracle::half::zeta_even[k])).abs() < Rational::pow10(-30));
        if (k > 0) CHECK(s.value[k] < s.value[k - 1]);
    }
}

TEST_CASE("zeta3_alt_naive") {
    auto src = zeta3_alt_terms(half);
    CHECK(src.next() == Rational(1, 2));
    CHECK((zeta3_alt_naive(half).value - oracle::frozen(oracle::half::alt3)).abs() < Rational::pow10(-40));
    // (alpha1 q^{2n} + alpha2 q^n) / [n]^3 sums linearly
    const Rational q = half.q();
    const Rational brute = oracle::partial_sum(150, [&](int n) {
        return (q.pow(2 * n) * 2 - q.pow(n)) / oracle::qint(n, q).pow(3);
    });
    const Rational combo = zeta_q_naive(3, half).value * 2 - zeta3_alt_naive(half).value;
    CHECK((combo - brute).abs() < Rational::pow10(-39));
}

TEST_CASE("classical zeta oracle") {
    const SumResult z2 = classical_zeta_oracle(2, 40);
    CHECK((z2.value - oracle::frozen(oracle::pi2_over_6)).abs() < Rational::pow10(-40));
    const SumResult z3 = classical_zeta_oracle(3, 40);
    CHECK((z3.value - oracle::frozen(oracle::apery)).abs() < Rational::pow10(-40));

    // the binomial series against a direct sum of 1/n^3 with its integral tail
    const SumResult z3_12 = classical_zeta_oracle(3, 12);
    CHECK(z3_12.terms_used <= 50);
    double direct = 0;
    const int N = 1000000;
    for (int n = N; n >= 1; --n) direct += 1.0 / (static_cast<double>(n) * n * n);
    direct += 1.0 / (2.0 * N * N);
    CHECK(std::abs(z3_12.value.to_double() - direct) < 1e-12);

    CHECK_THROWS_AS(classical_zeta_oracle(4), PreconditionError);
}

TEST_CASE("rounded accumulation stays within its reported bound") {
    for (const Rational& q : {Rational(1, 2), Rational(2, 3), Rational(9, 10)}) {
        const QContext exact(q, 25);
        for (int s : {2, 3, 4}) {
            const SumResult e = zeta_q_naive(s, exact);
            const SumResult r = zeta_q_naive(s, exact.with_working_bits(120));
            CHECK(r.rounding_bound > Rational(0));
            CHECK(r.value.denominator() <= mpz_class(1) << 120);
            CHECK((r.value - e.value).abs() <= r.error_bound() + e.error_bound());
            CHECK(r.terms_used >= e.terms_used);
        }
    }
    const QContext third(Rational(1, 3), 40, 20000, 200);
    CHECK((zeta_q_naive(2, third).value - oracle::frozen(oracle::third::zeta2)).abs() < Rational::pow10(-40));
}
