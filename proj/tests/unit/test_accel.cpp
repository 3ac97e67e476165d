#include <doctest.h>

#include "oracle.hpp"
#include "qzeta/accel.hpp"
#include "qzeta/errors.hpp"
#include "qzeta/naive.hpp"
#include "qzeta/qcore.hpp"

using namespace qzeta;
using accel::Transcription;
using accel::Zeta3Variant;

namespace {

const QContext half(Rational(1, 2), 40);

const std::vector<Rational> q_grid = {Rational(1, 3), Rational(1, 2), Rational(2, 3)};
const std::vector<Rational> a_grid = {Rational(0), Rational(1, 5), Rational(1, 3), Rational(49, 100)};

}  // namespace

TEST_CASE("bbb_rhs at a = 0 is the zeta[2] central-binomial series") {
    const Rational q = half.q();
    auto src = accel::bbb_rhs_terms(Rational(0), half);
    for (int n = 1; n <= 12; ++n) {
        const Rational expected = q.pow(n * n) * (Rational(1) + q.pow(n) * 2) /
                                  (oracle::gaussian(2 * n, n, q) * oracle::qint(n, q).pow(2));
        CHECK(src.next() == expected);
    }
    CHECK(accel::bbb_rhs_terms(Rational(0), half).next() == Rational(2, 3));
    CHECK((accel::bbb_rhs(Rational(0), half).value - oracle::frozen(oracle::half::zeta2)).abs() < Rational::pow10(-40));
}

TEST_CASE("bbb_rhs matches the left-hand side") {
    const QContext c30 = half.with_digits(30);
    const SumResult r = accel::bbb_rhs(Rational(1, 3), c30);
    CHECK((r.value - genfunc_lhs_numeric(Rational(1, 3), c30).value).abs() < Rational::pow10(-30));
    CHECK(r.terms_used < 40);
    CHECK_THROWS_AS(accel::bbb_rhs(Rational(1), half), PreconditionError);
    CHECK_THROWS_AS(accel::bbb_rhs(Rational(0), QContext(Rational(2))), PreconditionError);
}

TEST_CASE("bbb_rhs_series") {
    const QContext c30 = half.with_digits(30);
    const SeriesSum k0 = accel::bbb_rhs_series(0, c30);
    CHECK((k0.value[0] - accel::bbb_rhs(Rational(0), c30).value).abs() < Rational::pow10(-30));

    const SeriesSum rhs = accel::bbb_rhs_series(5, c30);
    const SeriesSum lhs = genfunc_lhs_series(5, c30);
    for (std::size_t k = 0; k <= 5; ++k)
        CHECK((rhs.value[k] - lhs.value[k]).abs() <= rhs.tail_bounds[k] + lhs.tail_bounds[k]);
}

TEST_CASE("bbb_rhs terms are positive for |a| < 1/(1+q)") {
    for (const Rational& a : {Rational(0), Rational(1, 3), Rational(-1, 2)}) {
        auto terms = accel::bbb_rhs_terms(a, half);
        for (int n = 1; n <= 20; ++n) CHECK(terms.next() > Rational(0));
    }
}

TEST_CASE("t2 numerator matches its structural form") {
    for (const Rational& q : {Rational(1, 2), Rational(2, 7), Rational(3, 2)}) {
        const QContext ctx(q);
        for (const Rational& a : {Rational(0), Rational(1, 4), Rational(-2, 3)}) {
            for (int n = 1; n <= 20; ++n)
                CHECK(accel::t2_numerator(n, a, ctx) == oracle::t2_numerator_structural(n, a, q));
        }
    }
    CHECK_THROWS_AS(accel::t2_numerator(0, Rational(0), half), PreconditionError);
}

TEST_CASE("t2 numerator: the uncorrected -8q^n[n]^2 form differs") {
    // -8q^{n-1}[n]^2 versus -8q^n[n]^2: the gap is 8[n]^2 q^{n-1}(q - 1)
    for (int n = 1; n <= 5; ++n) {
        const Rational q = half.q();
        const Rational gap = accel::t2_numerator(n, Rational(0), half, Transcription::Uncorrected) -
                             accel::t2_numerator(n, Rational(0), half);
        CHECK(gap == oracle::qint(n, q).pow(2) * q.pow(n - 1) * (Rational(1) - q) * 8);
    }
}

TEST_CASE("t2_rhs") {
    const QContext c30 = half.with_digits(30);
    CHECK((accel::t2_rhs(Rational(0), half).value - oracle::frozen(oracle::half::zeta2)).abs() < Rational::pow10(-40));
    CHECK((accel::t2_rhs(Rational(1, 4), c30).value - oracle::frozen(oracle::half::lhs_a1_4)).abs() <
          Rational::pow10(-30));
    const SumResult uncorrected = accel::t2_rhs(Rational(0), c30, Transcription::Uncorrected);
    CHECK((uncorrected.value - oracle::frozen(oracle::half::zeta2)).abs() > Rational(1, 10));
}

TEST_CASE("zeta3_accel") {
    CHECK((accel::zeta3_accel(Zeta3Variant::V1, half).value - oracle::frozen(oracle::half::zeta3)).abs() <
          Rational::pow10(-40));
    CHECK((accel::zeta3_accel(Zeta3Variant::V2, half).value - oracle::frozen(oracle::half::alt3)).abs() <
          Rational::pow10(-40));

    // n = 1 by hand: the (n-1) factor removes the bracketed correction
    const Rational q = half.q();
    const Rational first = q * (q + q * q * 2 + q.pow(3) * 2) / (oracle::gaussian(2, 1, q) * (Rational(1) + q));
    CHECK(accel::zeta3_accel_term(Zeta3Variant::V1, 1, half) == first);
    CHECK(accel::zeta3_numerator(Zeta3Variant::V1, 1, half) == q + q * q * 2 + q.pow(3) * 2);

    // n = 1 of the companion: 1 + 2q + q + 2q^3 - q^4 + (1-q) q^2 / [1]
    const Rational v2 = Rational(1) + q * 2 + q + q.pow(3) * 2 - q.pow(4) + (Rational(1) - q) * q * q;
    CHECK(accel::zeta3_numerator(Zeta3Variant::V2, 1, half) == v2);
}

TEST_CASE("zeta3 terms alternate and decay like q^{3n^2/2}") {
    for (int n = 1; n <= 20; ++n) {
        const Rational t = accel::zeta3_accel_term(Zeta3Variant::V1, n, half);
        CHECK(t.sign() == (n % 2 == 1 ? 1 : -1));
        if (n > 1) CHECK(t.abs() < accel::zeta3_accel_term(Zeta3Variant::V1, n - 1, half).abs());
    }
}

TEST_CASE("uncorrected zeta3 numerators miss the target") {
    const QContext c20 = half.with_digits(20);
    const Rational z3 = oracle::frozen(oracle::half::zeta3);
    const Rational miss = (accel::zeta3_accel(Zeta3Variant::V1, c20, Transcription::Uncorrected).value - z3).abs();
    CHECK(miss > Rational(3, 10));
    CHECK(miss < Rational(4, 10));
}

TEST_CASE("amdeberhan series") {
    CHECK((accel::zeta3_amdeberhan(half).value - oracle::frozen(oracle::half::zeta3)).abs() < Rational::pow10(-40));

    const Rational q = half.q();
    const Rational p1 = q.pow(3) * (Rational(1) + q + q * q * 2 + q.pow(3)) +
                        oracle::qint(2, q) * oracle::qint(3, q) * q * (Rational(1) + q) * (Rational(1) + q);
    CHECK(accel::amdeberhan_numerator(1, half) == p1);
    CHECK(accel::amdeberhan_numerator(1, half, Transcription::Uncorrected) == p1);

    for (int n = 1; n <= 20; ++n) CHECK(accel::amdeberhan_term(n, half).sign() == (n % 2 == 1 ? 1 : -1));
}

TEST_CASE("amdeberhan terms equal the reflected |q| > 1 series") {
    for (const Rational& p : {Rational(1, 2), Rational(1, 3), Rational(3, 4)}) {
        const QContext ctx(p);
        for (int m = 1; m <= 15; ++m) CHECK(accel::amdeberhan_term(m, ctx) == oracle::amdeberhan_from_outside(m, p));
    }
}

TEST_CASE("uncorrected amdeberhan numerator misses by about 1e-4") {
    const QContext c20 = half.with_digits(20);
    const Rational miss =
        (accel::zeta3_amdeberhan(c20, Transcription::Uncorrected).value - oracle::frozen(oracle::half::zeta3)).abs();
    CHECK(miss > Rational(1, 100000));
    CHECK(miss < Rational(1, 1000));
}

TEST_CASE("accelerated series agree with the definitions on the grid") {
    for (const Rational& q : q_grid) {
        const QContext ctx(q, 30);
        for (const Rational& a : a_grid) {
            const SumResult lhs = genfunc_lhs_numeric(a, ctx);
            const SumResult t1 = accel::bbb_rhs(a, ctx);
            const SumResult t2 = accel::t2_rhs(a, ctx);
            CHECK((t1.value - lhs.value).abs() <= t1.error_bound() + lhs.error_bound());
            CHECK((t2.value - lhs.value).abs() <= t2.error_bound() + lhs.error_bound());
        }
        const SumResult z3 = zeta_q_naive(3, ctx);
        const SumResult alt = zeta3_alt_naive(ctx);
        const SumResult v1 = accel::zeta3_accel(Zeta3Variant::V1, ctx);
        const SumResult v2 = accel::zeta3_accel(Zeta3Variant::V2, ctx);
        const SumResult am = accel::zeta3_amdeberhan(ctx);
        CHECK((v1.value - z3.value).abs() <= v1.error_bound() + z3.error_bound());
        CHECK((v2.value - alt.value).abs() <= v2.error_bound() + alt.error_bound());
        CHECK((am.value - z3.value).abs() <= am.error_bound() + z3.error_bound());

        // alpha1 * (sum q^{2n}/[n]^3) + alpha2 * (sum q^n/[n]^3)
        for (auto [x, y] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{2, -1}}) {
            const Rational combo = v1.value * x + v2.value * y;
            const Rational brute = oracle::partial_sum(400, [&](int n) {
                return (q.pow(2 * n) * x + q.pow(n) * y) / oracle::qint(n, q).pow(3);
            });
            CHECK((combo - brute).abs() < Rational::pow10(-29));
        }
    }
}

TEST_CASE("terms_to_tolerance") {
    const QContext ctx(Rational(1, 2), 30);
    const Rational eps = Rational::pow10(-30);
    const int naive = accel::terms_to_tolerance(accel::SeriesId::zeta(3), eps, ctx);
    const int fast = accel::terms_to_tolerance(accel::SeriesId::z3(Zeta3Variant::V1), eps, ctx);
    CHECK(naive >= 40);
    CHECK(naive <= 110);
    CHECK(fast <= 15);
    for (const auto& id : {accel::SeriesId::bbb_t1(Rational(1, 3)), accel::SeriesId::bbb_t2(Rational(1, 3)),
                           accel::SeriesId::z3(Zeta3Variant::V1), accel::SeriesId::z3(Zeta3Variant::V2),
                           accel::SeriesId::amdeberhan()}) {
        CHECK(accel::terms_to_tolerance(id, eps, ctx) <
              accel::terms_to_tolerance(accel::naive_counterpart(id), eps, ctx));
        CHECK(accel::terms_to_tolerance(id, Rational(1), ctx) <= 1);
    }
    CHECK(accel::terms_to_tolerance(accel::SeriesId::zeta(2), Rational(1), ctx) <= 1);
    CHECK_THROWS_AS(accel::terms_to_tolerance(accel::SeriesId::zeta(2), Rational(0), ctx), PreconditionError);
}

TEST_CASE("series identifiers") {
    CHECK(accel::SeriesId::bbb_t1(Rational(1, 3)).name() == "bbb-t1[a=1/3]");
    CHECK(accel::SeriesId::zeta(3).name() == "zeta-q[s=3]");
    CHECK(accel::SeriesId::amdeberhan().accelerated());
    CHECK_FALSE(accel::SeriesId::zeta3_alt().accelerated());
    CHECK_THROWS_AS(accel::SeriesId({accel::SeriesKind::BbbT1, std::nullopt, 0}).validate(), PreconditionError);
    CHECK_THROWS_AS(accel::SeriesId({accel::SeriesKind::Z3V1, Rational(0), 0}).validate(), PreconditionError);
    CHECK_THROWS_AS(accel::SeriesId::bbb_t2(Rational(1)).validate(), PreconditionError);
    CHECK_THROWS_AS(accel::SeriesId::zeta(1).validate(), PreconditionError);
    CHECK(accel::naive_counterpart(accel::SeriesId::z3(Zeta3Variant::V2)).kind == accel::SeriesKind::Zeta3AltNaive);
}
