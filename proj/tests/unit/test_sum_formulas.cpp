#include <doctest.h>

#include "oracle.hpp"
#include "qzeta/accel.hpp"
#include "qzeta/errors.hpp"
#include "qzeta/naive.hpp"
#include "qzeta/wz.hpp"

using namespace qzeta;
using namespace qzeta::wz;
using accel::Zeta3Variant;

namespace {

Rational close_tol(const FormulaSums& f) { return f.lhs.error_bound() + f.rhs.error_bound() + Rational::pow10(-28); }

}  // namespace

TEST_CASE("bbb pair: formula terms are the accelerated terms") {
    const QContext ctx(Rational(1, 2));
    for (const Rational& a : {Rational(0), Rational(1, 3)}) {
        const MWZPair p = bbb_pair(a, ctx, 40);
        auto lhs = formula_lhs_terms(p, ctx);
        auto naive = genfunc_lhs_terms(a, ctx);
        auto ri = formula_rhs_terms_i(p, ctx);
        auto t1 = accel::bbb_rhs_terms(a, ctx);
        auto rii = formula_rhs_terms_s(p, 1, ctx);
        for (int n = 1; n <= 10; ++n) {
            CHECK(lhs.next() == naive.next());
            CHECK(ri.next() == t1.next());
            CHECK(rii.next() == accel::t2_term(n, a, ctx));
        }
    }
}

TEST_CASE("zeta3 pairs: scaled formula terms are the accelerated terms at 1/q") {
    const QContext out(Rational(2));
    const QContext in(Rational(1, 2));
    const MWZPair v1 = zeta3_pair({Rational(1), Rational(0)}, out, 40);
    const Rational c1 = zeta3_target_scale({1, 0}, out);
    auto i1 = formula_rhs_terms_i(v1, out);
    auto ii1 = formula_rhs_terms_s(v1, 1, out);
    const MWZPair v2 = zeta3_pair({Rational(0), Rational(1)}, out, 40);
    const Rational c2 = zeta3_target_scale({0, 1}, out);
    auto i2 = formula_rhs_terms_i(v2, out);
    auto l2 = formula_lhs_terms(v2, out);
    auto alt = zeta3_alt_terms(in);
    for (int n = 1; n <= 10; ++n) {
        CHECK(c1 * i1.next() == accel::zeta3_accel_term(Zeta3Variant::V1, n, in));
        CHECK(c1 * ii1.next() == accel::amdeberhan_term(n, in));
        CHECK(c2 * i2.next() == accel::zeta3_accel_term(Zeta3Variant::V2, n, in));
        CHECK(c2 * l2.next() == alt.next());
    }
}

TEST_CASE("bbb formula sums") {
    const QContext ctx(Rational(1, 2), 30);
    const Rational a(1, 3);
    const MWZPair p = bbb_pair(a, ctx, 96);
    const Rational target = oracle::frozen(oracle::half::lhs_a1_3);

    const FormulaSums i = sum_formula_i(p, ctx);
    CHECK((i.lhs.value - target).abs() < close_tol(i));
    CHECK((i.rhs.value - target).abs() < close_tol(i));
    CHECK(i.boundary < ctx.tolerance());

    const FormulaSums ii = sum_formula_ii(p, ctx);
    CHECK((ii.rhs.value - target).abs() < close_tol(ii));
    CHECK(ii.rhs.terms_used < i.rhs.terms_used);
}

TEST_CASE("s = 1 is the diagonal formula") {
    const QContext ctx(Rational(1, 3), 25);
    const MWZPair p = bbb_pair(Rational(1, 4), ctx, 96);
    const FormulaSums ii = sum_formula_ii(p, ctx);
    const FormulaSums s1 = sum_formula_s(p, 1, ctx);
    CHECK(ii.rhs.value == s1.rhs.value);
    CHECK(ii.rhs.terms_used == s1.rhs.terms_used);
}

TEST_CASE("the s-fold sum does not depend on s") {
    const QContext ctx(Rational(1, 2), 30);
    const MWZPair p = bbb_pair(Rational(0), ctx, 96);
    const Rational z2 = oracle::frozen(oracle::half::zeta2);
    int previous = 1 << 30;
    for (int s = 1; s <= 3; ++s) {
        const FormulaSums f = sum_formula_s(p, s, ctx);
        CHECK((f.rhs.value - z2).abs() < close_tol(f));
        CHECK(f.rhs.terms_used <= previous);
        previous = f.rhs.terms_used;
    }
}

TEST_CASE("zeta3 formula sums") {
    const QContext out(Rational(2), 30);
    const QContext in(Rational(1, 2), 30);
    const MWZPair v1 = zeta3_pair({Rational(1), Rational(0)}, out, 96);
    const Rational c1 = zeta3_target_scale({1, 0}, out);
    const Rational z3 = oracle::frozen(oracle::half::zeta3);
    for (int s = 1; s <= 3; ++s) {
        const FormulaSums f = sum_formula_s(v1, s, out);
        CHECK((c1 * f.lhs.value - z3).abs() < Rational::pow10(-27));
        CHECK((c1 * f.rhs.value - z3).abs() < Rational::pow10(-27));
    }
    const FormulaSums i = sum_formula_i(v1, out);
    CHECK((c1 * i.rhs.value - z3).abs() < Rational::pow10(-27));

    const MWZPair v2 = zeta3_pair({Rational(0), Rational(1)}, out, 96);
    const Rational c2 = zeta3_target_scale({0, 1}, out);
    const FormulaSums f2 = sum_formula_ii(v2, out);
    CHECK((c2 * f2.rhs.value - oracle::frozen(oracle::half::alt3)).abs() < Rational::pow10(-27));
}

TEST_CASE("formula preconditions") {
    const QContext ctx(Rational(1, 2), 30);
    const MWZPair p = bbb_pair(Rational(0), ctx, 96);
    CHECK_THROWS_AS(sum_formula_s(p, 0, ctx), PreconditionError);
    CHECK_THROWS_AS(sum_formula_i(p, QContext(Rational(1, 3))), PreconditionError);
    const MWZPair tiny = bbb_pair(Rational(0), ctx, 4);
    CHECK_THROWS_AS(sum_formula_ii(tiny, ctx), BudgetExhausted);
}

TEST_CASE("a zero pair sums to zero") {
    const QContext ctx(Rational(1, 2), 20);
    MWZPair p = bbb_pair(Rational(0), ctx, 40);
    for (auto& row : p.p_coeffs)
        for (auto& c : row) c = 0;
    for (auto& row : p.q_coeffs)
        for (auto& c : row) c = 0;
    const FormulaSums f = sum_formula_ii(p, ctx);
    CHECK(f.lhs.value == Rational(0));
    CHECK(f.rhs.value == Rational(0));
}
