#include <doctest.h>

#include "oracle.hpp"
#include "qzeta/errors.hpp"
#include "qzeta/kernel.hpp"

using namespace qzeta;
using namespace qzeta::wz;

TEST_CASE("bbb kernel against the product form") {
    for (const Rational& q : {Rational(1, 3), Rational(1, 2), Rational(2, 3)}) {
        const QContext ctx(q);
        for (const Rational& a : {Rational(0), Rational(1, 4), Rational(1, 3)}) {
            const KernelSpec h = bbb_kernel(a, ctx);
            CHECK(h.base == oracle::bbb_h(0, 0, a, q));
            for (int n = 0; n < 6; ++n)
                for (int k = 0; k < 6; ++k) CHECK(kernel_eval(h, n, k, ctx) == oracle::bbb_h(n, k, a, q));
        }
    }
}

TEST_CASE("bbb kernel at a = 0, q = 1/2") {
    const QContext ctx(Rational(1, 2));
    const KernelSpec h = bbb_kernel(Rational(0), ctx);
    CHECK(h.base == Rational(4));
    // q^3 (q;q)_1^2 / (q;q)_3^2
    const Rational q = ctx.q();
    const Rational expected = q.pow(3) * oracle::qpoch(q, 1, q).pow(2) / oracle::qpoch(q, 3, q).pow(2);
    CHECK(kernel_eval(h, 1, 1, ctx) == expected);
    CHECK(h.name == "bbb[a=0]");
}

TEST_CASE("kernel paths agree") {
    const QContext ctx(Rational(1, 2));
    const KernelSpec h = bbb_kernel(Rational(1, 4), ctx);
    CHECK(kernel_eval(h, 3, 4, ctx, PathOrder::NFirst) == kernel_eval(h, 3, 4, ctx, PathOrder::KFirst));

    const QContext out(Rational(3, 2));
    const KernelSpec z = zeta3_kernel(out);
    CHECK(kernel_eval(z, 3, 4, out, PathOrder::NFirst) == kernel_eval(z, 3, 4, out, PathOrder::KFirst));

    KernelWalker w(h, ctx);
    w.step_k();
    w.step_n();
    w.step_k();
    CHECK(w.n() == 1);
    CHECK(w.k() == 2);
    CHECK(w.value() == kernel_eval(h, 1, 2, ctx));
}

TEST_CASE("zeta3 kernel against the product form") {
    for (const Rational& q : {Rational(3, 2), Rational(2), Rational(-3)}) {
        const QContext ctx(q);
        const KernelSpec h = zeta3_kernel(ctx);
        CHECK(h.regime == Regime::Outside);
        for (int n = 0; n < 6; ++n)
            for (int k = 0; k < 6; ++k) CHECK(kernel_eval(h, n, k, ctx) == oracle::zeta3_h(n, k, q));
    }
}

TEST_CASE("shift quotients are compatible") {
    const QContext ctx(Rational(1, 2));
    CHECK_FALSE(compatibility_defect(bbb_kernel(Rational(1, 3), ctx), 20, ctx).has_value());
    const QContext out(Rational(2));
    CHECK_FALSE(compatibility_defect(zeta3_kernel(out), 20, out).has_value());

    KernelSpec broken = bbb_kernel(Rational(1, 3), ctx);
    broken.ratio_k.num = broken.ratio_k.num * BiPoly::x();
    const auto d = compatibility_defect(broken, 20, ctx);
    REQUIRE(d.has_value());
    CHECK(d->n == 0);
    CHECK(d->k == 0);
}

TEST_CASE("kernel preconditions") {
    CHECK_THROWS_AS(bbb_kernel(Rational(0), QContext(Rational(2))), PreconditionError);
    CHECK_THROWS_AS(bbb_kernel(Rational(1), QContext(Rational(1, 2))), PreconditionError);
    CHECK_THROWS_AS(zeta3_kernel(QContext(Rational(1, 2))), PreconditionError);
    const KernelSpec h = bbb_kernel(Rational(0), QContext(Rational(1, 2)));
    CHECK_THROWS_AS(kernel_eval(h, 1, 1, QContext(Rational(1, 3))), PreconditionError);
    CHECK_THROWS_AS(kernel_eval(h, -1, 0, QContext(Rational(1, 2))), PreconditionError);
}

TEST_CASE("mate weight") {
    const QContext ctx(Rational(2));
    const RationalFunction2 w = zeta3_mate_weight(ctx);
    const Rational x = Rational(4), y = Rational(8);
    CHECK(w(x, y) == Rational(1) / (y * (Rational(1) - Rational(4) * x * x * y)));
}
