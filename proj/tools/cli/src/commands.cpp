#include "commands.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "qzeta/accel.hpp"
#include "qzeta/errors.hpp"
#include "qzeta/naive.hpp"
#include "qzeta/solver.hpp"

namespace qzeta::cli {

namespace {

using accel::SeriesId;
using accel::SeriesKind;

Rational parse_rational(const char* flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const Error& e) {
        throw PreconditionError(std::string(flag) + ": cannot parse '" + text + "' as a rational (" + e.what() + ")");
    }
}

std::vector<Rational> parse_list(const char* flag, const std::string& text) {
    std::vector<Rational> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_rational(flag, item));
    if (v.empty()) throw PreconditionError(std::string(flag) + ": empty list");
    return v;
}

QContext make_ctx(const Options& o, const Rational& q, int extra_digits = 0) {
    return QContext(q, o.digits + extra_digits, o.max_terms, o.bits);
}

std::optional<Rational> parse_a(const Options& o) {
    if (!o.a) return std::nullopt;
    return parse_rational("--a", *o.a);
}

SeriesId series_id(const std::string& name, const std::optional<Rational>& a, std::optional<int> s) {
    static const std::map<std::string, SeriesKind> kinds = {
        {"zeta-q", SeriesKind::ZetaNaive},  {"genfunc-lhs", SeriesKind::GenfuncLhs},
        {"zeta3-alt", SeriesKind::Zeta3AltNaive}, {"bbb-t1", SeriesKind::BbbT1},
        {"bbb-t2", SeriesKind::BbbT2},      {"z3-v1", SeriesKind::Z3V1},
        {"z3-v2", SeriesKind::Z3V2},        {"z3-amdeberhan", SeriesKind::Z3Amdeberhan},
    };
    auto it = kinds.find(name);
    if (it == kinds.end()) throw PreconditionError("unknown series '" + name + "'");
    SeriesId id{it->second, a, 0};
    if (id.kind == SeriesKind::ZetaNaive) {
        if (!s) throw PreconditionError("zeta-q requires --s");
        id.s = *s;
    } else if (s) {
        throw PreconditionError(name + " does not take --s");
    }
    id.validate();
    return id;
}

Json sum_json(const std::string& series, const Rational& q, const SumResult& r, int digits) {
    Json j;
    j["series"] = series;
    j["q"] = q.to_string();
    j["value"] = r.value.to_decimal(digits);
    j["terms_used"] = r.terms_used;
    j["tail_bound"] = r.tail_bound.to_scientific();
    j["error_bound"] = r.error_bound().to_scientific();
    return j;
}

// One comparison row; passes when |lhs - rhs| < tol.
Json compare_row(const std::string& check, const Rational& lhs, const Rational& rhs, const Rational& tol, bool& ok) {
    const Rational d = (lhs - rhs).abs();
    const bool pass = d < tol;
    ok = ok && pass;
    Json j;
    j["check"] = check;
    j["value"] = d.to_scientific();
    j["agreeing_digits"] = agreeing_digits(d, 100000);
    j["pass"] = pass;
    return j;
}

Json exact_row(const std::string& check, const Rational& value, bool& ok) {
    const bool pass = value.is_zero();
    ok = ok && pass;
    Json j;
    j["check"] = check;
    j["value"] = value.to_string();
    j["pass"] = pass;
    return j;
}

Json residual_json(const std::string& check, const wz::Residual& res, int N, int K, bool& ok) {
    Json j = exact_row(check, res.max_abs, ok);
    j["grid"] = std::to_string(N) + "x" + std::to_string(K);
    j["points"] = res.points;
    if (!res.max_abs.is_zero()) j["max_at"] = {res.at.n, res.at.k};
    return j;
}

std::vector<std::string> strings(const std::vector<Rational>& v) {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(x.to_string());
    return s;
}

std::string joined(const std::vector<Rational>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + v[i].to_string();
    return s;
}

// --- verify -----------------------------------------------------------------

std::pair<int, int> zeta3_init(const std::string& target) {
    return target.back() == '1' ? std::pair{1, 0} : std::pair{0, 1};
}

void verify_bbb_pair(const Options& o, Report& r) {
    const Rational q = parse_rational("--q", o.q);
    const Rational a = parse_a(o).value_or(Rational(0));
    r.params["a"] = a.to_string();
    const QContext ctx = make_ctx(o, q);
    const auto pair = wz::bbb_pair(a, ctx, o.grid + 1);
    const auto defect = wz::compatibility_defect(pair.kernel, o.grid, ctx);
    bool ok = true;
    Json compat = exact_row("kernel-compatibility", defect ? Rational(1) : Rational(0), ok);
    if (defect) compat["at"] = {defect->n, defect->k};
    r.residuals.push_back(compat);
    r.residuals.push_back(residual_json("telescope", wz::telescope_residual(pair, o.grid, o.grid, ctx), o.grid, o.grid, ok));
    r.ok = ok;
}

void verify_zeta3_pair(const Options& o, Report& r) {
    const Rational q = parse_rational("--q", o.q);
    const QContext ctx = make_ctx(o, q);
    const auto init = zeta3_init(o.name);
    r.params["init"] = {init.first, init.second};
    const auto pair = wz::zeta3_pair({Rational(init.first), Rational(init.second)}, ctx, o.grid + 1);
    bool ok = true;
    const auto defect = wz::compatibility_defect(pair.kernel, o.grid, ctx);
    r.residuals.push_back(exact_row("kernel-compatibility", defect ? Rational(1) : Rational(0), ok));
    r.residuals.push_back(residual_json("telescope", wz::telescope_residual(pair, o.grid, o.grid, ctx), o.grid, o.grid, ok));
    Rational worst = 0;
    for (int n = 0; n <= o.grid; ++n) {
        const auto [c0, c1] = wz::zeta3_closed_form(init, n, ctx);
        const auto& row = pair.p_coeffs[static_cast<std::size_t>(n)];
        worst = max(worst, max((row[0] - c0).abs(), (row[1] - c1).abs()));
    }
    Json cf = exact_row("closed-form", worst, ok);
    cf["n_max"] = o.grid;
    r.residuals.push_back(cf);
    r.ok = ok;
}

void verify_genfunc_coeffs(const Options& o, Report& r) {
    if (o.K < 0) throw PreconditionError("--K must be >= 0");
    const Rational q = parse_rational("--q", o.q);
    const QContext ctx = make_ctx(o, q, 3);
    const Rational tol = Rational::pow10(-o.digits);
    const auto K = static_cast<std::size_t>(o.K);
    const SeriesSum rhs = accel::bbb_rhs_series(K, ctx);
    const SeriesSum lhs = genfunc_lhs_series(K, ctx);
    bool ok = true;
    r.csv_columns = {"k", "bbb_series", "genfunc_series", "zeta_naive"};
    for (std::size_t k = 0; k <= K; ++k) {
        const SumResult z = zeta_q_naive(static_cast<int>(2 * k + 2), ctx);
        Json row;
        row["k"] = k;
        row["bbb_series"] = rhs.value[k].to_decimal(o.digits);
        row["genfunc_series"] = lhs.value[k].to_decimal(o.digits);
        row["zeta_naive"] = z.value.to_decimal(o.digits);
        r.results.push_back(row);
        r.residuals.push_back(compare_row("coeff[" + std::to_string(k) + "] bbb-vs-genfunc", rhs.value[k], lhs.value[k], tol, ok));
        r.residuals.push_back(compare_row("coeff[" + std::to_string(k) + "] genfunc-vs-zeta", lhs.value[k], z.value, tol, ok));
    }
    r.terms.push_back({{"series", "bbb-series"}, {"terms_used", rhs.terms_used}});
    r.terms.push_back({{"series", "genfunc-series"}, {"terms_used", lhs.terms_used}});
    r.csv_source = "results";
    r.ok = ok;
}

// A pair together with the values its formulas must reproduce, in the
// convergent (0 < q < 1) normalization.
struct PropSetup {
    PropSetup(wz::MWZPair p, QContext c) : pair(std::move(p)), ctx(std::move(c)) {}
    wz::MWZPair pair;
    QContext ctx;
    Rational scale = 1;
    Rational naive;
    Rational accel_i;
    std::optional<Rational> accel_ii;
    std::string naive_name, i_name, ii_name;
};

PropSetup prop_setup(const Options& o, Report& r) {
    const Rational q = parse_rational("--q", o.q);
    const QContext ctx = make_ctx(o, q, 3);
    r.params["pair"] = o.pair;
    constexpr int rows = 96;
    if (o.pair == "bbb") {
        const Rational a = parse_a(o).value_or(Rational(0));
        r.params["a"] = a.to_string();
        PropSetup s(wz::bbb_pair(a, ctx, rows), ctx);
        s.naive = genfunc_lhs_numeric(a, ctx).value;
        s.accel_i = accel::bbb_rhs(a, ctx).value;
        s.accel_ii = accel::t2_rhs(a, ctx).value;
        s.naive_name = SeriesId::genfunc(a).name();
        s.i_name = SeriesId::bbb_t1(a).name();
        s.ii_name = SeriesId::bbb_t2(a).name();
        return s;
    }
    if (o.pair == "zeta3-v1" || o.pair == "zeta3-v2") {
        if (o.a) throw PreconditionError("--a is not accepted for " + o.pair);
        const auto init = zeta3_init(o.pair);
        PropSetup s(wz::zeta3_pair({Rational(init.first), Rational(init.second)}, ctx, rows), ctx);
        s.scale = wz::zeta3_target_scale(init, ctx);
        const QContext inside = ctx.with_q(q.inverse());
        r.params["target_q"] = inside.q().to_string();
        if (init.first == 1) {
            s.naive = zeta_q_naive(3, inside).value;
            s.accel_i = accel::zeta3_accel(accel::Zeta3Variant::V1, inside).value;
            s.accel_ii = accel::zeta3_amdeberhan(inside).value;
            s.naive_name = "zeta-q[s=3]";
            s.i_name = "z3-v1";
            s.ii_name = "z3-amdeberhan";
        } else {
            s.naive = zeta3_alt_naive(inside).value;
            s.accel_i = accel::zeta3_accel(accel::Zeta3Variant::V2, inside).value;
            s.naive_name = "zeta3-alt";
            s.i_name = "z3-v2";
        }
        return s;
    }
    throw PreconditionError("--pair must be bbb, zeta3-v1 or zeta3-v2");
}

Json formula_json(const std::string& name, const wz::FormulaSums& f, const Rational& scale, int digits) {
    Json j;
    j["formula"] = name;
    j["lhs"] = (scale * f.lhs.value).to_decimal(digits);
    j["rhs"] = (scale * f.rhs.value).to_decimal(digits);
    j["lhs_terms"] = f.lhs.terms_used;
    j["rhs_terms"] = f.rhs.terms_used;
    j["boundary"] = f.boundary.to_scientific();
    j["boundary_index"] = f.boundary_index;
    return j;
}

void verify_prop(const Options& o, Report& r) {
    PropSetup s = prop_setup(o, r);
    const Rational tol = Rational::pow10(-o.digits);
    bool ok = true;
    r.csv_columns = {"formula", "lhs", "rhs", "lhs_terms", "rhs_terms", "boundary"};
    r.csv_source = "results";

    auto common = [&](const std::string& label, const wz::FormulaSums& f) {
        r.results.push_back(formula_json(label, f, s.scale, o.digits));
        r.residuals.push_back(compare_row(label + " lhs-vs-rhs", f.lhs.value * s.scale, f.rhs.value * s.scale, tol, ok));
        r.residuals.push_back(compare_row(label + " lhs-vs-" + s.naive_name, f.lhs.value * s.scale, s.naive, tol, ok));
        r.terms.push_back({{"formula", label}, {"lhs_terms", f.lhs.terms_used}, {"rhs_terms", f.rhs.terms_used}});
    };
    auto diag_target = [&](const std::string& label, const wz::FormulaSums& f) {
        if (s.accel_ii)
            r.residuals.push_back(compare_row(label + " rhs-vs-" + s.ii_name, f.rhs.value * s.scale, *s.accel_ii, tol, ok));
    };

    if (o.name == "prop-i") {
        const auto f = wz::sum_formula_i(s.pair, s.ctx);
        common("prop-i", f);
        r.residuals.push_back(compare_row("prop-i rhs-vs-" + s.i_name, f.rhs.value * s.scale, s.accel_i, tol, ok));
    } else if (o.name == "prop-ii") {
        const auto f = wz::sum_formula_ii(s.pair, s.ctx);
        common("prop-ii", f);
        diag_target("prop-ii", f);
    } else {
        std::vector<int> folds = o.s ? std::vector<int>{*o.s} : std::vector<int>{1, 2, 3};
        r.params["folds"] = folds;
        std::optional<Rational> first;
        for (int fold : folds) {
            const std::string label = "prop-s[s=" + std::to_string(fold) + "]";
            const auto f = wz::sum_formula_s(s.pair, fold, s.ctx);
            common(label, f);
            if (fold == 1) diag_target(label, f);
            if (first) r.residuals.push_back(compare_row(label + " vs first fold", f.rhs.value * s.scale, *first, tol, ok));
            else first = f.rhs.value * s.scale;
        }
    }
    r.ok = ok;
}

void verify_uncorrected(const Options& o, Report& r) {
    const Rational q = parse_rational("--q", o.q);
    const Rational a = parse_a(o).value_or(Rational(1, 4));
    r.params["a"] = a.to_string();
    const QContext ctx = make_ctx(o, q, 3);
    const Rational tol = Rational::pow10(-o.digits);
    using accel::Transcription;
    struct Case {
        std::string name;
        std::function<SumResult(Transcription)> sum;
        Rational target;
    };
    const Rational z3 = zeta_q_naive(3, ctx).value;
    const std::vector<Case> cases = {
        {"z3-v1", [&](Transcription t) { return accel::zeta3_accel(accel::Zeta3Variant::V1, ctx, t); }, z3},
        {"z3-v2", [&](Transcription t) { return accel::zeta3_accel(accel::Zeta3Variant::V2, ctx, t); },
         zeta3_alt_naive(ctx).value},
        {SeriesId::bbb_t2(a).name(), [&](Transcription t) { return accel::t2_rhs(a, ctx, t); },
         genfunc_lhs_numeric(a, ctx).value},
        {"z3-amdeberhan", [&](Transcription t) { return accel::zeta3_amdeberhan(ctx, t); }, z3},
    };
    bool ok = true;
    r.csv_source = "results";
    r.csv_columns = {"series", "corrected_diff", "uncorrected_diff", "uncorrected_agreeing_digits"};
    for (const auto& c : cases) {
        const Rational fixed = (c.sum(Transcription::Corrected).value - c.target).abs();
        const Rational miss = (c.sum(Transcription::Uncorrected).value - c.target).abs();
        Json row;
        row["series"] = c.name;
        row["target"] = c.target.to_decimal(o.digits);
        row["corrected_diff"] = fixed.to_scientific();
        row["uncorrected_diff"] = miss.to_scientific();
        row["uncorrected_agreeing_digits"] = agreeing_digits(miss);
        r.results.push_back(row);
        Json res;
        res["check"] = c.name + " corrected";
        res["value"] = fixed.to_scientific();
        res["pass"] = fixed < tol;
        ok = ok && fixed < tol;
        r.residuals.push_back(res);
    }
    r.ok = ok;
}

}  // namespace

void cmd_compute(const Options& o, Report& r) {
    r.csv_columns = {"series", "q", "value", "terms_used", "tail_bound", "error_bound"};
    const Rational q = parse_rational("--q", o.q);
    const auto a = parse_a(o);
    r.params["series"] = o.name;
    if (a) r.params["a"] = a->to_string();
    if (o.s) r.params["s"] = *o.s;
    const SeriesId id = series_id(o.name, a, o.s);
    const QContext ctx = make_ctx(o, q);
    const SumResult res = accel::sum_series(id, ctx);
    r.results.push_back(sum_json(id.name(), q, res, o.digits));
    r.terms.push_back({{"series", id.name()}, {"terms_used", res.terms_used}});
}

void cmd_verify(const Options& o, Report& r) {
    r.params["target"] = o.name;
    r.params["grid"] = o.grid;
    r.params["K"] = o.K;
    r.csv_source = "residuals";
    r.csv_columns = {"check", "value", "pass"};
    if (o.name == "bbb-pair") return verify_bbb_pair(o, r);
    if (o.name == "zeta3-pair-v1" || o.name == "zeta3-pair-v2") return verify_zeta3_pair(o, r);
    if (o.name == "genfunc-coeffs") return verify_genfunc_coeffs(o, r);
    if (o.name == "prop-i" || o.name == "prop-ii" || o.name == "prop-s") return verify_prop(o, r);
    if (o.name == "uncorrected-forms") return verify_uncorrected(o, r);
    throw PreconditionError("unknown verify target '" + o.name + "'");
}

void cmd_bench(const Options& o, Report& r) {
    if (o.digits < 5) throw PreconditionError("bench: --digits must be >= 5");
    const Rational q = parse_rational("--q", o.q);
    const Rational a = parse_a(o).value_or(Rational(0));
    r.params["a"] = a.to_string();
    const QContext ctx = make_ctx(o, q);
    ctx.require_unit_interval("bench");
    r.csv_columns = {"series", "kind", "counterpart", "terms", "value", "status", "ms"};

    using Clock = std::chrono::steady_clock;
    auto row = [&](const std::string& name, const std::string& kind, const std::string& counterpart,
                   const std::function<std::pair<Rational, int>()>& run) -> std::optional<int> {
        Json j;
        j["series"] = name;
        j["kind"] = kind;
        j["counterpart"] = counterpart;
        const auto t0 = Clock::now();
        std::optional<int> terms;
        try {
            auto [value, n] = run();
            j["terms"] = n;
            j["value"] = value.to_decimal(o.digits);
            j["status"] = "ok";
            terms = n;
        } catch (const Error& e) {
            j["terms"] = nullptr;
            j["value"] = nullptr;
            j["status"] = e.kind();
            j["message"] = e.what();
        }
        j["ms"] = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        r.results.push_back(j);
        return terms;
    };

    const std::vector<SeriesId> fast = {SeriesId::bbb_t1(a), SeriesId::bbb_t2(a), SeriesId::z3(accel::Zeta3Variant::V1),
                                        SeriesId::z3(accel::Zeta3Variant::V2), SeriesId::amdeberhan()};
    for (const auto& id : fast) {
        const SeriesId slow = accel::naive_counterpart(id);
        auto sum = [&](const SeriesId& s) {
            return [&ctx, s] {
                auto res = accel::sum_series(s, ctx);
                return std::pair{res.value, res.terms_used};
            };
        };
        const auto ns = row(slow.name(), "naive", id.name(), sum(slow));
        const auto fs = row(id.name(), "accelerated", slow.name(), sum(id));
        Json t;
        t["naive"] = slow.name();
        t["accelerated"] = id.name();
        t["naive_terms"] = ns ? Json(*ns) : Json(nullptr);
        t["accelerated_terms"] = fs ? Json(*fs) : Json(nullptr);
        t["faster"] = ns && fs && *fs < *ns;
        r.terms.push_back(t);
    }

    const QContext outside = ctx.with_q(q.inverse());
    for (int s = 1; s <= 3; ++s) {
        const std::string label = "s=" + std::to_string(s);
        row("prop-s[bbb," + label + "]", "formula", SeriesId::genfunc(a).name(), [&] {
            const auto f = wz::sum_formula_s(wz::bbb_pair(a, ctx, 96), s, ctx);
            return std::pair{f.rhs.value, f.rhs.terms_used};
        });
    }
    for (int s = 1; s <= 3; ++s) {
        const std::string label = "s=" + std::to_string(s);
        row("prop-s[zeta3-v1," + label + "]", "formula", "zeta-q[s=3]", [&] {
            const auto f = wz::sum_formula_s(wz::zeta3_pair({Rational(1), Rational(0)}, outside, 96), s, outside);
            return std::pair{wz::zeta3_target_scale({1, 0}, outside) * f.rhs.value, f.rhs.terms_used};
        });
    }
}

void cmd_solve(const Options& o, Report& r) {
    const Rational q = parse_rational("--q", o.q);
    const QContext ctx = make_ctx(o, q);
    r.params["kernel"] = o.name;
    r.params["nmax"] = o.nmax;
    r.csv_source = "terms";
    r.csv_columns = {"n", "a", "b"};

    std::optional<wz::KernelSpec> kernel;
    std::optional<RationalFunction2> weight;
    int L1 = 0, L2 = 1;
    std::vector<Rational> init;
    std::optional<Rational> a;
    if (o.name == "bbb") {
        a = parse_a(o).value_or(Rational(0));
        r.params["a"] = a->to_string();
        kernel = wz::bbb_kernel(*a, ctx);
        init = {q * (Rational(1) - q) * (Rational(1) - q)};
    } else if (o.name == "zeta3") {
        if (o.a) throw PreconditionError("--a is not accepted for the zeta3 kernel");
        kernel = wz::zeta3_kernel(ctx);
        L1 = 1;
        L2 = 3;
        init = {Rational(1), Rational(0)};
        if (!o.plain_mate) weight = wz::zeta3_mate_weight(ctx);
    } else {
        throw PreconditionError("--kernel must be bbb or zeta3");
    }
    if (o.L1) L1 = *o.L1;
    if (o.L2) L2 = *o.L2;
    if (o.init) init = parse_list("--init", *o.init);
    r.params["L1"] = L1;
    r.params["L2"] = L2;
    r.params["init"] = strings(init);
    r.params["mate_weight"] = weight ? "1/(y(1-q^2x^2y))" : "1";

    const wz::StepSolution sol = wz::step_solve(*kernel, L1, L2, init, ctx, o.nmax, weight);
    for (std::size_t n = 0; n < sol.a.size(); ++n) {
        Json t;
        t["n"] = n;
        t["a"] = joined(sol.a[n]);
        t["b"] = n < sol.b.size() ? joined(sol.b[n]) : "";
        r.terms.push_back(t);
    }
    bool ok = true;
    if (!sol.complete) {
        Json row;
        row["check"] = "uniqueness";
        row["value"] = "underdetermined at n=" + std::to_string(sol.stopped_at);
        row["basis"] = Json::array();
        for (const auto& v : sol.basis) row["basis"].push_back(strings(v));
        row["pass"] = false;
        r.residuals.push_back(row);
        r.ok = false;
        return;
    }

    const wz::MWZPair pair = wz::to_pair(*kernel, sol, L1, L2, weight);
    const int K = o.grid;
    r.residuals.push_back(residual_json("telescope", wz::telescope_residual(pair, o.nmax, K, ctx), o.nmax, K, ok));

    if (o.name == "bbb" && L1 == 0) {
        // The solution is a multiple of the closed recurrence: a(n) A(0) = A(n) a(0).
        const auto ref = wz::bbb_pair(*a, ctx, o.nmax + 1);
        const Rational& A0 = ref.p_coeffs[0][0];
        Rational worst = 0;
        for (std::size_t n = 0; n < sol.a.size(); ++n)
            worst = max(worst, (sol.a[n][0] * A0 - ref.p_coeffs[n][0] * init[0]).abs());
        r.residuals.push_back(exact_row("matches-bbb-pair", worst, ok));
    }
    if (o.name == "zeta3" && L1 == 1) {
        Rational worst = 0;
        for (std::size_t n = 0; n < sol.a.size(); ++n) {
            const auto [u0, u1] = wz::zeta3_closed_form({1, 0}, static_cast<int>(n), ctx);
            const auto [v0, v1] = wz::zeta3_closed_form({0, 1}, static_cast<int>(n), ctx);
            worst = max(worst, (sol.a[n][0] - init[0] * u0 - init[1] * v0).abs());
            worst = max(worst, (sol.a[n][1] - init[0] * u1 - init[1] * v1).abs());
        }
        r.residuals.push_back(exact_row("matches-closed-form", worst, ok));
    }
    r.ok = ok;
}

}  // namespace qzeta::cli
