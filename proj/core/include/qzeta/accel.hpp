#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qzeta/context.hpp"
#include "qzeta/summation.hpp"

namespace qzeta::accel {

// Accelerated series for q-zeta values, for 0 < q < 1. Every series is a
// term stream so both its value and its convergence speed can be measured.
// Tails use TailRule::RapidDecay: the general terms carry q^{cn^2}.

/// Which form of a long numerator to evaluate. The uncorrected forms carry
/// index-shift errors; they do not sum to the target value and exist so the
/// size of that error can be reported.
enum class Transcription { Corrected, Uncorrected };

enum class Zeta3Variant { V1, V2 };

// --- Generating function for zeta[2k+2] -----------------------------------

/// sum_{n>=1} q^{n^2} (1+2q^n) / ([2n n]_q ([n]^2 - a^2 q^{2n}))
///   * prod_{m<n} ([m]^2 - a^2 (1+q^m)^2) / ([m]^2 - a^2 q^{2m}),   |a| < 1.
TermSource bbb_rhs_terms(const Rational& a, const QContext& ctx);
SumResult bbb_rhs(const Rational& a, const QContext& ctx);

/// The same series expanded in a^2 up to order K.
SeriesSum bbb_rhs_series(std::size_t K, const QContext& ctx);

/// Numerator p(n) of the cubically decaying companion series:
///   (3q^{4n-1}+6q^{3n-1}-q^{2n}+8q^{2n-1}-4q^n+8q^{n-1}+1)[n]^3 - 8q^{n-1}[n]^2
///   - a^2 q^{4n-1} ((3q^{2n}+4q^n-q+3)[n] - 2).
/// The uncorrected form has -8q^n[n]^2 in the second summand.
Rational t2_numerator(long long n, const Rational& a, const QContext& ctx,
                      Transcription form = Transcription::Corrected);

/// sum_{n>=1} q^{3n^2-3n+1} p(n) / ([2n n] [n] ([n]^2-a^2q^{2n}) ([2n]^2-a^2q^{4n}))
///   * prod_{m<n} ([m]^2 - a^2 (q^m+1)^2) / ([n+m]^2 - a^2 q^{2(n+m)}).
Rational t2_term(long long n, const Rational& a, const QContext& ctx,
                 Transcription form = Transcription::Corrected);
TermSource t2_rhs_terms(const Rational& a, const QContext& ctx,
                        Transcription form = Transcription::Corrected);
SumResult t2_rhs(const Rational& a, const QContext& ctx, Transcription form = Transcription::Corrected);

// --- zeta[3] ----------------------------------------------------------------

/// Bracketed numerator of the alternating zeta[3] series. V1 sums to
/// sum q^{2n}/[n]^3, V2 to sum q^n/[n]^3.
Rational zeta3_numerator(Zeta3Variant v, long long n, const QContext& ctx,
                         Transcription form = Transcription::Corrected);
/// (-1)^{n-1} q^{n(3n-1)/2} / ([2n n] [n]^3 (1+q^n)) * numerator.
Rational zeta3_accel_term(Zeta3Variant v, long long n, const QContext& ctx,
                          Transcription form = Transcription::Corrected);
TermSource zeta3_accel_terms(Zeta3Variant v, const QContext& ctx,
                             Transcription form = Transcription::Corrected);
SumResult zeta3_accel(Zeta3Variant v, const QContext& ctx, Transcription form = Transcription::Corrected);

/// Numerator of the q^{7n(n-1)/2} series for zeta[3]:
///   [2n-1]^2 q^{4n-1} (1+x+2x^2+x^3) + [3n-1][3n] q^{2n-1} (1+x)^2
///   - (n-1) [2n-1][2n] R(x) / q^2,                                  x = q^n,
///   R(x) = x^8 + x^6 + q (x^6 + 3x^5 + x^4 - x^2) - q^2 (x^3 + 2x^2 + 2x + 1).
Rational amdeberhan_numerator(long long n, const QContext& ctx, Transcription form = Transcription::Corrected);
/// (-1)^{n-1} q^{7n(n-1)/2+1} p(n) / ([2n n][3n n][n]^3 [2n-1]^2 (1+q^n)^2).
Rational amdeberhan_term(long long n, const QContext& ctx, Transcription form = Transcription::Corrected);
TermSource zeta3_amdeberhan_terms(const QContext& ctx, Transcription form = Transcription::Corrected);
SumResult zeta3_amdeberhan(const QContext& ctx, Transcription form = Transcription::Corrected);

// --- Series identifiers -------------------------------------------------------

enum class SeriesKind {
    ZetaNaive,      // zeta[s], needs s
    GenfuncLhs,     // sum q^n / ([n]^2 - a^2 q^{2n}), needs a
    Zeta3AltNaive,  // sum q^n / [n]^3
    BbbT1,          // needs a
    BbbT2,          // needs a
    Z3V1,
    Z3V2,
    Z3Amdeberhan,
};

/// Names any series the library can sum. `a` is present exactly for
/// GenfuncLhs, BbbT1 and BbbT2 (with |a| < 1); `s` >= 2 only for ZetaNaive.
struct SeriesId {
    SeriesKind kind = SeriesKind::ZetaNaive;
    std::optional<Rational> a;
    int s = 0;

    static SeriesId zeta(int s) { return {SeriesKind::ZetaNaive, std::nullopt, s}; }
    static SeriesId genfunc(Rational a) { return {SeriesKind::GenfuncLhs, std::move(a), 0}; }
    static SeriesId zeta3_alt() { return {SeriesKind::Zeta3AltNaive, std::nullopt, 0}; }
    static SeriesId bbb_t1(Rational a) { return {SeriesKind::BbbT1, std::move(a), 0}; }
    static SeriesId bbb_t2(Rational a) { return {SeriesKind::BbbT2, std::move(a), 0}; }
    static SeriesId z3(Zeta3Variant v) { return {v == Zeta3Variant::V1 ? SeriesKind::Z3V1 : SeriesKind::Z3V2, std::nullopt, 0}; }
    static SeriesId amdeberhan() { return {SeriesKind::Z3Amdeberhan, std::nullopt, 0}; }

    bool accelerated() const noexcept;
    /// Throws PreconditionError when the parameter rules above are broken.
    void validate() const;
    /// Stable identifier, e.g. "bbb-t1[a=1/3]" or "zeta-q[s=3]".
    std::string name() const;
};

/// The definitional series an accelerated one must agree with.
SeriesId naive_counterpart(const SeriesId& accelerated);

TermSource term_source(const SeriesId& id, const QContext& ctx);
SumResult sum_series(const SeriesId& id, const QContext& ctx);

/// Smallest N whose tail bound after N terms is below eps.
int terms_to_tolerance(const SeriesId& id, const Rational& eps, const QContext& ctx);

}  // namespace qzeta::accel
