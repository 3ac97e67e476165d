#include "qzeta/context.hpp"

#include <string>

#include "qzeta/errors.hpp"

namespace qzeta {

const char* to_string(Regime r) noexcept { return r == Regime::Inside ? "|q|<1" : "|q|>1"; }

QContext::QContext(Rational q, int target_digits, int max_terms, unsigned working_bits)
    : q_(std::move(q)),
      regime_(Regime::Inside),
      target_digits_(target_digits),
      max_terms_(max_terms),
      working_bits_(working_bits) {
    if (q_.is_zero()) throw PreconditionError("q must be nonzero");
    if (q_.abs() == Rational(1)) throw PreconditionError("|q| must differ from 1, got q=" + q_.to_string());
    if (target_digits_ < 1) throw PreconditionError("target_digits must be >= 1");
    if (max_terms_ < 1) throw PreconditionError("max_terms must be >= 1");
    regime_ = q_.abs() < Rational(1) ? Regime::Inside : Regime::Outside;
}

void QContext::require_unit_interval(const char* who) const {
    if (!(q_.sign() > 0 && q_ < Rational(1)))
        throw PreconditionError(std::string(who) + ": requires 0 < q < 1, got q=" + q_.to_string());
}

void QContext::require_outside(const char* who) const {
    if (regime_ != Regime::Outside)
        throw PreconditionError(std::string(who) + ": requires |q| > 1, got q=" + q_.to_string());
}

}  // namespace qzeta
