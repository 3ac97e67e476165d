#include "qzeta/qcore.hpp"

#include <string>

#include "qzeta/errors.hpp"

namespace qzeta {

Rational q_number(long long n, const QContext& ctx) {
    if (n < 1) throw PreconditionError("q_number: n must be >= 1, got " + std::to_string(n));
    const Rational& q = ctx.q();
    return (Rational(1) - q.pow(n)) / (Rational(1) - q);
}

Rational q_pochhammer(const Rational& x, long long n, const QContext& ctx) {
    if (n < 0) throw PreconditionError("q_pochhammer: n must be >= 0");
    Rational prod = 1;
    Rational xq = x;
    for (long long j = 0; j < n; ++j) {
        prod *= Rational(1) - xq;
        xq *= ctx.q();
    }
    return prod;
}

Rational q_binomial(long long n, long long k, const QContext& ctx) {
    if (k < 0 || n < 0 || k > n)
        throw PreconditionError("q_binomial: requires n >= k >= 0, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
    if (k > n - k) k = n - k;
    // prod_{j=1}^{k} (1 - q^{n-k+j}) / (1 - q^j)
    const Rational& q = ctx.q();
    Rational num = 1, den = 1;
    for (long long j = 1; j <= k; ++j) {
        num *= Rational(1) - q.pow(n - k + j);
        den *= Rational(1) - q.pow(j);
    }
    return num / den;
}

Rational poch_pair(const Rational& c, long long n, const QContext& ctx) {
    if (n < 0) throw PreconditionError("poch_pair: n must be >= 0");
    const Rational c2 = c * c;
    const Rational& q = ctx.q();
    Rational prod = 1;
    Rational qj = 1;  // q^j
    for (long long j = 0; j < n; ++j) {
        const Rational u = Rational(1) - qj * q;
        prod *= u * u - c2 * qj * qj;
        qj *= q;
    }
    return prod;
}

SeriesInA poch_pair(const SeriesInA& c_squared, long long n, const QContext& ctx) {
    if (n < 0) throw PreconditionError("poch_pair: n must be >= 0");
    const std::size_t K = c_squared.order();
    const Rational& q = ctx.q();
    SeriesInA prod = SeriesInA::constant(K, 1);
    Rational qj = 1;
    for (long long j = 0; j < n; ++j) {
        const Rational u = Rational(1) - qj * q;
        prod *= SeriesInA::constant(K, u * u) - c_squared * (qj * qj);
        qj *= q;
    }
    return prod;
}

}  // namespace qzeta
