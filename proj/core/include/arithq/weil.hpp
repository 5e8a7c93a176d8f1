#ifndef ARITHQ_WEIL_HPP
#define ARITHQ_WEIL_HPP

#include "arithq/polynomial.hpp"

#include <string>

namespace arithq {

/// Monic integer polynomial tested against (q, weight n): is every complex
/// root of absolute value q^{n/2}?
struct WeilCandidate {
    IntPoly poly;   // monic
    Int q;          // prime power >= 2
    unsigned weight = 1;
};

struct WeilVerdict {
    bool is_weil = false;
    bool is_integral = false;
    // exact real-root factors removed before the trace substitution
    unsigned stripped_quadratic = 0;  // powers of (x^2 - q^n)
    unsigned stripped_minus = 0;      // powers of (x - q^{n/2}), integral case only
    unsigned stripped_plus = 0;       // powers of (x + q^{n/2}), integral case only
    std::string certificate;          // reproducible description of the Sturm counts
};

/// True iff every coefficient of the monic rational polynomial is an
/// integer. Throws on non-monic input.
bool is_integral(const RatPoly& poly);

/// Exact closed-form test for x^2 + a x + b against (q, n). Serves as the
/// independent oracle for check_weil on quadratics.
bool quadratic_weil_exact(const Int& a, const Int& b, const Int& q, unsigned n);

/// Decision procedure:
///   1. strip exact powers of (x^2 - q^n) and, when q^{n/2} is an integer,
///      of (x -+ q^{n/2});
///   2. the remainder must satisfy x^d f(q^n/x) = q^{nd/2} f(x);
///   3. substitute beta = alpha + q^n/alpha to get the half-degree trace
///      polynomial h;
///   4. accept iff h has all roots real and none with beta^2 >= 4 q^n
///      (Sturm counts, boundary handled exactly).
/// Throws std::invalid_argument on non-monic polynomial or q not a prime
/// power >= 2.
WeilVerdict check_weil(const WeilCandidate& c);

/// The trace polynomial h with x^m h(x + Q/x) = f(x), for f monic
/// self-reciprocal of degree 2m. Exposed for tests; throws if f is not in
/// the self-reciprocal span.
IntPoly trace_polynomial(const IntPoly& f, const Int& Q);

} // namespace arithq

#endif
