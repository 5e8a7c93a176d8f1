#ifndef ARITHQ_POLYNOMIAL_HPP
#define ARITHQ_POLYNOMIAL_HPP

#include "arithq/integer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arithq {

/// Dense univariate polynomial, coefficients lowest degree first. The
/// coefficient vector never carries trailing zeros (zero polynomial is an
/// empty vector).
template <class C>
struct Poly {
    std::vector<C> c;

    Poly() = default;
    explicit Poly(std::vector<C> coeffs) : c(std::move(coeffs)) { normalize(); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const C& leading() const { return c.back(); }
    C coeff(std::size_t i) const { return i < c.size() ? c[i] : C(0); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    bool operator==(const Poly& o) const { return c == o.c; }
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

IntPoly int_poly(std::vector<long> coeffs);
RatPoly to_rat(const IntPoly& p);

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly scale(const IntPoly& a, const Int& k);
Int eval(const IntPoly& p, const Int& x);
Rat eval(const IntPoly& p, const Rat& x);

RatPoly add(const RatPoly& a, const RatPoly& b);
RatPoly sub(const RatPoly& a, const RatPoly& b);
RatPoly mul(const RatPoly& a, const RatPoly& b);
Rat eval(const RatPoly& p, const Rat& x);
RatPoly derivative(const RatPoly& p);
IntPoly derivative(const IntPoly& p);

/// Quotient/remainder in Q[x]; divisor must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// Monic gcd in Q[x].
RatPoly gcd_poly(const RatPoly& a, const RatPoly& b);

/// p / gcd(p, p'), monic.
RatPoly squarefree_part(const RatPoly& p);

/// Exact division by a monic divisor in Z[x]; no value if not divisible.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& monic_divisor);

/// Endpoint of a root-counting interval: a rational or +/-infinity.
struct Endpoint {
    enum Kind { NegInf, Finite, PosInf } kind = Finite;
    Rat value;

    static Endpoint neg_inf() { return {NegInf, Rat(0)}; }
    static Endpoint pos_inf() { return {PosInf, Rat(0)}; }
    static Endpoint at(Rat v) { return {Finite, std::move(v)}; }
};

/// Number of distinct real roots of p in the half-open interval (lo, hi],
/// by a Sturm chain on the square-free part. Throws on the zero
/// polynomial. The half-open convention comes from evaluating sign
/// variations with zeros skipped, so counts compose: (a,b] + (b,c] = (a,c].
int sturm_count(const RatPoly& p, const Endpoint& lo, const Endpoint& hi);
int sturm_count(const IntPoly& p, const Endpoint& lo, const Endpoint& hi);

std::string to_string(const IntPoly& p, const std::string& var = "x");

} // namespace arithq

#endif
