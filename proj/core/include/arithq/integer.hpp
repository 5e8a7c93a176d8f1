#ifndef ARITHQ_INTEGER_HPP
#define ARITHQ_INTEGER_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace arithq {

// Arbitrary-precision integers and rationals, GMP-backed. mpq_class keeps
// the canonical form we rely on everywhere: gcd(num, den) = 1, den > 0.
using Int = mpz_class;
using Rat = mpq_class;

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Exact square root if `n` is a perfect square, otherwise no value.
inline bool perfect_sqrt(const Int& n, Int& root) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline int sign_of(const Rat& r) { return sgn(r); }
inline int sign_of(const Int& n) { return sgn(n); }

/// Truncated decimal expansion, sign + `digits` digits after the point.
/// Used for the human-readable field next to exact "num/den" output; the
/// expansion is exact long division, so it is bit-stable across runs.
inline std::string rat_decimal(const Rat& r, unsigned digits = 12) {
    Int num = r.get_num(), den = r.get_den();
    std::string out;
    if (num < 0) { out += '-'; num = -num; }
    Int ip = num / den;
    Int rem = num - ip * den;
    out += ip.get_str();
    out += '.';
    for (unsigned i = 0; i < digits; ++i) {
        rem *= 10;
        Int d = rem / den;
        rem -= d * den;
        out += static_cast<char>('0' + d.get_ui());
    }
    return out;
}

} // namespace arithq

#endif
