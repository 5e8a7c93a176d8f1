#ifndef ARITHQ_NUMBERTHEORY_HPP
#define ARITHQ_NUMBERTHEORY_HPP

#include "arithq/integer.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace arithq {

/// Primality test, deterministic for all inputs below 2^64 (fixed
/// Miller-Rabin witness set), Baillie-PSW beyond that. Returns false for
/// n < 2.
bool is_prime(const Int& n);

struct PrimePower {
    Int prime;
    unsigned exponent;
    bool operator==(const PrimePower&) const = default;
};

/// Prime factorisation with primes ascending. Trial division up to 10^4,
/// then Pollard rho (Brent variant) on what remains. Throws on n < 1.
std::vector<PrimePower> factor(const Int& n);

/// Distinct prime divisors, ascending.
std::vector<Int> prime_divisors(const Int& n);

/// True iff n = p^k for a prime p and k >= 1.
bool is_prime_power(const Int& n);

struct Congruence {
    Int remainder;
    Int modulus;
};

/// Chinese remainder theorem for pairwise coprime moduli. Returns the
/// combined (remainder, modulus) with 0 <= remainder < modulus. Throws
/// std::invalid_argument naming the offending pair if two moduli share a
/// factor. An empty list yields (0, 1).
Congruence crt(const std::vector<Congruence>& parts);

/// Certified upper bound for zeta(s), s >= 4 even:
///     sum_{n<=N} n^{-s}  +  N^{1-s}/(s-1).
/// The tail term dominates the integral test remainder, so the result is
/// always >= zeta(s).
Rat zeta_upper_bound(unsigned s, unsigned terms);

/// Odd primes <= limit, via a segmented sieve. 2 is included.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Iterates primes in ascending order: sieve-backed below 10^6, Miller-
/// Rabin stepping beyond.
class PrimeIterator {
public:
    PrimeIterator();
    Int next();

private:
    std::vector<std::uint64_t> small_;
    std::size_t idx_ = 0;
    Int cursor_;
};

} // namespace arithq

#endif
