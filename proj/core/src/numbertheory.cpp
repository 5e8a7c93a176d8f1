#include "arithq/numbertheory.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace arithq {

namespace {

Int powmod(Int base, Int exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

bool miller_rabin_witness(const Int& n, const Int& a) {
    // returns true if a proves n composite
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    Int x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

// Strong Lucas probable-prime test with Selfridge's parameter choice,
// the Lucas half of Baillie-PSW.
bool strong_lucas_prp(const Int& n) {
    long d_abs = 5;
    int sign = 1;
    Int D;
    while (true) {
        D = sign * d_abs;
        int j = mpz_jacobi(D.get_mpz_t(), n.get_mpz_t());
        if (j == -1) break;
        if (j == 0) return false;
        d_abs += 2;
        sign = -sign;
    }
    Int P = 1;
    Int Q = (1 - D) / 4;

    Int delta = n + 1;
    unsigned long s = mpz_scan1(delta.get_mpz_t(), 0);
    Int d = delta >> s;

    // compute U_d, V_d mod n by binary ladder
    Int U = 1, V = P, Qk = Q % n;
    if (Qk < 0) Qk += n;
    long bits = mpz_sizeinbase(d.get_mpz_t(), 2);
    for (long i = bits - 2; i >= 0; --i) {
        // double: U_{2k} = U V, V_{2k} = V^2 - 2 Q^k
        Int U2 = U * V % n;
        Int V2 = (V * V - 2 * Qk) % n;
        Qk = Qk * Qk % n;
        U = U2;
        V = V2;
        if (mpz_tstbit(d.get_mpz_t(), static_cast<unsigned long>(i))) {
            // add one: U_{k+1} = (P U + V)/2, V_{k+1} = (D U + P V)/2
            Int Un = U + V;           // P = 1
            Int Vn = D * U + V;
            if (mpz_odd_p(Un.get_mpz_t())) Un += n;
            if (mpz_odd_p(Vn.get_mpz_t())) Vn += n;
            U = (Un / 2) % n;
            V = (Vn / 2) % n;
            Qk = Qk * Q % n;
        }
        if (U < 0) U += n;
        if (V < 0) V += n;
        if (Qk < 0) Qk += n;
    }
    if (U == 0 || V == 0) return true;
    for (unsigned long r = 1; r < s; ++r) {
        V = (V * V - 2 * Qk) % n;
        if (V < 0) V += n;
        if (V == 0) return true;
        Qk = Qk * Qk % n;
    }
    return false;
}

const std::uint64_t kTrialBound = 10000;

void factor_rec(const Int& n, std::vector<Int>& out);

// Brent's cycle variant of Pollard rho; n must be odd composite > 1.
void split_composite(const Int& n, std::vector<Int>& out) {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x2545f4914f6cdd1dULL);
    Int g = 1;
    while (true) {
        Int y = rng.get_z_range(n - 3) + 2;
        Int c = rng.get_z_range(n - 1) + 1;
        Int x = y, ys = y, q = 1;
        g = 1;
        unsigned long r = 1;
        const unsigned long m = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    Int diff = x - y;
                    if (diff < 0) diff = -diff;
                    q = q * diff % n;
                }
                g = gcd_int(q, n);
                k += m;
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                Int diff = x - ys;
                if (diff < 0) diff = -diff;
                g = gcd_int(diff, n);
            }
        }
        if (g != n) break;
    }
    factor_rec(g, out);
    factor_rec(n / g, out);
}

void factor_rec(const Int& n, std::vector<Int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    // perfect powers first so rho always sees a non-power composite
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                for (unsigned long i = 0; i < k; ++i) factor_rec(root, out);
                return;
            }
        }
    }
    split_composite(n, out);
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const unsigned small[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                     23, 29, 31, 37, 41, 43, 47, 53};
    for (unsigned p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int two_to_64 = Int(1) << 64;
    if (n < two_to_64) {
        // Sinclair/Jaeschke witness set, deterministic below 2^64
        static const unsigned long ws[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
        for (unsigned long w : ws) {
            if (miller_rabin_witness(n, Int(w))) return false;
        }
        return true;
    }
    // Baillie-PSW (probabilistic, no known counterexample)
    if (miller_rabin_witness(n, Int(2))) return false;
    return strong_lucas_prp(n);
}

std::vector<PrimePower> factor(const Int& n) {
    if (n < 1) throw std::invalid_argument("factor: argument must be >= 1");
    std::vector<Int> primes;
    Int m = n;
    if (mpz_fits_ulong_p(m.get_mpz_t())) {
        // machine-word trial division covers everything up to kTrialBound^2
        std::uint64_t v = m.get_ui();
        for (std::uint64_t p = 2; p <= kTrialBound && v > 1; p == 2 ? p = 3 : p += 2) {
            if (p * p > v) break;
            while (v % p == 0) {
                primes.emplace_back(static_cast<unsigned long>(p));
                v /= p;
            }
        }
        if (v > 1 && v <= kTrialBound * kTrialBound) {
            primes.emplace_back(static_cast<unsigned long>(v));
            v = 1;
        }
        m = Int(static_cast<unsigned long>(v));
    } else {
        for (std::uint64_t p = 2; p <= kTrialBound && m > 1; p == 2 ? p = 3 : p += 2) {
            while (mpz_fdiv_ui(m.get_mpz_t(), static_cast<unsigned long>(p)) == 0) {
                primes.emplace_back(static_cast<unsigned long>(p));
                m /= static_cast<unsigned long>(p);
            }
            if (Int(p) * Int(p) > m) break;
        }
    }
    if (m > 1) factor_rec(m, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<PrimePower> out;
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        out.push_back({primes[i], static_cast<unsigned>(j - i)});
        i = j;
    }
    return out;
}

std::vector<Int> prime_divisors(const Int& n) {
    std::vector<Int> out;
    for (const auto& pp : factor(n)) out.push_back(pp.prime);
    return out;
}

bool is_prime_power(const Int& n) {
    if (n < 2) return false;
    return factor(n).size() == 1;
}

Congruence crt(const std::vector<Congruence>& parts) {
    Int r = 0, m = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const Int& mi = parts[i].modulus;
        if (mi < 1) throw std::invalid_argument("crt: modulus must be >= 1");
        Int g = gcd_int(m, mi);
        if (g != 1) {
            std::ostringstream os;
            os << "crt: moduli not coprime, offending pair (index " << i
               << ", modulus " << mi.get_str() << ") shares factor "
               << g.get_str() << " with the combined modulus " << m.get_str();
            throw std::invalid_argument(os.str());
        }
        // solve x = r (mod m), x = parts[i].remainder (mod mi)
        Int inv;
        if (mi == 1) continue;
        if (mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), mi.get_mpz_t()) == 0)
            throw std::logic_error("crt: inverse must exist for coprime moduli");
        Int t = ((parts[i].remainder - r) % mi * inv) % mi;
        if (t < 0) t += mi;
        r += m * t;
        m *= mi;
    }
    r %= m;
    if (r < 0) r += m;
    return {r, m};
}

Rat zeta_upper_bound(unsigned s, unsigned terms) {
    if (s < 4 || s % 2 != 0)
        throw std::invalid_argument("zeta_upper_bound: s must be even and >= 4");
    if (terms < 1) throw std::invalid_argument("zeta_upper_bound: terms must be >= 1");
    Rat sum = 0;
    for (unsigned n = 1; n <= terms; ++n) {
        sum += make_rat(1, pow_int(Int(n), s));
    }
    // integral tail: \int_N^\infty x^{-s} dx = N^{1-s}/(s-1)
    sum += make_rat(1, pow_int(Int(terms), s - 1) * Int(s - 1));
    return sum;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    const std::uint64_t segment = 1 << 16;
    std::uint64_t root = 2;
    while (root * root <= limit) ++root;
    // base primes up to sqrt(limit)
    std::vector<char> base(root + 1, 1);
    std::vector<std::uint64_t> base_primes;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (!base[i]) continue;
        base_primes.push_back(i);
        if (i <= limit) primes.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) base[j] = 0;
    }
    std::vector<char> seg(segment);
    for (std::uint64_t lo = root + 1; lo <= limit; lo += segment) {
        std::uint64_t hi = std::min(lo + segment - 1, limit);
        std::fill(seg.begin(), seg.end(), 1);
        for (std::uint64_t p : base_primes) {
            std::uint64_t start = ((lo + p - 1) / p) * p;
            for (std::uint64_t j = start; j <= hi; j += p) seg[j - lo] = 0;
        }
        for (std::uint64_t i = lo; i <= hi; ++i)
            if (seg[i - lo]) primes.push_back(i);
    }
    return primes;
}

PrimeIterator::PrimeIterator() : small_(primes_up_to(1000000)), cursor_(1000000) {}

Int PrimeIterator::next() {
    if (idx_ < small_.size()) return Int(small_[idx_++]);
    while (true) {
        cursor_ += 1;
        if (is_prime(cursor_)) return cursor_;
    }
}

} // namespace arithq
