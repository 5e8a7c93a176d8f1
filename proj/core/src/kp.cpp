#include "arithq/kp.hpp"

#include "arithq/numbertheory.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace arithq {

Int surj_count(unsigned g, const Int& k) {
    if (g < 1 || k < 1) throw std::invalid_argument("surj_count: need g, k >= 1");
    Rat total(pow_int(k, 2 * g));
    for (const Int& r : prime_divisors(k)) {
        Int rg = pow_int(r, 2 * g);
        total *= make_rat(rg - 1, rg);
    }
    if (total.get_den() != 1) throw std::logic_error("surj_count: non-integral result");
    return total.get_num();
}

Rat kp_dimension(unsigned g, const Int& q) {
    if (g < 2) throw std::invalid_argument("kp_dimension: genus must be >= 2");
    if (q < 3 || q % 2 == 0 || !is_prime(q))
        throw std::invalid_argument("kp_dimension: q must be an odd prime");
    return make_rat(Int(2 * g - 1) * (q - 1), Int(2));
}

Int aut_dim_bound(const Int& d) {
    if (d < 1) throw std::invalid_argument("aut_dim_bound: d must be >= 1");
    return d * (2 * d + 1) + 1;
}

Int trichotomy_min_degree(const Int& d) {
    if (d < 1) throw std::invalid_argument("trichotomy_min_degree: d must be >= 1");
    // least r with d(2d+1) < r d(d+1)/2
    Int lhs = d * (2 * d + 1);
    Int r = 1;
    while (r * d * (d + 1) <= 2 * lhs) ++r;
    return r;
}

namespace {

std::set<Int> odd_prime_divisors(const Int& n) {
    std::set<Int> out;
    for (const Int& p : prime_divisors(n))
        if (p != 2) out.insert(p);
    return out;
}

// shared divisibility condition: 4 does not divide q-1 and q-1 has no odd
// prime factor in `bad`; reports a witness prime on failure
ConditionItem divisibility_item(const Int& q, const std::set<Int>& bad, const std::string& name) {
    ConditionItem item;
    item.name = name;
    Int qm1 = q - 1;
    if (qm1 % 4 == 0) {
        item.pass = false;
        item.note = "4 divides q-1";
        return item;
    }
    for (const Int& r : odd_prime_divisors(qm1)) {
        if (bad.count(r)) {
            item.pass = false;
            item.note = "shared odd prime " + r.get_str();
            return item;
        }
    }
    item.pass = true;
    return item;
}

ConditionItem inequality_item(Rat lhs, Rat rhs, const std::string& name) {
    ConditionItem item;
    item.name = name;
    item.is_inequality = true;
    item.lhs = std::move(lhs);
    item.rhs = std::move(rhs);
    item.pass = item.lhs < item.rhs;
    if (!item.pass) {
        // one-sided certification: a fail this close to the certified
        // over-estimate of zeta may be an artifact of the bound
        Rat gap = item.lhs - item.rhs;
        item.marginal = gap * 100 <= item.rhs;
        if (item.marginal) item.note = "within 1% of the threshold";
    }
    return item;
}

Int resolve_n_v(const KPQuery& query) {
    if (query.n_v_override) {
        if (*query.n_v_override < 1)
            throw std::invalid_argument("n_v override must be >= 1");
        return *query.n_v_override;
    }
    return n_v(query.place);
}

} // namespace

ConditionReport check_conditions(const Int& q, const KPQuery& query) {
    if (q < 3 || q % 2 == 0 || !is_prime(q))
        throw std::invalid_argument("check_conditions: q must be an odd prime");
    unsigned g = query.genus;
    if (g < 2) throw std::invalid_argument("check_conditions: genus must be >= 2");

    ConditionReport rep;
    rep.q = q;
    rep.k = (q - 1) / 2;
    Int qv = residue_cardinality(query.place);

    // q_v(q_v+1)(q_v^3-1) and q_v prod_{i<=3}(q_v^i-1) must carry the same
    // odd primes; fail loudly rather than guess which product governs
    std::set<Int> bad3_short = odd_prime_divisors(qv * (qv + 1) * (pow_int(qv, 3) - 1));
    Int long_product = qv;
    for (unsigned i = 1; i <= 3; ++i) long_product *= pow_int(qv, i) - 1;
    std::set<Int> bad3_long = odd_prime_divisors(long_product);
    if (bad3_short != bad3_long)
        throw std::logic_error("check_conditions: divisor sets of the two degree-3 products differ");

    Rat zeta = zeta_upper_bound(2 * g, kZetaTerms);
    Rat denom(kp_dimension(g, q) + 1);  // (g-1/2)(q-1) + 1
    Rat qm1_pow(pow_int(q - 1, g));

    switch (query.variant) {
        case Variant::New: {
            Int nv = resolve_n_v(query);
            rep.items.push_back(divisibility_item(
                q, bad3_long, "q-1 free of 4 and of odd primes of qv*prod(qv^i-1, i<=3)"));
            rep.items.push_back(inequality_item(Rat(nv) * zeta * Rat(pow_int(Int(2), g)) / qm1_pow,
                                                1 / denom,
                                                "n_v zeta(2g) 2^g / (q-1)^g < 1/(d_q+1)"));
            break;
        }
        case Variant::Original: {
            ConditionItem flags;
            flags.name = "place self-conjugate, unramified over Q, residue char != 2";
            flags.pass = query.place.self_conjugate && query.friendly;
            if (!flags.pass) flags.note = "caller-supplied place flags not granted";
            rep.items.push_back(flags);

            Int big = qv;
            for (unsigned i = 1; i <= 7; ++i) big *= pow_int(qv, i) - 1;
            rep.items.push_back(divisibility_item(
                q, odd_prime_divisors(big), "q-1 free of 4 and of odd primes of qv*prod(qv^i-1, i<=7)"));
            rep.items.push_back(inequality_item(Rat(4) * zeta * Rat(pow_int(Int(2), g)) / qm1_pow,
                                                1 / denom,
                                                "4 zeta(2g) 2^g / (q-1)^g < 1/(d_q+1)"));
            ConditionItem gm;
            gm.name = "good model over the ring of integers";
            gm.pass = query.good_model;
            if (!gm.pass) gm.note = "externally supplied flag not granted";
            rep.items.push_back(gm);
            break;
        }
        case Variant::Prop: {
            Int nv = resolve_n_v(query);
            rep.items.push_back(divisibility_item(
                q, bad3_short, "q-1 free of 4 and of odd primes of qv(qv+1)(qv^3-1)"));
            ConditionItem size;
            size.name = "q-1 >= 9 n_v";
            size.is_inequality = true;
            size.lhs = Rat(9 * nv);
            size.rhs = Rat(q - 1);
            size.pass = q - 1 >= 9 * nv;
            rep.items.push_back(size);
            break;
        }
    }

    rep.overall = std::all_of(rep.items.begin(), rep.items.end(),
                              [](const ConditionItem& i) { return i.pass; });
    return rep;
}

Int find_min_q(const KPQuery& query, const Int& ceiling) {
    PrimeIterator primes;
    Int last = 0;
    while (true) {
        Int q = primes.next();
        if (q == 2) continue;
        if (q > ceiling) {
            std::ostringstream os;
            os << "find_min_q: search ceiling " << ceiling.get_str()
               << " exhausted, last prime examined " << last.get_str();
            throw std::runtime_error(os.str());
        }
        last = q;
        if (check_conditions(q, query).overall) return q;
    }
}

Rat density_lower_bound(const Int& q) {
    if (q < 3 || q % 2 == 0 || !is_prime(q))
        throw std::invalid_argument("density_lower_bound: q must be an odd prime");
    Rat prod(1);
    for (const Int& r : prime_divisors(q - 1)) {
        if (r == 2) continue;
        Rat term = 1 - make_rat(Int(18), r - 1);
        if (term < 0) term = 0;
        prod *= term;
    }
    return prod;
}

Int linnik_q(const Int& r0, const Int& ceiling) {
    if (!is_prime(r0)) throw std::invalid_argument("linnik_q: r0 must be prime");
    std::vector<Congruence> parts;
    parts.push_back({Int(3), Int(4)});
    for (std::uint64_t r : primes_up_to(r0.get_ui() > 0 ? r0.get_ui() - 1 : 0))
        if (r % 2 == 1) parts.push_back({Int(2), Int(static_cast<long>(r))});
    Congruence cls = crt(parts);
    Int candidate = cls.remainder == 0 ? cls.modulus : cls.remainder;
    while (candidate <= ceiling) {
        if (is_prime(candidate)) return candidate;
        candidate += cls.modulus;
    }
    std::ostringstream os;
    os << "linnik_q: no prime found below " << ceiling.get_str()
       << " in the class " << cls.remainder.get_str() << " mod " << cls.modulus.get_str();
    throw std::runtime_error(os.str());
}

SizeBound size_v_upper_bound(unsigned g, const Int& k, const Int& n_v) {
    if (g < 2 || k < 1) throw std::invalid_argument("size_v_upper_bound: need g >= 2, k >= 1");
    if (n_v < 0) throw std::invalid_argument("size_v_upper_bound: n_v must be >= 0");
    SizeBound out;
    out.bound = zeta_upper_bound(2 * g, kZetaTerms) * Rat(n_v) / Rat(pow_int(k, g));
    out.target = make_rat(Int(1), Int(2 * g - 1) * k + 1);
    out.certified = out.bound < out.target;
    return out;
}

} // namespace arithq
