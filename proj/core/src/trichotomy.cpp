#include "arithq/trichotomy.hpp"

#include <stdexcept>

namespace arithq {

Rat size_v(const OrbitTable& orbits) {
    if (orbits.empty()) throw std::invalid_argument("size_v: empty orbit table");
    unsigned long total = 0, small = 0;
    for (unsigned s : orbits) {
        if (s < 1) throw std::invalid_argument("size_v: orbit sizes must be >= 1");
        total += s;
        if (s < 4) small += s;
    }
    return make_rat(Int(static_cast<long>(small)), Int(static_cast<long>(total)));
}

bool check_weight_identity(const WeightProfile& p) {
    unsigned degree_sum = 0;
    Int lhs = 0;
    for (const auto& w : p.places) {
        if (w.dim_f1 > p.dim_w)
            throw std::invalid_argument("weight profile: dim F^1 exceeds dim W");
        if (w.degree < 1)
            throw std::invalid_argument("weight profile: place degree must be >= 1");
        degree_sum += w.degree;
        lhs += Int(w.degree) * Int(w.dim_f1);
    }
    if (degree_sum != p.global_degree)
        throw std::invalid_argument("weight profile: place degrees must sum to [L:K]");
    // n [L:K] dim(W) / 2, compared exactly through the doubled identity
    return 2 * lhs == Int(p.weight) * Int(p.global_degree) * Int(p.dim_w);
}

PairType classify(const SyntheticPair& pair) {
    unsigned long total = 0, small = 0;
    for (unsigned s : pair.orbits) {
        total += s;
        if (s < 4) small += s;
    }
    if (pair.orbits.empty() || total == 0)
        throw std::invalid_argument("classify: empty orbit table");
    if (pair.a_witness) {
        if (*pair.a_witness >= pair.orbits.size())
            throw std::invalid_argument("classify: a-witness orbit index out of range");
        if (pair.orbits[*pair.a_witness] >= 4) return PairType::a;
    }
    if (pair.b_witness) {
        const auto& b = *pair.b_witness;
        if (b.orbit >= pair.orbits.size())
            throw std::invalid_argument("classify: b-witness orbit index out of range");
        if (pair.orbits[b.orbit] >= 4 && 2 * b.dim_f1 >= b.dim_w) return PairType::b;
    }
    // #small >= #Sigma / (d+1)
    if (Int(static_cast<long>(small)) * Int(pair.d + 1) >= Int(static_cast<long>(total)))
        return PairType::c;
    return PairType::inconsistent;
}

ClosureReport trichotomy_closure_check(unsigned d, const OrbitTable& orbits, unsigned dim_w0) {
    if (dim_w0 < 1 || dim_w0 > d)
        throw std::invalid_argument("trichotomy_closure_check: need 1 <= dimW0 <= d");
    if (orbits.empty())
        throw std::invalid_argument("trichotomy_closure_check: empty orbit table");
    unsigned long total = 0, small = 0;
    std::vector<unsigned> cap;  // per-point upper bound for dim F^1
    for (unsigned s : orbits) {
        total += s;
        if (s < 4) small += s;
        unsigned bound = s >= 4 ? (dim_w0 - 1) / 2 : dim_w0;
        for (unsigned i = 0; i < s; ++i) cap.push_back(bound);
    }

    ClosureReport rep;
    // target total dim F^1: dimW0 #Sigma / 2; non-integral target means no
    // assignment exists at all
    unsigned long long doubled = static_cast<unsigned long long>(dim_w0) * total;
    if (doubled % 2 != 0) {
        rep.satisfiable = false;
    } else {
        unsigned long long target = doubled / 2;
        // subset-sum reachability over the per-point caps
        std::vector<char> reach(target + 1, 0);
        reach[0] = 1;
        for (unsigned c : cap) {
            std::vector<char> next(target + 1, 0);
            for (unsigned long long t = 0; t <= target; ++t) {
                if (!reach[t]) continue;
                for (unsigned v = 0; v <= c && t + v <= target; ++v) next[t + v] = 1;
            }
            reach = std::move(next);
        }
        rep.satisfiable = reach[target] != 0;
    }
    rep.conclusion = static_cast<unsigned long long>(dim_w0 + 1) * small >= total;
    return rep;
}

void for_each_partition(unsigned n, const std::function<void(const std::vector<unsigned>&)>& fn) {
    std::vector<unsigned> parts;
    // non-increasing parts, largest first
    std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
        if (remaining == 0) {
            fn(parts);
            return;
        }
        for (unsigned k = std::min(remaining, max_part); k >= 1; --k) {
            parts.push_back(k);
            rec(remaining - k, k);
            parts.pop_back();
        }
    };
    rec(n, n);
}

ScanSummary trichotomy_scan(unsigned max_d, unsigned max_sigma) {
    ScanSummary sum;
    for (unsigned sigma = 1; sigma <= max_sigma; ++sigma) {
        for_each_partition(sigma, [&](const std::vector<unsigned>& parts) {
            for (unsigned d = 1; d <= max_d; ++d) {
                for (unsigned w0 = 1; w0 <= d; ++w0) {
                    ++sum.cases;
                    ClosureReport rep = trichotomy_closure_check(d, parts, w0);
                    if (rep.satisfiable) {
                        ++sum.satisfiable;
                        if (!rep.conclusion) ++sum.violations;
                    } else {
                        ++sum.vacuous;
                    }
                }
            }
        });
    }
    return sum;
}

} // namespace arithq
