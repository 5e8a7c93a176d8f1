#ifndef ARITHQ_TRICHOTOMY_HPP
#define ARITHQ_TRICHOTOMY_HPP

#include "arithq/integer.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace arithq {

/// Galois orbit sizes partitioning the finite set Sigma. Only sizes enter
/// the arithmetic; the group itself is never represented.
using OrbitTable = std::vector<unsigned>;

/// Fraction of Sigma lying in orbits of size < 4. Throws on an empty table.
Rat size_v(const OrbitTable& orbits);

/// Local data entering the weight identity: per place w over v, the degree
/// [L_w : K_v] and dim F^1 (Hodge-Tate weights restricted to {0,1}, so the
/// weighted weight sum equals dim F^1).
struct WeightProfile {
    unsigned weight = 1;       // n
    unsigned global_degree = 1;  // [L:K]
    struct Place {
        unsigned degree;  // [L_w : K_v]
        unsigned dim_f1;
    };
    std::vector<Place> places;
    unsigned dim_w = 0;
};

/// sum_w [L_w:K_v] dim F^1_w == n [L:K] dim(W) / 2, checked exactly.
/// Throws if a profile invariant fails (dim F^1 > dim W, or place degrees
/// not summing to [L:K]).
bool check_weight_identity(const WeightProfile& p);

enum class PairType { a, b, c, inconsistent };

/// Finite model of a symplectic pair: orbit structure plus declared
/// witnesses for the heavy cases.
struct SyntheticPair {
    unsigned d = 1;  // V has rank 2d over A
    OrbitTable orbits;
    std::optional<std::size_t> a_witness;  // orbit index
    struct BWitness {
        std::size_t orbit;
        unsigned dim_w;
        unsigned dim_f1;
    };
    std::optional<BWitness> b_witness;
};

/// Type (a): a-witness on an orbit of size >= 4. Type (b): b-witness on an
/// orbit of size >= 4 with dim F^1 >= dim W / 2. Type (c): the points in
/// orbits of size < 4 number at least #Sigma/(d+1).
PairType classify(const SyntheticPair& pair);

/// Outcome of the not-(a), not-(b) forcing argument. `satisfiable` tells
/// whether any integer F^1 assignment meets both the per-point bounds and
/// the weight-identity total; vacuous truths stay visible.
struct ClosureReport {
    bool satisfiable = false;
    bool conclusion = false;  // (dimW0+1) #Sigma_{<4} >= #Sigma
    bool holds() const { return !satisfiable || conclusion; }
};

/// Bounds: dim F^1 <= (dimW0-1)/2 on points in orbits of size >= 4 and
/// <= dimW0 elsewhere; total must equal dimW0 #Sigma / 2. Exhaustive over
/// assignments (subset-sum reachability), then the forced conclusion is
/// evaluated.
ClosureReport trichotomy_closure_check(unsigned d, const OrbitTable& orbits, unsigned dim_w0);

struct ScanSummary {
    unsigned long long cases = 0;
    unsigned long long satisfiable = 0;
    unsigned long long vacuous = 0;
    unsigned long long violations = 0;  // satisfiable cases where (c) fails
};

/// Exhaustive closure scan over all orbit partitions with #Sigma <= max_sigma,
/// all d <= max_d and all 1 <= dimW0 <= d.
ScanSummary trichotomy_scan(unsigned max_d, unsigned max_sigma);

/// All partitions of n as non-increasing positive parts.
void for_each_partition(unsigned n, const std::function<void(const std::vector<unsigned>&)>& fn);

} // namespace arithq

#endif
