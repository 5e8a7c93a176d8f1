#ifndef ARITHQ_KP_HPP
#define ARITHQ_KP_HPP

#include "arithq/integer.hpp"
#include "arithq/localfield.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arithq {

/// Number of terms used whenever zeta(2g) is replaced by its certified
/// rational upper bound. A reported pass is then rigorous.
inline constexpr unsigned kZetaTerms = 4;

/// Number of surjections Z^{2g} -> Z/kZ:
/// k^{2g} prod_{r | k prime} (1 - r^{-2g}), always an integer.
Int surj_count(unsigned g, const Int& k);

/// Relative dimension (g - 1/2)(q - 1) of the parameter-q family.
Rat kp_dimension(unsigned g, const Int& q);

/// Dimension bound d(2d+1) + 1 for the symplectic automorphism group.
Int aut_dim_bound(const Int& d);

/// Least r with d(2d+1) < r d(d+1)/2; equals 4 for every d >= 1.
Int trichotomy_min_degree(const Int& d);

/// The three condition lists are kept verbatim distinct; conflating them
/// changes the search minima.
///   New      -- divisibility of q-1 against q_v prod_{i<=3}(q_v^i - 1)
///               and the bound n_v zeta(2g) 2^g/(q-1)^g < 1/(d_q + 1);
///   Original -- the stricter historical list: place flags, divisibility
///               against q_v prod_{i<=7}(q_v^i - 1), the same bound with
///               constant 4 in place of n_v, and the good-model flag;
///   Prop     -- divisibility against q_v(q_v+1)(q_v^3-1) together with
///               q - 1 >= 9 n_v.
enum class Variant { New, Original, Prop };

struct KPQuery {
    unsigned genus = 2;
    PlaceProfile place;
    std::optional<Int> n_v_override;  // good-reduction substitution, e.g. 2
    Variant variant = Variant::New;
    bool good_model = false;  // externally supplied, never computed
    // "unramified over Q and not above 2" bundle for the Original list:
    // caller-supplied like the self_conjugate flag, never derived from
    // local data
    bool friendly = true;
};

struct ConditionItem {
    std::string name;
    bool pass = false;
    bool is_inequality = false;
    Rat lhs, rhs;      // exact values of both sides when is_inequality
    bool marginal = false;  // failed within 1% of the threshold
    std::string note;
};

struct ConditionReport {
    Int q;
    Int k;  // (q-1)/2
    std::vector<ConditionItem> items;
    bool overall = false;
};

/// Checks one odd prime q against the query's condition list. Throws on
/// even or composite q. The divisor sets of q_v(q_v+1)(q_v^3-1) and
/// q_v prod_{i<=3}(q_v^i-1) are both computed and asserted equal.
ConditionReport check_conditions(const Int& q, const KPQuery& query);

/// Least odd prime passing check_conditions, ascending scan; throws
/// std::runtime_error naming the last examined prime if the ceiling is
/// exhausted.
Int find_min_q(const KPQuery& query, const Int& ceiling = Int(1000000));

/// prod_{r | q-1, r odd prime} max(1 - 18/(r-1), 0).
Rat density_lower_bound(const Int& q);

/// Least prime congruent to 3 mod 4 and to 2 mod every odd prime < r0.
Int linnik_q(const Int& r0, const Int& ceiling = Int(1000000000));

struct SizeBound {
    Rat bound;   // zeta_upper_bound(2g, kZetaTerms) n_v / k^g
    Rat target;  // 1 / ((2g-1)k + 1)
    bool certified;  // bound < target
};

/// The closing inequality of the size_v estimate, with exact rationals.
SizeBound size_v_upper_bound(unsigned g, const Int& k, const Int& n_v);

} // namespace arithq

#endif
