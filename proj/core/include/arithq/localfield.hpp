#ifndef ARITHQ_LOCALFIELD_HPP
#define ARITHQ_LOCALFIELD_HPP

#include "arithq/integer.hpp"

#include <vector>

namespace arithq {

/// Local-place descriptor. The two flags are caller-supplied global data:
/// self-conjugacy depends on CM subfields of the global field and
/// good_reduction on the model, neither is derivable from (p, e, f).
struct PlaceProfile {
    Int p;            // residue characteristic, prime
    unsigned e = 1;   // ramification index over Q_p
    unsigned f = 1;   // residue degree over Q_p
    bool self_conjugate = true;
    bool good_reduction = false;
};

/// q_v = p^f, the residue field cardinality.
Int residue_cardinality(const PlaceProfile& v);

/// One row of the count of totally ramified degree-p extensions, keyed by
/// discriminant exponent p - 1 + j.
struct RamifiedStratum {
    unsigned j;   // disc exponent = degree - 1 + j
    Int count;    // number of such extensions inside a fixed closure
};

/// Totally ramified degree-p extensions of a base with absolute
/// ramification index e and residue field of q elements, stratified by
/// discriminant: count p(q-1)q^{floor(j/p)} for p not dividing j < pe, and
/// p q^e at the maximal j = pe. Checked on return against Serre's mass
/// formula sum q^{-(disc - degree + 1)} = degree, which must hold exactly.
std::vector<RamifiedStratum> krasner_strata(const Int& p, unsigned e, const Int& q);

/// Number of extensions of K_v of the given degree (2 or 3) inside a fixed
/// algebraic closure, conjugate subfields counted separately:
///   degree 2, p odd  -> 3
///   degree 2, p = 2  -> 2^{ef+2} - 1
///   degree 3, p != 3 -> 4
///   degree 3, p = 3  -> 1 + sum of the Krasner strata
/// The tame counts are the unramified extension plus `degree` totally
/// (tamely) ramified ones. Throws on unsupported degree.
Int count_extensions(const PlaceProfile& v, unsigned degree);

/// count_extensions(v,2) + count_extensions(v,3).
Int n_v(const PlaceProfile& v);

} // namespace arithq

#endif
