#include "arithq/localfield.hpp"

#include "arithq/numbertheory.hpp"

#include <stdexcept>

namespace arithq {

Int residue_cardinality(const PlaceProfile& v) {
    return pow_int(v.p, v.f);
}

std::vector<RamifiedStratum> krasner_strata(const Int& p, unsigned e, const Int& q) {
    if (!is_prime(p)) throw std::invalid_argument("krasner_strata: p must be prime");
    unsigned long pu = p.get_ui();
    std::vector<RamifiedStratum> strata;
    for (unsigned j = 1; j < pu * e; ++j) {
        if (j % pu == 0) continue;  // Ore: no extension at these discriminants
        strata.push_back({j, p * (q - 1) * pow_int(q, j / pu)});
    }
    strata.push_back({static_cast<unsigned>(pu * e), p * pow_int(q, e)});

    // mass formula: sum over strata of count / q^j must equal p exactly
    Rat mass = 0;
    for (const auto& s : strata) mass += make_rat(s.count, pow_int(q, s.j));
    if (mass != Rat(p))
        throw std::logic_error("krasner_strata: Serre mass formula violated");
    return strata;
}

Int count_extensions(const PlaceProfile& v, unsigned degree) {
    if (degree != 2 && degree != 3)
        throw std::invalid_argument("count_extensions: degree must be 2 or 3");
    if (!is_prime(v.p)) throw std::invalid_argument("count_extensions: p must be prime");
    if (v.e < 1 || v.f < 1)
        throw std::invalid_argument("count_extensions: e and f must be >= 1");

    unsigned d = v.e * v.f;
    if (v.p != Int(degree)) {
        // tame: one unramified plus `degree` totally ramified subfields
        return Int(1 + degree);
    }
    if (degree == 2) {
        // Kummer count agrees with the Krasner strata; keep the closed form
        return pow_int(Int(2), d + 2) - 1;
    }
    Int q = residue_cardinality(v);
    Int total = 1;  // the unramified cubic
    for (const auto& s : krasner_strata(v.p, v.e, q)) total += s.count;
    return total;
}

Int n_v(const PlaceProfile& v) {
    return count_extensions(v, 2) + count_extensions(v, 3);
}

} // namespace arithq
