#include "arithq/localfield.hpp"

#include "arithq/numbertheory.hpp"

#include <doctest.h>

using namespace arithq;

namespace {
PlaceProfile place(long p, unsigned e = 1, unsigned f = 1) {
    PlaceProfile v;
    v.p = p;
    v.e = e;
    v.f = f;
    return v;
}
} // namespace

TEST_CASE("residue cardinality") {
    CHECK(residue_cardinality(place(2)) == 2);
    CHECK(residue_cardinality(place(5, 1, 2)) == 25);
    CHECK(residue_cardinality(place(3, 2, 1)) == 3);  // independent of e
}

TEST_CASE("quadratic and cubic counts away from the wild primes") {
    CHECK(count_extensions(place(5), 2) == 3);
    CHECK(count_extensions(place(5), 3) == 4);
    CHECK(count_extensions(place(7, 2, 3), 2) == 3);
    CHECK(count_extensions(place(2), 3) == 4);
    CHECK(count_extensions(place(3), 2) == 3);
    CHECK_THROWS_AS(count_extensions(place(5), 4), std::invalid_argument);
}

TEST_CASE("dyadic quadratic counts follow 2^(ef+2) - 1") {
    CHECK(count_extensions(place(2), 2) == 7);
    Int prev = 0;
    for (unsigned e = 1; e <= 3; ++e) {
        for (unsigned f = 1; f <= 3; ++f) {
            Int c = count_extensions(place(2, e, f), 2);
            CHECK(c == pow_int(Int(2), e * f + 2) - 1);
        }
    }
    // strictly increasing in d = ef
    for (unsigned d = 1; d <= 6; ++d) {
        Int c = count_extensions(place(2, 1, d), 2);
        CHECK(c > prev);
        prev = c;
    }
}

TEST_CASE("dyadic closed form agrees with the Krasner strata") {
    for (unsigned e = 1; e <= 3; ++e) {
        for (unsigned f = 1; f <= 2; ++f) {
            Int q = pow_int(Int(2), f);
            Int total = 1;
            for (const auto& s : krasner_strata(Int(2), e, q)) total += s.count;
            CHECK(total == count_extensions(place(2, e, f), 2));
        }
    }
}

TEST_CASE("triadic cubic count") {
    // 1 unramified + 21 totally ramified subfields over Q_3: 3 ramified
    // cyclic cubics (disc exponent 4) plus six Galois-closure triples of
    // conjugate non-Galois cubics (disc exponents 3, 4, 5)
    CHECK(count_extensions(place(3), 3) == 22);
    auto strata = krasner_strata(Int(3), 1, Int(3));
    REQUIRE(strata.size() == 3);
    CHECK(strata[0].j == 1);
    CHECK(strata[0].count == 6);
    CHECK(strata[1].j == 2);
    CHECK(strata[1].count == 6);
    CHECK(strata[2].j == 3);
    CHECK(strata[2].count == 9);
}

TEST_CASE("wild cubic totals agree with the Kummer-theoretic closed form") {
    // independent route: cyclic cubics via class field theory plus three
    // quadratic-resolvent families give 9 * 3^{ef} - 5 subfields in total,
    // for either value of [mu_3 in K]; the strata must sum to the same
    for (unsigned e = 1; e <= 3; ++e)
        for (unsigned f = 1; f <= 3; ++f) {
            Int expected = 9 * pow_int(Int(3), e * f) - 5;
            CHECK(count_extensions(place(3, e, f), 3) == expected);
        }
}

TEST_CASE("Krasner strata satisfy the Serre mass formula exactly") {
    // the identity is asserted inside krasner_strata; exercise a spread of
    // bases and recheck it here in rational arithmetic
    for (long p : {2L, 3L}) {
        for (unsigned e = 1; e <= 3; ++e) {
            for (unsigned f = 1; f <= 3; ++f) {
                Int q = pow_int(Int(p), f);
                Rat mass = 0;
                for (const auto& s : krasner_strata(Int(p), e, q))
                    mass += make_rat(s.count, pow_int(q, s.j));
                CHECK(mass == Rat(p));
            }
        }
    }
}

TEST_CASE("n_v values") {
    CHECK(n_v(place(5)) == 7);
    CHECK(n_v(place(2)) == 11);
    CHECK(n_v(place(3)) == 3 + 22);
    // n_v = 7 for every profile with p >= 5
    for (long p : {5L, 7L, 11L, 13L})
        for (unsigned e = 1; e <= 3; ++e)
            for (unsigned f = 1; f <= 3; ++f) CHECK(n_v(place(p, e, f)) == 7);
}

TEST_CASE("counts are at least 1 and finite") {
    for (long p : {2L, 3L, 5L})
        for (unsigned degree : {2u, 3u}) {
            Int c = count_extensions(place(p), degree);
            CHECK(c >= 1);
        }
}
