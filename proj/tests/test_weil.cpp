#include "arithq/weil.hpp"

#include "arithq/numbertheory.hpp"
#include "numeric_roots.hpp"

#include <doctest.h>

#include <random>

using namespace arithq;

namespace {

IntPoly quadratic(long a, long b) { return int_poly({b, a, 1}); }

WeilVerdict check(IntPoly p, long q, unsigned n) {
    return check_weil({std::move(p), Int(q), n});
}

} // namespace

TEST_CASE("is_integral") {
    CHECK(is_integral(RatPoly({Rat(2), Rat(-1), Rat(1)})));
    CHECK_FALSE(is_integral(RatPoly({Rat(2), make_rat(Int(-1), Int(2)), Rat(1)})));
    CHECK(is_integral(RatPoly({Rat(-3), Rat(1)})));
    CHECK_THROWS_AS(is_integral(RatPoly({Rat(1), Rat(2)})), std::invalid_argument);
}

TEST_CASE("check_weil stock examples") {
    CHECK(check(quadratic(-1, 2), 2, 1).is_weil);
    CHECK_FALSE(check(quadratic(-3, 2), 2, 1).is_weil);
    CHECK(check(int_poly({-3, 1}), 3, 2).is_weil);  // x - 3, q = 3, n = 2
    CHECK(check(int_poly({4, 0, 3, 0, 1}), 2, 1).is_weil);
}

TEST_CASE("check_weil input validation") {
    CHECK_THROWS_AS(check(int_poly({1, 2}), 2, 1), std::invalid_argument);   // non-monic
    CHECK_THROWS_AS(check(quadratic(0, 1), 6, 1), std::invalid_argument);    // q not prime power
    CHECK_THROWS_AS(check(quadratic(0, 1), 1, 1), std::invalid_argument);
}

TEST_CASE("real factors are stripped and certified") {
    // (x^2 - 4)(x^2 - 3x + 4) for q = 2, n = 2: the pair x = +-2 leaves as x^2 - q^n
    IntPoly p = mul(int_poly({-4, 0, 1}), int_poly({4, -3, 1}));
    auto v = check(p, 2, 2);
    CHECK(v.is_weil);
    CHECK(v.stripped_quadratic == 1);
    // a lone x - 2 (and a lone x + 2) for q = 2, n = 2
    auto v_minus = check(mul(int_poly({-2, 1}), int_poly({4, -3, 1})), 2, 2);
    CHECK(v_minus.is_weil);
    CHECK(v_minus.stripped_minus == 1);
    auto v_plus = check(mul(int_poly({2, 1}), int_poly({4, -3, 1})), 2, 2);
    CHECK(v_plus.is_weil);
    CHECK(v_plus.stripped_plus == 1);
    // (x^2 - 2)^2 (x^2 + x + 2) for q = 2, n = 1
    IntPoly sq = mul(mul(int_poly({-2, 0, 1}), int_poly({-2, 0, 1})), quadratic(1, 2));
    auto v2 = check(sq, 2, 1);
    CHECK(v2.is_weil);
    CHECK(v2.stripped_quadratic == 2);
    CHECK_FALSE(v2.certificate.empty());
}

TEST_CASE("quadratic closed form on the examples") {
    CHECK(quadratic_weil_exact(Int(-1), Int(2), Int(2), 1));
    CHECK(quadratic_weil_exact(Int(0), Int(-4), Int(2), 2));
    CHECK_FALSE(quadratic_weil_exact(Int(0), Int(4), Int(3), 1));
}

TEST_CASE("check_weil matches the quadratic oracle exhaustively") {
    for (long q : {2L, 3L, 5L}) {
        for (unsigned n : {1u, 2u}) {
            for (long a = -50; a <= 50; ++a) {
                for (long b = -50; b <= 50; ++b) {
                    bool expected = quadratic_weil_exact(Int(a), Int(b), Int(q), n);
                    bool got = check(quadratic(a, b), q, n).is_weil;
                    if (expected != got) {
                        CAPTURE(a);
                        CAPTURE(b);
                        CAPTURE(q);
                        CAPTURE(n);
                        REQUIRE(expected == got);
                    }
                }
            }
        }
    }
}

TEST_CASE("check_weil matches the numerical oracle on random self-reciprocal candidates") {
    std::mt19937_64 rng(99);
    const testoracle::Big accept("1e-20"), abstain("1e-10");
    int done = 0;
    while (done < 200) {
        long q = (rng() % 2 == 0) ? 2 : 3;
        unsigned n = 1;
        Int Q = pow_int(Int(q), n);
        // random trace polynomial h of degree m <= 3 gives a self-reciprocal
        // candidate f = x^m h(x + Q/x) of degree <= 6
        int m = 1 + static_cast<int>(rng() % 3);
        std::vector<Int> hc;
        for (int i = 0; i < m; ++i) hc.emplace_back(static_cast<long>(rng() % 13) - 6);
        hc.emplace_back(1);
        IntPoly h(std::move(hc));
        // f = sum_j h_j x^{m-j} (x^2+Q)^j
        IntPoly f;
        IntPoly x2Q = int_poly({0, 0, 1});
        x2Q.c[0] = Q;
        for (int j = 0; j <= m; ++j) {
            std::vector<Int> mono(static_cast<std::size_t>(m - j) + 1, Int(0));
            mono.back() = 1;
            IntPoly term(std::move(mono));
            for (int t = 0; t < j; ++t) term = mul(term, x2Q);
            f = add(f, scale(term, h.coeff(static_cast<std::size_t>(j))));
        }

        RatPoly sf = squarefree_part(to_rat(f));
        auto roots = testoracle::roots(sf);
        bool oracle_weil = true, oracle_abstains = false;
        for (const auto& r : roots) {
            testoracle::Big dev = abs(r.abs2() - testoracle::to_big(Rat(Q)));
            if (dev <= accept) continue;
            if (dev <= abstain) {
                oracle_abstains = true;
            } else {
                oracle_weil = false;
            }
        }
        if (oracle_abstains) continue;
        bool got = check(f, q, n).is_weil;
        if (got != oracle_weil) {
            CAPTURE(to_string(f));
            CAPTURE(q);
            REQUIRE(got == oracle_weil);
        }
        ++done;
    }
}

TEST_CASE("products of Weil polynomials stay Weil; mixed products do not") {
    std::mt19937_64 rng(7);
    for (long q : {2L, 3L}) {
        unsigned n = 1;
        Int Q = pow_int(Int(q), n);
        for (int trial = 0; trial < 20; ++trial) {
            // x^2 + a x + Q with a^2 < 4Q is Weil
            long bound = q == 2 ? 2 : 3;
            long a1 = static_cast<long>(rng() % (2 * bound + 1)) - bound;
            long a2 = static_cast<long>(rng() % (2 * bound + 1)) - bound;
            IntPoly w1 = quadratic(a1, Q.get_si());
            IntPoly w2 = quadratic(a2, Q.get_si());
            if (Int(a1) * a1 >= 4 * Q || Int(a2) * a2 >= 4 * Q) continue;
            REQUIRE(check(w1, q, n).is_weil);
            CHECK(check(mul(w1, w2), q, n).is_weil);
            IntPoly bad = quadratic(-3, 2);  // verified non-Weil above
            CHECK_FALSE(check(mul(w1, bad), q, n).is_weil);
        }
    }
}

TEST_CASE("verdict is invariant under the q^n-reciprocal involution") {
    // pair f (x - 1) with f (x - Q): the two are each other's reciprocals
    for (long q : {2L, 3L, 5L}) {
        Int Q(q);
        for (long a : {-2L, 0L, 1L}) {
            IntPoly base = quadratic(a, q);  // self-reciprocal block
            IntPoly f1 = mul(base, int_poly({-1, 1}));
            IntPoly lin3 = int_poly({0, 1});
            lin3.c[0] = -Q;
            IntPoly f2 = mul(base, lin3);
            CHECK(check(f1, q, 1).is_weil == check(f2, q, 1).is_weil);
        }
    }
    // explicit coefficient-level reciprocal of a quartic
    IntPoly f = int_poly({4, 6, 5, 3, 1});
    Int Q(2);
    int d = f.degree();
    std::vector<Int> rc(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        Int num = f.coeff(static_cast<std::size_t>(d - j)) * pow_int(Q, d - j);
        REQUIRE(num % f.coeff(0) == 0);
        rc[static_cast<std::size_t>(j)] = num / f.coeff(0);
    }
    IntPoly frec(std::move(rc));
    CHECK(check(f, 2, 1).is_weil == check(frec, 2, 1).is_weil);
}

TEST_CASE("trace polynomial reproduces the quartic factorisation") {
    IntPoly f = int_poly({4, 0, 3, 0, 1});
    IntPoly h = trace_polynomial(f, Int(2));
    CHECK(h == int_poly({-1, 0, 1}));  // (beta-1)(beta+1)
    CHECK_THROWS_AS(trace_polynomial(int_poly({2, -3, 1}), Int(5)), std::invalid_argument);
}
