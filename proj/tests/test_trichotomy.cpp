#include "arithq/trichotomy.hpp"

#include <doctest.h>

using namespace arithq;

TEST_CASE("size_v examples and range") {
    CHECK(size_v({1, 1, 2}) == 1);
    CHECK(size_v({4, 4}) == 0);
    CHECK(size_v({2, 4, 6}) == make_rat(Int(1), Int(6)));
    CHECK_THROWS_AS(size_v({}), std::invalid_argument);

    for (const OrbitTable& t :
         {OrbitTable{1}, OrbitTable{5}, OrbitTable{3, 3, 3}, OrbitTable{2, 7, 1}}) {
        Rat s = size_v(t);
        CHECK(s >= 0);
        CHECK(s <= 1);
        bool all_small = true;
        for (unsigned x : t) all_small = all_small && x < 4;
        CHECK((s == 1) == all_small);
    }
}

TEST_CASE("weight identity examples") {
    WeightProfile elliptic{1, 1, {{1, 1}}, 2};
    CHECK(check_weight_identity(elliptic));

    WeightProfile split{1, 4, {{2, 1}, {2, 1}}, 2};
    CHECK(check_weight_identity(split));

    WeightProfile wrong{1, 1, {{1, 0}}, 2};
    CHECK_FALSE(check_weight_identity(wrong));
}

TEST_CASE("weight identity is invariant under splitting a place") {
    // degree-k place vs k degree-1 places with the same F^1 dimension
    for (unsigned k : {2u, 3u, 4u}) {
        for (unsigned f1 : {0u, 1u, 2u}) {
            WeightProfile joined{1, k, {{k, f1}}, 2};
            WeightProfile split{1, k, {}, 2};
            for (unsigned i = 0; i < k; ++i) split.places.push_back({1, f1});
            CHECK(check_weight_identity(joined) == check_weight_identity(split));
        }
    }
}

TEST_CASE("weight profile invariants are enforced") {
    WeightProfile bad_dim{1, 1, {{1, 3}}, 2};
    CHECK_THROWS_AS(check_weight_identity(bad_dim), std::invalid_argument);
    WeightProfile bad_sum{1, 3, {{2, 1}}, 2};
    CHECK_THROWS_AS(check_weight_identity(bad_sum), std::invalid_argument);
}

TEST_CASE("classify follows the declared witnesses") {
    SyntheticPair a{1, {4}, 0, std::nullopt};
    CHECK(classify(a) == PairType::a);

    SyntheticPair b{2, {4}, std::nullopt, SyntheticPair::BWitness{0, 2, 1}};
    CHECK(classify(b) == PairType::b);

    SyntheticPair c{2, {1, 1, 1}, std::nullopt, std::nullopt};
    CHECK(classify(c) == PairType::c);

    // a-witness on a small orbit does not trigger type (a), and here the
    // small points fall short of the (c) threshold too
    SyntheticPair small_a{1, {2, 4, 4, 4}, 0, std::nullopt};
    CHECK(classify(small_a) == PairType::inconsistent);

    SyntheticPair none{1, {4, 4, 1}, std::nullopt, std::nullopt};
    CHECK(classify(none) == PairType::inconsistent);
}

TEST_CASE("classify arithmetic for the (c) threshold") {
    // d = 1: small points must reach half of Sigma
    SyntheticPair edge{1, {1, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 1}, std::nullopt, std::nullopt};
    // #Sigma = 50, small = 2, (d+1) small = 4 < 50
    CHECK(classify(edge) == PairType::inconsistent);
    SyntheticPair pass{1, {1, 1, 4}, std::nullopt, std::nullopt};
    // small = 2, 2*2 >= 6 fails -> inconsistent
    CHECK(classify(pass) == PairType::inconsistent);
    SyntheticPair pass2{1, {1, 1, 1, 1, 4}, std::nullopt, std::nullopt};
    // small = 4, 2*4 >= 8 holds
    CHECK(classify(pass2) == PairType::c);
}

TEST_CASE("b-witness needs the average weight bound") {
    SyntheticPair shallow{2, {4}, std::nullopt, SyntheticPair::BWitness{0, 3, 1}};
    // 2*1 < 3: not type (b); size_v = 0 and no other witness -> inconsistent
    CHECK(classify(shallow) == PairType::inconsistent);
}

TEST_CASE("closure check on the worked examples") {
    auto r1 = trichotomy_closure_check(2, {1, 1, 1, 1}, 1);
    CHECK(r1.satisfiable);
    CHECK(r1.conclusion);
    CHECK(r1.holds());

    auto r2 = trichotomy_closure_check(1, {4}, 1);
    CHECK_FALSE(r2.satisfiable);  // vacuous: bounds contradict the identity
    CHECK(r2.holds());

    auto r3 = trichotomy_closure_check(2, {4, 1}, 2);
    CHECK_FALSE(r3.satisfiable);
    CHECK(r3.holds());

    CHECK_THROWS_AS(trichotomy_closure_check(2, {4}, 3), std::invalid_argument);
}

TEST_CASE("satisfiability matches the interval criterion") {
    // subset-sum reachability agrees with the closed-form capacity bound
    for (unsigned sigma = 1; sigma <= 9; ++sigma) {
        for_each_partition(sigma, [&](const std::vector<unsigned>& parts) {
            for (unsigned d = 1; d <= 3; ++d)
                for (unsigned w0 = 1; w0 <= d; ++w0) {
                    unsigned long total = 0, cap = 0;
                    for (unsigned s : parts) {
                        total += s;
                        cap += s * (s >= 4 ? (w0 - 1) / 2 : w0);
                    }
                    bool integral = (static_cast<unsigned long long>(w0) * total) % 2 == 0;
                    bool feasible =
                        integral && 2 * cap >= static_cast<unsigned long long>(w0) * total;
                    CHECK(trichotomy_closure_check(d, parts, w0).satisfiable == feasible);
                }
        });
    }
}

TEST_CASE("exhaustive scan: not-(a) and not-(b) force (c)") {
    auto summary = trichotomy_scan(3, 12);
    CHECK(summary.violations == 0);
    CHECK(summary.satisfiable > 0);
    CHECK(summary.vacuous > 0);  // vacuous cases reported separately
    CHECK(summary.cases == summary.satisfiable + summary.vacuous);
}

TEST_CASE("classify never reports inconsistent on hypothesis-satisfying pairs") {
    // witness-free pairs whose orbit data admits an F^1 assignment meeting
    // the weight identity and the not-(b) bound must come out as type (c)
    for (unsigned sigma = 1; sigma <= 12; ++sigma) {
        for_each_partition(sigma, [&](const std::vector<unsigned>& parts) {
            for (unsigned d = 1; d <= 3; ++d)
                for (unsigned w0 = 1; w0 <= d; ++w0) {
                    auto rep = trichotomy_closure_check(d, parts, w0);
                    if (!rep.satisfiable) continue;
                    SyntheticPair pair{d, parts, std::nullopt, std::nullopt};
                    CHECK(classify(pair) == PairType::c);
                }
        });
    }
}

TEST_CASE("partition generator counts") {
    unsigned count = 0;
    for_each_partition(6, [&](const std::vector<unsigned>&) { ++count; });
    CHECK(count == 11);  // p(6)
}
