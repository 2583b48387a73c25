#include <doctest.h>

#include <random>

#include "celltrees/comb.hpp"
#include "celltrees/formulas.hpp"
#include "support.hpp"

using namespace celltrees;

namespace {

CombConfig make_config(std::vector<std::vector<long long>> values, int k) {
    CombConfig cfg;
    cfg.k = k;
    for (auto& axis : values) {
        std::vector<Rat> set;
        for (long long v : axis) set.emplace_back(v);
        cfg.sets.push_back(std::move(set));
    }
    return cfg;
}

}  // namespace

TEST_CASE("dependence detection") {
    // both difference sets contain 1
    CombConfig dep = make_config({{0, 1}, {0, 1}, {5}}, 2);
    auto witness = detect_k_dependence(dep);
    REQUIRE(witness.has_value());
    CHECK(witness->difference == 1);
    REQUIRE(witness->pairs.size() == 2);
    CHECK(witness->pairs[0].axis == 0);
    CHECK(witness->pairs[1].axis == 1);
    CHECK(witness_validates(dep, *witness));

    // difference sets {±1}, {±2}, {±4} are pairwise disjoint
    CHECK_FALSE(detect_k_dependence(make_config({{0, 1}, {0, 2}, {0, 4}}, 2)));

    // singletons have empty difference sets
    CHECK_FALSE(detect_k_dependence(make_config({{3}, {1}, {4}, {1}}, 3)));
}

TEST_CASE("witness validation is strict") {
    CombConfig cfg = make_config({{0, 1}, {0, 1}, {5}}, 2);
    DependenceWitness w = *detect_k_dependence(cfg);
    CHECK(witness_validates(cfg, w));

    DependenceWitness repeated_axis = w;
    repeated_axis.pairs[1].axis = repeated_axis.pairs[0].axis;
    CHECK_FALSE(witness_validates(cfg, repeated_axis));

    DependenceWitness foreign_value = w;
    foreign_value.pairs[0].x = Rat(9);
    CHECK_FALSE(witness_validates(cfg, foreign_value));

    DependenceWitness wrong_diff = w;
    wrong_diff.difference = Rat(2);
    CHECK_FALSE(witness_validates(cfg, wrong_diff));
}

TEST_CASE("detector agrees with brute force on small instances") {
    // Small value ranges force plenty of collisions.
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> n_axes(2, 5);
    std::uniform_int_distribution<int> set_size(1, 3);
    std::uniform_int_distribution<long long> value(0, 6);
    for (int trial = 0; trial < 120; ++trial) {
        int n = n_axes(rng);
        int k = std::uniform_int_distribution<int>(2, n)(rng);
        std::vector<std::vector<long long>> sets;
        for (int j = 0; j < n; ++j) {
            std::set<long long> axis;
            int target = set_size(rng);
            while (static_cast<int>(axis.size()) < target) axis.insert(value(rng));
            sets.emplace_back(axis.begin(), axis.end());
        }
        CombConfig cfg = make_config(sets, k);
        auto witness = detect_k_dependence(cfg);
        CHECK(witness.has_value() == testsupport::has_k_dependence_brute(cfg));
        if (witness) CHECK(witness_validates(cfg, *witness));
    }
}

TEST_CASE("random generic combs") {
    CombConfig a = random_generic_comb({2, 2, 2}, 3, 17);
    CHECK_FALSE(detect_k_dependence(a));
    CHECK(comb_to_pile(a) == std::vector<int>{2, 2, 2});

    // deterministic per seed
    CombConfig b = random_generic_comb({2, 2, 2}, 3, 17);
    CHECK(a.sets == b.sets);
    CombConfig c = random_generic_comb({2, 2, 2}, 3, 18);
    CHECK_FALSE(detect_k_dependence(c));

    CombConfig singletons = random_generic_comb({1, 1, 1, 1}, 3, 5);
    CHECK_FALSE(detect_k_dependence(singletons));
    CHECK(comb_to_pile(singletons) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("comb to pile sizes") {
    CHECK(comb_to_pile(make_config({{0}, {0}, {0}}, 3)) == std::vector<int>{1, 1, 1});
    CHECK(comb_to_pile(make_config({{0, 1}, {0, 2}, {0, 4}}, 3)) == std::vector<int>{2, 2, 2});
    CombConfig mixed;
    mixed.k = 3;
    mixed.sets = {{Rat(0)}, {Rat(1), Rat(2)}, {Rat(0), Rat(3), Rat(7)}};
    CHECK(comb_to_pile(mixed) == std::vector<int>{1, 2, 3});
}

TEST_CASE("comb verification chain") {
    // all-singleton config: the plain no-k-equal case
    CombTheoremReport unit = verify_comb_theorem(make_config({{0}, {0}, {0}, {0}}, 3));
    CHECK(unit.all_equal);
    CHECK(unit.common_value == 7);
    CHECK(unit.common_value == bw_betti(4, 3));

    CombTheoremReport generic = verify_comb_theorem(random_generic_comb({2, 2, 2}, 3, 99));
    CHECK(generic.all_equal);
    CHECK(generic.tree_size == generic.skeleton_betti);
    CHECK(generic.skeleton_betti == generic.chi_beta);

    // hypothesis violation carries its witness
    CombConfig dependent = make_config({{0, 1}, {2, 3}, {5, 6}}, 3);
    REQUIRE(detect_k_dependence(dependent));
    try {
        verify_comb_theorem(dependent);
        FAIL("expected KDependenceError");
    } catch (const KDependenceError& e) {
        CHECK(witness_validates(dependent, e.witness));
    }
}

TEST_CASE("the common value is invariant under translation and axis relabeling") {
    CombConfig base = random_generic_comb({2, 1, 2}, 3, 31);
    Int value = verify_comb_theorem(base).common_value;

    CombConfig translated = base;
    for (auto& x : translated.sets[0]) x += Rat(1, 3);
    CHECK_FALSE(detect_k_dependence(translated));
    CHECK(verify_comb_theorem(translated).common_value == value);

    CombConfig relabeled = base;
    std::swap(relabeled.sets[0], relabeled.sets[2]);
    CHECK_FALSE(detect_k_dependence(relabeled));
    CHECK(verify_comb_theorem(relabeled).common_value == value);
}

TEST_CASE("config validation and parsing") {
    CombConfig too_few = make_config({{0}, {0}}, 3);
    CHECK_THROWS_AS(too_few.validate(), std::invalid_argument);
    CombConfig repeated = make_config({{1, 1}, {0}, {0}}, 3);
    CHECK_THROWS_AS(repeated.validate(), std::invalid_argument);

    CombConfig parsed = parse_comb_sets("0,1;0,1/2;3", 2);
    REQUIRE(parsed.axes() == 3);
    CHECK(parsed.sets[1][1] == Rat(1, 2));
    CHECK(parsed.sets[2][0] == Rat(3));
    CHECK_THROWS_AS(parse_comb_sets("0,x;1;2", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_comb_sets("0,1/0;1;2", 2), std::invalid_argument);
}
