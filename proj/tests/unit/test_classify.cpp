#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "kostant/classify.hpp"
#include "kostant/stabiliser.hpp"

using namespace kostant;
using namespace kostant::testhelp;

namespace {

using TSet = std::set<std::vector<int>>;

TSet to_set(const std::vector<std::vector<int>>& v) { return TSet(v.begin(), v.end()); }

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("square integrable census matches the closed-form lists in every type") {
    for (SimpleType t : all_types()) {
        CAPTURE(to_string(t));
        RootSystem rs = build_root_system(t);
        auto cascade = compute_cascade(rs);
        CHECK(to_set(square_integrable_census(rs, cascade)) == expected_square_integrable(rs));
    }
}

TEST_CASE("square integrability needs all cascade grades at the depth") {
    RootSystem rs = make(Family::B, 2);
    auto cascade = compute_cascade(rs);
    CHECK(is_square_integrable(rs, cascade, build_nilradical(rs, cascade, {1})));
    CHECK(is_square_integrable(rs, cascade, build_nilradical(rs, cascade, {0})));
    CHECK_FALSE(is_square_integrable(rs, cascade, build_nilradical(rs, cascade, {0, 1})));
}

TEST_CASE("fork pairs of the even orthogonal series are not square integrable") {
    RootSystem d4 = make(Family::D, 4);
    auto c4 = compute_cascade(d4);
    Nilradical n4 = build_nilradical(d4, c4, {2, 3});
    CHECK_FALSE(is_square_integrable(d4, c4, n4));
    CHECK(n4.dim == 9);
    CHECK(n4.index == 5);
    CHECK(n4.centre_roots.size() == 3);
    CHECK(n4.tilde_t == std::vector<int>{1, 2, 3});

    RootSystem d6 = make(Family::D, 6);
    auto c6 = compute_cascade(d6);
    Nilradical n6 = build_nilradical(d6, c6, {4, 5});
    CHECK_FALSE(is_square_integrable(d6, c6, n6));
    CHECK(n6.dim == 20);
    CHECK(n6.index == 12);
    CHECK(n6.centre_roots.size() == 10);
    CHECK(n6.tilde_t == std::vector<int>{1, 3, 4, 5});
    CHECK(optimisation(d6, c6, n6).dim == 28);
}

TEST_CASE("quasi-quadratic nilradicals are exactly the listed ones") {
    for (SimpleType t : {SimpleType{Family::A, 4}, {Family::A, 5}, {Family::A, 6},
                         {Family::B, 4}, {Family::B, 5}, {Family::C, 4}, {Family::C, 5},
                         {Family::D, 4}, {Family::D, 5}, {Family::D, 6}, {Family::D, 7},
                         {Family::E, 6}, {Family::E, 7}, {Family::E, 8}, {Family::F, 4},
                         {Family::G, 2}}) {
        RootSystem rs = build_root_system(t);
        auto cascade = compute_cascade(rs);
        for (const auto& tset : all_t_sets(rs.rank())) {
            CAPTURE(to_string(t));
            Nilradical nil = build_nilradical(rs, cascade, tset);
            CHECK(is_quasi_quadratic(rs, cascade, nil) ==
                  expected_quasi_quadratic(rs, cascade, tset));
        }
    }
}

TEST_CASE("Heisenberg nilradicals carry a commutative polarization without a witness") {
    for (auto [f, n, a] : {std::tuple{Family::A, 1, 0}, {Family::B, 2, 1}, {Family::G, 2, 1}}) {
        RootSystem rs = make(f, n);
        auto cascade = compute_cascade(rs);
        auto [cp, w] = has_cp(rs, cascade, build_nilradical(rs, cascade, {a}));
        CAPTURE(to_string(rs.stype));
        CHECK(cp);
        CHECK_FALSE(w.has_value());
    }
}

TEST_CASE("type A always has a commutative polarization with a corner witness") {
    for (int n = 2; n <= 6; ++n) {
        RootSystem rs = make(Family::A, n);
        auto cascade = compute_cascade(rs);
        for (const auto& tset : all_t_sets(n)) {
            Nilradical nil = build_nilradical(rs, cascade, tset);
            auto [cp, w] = has_cp(rs, cascade, nil);
            CHECK(cp);
            if (w) {
                CHECK(contains(tset, *w));
                int k = static_cast<int>(nil.cascade_indices.size());
                CHECK((*w == k - 1 || *w == n - k));
            }
        }
    }

    RootSystem rs = make(Family::A, 6);
    auto cascade = compute_cascade(rs);
    auto [cp1, w1] = has_cp(rs, cascade, build_nilradical(rs, cascade, {1, 5}));
    CHECK(cp1);
    REQUIRE(w1.has_value());
    CHECK(*w1 == 1);
    auto [cp2, w2] = has_cp(rs, cascade, build_nilradical(rs, cascade, {4}));
    CHECK(cp2);
    REQUIRE(w2.has_value());
    CHECK(*w2 == 4);
}

TEST_CASE("known nilradicals without a commutative polarization") {
    auto cp_of = [](Family f, int n, std::vector<int> t) {
        RootSystem rs = make(f, n);
        auto cascade = compute_cascade(rs);
        return has_cp(rs, cascade, build_nilradical(rs, cascade, t)).first;
    };
    CHECK_FALSE(cp_of(Family::B, 4, {3}));
    CHECK_FALSE(cp_of(Family::B, 5, {3}));
    CHECK_FALSE(cp_of(Family::E, 8, {6}));
    CHECK_FALSE(cp_of(Family::F, 4, {0}));
}

TEST_CASE("abelian chain of the even orthogonal series reaches the fork witness") {
    RootSystem rs = make(Family::D, 8);
    auto cascade = compute_cascade(rs);
    Nilradical nil = build_nilradical(rs, cascade, {1, 3, 5, 7});
    CHECK(nil.cascade_indices.size() == 4);
    auto [cp, w] = has_cp(rs, cascade, nil);
    CHECK(cp);
    REQUIRE(w.has_value());
    CHECK(*w == 7);
    CHECK(freeness_status(rs, cascade, nil) == Freeness::proven_cp);
}

TEST_CASE("freeness statuses follow the proof ladder") {
    auto freeness_of = [](Family f, int n, std::vector<int> t) {
        RootSystem rs = make(f, n);
        auto cascade = compute_cascade(rs);
        return freeness_status(rs, cascade, build_nilradical(rs, cascade, t));
    };
    CHECK(freeness_of(Family::A, 6, {1, 5}) == Freeness::proven_type_AC);
    CHECK(freeness_of(Family::C, 4, {0, 1, 2, 3}) == Freeness::proven_type_AC);
    CHECK(freeness_of(Family::B, 2, {1}) == Freeness::proven_cp);
    CHECK(freeness_of(Family::G, 2, {0}) == Freeness::proven_small_cascade);
    CHECK(freeness_of(Family::E, 6, {1}) == Freeness::proven_small_cascade);
    CHECK(freeness_of(Family::B, 4, {0, 1, 2, 3}) == Freeness::conjectured);
    CHECK(freeness_of(Family::E, 8, {0, 1, 2, 3, 4, 5, 6, 7}) == Freeness::conjectured);

    CHECK(std::string(to_string(Freeness::proven_type_AC)) == "proven_type_AC");
    CHECK(std::string(to_string(Freeness::proven_cp)) == "proven_cp");
    CHECK(std::string(to_string(Freeness::proven_small_cascade)) == "proven_small_cascade");
    CHECK(std::string(to_string(Freeness::proven_abelian_sandwich)) == "proven_abelian_sandwich");
    CHECK(std::string(to_string(Freeness::conjectured)) == "conjectured");
}

TEST_CASE("classification report wires the invariants through") {
    RootSystem rs = make(Family::A, 4);
    auto cascade = compute_cascade(rs);
    Nilradical nil = build_nilradical(rs, cascade, {2, 3});
    ClassificationReport rep = classify(rs, cascade, nil);
    CHECK(rep.trdeg_SU == 2);
    CHECK(rep.trdeg_SN == 5);
    CHECK(rep.finitely_generated);
    CHECK(rep.rational_singularities);
    CHECK(rep.freeness == Freeness::proven_type_AC);

    RootSystem b4 = make(Family::B, 4);
    auto cb4 = compute_cascade(b4);
    for (const auto& tset : all_t_sets(4)) {
        Nilradical n = build_nilradical(b4, cb4, tset);
        ClassificationReport r = classify(b4, cb4, n);
        CHECK(r.trdeg_SU == static_cast<int>(n.cascade_indices.size()));
        CHECK(r.trdeg_SN == n.index);
    }
}

TEST_CASE("generic census closed forms") {
    auto census = [](Family f, int n) {
        RootSystem rs = make(f, n);
        auto cascade = compute_cascade(rs);
        return generic_census(rs, cascade);
    };
    CHECK(census(Family::A, 3) == 5);
    CHECK(census(Family::A, 4) == 9);
    CHECK(census(Family::A, 5) == 13);
    CHECK(census(Family::A, 6) == 21);
    for (int n = 1; n <= 6; ++n) CHECK(census(Family::C, n) == (1 << n) - 1);
}

TEST_CASE("type A genericity agrees with the symmetry of the defining set") {
    for (int n = 3; n <= 6; ++n) {
        RootSystem rs = make(Family::A, n);
        auto cascade = compute_cascade(rs);
        for (const auto& tset : all_t_sets(n)) {
            Nilradical nil = build_nilradical(rs, cascade, tset);
            CHECK(sl_symmetry_predicate(rs, cascade, tset) ==
                  has_generic_stabiliser(rs, cascade, nil));
        }
    }
    RootSystem b3 = make(Family::B, 3);
    auto cb3 = compute_cascade(b3);
    CHECK_THROWS_AS(sl_symmetry_predicate(b3, cb3, {0}), WrongType);
}

TEST_CASE("invariant generator counts for column strips") {
    CHECK(sl_generator_count(5, 2) == 6);
    CHECK(sl_generator_count(5, 1) == 4);
    CHECK(sl_generator_count(6, 2) == 10);
    CHECK(sl_generator_count(7, 3) == 14);
    for (int N = 2; N <= 8; ++N) CHECK(sl_generator_count(N, 1) == N - 1);
}

TEST_CASE("the witness polarization ideal has exactly b roots in types A and C") {
    for (auto [f, n] : {std::pair{Family::A, 4}, {Family::A, 5}, {Family::C, 3},
                        {Family::C, 4}}) {
        RootSystem rs = make(f, n);
        auto cascade = compute_cascade(rs);
        for (const auto& tset : all_t_sets(n)) {
            Nilradical nil = build_nilradical(rs, cascade, tset);
            auto [cp, w] = has_cp(rs, cascade, nil);
            if (!cp || !w) continue;
            Nilradical witness_nil = build_nilradical(rs, cascade, {*w});
            std::vector<int> common;
            std::set_intersection(nil.roots.begin(), nil.roots.end(), witness_nil.roots.begin(),
                                  witness_nil.roots.end(), std::back_inserter(common));
            CAPTURE(to_string(rs.stype));
            CHECK(static_cast<int>(common.size()) == nil.b);
        }
    }
}

TEST_CASE("square integrable nilradicals never exceed depth two") {
    for (auto [f, n] : {std::pair{Family::B, 5}, {Family::D, 6}, {Family::E, 7}}) {
        RootSystem rs = make(f, n);
        auto cascade = compute_cascade(rs);
        for (const auto& tset : all_t_sets(n)) {
            Nilradical nil = build_nilradical(rs, cascade, tset);
            if (is_square_integrable(rs, cascade, nil)) CHECK(nil.depth <= 2);
        }
    }
}

}  // TEST_SUITE
