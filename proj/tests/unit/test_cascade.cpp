#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "kostant/cascade.hpp"
#include "kostant/reference.hpp"

using namespace kostant;
using namespace kostant::testhelp;

namespace {

bool is_ancestor(const std::vector<CascadeElement>& cascade, int anc, int node) {
    for (int p = cascade[node].parent; p >= 0; p = cascade[p].parent)
        if (p == anc) return true;
    return false;
}

}  // namespace

TEST_SUITE("cascade") {

TEST_CASE("computed cascade matches the closed-form tables in every type") {
    for (SimpleType t : all_types()) {
        CAPTURE(to_string(t));
        RootSystem rs = build_root_system(t);
        auto got = value_form(rs, compute_cascade(rs));
        auto want = value_form(reference_cascade(t));
        REQUIRE(got.size() == want.size());
        for (size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].coeffs == want[i].coeffs);
            CHECK(got[i].parent == want[i].parent);
            CHECK(got[i].phi == want[i].phi);
        }
    }
}

TEST_CASE("cascade roots are pairwise strongly orthogonal") {
    for (SimpleType t : all_types()) {
        CAPTURE(to_string(t));
        RootSystem rs = build_root_system(t);
        auto cascade = compute_cascade(rs);
        for (size_t i = 0; i < cascade.size(); ++i) {
            const auto& bi = rs.positive_roots[cascade[i].root].coeffs;
            for (size_t j = i + 1; j < cascade.size(); ++j) {
                const auto& bj = rs.positive_roots[cascade[j].root].coeffs;
                CHECK(rs.bilinear(bi, bj) == 0);
                std::vector<int> sum(rs.rank()), diff(rs.rank());
                for (int k = 0; k < rs.rank(); ++k) {
                    sum[k] = bi[k] + bj[k];
                    diff[k] = bi[k] - bj[k];
                }
                CHECK_FALSE(is_root(rs, sum));
                CHECK_FALSE(is_root(rs, diff));
            }
        }
    }
}

TEST_CASE("Heisenberg sets partition the positive roots") {
    for (SimpleType t : all_types()) {
        CAPTURE(to_string(t));
        RootSystem rs = build_root_system(t);
        auto cascade = compute_cascade(rs);
        std::vector<int> seen(rs.size(), 0);
        for (const auto& el : cascade) {
            CHECK(std::is_sorted(el.heisenberg.begin(), el.heisenberg.end()));
            CHECK(contains(el.heisenberg, el.root));
            for (int r : el.heisenberg) seen[r] += 1;
        }
        for (int r = 0; r < rs.size(); ++r) CHECK(seen[r] == 1);
    }
}

TEST_CASE("Heisenberg set is the non-orthogonal part of its subsystem") {
    for (auto [f, n] : {std::pair{Family::A, 4}, {Family::B, 3}, {Family::D, 5}}) {
        RootSystem rs = make(f, n);
        auto cascade = compute_cascade(rs);
        for (const auto& el : cascade) {
            const auto& beta = rs.positive_roots[el.root].coeffs;
            std::set<int> sub(el.subsystem_simples.begin(), el.subsystem_simples.end());
            std::vector<int> expect;
            for (int r = 0; r < rs.size(); ++r) {
                bool inside = true;
                for (int a : support(rs, rs.positive_roots[r]))
                    if (!sub.count(a)) inside = false;
                if (inside && rs.bilinear(rs.positive_roots[r].coeffs, beta) != 0)
                    expect.push_back(r);
            }
            CHECK(el.heisenberg == expect);
        }
    }
}

TEST_CASE("phi-labels match their defining condition") {
    for (auto [f, n] : {std::pair{Family::A, 5}, {Family::C, 4}, {Family::E, 6},
                        {Family::F, 4}, {Family::G, 2}}) {
        RootSystem rs = make(f, n);
        auto cascade = compute_cascade(rs);
        for (const auto& el : cascade) {
            const auto& beta = rs.positive_roots[el.root].coeffs;
            for (int a = 0; a < rs.rank(); ++a) {
                std::vector<int> diff = beta;
                diff[a] -= 1;
                bool zero = std::all_of(diff.begin(), diff.end(), [](int c) { return c == 0; });
                bool in_phi = contains(el.phi, a);
                CHECK(in_phi == (zero || rs.find(diff) >= 0));
            }
        }
    }
}

TEST_CASE("phi-labels partition the simple roots") {
    for (SimpleType t : all_types()) {
        CAPTURE(to_string(t));
        RootSystem rs = build_root_system(t);
        auto cascade = compute_cascade(rs);
        std::vector<int> inv = phi_inverse(rs, cascade);
        std::vector<int> hits(rs.rank(), 0);
        size_t total = 0;
        for (size_t k = 0; k < cascade.size(); ++k) {
            total += cascade[k].phi.size();
            for (int a : cascade[k].phi) {
                hits[a] += 1;
                CHECK(inv[a] == static_cast<int>(k));
            }
        }
        CHECK(total == static_cast<size_t>(rs.rank()));
        for (int a = 0; a < rs.rank(); ++a) CHECK(hits[a] == 1);
    }
}

TEST_CASE("cascade size equals the rank except in the three deficient families") {
    for (SimpleType t : all_types()) {
        RootSystem rs = build_root_system(t);
        auto cascade = compute_cascade(rs);
        bool deficient = (t.family == Family::A && t.rank >= 2) ||
                         (t.family == Family::D && t.rank % 2 == 1) ||
                         (t.family == Family::E && t.rank == 6);
        CAPTURE(to_string(t));
        if (deficient)
            CHECK(static_cast<int>(cascade.size()) < t.rank);
        else
            CHECK(static_cast<int>(cascade.size()) == t.rank);
    }
    CHECK(compute_cascade(make(Family::A, 5)).size() == 3);
    CHECK(compute_cascade(make(Family::A, 6)).size() == 3);
    CHECK(compute_cascade(make(Family::D, 5)).size() == 4);
    CHECK(compute_cascade(make(Family::D, 7)).size() == 6);
    CHECK(compute_cascade(make(Family::E, 6)).size() == 4);
}

TEST_CASE("tree order coincides with strict support inclusion") {
    for (SimpleType t : all_types()) {
        CAPTURE(to_string(t));
        RootSystem rs = build_root_system(t);
        auto cascade = compute_cascade(rs);
        std::vector<std::set<int>> supp;
        for (const auto& el : cascade) {
            auto s = support(rs, rs.positive_roots[el.root]);
            supp.emplace_back(s.begin(), s.end());
        }
        for (size_t i = 0; i < cascade.size(); ++i)
            for (size_t j = 0; j < cascade.size(); ++j) {
                if (i == j) continue;
                bool strictly_contains =
                    supp[i].size() > supp[j].size() &&
                    std::includes(supp[i].begin(), supp[i].end(), supp[j].begin(), supp[j].end());
                CHECK(strictly_contains == is_ancestor(cascade, static_cast<int>(i),
                                                       static_cast<int>(j)));
            }
    }
}

TEST_CASE("hasse edges mirror the parent pointers") {
    RootSystem rs = make(Family::E, 8);
    auto cascade = compute_cascade(rs);
    auto edges = hasse_edges(cascade);
    size_t with_parent = 0;
    for (size_t k = 0; k < cascade.size(); ++k)
        if (cascade[k].parent >= 0) ++with_parent;
    CHECK(edges.size() == with_parent);
    for (auto [p, c] : edges) CHECK(cascade[c].parent == p);
}

TEST_CASE("each cascade root is the highest root of its subsystem") {
    for (auto [f, n] : {std::pair{Family::B, 4}, {Family::E, 7}}) {
        RootSystem rs = make(f, n);
        auto cascade = compute_cascade(rs);
        for (const auto& el : cascade) {
            std::set<int> sub(el.subsystem_simples.begin(), el.subsystem_simples.end());
            for (int a : support(rs, rs.positive_roots[el.root])) CHECK(sub.count(a) == 1);
            const auto& beta = rs.positive_roots[el.root].coeffs;
            for (int r = 0; r < rs.size(); ++r) {
                bool inside = true;
                for (int a : support(rs, rs.positive_roots[r]))
                    if (!sub.count(a)) inside = false;
                if (!inside) continue;
                for (int i = 0; i < rs.rank(); ++i)
                    CHECK(rs.positive_roots[r].coeffs[i] <= beta[i]);
            }
        }
    }
}

}  // TEST_SUITE
