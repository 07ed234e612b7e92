#pragma once
/* Small shared helpers for the unit suites: building systems by family and
 * rank, reducing a cascade to an order-free value form, and enumerating
 * defining sets. */

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "kostant/cascade.hpp"
#include "kostant/reference.hpp"
#include "kostant/rootsys.hpp"

namespace kostant::testhelp {

inline RootSystem make(Family f, int r) { return build_root_system({f, r}); }

/* A cascade element stripped of numbering: its coefficient vector, the
 * parent's coefficient vector (empty at a forest root), and the phi-label.
 * Two cascades agree iff their sorted value forms agree. */
struct ValueElem {
    std::vector<int> coeffs;
    std::vector<int> parent;
    std::vector<int> phi;

    bool operator<(const ValueElem& o) const {
        return std::tie(coeffs, parent, phi) < std::tie(o.coeffs, o.parent, o.phi);
    }
    bool operator==(const ValueElem& o) const {
        return coeffs == o.coeffs && parent == o.parent && phi == o.phi;
    }
};

inline std::vector<ValueElem> value_form(const RootSystem& rs,
                                         const std::vector<CascadeElement>& cascade) {
    std::vector<ValueElem> out;
    for (const auto& el : cascade) {
        ValueElem v;
        v.coeffs = rs.positive_roots[el.root].coeffs;
        if (el.parent >= 0) v.parent = rs.positive_roots[cascade[el.parent].root].coeffs;
        v.phi = el.phi;
        std::sort(v.phi.begin(), v.phi.end());
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<ValueElem> value_form(const ReferenceCascade& rc) {
    std::vector<ValueElem> out;
    for (const auto& el : rc.elements) {
        ValueElem v;
        v.coeffs = el.coeffs;
        if (el.parent >= 0) v.parent = rc.elements[el.parent].coeffs;
        v.phi = el.phi;
        std::sort(v.phi.begin(), v.phi.end());
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/* every constructible type with rank at most eight */
inline std::vector<SimpleType> all_types() {
    std::vector<SimpleType> v;
    for (int n = 1; n <= 8; ++n) v.push_back({Family::A, n});
    for (int n = 2; n <= 8; ++n) v.push_back({Family::B, n});
    for (int n = 1; n <= 8; ++n) v.push_back({Family::C, n});
    for (int n = 4; n <= 8; ++n) v.push_back({Family::D, n});
    v.push_back({Family::E, 6});
    v.push_back({Family::E, 7});
    v.push_back({Family::E, 8});
    v.push_back({Family::F, 4});
    v.push_back({Family::G, 2});
    return v;
}

/* non-empty subsets of {0..rank-1}, ascending bitmask order */
inline std::vector<std::vector<int>> all_t_sets(int rank) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << rank); ++mask) {
        std::vector<int> t;
        for (int i = 0; i < rank; ++i)
            if (mask & (1u << i)) t.push_back(i);
        out.push_back(std::move(t));
    }
    return out;
}

inline bool contains(const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

inline bool subset_of(const std::vector<int>& small, const std::vector<int>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/* closed-form list of defining sets with square integrable nilradical: the
 * abelian singletons plus the known depth-two sets */
inline std::set<std::vector<int>> expected_square_integrable(const RootSystem& rs) {
    Family f = rs.stype.family;
    int n = rs.rank();
    const auto& theta = rs.positive_roots[rs.highest_root].coeffs;
    std::set<std::vector<int>> s;
    for (int a = 0; a < n; ++a)
        if (theta[a] == 1) s.insert({a});
    switch (f) {
        case Family::A:
            for (int k = 1; 2 * k < n + 1; ++k) s.insert({k - 1, n - k});
            break;
        case Family::B:
            for (int k = 1; 2 * k <= n; ++k) s.insert({2 * k - 1});
            break;
        case Family::C:
            for (int k = 1; k < n; ++k) s.insert({k - 1});
            break;
        case Family::D:
            for (int k = 1; k <= n / 2 - 1; ++k) s.insert({2 * k - 1});
            if (n % 2 == 1) s.insert({n - 2, n - 1});
            break;
        case Family::E:
            if (n == 6) {
                s.insert({5});
                s.insert({0, 4});
            } else if (n == 7) {
                s.insert({1});
                s.insert({5});
            } else {
                s.insert({0});
                s.insert({6});
            }
            break;
        case Family::F:
            s.insert({0});
            s.insert({3});
            break;
        case Family::G:
            s.insert({1});
            break;
    }
    return s;
}

/* closed-form quasi-quadratic test per family */
inline bool expected_quasi_quadratic(const RootSystem& rs,
                                     const std::vector<CascadeElement>& cascade,
                                     const std::vector<int>& t) {
    Family f = rs.stype.family;
    int n = rs.rank();
    if (f == Family::A) return t.size() == 1;
    if (f == Family::E && n == 6) return t.size() == 1 && t[0] != 5;
    if (f == Family::D && n % 2 == 1) {
        for (int a : t)
            if (a < n - 3 && a % 2 == 1) return false;
        int fork = 0;
        for (int a : t)
            if (a >= n - 3) ++fork;
        return fork <= 1;
    }
    std::set<int> simple_cascade;
    for (const auto& el : cascade)
        if (rs.positive_roots[el.root].height == 1)
            simple_cascade.insert(support(rs, rs.positive_roots[el.root])[0]);
    for (int a : t)
        if (!simple_cascade.count(a)) return false;
    return true;
}

}  // namespace kostant::testhelp
