#include "kostant/classify.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "kostant/stabiliser.hpp"

namespace kostant {

namespace {

int theta_coeff(const RootSystem& rs, int a) {
    return rs.positive_roots[rs.highest_root].coeffs[a];
}

/* optimised defining set of the one-element nilradical at simple root a */
std::vector<int> tilde_of_single(const RootSystem& rs, const std::vector<CascadeElement>& cascade,
                                 int a) {
    return build_nilradical(rs, cascade, {a}).tilde_t;
}

bool subset(const std::vector<int>& small, const std::vector<int>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

const char* to_string(Freeness f) {
    switch (f) {
        case Freeness::proven_type_AC: return "proven_type_AC";
        case Freeness::proven_cp: return "proven_cp";
        case Freeness::proven_small_cascade: return "proven_small_cascade";
        case Freeness::proven_abelian_sandwich: return "proven_abelian_sandwich";
        case Freeness::conjectured: return "conjectured";
    }
    return "conjectured";
}

bool is_square_integrable(const RootSystem& rs, const std::vector<CascadeElement>& cascade,
                          const Nilradical& nil) {
    if (nil.depth > 2) return false;
    for (int k : nil.cascade_indices) {
        int g = 0;
        for (int a : nil.t_set) g += rs.positive_roots[cascade[k].root].coeffs[a];
        if (g != nil.depth) return false;
    }
    return true;
}

std::vector<std::vector<int>> square_integrable_census(const RootSystem& rs,
                                                       const std::vector<CascadeElement>& cascade) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << rs.rank()); ++mask) {
        std::vector<int> t;
        for (int i = 0; i < rs.rank(); ++i)
            if (mask & (1u << i)) t.push_back(i);
        Nilradical nil = build_nilradical(rs, cascade, t);
        if (is_square_integrable(rs, cascade, nil)) out.push_back(std::move(t));
    }
    return out;
}

std::pair<bool, std::optional<int>> has_cp(const RootSystem& rs,
                                           const std::vector<CascadeElement>& cascade,
                                           const Nilradical& nil) {
    if (nil.roots == cascade[0].heisenberg) return {true, std::nullopt};

    if (rs.stype.family == Family::A) {
        /* the witness sits where T meets the outer corner pair of the
         * cascade part; the intersection is never empty */
        int k = static_cast<int>(nil.cascade_indices.size());
        int n = rs.rank();
        int w = -1;
        for (int a : nil.t_set)
            if (a == k - 1 || a == n - k) {
                w = a;
                break;
            }
        if (w < 0)
            throw InternalInconsistency("no corner witness in type A for " + to_string(rs.stype));
        if (!subset(nil.t_set, tilde_of_single(rs, cascade, w)))
            throw InternalInconsistency("type A corner witness fails the sandwich inclusion");
        return {true, w};
    }

    for (int a = 0; a < rs.rank(); ++a) {
        if (theta_coeff(rs, a) != 1) continue;
        std::vector<int> tilde = tilde_of_single(rs, cascade, a);
        std::vector<char> in_big(rs.size(), 0);
        for (int r = 0; r < rs.size(); ++r) {
            int g = 0;
            for (int i : tilde) g += rs.positive_roots[r].coeffs[i];
            if (g >= 1) in_big[r] = 1;
        }
        bool inside = true;
        for (int r : nil.roots)
            if (!in_big[r]) {
                inside = false;
                break;
            }
        if (inside) return {true, a};
    }
    return {false, std::nullopt};
}

Freeness freeness_status(const RootSystem& rs, const std::vector<CascadeElement>& cascade,
                         const Nilradical& nil) {
    if (rs.stype.family == Family::A || rs.stype.family == Family::C)
        return Freeness::proven_type_AC;
    if (has_cp(rs, cascade, nil).first) return Freeness::proven_cp;
    if (nil.cascade_indices.size() <= 3) return Freeness::proven_small_cascade;
    for (int a : nil.t_set)
        if (theta_coeff(rs, a) == 1 && subset(nil.t_set, tilde_of_single(rs, cascade, a)))
            return Freeness::proven_abelian_sandwich;
    return Freeness::conjectured;
}

ClassificationReport classify(const RootSystem& rs, const std::vector<CascadeElement>& cascade,
                              const Nilradical& nil) {
    ClassificationReport rep;
    rep.square_integrable = is_square_integrable(rs, cascade, nil);
    auto cp = has_cp(rs, cascade, nil);
    rep.has_cp = cp.first;
    rep.cp_witness = cp.second;
    rep.freeness = freeness_status(rs, cascade, nil);
    rep.trdeg_SU = static_cast<int>(nil.cascade_indices.size());
    rep.trdeg_SN = nil.index;
    rep.finitely_generated = true;
    rep.rational_singularities = true;
    return rep;
}

int generic_census(const RootSystem& rs, const std::vector<CascadeElement>& cascade) {
    int count = 0;
    for (unsigned mask = 1; mask < (1u << rs.rank()); ++mask) {
        std::vector<int> t;
        for (int i = 0; i < rs.rank(); ++i)
            if (mask & (1u << i)) t.push_back(i);
        Nilradical nil = build_nilradical(rs, cascade, t);
        if (has_generic_stabiliser(rs, cascade, nil)) ++count;
    }
    return count;
}

bool sl_symmetry_predicate(const RootSystem& rs, const std::vector<CascadeElement>& cascade,
                           const std::vector<int>& t_set) {
    if (rs.stype.family != Family::A)
        throw WrongType("symmetry predicate is defined for family A only");
    Nilradical nil = build_nilradical(rs, cascade, t_set);
    int k = static_cast<int>(nil.cascade_indices.size());
    int n = rs.rank();
    std::set<int> left_mirrored, right;
    for (int a : nil.t_set) {
        if (a <= k - 2) left_mirrored.insert(n - 1 - a);
        if (a >= n + 1 - k) right.insert(a);
    }
    return left_mirrored == right;
}

long long sl_generator_count(int N, int k) {
    long long total = 0;
    for (int j = 1; j <= k; ++j) {
        long long c = 1;
        for (int i = 1; i <= j; ++i) c = c * (N - k - i + 1) / i;
        total += c;
    }
    return total;
}

}  // namespace kostant
