#include "kostant/stabiliser.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace kostant {

namespace {

/* quasi-quadraticity by inspection of T alone: every defining simple root is
 * either itself a cascade root, or the odd member of a two-element phi-label
 * whose cascade root meets T only there */
bool qq_criterion(const RootSystem& rs, const std::vector<CascadeElement>& cascade,
                  const Nilradical& nil) {
    std::vector<int> inv = phi_inverse(rs, cascade);
    std::set<int> in_t(nil.t_set.begin(), nil.t_set.end());
    for (int a : nil.t_set) {
        bool simple_cascade_root = false;
        for (const auto& el : cascade)
            if (rs.positive_roots[el.root].height == 1 && rs.positive_roots[el.root].coeffs[a] == 1)
                simple_cascade_root = true;
        if (simple_cascade_root) continue;
        const CascadeElement& el = cascade[inv[a]];
        if (el.phi.size() != 2) return false;
        int hits = 0;
        for (int i : support(rs, rs.positive_roots[el.root])) hits += in_t.count(i);
        if (hits != 1) return false;
    }
    return true;
}

}  // namespace

StabiliserReport cascade_stabiliser(const RootSystem& rs, const std::vector<CascadeElement>& cascade,
                                    const Nilradical& nil) {
    StabiliserReport rep;
    std::vector<char> in_nil(rs.size(), 0);
    for (int r : nil.roots) in_nil[r] = 1;

    std::set<int> stab;
    for (int k : nil.cascade_indices) {
        const CascadeElement& el = cascade[k];
        std::vector<int> comp;
        const auto& bc = rs.positive_roots[el.root].coeffs;
        for (int r : el.heisenberg) {
            if (in_nil[r]) continue;
            comp.push_back(r);
            std::vector<int> diff(rs.rank());
            for (int i = 0; i < rs.rank(); ++i) diff[i] = bc[i] - rs.positive_roots[r].coeffs[i];
            int d = rs.find(diff);
            if (d < 0 || !in_nil[d])
                throw InternalInconsistency("folded Heisenberg root left the nilradical in " +
                                            to_string(rs.stype));
            stab.insert(d);
        }
        rep.complements.push_back(std::move(comp));
        stab.insert(el.root);
    }
    rep.stab_roots.assign(stab.begin(), stab.end());
    if (static_cast<int>(rep.stab_roots.size()) != nil.index)
        throw InternalInconsistency("stabiliser size " + std::to_string(rep.stab_roots.size()) +
                                    " does not match index " + std::to_string(nil.index));

    rep.generic = true;
    for (int d : rep.stab_roots) {
        for (int dp : rep.stab_roots) {
            if (d == dp) continue;
            std::vector<int> diff(rs.rank());
            for (int i = 0; i < rs.rank(); ++i)
                diff[i] = rs.positive_roots[d].coeffs[i] - rs.positive_roots[dp].coeffs[i];
            int r = rs.find(diff);
            if (r >= 0 && in_nil[r]) {
                rep.generic = false;
                rep.witness = {d, dp};
                break;
            }
        }
        if (!rep.generic) break;
    }

    /* raise by simple roots until stable */
    std::set<int> frob(stab.begin(), stab.end());
    std::vector<int> queue(frob.begin(), frob.end());
    while (!queue.empty()) {
        int r = queue.back();
        queue.pop_back();
        for (int i = 0; i < rs.rank(); ++i) {
            std::vector<int> up = rs.positive_roots[r].coeffs;
            up[i] += 1;
            int u = rs.find(up);
            if (u >= 0 && frob.insert(u).second) queue.push_back(u);
        }
    }
    rep.frobenius_roots.assign(frob.begin(), frob.end());

    bool direct = rep.frobenius_roots == nil.roots;
    bool criterion = qq_criterion(rs, cascade, nil);
    if (direct != criterion)
        throw CriterionMismatch("quasi-quadratic criterion disagrees with the Frobenius computation for " +
                                to_string(rs.stype));
    rep.quasi_quadratic = direct;
    return rep;
}

bool has_generic_stabiliser(const RootSystem& rs, const std::vector<CascadeElement>& cascade,
                            const Nilradical& nil) {
    return cascade_stabiliser(rs, cascade, nil).generic;
}

std::vector<int> frobenius_semiradical(const RootSystem& rs,
                                       const std::vector<CascadeElement>& cascade,
                                       const Nilradical& nil) {
    return cascade_stabiliser(rs, cascade, nil).frobenius_roots;
}

bool is_quasi_quadratic(const RootSystem& rs, const std::vector<CascadeElement>& cascade,
                        const Nilradical& nil) {
    return cascade_stabiliser(rs, cascade, nil).quasi_quadratic;
}

}  // namespace kostant
