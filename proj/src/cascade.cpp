#include "kostant/cascade.hpp"

#include <algorithm>
#include <functional>

namespace kostant {

namespace {

/* connected components of a simple-root subset under diagram adjacency,
 * each sorted ascending, components ordered by least member */
std::vector<std::vector<int>> diagram_components(const RootSystem& rs, const std::vector<int>& s) {
    std::vector<std::vector<int>> comps;
    std::vector<char> used(rs.rank(), 0);
    std::vector<char> in_s(rs.rank(), 0);
    for (int i : s) in_s[i] = 1;
    for (int i : s) {
        if (used[i]) continue;
        std::vector<int> comp, stack{i};
        used[i] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int j : s)
                if (!used[j] && rs.cartan[v][j] != 0) {
                    used[j] = 1;
                    stack.push_back(j);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

}  // namespace

std::vector<CascadeElement> compute_cascade(const RootSystem& rs) {
    std::vector<CascadeElement> out;

    std::function<void(const std::vector<int>&, int)> visit = [&](const std::vector<int>& s,
                                                                  int parent) {
        std::vector<char> in_s(rs.rank(), 0);
        for (int i : s) in_s[i] = 1;

        /* subsystem roots and its highest root (unique componentwise maximum
         * since s is a connected diagram) */
        std::vector<int> sub;
        for (int r = 0; r < rs.size(); ++r) {
            bool inside = true;
            for (int i = 0; i < rs.rank() && inside; ++i)
                if (rs.positive_roots[r].coeffs[i] != 0 && !in_s[i]) inside = false;
            if (inside) sub.push_back(r);
        }
        int beta = sub.back();  // canonical order is height-increasing
        for (int r : sub)
            if (!root_order_leq(rs, rs.positive_roots[r], rs.positive_roots[beta]))
                throw InternalInconsistency("subsystem passed to cascade step is not irreducible");

        CascadeElement el;
        el.root = beta;
        el.parent = parent;
        el.subsystem_simples = s;
        const auto& bc = rs.positive_roots[beta].coeffs;
        for (int i : s) {
            std::vector<int> diff = bc;
            diff[i] -= 1;
            bool zero = std::all_of(diff.begin(), diff.end(), [](int v) { return v == 0; });
            if (zero || rs.find(diff) >= 0) el.phi.push_back(i);
        }
        for (int r : sub)
            if (rs.bilinear(rs.positive_roots[r].coeffs, bc) != 0) el.heisenberg.push_back(r);

        int me = static_cast<int>(out.size());
        out.push_back(std::move(el));

        std::vector<int> orth;
        for (int i : s) {
            std::vector<int> u(rs.rank(), 0);
            u[i] = 1;
            if (rs.bilinear(u, bc) == 0) orth.push_back(i);
        }
        for (const auto& comp : diagram_components(rs, orth)) visit(comp, me);
    };

    std::vector<int> all(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) all[i] = i;
    visit(all, -1);
    return out;
}

std::vector<int> phi_inverse(const RootSystem& rs, const std::vector<CascadeElement>& cascade) {
    std::vector<int> inv(rs.rank(), -1);
    for (size_t k = 0; k < cascade.size(); ++k)
        for (int i : cascade[k].phi) {
            if (inv[i] != -1)
                throw InternalInconsistency("simple root " + std::to_string(i + 1) +
                                            " carried by two cascade labels");
            inv[i] = static_cast<int>(k);
        }
    for (int i = 0; i < rs.rank(); ++i)
        if (inv[i] == -1)
            throw InternalInconsistency("simple root " + std::to_string(i + 1) +
                                        " carried by no cascade label");
    return inv;
}

std::vector<std::pair<int, int>> hasse_edges(const std::vector<CascadeElement>& cascade) {
    std::vector<std::pair<int, int>> edges;
    for (size_t k = 0; k < cascade.size(); ++k)
        if (cascade[k].parent >= 0) edges.emplace_back(cascade[k].parent, static_cast<int>(k));
    return edges;
}

}  // namespace kostant
