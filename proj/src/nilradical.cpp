#include "kostant/nilradical.hpp"

#include <algorithm>
#include <string>

namespace kostant {

namespace {

int grade(const Root& g, const std::vector<int>& t_set) {
    int s = 0;
    for (int a : t_set) s += g.coeffs[a];
    return s;
}

void validate(const RootSystem& rs, const std::vector<int>& t_set) {
    if (t_set.empty()) throw EmptyT("defining set T must be non-empty");
    for (int a : t_set)
        if (a < 0 || a >= rs.rank())
            throw InvalidRank("simple root index " + std::to_string(a + 1) + " out of range for " +
                              to_string(rs.stype));
}

}  // namespace

std::pair<int, std::vector<int>> depth_and_centre(const RootSystem& rs,
                                                  const std::vector<int>& t_set) {
    validate(rs, t_set);
    int depth = grade(rs.positive_roots[rs.highest_root], t_set);
    std::vector<int> centre;
    for (int r = 0; r < rs.size(); ++r)
        if (grade(rs.positive_roots[r], t_set) == depth) centre.push_back(r);
    return {depth, centre};
}

Nilradical build_nilradical(const RootSystem& rs, const std::vector<CascadeElement>& cascade,
                            const std::vector<int>& t_set) {
    validate(rs, t_set);
    Nilradical nil;
    nil.t_set = t_set;
    std::sort(nil.t_set.begin(), nil.t_set.end());
    nil.t_set.erase(std::unique(nil.t_set.begin(), nil.t_set.end()), nil.t_set.end());

    nil.depth = grade(rs.positive_roots[rs.highest_root], nil.t_set);
    nil.grading.assign(nil.depth, {});
    for (int r = 0; r < rs.size(); ++r) {
        int g = grade(rs.positive_roots[r], nil.t_set);
        if (g >= 1) {
            nil.roots.push_back(r);
            nil.grading[g - 1].push_back(r);
        }
    }
    nil.centre_roots = nil.grading[nil.depth - 1];
    nil.dim = static_cast<int>(nil.roots.size());

    for (size_t k = 0; k < cascade.size(); ++k)
        if (grade(rs.positive_roots[cascade[k].root], nil.t_set) >= 1)
            nil.cascade_indices.push_back(static_cast<int>(k));
    for (int k : nil.cascade_indices)
        for (int i : cascade[k].phi) nil.tilde_t.push_back(i);
    std::sort(nil.tilde_t.begin(), nil.tilde_t.end());
    nil.tilde_t.erase(std::unique(nil.tilde_t.begin(), nil.tilde_t.end()), nil.tilde_t.end());

    int dim_opt = 0;
    for (int r = 0; r < rs.size(); ++r)
        if (grade(rs.positive_roots[r], nil.tilde_t) >= 1) ++dim_opt;
    nil.index = dim_opt - nil.dim + static_cast<int>(nil.cascade_indices.size());

    if ((nil.dim + nil.index) % 2 != 0)
        throw InternalInconsistency("dim + index is odd for " + to_string(rs.stype));
    nil.b = (nil.dim + nil.index) / 2;
    return nil;
}

bool is_optimal(const Nilradical& nil) { return nil.t_set == nil.tilde_t; }

Nilradical optimisation(const RootSystem& rs, const std::vector<CascadeElement>& cascade,
                        const Nilradical& nil) {
    return build_nilradical(rs, cascade, nil.tilde_t);
}

}  // namespace kostant
