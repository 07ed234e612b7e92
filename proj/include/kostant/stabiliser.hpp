#pragma once
/* Stabiliser of the regular cascade point of the nilradical's coadjoint
 * representation, described entirely by roots: for each cascade element
 * inside the nilradical take the part of its Heisenberg set falling outside,
 * and fold it back under the element.  Genericity, the Frobenius
 * semiradical, and the quasi-quadratic property all read off this set. */

#include <optional>
#include <utility>
#include <vector>

#include "kostant/nilradical.hpp"

namespace kostant {

struct StabiliserReport {
    /* per entry of nil.cascade_indices: Heisenberg roots outside the nilradical */
    std::vector<std::vector<int>> complements;
    std::vector<int> stab_roots;  // ascending; size equals the index
    bool generic = false;
    /* first pair delta, delta' with delta - delta' again in the nilradical */
    std::optional<std::pair<int, int>> witness;
    std::vector<int> frobenius_roots;  // ascending
    bool quasi_quadratic = false;
};

StabiliserReport cascade_stabiliser(const RootSystem& rs,
                                    const std::vector<CascadeElement>& cascade,
                                    const Nilradical& nil);

bool has_generic_stabiliser(const RootSystem& rs, const std::vector<CascadeElement>& cascade,
                            const Nilradical& nil);

/* smallest subspace containing the stabiliser that is closed under raising
 * by simple roots; always inside the nilradical */
std::vector<int> frobenius_semiradical(const RootSystem& rs,
                                       const std::vector<CascadeElement>& cascade,
                                       const Nilradical& nil);

/* Frobenius semiradical equals the whole nilradical; cross-checked against
 * the combinatorial criterion on T, disagreement throws CriterionMismatch */
bool is_quasi_quadratic(const RootSystem& rs, const std::vector<CascadeElement>& cascade,
                        const Nilradical& nil);

}  // namespace kostant
