#pragma once
/* Kostant cascade of strongly orthogonal roots: recursively extract the
 * highest root of each irreducible subsystem, then recurse into the diagram
 * components of the simple roots orthogonal to it.  Elements are numbered in
 * depth-first preorder with sibling components taken in ascending order of
 * their support sets. */

#include <utility>
#include <vector>

#include "kostant/rootsys.hpp"

namespace kostant {

struct CascadeElement {
    int root;                          // index into rs.positive_roots
    int parent;                        // cascade index, -1 for a forest root
    std::vector<int> subsystem_simples;  // simples of the subsystem it was extracted from
    std::vector<int> phi;              // simples alpha with beta - alpha a positive root or zero
    std::vector<int> heisenberg;       // roots of the subsystem not orthogonal to beta
};

std::vector<CascadeElement> compute_cascade(const RootSystem& rs);

/* for each simple root, the cascade element whose phi-label contains it;
 * the labels partition the simple roots */
std::vector<int> phi_inverse(const RootSystem& rs, const std::vector<CascadeElement>& cascade);

/* (parent, child) index pairs; the tree order coincides with strict support
 * inclusion between cascade roots */
std::vector<std::pair<int, int>> hasse_edges(const std::vector<CascadeElement>& cascade);

}  // namespace kostant
