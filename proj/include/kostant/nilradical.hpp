#pragma once
/* Nilradical of the parabolic subalgebra attached to a set T of simple
 * roots: the span of the root spaces whose roots have a positive coefficient
 * on some member of T.  Carries the T-grading, the part of the cascade lying
 * inside, the optimised defining set, and the coadjoint invariants that
 * follow from cascade counting. */

#include <vector>

#include "kostant/cascade.hpp"
#include "kostant/rootsys.hpp"

namespace kostant {

struct Nilradical {
    std::vector<int> t_set;                 // defining simples, 0-based ascending
    std::vector<int> roots;                 // positive-root indices, ascending
    std::vector<std::vector<int>> grading;  // grading[k] = roots of T-grade k+1
    int depth = 0;                          // grade of the highest root
    std::vector<int> centre_roots;          // the top graded piece
    std::vector<int> cascade_indices;       // cascade elements whose root lies here
    std::vector<int> tilde_t;               // union of the phi-labels over those elements
    int dim = 0;
    int index = 0;                          // index of the coadjoint representation
    int b = 0;                              // (dim + index) / 2
};

/* throws EmptyT for an empty T and InvalidRank for an out-of-range simple */
Nilradical build_nilradical(const RootSystem& rs, const std::vector<CascadeElement>& cascade,
                            const std::vector<int>& t_set);

/* depth and top graded piece only, computed without the cascade */
std::pair<int, std::vector<int>> depth_and_centre(const RootSystem& rs,
                                                  const std::vector<int>& t_set);

bool is_optimal(const Nilradical& nil);

/* the nilradical of the optimised defining set; same cascade part, same b */
Nilradical optimisation(const RootSystem& rs, const std::vector<CascadeElement>& cascade,
                        const Nilradical& nil);

}  // namespace kostant
