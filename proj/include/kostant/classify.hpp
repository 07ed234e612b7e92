#pragma once
/* Representation-theoretic classification of a nilradical: square
 * integrability of the attached unipotent group, existence of a commutative
 * polarization, and what is known about freeness of the algebra of
 * symmetric invariants, together with small closed-form counts used as
 * cross-checks in type A and C. */

#include <optional>
#include <utility>
#include <vector>

#include "kostant/nilradical.hpp"

namespace kostant {

enum class Freeness {
    proven_type_AC,
    proven_cp,
    proven_small_cascade,
    proven_abelian_sandwich,
    conjectured,
};

const char* to_string(Freeness f);

struct ClassificationReport {
    bool square_integrable = false;
    bool has_cp = false;
    /* simple-root index of the abelian witness; empty with has_cp set means
     * the nilradical is the full Heisenberg part of the highest root */
    std::optional<int> cp_witness;
    Freeness freeness = Freeness::conjectured;
    int trdeg_SU = 0;  // invariants of the unipotent radical action
    int trdeg_SN = 0;  // invariants of the group itself
    bool finitely_generated = true;
    bool rational_singularities = true;
};

bool is_square_integrable(const RootSystem& rs, const std::vector<CascadeElement>& cascade,
                          const Nilradical& nil);

/* all non-empty defining sets with square integrable nilradical, in
 * ascending bitmask order */
std::vector<std::vector<int>> square_integrable_census(const RootSystem& rs,
                                                       const std::vector<CascadeElement>& cascade);

/* commutative polarization test; second member is the witness */
std::pair<bool, std::optional<int>> has_cp(const RootSystem& rs,
                                           const std::vector<CascadeElement>& cascade,
                                           const Nilradical& nil);

Freeness freeness_status(const RootSystem& rs, const std::vector<CascadeElement>& cascade,
                         const Nilradical& nil);

ClassificationReport classify(const RootSystem& rs, const std::vector<CascadeElement>& cascade,
                              const Nilradical& nil);

/* number of non-empty defining sets with generic cascade stabiliser */
int generic_census(const RootSystem& rs, const std::vector<CascadeElement>& cascade);

/* genericity in type A by the symmetry of T across the cascade size;
 * throws WrongType outside family A */
bool sl_symmetry_predicate(const RootSystem& rs, const std::vector<CascadeElement>& cascade,
                           const std::vector<int>& t_set);

/* number of generators of the invariant algebra of the nilradical of
 * sl_N spanned by the last k columns' strip */
long long sl_generator_count(int N, int k);

}  // namespace kostant
