#pragma once
/* Independent cross-check of the cascade combinatorics through honest Lie
 * algebra computations: Chevalley structure constants built from scratch by
 * height induction, then exact kernels and ranks of the coadjoint pairing
 * matrices they define.  Nothing here reuses the combinatorial stabiliser;
 * agreement between the two paths is the point. */

#include <cstdint>
#include <vector>

#include "kostant/nilradical.hpp"

namespace kostant {

/* Signed root-space basis: index s < m is the positive root s, index s >= m
 * is the negative of root s - m, with m the number of positive roots. */
struct StructureConstants {
    /* brackets[s][t] = N with [e_s, e_t] = N e_{s+t}; zero when the sum is
     * not a root and for opposite pairs (those bracket into the torus) */
    std::vector<std::vector<int>> brackets;
    /* cartan_pairings[r][i] = <gamma_r, alpha_i^vee> */
    std::vector<std::vector<int>> cartan_pairings;
    /* coroots[r][i]: h_{gamma_r} expanded over the simple coroot basis */
    std::vector<std::vector<int>> coroots;
};

/* The tie-break inside the height order fixes the extraspecial pairs and
 * with them the sign convention; flipping it must not change any oracle
 * conclusion. */
StructureConstants build_structure_constants(const RootSystem& rs, bool revlex_tiebreak = false);

/* Jacobi identity on basis triples over e_{+-gamma} and the simple coroots */
bool check_jacobi_exhaustive(const RootSystem& rs, const StructureConstants& sc);
bool check_jacobi_sampled(const RootSystem& rs, const StructureConstants& sc, int samples,
                          std::uint64_t seed);

struct OracleReport {
    int stab_dim = -1;
    std::vector<int> stab_root_support;  // positive-root indices, ascending
    int index_estimate = -1;
    int saturation_dim = -1;
    bool agrees = false;
};

/* kernel of the coadjoint pairing against the cascade point with weights
 * a_j on the cascade roots inside the nilradical; returns the kernel
 * dimension and the union of supports of an exact kernel basis */
std::pair<int, std::vector<int>> stabiliser_oracle(const RootSystem& rs,
                                                   const StructureConstants& sc,
                                                   const std::vector<CascadeElement>& cascade,
                                                   const Nilradical& nil,
                                                   const std::vector<long long>& weights = {});

/* max rank of the Kirillov form at random points, subtracted from dim */
int index_oracle(const RootSystem& rs, const StructureConstants& sc, const Nilradical& nil,
                 int samples, std::uint64_t seed);

/* rank of the pairing matrix extended by the indicator columns of the
 * cascade roots */
int saturation_oracle(const RootSystem& rs, const StructureConstants& sc,
                      const std::vector<CascadeElement>& cascade, const Nilradical& nil);

/* same kernel computed inside the optimised nilradical */
std::pair<int, std::vector<int>> tilde_stabiliser_oracle(const RootSystem& rs,
                                                         const StructureConstants& sc,
                                                         const std::vector<CascadeElement>& cascade,
                                                         const Nilradical& nil);

/* full cross-check against the combinatorial invariants */
OracleReport run_oracle(const RootSystem& rs, const StructureConstants& sc,
                        const std::vector<CascadeElement>& cascade, const Nilradical& nil,
                        const std::vector<int>& expected_stab_roots, int samples,
                        std::uint64_t seed);

/* deterministic per-sample stream: the base seed mixed with the type, the
 * defining set, and the sample number */
std::uint64_t mix_seed(std::uint64_t base, const SimpleType& t, std::uint64_t t_mask,
                       std::uint64_t sample);

}  // namespace kostant
