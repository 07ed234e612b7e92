#pragma once
/* Positive root system of a simple Lie algebra in any constructible type,
 * generated from the Cartan matrix by root strings.  Roots live in
 * simple-root coordinates only; the epsilon presentation of classical types
 * is a display conversion. */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kostant/types.hpp"

namespace kostant {

struct RootSystem {
    SimpleType stype;
    std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_j, alpha_i^vee>
    std::vector<int> symmetrizer;          // minimal positive d_i with (d_i a_ij) symmetric
    std::vector<Root> positive_roots;      // (height, lex) ascending; theta last
    std::map<std::vector<int>, int> index_of;
    int highest_root = -1;                 // position of theta

    int rank() const { return stype.rank; }
    int size() const { return static_cast<int>(positive_roots.size()); }

    /* position of a positive root by coefficient vector, -1 if absent */
    int find(const std::vector<int>& coeffs) const {
        auto it = index_of.find(coeffs);
        return it == index_of.end() ? -1 : it->second;
    }

    /* <gamma, alpha_i^vee> = sum_j c_j cartan[i][j] */
    int pairing(const std::vector<int>& coeffs, int i) const {
        int p = 0;
        for (int j = 0; j < rank(); ++j) p += cartan[i][j] * coeffs[j];
        return p;
    }

    /* symmetrized bilinear form (gamma, delta); (alpha_i, alpha_i) = 2 d_i */
    long long bilinear(const std::vector<int>& g, const std::vector<int>& h) const {
        long long s = 0;
        for (int i = 0; i < rank(); ++i) {
            if (g[i] == 0) continue;
            for (int j = 0; j < rank(); ++j)
                s += static_cast<long long>(g[i]) * symmetrizer[i] * cartan[i][j] * h[j];
        }
        return s;
    }
};

RootSystem build_root_system(SimpleType stype);

/* componentwise root order gamma <= delta */
bool root_order_leq(const RootSystem& rs, const Root& g, const Root& h);

/* 0-based indices of simple roots with nonzero coefficient */
std::vector<int> support(const RootSystem& rs, const Root& g);

/* true iff coeffs is a (positive or negative) root; the zero vector is not */
bool is_root(const RootSystem& rs, const std::vector<int>& coeffs);

/* classical-type display conversion to epsilon coordinates, e.g. "e1+e2",
 * "2e3", "e2-e5"; empty optional for exceptional types */
std::optional<std::string> epsilon_display(const RootSystem& rs, const Root& g);

/* expected |Delta^+| for a constructible type */
int positive_root_count(SimpleType stype);

}  // namespace kostant
