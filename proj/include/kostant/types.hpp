#pragma once
/* Core value types shared by every module: simple Lie algebra labels, roots
 * in simple-root coordinates, and the error taxonomy. */

#include <stdexcept>
#include <string>
#include <vector>

namespace kostant {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
    Family family;
    int rank;
};

inline std::string to_string(const SimpleType& t) {
    return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

/* A root as its coefficient vector over the simple roots alpha_1..alpha_rank
 * (0-based storage).  Positive roots have all coefficients >= 0. */
struct Root {
    std::vector<int> coeffs;
    int height = 0;

    bool operator==(const Root& o) const { return coeffs == o.coeffs; }
};

inline Root make_root(std::vector<int> coeffs) {
    Root r;
    r.height = 0;
    for (int c : coeffs) r.height += c;
    r.coeffs = std::move(coeffs);
    return r;
}

struct InvalidRank : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyT : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CriterionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WrongType : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace kostant
