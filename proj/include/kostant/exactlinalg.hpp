#pragma once
/* Exact integer linear algebra used by the structure-constant oracle:
 * fraction-free Gaussian elimination for rank and a fraction-free
 * Gauss-Jordan sweep for kernel bases.  Intermediate entries are minors of
 * the input, so every division is exact; arbitrary precision keeps the
 * growth harmless. */

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace kostant {

using Int = boost::multiprecision::cpp_int;

struct IMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> data;  // row-major

    IMatrix() = default;
    IMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    Int& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
};

int rank_ff(IMatrix m);

/* kernel basis, one vector per non-pivot column */
std::vector<std::vector<Int>> kernel_ff(IMatrix m);

}  // namespace kostant
