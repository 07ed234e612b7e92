#pragma once
/* Closed-form Kostant cascade data per type, built directly from the
 * classical formulas (epsilon coordinates for A-D, explicit tables for the
 * exceptional types).  Serves as an independent check of the recursive
 * cascade construction; elements are compared by value, since the numbering
 * of a cascade is only a linear extension of its forest order. */

#include <vector>

#include "kostant/types.hpp"

namespace kostant {

struct ReferenceElement {
    std::vector<int> coeffs;  // simple-root coefficients
    int parent;               // index into the element list, -1 for a forest root
    std::vector<int> phi;     // 0-based simple-root indices, ascending
};

struct ReferenceCascade {
    std::vector<ReferenceElement> elements;
};

ReferenceCascade reference_cascade(SimpleType stype);

}  // namespace kostant
