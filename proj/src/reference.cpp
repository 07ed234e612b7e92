#include "kostant/reference.hpp"

#include <algorithm>

namespace kostant {

namespace {

std::vector<int> unit(int n, int i) {  // alpha_{i+1}
    std::vector<int> c(n, 0);
    c[i] = 1;
    return c;
}

/* interval alpha_a..alpha_b (0-based, inclusive) with weight w */
std::vector<int> interval(int n, int a, int b, int w = 1) {
    std::vector<int> c(n, 0);
    for (int i = a; i <= b; ++i) c[i] = w;
    return c;
}

/* eps_i + eps_j (1-based i < j) in type B_n */
std::vector<int> b_eps_pair(int n, int i, int j) {
    std::vector<int> c(n, 0);
    for (int k = i; k <= j - 1; ++k) c[k - 1] = 1;
    for (int k = j; k <= n; ++k) c[k - 1] = 2;
    return c;
}

/* eps_i + eps_j (1-based i < j) in type D_n */
std::vector<int> d_eps_pair(int n, int i, int j) {
    std::vector<int> c(n, 0);
    if (j <= n - 2) {
        for (int k = i; k <= j - 1; ++k) c[k - 1] = 1;
        for (int k = j; k <= n - 2; ++k) c[k - 1] = 2;
        c[n - 2] = 1;
        c[n - 1] = 1;
    } else if (j == n - 1) {
        for (int k = i; k <= n - 2; ++k) c[k - 1] = 1;
        c[n - 2] = 1;
        c[n - 1] = 1;
    } else {  // j == n
        for (int k = i; k <= n - 2; ++k) c[k - 1] = 1;
        c[n - 1] = 1;
    }
    return c;
}

ReferenceCascade type_a(int n) {
    ReferenceCascade rc;
    int k = (n + 1) / 2;
    for (int i = 1; i <= k; ++i) {
        ReferenceElement e;
        e.coeffs = interval(n, i - 1, n - i);
        e.parent = static_cast<int>(rc.elements.size()) - 1;
        e.phi = {i - 1};
        if (n - i != i - 1) e.phi.push_back(n - i);
        rc.elements.push_back(std::move(e));
    }
    return rc;
}

ReferenceCascade type_c(int n) {
    ReferenceCascade rc;
    for (int i = 1; i <= n; ++i) {
        ReferenceElement e;
        if (i < n) {
            e.coeffs = interval(n, i - 1, n - 2, 2);
            e.coeffs[n - 1] = 1;
        } else {
            e.coeffs = unit(n, n - 1);
        }
        e.parent = static_cast<int>(rc.elements.size()) - 1;
        e.phi = {i - 1};
        rc.elements.push_back(std::move(e));
    }
    return rc;
}

/* B and even/odd D share the pattern beta_{2i-1} = eps_{2i-1} + eps_{2i},
 * beta_{2i} = alpha_{2i-1}; the odd-indexed elements form a chain and each
 * even-indexed element hangs off its predecessor. */
ReferenceCascade type_b(int n) {
    ReferenceCascade rc;
    int m = n / 2;
    for (int i = 1; i <= m; ++i) {
        ReferenceElement odd;
        odd.coeffs = b_eps_pair(n, 2 * i - 1, 2 * i);
        odd.parent = i == 1 ? -1 : 2 * (i - 2);
        odd.phi = {2 * i - 1};  // alpha_{2i}
        rc.elements.push_back(std::move(odd));
        ReferenceElement even;
        even.coeffs = unit(n, 2 * i - 2);  // alpha_{2i-1}
        even.parent = 2 * (i - 1);
        even.phi = {2 * i - 2};
        rc.elements.push_back(std::move(even));
    }
    if (n % 2 == 1) {  // eps_n = alpha_n, child of the last eps-pair
        ReferenceElement tail;
        tail.coeffs = unit(n, n - 1);
        tail.parent = 2 * (m - 1);
        tail.phi = {n - 1};
        rc.elements.push_back(std::move(tail));
    }
    return rc;
}

ReferenceCascade type_d(int n) {
    ReferenceCascade rc;
    int m = n / 2;
    if (n % 2 == 0) {
        for (int i = 1; i <= m - 1; ++i) {
            ReferenceElement odd;
            odd.coeffs = d_eps_pair(n, 2 * i - 1, 2 * i);
            odd.parent = i == 1 ? -1 : 2 * (i - 2);
            odd.phi = {2 * i - 1};
            rc.elements.push_back(std::move(odd));
            ReferenceElement even;
            even.coeffs = unit(n, 2 * i - 2);
            even.parent = 2 * (i - 1);
            even.phi = {2 * i - 2};
            rc.elements.push_back(std::move(even));
        }
        /* the last eps-pair eps_{n-1} + eps_n is the simple root alpha_n;
         * together with alpha_{n-1} it hangs off eps_{n-3} + eps_{n-2} */
        ReferenceElement last_pair;
        last_pair.coeffs = unit(n, n - 1);
        last_pair.parent = 2 * (m - 2);
        last_pair.phi = {n - 1};
        rc.elements.push_back(std::move(last_pair));
        ReferenceElement last_even;
        last_even.coeffs = unit(n, n - 2);
        last_even.parent = 2 * (m - 2);
        last_even.phi = {n - 2};
        rc.elements.push_back(std::move(last_even));
    } else {
        for (int i = 1; i <= m - 1; ++i) {
            ReferenceElement odd;
            odd.coeffs = d_eps_pair(n, 2 * i - 1, 2 * i);
            odd.parent = i == 1 ? -1 : 2 * (i - 2);
            odd.phi = {2 * i - 1};
            rc.elements.push_back(std::move(odd));
            ReferenceElement even;
            even.coeffs = unit(n, 2 * i - 2);
            even.parent = 2 * (i - 1);
            even.phi = {2 * i - 2};
            rc.elements.push_back(std::move(even));
        }
        /* eps_{n-2} + eps_{n-1} sits in the A_3 tail, so its label has two
         * members; alpha_{n-2} hangs off it */
        ReferenceElement pair;
        pair.coeffs = d_eps_pair(n, n - 2, n - 1);
        pair.parent = 2 * (m - 2);
        pair.phi = {n - 2, n - 1};
        rc.elements.push_back(std::move(pair));
        ReferenceElement even;
        even.coeffs = unit(n, n - 3);
        even.parent = 2 * (m - 1);
        even.phi = {n - 3};
        rc.elements.push_back(std::move(even));
    }
    return rc;
}

ReferenceCascade from_table(const std::vector<std::vector<int>>& coeffs,
                            const std::vector<int>& parent,
                            const std::vector<std::vector<int>>& phi) {
    ReferenceCascade rc;
    for (size_t i = 0; i < coeffs.size(); ++i)
        rc.elements.push_back({coeffs[i], parent[i], phi[i]});
    return rc;
}

}  // namespace

ReferenceCascade reference_cascade(SimpleType stype) {
    int n = stype.rank;
    switch (stype.family) {
        case Family::A: return type_a(n);
        case Family::B: return type_b(n);
        case Family::C: return type_c(n);
        case Family::D: return type_d(n);
        case Family::G:
            return from_table({{3, 2}, {1, 0}}, {-1, 0}, {{1}, {0}});
        case Family::F:
            return from_table({{2, 4, 3, 2}, {2, 2, 1, 0}, {0, 2, 1, 0}, {0, 0, 1, 0}},
                              {-1, 0, 1, 2}, {{3}, {0}, {1}, {2}});
        case Family::E:
            if (n == 6)
                return from_table({{1, 2, 3, 2, 1, 2}, {1, 1, 1, 1, 1, 0}, {0, 1, 1, 1, 0, 0},
                                   {0, 0, 1, 0, 0, 0}},
                                  {-1, 0, 1, 2}, {{5}, {0, 4}, {1, 3}, {2}});
            if (n == 7)
                return from_table(
                    {{1, 2, 3, 4, 3, 2, 2},
                     {1, 2, 2, 2, 1, 0, 1},
                     {1, 0, 0, 0, 0, 0, 0},
                     {0, 0, 1, 2, 1, 0, 1},
                     {0, 0, 1, 0, 0, 0, 0},
                     {0, 0, 0, 0, 1, 0, 0},
                     {0, 0, 0, 0, 0, 0, 1}},
                    {-1, 0, 1, 1, 3, 3, 3}, {{5}, {1}, {0}, {3}, {2}, {4}, {6}});
            return from_table(
                {{2, 3, 4, 5, 6, 4, 2, 3},
                 {0, 1, 2, 3, 4, 3, 2, 2},
                 {0, 1, 2, 2, 2, 1, 0, 1},
                 {0, 1, 0, 0, 0, 0, 0, 0},
                 {0, 0, 0, 1, 2, 1, 0, 1},
                 {0, 0, 0, 1, 0, 0, 0, 0},
                 {0, 0, 0, 0, 0, 1, 0, 0},
                 {0, 0, 0, 0, 0, 0, 0, 1}},
                {-1, 0, 1, 2, 2, 4, 4, 4}, {{0}, {6}, {2}, {1}, {4}, {3}, {5}, {7}});
    }
    throw InvalidRank("no reference cascade for " + to_string(stype));
}

}  // namespace kostant
