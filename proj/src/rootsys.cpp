#include "kostant/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace kostant {

namespace {

void check_rank(SimpleType t) {
    int n = t.rank;
    bool ok = false;
    switch (t.family) {
        case Family::A: ok = n >= 1; break;
        case Family::B: ok = n >= 2; break;
        case Family::C: ok = n >= 1; break;
        case Family::D: ok = n >= 4; break;
        case Family::E: ok = n >= 6 && n <= 8; break;
        case Family::F: ok = n == 4; break;
        case Family::G: ok = n == 2; break;
    }
    if (!ok) throw InvalidRank("rank " + std::to_string(n) + " not constructible for family " +
                               std::string(1, static_cast<char>(t.family)));
}

/* Cartan matrix and minimal symmetrizer in the fixed simple-root numbering:
 * chains are 1..n; B has short alpha_n, C long alpha_n, D forks at
 * alpha_{n-2}; E_n is the chain alpha_1..alpha_{n-1} with alpha_n attached to
 * alpha_3 / alpha_4 / alpha_5 for n = 6 / 7 / 8; F_4 has alpha_1, alpha_2
 * short; G_2 has alpha_1 short. */
void cartan_data(SimpleType t, std::vector<std::vector<int>>& a, std::vector<int>& d) {
    int n = t.rank;
    a.assign(n, std::vector<int>(n, 0));
    d.assign(n, 1);
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto bond = [&](int i, int j) { a[i][j] = a[j][i] = -1; };  // 0-based
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            a[n - 1][n - 2] = -2;  // <alpha_{n-1}, alpha_n^vee> = -2
            for (int i = 0; i + 1 < n; ++i) d[i] = 2;
            d[n - 1] = 1;
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            if (n >= 2) a[n - 2][n - 1] = -2;  // <alpha_n, alpha_{n-1}^vee> = -2
            d[n - 1] = 2;
            break;
        case Family::D:
            for (int i = 0; i + 1 < n - 1; ++i) bond(i, i + 1);
            bond(n - 3, n - 1);
            break;
        case Family::E:
            for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
            bond(n == 6 ? 2 : n == 7 ? 3 : 4, n - 1);
            break;
        case Family::F:
            for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
            a[1][2] = -2;  // alpha_2 short, alpha_3 long
            d[2] = d[3] = 2;
            break;
        case Family::G:
            bond(0, 1);
            a[0][1] = -3;  // alpha_1 short, alpha_2 long
            d[1] = 3;
            break;
    }
}

}  // namespace

int positive_root_count(SimpleType t) {
    int n = t.rank;
    switch (t.family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
        case Family::F: return 24;
        case Family::G: return 6;
    }
    return 0;
}

RootSystem build_root_system(SimpleType stype) {
    check_rank(stype);
    RootSystem rs;
    rs.stype = stype;
    cartan_data(stype, rs.cartan, rs.symmetrizer);
    int n = stype.rank;

    /* grow height by height via root strings: gamma + alpha_i is a root iff
     * q >= 1, where q = p - <gamma, alpha_i^vee> and p is the largest k with
     * gamma - k alpha_i a root */
    std::map<std::vector<int>, int> seen;
    std::vector<std::vector<int>> layer;
    for (int i = 0; i < n; ++i) {
        std::vector<int> c(n, 0);
        c[i] = 1;
        layer.push_back(c);
        seen.emplace(c, 0);
    }
    std::vector<std::vector<std::vector<int>>> layers{layer};
    while (!layers.back().empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& g : layers.back()) {
            for (int i = 0; i < n; ++i) {
                /* p = largest k with gamma - k alpha_i a root; for positive
                 * gamma the whole descending string stays positive (a negative
                 * member would force gamma to be a multiple of alpha_i), so a
                 * membership test against the roots found so far suffices */
                int p = 0;
                std::vector<int> back = g;
                while (true) {
                    back[i] -= 1;
                    bool nonneg = std::all_of(back.begin(), back.end(), [](int v) { return v >= 0; });
                    if (!nonneg || !seen.count(back)) break;
                    ++p;
                }
                if (p - rs.pairing(g, i) >= 1) {
                    std::vector<int> up = g;
                    up[i] += 1;
                    if (!seen.count(up)) {
                        seen.emplace(up, 0);
                        next.push_back(up);
                    }
                }
            }
        }
        layers.push_back(std::move(next));
    }

    for (auto& lay : layers) {
        std::sort(lay.begin(), lay.end());
        for (auto& c : lay) {
            rs.index_of[c] = static_cast<int>(rs.positive_roots.size());
            rs.positive_roots.push_back(make_root(c));
        }
    }
    rs.highest_root = rs.size() - 1;

    if (rs.size() != positive_root_count(stype))
        throw InternalInconsistency("root generation produced " + std::to_string(rs.size()) +
                                    " roots for " + to_string(stype));
    return rs;
}

bool root_order_leq(const RootSystem& rs, const Root& g, const Root& h) {
    for (int i = 0; i < rs.rank(); ++i)
        if (g.coeffs[i] > h.coeffs[i]) return false;
    return true;
}

std::vector<int> support(const RootSystem& rs, const Root& g) {
    std::vector<int> s;
    for (int i = 0; i < rs.rank(); ++i)
        if (g.coeffs[i] != 0) s.push_back(i);
    return s;
}

bool is_root(const RootSystem& rs, const std::vector<int>& coeffs) {
    if (static_cast<int>(coeffs.size()) != rs.rank()) return false;
    if (rs.index_of.count(coeffs)) return true;
    std::vector<int> neg(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
    return rs.index_of.count(neg) > 0;
}

std::optional<std::string> epsilon_display(const RootSystem& rs, const Root& g) {
    Family f = rs.stype.family;
    if (f != Family::A && f != Family::B && f != Family::C && f != Family::D) return std::nullopt;
    int n = rs.rank();
    const auto& c = g.coeffs;
    auto at = [&](int k) { return (k >= 0 && k < n) ? c[k] : 0; };
    std::vector<int> v;
    if (f == Family::A) {
        v.resize(n + 1);
        for (int k = 0; k <= n; ++k) v[k] = at(k) - at(k - 1);
    } else if (f == Family::B) {
        v.resize(n);
        for (int k = 0; k < n; ++k) v[k] = at(k) - at(k - 1);
    } else if (f == Family::C) {
        v.resize(n);
        for (int k = 0; k + 1 < n; ++k) v[k] = at(k) - at(k - 1);
        v[n - 1] = 2 * at(n - 1) - at(n - 2);
    } else {
        v.resize(n);
        for (int k = 0; k + 2 < n; ++k) v[k] = at(k) - at(k - 1);
        v[n - 2] = at(n - 2) + at(n - 1) - at(n - 3);
        v[n - 1] = at(n - 1) - at(n - 2);
    }
    std::string out;
    for (size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        if (!out.empty()) out += v[k] > 0 ? "+" : "-";
        else if (v[k] < 0) out += "-";
        int m = std::abs(v[k]);
        if (m != 1) out += std::to_string(m);
        out += "e" + std::to_string(k + 1);
    }
    return out.empty() ? "0" : out;
}

}  // namespace kostant
