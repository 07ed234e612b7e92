#include "kostant/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "kostant/exactlinalg.hpp"

namespace kostant {

namespace {

/* tiny exact rational; every value in the derivation is a ratio of root
 * lengths times a structure constant, so long long never comes close to
 * overflowing */
struct Frac {
    long long num = 0;
    long long den = 1;

    Frac() = default;
    Frac(long long n, long long d = 1) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }
    Frac operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
    Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
    long long as_integer() const {
        if (den != 1) throw InternalInconsistency("structure constant is not an integer");
        return num;
    }
};

std::vector<int> subtract(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> d(a.size());
    for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

/* largest k with b - k a still a root */
int string_down(const RootSystem& rs, const std::vector<int>& b, const std::vector<int>& a) {
    int p = 0;
    std::vector<int> cur = b;
    while (true) {
        cur = subtract(cur, a);
        if (!is_root(rs, cur)) break;
        ++p;
    }
    return p;
}

uint64_t splitmix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

long long draw_coord(std::mt19937_64& eng) {
    return static_cast<long long>(eng() % 2000001ull) - 1000000;
}

/* pairing matrix of the nilradical's roots against the cascade point in the
 * lowered-root model: column gamma meets row delta when some cascade root
 * splits as gamma + delta */
IMatrix pairing_matrix(const RootSystem& rs, const StructureConstants& sc,
                       const std::vector<CascadeElement>& cascade, const Nilradical& nil,
                       const std::vector<int>& cols, const std::vector<long long>& weights) {
    int m = rs.size();
    std::vector<int> row_of(m, -1);
    for (size_t r = 0; r < nil.roots.size(); ++r) row_of[nil.roots[r]] = static_cast<int>(r);

    IMatrix mat(static_cast<int>(nil.roots.size()), static_cast<int>(cols.size()));
    for (size_t jj = 0; jj < nil.cascade_indices.size(); ++jj) {
        int beta = cascade[nil.cascade_indices[jj]].root;
        long long w = weights.empty() ? 1 : weights[jj];
        for (size_t c = 0; c < cols.size(); ++c) {
            int gamma = cols[c];
            if (gamma == beta) continue;
            int delta = rs.find(subtract(rs.positive_roots[beta].coeffs,
                                         rs.positive_roots[gamma].coeffs));
            if (delta < 0 || row_of[delta] < 0) continue;
            mat.at(row_of[delta], static_cast<int>(c)) += w * sc.brackets[gamma][m + beta];
        }
    }
    return mat;
}

std::pair<int, std::vector<int>> kernel_support(const IMatrix& mat, const std::vector<int>& cols) {
    auto basis = kernel_ff(mat);
    std::set<int> sup;
    for (const auto& v : basis)
        for (size_t c = 0; c < v.size(); ++c)
            if (v[c] != 0) sup.insert(cols[c]);
    return {static_cast<int>(basis.size()), std::vector<int>(sup.begin(), sup.end())};
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t base, const SimpleType& t, std::uint64_t t_mask,
                       std::uint64_t sample) {
    uint64_t s = splitmix(base);
    s = splitmix(s ^ static_cast<uint64_t>(static_cast<unsigned char>(t.family)));
    s = splitmix(s ^ static_cast<uint64_t>(t.rank));
    s = splitmix(s ^ t_mask);
    s = splitmix(s ^ sample);
    return s;
}

StructureConstants build_structure_constants(const RootSystem& rs, bool revlex_tiebreak) {
    int m = rs.size();
    int n = rs.rank();

    /* total order: height first, then a lexicographic tie-break on the
     * coefficient vector (optionally read right to left) */
    std::vector<int> ord(m);
    {
        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
            const Root& ra = rs.positive_roots[a];
            const Root& rb = rs.positive_roots[b];
            if (ra.height != rb.height) return ra.height < rb.height;
            if (!revlex_tiebreak) return ra.coeffs < rb.coeffs;
            return std::lexicographical_compare(ra.coeffs.rbegin(), ra.coeffs.rend(),
                                                rb.coeffs.rbegin(), rb.coeffs.rend());
        });
        for (int i = 0; i < m; ++i) ord[perm[i]] = i;
    }

    /* N over positive special pairs, antisymmetrized on access */
    std::vector<std::vector<long long>> npos(m, std::vector<long long>(m, 0));
    auto n_pos = [&](int a, int b) -> long long {
        return ord[a] < ord[b] ? npos[a][b] : -npos[b][a];
    };
    auto norm2 = [&](int r) { return rs.bilinear(rs.positive_roots[r].coeffs, rs.positive_roots[r].coeffs); };

    std::vector<int> by_order(m);
    std::iota(by_order.begin(), by_order.end(), 0);
    std::sort(by_order.begin(), by_order.end(), [&](int a, int b) { return ord[a] < ord[b]; });

    for (int g : by_order) {
        const Root& gamma = rs.positive_roots[g];
        if (gamma.height < 2) continue;

        /* all splittings gamma = a + b with ord(a) < ord(b) */
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < m; ++a) {
            if (rs.positive_roots[a].height >= gamma.height) continue;
            int b = rs.find(subtract(gamma.coeffs, rs.positive_roots[a].coeffs));
            if (b < 0 || ord[a] >= ord[b]) continue;
            pairs.emplace_back(a, b);
        }
        std::sort(pairs.begin(), pairs.end(),
                  [&](const auto& x, const auto& y) { return ord[x.first] < ord[y.first]; });
        if (pairs.empty())
            throw InternalInconsistency("no splitting of a composite root in " + to_string(rs.stype));

        /* the least splitting carries the positive sign convention */
        int a1 = pairs[0].first, b1 = pairs[0].second;
        int p = string_down(rs, rs.positive_roots[b1].coeffs, rs.positive_roots[a1].coeffs);
        npos[a1][b1] = p + 1;

        /* each remaining splitting follows from the Jacobi identity against
         * the lowered first member of the least splitting */
        for (size_t q = 1; q < pairs.size(); ++q) {
            int a = pairs[q].first, b = pairs[q].second;
            Frac total(0);
            int sig = rs.find(subtract(rs.positive_roots[b1].coeffs, rs.positive_roots[a].coeffs));
            if (sig >= 0) {
                Frac n_b1_ma = Frac(-norm2(sig), norm2(b1)) * Frac(n_pos(a, sig));
                total = total + n_b1_ma * Frac(n_pos(sig, a1));
            }
            int rho = rs.find(subtract(rs.positive_roots[a].coeffs, rs.positive_roots[a1].coeffs));
            if (rho >= 0) {
                Frac n_ma_a1 = Frac(-norm2(rho), norm2(a)) * Frac(n_pos(rho, a1));
                Frac n_mrho_b1 = Frac(norm2(b), norm2(b1)) * Frac(n_pos(rho, b));
                total = total + n_ma_a1 * n_mrho_b1;
            }
            Frac x = total * Frac(norm2(g), norm2(b) * npos[a1][b1]);
            long long value = x.as_integer();
            int pab = string_down(rs, rs.positive_roots[b].coeffs, rs.positive_roots[a].coeffs);
            if (value != pab + 1 && value != -(pab + 1))
                throw InternalInconsistency("structure constant fails the root-string bound in " +
                                            to_string(rs.stype));
            npos[a][b] = value;
        }
    }

    StructureConstants sc;
    sc.brackets.assign(2 * m, std::vector<int>(2 * m, 0));
    for (int g = 0; g < m; ++g)
        for (int d = 0; d < m; ++d) {
            if (g == d) continue;
            std::vector<int> sum(n);
            for (int i = 0; i < n; ++i)
                sum[i] = rs.positive_roots[g].coeffs[i] + rs.positive_roots[d].coeffs[i];
            int s = rs.find(sum);
            if (s >= 0) {
                sc.brackets[g][d] = static_cast<int>(n_pos(g, d));
                sc.brackets[m + g][m + d] = -sc.brackets[g][d];
            }
            /* mixed pair e_g, e_{-d}: the cyclic identity transfers the
             * constant from the positive pair that shares its sum */
            int dif = rs.find(subtract(rs.positive_roots[g].coeffs, rs.positive_roots[d].coeffs));
            if (dif >= 0) {
                Frac v = Frac(-norm2(dif), norm2(g)) * Frac(n_pos(d, dif));
                sc.brackets[g][m + d] = static_cast<int>(v.as_integer());
            } else {
                int neg = rs.find(subtract(rs.positive_roots[d].coeffs, rs.positive_roots[g].coeffs));
                if (neg >= 0) {
                    Frac v = Frac(norm2(neg), norm2(d)) * Frac(n_pos(neg, g));
                    sc.brackets[g][m + d] = static_cast<int>(v.as_integer());
                }
            }
        }
    for (int g = 0; g < m; ++g)
        for (int d = 0; d < m; ++d) {
            if (g == d) continue;
            sc.brackets[m + g][d] = -sc.brackets[d][m + g];
        }

    sc.cartan_pairings.assign(m, std::vector<int>(n, 0));
    sc.coroots.assign(m, std::vector<int>(n, 0));
    for (int g = 0; g < m; ++g) {
        long long len = norm2(g);
        for (int i = 0; i < n; ++i) {
            sc.cartan_pairings[g][i] = rs.pairing(rs.positive_roots[g].coeffs, i);
            long long num = 2ll * rs.positive_roots[g].coeffs[i] * rs.symmetrizer[i];
            if (num % len != 0)
                throw InternalInconsistency("coroot expansion is not integral in " +
                                            to_string(rs.stype));
            sc.coroots[g][i] = static_cast<int>(num / len);
        }
    }
    return sc;
}

namespace {

/* sparse bracket of two basis elements of the algebra spanned by all root
 * vectors and the simple coroots: indices [0, m) positive root vectors,
 * [m, 2m) negative, [2m, 2m + rank) coroots */
std::map<int, long long> bracket_basis(const RootSystem& rs, const StructureConstants& sc, int x,
                                       int y) {
    int m = rs.size();
    std::map<int, long long> out;
    auto root_of = [&](int s) { return s < m ? s : s - m; };
    auto sign_of = [&](int s) { return s < m ? 1 : -1; };

    bool xh = x >= 2 * m, yh = y >= 2 * m;
    if (xh && yh) return out;
    if (xh || yh) {
        int h = (xh ? x : y) - 2 * m;
        int e = xh ? y : x;
        long long c = sign_of(e) * sc.cartan_pairings[root_of(e)][h];
        if (!xh) c = -c;  // [e, h] = -[h, e]
        if (c != 0) out[e] = c;
        return out;
    }

    int rx = root_of(x), ry = root_of(y);
    if (rx == ry && sign_of(x) != sign_of(y)) {  // opposite pair brackets to a coroot
        int s = sign_of(x);
        for (int i = 0; i < rs.rank(); ++i)
            if (sc.coroots[rx][i] != 0) out[2 * m + i] = s * sc.coroots[rx][i];
        return out;
    }
    long long nval = sc.brackets[x][y];
    if (nval == 0) return out;
    std::vector<int> sum(rs.rank());
    for (int i = 0; i < rs.rank(); ++i)
        sum[i] = sign_of(x) * rs.positive_roots[rx].coeffs[i] +
                 sign_of(y) * rs.positive_roots[ry].coeffs[i];
    int target = rs.find(sum);
    if (target >= 0) {
        out[target] = nval;
        return out;
    }
    for (auto& v : sum) v = -v;
    target = rs.find(sum);
    if (target < 0) throw InternalInconsistency("bracket target is not a root");
    out[m + target] = nval;
    return out;
}

std::map<int, long long> bracket_elem(const RootSystem& rs, const StructureConstants& sc,
                                      const std::map<int, long long>& v, int y) {
    std::map<int, long long> out;
    for (const auto& [k, c] : v)
        for (const auto& [t, w] : bracket_basis(rs, sc, k, y)) {
            out[t] += c * w;
            if (out[t] == 0) out.erase(t);
        }
    return out;
}

bool jacobi_triple(const RootSystem& rs, const StructureConstants& sc, int x, int y, int z) {
    std::map<int, long long> acc;
    auto add = [&](const std::map<int, long long>& v) {
        for (const auto& [k, c] : v) {
            acc[k] += c;
            if (acc[k] == 0) acc.erase(k);
        }
    };
    add(bracket_elem(rs, sc, bracket_basis(rs, sc, x, y), z));
    add(bracket_elem(rs, sc, bracket_basis(rs, sc, y, z), x));
    add(bracket_elem(rs, sc, bracket_basis(rs, sc, z, x), y));
    return acc.empty();
}

}  // namespace

bool check_jacobi_exhaustive(const RootSystem& rs, const StructureConstants& sc) {
    int dim = 2 * rs.size() + rs.rank();
    for (int x = 0; x < dim; ++x)
        for (int y = x + 1; y < dim; ++y)
            for (int z = y + 1; z < dim; ++z)
                if (!jacobi_triple(rs, sc, x, y, z)) return false;
    return true;
}

bool check_jacobi_sampled(const RootSystem& rs, const StructureConstants& sc, int samples,
                          std::uint64_t seed) {
    int dim = 2 * rs.size() + rs.rank();
    std::mt19937_64 eng(mix_seed(seed, rs.stype, 0, 0));
    for (int s = 0; s < samples; ++s) {
        int x = static_cast<int>(eng() % dim);
        int y = static_cast<int>(eng() % dim);
        int z = static_cast<int>(eng() % dim);
        if (!jacobi_triple(rs, sc, x, y, z)) return false;
    }
    return true;
}

std::pair<int, std::vector<int>> stabiliser_oracle(const RootSystem& rs,
                                                   const StructureConstants& sc,
                                                   const std::vector<CascadeElement>& cascade,
                                                   const Nilradical& nil,
                                                   const std::vector<long long>& weights) {
    IMatrix mat = pairing_matrix(rs, sc, cascade, nil, nil.roots, weights);
    return kernel_support(mat, nil.roots);
}

int index_oracle(const RootSystem& rs, const StructureConstants& sc, const Nilradical& nil,
                 int samples, std::uint64_t seed) {
    int dim = nil.dim;
    int m = rs.size();
    std::vector<int> pos_of(m, -1);
    for (int c = 0; c < dim; ++c) pos_of[nil.roots[c]] = c;

    uint64_t mask = 0;
    for (int a : nil.t_set) mask |= 1ull << a;

    int best = 0;
    for (int s = 0; s < samples; ++s) {
        std::mt19937_64 eng(mix_seed(seed, rs.stype, mask, static_cast<uint64_t>(s)));
        std::vector<long long> xi(dim);
        for (auto& v : xi) v = draw_coord(eng);

        IMatrix b(dim, dim);
        for (int c1 = 0; c1 < dim; ++c1)
            for (int c2 = c1 + 1; c2 < dim; ++c2) {
                int g = nil.roots[c1], d = nil.roots[c2];
                if (sc.brackets[g][d] == 0) continue;
                std::vector<int> sum(rs.rank());
                for (int i = 0; i < rs.rank(); ++i)
                    sum[i] = rs.positive_roots[g].coeffs[i] + rs.positive_roots[d].coeffs[i];
                int t = rs.find(sum);
                if (t < 0 || pos_of[t] < 0)
                    throw InternalInconsistency("bracket of nilradical roots left the nilradical");
                Int v = Int(sc.brackets[g][d]) * xi[pos_of[t]];
                b.at(c1, c2) = v;
                b.at(c2, c1) = -v;
            }
        best = std::max(best, rank_ff(std::move(b)));
    }
    return dim - best;
}

int saturation_oracle(const RootSystem& rs, const StructureConstants& sc,
                      const std::vector<CascadeElement>& cascade, const Nilradical& nil) {
    IMatrix mat = pairing_matrix(rs, sc, cascade, nil, nil.roots, {});
    int k = static_cast<int>(nil.cascade_indices.size());
    IMatrix ext(mat.rows, mat.cols + k);
    std::vector<int> row_of(rs.size(), -1);
    for (size_t r = 0; r < nil.roots.size(); ++r) row_of[nil.roots[r]] = static_cast<int>(r);
    for (int r = 0; r < mat.rows; ++r)
        for (int c = 0; c < mat.cols; ++c) ext.at(r, c) = mat.at(r, c);
    for (int j = 0; j < k; ++j)
        ext.at(row_of[cascade[nil.cascade_indices[j]].root], mat.cols + j) = 1;
    return rank_ff(std::move(ext));
}

std::pair<int, std::vector<int>> tilde_stabiliser_oracle(const RootSystem& rs,
                                                         const StructureConstants& sc,
                                                         const std::vector<CascadeElement>& cascade,
                                                         const Nilradical& nil) {
    Nilradical big = optimisation(rs, cascade, nil);
    IMatrix mat = pairing_matrix(rs, sc, cascade, nil, big.roots, {});
    return kernel_support(mat, big.roots);
}

OracleReport run_oracle(const RootSystem& rs, const StructureConstants& sc,
                        const std::vector<CascadeElement>& cascade, const Nilradical& nil,
                        const std::vector<int>& expected_stab_roots, int samples,
                        std::uint64_t seed) {
    OracleReport rep;
    auto [sdim, ssup] = stabiliser_oracle(rs, sc, cascade, nil, {});
    rep.stab_dim = sdim;
    rep.stab_root_support = ssup;
    rep.index_estimate = index_oracle(rs, sc, nil, samples, seed);
    rep.saturation_dim = saturation_oracle(rs, sc, cascade, nil);

    Nilradical big = optimisation(rs, cascade, nil);
    auto [tdim, tsup] = tilde_stabiliser_oracle(rs, sc, cascade, nil);

    rep.agrees = sdim == nil.index && ssup == expected_stab_roots &&
                 rep.index_estimate == nil.index &&
                 rep.saturation_dim == 2 * nil.dim - big.dim && tdim == nil.index &&
                 tsup == expected_stab_roots;
    return rep;
}

}  // namespace kostant
