#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "kostant/analysis.hpp"
#include "kostant/parallel.hpp"
#include "kostant/reference.hpp"

namespace {

using namespace kostant;

struct Usage {
    std::string message;  // names the offending field
};

std::uint64_t env_seed() {
    const char* raw = std::getenv("CASCADE_LAB_SEED");
    if (!raw || !*raw) return 42;
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0')
        throw Usage{"CASCADE_LAB_SEED must be a decimal integer, got '" + std::string(raw) + "'"};
    return v;
}

SimpleType parse_type(const std::string& type_str, int rank) {
    if (type_str.size() != 1 || type_str[0] < 'A' || type_str[0] > 'G')
        throw Usage{"--type must be one of A B C D E F G, got '" + type_str + "'"};
    return SimpleType{static_cast<Family>(type_str[0]), rank};
}

std::vector<int> parse_t(const std::string& t_str, int rank) {
    std::vector<int> t;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw Usage{"--t must be comma-separated indices, got '" + t_str + "'"};
        int v = 0;
        for (char c : cur) {
            if (c < '0' || c > '9')
                throw Usage{"--t must be comma-separated indices, got '" + t_str + "'"};
            v = v * 10 + (c - '0');
        }
        if (v < 1 || v > rank)
            throw Usage{"--t index " + std::to_string(v) + " outside 1.." + std::to_string(rank)};
        t.push_back(v - 1);
        cur.clear();
    };
    for (char c : t_str) {
        if (c == ',')
            flush();
        else
            cur += c;
    }
    flush();
    return t;
}

std::string phi_label(const std::vector<int>& phi) {
    std::string s = "{";
    for (size_t i = 0; i < phi.size(); ++i) {
        if (i) s += ",";
        s += "α" + std::to_string(phi[i] + 1);
    }
    return s + "}";
}

int cmd_analyze(const SimpleType& stype, const std::vector<int>& t, bool oracle, int samples,
                bool epsilon) {
    RootSystem rs = build_root_system(stype);
    auto cascade = compute_cascade(rs);
    AnalyzeOptions opt;
    opt.with_oracle = oracle;
    opt.samples = samples;
    opt.seed = env_seed();
    opt.epsilon = epsilon;
    AnalysisRecord rec = analyze(rs, cascade, t, opt);
    std::cout << record_json(rs, rec, epsilon).dump(2) << "\n";
    return 0;
}

int cmd_enumerate(const SimpleType& stype, const std::string& filter, const std::string& format,
                  bool oracle, int samples, bool epsilon, int max_subsets, int jobs,
                  const std::string& out_path) {
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw Usage{"--out: cannot open '" + out_path + "' for writing"};
    }
    std::ostream& out = out_path.empty() ? std::cout : file;
    if (stype.rank > max_subsets)
        throw Usage{"rank " + std::to_string(stype.rank) + " exceeds --max-subsets cap " +
                    std::to_string(max_subsets)};
    RootSystem rs = build_root_system(stype);
    auto cascade = compute_cascade(rs);
    StructureConstants sc;
    if (oracle) sc = build_structure_constants(rs);

    int total = (1 << rs.rank()) - 1;
    std::vector<AnalysisRecord> records(total);
    AnalyzeOptions opt;
    opt.with_oracle = oracle;
    opt.samples = samples;
    opt.seed = env_seed();
    opt.epsilon = epsilon;
    parallel_for(
        total,
        [&](int i) {
            unsigned mask = static_cast<unsigned>(i) + 1;
            std::vector<int> t;
            for (int a = 0; a < rs.rank(); ++a)
                if (mask & (1u << a)) t.push_back(a);
            records[i] = analyze(rs, cascade, t, opt, oracle ? &sc : nullptr);
        },
        jobs);

    auto keep = [&](const AnalysisRecord& rec) {
        if (filter == "all") return true;
        if (filter == "generic") return rec.stab.generic;
        if (filter == "square-integrable") return rec.cls.square_integrable;
        if (filter == "quasi-quadratic") return rec.stab.quasi_quadratic;
        if (filter == "has-cp") return rec.cls.has_cp;
        if (filter == "optimal") return is_optimal(rec.nil);
        throw Usage{"--filter must be one of all, generic, square-integrable, quasi-quadratic, "
                    "has-cp, optimal; got '" +
                    filter + "'"};
    };

    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& rec : records)
            if (keep(rec)) arr.push_back(record_json(rs, rec, epsilon));
        out << arr.dump(2) << "\n";
    } else if (format == "csv") {
        out << csv_header() << "\n";
        for (const auto& rec : records)
            if (keep(rec)) out << csv_row(rs, rec, epsilon) << "\n";
    } else {
        throw Usage{"--format must be json or csv, got '" + format + "'"};
    }
    return 0;
}

int cmd_hasse(const SimpleType& stype, const std::string& format, bool epsilon) {
    RootSystem rs = build_root_system(stype);
    auto cascade = compute_cascade(rs);
    auto root_str = [&](int k) {
        const CascadeElement& el = cascade[k];
        if (epsilon) {
            auto e = epsilon_display(rs, rs.positive_roots[el.root]);
            if (e) return *e;
        }
        std::string s;
        for (int c : rs.positive_roots[el.root].coeffs) s += std::to_string(c);
        return s;
    };

    if (format == "dot") {
        std::cout << "digraph cascade {\n";
        for (size_t k = 0; k < cascade.size(); ++k)
            std::cout << "  n" << k + 1 << " [label=\"β" << k + 1 << "\" phi=\""
                      << phi_label(cascade[k].phi) << "\" root=\"" << root_str(static_cast<int>(k))
                      << "\"];\n";
        for (auto [p, c] : hasse_edges(cascade))
            std::cout << "  n" << p + 1 << " -> n" << c + 1 << ";\n";
        std::cout << "}\n";
    } else if (format == "ascii") {
        std::vector<int> depth(cascade.size(), 0);
        for (size_t k = 0; k < cascade.size(); ++k) {
            if (cascade[k].parent >= 0) depth[k] = depth[cascade[k].parent] + 1;
            std::cout << std::string(2 * depth[k], ' ') << "β" << k + 1 << " ("
                      << root_str(static_cast<int>(k)) << ") phi=" << phi_label(cascade[k].phi)
                      << "\n";
        }
    } else {
        throw Usage{"--format must be dot or ascii, got '" + format + "'"};
    }
    return 0;
}

int cmd_verify(const SimpleType& stype, const std::string& scope, int samples, int max_subsets) {
    if (scope != "cascade" && scope != "stabiliser" && scope != "index" && scope != "all")
        throw Usage{"--scope must be one of cascade, stabiliser, index, all; got '" + scope + "'"};
    if (stype.rank > max_subsets)
        throw Usage{"rank " + std::to_string(stype.rank) + " exceeds --max-subsets cap " +
                    std::to_string(max_subsets)};
    RootSystem rs = build_root_system(stype);
    auto cascade = compute_cascade(rs);
    std::uint64_t seed = env_seed();

    int passed = 0, failed = 0;
    std::string first_failure;
    auto note = [&](bool ok, const std::string& what) {
        if (ok)
            ++passed;
        else {
            ++failed;
            if (first_failure.empty()) first_failure = what;
        }
    };

    if (scope == "cascade" || scope == "all") {
        auto ref = reference_cascade(stype);
        bool ok = ref.elements.size() == cascade.size();
        for (size_t k = 0; ok && k < cascade.size(); ++k) {
            const auto& coeffs = rs.positive_roots[cascade[k].root].coeffs;
            bool found = false;
            for (const auto& el : ref.elements)
                if (el.coeffs == coeffs) {
                    found = el.phi == cascade[k].phi;
                    int rp = el.parent, cp = cascade[k].parent;
                    if (found)
                        found = (rp < 0) == (cp < 0) &&
                                (rp < 0 ||
                                 ref.elements[rp].coeffs == rs.positive_roots[cascade[cp].root].coeffs);
                    break;
                }
            ok = found;
        }
        note(ok, "cascade table for " + to_string(stype));
    }

    if (scope != "cascade") {
        StructureConstants sc = build_structure_constants(rs);
        for (unsigned mask = 1; mask < (1u << rs.rank()); ++mask) {
            std::vector<int> t;
            for (int a = 0; a < rs.rank(); ++a)
                if (mask & (1u << a)) t.push_back(a);
            Nilradical nil = build_nilradical(rs, cascade, t);
            std::string label = "T={";
            for (size_t i = 0; i < t.size(); ++i)
                label += (i ? "," : "") + std::to_string(t[i] + 1);
            label += "}";

            if (scope == "stabiliser" || scope == "all") {
                StabiliserReport rep = cascade_stabiliser(rs, cascade, nil);
                auto [sdim, ssup] = stabiliser_oracle(rs, sc, cascade, nil, {});
                auto [tdim, tsup] = tilde_stabiliser_oracle(rs, sc, cascade, nil);
                note(sdim == nil.index && ssup == rep.stab_roots && tdim == nil.index &&
                         tsup == rep.stab_roots,
                     "stabiliser oracle at " + label);
            }
            if (scope == "index" || scope == "all") {
                int est = index_oracle(rs, sc, nil, samples, seed);
                int sat = saturation_oracle(rs, sc, cascade, nil);
                Nilradical big = optimisation(rs, cascade, nil);
                note(est == nil.index && sat == 2 * nil.dim - big.dim,
                     "index oracle at " + label);
            }
        }
    }

    std::cout << passed << " passed, " << failed << " failed\n";
    if (failed > 0) {
        std::cerr << "first failure: " << first_failure << "\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kostant cascade laboratory for nilradicals of parabolic subalgebras"};
    app.require_subcommand(1);

    std::string type_str, t_str, filter = "all", format_enum = "json", format_hasse = "ascii",
                scope = "all", out_path;
    int rank = 0, samples = 5, max_subsets = 12, jobs = 0;
    bool oracle = false, epsilon = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--type", type_str, "family letter A..G")->required();
        sub->add_option("--rank", rank, "rank within the family")->required();
    };

    CLI::App* an = app.add_subcommand("analyze", "invariants of one defining set");
    add_common(an);
    an->add_option("--t", t_str, "comma-separated 1-based simple root indices")->required();
    an->add_flag("--oracle", oracle, "append the structure-constant cross-check");
    an->add_option("--samples", samples, "random points for the index estimate");
    an->add_flag("--epsilon", epsilon, "classical roots in epsilon coordinates");

    CLI::App* en = app.add_subcommand("enumerate", "all defining sets of one system");
    add_common(en);
    en->add_option("--filter", filter, "all | generic | square-integrable | quasi-quadratic | has-cp | optimal");
    en->add_option("--format", format_enum, "json | csv");
    en->add_flag("--oracle", oracle, "append the structure-constant cross-check");
    en->add_option("--samples", samples, "random points for the index estimate");
    en->add_flag("--epsilon", epsilon, "classical roots in epsilon coordinates");
    en->add_option("--max-subsets", max_subsets, "largest rank to enumerate");
    en->add_option("--jobs", jobs, "worker threads, 0 = hardware");
    en->add_option("--out", out_path, "write the table to a file instead of stdout");

    CLI::App* ha = app.add_subcommand("hasse", "cascade forest of one system");
    add_common(ha);
    ha->add_option("--format", format_hasse, "dot | ascii");
    ha->add_flag("--epsilon", epsilon, "classical roots in epsilon coordinates");

    CLI::App* ve = app.add_subcommand("verify", "cross-check combinatorics against the oracle");
    add_common(ve);
    ve->add_option("--scope", scope, "cascade | stabiliser | index | all");
    ve->add_option("--samples", samples, "random points for the index estimate");
    ve->add_option("--max-subsets", max_subsets, "largest rank to sweep");

    CLI::App* ta = app.add_subcommand("tables", "enumerate --filter all --format csv");
    add_common(ta);
    ta->add_flag("--oracle", oracle, "append the structure-constant cross-check");
    ta->add_option("--samples", samples, "random points for the index estimate");
    ta->add_flag("--epsilon", epsilon, "classical roots in epsilon coordinates");
    ta->add_option("--max-subsets", max_subsets, "largest rank to enumerate");
    ta->add_option("--jobs", jobs, "worker threads, 0 = hardware");
    ta->add_option("--out", out_path, "write the table to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        SimpleType stype = parse_type(type_str, rank);
        if (an->parsed()) return cmd_analyze(stype, parse_t(t_str, rank), oracle, samples, epsilon);
        if (en->parsed())
            return cmd_enumerate(stype, filter, format_enum, oracle, samples, epsilon, max_subsets,
                                 jobs, out_path);
        if (ha->parsed()) return cmd_hasse(stype, format_hasse, epsilon);
        if (ve->parsed()) return cmd_verify(stype, scope, samples, max_subsets);
        if (ta->parsed())
            return cmd_enumerate(stype, "all", "csv", oracle, samples, epsilon, max_subsets, jobs,
                                 out_path);
        return 2;
    } catch (const Usage& u) {
        std::cerr << "usage error: " << u.message << "\n";
        return 2;
    } catch (const InvalidRank& e) {
        std::cerr << "usage error: --rank: " << e.what() << "\n";
        return 2;
    } catch (const EmptyT& e) {
        std::cerr << "usage error: --t: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 3;
    }
}
