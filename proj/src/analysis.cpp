#include "kostant/analysis.hpp"

#include <sstream>

namespace kostant {

namespace {

std::string root_text(const RootSystem& rs, int r, bool epsilon) {
    if (epsilon) {
        auto e = epsilon_display(rs, rs.positive_roots[r]);
        if (e) return *e;
    }
    std::string s;
    for (int c : rs.positive_roots[r].coeffs) s += std::to_string(c);
    return s;
}

nlohmann::ordered_json root_json(const RootSystem& rs, int r, bool epsilon) {
    if (epsilon) {
        auto e = epsilon_display(rs, rs.positive_roots[r]);
        if (e) return *e;
    }
    return rs.positive_roots[r].coeffs;
}

nlohmann::ordered_json root_list_json(const RootSystem& rs, const std::vector<int>& roots,
                                      bool epsilon) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int r : roots) arr.push_back(root_json(rs, r, epsilon));
    return arr;
}

std::vector<int> one_based(const std::vector<int>& v) {
    std::vector<int> out;
    out.reserve(v.size());
    for (int x : v) out.push_back(x + 1);
    return out;
}

std::string join_semicolon(const std::vector<std::string>& parts) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ";";
        out += parts[i];
    }
    return out;
}

std::string root_set_text(const RootSystem& rs, const std::vector<int>& roots, bool epsilon) {
    std::vector<std::string> parts;
    parts.reserve(roots.size());
    for (int r : roots) parts.push_back(root_text(rs, r, epsilon));
    return join_semicolon(parts);
}

std::string int_set_text(const std::vector<int>& v) {
    std::vector<std::string> parts;
    parts.reserve(v.size());
    for (int x : v) parts.push_back(std::to_string(x));
    return join_semicolon(parts);
}

}  // namespace

AnalysisRecord analyze(const RootSystem& rs, const std::vector<CascadeElement>& cascade,
                       const std::vector<int>& t_set, const AnalyzeOptions& opt,
                       const StructureConstants* sc) {
    AnalysisRecord rec;
    rec.stype = rs.stype;
    rec.nil = build_nilradical(rs, cascade, t_set);
    for (int k : rec.nil.cascade_indices) rec.cascade_roots.push_back(cascade[k].root);
    rec.stab = cascade_stabiliser(rs, cascade, rec.nil);
    rec.cls = classify(rs, cascade, rec.nil);
    if (opt.with_oracle) {
        StructureConstants local;
        if (!sc) {
            local = build_structure_constants(rs);
            sc = &local;
        }
        rec.oracle = run_oracle(rs, *sc, cascade, rec.nil, rec.stab.stab_roots, opt.samples,
                                opt.seed);
    }
    return rec;
}

nlohmann::ordered_json record_json(const RootSystem& rs, const AnalysisRecord& rec, bool epsilon) {
    nlohmann::ordered_json j;
    j["type"] = std::string(1, static_cast<char>(rec.stype.family));
    j["rank"] = rec.stype.rank;
    j["t"] = one_based(rec.nil.t_set);
    j["dim"] = rec.nil.dim;
    j["depth"] = rec.nil.depth;
    j["dim_centre"] = static_cast<int>(rec.nil.centre_roots.size());
    j["cascade"] = root_list_json(rs, rec.cascade_roots, epsilon);
    j["tilde_t"] = one_based(rec.nil.tilde_t);
    j["optimal"] = is_optimal(rec.nil);
    j["index"] = rec.nil.index;
    j["b"] = rec.nil.b;
    j["stab_roots"] = root_list_json(rs, rec.stab.stab_roots, epsilon);
    j["generic"] = rec.stab.generic;
    if (rec.stab.witness) {
        nlohmann::ordered_json w;
        w["delta"] = root_json(rs, rec.stab.witness->first, epsilon);
        w["delta_prime"] = root_json(rs, rec.stab.witness->second, epsilon);
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["frobenius_roots"] = root_list_json(rs, rec.stab.frobenius_roots, epsilon);
    j["dim_frobenius"] = static_cast<int>(rec.stab.frobenius_roots.size());
    j["quasi_quadratic"] = rec.stab.quasi_quadratic;
    j["square_integrable"] = rec.cls.square_integrable;
    j["has_cp"] = rec.cls.has_cp;
    if (!rec.cls.has_cp)
        j["cp_witness"] = nullptr;
    else if (!rec.cls.cp_witness)
        j["cp_witness"] = "heisenberg";
    else
        j["cp_witness"] = *rec.cls.cp_witness + 1;
    j["freeness"] = to_string(rec.cls.freeness);
    j["trdeg_SU"] = rec.cls.trdeg_SU;
    j["trdeg_SN"] = rec.cls.trdeg_SN;
    j["finitely_generated"] = rec.cls.finitely_generated;
    j["rational_singularities"] = rec.cls.rational_singularities;
    if (rec.oracle) {
        nlohmann::ordered_json o;
        o["stab_dim"] = rec.oracle->stab_dim;
        o["index_estimate"] = rec.oracle->index_estimate;
        o["saturation_dim"] = rec.oracle->saturation_dim;
        o["agrees"] = rec.oracle->agrees;
        j["oracle"] = o;
    }
    return j;
}

std::string csv_header() {
    return "type,rank,t,dim,depth,dim_centre,cascade,tilde_t,optimal,index,b,stab_roots,"
           "generic,witness_delta,witness_delta_prime,frobenius_roots,dim_frobenius,"
           "quasi_quadratic,square_integrable,has_cp,cp_witness,freeness,trdeg_SU,trdeg_SN,"
           "finitely_generated,rational_singularities,oracle_stab_dim,oracle_index_estimate,"
           "oracle_saturation_dim,oracle_agrees";
}

std::string csv_row(const RootSystem& rs, const AnalysisRecord& rec, bool epsilon) {
    std::ostringstream out;
    auto flag = [](bool v) { return v ? "true" : "false"; };

    out << static_cast<char>(rec.stype.family) << ',' << rec.stype.rank << ','
        << int_set_text(one_based(rec.nil.t_set)) << ',' << rec.nil.dim << ',' << rec.nil.depth
        << ',' << rec.nil.centre_roots.size() << ',';
    out << root_set_text(rs, rec.cascade_roots, epsilon) << ',';
    out << int_set_text(one_based(rec.nil.tilde_t)) << ',' << flag(is_optimal(rec.nil)) << ','
        << rec.nil.index << ',' << rec.nil.b << ',' << root_set_text(rs, rec.stab.stab_roots, epsilon)
        << ',' << flag(rec.stab.generic) << ',';
    if (rec.stab.witness)
        out << root_text(rs, rec.stab.witness->first, epsilon) << ','
            << root_text(rs, rec.stab.witness->second, epsilon) << ',';
    else
        out << ",,";
    out << root_set_text(rs, rec.stab.frobenius_roots, epsilon) << ','
        << rec.stab.frobenius_roots.size() << ',' << flag(rec.stab.quasi_quadratic) << ','
        << flag(rec.cls.square_integrable) << ',' << flag(rec.cls.has_cp) << ',';
    if (!rec.cls.has_cp)
        out << "";
    else if (!rec.cls.cp_witness)
        out << "heisenberg";
    else
        out << *rec.cls.cp_witness + 1;
    out << ',' << to_string(rec.cls.freeness) << ',' << rec.cls.trdeg_SU << ',' << rec.cls.trdeg_SN
        << ',' << flag(rec.cls.finitely_generated) << ',' << flag(rec.cls.rational_singularities)
        << ',';
    if (rec.oracle)
        out << rec.oracle->stab_dim << ',' << rec.oracle->index_estimate << ','
            << rec.oracle->saturation_dim << ',' << flag(rec.oracle->agrees);
    else
        out << ",,,";
    return out.str();
}

}  // namespace kostant
