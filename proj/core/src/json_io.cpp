#include "quartwist/json_io.hpp"

#include <set>

namespace quartwist {

namespace {

// nested coefficient array for a flat block: level 0 is ["p/q"]
Json block_to_json(const Tower& tw, size_t level, const Rational* blk) {
    Json out = Json::array();
    if (level == 0) {
        out.push_back(rational_str(blk[0]));
        return out;
    }
    size_t d = tw.level(level - 1).degree;
    size_t s = tw.stride(level - 1);
    for (size_t i = 0; i < d; ++i) out.push_back(block_to_json(tw, level - 1, blk + i * s));
    return out;
}

void block_from_json(const Json& j, const Tower& tw, size_t level, Rational* blk) {
    if (!j.is_array()) throw IoError("element coefficient: expected array");
    if (level == 0) {
        if (j.size() != 1 || !j[0].is_string()) throw IoError("level-0 element: expected [\"p/q\"]");
        blk[0] = parse_rational(j[0].get<std::string>());
        return;
    }
    size_t d = tw.level(level - 1).degree;
    size_t s = tw.stride(level - 1);
    if (j.size() != d) throw IoError("element block arity mismatch");
    for (size_t i = 0; i < d; ++i) block_from_json(j[i], tw, level - 1, blk + i * s);
}

// modulus coefficients live one level down; serialize with a throwaway view
Json modulus_block_to_json(const Tower& tw, size_t level, const std::vector<Rational>& blk) {
    return block_to_json(tw, level, blk.data());
}

} // namespace

Json tower_spec_to_json(const TowerSpec& spec) {
    // rebuild strides incrementally for nested modulus serialization
    Json levels = Json::array();
    TowerSpec partial;
    for (const auto& lv : spec.levels) {
        TowerPtr sub = Tower::build(partial);
        Json jl;
        jl["gen"] = lv.name;
        Json mod = Json::array();
        for (const auto& blk : lv.modulus)
            mod.push_back(modulus_block_to_json(*sub, sub->levels(), blk));
        jl["modulus"] = mod;
        jl["annotation"] = lv.annotation.to_string();
        levels.push_back(jl);
        partial.levels.push_back(lv);
    }
    Json out;
    out["levels"] = levels;
    return out;
}

TowerSpec tower_spec_from_json(const Json& j) {
    TowerSpec spec;
    if (!j.contains("levels")) throw IoError("tower: missing levels");
    for (const auto& jl : j["levels"]) {
        TowerPtr sub = Tower::build(spec);
        TowerLevel lv;
        lv.name = jl.at("gen").get<std::string>();
        const auto& mod = jl.at("modulus");
        if (mod.size() < 3) throw IoError("tower level: modulus degree < 2");
        lv.degree = static_cast<unsigned>(mod.size() - 1);
        for (const auto& jm : mod) {
            std::vector<Rational> blk(static_cast<size_t>(sub->degree()));
            block_from_json(jm, *sub, sub->levels(), blk.data());
            lv.modulus.push_back(std::move(blk));
        }
        if (jl.contains("annotation"))
            lv.annotation = Annotation::parse(jl["annotation"].get<std::string>());
        spec.levels.push_back(std::move(lv));
    }
    return spec;
}

Json elem_to_json(const TowerElem& e) {
    return block_to_json(*e.tower(), e.tower()->levels(), e.coords().data());
}

TowerElem elem_from_json(const Json& j, const TowerPtr& tower) {
    std::vector<Rational> c(static_cast<size_t>(tower->degree()));
    block_from_json(j, *tower, tower->levels(), c.data());
    return tower->from_coords(std::move(c));
}

Json form_to_json(const TernaryQuartic& F) {
    Json coeffs = Json::array();
    for (size_t i = 0; i < 15; ++i) {
        Json c;
        c["exp"] = {kQuarticMonomials[i][0], kQuarticMonomials[i][1], kQuarticMonomials[i][2]};
        c["val"] = elem_to_json(F.coeff(i));
        coeffs.push_back(c);
    }
    Json out;
    out["coeffs"] = coeffs;
    return out;
}

TernaryQuartic form_from_json(const Json& j, const TowerPtr& tower) {
    TernaryQuartic F(tower);
    const auto& coeffs = j.at("coeffs");
    if (coeffs.size() != 15) throw IoError("form: expected 15 coefficients");
    for (const auto& c : coeffs) {
        auto e = c.at("exp");
        F.set_coeff(e[0].get<int>(), e[1].get<int>(), e[2].get<int>(),
                    elem_from_json(c.at("val"), tower));
    }
    return F;
}

Json matrix_to_json(const ProjMatrix& M) {
    Json rows = Json::array();
    for (int r = 0; r < 3; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 3; ++c) row.push_back(elem_to_json(M.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

ProjMatrix matrix_from_json(const Json& j, const TowerPtr& tower) {
    ProjMatrix M(tower);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            M.set(r, c, elem_from_json(j.at(static_cast<size_t>(r)).at(static_cast<size_t>(c)), tower));
    return M;
}

Json aut_to_json(const FieldAut& a) {
    Json images;
    for (size_t j = 0; j < a.source()->levels(); ++j)
        images[a.source()->level(j).name] = elem_to_json(a.images()[j]);
    Json out;
    out["images"] = images;
    out["fixed_level"] = a.fixed_level();
    return out;
}

FieldAut aut_from_json(const Json& j, const TowerPtr& tower) {
    std::vector<TowerElem> images;
    const auto& ji = j.at("images");
    for (size_t lv = 0; lv < tower->levels(); ++lv) {
        const std::string& name = tower->level(lv).name;
        if (!ji.contains(name)) throw IoError("automorphism: missing image for " + name);
        images.push_back(elem_from_json(ji.at(name), tower));
    }
    return FieldAut::define(tower, std::move(images));
}

Json params_to_json(const ParamMap& curve, const ParamMap& twist) {
    Json out = Json::object();
    auto dump = [&](const ParamMap& p) {
        for (const auto& [k, v] : p.scalars) out[k] = rational_str(v);
        for (const auto& [k, v] : p.lists) {
            Json arr = Json::array();
            for (const auto& q : v) arr.push_back(rational_str(q));
            out[k] = arr;
        }
    };
    dump(curve);
    dump(twist);
    return out;
}

std::pair<ParamMap, ParamMap> params_from_json(const std::string& case_tag, const Json& j) {
    static const std::map<std::string, std::set<std::string>> curve_keys = {
        {"case-i", {"F1", "F2"}},   {"case-ii", {"cubic"}}, {"case-iii", {"a", "b", "P"}},
        {"case-iv", {"a", "b"}},    {"case-v", {"a", "b"}}, {"case-vi", {"a"}},
        {"case-vii", {"a"}},        {"case-viii", {"a"}},   {"case-ix", {}},
        {"case-x", {}},
    };
    std::set<std::string> ck;
    if (auto it = curve_keys.find(case_tag); it != curve_keys.end()) ck = it->second;
    if (case_tag == "case-iii") ck = {"a", "b", "P"};
    ParamMap curve, twist;
    for (auto it = j.begin(); it != j.end(); ++it) {
        ParamMap& dst = ck.count(it.key()) ? curve : twist;
        if (it.value().is_array()) {
            std::vector<Rational> lst;
            for (const auto& v : it.value()) lst.push_back(parse_rational(v.get<std::string>()));
            dst.lists[it.key()] = std::move(lst);
        } else if (it.value().is_string()) {
            dst.scalars[it.key()] = parse_rational(it.value().get<std::string>());
        } else if (it.value().is_number_integer()) {
            dst.scalars[it.key()] = Rational(it.value().get<long>());
        } else {
            throw IoError("parameter " + it.key() + ": expected string, integer or array");
        }
    }
    // the twist variant index rides along as a scalar
    return {curve, twist};
}

Json twist_to_json(const Twist& t) {
    Json out;
    out["case"] = t.source_case;
    out["params"] = params_to_json(t.curve_params, t.twist_params);
    out["curve"] = form_to_json(t.curve);
    out["iso"] = matrix_to_json(t.iso);
    out["tower"] = tower_spec_to_json(t.tower->spec());
    Json gal = Json::array();
    for (const auto& a : t.galois) gal.push_back(aut_to_json(a));
    out["galois"] = gal;
    if (t.base_level != 0) out["base_level"] = t.base_level;
    return out;
}

Twist twist_from_json(const Json& j) {
    Twist t;
    t.source_case = j.at("case").get<std::string>();
    t.tower = Tower::build(tower_spec_from_json(j.at("tower")));
    auto [curve_p, twist_p] = params_from_json(t.source_case, j.at("params"));
    t.curve_params = std::move(curve_p);
    t.twist_params = std::move(twist_p);
    t.curve = form_from_json(j.at("curve"), t.tower);
    t.iso = matrix_from_json(j.at("iso"), t.tower);
    if (j.contains("galois"))
        for (const auto& ja : j["galois"]) t.galois.push_back(aut_from_json(ja, t.tower));
    if (j.contains("base_level")) t.base_level = j["base_level"].get<int>();
    return t;
}

Json fingerprint_to_json(const GroupFingerprint& fp) {
    Json out;
    out["order"] = fp.order;
    out["abelian"] = fp.abelian;
    Json stats = Json::object();
    for (const auto& [k, v] : fp.order_stats) stats[std::to_string(k)] = v;
    out["stats"] = stats;
    out["center"] = fp.center_size;
    return out;
}

Json group_to_json(const ProjGroup& G) {
    Json out = Json::array();
    for (const auto& m : G.elements()) out.push_back(matrix_to_json(m));
    return out;
}

Json report_to_json(const VerificationReport& rep) {
    Json out;
    out["iso_ok"] = rep.iso_ok;
    if (rep.lambda) out["lambda"] = elem_to_json(*rep.lambda);
    out["rational_ok"] = rep.rational_ok;
    if (!rep.offending_coeffs.empty()) out["offending_coeffs"] = rep.offending_coeffs;
    if (rep.cocycle_checked) {
        Json cc = Json::array();
        for (const auto& c : rep.cocycle) {
            Json e;
            e["galois_index"] = c.galois_index;
            if (c.aut_index)
                e["aut_index"] = *c.aut_index;
            else
                e["aut_index"] = nullptr;
            cc.push_back(e);
        }
        out["cocycle"] = cc;
        out["cocycle_ok"] = rep.cocycle_ok;
    } else {
        out["cocycle"] = "skipped";
    }
    if (!rep.notes.empty()) out["notes"] = rep.notes;
    return out;
}

Json pair_record_to_json(const PairRecord& r) {
    Json out;
    out["family"] = to_string(r.family);
    out["index"] = r.index;
    out["G"] = r.g_label;
    out["H"] = r.h_label;
    out["gen_H"] = r.h_gen_words;
    out["h"] = r.h_word;
    out["n"] = r.n;
    if (!r.disc_class.empty()) out["disc_mod_squares"] = r.disc_class;
    if (r.root_power) out["root_power"] = r.root_power;
    return out;
}

} // namespace quartwist
