// quartwist: generate and verify twists of plane quartic curves, exactly.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "quartwist/json_io.hpp"

using namespace quartwist;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParam = 2;
constexpr int kExitTower = 3;
constexpr int kExitIo = 4;

long max_tower_degree() {
    if (const char* env = std::getenv("QUARTWIST_MAX_TOWER_DEGREE")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return 512;
}

void write_output(const Json& j, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw IoError("cannot open " + out_path);
    f << j.dump(2) << "\n";
}

Json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open " + path);
    Json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw IoError(std::string("parse error: ") + e.what());
    }
    return j;
}

Twist generate(const std::string& case_tag, const Json& params) {
    auto [cp, tp] = params_from_json(case_tag, params);
    int variant = 0;
    if (tp.has("variant")) {
        variant = static_cast<int>(tp.get("variant").get_num().get_si());
    }
    if (case_tag == "fermat-diagonal") return fermat_diagonal(tp.get("a"), tp.get("b"));
    if (case_tag == "fermat-almost-diagonal")
        return fermat_almost_diagonal(tp.get("a"), tp.get("b"), tp.get("m"));
    if (case_tag == "fermat-nondiagonal") {
        auto& cu = tp.get_list("cubic");
        QPoly q{{cu[0], cu[1], cu[2], Rational(1)}};
        unsigned n = static_cast<unsigned>(tp.get("n").get_num().get_si());
        return fermat_nondiagonal(q, n, static_cast<NonDiagVariant>(variant));
    }
    if (case_tag.rfind("klein-sqrt7-", 0) == 0)
        return klein_sqrt7_twist(std::stoi(case_tag.substr(12)), tp);
    if (case_tag.rfind("klein-row-", 0) == 0)
        return klein_twist(std::stoi(case_tag.substr(10)), tp, variant);
    if (case_tag.rfind("case-", 0) == 0)
        return henn_case_twist(henn_case_from_string(case_tag), cp, tp);
    throw UnknownIndex("unknown case tag " + case_tag);
}

void warn_degree(const Twist& t) {
    if (t.tower->degree() > max_tower_degree())
        std::cerr << "warning: tower degree " << t.tower->degree() << " exceeds "
                  << max_tower_degree() << "\n";
}

int cmd_gen(const std::string& case_tag, const std::string& params_json,
            const std::string& out_path, bool strict) {
    Json params;
    try {
        params = Json::parse(params_json);
    } catch (const std::exception& e) {
        throw IoError(std::string("params: ") + e.what());
    }
    if (strict && case_tag.rfind("case-", 0) == 0) {
        auto [cp, tp] = params_from_json(case_tag, params);
        HennCase c = henn_case_from_string(case_tag);
        bool modified = (c == HennCase::II || c == HennCase::V || c == HennCase::VI ||
                         c == HennCase::VII);
        auto rep = check_restrictions(c, cp, modified, true);
        if (!rep.ok) throw RestrictionViolated(rep.violations.front());
    }
    Twist t = generate(case_tag, params);
    warn_degree(t);
    write_output(twist_to_json(t), out_path);
    return 0;
}

int cmd_verify(const std::string& twist_path, bool allow_no_galois) {
    Twist t = twist_from_json(read_json_file(twist_path));
    VerificationReport rep = verify_twist(t);
    std::cout << report_to_json(rep).dump(2) << "\n";
    if (!rep.iso_ok || !rep.rational_ok) return kExitVerifyFailed;
    if (!rep.cocycle_checked) return allow_no_galois ? 0 : kExitVerifyFailed;
    return rep.cocycle_ok ? 0 : kExitVerifyFailed;
}

int cmd_equiv(const std::string& path1, const std::string& path2) {
    Twist t1 = twist_from_json(read_json_file(path1));
    Twist t2 = twist_from_json(read_json_file(path2));
    if (!t1.tower->same_as(*t2.tower)) {
        // allow one tower to be a prefix of the other
        if (t1.tower->prefix_of(*t2.tower)) {
            t1.curve = t1.curve.lifted(t2.tower);
            t1.iso = t1.iso.lifted(t2.tower);
            t1.tower = t2.tower;
            t1.galois.clear();
        } else if (t2.tower->prefix_of(*t1.tower)) {
            t2.curve = t2.curve.lifted(t1.tower);
            t2.iso = t2.iso.lifted(t1.tower);
            t2.tower = t1.tower;
            t2.galois.clear();
        } else {
            throw CommonTowerRequired("twists must share a tower (or one must be a prefix)");
        }
    }
    if (t1.source_case != t2.source_case) {
        // equivalence is only meaningful against a common source model
        TernaryQuartic s1 = twist_source_form(t1), s2 = twist_source_form(t2);
        if (!(proportionality(s1, s2).has_value()))
            throw CommonTowerRequired("twists have different source models");
    }
    ProjGroup aut = twist_source_aut(t1);
    auto w = check_equivalence(t1, t2, aut);
    if (w) {
        Json out;
        out["equivalent"] = true;
        out["aut_index"] = w->aut_index;
        out["N"] = matrix_to_json(w->N);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "{\n  \"equivalent\": false\n}\n";
    return 1;
}

int cmd_data(const std::string& table) {
    Json out;
    if (table == "henn-models" || table == "henn-aut" || table == "henn-aut-modified") {
        out = Json::array();
        for (int i = 1; i <= 12; ++i) {
            HennCase c = static_cast<HennCase>(i);
            bool modified = table == "henn-aut-modified";
            if (modified && !(c == HennCase::II || c == HennCase::IV || c == HennCase::V ||
                              c == HennCase::VI || c == HennCase::VII))
                continue;
            Json e;
            e["case"] = to_string(c);
            e["aut"] = aut_label(c);
            e["aut_order"] = aut_order(c);
            auto p = sample_params(c, modified);
            e["sample_params"] = params_to_json(p, {});
            if (table != "henn-models") {
                CaseContext ctx = make_case_context(c, p, modified);
                Json gens = Json::array();
                for (const auto& g : ctx.generators) gens.push_back(matrix_to_json(g));
                e["generators"] = gens;
                e["tower"] = tower_spec_to_json(ctx.tower->spec());
            } else {
                CaseContext ctx = make_case_context(c, p, false);
                e["model"] = form_to_json(ctx.model);
                e["tower"] = tower_spec_to_json(ctx.tower->spec());
            }
            out.push_back(e);
        }
    } else if (table == "fingerprints") {
        out = Json::array();
        for (const auto& [label, fp] : fingerprint_table()) {
            Json e;
            e["label"] = label;
            e["fingerprint"] = fingerprint_to_json(fp);
            out.push_back(e);
        }
    } else {
        static const std::map<std::string, PairFamily> tables = {
            {"fermat-diagonal-pairs", PairFamily::FermatDiagonal},
            {"fermat-almost-diagonal-pairs", PairFamily::FermatAlmostDiagonal},
            {"fermat-nondiagonal-pairs", PairFamily::FermatNonDiagonal},
            {"klein-pairs", PairFamily::Klein},
            {"klein-sqrt7-pairs", PairFamily::KleinSqrt7},
        };
        auto it = tables.find(table);
        if (it == tables.end()) throw UnknownIndex("unknown table " + table);
        out = Json::array();
        for (const auto& r : pair_table(it->second)) out.push_back(pair_record_to_json(r));
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

struct CatalogItem {
    Twist twist;
    VerificationReport report;
    std::string note;
};

int cmd_catalog(const std::string& family, long bound, const std::string& out_path) {
    if (bound < 0 || bound > 1000) throw ParamError("bound out of range (0..1000)");
    std::vector<CatalogItem> items;
    auto square_free = [&](long v) { return nth_power_free(Rational(v), 2) == Rational(v); };

    if (family == "case-i") {
        ParamMap cp = sample_params(HennCase::I);
        for (long m = -bound; m <= bound; ++m) {
            if (m == 0 || !square_free(std::abs(m))) continue;
            if (m < 0 && !square_free(-m)) continue;
            Rational mm(m);
            if (nth_power_free(mm, 2) != mm) continue;
            ParamMap tp;
            tp.scalars["m"] = mm;
            CatalogItem it;
            it.twist = henn_case_twist(HennCase::I, cp, tp);
            it.report = verify_twist(it.twist);
            items.push_back(std::move(it));
        }
    } else if (family == "case-iii") {
        ParamMap cp = sample_params(HennCase::III);
        for (long m = 1; m <= bound; ++m) {
            Rational mm(m);
            if (nth_power_free(mm, 3) != mm) continue;
            ParamMap tp;
            tp.scalars["m"] = mm;
            CatalogItem it;
            it.twist = henn_case_twist(HennCase::III, cp, tp);
            it.report = verify_twist(it.twist);
            items.push_back(std::move(it));
        }
    } else if (family == "case-ix") {
        for (long a = 1; a <= bound; ++a) {
            Rational aa(a);
            if (nth_power_free(aa, 9) != aa) continue;
            ParamMap tp;
            tp.scalars["a"] = aa;
            CatalogItem it;
            it.twist = henn_case_twist(HennCase::IX, {}, tp);
            it.report = verify_twist(it.twist);
            it.note = "all k-bar-isomorphic";
            items.push_back(std::move(it));
        }
    } else if (family == "fermat-diagonal") {
        std::vector<Rational> reps;
        for (long v = 1; v <= bound; ++v) {
            Rational vv(v);
            if (nth_power_free(vv, 4) == vv) reps.push_back(vv);
        }
        std::vector<std::pair<Rational, Rational>> kept;
        for (const auto& a : reps)
            for (const auto& b : reps) {
                bool dup = false;
                for (const auto& [a2, b2] : kept)
                    if (fermat_diagonal_equivalent(a, b, a2, b2)) { dup = true; break; }
                if (dup) continue;
                kept.emplace_back(a, b);
                CatalogItem it;
                it.twist = fermat_diagonal(a, b);
                it.report = verify_twist(it.twist);
                items.push_back(std::move(it));
            }
    } else {
        throw UnknownIndex("unknown catalog family " + family);
    }

    // batch deduplication: exhaustive equivalence within same-tower pairs
    std::vector<size_t> keep;
    for (size_t i = 0; i < items.size(); ++i) {
        bool dup = false;
        for (size_t k : keep) {
            const Twist& a = items[k].twist;
            const Twist& b = items[i].twist;
            if (!a.tower->same_as(*b.tower)) continue;
            ProjGroup aut = twist_source_aut(a);
            if (check_equivalence(b, a, aut)) { dup = true; break; }
        }
        if (!dup) keep.push_back(i);
    }
    Json out = Json::array();
    for (size_t k : keep) {
        const auto& it = items[k];
        Json e;
        e["twist"] = twist_to_json(it.twist);
        e["report"] = report_to_json(it.report);
        e["fingerprint"] = fingerprint_to_json(fingerprint(twist_source_aut(it.twist)));
        e["provenance"] = it.twist.source_case;
        if (!it.note.empty()) e["note"] = it.note;
        out.push_back(e);
    }
    write_output(out, out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and verification of plane quartic twists"};
    app.require_subcommand(1);

    std::string case_tag, params_json, out_path, twist_path, path2, table, family;
    long bound = 10;
    bool allow_no_galois = false;
    bool strict_restrictions = false;

    auto* gen = app.add_subcommand("gen", "generate a twist as JSON");
    gen->add_option("case", case_tag, "case tag (case-i..case-x, fermat-*, klein-row-N, klein-sqrt7-N)")
        ->required();
    gen->add_option("params", params_json, "parameters as a JSON object")->required();
    gen->add_option("--out", out_path, "output path (default: stdout)");
    gen->add_flag("--strict-restrictions", strict_restrictions,
                  "strict reading of the modified case-VII restriction set");

    auto* ver = app.add_subcommand("verify", "verify a twist JSON file");
    ver->add_option("twist", twist_path, "path to twist JSON")->required();
    ver->add_flag("--allow-no-galois", allow_no_galois,
                  "exit 0 when the cocycle check is skipped for lack of Galois data");

    auto* eq = app.add_subcommand("equiv", "decide equivalence of two twists");
    eq->add_option("twist1", twist_path, "first twist JSON")->required();
    eq->add_option("twist2", path2, "second twist JSON")->required();

    auto* cat = app.add_subcommand("catalog", "enumerate inequivalent twists up to a bound");
    cat->add_option("family", family, "case-i | case-iii | case-ix | fermat-diagonal")->required();
    cat->add_option("bound", bound, "parameter bound")->required();
    cat->add_option("--out", out_path, "output path (default: stdout)");

    auto* dat = app.add_subcommand("data", "dump a classification table as JSON");
    dat->add_option("table", table,
                    "henn-models | henn-aut | henn-aut-modified | fermat-*-pairs | klein-pairs | "
                    "klein-sqrt7-pairs | fingerprints")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(case_tag, params_json, out_path, strict_restrictions);
        if (ver->parsed()) return cmd_verify(twist_path, allow_no_galois);
        if (eq->parsed()) return cmd_equiv(twist_path, path2);
        if (cat->parsed()) return cmd_catalog(family, bound, out_path);
        if (dat->parsed()) return cmd_data(table);
    } catch (const ParamError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitParam;
    } catch (const TowerError& e) {
        std::cerr << "tower error: " << e.what() << "\n";
        return kExitTower;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    }
    return 0;
}
