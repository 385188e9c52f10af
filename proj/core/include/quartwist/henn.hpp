#pragma once

#include <map>
#include <string>
#include <vector>

#include "quartwist/projgroup.hpp"

namespace quartwist {

enum class HennCase { I = 1, II, III, IV, V, VI, VII, VIII, IX, X, XI, XII };

HennCase henn_case_from_string(const std::string& s); // "I".."XII" or "case-i".."case-xii"
std::string to_string(HennCase c);

// Named parameters for models and twists: scalar rationals plus coefficient
// lists (binary forms, cubics).
struct ParamMap {
    std::map<std::string, Rational> scalars;
    std::map<std::string, std::vector<Rational>> lists;

    bool has(const std::string& k) const { return scalars.count(k) > 0; }
    bool has_list(const std::string& k) const { return lists.count(k) > 0; }
    const Rational& get(const std::string& k) const;
    Rational get_or(const std::string& k, const Rational& dflt) const;
    const std::vector<Rational>& get_list(const std::string& k) const;
};

struct RestrictionReport {
    bool ok = true;
    std::vector<std::string> violations;
    std::vector<std::string> skipped_irrational;
};

// Henn table column 4 (or the modified table's): rational restrictions are
// evaluated exactly; restrictions involving irrational constants are evaluated
// only when expressible over Q and flagged as skipped otherwise.
RestrictionReport check_restrictions(HennCase c, const ParamMap& p, bool modified = false,
                                     bool strict = false);

// Model with parameters substituted, built over tb's tower (extended as needed).
TernaryQuartic representative_curve(HennCase c, const ParamMap& p, TowerBuilder& tb,
                                    bool modified = false);

// Generator matrices of Aut(C) with parameters substituted (appendix tables,
// with the corrections noted in the README erratum list).
std::vector<ProjMatrix> automorphism_generators(HennCase c, const ParamMap& p, TowerBuilder& tb,
                                                bool modified = false);

struct CaseContext {
    HennCase id;
    bool modified = false;
    TowerPtr tower;
    TernaryQuartic model;
    std::vector<ProjMatrix> generators;
    std::string aut_label;
    long aut_order = 0;
};

CaseContext make_case_context(HennCase c, const ParamMap& p, bool modified = false);

// default admissible sample parameters per case (used by tests and the CLI)
ParamMap sample_params(HennCase c, bool modified = false);

const char* aut_label(HennCase c);
long aut_order(HennCase c);

// ------------------------------------------------------------- pair tables

enum class PairFamily { FermatDiagonal, FermatAlmostDiagonal, FermatNonDiagonal, Klein, KleinSqrt7 };

PairFamily pair_family_from_string(const std::string& s);
std::string to_string(PairFamily f);

struct PairRecord {
    PairFamily family;
    int index = 0;                        // 1-based row number
    std::string g_label, h_label;
    std::vector<std::string> h_gen_words; // words in the named generators
    std::string h_word;                   // the Gal(K/k)-twisting element
    int n = 0;                            // n_{(G,H)}
    std::string disc_class;               // FermatNonDiagonal: "-1", "1", "!=+-1"
    int root_power = 0;                   // FermatNonDiagonal: 1, 2, 4
};

const std::vector<PairRecord>& pair_table(PairFamily f);
const PairRecord& pair_record(PairFamily f, int index); // throws UnknownIndex

long label_order(const std::string& gap_label); // "<96,64>" -> 96

// "t3utu" etc. evaluated against named generator matrices ("1" = identity)
ProjMatrix evaluate_word(const std::string& word, const std::map<char, ProjMatrix>& gens,
                         const TowerPtr& tower);

} // namespace quartwist
