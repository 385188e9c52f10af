#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quartwist/qform.hpp"

namespace quartwist {

struct GroupFingerprint {
    long order = 0;
    bool abelian = false;
    std::map<long, long> order_stats; // projective element order -> count
    long center_size = 0;

    bool operator==(const GroupFingerprint& o) const {
        return order == o.order && abelian == o.abelian && order_stats == o.order_stats &&
               center_size == o.center_size;
    }
};

// Finite subgroup of PGL3: elements in projective normal form, closed.
class ProjGroup {
public:
    const TowerPtr& tower() const { return tower_; }
    const std::vector<ProjMatrix>& elements() const { return els_; }
    const std::vector<size_t>& generator_indices() const { return gens_; }
    size_t size() const { return els_.size(); }
    const ProjMatrix& element(size_t i) const { return els_[i]; }

    friend ProjGroup generate_group(const std::vector<ProjMatrix>& gens, size_t cap);

private:
    TowerPtr tower_;
    std::vector<ProjMatrix> els_;
    std::vector<size_t> gens_;
};

ProjGroup generate_group(const std::vector<ProjMatrix>& gens, size_t cap = 400);

// projective order of M (smallest n >= 1 with M^n scalar)
long projective_order(const ProjMatrix& M, long cap = 1024);

GroupFingerprint fingerprint(const ProjGroup& G);

// index of the projectively equal element, or nullopt; M may live in a
// prefix tower of G's (it is lifted), otherwise CommonTowerRequired
std::optional<size_t> contains(const ProjGroup& G, const ProjMatrix& M);

// Match against the built-in table of group labels; "unknown" if absent.
std::string identify(const GroupFingerprint& fp);

// label -> reference fingerprint for every group named by the tables
const std::vector<std::pair<std::string, GroupFingerprint>>& fingerprint_table();

// asserted at startup by identify(): no two stored labels share a fingerprint
bool fingerprint_table_injective();

// "C2 = <2,1>" matches the bare GAP id "<2,1>"
bool label_matches(const std::string& table_label, const std::string& gap_label);

} // namespace quartwist
