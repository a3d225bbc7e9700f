#pragma once
// Cactus and Berenstein-Kirillov group words acting on tableaux, relation suites,
// and verification as permutation equalities over a finite universe.

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "kn/tableau.hpp"

namespace kn {

enum class Family {
    CactusA,     // s_[p,q] on type A: partial_xi_A
    CactusC,     // s_[p,q] on C_n: partial_xi_C
    Virtual,     // folded s~_[p,q] on A tableaux over [2n]
    BkA,         // t_p, type A
    DualBkA,     // t~_p, type A
    QA,          // q_[p,q], type A
    BkC,         // t_p^{C_n}
    QC,          // q_[p,q]^{C_n}
    Reflection,  // xi_p
};

struct Generator {
    Family family = Family::CactusC;
    int p = 0, q = 0;
    std::string name() const;
    bool operator==(const Generator& o) const { return family == o.family && p == o.p && q == o.q; }
};

// applied right to left
using GroupWord = std::vector<Generator>;
std::string word_name(const GroupWord& w);
GroupWord power(const GroupWord& w, int k);
GroupWord operator*(const GroupWord& a, const GroupWord& b);

Tableau apply_generator(const Generator& g, const Tableau& t);
Tableau act(const GroupWord& w, const Tableau& t);

struct Relation {
    std::string name;
    GroupWord lhs, rhs;  // rhs empty = identity
};

struct RelationSuite {
    std::string name;
    int rank = 0;
    std::vector<Relation> relations;
};

// kinds: "jn" (type-A cactus, rank = number of nodes), "jsp", "vj2n", "bka", "bkc", "weyl"
RelationSuite enumerate_relations(const std::string& kind, int rank);
// s_[p,q] -> s_[p,q] s_[2n-q,2n-p] (q < n); s_[p,n] -> s_[p,2n-p]
GroupWord fold_gamma(const GroupWord& w, int n);

// tableaux indexed in canonical order; images are added on demand
class Universe {
public:
    explicit Universe(std::vector<Tableau> base);
    int base_size() const { return base_; }
    int size() const { return (int)verts_.size(); }
    const Tableau& at(int v) const { return verts_[v]; }
    int id(const Tableau& t);
    int apply(const Generator& g, int v);
    int act(const GroupWord& w, int v);

private:
    std::vector<Tableau> verts_;
    int base_ = 0;
    std::unordered_map<std::string, int> index_;
    std::map<std::string, std::vector<int>> memo_;
};

struct Witness {
    std::string relation;
    Tableau t, lhs, rhs;
};

struct Report {
    std::string suite;
    int relations = 0;
    int vertices = 0;
    long checks = 0;
    std::vector<Witness> failures;  // first failing vertex per relation
    bool pass() const { return failures.empty(); }
    std::string text() const;
    std::string json() const;
};

Report verify(const RelationSuite& suite, Universe& u);

// words that must NOT act trivially: reports the first vertex where lhs and rhs differ
struct ProbeResult {
    std::string name;
    bool found = false;
    Witness witness;
};
ProbeResult probe_nonrelation(const std::string& name, const GroupWord& lhs, const GroupWord& rhs, Universe& u);

// straight SSYT(lambda, m) for all |lambda| <= B with at most m parts
std::vector<Tableau> ssyt_straight_universe(int m, int B);
// E(KN(lambda,n)) for all |lambda| <= B
std::vector<Tableau> embedded_universe(int n, int B);

}  // namespace kn
