#pragma once
// Crystal operators by the signature rule, crystal graphs, branching, characters.

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kn/tableau.hpp"

namespace kn {

// number of colors: n for C_n, m-1 for type A over [m]
int rank_of(const Tableau& t);

std::optional<Tableau> f_op(const Tableau& t, int i);
std::optional<Tableau> e_op(const Tableau& t, int i);
// (epsilon, phi) from the reduced signature
std::pair<int, int> eps_phi(const Tableau& t, int i);
// oracle: count repeated applications
std::pair<int, int> eps_phi_by_iteration(const Tableau& t, int i);
// <wt, alpha_i^vee>
int pairing(const Weight& w, int i, bool typeA);
// wt with alpha_i subtracted
Weight minus_root(Weight w, int i, bool typeA);
// simple reflection r_i acting on a weight
Weight reflect(Weight w, int i, bool typeA);

struct Arrow {
    int src, color, dst;
    bool operator<(const Arrow& o) const {
        return std::tie(src, color, dst) < std::tie(o.src, o.color, o.dst);
    }
    bool operator==(const Arrow& o) const { return src == o.src && color == o.color && dst == o.dst; }
};

struct CrystalGraph {
    int n = 0;
    bool typeA = false;
    std::vector<int> colors;  // active colors, ascending
    std::vector<Tableau> vertices;
    std::unordered_map<std::string, int> index;
    std::vector<Arrow> arrows;
    std::vector<int> component;  // component id per vertex
    int ncomponents = 0;
    bool seed_was_highest = true;

    int find(const Tableau& t) const;
    int size() const { return (int)vertices.size(); }
};

// all colors when colors is empty
CrystalGraph generate_crystal(const Tableau& seed, std::vector<int> colors = {});
// BFS from several seeds (e.g. all of KN(lambda/mu)); no highest-weight requirement
CrystalGraph generate_from(const std::vector<Tableau>& seeds, std::vector<int> colors = {});
CrystalGraph branch(const CrystalGraph& g, const std::vector<int>& J);
void recompute_components(CrystalGraph& g);
// unique source / sink of the component of v (throws if not unique)
int highest_of(const CrystalGraph& g, int v);
int lowest_of(const CrystalGraph& g, int v);

using Character = std::map<Weight, long>;
Character character(const CrystalGraph& g);
bool character_symmetric(const Character& ch, bool typeA, std::string* why = nullptr);

std::string to_dot(const CrystalGraph& g);
std::string graph_json(const CrystalGraph& g);

// every straight KN(lambda, n) with |lambda| <= B (one connected crystal per lambda)
std::vector<Partition> partitions_upto(int B, int maxparts);
std::vector<Tableau> kn_straight_universe(int n, int B);

}  // namespace kn
