#include "kn/crystal.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "json.hpp"
#include "kn/words.hpp"

namespace kn {

int rank_of(const Tableau& t) { return t.typeA ? t.n - 1 : t.n; }

namespace {
// +1, -1 or 0 for letter x under color i
int sign(Letter x, int i, int n, bool typeA) {
    if (typeA) return x == i ? 1 : (x == i + 1 ? -1 : 0);
    if (i == n) return x == n ? 1 : (x == -n ? -1 : 0);
    if (x == i || x == -(i + 1)) return 1;
    if (x == i + 1 || x == -i) return -1;
    return 0;
}
Letter f_letter(Letter x, int i, int n, bool typeA) {
    if (typeA) return i + 1;
    if (i == n) return -n;
    return x == i ? i + 1 : -i;
}
Letter e_letter(Letter x, int i, int n, bool typeA) {
    if (typeA) return i;
    if (i == n) return n;
    return x == i + 1 ? i : -(i + 1);
}

struct Reduced {
    std::vector<int> plus, minus;  // positions (in reading order) of the surviving signs
};

Reduced reduce(const Tableau& t, const std::vector<std::pair<int, int>>& cells, int i) {
    Reduced red;
    for (int k = 0; k < (int)cells.size(); ++k) {
        int s = sign(t.at(cells[k].first, cells[k].second), i, t.n, t.typeA);
        if (s > 0)
            red.plus.push_back(k);
        else if (s < 0) {
            if (!red.plus.empty())
                red.plus.pop_back();
            else
                red.minus.push_back(k);
        }
    }
    return red;
}

void check_color(const Tableau& t, int i) {
    if (i < 1 || i > rank_of(t)) throw Error("invalid color " + std::to_string(i));
}
}  // namespace

std::optional<Tableau> f_op(const Tableau& t, int i) {
    check_color(t, i);
    auto cells = reading_cells(t);
    Reduced red = reduce(t, cells, i);
    if (red.plus.empty()) return std::nullopt;
    auto [r, c] = cells[red.plus.front()];
    Tableau o = t;
    o.rows[r][c] = f_letter(t.at(r, c), i, t.n, t.typeA);
    return o;
}

std::optional<Tableau> e_op(const Tableau& t, int i) {
    check_color(t, i);
    auto cells = reading_cells(t);
    Reduced red = reduce(t, cells, i);
    if (red.minus.empty()) return std::nullopt;
    auto [r, c] = cells[red.minus.back()];
    Tableau o = t;
    o.rows[r][c] = e_letter(t.at(r, c), i, t.n, t.typeA);
    return o;
}

std::pair<int, int> eps_phi(const Tableau& t, int i) {
    check_color(t, i);
    Reduced red = reduce(t, reading_cells(t), i);
    return {(int)red.minus.size(), (int)red.plus.size()};
}

std::pair<int, int> eps_phi_by_iteration(const Tableau& t, int i) {
    int e = 0, f = 0;
    for (auto x = e_op(t, i); x; x = e_op(*x, i)) ++e;
    for (auto x = f_op(t, i); x; x = f_op(*x, i)) ++f;
    return {e, f};
}

int pairing(const Weight& w, int i, bool typeA) {
    if (typeA) return w[i - 1] - w[i];
    int n = (int)w.size();
    if (i == n) return w[n - 1];
    return w[i - 1] - w[i];
}

Weight minus_root(Weight w, int i, bool typeA) {
    int n = (int)w.size();
    if (!typeA && i == n) {
        w[n - 1] -= 2;
    } else {
        w[i - 1] -= 1;
        w[i] += 1;
    }
    return w;
}

Weight reflect(Weight w, int i, bool typeA) {
    int n = (int)w.size();
    if (!typeA && i == n)
        w[n - 1] = -w[n - 1];
    else
        std::swap(w[i - 1], w[i]);
    return w;
}

int CrystalGraph::find(const Tableau& t) const {
    auto it = index.find(key_of(t));
    return it == index.end() ? -1 : it->second;
}

namespace {
std::vector<int> all_colors(const Tableau& t) {
    std::vector<int> cs(rank_of(t));
    std::iota(cs.begin(), cs.end(), 1);
    return cs;
}
void gate(const Tableau& t) {
    std::string why;
    if (t.typeA ? !is_semistandard(t, &why) : !is_kn(t, &why)) throw Error("crystal seed rejected: " + why);
}
}  // namespace

CrystalGraph generate_from(const std::vector<Tableau>& seeds, std::vector<int> colors) {
    if (seeds.empty()) throw Error("no seeds");
    CrystalGraph g;
    g.n = seeds[0].n;
    g.typeA = seeds[0].typeA;
    g.colors = colors.empty() ? all_colors(seeds[0]) : colors;
    std::sort(g.colors.begin(), g.colors.end());
    std::deque<int> queue;
    auto add = [&](const Tableau& t) {
        auto k = key_of(t);
        auto it = g.index.find(k);
        if (it != g.index.end()) return it->second;
        int id = (int)g.vertices.size();
        g.vertices.push_back(t);
        g.index.emplace(std::move(k), id);
        queue.push_back(id);
        return id;
    };
    for (auto& s : seeds) {
        gate(s);
        add(s);
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int i : g.colors) {
            auto w = f_op(g.vertices[v], i);
            if (w) g.arrows.push_back({v, i, add(*w)});
        }
    }
    std::sort(g.arrows.begin(), g.arrows.end());
    recompute_components(g);
    return g;
}

CrystalGraph generate_crystal(const Tableau& seed, std::vector<int> colors) {
    CrystalGraph g = generate_from({seed}, colors);
    for (int i : g.colors)
        if (e_op(seed, i)) g.seed_was_highest = false;
    return g;
}

void recompute_components(CrystalGraph& g) {
    std::vector<int> parent(g.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    for (auto& a : g.arrows) parent[root(a.src)] = root(a.dst);
    std::map<int, int> ids;
    g.component.assign(g.size(), 0);
    for (int v = 0; v < g.size(); ++v) {
        int r = root(v);
        auto it = ids.find(r);
        if (it == ids.end()) it = ids.emplace(r, (int)ids.size()).first;
        g.component[v] = it->second;
    }
    g.ncomponents = (int)ids.size();
}

CrystalGraph branch(const CrystalGraph& g, const std::vector<int>& J) {
    for (int j : J)
        if (std::find(g.colors.begin(), g.colors.end(), j) == g.colors.end())
            throw Error("branching color " + std::to_string(j) + " is not active");
    CrystalGraph h = g;
    h.colors = J;
    std::sort(h.colors.begin(), h.colors.end());
    h.arrows.clear();
    for (auto& a : g.arrows)
        if (std::find(J.begin(), J.end(), a.color) != J.end()) h.arrows.push_back(a);
    recompute_components(h);
    return h;
}

namespace {
int extreme_of(const CrystalGraph& g, int v, bool high) {
    std::vector<char> has(g.size(), 0);
    for (auto& a : g.arrows) has[high ? a.dst : a.src] = 1;
    int found = -1;
    for (int u = 0; u < g.size(); ++u)
        if (g.component[u] == g.component[v] && !has[u]) {
            if (found >= 0)
                throw Error(std::string("component has two ") + (high ? "sources: " : "sinks: ") +
                            render(g.vertices[found]) + " and " + render(g.vertices[u]));
            found = u;
        }
    if (found < 0) throw Error("component without a source or sink");
    return found;
}
}  // namespace

int highest_of(const CrystalGraph& g, int v) { return extreme_of(g, v, true); }
int lowest_of(const CrystalGraph& g, int v) { return extreme_of(g, v, false); }

Character character(const CrystalGraph& g) {
    Character ch;
    for (auto& t : g.vertices) ch[weight(t)]++;
    return ch;
}

bool character_symmetric(const Character& ch, bool typeA, std::string* why) {
    if (ch.empty()) return true;
    int n = (int)ch.begin()->first.size();
    int nrefl = typeA ? n - 1 : n;
    for (int i = 1; i <= nrefl; ++i)
        for (auto& [w, m] : ch) {
            auto it = ch.find(reflect(w, i, typeA));
            if (it == ch.end() || it->second != m) {
                if (why) *why = "r_" + std::to_string(i) + " breaks symmetry";
                return false;
            }
        }
    return true;
}

std::string to_dot(const CrystalGraph& g) {
    static const char* palette[] = {"blue", "red", "darkgreen", "orange", "purple", "brown", "magenta", "gray"};
    std::string s = "digraph crystal {\n  node [shape=box];\n";
    for (int v = 0; v < g.size(); ++v)
        s += "  v" + std::to_string(v) + " [label=\"" + render(g.vertices[v]) + "\"];\n";
    for (auto& a : g.arrows)
        s += "  v" + std::to_string(a.src) + " -> v" + std::to_string(a.dst) + " [label=\"" + std::to_string(a.color) +
             "\", color=" + palette[(a.color - 1) % 8] + "];\n";
    return s + "}\n";
}

std::string graph_json(const CrystalGraph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    j["type"] = g.typeA ? "A" : "C";
    j["colors"] = g.colors;
    auto vs = nlohmann::json::array();
    for (int v = 0; v < g.size(); ++v)
        vs.push_back({{"id", v}, {"tableau", render(g.vertices[v])}, {"weight", weight(g.vertices[v])},
                      {"component", g.component[v]}});
    j["vertices"] = vs;
    auto as = nlohmann::json::array();
    for (auto& a : g.arrows) as.push_back({a.src, a.color, a.dst});
    j["arrows"] = as;
    return j.dump(1);
}

std::vector<Partition> partitions_upto(int B, int maxparts) {
    std::vector<Partition> out;
    Partition cur;
    for (int b = 1; b <= B; ++b) {
        // partitions of exactly b
        std::function<void(int, int)> exact = [&](int left, int maxpart) {
            if (left == 0) {
                out.push_back(cur);
                return;
            }
            if ((int)cur.size() == maxparts) return;
            for (int p = std::min(left, maxpart); p >= 1; --p) {
                cur.push_back(p);
                exact(left - p, p);
                cur.pop_back();
            }
        };
        exact(b, b);
    }
    return out;
}

std::vector<Tableau> kn_straight_universe(int n, int B) {
    std::vector<Tableau> all;
    for (auto& lam : partitions_upto(B, n)) {
        auto g = generate_crystal(yamanouchi(lam, n));
        for (auto& t : g.vertices) all.push_back(t);
    }
    return all;
}

}  // namespace kn
