#include "kn/cactus.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "kn/crystal.hpp"
#include "kn/involutions.hpp"
#include "kn/type_a.hpp"
#include "kn/virtualization.hpp"

namespace kn {

std::string Generator::name() const {
    auto iv = [&] { return "[" + std::to_string(p) + "," + std::to_string(q) + "]"; };
    switch (family) {
        case Family::CactusA: return "s" + iv();
        case Family::CactusC: return "sC" + iv();
        case Family::Virtual: return "s~" + iv();
        case Family::BkA: return "t" + std::to_string(p);
        case Family::DualBkA: return "t~" + std::to_string(p);
        case Family::QA: return "q" + iv();
        case Family::BkC: return "tC" + std::to_string(p);
        case Family::QC: return "qC" + iv();
        case Family::Reflection: return "xi" + std::to_string(p);
    }
    return "?";
}

std::string word_name(const GroupWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + w[i].name();
    return s;
}

GroupWord power(const GroupWord& w, int k) {
    GroupWord o;
    for (int i = 0; i < k; ++i) o.insert(o.end(), w.begin(), w.end());
    return o;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
    GroupWord o = a;
    o.insert(o.end(), b.begin(), b.end());
    return o;
}

Tableau apply_generator(const Generator& g, const Tableau& t) {
    switch (g.family) {
        case Family::CactusA: return partial_xi_A(t, g.p, g.q);
        case Family::CactusC: return partial_xi_C(t, g.p, g.q);
        case Family::Virtual: {
            if (!t.typeA || t.n % 2) throw Error("virtual generator needs an A tableau over [2n]");
            return virtual_partial_xi(t, g.p, g.q, t.n / 2);
        }
        case Family::BkA: return bender_knuth_A(t, g.p);
        case Family::DualBkA: return dual_bk_A(t, g.p, t.n);
        case Family::QA: return g.p == 1 ? bk_q_A(t, g.q) : bk_q_interval_A(t, g.p, g.q + 1);
        case Family::BkC: return symplectic_bk(t, g.p);
        case Family::QC:
            if (g.q == t.n || g.p == 1) return partial_xi_C(t, g.p, g.q);
            return bk_q_interval_C(t, g.p, g.q + 1);
        case Family::Reflection: return reflection_xi(t, g.p);
    }
    throw Error("unimplementable generator");
}

Tableau act(const GroupWord& w, const Tableau& t) {
    Tableau o = t;
    for (int k = (int)w.size() - 1; k >= 0; --k) o = apply_generator(w[k], o);
    return o;
}

namespace {
Generator G(Family f, int p, int q = 0) { return {f, p, q}; }
GroupWord W(std::initializer_list<Generator> g) { return GroupWord(g); }
std::string iv(int p, int q) { return "[" + std::to_string(p) + "," + std::to_string(q) + "]"; }

struct Interval {
    int p, q;
};
std::vector<Interval> intervals(int N) {
    std::vector<Interval> v;
    for (int p = 1; p <= N; ++p)
        for (int q = p; q <= N; ++q) v.push_back({p, q});
    return v;
}

void cactus_relations(RelationSuite& s, Family f, int N, bool symplectic) {
    auto all = intervals(N);
    for (auto J : all) {
        Generator g = G(f, J.p, J.q);
        s.relations.push_back({"1: s" + iv(J.p, J.q) + "^2", W({g, g}), {}});
    }
    for (auto J : all)
        for (auto K : all)
            if (J.q + 1 < K.p) {
                Generator a = G(f, J.p, J.q), b = G(f, K.p, K.q);
                s.relations.push_back({"2: s" + iv(J.p, J.q) + " s" + iv(K.p, K.q), W({a, b}), W({b, a})});
            }
    for (auto J : all)
        for (auto K : all)
            if (J.p <= K.p && K.q <= J.q) {
                Generator a = G(f, J.p, J.q), b = G(f, K.p, K.q);
                if (symplectic && J.q == N) {
                    s.relations.push_back({"3(ii): J=" + iv(J.p, J.q) + " K=" + iv(K.p, K.q), W({a, b}), W({b, a})});
                } else {
                    Generator c = G(f, J.p + J.q - K.q, J.p + J.q - K.p);
                    s.relations.push_back({"3(i): J=" + iv(J.p, J.q) + " K=" + iv(K.p, K.q), W({a, b}), W({c, a})});
                }
            }
}

void bka_relations(RelationSuite& s, int N) {
    auto t = [](int i) { return G(Family::BkA, i); };
    auto td = [](int i) { return G(Family::DualBkA, i); };
    for (int i = 1; i <= N; ++i) s.relations.push_back({"t" + std::to_string(i) + "^2", W({t(i), t(i)}), {}});
    for (int i = 1; i <= N; ++i)
        for (int j = i + 2; j <= N; ++j)
            s.relations.push_back({"t" + std::to_string(i) + " t" + std::to_string(j) + " commute", W({t(i), t(j)}),
                                   W({t(j), t(i)})});
    for (int i = 3; i <= N; ++i)
        s.relations.push_back({"(t1 q[1," + std::to_string(i) + "])^4", power(W({t(1), G(Family::QA, 1, i)}), 4), {}});
    if (N >= 2) s.relations.push_back({"(t1 t2)^6", power(W({t(1), t(2)}), 6), {}});
    for (int i = 1; i <= N; ++i)
        for (int j = i + 2; j <= N; ++j)
            for (int k = j + 1; k <= N + 1; ++k)
                s.relations.push_back({"(t" + std::to_string(i) + " q" + iv(j, k - 1) + ")^2",
                                       power(W({t(i), G(Family::QA, j, k - 1)}), 2), {}});
    for (int i = 1; i <= N; ++i) s.relations.push_back({"t~" + std::to_string(i) + "^2", W({td(i), td(i)}), {}});
    for (int i = 1; i <= N; ++i)
        for (int j = i + 2; j <= N; ++j)
            s.relations.push_back({"t~" + std::to_string(i) + " t~" + std::to_string(j) + " commute",
                                   W({td(i), td(j)}), W({td(j), td(i)})});
    if (N >= 2) s.relations.push_back({"(t~1 t~2)^6", power(W({td(1), td(2)}), 6), {}});
    for (auto J : intervals(N))
        s.relations.push_back({"q" + iv(J.p, J.q) + " = s" + iv(J.p, J.q), W({G(Family::QA, J.p, J.q)}),
                               W({G(Family::CactusA, J.p, J.q)})});
}

void bkc_relations(RelationSuite& s, int n) {
    auto t = [](int i) { return G(Family::BkC, i); };
    auto q = [](int j, int k) { return G(Family::QC, j, k); };
    auto sq = [&](const std::string& name, const GroupWord& w, int k) { s.relations.push_back({name, power(w, k), {}}); };
    auto S = [](int i) { return std::to_string(i); };
    for (int i = 1; i <= 2 * n - 1; ++i) sq("1: t" + S(i) + "^2", W({t(i)}), 2);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) sq("2: (t" + S(n + i - 1) + " t" + S(n + j - 1) + ")^2", W({t(n + i - 1), t(n + j - 1)}), 2);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            if (std::abs(i - j) > 1) sq("3: (t" + S(i) + " t" + S(j) + ")^2", W({t(i), t(j)}), 2);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i < n - j; ++i) sq("4: (t" + S(i) + " t" + S(n + j - 1) + ")^2", W({t(i), t(n + j - 1)}), 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                sq("5: (t" + S(i) + " q" + iv(j, k - 1) + ")^2", W({t(i), q(j, k - 1)}), 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j) sq("6: (t" + S(i) + " q" + iv(j, n) + ")^2", W({t(i), q(j, n)}), 2);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            sq("7: (t" + S(n + i - 1) + " q" + iv(j, n) + ")^2", W({t(n + i - 1), q(j, n)}), 2);
    for (int i = 1; i <= n; ++i)
        for (int j = n - i + 2; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                sq("8: (t" + S(n + i - 1) + " q" + iv(j, k - 1) + ")^2", W({t(n + i - 1), q(j, k - 1)}), 2);
    if (n >= 3) sq("9: (t1 t2)^6", W({t(1), t(2)}), 6);
    GroupWord w10;
    for (int i = n - 1; i >= 2; --i) w10.push_back(t(i));
    for (int i = 1; i <= n; ++i) w10.push_back(t(i));
    sq("10: (" + word_name(w10) + ")^4", w10, 4);
    GroupWord orca;
    for (int i = 2 * n - 1; i >= n; --i) orca.push_back(t(i));
    s.relations.push_back({"xi = t" + S(2 * n - 1) + "...t" + S(n), W({G(Family::CactusC, 1, n)}), orca});
}

void weyl_relations(RelationSuite& s, int n) {
    auto x = [](int i) { return G(Family::Reflection, i); };
    auto S = [](int i) { return std::to_string(i); };
    for (int i = 1; i <= n; ++i) s.relations.push_back({"xi" + S(i) + "^2", power(W({x(i)}), 2), {}});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j)
            s.relations.push_back({"(xi" + S(i) + " xi" + S(j) + ")^2", power(W({x(i), x(j)}), 2), {}});
    for (int i = 1; i + 1 < n; ++i)
        s.relations.push_back({"(xi" + S(i) + " xi" + S(i + 1) + ")^3", power(W({x(i), x(i + 1)}), 3), {}});
    if (n >= 2) s.relations.push_back({"(xi" + S(n - 1) + " xi" + S(n) + ")^4", power(W({x(n - 1), x(n)}), 4), {}});
}
}  // namespace

GroupWord fold_gamma(const GroupWord& w, int n) {
    GroupWord o;
    for (auto& g : w) {
        if (g.family != Family::CactusC) throw Error("fold_gamma expects symplectic cactus generators");
        if (g.q < n) {
            o.push_back(G(Family::CactusA, g.p, g.q));
            o.push_back(G(Family::CactusA, 2 * n - g.q, 2 * n - g.p));
        } else {
            o.push_back(G(Family::CactusA, g.p, 2 * n - g.p));
        }
    }
    return o;
}

RelationSuite enumerate_relations(const std::string& kind, int rank) {
    if (rank < 1) throw Error("rank must be positive");
    RelationSuite s;
    s.name = kind;
    s.rank = rank;
    if (kind == "jn")
        cactus_relations(s, Family::CactusA, rank, false);
    else if (kind == "jsp")
        cactus_relations(s, Family::CactusC, rank, true);
    else if (kind == "vj2n") {
        RelationSuite c;
        cactus_relations(c, Family::CactusC, rank, true);
        for (auto& r : c.relations) s.relations.push_back({"~" + r.name, fold_gamma(r.lhs, rank), fold_gamma(r.rhs, rank)});
    } else if (kind == "bka")
        bka_relations(s, rank);
    else if (kind == "bkc")
        bkc_relations(s, rank);
    else if (kind == "weyl")
        weyl_relations(s, rank);
    else
        throw Error("unknown suite '" + kind + "' (jn, jsp, vj2n, bka, bkc, weyl)");
    return s;
}

Universe::Universe(std::vector<Tableau> base) {
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (auto& t : base) id(t);
    base_ = size();
}

int Universe::id(const Tableau& t) {
    auto k = key_of(t);
    auto it = index_.find(k);
    if (it != index_.end()) return it->second;
    verts_.push_back(t);
    index_.emplace(std::move(k), size() - 1);
    return size() - 1;
}

int Universe::apply(const Generator& g, int v) {
    auto& m = memo_[g.name()];
    if ((int)m.size() <= v) m.resize(size(), -1);
    if (m[v] < 0) {
        int img = id(apply_generator(g, verts_[v]));
        m[v] = img;  // m may not be resized by id(); memo_ entries are independent
    }
    return m[v];
}

int Universe::act(const GroupWord& w, int v) {
    for (int k = (int)w.size() - 1; k >= 0; --k) v = apply(w[k], v);
    return v;
}

Report verify(const RelationSuite& suite, Universe& u) {
    Report r;
    r.suite = suite.name;
    r.relations = (int)suite.relations.size();
    r.vertices = u.base_size();
    for (auto& rel : suite.relations)
        for (int v = 0; v < u.base_size(); ++v) {
            ++r.checks;
            int a = u.act(rel.lhs, v), b = u.act(rel.rhs, v);
            if (a != b) {
                r.failures.push_back({rel.name, u.at(v), u.at(a), u.at(b)});
                break;
            }
        }
    return r;
}

std::string Report::text() const {
    std::ostringstream o;
    o << "suite " << suite << ": " << relations << " relations x " << vertices << " vertices, " << checks << " checks, "
      << (pass() ? "PASS" : "FAIL") << "\n";
    for (auto& w : failures)
        o << "  " << w.relation << " fails at " << render(w.t) << ": lhs " << render(w.lhs) << ", rhs " << render(w.rhs)
          << "\n";
    return o.str();
}

std::string Report::json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["relations"] = relations;
    j["vertices"] = vertices;
    j["checks"] = checks;
    j["pass"] = pass();
    auto f = nlohmann::json::array();
    for (auto& w : failures)
        f.push_back({{"relation", w.relation}, {"tableau", render(w.t)}, {"lhs", render(w.lhs)}, {"rhs", render(w.rhs)}});
    j["failures"] = f;
    return j.dump(1);
}

ProbeResult probe_nonrelation(const std::string& name, const GroupWord& lhs, const GroupWord& rhs, Universe& u) {
    ProbeResult p;
    p.name = name;
    for (int v = 0; v < u.base_size(); ++v) {
        int a = u.act(lhs, v), b = u.act(rhs, v);
        if (a != b) {
            p.found = true;
            p.witness = {name, u.at(v), u.at(a), u.at(b)};
            break;
        }
    }
    return p;
}

std::vector<Tableau> ssyt_straight_universe(int m, int B) {
    std::vector<Tableau> all;
    for (auto& lam : partitions_upto(B, m)) {
        auto g = generate_crystal(yamanouchi(lam, m, true));
        all.insert(all.end(), g.vertices.begin(), g.vertices.end());
    }
    return all;
}

std::vector<Tableau> embedded_universe(int n, int B) {
    std::vector<Tableau> all;
    for (auto& t : kn_straight_universe(n, B)) all.push_back(embed_E(t).p);
    return all;
}

}  // namespace kn
