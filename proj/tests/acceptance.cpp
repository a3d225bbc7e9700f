// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance            all criteria
//   acceptance 5 8        selected criteria
//   acceptance --extended larger universes for criterion 8 (not part of the default run)

#include <algorithm>
#include <chrono>
#include <map>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "kn/cactus.hpp"
#include "kn/crystal.hpp"
#include "kn/fixtures.hpp"
#include "kn/involutions.hpp"
#include "kn/sjdt.hpp"
#include "kn/type_a.hpp"
#include "kn/virtualization.hpp"
#include "kn/words.hpp"
#include "support.hpp"

using namespace kn;
using namespace kn::testing;

namespace {

bool g_extended = false;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    int shown = 0;
    void fail(const std::string& msg) {
        ok = false;
        if (shown++ < 5) detail << "\n    " << msg;
    }
    void require(bool cond, const std::string& msg) {
        if (!cond) fail(msg);
    }
};

struct Scale {
    int n, B;
};
std::vector<Scale> scales() {
    if (g_extended) return {{2, 7}, {3, 5}, {4, 3}};
    return {{2, 5}, {3, 4}};
}
std::string scale_name(const Scale& s) { return "n=" + std::to_string(s.n) + ",|lambda|<=" + std::to_string(s.B); }

std::string data_dir() { return KN_DATA_DIR; }

void fixture(Outcome& o, const std::string& name) {
    FixtureReport r = run_fixture(name, data_dir());
    for (auto& c : r.checks)
        if (!c.ok) o.fail(name + ": " + c.what + " got " + c.got + " expected " + c.expected);
    o.detail << r.checks.size() - r.failures() << "/" << r.checks.size() << " checks";
}

// ---- 1 ------------------------------------------------------------------
void c1(Outcome& o) {
    auto t0 = std::chrono::steady_clock::now();
    fixture(o, "crystal-c2-21");
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(s < 1.0, "crystal fixture took " + std::to_string(s) + " s");
    CrystalGraph g = generate_crystal(parse_tableau("1,1/2", 2));
    o.require(g.size() == 16, "vertex count " + std::to_string(g.size()));
    o.detail << ", 16 vertices, " << g.arrows.size() << " arrows";
}

void c2(Outcome& o) { fixture(o, "columns-c2"); }
void c3(Outcome& o) { fixture(o, "full-reversal-c3"); }
void c4(Outcome& o) { fixture(o, "partial-reversal-c4"); }
void c5(Outcome& o) { fixture(o, "virtualization-n6"); }
void c6(Outcome& o) { fixture(o, "bk-c2"); }
void c7(Outcome& o) { fixture(o, "counterexample-c2"); }

// ---- 8 ------------------------------------------------------------------
// (a) axioms, and one source and one sink in every component of every Levi branching
void c8a(Outcome& o, const Scale& sc) {
    long vertices = 0, comps = 0;
    for (auto& lam : partitions_upto(sc.B, sc.n)) {
        CrystalGraph g = generate_crystal(yamanouchi(lam, sc.n));
        vertices += g.size();
        o.require(g.ncomponents == 1, render(yamanouchi(lam, sc.n)) + ": crystal not connected");
        for (auto& t : g.vertices) {
            std::string why;
            if (!is_kn(t, &why)) o.fail(render(t) + " not KN: " + why);
            for (int i = 1; i <= sc.n; ++i) {
                auto [eps, phi] = eps_phi(t, i);
                if (std::make_pair(eps, phi) != eps_phi_by_iteration(t, i))
                    o.fail(render(t) + ": eps/phi disagree with iteration for color " + std::to_string(i));
                if (phi - eps != pairing(weight(t), i, false))
                    o.fail(render(t) + ": phi - eps != <wt, alpha_" + std::to_string(i) + ">");
                if (auto f = f_op(t, i)) {
                    auto back = e_op(*f, i);
                    if (!back || *back != t) o.fail(render(t) + ": e_i f_i != id");
                    if (weight(*f) != minus_root(weight(t), i, false)) o.fail(render(t) + ": wt(f_i) wrong");
                }
                if (auto e = e_op(t, i)) {
                    auto back = f_op(*e, i);
                    if (!back || *back != t) o.fail(render(t) + ": f_i e_i != id");
                }
            }
        }
        for (auto& J : color_subsets(sc.n)) {
            CrystalGraph h = branch(g, J);
            Extremes ex = extremes(h);
            comps += h.ncomponents;
            for (int c = 0; c < h.ncomponents; ++c)
                if (ex.sources[c] != 1 || ex.sinks[c] != 1)
                    o.fail("shape " + render(yamanouchi(lam, sc.n)) + ", J of size " + std::to_string(J.size()) +
                           ": component with " + std::to_string(ex.sources[c]) + " sources, " +
                           std::to_string(ex.sinks[c]) + " sinks");
        }
        // the crystal is all of KN(lambda, n)
        o.require((long)kn_fillings(lam, {}, sc.n).size() == g.size(),
                  render(yamanouchi(lam, sc.n)) + ": crystal misses KN tableaux");
    }
    o.detail << "(a) " << vertices << " vertices, " << comps << " branched components; ";
}

void suite(Outcome& o, const char* tag, const std::string& kind, int n, Universe& u) {
    Report r = verify(enumerate_relations(kind, n), u);
    for (auto& w : r.failures)
        o.fail(std::string(tag) + " " + w.relation + " fails at " + render(w.t));
    o.detail << tag << " " << r.relations << " relations/" << r.checks << " checks; ";
}

// (e) forward and reverse slides commute with every e_i, f_i and keep KN
void c8e(Outcome& o, const Scale& sc) {
    auto U = skew_kn_universe(sc.n, sc.B);
    long slides = 0;
    auto same = [](const std::optional<Tableau>& a, const std::optional<Tableau>& b, auto slide) {
        if ((bool)a != (bool)b) return false;
        return !a || slide(*a) == *b;
    };
    for (auto& t : U) {
        for (auto [r, c] : inner_corners(t)) {
            auto slide = [&](const Tableau& x) { return complete_slide(x, r, c); };
            Tableau s = slide(t);
            ++slides;
            if (!is_kn(s)) o.fail("slide of " + render(t) + " is not KN");
            if (weight(s) != weight(t)) o.fail("slide of " + render(t) + " changes the weight");
            for (int i = 1; i <= sc.n; ++i) {
                if (!same(f_op(t, i), f_op(s, i), slide)) o.fail("slide and f" + std::to_string(i) + " at " + render(t));
                if (!same(e_op(t, i), e_op(s, i), slide)) o.fail("slide and e" + std::to_string(i) + " at " + render(t));
            }
        }
        for (auto [r, c] : outer_cocorners(t)) {
            auto slide = [&](const Tableau& x) { return reverse_slide(x, r, c); };
            Tableau s = slide(t);
            ++slides;
            if (!is_kn(s)) o.fail("reverse slide of " + render(t) + " is not KN");
            for (int i = 1; i <= sc.n; ++i) {
                if (!same(f_op(t, i), f_op(s, i), slide)) o.fail("reverse slide and f" + std::to_string(i) + " at " + render(t));
                if (!same(e_op(t, i), e_op(s, i), slide)) o.fail("reverse slide and e" + std::to_string(i) + " at " + render(t));
            }
        }
        Tableau rt = rectify(t);
        for (int i = 1; i <= sc.n; ++i)
            if (!same(f_op(t, i), f_op(rt, i), [](const Tableau& x) { return rectify(x); }))
                o.fail("rectify and f" + std::to_string(i) + " at " + render(t));
    }
    o.detail << "(e) " << U.size() << " skew tableaux, " << slides << " slides; ";
}

// (f) E intertwines e_i, f_i with the virtual operators; every xi square commutes
void c8f(Outcome& o, const Scale& sc, const std::vector<Tableau>& U) {
    long squares = 0;
    for (auto& t : U) {
        Tableau e = embed_E(t).p;
        for (int i = 1; i <= sc.n; ++i) {
            auto f = f_op(t, i);
            auto vf = virtual_f(e, i, sc.n);
            if ((bool)f != (bool)vf || (f && embed_E(*f).p != *vf)) o.fail("E and f" + std::to_string(i) + " at " + render(t));
            auto ee = e_op(t, i);
            auto ve = virtual_e(e, i, sc.n);
            if ((bool)ee != (bool)ve || (ee && embed_E(*ee).p != *ve)) o.fail("E and e" + std::to_string(i) + " at " + render(t));
        }
        for (int p = 1; p <= sc.n; ++p)
            for (int q = p; q <= sc.n; ++q) {
                std::string why;
                ++squares;
                if (!check_diagram(t, p, q, &why)) o.fail("[" + std::to_string(p) + "," + std::to_string(q) + "] " + why);
            }
    }
    o.detail << "(f) " << squares << " xi squares; ";
}

// (g) xi_[j,n] by switching, by virtualization, and by the crystal oracle
void c8g(Outcome& o, const Scale& sc, const std::vector<Tableau>& U) {
    long cases = 0;
    for (auto& t : U)
        for (int j = 1; j <= sc.n; ++j) {
            Tableau a = colorful_partial_reversal(t, j);
            Tableau b = xi_C_via_virtualization(t, j, sc.n);
            Tableau c = xi_oracle(t, j, sc.n);
            ++cases;
            if (a != b || a != c)
                o.fail("xi_[" + std::to_string(j) + ",n] of " + render(t) + ": switching " + render(a) +
                       ", virtual " + render(b) + ", oracle " + render(c));
            if (j == sc.n && reflection_xi(t, j) != a) o.fail("xi_n reflection differs at " + render(t));
        }
    // skew shapes: switching against the oracle
    for (auto& t : skew_kn_universe(sc.n, std::min(sc.B, 5)))
        for (int j = 1; j <= sc.n; ++j) {
            ++cases;
            Tableau a = colorful_partial_reversal(t, j), c = xi_oracle(t, j, sc.n);
            if (a != c) o.fail("skew xi_[" + std::to_string(j) + ",n] of " + render(t) + ": " + render(a) + " vs " + render(c));
        }
    o.detail << "(g) " << cases << " cases; ";
}

void c8(Outcome& o) {
    auto scales_ = scales();
    for (auto& sc : scales_) {
        o.detail << (&sc == &scales_[0] ? "" : "\n    ") << scale_name(sc) << ": ";
        c8a(o, sc);
        auto U = kn_straight_universe(sc.n, sc.B);
        Universe u(U);
        suite(o, "(b) jsp", "jsp", sc.n, u);
        suite(o, "(c) bkc", "bkc", sc.n, u);
        suite(o, "(d) weyl", "weyl", sc.n, u);
        c8e(o, sc);
        c8f(o, sc, U);
        Universe ue(embedded_universe(sc.n, sc.B));
        suite(o, "(f) vj2n", "vj2n", sc.n, ue);
        c8g(o, sc, U);
    }
}

// ---- 9 ------------------------------------------------------------------
void c9(Outcome& o) {
    int n = 3, B = 5;
    Universe u(kn_straight_universe(n, B));
    Generator t1{Family::BkC, 1, 0}, t2{Family::BkC, 2, 0};
    ProbeResult p = probe_nonrelation("(t1 t2)^3", power({t1, t2}, 3), {}, u);
    o.require(p.found, "no witness for (t1 t2)^3 != 1");
    if (p.found) o.detail << "(t1 t2)^3 moves " << render(p.witness.t) << " to " << render(p.witness.lhs);
    Universe ue(embedded_universe(n, B));
    std::map<std::string, Tableau> preimage;
    for (auto& t : kn_straight_universe(n, B)) preimage[key_of(embed_E(t).p)] = t;
    for (int i = 1; i < n; ++i) {
        auto pair = [&](int k) {
            return GroupWord{Generator{Family::BkA, k, 0}, Generator{Family::DualBkA, 2 * n - k, 0}};
        };
        GroupWord lhs = pair(i) * pair(i + 1) * pair(i), rhs = pair(i + 1) * pair(i) * pair(i + 1);
        ProbeResult q = probe_nonrelation("braid " + std::to_string(i), lhs, rhs, ue);
        o.require(q.found, "no witness for the virtual braid failure at i = " + std::to_string(i));
        if (q.found) {
            auto it = preimage.find(key_of(q.witness.t));
            o.require(it != preimage.end(), "braid witness is not an E-image");
            if (it != preimage.end()) o.detail << "; virtual braid i=" << i << " fails at E(" << render(it->second) << ")";
        }
    }
}

// ---- 10 -----------------------------------------------------------------
void c10(Outcome& o) {
    long shapes = 0;
    for (auto sc : std::vector<Scale>{{2, 5}, {3, 4}})
        for (auto& lam : partitions_upto(sc.B, sc.n)) {
            ++shapes;
            Character ch = character(generate_crystal(yamanouchi(lam, sc.n)));
            std::string why;
            if (!character_symmetric(ch, false, &why)) o.fail(render(yamanouchi(lam, sc.n)) + ": " + why);
            // independent count over brute-force KN fillings
            Character brute;
            for (auto& t : kn_fillings(lam, {}, sc.n)) brute[weight(t)]++;
            if (brute != ch) o.fail(render(yamanouchi(lam, sc.n)) + ": character differs from the brute-force count");
        }
    o.detail << shapes << " shapes";
}

// ---- 11 -----------------------------------------------------------------
void c11(Outcome& o) {
    std::mt19937 rng(20261017);
    const int R = 1000;
    long cases = 0;
    auto rt_text = [&](const Tableau& t) {
        ++cases;
        if (parse_tableau(render(t), t.n, t.typeA) != t) o.fail("parse/render " + render(t));
        if (from_json(to_json(t)) != t) o.fail("json " + render(t));
    };
    // exhaustive: every straight and skew KN tableau of the small universes
    std::vector<Tableau> straight, skew;
    for (auto sc : std::vector<Scale>{{2, 5}, {3, 4}}) {
        auto a = kn_straight_universe(sc.n, sc.B);
        auto b = skew_kn_universe(sc.n, sc.B);
        straight.insert(straight.end(), a.begin(), a.end());
        skew.insert(skew.end(), b.begin(), b.end());
    }
    // random: walks in larger crystals, and random reverse slides of those
    std::vector<Tableau> rstraight, rskew;
    for (int k = 0; k < R; ++k) {
        int n = 2 + k % 4;
        Tableau t = random_walk(yamanouchi(random_partition(9, n, rng), n), 60, rng);
        rstraight.push_back(t);
        int slides = 1 + (int)(rng() % 4);
        for (int s = 0; s < slides; ++s) {
            auto cc = outer_cocorners(t);
            auto [r, c] = cc[rng() % cc.size()];
            t = reverse_slide(t, r, c);
        }
        rskew.push_back(t);
    }
    for (auto* v : {&straight, &skew, &rstraight, &rskew})
        for (auto& t : *v) rt_text(t);
    // Phi: every admissible column for n <= 5, random ones for n = 6..8
    long cols = 0;
    auto rt_phi = [&](const Column& c, int n) {
        ++cols;
        Column d = phi(c, n);
        if (!is_coadmissible(d, n) || phi_inv(d, n) != c) o.fail("Phi " + render_column(c));
    };
    for (int n = 1; n <= 5; ++n)
        for (int h = 1; h <= n; ++h)
            for (auto& c : admissible_columns(n, h)) rt_phi(c, n);
    for (int k = 0; k < R;) {
        int n = 6 + k % 3;
        auto alpha = alphabet(n);
        std::shuffle(alpha.begin(), alpha.end(), rng);
        Column c(alpha.begin(), alpha.begin() + 1 + rng() % n);
        sort_column(c);
        if (!is_admissible(c, n)) continue;
        rt_phi(c, n);
        ++k;
    }
    // E
    long emb = 0;
    auto rt_E = [&](const Tableau& t) {
        ++emb;
        Embedded e = embed_E(t);
        if (e.q != build_Q_lambda(t.outer(), t.n)) o.fail("Q of E(" + render(t) + ") is not Q_lambda");
        if (invert_E(e.p, t.outer(), t.n) != t) o.fail("E^-1 E " + render(t));
    };
    for (auto& t : straight) rt_E(t);
    for (auto& t : rstraight) rt_E(t);
    // rectify / anti-rectify
    long rect = 0;
    auto rt_rect = [&](const Tableau& t) {
        ++rect;
        Rectified r = rectify_recorded(t);
        if (anti_rectify(r) != t) o.fail("arect rect " + render(t));
    };
    for (auto& t : skew) rt_rect(t);
    for (auto& t : rskew) rt_rect(t);
    // column insertion: every word of length <= 5 over [3], random words over [6]
    long words = 0;
    auto rt_ins = [&](const Word& w, int m) {
        ++words;
        Tableau empty = make_tableau(m, {}, {}, true);
        Inserted ins = column_insert_A(empty, w, m);
        if (reverse_column_insert_A(ins.p, ins.q) != w) o.fail("insert/reverse " + render_word(w));
    };
    std::function<void(Word&, int)> all_words = [&](Word& w, int len) {
        rt_ins(w, 3);
        if ((int)w.size() == len) return;
        for (int x = 1; x <= 3; ++x) {
            w.push_back(x);
            all_words(w, len);
            w.pop_back();
        }
    };
    Word w0;
    all_words(w0, 5);
    for (int k = 0; k < R; ++k) {
        Word w(1 + rng() % 14);
        for (auto& x : w) x = 1 + (int)(rng() % 6);
        rt_ins(w, 6);
    }
    o.detail << "text " << cases << ", Phi " << cols << ", E " << emb << ", rect " << rect << ", insertion " << words;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::pair<const char*, std::function<void(Outcome&)>>> crit = {
        {"crystal graph of KN((2,1),2)", c1},
        {"admissible columns and splits", c2},
        {"full reversal, C_3", c3},
        {"partial reversal xi_[2,4], C_4", c4},
        {"virtualization, n = 6", c5},
        {"Bender-Knuth involutions, C_2", c6},
        {"Bender-Knuth counterexample, C_2", c7},
        {"exhaustive relation suites", c8},
        {"non-relation probes", c9},
        {"character symmetry", c10},
        {"round trips", c11},
    };
    std::set<int> want;
    for (int a = 1; a < argc; ++a) {
        std::string s = argv[a];
        if (s == "--extended") g_extended = true;
        else want.insert(std::stoi(s));
    }
    int failed = 0;
    for (int k = 1; k <= (int)crit.size(); ++k) {
        if (!want.empty() && !want.count(k)) continue;
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            crit[k - 1].second(o);
        } catch (const std::exception& e) {
            o.fail(std::string("error: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char head[160];
        std::snprintf(head, sizeof head, "%s criterion %2d: %s (%.2f s)", o.ok ? "PASS" : "FAIL", k, crit[k - 1].first, s);
        std::cout << head << "\n    " << o.detail.str() << "\n" << std::flush;
        failed += !o.ok;
    }
    return failed ? 1 : 0;
}
