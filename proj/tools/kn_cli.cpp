// kn: command-line front end for the tableau library.
// exit status: 0 ok / all pass, 1 verification failure, 2 usage or parse error

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kn/cactus.hpp"
#include "kn/crystal.hpp"
#include "kn/fixtures.hpp"
#include "kn/involutions.hpp"
#include "kn/sjdt.hpp"
#include "kn/type_a.hpp"
#include "kn/virtualization.hpp"
#include "kn/words.hpp"

using namespace kn;
using nlohmann::json;

namespace {

struct Opts {
    bool json = false;
    std::string out;
    int n = 0;
    bool typeA = false;
    std::string data_dir = KN_DATA_DIR;
};


void emit(const Opts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw Error("cannot write " + o.out);
    f << text;
}

Tableau tab(const Opts& o, const std::string& s) { return parse_tableau(s, o.n, o.typeA); }

std::vector<int> int_list(const std::string& s) {
    std::vector<int> v;
    std::string x = s;
    std::replace(x.begin(), x.end(), ',', ' ');
    std::stringstream ss(x);
    int k;
    while (ss >> k) v.push_back(k);
    if (!ss.eof()) throw Error("expected comma-separated integers, got '" + s + "'");
    return v;
}

std::string wstr(const Weight& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

std::string tab_out(const Opts& o, const Tableau& t) {
    return o.json ? to_json(t) : render(t);
}

Knuth rule_of(const std::string& r) {
    static const std::map<std::string, Knuth> m = {{"R1a", Knuth::R1a}, {"R1b", Knuth::R1b},
                                                   {"R2a", Knuth::R2a}, {"R2b", Knuth::R2b},
                                                   {"R3", Knuth::R3contract}, {"R3d", Knuth::R3dilate}};
    auto it = m.find(r);
    if (it == m.end()) throw Error("unknown rule '" + r + "' (R1a R1b R2a R2b R3 R3d)");
    return it->second;
}

std::string trace_text(const Trace& tr) {
    std::string s;
    std::string last;
    for (auto& st : tr) {
        std::string line = st.stage + "  " + st.text;
        if (line != last) s += line + "\n";
        last = line;
    }
    return s;
}

std::vector<Tableau> universe_for(const std::string& suite, int rank, int B) {
    if (suite == "jn" || suite == "bka") return ssyt_straight_universe(rank + 1, B);
    if (suite == "vj2n") return embedded_universe(rank, B);
    return kn_straight_universe(rank, B);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kn: Kashiwara-Nakashima tableaux, crystals, Schutzenberger-Lusztig involutions, cactus actions"};
    app.require_subcommand(1);
    app.fallthrough();
    Opts o;
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_option("--out", o.out, "write the output to a file");
    app.add_option("-n,--rank", o.n, "rank of C_n (or size m of the type-A alphabet); inferred when omitted");
    app.add_flag("-A,--typeA", o.typeA, "read tableaux over the type-A alphabet [m]");
    app.add_option("--data-dir", o.data_dir, "fixture directory");

    std::function<int()> run;
    std::string T, W;

    // tab
    auto* tabc = app.add_subcommand("tab", "single tableaux")->require_subcommand(1);
    for (const char* name : {"check", "split", "weight"}) {
        auto* s = tabc->add_subcommand(name);
        s->add_option("tableau", T, "rows joined by '/', cells by ','; '.' inner, '*' puncture")->required();
        s->callback([&, name = std::string(name)] {
            run = [&, name] {
                Tableau t = tab(o, T);
                if (name == "check") {
                    std::string why;
                    bool ok = t.typeA ? is_semistandard(t, &why) : is_kn(t, &why);
                    std::string kind = t.typeA ? "semistandard" : "KN";
                    if (o.json) emit(o, json{{"tableau", render(t)}, {"ok", ok}, {"reason", why}}.dump());
                    else emit(o, ok ? kind : "not " + kind + ": " + why);
                    return ok ? 0 : 1;
                }
                if (name == "split") {
                    emit(o, tab_out(o, split_tableau(t)));
                    return 0;
                }
                Weight w = weight(t);
                emit(o, o.json ? json(w).dump() : wstr(w));
                return 0;
            };
        });
    }

    // word
    auto* wordc = app.add_subcommand("word", "words and symplectic Knuth relations")->require_subcommand(1);
    std::string rule;
    int pos = 1, z = 0, len = 0;
    auto* knuth = wordc->add_subcommand("knuth", "apply one relation at a 1-based position");
    knuth->add_option("word", W)->required();
    knuth->add_option("--rule", rule, "R1a R1b R2a R2b R3 (contract) R3d (dilate)")->required();
    knuth->add_option("--pos", pos, "1-based start of the factor");
    knuth->add_option("--z", z, "letter of the inserted pair (R3d)");
    knuth->add_option("--len", len, "length of the column factor (R3d)");
    knuth->callback([&] {
        run = [&] {
            if (o.n <= 0) throw Error("word knuth needs --rank");
            Word r = knuth_step(parse_word(W), pos - 1, rule_of(rule), o.n, z, len);
            emit(o, r.empty() ? "(empty word)" : render_word(r));
            return 0;
        };
    });
    auto* wrect = wordc->add_subcommand("rect", "plactic normal form (rectified tableau of the word)");
    wrect->add_option("word", W)->required();
    wrect->callback([&] {
        run = [&] {
            Word w = parse_word(W);
            int n = o.n;
            for (Letter x : w) n = std::max(n, absl(x));
            emit(o, tab_out(o, plactic_normal_form(w, n)));
            return 0;
        };
    });

    // crystal
    auto* crys = app.add_subcommand("crystal", "crystal graphs generated from a tableau")->require_subcommand(1);
    std::string colors;
    for (const char* name : {"build", "dot", "json", "character"}) {
        auto* s = crys->add_subcommand(name);
        s->add_option("tableau", T, "seed; the whole connected component is generated")->required();
        s->add_option("--colors", colors, "Levi branching to these colors, e.g. 1,2");
        s->callback([&, name = std::string(name)] {
            run = [&, name] {
                Tableau t = tab(o, T);
                CrystalGraph g = generate_crystal(t);
                if (!colors.empty()) g = branch(g, int_list(colors));
                if (name == "dot") emit(o, to_dot(g));
                else if (name == "json") emit(o, graph_json(g));
                else if (name == "character") {
                    Character ch = character(g);
                    std::string why;
                    bool sym = colors.empty() ? character_symmetric(ch, g.typeA, &why) : true;
                    if (o.json) {
                        json j = json::array();
                        for (auto& [w, m] : ch) j.push_back({{"weight", w}, {"mult", m}});
                        emit(o, json{{"character", j}, {"symmetric", sym}}.dump(1));
                    } else {
                        std::string s;
                        for (auto& [w, m] : ch) s += wstr(w) + " " + std::to_string(m) + "\n";
                        s += sym ? "Weyl symmetric\n" : "NOT Weyl symmetric: " + why + "\n";
                        emit(o, s);
                    }
                    return sym ? 0 : 1;
                } else {
                    int highest = 0;
                    std::vector<int> in(g.size(), 0);
                    for (auto& a : g.arrows) in[a.dst]++;
                    for (int v = 0; v < g.size(); ++v) highest += in[v] == 0;
                    std::ostringstream s;
                    s << "vertices " << g.size() << "\narrows " << g.arrows.size() << "\ncomponents "
                      << g.ncomponents << "\nhighest weight vertices " << highest << "\n";
                    emit(o, o.json ? json{{"vertices", g.size()}, {"arrows", g.arrows.size()},
                                          {"components", g.ncomponents}, {"highest", highest}}
                                         .dump()
                                   : s.str());
                }
                return 0;
            };
        });
    }

    // op
    auto* opc = app.add_subcommand("op", "Kashiwara operators")->require_subcommand(1);
    std::string ops;
    auto* apply = opc->add_subcommand("apply", "apply a word such as f1,e2,f2; the rightmost acts first");
    apply->add_option("ops", ops)->required();
    apply->add_option("tableau", T)->required();
    apply->callback([&] {
        run = [&] {
            Tableau t = tab(o, T);
            std::vector<std::string> seq;
            std::stringstream ss(ops);
            std::string tok;
            while (std::getline(ss, tok, ',')) seq.push_back(tok);
            for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
                if (it->size() < 2 || ((*it)[0] != 'f' && (*it)[0] != 'e'))
                    throw Error("bad operator '" + *it + "' (use f<i> or e<i>)");
                int i = std::stoi(it->substr(1));
                auto r = (*it)[0] == 'f' ? f_op(t, i) : e_op(t, i);
                if (!r) {
                    emit(o, o.json ? json{{"result", nullptr}, {"vanished_at", *it}}.dump() : "0 (" + *it + " vanishes)");
                    return 0;
                }
                t = *r;
            }
            emit(o, tab_out(o, t));
            return 0;
        };
    });

    // inv
    auto* inv = app.add_subcommand("inv", "involutions")->require_subcommand(1);
    std::string interval;
    int ki = 0;
    bool trace = false;
    for (const char* name : {"evac", "reversal", "partial", "bk", "reflect"}) {
        auto* s = inv->add_subcommand(name);
        s->add_option("tableau", T)->required();
        if (std::string(name) == "partial") s->add_option("--interval", interval, "p,q")->required();
        if (std::string(name) == "bk" || std::string(name) == "reflect") s->add_option("--i", ki)->required();
        if (std::string(name) == "reversal" || std::string(name) == "partial" || std::string(name) == "evac")
            s->add_flag("--trace", trace, "print the switching steps");
        s->callback([&, name = std::string(name)] {
            run = [&, name] {
                Tableau t = tab(o, T);
                Trace tr;
                Tableau r;
                if (name == "evac") {
                    if (t.typeA) r = evacuation_A(t, t.n);
                    else r = evacuation_C(t, trace ? &tr : nullptr);
                } else if (name == "reversal") {
                    if (t.typeA) r = reversal_A(t, 1, t.n);
                    else r = reversal_C(t, trace ? &tr : nullptr);
                } else if (name == "partial") {
                    auto pq = int_list(interval);
                    if (pq.size() != 2) throw Error("--interval needs p,q");
                    if (t.typeA) r = partial_xi_A(t, pq[0], pq[1]);
                    else if (pq[1] == t.n && trace) r = colorful_partial_reversal(t, pq[0], &tr);
                    else r = partial_xi_C(t, pq[0], pq[1]);
                } else if (name == "bk") {
                    r = t.typeA ? bender_knuth_A(t, ki) : symplectic_bk(t, ki);
                } else {
                    r = reflection_xi(t, ki);
                }
                std::string s = trace ? trace_text(tr) : "";
                emit(o, s + tab_out(o, r));
                return 0;
            };
        });
    }

    // virt
    auto* virt = app.add_subcommand("virt", "virtual embedding into A_{2n-1}")->require_subcommand(1);
    std::string lambda;
    bool cnotation = false;
    auto* embed = virt->add_subcommand("embed", "E(T) and its recording tableau");
    embed->add_option("tableau", T)->required();
    embed->add_flag("--c", cnotation, "print E(T) in the symplectic alphabet");
    embed->callback([&] {
        run = [&] {
            Tableau t = tab(o, T);
            Embedded e = embed_E(t);
            Tableau p = cnotation ? a_as_c(e.p, t.n) : e.p;
            if (o.json) emit(o, json{{"P", render(p)}, {"Q", render(e.q)}, {"weight", weight(e.p)}}.dump(1));
            else emit(o, "P " + render(p) + "\nQ " + render(e.q) + "\nwt " + wstr(weight(e.p)));
            return 0;
        };
    });
    auto* invert = virt->add_subcommand("invert", "E^-1 of a type-A tableau over [2n]");
    invert->add_option("tableau", T, "type-A letters 1..2n")->required();
    invert->add_option("--lambda", lambda, "shape of the KN tableau, e.g. 2,1")->required();
    invert->callback([&] {
        run = [&] {
            if (o.n <= 0) throw Error("virt invert needs --rank n");
            Tableau p = parse_tableau(T, 2 * o.n, true);
            emit(o, tab_out(o, invert_E(p, int_list(lambda), o.n)));
            return 0;
        };
    });
    auto* vcheck = virt->add_subcommand("check", "E(xi_[p,q](T)) = virtual xi(E(T)) for one or all intervals");
    vcheck->add_option("tableau", T)->required();
    vcheck->add_option("--interval", interval, "p,q (default: every interval)");
    vcheck->callback([&] {
        run = [&] {
            Tableau t = tab(o, T);
            std::vector<std::pair<int, int>> ivs;
            if (!interval.empty()) {
                auto pq = int_list(interval);
                if (pq.size() != 2) throw Error("--interval needs p,q");
                ivs.push_back({pq[0], pq[1]});
            } else {
                for (int p = 1; p <= t.n; ++p)
                    for (int q = p; q <= t.n; ++q) ivs.push_back({p, q});
            }
            bool all = true;
            std::string s;
            for (auto [p, q] : ivs) {
                std::string why;
                bool ok = check_diagram(t, p, q, &why);
                all &= ok;
                s += "[" + std::to_string(p) + "," + std::to_string(q) + "] " + (ok ? "ok" : "FAIL " + why) + "\n";
            }
            emit(o, s + (all ? "PASS" : "FAIL"));
            return all ? 0 : 1;
        };
    });

    // verify
    auto* ver = app.add_subcommand("verify", "check a relation suite on every straight tableau up to a size");
    std::string suite;
    int rank = 2, maxcells = 4;
    ver->add_option("--suite", suite, "jn jsp vj2n bka bkc weyl")->required();
    ver->add_option("--rank", rank, "number of nodes");
    ver->add_option("--max-cells", maxcells, "all shapes with at most this many cells");
    ver->callback([&] {
        run = [&] {
            RelationSuite rs = enumerate_relations(suite, rank);
            Universe u(universe_for(suite, rank, maxcells));
            Report r = verify(rs, u);
            emit(o, o.json ? r.json() : r.text());
            return r.pass() ? 0 : 1;
        };
    });

    // fixture
    auto* fix = app.add_subcommand("fixture", "replay the worked examples")->require_subcommand(1);
    std::string fname;
    bool quiet = false;
    auto* frun = fix->add_subcommand("run", "run one fixture, or 'all'");
    frun->add_option("name", fname)->required();
    frun->add_flag("-q,--quiet", quiet, "only failing checks");
    frun->callback([&] {
        run = [&] {
            std::vector<std::string> names = fname == "all" ? fixture_names() : std::vector<std::string>{fname};
            bool all = true;
            std::string s;
            json arr = json::array();
            for (auto& nm : names) {
                FixtureReport r = run_fixture(nm, o.data_dir);
                all &= r.pass();
                if (o.json) arr.push_back(json::parse(r.json()));
                else s += r.text(!quiet);
            }
            emit(o, o.json ? arr.dump(1) : s);
            return all ? 0 : 1;
        };
    });
    fix->add_subcommand("list", "fixture names")->callback([&] {
        run = [&] {
            std::string s;
            for (auto& nm : fixture_names()) s += nm + "\n";
            emit(o, s);
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return run ? run() : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
