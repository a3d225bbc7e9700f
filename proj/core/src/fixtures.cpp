#include "kn/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kn/crystal.hpp"
#include "kn/involutions.hpp"
#include "kn/sjdt.hpp"
#include "kn/type_a.hpp"
#include "kn/virtualization.hpp"
#include "kn/words.hpp"

namespace kn {

using nlohmann::json;

bool FixtureReport::pass() const { return failures() == 0; }

int FixtureReport::failures() const {
    return (int)std::count_if(checks.begin(), checks.end(), [](const FixtureCheck& c) { return !c.ok; });
}

std::string FixtureReport::text(bool verbose) const {
    std::ostringstream o;
    o << "fixture " << name << ": " << (pass() ? "PASS" : "FAIL") << " (" << checks.size() - failures() << "/"
      << checks.size() << " checks)\n";
    for (const auto& c : checks) {
        if (c.ok && !verbose) continue;
        o << "  " << (c.ok ? "ok   " : "FAIL ") << c.what << ": " << c.got;
        if (!c.ok) o << "   expected " << c.expected;
        o << "\n";
    }
    return o.str();
}

std::string FixtureReport::json() const {
    nlohmann::json j;
    j["fixture"] = name;
    j["pass"] = pass();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"what", c.what}, {"expected", c.expected}, {"got", c.got}, {"ok", c.ok}});
    return j.dump(2);
}

std::vector<std::string> fixture_names() {
    return {"crystal-c2-21",        "columns-c2", "full-reversal-c3", "partial-reversal-c4",
            "virtualization-n6", "bk-c2",      "counterexample-c2"};
}

namespace {

std::string vec_str(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

struct Run {
    FixtureReport rep;
    void eq(const std::string& what, const std::string& expected, const std::string& got) {
        rep.checks.push_back({what, expected, got, expected == got});
    }
    void truth(const std::string& what, bool ok, const std::string& got = "") {
        rep.checks.push_back({what, "true", got.empty() ? (ok ? "true" : "false") : got, ok});
    }
    // guard against exceptions inside one check group
    template <class F>
    void guarded(const std::string& what, F f) {
        try {
            f();
        } catch (const std::exception& e) {
            rep.checks.push_back({what, "no error", std::string("error: ") + e.what(), false});
        }
    }
    // each expected display must appear in order among the trace texts of the given stages
    void chain(const std::string& what, const json& expected, const Trace& tr, const std::vector<std::string>& stages) {
        std::vector<std::string> seen;
        for (const auto& s : tr)
            if (std::find(stages.begin(), stages.end(), s.stage) != stages.end()) seen.push_back(s.text);
        size_t pos = 0;
        for (size_t k = 0; k < expected.size(); ++k) {
            std::string want = expected[k];
            auto it = std::find(seen.begin() + pos, seen.end(), want);
            bool ok = it != seen.end();
            std::string label = what + "[" + std::to_string(k + 1) + "]";
            rep.checks.push_back({label, want, ok ? want : "not in trace after step " + std::to_string(pos), ok});
            if (ok) pos = (size_t)(it - seen.begin()) + 1;
        }
    }
};

json load(const std::string& dir, const std::string& name) {
    std::string path = dir + "/" + name + ".json";
    std::ifstream in(path);
    if (!in) throw Error("cannot open fixture " + path);
    try {
        return json::parse(in);
    } catch (const std::exception& e) {
        throw Error("fixture " + path + ": " + e.what());
    }
}

const TraceStep* stage(const Trace& tr, const std::string& s) {
    for (const auto& x : tr)
        if (x.stage == s) return &x;
    return nullptr;
}

// letters are tokens starting with a digit or '-'; other tokens become '*'
std::string mask_letters(const std::string& text) {
    std::string out, tok;
    auto flush = [&] {
        bool letter = !tok.empty() && (isdigit((unsigned char)tok[0]) || tok[0] == '-');
        out += letter ? "*" : tok;
        tok.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == '/') {
            flush();
            out.push_back(ch);
        } else {
            tok.push_back(ch);
        }
    }
    flush();
    return out;
}

// leading letter tokens of each row
std::string letters_part(const std::string& text) {
    std::string out;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, '/')) {
        std::stringstream cs(row);
        std::string cell, kept;
        while (std::getline(cs, cell, ',')) {
            if (cell.empty() || !(isdigit((unsigned char)cell[0]) || cell[0] == '-')) break;
            kept += (kept.empty() ? "" : ",") + cell;
        }
        if (kept.empty()) break;
        out += (out.empty() ? "" : "/") + kept;
    }
    return out;
}

Tableau cells_where(const Tableau& t, bool keep_small, int bound) {
    // type A: letters <= bound (keep_small) or > bound, as a skew tableau
    std::vector<std::vector<Letter>> rows;
    Partition inner;
    for (int r = 0; r < t.nrows(); ++r) {
        std::vector<Letter> row;
        int in = 0;
        for (int c = 0; c < (int)t.rows[r].size(); ++c) {
            Letter x = t.at(r, c);
            bool small = x <= bound;
            if (small == keep_small) row.push_back(x);
            else if (!keep_small) ++in;
        }
        if (row.empty() && keep_small) break;
        inner.push_back(in);
        rows.push_back(row);
        rows.back().insert(rows.back().begin(), in, 0);
    }
    return make_tableau(t.n, rows, normalize(inner), true);
}

void crystal_c2(Run& R, const json& j) {
    int n = j["n"];
    CrystalGraph g = generate_crystal(parse_tableau(j["seed"], n));
    R.eq("vertex count", std::to_string(j["vertices"].size()), std::to_string(g.size()));
    std::vector<std::string> want, got;
    for (const auto& v : j["vertices"]) want.push_back(v);
    for (const auto& v : g.vertices) got.push_back(render(v));
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    R.truth("vertex set", want == got);
    std::vector<std::string> wa, ga;
    for (const auto& a : j["arrows"])
        wa.push_back(a[0].get<std::string>() + " -" + std::to_string(a[1].get<int>()) + "-> " + a[2].get<std::string>());
    for (const auto& a : g.arrows)
        ga.push_back(render(g.vertices[a.src]) + " -" + std::to_string(a.color) + "-> " + render(g.vertices[a.dst]));
    std::sort(wa.begin(), wa.end());
    std::sort(ga.begin(), ga.end());
    R.eq("arrow count", std::to_string(wa.size()), std::to_string(ga.size()));
    for (const auto& a : wa)
        R.truth("arrow " + a, std::binary_search(ga.begin(), ga.end(), a), std::binary_search(ga.begin(), ga.end(), a) ? "present" : "missing");
    for (const auto& a : ga)
        if (!std::binary_search(wa.begin(), wa.end(), a)) R.truth("extra arrow " + a, false, "unexpected");
}

void columns_c2(Run& R, const json& j) {
    int n = j["n"];
    for (const auto& c : j["admissible"]) {
        Column col = parse_word(c);
        R.truth(render_column(col) + " admissible", is_admissible(col, n) && is_admissible_by_witness(col, n));
    }
    for (const auto& c : j["not_admissible"]) {
        Column col = parse_word(c);
        R.truth(render_column(col) + " not admissible", !is_admissible(col, n) && !is_admissible_by_witness(col, n));
    }
    for (const auto& s : j["splits"]) {
        Column col = parse_word(s["column"]);
        Split sp = split_column(col, n);
        R.eq("lC of " + render_column(col), render_column(parse_word(s["l"])), render_column(sp.l));
        R.eq("rC of " + render_column(col), render_column(parse_word(s["r"])), render_column(sp.r));
    }
    for (const auto& s : j["phi"]) {
        Column col = parse_word(s["column"]);
        R.eq("Phi" + render_column(col), render_column(parse_word(s["image"])), render_column(phi(col, n)));
        R.eq("Phi^-1 Phi" + render_column(col), render_column(col), render_column(phi_inv(phi(col, n), n)));
    }
    for (const auto& s : j["not_kn"]) {
        Tableau t = parse_tableau(s["tableau"], n);
        std::string why;
        bool kn = is_kn(t, &why);
        R.truth(render(t) + " columns admissible", is_admissible(t.column(0), n) && is_admissible(t.column(1), n));
        R.truth(render(t) + " not KN", !kn, kn ? "KN" : why);
        R.truth("reason names the split", why.find("split not semi-standard") != std::string::npos, why);
        R.eq("split of " + render(t), s["split"], render(split_tableau(t)));
    }
}

void full_reversal_c3(Run& R, const json& j) {
    int n = j["n"];
    Tableau t = parse_tableau(j["input"], n);
    Trace tr;
    Tableau x = reversal_C(t, &tr);
    R.chain("SJDT", j["sjdt_chain"], tr, {"I.1", "I.3"});
    const TraceStep* v = stage(tr, "V");
    R.eq("rect(T) in the trace", j["rect"], v ? letters_part(v->text) : "");
    R.eq("rect(T)", j["rect"], render(rectify(t)));
    R.eq("V", j["V"], v ? mask_letters(v->text) : "");
    R.chain("evac SJDT", j["evac_chain"], tr, {"II"});
    R.eq("evac(rect(T))", j["evac"], render(evacuation_C(rectify(t))));
    R.chain("RSJDT", j["rsjdt_chain"], tr, {"III"});
    R.eq("xi(T)", j["result"], render(x));
    R.eq("crystal oracle", j["result"], render(xi_oracle(t, 1, n)));
    if (j.contains("printed")) {
        // a slide never changes the letters, only their cells
        auto letters = [](const std::string& s) {
            std::string out;
            std::vector<std::string> v;
            std::stringstream ss(s);
            std::string tok;
            while (std::getline(ss, tok, '/')) {
                std::stringstream cs(tok);
                while (std::getline(cs, tok, ','))
                    if (tok != "*") v.push_back(tok);
            }
            std::sort(v.begin(), v.end());
            for (auto& x : v) out += x + " ";
            return out;
        };
        std::string before = j["evac_chain"][3], printed = j["printed"]["evac_chain_5"];
        R.truth("printed evac step 5 is not a slide of step 4", letters(before) != letters(printed),
                letters(before) + "vs " + letters(printed));
    }
}

void partial_reversal_c4(Run& R, const json& j) {
    int n = j["n"], jj = j["j"];
    Tableau t = parse_tableau(j["input"], n);
    R.eq("wt(P)", vec_str(j["input_weight"]), vec_str(weight(t)));
    Trace tr;
    Tableau x = colorful_partial_reversal(t, jj, &tr);
    R.chain("SJDT_2", j["sjdt_chain"], tr, {"I.1", "I.2", "I.3"});
    const TraceStep* v = stage(tr, "V");
    R.eq("rect_2 in the trace", j["rect"], v ? letters_part(v->text) : "");
    Tableau rect = parse_tableau(j["rect"], n);
    R.eq("evac rect_2", j["evac"], render(shift_up(evacuation_C(shift_down(rect, jj)), jj)));
    R.chain("RSJDT_2", j["rsjdt_chain"], tr, {"III"});
    R.eq("xi_[2,4](P)", j["result"], render(x));
    R.eq("crystal oracle", j["result"], render(xi_oracle(t, jj, n)));
    R.eq("partial_xi_C", j["result"], render(partial_xi_C(t, jj, n)));
    int p = j["window"][0], q = j["window"][1];
    R.eq("wt_[2,4]", vec_str(j["window_weight"]), vec_str(window(weight(x), p, q)));
}

void virtualization_n6(Run& R, const json& j) {
    int n = j["n"], p = j["p"], q = j["q"];
    Tableau t = parse_tableau(j["input"], n);
    R.eq("wt(T)", vec_str(j["input_weight"]), vec_str(weight(t)));
    R.eq("lambda^A", vec_str(j["lambda_A"]), vec_str(lambda_A(t.outer(), n)));
    Tableau ql = build_Q_lambda(t.outer(), n);
    R.eq("Q_lambda", j["Q_lambda"], render(ql));
    R.eq("|Q_lambda|", "48", std::to_string(ql.cell_count()));
    for (const auto& c : j["psi"]) {
        int k = c["column"];
        VirtualSplit s = psi(t.column(k - 1), n);
        std::string id = "psi(column " + std::to_string(k) + ")";
        R.eq(id + " left", render_column(parse_word(c["left"])), render_column(s.left));
        R.eq(id + " right", render_column(parse_word(c["right"])), render_column(s.right));
    }
    Embedded e = embed_E(t);
    R.eq("E(T)", j["E"], render(a_as_c(e.p, n)));
    R.eq("Q(w_T) = Q_lambda", render(ql), render(e.q));
    R.eq("wt(E(T))", vec_str(j["E_weight"]), vec_str(weight(e.p)));
    Tableau vx = virtual_partial_xi(e.p, p, q, n);
    R.eq("virtual xi(E(T))", j["virtual_xi"], render(a_as_c(vx, n)));
    Tableau plus = cells_where(e.p, true, n), minus = cells_where(e.p, false, n);
    R.eq("evac of the unbarred part", j["evac_plus"], render(a_as_c(evac_A_straight(plus, 1, n), n)));
    R.eq("rev of the barred part", j["rev_minus"], render(a_as_c(reversal_A(minus, n + 1, 2 * n), n)));
    R.eq("virtual xi = (evac, rev)", render(a_as_c(cells_where(vx, true, n), n)) + " | " +
                                         render(a_as_c(cells_where(vx, false, n), n)),
         render(a_as_c(evac_A_straight(plus, 1, n), n)) + " | " +
             render(a_as_c(reversal_A(minus, n + 1, 2 * n), n)));
    Tableau x = invert_E(vx, t.outer(), n);
    for (const auto& c : j["psi_result"]) {
        int k = c["column"];
        VirtualSplit s = psi(x.column(k - 1), n);
        std::string id = "psi(column " + std::to_string(k) + "')";
        R.eq(id + " left", render_column(parse_word(c["left"])), render_column(s.left));
        R.eq(id + " right", render_column(parse_word(c["right"])), render_column(s.right));
    }
    // reverse insertion by Q_lambda chunks into exactly these virtual splits
    Word w = reverse_column_insert_A(vx, ql), expect;
    for (int k = x.ncols() - 1; k >= 0; --k) {
        auto part = psi_word(x.column(k), n);
        expect.insert(expect.end(), part.begin(), part.end());
    }
    R.eq("reverse insertion word", render_word(expect), render_word(w));
    R.eq("xi_[1,5](T)", j["result"], render(x));
    R.eq("crystal oracle", j["result"], render(xi_oracle(t, p, q)));
    R.eq("partial_xi_C", j["result"], render(partial_xi_C(t, p, q)));
    Weight rw = window(weight(x), 1, n), wt = window(weight(t), 1, n);
    std::reverse(wt.begin(), wt.end());
    R.eq("wt_[1,5](xi(T))", vec_str(j["result_weight"]), vec_str(rw));
    R.eq("reverse(wt(T))", vec_str(j["result_weight"]), vec_str(wt));
    if (j.contains("printed")) {
        const json& pr = j["printed"];
        Tableau pe = parse_tableau(pr["E"], n);
        std::vector<int> counts(2 * n, 0);
        for (int r = 0; r < pe.nrows(); ++r)
            for (int k = 0; k < (int)pe.rows[r].size(); ++k) counts[to_A_letter(pe.at(r, k), n) - 1]++;
        R.truth("printed E(T) disagrees with the stated weight", vec_str(counts) != vec_str(j["E_weight"]),
                vec_str(counts));
        Tableau pm = parse_tableau(pr["rev_minus"], n);
        std::vector<int> got(n, 0), want(n, 0);
        for (int r = 0; r < pm.nrows(); ++r)
            for (int k = pm.inner_at(r); k < (int)pm.rows[r].size(); ++k) got[n + pm.at(r, k)]++;
        for (int k = 0; k < n; ++k) want[k] = j["E_weight"][2 * n - 1 - k];
        R.truth("printed rev has the wrong letter counts", got != want, vec_str(got) + " vs " + vec_str(want));
        for (const auto& c : pr["psi_result"]) {
            bool rejected = false;
            try {
                psi_inv({parse_word(c["left"]), parse_word(c["right"])}, n);
            } catch (const Error&) {
                rejected = true;
            }
            R.truth("printed psi(column " + std::to_string(c["column"].get<int>()) + "') is not a virtual split",
                    rejected);
        }
    }
}

void bk_c2(Run& R, const json& j) {
    int n = j["n"];
    Tableau t = parse_tableau(j["input"], n);
    R.eq("wt(T)", vec_str(j["input_weight"]), vec_str(weight(t)));
    std::vector<Tableau> out(2 * n);
    for (const auto& b : j["bk"]) {
        int i = b["i"];
        out[i] = symplectic_bk(t, i);
        std::string id = "t_" + std::to_string(i) + "(T)";
        R.eq(id, b["output"], render(out[i]));
        R.eq("wt " + id, vec_str(b["weight"]), vec_str(weight(out[i])));
        R.eq(id + " = E^-1 ... E round trip", render(out[i]), render(invert_E(embed_E(out[i]).p, t.outer(), n)));
    }
    Tableau e = embed_E(t).p;
    auto c = [&](const Tableau& a) { return render(a_as_c(a, n)); };
    R.eq("E(T)", j["E"], c(e));
    Tableau t1e = bender_knuth_A(e, 1);
    R.eq("t_1^A E(T)", j["t1A_E"], c(t1e));
    Tableau e1 = embed_E(out[1]).p;
    R.eq("E(t_1 T)", j["E_t1"], c(e1));
    R.eq("E(t_1 T) = xi_3^A t_1^A E(T)", c(e1), c(reflection_xi(t1e, 3)));
    R.eq("E(t_1 T) = t_1^A xi_3^A E(T)", c(e1), c(bender_knuth_A(reflection_xi(e, 3), 1)));
    Tableau e2 = embed_E(out[2]).p;
    R.eq("E(t_2 T)", j["E_t2"], c(e2));
    R.eq("E(t_2 T) = xi_2^A E(T)", c(e2), c(reflection_xi(e, 2)));
    Tableau e3 = embed_E(out[3]).p;
    R.eq("E(t_3 T) = xi_2^A evac^A E(T)", c(e3), c(reflection_xi(evacuation_A(e, 2 * n), 2)));
    R.eq("E(t_3 T) = evac^A xi_2^A E(T)", c(e3), c(evacuation_A(reflection_xi(e, 2), 2 * n)));
    // t_1 (t_2 t_1)(t_3 t_2 t_1), rightmost first
    Tableau w = e;
    for (int i : {1, 2, 3, 1, 2, 1}) w = bender_knuth_A(w, i);
    R.eq("q_[1,3]^A = t_1(t_2t_1)(t_3t_2t_1)", c(evacuation_A(e, 2 * n)), c(w));
    R.eq("E(t_3 T) = xi_2^A q_[1,3]^A E(T)", c(e3), c(reflection_xi(w, 2)));
    R.eq("t_3 = xi_2 xi_[1,2]", render(out[3]), render(reflection_xi(partial_xi_C(t, 1, 2), 2)));
    R.eq("t_3 = xi_[1,2] xi_2", render(out[3]), render(partial_xi_C(reflection_xi(t, 2), 1, 2)));
}

void counterexample_c2(Run& R, const json& j) {
    int n = j["n"];
    Tableau t = parse_tableau(j["input"], n);
    std::vector<int> word = j["word"];
    Tableau x = t;
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = symplectic_bk(x, *it);
    R.eq("t_2 t_1 t_2 t_1 (T)", j["word_result"], render(x));
    Tableau xi = partial_xi_C(t, 1, n);
    R.eq("xi(T)", j["xi"], render(xi));
    R.eq("xi oracle", j["xi"], render(xi_oracle(t, 1, n)));
    R.truth("t_2 t_1 t_2 t_1 (T) != xi(T)", x != xi);
}

}  // namespace

FixtureReport run_fixture(const std::string& name, const std::string& dir) {
    auto names = fixture_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) throw Error("unknown fixture '" + name + "'");
    json j = load(dir, name);
    Run R;
    R.rep.name = name;
    R.guarded(name, [&] {
        if (name == "crystal-c2-21") crystal_c2(R, j);
        else if (name == "columns-c2") columns_c2(R, j);
        else if (name == "full-reversal-c3") full_reversal_c3(R, j);
        else if (name == "partial-reversal-c4") partial_reversal_c4(R, j);
        else if (name == "virtualization-n6") virtualization_n6(R, j);
        else if (name == "bk-c2") bk_c2(R, j);
        else if (name == "counterexample-c2") counterexample_c2(R, j);
    });
    return R.rep;
}

}  // namespace kn
