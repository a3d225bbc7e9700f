#include "kn/involutions.hpp"

#include <algorithm>
#include <map>

#include "kn/crystal.hpp"
#include "kn/virtualization.hpp"

namespace kn {

std::string color_name(const ColorLetter& c) {
    std::string i = std::to_string(c.index);
    switch (c.color) {
        case Color::Green: return "g" + i;
        case Color::Purple: return "p" + i;
        case Color::PurplePrimed: return "p" + i + "'";
        case Color::Red: return "r" + i;
        case Color::RedPrimed: return "r" + i + "'";
    }
    return "?";
}

namespace {
Letter unshift_letter(Letter x, int s) { return x > 0 ? x + s : x - s; }

std::string cell_text(const Cell& x, const std::vector<ColorLetter>& labels, int punct_label, int shift) {
    switch (x.m) {
        case Mark::Letter: return letter_str(unshift_letter(x.v, shift));
        case Mark::Inner:
        case Mark::Outer: return x.v > 0 && x.v < (int)labels.size() ? color_name(labels[x.v]) : "*";
        case Mark::Punct: return punct_label > 0 && punct_label < (int)labels.size() ? color_name(labels[punct_label]) : "*";
        case Mark::None: return "_";
    }
    return "?";
}

std::string render_state_shift(const Board& b, const std::vector<ColorLetter>& labels, int punct_label, int shift) {
    std::string s;
    bool first_row = true;
    for (int r = 0; r < b.R(); ++r) {
        int w = (int)b.g[r].size();
        while (w > 0 && b.g[r][w - 1].m == Mark::None) --w;
        if (w == 0) continue;
        if (!first_row) s += "/";
        first_row = false;
        for (int c = 0; c < w; ++c) {
            if (c) s += ",";
            s += cell_text(b.g[r][c], labels, punct_label, shift);
        }
    }
    return s;
}

std::string render_framed_shift(const Board& b, int R, int W, int shift) {
    std::string s;
    for (int r = 0; r < R; ++r) {
        if (r) s += "/";
        for (int c = 0; c < W; ++c) {
            if (c) s += ",";
            Cell x = b.get(r, c);
            s += x.m == Mark::Letter ? letter_str(unshift_letter(x.v, shift)) : "*";
        }
    }
    return s;
}

void note(Trace* tr, const char* stage, std::string text) {
    if (tr) tr->push_back({stage, std::move(text)});
}

// lowest row, then leftmost, Inner cell with no Inner cell to its right or below
std::optional<std::pair<int, int>> inner_corner(const Board& b) {
    for (int r = b.R() - 1; r >= 0; --r)
        for (int c = 0; c < (int)b.g[r].size(); ++c)
            if (b.g[r][c].m == Mark::Inner && b.get(r, c + 1).m != Mark::Inner && b.get(r + 1, c).m != Mark::Inner)
                return std::make_pair(r, c);
    return std::nullopt;
}

Tableau evac_impl(const Tableau& t, Trace* tr, int shift) {
    if (!t.straight() || t.puncture) throw Error("evacuation needs a straight tableau");
    if (t.typeA) throw Error("symplectic evacuation of a type-A tableau");
    if (t.nrows() == 0) return t;
    int R = t.nrows(), W = t.ncols();
    Board b = rotate(to_board(t), R, W);
    for (auto& row : b.g)
        for (auto& x : row)
            if (x.m == Mark::None) x = {Mark::Inner, 0};
    note(tr, "II", render_framed_shift(b, R, W, shift));
    StepObserver obs = [&](const Board& x, int, int) { note(tr, "II", render_framed_shift(x, R, W, shift)); };
    while (auto k = inner_corner(b)) {
        SlideEvent ev = board_slide(b, k->first, k->second, true, tr ? &obs : nullptr);
        if (ev.con) throw Error("internal: evacuation lost a symmetric pair");
    }
    Tableau o = to_tableau(b);
    if (o.outer() != t.outer() || !o.straight()) throw Error("internal: evacuation changed the shape");
    return o;
}

struct Engine {
    SwitchState st;
    Trace* tr = nullptr;
    int shift = 0;

    int add(Color c, int index) {
        if (st.labels.empty()) st.labels.push_back({});  // id 0 unused
        st.labels.push_back({c, index});
        return (int)st.labels.size() - 1;
    }
    void snap(const char* stage, int punct_label = 0) {
        if (tr) tr->push_back({stage, render_state_shift(st.board, st.labels, punct_label, shift)});
    }
    int rank_pos(int id) const {
        auto it = std::find(st.rank.begin(), st.rank.end(), id);
        if (it == st.rank.end()) throw Error("internal: unranked label");
        return int(it - st.rank.begin());
    }
};
}  // namespace

std::string render_state(const Board& b, const std::vector<ColorLetter>& labels, int punct_label) {
    return render_state_shift(b, labels, punct_label, 0);
}

std::string render_framed(const Board& b, int R, int W) { return render_framed_shift(b, R, W, 0); }

Tableau evacuation_C(const Tableau& t, Trace* trace) { return evac_impl(t, trace, 0); }

namespace {
Tableau colorful_impl(const Tableau& band, Trace* tr, int shift) {
    if (band.typeA) throw Error("colorful switching needs a type-C tableau");
    if (band.puncture) throw Error("colorful switching of a punctured tableau");
    Engine E;
    E.tr = tr;
    E.shift = shift;
    Board& b = E.st.board;
    b = to_board(band);
    Partition shape_in = band.inner, shape_out = band.outer();

    // greens on the inner shape, row reading order
    std::vector<int> greens;
    for (int r = 0; r < b.R(); ++r)
        for (int c = 0; c < (int)b.g[r].size(); ++c)
            if (b.g[r][c].m == Mark::Inner) {
                int id = E.add(Color::Green, (int)greens.size() + 1);
                b.g[r][c].v = id;
                greens.push_back(id);
            }
    if (E.st.labels.empty()) E.st.labels.push_back({});
    E.snap("I.1");

    // purple pre-contractions, columns left to right
    std::vector<int> purples, primed;
    for (int c = 0; c < b.W(); ++c) {
        while (true) {
            Column col = b.letters(c);
            if (col.empty() || is_admissible(col, b.n)) break;
            Contraction k = board_contract(b, c);
            int idx = (int)purples.size() + 1;
            int p = E.add(Color::Purple, idx), pp = E.add(Color::PurplePrimed, idx);
            b.ref(k.top, c) = {Mark::Inner, p};
            b.ref(k.bottom, c) = {Mark::Outer, pp};
            purples.push_back(p);
            primed.push_back(pp);
            SwitchEvent ev;
            ev.kind = SwitchEvent::Contract;
            ev.con = k;
            E.st.journal.push_back(ev);
            E.snap("I.2");
        }
    }
    E.st.rank = greens;
    E.st.rank.insert(E.st.rank.end(), purples.begin(), purples.end());
    E.st.rank.insert(E.st.rank.end(), primed.rbegin(), primed.rend());

    // reduced rectification, largest inner label first
    int reds = 0;
    while (true) {
        int best = -1, br = -1, bc = -1;
        for (int r = 0; r < b.R(); ++r)
            for (int c = 0; c < (int)b.g[r].size(); ++c)
                if (b.g[r][c].m == Mark::Inner) {
                    int pos = E.rank_pos(b.g[r][c].v);
                    if (pos > best) best = pos, br = r, bc = c;
                }
        if (best < 0) break;
        int L = b.g[br][bc].v;
        if (b.get(br, bc + 1).m == Mark::Inner || b.get(br + 1, bc).m == Mark::Inner)
            throw Error("internal: largest inner label " + color_name(E.st.labels[L]) + " is not an inner corner");
        int r = br, c = bc;
        b.ref(r, c) = {Mark::Punct, 0};
        E.snap("I.3", L);
        std::optional<Contraction> con;
        StepObserver pre = [&](const Board&, int, int) { E.snap("I.3", L); };
        bool relabelled = false;
        while (slide_step(b, r, c, con, true, tr ? &pre : nullptr)) {
            if (con && !relabelled) {
                if (con->col != bc || con->top != br)
                    throw Error("contraction away from the starting cell of the slide");
                ++reds;
                int rk = E.add(Color::Red, reds), rkp = E.add(Color::RedPrimed, reds);
                b.ref(con->top, con->col) = {Mark::Inner, rk};
                b.ref(con->bottom, con->col) = {Mark::Outer, rkp};
                // above every remaining inner label, below the one in flight
                auto it = std::find(E.st.rank.begin(), E.st.rank.end(), L);
                it = E.st.rank.insert(it, rkp);
                E.st.rank.insert(it, rk);
                relabelled = true;
            }
            E.snap("I.3", L);
        }
        b.ref(r, c) = {Mark::Outer, L};
        SwitchEvent ev;
        ev.kind = SwitchEvent::Slide;
        ev.label = L;
        ev.slide = {br, bc, r, c, con};
        E.st.journal.push_back(ev);
    }
    E.snap("V");

    // Step II: evacuate the straight body in place
    Tableau body;
    body.n = b.n;
    for (int r = 0; r < b.R(); ++r) {
        std::vector<Letter> row;
        for (int c = 0; c < (int)b.g[r].size() && b.g[r][c].m == Mark::Letter; ++c) row.push_back(b.g[r][c].v);
        for (int c = (int)row.size(); c < (int)b.g[r].size(); ++c)
            if (b.g[r][c].m == Mark::Letter) throw Error("internal: rectified body is not straight");
        if (!row.empty()) body.rows.push_back(row);
    }
    E.snap("rect");
    Tableau ev = body.rows.empty() ? body : evac_impl(body, tr, shift);
    for (int r = 0; r < ev.nrows(); ++r)
        for (int c = 0; c < (int)ev.rows[r].size(); ++c) b.ref(r, c) = {Mark::Letter, ev.rows[r][c]};
    E.snap("III");

    // Step III: replay the journal backwards
    for (int k = (int)E.st.journal.size() - 1; k >= 0; --k) {
        const SwitchEvent& e = E.st.journal[k];
        if (e.kind == SwitchEvent::Contract) {
            if (b.get(e.con.top, e.con.col).m != Mark::Inner || b.get(e.con.bottom, e.con.col).m != Mark::Outer)
                throw Error("internal: purple cells missing at dilation");
            board_dilate(b, e.con.col, e.con.top, e.con.bottom);
            E.snap("III");
            continue;
        }
        const SlideEvent& s = e.slide;
        if (s.con) {
            if (b.get(s.con->top, s.con->col).m != Mark::Inner || b.get(s.con->bottom, s.con->col).m != Mark::Outer)
                throw Error("internal: red cells missing at dilation");
            board_dilate(b, s.con->col, s.con->top, s.con->bottom);
            E.snap("III");
        }
        if (b.get(s.er, s.ec) != Cell{Mark::Outer, e.label}) throw Error("internal: exit label moved");
        int L = e.label;
        StepObserver obs = [&](const Board& x, int, int) {
            if (E.tr) E.tr->push_back({"III", render_state_shift(x, E.st.labels, L, shift)});
        };
        auto end = board_reverse_slide(b, s.er, s.ec, tr ? &obs : nullptr);
        if (end != std::make_pair(s.sr, s.sc))
            throw Error("reverse slide of " + color_name(E.st.labels[L]) + " did not return to its start");
        b.ref(s.sr, s.sc) = {Mark::Inner, L};
        E.snap("III");
    }
    for (auto& row : b.g)
        for (auto& x : row)
            if (x.m == Mark::Outer) throw Error("internal: outer label left after the reverse pass");
    Tableau out = to_tableau(b);
    out.n = band.n;
    if (out.inner != shape_in || out.outer() != shape_out) throw Error("internal: reversal changed the shape");
    E.snap("IV");
    return out;
}

Tableau extract_band(const Tableau& t, int j) {
    Tableau band;
    band.n = t.n;
    Partition in;
    for (int r = 0; r < t.nrows(); ++r) {
        int c0 = t.inner_at(r);
        while (c0 < (int)t.rows[r].size() && t.rows[r][c0] > 0 && t.rows[r][c0] < j) ++c0;
        int c1 = c0;
        while (c1 < (int)t.rows[r].size() && absl(t.rows[r][c1]) >= j) ++c1;
        std::vector<Letter> row(c1, 0);
        for (int c = c0; c < c1; ++c) row[c] = t.rows[r][c];
        band.rows.push_back(row);
        in.push_back(c0);
    }
    while (!band.rows.empty() && (int)band.rows.back().size() == in.back()) {
        band.rows.pop_back();
        in.pop_back();
    }
    band.inner = normalize(in);
    return band;
}
}  // namespace

Tableau colorful_reversal(const Tableau& band, Trace* trace) { return colorful_impl(band, trace, 0); }

Tableau reversal_C(const Tableau& t, Trace* trace) {
    std::string why;
    if (!is_kn(t, &why)) throw Error("reversal needs a KN tableau: " + why);
    return colorful_impl(t, trace, 0);
}

Tableau colorful_partial_reversal(const Tableau& t, int j, Trace* trace) {
    if (t.typeA) throw Error("partial symplectic reversal of a type-A tableau");
    if (j < 1 || j > t.n) throw Error("j = " + std::to_string(j) + " outside [1," + std::to_string(t.n) + "]");
    if (j == 1) return colorful_impl(t, trace, 0);
    Tableau band = extract_band(t, j);
    if (band.cell_count() == 0) return t;
    Tableau rev = shift_up(colorful_impl(shift_down(band, j), trace, j - 1), j);
    Tableau o = t;
    for (int r = 0; r < rev.nrows(); ++r)
        for (int c = rev.inner_at(r); c < (int)rev.rows[r].size(); ++c) o.rows[r][c] = rev.rows[r][c];
    return o;
}

Tableau partial_reversal_Cjn(const Tableau& t, int j) {
    if (!t.typeA && j == t.n) return reflection_xi(t, t.n);
    return colorful_partial_reversal(t, j);
}

Tableau reflection_xi(const Tableau& t, int i) {
    auto [e, f] = eps_phi(t, i);
    Tableau o = t;
    for (int k = 0; k < f - e; ++k) o = *f_op(o, i);
    for (int k = 0; k < e - f; ++k) o = *e_op(o, i);
    return o;
}

Tableau partial_xi_C(const Tableau& t, int p, int q) {
    if (t.typeA) throw Error("partial_xi_C on a type-A tableau");
    if (p < 1 || q < p || q > t.n)
        throw Error("interval [" + std::to_string(p) + "," + std::to_string(q) + "] outside [1," + std::to_string(t.n) + "]");
    if (p == q) return reflection_xi(t, p);
    if (q == t.n) return partial_reversal_Cjn(t, p);
    return xi_C_via_virtualization(t, p, q);
}

Tableau bk_q_C(const Tableau& t, int i) { return i <= 0 ? t : partial_xi_C(t, 1, i); }

Tableau bk_q_interval_C(const Tableau& t, int j, int k) {
    return bk_q_C(bk_q_C(bk_q_C(t, k - 1), k - j), k - 1);
}

Tableau symplectic_bk(const Tableau& t, int i) {
    int n = t.n;
    if (t.typeA) throw Error("symplectic BK on a type-A tableau");
    if (i < 1 || i > 2 * n - 1) throw Error("BK index " + std::to_string(i) + " outside [1," + std::to_string(2 * n - 1) + "]");
    if (i < n) return bk_q_C(bk_q_C(bk_q_C(bk_q_C(t, i - 2), i - 1), i), i - 1);
    int k = i - n + 1;
    Tableau o = t;
    if (n - k + 2 <= n) o = partial_xi_C(o, n - k + 2, n);
    return partial_xi_C(o, n - k + 1, n);
}

Tableau xi_oracle(const Tableau& t, int p, int q) {
    int rk = rank_of(t);
    if (p < 1 || q < p || q > rk) throw Error("oracle interval outside the diagram");
    bool mirror = t.typeA || q < t.n;
    auto theta = [&](int d) { return mirror ? p + q - d : d; };
    std::vector<int> path;
    Tableau h = t;
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = p; i <= q && !moved; ++i)
            if (auto u = e_op(h, i)) {
                h = *u;
                path.push_back(i);
                moved = true;
            }
    }
    Tableau l = h;
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = p; i <= q && !moved; ++i)
            if (auto u = f_op(l, i)) {
                l = *u;
                moved = true;
            }
    }
    for (int k = (int)path.size() - 1; k >= 0; --k) {
        auto u = e_op(l, theta(path[k]));
        if (!u) throw Error("oracle: mirrored path leaves the component");
        l = *u;
    }
    return l;
}

}  // namespace kn
