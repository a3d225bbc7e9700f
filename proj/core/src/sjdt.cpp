#include "kn/sjdt.hpp"

#include <algorithm>
#include <atomic>

namespace kn {

namespace {
std::atomic<bool> g_reference{false};

Letter complement(Letter x, int n, bool typeA) { return typeA ? n + 1 - x : -x; }

bool col_admissible(const Column& c, int n, bool typeA) { return typeA || is_admissible(c, n); }

Column col_phi(const Column& c, int n, bool typeA) {
    if (typeA || !is_admissible(c, n)) return c;
    return phi(c, n);
}

Column col_phi_inv(const Column& d, int n, bool typeA) {
    if (typeA) return d;
    try {
        return phi_inv(d, n);
    } catch (const Error&) {
        if (!is_admissible(d, n)) return d;  // dilated column mid-replay
        throw;
    }
}

void place(Board& b, int c, const std::vector<int>& rows, const Column& letters) {
    if (rows.size() != letters.size()) throw Error("internal: column placement size mismatch");
    for (size_t i = 0; i < rows.size(); ++i) b.ref(rows[i], c) = {Mark::Letter, letters[i]};
}

int index_of(const std::vector<int>& v, int x) {
    auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end()) throw Error("internal: row not in column");
    return int(it - v.begin());
}

void check_board(const Board& b) {
    for (int c = 0; c < b.W(); ++c) {
        Column col = b.letters(c);
        for (size_t i = 1; i < col.size(); ++i)
            if (!lt(col[i - 1], col[i])) throw Error("reference check: column " + std::to_string(c + 1) + " not strict");
    }
    for (int r = 0; r < b.R(); ++r)
        for (int c = 0; c + 1 < (int)b.g[r].size(); ++c) {
            if (b.get(r, c).m != Mark::Letter || b.get(r, c + 1).m != Mark::Letter) continue;
            Column c1 = b.letters(c), c2 = b.letters(c + 1);
            if (!col_admissible(c1, b.n, b.typeA) || !col_admissible(c2, b.n, b.typeA)) continue;
            auto r1 = b.body_rows(c), r2 = b.body_rows(c + 1);
            r1.erase(std::remove_if(r1.begin(), r1.end(), [&](int x) { return b.get(x, c).m != Mark::Letter; }), r1.end());
            r2.erase(std::remove_if(r2.begin(), r2.end(), [&](int x) { return b.get(x, c + 1).m != Mark::Letter; }),
                     r2.end());
            Split s1 = board_split(c1, b.n, b.typeA), s2 = board_split(c2, b.n, b.typeA);
            if (lt(s2.l[index_of(r2, r)], s1.r[index_of(r1, r)]))
                throw Error("reference check: split row decreases at row " + std::to_string(r + 1));
        }
}
}  // namespace

void set_reference_mode(bool on) { g_reference = on; }
bool reference_mode() { return g_reference; }

int Board::W() const {
    int w = 0;
    for (auto& row : g) w = std::max(w, (int)row.size());
    return w;
}

Cell& Board::ref(int r, int c) {
    if (r >= R()) g.resize(r + 1);
    if (c >= (int)g[r].size()) g[r].resize(c + 1);
    return g[r][c];
}

std::vector<int> Board::body_rows(int c) const {
    std::vector<int> rs;
    for (int r = 0; r < R(); ++r)
        if (body(r, c)) rs.push_back(r);
    for (size_t i = 1; i < rs.size(); ++i)
        if (rs[i] != rs[i - 1] + 1) throw Error("internal: column " + std::to_string(c + 1) + " body not contiguous");
    return rs;
}

Column Board::letters(int c) const {
    Column col;
    for (int r = 0; r < R(); ++r)
        if (get(r, c).m == Mark::Letter) col.push_back(get(r, c).v);
    return col;
}

Board to_board(const Tableau& t) {
    Board b;
    b.n = t.n;
    b.typeA = t.typeA;
    b.g.resize(t.nrows());
    for (int r = 0; r < t.nrows(); ++r) {
        b.g[r].resize(t.rows[r].size());
        for (int c = 0; c < (int)t.rows[r].size(); ++c) {
            if (c < t.inner_at(r))
                b.g[r][c] = {Mark::Inner, 0};
            else if (t.is_punct(r, c))
                b.g[r][c] = {Mark::Punct, 0};
            else
                b.g[r][c] = {Mark::Letter, t.rows[r][c]};
        }
    }
    return b;
}

Tableau to_tableau(const Board& b) {
    Tableau t;
    t.n = b.n;
    t.typeA = b.typeA;
    Partition inner;
    for (int r = 0; r < b.R(); ++r) {
        std::vector<Letter> row;
        int c = 0, w = (int)b.g[r].size();
        while (c < w && b.g[r][c].m == Mark::Inner) {
            row.push_back(0);
            ++c;
        }
        int in = c;
        while (c < w && (b.g[r][c].m == Mark::Letter || b.g[r][c].m == Mark::Punct)) {
            if (b.g[r][c].m == Mark::Punct) {
                if (t.puncture) throw Error("board has two punctures");
                t.puncture = std::make_pair(r, c);
                row.push_back(0);
            } else {
                row.push_back(b.g[r][c].v);
            }
            ++c;
        }
        for (int k = c; k < w; ++k)
            if (b.g[r][k].m != Mark::None && b.g[r][k].m != Mark::Outer)
                throw Error("board row " + std::to_string(r + 1) + " is not a skew row");
        t.rows.push_back(row);
        inner.push_back(in);
    }
    while (!t.rows.empty() && t.rows.back().empty()) {
        t.rows.pop_back();
        inner.pop_back();
    }
    for (auto& row : t.rows)
        if (row.empty()) throw Error("board has an empty row above a non-empty one");
    t.inner = normalize(inner);
    std::string why;
    if (!is_semistandard(t, &why)) throw Error("board is not a skew tableau: " + why);
    return t;
}

Split board_split(const Column& c, int n, bool typeA) {
    if (typeA || !is_admissible(c, n)) return {c, c};
    return split_column(c, n);
}

bool slide_step(Board& b, int& r, int& c, std::optional<Contraction>& con, bool allow_contract,
                const StepObserver* pre_contract) {
    bool below = b.body(r + 1, c);
    bool right = b.body(r, c + 1);
    if (!below && !right) return false;
    auto rows1 = b.body_rows(c);
    std::vector<int> lrows1;
    for (int x : rows1)
        if (x != r) lrows1.push_back(x);
    Column l1 = b.letters(c);
    Letter alpha = 0, beta = 0;
    if (below) alpha = board_split(l1, b.n, b.typeA).r[index_of(lrows1, r + 1)];
    std::vector<int> rows2;
    Column l2;
    if (right) {
        rows2 = b.body_rows(c + 1);
        l2 = b.letters(c + 1);
        beta = board_split(l2, b.n, b.typeA).l[index_of(rows2, r)];
    }
    if (!right || (below && le(alpha, beta))) {
        std::swap(b.ref(r, c), b.ref(r + 1, c));
        ++r;
        if (g_reference) check_board(b);
        return true;
    }
    std::vector<int> lrows2;
    for (int x : rows2)
        if (x != r) lrows2.push_back(x);
    Column c1, c2;
    if (beta < 0) {  // B.1
        Column d = col_phi(l1, b.n, b.typeA);
        d.push_back(beta);
        sort_column(d);
        c1 = col_phi_inv(d, b.n, b.typeA);
        if (l2[index_of(rows2, r)] != beta) throw Error("internal: B.1 letter mismatch");
        c2 = l2;
        c2.erase(c2.begin() + index_of(rows2, r));
    } else {  // B.2
        c1 = l1;
        c1.push_back(beta);
        sort_column(c1);
        Column d = col_phi(l2, b.n, b.typeA);
        auto it = std::find(d.begin(), d.end(), beta);
        if (it == d.end()) throw Error("internal: B.2 letter missing from coadmissible column");
        d.erase(it);
        c2 = col_phi_inv(d, b.n, b.typeA);
    }
    place(b, c, rows1, c1);
    b.ref(r, c + 1) = {Mark::Punct, 0};
    place(b, c + 1, lrows2, c2);
    if (!col_admissible(c1, b.n, b.typeA)) {
        if (!allow_contract) throw Error("unexpected contraction in column " + std::to_string(c + 1));
        if (con) throw Error("second contraction within one slide");
        if (pre_contract) (*pre_contract)(b, r, c + 1);
        con = board_contract(b, c);
    }
    ++c;
    if (g_reference) check_board(b);
    return true;
}

Contraction board_contract(Board& b, int col) {
    auto rows = b.body_rows(col);
    Column letters = b.letters(col);
    if (rows.size() != letters.size()) throw Error("internal: contraction of a punctured column");
    Column k = contract_once(letters, b.n);
    if (!is_admissible(k, b.n)) throw Error("contracted column " + render_column(k) + " still not admissible");
    Contraction con{col, rows.front(), rows.back()};
    b.ref(con.top, col) = {Mark::Inner, 0};
    b.ref(con.bottom, col) = {Mark::None, 0};
    std::vector<int> mid(rows.begin() + 1, rows.end() - 1);
    place(b, col, mid, k);
    return con;
}

void board_dilate(Board& b, int col, int top, int bottom) {
    auto rows = b.body_rows(col);
    Column d = b.letters(col);
    bool ok = (int)rows.size() == bottom - top - 1 && (rows.empty() || (rows.front() == top + 1 && rows.back() == bottom - 1));
    if (!ok || rows.size() != d.size()) throw Error("dilation: column " + std::to_string(col + 1) + " has the wrong rows");
    auto cands = dilations(d, b.n);
    if (cands.size() != 1)
        throw Error("dilation of " + render_column(d) + " is not unique (" + std::to_string(cands.size()) + " candidates)");
    std::vector<int> all;
    for (int x = top; x <= bottom; ++x) all.push_back(x);
    place(b, col, all, cands[0]);
}

Board rotate(const Board& b, int R, int W) {
    Board o;
    o.n = b.n;
    o.typeA = b.typeA;
    o.g.assign(R, std::vector<Cell>(W));
    for (int r = 0; r < b.R(); ++r)
        for (int c = 0; c < (int)b.g[r].size(); ++c) {
            Cell x = b.g[r][c];
            if (x.m == Mark::Letter) x.v = complement(x.v, b.n, b.typeA);
            o.g[R - 1 - r][W - 1 - c] = x;
        }
    return o;
}

namespace {
void trim(Board& b) {
    for (auto& row : b.g)
        while (!row.empty() && row.back().m == Mark::None) row.pop_back();
    while (!b.g.empty() && b.g.back().empty()) b.g.pop_back();
}
}  // namespace

SlideEvent board_slide(Board& b, int r, int c, bool allow_contract, const StepObserver* obs) {
    SlideEvent ev;
    ev.sr = r;
    ev.sc = c;
    b.ref(r, c) = {Mark::Punct, 0};
    if (obs) (*obs)(b, r, c);
    while (slide_step(b, r, c, ev.con, allow_contract, obs)) {
        if (obs) (*obs)(b, r, c);
    }
    if (ev.con && ev.con->col != ev.sc)
        throw Error("contraction in column " + std::to_string(ev.con->col + 1) + " but the slide started in column " +
                    std::to_string(ev.sc + 1));
    b.ref(r, c) = {Mark::None, 0};
    ev.er = r;
    ev.ec = c;
    trim(b);
    return ev;
}

std::pair<int, int> board_reverse_slide(Board& b, int r, int c, const StepObserver* obs) {
    int R = std::max(b.R(), r + 1), W = std::max(b.W(), c + 1);
    Board rb = rotate(b, R, W);
    StepObserver back;
    if (obs) back = [&](const Board& x, int pr, int pc) {
        Board u = rotate(x, R, W);
        trim(u);
        (*obs)(u, R - 1 - pr, W - 1 - pc);
    };
    SlideEvent ev = board_slide(rb, R - 1 - r, W - 1 - c, false, obs ? &back : nullptr);
    b = rotate(rb, R, W);
    trim(b);
    return {R - 1 - ev.er, W - 1 - ev.ec};
}

// --- tableau level -------------------------------------------------------

Tableau elementary_slide(const Tableau& t) {
    if (!t.puncture) throw Error("elementary slide needs a punctured tableau");
    Board b = to_board(t);
    int r = t.puncture->first, c = t.puncture->second;
    std::optional<Contraction> con;
    if (!slide_step(b, r, c, con, true)) throw Error("puncture is at an outer corner: the slide is complete");
    return to_tableau(b);
}

Tableau complete_slide(const Tableau& t, int r, int c) {
    if (c >= t.inner_at(r) || r >= t.nrows() || (c + 1 < t.inner_at(r)) || (t.inner_at(r + 1) > c))
        throw Error("(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") is not an inner corner");
    Board b = to_board(t);
    board_slide(b, r, c, true);
    return to_tableau(b);
}

namespace {
// inner corner of the Inner markers: lowest row, then leftmost
std::optional<std::pair<int, int>> pick_inner(const Board& b) {
    for (int r = b.R() - 1; r >= 0; --r)
        for (int c = 0; c < (int)b.g[r].size(); ++c)
            if (b.g[r][c].m == Mark::Inner && b.get(r, c + 1).m != Mark::Inner && b.get(r + 1, c).m != Mark::Inner)
                return std::make_pair(r, c);
    return std::nullopt;
}
}  // namespace

Rectified rectify_recorded(const Tableau& t) {
    if (t.puncture) throw Error("rectify needs an unpunctured tableau");
    Rectified out;
    Board b = to_board(t);
    while (auto corner = pick_inner(b)) {
        SlideEvent ev = board_slide(b, corner->first, corner->second, true);
        b.ref(ev.er, ev.ec) = {Mark::Outer, (int)out.journal.size() + 1};
        out.journal.push_back(ev);
    }
    out.board = b;
    out.rect = to_tableau(b);
    return out;
}

Tableau rectify(const Tableau& t) { return rectify_recorded(t).rect; }

Tableau reverse_slide(const Tableau& t, int r, int c) {
    if (t.puncture) throw Error("reverse slide of a punctured tableau");
    Partition lam = t.outer();
    int len = r < (int)lam.size() ? lam[r] : 0;
    bool ok = r <= (int)lam.size() && c == len && (r == 0 || lam[r - 1] > c);
    if (!ok) throw Error("(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") is not an outer cocorner");
    Board b = to_board(t);
    int R = std::max(b.R(), r + 1), W = std::max(b.W(), c + 1);
    Board rb = rotate(b, R, W);
    SlideEvent ev = board_slide(rb, R - 1 - r, W - 1 - c, true);
    // rotated back, inner and outside trade places
    rb.ref(ev.er, ev.ec) = {Mark::Inner, 0};
    if (ev.con) {
        rb.ref(ev.con->top, ev.con->col) = {};
        rb.ref(ev.con->bottom, ev.con->col) = {Mark::Inner, 0};
    }
    b = rotate(rb, R, W);
    trim(b);
    return to_tableau(b);
}

Tableau anti_rectify(const Tableau& straight, const Rectified& rec) {
    Board b = to_board(straight);
    if (straight.outer() != rec.rect.outer()) throw Error("anti-rectify: shape differs from the recorded rectification");
    for (int k = (int)rec.journal.size() - 1; k >= 0; --k) {
        const SlideEvent& ev = rec.journal[k];
        if (ev.con) board_dilate(b, ev.con->col, ev.con->top, ev.con->bottom);
        auto end = board_reverse_slide(b, ev.er, ev.ec);
        if (end != std::make_pair(ev.sr, ev.sc)) throw Error("anti-rectify: reverse slide did not return to its start");
        b.ref(ev.sr, ev.sc) = {Mark::Inner, 0};
    }
    return to_tableau(b);
}

Tableau anti_rectify(const Rectified& rec) { return anti_rectify(rec.rect, rec); }

Tableau shift_down(const Tableau& t, int j) {
    Tableau o = t;
    o.n = t.n - (j - 1);
    for (int r = 0; r < o.nrows(); ++r)
        for (int c = 0; c < (int)o.rows[r].size(); ++c)
            if (o.is_cell(r, c)) {
                Letter x = o.rows[r][c];
                if (absl(x) < j) throw Error("letter " + letter_str(x) + " outside [+-" + std::to_string(j) + ",n]");
                o.rows[r][c] = x > 0 ? x - (j - 1) : x + (j - 1);
            }
    return o;
}

Tableau shift_up(const Tableau& t, int j) {
    Tableau o = t;
    o.n = t.n + (j - 1);
    for (int r = 0; r < o.nrows(); ++r)
        for (int c = 0; c < (int)o.rows[r].size(); ++c)
            if (o.is_cell(r, c)) {
                Letter x = o.rows[r][c];
                o.rows[r][c] = x > 0 ? x + (j - 1) : x - (j - 1);
            }
    return o;
}

namespace {
Board reduced_board(const Tableau& t, int j, bool keep_vacated) {
    Tableau s = shift_down(t, j);
    Board b = to_board(s);
    for (int c = 0; c < b.W(); ++c) {
        while (true) {
            Column col = b.letters(c);
            if (col.empty() || is_admissible(col, b.n)) break;
            if (b.body_rows(c).size() != col.size()) throw Error("reduced SJDT: punctured column is not admissible");
            Contraction k = board_contract(b, c);
            if (!keep_vacated) b.ref(k.top, c) = {Mark::None, 0};
        }
    }
    return b;
}
Tableau unshift(Board b, int j) {
    for (auto& row : b.g)
        for (auto& x : row)
            if (x.m == Mark::Inner) x = {Mark::None, 0};
    trim(b);
    return shift_up(to_tableau(b), j);
}
}  // namespace

Tableau reduced_slide_j(const Tableau& t, int j) {
    if (!t.puncture) throw Error("reduced slide needs a punctured tableau");
    Board b = reduced_board(t, j, false);
    int r = t.puncture->first, c = t.puncture->second;
    b.ref(r, c) = {Mark::None, 0};
    board_slide(b, r, c, true);
    return unshift(b, j);
}

Tableau rectify_j(const Tableau& t, int j) {
    Tableau u = t;
    if (u.puncture) {
        // a puncture is read as an inner cell
        auto [r, c] = *u.puncture;
        u.puncture.reset();
        if (c != u.inner_at(r)) throw Error("puncture is not next to the inner shape");
        if (r >= (int)u.inner.size()) u.inner.resize(r + 1, 0);
        u.inner[r] = c + 1;
    }
    Board b = reduced_board(u, j, true);
    while (auto corner = pick_inner(b)) board_slide(b, corner->first, corner->second, true);
    return unshift(b, j);
}

}  // namespace kn
