#include "kn/type_a.hpp"

#include <algorithm>

#include "kn/sjdt.hpp"

namespace kn {

namespace {
void need_typeA(const Tableau& t) {
    if (!t.typeA) throw Error("type-A operation on a type-C tableau");
}
}  // namespace

Tableau evac_A_straight(const Tableau& t, int a, int b) {
    need_typeA(t);
    if (!t.straight()) throw Error("evacuation needs a straight tableau");
    if (t.nrows() == 0) return t;
    int R = t.nrows(), W = t.ncols();
    Board bd;
    bd.n = t.n;
    bd.typeA = true;
    bd.g.assign(R, std::vector<Cell>(W, Cell{Mark::Inner, 0}));
    for (int r = 0; r < R; ++r)
        for (int c = 0; c < (int)t.rows[r].size(); ++c) {
            Letter x = t.rows[r][c];
            if (x < a || x > b) throw Error("letter " + letter_str(x) + " outside the evacuation window");
            bd.g[R - 1 - r][W - 1 - c] = {Mark::Letter, a + b - x};
        }
    return rectify(to_tableau(bd));
}

Tableau evacuation_A(const Tableau& t, int m) {
    if (!t.straight()) throw Error("evacuation needs a straight tableau");
    if (m <= 1) return t;
    return partial_xi_A(t, 1, m - 1);
}

Tableau reversal_A(const Tableau& t, int a, int b) {
    need_typeA(t);
    Rectified rec = rectify_recorded(t);
    return anti_rectify(evac_A_straight(rec.rect, a, b), rec);
}

Tableau partial_xi_A(const Tableau& t, int p, int q) {
    need_typeA(t);
    if (p < 1 || q < p || q + 1 > t.n) throw Error("interval outside the type-A diagram");
    // middle band: letters in [p, q+1]; inner part = skew inner plus smaller letters
    Tableau mid;
    mid.n = t.n;
    mid.typeA = true;
    Partition in;
    bool any = false;
    for (int r = 0; r < t.nrows(); ++r) {
        int c0 = t.inner_at(r);
        while (c0 < (int)t.rows[r].size() && t.rows[r][c0] < p) ++c0;
        int c1 = c0;
        while (c1 < (int)t.rows[r].size() && t.rows[r][c1] <= q + 1) ++c1;
        std::vector<Letter> row(c1, 0);
        for (int c = c0; c < c1; ++c) row[c] = t.rows[r][c], any = true;
        mid.rows.push_back(row);
        in.push_back(c0);
    }
    if (!any) return t;
    while (!mid.rows.empty() && mid.rows.back().size() == (size_t)in.back()) {
        mid.rows.pop_back();
        in.pop_back();
    }
    mid.inner = normalize(in);
    Tableau rev = reversal_A(mid, p, q + 1);
    if (rev.outer() != mid.outer() || rev.inner != mid.inner) throw Error("internal: reversal changed the band shape");
    Tableau o = t;
    for (int r = 0; r < rev.nrows(); ++r)
        for (int c = rev.inner_at(r); c < (int)rev.rows[r].size(); ++c) o.rows[r][c] = rev.rows[r][c];
    return o;
}

Tableau partial_xi_A(const Tableau& t, const std::vector<std::pair<int, int>>& intervals) {
    for (size_t a = 0; a < intervals.size(); ++a)
        for (size_t b = a + 1; b < intervals.size(); ++b) {
            auto [p1, q1] = intervals[a];
            auto [p2, q2] = intervals[b];
            if (!(q1 + 1 < p2 || q2 + 1 < p1)) throw Error("intervals are not disconnected");
        }
    Tableau o = t;
    for (auto [p, q] : intervals) o = partial_xi_A(o, p, q);
    return o;
}

Tableau bender_knuth_A(const Tableau& t, int i) {
    need_typeA(t);
    if (i < 1 || i >= t.n) throw Error("invalid BK index " + std::to_string(i));
    Tableau o = t;
    for (int r = 0; r < t.nrows(); ++r) {
        std::vector<int> freec;
        int k = 0, l = 0;
        for (int c = t.inner_at(r); c < (int)t.rows[r].size(); ++c) {
            Letter x = t.rows[r][c];
            if (x == i) {
                if (t.is_cell(r + 1, c) && t.at(r + 1, c) == i + 1) continue;
                freec.push_back(c);
                ++k;
            } else if (x == i + 1) {
                if (t.is_cell(r - 1, c) && t.at(r - 1, c) == i) continue;
                freec.push_back(c);
                ++l;
            }
        }
        for (int s = 0; s < (int)freec.size(); ++s) o.rows[r][freec[s]] = s < l ? i : i + 1;
    }
    return o;
}

Tableau bk_q_A(const Tableau& t, int i) {
    Tableau o = t;
    for (int top = i; top >= 1; --top)
        for (int s = 1; s <= top; ++s) o = bender_knuth_A(o, s);
    return o;
}

Tableau bk_q_interval_A(const Tableau& t, int j, int k) {
    return bk_q_A(bk_q_A(bk_q_A(t, k - 1), k - j), k - 1);
}

Tableau dual_bk_A(const Tableau& t, int k, int N) {
    return bk_q_A(bender_knuth_A(bk_q_A(t, N - 1), N - k), N - 1);
}

Tableau promotion_A(const Tableau& t, int i) {
    Tableau o = t;
    for (int s = 1; s <= i; ++s) o = bender_knuth_A(o, s);
    return o;
}

}  // namespace kn
