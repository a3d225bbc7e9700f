#include "kn/words.hpp"

#include <algorithm>
#include <sstream>

#include "kn/sjdt.hpp"

namespace kn {

Word parse_word(const std::string& text) {
    Word w;
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::stringstream ss(s);
    std::string tok;
    while (ss >> tok) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (...) {
            throw Error("bad letter '" + tok + "' in word");
        }
        if (pos != tok.size() || v == 0) throw Error("bad letter '" + tok + "' in word");
        w.push_back(v);
    }
    return w;
}

std::string render_word(const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += letter_str(w[i]);
    }
    return s;
}

std::vector<std::pair<int, int>> reading_cells(const Tableau& t) {
    if (t.puncture) throw Error("reading word of a punctured tableau");
    std::vector<std::pair<int, int>> cells;
    for (int c = t.ncols() - 1; c >= 0; --c)
        for (int r = 0; r < t.nrows(); ++r)
            if (t.is_cell(r, c)) cells.push_back({r, c});
    return cells;
}

Word reading_word(const Tableau& t) {
    Word w;
    for (auto [r, c] : reading_cells(t)) w.push_back(t.at(r, c));
    return w;
}

namespace {
Letter dec(Letter x) { return x > 0 ? x - 1 : x + 1; }  // x-1 for unbarred x
bool r1a(Letter a, Letter b, Letter c) {
    // a b c = y z x with x <= y < z, z != xbar
    return le(c, a) && lt(a, b) && b != -c;
}
bool r1b(Letter a, Letter b, Letter c) {
    // a b c = x z y with x < y <= z, z != xbar
    return lt(a, c) && le(c, b) && b != -a;
}
bool r2_cond(Letter x, Letter y, int n) { return x > 1 && x <= n && le(x, y) && le(y, -x); }

Word rewrite(const Word& w, int pos, std::initializer_list<Letter> f) {
    Word o = w;
    int i = pos;
    for (Letter x : f) o[i++] = x;
    return o;
}
}  // namespace

Word knuth_step(const Word& w, int pos, Knuth rule, int n, int z, int len) {
    auto fail = [&](const char* name) -> Word {
        throw Error(std::string(name) + " does not apply at position " + std::to_string(pos + 1));
    };
    int L = (int)w.size();
    switch (rule) {
        case Knuth::R1a: {
            if (pos < 0 || pos + 3 > L) fail("R1a");
            Letter a = w[pos], b = w[pos + 1], c = w[pos + 2];
            if (r1a(a, b, c)) return rewrite(w, pos, {a, c, b});  // yzx -> yxz
            if (r1a(a, c, b)) return rewrite(w, pos, {a, c, b});  // yxz -> yzx
            return fail("R1a");
        }
        case Knuth::R1b: {
            if (pos < 0 || pos + 3 > L) fail("R1b");
            Letter a = w[pos], b = w[pos + 1], c = w[pos + 2];
            if (r1b(a, b, c)) return rewrite(w, pos, {b, a, c});  // xzy -> zxy
            if (r1b(b, a, c)) return rewrite(w, pos, {b, a, c});
            return fail("R1b");
        }
        case Knuth::R2a: {
            // y (x-1)bar (x-1) <-> y x xbar
            if (pos < 0 || pos + 3 > L) fail("R2a");
            Letter y = w[pos], b = w[pos + 1], c = w[pos + 2];
            if (c > 0 && b == -c && r2_cond(c + 1, y, n)) return rewrite(w, pos, {y, c + 1, -(c + 1)});
            if (b > 0 && c == -b && r2_cond(b, y, n)) return rewrite(w, pos, {y, -dec(b), dec(b)});
            return fail("R2a");
        }
        case Knuth::R2b: {
            // x xbar y <-> (x-1)bar (x-1) y
            if (pos < 0 || pos + 3 > L) fail("R2b");
            Letter a = w[pos], b = w[pos + 1], y = w[pos + 2];
            if (a > 0 && b == -a && r2_cond(a, y, n)) return rewrite(w, pos, {-dec(a), dec(a), y});
            if (b > 0 && a == -b && r2_cond(b + 1, y, n)) return rewrite(w, pos, {b + 1, -(b + 1), y});
            return fail("R2b");
        }
        case Knuth::R3contract: {
            Column pre;
            for (int i = pos; i < L; ++i) {
                if (!pre.empty() && !lt(pre.back(), w[i])) break;
                pre.push_back(w[i]);
                if (!is_admissible(pre, n)) {
                    Column k = contract_once(pre, n);
                    Word o(w.begin(), w.begin() + pos);
                    o.insert(o.end(), k.begin(), k.end());
                    o.insert(o.end(), w.begin() + i + 1, w.end());
                    return o;
                }
            }
            return fail("R3contract");
        }
        case Knuth::R3dilate: {
            if (pos < 0 || len < 0 || pos + len > L || z < 1 || z > n) fail("R3dilate");
            Column f(w.begin() + pos, w.begin() + pos + len);
            for (size_t i = 1; i < f.size(); ++i)
                if (!lt(f[i - 1], f[i])) fail("R3dilate");
            auto cands = dilations(f, n);
            for (auto& c : cands)
                if (std::find(c.begin(), c.end(), z) != c.end() && std::find(f.begin(), f.end(), z) == f.end()) {
                    Word o(w.begin(), w.begin() + pos);
                    o.insert(o.end(), c.begin(), c.end());
                    o.insert(o.end(), w.begin() + pos + len, w.end());
                    return o;
                }
            return fail("R3dilate");
        }
    }
    return w;
}

Tableau diagonal_tableau(const Word& w, int n) {
    int L = (int)w.size();
    std::vector<std::vector<Letter>> rows;
    Partition inner;
    for (int k = 0; k < L; ++k) {
        std::vector<Letter> row(L - k, 0);
        row[L - 1 - k] = w[k];
        rows.push_back(row);
        inner.push_back(L - 1 - k);
    }
    return make_tableau(n, rows, inner);
}

Tableau plactic_normal_form(const Word& w, int n) { return rectify(diagonal_tableau(w, n)); }

bool plactic_equivalent(const Word& a, const Word& b, int n) {
    return plactic_normal_form(a, n) == plactic_normal_form(b, n);
}

namespace {
// columns of a straight type-A tableau
std::vector<Column> to_columns(const Tableau& p) {
    std::vector<Column> cols(p.ncols());
    for (int c = 0; c < p.ncols(); ++c) cols[c] = p.column(c);
    return cols;
}
Tableau from_columns(const std::vector<Column>& cols, int m) {
    std::vector<std::vector<Letter>> rows;
    for (size_t c = 0; c < cols.size(); ++c)
        for (size_t r = 0; r < cols[c].size(); ++r) {
            if (rows.size() <= r) rows.resize(r + 1);
            rows[r].push_back(cols[c][r]);
        }
    return make_tableau(m, rows, {}, true);
}
}  // namespace

Inserted column_insert_A(const Tableau& p0, const Word& w, int m) {
    if (!p0.straight()) throw Error("column insertion needs a straight tableau");
    auto cols = to_columns(p0);
    Partition start = p0.outer();
    std::vector<std::vector<int>> qrows;
    for (int r = 0; r < (int)start.size(); ++r) qrows.push_back(std::vector<int>(start[r], 0));
    int label = 0;
    for (Letter x : w) {
        if (x < 1 || x > m) throw Error("letter " + letter_str(x) + " outside [1," + std::to_string(m) + "]");
        size_t c = 0;
        Letter y = x;
        while (true) {
            if (c == cols.size()) cols.push_back({});
            auto& col = cols[c];
            auto it = std::lower_bound(col.begin(), col.end(), y);  // smallest entry >= y
            if (it == col.end()) {
                col.push_back(y);
                int r = (int)col.size() - 1;
                if ((int)qrows.size() <= r) qrows.resize(r + 1);
                if ((int)qrows[r].size() != (int)c) throw Error("internal: column insertion broke the shape");
                qrows[r].push_back(++label);
                break;
            }
            std::swap(*it, y);
            ++c;
        }
    }
    Inserted out;
    out.p = from_columns(cols, m);
    out.q = make_tableau(std::max(label, 1), qrows, start, true);
    return out;
}

Word reverse_column_insert_A(const Tableau& p, const Tableau& q) {
    if (p.outer() != q.outer() || !p.straight()) throw Error("reverse insertion: shape mismatch");
    auto cols = to_columns(p);
    int N = q.cell_count();
    std::vector<std::pair<int, int>> where(N + 1, {-1, -1});
    for (int r = 0; r < q.nrows(); ++r)
        for (int c = q.inner_at(r); c < (int)q.rows[r].size(); ++c) {
            int v = q.rows[r][c];
            if (v < 1 || v > N || where[v].first >= 0) throw Error("reverse insertion: recording tableau not standard");
            where[v] = {r, c};
        }
    Word w(N);
    for (int v = N; v >= 1; --v) {
        auto [r, c] = where[v];
        if ((int)cols[c].size() != r + 1) throw Error("reverse insertion: label " + std::to_string(v) + " not a corner");
        Letter x = cols[c].back();
        cols[c].pop_back();
        for (int k = c - 1; k >= 0; --k) {
            auto& col = cols[k];
            auto it = std::upper_bound(col.begin(), col.end(), x);  // largest entry <= x
            if (it == col.begin()) throw Error("reverse insertion: no entry to bump");
            --it;
            std::swap(*it, x);
        }
        w[v - 1] = x;
    }
    return w;
}

}  // namespace kn
