#include "kn/virtualization.hpp"

#include <algorithm>
#include <map>

#include "kn/crystal.hpp"
#include "kn/involutions.hpp"
#include "kn/type_a.hpp"
#include "kn/words.hpp"

namespace kn {

Letter to_A_letter(Letter x, int n) { return x > 0 ? x : 2 * n + 1 + x; }
Letter from_A_letter(Letter a, int n) { return a <= n ? a : a - 2 * n - 1; }

Tableau a_as_c(const Tableau& p, int n) {
    Tableau o = p;
    o.typeA = false;
    o.n = n;
    for (int r = 0; r < o.nrows(); ++r)
        for (int c = o.inner_at(r); c < (int)o.rows[r].size(); ++c)
            if (o.is_cell(r, c)) o.rows[r][c] = from_A_letter(o.rows[r][c], n);
    return o;
}

Partition lambda_A(const Partition& lambda, int n) {
    if ((int)lambda.size() > n) throw Error("partition has more than n parts");
    Partition cols = conjugate(normalize(lambda));
    std::vector<int> heights;
    for (int h : cols) {
        heights.push_back(h);
        heights.push_back(2 * n - h);
    }
    std::sort(heights.rbegin(), heights.rend());
    return conjugate(normalize(heights));
}

VirtualSplit psi(const Column& col, int n) {
    if (!is_admissible(col, n)) throw Error("psi of non-admissible column " + render_column(col));
    Split s = split_column(col, n);
    VirtualSplit v;
    v.right = s.r;
    v.left = s.l;
    std::vector<char> used(n + 1, 0);
    for (Letter x : s.l) used[absl(x)] = 1;
    for (int k = 1; k <= n; ++k)
        if (!used[k]) {
            v.left.push_back(k);
            v.left.push_back(-k);
        }
    sort_column(v.left);
    return v;
}

Column psi_inv(const VirtualSplit& v, int n) {
    Column l;
    for (Letter x : v.left)
        if (std::find(v.left.begin(), v.left.end(), -x) == v.left.end()) l.push_back(x);
    Column c;
    for (Letter x : v.right)
        if (x > 0) c.push_back(x);
    for (Letter x : l)
        if (x < 0) c.push_back(x);
    sort_column(c);
    if (!is_admissible(c, n)) throw Error("not a virtual split: " + render_column(c) + " is not admissible");
    VirtualSplit back = psi(c, n);
    if (back.left != v.left || back.right != v.right)
        throw Error("not a virtual split: (" + render_column(v.left) + " | " + render_column(v.right) + ")");
    return c;
}

std::vector<Letter> psi_word(const Column& col, int n) {
    VirtualSplit v = psi(col, n);
    std::vector<Letter> w;
    for (Letter x : v.right) w.push_back(to_A_letter(x, n));
    for (Letter x : v.left) w.push_back(to_A_letter(x, n));
    return w;
}

Tableau build_Q_lambda(const Partition& lambda, int n) {
    if ((int)lambda.size() > n) throw Error("partition has more than n parts");
    Partition cols = conjugate(normalize(lambda));
    std::vector<int> heights;  // A-columns currently in the shape
    std::vector<std::vector<int>> rows;
    int label = 0;
    auto add_column = [&](int h) {
        heights.push_back(h);
        std::sort(heights.rbegin(), heights.rend());
        Partition shape = conjugate(normalize(heights));
        if (rows.size() < shape.size()) rows.resize(shape.size());
        for (size_t r = 0; r < shape.size(); ++r)
            while ((int)rows[r].size() < shape[r]) rows[r].push_back(++label);
    };
    for (int k = (int)cols.size() - 1; k >= 0; --k) {
        add_column(cols[k]);
        add_column(2 * n - cols[k]);
    }
    return make_tableau(std::max(label, 1), rows, {}, true);
}

Embedded embed_E(const Tableau& t) {
    if (t.typeA || !t.straight()) throw Error("E needs a straight KN tableau");
    std::string why;
    if (!is_kn(t, &why)) throw Error("E needs a KN tableau: " + why);
    int n = t.n;
    Word w;
    for (int c = t.ncols() - 1; c >= 0; --c) {
        auto part = psi_word(t.column(c), n);
        w.insert(w.end(), part.begin(), part.end());
    }
    Tableau empty;
    empty.n = 2 * n;
    empty.typeA = true;
    Inserted ins = column_insert_A(empty, w, 2 * n);
    return {ins.p, ins.q};
}

Tableau invert_E(const Tableau& p, const Partition& lambda, int n) {
    if (!p.typeA) throw Error("E^-1 needs a type-A tableau");
    Tableau q = build_Q_lambda(lambda, n);
    if (p.outer() != q.outer()) throw Error("E^-1: shape is not lambda^A");
    Word w = reverse_column_insert_A(p, q);
    Partition cols = conjugate(normalize(lambda));
    std::vector<Column> out(cols.size());
    size_t pos = 0;
    for (int k = (int)cols.size() - 1; k >= 0; --k) {
        int h = cols[k];
        VirtualSplit v;
        for (int i = 0; i < h; ++i) v.right.push_back(from_A_letter(w[pos++], n));
        for (int i = 0; i < 2 * n - h; ++i) v.left.push_back(from_A_letter(w[pos++], n));
        try {
            out[k] = psi_inv(v, n);
        } catch (const Error& e) {
            throw Error("E^-1: column pair for column " + std::to_string(k + 1) + " fails: " + e.what());
        }
        if ((int)out[k].size() != h) throw Error("E^-1: column " + std::to_string(k + 1) + " has the wrong height");
    }
    std::vector<std::vector<Letter>> rows;
    for (size_t c = 0; c < out.size(); ++c)
        for (size_t r = 0; r < out[c].size(); ++r) {
            if (rows.size() <= r) rows.resize(r + 1);
            rows[r].push_back(out[c][r]);
        }
    Tableau t = make_tableau(n, rows);
    std::string why;
    if (!is_kn(t, &why)) throw Error("E^-1: result is not KN: " + why);
    return t;
}

std::optional<Tableau> virtual_f(const Tableau& p, int i, int n) {
    if (i < 1 || i > n) throw Error("invalid virtual color " + std::to_string(i));
    int other = i == n ? n : 2 * n - i;
    auto a = f_op(p, i);
    if (!a) return std::nullopt;
    return f_op(*a, other);
}

std::optional<Tableau> virtual_e(const Tableau& p, int i, int n) {
    if (i < 1 || i > n) throw Error("invalid virtual color " + std::to_string(i));
    int other = i == n ? n : 2 * n - i;
    auto a = e_op(p, i);
    if (!a) return std::nullopt;
    return e_op(*a, other);
}

Tableau virtual_partial_xi(const Tableau& p, int lo, int hi, int n) {
    if (lo < 1 || hi < lo || hi > n) throw Error("virtual interval outside [1,n]");
    if (hi == n) return partial_xi_A(p, lo, 2 * n - lo);
    return partial_xi_A(p, {{lo, hi}, {2 * n - hi, 2 * n - lo}});
}

Tableau xi_C_via_virtualization(const Tableau& t, int p, int q) {
    Embedded e = embed_E(t);
    return invert_E(virtual_partial_xi(e.p, p, q, t.n), t.outer(), t.n);
}

bool check_diagram(const Tableau& t, int p, int q, std::string* why) {
    Tableau lhs = embed_E(xi_oracle(t, p, q)).p;
    Tableau rhs = virtual_partial_xi(embed_E(t).p, p, q, t.n);
    if (lhs == rhs) return true;
    if (why) *why = "E(xi(t)) = " + render(lhs) + " but virtual xi(E(t)) = " + render(rhs);
    return false;
}

Tableau virtual_bk_pair(const Tableau& p, int i, int n) {
    if (i < 1 || i >= n) throw Error("virtual BK pair needs 1 <= i < n");
    return bender_knuth_A(dual_bk_A(p, 2 * n - i, 2 * n), i);
}

}  // namespace kn
