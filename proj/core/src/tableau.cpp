#include "kn/tableau.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <mutex>
#include "json.hpp"
#include <sstream>
#include <unordered_map>

namespace kn {

std::string letter_str(Letter x) { return std::to_string(x); }

void sort_column(Column& c) { std::sort(c.begin(), c.end(), lt); }

Partition normalize(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Partition conjugate(const Partition& p) {
    Partition q;
    if (p.empty()) return q;
    q.assign(p[0], 0);
    for (int part : p)
        for (int c = 0; c < part; ++c) q[c]++;
    return q;
}

int size_of(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

Partition Tableau::outer() const {
    Partition p;
    for (auto& r : rows) p.push_back((int)r.size());
    return normalize(p);
}

int Tableau::cell_count() const {
    int k = 0;
    for (int r = 0; r < nrows(); ++r)
        for (int c = inner_at(r); c < (int)rows[r].size(); ++c)
            if (!is_punct(r, c)) ++k;
    return k;
}

Column Tableau::column(int c) const {
    Column col;
    for (int r = 0; r < nrows(); ++r)
        if (is_cell(r, c)) col.push_back(rows[r][c]);
    return col;
}

std::vector<int> Tableau::column_rows(int c) const {
    std::vector<int> rs;
    for (int r = 0; r < nrows(); ++r)
        if (is_cell(r, c)) rs.push_back(r);
    return rs;
}

bool Tableau::operator<(const Tableau& o) const {
    if (inner != o.inner) return inner < o.inner;
    if (outer() != o.outer()) return outer() < o.outer();
    for (int r = 0; r < nrows(); ++r)
        for (int c = 0; c < (int)rows[r].size(); ++c)
            if (rows[r][c] != o.rows[r][c]) return key(rows[r][c]) < key(o.rows[r][c]);
    return false;
}

// --- columns -------------------------------------------------------------

int column_count_N(const Column& col, int m) {
    int k = 0;
    for (Letter x : col)
        if ((x > 0 && x <= m) || (x < 0 && -x <= m)) ++k;
    return k;
}

int admissible_violation(const Column& col, int n) {
    if ((int)col.size() > n) {
        for (int m = 1; m <= n; ++m)
            if (column_count_N(col, m) > m) return m;
        return n;
    }
    for (int m = 1; m <= n; ++m)
        if (column_count_N(col, m) > m) return m;
    return 0;
}

bool is_admissible(const Column& col, int n) { return admissible_violation(col, n) == 0; }

namespace {
std::vector<int> pairs_desc(const Column& col) {
    std::vector<int> z;
    for (Letter x : col)
        if (x > 0 && std::find(col.begin(), col.end(), -x) != col.end()) z.push_back(x);
    std::sort(z.rbegin(), z.rend());
    return z;
}
bool occurs(const Column& col, int k) {
    return std::find(col.begin(), col.end(), k) != col.end() || std::find(col.begin(), col.end(), -k) != col.end();
}
}  // namespace

bool is_admissible_by_witness(const Column& col, int n) {
    if ((int)col.size() > n) return false;
    auto z = pairs_desc(col);
    std::vector<int> free;
    for (int t = n; t >= 1; --t)
        if (!occurs(col, t)) free.push_back(t);
    // choose |z| free letters, decreasing, with t_i < z_i
    int m = (int)z.size(), f = (int)free.size();
    if (m > f) return false;
    std::vector<int> pick(m);
    std::function<bool(int, int)> rec = [&](int i, int from) -> bool {
        if (i == m) return true;
        for (int s = from; s < f; ++s) {
            if (free[s] < z[i] && rec(i + 1, s + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

Split split_column(const Column& col, int n) {
    int v = admissible_violation(col, n);
    if (v) throw Error("column " + render_column(col) + " is not admissible: N(" + std::to_string(v) + ") > " +
                       std::to_string(v));
    auto z = pairs_desc(col);
    Split s{col, col};
    int prev = n + 1;
    for (int zi : z) {
        int t = std::min(prev, zi) - 1;
        while (t >= 1 && occurs(col, t)) --t;
        if (t < 1) throw Error("column " + render_column(col) + " has no split for pair " + std::to_string(zi));
        std::replace(s.l.begin(), s.l.end(), zi, t);
        std::replace(s.r.begin(), s.r.end(), -zi, -t);
        prev = t;
    }
    sort_column(s.l);
    sort_column(s.r);
    return s;
}

Column phi(const Column& col, int n) {
    Split s = split_column(col, n);
    Column d;
    for (Letter x : s.l)
        if (x > 0) d.push_back(x);
    for (Letter x : s.r)
        if (x < 0) d.push_back(x);
    sort_column(d);
    return d;
}

bool is_coadmissible(const Column& col, int n) {
    try {
        phi_inv(col, n);
        return true;
    } catch (const Error&) {
        return false;
    }
}

Column phi_inv(const Column& d, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, Column>, Column> cache;
    {
        std::lock_guard<std::mutex> g(mu);
        auto it = cache.find({n, d});
        if (it != cache.end()) return it->second;
    }
    auto tpairs = pairs_desc(d);
    std::vector<int> absent;
    for (int k = 1; k <= n; ++k)
        if (!occurs(d, k)) absent.push_back(k);
    int m = (int)tpairs.size();
    std::optional<Column> found;
    if (m == 0) {
        if (is_admissible(d, n)) found = d;
    } else if ((int)absent.size() >= m) {
        std::vector<bool> sel(absent.size(), false);
        std::fill(sel.begin(), sel.begin() + m, true);
        do {
            std::vector<int> zs;
            for (size_t i = 0; i < absent.size(); ++i)
                if (sel[i]) zs.push_back(absent[i]);
            Column c;
            for (Letter x : d)
                if (std::find(tpairs.begin(), tpairs.end(), absl(x)) == tpairs.end()) c.push_back(x);
            for (int z : zs) {
                c.push_back(z);
                c.push_back(-z);
            }
            sort_column(c);
            if (is_admissible(c, n) && phi(c, n) == d) {
                if (found && *found != c) throw Error("phi is not injective at " + render_column(d));
                found = c;
            }
        } while (std::prev_permutation(sel.begin(), sel.end()));
    }
    if (!found) throw Error("column " + render_column(d) + " is not coadmissible");
    std::lock_guard<std::mutex> g(mu);
    cache[{n, d}] = *found;
    return *found;
}

Column contract_once(const Column& col, int n) {
    Column pre;
    for (size_t i = 0; i < col.size(); ++i) {
        pre.push_back(col[i]);
        if (admissible_violation(pre, n)) {
            for (int z = 1; z <= n; ++z) {
                if (column_count_N(pre, z) == z + 1) {
                    auto a = std::find(pre.begin(), pre.end(), z);
                    auto b = std::find(pre.begin(), pre.end(), -z);
                    if (a == pre.end() || b == pre.end())
                        throw Error("R3: prefix " + render_column(pre) + " lacks the pair for " + std::to_string(z));
                    Column out;
                    for (Letter x : col)
                        if (x != z && x != -z) out.push_back(x);
                    return out;
                }
            }
            throw Error("R3: no contractible letter in " + render_column(pre));
        }
    }
    throw Error("R3: column " + render_column(col) + " is admissible");
}

std::vector<Column> dilations(const Column& col, int n) {
    std::vector<Column> out;
    for (int k = 1; k <= n; ++k) {
        if (occurs(col, k)) continue;
        Column c = col;
        c.push_back(k);
        c.push_back(-k);
        sort_column(c);
        if (is_admissible(c, n)) continue;
        try {
            if (contract_once(c, n) == col) out.push_back(c);
        } catch (const Error&) {
        }
    }
    return out;
}

std::vector<Column> admissible_columns(int n, int h) {
    std::vector<Letter> alpha;
    for (int k = 1; k <= n; ++k) alpha.push_back(k);
    for (int k = n; k >= 1; --k) alpha.push_back(-k);
    std::vector<Column> out;
    Column cur;
    std::function<void(int)> rec = [&](int from) {
        if ((int)cur.size() == h) {
            if (is_admissible(cur, n)) out.push_back(cur);
            return;
        }
        for (int i = from; i < (int)alpha.size(); ++i) {
            cur.push_back(alpha[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// --- tableaux ------------------------------------------------------------

Tableau make_tableau(int n, const std::vector<std::vector<Letter>>& rows, const Partition& inner, bool typeA) {
    Tableau t;
    t.n = n;
    t.typeA = typeA;
    t.inner = normalize(inner);
    t.rows = rows;
    for (int r = 0; r < t.nrows(); ++r)
        for (int c = 0; c < t.inner_at(r) && c < (int)t.rows[r].size(); ++c) t.rows[r][c] = 0;
    return t;
}

Tableau yamanouchi(const Partition& lambda, int n, bool typeA) {
    std::vector<std::vector<Letter>> rows;
    for (int i = 0; i < (int)lambda.size(); ++i)
        if (lambda[i] > 0) rows.push_back(std::vector<Letter>(lambda[i], i + 1));
    return make_tableau(n, rows, {}, typeA);
}

bool is_semistandard(const Tableau& t, std::string* why) {
    auto fail = [&](int r, int c, const std::string& m) {
        if (why) *why = m + " at row " + std::to_string(r + 1) + ", col " + std::to_string(c + 1);
        return false;
    };
    for (int r = 0; r < t.nrows(); ++r) {
        if (r > 0 && t.rows[r].size() > t.rows[r - 1].size()) return fail(r, 0, "outer shape not a partition");
        if (t.inner_at(r) > (int)t.rows[r].size()) return fail(r, 0, "inner shape exceeds outer shape");
        for (int c = t.inner_at(r); c < (int)t.rows[r].size(); ++c) {
            if (t.is_punct(r, c)) continue;
            Letter x = t.rows[r][c];
            if (x == 0 || absl(x) > t.n || (t.typeA && x < 0)) return fail(r, c, "bad letter");
            if (c + 1 < (int)t.rows[r].size() && t.is_cell(r, c + 1) && lt(t.rows[r][c + 1], x))
                return fail(r, c, "row decreases");
            if (t.is_cell(r + 1, c) && !lt(x, t.rows[r + 1][c])) return fail(r, c, "column not strict");
            // a puncture between two cells of a column or row still requires order across it
            if (t.is_punct(r + 1, c) && t.is_cell(r + 2, c) && !lt(x, t.rows[r + 2][c]))
                return fail(r, c, "column not strict across puncture");
            if (t.is_punct(r, c + 1) && t.is_cell(r, c + 2) && lt(t.rows[r][c + 2], x))
                return fail(r, c, "row decreases across puncture");
        }
    }
    if (t.inner.size() > t.rows.size()) return fail(0, 0, "inner shape has more rows");
    for (size_t i = 1; i < t.inner.size(); ++i)
        if (t.inner[i] > t.inner[i - 1]) return fail((int)i, 0, "inner shape not a partition");
    return true;
}

bool is_kn(const Tableau& t, std::string* why) {
    if (t.typeA) {
        if (why) *why = "type-A tableau";
        return false;
    }
    if (!is_semistandard(t, why)) return false;
    std::vector<std::vector<std::pair<int, Split>>> cols(t.ncols());
    for (int c = 0; c < t.ncols(); ++c) {
        Column col = t.column(c);
        int v = admissible_violation(col, t.n);
        if (v) {
            if (why) *why = "column " + std::to_string(c + 1) + " not admissible: N(" + std::to_string(v) + ") > " +
                            std::to_string(v);
            return false;
        }
    }
    Tableau s = split_tableau(t);
    std::string w;
    if (!is_semistandard(s, &w)) {
        // w reads "<problem> at row r, col c"; cells are in the doubled split tableau
        auto k = w.find(" at ");
        if (why)
            *why = k == std::string::npos ? "split not semi-standard: " + w
                                          : "split not semi-standard" + w.substr(k) + " of the split (" + w.substr(0, k) + ")";
        return false;
    }
    return true;
}

Tableau split_tableau(const Tableau& t) {
    Tableau s;
    s.n = t.n;
    s.typeA = false;
    for (int r = 0; r < t.nrows(); ++r) s.rows.push_back(std::vector<Letter>(2 * t.rows[r].size(), 0));
    Partition in = t.inner;
    for (auto& x : in) x *= 2;
    s.inner = in;
    for (int c = 0; c < t.ncols(); ++c) {
        auto rs = t.column_rows(c);
        if (rs.empty()) continue;
        Split sp = split_column(t.column(c), t.n);
        for (size_t i = 0; i < rs.size(); ++i) {
            s.rows[rs[i]][2 * c] = sp.l[i];
            s.rows[rs[i]][2 * c + 1] = sp.r[i];
        }
    }
    if (t.puncture) s.puncture = std::make_pair(t.puncture->first, 2 * t.puncture->second);
    return s;
}

Weight weight(const Tableau& t) {
    Weight w(t.n, 0);
    for (int r = 0; r < t.nrows(); ++r)
        for (int c = 0; c < (int)t.rows[r].size(); ++c)
            if (t.is_cell(r, c)) {
                Letter x = t.rows[r][c];
                if (x > 0)
                    w[x - 1]++;
                else
                    w[-x - 1]--;
            }
    return w;
}

Weight window(const Weight& w, int p, int q) { return Weight(w.begin() + (p - 1), w.begin() + q); }

// --- text / json ---------------------------------------------------------

Tableau parse_tableau(const std::string& text, int n, bool typeA) {
    std::string s;
    for (char ch : text)
        if (!isspace((unsigned char)ch)) s.push_back(ch);
    Tableau t;
    t.typeA = typeA;
    std::vector<std::vector<Letter>> rows;
    Partition inner;
    int maxabs = 0;
    if (!s.empty()) {
        std::stringstream rs(s);
        std::string row;
        int r = 0;
        while (std::getline(rs, row, '/')) {
            std::vector<Letter> cells;
            std::stringstream cs(row);
            std::string cell;
            int c = 0, in = 0;
            bool seen_letter = false;
            while (std::getline(cs, cell, ',')) {
                auto where = " at row " + std::to_string(r + 1) + ", col " + std::to_string(c + 1);
                if (cell == ".") {
                    if (seen_letter) throw Error("inner cell after a letter" + where);
                    ++in;
                    cells.push_back(0);
                } else if (cell == "*") {
                    if (t.puncture) throw Error("second puncture" + where);
                    t.puncture = std::make_pair(r, c);
                    cells.push_back(0);
                    seen_letter = true;
                } else {
                    size_t pos = 0;
                    int v = 0;
                    try {
                        v = std::stoi(cell, &pos);
                    } catch (...) {
                        throw Error("bad letter '" + cell + "'" + where);
                    }
                    if (pos != cell.size() || v == 0) throw Error("bad letter '" + cell + "'" + where);
                    if (typeA && v < 0) throw Error("barred letter in type A" + where);
                    maxabs = std::max(maxabs, absl(v));
                    cells.push_back(v);
                    seen_letter = true;
                }
                ++c;
            }
            if (cells.empty()) throw Error("empty row " + std::to_string(r + 1));
            rows.push_back(cells);
            inner.push_back(in);
            ++r;
        }
    }
    t.n = n > 0 ? n : maxabs;
    if (maxabs > t.n) throw Error("letter exceeds alphabet rank " + std::to_string(t.n));
    t.rows = rows;
    t.inner = normalize(inner);
    std::string why;
    if (!is_semistandard(t, &why)) throw Error(why);
    return t;
}

std::string render_column(const Column& c) {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += letter_str(c[i]);
    }
    return s + ")";
}

std::string render(const Tableau& t) {
    std::string s;
    for (int r = 0; r < t.nrows(); ++r) {
        if (r) s += "/";
        for (int c = 0; c < (int)t.rows[r].size(); ++c) {
            if (c) s += ",";
            if (c < t.inner_at(r))
                s += ".";
            else if (t.is_punct(r, c))
                s += "*";
            else
                s += letter_str(t.rows[r][c]);
        }
    }
    return s;
}

std::string to_json(const Tableau& t) {
    nlohmann::json j;
    j["n"] = t.n;
    if (t.typeA) j["typeA"] = true;
    j["outer"] = t.outer();
    j["inner"] = t.inner;
    auto rows = nlohmann::json::array();
    for (int r = 0; r < t.nrows(); ++r) {
        auto row = nlohmann::json::array();
        for (int c = 0; c < (int)t.rows[r].size(); ++c) {
            if (c < t.inner_at(r))
                row.push_back(nullptr);
            else if (t.is_punct(r, c))
                row.push_back("*");
            else
                row.push_back(t.rows[r][c]);
        }
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j.dump();
}

Tableau from_json(const std::string& js) {
    auto j = nlohmann::json::parse(js);
    std::string text;
    bool first = true;
    for (auto& row : j.at("rows")) {
        if (!first) text += "/";
        first = false;
        bool fc = true;
        for (auto& cell : row) {
            if (!fc) text += ",";
            fc = false;
            if (cell.is_null())
                text += ".";
            else if (cell.is_string())
                text += cell.get<std::string>();
            else
                text += std::to_string(cell.get<int>());
        }
    }
    return parse_tableau(text, j.at("n").get<int>(), j.value("typeA", false));
}

std::string key_of(const Tableau& t) {
    std::string k;
    k.reserve(t.nrows() * 8);
    for (int r = 0; r < t.nrows(); ++r) {
        k.push_back((char)(t.inner_at(r) + 1));
        for (int c = t.inner_at(r); c < (int)t.rows[r].size(); ++c) k.push_back((char)(t.rows[r][c] + 64));
        k.push_back((char)0);
    }
    return k;
}

}  // namespace kn
