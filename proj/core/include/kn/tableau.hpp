#pragma once
// Letters, shapes, columns and (skew, possibly punctured) tableaux over
// the symplectic alphabet 1<...<n<nbar<...<1bar or the type-A alphabet [m].

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kn {

// k > 0 is the unbarred letter k, -k is kbar. Type A uses positive letters only.
using Letter = int;
using Column = std::vector<Letter>;
using Partition = std::vector<int>;
using Weight = std::vector<int>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int key(Letter x) { return x > 0 ? x : 4096 + x; }
inline bool lt(Letter a, Letter b) { return key(a) < key(b); }
inline bool le(Letter a, Letter b) { return key(a) <= key(b); }
inline int absl(Letter x) { return x < 0 ? -x : x; }

std::string letter_str(Letter x);
void sort_column(Column& c);
Partition normalize(Partition p);
Partition conjugate(const Partition& p);
int size_of(const Partition& p);

struct Tableau {
    int n = 0;            // alphabet rank (C_n) or size m (type A)
    bool typeA = false;
    Partition inner;      // normalized
    // rows[r] has the outer length of row r; inner cells and the puncture hold 0
    std::vector<std::vector<Letter>> rows;
    std::optional<std::pair<int, int>> puncture;

    int nrows() const { return (int)rows.size(); }
    int ncols() const { return rows.empty() ? 0 : (int)rows[0].size(); }
    int inner_at(int r) const { return r < (int)inner.size() ? inner[r] : 0; }
    Partition outer() const;
    bool in_outer(int r, int c) const { return r >= 0 && r < nrows() && c >= 0 && c < (int)rows[r].size(); }
    bool is_punct(int r, int c) const { return puncture && puncture->first == r && puncture->second == c; }
    // a letter-bearing cell
    bool is_cell(int r, int c) const { return in_outer(r, c) && c >= inner_at(r) && !is_punct(r, c); }
    Letter at(int r, int c) const { return rows[r][c]; }
    bool straight() const { return inner.empty(); }
    int cell_count() const;
    // letters of column c top to bottom (inner cells and puncture skipped)
    Column column(int c) const;
    // row indices of the letter cells of column c
    std::vector<int> column_rows(int c) const;

    bool operator==(const Tableau& o) const {
        return n == o.n && typeA == o.typeA && inner == o.inner && rows == o.rows && puncture == o.puncture;
    }
    bool operator!=(const Tableau& o) const { return !(*this == o); }
    bool operator<(const Tableau& o) const;
};

// --- columns -------------------------------------------------------------
int column_count_N(const Column& col, int m);
// 0 when admissible, otherwise the smallest m with N(m) > m
int admissible_violation(const Column& col, int n);
bool is_admissible(const Column& col, int n);
// independent definition: a set of unbarred letters T witnessing admissibility
bool is_admissible_by_witness(const Column& col, int n);

struct Split {
    Column l, r;
};
Split split_column(const Column& col, int n);  // throws on non-admissible
Column phi(const Column& col, int n);           // admissible -> coadmissible
Column phi_inv(const Column& col, int n);       // throws when not in the image
bool is_coadmissible(const Column& col, int n);

// one R3 contraction: shortest non-admissible prefix, drop (z, zbar) for the lowest z with N(z)=z+1
Column contract_once(const Column& col, int n);
// all admissible-column candidates D+{k,kbar} contracting once to col
std::vector<Column> dilations(const Column& col, int n);

// all admissible columns of height h over C_n (increasing in canonical order)
std::vector<Column> admissible_columns(int n, int h);

// --- tableaux ------------------------------------------------------------
Tableau make_tableau(int n, const std::vector<std::vector<Letter>>& rows, const Partition& inner = {},
                     bool typeA = false);
Tableau yamanouchi(const Partition& lambda, int n, bool typeA = false);
bool is_semistandard(const Tableau& t, std::string* why = nullptr);
bool is_kn(const Tableau& t, std::string* why = nullptr);
// doubled tableau of splits (column c -> columns 2c, 2c+1); columns must be admissible
Tableau split_tableau(const Tableau& t);
Weight weight(const Tableau& t);
// restrict a type-C weight to the window [p,q]
Weight window(const Weight& w, int p, int q);

// --- text / json ---------------------------------------------------------
// n <= 0 infers the rank from the largest absolute letter
Tableau parse_tableau(const std::string& text, int n = 0, bool typeA = false);
std::string render(const Tableau& t);
std::string render_column(const Column& c);
std::string to_json(const Tableau& t);
Tableau from_json(const std::string& js);
// compact byte key for hashing
std::string key_of(const Tableau& t);

}  // namespace kn
