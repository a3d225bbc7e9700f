#pragma once
// Reading words, symplectic Knuth moves, plactic classes and type-A column insertion.

#include <string>
#include <utility>
#include <vector>

#include "kn/tableau.hpp"

namespace kn {

using Word = std::vector<Letter>;

Word parse_word(const std::string& text);
std::string render_word(const Word& w);

// Japanese reading: columns right to left, each top to bottom
Word reading_word(const Tableau& t);
// (row, col) of each letter of reading_word, in the same order
std::vector<std::pair<int, int>> reading_cells(const Tableau& t);

enum class Knuth { R1a, R1b, R2a, R2b, R3contract, R3dilate };
// Rewrites the factor starting at pos. R1/R2 work in either direction.
// R3dilate inserts (z, zbar) into the column factor w[pos, pos+len).
Word knuth_step(const Word& w, int pos, Knuth rule, int n, int z = 0, int len = 0);

// antidiagonal skew tableau whose reading word is w
Tableau diagonal_tableau(const Word& w, int n);
Tableau plactic_normal_form(const Word& w, int n);
bool plactic_equivalent(const Word& a, const Word& b, int n);

// type-A Schensted column insertion. q records the new cells (labels from 1), inner = shape of p.
struct Inserted {
    Tableau p, q;
};
Inserted column_insert_A(const Tableau& p, const Word& w, int m);
// inverse on a straight pair (p, q) with the same shape
Word reverse_column_insert_A(const Tableau& p, const Tableau& q);

}  // namespace kn
