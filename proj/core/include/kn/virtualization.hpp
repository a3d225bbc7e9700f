#pragma once
// Virtual embedding of KN(lambda, n) into SSYT(lambda^A, 2n): virtual splits psi,
// column insertion E, the recording tableau Q_lambda, E^-1, virtual operators.
//
// A_{2n-1} letters: k -> k, kbar -> 2n+1-k. Nodes: i < n pairs with 2n-i, n is its own mirror.

#include <optional>
#include <utility>
#include <vector>

#include "kn/tableau.hpp"

namespace kn {

Letter to_A_letter(Letter x, int n);
Letter from_A_letter(Letter a, int n);
// type-A tableau over [2n] shown in the symplectic alphabet (display only)
Tableau a_as_c(const Tableau& p, int n);

// columns of height h < n give h and 2n-h, height n gives n twice
Partition lambda_A(const Partition& lambda, int n);

struct VirtualSplit {
    Column left, right;  // type-C letters; left has height 2n-h, right has height h
};
VirtualSplit psi(const Column& col, int n);
Column psi_inv(const VirtualSplit& v, int n);  // throws when v is not a virtual split
// right column top to bottom, then the left column, as A letters
std::vector<Letter> psi_word(const Column& col, int n);

Tableau build_Q_lambda(const Partition& lambda, int n);

struct Embedded {
    Tableau p, q;
};
Embedded embed_E(const Tableau& t);
Tableau invert_E(const Tableau& p, const Partition& lambda, int n);

std::optional<Tableau> virtual_f(const Tableau& p, int i, int n);
std::optional<Tableau> virtual_e(const Tableau& p, int i, int n);

// partial xi of [p,q] u [2n-q,2n-p] (q < n) or [p,2n-p] (q = n) on an A tableau over [2n]
Tableau virtual_partial_xi(const Tableau& p, int lo, int hi, int n);
// E^-1 . virtual xi . E (straight KN input)
Tableau xi_C_via_virtualization(const Tableau& t, int p, int q);
// E(xi_[p,q](t)) == virtual xi (E(t)), with the symplectic side from the crystal oracle
bool check_diagram(const Tableau& t, int p, int q, std::string* why = nullptr);

// virtual Bender-Knuth factorisation t_i^A t~_{2n-i}^A acting on E(t)
Tableau virtual_bk_pair(const Tableau& p, int i, int n);

}  // namespace kn
