#pragma once
// Type-A evacuation, reversal, Bender-Knuth involutions and partial xi on letter windows.

#include <utility>
#include <vector>

#include "kn/tableau.hpp"

namespace kn {

// straight tableau with letters in [a,b]: complement, rotate by pi, rectify
Tableau evac_A_straight(const Tableau& t, int a, int b);
// evac_m: letters <= m are evacuated, larger letters stay put (t straight)
Tableau evacuation_A(const Tableau& t, int m);
// arect . evac . rect on a skew tableau whose letters lie in [a,b]
Tableau reversal_A(const Tableau& t, int a, int b);
// freeze letters outside [p, q+1], reverse the window
Tableau partial_xi_A(const Tableau& t, int p, int q);
// union of disconnected intervals, composed
Tableau partial_xi_A(const Tableau& t, const std::vector<std::pair<int, int>>& intervals);

Tableau bender_knuth_A(const Tableau& t, int i);
// q_[1,i] = t_1 (t_2 t_1) ... (t_i ... t_1); q_[1,0] = id
Tableau bk_q_A(const Tableau& t, int i);
// q_[j,k-1] = q_[1,k-1] q_[1,k-j] q_[1,k-1]
Tableau bk_q_interval_A(const Tableau& t, int j, int k);
// dual BK generator t~_k = q_[1,N-1] t_{N-k} q_[1,N-1] over [N]
Tableau dual_bk_A(const Tableau& t, int k, int N);
// p_i = t_i ... t_2 t_1
Tableau promotion_A(const Tableau& t, int i);

}  // namespace kn
