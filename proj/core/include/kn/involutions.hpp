#pragma once
// Symplectic evacuation and reversal, colorful tableau switching for xi_[j,n],
// Kashiwara reflections, symplectic Bender-Knuth involutions, partial xi dispatch.

#include <string>
#include <vector>

#include "kn/sjdt.hpp"
#include "kn/tableau.hpp"

namespace kn {

enum class Color : std::uint8_t { Green, Purple, PurplePrimed, Red, RedPrimed };

struct ColorLetter {
    Color color = Color::Green;
    int index = 1;
};
std::string color_name(const ColorLetter& c);  // g3, p1, p1', r2, r2'

struct SwitchEvent {
    enum Kind { Contract, Slide } kind = Slide;
    int label = 0;  // sliding label (Slide)
    SlideEvent slide;
    Contraction con;  // pre-contraction (Contract)
};

// Inner(label) cells form U, Letter cells the body, Outer(label) cells V.
// labels[id] names the color letter of a label id (id 0 unused).
struct SwitchState {
    Board board;
    std::vector<ColorLetter> labels;
    std::vector<int> rank;  // label ids, increasing
    std::vector<SwitchEvent> journal;
};

struct TraceStep {
    std::string stage;  // "I.2", "I.3", "rect", "V", "II", "III", "IV"
    std::string text;
};
using Trace = std::vector<TraceStep>;

// rows joined by '/', inner/outer labels and the puncture by color names, vacant cells dropped
std::string render_state(const Board& b, const std::vector<ColorLetter>& labels, int punct_label = 0);
// box-framed rendering: every non-letter cell of the R x W box prints as '*'
std::string render_framed(const Board& b, int R, int W);

// straight KN tableau: complement, rotate by pi, rectify
Tableau evacuation_C(const Tableau& t, Trace* trace = nullptr);
// arect . evac . rect on a skew KN tableau, through the colorful engine with greens only
Tableau reversal_C(const Tableau& t, Trace* trace = nullptr);
// reverses a skew band over C_n that may contain non-admissible columns (pre-contracted with purples)
Tableau colorful_reversal(const Tableau& band, Trace* trace = nullptr);
// xi_[j,n] by switching, always through the colorful engine (also for j = n)
Tableau colorful_partial_reversal(const Tableau& t, int j, Trace* trace = nullptr);
// xi_[j,n]; j = n goes to the reflection xi_n
Tableau partial_reversal_Cjn(const Tableau& t, int j);

// Kashiwara reflection on i-strings (types A and C)
Tableau reflection_xi(const Tableau& t, int i);

// xi_[p,q] of C_n: q = n by switching, q < n by virtualization (straight shapes only)
Tableau partial_xi_C(const Tableau& t, int p, int q);
// q^C_[1,i]; q_[1,0] = id
Tableau bk_q_C(const Tableau& t, int i);
// q^C_[j,k-1] = q_[1,k-1] q_[1,k-j] q_[1,k-1]
Tableau bk_q_interval_C(const Tableau& t, int j, int k);
// t_i^{C_n}, i = 1..2n-1
Tableau symplectic_bk(const Tableau& t, int i);

// crystal characterisation: climb to the J-highest vertex with e's, descend the lowest with the mirrored e's.
// Works for both types; colors J = [p,q].
Tableau xi_oracle(const Tableau& t, int p, int q);

}  // namespace kn
