#pragma once
// Symplectic jeu de taquin on a marked board. Type A runs through the same
// engine with identity splits and no contractions.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "kn/tableau.hpp"

namespace kn {

enum class Mark : std::uint8_t { None, Letter, Inner, Outer, Punct };

struct Cell {
    Mark m = Mark::None;
    int v = 0;  // letter, or a label for Inner/Outer markers
    bool operator==(const Cell& o) const { return m == o.m && v == o.v; }
};

struct Board {
    int n = 0;
    bool typeA = false;
    std::vector<std::vector<Cell>> g;

    int R() const { return (int)g.size(); }
    int W() const;
    Cell get(int r, int c) const {
        if (r < 0 || c < 0 || r >= R() || c >= (int)g[r].size()) return {};
        return g[r][c];
    }
    Cell& ref(int r, int c);
    bool body(int r, int c) const {
        Mark m = get(r, c).m;
        return m == Mark::Letter || m == Mark::Punct;
    }
    // rows of the body (letters and puncture) of column c, checked contiguous
    std::vector<int> body_rows(int c) const;
    Column letters(int c) const;
    bool operator==(const Board& o) const { return n == o.n && typeA == o.typeA && g == o.g; }
};

Board to_board(const Tableau& t);
// Inner markers become inner cells; Outer/None cells are dropped. Throws if not a skew shape.
Tableau to_tableau(const Board& b);

struct Contraction {
    int col = -1, top = -1, bottom = -1;
};

struct SlideEvent {
    int sr = -1, sc = -1;  // start cell
    int er = -1, ec = -1;  // exit cell
    std::optional<Contraction> con;
};

// split helpers honouring the type and the non-admissible fallback (letters are their own split)
Split board_split(const Column& c, int n, bool typeA);

// sees the board and the puncture position
using StepObserver = std::function<void(const Board&, int, int)>;

// one elementary step of the puncture at (r,c). Returns false when neither alpha nor beta exists.
// On a B.2 contraction the top cell becomes Inner(0), the bottom cell None; con is filled.
// pre_contract, if given, sees the non-admissible column before it is contracted.
bool slide_step(Board& b, int& r, int& c, std::optional<Contraction>& con, bool allow_contract,
                const StepObserver* pre_contract = nullptr);
// complete forward slide from (r,c), which is turned into the puncture; exit cell left as None
SlideEvent board_slide(Board& b, int r, int c, bool allow_contract = true, const StepObserver* obs = nullptr);
// reverse slide from the outer cell (r,c) via rotation; returns the cell where it stops (left as None).
// obs sees unrotated snapshots.
std::pair<int, int> board_reverse_slide(Board& b, int r, int c, const StepObserver* obs = nullptr);
// R3 contraction of column col (top -> Inner(0), bottom -> None)
Contraction board_contract(Board& b, int col);
// inverse: refill rows top..bottom of col with the unique dilation of its letters
void board_dilate(Board& b, int col, int top, int bottom);
// rotate by pi inside an R x W box and complement letters
Board rotate(const Board& b, int R, int W);

// full-board consistency check used in reference mode
void set_reference_mode(bool on);
bool reference_mode();

// --- tableau level -------------------------------------------------------
Tableau elementary_slide(const Tableau& punctured);
Tableau complete_slide(const Tableau& t, int r, int c);
Tableau rectify(const Tableau& t);
// reverse slide into the outer cell (r,c); the vacated cell joins the inner shape.
// A column may lose its top cell to the inner shape and its bottom cell to the outside.
Tableau reverse_slide(const Tableau& t, int r, int c);

struct Rectified {
    Tableau rect;
    Board board;  // final board, exits marked Outer with the slide index
    std::vector<SlideEvent> journal;
};
Rectified rectify_recorded(const Tableau& t);
Tableau anti_rectify(const Rectified& r);
// replay a journal backwards on another straight tableau of the same shape
Tableau anti_rectify(const Tableau& straight, const Rectified& r);

// reduced SJDT on [+-j, n]
Tableau shift_down(const Tableau& t, int j);
Tableau shift_up(const Tableau& t, int j);
Tableau reduced_slide_j(const Tableau& punctured, int j);
Tableau rectify_j(const Tableau& t, int j);

}  // namespace kn
