#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "rcg/permutation.hpp"
#include "rcg/polynomial.hpp"

namespace rcg {

struct Crossing {
    int row = 0;
    int col = 0;
    auto operator<=>(const Crossing&) const = default;
};

// Finite set of crossing cells (i,j), i,j >= 1, drawn inside an ambient
// window N (all crossings satisfy i+j-1 <= N-1).  The value itself does not
// certify reducedness; is_reduced() decides, and enumerate_rc() only emits
// reduced graphs.  Equality compares crossing sets; the window is display
// metadata preserved by serialize/parse.
class RcGraph {
public:
    RcGraph() : window_(1) {}
    RcGraph(std::vector<Crossing> crossings, int window);

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int window() const { return window_; }
    std::size_t size() const { return crossings_.size(); }
    bool empty() const { return crossings_.empty(); }
    bool contains(int row, int col) const;

    bool operator==(const RcGraph& o) const { return crossings_ == o.crossings_; }
    bool operator!=(const RcGraph& o) const { return !(*this == o); }
    bool operator<(const RcGraph& o) const { return crossings_ < o.crossings_; }

private:
    std::vector<Crossing> crossings_;  // sorted by (row, col), unique
    int window_;
};

// Weak composition (k_1,...,k_r); parts are row insertion counts.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p);

    int rows() const { return static_cast<int>(parts.size()); }
    int total() const;
    bool operator==(const Composition& o) const { return parts == o.parts; }
    bool operator!=(const Composition& o) const { return !(*this == o); }
};

// Reading order: rows top to bottom, right to left inside a row; the crossing
// at (i,j) contributes letter i+j-1 and row number i.
std::pair<Word, std::vector<int>> word_and_sequence(const RcGraph& d);
Word word_of(const RcGraph& d);

// Product of the simple reflections of the reading word.  Defined for any
// crossing set, reduced or not.
Permutation permutation_of(const RcGraph& d);

bool is_reduced(const RcGraph& d);

// prod_{(i,j) in D} x_i
MultiPoly monomial_of(const RcGraph& d);

// Left-justified rows of Lehmer-code lengths: row i holds (i,1)..(i,c_i).
RcGraph bottom_graph(const Permutation& w);

struct LadderMove {
    int row = 0;   // source crossing
    int col = 0;
    int size = 0;  // number of fully doubled rows between source and target
    auto operator<=>(const LadderMove&) const = default;
};

// All applicable ladder moves (at most one per crossing: the doubled column
// pair above (i,j) either ends at an empty pair, giving the move, or is
// blocked).  Each move deletes (i,j) and inserts (i-size-1, j+1).
std::vector<std::pair<LadderMove, RcGraph>> ladder_moves(const RcGraph& d);

// RC(w): closure of bottom_graph(w) under ladder moves, sorted canonically.
std::vector<RcGraph> enumerate_rc(const Permutation& w);

// Independent enumeration: reduced words x compatible sequences
// (a weakly increasing, a_i <= word_i, strictly increasing across ascents).
std::vector<RcGraph> enumerate_rc_by_words(const Permutation& w);

// Sum of x^D over RC(w): the graph-side Schubert polynomial.
MultiPoly schubert_from_graphs(const Permutation& w);

// All weak compositions of m into r parts, first part descending.
std::vector<Composition> compositions(int m, int r);

// The unique member of RC(grassmannian_permutation(r, m)) whose row multiset
// is comp (k_s crossings in row s), found by enumeration.
RcGraph grassmannian_graph(int r, const Composition& comp);

// Full-grid strand tracing on an n-by-n board.  Each cell is a crossing or a
// bump tile; a west entrant exits north at a bump and east at a crossing, a
// south entrant exits east at a bump and north at a crossing.  Strands are
// labelled by their starting row; row n receives label n+j from the south
// boundary of column j (everything below the board is empty).
class StrandGrid {
public:
    explicit StrandGrid(int n);
    StrandGrid(const RcGraph& d, int n);

    int size() const { return n_; }
    bool crossing(int i, int j) const { return cross_[idx(i, j)]; }
    void set_crossing(int i, int j, bool value);

    int west_label(int i, int j) const;   // strand entering (i,j) from the west
    int south_label(int i, int j) const;  // strand entering (i,j) from the south

    // Column where strand exits north from row `row`, or 0 if absent there.
    int north_exit_column(int row, int strand) const;

    Permutation permutation() const;      // read off the north boundary
    std::vector<Crossing> crossing_list() const;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }
    int north_out(int i, int j) const;
    int east_out(int i, int j) const;
    void relabel() const;

    int n_;
    std::vector<char> cross_;
    mutable std::vector<int> west_, south_;
    mutable bool dirty_ = true;
};

// (west, south) strand labels of cell (i,j); the tracing oracle behind the
// insertion algorithms.
std::pair<int, int> strand_labels(const RcGraph& d, int i, int j);

// Tracing-based permutation; must always agree with permutation_of().
Permutation permutation_by_tracing(const RcGraph& d);

// {"window":N,"crossings":[[i,j],...]} with crossings sorted by (row, col).
std::string serialize(const RcGraph& d);
RcGraph parse_rcgraph(const std::string& text);  // throws std::invalid_argument

// Header of column indices, a left gutter of row indices, '+' at crossings
// and '.' elsewhere, N lines of N cells.
std::string render(const RcGraph& d);

} // namespace rcg
