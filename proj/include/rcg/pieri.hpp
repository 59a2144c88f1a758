#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "rcg/permutation.hpp"
#include "rcg/rcgraph.hpp"

namespace rcg::pieri {

// Ordered ledger of transposition pairs (a_i, b_i) maintained by the
// insertion algorithms: a's weakly increasing, b's distinct, a <= r < b, and
// at every moment permutation_of(graph) = w * t_{a_1 b_1} * ... * t_{a_l b_l}.
struct Ledger {
    struct Pair {
        int a = 0;
        int b = 0;
        bool operator==(const Pair& o) const { return a == o.a && b == o.b; }
    };

    std::vector<Pair> pairs;

    Ledger() = default;
    Ledger(std::initializer_list<Pair> init) : pairs(init) {}

    std::size_t size() const { return pairs.size(); }
    bool empty() const { return pairs.empty(); }
    bool operator==(const Ledger& o) const { return pairs == o.pairs; }
    bool operator!=(const Ledger& o) const { return !(*this == o); }

    bool has_b(int b) const;
    std::size_t index_of_b(int b) const;  // precondition: has_b(b)

    // Case-1 rule: new pair goes after every pair with a-value <= s, i.e. at
    // the end of the run of equal a's.  Throws if t is already a b.
    void insert_case1(int s, int t);

    // Case-2 rule: (pairs[i].a, t) goes immediately before position i.
    // Throws if t is already a b.
    void insert_case2(std::size_t i, int t);

    void erase(std::size_t i);

    // a's weakly increasing, b's distinct, a <= r < b for every pair.
    void check_invariants(int r) const;  // throws GuaranteeError

    Permutation apply_to(const Permutation& w) const;  // w * prod t_{a_i b_i}
    std::string str() const;                           // "(2,3),(2,4)"
};

struct Options {
    // Assert the ledger/permutation identity after every single crossing
    // addition or removal, plus the in-row strand ordering outside
    // rectification passes (the ordering is what rectification restores, so
    // it is only claimed once a row's repairs are complete).
    bool check_steps = false;

    // Receives one line per event: "ROW l", "ADD (i,j) pair=(a,b) case=K",
    // "DEL (i,j) pair=(a,b)".
    std::function<void(const std::string&)> trace;

    // Called after each row of insert() finishes (graph rectified through
    // `row`); used to exercise rollback() on mid-run states.
    std::function<void(const RcGraph&, const Ledger&, int row)> on_row_done;
};

struct InsertResult {
    RcGraph graph;
    Ledger ledger;
};

// Generalized Schensted insertion: inserts comp.parts[s-1] crossings into row
// s for s = 1..r, processing rows from the lowest non-empty part upward and
// rectifying each row before inserting into it.  D must be reduced; the
// result is the reduced graph of permutation_of(D) * prod t (ledger order).
InsertResult insert(const RcGraph& d, int r, const Composition& comp,
                    const Options& opts = {});

// Removes every ledger pair's crossing from a mid-run state (rectified
// through start_row), scanning rows downward and right to left; returns the
// reduced graph of the base permutation.
RcGraph rollback(const RcGraph& working, const Ledger& ledger, int start_row,
                 const Options& opts = {});

struct InvertResult {
    RcGraph graph;
    Composition comp;
};

// Inverse insertion: consumes the ledger top row down, right to left,
// re-adding displaced crossings eastward; the rows of removals without a
// re-add form the recovered composition.
InvertResult invert(const RcGraph& dp, const Permutation& w, int r,
                    const Ledger& ledger, const Options& opts = {});

// Convenience: derives the ledger from expand(w, r, m) by matching
// permutation_of(dp); m = length(permutation_of(dp)) - length(w).
InvertResult invert(const RcGraph& dp, const Permutation& w, int r,
                    const Options& opts = {});

struct Expansion {
    Permutation target;
    Ledger ledger;
};

// All admissible (w', ledger): b's distinct and > r, a's weakly increasing
// and <= r, length(w') = length(w) + m, and w'(b_i) < w'(b_j) < w'(a_i) for
// i < j inside an equal-a run.  One entry per w'; a second admissible ledger
// for the same w' raises AmbiguityError.
std::vector<Expansion> expand(const Permutation& w, int r, int m);

bool is_admissible(const Permutation& w, const Permutation& wp, int r,
                   const Ledger& ledger);

} // namespace rcg::pieri
