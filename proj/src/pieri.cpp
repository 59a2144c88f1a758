#include "rcg/pieri.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "rcg/errors.hpp"

namespace rcg::pieri {

bool Ledger::has_b(int b) const {
    for (const Pair& p : pairs)
        if (p.b == b) return true;
    return false;
}

std::size_t Ledger::index_of_b(int b) const {
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].b == b) return i;
    throw GuaranteeError("ledger: no pair with b = " + std::to_string(b));
}

void Ledger::insert_case1(int s, int t) {
    if (has_b(t))
        throw GuaranteeError("ledger: strand " + std::to_string(t) +
                             " is already a b value");
    auto it = pairs.begin();
    while (it != pairs.end() && it->a <= s) ++it;
    pairs.insert(it, Pair{s, t});
}

void Ledger::insert_case2(std::size_t i, int t) {
    if (i >= pairs.size())
        throw GuaranteeError("ledger: pair index out of range");
    if (has_b(t))
        throw GuaranteeError("ledger: strand " + std::to_string(t) +
                             " is already a b value");
    pairs.insert(pairs.begin() + static_cast<std::ptrdiff_t>(i),
                 Pair{pairs[i].a, t});
}

void Ledger::erase(std::size_t i) {
    if (i >= pairs.size())
        throw GuaranteeError("ledger: pair index out of range");
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(i));
}

void Ledger::check_invariants(int r) const {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].a < 1 || pairs[i].a > r || pairs[i].b <= r)
            throw GuaranteeError("ledger: pair violates a <= r < b");
        if (i > 0 && pairs[i - 1].a > pairs[i].a)
            throw GuaranteeError("ledger: a values are not weakly increasing");
        for (std::size_t k = 0; k < i; ++k)
            if (pairs[k].b == pairs[i].b)
                throw GuaranteeError("ledger: duplicate b value");
    }
}

Permutation Ledger::apply_to(const Permutation& w) const {
    Permutation out = w;
    for (const Pair& p : pairs) out = right_transpose(out, p.a, p.b);
    return out;
}

std::string Ledger::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) os << ',';
        os << '(' << pairs[i].a << ',' << pairs[i].b << ')';
    }
    return os.str();
}

namespace {

std::string pair_text(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string cell_text(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Shared mutable state of the three ledger algorithms.
struct Engine {
    StrandGrid grid;
    Ledger ledger;
    int r;
    Permutation base;  // permutation the ledger is rooted at
    Options opts;
    int row = 0;             // row currently being processed
    bool check_order = false;  // in-row b-strand ordering (insert only)
    bool rectifying = false;   // ordering is suspended while a row is repaired

    Engine(StrandGrid g, Ledger l, int r_, Permutation base_, Options o)
        : grid(std::move(g)), ledger(std::move(l)), r(r_),
          base(std::move(base_)), opts(std::move(o)) {}

    int board() const { return grid.size(); }

    void emit(const std::string& line) const {
        if (opts.trace) opts.trace(line);
    }

    void check_state() {
        if (!opts.check_steps) return;
        ledger.check_invariants(r);
        const Permutation expected = ledger.apply_to(base);
        if (grid.permutation() != expected)
            throw GuaranteeError("ledger/permutation identity violated");
        if (check_order && !rectifying) check_run_order();
    }

    // Inside the row being processed, the b strands of every equal-a run must
    // appear west to east in ledger order, all west of strand a when strand a
    // reaches this row.  The claim holds once the row is repaired, not while
    // doubled crossings are still queued for removal, so callers skip it for
    // the duration of a rectification pass.
    void check_run_order() const {
        if (row < 1) return;
        std::size_t begin = 0;
        while (begin < ledger.size()) {
            std::size_t end = begin + 1;
            while (end < ledger.size() &&
                   ledger.pairs[end].a == ledger.pairs[begin].a)
                ++end;
            int prev_col = 0;
            for (std::size_t k = begin; k < end; ++k) {
                const int col = grid.north_exit_column(row, ledger.pairs[k].b);
                if (col == 0)
                    throw GuaranteeError("run order: strand b " +
                                         std::to_string(ledger.pairs[k].b) +
                                         " missing from row " + std::to_string(row));
                if (col <= prev_col)
                    throw GuaranteeError("run order: b strands out of order in row " +
                                         std::to_string(row));
                prev_col = col;
            }
            const int a = ledger.pairs[begin].a;
            if (a >= row) {
                const int col_a = grid.north_exit_column(row, a);
                if (col_a == 0 || col_a <= prev_col)
                    throw GuaranteeError("run order: strand a " + std::to_string(a) +
                                         " not east of its b strands in row " +
                                         std::to_string(row));
            }
            begin = end;
        }
    }

    // Addition test at a bump (forward direction: t enters from the south).
    // Returns 0 (no), 1 or 2.
    int classify_forward_bump(int i, int j) const {
        const int u = grid.west_label(i, j);
        const int v = grid.south_label(i, j);
        if (v <= r || ledger.has_b(v)) return 0;
        if (u <= r) return 1;
        if (ledger.has_b(u)) return 2;
        return 0;
    }

    // Addition test at a bump (inverse direction: t enters from the west).
    int classify_inverse_bump(int i, int j) const {
        const int u = grid.west_label(i, j);
        const int v = grid.south_label(i, j);
        if (u <= r || ledger.has_b(u)) return 0;
        if (v <= r) return 1;
        if (ledger.has_b(v)) return 2;
        return 0;
    }

    // Removal test at a crossing: west strand is some b_i whose pair is to be
    // removed; the south strand is a_i itself or a sibling b_j with a_j = a_i.
    std::optional<std::size_t> match_west_removal(int i, int j) const {
        const int u = grid.west_label(i, j);
        const int v = grid.south_label(i, j);
        if (!ledger.has_b(u)) return std::nullopt;
        const std::size_t iu = ledger.index_of_b(u);
        if (v == ledger.pairs[iu].a) return iu;
        if (ledger.has_b(v) &&
            ledger.pairs[ledger.index_of_b(v)].a == ledger.pairs[iu].a)
            return iu;
        return std::nullopt;
    }

    // Removal test at a crossing: the pair of the south strand is removed.
    std::optional<std::size_t> match_south_removal(int i, int j) const {
        const int u = grid.west_label(i, j);
        const int v = grid.south_label(i, j);
        if (!ledger.has_b(v)) return std::nullopt;
        const std::size_t iv = ledger.index_of_b(v);
        if (u == ledger.pairs[iv].a) return iv;
        if (ledger.has_b(u) &&
            ledger.pairs[ledger.index_of_b(u)].a == ledger.pairs[iv].a)
            return iv;
        return std::nullopt;
    }

    void add_forward(int i, int j, int kase) {
        const int u = grid.west_label(i, j);
        const int v = grid.south_label(i, j);
        int a = 0;
        if (kase == 1) {
            a = u;
            ledger.insert_case1(u, v);
        } else {
            const std::size_t iu = ledger.index_of_b(u);
            a = ledger.pairs[iu].a;
            ledger.insert_case2(iu, v);
        }
        grid.set_crossing(i, j, true);
        emit("ADD " + cell_text(i, j) + " pair=" + pair_text(a, v) +
             " case=" + std::to_string(kase));
        check_state();
    }

    void add_inverse(int i, int j, int kase) {
        const int u = grid.west_label(i, j);
        const int v = grid.south_label(i, j);
        int a = 0;
        if (kase == 1) {
            a = v;
            ledger.insert_case1(v, u);
        } else {
            const std::size_t iv = ledger.index_of_b(v);
            a = ledger.pairs[iv].a;
            ledger.insert_case2(iv, u);
        }
        grid.set_crossing(i, j, true);
        emit("ADD " + cell_text(i, j) + " pair=" + pair_text(a, u) +
             " case=" + std::to_string(kase));
        check_state();
    }

    Ledger::Pair remove(int i, int j, std::size_t pair_index) {
        const Ledger::Pair p = ledger.pairs[pair_index];
        grid.set_crossing(i, j, false);
        ledger.erase(pair_index);
        emit("DEL " + cell_text(i, j) + " pair=" + pair_text(p.a, p.b));
        check_state();
        return p;
    }

    RcGraph snapshot() const { return RcGraph(grid.crossing_list(), board()); }
};

// Rightmost admissible bump in the row; a hit on the last board column means
// the margin was too small.
void insert_one(Engine& e, int row) {
    for (int j = e.board() - row; j >= 1; --j) {
        if (e.grid.crossing(row, j)) continue;
        const int kase = e.classify_forward_bump(row, j);
        if (kase == 0) continue;
        if (j == e.board() - row)
            throw GuaranteeError("insertion hit the board margin");
        e.add_forward(row, j, kase);
        return;
    }
    throw GuaranteeError("no admissible bump in row " + std::to_string(row));
}

void rectify_row(Engine& e, int row) {
    e.rectifying = true;
    int j = 1;
    while (j <= e.board() - row) {
        if (!e.grid.crossing(row, j)) {
            ++j;
            continue;
        }
        const auto pair_index = e.match_west_removal(row, j);
        if (!pair_index) {
            ++j;
            continue;
        }
        e.remove(row, j, *pair_index);
        bool landed = false;
        for (int j2 = j - 1; j2 >= 1; --j2) {
            if (e.grid.crossing(row, j2)) continue;
            const int kase = e.classify_forward_bump(row, j2);
            if (kase == 0) continue;
            e.add_forward(row, j2, kase);
            landed = true;
            break;
        }
        if (!landed)
            throw GuaranteeError("rectification found no landing site in row " +
                                 std::to_string(row));
        ++j;  // resume east of the removed position
    }
    e.rectifying = false;
    e.check_state();
}

RcGraph finish_graph(const std::vector<Crossing>& crossings,
                     const Permutation& expected) {
    RcGraph out(crossings, std::max(expected.trimmed_window(), 1));
    if (permutation_of(out) != expected)
        throw GuaranteeError("output graph has the wrong permutation");
    if (!is_reduced(out))
        throw GuaranteeError("output graph is not reduced");
    return out;
}

} // namespace

InsertResult insert(const RcGraph& d, int r, const Composition& comp,
                    const Options& opts) {
    if (r < 1) throw std::invalid_argument("insert: need r >= 1");
    if (comp.rows() != r)
        throw std::invalid_argument("insert: composition must have exactly r parts");
    if (!is_reduced(d))
        throw std::invalid_argument("insert: input graph is not reduced");

    const Permutation w = permutation_of(d);
    const int m = comp.total();
    int first_row = 0;
    for (int s = r; s >= 1; --s) {
        if (comp.parts[static_cast<std::size_t>(s - 1)] > 0) {
            first_row = s;
            break;
        }
    }
    if (first_row == 0) return {d, Ledger{}};

    const int board = std::max(d.window(), r) + m + 2;
    Engine e(StrandGrid(d, board), Ledger{}, r, w, opts);
    e.check_order = true;

    for (int row = first_row; row >= 1; --row) {
        e.row = row;
        e.emit("ROW " + std::to_string(row));
        if (row != first_row) rectify_row(e, row);
        for (int k = 0; k < comp.parts[static_cast<std::size_t>(row - 1)]; ++k)
            insert_one(e, row);
        e.check_state();
        if (opts.on_row_done) opts.on_row_done(e.snapshot(), e.ledger, row);
    }

    const Permutation wp = e.ledger.apply_to(w);
    RcGraph out = finish_graph(e.grid.crossing_list(), wp);
    if (out.size() != d.size() + static_cast<std::size_t>(m))
        throw GuaranteeError("insert: crossing count did not grow by m");
    return {std::move(out), std::move(e.ledger)};
}

RcGraph rollback(const RcGraph& working, const Ledger& ledger, int start_row,
                 const Options& opts) {
    if (start_row < 1) throw std::invalid_argument("rollback: need start_row >= 1");
    int r_eff = 1;
    for (const auto& p : ledger.pairs) r_eff = std::max(r_eff, p.a);

    // Root permutation of the state: peel the ledger off from the right.
    Permutation base = permutation_of(working);
    for (auto it = ledger.pairs.rbegin(); it != ledger.pairs.rend(); ++it)
        base = right_transpose(base, it->a, it->b);

    Engine e(StrandGrid(working, working.window()), ledger, r_eff, base, opts);
    for (int row = start_row; row < e.board() && !e.ledger.empty(); ++row) {
        e.row = row;
        e.emit("ROW " + std::to_string(row));
        for (int j = e.board() - row; j >= 1 && !e.ledger.empty(); --j) {
            if (!e.grid.crossing(row, j)) continue;
            if (const auto pair_index = e.match_south_removal(row, j))
                e.remove(row, j, *pair_index);
        }
    }
    if (!e.ledger.empty())
        throw GuaranteeError("rollback: ledger never emptied");
    return finish_graph(e.grid.crossing_list(), base);
}

InvertResult invert(const RcGraph& dp, const Permutation& w, int r,
                    const Ledger& ledger, const Options& opts) {
    if (r < 1) throw std::invalid_argument("invert: need r >= 1");
    if (!is_reduced(dp))
        throw std::invalid_argument("invert: input graph is not reduced");
    try {
        ledger.check_invariants(r);
    } catch (const GuaranteeError& e) {
        throw std::invalid_argument(std::string("invert: bad ledger: ") + e.what());
    }
    if (permutation_of(dp) != ledger.apply_to(w))
        throw std::invalid_argument(
            "invert: ledger does not connect w to the graph's permutation");

    const int board = std::max(dp.window(), r) + 2;
    Engine e(StrandGrid(dp, board), ledger, r, w, opts);
    std::vector<int> counts(static_cast<std::size_t>(r), 0);

    for (int row = 1; row < e.board() && !e.ledger.empty(); ++row) {
        e.row = row;
        e.emit("ROW " + std::to_string(row));
        for (int j = e.board() - row; j >= 1 && !e.ledger.empty(); --j) {
            if (!e.grid.crossing(row, j)) continue;
            const auto pair_index = e.match_south_removal(row, j);
            if (!pair_index) continue;
            e.remove(row, j, *pair_index);
            // The displaced crossing, if any, re-enters east of the removal.
            bool landed = false;
            for (int j2 = j + 1; j2 <= e.board() - row; ++j2) {
                if (e.grid.crossing(row, j2)) continue;
                const int kase = e.classify_inverse_bump(row, j2);
                if (kase == 0) continue;
                if (j2 == e.board() - row)
                    throw GuaranteeError("inverse insertion hit the board margin");
                e.add_inverse(row, j2, kase);
                landed = true;
                break;
            }
            if (!landed) {
                if (row > r)
                    throw GuaranteeError("invert: recorded row " +
                                         std::to_string(row) + " exceeds r");
                counts[static_cast<std::size_t>(row - 1)] += 1;
            }
        }
    }
    if (!e.ledger.empty())
        throw GuaranteeError("invert: ledger never emptied");
    RcGraph out = finish_graph(e.grid.crossing_list(), w);
    return {std::move(out), Composition(std::move(counts))};
}

InvertResult invert(const RcGraph& dp, const Permutation& w, int r,
                    const Options& opts) {
    const Permutation wp = permutation_of(dp);
    const int m = length(wp) - length(w);
    if (m < 0)
        throw std::invalid_argument("invert: graph permutation is shorter than w");
    for (const Expansion& entry : expand(w, r, m)) {
        if (entry.target == wp) return invert(dp, w, r, entry.ledger, opts);
    }
    throw std::invalid_argument(
        "invert: graph permutation is not an admissible target of w");
}

namespace {

void gather_a_sequences(int r, int m, int low, std::vector<int>& acc,
                        std::vector<std::vector<int>>& out) {
    if (static_cast<int>(acc.size()) == m) {
        out.push_back(acc);
        return;
    }
    for (int a = low; a <= r; ++a) {
        acc.push_back(a);
        gather_a_sequences(r, m, a, acc, out);
        acc.pop_back();
    }
}

// Every ledger prefix must raise the length by exactly one.  The total
// length condition alone is too weak: it admits targets the insertion never
// produces (smallest case w=[1,3,4,2], r=2, m=2, ledger (1,3),(2,4), where
// the first step overshoots by three and the second drops back).
bool prefixes_saturated(const Permutation& w, const Ledger& ledger) {
    Permutation cur = w;
    int len = length(cur);
    for (const auto& p : ledger.pairs) {
        cur = right_transpose(cur, p.a, p.b);
        if (length(cur) != ++len) return false;
    }
    return true;
}

} // namespace

std::vector<Expansion> expand(const Permutation& w, int r, int m) {
    if (r < 1 || m < 0) throw std::invalid_argument("expand: need r >= 1, m >= 0");
    const int target_length = length(w) + m;
    const int max_b = std::max(w.trimmed_window(), r) + m;

    std::vector<std::vector<int>> a_seqs;
    {
        std::vector<int> acc;
        gather_a_sequences(r, m, 1, acc, a_seqs);
    }

    std::vector<Expansion> out;
    std::vector<int> b_seq;
    std::vector<char> used(static_cast<std::size_t>(max_b + 1), 0);

    auto consider = [&](const std::vector<int>& a_seq) {
        Ledger ledger;
        for (int k = 0; k < m; ++k)
            ledger.pairs.push_back({a_seq[static_cast<std::size_t>(k)],
                                    b_seq[static_cast<std::size_t>(k)]});
        const Permutation wp = ledger.apply_to(w);
        if (length(wp) != target_length) return;
        if (!prefixes_saturated(w, ledger)) return;
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                if (ledger.pairs[static_cast<std::size_t>(i)].a !=
                    ledger.pairs[static_cast<std::size_t>(j)].a)
                    continue;
                const int bi = ledger.pairs[static_cast<std::size_t>(i)].b;
                const int bj = ledger.pairs[static_cast<std::size_t>(j)].b;
                const int ai = ledger.pairs[static_cast<std::size_t>(i)].a;
                if (!(wp(bi) < wp(bj) && wp(bj) < wp(ai))) return;
            }
        }
        for (const Expansion& seen : out) {
            if (seen.target == wp) {
                if (seen.ledger == ledger) return;
                throw AmbiguityError("expand: two admissible ledgers for " +
                                     to_one_line_string(wp));
            }
        }
        out.push_back({wp, std::move(ledger)});
    };

    auto rec = [&](auto&& self, const std::vector<int>& a_seq) -> void {
        if (static_cast<int>(b_seq.size()) == m) {
            consider(a_seq);
            return;
        }
        for (int b = r + 1; b <= max_b; ++b) {
            if (used[static_cast<std::size_t>(b)]) continue;
            used[static_cast<std::size_t>(b)] = 1;
            b_seq.push_back(b);
            self(self, a_seq);
            b_seq.pop_back();
            used[static_cast<std::size_t>(b)] = 0;
        }
    };
    for (const auto& a_seq : a_seqs) rec(rec, a_seq);

    std::sort(out.begin(), out.end(), [](const Expansion& x, const Expansion& y) {
        return x.target < y.target;
    });
    return out;
}

bool is_admissible(const Permutation& w, const Permutation& wp, int r,
                   const Ledger& ledger) {
    const int m = static_cast<int>(ledger.size());
    try {
        ledger.check_invariants(r);
    } catch (const GuaranteeError&) {
        return false;
    }
    if (ledger.apply_to(w) != wp) return false;
    if (length(wp) != length(w) + m) return false;
    if (!prefixes_saturated(w, ledger)) return false;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const auto& pi = ledger.pairs[static_cast<std::size_t>(i)];
            const auto& pj = ledger.pairs[static_cast<std::size_t>(j)];
            if (pi.a != pj.a) continue;
            if (!(wp(pi.b) < wp(pj.b) && wp(pj.b) < wp(pi.a))) return false;
        }
    }
    return true;
}

} // namespace rcg::pieri
