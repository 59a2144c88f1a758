#include "rcg/rcgraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rcg/errors.hpp"

namespace rcg {

RcGraph::RcGraph(std::vector<Crossing> crossings, int window)
    : crossings_(std::move(crossings)), window_(window) {
    std::sort(crossings_.begin(), crossings_.end());
    for (std::size_t k = 0; k < crossings_.size(); ++k) {
        const auto& c = crossings_[k];
        if (c.row < 1 || c.col < 1)
            throw std::invalid_argument("rc-graph: crossing coordinates must be >= 1");
        if (k > 0 && crossings_[k - 1] == c)
            throw std::invalid_argument("rc-graph: duplicate crossing (" +
                                        std::to_string(c.row) + "," +
                                        std::to_string(c.col) + ")");
        window_ = std::max(window_, c.row + c.col);  // keep i+j-1 <= window-1
    }
    window_ = std::max(window_, 1);
}

bool RcGraph::contains(int row, int col) const {
    return std::binary_search(crossings_.begin(), crossings_.end(),
                              Crossing{row, col});
}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty())
        throw std::invalid_argument("composition: need at least one part");
    for (int k : parts)
        if (k < 0) throw std::invalid_argument("composition: negative part");
}

int Composition::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::pair<Word, std::vector<int>> word_and_sequence(const RcGraph& d) {
    // crossings_ is sorted by (row, col); walk each row right to left
    Word word;
    std::vector<int> seq;
    const auto& cr = d.crossings();
    std::size_t row_begin = 0;
    while (row_begin < cr.size()) {
        std::size_t row_end = row_begin;
        while (row_end < cr.size() && cr[row_end].row == cr[row_begin].row) ++row_end;
        for (std::size_t k = row_end; k-- > row_begin;) {
            word.push_back(cr[k].row + cr[k].col - 1);
            seq.push_back(cr[k].row);
        }
        row_begin = row_end;
    }
    return {std::move(word), std::move(seq)};
}

Word word_of(const RcGraph& d) { return word_and_sequence(d).first; }

Permutation permutation_of(const RcGraph& d) {
    return word_to_permutation(word_of(d));
}

bool is_reduced(const RcGraph& d) {
    return static_cast<int>(d.size()) == length(permutation_of(d));
}

MultiPoly monomial_of(const RcGraph& d) {
    Exponents e;
    for (const auto& c : d.crossings()) {
        if (static_cast<std::size_t>(c.row) > e.size())
            e.resize(static_cast<std::size_t>(c.row), 0);
        e[static_cast<std::size_t>(c.row - 1)] += 1;
    }
    return MultiPoly::monomial(std::move(e));
}

RcGraph bottom_graph(const Permutation& w) {
    const auto code = lehmer_code(w);
    std::vector<Crossing> crossings;
    for (int i = 1; i <= static_cast<int>(code.size()); ++i)
        for (int j = 1; j <= code[static_cast<std::size_t>(i - 1)]; ++j)
            crossings.push_back({i, j});
    return RcGraph(std::move(crossings), std::max(w.window(), 1));
}

std::vector<std::pair<LadderMove, RcGraph>> ladder_moves(const RcGraph& d) {
    std::vector<std::pair<LadderMove, RcGraph>> out;
    for (const auto& c : d.crossings()) {
        const int i = c.row, j = c.col;
        if (d.contains(i, j + 1)) continue;
        // climb the doubled column pair above (i,j)
        for (int size = 0;; ++size) {
            const int target = i - size - 1;
            if (target < 1) break;
            const bool left = d.contains(target, j);
            const bool right = d.contains(target, j + 1);
            if (!left && !right) {
                std::vector<Crossing> next = d.crossings();
                next.erase(std::find(next.begin(), next.end(), Crossing{i, j}));
                next.push_back({target, j + 1});
                out.emplace_back(LadderMove{i, j, size},
                                 RcGraph(std::move(next), d.window()));
                break;
            }
            if (!(left && right)) break;  // half-filled row blocks the ladder
        }
    }
    return out;
}

std::vector<RcGraph> enumerate_rc(const Permutation& w) {
    const RcGraph start = bottom_graph(w);
    std::set<RcGraph> seen{start};
    std::deque<RcGraph> queue{start};
    while (!queue.empty()) {
        RcGraph d = std::move(queue.front());
        queue.pop_front();
        for (auto& [move, next] : ladder_moves(d)) {
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<RcGraph> enumerate_rc_by_words(const Permutation& w) {
    std::set<RcGraph> out;
    const int window = std::max(w.window(), 1);
    for (const Word& word : reduced_words(w)) {
        const std::size_t p = word.size();
        std::vector<int> alpha(p, 0);
        // DFS over compatible sequences: weakly increasing, alpha_k <= word_k,
        // strictly increasing across ascents of the word.
        std::vector<Crossing> cells(p);
        auto emit = [&]() {
            for (std::size_t k = 0; k < p; ++k)
                cells[k] = {alpha[k], word[k] - alpha[k] + 1};
            auto inserted = out.emplace(cells, window);
            if (!inserted.second)
                throw GuaranteeError("duplicate graph across compatible sequences");
        };
        if (p == 0) {
            out.emplace(std::vector<Crossing>{}, window);
            continue;
        }
        std::size_t k = 0;
        while (true) {
            if (alpha[k] == 0) {
                alpha[k] = k == 0 ? 1
                                  : (word[k - 1] < word[k] ? alpha[k - 1] + 1
                                                           : alpha[k - 1]);
            } else {
                ++alpha[k];
            }
            if (alpha[k] > word[k]) {
                alpha[k] = 0;
                if (k == 0) break;
                --k;
                continue;
            }
            if (k + 1 == p) {
                emit();
            } else {
                ++k;
            }
        }
    }
    return {out.begin(), out.end()};
}

MultiPoly schubert_from_graphs(const Permutation& w) {
    MultiPoly out;
    for (const RcGraph& d : enumerate_rc(w)) out += monomial_of(d);
    return out;
}

std::vector<Composition> compositions(int m, int r) {
    if (m < 0 || r < 1)
        throw std::invalid_argument("compositions: need m >= 0, r >= 1");
    std::vector<Composition> out;
    std::vector<int> parts(static_cast<std::size_t>(r), 0);
    auto rec = [&](auto&& self, int index, int remaining) -> void {
        if (index == r - 1) {
            parts[static_cast<std::size_t>(index)] = remaining;
            out.push_back(Composition(parts));
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            parts[static_cast<std::size_t>(index)] = k;
            self(self, index + 1, remaining - k);
        }
    };
    rec(rec, 0, m);
    return out;
}

RcGraph grassmannian_graph(int r, const Composition& comp) {
    const int m = comp.total();
    if (comp.rows() != r)
        throw std::invalid_argument("grassmannian_graph: composition must have r parts");
    const Permutation sigma = grassmannian_permutation(r, m);
    const RcGraph* found = nullptr;
    const auto graphs = enumerate_rc(sigma);
    for (const RcGraph& d : graphs) {
        std::vector<int> counts(static_cast<std::size_t>(r), 0);
        bool fits = true;
        for (const auto& c : d.crossings()) {
            if (c.row > r) { fits = false; break; }
            counts[static_cast<std::size_t>(c.row - 1)] += 1;
        }
        if (!fits || counts != comp.parts) continue;
        if (found)
            throw GuaranteeError("grassmannian_graph: row multiset is not unique");
        found = &d;
    }
    if (!found)
        throw GuaranteeError("grassmannian_graph: no graph with the given row multiset");
    return *found;
}

StrandGrid::StrandGrid(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("StrandGrid: need n >= 1");
    cross_.assign(static_cast<std::size_t>(n) * n, 0);
}

StrandGrid::StrandGrid(const RcGraph& d, int n) : StrandGrid(n) {
    for (const auto& c : d.crossings()) {
        if (c.row + c.col > n)
            throw std::invalid_argument("StrandGrid: crossing outside the board");
        cross_[idx(c.row, c.col)] = 1;
    }
}

void StrandGrid::set_crossing(int i, int j, bool value) {
    if (i < 1 || j < 1 || i > n_ || j > n_)
        throw std::invalid_argument("StrandGrid: cell outside the board");
    cross_[idx(i, j)] = value ? 1 : 0;
    dirty_ = true;
}

void StrandGrid::relabel() const {
    if (!dirty_) return;
    west_.assign(cross_.size(), 0);
    south_.assign(cross_.size(), 0);
    for (int i = n_; i >= 1; --i) {
        for (int j = 1; j <= n_; ++j) {
            const std::size_t k = idx(i, j);
            west_[k] = j == 1 ? i : east_out(i, j - 1);
            south_[k] = i == n_ ? n_ + j : north_out(i + 1, j);
        }
    }
    dirty_ = false;
}

int StrandGrid::north_out(int i, int j) const {
    const std::size_t k = idx(i, j);
    return cross_[k] ? south_[k] : west_[k];
}

int StrandGrid::east_out(int i, int j) const {
    const std::size_t k = idx(i, j);
    return cross_[k] ? west_[k] : south_[k];
}

int StrandGrid::west_label(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_)
        throw std::invalid_argument("StrandGrid: cell outside the board");
    relabel();
    return west_[idx(i, j)];
}

int StrandGrid::south_label(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_)
        throw std::invalid_argument("StrandGrid: cell outside the board");
    relabel();
    return south_[idx(i, j)];
}

int StrandGrid::north_exit_column(int row, int strand) const {
    relabel();
    for (int j = 1; j <= n_; ++j)
        if (north_out(row, j) == strand) return j;
    return 0;
}

Permutation StrandGrid::permutation() const {
    relabel();
    std::vector<int> line(static_cast<std::size_t>(n_), 0);
    for (int j = 1; j <= n_; ++j) {
        const int s = north_out(1, j);
        if (s <= n_) line[static_cast<std::size_t>(s - 1)] = j;
    }
    for (int i = 1; i <= n_; ++i)
        if (line[static_cast<std::size_t>(i - 1)] == 0)
            throw GuaranteeError("StrandGrid: strand " + std::to_string(i) +
                                 " escaped the board");
    return Permutation::from_one_line(std::move(line));
}

std::vector<Crossing> StrandGrid::crossing_list() const {
    std::vector<Crossing> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (cross_[idx(i, j)]) out.push_back({i, j});
    return out;
}

std::pair<int, int> strand_labels(const RcGraph& d, int i, int j) {
    if (i < 1 || j < 1)
        throw std::invalid_argument("strand_labels: cell coordinates must be >= 1");
    const int n = std::max({d.window(), i, j});
    StrandGrid grid(d, n);
    return {grid.west_label(i, j), grid.south_label(i, j)};
}

Permutation permutation_by_tracing(const RcGraph& d) {
    StrandGrid grid(d, d.window());
    return grid.permutation();
}

std::string serialize(const RcGraph& d) {
    nlohmann::ordered_json j;
    j["window"] = d.window();
    auto& cells = j["crossings"] = nlohmann::ordered_json::array();
    for (const auto& c : d.crossings()) cells.push_back({c.row, c.col});
    return j.dump();
}

RcGraph parse_rcgraph(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("rc-graph parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("window") || !j.contains("crossings"))
        throw std::invalid_argument(
            "rc-graph parse error: expected {\"window\":N,\"crossings\":[[i,j],...]}");
    if (!j["window"].is_number_integer())
        throw std::invalid_argument("rc-graph parse error: window must be an integer");
    const int window = j["window"].get<int>();
    if (window < 1)
        throw std::invalid_argument("rc-graph parse error: window must be >= 1");
    if (!j["crossings"].is_array())
        throw std::invalid_argument("rc-graph parse error: crossings must be an array");
    std::vector<Crossing> crossings;
    for (const auto& cell : j["crossings"]) {
        if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number_integer() ||
            !cell[1].is_number_integer())
            throw std::invalid_argument(
                "rc-graph parse error: each crossing must be a pair [i,j]");
        const int row = cell[0].get<int>();
        const int col = cell[1].get<int>();
        if (row < 1 || col < 1)
            throw std::invalid_argument("rc-graph parse error: coordinates must be >= 1");
        if (row + col - 1 > window - 1)
            throw std::invalid_argument("rc-graph parse error: crossing (" +
                                        std::to_string(row) + "," + std::to_string(col) +
                                        ") outside window " + std::to_string(window));
        crossings.push_back({row, col});
    }
    try {
        return RcGraph(std::move(crossings), window);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("rc-graph parse error: ") + e.what());
    }
}

std::string render(const RcGraph& d) {
    const int n = d.window();
    const int gutter = static_cast<int>(std::to_string(n).size());
    std::ostringstream os;
    os << std::string(static_cast<std::size_t>(gutter) + 1, ' ');
    for (int j = 1; j <= n; ++j) os << j % 10;
    os << '\n';
    for (int i = 1; i <= n; ++i) {
        const std::string label = std::to_string(i);
        os << std::string(static_cast<std::size_t>(gutter) - label.size(), ' ')
           << label << ' ';
        for (int j = 1; j <= n; ++j) os << (d.contains(i, j) ? '+' : '.');
        os << '\n';
    }
    return os.str();
}

} // namespace rcg
