#include "rcg/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rcg {

Permutation Permutation::identity(int n) {
    if (n < 0) throw std::invalid_argument("identity: negative window");
    std::vector<int> line(static_cast<std::size_t>(n));
    std::iota(line.begin(), line.end(), 1);
    Permutation w;
    w.line_ = std::move(line);
    return w;
}

Permutation Permutation::from_one_line(std::vector<int> line) {
    const int n = static_cast<int>(line.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : line) {
        if (v < 1 || v > n)
            throw std::invalid_argument("one-line notation: value " +
                                        std::to_string(v) + " out of range 1.." +
                                        std::to_string(n));
        if (seen[static_cast<std::size_t>(v - 1)]++)
            throw std::invalid_argument("one-line notation: duplicate value " +
                                        std::to_string(v));
    }
    Permutation w;
    w.line_ = std::move(line);
    return w;
}

int Permutation::trimmed_window() const {
    int n = window();
    while (n > 0 && line_[static_cast<std::size_t>(n - 1)] == n) --n;
    return n;
}

std::vector<int> Permutation::one_line(int n) const {
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i - 1)] = (*this)(i);
    return out;
}

bool Permutation::operator==(const Permutation& o) const {
    const int n = trimmed_window();
    if (n != o.trimmed_window()) return false;
    for (int i = 1; i <= n; ++i)
        if ((*this)(i) != o(i)) return false;
    return true;
}

bool Permutation::operator<(const Permutation& o) const {
    const int n = std::max(trimmed_window(), o.trimmed_window());
    for (int i = 1; i <= n; ++i) {
        if ((*this)(i) != o(i)) return (*this)(i) < o(i);
    }
    return false;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    const int n = std::max(u.window(), v.window());
    std::vector<int> line(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) line[static_cast<std::size_t>(i - 1)] = u(v(i));
    return Permutation::from_one_line(std::move(line));
}

Permutation inverse(const Permutation& w) {
    const int n = w.window();
    std::vector<int> line(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) line[static_cast<std::size_t>(w(i) - 1)] = i;
    return Permutation::from_one_line(std::move(line));
}

Permutation right_transpose(const Permutation& w, int a, int b) {
    if (a < 1 || b < 1 || a == b)
        throw std::invalid_argument("right_transpose: need distinct positions >= 1");
    const int n = std::max({w.window(), a, b});
    std::vector<int> line = w.one_line(n);
    std::swap(line[static_cast<std::size_t>(a - 1)],
              line[static_cast<std::size_t>(b - 1)]);
    return Permutation::from_one_line(std::move(line));
}

int length(const Permutation& w) {
    const int n = w.trimmed_window();
    int inv = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

std::vector<int> lehmer_code(const Permutation& w) {
    const int n = w.window();
    std::vector<int> code(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(j) < w(i)) ++code[static_cast<std::size_t>(i - 1)];
    return code;
}

std::vector<int> right_descents(const Permutation& w) {
    std::vector<int> out;
    const int n = w.trimmed_window();
    for (int i = 1; i < n; ++i)
        if (w(i) > w(i + 1)) out.push_back(i);
    return out;
}

Permutation longest_element(int n) {
    if (n < 1) throw std::invalid_argument("longest_element: need n >= 1");
    std::vector<int> line(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) line[static_cast<std::size_t>(i - 1)] = n + 1 - i;
    return Permutation::from_one_line(std::move(line));
}

Permutation grassmannian_permutation(int r, int m) {
    if (r < 1 || m < 0)
        throw std::invalid_argument("grassmannian_permutation: need r >= 1, m >= 0");
    if (m == 0) return Permutation::identity(r);
    std::vector<int> line(static_cast<std::size_t>(r + m));
    for (int i = 1; i < r; ++i) line[static_cast<std::size_t>(i - 1)] = i;
    line[static_cast<std::size_t>(r - 1)] = r + m;
    for (int k = 1; k <= m; ++k) line[static_cast<std::size_t>(r + k - 1)] = r + k - 1;
    return Permutation::from_one_line(std::move(line));
}

Permutation word_to_permutation(const Word& word) {
    Permutation w;
    for (int a : word) {
        if (a < 1) throw std::invalid_argument("word letter must be >= 1");
        w = right_transpose(w, a, a + 1);
    }
    return w;
}

bool is_reduced(const Word& word) {
    return length(word_to_permutation(word)) == static_cast<int>(word.size());
}

namespace {

void gather_reduced_words(const Permutation& w, Word& suffix,
                          std::vector<Word>& out) {
    const auto descents = right_descents(w);
    if (descents.empty()) {  // identity
        Word word(suffix.rbegin(), suffix.rend());
        out.push_back(std::move(word));
        return;
    }
    for (int i : descents) {
        suffix.push_back(i);
        gather_reduced_words(right_transpose(w, i, i + 1), suffix, out);
        suffix.pop_back();
    }
}

} // namespace

std::vector<Word> reduced_words(const Permutation& w) {
    std::vector<Word> out;
    Word suffix;
    gather_reduced_words(w, suffix, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> symmetric_group(int n) {
    if (n < 1) throw std::invalid_argument("symmetric_group: need n >= 1");
    std::vector<int> line(static_cast<std::size_t>(n));
    std::iota(line.begin(), line.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(line));
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

std::string to_one_line_string(const Permutation& w) {
    std::ostringstream os;
    const int n = std::max(w.window(), 1);
    for (int i = 1; i <= n; ++i) {
        if (i > 1) os << ',';
        os << w(i);
    }
    return os.str();
}

Permutation parse_one_line(const std::string& text) {
    std::vector<int> line;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos
                                               ? std::string::npos
                                               : comma - pos);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("one-line notation: bad token '" + tok + "'");
        }
        if (used != tok.size())
            throw std::invalid_argument("one-line notation: bad token '" + tok + "'");
        line.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Permutation::from_one_line(std::move(line));
}

} // namespace rcg
