#pragma once

#include <string>
#include <vector>

namespace rcg {

// Permutation of the positive integers fixing all but finitely many letters,
// stored in one-line notation.  The stored window may carry trailing fixed
// points; equality and hashing ignore them.
class Permutation {
public:
    Permutation() = default;                          // identity
    static Permutation identity(int n);               // identity with window n
    static Permutation from_one_line(std::vector<int> line);

    // Image of i (1-based); letters beyond the window are fixed.
    int operator()(int i) const {
        return i >= 1 && i <= static_cast<int>(line_.size()) ? line_[i - 1] : i;
    }

    int window() const { return static_cast<int>(line_.size()); }
    int trimmed_window() const;
    const std::vector<int>& one_line() const { return line_; }
    std::vector<int> one_line(int n) const;           // extended/truncated view

    bool operator==(const Permutation& o) const;
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const;       // lex on trimmed one-line

private:
    std::vector<int> line_;
};

using Word = std::vector<int>;  // letters a_k, 1-based simple reflections

// (u*v)(i) = u(v(i))
Permutation operator*(const Permutation& u, const Permutation& v);

Permutation inverse(const Permutation& w);

// w * t_{a,b}: exchanges the values at positions a and b.
Permutation right_transpose(const Permutation& w, int a, int b);

int length(const Permutation& w);
std::vector<int> lehmer_code(const Permutation& w);
std::vector<int> right_descents(const Permutation& w);

Permutation longest_element(int n);

// [1, ..., r-1, r+m, r, r+1, ..., r+m-1]: the Grassmannian permutation with
// a single descent at r whose Schubert polynomial is h_m(x_1..x_r).
Permutation grassmannian_permutation(int r, int m);

Permutation word_to_permutation(const Word& word);
bool is_reduced(const Word& word);

// All reduced words of w, sorted lexicographically.
std::vector<Word> reduced_words(const Permutation& w);

// All of S_n in lexicographic one-line order.
std::vector<Permutation> symmetric_group(int n);

std::string to_one_line_string(const Permutation& w);   // "3,2,1,5,4"
Permutation parse_one_line(const std::string& text);     // throws std::invalid_argument

} // namespace rcg
