#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rcg/permutation.hpp"

namespace rcg {

// Exponent vector (x1^e0 * x2^e1 * ...), kept with trailing zeros trimmed so
// that equal monomials in different variable counts compare equal.
using Exponents = std::vector<int>;

Exponents trim_exponents(Exponents e);

// Graded-lexicographic, larger terms first (total degree, then lex with
// implicit zero padding).  Map order doubles as the canonical print order.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial with exact machine-integer coefficients.
// Every coefficient operation is overflow-checked and throws
// std::overflow_error rather than wrapping.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, std::int64_t, GrlexGreater>;

    MultiPoly() = default;
    static MultiPoly constant(std::int64_t c);
    static MultiPoly monomial(Exponents e, std::int64_t c = 1);
    static MultiPoly variable(int i);  // x_i, 1-based

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    std::int64_t coefficient(const Exponents& e) const;

    // Canonical text form, e.g. "x1^2*x2 + 2*x1*x3 - 1"; "0" when zero.
    std::string str() const;
    static MultiPoly parse(const std::string& text);  // inverse of str()

private:
    void add_term(Exponents e, std::int64_t c);
    TermMap terms_;
};

// Newton's divided difference (f - s_i f) / (x_i - x_{i+1}), computed termwise
// as an exact geometric sum; no rational arithmetic is involved.
MultiPoly divided_difference(const MultiPoly& f, int i);

// Applies the operators along a word, rightmost letter first, so that for a
// reduced word a_1..a_p of u the result is the operator of u applied to f.
MultiPoly apply_divided_differences(MultiPoly f, const Word& word);

MultiPoly staircase_monomial(int n);  // x1^{n-1} x2^{n-2} ... x_{n-1}

// Schubert polynomial via divided differences on the staircase monomial of
// S_n.  Requires w in S_n; the result is independent of n (stability).
MultiPoly schubert_polynomial(const Permutation& w, int n);

// Complete homogeneous symmetric polynomial h_m(x_1..x_r); h_0 = 1.
MultiPoly complete_homogeneous(int m, int r);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

} // namespace rcg
