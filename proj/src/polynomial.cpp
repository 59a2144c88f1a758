#include "rcg/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rcg {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in coefficient addition");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in coefficient multiplication");
    return out;
}

Exponents trim_exponents(Exponents e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int ea = i < a.size() ? a[i] : 0;
        const int eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea > eb;
    }
    return false;
}

MultiPoly MultiPoly::constant(std::int64_t c) {
    MultiPoly p;
    p.add_term({}, c);
    return p;
}

MultiPoly MultiPoly::monomial(Exponents e, std::int64_t c) {
    for (int x : e)
        if (x < 0) throw std::invalid_argument("monomial: negative exponent");
    MultiPoly p;
    p.add_term(std::move(e), c);
    return p;
}

MultiPoly MultiPoly::variable(int i) {
    if (i < 1) throw std::invalid_argument("variable: index must be >= 1");
    Exponents e(static_cast<std::size_t>(i), 0);
    e.back() = 1;
    return monomial(std::move(e));
}

void MultiPoly::add_term(Exponents e, std::int64_t c) {
    if (c == 0) return;
    e = trim_exponents(std::move(e));
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(std::move(e), c);
    } else {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        if (c == std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("integer overflow in coefficient negation");
        add_term(e, -c);
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                const int xa = i < ea.size() ? ea[i] : 0;
                const int xb = i < eb.size() ? eb[i] : 0;
                e[i] = xa + xb;
            }
            out.add_term(std::move(e), checked_mul(ca, cb));
        }
    }
    return out;
}

int MultiPoly::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    return deg;
}

std::int64_t MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(trim_exponents(e));
    return it == terms_.end() ? 0 : it->second;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const std::uint64_t mag =
            c < 0 ? -static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool printed = false;
        if (mag != 1 || e.empty()) {
            os << mag;
            printed = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << '*';
            os << 'x' << (i + 1);
            if (e[i] > 1) os << '^' << e[i];
            printed = true;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos) + ": " + what);
    }
    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        try {
            return std::stoll(s.substr(start, pos - start));
        } catch (const std::out_of_range&) {
            pos = start;
            fail("integer literal out of range");
        }
    }

    // term := factor (('*') factor)*, factor := integer | x<idx>['^'<exp>]
    MultiPoly term() {
        std::int64_t coeff = 1;
        Exponents e;
        bool any = false;
        while (true) {
            skip_ws();
            if (peek() == 'x') {
                ++pos;
                const int var = static_cast<int>(integer());
                if (var < 1) fail("variable index must be >= 1");
                int exp = 1;
                if (peek() == '^') {
                    ++pos;
                    exp = static_cast<int>(integer());
                    if (exp < 0) fail("negative exponent");
                }
                if (static_cast<std::size_t>(var) > e.size())
                    e.resize(static_cast<std::size_t>(var), 0);
                e[static_cast<std::size_t>(var - 1)] += exp;
            } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff = checked_mul(coeff, integer());
            } else {
                fail("expected factor");
            }
            any = true;
            if (peek() == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!any) fail("empty term");
        return MultiPoly::monomial(std::move(e), coeff);
    }

    MultiPoly parse() {
        MultiPoly out;
        bool negative = false;
        if (peek() == '-') {
            ++pos;
            negative = true;
        } else if (peek() == '+') {
            ++pos;
        }
        while (true) {
            MultiPoly t = term();
            if (negative) out -= t; else out += t;
            if (eof()) break;
            const char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            negative = op == '-';
            ++pos;
        }
        return out;
    }
};

} // namespace

MultiPoly MultiPoly::parse(const std::string& text) {
    Parser p(text);
    if (p.eof()) throw std::invalid_argument("polynomial parse error: empty input");
    {
        // "0" denotes the zero polynomial
        Parser probe(text);
        probe.skip_ws();
        if (probe.pos < text.size() && text[probe.pos] == '0') {
            probe.pos++;
            if (probe.eof()) return MultiPoly();
        }
    }
    return p.parse();
}

MultiPoly divided_difference(const MultiPoly& f, int i) {
    if (i < 1) throw std::invalid_argument("divided_difference: index must be >= 1");
    MultiPoly out;
    const std::size_t ia = static_cast<std::size_t>(i - 1);
    const std::size_t ib = static_cast<std::size_t>(i);
    for (const auto& [e, c] : f.terms()) {
        const int p = ia < e.size() ? e[ia] : 0;
        const int q = ib < e.size() ? e[ib] : 0;
        if (p == q) continue;
        const int lo = std::min(p, q);
        const int hi = std::max(p, q);
        const std::int64_t coeff = p > q ? c : -c;
        Exponents base = e;
        if (base.size() < ib + 1) base.resize(ib + 1, 0);
        for (int k = lo; k < hi; ++k) {
            Exponents t = base;
            t[ia] = k;
            t[ib] = p + q - 1 - k;
            out += MultiPoly::monomial(std::move(t), coeff);
        }
    }
    return out;
}

MultiPoly apply_divided_differences(MultiPoly f, const Word& word) {
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        f = divided_difference(f, *it);
    return f;
}

MultiPoly staircase_monomial(int n) {
    if (n < 1) throw std::invalid_argument("staircase_monomial: need n >= 1");
    Exponents e(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = n - 1 - i;
    return MultiPoly::monomial(std::move(e));
}

namespace {

Word any_reduced_word(Permutation u) {
    Word letters;
    while (true) {
        const auto descents = right_descents(u);
        if (descents.empty()) break;
        const int i = descents.front();
        letters.push_back(i);
        u = right_transpose(u, i, i + 1);
    }
    std::reverse(letters.begin(), letters.end());
    return letters;
}

} // namespace

MultiPoly schubert_polynomial(const Permutation& w, int n) {
    if (n < 1) throw std::invalid_argument("schubert_polynomial: need n >= 1");
    if (w.trimmed_window() > n)
        throw std::invalid_argument("schubert_polynomial: w does not lie in S_" +
                                    std::to_string(n));
    const Permutation u = inverse(w) * longest_element(n);
    return apply_divided_differences(staircase_monomial(n), any_reduced_word(u));
}

MultiPoly complete_homogeneous(int m, int r) {
    if (m < 0 || r < 1)
        throw std::invalid_argument("complete_homogeneous: need m >= 0, r >= 1");
    MultiPoly out;
    Exponents e(static_cast<std::size_t>(r), 0);
    // odometer over weak compositions of m into r parts
    e[0] = m;
    while (true) {
        out += MultiPoly::monomial(e);
        int i = r - 2;
        while (i >= 0 && e[static_cast<std::size_t>(i)] == 0) --i;
        if (i < 0) break;
        const int tail = e[static_cast<std::size_t>(r - 1)];
        e[static_cast<std::size_t>(i)] -= 1;
        e[static_cast<std::size_t>(i + 1)] = tail + 1;
        if (i + 1 < r - 1) e[static_cast<std::size_t>(r - 1)] = 0;
    }
    return out;
}

} // namespace rcg
