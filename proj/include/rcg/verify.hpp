#pragma once

#include <string>
#include <vector>

#include "rcg/permutation.hpp"

namespace rcg::verify {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;  // filled on failure
};

struct Report {
    std::string w;       // subject one-line text
    int r = 0;
    int m = 0;
    bool has_rm = false;
    std::vector<Check> checks;
    double elapsed_ms = 0.0;
    std::string repro;   // reproduction command line, set when any check fails

    bool passed() const;
    std::string text() const;  // one deterministic line (no timing)
    std::string json() const;  // one JSON object line (carries elapsed_ms)
};

// Both Schubert backends agree: divided differences on the staircase equals
// the sum of x^D over RC(w), with RC(w) computed by ladder moves and by
// reduced words x compatible sequences.
Report schubert_backends(const Permutation& w, int n);

// P_w * h_m(x_1..x_r) = sum of P_w' over the admissible expansion, evaluated
// with both backends.
Report pieri_identity(const Permutation& w, int r, int m);

// insert() is a bijection RC(w) x compositions(m,r) -> disjoint union of
// RC(w'): outputs reduced and admissible, ledgers match expand(), inverse
// round-trips, monomial transport holds, image multiset matches exactly.
Report insertion_bijection(const Permutation& w, int r, int m,
                           bool check_steps = false);

struct SweepOptions {
    bool check_steps = false;
    bool include_backends = false;
};

// pieri_identity + insertion_bijection for every w in S_n, r <= r_max,
// m <= m_max (plus schubert_backends per w when requested).
std::vector<Report> sweep(int n, int r_max, int m_max,
                          const SweepOptions& opts = {});

// Independent Monk enumeration: all w * t_{a,b} with a <= r < b and
// length(w)+1; the m=1 cross-check target.
std::vector<Permutation> monk_targets(const Permutation& w, int r);

} // namespace rcg::verify
