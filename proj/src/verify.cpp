#include "rcg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "rcg/errors.hpp"
#include "rcg/pieri.hpp"
#include "rcg/polynomial.hpp"
#include "rcg/rcgraph.hpp"

namespace rcg::verify {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void add_check(Report& rep, const std::string& name, bool pass,
               const std::string& detail = "") {
    rep.checks.push_back({name, pass, pass ? std::string() : detail});
}

// Runs the body and converts an escaped exception into a failed check so a
// sweep keeps going and reports the subject that broke.
template <typename F>
void guarded(Report& rep, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        add_check(rep, "exception", false, e.what());
    }
}

std::string comp_text(const Composition& comp) {
    std::ostringstream os;
    for (std::size_t i = 0; i < comp.parts.size(); ++i) {
        if (i) os << ',';
        os << comp.parts[i];
    }
    return os.str();
}

// Accumulates one named check over many cases, keeping the first failure.
struct Agg {
    bool pass = true;
    int failures = 0;
    std::string first;

    void note(bool ok, const std::string& detail) {
        if (ok) return;
        ++failures;
        if (pass) first = detail;
        pass = false;
    }

    void flush(Report& rep, const std::string& name) const {
        std::string detail = first;
        if (failures > 1)
            detail += " (+" + std::to_string(failures - 1) + " more)";
        add_check(rep, name, pass, detail);
    }
};

bool graph_sets_equal(std::vector<RcGraph> a, std::vector<RcGraph> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

} // namespace

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.pass; });
}

std::string Report::text() const {
    std::ostringstream os;
    os << (passed() ? "PASS" : "FAIL") << " w=" << w;
    if (has_rm) os << " r=" << r << " m=" << m;
    os << " checks=" << checks.size();
    if (!passed()) {
        os << " failed=";
        bool first = true;
        for (const Check& c : checks) {
            if (c.pass) continue;
            if (!first) os << "; ";
            first = false;
            os << c.name;
            if (!c.detail.empty()) os << ": " << c.detail;
        }
        if (!repro.empty()) os << " | repro: " << repro;
    }
    return os.str();
}

std::string Report::json() const {
    nlohmann::ordered_json j;
    j["w"] = w;
    if (has_rm) {
        j["r"] = r;
        j["m"] = m;
    }
    j["pass"] = passed();
    j["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        j["checks"].push_back(cj);
    }
    j["elapsed_ms"] = elapsed_ms;
    if (!passed() && !repro.empty()) j["repro"] = repro;
    return j.dump();
}

Report schubert_backends(const Permutation& w, int n) {
    const auto t0 = Clock::now();
    Report rep;
    rep.w = to_one_line_string(w);
    rep.repro = "rcg schubert --w " + rep.w + " --n " + std::to_string(n) +
                " --backend both";
    guarded(rep, [&] {
        const auto ladder = enumerate_rc(w);
        const auto words = enumerate_rc_by_words(w);
        add_check(rep, "rc-enumerations-agree",
                  graph_sets_equal(ladder, words),
                  "ladder moves give " + std::to_string(ladder.size()) +
                      " graphs, word pairs give " + std::to_string(words.size()));

        MultiPoly from_graphs;
        for (const RcGraph& d : ladder) from_graphs += monomial_of(d);
        const MultiPoly from_ddiff = schubert_polynomial(w, n);
        add_check(rep, "ddiff-matches-graphs", from_graphs == from_ddiff,
                  "graphs: " + from_graphs.str() + " | ddiff: " + from_ddiff.str());
    });
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Report pieri_identity(const Permutation& w, int r, int m) {
    const auto t0 = Clock::now();
    Report rep;
    rep.w = to_one_line_string(w);
    rep.r = r;
    rep.m = m;
    rep.has_rm = true;
    rep.repro = "rcg pieri verify --w " + rep.w + " --r " + std::to_string(r) +
                " --m " + std::to_string(m);
    guarded(rep, [&] {
        const int n = std::max(w.trimmed_window(), r) + m;
        const auto entries = pieri::expand(w, r, m);

        const MultiPoly h = complete_homogeneous(m, r);
        const MultiPoly lhs_rc = schubert_from_graphs(w) * h;
        MultiPoly rhs_rc;
        for (const auto& e : entries) rhs_rc += schubert_from_graphs(e.target);
        add_check(rep, "identity-rc", lhs_rc == rhs_rc,
                  "lhs: " + lhs_rc.str() + " | rhs: " + rhs_rc.str());

        const MultiPoly lhs_dd = schubert_polynomial(w, n) * h;
        MultiPoly rhs_dd;
        for (const auto& e : entries) rhs_dd += schubert_polynomial(e.target, n);
        add_check(rep, "identity-ddiff", lhs_dd == rhs_dd,
                  "lhs: " + lhs_dd.str() + " | rhs: " + rhs_dd.str());
        add_check(rep, "backends-agree", lhs_rc == lhs_dd && rhs_rc == rhs_dd,
                  "rc and ddiff sides disagree");

        if (m == 1) {
            std::vector<Permutation> targets;
            for (const auto& e : entries) targets.push_back(e.target);
            std::sort(targets.begin(), targets.end());
            const auto monk = monk_targets(w, r);
            std::ostringstream os;
            os << "expansion gives " << targets.size() << " targets, monk rule "
               << monk.size();
            add_check(rep, "monk-targets", targets == monk, os.str());
        }
    });
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Report insertion_bijection(const Permutation& w, int r, int m, bool check_steps) {
    const auto t0 = Clock::now();
    Report rep;
    rep.w = to_one_line_string(w);
    rep.r = r;
    rep.m = m;
    rep.has_rm = true;
    rep.repro = "rcg pieri verify --w " + rep.w + " --r " + std::to_string(r) +
                " --m " + std::to_string(m) +
                (check_steps ? " --check-steps" : "");
    guarded(rep, [&] {
        const auto sources = enumerate_rc(w);
        const auto comps = compositions(m, r);
        const auto entries = pieri::expand(w, r, m);

        Agg admissible, ledger_match, transport, roundtrip, rolled;
        std::map<Permutation, std::vector<RcGraph>> image;

        for (const RcGraph& d : sources) {
            for (const Composition& comp : comps) {
                const std::string subject =
                    "D=" + serialize(d) + " comp=" + comp_text(comp);

                pieri::Options opts;
                opts.check_steps = check_steps;
                if (check_steps) {
                    // Rectification may have moved base crossings, so the
                    // rolled-back graph need not equal d, only represent w.
                    opts.on_row_done = [&](const RcGraph& state,
                                           const pieri::Ledger& led, int row) {
                        const RcGraph back = pieri::rollback(state, led, row);
                        rolled.note(permutation_of(back) == w &&
                                        is_reduced(back),
                                    subject + " row=" + std::to_string(row));
                    };
                }

                const auto res = pieri::insert(d, r, comp, opts);
                const Permutation wp = permutation_of(res.graph);

                const pieri::Expansion* entry = nullptr;
                for (const auto& e : entries)
                    if (e.target == wp) { entry = &e; break; }
                admissible.note(entry != nullptr,
                                subject + " -> " + to_one_line_string(wp));
                if (entry)
                    ledger_match.note(res.ledger == entry->ledger,
                                      subject + " ledger " + res.ledger.str() +
                                          " vs " + entry->ledger.str());

                Exponents e(comp.parts.begin(), comp.parts.end());
                const MultiPoly expect =
                    monomial_of(d) * MultiPoly::monomial(std::move(e));
                transport.note(monomial_of(res.graph) == expect, subject);

                const auto back = pieri::invert(res.graph, w, r, res.ledger, {});
                roundtrip.note(back.graph == d && back.comp == comp,
                               subject + " came back as D=" +
                                   serialize(back.graph) + " comp=" +
                                   comp_text(back.comp));

                image[wp].push_back(res.graph);
            }
        }

        admissible.flush(rep, "targets-admissible");
        ledger_match.flush(rep, "ledger-matches-expansion");
        transport.flush(rep, "monomial-transport");
        roundtrip.flush(rep, "inverse-roundtrip");
        if (check_steps) rolled.flush(rep, "rollback-recovers-w");

        Agg coverage;
        std::size_t expected_total = 0;
        for (const auto& e : entries) {
            const auto fibre = enumerate_rc(e.target);
            expected_total += fibre.size();
            auto got = image.count(e.target) ? image[e.target]
                                             : std::vector<RcGraph>{};
            coverage.note(graph_sets_equal(got, fibre),
                          "target " + to_one_line_string(e.target) + " got " +
                              std::to_string(got.size()) + " graphs, RC has " +
                              std::to_string(fibre.size()));
        }
        coverage.note(sources.size() * comps.size() == expected_total,
                      "domain size " +
                          std::to_string(sources.size() * comps.size()) +
                          " vs union size " + std::to_string(expected_total));
        coverage.flush(rep, "image-is-disjoint-union");
    });
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

std::vector<Report> sweep(int n, int r_max, int m_max, const SweepOptions& opts) {
    std::vector<Report> out;
    for (const Permutation& w : symmetric_group(n)) {
        if (opts.include_backends) out.push_back(schubert_backends(w, n));
        for (int r = 1; r <= r_max; ++r) {
            for (int m = 1; m <= m_max; ++m) {
                out.push_back(pieri_identity(w, r, m));
                out.push_back(insertion_bijection(w, r, m, opts.check_steps));
            }
        }
    }
    return out;
}

std::vector<Permutation> monk_targets(const Permutation& w, int r) {
    const int hi = std::max(w.trimmed_window(), r) + 1;
    std::vector<Permutation> out;
    for (int a = 1; a <= r; ++a) {
        for (int b = r + 1; b <= hi; ++b) {
            const Permutation wp = right_transpose(w, a, b);
            if (length(wp) == length(w) + 1) out.push_back(wp);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace rcg::verify
