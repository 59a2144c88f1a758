#include "rcg/cli.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rcg/errors.hpp"
#include "rcg/pieri.hpp"
#include "rcg/polynomial.hpp"
#include "rcg/rcgraph.hpp"
#include "rcg/verify.hpp"

namespace rcg::cli {

namespace {

std::string read_graph_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in)
            throw std::invalid_argument("cannot open graph file " + arg.substr(1));
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad entry '" +
                                        tok + "'");
        }
        if (used != tok.size())
            throw std::invalid_argument(std::string(what) + ": bad entry '" +
                                        tok + "'");
        out.push_back(value);
    }
    if (out.empty())
        throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

Composition parse_comp(const std::string& text) {
    std::vector<int> parts = parse_int_list(text, "composition");
    for (int p : parts)
        if (p < 0) throw std::invalid_argument("composition: negative part");
    return Composition(std::move(parts));
}

// "(2,3),(2,4)" or "(none)"; spaces allowed between tokens.
pieri::Ledger parse_ledger(const std::string& text) {
    pieri::Ledger led;
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s.empty() || s == "(none)") return led;
    std::size_t pos = 0;
    auto expect = [&](char c) {
        if (pos >= s.size() || s[pos] != c)
            throw std::invalid_argument("ledger: expected '" + std::string(1, c) +
                                        "' at position " + std::to_string(pos));
        ++pos;
    };
    auto number = [&] {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(s.substr(pos), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("ledger: expected a number at position " +
                                        std::to_string(pos));
        }
        pos += used;
        return value;
    };
    while (true) {
        expect('(');
        const int a = number();
        expect(',');
        const int b = number();
        expect(')');
        led.pairs.push_back({a, b});
        if (pos == s.size()) break;
        expect(',');
    }
    return led;
}

std::string ledger_text(const pieri::Ledger& led) {
    return led.empty() ? "(none)" : led.str();
}

std::string comp_text(const Composition& comp) {
    std::ostringstream os;
    for (std::size_t i = 0; i < comp.parts.size(); ++i) {
        if (i) os << ',';
        os << comp.parts[i];
    }
    return os.str();
}

int emit_reports(const std::vector<verify::Report>& reports, bool json,
                 std::ostream& out) {
    int failures = 0;
    for (const auto& rep : reports) {
        out << (json ? rep.json() : rep.text()) << '\n';
        if (!rep.passed()) ++failures;
    }
    if (!json)
        out << "summary: " << reports.size() << " reports, " << failures
            << " failures\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"RC graph toolkit: Schubert polynomials and Pieri insertion"};
    app.name("rcg");
    app.require_subcommand(1);

    std::string sc_w, sc_backend = "both";
    int sc_n = 0;
    auto* sub_schubert =
        app.add_subcommand("schubert", "Print the Schubert polynomial of w");
    sub_schubert->add_option("--w", sc_w, "one-line permutation, e.g. 3,2,1")
        ->required();
    sub_schubert->add_option("--n", sc_n, "variable count (default: window of w)");
    sub_schubert->add_option("--backend", sc_backend, "rc, ddiff or both")
        ->check(CLI::IsMember({"rc", "ddiff", "both"}));

    std::string rc_w;
    bool rc_count = false, rc_render = false;
    auto* sub_rc = app.add_subcommand("rc", "Enumerate RC(w)");
    sub_rc->add_option("--w", rc_w, "one-line permutation")->required();
    sub_rc->add_flag("--count", rc_count, "print only the number of graphs");
    sub_rc->add_flag("--render", rc_render, "draw the graphs");

    std::string rd_graph;
    auto* sub_render = app.add_subcommand("render", "Draw one graph");
    sub_render->add_option("--graph", rd_graph, "graph JSON or @file")->required();

    std::string in_graph, in_comp;
    int in_r = 0;
    bool in_trace = false, in_checks = false;
    auto* sub_insert =
        app.add_subcommand("insert", "Row insertion of a composition into a graph");
    sub_insert->add_option("--graph", in_graph,
                           "graph JSON or @file (default: empty graph)");
    sub_insert->add_option("--r", in_r, "row bound r")->required();
    sub_insert->add_option("--comp", in_comp, "composition k_1,...,k_r")
        ->required();
    sub_insert->add_flag("--trace", in_trace, "print one line per step");
    sub_insert->add_flag("--check-steps", in_checks,
                         "assert the ledger invariants after every step");

    std::string iv_graph, iv_w, iv_ledger;
    int iv_r = 0;
    bool iv_trace = false, iv_checks = false;
    auto* sub_invert =
        app.add_subcommand("invert", "Inverse insertion back to RC(w)");
    sub_invert->add_option("--graph", iv_graph, "graph JSON or @file")->required();
    sub_invert->add_option("--w", iv_w, "base permutation")->required();
    sub_invert->add_option("--r", iv_r, "row bound r")->required();
    sub_invert->add_option("--ledger", iv_ledger,
                           "pairs (a,b),... (default: derived from w)");
    sub_invert->add_flag("--trace", iv_trace, "print one line per step");
    sub_invert->add_flag("--check-steps", iv_checks,
                         "assert the ledger invariants after every step");

    std::string ex_w;
    int ex_r = 0, ex_m = 0;
    auto* sub_expand =
        app.add_subcommand("expand", "Targets and ledgers of the product rule");
    sub_expand->add_option("--w", ex_w, "one-line permutation")->required();
    sub_expand->add_option("--r", ex_r, "row bound r")->required();
    sub_expand->add_option("--m", ex_m, "degree m")->required();

    auto* sub_pieri = app.add_subcommand("pieri", "Product rule checks");
    std::string pv_w;
    int pv_r = 0, pv_m = 0, pv_n = 0, pv_rmax = 0, pv_mmax = 0;
    bool pv_all = false, pv_checks = false, pv_json = false;
    auto* sub_verify = sub_pieri->add_subcommand(
        "verify", "Check the identity and the insertion bijection");
    sub_verify->add_option("--w", pv_w, "one subject permutation");
    sub_verify->add_option("--r", pv_r, "row bound r (with --w)");
    sub_verify->add_option("--m", pv_m, "degree m (with --w)");
    sub_verify->add_option("--n", pv_n, "sweep every w in S_n");
    sub_verify->add_option("--rmax", pv_rmax, "sweep r = 1..rmax (default n-1)");
    sub_verify->add_option("--mmax", pv_mmax, "sweep m = 1..mmax (default 2)");
    sub_verify->add_flag("--all", pv_all, "also compare the Schubert backends");
    sub_verify->add_flag("--check-steps", pv_checks,
                         "assert the ledger invariants after every step");
    sub_verify->add_flag("--json", pv_json, "one JSON object per report");
    sub_pieri->require_subcommand(1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sub_schubert) {
            const Permutation w = parse_one_line(sc_w);
            const int n =
                sc_n > 0 ? sc_n : std::max(w.trimmed_window(), 1);
            if (sc_backend == "rc") {
                out << schubert_from_graphs(w).str() << '\n';
            } else if (sc_backend == "ddiff") {
                out << schubert_polynomial(w, n).str() << '\n';
            } else {
                const MultiPoly a = schubert_from_graphs(w);
                const MultiPoly b = schubert_polynomial(w, n);
                if (a != b) {
                    err << "backend mismatch\n  rc:    " << a.str()
                        << "\n  ddiff: " << b.str() << '\n';
                    return 1;
                }
                out << a.str() << '\n';
            }
            return 0;
        }

        if (*sub_rc) {
            const Permutation w = parse_one_line(rc_w);
            const auto graphs = enumerate_rc(w);
            if (rc_count) {
                out << graphs.size() << '\n';
            } else if (rc_render) {
                for (std::size_t i = 0; i < graphs.size(); ++i) {
                    if (i) out << '\n';
                    out << render(graphs[i]);
                }
            } else {
                for (const RcGraph& d : graphs) out << serialize(d) << '\n';
            }
            return 0;
        }

        if (*sub_render) {
            out << render(parse_rcgraph(read_graph_arg(rd_graph)));
            return 0;
        }

        if (*sub_insert) {
            const RcGraph d = in_graph.empty()
                                  ? RcGraph()
                                  : parse_rcgraph(read_graph_arg(in_graph));
            pieri::Options opts;
            opts.check_steps = in_checks;
            if (in_trace)
                opts.trace = [&out](const std::string& line) {
                    out << line << '\n';
                };
            const auto res = pieri::insert(d, in_r, parse_comp(in_comp), opts);
            out << serialize(res.graph) << '\n'
                << "ledger: " << ledger_text(res.ledger) << '\n';
            return 0;
        }

        if (*sub_invert) {
            const RcGraph dp = parse_rcgraph(read_graph_arg(iv_graph));
            const Permutation w = parse_one_line(iv_w);
            pieri::Options opts;
            opts.check_steps = iv_checks;
            if (iv_trace)
                opts.trace = [&out](const std::string& line) {
                    out << line << '\n';
                };
            const auto res =
                iv_ledger.empty()
                    ? pieri::invert(dp, w, iv_r, opts)
                    : pieri::invert(dp, w, iv_r, parse_ledger(iv_ledger), opts);
            out << serialize(res.graph) << '\n'
                << "comp: " << comp_text(res.comp) << '\n';
            return 0;
        }

        if (*sub_expand) {
            const Permutation w = parse_one_line(ex_w);
            for (const auto& e : pieri::expand(w, ex_r, ex_m))
                out << to_one_line_string(e.target)
                    << " ledger: " << ledger_text(e.ledger) << '\n';
            return 0;
        }

        if (*sub_pieri && *sub_verify) {
            const bool exact = !pv_w.empty();
            const bool swept = pv_n > 0;
            if (exact == swept)
                throw std::invalid_argument(
                    "pieri verify: give exactly one of --w or --n");
            std::vector<verify::Report> reports;
            if (exact) {
                if (pv_r < 1 || pv_m < 0)
                    throw std::invalid_argument(
                        "pieri verify: --w needs --r >= 1 and --m >= 0");
                const Permutation w = parse_one_line(pv_w);
                if (pv_all)
                    reports.push_back(verify::schubert_backends(
                        w, std::max(w.trimmed_window(), pv_r) + pv_m));
                reports.push_back(verify::pieri_identity(w, pv_r, pv_m));
                reports.push_back(
                    verify::insertion_bijection(w, pv_r, pv_m, pv_checks));
            } else {
                if (pv_n < 1)
                    throw std::invalid_argument("pieri verify: --n must be >= 1");
                verify::SweepOptions so;
                so.check_steps = pv_checks;
                so.include_backends = pv_all;
                const int rmax = pv_rmax > 0 ? pv_rmax : std::max(pv_n - 1, 1);
                const int mmax = pv_mmax > 0 ? pv_mmax : 2;
                reports = verify::sweep(pv_n, rmax, mmax, so);
            }
            return emit_reports(reports, pv_json, out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const AmbiguityError& e) {
        err << "ambiguity: " << e.what() << '\n';
        return 1;
    } catch (const GuaranteeError& e) {
        err << "guarantee violated: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    err << "error: no subcommand\n";
    return 2;
}

} // namespace rcg::cli
