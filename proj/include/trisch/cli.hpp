#pragma once

// Command-line front end. Exit codes: 0 success, 1 input error, 2
// mathematical-verification failure (route or invariance mismatches, failed
// verify checks), so CI can tell bad flags from bad mathematics.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trisch/knots.hpp"
#include "trisch/poly_json.hpp"
#include "trisch/recursion.hpp"
#include "trisch/shuffle.hpp"
#include "trisch/verify.hpp"

namespace trisch {

namespace cli_detail {

inline bool verification_kind(const std::string& kind) {
    return kind == "RouteMismatch" || kind == "InvarianceViolation" ||
           kind == "InternalMismatch" || kind == "CycleDetected" || kind == "CheckFailed";
}

struct CommonOpts {
    std::string triple;
    std::string partition;
    std::string format = "text";
    int threads = 0; // 0: TRISCH_THREADS or 1
    long bound = 50;
};

inline void add_common(CLI::App* cmd, CommonOpts& o, bool with_inputs = true) {
    if (with_inputs) {
        auto* t = cmd->add_option("--triple", o.triple, "triple m,n,l");
        auto* p = cmd->add_option("--partition", o.partition, "partition p1,p2,...");
        t->excludes(p);
        p->excludes(t);
    }
    cmd->add_option("--format", o.format, "output format (text|json)")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--threads", o.threads, "worker threads (default: TRISCH_THREADS or 1)");
    cmd->add_option("--bound", o.bound, "search bound for triple lookup (default 50)");
}

// Resolve the input to a triple, searching presentations when a partition is
// given.
inline TriangularTriple input_triple(const CommonOpts& o) {
    if (!o.triple.empty()) return TriangularTriple::parse(o.triple);
    if (o.partition.empty())
        throw Error("ParseError", "need --triple m,n,l or --partition p1,p2,...");
    Partition lam = Partition::parse(o.partition);
    auto ts = find_triples(lam, o.bound);
    if (ts.empty())
        throw Error("DomainError", "no cutting line with m,n <= " + std::to_string(o.bound) +
                                       " found for partition " + lam.to_string());
    return ts.front();
}

inline nlohmann::json input_json(const TriangularTriple& t) {
    return {{"triple", t.to_string()}, {"tau", t.tau().to_string()}};
}

inline void emit_poly(std::ostream& out, const CommonOpts& o, const TriangularTriple& t,
                      const std::string& route, const LaurentPoly& p) {
    if (o.format == "json") {
        nlohmann::json j{{"input", input_json(t)}, {"route", route}, {"result", poly_to_json(p)}};
        out << j.dump() << "\n";
    } else {
        out << p.to_text() << "\n";
    }
}

} // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;

    CLI::App app{"triangular Schroder / Catalan polynomials and KR series"};
    app.require_subcommand(1);

    CommonOpts schroder_o, catalan_o, kr_o, hook_o, seq_o, braid_o, cable_o, ors_o, verify_o;
    std::string schroder_route = "all";
    std::string hook_route = "schroder";
    int q_order = 8;
    int hook_k = -1;
    long strands = 0;
    std::string mnd;
    long max_mn = 12;

    auto* c_schroder = app.add_subcommand("schroder", "triangular Schroder polynomial");
    add_common(c_schroder, schroder_o);
    c_schroder->add_option("--route", schroder_route, "recursion|paths|invsets|all")
        ->check(CLI::IsMember({"recursion", "paths", "invsets", "all"}));

    auto* c_catalan = app.add_subcommand("catalan", "triangular (q,t)-Catalan polynomial");
    add_common(c_catalan, catalan_o);

    auto* c_kr = app.add_subcommand("kr", "Khovanov-Rozansky Poincare series (q-truncated)");
    add_common(c_kr, kr_o);
    c_kr->add_option("--q-order", q_order, "truncation order for 1/(1-q) (default 8)");

    auto* c_hook = app.add_subcommand("hook", "hook coefficients of the Schroder polynomial");
    add_common(c_hook, hook_o);
    c_hook->add_option("--k", hook_k, "single coefficient index");
    c_hook->add_option("--route", hook_route, "schroder|llt")
        ->check(CLI::IsMember({"schroder", "llt"}));

    auto* c_seq = app.add_subcommand("sequences", "window word and trinary/binary pairs");
    add_common(c_seq, seq_o);

    auto* c_braid = app.add_subcommand("braid", "braid words and normalizing exponent");
    add_common(c_braid, braid_o);
    c_braid->add_option("--strands", strands, "strand count for the coxeter braid");

    auto* c_cable = app.add_subcommand("cable", "cable sequences and triple");
    add_common(c_cable, cable_o, false);
    c_cable->add_option("--mnd", mnd, "cable parameters m,n,d")->required();

    auto* c_ors = app.add_subcommand("ors", "q=1 specialization check for a cable");
    add_common(c_ors, ors_o, false);
    c_ors->add_option("--mnd", mnd, "cable parameters m,n,d")->required();

    auto* c_verify = app.add_subcommand("verify", "run the cross-checking suite");
    add_common(c_verify, verify_o, false);
    c_verify->add_option("--max-mn", max_mn, "check all triples with m*n <= this (default 12)");
    c_verify->add_option("--q-order", q_order, "series truncation order (default 8)");

    try {
        std::vector<const char*> argv;
        argv.push_back("trisch");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (c_schroder->parsed()) {
            TriangularTriple t = input_triple(schroder_o);
            LaurentPoly p = schroder(t, route_parse(schroder_route), schroder_o.threads);
            emit_poly(out, schroder_o, t, schroder_route, p);
        } else if (c_catalan->parsed()) {
            TriangularTriple t = input_triple(catalan_o);
            emit_poly(out, catalan_o, t, "paths", catalan(t, catalan_o.threads));
        } else if (c_kr->parsed()) {
            TriangularTriple t = input_triple(kr_o);
            KrSeries kr = kr_series(t, q_order, kr_o.threads);
            if (kr_o.format == "json") {
                nlohmann::json j{{"input", input_json(t)},
                                 {"delta", kr.delta},
                                 {"q_order", q_order},
                                 {"result", poly_to_json(kr.body.to_poly())}};
                out << j.dump() << "\n";
            } else {
                out << "delta: " << kr.delta << "\n";
                out << "q-order: " << q_order << " (body is S/(1-q) truncated)\n";
                out << "body: " << kr.body.to_poly().to_text() << "\n";
            }
        } else if (c_hook->parsed()) {
            TriangularTriple t = input_triple(hook_o);
            HookRoute route = hook_route == "llt" ? HookRoute::Llt : HookRoute::Schroder;
            auto hooks = hook_coefficients(t, route, hook_o.threads);
            if (hook_k >= 0) {
                LaurentPoly p = hook_k < static_cast<int>(hooks.size()) ? hooks[hook_k]
                                                                        : LaurentPoly();
                if (hook_o.format == "json") {
                    nlohmann::json j{{"input", input_json(t)},
                                     {"route", hook_route},
                                     {"k", hook_k},
                                     {"result", poly_to_json(p)}};
                    out << j.dump() << "\n";
                } else {
                    out << p.to_text() << "\n";
                }
            } else if (hook_o.format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& p : hooks) arr.push_back(poly_to_json(p));
                nlohmann::json j{{"input", input_json(t)}, {"route", hook_route}, {"result", arr}};
                out << j.dump() << "\n";
            } else {
                for (std::size_t k = 0; k < hooks.size(); ++k)
                    out << "a^" << k << ": " << hooks[k].to_text() << "\n";
            }
        } else if (c_seq->parsed()) {
            TriangularTriple t = input_triple(seq_o);
            SequenceData s = build_sequences(t);
            if (seq_o.format == "json") {
                nlohmann::json j{{"input", input_json(t)}, {"w", to_string(s.w)},
                                 {"x", to_string(s.x)},   {"y", to_string(s.y)},
                                 {"u", to_string(s.u)},   {"v", to_string(s.v)}};
                out << j.dump() << "\n";
            } else {
                out << "w: " << to_string(s.w) << "\n";
                out << "x: " << to_string(s.x) << "\n";
                out << "y: " << to_string(s.y) << "\n";
                out << "u: " << to_string(s.u) << "\n";
                out << "v: " << to_string(s.v) << "\n";
            }
        } else if (c_braid->parsed()) {
            std::vector<std::pair<std::string, BraidWord>> words;
            nlohmann::json input;
            if (!braid_o.partition.empty()) {
                Partition lam = Partition::parse(braid_o.partition);
                long M = strands > 0 ? strands : lam.part(1) + 1;
                words.emplace_back("coxeter", coxeter_braid(M, lam));
                input = {{"partition", lam.to_string()}, {"strands", M}};
            } else {
                TriangularTriple t = input_triple(braid_o);
                BraidPair bp = build_braids(t, strands);
                words.emplace_back("coxeter", bp.coxeter);
                words.emplace_back("binary", bp.binary);
                input = input_json(t);
            }
            if (braid_o.format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& [kind, w] : words) {
                    BraidInvariants inv = braid_invariants(w);
                    arr.push_back({{"kind", kind},
                                   {"word", w.to_string()},
                                   {"strands", w.strands},
                                   {"e", inv.e},
                                   {"c", inv.c},
                                   {"delta", inv.delta}});
                }
                out << nlohmann::json{{"input", input}, {"result", arr}}.dump() << "\n";
            } else {
                for (const auto& [kind, w] : words) {
                    BraidInvariants inv = braid_invariants(w);
                    out << kind << ": " << w.to_string() << "\n";
                    out << kind << " strands: " << w.strands << " e: " << inv.e
                        << " c: " << inv.c << " delta: " << inv.delta << "\n";
                }
            }
        } else if (c_cable->parsed()) {
            std::vector<long> v;
            std::stringstream ss(mnd);
            std::string tok;
            while (std::getline(ss, tok, ',')) v.push_back(std::stol(tok));
            if (v.size() != 3) throw Error("ParseError", "--mnd needs m,n,d");
            CableParams cp = cable_params(v[0], v[1], v[2]);
            if (cable_o.format == "json") {
                nlohmann::json j{{"input", {{"m", v[0]}, {"n", v[1]}, {"d", v[2]}}},
                                 {"u", to_string(cp.u)},
                                 {"v", to_string(cp.v)},
                                 {"delta", cp.delta},
                                 {"triple", cp.triple.to_string()}};
                out << j.dump() << "\n";
            } else {
                out << "u: " << to_string(cp.u) << "\n";
                out << "v: " << to_string(cp.v) << "\n";
                out << "delta: " << cp.delta << "\n";
                out << "triple: " << cp.triple.to_string() << "\n";
            }
        } else if (c_ors->parsed()) {
            std::vector<long> v;
            std::stringstream ss(mnd);
            std::string tok;
            while (std::getline(ss, tok, ',')) v.push_back(std::stol(tok));
            if (v.size() != 3) throw Error("ParseError", "--mnd needs m,n,d");
            OrsReport rep = ors_check(v[0], v[1], v[2], ors_o.threads);
            if (ors_o.format == "json") {
                nlohmann::json j{{"input", {{"m", v[0]}, {"n", v[1]}, {"d", v[2]}}},
                                 {"delta", rep.delta},
                                 {"triple", rep.triple.to_string()},
                                 {"p_jc", poly_to_json(rep.p_jc)},
                                 {"lhs", poly_to_json(rep.lhs)},
                                 {"rhs", poly_to_json(rep.rhs)},
                                 {"ok", rep.ok}};
                out << j.dump() << "\n";
            } else {
                out << "delta: " << rep.delta << "\n";
                out << "p_jc: " << rep.p_jc.to_text() << "\n";
                out << "lhs:  " << rep.lhs.to_text() << "\n";
                out << "rhs:  " << rep.rhs.to_text() << "\n";
                out << (rep.ok ? "ok" : "MISMATCH") << "\n";
            }
            if (!rep.ok) return 2;
        } else if (c_verify->parsed()) {
            VerifyReport rep = verify_suite(max_mn, q_order, verify_o.threads);
            if (verify_o.format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& c : rep.checks)
                    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                nlohmann::json j{{"max_mn", rep.max_mn},
                                 {"q_order", rep.q_order},
                                 {"checks", arr},
                                 {"ok", rep.all_pass()}};
                out << j.dump() << "\n";
            } else {
                for (const auto& c : rep.checks)
                    out << (c.pass ? "PASS" : "FAIL") << " " << c.name << " (" << c.detail
                        << ")\n";
            }
            if (!rep.all_pass()) return 2;
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return verification_kind(e.kind()) ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace trisch
