#pragma once

// Aggregated verification suite: the cross-route, bijection, braid, series,
// hook, specialization, and closed-form identities run over every valid
// triple up to a bound, with one machine-readable pass/fail entry per check
// family.

#include <array>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "trisch/invsets.hpp"
#include "trisch/knots.hpp"
#include "trisch/recursion.hpp"
#include "trisch/shuffle.hpp"

namespace trisch {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    long max_mn = 0;
    int q_order = 0;
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline std::vector<TriangularTriple> triples_up_to(long mn_bound) {
    std::vector<TriangularTriple> out;
    for (long m = 1; m <= mn_bound; ++m)
        for (long n = 1; m * n <= mn_bound; ++n) {
            if (std::gcd(m, n) != 1) continue;
            for (long l = 1; l < m * n; ++l) out.emplace_back(m, n, l);
        }
    return out;
}

inline void run_check(VerifyReport& rep, const std::string& name,
                      const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    try {
        r.detail = body();
        r.pass = true;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    rep.checks.push_back(std::move(r));
}

} // namespace detail

inline VerifyReport verify_suite(long max_mn, int q_order, int threads = 1) {
    if (max_mn < 6) throw Error("DomainError", "verify needs max_mn >= 6");
    if (q_order < 1) throw Error("DomainError", "verify needs q_order >= 1");
    VerifyReport rep;
    rep.max_mn = max_mn;
    rep.q_order = q_order;
    std::vector<TriangularTriple> triples = detail::triples_up_to(max_mn);

    detail::run_check(rep, "route-equality", [&] {
        for (const TriangularTriple& t : triples) schroder(t, Route::All, threads);
        return std::to_string(triples.size()) + " triples, three routes each";
    });

    detail::run_check(rep, "statistics-identities", [&] {
        long paths_checked = 0;
        for (const TriangularTriple& t : triples) {
            long size = t.tau().size();
            for (const DyckPath& p : enumerate_subpaths(t)) {
                PathStats ps = path_statistics(p);
                InvariantSet d = shift_I(bij_A(p), t);
                auto st = d.statistics();
                if (st.area_p != ps.area)
                    throw Error("CheckFailed", "area mismatch at " + t.to_string());
                if (ps.dinv + st.codinv_p != size)
                    throw Error("CheckFailed", "dinv+codinv' mismatch at " + t.to_string());
                if (d.xi_k(-1) != 1)
                    throw Error("CheckFailed", "xi_{-1} != 1 at " + t.to_string());
                ++paths_checked;
            }
        }
        return std::to_string(paths_checked) + " paths";
    });

    detail::run_check(rep, "xi-bijection", [&] {
        for (const TriangularTriple& t : triples) {
            for (const DyckPath& p : enumerate_subpaths(t)) {
                InvariantSet d = shift_I(bij_A(p), t);
                BoundaryData b = boundary_data(p);
                auto cg = d.generators().cogen_nonneg;
                std::set<long> hats;
                for (const Box& box : b.addable) hats.insert(t.gamma_hat(box));
                if (hats != std::set<long>(cg.begin(), cg.end()))
                    throw Error("CheckFailed", "addable/cogen mismatch at " + t.to_string());
                for (const Box& box : b.addable)
                    if (b.xi_by_gamma_hat.at(t.gamma_hat(box)) != d.xi_k(t.gamma_hat(box)))
                        throw Error("CheckFailed", "xi mismatch at " + t.to_string());
            }
        }
        return "addable boxes match nonnegative cogenerators";
    });

    detail::run_check(rep, "series-truncation", [&] {
        for (const TriangularTriple& t : triples) {
            SequenceData s = build_sequences(t);
            QSeries r = eval_R_series(s.u, s.v, q_order);
            if (r != QSeries::from_poly(eval_Q(s.x, s.y), q_order))
                throw Error("CheckFailed", "R != Q at " + t.to_string());
        }
        return "R matches Q to order " + std::to_string(q_order);
    });

    detail::run_check(rep, "braid-delta", [&] {
        for (const TriangularTriple& t : triples) {
            SequenceData s = build_sequences(t);
            BraidInvariants inv = braid_invariants(binary_braid(s.u, s.v));
            if (inv.c != 1)
                throw Error("CheckFailed", "closure is not a knot at " + t.to_string());
            if (inv.delta != t.tau().size())
                throw Error("CheckFailed", "delta != |tau| at " + t.to_string());
            if (binary_delta_formula(s.u, s.v, inv.c) != inv.delta)
                throw Error("CheckFailed", "delta formula mismatch at " + t.to_string());
            BraidInvariants cox = braid_invariants(coxeter_braid(t.tau().part(1) + 1, t.tau()));
            if (cox.delta != t.tau().size())
                throw Error("CheckFailed", "coxeter delta mismatch at " + t.to_string());
        }
        return "binary closures are knots with delta = |tau|";
    });

    detail::run_check(rep, "hook-equality", [&] {
        long done = 0;
        for (const TriangularTriple& t : triples) {
            if (t.tau().size() > 6) continue;
            if (t.ell() / t.m() <= t.tau().rows()) continue;
            if (t.ell() / t.m() > 8) continue; // keep strip enumeration small
            if (hook_coefficients(t, HookRoute::Llt, threads) !=
                hook_coefficients(t, HookRoute::Schroder, threads))
                throw Error("CheckFailed", "hook mismatch at " + t.to_string());
            ++done;
        }
        return std::to_string(done) + " compliant triples";
    });

    detail::run_check(rep, "ors-specialization", [&] {
        for (auto [m, n, d] : std::vector<std::array<long, 3>>{
                 {2, 3, 1}, {2, 3, 2}, {3, 4, 1}, {2, 5, 2}}) {
            OrsReport r = ors_check(m, n, d, threads);
            if (!r.ok)
                throw Error("CheckFailed", "q=1 specialization mismatch at (" +
                                               std::to_string(m) + "," + std::to_string(n) +
                                               "," + std::to_string(d) + ")");
        }
        return "4 cable specializations";
    });

    detail::run_check(rep, "cable-closed-forms", [&] {
        long done = 0;
        for (long a = 1; a <= 9; ++a)
            for (long b = 1; b <= 9; ++b) {
                if (std::gcd(a, b) != 1) continue;
                for (long g = 2; a * b * g * g <= 36; ++g) {
                    AppendixBData ab = appendix_b(a, b, g); // self-checking
                    CableParams cp = cable_params(a, b, g);
                    if (ab.u != cp.u || ab.v != cp.v)
                        throw Error("CheckFailed", "cable/appendix mismatch");
                    ++done;
                }
            }
        return std::to_string(done) + " cable parameter sets";
    });

    return rep;
}

} // namespace trisch
