#pragma once

// The two recursions computing Schroder polynomials and their assembly along
// three independent routes.
//
// Q acts on trinary pairs and, for knot inputs (one 1 in each word after
// bullet deletion), terminates with an exact Laurent polynomial:
//
//   Q(0x,0y) = t^-|x| Q(x1,y1) + q t^-|x| Q(x0,y0)
//   Q(1x,0y) = Q(x1,y.)           Q(0x,1y) = Q(x.,y1)
//   Q(1x,1y) = (t^|x| + a) Q(x.,y.)
//   Q(.x,.y) = Q(x.,y.)           Q(all bullets) = 1
//
// with |x| the number of 1s. R is the binary-pair analogue evaluated as a
// power series in q, truncated at a requested order; its base cases are
// ((1+a)/(1-q))^n.

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "trisch/invsets.hpp"
#include "trisch/parallel.hpp"
#include "trisch/paths.hpp"
#include "trisch/poly.hpp"
#include "trisch/seqs.hpp"

namespace trisch {

namespace detail {

inline long count_ones(const TriWord& w) {
    long k = 0;
    for (Tri c : w) k += (c == Tri::One);
    return k;
}

inline bool all_bullets(const TriWord& w) {
    for (Tri c : w)
        if (c != Tri::Bullet) return false;
    return true;
}

class QEvaluator {
public:
    const LaurentPoly& eval(const TriWord& x, const TriWord& y) {
        std::string key = to_string(x) + "|" + to_string(y);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (in_progress_.count(key))
            throw Error("CycleDetected", "recursion revisited state " + key);
        in_progress_.insert(key);
        LaurentPoly value = step(x, y);
        in_progress_.erase(key);
        return memo_.emplace(std::move(key), std::move(value)).first->second;
    }

private:
    std::unordered_map<std::string, LaurentPoly> memo_;
    std::unordered_set<std::string> in_progress_;

    static TriWord rotate(const TriWord& w, Tri tail) {
        TriWord out(w.begin() + 1, w.end());
        out.push_back(tail);
        return out;
    }

    LaurentPoly step(const TriWord& x, const TriWord& y) {
        if (all_bullets(x) && all_bullets(y)) return LaurentPoly(1);
        if (x.empty() || y.empty())
            throw Error("InadmissiblePair", "empty word before the all-bullet state");
        Tri hx = x.front(), hy = y.front();
        if (hx == Tri::Zero && hy == Tri::Zero) {
            int k = static_cast<int>(count_ones(TriWord(x.begin() + 1, x.end())));
            LaurentPoly out = eval(rotate(x, Tri::One), rotate(y, Tri::One)).shifted(1, 0, -k, 0);
            out += eval(rotate(x, Tri::Zero), rotate(y, Tri::Zero)).shifted(1, 1, -k, 0);
            return out;
        }
        if (hx == Tri::One && hy == Tri::Zero)
            return eval(rotate(x, Tri::One), rotate(y, Tri::Bullet));
        if (hx == Tri::Zero && hy == Tri::One)
            return eval(rotate(x, Tri::Bullet), rotate(y, Tri::One));
        if (hx == Tri::One && hy == Tri::One) {
            int k = static_cast<int>(count_ones(TriWord(x.begin() + 1, x.end())));
            const LaurentPoly& child = eval(rotate(x, Tri::Bullet), rotate(y, Tri::Bullet));
            LaurentPoly out = child.shifted(1, 0, k, 0);
            out += child.shifted(1, 0, 0, 1);
            return out;
        }
        if (hx == Tri::Bullet && hy == Tri::Bullet)
            return eval(rotate(x, Tri::Bullet), rotate(y, Tri::Bullet));
        throw Error("InadmissiblePair",
                    "head letters (" + std::string(1, static_cast<char>(hx)) + "," +
                        std::string(1, static_cast<char>(hy)) + ") have no rule");
    }
};

class REvaluator {
public:
    explicit REvaluator(int order) : order_(order) {}

    // Polynomial in (q,t,a) carrying the series coefficients up to q^budget.
    LaurentPoly eval(const BitWord& u, const BitWord& v, int budget) {
        auto key = std::make_tuple(to_string(u), to_string(v), budget);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        LaurentPoly value = step(u, v, budget);
        memo_.emplace(std::move(key), value);
        return value;
    }

private:
    int order_;
    std::map<std::tuple<std::string, std::string, int>, LaurentPoly> memo_;

    static BitWord rotate(const BitWord& w, int tail) {
        BitWord out(w.begin() + 1, w.end());
        out.push_back(tail);
        return out;
    }
    static BitWord behead(const BitWord& w) { return BitWord(w.begin() + 1, w.end()); }

    // ((1+a) * (1 + q + ... ))^n truncated at q^budget.
    LaurentPoly base_case(long n, int budget) const {
        QSeries geo = QSeries::geometric(budget);
        QSeries s = QSeries::one(budget);
        LaurentPoly one_plus_a = LaurentPoly(1) + LaurentPoly::a();
        for (long i = 0; i < n; ++i) s = s * geo * one_plus_a;
        return s.to_poly();
    }

    LaurentPoly step(const BitWord& u, const BitWord& v, int budget) {
        if (u.empty() && v.empty()) return LaurentPoly(1);
        if (u.empty() || v.empty()) {
            const BitWord& rest = u.empty() ? v : u;
            if (trisch::count_ones(rest) != 0)
                throw Error("InadmissiblePair", "unbalanced pair reached an empty word");
            return base_case(static_cast<long>(rest.size()), budget);
        }
        int hu = u.front(), hv = v.front();
        if (hu == 0 && hv == 0) {
            long k = trisch::count_ones(behead(u));
            LaurentPoly tk = LaurentPoly::t(static_cast<int>(-k));
            LaurentPoly out = tk * eval(rotate(u, 1), rotate(v, 1), budget);
            if (budget >= 1)
                out += tk * LaurentPoly::q() * eval(rotate(u, 0), rotate(v, 0), budget - 1);
            return out;
        }
        if (hu == 1 && hv == 0) return eval(rotate(u, 1), behead(v), budget);
        if (hu == 0 && hv == 1) return eval(behead(u), rotate(v, 1), budget);
        long k = trisch::count_ones(behead(u));
        LaurentPoly w = LaurentPoly::t(static_cast<int>(k)) + LaurentPoly::a();
        return w * eval(behead(u), behead(v), budget);
    }
};

} // namespace detail

// Exact evaluation for knot pairs; the all-bullet pair is the base case with
// value 1. Inputs with more than one 1 per word are links and must go through
// eval_R_series.
inline LaurentPoly eval_Q(const TriWord& x, const TriWord& y) {
    if (detail::all_bullets(x) && detail::all_bullets(y)) return LaurentPoly(1);
    BitWord u = drop_bullets(x), v = drop_bullets(y);
    if (count_ones(u) != 1 || count_ones(v) != 1)
        throw Error("NonKnotInput", "eval_Q needs exactly one 1 per word; use eval_R_series");
    return detail::QEvaluator().eval(x, y);
}

inline QSeries eval_R_series(const BitWord& u, const BitWord& v, int order) {
    if (count_ones(u) != count_ones(v))
        throw Error("DomainError", "R needs the same number of 1s in both words");
    LaurentPoly p = detail::REvaluator(order).eval(u, v, order);
    return QSeries::from_poly(p, order);
}

enum class Route { Recursion, Paths, InvSets, All };

inline Route route_parse(const std::string& s) {
    if (s == "recursion") return Route::Recursion;
    if (s == "paths") return Route::Paths;
    if (s == "invsets") return Route::InvSets;
    if (s == "all") return Route::All;
    throw Error("ParseError", "unknown route '" + s + "'");
}

namespace detail {

inline LaurentPoly schroder_by_recursion(const TriangularTriple& t) {
    SequenceData s = build_sequences(t);
    return LaurentPoly::t(static_cast<int>(t.tau().size())) * eval_Q(s.x, s.y);
}

// Sum over paths of q^area t^dinv prod_{addable} (1 + a t^-xi).
inline LaurentPoly schroder_by_paths(const TriangularTriple& t, int threads) {
    std::vector<DyckPath> paths = enumerate_subpaths(t);
    return parallel_sum<LaurentPoly>(paths.size(), threads, [&](std::size_t i) {
        const DyckPath& p = paths[i];
        PathStats st = path_statistics(p);
        LaurentPoly term = LaurentPoly::q(static_cast<int>(st.area)) *
                           LaurentPoly::t(static_cast<int>(st.dinv));
        BoundaryData b = boundary_data(p);
        for (long xi : b.xi)
            term *= LaurentPoly(1) + LaurentPoly::a() * LaurentPoly::t(static_cast<int>(-xi));
        return term;
    });
}

// t^|tau| * sum over shifted sets of q^area' t^-codinv' prod over
// nonnegative cogenerators of (1 + a t^-xi_k).
inline LaurentPoly schroder_by_invsets(const TriangularTriple& t, int threads) {
    std::vector<DyckPath> paths = enumerate_subpaths(t);
    LaurentPoly sum = parallel_sum<LaurentPoly>(paths.size(), threads, [&](std::size_t i) {
        InvariantSet d = shift_I(bij_A(paths[i]), t);
        InvariantSet::Stats st = d.statistics();
        LaurentPoly term = LaurentPoly::q(static_cast<int>(st.area_p)) *
                           LaurentPoly::t(static_cast<int>(-st.codinv_p));
        for (long k : d.generators().cogen_nonneg)
            term *= LaurentPoly(1) +
                    LaurentPoly::a() * LaurentPoly::t(static_cast<int>(-d.xi_k(k)));
        return term;
    });
    return LaurentPoly::t(static_cast<int>(t.tau().size())) * sum;
}

} // namespace detail

// The triangular Schroder polynomial S_{m,n,l}(q,t,a). Route::All runs the
// recursion, path-sum, and invariant-set routes and insists they agree.
inline LaurentPoly schroder(const TriangularTriple& t, Route route = Route::All,
                            int threads = 1) {
    switch (route) {
    case Route::Recursion: return detail::schroder_by_recursion(t);
    case Route::Paths: return detail::schroder_by_paths(t, threads);
    case Route::InvSets: return detail::schroder_by_invsets(t, threads);
    case Route::All: break;
    }
    LaurentPoly rec = detail::schroder_by_recursion(t);
    LaurentPoly pat = detail::schroder_by_paths(t, threads);
    LaurentPoly inv = detail::schroder_by_invsets(t, threads);
    if (rec != pat || rec != inv)
        throw Error("RouteMismatch", "routes disagree for " + t.to_string() +
                                         ": recursion=" + rec.to_text() +
                                         " paths=" + pat.to_text() + " invsets=" + inv.to_text());
    return rec;
}

// The triangular (q,t)-Catalan: the a=0 part of the Schroder polynomial,
// computed directly as the path generating function.
inline LaurentPoly catalan(const TriangularTriple& t, int threads = 1) {
    std::vector<DyckPath> paths = enumerate_subpaths(t);
    return parallel_sum<LaurentPoly>(paths.size(), threads, [&](std::size_t i) {
        PathStats st = path_statistics(paths[i]);
        return LaurentPoly::q(static_cast<int>(st.area)) *
               LaurentPoly::t(static_cast<int>(st.dinv));
    });
}

// The rational case l = mn-1 written over 0-normalized sets with the full
// cogenerator product (negative cogenerators included). Used as an
// independent cross-check against schroder(m, n, mn-1).
inline LaurentPoly rational_schroder_full_cogen(long m, long n) {
    TriangularTriple t(m, n, m * n - 1);
    std::vector<DyckPath> paths = enumerate_subpaths(t);
    LaurentPoly sum;
    for (const DyckPath& p : paths) {
        InvariantSet d = bij_A(p);
        InvariantSet::Stats st = d.statistics();
        LaurentPoly term = LaurentPoly::q(static_cast<int>(st.area)) *
                           LaurentPoly::t(static_cast<int>(st.dinv));
        for (long k : d.generators().cogen)
            term *= LaurentPoly(1) +
                    LaurentPoly::a() * LaurentPoly::t(static_cast<int>(-d.xi_k(k)));
        sum += term;
    }
    return sum;
}

struct CrossVerifyReport {
    std::vector<TriangularTriple> triples;
    LaurentPoly value;
};

// Computes the Schroder polynomial over every triple presenting lambda within
// the bound and checks they coincide.
inline CrossVerifyReport cross_verify(const Partition& lambda, long bound, int threads = 1,
                                      Route route = Route::All) {
    CrossVerifyReport rep;
    rep.triples = find_triples(lambda, bound);
    bool first = true;
    for (const TriangularTriple& t : rep.triples) {
        LaurentPoly s = schroder(t, route, threads);
        if (first) {
            rep.value = s;
            first = false;
        } else if (s != rep.value) {
            throw Error("InvarianceViolation",
                        "S differs between triples " + rep.triples.front().to_string() + " and " +
                            t.to_string());
        }
    }
    return rep;
}

} // namespace trisch
