#pragma once

// Tuples of skew rows/columns attached to a Dyck path, the vertical strip
// rho_pi = (lambda + 1^{floor(s)})/lambda, attacking-pair counts, tableau
// enumeration over the one- and two-alphabet letter sets, LLT polynomials,
// the transport between the rotated tuple and the strip, standardization,
// Gessel expansions, and the hook coefficients of the Schroder polynomial
// computed either by a-extraction or through super fillings of the strip.
//
// All positions (contents, phi values) are exact rationals; the content of a
// cell in component j is its integer base plus (j+1)*eps with
// eps = 1/(r_tilde + 1).

#include <boost/rational.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "trisch/parallel.hpp"
#include "trisch/paths.hpp"
#include "trisch/poly.hpp"
#include "trisch/recursion.hpp"

namespace trisch {

using Rat = boost::rational<long long>;

enum class CompKind { Rows, Columns };

// A tuple of single-row or single-column components. pos[j][i] is the
// position value (content or phi) of the i-th cell of component j in
// geometric order: left to right along rows, bottom to top up columns.
// Contents decrease going up a column, so Columns components carry
// decreasing pos lists.
struct TupleShape {
    CompKind kind = CompKind::Rows;
    std::vector<std::vector<Rat>> pos;

    std::size_t cell_count() const {
        std::size_t n = 0;
        for (const auto& comp : pos) n += comp.size();
        return n;
    }
};

struct FlatCell {
    std::size_t comp = 0;
    std::size_t idx = 0;
    Rat pos;
};

inline std::vector<FlatCell> flatten(const TupleShape& shape) {
    std::vector<FlatCell> out;
    for (std::size_t j = 0; j < shape.pos.size(); ++j)
        for (std::size_t i = 0; i < shape.pos[j].size(); ++i)
            out.push_back({j, i, shape.pos[j][i]});
    return out;
}

// Unordered attacking pairs: cells at distance strictly between 0 and 1.
// (Comparisons stay rational-rational; the mixed rational/int operators of
// this boost version recurse.)
inline long count_attacks(const TupleShape& shape) {
    std::vector<FlatCell> cells = flatten(shape);
    const Rat zero(0), one(1), minus_one(-1);
    long count = 0;
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
            Rat d = cells[i].pos - cells[j].pos;
            if (d != zero && d > minus_one && d < one) ++count;
        }
    return count;
}

// Letters are coded 1..max_x for the ascending first alphabet and
// max_x+1..max_x+max_y for the second, which sits entirely above the first
// and is internally reversed (code max_x+1 is its largest-index letter, code
// max_x+max_y its smallest). Plain tableaux are the max_y = 0 case.
struct Alphabet {
    int max_x = 0;
    int max_y = 0;
    int size() const { return max_x + max_y; }
    bool is_y(int code) const { return code > max_x; }
    // Slot of a letter in the weight vector (x_1..x_max_x, y_1..y_max_y).
    int weight_slot(int code) const {
        if (!is_y(code)) return code - 1;
        return max_x + (max_y - (code - max_x));
    }
};

// Row components: entries weakly increase rightward, equal neighbours only in
// the first alphabet. Column components: entries weakly increase upward,
// equal neighbours only in the second.
inline bool filling_legal(const TupleShape& shape, const Alphabet& al,
                          const std::vector<int>& fill) {
    std::size_t flat = 0;
    for (const auto& comp : shape.pos) {
        for (std::size_t i = 0; i < comp.size(); ++i, ++flat) {
            if (i == 0) continue;
            int prev = fill[flat - 1], cur = fill[flat];
            if (prev > cur) return false;
            if (prev == cur) {
                bool y = al.is_y(cur);
                if (shape.kind == CompKind::Rows ? y : !y) return false;
            }
        }
    }
    return true;
}

// Fillings with a prescribed weight vector (counts per letter), e.g. the
// hook pairing's (k, floor(s)-k) fillings at al = {1,1}.
inline std::vector<std::vector<int>> enumerate_fillings(const TupleShape& shape,
                                                        const Alphabet& al);
inline std::vector<int> weight_vector(const Alphabet& al, const std::vector<int>& fill);

inline std::vector<std::vector<int>> enumerate_fillings_with_weight(
    const TupleShape& shape, const Alphabet& al, const std::vector<int>& weight) {
    std::vector<std::vector<int>> out;
    for (auto& f : enumerate_fillings(shape, al))
        if (weight_vector(al, f) == weight) out.push_back(std::move(f));
    return out;
}

inline std::vector<std::vector<int>> enumerate_fillings(const TupleShape& shape,
                                                        const Alphabet& al) {
    std::size_t total = shape.cell_count();
    std::vector<std::size_t> idx_of; // cell index within its component
    for (const auto& comp : shape.pos)
        for (std::size_t i = 0; i < comp.size(); ++i) idx_of.push_back(i);
    std::vector<std::vector<int>> out;
    std::vector<int> cur(total, 0);
    auto rec = [&](auto&& self, std::size_t flat) -> void {
        if (flat == total) {
            out.push_back(cur);
            return;
        }
        for (int letter = 1; letter <= al.size(); ++letter) {
            if (idx_of[flat] > 0) {
                int prev = cur[flat - 1];
                if (prev > letter) continue;
                if (prev == letter) {
                    bool y = al.is_y(letter);
                    if (shape.kind == CompKind::Rows ? y : !y) continue;
                }
            }
            cur[flat] = letter;
            self(self, flat + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// Attacking inversions: pairs with pos(c1) < pos(c2), |pos difference| < 1,
// and either T(c1) > T(c2) or equal letters from the second alphabet.
inline long inv_count(const TupleShape& shape, const Alphabet& al,
                      const std::vector<int>& fill) {
    std::vector<FlatCell> cells = flatten(shape);
    const Rat zero(0), one(1);
    long inv = 0;
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (i == j) continue;
            Rat d = cells[j].pos - cells[i].pos;
            if (!(d > zero && d < one)) continue;
            if (fill[i] > fill[j] || (fill[i] == fill[j] && al.is_y(fill[i]))) ++inv;
        }
    return inv;
}

inline std::vector<int> weight_vector(const Alphabet& al, const std::vector<int>& fill) {
    std::vector<int> w(al.size(), 0);
    for (int code : fill) ++w[al.weight_slot(code)];
    return w;
}

// Polynomial in commuting variables with LaurentPoly (t) coefficients, keyed
// by exponent vectors.
struct VarPoly {
    std::map<std::vector<int>, LaurentPoly> terms;

    void add(const std::vector<int>& expo, const LaurentPoly& c) {
        auto [it, fresh] = terms.emplace(expo, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    friend bool operator==(const VarPoly& l, const VarPoly& r) { return l.terms == r.terms; }
    friend bool operator!=(const VarPoly& l, const VarPoly& r) { return !(l == r); }
};

// LLT generating function over plain semistandard fillings with entries in
// [1, num_vars], weighted t^inv.
inline VarPoly llt_poly(const TupleShape& shape, int num_vars) {
    Alphabet al{num_vars, 0};
    VarPoly out;
    for (const auto& fill : enumerate_fillings(shape, al))
        out.add(weight_vector(al, fill), LaurentPoly::t(static_cast<int>(inv_count(shape, al, fill))));
    return out;
}

// Data of the tuple nu(pi): the sorted skew rows, their rotation into
// columns, the h values, and the bookkeeping needed to transport fillings
// onto the strip rho_pi.
struct NuData {
    TupleShape nu;                           // rows, contents ascending per component
    TupleShape nu_R;                         // columns, same contents reversed
    std::vector<Rat> h;                      // h_1..h_{r_tilde} in source order
    std::vector<long> sigma;                 // 0-based one-line: rank of (h_r~,..,h_1)
    Rat eps;                                 // 1/(r_tilde + 1)
    std::vector<Rat> comp_h;                 // h value attached to tuple slot j
    std::vector<std::vector<long>> bases;    // integer contents per slot, ascending
};

inline NuData nu_of_path(const DyckPath& p) {
    const long m = p.triple.m(), n = p.triple.n(), ell = p.triple.ell();
    const long r_tilde = ell / n + 1;
    const long s_floor = ell / m;
    const Rat s(ell, m), slope(n, m);

    Partition taut = p.triple.tau().transpose();
    Partition lamt = p.lambda.transpose();
    std::vector<long> tau_t(r_tilde), lam_t(r_tilde);
    tau_t[0] = s_floor;
    lam_t[0] = s_floor;
    for (long i = 1; i < r_tilde; ++i) {
        tau_t[i] = taut.part(i);
        lam_t[i] = lamt.part(i);
    }

    NuData out;
    out.eps = Rat(1, r_tilde + 1);
    for (long i = 0; i < r_tilde; ++i) out.h.push_back(s - slope * i - tau_t[i]);

    // Skew rows gamma_i: columns (tau~_i - lam~_i, tau~_i - lam~_{i+1}] with
    // the last component open-ended at tau~ itself.
    std::vector<std::pair<long, long>> gamma(r_tilde); // half-open (lo, hi]
    for (long i = 0; i + 1 < r_tilde; ++i)
        gamma[i] = {tau_t[i] - lam_t[i], tau_t[i] - lam_t[i + 1]};
    gamma[r_tilde - 1] = {tau_t[r_tilde - 1] - lam_t[r_tilde - 1], tau_t[r_tilde - 1]};

    // sigma sorts (h_{r~}, ..., h_1) ascending; slot j of nu receives the
    // gamma component whose h value has rank j.
    std::vector<long> order(r_tilde);
    for (long i = 0; i < r_tilde; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](long x, long y) {
        return out.h[r_tilde - 1 - x] < out.h[r_tilde - 1 - y];
    });
    for (long k = 0; k + 1 < r_tilde; ++k)
        if (out.h[r_tilde - 1 - order[k]] == out.h[r_tilde - 1 - order[k + 1]])
            throw Error("InternalMismatch", "tied h values");
    out.sigma.assign(r_tilde, 0);
    for (long rank = 0; rank < r_tilde; ++rank) out.sigma[order[rank]] = rank;

    out.nu.kind = CompKind::Rows;
    out.nu_R.kind = CompKind::Columns;
    for (long j = 0; j < r_tilde; ++j) {
        long src = r_tilde - 1 - order[j]; // gamma index feeding slot j
        out.comp_h.push_back(out.h[src]);
        std::vector<long> bases;
        for (long x = gamma[src].first + 1; x <= gamma[src].second; ++x) bases.push_back(x - 1);
        std::vector<Rat> row, col;
        for (long b : bases) row.push_back(Rat(b) + Rat(j + 1) * out.eps);
        col.assign(row.rbegin(), row.rend());
        out.nu.pos.push_back(std::move(row));
        out.nu_R.pos.push_back(std::move(col));
        out.bases.push_back(std::move(bases));
    }
    return out;
}

// The vertical strip (lambda + 1^{floor(s)})/lambda as a tuple of columns:
// one cell per row y = 1..floor(s) at phi = s - (n/m) lambda_y - y, grouped
// into maximal runs of constant lambda_y (the columns of the strip).
inline TupleShape rho_strip(const DyckPath& p) {
    const long ell = p.triple.ell(), m = p.triple.m(), n = p.triple.n();
    const long s_floor = ell / m;
    const Rat s(ell, m), slope(n, m);
    TupleShape shape;
    shape.kind = CompKind::Columns;
    for (long y = 1; y <= s_floor; ++y) {
        Rat phi = s - slope * p.lambda.part(y) - y;
        if (y == 1 || p.lambda.part(y) != p.lambda.part(y - 1))
            shape.pos.emplace_back();
        shape.pos.back().push_back(phi);
    }
    return shape;
}

// Transport a filling of nu(pi)^R onto rho_pi: the cell with integer content
// b in slot j lands on the strip cell with phi = b + h value of the slot.
inline std::vector<int> transport_psi(const NuData& nu, const TupleShape& rho,
                                      const std::vector<int>& fill) {
    std::map<Rat, std::size_t> rho_index;
    std::vector<FlatCell> rho_cells = flatten(rho);
    for (std::size_t i = 0; i < rho_cells.size(); ++i) rho_index[rho_cells[i].pos] = i;
    if (rho_index.size() != rho_cells.size())
        throw Error("InternalMismatch", "strip phi values are not distinct");
    std::vector<int> out(rho_cells.size(), 0);
    std::vector<bool> hit(rho_cells.size(), false);
    std::size_t flat = 0;
    for (std::size_t j = 0; j < nu.nu_R.pos.size(); ++j) {
        for (std::size_t i = 0; i < nu.nu_R.pos[j].size(); ++i, ++flat) {
            // geometric order reverses the stored ascending bases
            long base = nu.bases[j][nu.bases[j].size() - 1 - i];
            Rat target = Rat(base) + nu.comp_h[j];
            auto it = rho_index.find(target);
            if (it == rho_index.end())
                throw Error("InternalMismatch", "tuple cell has no strip counterpart");
            if (hit[it->second])
                throw Error("InternalMismatch", "two tuple cells map to one strip cell");
            hit[it->second] = true;
            out[it->second] = fill[flat];
        }
    }
    if (flat != rho_cells.size())
        throw Error("InternalMismatch", "tuple and strip have different sizes");
    return out;
}

// Standardization: rank cells by letter, breaking ties within the first
// alphabet by ascending position and within the second by descending
// position. Returns the standard filling (letters 1..n, alphabet {n,0}).
inline std::vector<int> standardize(const TupleShape& shape, const Alphabet& al,
                                    const std::vector<int>& fill) {
    std::vector<FlatCell> cells = flatten(shape);
    std::vector<std::size_t> order(cells.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (fill[x] != fill[y]) return fill[x] < fill[y];
        if (al.is_y(fill[x])) return cells[x].pos > cells[y].pos;
        return cells[x].pos < cells[y].pos;
    });
    std::vector<int> out(cells.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank)
        out[order[rank]] = static_cast<int>(rank + 1);
    return out;
}

// All standard fillings (letters 1..n used once, strictly increasing along
// every component).
inline std::vector<std::vector<int>> enumerate_standard(const TupleShape& shape) {
    std::size_t total = shape.cell_count();
    std::vector<std::size_t> comp_of;
    std::vector<std::size_t> idx_of;
    for (std::size_t j = 0; j < shape.pos.size(); ++j)
        for (std::size_t i = 0; i < shape.pos[j].size(); ++i) {
            comp_of.push_back(j);
            idx_of.push_back(i);
        }
    std::vector<std::vector<int>> out;
    std::vector<int> cur(total, 0);
    std::vector<bool> used(total + 1, false);
    auto rec = [&](auto&& self, std::size_t flat) -> void {
        if (flat == total) {
            out.push_back(cur);
            return;
        }
        for (int v = 1; v <= static_cast<int>(total); ++v) {
            if (used[v]) continue;
            if (idx_of[flat] > 0 && cur[flat - 1] >= v) continue;
            used[v] = true;
            cur[flat] = v;
            self(self, flat + 1);
            used[v] = false;
        }
    };
    rec(rec, 0);
    return out;
}

// Position descents of a standard filling: k (1-based) such that the cell
// holding k sits at larger position than the cell holding k+1.
inline std::set<int> descent_set(const TupleShape& shape, const std::vector<int>& fill) {
    std::vector<FlatCell> cells = flatten(shape);
    std::vector<Rat> pos_of(cells.size() + 1);
    for (std::size_t i = 0; i < cells.size(); ++i) pos_of[fill[i]] = cells[i].pos;
    std::set<int> out;
    for (std::size_t k = 1; k < cells.size(); ++k)
        if (pos_of[k] > pos_of[k + 1]) out.insert(static_cast<int>(k));
    return out;
}

// Gessel's fundamental quasisymmetric function Q_{n,J} truncated to
// variables x_1..x_num_vars.
inline VarPoly gessel_expand(int n, const std::set<int>& J, int num_vars) {
    VarPoly out;
    std::vector<int> seq(n, 0);
    auto rec = [&](auto&& self, int k, int lo) -> void {
        if (k == n) {
            std::vector<int> w(num_vars, 0);
            for (int v : seq) ++w[v - 1];
            out.add(w, LaurentPoly(1));
            return;
        }
        for (int v = lo; v <= num_vars; ++v) {
            if (k > 0 && v == seq[k - 1] && J.count(k)) continue;
            seq[k] = v;
            self(self, k + 1, v);
        }
    };
    rec(rec, 0, 1);
    return out;
}

// Super analogue over the two-alphabet letter set: equal consecutive letters
// from the first alphabet forbid positions in J, from the second alphabet
// require them.
inline VarPoly gessel_expand_super(int n, const std::set<int>& J, const Alphabet& al) {
    VarPoly out;
    std::vector<int> seq(n, 0);
    auto rec = [&](auto&& self, int k, int lo) -> void {
        if (k == n) {
            std::vector<int> w(al.size(), 0);
            for (int v : seq) ++w[al.weight_slot(v)];
            out.add(w, LaurentPoly(1));
            return;
        }
        for (int v = lo; v <= al.size(); ++v) {
            if (k > 0 && v == seq[k - 1]) {
                bool need_descent = al.is_y(v);
                if (J.count(k) != need_descent) continue;
            }
            seq[k] = v;
            self(self, k + 1, v);
        }
    };
    rec(rec, 0, 1);
    return out;
}

enum class HookRoute { Schroder, Llt };

// Hook coefficients of the Schroder polynomial: either a-extraction from the
// recursion route, or the super-filling sum over strips,
// sum_pi q^area t^dinv sum_{P in fillings(rho_pi; k, floor(s)-k)}
// t^{inv(P) - I(pi)}, which never touches xi. The llt route needs
// floor(s) > rows(tau) so every addable box owns a strip column.
inline std::vector<LaurentPoly> hook_coefficients(const TriangularTriple& t, HookRoute route,
                                                  int threads = 1) {
    if (route == HookRoute::Schroder)
        return schroder(t, Route::Recursion, threads).a_coefficients();

    const long s_floor = t.ell() / t.m();
    if (s_floor <= t.tau().rows()) {
        std::string msg = "floor(s) = " + std::to_string(s_floor) +
                          " <= rows(tau) = " + std::to_string(t.tau().rows());
        for (const TriangularTriple& alt : find_triples(t.tau(), 50)) {
            if (alt.ell() / alt.m() > alt.tau().rows()) {
                msg += "; try triple " + alt.to_string();
                break;
            }
        }
        throw Error("SlopeTooShallow", msg);
    }

    struct HookSum {
        std::vector<LaurentPoly> by_k;
        HookSum& operator+=(const HookSum& o) {
            if (by_k.size() < o.by_k.size()) by_k.resize(o.by_k.size());
            for (std::size_t k = 0; k < o.by_k.size(); ++k) by_k[k] += o.by_k[k];
            return *this;
        }
    };
    std::vector<DyckPath> paths = enumerate_subpaths(t);
    Alphabet al{1, 1};
    HookSum total = parallel_sum<HookSum>(paths.size(), threads, [&](std::size_t i) {
        const DyckPath& p = paths[i];
        PathStats st = path_statistics(p);
        LaurentPoly prefix = LaurentPoly::q(static_cast<int>(st.area)) *
                             LaurentPoly::t(static_cast<int>(st.dinv));
        TupleShape rho = rho_strip(p);
        long attacks = count_attacks(rho);
        HookSum sum;
        sum.by_k.resize(s_floor + 1);
        for (const auto& fill : enumerate_fillings(rho, al)) {
            long k = 0;
            for (int code : fill) k += (code == 1);
            long inv = inv_count(rho, al, fill);
            sum.by_k[k] += prefix * LaurentPoly::t(static_cast<int>(inv - attacks));
        }
        return sum;
    });
    std::vector<LaurentPoly> out = std::move(total.by_k);
    out.resize(s_floor + 1);
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

} // namespace trisch
