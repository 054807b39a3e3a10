#pragma once

// Braid words and the topology-facing assembly: Coxeter braids from
// partitions, binary-sequence braids, the normalizing exponent
// delta = (e + c - strands)/2, the KR Poincare series (carried as an integer
// delta plus a q-truncated body, so all exponents stay integral), cable
// parameters, closed forms for cable sequences, and the q=1 specialization
// check against the compactified-Jacobian Poincare polynomial.

#include <numeric>
#include <string>
#include <vector>

#include "trisch/grid.hpp"
#include "trisch/poly.hpp"
#include "trisch/recursion.hpp"
#include "trisch/seqs.hpp"

namespace trisch {

struct BraidWord {
    long strands = 1;
    std::vector<long> letters; // Artin generator indices in [1, strands-1], all positive

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(letters[i]);
        }
        return s;
    }
};

struct BraidInvariants {
    long e = 0;       // crossing count (all crossings positive here)
    long c = 0;       // cycles of the underlying permutation = link components
    long strands = 1;
    long delta = 0;   // (e + c - strands)/2
};

inline std::vector<long> braid_permutation(const BraidWord& b) {
    std::vector<long> perm(b.strands);
    for (long i = 0; i < b.strands; ++i) perm[i] = i;
    for (long letter : b.letters) {
        if (letter < 1 || letter >= b.strands)
            throw Error("DomainError", "generator index out of range");
        std::swap(perm[letter - 1], perm[letter]);
    }
    return perm;
}

inline long permutation_cycles(const std::vector<long>& perm) {
    std::vector<bool> seen(perm.size(), false);
    long cycles = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    return cycles;
}

inline BraidInvariants braid_invariants(const BraidWord& b) {
    BraidInvariants inv;
    inv.e = static_cast<long>(b.letters.size());
    inv.strands = b.strands;
    inv.c = permutation_cycles(braid_permutation(b));
    long num = inv.e + inv.c - inv.strands;
    if (num % 2 != 0) throw Error("DomainError", "normalizing exponent is not an integer");
    inv.delta = num / 2;
    return inv;
}

// Coxeter braid of (M, tau) for M > tau_1: Jucys-Murphy powers followed by
// the Coxeter element, with the level-i block conjugated to the top strands:
// (s_{M-i+1}..s_{M-1})(s_{M-1}..s_{M-i+1}).
inline BraidWord coxeter_braid(long strands, const Partition& tau) {
    if (strands <= tau.part(1))
        throw Error("StrandBound", "need strands > tau_1");
    BraidWord b;
    b.strands = strands;
    Partition mu = tau.transpose();
    for (long i = 2; i <= strands; ++i) {
        long exponent = mu.part(i - 1) - mu.part(i);
        for (long rep = 0; rep < exponent; ++rep) {
            for (long s = strands - i + 1; s <= strands - 1; ++s) b.letters.push_back(s);
            for (long s = strands - 1; s >= strands - i + 1; --s) b.letters.push_back(s);
        }
    }
    for (long s = 1; s <= strands - 1; ++s) b.letters.push_back(s);
    return b;
}

// Braid of a binary pair u = 0^i 1 0^j, v = 0^k 1 0^l on i+j+1 strands:
// (s_1..s_i)(s_1..s_{M-1})^k (s_2..s_{M-1})^l.
inline BraidWord binary_braid(const BitWord& u, const BitWord& v) {
    if (count_ones(u) != 1 || count_ones(v) != 1)
        throw Error("NonKnotInput", "binary braids need exactly one 1 per word");
    long i = 0;
    while (u[i] == 0) ++i;
    long k = 0;
    while (v[k] == 0) ++k;
    long strands = static_cast<long>(u.size());
    long l = static_cast<long>(v.size()) - k - 1;
    BraidWord b;
    b.strands = strands;
    for (long s = 1; s <= i; ++s) b.letters.push_back(s);
    for (long rep = 0; rep < k; ++rep)
        for (long s = 1; s <= strands - 1; ++s) b.letters.push_back(s);
    for (long rep = 0; rep < l; ++rep)
        for (long s = 2; s <= strands - 1; ++s) b.letters.push_back(s);
    return b;
}

// delta from the sequence data alone: ((i+j)(k+l) - j - l + c - 1)/2.
inline long binary_delta_formula(const BitWord& u, const BitWord& v, long components) {
    long i = 0;
    while (u[i] == 0) ++i;
    long j = static_cast<long>(u.size()) - i - 1;
    long k = 0;
    while (v[k] == 0) ++k;
    long l = static_cast<long>(v.size()) - k - 1;
    long num = (i + j) * (k + l) - j - l + components - 1;
    if (num % 2 != 0) throw Error("DomainError", "binary delta formula is not an integer");
    return num / 2;
}

struct BraidPair {
    BraidWord coxeter;
    BraidWord binary;
};

inline BraidPair build_braids(const TriangularTriple& t, long coxeter_strands = 0) {
    BraidPair out;
    long strands = coxeter_strands > 0 ? coxeter_strands : t.tau().part(1) + 1;
    out.coxeter = coxeter_braid(strands, t.tau());
    SequenceData s = build_sequences(t);
    out.binary = binary_braid(s.u, s.v);
    return out;
}

// The KR series of K_tau, up to the pure regrading (a t^{1/2} q^{-1/2})^delta
// which is carried as the integer delta rather than multiplied in. The body
// is the q-truncation of S_{m,n,l}/(1-q).
struct KrSeries {
    long delta = 0;
    QSeries body;
};

inline KrSeries kr_series(const TriangularTriple& t, int order, int threads = 1) {
    KrSeries out{t.tau().size(),
                 QSeries::from_poly(schroder(t, Route::Recursion, threads), order) *
                     QSeries::geometric(order)};
    return out;
}

struct AppendixBData {
    long c = 0, d = 0;  // Bezout pair: a*d - b*c = 1, 0 <= c <= a, 1 <= d <= b
    long m = 0, n = 0, ell = 0;
    TriangularTriple triple;
    Partition tau;      // equals the rectangle-diagonal partition tau_{ga,gb}
    BitWord u, v;       // 0^{g-1} 1 0^{g(a-1)} and 0^{gb} 1
};

// The partition cut out by the (R,S)-rectangle diagonal x/R + y/S = 1
// (weak inequality; the line may pass through lattice points).
inline Partition rectangle_diagonal_partition(long r, long s) {
    std::vector<long> parts;
    for (long y = 1; s * 1 + r * y <= r * s; ++y) parts.push_back(r * (s - y) / s);
    return Partition(std::move(parts));
}

// Closed forms for the triple and sequences presenting tau_{ga,gb}. The
// Bezout scan allows c = 0 (forced for a = 1), which reproduces the
// torus-knot sequences; with c,d restricted to positive values no solution
// exists for a = 1.
inline AppendixBData appendix_b(long a, long b, long g) {
    if (std::gcd(a, b) != 1) throw Error("NotCoprime", "appendix_b needs gcd(a,b)=1");
    if (g < 1) throw Error("DomainError", "appendix_b needs g >= 1");
    long c = -1, d = -1;
    for (long dd = 1; dd <= b; ++dd) {
        if ((a * dd - 1) % b == 0) {
            long cc = (a * dd - 1) / b;
            if (cc >= 0 && cc <= a) {
                c = cc;
                d = dd;
                break;
            }
        }
    }
    if (d < 0) throw Error("NoBezoutInRange", "no c,d with ad-bc=1, 0<=c<=a, 1<=d<=b");
    long m = g * a + c, n = g * b + d;
    long ell = n * g * a - 1;
    AppendixBData out{c, d, m, n, ell, TriangularTriple(m, n, ell), Partition{}, {}, {}};
    out.tau = rectangle_diagonal_partition(g * a, g * b);
    if (out.triple.tau() != out.tau)
        throw Error("InternalMismatch", "cable triple does not cut out tau_{ga,gb}");
    for (long i = 0; i < g - 1; ++i) out.u.push_back(0);
    out.u.push_back(1);
    for (long i = 0; i < g * (a - 1); ++i) out.u.push_back(0);
    for (long i = 0; i < g * b; ++i) out.v.push_back(0);
    out.v.push_back(1);
    SequenceData s = build_sequences(out.triple);
    if (s.u != out.u || s.v != out.v)
        throw Error("InternalMismatch", "closed-form u,v disagree with build_sequences");
    return out;
}

struct CableParams {
    BitWord u, v;
    long delta = 0; // delta(md, nd)
    TriangularTriple triple;
};

// Data of the (d, mnd+1)-cable of T(m,n): u = 0^{d-1} 1 0^{(m-1)d},
// v = 0^{nd} 1, delta(md,nd), and the triple cutting out tau_{md,nd}.
inline CableParams cable_params(long m, long n, long d) {
    if (std::gcd(m, n) != 1) throw Error("NotCoprime", "cable needs gcd(m,n)=1");
    if (d < 1) throw Error("DomainError", "cable needs d >= 1");
    AppendixBData ab = appendix_b(m, n, d);
    CableParams out{ab.u, ab.v, delta_mn(m * d, n * d), ab.triple};
    if (out.delta != ab.triple.tau().size())
        throw Error("InternalMismatch", "delta(md,nd) != |tau| for the cable triple");
    return out;
}

struct OrsReport {
    long m = 0, n = 0, d = 0;
    long delta = 0;
    TriangularTriple triple;
    LaurentPoly p_jc;  // u^{2 delta} C_tau(1, u^-2), u stored in the t slot
    LaurentPoly lhs;   // a^delta coefficient of (1-q) P^KR at q=1, t=u^-2
    LaurentPoly rhs;   // u^-delta * p_jc
    bool ok = false;
};

// q=1 specialization check: the a-minimal part of the normalized KR series
// must reproduce the Poincare polynomial of the compactified Jacobian of the
// curve whose link is the (d, mnd+1)-cable of T(m,n). The left side comes
// from the recursion route, the right side from the path count.
inline OrsReport ors_check(long m, long n, long d, int threads = 1) {
    CableParams cp = cable_params(m, n, d);
    OrsReport rep{m, n, d, cp.delta, cp.triple, {}, {}, {}, false};
    LaurentPoly cat = catalan(cp.triple, threads);
    LaurentPoly cat_u = cat.specialize(1, std::nullopt, true);
    rep.p_jc = LaurentPoly::t(static_cast<int>(2 * cp.delta)) * cat_u;
    LaurentPoly s = schroder(cp.triple, Route::Recursion, threads);
    LaurentPoly s_u = s.specialize(1, std::nullopt, true);
    std::vector<LaurentPoly> by_a = s_u.a_coefficients();
    rep.lhs = LaurentPoly::t(static_cast<int>(cp.delta)) * by_a.at(0);
    rep.rhs = LaurentPoly::t(static_cast<int>(-cp.delta)) * rep.p_jc;
    rep.ok = rep.lhs == rep.rhs;
    return rep;
}

} // namespace trisch
