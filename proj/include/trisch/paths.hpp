#pragma once

// Dyck paths under the line nx+my=l: subpartition enumeration, the area and
// dinv statistics, and the boundary data (addable boxes, east boundary, xi)
// feeding the Schroder weights.

#include <map>
#include <vector>

#include "trisch/grid.hpp"

namespace trisch {

struct DyckPath {
    TriangularTriple triple;
    Partition lambda;

    DyckPath(TriangularTriple t, Partition l) : triple(std::move(t)), lambda(std::move(l)) {
        if (!lambda.subpartition_of(triple.tau()))
            throw Error("DomainError", "lambda is not a subpartition of tau");
    }
};

namespace detail {
inline void gen_subpartitions(const Partition& tau, long y, long cap,
                              std::vector<long>& cur, std::vector<Partition>& out) {
    if (y > tau.rows()) {
        out.emplace_back(cur);
        return;
    }
    long hi = std::min(cap, tau.part(y));
    for (long v = 0; v <= hi; ++v) {
        if (v == 0) {
            out.emplace_back(cur);
        } else {
            cur.push_back(v);
            gen_subpartitions(tau, y + 1, v, cur, out);
            cur.pop_back();
        }
    }
}
} // namespace detail

// All subpartitions of tau, ascending lexicographic on part lists.
inline std::vector<Partition> subpartitions(const Partition& tau) {
    std::vector<Partition> out;
    std::vector<long> cur;
    detail::gen_subpartitions(tau, 1, tau.empty() ? 0 : tau.part(1), cur, out);
    return out;
}

inline std::vector<DyckPath> enumerate_subpaths(const TriangularTriple& t) {
    std::vector<DyckPath> out;
    for (auto& lam : subpartitions(t.tau())) out.emplace_back(t, std::move(lam));
    return out;
}

struct PathStats {
    long area = 0;
    long dinv = 0;
};

// area = |tau| - |lambda|; dinv counts cells of lambda whose arm/leg ratios
// straddle the slope n/m: leg/(arm+1) < n/m <= (leg+1)/arm, the right bound
// read as +infinity when arm = 0.
inline PathStats path_statistics(const DyckPath& p) {
    PathStats s;
    s.area = p.triple.tau().size() - p.lambda.size();
    const long m = p.triple.m(), n = p.triple.n();
    Partition lt = p.lambda.transpose();
    for (long y = 1; y <= p.lambda.rows(); ++y) {
        for (long x = 1; x <= p.lambda.part(y); ++x) {
            long arm = p.lambda.part(y) - x;
            long leg = lt.part(x) - y;
            if (m * leg < n * (arm + 1) && (arm == 0 || n * arm <= m * (leg + 1))) ++s.dinv;
        }
    }
    return s;
}

struct BoundaryData {
    std::vector<Box> addable;      // addable boxes of lambda, ascending row
    std::vector<Box> east;         // the n boxes (lambda_y, y), y = 1..n
    std::vector<long> xi;          // xi[i] for addable[i]
    std::map<long, long> xi_by_gamma_hat; // shifted label -> xi, for cross-checks
};

// East boundary: boxes of Z x (0,n] whose east edge lies on a vertical step
// of the lattice path of (lambda, tau_{m,n}); these are (lambda_y, y) for
// y=1..n, with x=0 on rows above lambda. xi(pi,box) counts east-boundary
// labels in the half-open window (gamma(box)+n, gamma(box)+n+m].
inline BoundaryData boundary_data(const DyckPath& p) {
    BoundaryData b;
    const long m = p.triple.m(), n = p.triple.n();
    b.addable = p.lambda.addable_boxes();
    for (long y = 1; y <= n; ++y) b.east.push_back({p.lambda.part(y), y});
    for (const Box& box : b.addable) {
        long g = p.triple.gamma(box);
        long count = 0;
        for (const Box& e : b.east) {
            long ge = p.triple.gamma(e);
            if (ge > g + n && ge <= g + n + m) ++count;
        }
        b.xi.push_back(count);
        b.xi_by_gamma_hat[p.triple.gamma_hat(box)] = count;
    }
    return b;
}

} // namespace trisch
