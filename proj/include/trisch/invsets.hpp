#pragma once

// (m,n)-invariant subsets of the nonnegative integers, stored by their finite
// gap set, with generators/cogenerators, the area/codinv/dinv statistics and
// their primed variants, the xi window counts, and the bijections A
// (Dyck paths <-> 0-normalized sets) and I (shift into the window word).

#include <algorithm>
#include <optional>
#include <vector>

#include "trisch/grid.hpp"
#include "trisch/paths.hpp"

namespace trisch {

class InvariantSet {
public:
    struct Generators {
        std::vector<long> ngen;         // k in D with k-n not in D; |ngen| = n
        std::vector<long> mgen;         // k in D with k-m not in D; |mgen| = m
        std::vector<long> cogen;        // k in Z \ D with k+m, k+n in D (may be negative)
        std::vector<long> cogen_nonneg; // cogen intersected with Z>=0
    };

    // Validates closure under +m and +n: every gap g must have g-m and g-n
    // negative or gaps themselves. Generators are computed up front; every
    // statistic reads them.
    InvariantSet(long m, long n, std::vector<long> gaps)
        : m_(m), n_(n), gaps_(std::move(gaps)) {
        if (std::gcd(m_, n_) != 1) throw Error("NotCoprime", "invariant sets need gcd(m,n)=1");
        std::sort(gaps_.begin(), gaps_.end());
        gaps_.erase(std::unique(gaps_.begin(), gaps_.end()), gaps_.end());
        for (long g : gaps_) {
            if (g < 0) throw Error("DomainError", "gaps must be nonnegative");
            if (!gap_ok(g - m_) || !gap_ok(g - n_))
                throw Error("NotInvariant", "gap " + std::to_string(g) +
                                                " breaks invariance (one of g-m, g-n lies in the set)");
        }
        const long hi = max_gap();
        for (long k = 0; k <= hi + n_; ++k)
            if (contains(k) && !contains(k - n_)) gen_.ngen.push_back(k);
        for (long k = 0; k <= hi + m_; ++k)
            if (contains(k) && !contains(k - m_)) gen_.mgen.push_back(k);
        for (long k = -std::min(m_, n_); k <= hi; ++k)
            if (!contains(k) && contains(k + m_) && contains(k + n_)) {
                gen_.cogen.push_back(k);
                if (k >= 0) gen_.cogen_nonneg.push_back(k);
            }
    }

    long m() const { return m_; }
    long n() const { return n_; }
    const std::vector<long>& gaps() const { return gaps_; }
    long max_gap() const { return gaps_.empty() ? -1 : gaps_.back(); }
    bool zero_normalized() const { return !std::binary_search(gaps_.begin(), gaps_.end(), 0L); }

    bool contains(long k) const {
        return k >= 0 && !std::binary_search(gaps_.begin(), gaps_.end(), k);
    }

    const Generators& generators() const { return gen_; }

    struct Stats {
        long area = 0;     // number of gaps
        long codinv = 0;   // gaps in [k, k+m-1] summed over n-generators k
        long dinv = 0;     // delta(m,n) - codinv
        long area_p = 0;   // gaps >= m+n
        long codinv_p = 0; // high gaps in generator windows, minus binom(xi_{-1}, 2)
    };

    Stats statistics() const {
        Stats s;
        s.area = static_cast<long>(gaps_.size());
        for (long k : gen_.ngen) {
            for (long x = k; x < k + m_; ++x) {
                if (!contains(x) && x >= 0) {
                    ++s.codinv;
                    if (x >= m_ + n_) ++s.codinv_p;
                }
            }
        }
        s.dinv = delta_mn(m_, n_) - s.codinv;
        for (long gp : gaps_)
            if (gp >= m_ + n_) ++s.area_p;
        long x1 = xi_k(-1);
        s.codinv_p -= x1 * (x1 - 1) / 2;
        return s;
    }

    // Number of n-generators in the window [n+k+1, k+n+m].
    long xi_k(long k) const {
        long count = 0;
        for (long x : gen_.ngen)
            if (x >= n_ + k + 1 && x <= k + n_ + m_) ++count;
        return count;
    }

    // Indicator of the set on [0, m+n-1].
    std::vector<int> window_word() const {
        std::vector<int> w(m_ + n_);
        for (long i = 0; i < m_ + n_; ++i) w[i] = contains(i) ? 1 : 0;
        return w;
    }

    // Serialized as the sorted gap list, e.g. "1,2,5".
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < gaps_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(gaps_[i]);
        }
        return s;
    }

    friend bool operator==(const InvariantSet& l, const InvariantSet& r) {
        return l.m_ == r.m_ && l.n_ == r.n_ && l.gaps_ == r.gaps_;
    }

private:
    long m_, n_;
    std::vector<long> gaps_; // sorted, distinct, nonnegative
    Generators gen_;

    bool gap_ok(long k) const {
        return k < 0 || std::binary_search(gaps_.begin(), gaps_.end(), k);
    }
};

// Gaps(tau_{m,n,l}, tau_{m,n}): Anderson labels of the ambient-triangle cells
// outside the cut partition.
inline std::vector<long> triple_gaps(const TriangularTriple& t) {
    std::vector<long> out;
    Partition ambient = t.ambient_tau();
    for (const Box& b : ambient.cells())
        if (!t.tau().contains(b)) out.push_back(t.gamma(b));
    std::sort(out.begin(), out.end());
    return out;
}

// A(pi) = Z>=0 minus the labels of ambient-triangle cells outside lambda.
inline InvariantSet bij_A(const DyckPath& p) {
    std::vector<long> gaps;
    Partition ambient = p.triple.ambient_tau();
    for (const Box& b : ambient.cells())
        if (!p.lambda.contains(b)) gaps.push_back(p.triple.gamma(b));
    return InvariantSet(p.triple.m(), p.triple.n(), std::move(gaps));
}

// Inverse of A: keep the ambient cells whose label lies in the set, check the
// result is a subpartition of tau_{m,n,l}.
inline DyckPath bij_A_inverse(const InvariantSet& d, const TriangularTriple& t) {
    if (d.m() != t.m() || d.n() != t.n())
        throw Error("DomainError", "set and triple have different (m,n)");
    if (!d.zero_normalized()) throw Error("DomainError", "set is not 0-normalized");
    Partition ambient = t.ambient_tau();
    std::vector<long> parts;
    long cells_kept = 0;
    for (long y = 1; y <= ambient.rows(); ++y) {
        long run = 0;
        for (long x = 1; x <= ambient.part(y); ++x) {
            if (d.contains(t.gamma({x, y}))) {
                if (run != x - 1)
                    throw Error("DomainError", "set labels do not form a partition");
                run = x;
            }
        }
        for (long x = run + 1; x <= ambient.part(y); ++x)
            if (d.contains(t.gamma({x, y})))
                throw Error("DomainError", "set labels do not form a partition");
        parts.push_back(run);
        cells_kept += run;
    }
    long expected_gaps = ambient.size() - cells_kept;
    if (static_cast<long>(d.gaps().size()) != expected_gaps)
        throw Error("DomainError", "set has gaps outside the ambient triangle");
    Partition lambda(std::move(parts));
    if (!lambda.subpartition_of(t.tau()))
        throw Error("DomainError", "set is not supported inside tau_{m,n,l}");
    return DyckPath(t, lambda);
}

inline bool in_inv0_of_triple(const InvariantSet& d, const TriangularTriple& t) {
    if (!d.zero_normalized()) return false;
    for (long g : triple_gaps(t))
        if (d.contains(g)) return false;
    return true;
}

// I: D -> (D - (mn-l) + (n+m)) intersected with Z>=0.
inline InvariantSet shift_I(const InvariantSet& d, const TriangularTriple& t) {
    if (d.m() != t.m() || d.n() != t.n())
        throw Error("DomainError", "set and triple have different (m,n)");
    if (!in_inv0_of_triple(d, t))
        throw Error("DomainError", "set does not avoid the gaps of (tau_{m,n,l}, tau_{m,n})");
    const long shift = (t.m() * t.n() - t.ell()) - (t.m() + t.n());
    std::vector<long> gaps;
    long hi = std::max(d.max_gap() - shift, 0L);
    for (long k = 0; k <= hi; ++k)
        if (!d.contains(k + shift)) gaps.push_back(k);
    return InvariantSet(d.m(), d.n(), std::move(gaps));
}

// Inverse of I: (D' + mn-l-(n+m)) union the (m,n) semigroup.
inline InvariantSet shift_I_inverse(const InvariantSet& d, const TriangularTriple& t) {
    if (d.m() != t.m() || d.n() != t.n())
        throw Error("DomainError", "set and triple have different (m,n)");
    const long shift = (t.m() * t.n() - t.ell()) - (t.m() + t.n());
    long hi = std::max(d.max_gap() + shift, t.m() * t.n());
    std::vector<long> gaps;
    for (long k = 0; k <= hi; ++k) {
        if (semigroup_contains(t.m(), t.n(), k)) continue;
        if (k - shift >= 0 && d.contains(k - shift)) continue;
        gaps.push_back(k);
    }
    return InvariantSet(d.m(), d.n(), std::move(gaps));
}

} // namespace trisch
