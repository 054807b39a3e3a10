#pragma once

// Geometric substrate: boxes indexed by their NE corner, integer partitions,
// triangular triples (m,n,l) with gcd(m,n)=1 and 0<l<mn cutting out the
// partition {(x,y): nx+my <= l}, the Anderson labeling
// gamma(x,y) = mn-nx-my, and bounded search for the triples presenting a
// given partition.

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "trisch/error.hpp"

namespace trisch {

struct Box {
    long x = 0; // NE-corner column
    long y = 0; // NE-corner row
    friend bool operator==(const Box& l, const Box& r) { return l.x == r.x && l.y == r.y; }
    friend bool operator<(const Box& l, const Box& r) {
        return l.y != r.y ? l.y < r.y : l.x < r.x;
    }
};

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<long> parts) : parts_(parts) { normalize(); }
    explicit Partition(std::vector<long> parts) : parts_(std::move(parts)) { normalize(); }

    const std::vector<long>& parts() const { return parts_; }
    long rows() const { return static_cast<long>(parts_.size()); }
    // 1-based row access; rows beyond the last are 0.
    long part(long y) const {
        return (y >= 1 && y <= rows()) ? parts_[y - 1] : 0;
    }
    long size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }
    bool empty() const { return parts_.empty(); }

    // Cell membership, 1-based: (x,y) in lambda iff x <= parts[y-1].
    bool contains(long x, long y) const { return x >= 1 && y >= 1 && x <= part(y); }
    bool contains(const Box& b) const { return contains(b.x, b.y); }

    bool subpartition_of(const Partition& outer) const {
        for (long y = 1; y <= rows(); ++y)
            if (part(y) > outer.part(y)) return false;
        return true;
    }

    Partition transpose() const {
        std::vector<long> cols;
        if (!parts_.empty()) {
            cols.assign(parts_[0], 0);
            for (long p : parts_)
                for (long x = 0; x < p; ++x) ++cols[x];
        }
        return Partition(std::move(cols));
    }

    std::vector<Box> cells() const {
        std::vector<Box> out;
        for (long y = 1; y <= rows(); ++y)
            for (long x = 1; x <= part(y); ++x) out.push_back({x, y});
        return out;
    }

    // Boxes (x,y) not in the diagram whose addition keeps it a partition,
    // listed by ascending row. Includes the new-row box (1, rows+1).
    std::vector<Box> addable_boxes() const {
        std::vector<Box> out;
        for (long y = 1; y <= rows() + 1; ++y)
            if (y == 1 || part(y) < part(y - 1)) out.push_back({part(y) + 1, y});
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ",";
            os << parts_[i];
        }
        return os.str();
    }

    static Partition parse(const std::string& s) {
        std::vector<long> parts;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            try {
                parts.push_back(std::stol(tok));
            } catch (const std::exception&) {
                throw Error("ParseError", "bad partition part '" + tok + "'");
            }
        }
        for (std::size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1])
                throw Error("ParseError", "partition parts must be weakly decreasing");
        for (long p : parts)
            if (p < 0) throw Error("ParseError", "negative partition part");
        return Partition(std::move(parts));
    }

    friend bool operator==(const Partition& l, const Partition& r) { return l.parts_ == r.parts_; }
    friend bool operator!=(const Partition& l, const Partition& r) { return !(l == r); }
    friend bool operator<(const Partition& l, const Partition& r) { return l.parts_ < r.parts_; }

private:
    std::vector<long> parts_; // weakly decreasing, trailing zeros trimmed

    void normalize() {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
            if (parts_[i] < parts_[i + 1])
                throw Error("DomainError", "partition parts must be weakly decreasing");
        for (long p : parts_)
            if (p < 0) throw Error("DomainError", "negative partition part");
    }
};

inline long anderson_label(long m, long n, const Box& b) { return m * n - n * b.x - m * b.y; }

// Membership in the numerical semigroup generated by m and n, decided by a
// scan over multiples of n (never materialized as a set).
inline bool semigroup_contains(long m, long n, long k) {
    if (k < 0) return false;
    for (long i = 0; i * n <= k; ++i)
        if ((k - i * n) % m == 0) return true;
    return false;
}

inline long delta_mn(long m, long n) {
    return (m * n - m - n + std::gcd(m, n)) / 2;
}

class TriangularTriple {
public:
    TriangularTriple(long m, long n, long ell) : m_(m), n_(n), ell_(ell) {
        if (m < 1 || n < 1) throw Error("DomainError", "m and n must be positive");
        if (std::gcd(m, n) != 1)
            throw Error("NotCoprime", "gcd(" + std::to_string(m) + "," + std::to_string(n) + ") != 1");
        if (ell <= 0 || ell >= m * n)
            throw Error("EllOutOfRange", "need 0 < l < m*n, got l=" + std::to_string(ell));
        std::vector<long> parts;
        for (long y = 1; m * y + n <= ell; ++y) parts.push_back((ell - m * y) / n);
        tau_ = Partition(std::move(parts));
    }

    long m() const { return m_; }
    long n() const { return n_; }
    long ell() const { return ell_; }
    const Partition& tau() const { return tau_; }

    long gamma(const Box& b) const { return anderson_label(m_, n_, b); }
    // Shifted labeling gamma - (mn-l) + (m+n).
    long gamma_hat(const Box& b) const { return gamma(b) - (m_ * n_ - ell_) + (m_ + n_); }

    // The full triangle under the (m,n) diagonal (l = mn-1).
    Partition ambient_tau() const { return TriangularTriple(m_, n_, m_ * n_ - 1).tau(); }

    std::string to_string() const {
        return std::to_string(m_) + "," + std::to_string(n_) + "," + std::to_string(ell_);
    }

    static TriangularTriple parse(const std::string& s) {
        std::vector<long> v;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                v.push_back(std::stol(tok));
            } catch (const std::exception&) {
                throw Error("ParseError", "bad triple component '" + tok + "'");
            }
        }
        if (v.size() != 3) throw Error("ParseError", "triple must be m,n,l");
        return TriangularTriple(v[0], v[1], v[2]);
    }

    friend bool operator==(const TriangularTriple& l, const TriangularTriple& r) {
        return l.m_ == r.m_ && l.n_ == r.n_ && l.ell_ == r.ell_;
    }

private:
    long m_, n_, ell_;
    Partition tau_;
};

inline Partition partition_of_triple(const TriangularTriple& t) { return t.tau(); }

inline TriangularTriple validate_triple(long m, long n, long ell) {
    return TriangularTriple(m, n, ell);
}

// All triples with m,n <= bound cutting out exactly `lambda`. For each (m,n)
// the only candidate is l = max over cells of (nx+my) (l = 1 for the empty
// partition); larger l only adds cells, smaller l drops one. The search is
// complete up to `bound` only: a partition may still be triangular for
// steeper slopes.
inline std::vector<TriangularTriple> find_triples(const Partition& lambda, long bound) {
    if (bound < 2) throw Error("DomainError", "bound must be >= 2");
    std::vector<TriangularTriple> out;
    for (long m = 1; m <= bound; ++m) {
        for (long n = 1; n <= bound; ++n) {
            if (std::gcd(m, n) != 1) continue;
            long ell = 1;
            for (long y = 1; y <= lambda.rows(); ++y)
                ell = std::max(ell, n * lambda.part(y) + m * y);
            if (ell >= m * n) continue;
            TriangularTriple t(m, n, ell);
            if (t.tau() == lambda) out.push_back(t);
        }
    }
    return out;
}

} // namespace trisch
