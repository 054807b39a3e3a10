#pragma once

// Exact sparse Laurent polynomials in (q,t,a) over arbitrary-precision
// integers, plus power series in q truncated at a fixed order. Exponents of t
// may be negative; coefficients are exact (boost cpp_int), never floating
// point. Terms are kept in canonical ascending (e_a, e_t, e_q) order so equal
// polynomials serialize byte-identically.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cctype>
#include <cstdint>
#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "trisch/error.hpp"

namespace trisch {

using Int = boost::multiprecision::cpp_int;

class LaurentPoly {
public:
    // Exponent triple in grading order (e_a, e_t, e_q).
    using Key = std::array<int, 3>;
    using Term = std::pair<Key, Int>;
    // Flat term list sorted ascending by key; merges are linear scans.
    using TermList = std::vector<Term>;

    LaurentPoly() = default;
    LaurentPoly(long long c) {
        if (c != 0) terms_.emplace_back(Key{0, 0, 0}, c);
    }
    explicit LaurentPoly(Int c) {
        if (c != 0) terms_.emplace_back(Key{0, 0, 0}, std::move(c));
    }

    static LaurentPoly term(Int c, int e_q, int e_t, int e_a) {
        LaurentPoly p;
        if (c != 0) p.terms_.emplace_back(Key{e_a, e_t, e_q}, std::move(c));
        return p;
    }
    static LaurentPoly q(int k = 1) { return term(1, k, 0, 0); }
    static LaurentPoly t(int k = 1) { return term(1, 0, k, 0); }
    static LaurentPoly a(int k = 1) { return term(1, 0, 0, k); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermList& terms() const { return terms_; }

    Int coeff(int e_q, int e_t, int e_a) const {
        Key key{e_a, e_t, e_q};
        auto it = std::lower_bound(terms_.begin(), terms_.end(), key, key_less);
        return (it != terms_.end() && it->first == key) ? it->second : Int(0);
    }

    int a_degree() const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k[0]);
        return d;
    }
    int q_degree() const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k[2]);
        return d;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        if (this == &o) {
            for (auto& [k, c] : terms_) c *= 2;
            return *this;
        }
        if (o.terms_.empty()) return *this;
        if (terms_.empty()) {
            terms_ = o.terms_;
            return *this;
        }
        TermList merged;
        merged.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        while (a != terms_.end() && b != o.terms_.end()) {
            if (a->first < b->first) {
                merged.push_back(std::move(*a++));
            } else if (b->first < a->first) {
                merged.push_back(*b++);
            } else {
                Int c = std::move(a->second) + b->second;
                if (c != 0) merged.emplace_back(a->first, std::move(c));
                ++a;
                ++b;
            }
        }
        merged.insert(merged.end(), std::make_move_iterator(a),
                      std::make_move_iterator(terms_.end()));
        merged.insert(merged.end(), b, o.terms_.end());
        terms_ = std::move(merged);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
    LaurentPoly operator-() const {
        LaurentPoly r;
        r.terms_.reserve(terms_.size());
        for (const auto& [k, c] : terms_) r.terms_.emplace_back(k, -c);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    // Multiply by the monomial c * q^dq t^dt a^da; the shift preserves key
    // order, so this is one linear pass.
    LaurentPoly shifted(const Int& c, int dq, int dt, int da) const {
        LaurentPoly r;
        if (c == 0) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& [k, coef] : terms_)
            r.terms_.emplace_back(Key{k[0] + da, k[1] + dt, k[2] + dq}, coef * c);
        return r;
    }

    friend LaurentPoly operator+(LaurentPoly l, const LaurentPoly& r) { return l += r; }
    friend LaurentPoly operator-(LaurentPoly l, const LaurentPoly& r) { return l -= r; }
    friend LaurentPoly operator*(const LaurentPoly& l, const LaurentPoly& r) {
        if (l.terms_.size() == 1) {
            const auto& [k, c] = l.terms_.front();
            return r.shifted(c, k[2], k[1], k[0]);
        }
        if (r.terms_.size() == 1) {
            const auto& [k, c] = r.terms_.front();
            return l.shifted(c, k[2], k[1], k[0]);
        }
        LaurentPoly p;
        for (const auto& [kb, cb] : r.terms_)
            p += l.shifted(cb, kb[2], kb[1], kb[0]);
        return p;
    }
    friend bool operator==(const LaurentPoly& l, const LaurentPoly& r) {
        return l.terms_ == r.terms_;
    }
    friend bool operator!=(const LaurentPoly& l, const LaurentPoly& r) { return !(l == r); }

    // Exact substitution. q_val/a_val plug integers into q/a; t_to_u2 sends
    // t^j to u^(-2j) with u stored in the t slot. Non-unit bases require
    // nonnegative exponents (everything stays in Z).
    LaurentPoly specialize(std::optional<long long> q_val,
                           std::optional<long long> a_val,
                           bool t_to_u2 = false) const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_) {
            Key nk = k;
            Int nc = c;
            if (q_val) {
                nc *= int_pow(*q_val, nk[2], "q");
                nk[2] = 0;
            }
            if (a_val) {
                nc *= int_pow(*a_val, nk[0], "a");
                nk[0] = 0;
            }
            if (t_to_u2) nk[1] = -2 * nk[1];
            r.add_term(nk, nc);
        }
        return r;
    }

    // p = sum_k a^k * result[k], each result[k] free of a. Requires e_a >= 0.
    std::vector<LaurentPoly> a_coefficients() const {
        std::vector<LaurentPoly> out;
        for (const auto& [k, c] : terms_) {
            if (k[0] < 0) throw Error("DomainError", "negative a-exponent in a_coefficients");
            if (static_cast<int>(out.size()) <= k[0]) out.resize(k[0] + 1);
            out[k[0]].add_term({0, k[1], k[2]}, c);
        }
        return out;
    }

    // Text form: terms joined by " + ", factors in grading order a, t, q with
    // unit factors elided, e.g. "q + a*t^-1". Zero renders as "0".
    std::string to_text() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << term_text(k, c);
        }
        return os.str();
    }

    static LaurentPoly parse_text(const std::string& s);

private:
    TermList terms_;

    static bool key_less(const Term& t, const Key& k) { return t.first < k; }

    void add_term(const Key& k, const Int& c) {
        if (c == 0) return;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), k, key_less);
        if (it != terms_.end() && it->first == k) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        } else {
            terms_.emplace(it, k, c);
        }
    }

    static Int int_pow(long long base, int exp, const char* var) {
        if (exp < 0) {
            if (base == 1) return 1;
            if (base == -1) return (exp % 2 == 0) ? 1 : -1;
            throw Error("DomainError",
                        std::string("negative ") + var + "-exponent under non-unit substitution");
        }
        Int r = 1, b = base;
        for (int i = 0; i < exp; ++i) r *= b;
        return r;
    }

    static std::string term_text(const Key& k, const Int& c) {
        std::vector<std::string> factors;
        auto emit = [&](const char* v, int e) {
            if (e == 0) return;
            std::string f = v;
            if (e != 1) f += "^" + std::to_string(e);
            factors.push_back(f);
        };
        emit("a", k[0]);
        emit("t", k[1]);
        emit("q", k[2]);
        std::ostringstream os;
        if (factors.empty()) {
            os << c;
        } else {
            if (c == -1) os << "-";
            else if (c != 1) os << c << "*";
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) os << "*";
                os << factors[i];
            }
        }
        return os.str();
    }

    friend class TextParser;
};

// Recursive-descent parser for the text codec. Accepts factors in any order
// and repeated variables (exponents accumulate).
class TextParser {
public:
    explicit TextParser(const std::string& s) : s_(s) {}

    LaurentPoly parse() {
        LaurentPoly p;
        skip_ws();
        if (done()) fail("empty input");
        p += parse_term();
        skip_ws();
        while (!done()) {
            expect('+');
            skip_ws();
            p += parse_term();
            skip_ws();
        }
        return p;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    void expect(char c) {
        if (done() || peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error("ParseError", msg + " at position " + std::to_string(pos_));
    }

    Int parse_int() {
        skip_ws();
        std::size_t start = pos_;
        if (!done() && (peek() == '-' || peek() == '+')) ++pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
            fail("expected integer");
        return Int(s_.substr(start, pos_ - start));
    }

    LaurentPoly parse_term() {
        skip_ws();
        Int coeff = 1;
        int eq = 0, et = 0, ea = 0;
        bool any = false;
        bool neg = false;
        if (!done() && peek() == '-') {
            neg = true;
            ++pos_;
            skip_ws();
        }
        while (true) {
            skip_ws();
            if (done()) break;
            char c = peek();
            if (c == 'q' || c == 't' || c == 'a') {
                ++pos_;
                int e = 1;
                if (!done() && peek() == '^') {
                    ++pos_;
                    Int v = parse_int();
                    e = static_cast<int>(v);
                }
                if (c == 'q') eq += e;
                else if (c == 't') et += e;
                else ea += e;
                any = true;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= parse_int();
                any = true;
            } else {
                fail("unexpected character");
            }
            skip_ws();
            if (!done() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!any) fail("expected term");
        if (neg) coeff = -coeff;
        return LaurentPoly::term(coeff, eq, et, ea);
    }
};

inline LaurentPoly LaurentPoly::parse_text(const std::string& s) {
    return TextParser(s).parse();
}

// Power series in q truncated at a fixed order N: coeffs[i] is the
// coefficient of q^i, a Laurent polynomial in (t,a) only. Products discard
// terms of q-degree > N.
class QSeries {
public:
    explicit QSeries(int order) : order_(order), coeffs_(order + 1) {
        if (order < 0) throw Error("DomainError", "negative series order");
    }

    static QSeries from_poly(const LaurentPoly& p, int order) {
        QSeries s(order);
        for (const auto& [k, c] : p.terms()) {
            if (k[2] < 0) throw Error("DomainError", "negative q-exponent in series");
            if (k[2] > order) continue;
            s.coeffs_[k[2]] += LaurentPoly::term(c, 0, k[1], k[0]);
        }
        return s;
    }

    static QSeries one(int order) { return from_poly(LaurentPoly(1), order); }

    // 1/(1-q) = 1 + q + q^2 + ...
    static QSeries geometric(int order) {
        QSeries s(order);
        for (int i = 0; i <= order; ++i) s.coeffs_[i] = LaurentPoly(1);
        return s;
    }

    int order() const { return order_; }
    const LaurentPoly& coeff(int i) const { return coeffs_.at(i); }

    QSeries& operator+=(const QSeries& o) {
        check_order(o);
        for (int i = 0; i <= order_; ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    friend QSeries operator+(QSeries l, const QSeries& r) { return l += r; }

    friend QSeries operator*(const QSeries& l, const QSeries& r) {
        l.check_order(r);
        QSeries s(l.order_);
        for (int i = 0; i <= l.order_; ++i) {
            if (l.coeffs_[i].is_zero()) continue;
            for (int j = 0; i + j <= l.order_; ++j)
                s.coeffs_[i + j] += l.coeffs_[i] * r.coeffs_[j];
        }
        return s;
    }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

    // Multiply by a polynomial in (q,t,a) with e_q >= 0.
    friend QSeries operator*(const QSeries& l, const LaurentPoly& p) {
        return l * QSeries::from_poly(p, l.order_);
    }

    QSeries pow(int n) const {
        QSeries r = one(order_);
        for (int i = 0; i < n; ++i) r *= *this;
        return r;
    }

    LaurentPoly to_poly() const {
        LaurentPoly p;
        for (int i = 0; i <= order_; ++i) p += coeffs_[i] * LaurentPoly::q(i);
        return p;
    }

    friend bool operator==(const QSeries& l, const QSeries& r) {
        return l.order_ == r.order_ && l.coeffs_ == r.coeffs_;
    }
    friend bool operator!=(const QSeries& l, const QSeries& r) { return !(l == r); }

private:
    int order_;
    std::vector<LaurentPoly> coeffs_;

    void check_order(const QSeries& o) const {
        if (order_ != o.order_) throw Error("DomainError", "mixed series orders");
    }
};

} // namespace trisch
