#pragma once

// The binary window word w(m,n,l), the trinary pair (x,y) recording gaps,
// generators and fillers, and the binary pair (u,v) left after deleting
// bullets. Two independent constructions of (x,y) are computed and compared:
// the route through w and the residue closed forms.

#include <string>
#include <vector>

#include "trisch/grid.hpp"

namespace trisch {

// Trinary letters; rendered as '0', '1', '*'.
enum class Tri : char { Zero = '0', One = '1', Bullet = '*' };

using TriWord = std::vector<Tri>;
using BitWord = std::vector<int>;

inline std::string to_string(const TriWord& w) {
    std::string s;
    for (Tri c : w) s.push_back(static_cast<char>(c));
    return s;
}
inline std::string to_string(const BitWord& w) {
    std::string s;
    for (int b : w) s.push_back(b ? '1' : '0');
    return s;
}

inline TriWord tri_parse(const std::string& s) {
    TriWord w;
    for (char c : s) {
        if (c == '0') w.push_back(Tri::Zero);
        else if (c == '1') w.push_back(Tri::One);
        else if (c == '*') w.push_back(Tri::Bullet);
        else throw Error("ParseError", std::string("bad trinary letter '") + c + "'");
    }
    return w;
}
inline BitWord bits_parse(const std::string& s) {
    BitWord w;
    for (char c : s) {
        if (c == '0') w.push_back(0);
        else if (c == '1') w.push_back(1);
        else throw Error("ParseError", std::string("bad binary letter '") + c + "'");
    }
    return w;
}

inline BitWord drop_bullets(const TriWord& w) {
    BitWord out;
    for (Tri c : w)
        if (c != Tri::Bullet) out.push_back(c == Tri::One ? 1 : 0);
    return out;
}

inline long count_ones(const BitWord& w) {
    long k = 0;
    for (int b : w) k += b;
    return k;
}

// x_i reads (w_{n+i}, w_i) and y_i reads (w_{m+i}, w_i): 0 when the shifted
// letter is 0, bullet when both are 1, 1 when only the shifted letter is.
inline std::pair<TriWord, TriWord> trinary_pair_of_word(const BitWord& w, long m, long n) {
    if (static_cast<long>(w.size()) != m + n)
        throw Error("DomainError", "window word must have length m+n");
    auto letter = [](int shifted, int base) {
        if (shifted == 0) return Tri::Zero;
        return base == 1 ? Tri::Bullet : Tri::One;
    };
    TriWord x, y;
    for (long i = 0; i < m; ++i) x.push_back(letter(w[n + i], w[i]));
    for (long i = 0; i < n; ++i) y.push_back(letter(w[m + i], w[i]));
    return {x, y};
}

namespace detail {

// Residue closed forms: x_i = 1 iff i = l mod m, 0 iff i = l - n*x mod m for
// some 1 <= x <= floor(l/n), bullet otherwise; y symmetric.
inline TriWord closed_form_seq(long m, long n, long ell) {
    TriWord x(m, Tri::Bullet);
    x[ell % m] = Tri::One;
    long xmax = std::min(ell / n, m);
    for (long k = 1; k <= xmax; ++k) {
        long r = ((ell - n * k) % m + m) % m;
        x[r] = Tri::Zero;
    }
    return x;
}

} // namespace detail

struct SequenceData {
    BitWord w;    // length m+n
    TriWord x;    // length m
    TriWord y;    // length n
    BitWord u;    // x without bullets, length floor(l/n)+1
    BitWord v;    // y without bullets, length floor(l/m)+1
};

inline SequenceData build_sequences(const TriangularTriple& t) {
    const long m = t.m(), n = t.n(), ell = t.ell();
    SequenceData s;
    const long offset = m * n - ell - (m + n);
    for (long i = 0; i < m + n; ++i)
        s.w.push_back(semigroup_contains(m, n, i + offset) ? 1 : 0);
    auto [x, y] = trinary_pair_of_word(s.w, m, n);
    s.x = std::move(x);
    s.y = std::move(y);
    TriWord cx = detail::closed_form_seq(m, n, ell);
    TriWord cy = detail::closed_form_seq(n, m, ell);
    if (cx != s.x || cy != s.y)
        throw Error("InternalMismatch",
                    "window-word and closed-form sequences disagree for " + t.to_string() +
                        " (" + to_string(s.x) + "," + to_string(cx) + ")");
    s.u = drop_bullets(s.x);
    s.v = drop_bullets(s.y);
    if (static_cast<long>(s.u.size()) != ell / n + 1 ||
        static_cast<long>(s.v.size()) != ell / m + 1)
        throw Error("InternalMismatch", "unexpected u/v lengths for " + t.to_string());
    return s;
}

// A word is admissible when some invariant set matches it on the window
// [0, m+n-1]. Constructive test: the support must already be closed under
// +m and +n inside the window; the witness is then closure(supp) with the
// whole tail Z>=(m+n) appended.
inline bool admissible(const BitWord& w, long m, long n) {
    if (static_cast<long>(w.size()) != m + n)
        throw Error("DomainError", "window word must have length m+n");
    for (long i = 0; i < m + n; ++i) {
        if (!w[i]) continue;
        if (i + m < m + n && !w[i + m]) return false;
        if (i + n < m + n && !w[i + n]) return false;
    }
    return true;
}

} // namespace trisch
