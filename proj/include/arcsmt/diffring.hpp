#ifndef ARCSMT_DIFFRING_HPP
#define ARCSMT_DIFFRING_HPP

// Exact sparse polynomial arithmetic over Z in the differential matrix
// entries a^(k)_{i,l} and b^(k)_{j,l} (1 <= i <= p, 1 <= j <= q,
// 1 <= l <= h, k >= 0), together with the normalized divided-power
// derivations dbar^k = d^k / k! and the determinant builders that generate
// the invariant subring.
//
// All coefficients are arbitrary-precision integers (GMP). dbar is computed
// by the Leibniz recursion with binomial weights; no factorial division ever
// happens, so every intermediate stays in Z.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arcsmt {

using Z = mpz_class;

// Exact binomial coefficient, memoized.
inline const Z& binom(long n, long k) {
    static std::map<std::pair<long, long>, Z> cache;
    static const Z zero = 0;
    if (k < 0 || n < 0 || k > n) return zero;
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Z v;
    mpz_bin_uiui(v.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return cache.emplace(key, std::move(v)).first->second;
}

enum class Family : std::uint8_t { A, B };

// One differential matrix entry. The canonical sort key used for monomial
// normalization is (family, col, order, row); the tableau word order is a
// different comparison and lives in tableau.hpp.
struct DiffVar {
    Family fam{};
    int row = 1;  // 1..p for A, 1..q for B
    int col = 1;  // 1..h
    int order = 0;

    friend bool operator==(const DiffVar&, const DiffVar&) = default;
    friend std::strong_ordering operator<=>(const DiffVar& x, const DiffVar& y) {
        if (auto c = x.fam <=> y.fam; c != 0) return c;
        if (auto c = x.col <=> y.col; c != 0) return c;
        if (auto c = x.order <=> y.order; c != 0) return c;
        return x.row <=> y.row;
    }
};

inline DiffVar avar(int row, int col, int order = 0) {
    return DiffVar{Family::A, row, col, order};
}
inline DiffVar bvar(int row, int col, int order = 0) {
    return DiffVar{Family::B, row, col, order};
}

// Sorted (variable, exponent) list; empty list is the unit monomial.
struct Monomial {
    std::vector<std::pair<DiffVar, int>> factors;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
        return x.factors <=> y.factors;
    }

    int degree() const {
        int d = 0;
        for (auto& [v, e] : factors) d += e;
        return d;
    }
    int weight() const {
        int w = 0;
        for (auto& [v, e] : factors) w += v.order * e;
        return w;
    }
    Monomial mul(const Monomial& o) const {
        Monomial r;
        auto i = factors.begin(), j = o.factors.begin();
        while (i != factors.end() || j != o.factors.end()) {
            if (j == o.factors.end() || (i != factors.end() && i->first < j->first))
                r.factors.push_back(*i++);
            else if (i == factors.end() || j->first < i->first)
                r.factors.push_back(*j++);
            else {
                r.factors.emplace_back(i->first, i->second + j->second);
                ++i, ++j;
            }
        }
        return r;
    }
};

inline Monomial monomial_of(const DiffVar& v, int exp = 1) {
    Monomial m;
    if (exp > 0) m.factors.emplace_back(v, exp);
    return m;
}

// Sparse polynomial over Z; no zero coefficients are stored.
struct Poly {
    std::map<Monomial, Z> terms;

    Poly() = default;
    static Poly zero() { return {}; }
    static Poly constant(const Z& c) {
        Poly f;
        if (c != 0) f.terms.emplace(Monomial{}, c);
        return f;
    }
    static Poly var(const DiffVar& v) {
        Poly f;
        f.terms.emplace(monomial_of(v), 1);
        return f;
    }
    static Poly term(const Monomial& m, const Z& c) {
        Poly f;
        if (c != 0) f.terms.emplace(m, c);
        return f;
    }

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const Poly&, const Poly&) = default;

    void add_term(const Monomial& m, const Z& c) {
        if (c == 0) return;
        auto [it, fresh] = terms.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (auto& [m, c] : o.terms) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly x, const Poly& y) { return x += y; }
    friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
    friend Poly operator*(const Poly& x, const Poly& y) {
        Poly r;
        for (auto& [mx, cx] : x.terms)
            for (auto& [my, cy] : y.terms) r.add_term(mx.mul(my), cx * cy);
        return r;
    }
    friend Poly operator*(const Z& c, const Poly& f) {
        Poly r;
        if (c == 0) return r;
        for (auto& [m, cf] : f.terms) r.terms.emplace(m, c * cf);
        return r;
    }
    friend Poly operator-(const Poly& f) { return Z(-1) * f; }
};

inline Poly mul(const Poly& f, const Poly& g) { return f * g; }
inline Poly add(const Poly& f, const Poly& g) { return f + g; }
inline Poly scale(const Z& c, const Poly& f) { return c * f; }

// --- divided-power derivation -------------------------------------------

// dbar^n of a single variable: binom(k+n, n) * x^(k+n).
inline Poly dbar_var(const DiffVar& v, long n) {
    DiffVar w = v;
    w.order += static_cast<int>(n);
    return Poly::term(monomial_of(w), binom(v.order + n, n));
}

namespace detail {
// dbar^n of the product of factors[idx..], each factor a single variable
// occurrence (exponents expanded), via Leibniz.
inline Poly dbar_flat(const std::vector<DiffVar>& flat, std::size_t idx, long n) {
    if (idx == flat.size())
        return n == 0 ? Poly::constant(1) : Poly::zero();
    if (idx + 1 == flat.size()) return dbar_var(flat[idx], n);
    Poly r;
    for (long i = 0; i <= n; ++i)
        r += dbar_var(flat[idx], i) * dbar_flat(flat, idx + 1, n - i);
    return r;
}
}  // namespace detail

inline Poly dbar(const Poly& f, long n) {
    if (n == 0) return f;
    if (n < 0) throw std::invalid_argument("dbar: negative order");
    Poly r;
    for (auto& [m, c] : f.terms) {
        std::vector<DiffVar> flat;
        for (auto& [v, e] : m.factors)
            for (int t = 0; t < e; ++t) flat.push_back(v);
        r += c * detail::dbar_flat(flat, 0, n);
    }
    return r;
}

// --- determinants --------------------------------------------------------

namespace detail {
inline void require_strict_increasing(const std::vector<int>& xs, const char* what) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 1) throw std::invalid_argument(std::string(what) + ": index < 1");
        if (i > 0 && xs[i] <= xs[i - 1])
            throw std::invalid_argument(std::string(what) +
                                        ": indices must be strictly increasing");
    }
}

// Insertion sort with sign bookkeeping; sign 0 flags a repeated entry.
inline std::pair<int, std::vector<int>> sort_sign(std::vector<int> xs) {
    int sgn = 1;
    for (std::size_t i = 1; i < xs.size(); ++i)
        for (std::size_t j = i; j > 0 && xs[j] < xs[j - 1]; --j) {
            std::swap(xs[j], xs[j - 1]);
            sgn = -sgn;
        }
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (xs[i] == xs[i - 1]) return {0, {}};
    return {sgn, std::move(xs)};
}

// All permutations of {0..n-1} with signs.
inline void for_each_permutation(int n, auto&& fn) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
        fn(perm, inv % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
}
}  // namespace detail

// det of the h x h matrix (a^(0)_{us[i], l}); the generator Y^(0)_{us}.
inline Poly det_a(const std::vector<int>& us) {
    detail::require_strict_increasing(us, "det_a");
    int h = static_cast<int>(us.size());
    Poly r;
    detail::for_each_permutation(h, [&](const std::vector<int>& perm, int sgn) {
        Monomial m;
        for (int i = 0; i < h; ++i) m = m.mul(monomial_of(avar(us[i], perm[i] + 1)));
        r.add_term(m, sgn);
    });
    return r;
}

// det of the h x h matrix (b^(0)_{vs[j], l}); the generator Z^(0)_{vs}.
inline Poly det_b(const std::vector<int>& vs) {
    detail::require_strict_increasing(vs, "det_b");
    int h = static_cast<int>(vs.size());
    Poly r;
    detail::for_each_permutation(h, [&](const std::vector<int>& perm, int sgn) {
        Monomial m;
        for (int j = 0; j < h; ++j) m = m.mul(monomial_of(bvar(vs[j], perm[j] + 1)));
        r.add_term(m, sgn);
    });
    return r;
}

// The bilinear entry X^(0)_{uv} = sum_l a^(0)_{u,l} b^(0)_{v,l}, expanded.
inline Poly x_entry(int u, int v, int h) {
    Poly r;
    for (int l = 1; l <= h; ++l)
        r += Poly::var(avar(u, l)) * Poly::var(bvar(v, l));
    return r;
}

// r x r minor det(X^(0)_{us[i], vs[j]}) as an element of the a/b ring.
inline Poly det_x_minor(const std::vector<int>& us, const std::vector<int>& vs, int h) {
    detail::require_strict_increasing(us, "det_x_minor");
    detail::require_strict_increasing(vs, "det_x_minor");
    if (us.size() != vs.size())
        throw std::invalid_argument("det_x_minor: sides must have equal length");
    if (static_cast<int>(us.size()) > h)
        throw std::invalid_argument("det_x_minor: minor larger than h");
    int r = static_cast<int>(us.size());
    Poly res;
    detail::for_each_permutation(r, [&](const std::vector<int>& perm, int sgn) {
        Poly p = Poly::constant(sgn);
        for (int i = 0; i < r; ++i) p = p * x_entry(us[i], vs[perm[i]], h);
        res += p;
    });
    return res;
}

namespace detail {
// Compositions of n into `parts` nonnegative parts, lexicographic.
inline void for_each_composition(long n, int parts, auto&& fn) {
    std::vector<long> c(parts, 0);
    auto rec = [&](auto&& self, int pos, long rem) -> void {
        if (pos + 1 == parts) {
            c[pos] = rem;
            fn(c);
            return;
        }
        for (long i = 0; i <= rem; ++i) {
            c[pos] = i;
            self(self, pos + 1, rem - i);
        }
    };
    if (parts == 0) {
        if (n == 0) fn(c);
        return;
    }
    rec(rec, 0, n);
}
}  // namespace detail

// Closed-form expansion of dbar^n applied to the h x h minor:
//   sum over compositions n1+...+nh = n and permutations sigma of
//   sign(sigma) * x^(n1)_{u1 v_sigma(1)} ... x^(nh)_{uh v_sigma(h)},
// with x^(k)_{uv} = dbar^k(sum_l a_{ul} b_{vl}).
inline Poly dbar_det_expansion(const std::vector<int>& us, const std::vector<int>& vs,
                               long n, int h) {
    detail::require_strict_increasing(us, "dbar_det_expansion");
    detail::require_strict_increasing(vs, "dbar_det_expansion");
    if (us.size() != vs.size() || us.empty())
        throw std::invalid_argument("dbar_det_expansion: bad index lists");
    int r = static_cast<int>(us.size());
    // Cache the derived bilinear entries.
    std::map<std::tuple<int, int, long>, Poly> xk;
    auto entry = [&](int u, int v, long k) -> const Poly& {
        auto key = std::make_tuple(u, v, k);
        auto it = xk.find(key);
        if (it == xk.end()) it = xk.emplace(key, dbar(x_entry(u, v, h), k)).first;
        return it->second;
    };
    Poly res;
    detail::for_each_composition(n, r, [&](const std::vector<long>& comp) {
        detail::for_each_permutation(r, [&](const std::vector<int>& perm, int sgn) {
            Poly p = Poly::constant(sgn);
            for (int i = 0; i < r; ++i) p = p * entry(us[i], vs[perm[i]], comp[i]);
            res += p;
        });
    });
    return res;
}

// --- canonical text serialization ---------------------------------------

inline std::string to_string(const DiffVar& v, int exp = 1) {
    std::ostringstream os;
    os << (v.fam == Family::A ? 'a' : 'b') << '[' << v.row << ',' << v.col
       << "]^(" << v.order << ')';
    if (exp > 1) os << '^' << exp;
    return os.str();
}

inline std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : f.terms) {
        if (!first) os << " + ";
        first = false;
        Z a = c;
        if (a < 0) {
            os << "- ";
            a = -a;
        }
        if (m.factors.empty()) {
            os << a.get_str();
        } else {
            os << a.get_str();
            for (auto& [v, e] : m.factors) os << '*' << to_string(v, e);
        }
    }
    return os.str();
}

namespace detail {
struct TextCursor {
    const std::string& s;
    std::size_t pos = 0;
    bool eof() const { return pos >= s.size(); }
    char peek() const { return eof() ? '\0' : s[pos]; }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool consume(const char* lit) {
        std::size_t n = std::string::traits_type::length(lit);
        if (s.compare(pos, n, lit) == 0) {
            pos += n;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c))
            throw std::invalid_argument(std::string("parse: expected '") + c +
                                        "' at position " + std::to_string(pos));
    }
    long integer() {
        std::size_t start = pos;
        if (peek() == '-') ++pos;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (s[start] == '-' && pos == start + 1))
            throw std::invalid_argument("parse: expected integer at position " +
                                        std::to_string(start));
        return std::stol(s.substr(start, pos - start));
    }
    Z bigint() {
        std::size_t start = pos;
        if (peek() == '-') ++pos;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (s[start] == '-' && pos == start + 1))
            throw std::invalid_argument("parse: expected integer at position " +
                                        std::to_string(start));
        return Z(s.substr(start, pos - start));
    }
};
}  // namespace detail

inline Poly parse_poly(const std::string& text) {
    detail::TextCursor c{text};
    Poly f;
    if (text == "0") return f;
    bool first = true;
    while (true) {
        if (!first && !c.consume(" + ")) break;
        first = false;
        bool neg = false;
        if (c.consume("- ")) neg = true;
        Z coeff = c.bigint();
        if (neg) coeff = -coeff;
        Monomial m;
        while (c.consume('*')) {
            char fam = c.peek();
            if (fam != 'a' && fam != 'b')
                throw std::invalid_argument("parse: expected variable family");
            ++c.pos;
            c.expect('[');
            int row = static_cast<int>(c.integer());
            c.expect(',');
            int col = static_cast<int>(c.integer());
            c.expect(']');
            c.expect('^');
            c.expect('(');
            int order = static_cast<int>(c.integer());
            c.expect(')');
            int exp = 1;
            if (c.consume('^')) exp = static_cast<int>(c.integer());
            DiffVar v{fam == 'a' ? Family::A : Family::B, row, col, order};
            m = m.mul(monomial_of(v, exp));
        }
        f.add_term(m, coeff);
    }
    if (!c.eof()) throw std::invalid_argument("parse: trailing characters");
    return f;
}

}  // namespace arcsmt

#endif
