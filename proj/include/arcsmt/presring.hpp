#ifndef ARCSMT_PRESRING_HPP
#define ARCSMT_PRESRING_HPP

// The presentation ring: polynomials over Z in the abstract generator symbols
//   X^(k)_{i,j}           degree (1, 1, k)
//   Y^(k)_{u_1 < ... < u_h}   degree (h, 0, k)
//   Z^(k)_{v_1 < ... < v_h}   degree (0, h, k)
// with the derivation dbar^n acting by X^(k) -> binom(k+n,n) X^(k+n) (and
// likewise for Y, Z), extended by Leibniz. Sign normalization of unsorted
// Y/Z index lists is provided for relation assembly.

#include "arcsmt/diffring.hpp"

#include <array>
#include <tuple>

namespace arcsmt {

enum class PKind : std::uint8_t { X, Y, Z };

struct Degree {
    long d1 = 0, d2 = 0, w = 0;
    friend bool operator==(const Degree&, const Degree&) = default;
    friend auto operator<=>(const Degree&, const Degree&) = default;
    Degree operator+(const Degree& o) const { return {d1 + o.d1, d2 + o.d2, w + o.w}; }
    Degree operator-(const Degree& o) const { return {d1 - o.d1, d2 - o.d2, w - o.w}; }
};

struct PresVar {
    PKind kind{};
    int i = 0, j = 0;          // X only
    std::vector<int> idx;      // Y/Z only, strictly increasing, length h
    int order = 0;

    friend bool operator==(const PresVar&, const PresVar&) = default;
    friend std::strong_ordering operator<=>(const PresVar& x, const PresVar& y) {
        if (auto c = x.kind <=> y.kind; c != 0) return c;
        if (auto c = x.i <=> y.i; c != 0) return c;
        if (auto c = x.j <=> y.j; c != 0) return c;
        if (auto c = x.idx <=> y.idx; c != 0) return c;
        return x.order <=> y.order;
    }

    Degree degree() const {
        long h = static_cast<long>(idx.size());
        switch (kind) {
            case PKind::X: return {1, 1, order};
            case PKind::Y: return {h, 0, order};
            default: return {0, h, order};
        }
    }
};

inline PresVar xvar(int i, int j, int order = 0) {
    return PresVar{PKind::X, i, j, {}, order};
}
inline PresVar yvar(std::vector<int> idx, int order = 0) {
    detail::require_strict_increasing(idx, "yvar");
    return PresVar{PKind::Y, 0, 0, std::move(idx), order};
}
inline PresVar zvar(std::vector<int> idx, int order = 0) {
    detail::require_strict_increasing(idx, "zvar");
    return PresVar{PKind::Z, 0, 0, std::move(idx), order};
}

struct PresMono {
    std::vector<std::pair<PresVar, int>> factors;

    friend bool operator==(const PresMono&, const PresMono&) = default;
    friend std::strong_ordering operator<=>(const PresMono& x, const PresMono& y) {
        return x.factors <=> y.factors;
    }
    Degree degree() const {
        Degree d;
        for (auto& [v, e] : factors) {
            Degree dv = v.degree();
            d = d + Degree{dv.d1 * e, dv.d2 * e, dv.w * e};
        }
        return d;
    }
    PresMono mul(const PresMono& o) const {
        PresMono r;
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

struct PresPoly {
    std::map<PresMono, Z> terms;

    PresPoly() = default;
    static PresPoly zero() { return {}; }
    static PresPoly constant(const Z& c) {
        PresPoly f;
        if (c != 0) f.terms.emplace(PresMono{}, c);
        return f;
    }
    static PresPoly var(const PresVar& v) {
        PresPoly f;
        PresMono m;
        m.factors.emplace_back(v, 1);
        f.terms.emplace(std::move(m), 1);
        return f;
    }

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const PresPoly&, const PresPoly&) = default;

    void add_term(const PresMono& m, const Z& c) {
        if (c == 0) return;
        auto [it, fresh] = terms.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    PresPoly& operator+=(const PresPoly& o) {
        for (auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }
    PresPoly& operator-=(const PresPoly& o) {
        for (auto& [m, c] : o.terms) add_term(m, -c);
        return *this;
    }
    friend PresPoly operator+(PresPoly x, const PresPoly& y) { return x += y; }
    friend PresPoly operator-(PresPoly x, const PresPoly& y) { return x -= y; }
    friend PresPoly operator*(const PresPoly& x, const PresPoly& y) {
        PresPoly r;
        for (auto& [mx, cx] : x.terms)
            for (auto& [my, cy] : y.terms) r.add_term(mx.mul(my), cx * cy);
        return r;
    }
    friend PresPoly operator*(const Z& c, const PresPoly& f) {
        PresPoly r;
        if (c == 0) return r;
        for (auto& [m, cf] : f.terms) r.terms.emplace(m, c * cf);
        return r;
    }
    friend PresPoly operator-(const PresPoly& f) { return Z(-1) * f; }

    // Tri-degree when homogeneous; nullopt otherwise (zero counts as
    // homogeneous of any degree and reports (0,0,0)).
    std::optional<Degree> homogeneous_degree() const {
        std::optional<Degree> d;
        for (auto& [m, c] : terms) {
            Degree dm = m.degree();
            if (!d)
                d = dm;
            else if (*d != dm)
                return std::nullopt;
        }
        return d ? d : std::optional<Degree>{Degree{}};
    }
};

// Sort-with-sign constructors for Y/Z with arbitrary index lists: returns the
// zero polynomial on a repeated index, else sign * Y^(k)_{sorted}.
inline PresPoly y_signed(std::vector<int> idx, int order = 0) {
    auto [sgn, sorted] = detail::sort_sign(std::move(idx));
    if (sgn == 0) return PresPoly::zero();
    return Z(sgn) * PresPoly::var(yvar(std::move(sorted), order));
}
inline PresPoly z_signed(std::vector<int> idx, int order = 0) {
    auto [sgn, sorted] = detail::sort_sign(std::move(idx));
    if (sgn == 0) return PresPoly::zero();
    return Z(sgn) * PresPoly::var(zvar(std::move(sorted), order));
}

// --- derivation ----------------------------------------------------------

inline PresPoly dbar_var(const PresVar& v, long n) {
    PresVar w = v;
    w.order += static_cast<int>(n);
    PresPoly f = PresPoly::var(w);
    return binom(v.order + n, n) * f;
}

namespace detail {
inline PresPoly dbar_flat_pres(const std::vector<PresVar>& flat, std::size_t idx,
                               long n) {
    if (idx == flat.size())
        return n == 0 ? PresPoly::constant(1) : PresPoly::zero();
    if (idx + 1 == flat.size()) return dbar_var(flat[idx], n);
    PresPoly r;
    for (long i = 0; i <= n; ++i)
        r += dbar_var(flat[idx], i) * dbar_flat_pres(flat, idx + 1, n - i);
    return r;
}
}  // namespace detail

inline PresPoly dbar(const PresPoly& f, long n) {
    if (n == 0) return f;
    if (n < 0) throw std::invalid_argument("dbar: negative order");
    PresPoly r;
    for (auto& [m, c] : f.terms) {
        std::vector<PresVar> flat;
        for (auto& [v, e] : m.factors)
            for (int t = 0; t < e; ++t) flat.push_back(v);
        r += c * detail::dbar_flat_pres(flat, 0, n);
    }
    return r;
}

// --- text form -----------------------------------------------------------

inline std::string to_string(const PresVar& v, int exp = 1) {
    std::ostringstream os;
    switch (v.kind) {
        case PKind::X:
            os << "X[" << v.i << ',' << v.j << ']';
            break;
        case PKind::Y:
        case PKind::Z:
            os << (v.kind == PKind::Y ? 'Y' : 'Z') << '[';
            for (std::size_t t = 0; t < v.idx.size(); ++t)
                os << (t ? "," : "") << v.idx[t];
            os << ']';
            break;
    }
    os << "^(" << v.order << ')';
    if (exp > 1) os << '^' << exp;
    return os.str();
}

inline std::string to_string(const PresPoly& f) {
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
        os << a.get_str();
        for (auto& [v, e] : m.factors) os << '*' << to_string(v, e);
    }
    return os.str();
}

}  // namespace arcsmt

#endif
