#ifndef ARCSMT_ACTION_HPP
#define ARCSMT_ACTION_HPP

// Infinitesimal invariance checker. A trace-zero h x h integer matrix xi
// paired with a t-power m acts on the differential ring as the derivation
//   D(a^(k)_{i,l}) =  sum_{l'} xi_{l',l} a^(k-m)_{i,l'}   (k >= m, else 0)
//   D(b^(k)_{j,l}) = -sum_{l'} xi_{l,l'} b^(k-m)_{j,l'}   (k >= m, else 0)
// extended by the Leibniz rule: the a-rows transform by right
// multiplication, the b-rows by the inverse transpose, which is the unique
// convention (up to a global transpose) under which every bilinear entry
// sum_l a_{il} b_{jl} is annihilated. All generators of the invariant
// subring must be sent to zero by every such derivation.

#include "arcsmt/diffring.hpp"

namespace arcsmt {

struct LieElem {
    int h = 0;
    std::vector<std::vector<long>> xi;  // h x h, trace zero
    int m = 0;                          // t-power

    long trace() const {
        long t = 0;
        for (int r = 0; r < h; ++r) t += xi[r][r];
        return t;
    }
};

inline LieElem lie_elem(int h, std::vector<std::vector<long>> xi, int m) {
    LieElem g{h, std::move(xi), m};
    if (static_cast<int>(g.xi.size()) != h)
        throw std::invalid_argument("lie_elem: matrix must be h x h");
    for (auto& row : g.xi)
        if (static_cast<int>(row.size()) != h)
            throw std::invalid_argument("lie_elem: matrix must be h x h");
    return g;
}

// Elementary matrix E_{rs} (1-based), as a raw matrix.
inline std::vector<std::vector<long>> elem_matrix(int h, int r, int s) {
    std::vector<std::vector<long>> xi(h, std::vector<long>(h, 0));
    xi[r - 1][s - 1] = 1;
    return xi;
}

// Standard basis of the trace-zero matrices (E_rs for r != s and
// H_r = E_rr - E_{r+1,r+1}) crossed with t-powers 0..m_max: (h^2 - 1) *
// (m_max + 1) elements.
inline std::vector<LieElem> lie_basis(int h, int m_max) {
    std::vector<LieElem> out;
    for (int m = 0; m <= m_max; ++m) {
        for (int r = 1; r <= h; ++r)
            for (int s = 1; s <= h; ++s) {
                if (r == s) continue;
                out.push_back(lie_elem(h, elem_matrix(h, r, s), m));
            }
        for (int r = 1; r < h; ++r) {
            auto xi = elem_matrix(h, r, r);
            xi[r][r] = -1;
            out.push_back(lie_elem(h, std::move(xi), m));
        }
    }
    return out;
}

// D applied to a single variable.
inline Poly action_var(const LieElem& g, const DiffVar& v) {
    Poly r;
    if (v.order < g.m) return r;
    if (v.col < 1 || v.col > g.h)
        throw std::invalid_argument("action_var: column outside 1..h");
    for (int lp = 1; lp <= g.h; ++lp) {
        long c = v.fam == Family::A ? g.xi[lp - 1][v.col - 1]
                                    : -g.xi[v.col - 1][lp - 1];
        if (c == 0) continue;
        DiffVar w = v;
        w.col = lp;
        w.order = v.order - g.m;
        r += Z(c) * Poly::var(w);
    }
    return r;
}

// D extended to polynomials by the Leibniz rule.
inline Poly infinitesimal_action(const LieElem& g, const Poly& f) {
    Poly r;
    for (const auto& [m, c] : f.terms) {
        for (std::size_t i = 0; i < m.factors.size(); ++i) {
            auto [v, e] = m.factors[i];
            Poly dv = action_var(g, v);
            if (dv.is_zero()) continue;
            Monomial rest;
            for (std::size_t j = 0; j < m.factors.size(); ++j) {
                if (j == i) {
                    if (e > 1) rest = rest.mul(monomial_of(v, e - 1));
                } else {
                    rest = rest.mul(
                        monomial_of(m.factors[j].first, m.factors[j].second));
                }
            }
            r += (c * Z(e)) * (Poly::term(rest, 1) * dv);
        }
    }
    return r;
}

namespace detail {
// Strictly increasing h-tuples from 1..n.
inline void for_each_increasing(int n, int h, auto&& fn) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == h) {
            fn(cur);
            return;
        }
        for (int x = from; x <= n; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
}
}  // namespace detail

struct InvarianceReport {
    bool ok = true;
    long generators_checked = 0;
    long pairs_checked = 0;
    std::vector<std::string> violations;
};

// Checks that every derived generator (the bilinear entries and both
// one-sided determinants, derived up to weight_max) is annihilated by
// every trace-zero basis derivation with t-power up to m_max.
inline InvarianceReport check_invariance(int p, int q, int h, int weight_max,
                                         int m_max) {
    InvarianceReport rep;
    std::vector<std::pair<std::string, Poly>> gens;
    for (int k = 0; k <= weight_max; ++k) {
        for (int i = 1; i <= p; ++i)
            for (int j = 1; j <= q; ++j)
                gens.emplace_back("X^(" + std::to_string(k) + ")[" +
                                      std::to_string(i) + "," + std::to_string(j) +
                                      "]",
                                  dbar(x_entry(i, j, h), k));
        detail::for_each_increasing(p, h, [&](const std::vector<int>& s) {
            gens.emplace_back("Y^(" + std::to_string(k) + ")", dbar(det_a(s), k));
        });
        detail::for_each_increasing(q, h, [&](const std::vector<int>& s) {
            gens.emplace_back("Z^(" + std::to_string(k) + ")", dbar(det_b(s), k));
        });
    }
    rep.generators_checked = static_cast<long>(gens.size());
    std::vector<LieElem> basis = lie_basis(h, m_max);
    for (const auto& [name, f] : gens)
        for (const LieElem& g : basis) {
            ++rep.pairs_checked;
            if (!infinitesimal_action(g, f).is_zero()) {
                rep.ok = false;
                rep.violations.push_back(name);
            }
        }
    return rep;
}

}  // namespace arcsmt

#endif
