#ifndef ARCSMT_SMT_HPP
#define ARCSMT_SMT_HPP

// Evaluation of alphabet symbols into the a/b ring, the standardness test
// with its tagged-chain certificate, enumeration of standard words, and the
// leading-term peel that rewrites any subring element as an integer
// combination of standard words.

#include "arcsmt/presring.hpp"
#include "arcsmt/tableau.hpp"

namespace arcsmt {

using JWord = std::vector<JSeq>;

inline int cmp_jword(const JWord& a, const JWord& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = cmp_total_J(a[i], b[i])) return c;
    return detail::cmp_long(static_cast<long>(a.size()), static_cast<long>(b.size()));
}

struct JWordLess {
    bool operator()(const JWord& a, const JWord& b) const { return cmp_jword(a, b) < 0; }
};

using BasisCoords = std::map<JWord, Z, JWordLess>;

// --- evaluation ----------------------------------------------------------

inline Poly q_eval_j(const JSeq& j, const Ambient& amb) {
    switch (j.kind) {
        case JKind::L: {
            if (j.size() != amb.h)
                throw std::invalid_argument("q_eval_j: left symbol must have size h");
            return dbar(det_a(j.us), j.weight);
        }
        case JKind::R: {
            if (j.size() != amb.h)
                throw std::invalid_argument("q_eval_j: right symbol must have size h");
            return dbar(det_b(j.vs), j.weight);
        }
        default:
            return dbar(det_x_minor(j.us, j.vs, amb.h), j.weight);
    }
}

inline Poly q_eval_word(const JWord& w, const Ambient& amb) {
    Poly f = Poly::constant(1);
    for (auto& j : w) f = f * q_eval_j(j, amb);
    return f;
}

inline Poly q_eval_pres(const PresPoly& f, const Ambient& amb) {
    // Cache per distinct variable.
    std::map<PresVar, Poly> cache;
    auto eval_var = [&](const PresVar& v) -> const Poly& {
        auto it = cache.find(v);
        if (it != cache.end()) return it->second;
        Poly base;
        switch (v.kind) {
            case PKind::X: base = x_entry(v.i, v.j, amb.h); break;
            case PKind::Y:
                if (static_cast<int>(v.idx.size()) != amb.h)
                    throw std::invalid_argument("q_eval_pres: Y arity != h");
                base = det_a(v.idx);
                break;
            case PKind::Z:
                if (static_cast<int>(v.idx.size()) != amb.h)
                    throw std::invalid_argument("q_eval_pres: Z arity != h");
                base = det_b(v.idx);
                break;
        }
        return cache.emplace(v, dbar(base, v.order)).first->second;
    };
    Poly out;
    for (auto& [m, c] : f.terms) {
        Poly t = Poly::constant(c);
        for (auto& [v, e] : m.factors)
            for (int k = 0; k < e; ++k) t = t * eval_var(v);
        out += t;
    }
    return out;
}

// --- standardness --------------------------------------------------------

// Incremental chain state for walking a sorted word left to right.
struct ChainState {
    Ambient amb;
    std::optional<ESeq> last_l, last_r, last_full;
    std::vector<ESeq> chain;

    explicit ChainState(const Ambient& a) : amb(a) {}

    // Extend by the next factor; false when no dominating representative
    // exists (the word is not standard at this position).
    bool advance(const JSeq& j) {
        std::optional<ESeq> next;
        switch (j.kind) {
            case JKind::L:
                next = last_l ? largest_e_above(*last_l, j)
                              : std::optional<ESeq>(largest_of_eclass(j));
                if (next) last_l = next;
                break;
            case JKind::R:
                next = last_r ? largest_e_above(*last_r, j)
                              : std::optional<ESeq>(largest_of_eclass(j));
                if (next) last_r = next;
                break;
            default: {
                ESeq prev = last_full
                                ? *last_full
                                : fuse(last_l ? *last_l : e0_left(amb.h),
                                       last_r ? *last_r : e0_right(amb.h));
                next = largest_e_above(prev, j);
                if (next) last_full = next;
                break;
            }
        }
        if (!next) return false;
        chain.push_back(std::move(*next));
        return true;
    }
};

struct StandardResult {
    bool ok = false;
    std::vector<ESeq> chain;      // certificate when ok
    std::size_t fail_index = 0;   // first failing position (0-based) otherwise
};

inline StandardResult is_standard(const JWord& w, const Ambient& amb) {
    for (auto& j : w)
        if (!in_alphabet(j, amb))
            throw std::invalid_argument("is_standard: symbol outside the alphabet");
    for (std::size_t i = 1; i < w.size(); ++i)
        if (cmp_total_J(w[i - 1], w[i]) > 0) return {false, {}, i};
    ChainState st(amb);
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!st.advance(w[i])) return {false, {}, i};
    return {true, std::move(st.chain), 0};
}

inline std::vector<ESeq> pi_inverse(const JWord& w, const Ambient& amb) {
    StandardResult r = is_standard(w, amb);
    if (!r.ok) throw std::invalid_argument("pi_inverse: word is not standard");
    return r.chain;
}

// --- enumeration ---------------------------------------------------------

// The alphabet restricted to weight <= max_weight, sorted ascending.
inline std::vector<JSeq> alphabet(const Ambient& amb, long max_weight) {
    std::vector<JSeq> out;
    auto range = [](int n) {
        std::vector<int> xs(n);
        for (int i = 0; i < n; ++i) xs[i] = i + 1;
        return xs;
    };
    for (long k = 0; k <= max_weight; ++k) {
        detail::for_each_subset(range(amb.p), amb.h, [&](const std::vector<int>& u) {
            out.push_back(jseq_l(u, k));
        });
        detail::for_each_subset(range(amb.q), amb.h, [&](const std::vector<int>& v) {
            out.push_back(jseq_r(v, k));
        });
        for (int s = 1; s <= amb.h - 1; ++s)
            detail::for_each_subset(range(amb.p), s, [&](const std::vector<int>& u) {
                detail::for_each_subset(range(amb.q), s, [&](const std::vector<int>& v) {
                    out.push_back(jseq_full(u, v, k));
                });
            });
    }
    std::sort(out.begin(), out.end(),
              [](const JSeq& a, const JSeq& b) { return cmp_total_J(a, b) < 0; });
    return out;
}

// All standard words with factor count <= max_degree and total weight
// <= max_weight, emitted in ascending word order.
inline std::vector<JWord> enumerate_standard(const Ambient& amb, long max_weight,
                                             long max_degree) {
    std::vector<JSeq> alpha = alphabet(amb, max_weight);
    std::vector<JWord> out;
    JWord cur;
    auto rec = [&](auto&& self, const ChainState& st, std::size_t from, long wt_left,
                   long deg_left) -> void {
        out.push_back(cur);
        if (deg_left == 0) return;
        for (std::size_t i = from; i < alpha.size(); ++i) {
            if (alpha[i].weight > wt_left) continue;
            ChainState next = st;
            if (!next.advance(alpha[i])) continue;
            cur.push_back(alpha[i]);
            self(self, next, i, wt_left - alpha[i].weight, deg_left - 1);
            cur.pop_back();
        }
    };
    rec(rec, ChainState(amb), 0, max_weight, max_degree);
    return out;
}

// --- peel / straighten ---------------------------------------------------

struct PeelResult {
    bool ok = false;
    BasisCoords coords;
    Poly residual;       // nonzero iff !ok
    std::string error;
};

inline PeelResult peel(Poly f, const Ambient& amb, long max_iter = 1000000) {
    PeelResult res;
    std::optional<Word> prev_word;
    for (long iter = 0; !f.is_zero(); ++iter) {
        if (iter >= max_iter) {
            res.residual = std::move(f);
            res.error = "not in subring within bounds: iteration cap reached";
            return res;
        }
        auto [m, c] = ld_plus(f, amb.h);
        Word w = word(m, amb.h);
        if (prev_word && cmp_word(w, *prev_word) >= 0) {
            res.residual = std::move(f);
            res.error = "not in subring within bounds: leading word failed to decrease";
            return res;
        }
        auto chain = invert_t_plus(m, amb.h);
        if (!chain) {
            res.residual = std::move(f);
            res.error = "not in subring within bounds: leading monomial is not a "
                        "canonical tagged product";
            return res;
        }
        JWord s;
        for (auto& e : *chain) s.push_back(norm_of_E(e));
        bool sorted = true;
        for (std::size_t i = 1; i < s.size(); ++i)
            if (cmp_total_J(s[i - 1], s[i]) > 0) sorted = false;
        bool standard = sorted;
        if (standard) {
            for (auto& j : s)
                if (!in_alphabet(j, amb)) standard = false;
        }
        if (standard) standard = is_standard(s, amb).ok;
        if (!standard) {
            res.residual = std::move(f);
            res.error = "not in subring within bounds: leading monomial decodes to a "
                        "nonstandard word";
            return res;
        }
        Poly g = q_eval_word(s, amb);
        auto [mg, cg] = ld_plus(g, amb.h);
        if (!(mg == m) || !(cg == 1 || cg == -1)) {
            res.residual = std::move(f);
            res.error = "not in subring within bounds: triangularity mismatch";
            return res;
        }
        Z mult = c * cg;  // cg is +-1, so c/cg == c*cg
        f -= mult * g;
        res.coords[s] += mult;
        if (res.coords[s] == 0) res.coords.erase(s);
        prev_word = std::move(w);
    }
    res.ok = true;
    return res;
}

inline PeelResult straighten(const JWord& w, const Ambient& amb) {
    for (auto& j : w)
        if (!in_alphabet(j, amb))
            throw std::invalid_argument("straighten: symbol outside the alphabet");
    return peel(q_eval_word(w, amb), amb);
}

}  // namespace arcsmt

#endif
