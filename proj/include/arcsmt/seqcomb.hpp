#ifndef ARCSMT_SEQCOMB_HPP
#define ARCSMT_SEQCOMB_HPP

// The combinatorial alphabet of derived minors and its orders.
//
// A JSeq denotes a derived determinant symbol:
//   L    : D^k(u_h,...,u_1|        a left (a-side) determinant,
//   R    : D^k|v_1,...,v_h)        a right (b-side) determinant,
//   Full : D^k(u_r,...,u_1|v_1,...,v_r)  a mixed minor.
// Index lists are stored ascending (slot 1 innermost, nearest the bar).
//
// An ESeq is a tagged refinement: every slot carries its own derivative
// order, so that the slot tags sum to the weight of the underlying JSeq
// (the normalization ||E||). ESeqs carry a total order (used to pick
// canonical representatives) and a partial dominance order (used for the
// standardness chains).
//
// L/R numbers and the dominance criterion: lnum(E, J') is the least i0 >= 0
// such that the i-th smallest index of J' dominates the (i - i0)-th smallest
// leading index of E for all i > i0; J' is greater than E precisely when the
// weight surplus wt(J') - wt(E(h')) covers lnum + rnum (one-sided for the
// one-sided kinds). This is equivalent to the existence of a tagged
// representative of J' dominating E, and both readings are implemented (the
// closed-form here, the brute-force search over eclass in the tests).

#include "arcsmt/diffring.hpp"

namespace arcsmt {

struct Ambient {
    int p = 1, q = 1, h = 1;
};

enum class JKind : std::uint8_t { L, R, Full };

struct JSeq {
    JKind kind{};
    long weight = 0;
    std::vector<int> us;  // ascending; empty for R
    std::vector<int> vs;  // ascending; empty for L

    friend bool operator==(const JSeq&, const JSeq&) = default;

    int size() const {
        return static_cast<int>(kind == JKind::R ? vs.size() : us.size());
    }
};

struct SignedJ {
    int sign = 0;  // -1, 0, +1; 0 means a repeated index collapsed the symbol
    std::optional<JSeq> seq;
};

// Pair (index, tag); tag = per-slot derivative order.
using EPair = std::pair<int, int>;

struct ESeq {
    JKind kind{};
    std::vector<EPair> left;   // slot order: [0] nearest the bar
    std::vector<EPair> right;  // slot order: [0] nearest the bar

    friend bool operator==(const ESeq&, const ESeq&) = default;

    int size() const {
        return static_cast<int>(kind == JKind::R ? right.size() : left.size());
    }
    long weight() const {
        long w = 0;
        for (auto& [u, k] : left) w += k;
        for (auto& [v, l] : right) w += l;
        return w;
    }
};

// --- constructors / validation ------------------------------------------

inline JSeq jseq_l(std::vector<int> us, long weight) {
    detail::require_strict_increasing(us, "jseq_l");
    return JSeq{JKind::L, weight, std::move(us), {}};
}
inline JSeq jseq_r(std::vector<int> vs, long weight) {
    detail::require_strict_increasing(vs, "jseq_r");
    return JSeq{JKind::R, weight, {}, std::move(vs)};
}
inline JSeq jseq_full(std::vector<int> us, std::vector<int> vs, long weight) {
    detail::require_strict_increasing(us, "jseq_full");
    detail::require_strict_increasing(vs, "jseq_full");
    if (us.size() != vs.size())
        throw std::invalid_argument("jseq_full: sides must have equal size");
    return JSeq{JKind::Full, weight, std::move(us), std::move(vs)};
}

// Membership of J in the ambient alphabet: L/R have size exactly h, Full
// symbols have size 1..h-1; indices within 1..p / 1..q.
inline bool in_alphabet(const JSeq& j, const Ambient& amb) {
    auto in_range = [](const std::vector<int>& xs, int hi) {
        return xs.empty() || (xs.front() >= 1 && xs.back() <= hi);
    };
    if (j.weight < 0) return false;
    switch (j.kind) {
        case JKind::L:
            return j.size() == amb.h && in_range(j.us, amb.p);
        case JKind::R:
            return j.size() == amb.h && in_range(j.vs, amb.q);
        default:
            return j.size() >= 1 && j.size() <= amb.h - 1 && in_range(j.us, amb.p) &&
                   in_range(j.vs, amb.q);
    }
}

// Sort each side with sign bookkeeping; zero on repeats. Raw lists are
// given in display order: the left side outer slot first (u_h,...,u_1), the
// right side inner slot first (v_1,...,v_h) — matching the printed form.
inline SignedJ normalize_raw(JKind kind, long weight, std::vector<int> raw_us,
                             std::vector<int> raw_vs) {
    for (int u : raw_us)
        if (u < 1) throw std::invalid_argument("normalize_raw: index < 1");
    for (int v : raw_vs)
        if (v < 1) throw std::invalid_argument("normalize_raw: index < 1");
    int sgn = 1;
    if (kind != JKind::R) {
        std::reverse(raw_us.begin(), raw_us.end());  // to slot order
        auto [s, sorted] = detail::sort_sign(std::move(raw_us));
        if (s == 0) return {0, std::nullopt};
        sgn *= s;
        raw_us = std::move(sorted);
    }
    if (kind != JKind::L) {
        auto [s, sorted] = detail::sort_sign(std::move(raw_vs));
        if (s == 0) return {0, std::nullopt};
        sgn *= s;
        raw_vs = std::move(sorted);
    }
    if (kind == JKind::Full && raw_us.size() != raw_vs.size())
        throw std::invalid_argument("normalize_raw: unbalanced full sequence");
    return {sgn, JSeq{kind, weight, std::move(raw_us), std::move(raw_vs)}};
}

inline JSeq norm_of_E(const ESeq& e) {
    JSeq j;
    j.kind = e.kind;
    j.weight = e.weight();
    for (auto& [u, k] : e.left) j.us.push_back(u);
    for (auto& [v, l] : e.right) j.vs.push_back(v);
    std::sort(j.us.begin(), j.us.end());
    std::sort(j.vs.begin(), j.vs.end());
    return j;
}

// --- total orders --------------------------------------------------------

namespace detail {
inline int cmp_long(long a, long b) { return a < b ? -1 : a > b ? 1 : 0; }

// Lexicographic on integer words; a strict prefix precedes.
inline int cmp_word(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = cmp_long(a[i], b[i])) return c;
    return cmp_long(static_cast<long>(a.size()), static_cast<long>(b.size()));
}

// Pair order, weight-major: (u,k) <= (u',k') iff k < k' or (k = k', u <= u').
inline int cmp_epair(const EPair& a, const EPair& b) {
    if (int c = cmp_long(a.second, b.second)) return c;
    return cmp_long(a.first, b.first);
}
inline int cmp_eword(const std::vector<EPair>& a, const std::vector<EPair>& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = cmp_epair(a[i], b[i])) return c;
    return cmp_long(static_cast<long>(a.size()), static_cast<long>(b.size()));
}

inline int kind_rank(JKind k) {
    return k == JKind::L ? 0 : k == JKind::R ? 1 : 2;
}
}  // namespace detail

// The word of a JSeq: outer slot first on the left side, then outer slot
// first on the right side (u_r ... u_1 v_r ... v_1).
inline std::vector<int> j_word(const JSeq& j) {
    std::vector<int> w(j.us.rbegin(), j.us.rend());
    w.insert(w.end(), j.vs.rbegin(), j.vs.rend());
    return w;
}

inline int cmp_total_J(const JSeq& a, const JSeq& b) {
    if (int c = detail::cmp_long(detail::kind_rank(a.kind), detail::kind_rank(b.kind)))
        return c;
    if (a.kind == JKind::Full) {
        // Larger size precedes.
        if (int c = detail::cmp_long(b.size(), a.size())) return c;
    }
    if (int c = detail::cmp_long(a.weight, b.weight)) return c;
    return detail::cmp_word(j_word(a), j_word(b));
}

inline std::vector<EPair> e_word(const ESeq& e) {
    std::vector<EPair> w(e.left.rbegin(), e.left.rend());
    w.insert(w.end(), e.right.rbegin(), e.right.rend());
    return w;
}

inline int cmp_total_E(const ESeq& a, const ESeq& b) {
    if (int c = detail::cmp_long(detail::kind_rank(a.kind), detail::kind_rank(b.kind)))
        return c;
    if (a.kind == JKind::Full) {
        if (int c = detail::cmp_long(b.size(), a.size())) return c;
    }
    if (int c = detail::cmp_long(a.weight(), b.weight())) return c;
    return detail::cmp_eword(e_word(a), e_word(b));
}

// --- partial dominance order --------------------------------------------

namespace detail {
inline bool epair_le(const EPair& a, const EPair& b) {
    return a.second < b.second || (a.second == b.second && a.first <= b.first);
}
inline bool slots_le(const std::vector<EPair>& a, const std::vector<EPair>& b,
                     std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (!epair_le(a[i], b[i])) return false;
    return true;
}
}  // namespace detail

// e1 <= e2 in the dominance order: compare the first sz(e2) slots per side.
// Non-matching kind combinations are incomparable (returns false).
inline bool le_partial_E(const ESeq& e1, const ESeq& e2) {
    std::size_t n = static_cast<std::size_t>(e2.size());
    switch (e2.kind) {
        case JKind::L:
            return e1.kind == JKind::L && e1.left.size() == n &&
                   detail::slots_le(e1.left, e2.left, n);
        case JKind::R:
            return e1.kind == JKind::R && e1.right.size() == n &&
                   detail::slots_le(e1.right, e2.right, n);
        default:
            switch (e1.kind) {
                case JKind::L:
                    return e1.left.size() >= n && detail::slots_le(e1.left, e2.left, n);
                case JKind::R:
                    return e1.right.size() >= n &&
                           detail::slots_le(e1.right, e2.right, n);
                default:
                    return e1.left.size() >= n &&
                           detail::slots_le(e1.left, e2.left, n) &&
                           detail::slots_le(e1.right, e2.right, n);
            }
    }
}

// --- projections ---------------------------------------------------------

inline ESeq restrict_e(const ESeq& e, int hp) {
    if (hp > e.size() || hp < 0)
        throw std::invalid_argument("restrict_e: size out of range");
    ESeq r;
    r.kind = e.kind;
    if (e.kind != JKind::R)
        r.left.assign(e.left.begin(), e.left.begin() + hp);
    if (e.kind != JKind::L)
        r.right.assign(e.right.begin(), e.right.begin() + hp);
    return r;
}

inline ESeq left_part(const ESeq& e) {
    if (e.kind == JKind::R)
        throw std::invalid_argument("left_part: no left side");
    if (e.kind == JKind::L) return e;
    return ESeq{JKind::L, e.left, {}};
}

inline ESeq right_part(const ESeq& e) {
    if (e.kind == JKind::L)
        throw std::invalid_argument("right_part: no right side");
    if (e.kind == JKind::R) return e;
    return ESeq{JKind::R, {}, e.right};
}

inline ESeq fuse(const ESeq& el, const ESeq& er) {
    if (el.kind != JKind::L || er.kind != JKind::R)
        throw std::invalid_argument("fuse: expects an L and an R sequence");
    if (el.left.size() != er.right.size())
        throw std::invalid_argument("fuse: sizes differ");
    return ESeq{JKind::Full, el.left, er.right};
}

// The identity padding used at the one-sided/full boundary of standardness
// chains: slot i holds index i with tag 0.
inline ESeq e0_left(int h) {
    ESeq e;
    e.kind = JKind::L;
    for (int i = 1; i <= h; ++i) e.left.emplace_back(i, 0);
    return e;
}
inline ESeq e0_right(int h) {
    ESeq e;
    e.kind = JKind::R;
    for (int i = 1; i <= h; ++i) e.right.emplace_back(i, 0);
    return e;
}

// --- eclass enumeration --------------------------------------------------

namespace detail {
// All compositions of n into `parts` parts, colexicographic ascending.
inline std::vector<std::vector<long>> compositions_colex(long n, int parts) {
    std::vector<std::vector<long>> out;
    for_each_composition(n, parts, [&](const std::vector<long>& c) { out.push_back(c); });
    std::sort(out.begin(), out.end(),
              [](const std::vector<long>& x, const std::vector<long>& y) {
                  return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(),
                                                      y.rend());
              });
    return out;
}
}  // namespace detail

namespace detail {
inline std::vector<std::vector<int>> perms_of(std::vector<int> xs) {
    std::vector<std::vector<int>> out;
    do out.push_back(xs);
    while (std::next_permutation(xs.begin(), xs.end()));
    return out;
}
}  // namespace detail

// All tagged representatives of J: every assignment of the indices to the
// slots (any ordering collapses to the same norm) combined with every
// distribution of the weight over the slots. Stream order: index orderings
// lexicographic in slot order (the canonical ascending assignment first),
// left side outer loop; within one assignment, compositions over the
// display-order slots (outer slot first, left side before right side) in
// colexicographic order.
inline std::vector<ESeq> eclass(const JSeq& j) {
    int s = j.size();
    int slots = (j.kind == JKind::Full) ? 2 * s : s;
    auto comps = detail::compositions_colex(j.weight, slots);
    std::vector<std::vector<int>> lperms{{}}, rperms{{}};
    if (j.kind != JKind::R) lperms = detail::perms_of(j.us);
    if (j.kind != JKind::L) rperms = detail::perms_of(j.vs);
    std::vector<ESeq> out;
    for (auto& lp : lperms)
        for (auto& rp : rperms)
            for (auto& c : comps) {
                ESeq e;
                e.kind = j.kind;
                if (j.kind != JKind::R)
                    for (int i = 1; i <= s; ++i)
                        e.left.emplace_back(lp[i - 1], static_cast<int>(c[s - i]));
                if (j.kind != JKind::L) {
                    int off = (j.kind == JKind::Full) ? s : 0;
                    for (int i = 1; i <= s; ++i)
                        e.right.emplace_back(rp[i - 1], static_cast<int>(c[off + s - i]));
                }
                out.push_back(std::move(e));
            }
    return out;
}

// --- L/R numbers and the dominance criterion -----------------------------

namespace detail {
inline std::vector<int> sorted_leading(const std::vector<EPair>& side, int hp) {
    std::vector<int> w;
    for (int i = 0; i < hp; ++i) w.push_back(side[i].first);
    std::sort(w.begin(), w.end());
    return w;
}
inline int offset_number(const std::vector<int>& jprime_sorted,
                         const std::vector<EPair>& e_side, int hp) {
    std::vector<int> w = sorted_leading(e_side, hp);
    for (int i0 = 0; i0 <= hp; ++i0) {
        bool ok = true;
        for (int i = i0 + 1; i <= hp; ++i)
            if (jprime_sorted[i - 1] < w[i - i0 - 1]) {
                ok = false;
                break;
            }
        if (ok) return i0;
    }
    return hp;  // unreachable: i0 = hp is always valid
}
}  // namespace detail

inline int lnum(const ESeq& e, const JSeq& jp) {
    if (jp.kind == JKind::R || e.kind == JKind::R)
        throw std::invalid_argument("lnum: left sides required");
    int hp = jp.size();
    if (hp > static_cast<int>(e.left.size()))
        throw std::invalid_argument("lnum: sz(J') exceeds sz(E)");
    return detail::offset_number(jp.us, e.left, hp);
}

inline int rnum(const ESeq& e, const JSeq& jp) {
    if (jp.kind == JKind::L || e.kind == JKind::L)
        throw std::invalid_argument("rnum: right sides required");
    int hp = jp.size();
    if (hp > static_cast<int>(e.right.size()))
        throw std::invalid_argument("rnum: sz(J') exceeds sz(E)");
    return detail::offset_number(jp.vs, e.right, hp);
}

namespace detail {
inline long wt_side(const std::vector<EPair>& side, int hp) {
    long w = 0;
    for (int i = 0; i < hp; ++i) w += side[i].second;
    return w;
}

// Kind compatibility for "some tagged representative of J' dominates E".
inline bool greater_kinds_ok(const JSeq& jp, const ESeq& e) {
    switch (jp.kind) {
        case JKind::L: return e.kind == JKind::L;
        case JKind::R: return e.kind == JKind::R;
        default: return true;
    }
}
}  // namespace detail

// True iff some tagged representative of J' dominates E. Closed form: the
// weight surplus wt(J') - wt(E restricted to sz(J') slots) must cover the
// L/R offset numbers.
inline bool is_greater(const JSeq& jp, const ESeq& e) {
    if (!detail::greater_kinds_ok(jp, e)) return false;
    int hp = jp.size();
    if (hp > e.size()) return false;
    long surplus = jp.weight;
    int need = 0;
    if (jp.kind != JKind::R && e.kind != JKind::R) {
        surplus -= detail::wt_side(e.left, hp);
        need += lnum(e, jp);
    }
    if (jp.kind != JKind::L && e.kind != JKind::L) {
        surplus -= detail::wt_side(e.right, hp);
        need += rnum(e, jp);
    }
    return surplus >= need;
}

// The largest tagged representative of J' dominating E, or nullopt. Every
// index ordering of J' yields candidates; for a fixed ordering, the
// dominance lower bound of each slot is forced (the slot's tag in E, plus
// one when the assigned index falls below E's index there), and the maximal
// tagging gives every slot its bound with the whole surplus on the most
// significant slot (the left outer slot, or the right outer slot for
// R-kind). The overall maximum under cmp_total_E wins.
inline std::optional<ESeq> largest_e_above(const ESeq& e, const JSeq& jp) {
    if (!detail::greater_kinds_ok(jp, e)) return std::nullopt;
    int hp = jp.size();
    if (hp > e.size()) return std::nullopt;
    bool left_side = jp.kind != JKind::R;
    bool right_side = jp.kind != JKind::L;
    bool left_bound = left_side && e.kind != JKind::R;
    bool right_bound = right_side && e.kind != JKind::L;

    std::vector<std::vector<int>> lperms{{}}, rperms{{}};
    if (left_side) lperms = detail::perms_of(jp.us);
    if (right_side) rperms = detail::perms_of(jp.vs);

    std::optional<ESeq> best;
    for (auto& lp : lperms)
        for (auto& rp : rperms) {
            std::vector<long> minl(left_side ? hp : 0, 0);
            std::vector<long> minr(right_side ? hp : 0, 0);
            for (int i = 0; left_bound && i < hp; ++i) {
                auto [eu, ek] = e.left[i];
                minl[i] = (eu <= lp[i]) ? ek : ek + 1;
            }
            for (int i = 0; right_bound && i < hp; ++i) {
                auto [ev, el] = e.right[i];
                minr[i] = (ev <= rp[i]) ? el : el + 1;
            }
            long total_min = 0;
            for (long m : minl) total_min += m;
            for (long m : minr) total_min += m;
            if (total_min > jp.weight) continue;

            ESeq r;
            r.kind = jp.kind;
            if (left_side)
                for (int i = 0; i < hp; ++i)
                    r.left.emplace_back(lp[i], static_cast<int>(minl[i]));
            if (right_side)
                for (int i = 0; i < hp; ++i)
                    r.right.emplace_back(rp[i], static_cast<int>(minr[i]));
            long surplus = jp.weight - total_min;
            if (left_side)
                r.left[hp - 1].second += static_cast<int>(surplus);
            else
                r.right[hp - 1].second += static_cast<int>(surplus);
            if (!best || cmp_total_E(*best, r) < 0) best = std::move(r);
        }
    return best;
}

// The largest tagged representative of J outright (all weight on the most
// significant slot, canonical index assignment).
inline ESeq largest_of_eclass(const JSeq& j) {
    ESeq base;
    base.kind = j.kind;
    // A dominance-free call: bounds all zero.
    if (j.kind != JKind::R)
        for (std::size_t i = 0; i < j.us.size(); ++i) base.left.emplace_back(1, 0);
    if (j.kind != JKind::L)
        for (std::size_t i = 0; i < j.vs.size(); ++i) base.right.emplace_back(1, 0);
    auto r = largest_e_above(base, j);
    if (!r) throw std::logic_error("largest_of_eclass: unreachable");
    return *r;
}

// --- minimal dominating subselection (test-support oracle) ---------------

enum class Side : std::uint8_t { L, R, Both };

namespace detail {
inline void for_each_subset(const std::vector<int>& xs, int k, auto&& fn) {
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(pick.size()) == k) {
            fn(pick);
            return;
        }
        for (std::size_t i = from; i < xs.size(); ++i) {
            pick.push_back(xs[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}
}  // namespace detail

// The minimum (total order) J'' built from an s-subselection of J''s indices
// on the requested side(s) that is greater than E; nullopt if none exists
// within the weight cap (cannot happen when is_greater(J', E) holds).
inline std::optional<JSeq> min_w(const ESeq& e, const JSeq& jp, int s, Side side) {
    if (s >= jp.size() && side == Side::Both)
        ;  // s == sz(J') is permitted: the set then contains J' itself
    std::optional<JSeq> best;
    auto consider = [&](const JSeq& cand) {
        if (!is_greater(cand, e)) return;
        if (!best || cmp_total_J(cand, *best) < 0) best = cand;
    };
    long cap = jp.weight + e.weight() + s + 1;
    for (long k = 0; k <= cap; ++k) {
        if (side == Side::L) {
            detail::for_each_subset(jp.us, s, [&](const std::vector<int>& u) {
                consider(JSeq{JKind::L, k, u, {}});
            });
        } else if (side == Side::R) {
            detail::for_each_subset(jp.vs, s, [&](const std::vector<int>& v) {
                consider(JSeq{JKind::R, k, {}, v});
            });
        } else {
            detail::for_each_subset(jp.us, s, [&](const std::vector<int>& u) {
                detail::for_each_subset(jp.vs, s, [&](const std::vector<int>& v) {
                    consider(JSeq{JKind::Full, k, u, v});
                });
            });
        }
        if (best) break;  // weight-major order: the first weight level wins
    }
    return best;
}

// --- text forms ----------------------------------------------------------

inline std::string to_string(const JSeq& j) {
    std::ostringstream os;
    os << "D^" << j.weight;
    if (j.kind != JKind::R) {
        os << '(';
        for (std::size_t i = j.us.size(); i-- > 0;)
            os << j.us[i] << (i ? "," : "");
        os << '|';
    } else {
        os << '|';
    }
    if (j.kind != JKind::L) {
        if (j.kind == JKind::R) {
            // reopen: form D^k|v_1,...,v_h)
        }
        for (std::size_t i = 0; i < j.vs.size(); ++i)
            os << (i ? "," : "") << j.vs[i];
        os << ')';
    }
    return os.str();
}

inline std::string to_string(const ESeq& e) {
    std::ostringstream os;
    os << '(';
    if (e.kind != JKind::R) {
        if (e.kind == JKind::L) {
            // form ((u_h,k_h),...,(u_1,k_1)|
        }
        for (std::size_t i = e.left.size(); i-- > 0;) {
            os << '(' << e.left[i].first << ',' << e.left[i].second << ')';
            if (i) os << ',';
        }
    }
    os << '|';
    if (e.kind != JKind::L) {
        for (std::size_t i = 0; i < e.right.size(); ++i) {
            if (i) os << ',';
            os << '(' << e.right[i].first << ',' << e.right[i].second << ')';
        }
    }
    os << ')';
    if (e.kind == JKind::L) {
        // Trim the trailing "|)": an L sequence prints as ((u,k),...|
        std::string s = os.str();
        s.pop_back();
        return s;
    }
    if (e.kind == JKind::R) {
        // An R sequence prints as |(v,l),...): drop the leading '('.
        std::string s = os.str();
        return s.substr(1);
    }
    return os.str();
}

inline JSeq parse_jseq(const std::string& text) {
    detail::TextCursor c{text};
    if (!c.consume("D^")) throw std::invalid_argument("parse_jseq: expected D^");
    long weight = c.integer();
    if (weight < 0) throw std::invalid_argument("parse_jseq: negative weight");
    std::vector<int> us, vs;
    bool has_left = false, has_right = false;
    if (c.consume('(')) {
        has_left = true;
        while (true) {
            us.push_back(static_cast<int>(c.integer()));
            if (!c.consume(',')) break;
        }
        c.expect('|');
    } else {
        c.expect('|');
    }
    if (!c.eof() && c.peek() != '\0' && !has_left) has_right = true;
    if (has_left && !c.eof()) has_right = true;
    if (has_right) {
        while (true) {
            vs.push_back(static_cast<int>(c.integer()));
            if (!c.consume(',')) break;
        }
        c.expect(')');
    }
    if (!c.eof()) throw std::invalid_argument("parse_jseq: trailing characters");
    std::reverse(us.begin(), us.end());  // display is outer-first
    JKind kind = has_left && has_right ? JKind::Full
                 : has_left            ? JKind::L
                                       : JKind::R;
    if (!has_left && !has_right)
        throw std::invalid_argument("parse_jseq: empty sequence");
    switch (kind) {
        case JKind::L: return jseq_l(std::move(us), weight);
        case JKind::R: return jseq_r(std::move(vs), weight);
        default: return jseq_full(std::move(us), std::move(vs), weight);
    }
}

inline ESeq parse_eseq(const std::string& text) {
    detail::TextCursor c{text};
    ESeq e;
    auto pair_list = [&](std::vector<EPair>& out, char stop) {
        while (c.peek() == '(') {
            c.expect('(');
            int u = static_cast<int>(c.integer());
            c.expect(',');
            int k = static_cast<int>(c.integer());
            c.expect(')');
            out.emplace_back(u, k);
            if (!c.consume(',')) break;
        }
        c.expect(stop);
    };
    bool has_left = false, has_right = false;
    if (c.consume('(')) {
        has_left = true;
        pair_list(e.left, '|');
        std::reverse(e.left.begin(), e.left.end());  // display is outer-first
        if (c.peek() == '(') {
            has_right = true;
            std::vector<EPair> tmp;
            while (c.peek() == '(') {
                c.expect('(');
                int v = static_cast<int>(c.integer());
                c.expect(',');
                int l = static_cast<int>(c.integer());
                c.expect(')');
                tmp.emplace_back(v, l);
                if (!c.consume(',')) break;
            }
            c.expect(')');
            e.right = std::move(tmp);
        }
    } else if (c.consume('|')) {
        has_right = true;
        pair_list(e.right, ')');
    }
    if (!c.eof()) throw std::invalid_argument("parse_eseq: trailing characters");
    if (!has_left && !has_right)
        throw std::invalid_argument("parse_eseq: empty sequence");
    e.kind = has_left && has_right ? JKind::Full : has_left ? JKind::L : JKind::R;
    return e;
}

}  // namespace arcsmt

#endif
