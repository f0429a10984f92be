// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
// Every check is exact (integer arithmetic, zero tolerance).

#include "arcsmt/action.hpp"
#include "arcsmt/relations.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <set>

using namespace arcsmt;

namespace {

int g_failures = 0;

void report(int number, const char* title, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title
              << '\n';
    if (!ok) {
        ++g_failures;
        if (!detail.empty()) std::cerr << "  detail: " << detail << '\n';
    }
}

void for_each_increasing(int n, int k, auto&& fn) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == k) {
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

// --- criterion 1: closed-form derivative of a minor ----------------------

bool criterion1() {
    for (int h = 1; h <= 3; ++h)
        for (int r = 1; r <= h; ++r) {
            bool ok = true;
            for_each_increasing(4, r, [&](const std::vector<int>& us) {
                for_each_increasing(4, r, [&](const std::vector<int>& vs) {
                    for (long n = 0; n <= 3; ++n)
                        if (dbar_det_expansion(us, vs, n, h) !=
                            dbar(det_x_minor(us, vs, h), n))
                            ok = false;
                });
            });
            if (!ok) return false;
        }
    return true;
}

// --- criterion 2: every relation instance maps to zero -------------------

bool criterion2(std::string& detail) {
    // Relation images depend on the ambient only through h; enumerating at
    // p = q = 5 covers the instance sets of every smaller p, q.
    for (int h = 1; h <= 3; ++h) {
        Ambient amb{5, 5, h};
        std::vector<RelationInstance> insts = enumerate_relations(amb, 2);
        for (const RelationInstance& inst : insts)
            if (!verify_kernel(inst, amb)) {
                detail = std::string("family ") + family_name(inst.family) +
                         " at h=" + std::to_string(h);
                return false;
            }
        std::cerr << "  criterion 2: h=" << h << " verified " << insts.size()
                  << " instances\n";
    }
    return true;
}

// --- criterion 3: triangularity, distinct leads, basis ranks -------------

struct TriKey {
    long d1 = 0, d2 = 0, w = 0;
    friend auto operator<=>(const TriKey&, const TriKey&) = default;
};

TriKey key_of_word(const JWord& w, int h) {
    TriKey k;
    for (const JSeq& j : w) {
        int s = j.size();
        switch (j.kind) {
            case JKind::L: k.d1 += h; break;
            case JKind::R: k.d2 += h; break;
            default:
                k.d1 += s;
                k.d2 += s;
                break;
        }
        k.w += j.weight;
    }
    return k;
}

bool criterion3(std::string& detail) {
    const std::vector<Ambient> shapes = {{2, 2, 2}, {3, 3, 2}, {3, 2, 3}};
    for (const Ambient& amb : shapes) {
        std::vector<JWord> standard = enumerate_standard(amb, 2, 3);
        std::map<Monomial, int> lead_seen;
        std::map<TriKey, long> std_count;
        for (const JWord& w : standard) {
            Poly g = q_eval_word(w, amb);
            auto [m, c] = ld_plus(g, amb.h);
            if (!(m == t_plus(pi_inverse(w, amb), amb.h)) || !(c == 1 || c == -1)) {
                detail = "triangularity failed";
                return false;
            }
            if (++lead_seen[m] > 1) {
                detail = "leading-monomial collision";
                return false;
            }
            ++std_count[key_of_word(w, amb.h)];
        }
        // All words (standard or not) within the same bounds, grouped by
        // tri-degree; per group the rank of the image span must equal the
        // number of standard words.
        std::vector<JSeq> alpha = alphabet(amb, 2);
        std::vector<Poly> letter_poly;
        for (const JSeq& j : alpha) letter_poly.push_back(q_eval_j(j, amb));
        std::map<TriKey, std::vector<Poly>> groups;
        JWord cur;
        Poly prod = Poly::constant(1);
        auto rec = [&](auto&& self, std::size_t from, long wt_left,
                       long deg_left) -> void {
            groups[key_of_word(cur, amb.h)].push_back(prod);
            if (deg_left == 0) return;
            for (std::size_t i = from; i < alpha.size(); ++i) {
                if (alpha[i].weight > wt_left) continue;
                Poly save = prod;
                prod = prod * letter_poly[i];
                cur.push_back(alpha[i]);
                self(self, i, wt_left - alpha[i].weight, deg_left - 1);
                cur.pop_back();
                prod = std::move(save);
            }
        };
        rec(rec, 0, 2, 3);
        for (auto& [k, polys] : groups) {
            long rank = rank_of_span(polys);
            long want = std_count.count(k) ? std_count[k] : 0;
            if (rank != want) {
                detail = "rank " + std::to_string(rank) + " != standard count " +
                         std::to_string(want) + " at degree (" + std::to_string(k.d1) +
                         "," + std::to_string(k.d2) + "," + std::to_string(k.w) +
                         "), h=" + std::to_string(amb.h);
                return false;
            }
        }
        std::cerr << "  criterion 3: (" << amb.p << "," << amb.q << "," << amb.h
                  << "): " << standard.size() << " standard words, "
                  << groups.size() << " graded groups\n";
    }
    return true;
}

// --- criterion 4: straightening soundness on random words ----------------

bool criterion4(std::string& detail) {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        int h = 1 + static_cast<int>(rng() % 3);
        int p = h + static_cast<int>(rng() % 2);
        int q = h + static_cast<int>(rng() % 2);
        Ambient amb{p, q, h};
        std::vector<JSeq> alpha = alphabet(amb, 2);
        int deg = static_cast<int>(rng() % 4);
        JWord w;
        long wt = 0;
        for (int t = 0; t < deg; ++t) {
            for (int attempt = 0; attempt < 50; ++attempt) {
                const JSeq& j = alpha[rng() % alpha.size()];
                if (wt + j.weight <= 2) {
                    w.push_back(j);
                    wt += j.weight;
                    break;
                }
            }
        }
        std::sort(w.begin(), w.end(),
                  [](const JSeq& a, const JSeq& b) { return cmp_total_J(a, b) < 0; });
        PeelResult res = straighten(w, amb);
        if (!res.ok) {
            detail = "straighten failed: " + res.error;
            return false;
        }
        Poly recomb;
        for (const auto& [s, c] : res.coords) {
            if (!is_standard(s, amb).ok) {
                detail = "nonstandard word in output";
                return false;
            }
            if (cmp_jword(s, w) > 0) {
                detail = "output word exceeds the input word";
                return false;
            }
            recomb += c * q_eval_word(s, amb);
        }
        if (recomb != q_eval_word(w, amb)) {
            detail = "round trip mismatch at trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

// --- criterion 5: weight-0 counts against classical products -------------

bool criterion5(std::string& detail) {
    Ambient amb{3, 3, 2};
    std::vector<JWord> standard = enumerate_standard(amb, 0, 3);
    std::map<std::pair<long, long>, long> std_count;
    for (const JWord& w : standard) {
        TriKey k = key_of_word(w, amb.h);
        ++std_count[{k.d1, k.d2}];
    }
    // Classical generators at weight 0: bilinear entries and both h x h
    // determinant families.
    std::vector<std::pair<std::pair<long, long>, Poly>> gens;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            gens.push_back({{1, 1}, x_entry(i, j, 2)});
    for_each_increasing(3, 2, [&](const std::vector<int>& s) {
        gens.push_back({{2, 0}, det_a(s)});
        gens.push_back({{0, 2}, det_b(s)});
    });
    // Every bidegree reachable by a <=3-factor word; each generator
    // contributes total degree 2, so products need (d1+d2)/2 <= 3 factors.
    std::set<std::pair<long, long>> keys;
    for (const auto& [k, c] : std_count) keys.insert(k);
    for (long d1 = 0; d1 <= 6; ++d1)
        for (long d2 = 0; d2 <= 6; ++d2)
            if (d1 + d2 <= 6 && (d1 + d2) % 2 == 0) keys.insert({d1, d2});
    for (const auto& [d1, d2] : keys) {
        std::vector<Poly> rows;
        Poly prod = Poly::constant(1);
        auto rec = [&](auto&& self, std::size_t from, long r1, long r2) -> void {
            if (r1 == 0 && r2 == 0) {
                rows.push_back(prod);
                return;
            }
            for (std::size_t i = from; i < gens.size(); ++i) {
                if (gens[i].first.first > r1 || gens[i].first.second > r2) continue;
                Poly save = prod;
                prod = prod * gens[i].second;
                self(self, i, r1 - gens[i].first.first, r2 - gens[i].first.second);
                prod = std::move(save);
            }
        };
        rec(rec, 0, d1, d2);
        long rank = rows.empty() ? 0 : rank_of_span(rows);
        std::pair<long, long> kk{d1, d2};
        long want = std_count.count(kk) ? std_count[kk] : 0;
        if (rank != want) {
            detail = "bidegree (" + std::to_string(d1) + "," + std::to_string(d2) +
                     "): rank " + std::to_string(rank) + " != standard count " +
                     std::to_string(want);
            return false;
        }
    }
    return true;
}

// --- criterion 6: the nilradical witness ---------------------------------

bool criterion6(std::string& detail) {
    int h = 3, p = 6, q = 1;
    Ambient amb{p, q, h};
    PresPoly f = nilradical_witness(h, p);
    if (!q_eval_pres(f, amb).is_zero()) {
        detail = "witness not annihilated by evaluation";
        return false;
    }
    Degree deg{2L * h, 0, 1};
    std::vector<PresPoly> classical = yy_shuffle_family(h, p, 0, 1);
    if (membership(f, classical, deg, p, q, h)) {
        detail = "witness unexpectedly inside the classical-derived span";
        return false;
    }
    std::vector<PresPoly> full = classical;
    for (PresPoly& g : yy_shuffle_family(h, p, 1, 1)) full.push_back(std::move(g));
    if (!membership(f, full, deg, p, q, h)) {
        detail = "witness outside the span even with the depth-1 shuffles";
        return false;
    }
    return true;
}

// --- criterion 7: non-degenerate regime ----------------------------------

bool criterion7(std::string& detail) {
    int h = 2;
    Degree deg{2L * h, 0, 1};
    for (int p = 2; p <= 4; ++p) {
        std::vector<PresPoly> classical;
        for (int n = 0; n <= 1; ++n)
            for (PresPoly& g : yy_shuffle_family(h, p, 0, n))
                classical.push_back(std::move(g));
        std::vector<PresPoly> extended = classical;
        for (PresPoly& g : yy_shuffle_family(h, p, 1, 1))
            extended.push_back(std::move(g));
        long r1 = component_span_rank(classical, deg, p, p, h).rank;
        long r2 = component_span_rank(extended, deg, p, p, h).rank;
        if (r2 != r1) {
            detail = "p=q=" + std::to_string(p) + ": rank grew from " +
                     std::to_string(r1) + " to " + std::to_string(r2);
            return false;
        }
    }
    return true;
}

// --- criterion 8: infinitesimal invariance -------------------------------

bool criterion8(std::string& detail) {
    for (int h = 1; h <= 3; ++h) {
        InvarianceReport rep = check_invariance(3, 3, h, 2, 2);
        if (!rep.ok) {
            detail = "violation at h=" + std::to_string(h) + ": " +
                     (rep.violations.empty() ? "?" : rep.violations.front());
            return false;
        }
    }
    // Negative control: the non-traceless E_11 scales the left determinant.
    LieElem e11 = lie_elem(2, elem_matrix(2, 1, 1), 0);
    if (infinitesimal_action(e11, det_a({1, 2})).is_zero()) {
        detail = "E_11 control unexpectedly annihilated the determinant";
        return false;
    }
    return true;
}

// --- criterion 9: combinatorial closed forms vs brute force --------------

bool bf_is_greater(const JSeq& jp, const ESeq& e, const std::vector<ESeq>& cls) {
    for (const ESeq& cand : cls)
        if (le_partial_E(e, cand)) return true;
    return false;
}

std::optional<ESeq> bf_largest(const ESeq& e, const std::vector<ESeq>& cls) {
    std::optional<ESeq> best;
    for (const ESeq& cand : cls)
        if (le_partial_E(e, cand) && (!best || cmp_total_E(*best, cand) < 0))
            best = cand;
    return best;
}

// Every ESeq of the kind with `sz` slots per side over indices 1..4
// (distinct per side, any order) and total weight <= wtmax.
std::vector<ESeq> all_eseqs(JKind kind, int sz, long wtmax) {
    std::vector<std::vector<int>> idx_tuples;
    {
        std::vector<int> cur;
        std::vector<bool> used(5, false);
        auto rec = [&](auto&& self) -> void {
            if (static_cast<int>(cur.size()) == sz) {
                idx_tuples.push_back(cur);
                return;
            }
            for (int x = 1; x <= 4; ++x)
                if (!used[x]) {
                    used[x] = true;
                    cur.push_back(x);
                    self(self);
                    cur.pop_back();
                    used[x] = false;
                }
        };
        rec(rec);
    }
    auto tag_tuples = [&](int slots, long cap) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        auto rec = [&](auto&& self, long left) -> void {
            if (static_cast<int>(cur.size()) == slots) {
                out.push_back(cur);
                return;
            }
            for (long t = 0; t <= left; ++t) {
                cur.push_back(static_cast<int>(t));
                self(self, left - t);
                cur.pop_back();
            }
        };
        rec(rec, cap);
        return out;
    };
    std::vector<ESeq> out;
    if (kind != JKind::Full) {
        for (auto& idx : idx_tuples)
            for (auto& tg : tag_tuples(sz, wtmax)) {
                ESeq e;
                e.kind = kind;
                auto& side = (kind == JKind::L) ? e.left : e.right;
                for (int i = 0; i < sz; ++i) side.emplace_back(idx[i], tg[i]);
                out.push_back(std::move(e));
            }
    } else {
        for (auto& li : idx_tuples)
            for (auto& ri : idx_tuples)
                for (auto& tg : tag_tuples(2 * sz, wtmax)) {
                    ESeq e;
                    e.kind = JKind::Full;
                    for (int i = 0; i < sz; ++i) e.left.emplace_back(li[i], tg[i]);
                    for (int i = 0; i < sz; ++i)
                        e.right.emplace_back(ri[i], tg[sz + i]);
                    out.push_back(std::move(e));
                }
    }
    return out;
}

std::vector<JSeq> all_jseqs(JKind kind, int sz, long wtmax) {
    std::vector<JSeq> out;
    for (long wt = 0; wt <= wtmax; ++wt) {
        if (kind == JKind::L) {
            for_each_increasing(4, sz, [&](const std::vector<int>& u) {
                out.push_back(JSeq{JKind::L, wt, u, {}});
            });
        } else if (kind == JKind::R) {
            for_each_increasing(4, sz, [&](const std::vector<int>& v) {
                out.push_back(JSeq{JKind::R, wt, {}, v});
            });
        } else {
            for_each_increasing(4, sz, [&](const std::vector<int>& u) {
                for_each_increasing(4, sz, [&](const std::vector<int>& v) {
                    out.push_back(JSeq{JKind::Full, wt, u, v});
                });
            });
        }
    }
    return out;
}

bool criterion9(std::string& detail) {
    long checked = 0;
    for (JKind ekind : {JKind::L, JKind::R, JKind::Full}) {
        for (int esz = 1; esz <= 3; ++esz) {
            std::vector<ESeq> epool = all_eseqs(ekind, esz, 3);
            // J' kinds compatible with this E kind, sizes up to sz(E).
            std::vector<JKind> jkinds;
            if (ekind == JKind::L) jkinds = {JKind::L, JKind::Full};
            else if (ekind == JKind::R) jkinds = {JKind::R, JKind::Full};
            else jkinds = {JKind::Full};
            for (JKind jkind : jkinds)
                for (int jsz = 1; jsz <= esz; ++jsz) {
                    // One-sided dominance is only defined at equal size (the
                    // chain always compares equal-length one-sided symbols);
                    // only a full symbol may sit below a longer sequence.
                    if (jkind != JKind::Full && jsz != esz) continue;
                    for (const JSeq& jp : all_jseqs(jkind, jsz, 3)) {
                        std::vector<ESeq> cls = eclass(jp);
                        for (const ESeq& e : epool) {
                            ++checked;
                            std::optional<ESeq> bf = bf_largest(e, cls);
                            if (is_greater(jp, e) != bf.has_value()) {
                                detail = "is_greater mismatch";
                                return false;
                            }
                            if (largest_e_above(e, jp) != bf) {
                                detail = "largest_e_above mismatch";
                                return false;
                            }
                            if (!bf) continue;
                            // min_w against the brute-force largest
                            // representative, restricted slotwise.
                            for (int s = 1; s < jsz; ++s) {
                                Side side = jkind == JKind::L   ? Side::L
                                            : jkind == JKind::R ? Side::R
                                                                : Side::Both;
                                auto mw = min_w(e, jp, s, side);
                                if (!mw || !(*mw == norm_of_E(restrict_e(*bf, s)))) {
                                    detail = "min_w mismatch";
                                    return false;
                                }
                            }
                        }
                    }
                }
        }
    }
    // lnum/rnum: the offset number equals the least extra weight that makes
    // the one-sided symbol dominate, by exhaustive eclass search.
    bool lr_ok = true;
    for (int sz = 1; sz <= 3 && lr_ok; ++sz) {
        for (const ESeq& e : all_eseqs(JKind::L, sz, 3)) {
            const int jsz = sz;  // one-sided dominance needs equal size
            for_each_increasing(4, jsz, [&](const std::vector<int>& u) {
                    long base = 0;
                    for (int i = 0; i < jsz; ++i) base += e.left[i].second;
                    int closed = lnum(e, JSeq{JKind::L, 0, u, {}});
                    int bf = -1;
                    for (int d = 0; d <= jsz; ++d) {
                        JSeq jp{JKind::L, base + d, u, {}};
                        if (bf_is_greater(jp, e, eclass(jp))) {
                            bf = d;
                            break;
                        }
                    }
                    if (closed != bf) lr_ok = false;
                });
        }
        for (const ESeq& e : all_eseqs(JKind::R, sz, 3)) {
            const int jsz = sz;  // one-sided dominance needs equal size
            for_each_increasing(4, jsz, [&](const std::vector<int>& v) {
                    long base = 0;
                    for (int i = 0; i < jsz; ++i) base += e.right[i].second;
                    int closed = rnum(e, JSeq{JKind::R, 0, {}, v});
                    int bf = -1;
                    for (int d = 0; d <= jsz; ++d) {
                        JSeq jp{JKind::R, base + d, {}, v};
                        if (bf_is_greater(jp, e, eclass(jp))) {
                            bf = d;
                            break;
                        }
                    }
                    if (closed != bf) lr_ok = false;
                });
        }
    }
    if (!lr_ok) {
        detail = "lnum/rnum mismatch";
        return false;
    }
    // Dominance-to-norm monotonicity on seeded random pairs: build a random
    // dominating partner slotwise and compare the norms.
    std::mt19937 rng(987654321);
    auto bump_side = [&](std::vector<EPair>& side) {
        for (auto& [u, k] : side) {
            if (rng() % 2) {
                k += static_cast<int>(rng() % 3);  // larger tag always dominates
            } else {
                u += static_cast<int>(rng() % (5 - u));  // same tag, larger index
            }
        }
    };
    for (int t = 0; t < 10000; ++t) {
        JKind kind = static_cast<JKind>(rng() % 3);
        int sz = 1 + static_cast<int>(rng() % 3);
        ESeq e;
        e.kind = kind;
        auto fill = [&](std::vector<EPair>& side) {
            std::vector<int> idx = {1, 2, 3, 4};
            std::shuffle(idx.begin(), idx.end(), rng);
            for (int i = 0; i < sz; ++i)
                side.emplace_back(idx[i], static_cast<int>(rng() % 4));
        };
        if (kind != JKind::R) fill(e.left);
        if (kind != JKind::L) fill(e.right);
        ESeq e2 = e;
        if (kind != JKind::R) bump_side(e2.left);
        if (kind != JKind::L) bump_side(e2.right);
        if (!le_partial_E(e, e2)) {
            detail = "constructed pair is not dominating (construction bug)";
            return false;
        }
        int c = cmp_total_J(norm_of_E(e), norm_of_E(e2));
        if (e == e2 ? c != 0 : c >= 0) {
            detail = "dominance did not force a strictly smaller norm";
            return false;
        }
    }
    std::cerr << "  criterion 9: " << checked << " (E, J') instances checked\n";
    return true;
}

}  // namespace

int main() {
    auto timed = [&](int number, const char* title, auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = fn(detail);
        auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        report(number, title, ok, detail);
        std::cerr << "  criterion " << number << ": " << dt << " ms\n";
    };
    timed(1, "derived-minor closed form equals dbar of the minor",
          [](std::string&) { return criterion1(); });
    timed(2, "all relation families evaluate to zero (h<=3, p,q<=5, n<=2)",
          [](std::string& d) { return criterion2(d); });
    timed(3, "triangularity, distinct leads, and graded basis ranks",
          [](std::string& d) { return criterion3(d); });
    timed(4, "straightening soundness on 200 seeded random words",
          [](std::string& d) { return criterion4(d); });
    timed(5, "weight-0 standard counts match classical product ranks",
          [](std::string& d) { return criterion5(d); });
    timed(6, "nilradical witness: killed, outside classical span, inside full span",
          [](std::string& d) { return criterion6(d); });
    timed(7, "depth-1 shuffles add no rank in the non-degenerate regime",
          [](std::string& d) { return criterion7(d); });
    timed(8, "trace-zero derivations annihilate all generators; E11 control",
          [](std::string& d) { return criterion8(d); });
    timed(9, "combinatorial closed forms agree with eclass brute force",
          [](std::string& d) { return criterion9(d); });
    return g_failures == 0 ? 0 : 1;
}
