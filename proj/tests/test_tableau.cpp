#include "doctest.h"

#include "arcsmt/smt.hpp"

using namespace arcsmt;

namespace {

Monomial mono(std::initializer_list<DiffVar> vars) {
    Monomial m;
    for (auto& v : vars) m = m.mul(monomial_of(v));
    return m;
}

// Every monomial in a-/b-variables with the given shape bounds; used for
// exhaustive word-injectivity scans.
void for_each_monomial(int p, int q, int h, int max_deg, int max_wt, auto&& fn) {
    std::vector<DiffVar> universe;
    for (int k = 0; k <= max_wt; ++k)
        for (int l = 1; l <= h; ++l) {
            for (int i = 1; i <= p; ++i) universe.push_back(avar(i, l, k));
            for (int j = 1; j <= q; ++j) universe.push_back(bvar(j, l, k));
        }
    Monomial cur;
    auto rec = [&](auto&& self, std::size_t from, int deg, int wt) -> void {
        fn(cur);
        if (deg == 0) return;
        for (std::size_t i = from; i < universe.size(); ++i) {
            if (universe[i].order > wt) continue;
            Monomial save = cur;
            cur = cur.mul(monomial_of(universe[i]));
            self(self, i, deg - 1, wt - universe[i].order);
            cur = save;
        }
    };
    rec(rec, 0, max_deg, max_wt);
}

}  // namespace

TEST_CASE("layout shapes") {
    // Mixed row with a star in column 2 on each side.
    TableauLayout lay = layout(mono({avar(1, 1), bvar(1, 1)}), 2);
    CHECK(lay.pure_a.empty());
    CHECK(lay.pure_b.empty());
    REQUIRE(lay.mixed.size() == 1);
    CHECK(lay.mixed[0].a[0] == avar(1, 1));
    CHECK(!lay.mixed[0].a[1]);
    CHECK(lay.mixed[0].b[0] == bvar(1, 1));
    CHECK(!lay.mixed[0].b[1]);

    // Column-2 entry forces a pure row.
    TableauLayout lay2 = layout(mono({avar(1, 1), avar(2, 2)}), 2);
    REQUIRE(lay2.pure_a.size() == 1);
    CHECK(lay2.mixed.empty());
    CHECK(lay2.pure_a[0].a[0] == avar(1, 1));
    CHECK(lay2.pure_a[0].a[1] == avar(2, 2));

    // The layout partitions the factor multiset.
    Monomial big = mono({avar(1, 1), avar(2, 2), avar(1, 2), bvar(2, 1), bvar(1, 1)});
    TableauLayout lay3 = layout(big, 2);
    Monomial prod;
    auto collect = [&](const TRow& r) {
        for (auto& c : r.a)
            if (c) prod = prod.mul(monomial_of(*c));
        for (auto& c : r.b)
            if (c) prod = prod.mul(monomial_of(*c));
    };
    for (auto& r : lay3.pure_a) collect(r);
    for (auto& r : lay3.pure_b) collect(r);
    for (auto& r : lay3.mixed) collect(r);
    CHECK(prod == big);
}

TEST_CASE("word basics") {
    CHECK(word(Monomial{}, 2).empty());
    Word w = word(mono({avar(1, 1), avar(2, 2)}), 2);
    REQUIRE(w.size() == 2);
    CHECK(w[0] == var_entry(avar(2, 2)));
    CHECK(w[1] == var_entry(avar(1, 1)));
    // Mixed rows span h-1 columns per side when nothing sits in column h.
    Word wm = word(mono({avar(1, 1), bvar(1, 1)}), 2);
    REQUIRE(wm.size() == 2);
    CHECK(wm[0] == var_entry(avar(1, 1)));
    CHECK(wm[1] == var_entry(bvar(1, 1)));
    // Pure rows keep their full span, with stars.
    Word wp = word(mono({avar(1, 2)}), 2);
    REQUIRE(wp.size() == 2);
    CHECK(wp[0] == var_entry(avar(1, 2)));
    CHECK(wp[1].star);
}

TEST_CASE("word injectivity scan") {
    std::map<Word, Monomial> seen;
    int count = 0;
    for_each_monomial(2, 2, 2, 3, 2, [&](const Monomial& m) {
        ++count;
        Word w = word(m, 2);
        auto [it, fresh] = seen.emplace(w, m);
        if (!fresh) CHECK(it->second == m);
    });
    CHECK(count == seen.size());
}

TEST_CASE("leading monomial of evaluated words") {
    Ambient amb{2, 2, 2};
    Poly f = q_eval_j(jseq_l({1, 2}, 0), amb) * q_eval_j(jseq_l({1, 2}, 1), amb);
    auto [m, c] = ld_plus(f, 2);
    CHECK(c == 1);
    CHECK(m == mono({avar(1, 1), avar(2, 2), avar(1, 1), avar(2, 2, 1)}));

    // Right determinant: leading term is the diagonal.
    auto [mz, cz] = ld_plus(det_b({1, 2}), 2);
    CHECK(cz == 1);
    CHECK(mz == mono({bvar(1, 1), bvar(2, 2)}));

    // Bilinear: the column-1 product leads the column-2 product.
    auto [mx, cx] = ld_plus(x_entry(1, 1, 2), 2);
    CHECK(cx == 1);
    CHECK(mx == mono({avar(1, 1), bvar(1, 1)}));

    CHECK(ld_plus(Z(-3) * f, 2).second == -3);
    CHECK_THROWS_AS(ld_plus(Poly::zero(), 2), std::invalid_argument);
}

TEST_CASE("t_plus and its inverse") {
    ESeq e1 = ESeq{JKind::L, {{1, 0}, {2, 1}}, {}};
    CHECK(t_plus({e1}, 2) == mono({avar(1, 1), avar(2, 2, 1)}));
    ESeq e2 = ESeq{JKind::Full, {{1, 0}}, {{1, 0}}};
    CHECK(t_plus({e2}, 2) == mono({avar(1, 1), bvar(1, 1)}));
    CHECK(t_plus({e1, e2}, 2) == t_plus({e1}, 2).mul(t_plus({e2}, 2)));

    auto back = invert_t_plus(t_plus({e1, e2}, 2), 2);
    REQUIRE(back.has_value());
    REQUIRE(back->size() == 2);
    CHECK((*back)[0] == e1);
    CHECK((*back)[1] == e2);

    // A lone a-variable at h = 2 is not a canonical product.
    CHECK(!invert_t_plus(mono({avar(1, 1)}), 2));
    // Unbalanced mixed runs are rejected.
    CHECK(!invert_t_plus(mono({avar(1, 1), avar(2, 1), bvar(1, 1)}), 2));
}

TEST_CASE("t_plus round trip over the standard enumeration") {
    Ambient amb{2, 2, 2};
    for (auto& w : enumerate_standard(amb, 1, 2)) {
        auto chain = pi_inverse(w, amb);
        auto back = invert_t_plus(t_plus(chain, amb.h), amb.h);
        REQUIRE(back.has_value());
        CHECK(*back == chain);
    }
}

// The mixed-row star must compare above every variable: a size-s mixed run
// packed into columns 1..s (stars read first) has to beat the same entries
// parked in higher columns. Only visible for h >= 3, where a mixed row spans
// more than one column.
TEST_CASE("triangularity of evaluated standard words at h = 3") {
    Ambient amb{3, 2, 3};
    auto words = enumerate_standard(amb, 1, 2);
    REQUIRE(words.size() > 0);
    for (auto& w : words) {
        Poly f = q_eval_word(w, amb);
        auto [m, c] = ld_plus(f, amb.h);
        CHECK((c == 1 || c == -1));
        CHECK(m == t_plus(pi_inverse(w, amb), amb.h));
    }

    // Minimal instance: a pure 3x3 determinant times a size-1 mixed minor.
    // The lead puts the mixed entries in column 1, not column 2.
    JWord w{parse_jseq("D^0(3,2,1|"), parse_jseq("D^0(2|1)")};
    REQUIRE(is_standard(w, amb).ok);
    auto [m, c] = ld_plus(q_eval_word(w, amb), amb.h);
    CHECK(c == 1);
    CHECK(m == mono({avar(1, 1), avar(2, 2), avar(3, 3), avar(2, 1), bvar(1, 1)}));
}
