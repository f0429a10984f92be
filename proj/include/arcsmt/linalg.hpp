#ifndef ARCSMT_LINALG_HPP
#define ARCSMT_LINALG_HPP

// Exact integer linear algebra: fraction-free (Bareiss) rank computation,
// and a helper that turns a list of sparse polynomials into a coefficient
// matrix over their monomial support. Everything stays in Z; ranks are
// exact ranks over Q.

#include "arcsmt/diffring.hpp"

namespace arcsmt {

// Rank of an integer matrix by fraction-free Gaussian elimination
// (Bareiss); every division is exact.
inline long rank_bareiss(std::vector<std::vector<Z>> a) {
    if (a.empty()) return 0;
    long rows = static_cast<long>(a.size());
    long cols = static_cast<long>(a[0].size());
    long rank = 0;
    Z prev = 1;
    for (long c = 0; c < cols && rank < rows; ++c) {
        long piv = -1;
        for (long r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (long r = rank + 1; r < rows; ++r) {
            for (long c2 = c + 1; c2 < cols; ++c2) {
                Z t = a[rank][c] * a[r][c2] - a[r][c] * a[rank][c2];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[r][c2] = std::move(t);
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

// Sparse row: (column, coefficient) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<long, Z>>;

// Divide a row by the gcd of its coefficients to keep entries small.
inline void strip_content(SparseRow& r) {
    if (r.empty()) return;
    Z g = 0;
    for (auto& [c, v] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// pivot_lead * r - r_lead * pivot; both rows share their leading column,
// which cancels. Integer cross-multiplication, no division.
inline SparseRow cancel_rows(const SparseRow& r, const SparseRow& pivot) {
    const Z a = pivot.front().second, b = r.front().second;
    SparseRow out;
    out.reserve(r.size() + pivot.size());
    std::size_t i = 1, j = 1;
    while (i < r.size() || j < pivot.size()) {
        if (j >= pivot.size() || (i < r.size() && r[i].first < pivot[j].first)) {
            out.emplace_back(r[i].first, a * r[i].second);
            ++i;
        } else if (i >= r.size() || pivot[j].first < r[i].first) {
            out.emplace_back(pivot[j].first, -b * pivot[j].second);
            ++j;
        } else {
            Z v = a * r[i].second - b * pivot[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

// Exact rank over Q of a sparse integer matrix: incremental echelon keyed by
// leading column with content-stripped integer rows. Row operations preserve
// the row span, so the echelon size is the rank.
inline long rank_sparse(std::vector<SparseRow> rows) {
    std::map<long, SparseRow> echelon;
    long rank = 0;
    for (auto& r : rows) {
        strip_content(r);
        while (!r.empty()) {
            auto it = echelon.find(r.front().first);
            if (it == echelon.end()) break;
            r = cancel_rows(r, it->second);
            strip_content(r);
        }
        if (!r.empty()) {
            echelon.emplace(r.front().first, std::move(r));
            ++rank;
        }
    }
    return rank;
}

// Rank of the span of a list of sparse polynomials (Poly or PresPoly):
// columns are the union of their monomial supports. Uses the sparse echelon;
// rank_bareiss serves as the independent dense oracle in the tests.
template <class P>
long rank_of_span(const std::vector<P>& gens) {
    using Terms = std::decay_t<decltype(std::declval<P>().terms)>;
    using Mono = typename Terms::key_type;
    std::map<Mono, long> col;
    for (const auto& g : gens)
        for (const auto& [m, c] : g.terms) col.emplace(m, 0);
    long nc = 0;
    for (auto& [m, i] : col) i = nc++;
    if (nc == 0) return 0;
    std::vector<SparseRow> rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        SparseRow r;
        r.reserve(g.terms.size());
        for (const auto& [m, c] : g.terms) r.emplace_back(col[m], c);
        std::sort(r.begin(), r.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        rows.push_back(std::move(r));
    }
    return rank_sparse(std::move(rows));
}

// True iff f lies in the rational span of gens.
template <class P>
bool in_span(const P& f, std::vector<P> gens) {
    if (f.is_zero()) return true;
    long without = rank_of_span(gens);
    gens.push_back(f);
    return rank_of_span(gens) == without;
}

}  // namespace arcsmt

#endif
