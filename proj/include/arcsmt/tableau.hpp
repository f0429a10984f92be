#ifndef ARCSMT_TABLEAU_HPP
#define ARCSMT_TABLEAU_HPP

// Double-tableau encoding of monomials in the a/b ring, the induced word
// order, the leading-monomial extractor, and the map from tagged-sequence
// words to monomials with its partial inverse.
//
// Layout of a monomial: variables are bucketed by family and column and
// sorted by the entry order; m (resp. n) = the number of column-h a-entries
// (b-entries) determines the number of pure-a (pure-b) rows; everything else
// fills mixed rows top-aligned per column. The word reads pure-a rows, then
// pure-b rows, then mixed rows; every row and every run is read from the
// high column toward the bar (column h down to 1; mixed runs span columns
// h-1 down to 1 unless an entry actually occupies column h). Missing
// positions inside a row's span read as a star, which compares below every
// variable.
//
// Entry order: star first, then by (derivative order, row index, column
// DESCENDING, family A before B). The descending column is essential:
// moving a variable to a higher column must make the monomial smaller in
// the word order, which is what makes the leading monomial of an evaluated
// standard word equal its canonical tagged-product monomial.

#include "arcsmt/seqcomb.hpp"

namespace arcsmt {

struct WordEntry {
    bool star = true;
    DiffVar v{};

    friend bool operator==(const WordEntry&, const WordEntry&) = default;
    // Entry order: the star is MAXIMAL; variables compare by (family A
    // before B, column DESCENDING, derivative order, row). Column must
    // outrank order and row: hoisting a variable into a higher column
    // creates an extra pure row, and that monomial has to compare below the
    // canonical product for the leading-term triangularity to hold. The
    // maximal star implements the same principle inside a mixed row: a run
    // packed into the low columns (stars in the high columns, read first)
    // beats any competitor that parks an entry in a higher column. The
    // family ordering covers the block boundary: when the canonical word has
    // moved on to b-entries while a competitor still lists surplus pure-a
    // rows, the canonical word must win.
    friend std::strong_ordering operator<=>(const WordEntry& a, const WordEntry& b) {
        if (auto c = a.star <=> b.star; c != 0) return c;
        if (a.star) return std::strong_ordering::equal;
        if (auto c = a.v.fam <=> b.v.fam; c != 0) return c;
        if (auto c = b.v.col <=> a.v.col; c != 0) return c;  // high col = small
        if (auto c = a.v.order <=> b.v.order; c != 0) return c;
        return a.v.row <=> b.v.row;
    }
};

inline WordEntry star_entry() { return WordEntry{}; }
inline WordEntry var_entry(const DiffVar& v) { return WordEntry{false, v}; }

inline int cmp_entry(const WordEntry& a, const WordEntry& b) {
    auto c = a <=> b;
    return c < 0 ? -1 : c > 0 ? 1 : 0;
}

using Word = std::vector<WordEntry>;

// Lexicographic; a strict prefix precedes the longer word.
inline int cmp_word(const Word& a, const Word& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = cmp_entry(a[i], b[i])) return c;
    return detail::cmp_long(static_cast<long>(a.size()), static_cast<long>(b.size()));
}

// One tableau row: per-column entries, index 0 = column 1.
struct TRow {
    std::vector<std::optional<DiffVar>> a;
    std::vector<std::optional<DiffVar>> b;
};

struct TableauLayout {
    int h = 1;
    std::vector<TRow> pure_a, pure_b, mixed;
};

namespace detail {
// Entry-order comparison restricted to one bucket (same family and column):
// (order, row) ascending.
inline bool bucket_less(const DiffVar& x, const DiffVar& y) {
    return std::tie(x.order, x.row) < std::tie(y.order, y.row);
}
}  // namespace detail

inline TableauLayout layout(const Monomial& mono, int h) {
    std::vector<std::vector<DiffVar>> cola(h), colb(h);
    for (auto& [v, e] : mono.factors) {
        if (v.col < 1 || v.col > h)
            throw std::invalid_argument("layout: column out of range");
        auto& bucket = (v.fam == Family::A ? cola : colb)[v.col - 1];
        for (int t = 0; t < e; ++t) bucket.push_back(v);
    }
    for (auto& bk : cola) std::sort(bk.begin(), bk.end(), detail::bucket_less);
    for (auto& bk : colb) std::sort(bk.begin(), bk.end(), detail::bucket_less);

    TableauLayout lay;
    lay.h = h;
    std::size_t m = cola[h - 1].size(), n = colb[h - 1].size();

    auto take_pure = [&](std::vector<std::vector<DiffVar>>& cols, std::size_t rows,
                         bool a_side) {
        std::vector<TRow> out(rows);
        for (auto& r : out) {
            r.a.assign(h, std::nullopt);
            r.b.assign(h, std::nullopt);
        }
        for (int j = 0; j < h; ++j) {
            std::size_t cnt = std::min(rows, cols[j].size());
            for (std::size_t r = 0; r < cnt; ++r)
                (a_side ? out[r].a : out[r].b)[j] = cols[j][r];
            cols[j].erase(cols[j].begin(), cols[j].begin() + cnt);
        }
        return out;
    };
    lay.pure_a = take_pure(cola, m, true);
    lay.pure_b = take_pure(colb, n, false);

    std::size_t t = 0;
    for (int j = 0; j < h; ++j) t = std::max({t, cola[j].size(), colb[j].size()});
    lay.mixed.resize(t);
    for (auto& r : lay.mixed) {
        r.a.assign(h, std::nullopt);
        r.b.assign(h, std::nullopt);
    }
    for (int j = 0; j < h; ++j) {
        for (std::size_t r = 0; r < cola[j].size(); ++r) lay.mixed[r].a[j] = cola[j][r];
        for (std::size_t r = 0; r < colb[j].size(); ++r) lay.mixed[r].b[j] = colb[j][r];
    }
    return lay;
}

inline Word word(const Monomial& mono, int h) {
    TableauLayout lay = layout(mono, h);
    Word w;
    auto emit_span = [&](const std::vector<std::optional<DiffVar>>& cells, int span) {
        for (int j = span; j >= 1; --j)
            w.push_back(cells[j - 1] ? var_entry(*cells[j - 1]) : star_entry());
    };
    for (auto& r : lay.pure_a) emit_span(r.a, h);
    for (auto& r : lay.pure_b) emit_span(r.b, h);
    for (auto& r : lay.mixed) {
        auto span_of = [&](const std::vector<std::optional<DiffVar>>& cells) {
            int s = h > 1 ? h - 1 : 1;
            for (int j = h; j > s; --j)
                if (cells[j - 1]) s = j;
            return s;
        };
        emit_span(r.a, span_of(r.a));
        emit_span(r.b, span_of(r.b));
    }
    return w;
}

// Leading term under the word order (largest word wins).
inline std::pair<Monomial, Z> ld_plus(const Poly& f, int h) {
    if (f.is_zero()) throw std::invalid_argument("ld_plus: zero polynomial");
    const Monomial* best = nullptr;
    Word best_word;
    for (auto& [m, c] : f.terms) {
        Word w = word(m, h);
        if (!best || cmp_word(best_word, w) < 0) {
            best = &m;
            best_word = std::move(w);
        }
    }
    return {*best, f.terms.at(*best)};
}

// The canonical monomial of a tagged word: slot i of each sequence
// contributes the column-i variable with the slot's index and tag.
inline Monomial t_plus(const std::vector<ESeq>& chain, int h) {
    Monomial m;
    for (const ESeq& e : chain) {
        if (e.size() > h) throw std::invalid_argument("t_plus: sequence wider than h");
        for (std::size_t i = 0; i < e.left.size(); ++i)
            m = m.mul(monomial_of(avar(e.left[i].first, static_cast<int>(i) + 1,
                                       e.left[i].second)));
        for (std::size_t i = 0; i < e.right.size(); ++i)
            m = m.mul(monomial_of(bvar(e.right[i].first, static_cast<int>(i) + 1,
                                       e.right[i].second)));
    }
    return m;
}

// Partial inverse of t_plus: parse the layout rows back into tagged
// sequences; nullopt when any row is not of the canonical product shape.
inline std::optional<std::vector<ESeq>> invert_t_plus(const Monomial& mono, int h) {
    TableauLayout lay = layout(mono, h);
    std::vector<ESeq> chain;
    for (auto& r : lay.pure_a) {
        ESeq e;
        e.kind = JKind::L;
        for (int j = 1; j <= h; ++j) {
            if (!r.a[j - 1]) return std::nullopt;
            e.left.emplace_back(r.a[j - 1]->row, r.a[j - 1]->order);
        }
        chain.push_back(std::move(e));
    }
    for (auto& r : lay.pure_b) {
        ESeq e;
        e.kind = JKind::R;
        for (int j = 1; j <= h; ++j) {
            if (!r.b[j - 1]) return std::nullopt;
            e.right.emplace_back(r.b[j - 1]->row, r.b[j - 1]->order);
        }
        chain.push_back(std::move(e));
    }
    for (auto& r : lay.mixed) {
        auto run = [&](const std::vector<std::optional<DiffVar>>& cells)
            -> std::optional<int> {
            int s = 0;
            while (s < h && cells[s]) ++s;
            for (int j = s; j < h; ++j)
                if (cells[j]) return std::nullopt;  // gap
            return s;
        };
        auto sa = run(r.a), sb = run(r.b);
        if (!sa || !sb || *sa != *sb || *sa == 0 || *sa >= h) return std::nullopt;
        ESeq e;
        e.kind = JKind::Full;
        for (int j = 0; j < *sa; ++j) {
            e.left.emplace_back(r.a[j]->row, r.a[j]->order);
            e.right.emplace_back(r.b[j]->row, r.b[j]->order);
        }
        chain.push_back(std::move(e));
    }
    return chain;
}

// Diagnostic pretty-printer: one line per row, '*' placeholders, '|' bar.
inline std::string pretty_tableau(const Monomial& mono, int h) {
    TableauLayout lay = layout(mono, h);
    std::ostringstream os;
    auto cell = [&](const std::optional<DiffVar>& c) {
        return c ? to_string(*c) : std::string("*");
    };
    auto row = [&](const TRow& r) {
        for (int j = h; j >= 1; --j) os << cell(r.a[j - 1]) << ' ';
        os << "| ";
        for (int j = 1; j <= h; ++j) os << cell(r.b[j - 1]) << (j < h ? " " : "");
        os << '\n';
    };
    for (auto& r : lay.pure_a) row(r);
    for (auto& r : lay.pure_b) row(r);
    for (auto& r : lay.mixed) row(r);
    return os.str();
}

}  // namespace arcsmt

#endif
