#pragma once

// n-cores, the bijections with affine Grassmannian elements and with
// bounded partitions, residue actions, and strong (Bruhat) covers.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "affine_weyl.hpp"
#include "partition.hpp"

namespace affschub {

// Hook lengths indexed [row-1][col-1].
inline std::vector<std::vector<int>> hooks(const Partition& p) {
    Partition conj = conjugate(p);
    std::vector<std::vector<int>> h(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        h[i].resize(p[i]);
        for (int j = 1; j <= p[i]; ++j) h[i][j - 1] = (p[i] - j) + (conj[j - 1] - static_cast<int>(i) - 1) + 1;
    }
    return h;
}

inline bool is_ncore(const Partition& p, int n) {
    if (!is_partition(p)) return false;
    for (const auto& row : hooks(p))
        for (int h : row)
            if (h == n) return false;
    return true;
}

struct NCore {
    Partition shape;
    int n = 2;

    NCore() = default;
    NCore(Partition s, int modulus) : shape(std::move(s)), n(modulus) {
        if (n < 2) throw error(error::code::out_of_range, "modulus must be at least 2");
        require_partition(shape);
        if (!is_ncore(shape, n)) throw error(error::code::domain, to_string(shape) + " is not a " + std::to_string(n) + "-core");
    }

    bool operator==(const NCore&) const = default;
    bool operator<(const NCore& o) const {
        if (n != o.n) return n < o.n;
        return revlex_less(shape, o.shape);
    }
};

inline std::vector<Cell> addable_corners(const Partition& p, int i, int n) {
    std::vector<Cell> out;
    int rows = static_cast<int>(p.size());
    for (int r = 1; r <= rows + 1; ++r) {
        int len = part(p, r);
        if (r > 1 && part(p, r - 1) <= len) continue;
        Cell c{r, len + 1};
        if (residue(c, n) == mod(i, n)) out.push_back(c);
    }
    return out;
}

inline std::vector<Cell> removable_corners(const Partition& p, int i, int n) {
    std::vector<Cell> out;
    for (int r = 1; r <= static_cast<int>(p.size()); ++r) {
        if (part(p, r + 1) >= p[r - 1]) continue;
        Cell c{r, p[r - 1]};
        if (residue(c, n) == mod(i, n)) out.push_back(c);
    }
    return out;
}

inline std::vector<Cell> addable_corners(const NCore& c, int i) { return addable_corners(c.shape, i, c.n); }

inline Partition add_cells(Partition p, const std::vector<Cell>& cs) {
    for (const auto& c : cs) {
        if (static_cast<int>(p.size()) < c.row) p.resize(c.row, 0);
        p[c.row - 1] = std::max(p[c.row - 1], c.col);
    }
    return p;
}

inline Partition remove_cells(Partition p, const std::vector<Cell>& cs) {
    for (const auto& c : cs) p[c.row - 1] = std::min(p[c.row - 1], c.col - 1);
    return normalized(std::move(p));
}

inline Partition act_s(const Partition& p, int i, int n) {
    auto add = addable_corners(p, i, n);
    if (add.empty()) throw error(error::code::no_action, "no addable corner of residue " + std::to_string(i));
    return add_cells(p, add);
}

inline NCore act_s(const NCore& c, int i) {
    NCore out;
    out.n = c.n;
    out.shape = act_s(c.shape, i, c.n);
    return out;
}

// s_{i_1} ... s_{i_l} applied to the empty core, last letter first.
inline NCore a_map(const Word& word, int n) {
    require_word(word, n);
    Partition p;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        auto add = addable_corners(p, *it, n);
        if (add.empty()) throw error(error::code::non_reduced_word, "word is not reduced for an affine Grassmannian element");
        p = add_cells(p, add);
    }
    NCore c;
    c.shape = std::move(p);
    c.n = n;
    return c;
}

// Peels the largest-residue removable corner set; the first peel is the leftmost letter.
inline Word core_to_word(const NCore& c) {
    Word word;
    Partition p = c.shape;
    while (!p.empty()) {
        bool done = false;
        for (int i = c.n - 1; i >= 0 && !done; --i) {
            auto rem = removable_corners(p, i, c.n);
            if (rem.empty()) continue;
            p = remove_cells(p, rem);
            word.push_back(i);
            done = true;
        }
    }
    return word;
}

inline int degree(const NCore& c) {
    int d = 0;
    for (const auto& row : hooks(c.shape))
        for (int h : row)
            if (h < c.n) ++d;
    return d;
}

inline AffinePermutation window_of(const NCore& c) { return from_word(core_to_word(c), c.n); }

inline NCore core_of(const AffinePermutation& w) {
    if (!grassmannian_test(w)) throw error(error::code::domain, "element is not affine Grassmannian");
    return a_map(reduced_word(w), w.n());
}

inline Partition c_inverse(const NCore& c) {
    Partition out;
    for (const auto& row : hooks(c.shape)) {
        int k = 0;
        for (int h : row)
            if (h < c.n) ++k;
        out.push_back(k);
    }
    return normalized(std::move(out));
}

inline void require_bounded(const Partition& p, int n) {
    require_partition(p);
    if (!p.empty() && p[0] >= n) throw error(error::code::out_of_range, "parts must be smaller than n");
}

// Inverse of c_inverse: rows from the top down, each the shortest length giving
// the right count of small hooks and no hook equal to n.
inline NCore c_map(const Partition& lam, int n) {
    require_bounded(lam, n);
    int rows = static_cast<int>(lam.size());
    Partition g(rows, 0);
    for (int i = rows - 1; i >= 0; --i) {
        int above = i + 1 < rows ? g[i + 1] : 0;
        int found = -1;
        for (int len = std::max(lam[i], above); len <= above + n - 1 && found < 0; ++len) {
            int small = 0;
            bool bad = false;
            for (int j = 1; j <= len; ++j) {
                int leg = 0;
                for (int k = i + 1; k < rows && g[k] >= j; ++k) ++leg;
                int h = len - j + leg + 1;
                if (h == n) bad = true;
                if (h < n) ++small;
            }
            if (!bad && small == lam[i]) found = len;
        }
        if (found < 0) throw error(error::code::domain, "no core row matches bounded partition " + to_string(lam));
        g[i] = found;
    }
    NCore c;
    c.shape = std::move(g);
    c.n = n;
    return c;
}

// 𝔠(𝔠⁻¹(core) ∪ (r^(n-r))).
inline NCore translate_core(const NCore& c, int r) {
    if (r < 1 || r >= c.n) throw error(error::code::out_of_range, "r must satisfy 1 <= r < n");
    return c_map(union_of(c_inverse(c), rectangle(r, c.n - r)), c.n);
}

// R(r, lam) for a bounded partition lam.
inline NCore rect_translation(const Partition& lam, int r, int n) {
    if (r < 1 || r >= n) throw error(error::code::out_of_range, "r must satisfy 1 <= r < n");
    require_bounded(lam, n);
    return c_map(union_of(lam, rectangle(r, n - r)), n);
}

// All n-cores of degree d, reverse-lex by shape.
inline std::vector<NCore> cores_of_degree(int n, int d) {
    std::vector<NCore> out;
    for (const auto& lam : partitions(d, n - 1)) out.push_back(c_map(lam, n));
    std::sort(out.begin(), out.end());
    return out;
}

// Rookwise components of a skew shape, each split into consecutive
// runs of `len` cells ordered by content (tail first).
inline std::vector<std::vector<Cell>> split_ribbons(const std::vector<Cell>& skew, int len) {
    std::set<Cell> rest(skew.begin(), skew.end());
    std::vector<std::vector<Cell>> out;
    while (!rest.empty()) {
        std::vector<Cell> comp{*rest.begin()};
        rest.erase(rest.begin());
        for (std::size_t k = 0; k < comp.size(); ++k) {
            Cell c = comp[k];
            for (Cell nb : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col}, Cell{c.row, c.col + 1}, Cell{c.row, c.col - 1}}) {
                auto it = rest.find(nb);
                if (it != rest.end()) {
                    comp.push_back(nb);
                    rest.erase(it);
                }
            }
        }
        std::sort(comp.begin(), comp.end(), [](Cell a, Cell b) { return content(a) < content(b); });
        for (std::size_t k = 1; k < comp.size(); ++k)
            if (content(comp[k]) == content(comp[k - 1])) throw error(error::code::domain, "skew component is not a ribbon");
        if (comp.size() % len != 0) throw error(error::code::domain, "skew component is not a union of equal ribbons");
        for (std::size_t k = 0; k < comp.size(); k += len) out.emplace_back(comp.begin() + k, comp.begin() + k + len);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return content(a.back()) < content(b.back()); });
    return out;
}

inline Cell ribbon_head(const std::vector<Cell>& rib) { return rib.back(); }
inline Cell ribbon_tail(const std::vector<Cell>& rib) { return rib.front(); }

struct StrongCover {
    NCore lower;
    NCore upper;
    std::vector<std::vector<Cell>> ribbons;  // sorted by head content
    std::int64_t r = 0;                      // upper window = tau_{r,s} * lower window
    std::int64_t s = 0;
};

namespace detail {

inline StrongCover make_cover(const NCore& lower, const NCore& upper, const AffinePermutation& wl, const AffinePermutation& wu) {
    StrongCover cv;
    cv.lower = lower;
    cv.upper = upper;
    AffinePermutation tau = wu * wl.inverse();
    int n = lower.n;
    for (int k = 1; k <= n; ++k)
        if (tau(k) > k) {
            cv.r = k;
            cv.s = tau(k);
            break;
        }
    int len = mod(cv.s - cv.r, n);
    cv.ribbons = split_ribbons(skew_cells(upper.shape, lower.shape), len);
    return cv;
}

// Grassmannian elements w * t_{p,q} whose length differs from w by `delta`.
inline std::vector<AffinePermutation> bruhat_neighbors(const AffinePermutation& w, int delta) {
    int n = w.n();
    const auto& win = w.window();
    std::int64_t spread = *std::max_element(win.begin(), win.end()) - *std::min_element(win.begin(), win.end());
    std::int64_t len = length(w);
    std::set<AffinePermutation> seen;
    std::vector<AffinePermutation> out;
    for (int p = 1; p <= n; ++p)
        for (std::int64_t q = p + 1; q <= p + spread + 2 * n; ++q) {
            if (mod(q - p, n) == 0) continue;
            bool down = w(p) > w(q);
            if ((delta < 0) != down) continue;
            AffinePermutation u = w * transposition(p, q, n);
            if (!grassmannian_test(u) || length(u) != len + delta) continue;
            if (seen.insert(u).second) out.push_back(u);
        }
    return out;
}

}  // namespace detail

// Every mu with mu ⋖ c in strong order, with ribbons and the transposition.
inline std::vector<StrongCover> strong_covers_down(const NCore& c) {
    AffinePermutation w = window_of(c);
    std::vector<StrongCover> out;
    for (const auto& u : detail::bruhat_neighbors(w, -1)) out.push_back(detail::make_cover(core_of(u), c, u, w));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lower < b.lower; });
    return out;
}

inline std::vector<StrongCover> strong_covers_up(const NCore& c) {
    AffinePermutation w = window_of(c);
    std::vector<StrongCover> out;
    for (const auto& u : detail::bruhat_neighbors(w, +1)) out.push_back(detail::make_cover(c, core_of(u), w, u));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.upper < b.upper; });
    return out;
}

}  // namespace affschub
