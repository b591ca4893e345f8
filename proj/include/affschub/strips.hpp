#pragma once

// Marked strong covers, strong strips, horizontal strong strips with the
// word correspondences psi/phi, and ribbon strong strips.

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "affine_weyl.hpp"
#include "cores.hpp"

namespace affschub {

struct MarkedCover {
    NCore upper;
    int content;
};

// One entry per distinct head content of the ribbons in upper/rho.
inline std::vector<MarkedCover> marked_strong_covers(const NCore& rho) {
    std::vector<MarkedCover> out;
    for (const auto& cv : strong_covers_up(rho)) {
        std::set<int> heads;
        for (const auto& rib : cv.ribbons) heads.insert(content(ribbon_head(rib)));
        for (int c : heads) out.push_back({cv.upper, c});
    }
    return out;
}

struct StrongStrip {
    std::vector<NCore> chain;
    std::vector<int> contents;
    bool operator==(const StrongStrip&) const = default;
};

// Saturated strong chains from nu up to gamma.
inline std::vector<std::vector<NCore>> saturated_chains(const NCore& nu, const NCore& gamma) {
    std::vector<std::vector<NCore>> out;
    int target = degree(gamma);
    if (!contains(gamma.shape, nu.shape) || degree(nu) > target) return out;
    std::vector<NCore> cur{nu};
    auto rec = [&](auto&& self, const NCore& c, int d) -> void {
        if (d == target) {
            if (c == gamma) out.push_back(cur);
            return;
        }
        for (const auto& cv : strong_covers_up(c)) {
            if (!contains(gamma.shape, cv.upper.shape)) continue;
            cur.push_back(cv.upper);
            self(self, cv.upper, d + 1);
            cur.pop_back();
        }
    };
    rec(rec, nu, degree(nu));
    return out;
}

// Strong m-strips from nu to gamma: saturated chains with increasing marks.
inline std::vector<StrongStrip> strong_strips(const NCore& nu, const NCore& gamma, int m) {
    std::vector<StrongStrip> out;
    if (degree(gamma) != degree(nu) + m || !contains(gamma.shape, nu.shape)) return out;
    StrongStrip cur;
    cur.chain.push_back(nu);
    auto rec = [&](auto&& self, const NCore& c, int steps) -> void {
        if (steps == m) {
            if (c == gamma) out.push_back(cur);
            return;
        }
        for (const auto& mc : marked_strong_covers(c)) {
            if (!contains(gamma.shape, mc.upper.shape)) continue;
            if (!cur.contents.empty() && mc.content <= cur.contents.back()) continue;
            cur.chain.push_back(mc.upper);
            cur.contents.push_back(mc.content);
            self(self, mc.upper, steps + 1);
            cur.chain.pop_back();
            cur.contents.pop_back();
        }
    };
    rec(rec, nu, 0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.contents < b.contents; });
    return out;
}

struct HorizontalStrongStrip {
    NCore lambda;
    NCore nu;
    std::vector<NCore> chain;  // nu = chain.front(), chain.back() = (lambda_1 + n - 1, lambda)
    std::vector<int> contents;
    bool operator==(const HorizontalStrongStrip&) const = default;
};

// (lambda_1 + n - 1, lambda)
inline NCore top_translation(const NCore& lam) {
    NCore t;
    t.n = lam.n;
    t.shape = lam.shape;
    t.shape.insert(t.shape.begin(), part(lam.shape, 1) + lam.n - 1);
    return t;
}

namespace detail {

inline std::vector<HorizontalStrongStrip> enumerate_horizontal(const NCore& lam, int m) {
    std::vector<HorizontalStrongStrip> out;
    NCore top = top_translation(lam);
    std::vector<NCore> down{top};
    auto rec = [&](auto&& self, const NCore& c, int steps) -> void {
        if (steps == m) {
            HorizontalStrongStrip hs;
            hs.lambda = lam;
            hs.nu = c;
            hs.chain.assign(down.rbegin(), down.rend());
            for (std::size_t i = 1; i < hs.chain.size(); ++i) hs.contents.push_back(part(hs.chain[i].shape, 1) - 1);
            out.push_back(std::move(hs));
            return;
        }
        for (const auto& cv : strong_covers_down(c)) {
            if (part(cv.lower.shape, 1) >= part(c.shape, 1)) continue;
            if (!contains(cv.lower.shape, lam.shape)) continue;
            down.push_back(cv.lower);
            self(self, cv.lower, steps + 1);
            down.pop_back();
        }
    };
    rec(rec, top, 0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.nu < b.nu; });
    return out;
}

struct StripCache {
    std::mutex mu;
    std::map<std::tuple<int, Partition, int>, std::vector<HorizontalStrongStrip>> memo;
};

inline StripCache& strip_cache() {
    static StripCache cache;
    return cache;
}

}  // namespace detail

// All nu with (lambda, nu) a horizontal strong m-strip, each with its chain.
inline std::vector<HorizontalStrongStrip> horizontal_strong_strips_from(const NCore& lam, int m) {
    if (m < 0 || m > lam.n - 1) throw error(error::code::out_of_range, "strip size must lie in [0, n-1]");
    auto key = std::make_tuple(lam.n, lam.shape, m);
    auto& cache = detail::strip_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.memo.find(key);
        if (it != cache.memo.end()) return it->second;
    }
    auto res = detail::enumerate_horizontal(lam, m);
    std::lock_guard<std::mutex> lock(cache.mu);
    return cache.memo.emplace(key, std::move(res)).first->second;
}

inline std::optional<HorizontalStrongStrip> horizontal_strong_strip(const NCore& lam, const NCore& nu) {
    int m = lam.n - 1 + degree(lam) - degree(nu);
    if (m < 0 || m > lam.n - 1) return std::nullopt;
    for (const auto& hs : horizontal_strong_strips_from(lam, m))
        if (hs.nu == nu) return hs;
    return std::nullopt;
}

// Cyclically decreasing word for w_nu w_lambda^{-1}: the residues x-1, x-2, ..., x+1
// (x = lambda_1 - 1) other than those starting each bottom-row removal.
inline Word psi(const HorizontalStrongStrip& hs) {
    int n = hs.lambda.n;
    int x = mod(part(hs.lambda.shape, 1) - 1, n);
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i + 1 < hs.chain.size(); ++i) used[mod(part(hs.chain[i].shape, 1), n)] = true;
    Word word;
    for (int k = 1; k < n; ++k) {
        int a = mod(x - k, n);
        if (!used[a]) word.push_back(a);
    }
    return word;
}

// Inverse of psi: remove bottom-row tails from (lambda_1 + n - 1, lambda), the
// residue nearest x-1 first.
inline HorizontalStrongStrip phi(const Word& word, const NCore& lam) {
    int n = lam.n;
    int l1 = part(lam.shape, 1);
    int x = mod(l1 - 1, n);
    if (!is_cyclically_decreasing_word(word, n)) throw error(error::code::domain, "word is not cyclically decreasing");
    std::vector<bool> in(n, false);
    for (int a : word) {
        if (a == x) throw error(error::code::domain, "word contains the excluded residue");
        in[a] = true;
    }
    NCore cur = top_translation(lam);
    std::vector<NCore> down{cur};
    for (int k = n - 1; k >= 1; --k) {
        int a = mod(x + k, n);
        if (in[a]) continue;
        int target = l1 + k - 1;
        std::optional<NCore> next;
        for (const auto& cv : strong_covers_down(cur))
            if (part(cv.lower.shape, 1) == target && contains(cv.lower.shape, lam.shape)) {
                if (next) throw error(error::code::domain, "bottom-row removal is not unique");
                next = cv.lower;
            }
        if (!next) throw error(error::code::domain, "bottom-row removal is not a strong cover");
        cur = *next;
        down.push_back(cur);
    }
    HorizontalStrongStrip hs;
    hs.lambda = lam;
    hs.nu = cur;
    hs.chain.assign(down.rbegin(), down.rend());
    for (std::size_t i = 1; i < hs.chain.size(); ++i) hs.contents.push_back(part(hs.chain[i].shape, 1) - 1);
    return hs;
}

// The last r columns of the highest length-r row of c(lambda ∪ R_r).
inline std::vector<int> col_r(const Partition& lam, int r, int n) {
    if (r < 1 || r >= n) throw error(error::code::out_of_range, "r must satisfy 1 <= r < n");
    require_bounded(lam, n);
    Partition eta = union_of(lam, rectangle(r, n - r));
    int m = 0;
    for (int i = 1; i <= static_cast<int>(eta.size()); ++i)
        if (eta[i - 1] == r) m = i;
    NCore g = c_map(eta, n);
    int end = part(g.shape, m);
    std::vector<int> cols;
    for (int c = end - r + 1; c <= end; ++c) cols.push_back(c);
    return cols;
}

// Which shape a ribbon head must sit on in a horizontal ribbon strip.
enum class HeadAnchor {
    base_shape,      // directly above a cell of the bottom shape of the chain
    previous_shape,  // directly above a cell of the shape one step below
};

enum class RibbonStripRule {
    horizontal_ribbon,   // head condition on every ribbon, tail in col_r
    increasing_contents, // strong strip (increasing marks), tail in col_r
};

struct RibbonStrongStrip {
    Partition lambda;  // bounded
    int r = 0;
    NCore nu;
    std::vector<NCore> chain;  // nu = chain.front(), chain.back() = R(r, lambda)
    std::vector<int> contents;
};

namespace detail {

inline bool head_supported(const Cell& head, const Partition& base) {
    return head.row == 1 || part(base, head.row - 1) >= head.col;
}

}  // namespace detail

// Chains of length b from nu to R(r, lambda) under the chosen rule.
inline std::vector<RibbonStrongStrip> ribbon_strong_strip_chains(const Partition& lam, int r, int b, int n,
                                                                 RibbonStripRule rule = RibbonStripRule::horizontal_ribbon,
                                                                 HeadAnchor anchor = HeadAnchor::base_shape) {
    if (r < 1 || r >= n) throw error(error::code::out_of_range, "r must satisfy 1 <= r < n");
    if (b < 0) throw error(error::code::out_of_range, "length must be nonnegative");
    auto cols = col_r(lam, r, n);
    std::set<int> colset(cols.begin(), cols.end());
    NCore top = rect_translation(lam, r, n);
    std::vector<RibbonStrongStrip> out;
    std::vector<NCore> down{top};
    std::vector<std::vector<std::vector<Cell>>> steps;  // ribbons per step, top first
    std::vector<int> marks;                             // head contents, top first

    auto finish = [&](const NCore& nu) {
        if (rule == RibbonStripRule::horizontal_ribbon && anchor == HeadAnchor::base_shape)
            for (const auto& st : steps)
                for (const auto& rib : st)
                    if (!detail::head_supported(ribbon_head(rib), nu.shape)) return;
        RibbonStrongStrip rs;
        rs.lambda = lam;
        rs.r = r;
        rs.nu = nu;
        rs.chain.assign(down.rbegin(), down.rend());
        rs.contents.assign(marks.rbegin(), marks.rend());
        out.push_back(std::move(rs));
    };

    auto rec = [&](auto&& self, const NCore& c, int depth) -> void {
        if (depth == b) {
            finish(c);
            return;
        }
        for (const auto& cv : strong_covers_down(c)) {
            bool tail_ok = false;
            for (const auto& rib : cv.ribbons)
                if (colset.count(ribbon_tail(rib).col)) tail_ok = true;
            if (!tail_ok) continue;
            if (rule == RibbonStripRule::horizontal_ribbon) {
                bool heads_ok = true;
                if (anchor == HeadAnchor::previous_shape)
                    for (const auto& rib : cv.ribbons)
                        if (!detail::head_supported(ribbon_head(rib), cv.lower.shape)) heads_ok = false;
                if (!heads_ok) continue;
                down.push_back(cv.lower);
                steps.push_back(cv.ribbons);
                marks.push_back(content(ribbon_head(cv.ribbons.back())));
                self(self, cv.lower, depth + 1);
                down.pop_back();
                steps.pop_back();
                marks.pop_back();
            } else {
                std::set<int> heads;
                for (const auto& rib : cv.ribbons) heads.insert(content(ribbon_head(rib)));
                for (int h : heads) {
                    // marks read downward must strictly decrease
                    if (!marks.empty() && h >= marks.back()) continue;
                    down.push_back(cv.lower);
                    steps.push_back(cv.ribbons);
                    marks.push_back(h);
                    self(self, cv.lower, depth + 1);
                    down.pop_back();
                    steps.pop_back();
                    marks.pop_back();
                }
            }
        }
    };
    rec(rec, top, 0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b2) {
        if (!(a.nu == b2.nu)) return a.nu < b2.nu;
        return a.contents < b2.contents;
    });
    return out;
}

// Distinct nu admitting a ribbon strong strip of length b with respect to r.
inline std::vector<NCore> ribbon_strong_strips(const Partition& lam, int r, int b, int n,
                                               RibbonStripRule rule = RibbonStripRule::horizontal_ribbon,
                                               HeadAnchor anchor = HeadAnchor::base_shape) {
    std::vector<NCore> out;
    for (const auto& rs : ribbon_strong_strip_chains(lam, r, b, n, rule, anchor))
        if (out.empty() || !(out.back() == rs.nu)) out.push_back(rs.nu);
    return out;
}

}  // namespace affschub
