#pragma once

// Pieri rules for the affine Grassmannian, homology structure constants at
// t = 1, and the finite-flag side: the sh map, quantum Monk, Gromov-Witten
// invariants, and checkers for the affine Monk and rectangle Pieri rules.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "affine_weyl.hpp"
#include "cores.hpp"
#include "strips.hpp"
#include "symfun.hpp"

namespace affschub {

struct SchubertExpansion {
    int n = 0;
    std::map<NCore, std::int64_t> terms;

    void add(const NCore& c, std::int64_t k) {
        if (k == 0) return;
        std::int64_t& slot = terms[c];
        slot = detail::checked_add(slot, k);
        if (slot == 0) terms.erase(c);
    }

    std::int64_t coeff(const NCore& c) const {
        auto it = terms.find(c);
        return it == terms.end() ? 0 : it->second;
    }

    std::map<Partition, std::int64_t, RevLex> bounded_terms() const {
        std::map<Partition, std::int64_t, RevLex> out;
        for (const auto& [c, k] : terms) out[c_inverse(c)] = k;
        return out;
    }

    bool operator==(const SchubertExpansion&) const = default;
};

namespace detail {

inline void require_pieri_m(int m, int n) {
    if (m < 1 || m >= n) throw error(error::code::out_of_range, "m must satisfy 1 <= m < n");
}

}  // namespace detail

// ξ_{c_{0,m}} ξ_λ: one term per cyclically decreasing v of length m acting on λ.
inline SchubertExpansion weak_pieri(int m, const NCore& lam) {
    detail::require_pieri_m(m, lam.n);
    SchubertExpansion out;
    out.n = lam.n;
    for (const auto& w : cyclically_decreasing_words(m, lam.n)) {
        Partition p = lam.shape;
        bool ok = true;
        for (auto it = w.rbegin(); it != w.rend() && ok; ++it) {
            auto add = addable_corners(p, *it, lam.n);
            if (add.empty()) ok = false;
            else p = add_cells(p, add);
        }
        if (ok) out.add(NCore(p, lam.n), 1);
    }
    return out;
}

// The same product read off horizontal strong (n-1-m)-strips.
inline SchubertExpansion horizontal_pieri(int m, const NCore& lam) {
    detail::require_pieri_m(m, lam.n);
    SchubertExpansion out;
    out.n = lam.n;
    for (const auto& hs : horizontal_strong_strips_from(lam, lam.n - 1 - m)) out.add(hs.nu, 1);
    return out;
}

// ξ^{c_{0,m}} ξ^w: strong m-strips upward from w, counted by their end.
inline SchubertExpansion strong_pieri_cohomology(int m, const NCore& w) {
    detail::require_pieri_m(m, w.n);
    SchubertExpansion out;
    out.n = w.n;
    auto rec = [&](auto&& self, const NCore& c, int steps, int last) -> void {
        if (steps == m) {
            out.add(c, 1);
            return;
        }
        for (const auto& mc : marked_strong_covers(c))
            if (steps == 0 || mc.content > last) self(self, mc.upper, steps + 1, mc.content);
    };
    rec(rec, w, 0, 0);
    return out;
}

// ---------------------------------------------------------------- homology products

// Factorizations of w_nu into cyclically decreasing pieces of the given lengths.
inline std::int64_t weak_kostka_number(const NCore& nu, const std::vector<int>& weight) {
    int n = nu.n;
    require_weight(weight, n);
    if (std::accumulate(weight.begin(), weight.end(), 0) != degree(nu)) return 0;
    std::map<Partition, std::int64_t> cur{{Partition{}, 1}};
    for (int a : weight) {
        auto words = cyclically_decreasing_words(a, n);
        std::map<Partition, std::int64_t> next;
        for (const auto& [shape, count] : cur)
            for (const auto& w : words) {
                Partition p = shape;
                bool ok = true;
                for (auto it = w.rbegin(); it != w.rend() && ok; ++it) {
                    auto add = addable_corners(p, *it, n);
                    if (add.empty()) ok = false;
                    else p = add_cells(p, add);
                }
                // weak-order predecessors of nu are contained in nu
                if (ok && contains(nu.shape, p)) next[p] = detail::checked_add(next[p], count);
            }
        cur = std::move(next);
    }
    auto it = cur.find(nu.shape);
    return it == cur.end() ? 0 : it->second;
}

namespace detail {

// h-expansion (t = 1) of the k-Schur product, keyed by weight.
inline std::map<Partition, std::int64_t> kschur_product_in_h(const NCore& mu, const NCore& lam) {
    if (mu.n != lam.n) throw error(error::code::domain, "cores must share n");
    SymFuncT a = kschur(mu, false), b = kschur(lam, false);
    std::map<Partition, std::int64_t> out;
    for (const auto& [p, c] : a.terms)
        for (const auto& [q, e] : b.terms) {
            Partition u = union_of(p, q);
            out[u] = checked_add(out[u], checked_mul(c.eval(1), e.eval(1)));
        }
    return out;
}

}  // namespace detail

// c^nu_{mu,lam} for one nu.
inline std::int64_t homology_structure_constant(const NCore& mu, const NCore& lam, const NCore& nu) {
    if (nu.n != mu.n) throw error(error::code::domain, "cores must share n");
    if (degree(nu) != degree(mu) + degree(lam)) return 0;
    std::int64_t acc = 0;
    for (const auto& [tau, c] : detail::kschur_product_in_h(mu, lam))
        if (c) acc = detail::checked_add(acc, detail::checked_mul(c, weak_kostka_number(nu, tau)));
    return acc;
}

// ξ_mu ξ_lam in the k-Schur basis, through h_rho h_sigma = h_{rho ∪ sigma}.
inline SchubertExpansion homology_structure_constants(const NCore& mu, const NCore& lam) {
    int n = mu.n;
    auto prod = detail::kschur_product_in_h(mu, lam);
    int d = degree(mu) + degree(lam);
    auto bt = bounded_one_tables(n, d);
    SchubertExpansion out;
    out.n = n;
    for (std::size_t i = 0; i < bt->parts.size(); ++i) {
        std::int64_t acc = 0;
        for (const auto& [tau, c] : prod)
            if (c) acc = detail::checked_add(acc, detail::checked_mul(c, bt->weak_k[i][bt->index.at(tau)].eval(1)));
        out.add(c_map(bt->parts[i], n), acc);
    }
    return out;
}

// ---------------------------------------------------------------- finite flags

class FinitePermutation {
public:
    FinitePermutation() = default;
    explicit FinitePermutation(std::vector<int> oneline) : w_(std::move(oneline)) {
        std::vector<int> sorted = w_;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != static_cast<int>(i) + 1) throw error(error::code::domain, "not a permutation of 1..n");
    }

    static FinitePermutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return FinitePermutation(std::move(v));
    }
    static FinitePermutation longest(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = n - i;
        return FinitePermutation(std::move(v));
    }
    static FinitePermutation simple(int r, int n) {
        if (r < 1 || r >= n) throw error(error::code::out_of_range, "r must satisfy 1 <= r < n");
        auto p = identity(n);
        std::swap(p.w_[r - 1], p.w_[r]);
        return p;
    }

    int n() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[i - 1]; }
    const std::vector<int>& oneline() const { return w_; }

    // (this * o)(i) = this(o(i))
    FinitePermutation operator*(const FinitePermutation& o) const {
        std::vector<int> v(n());
        for (int i = 1; i <= n(); ++i) v[i - 1] = (*this)(o(i));
        return FinitePermutation(std::move(v));
    }

    // Right multiplication by the transposition of positions a and b.
    FinitePermutation swap_positions(int a, int b) const {
        FinitePermutation p = *this;
        std::swap(p.w_[a - 1], p.w_[b - 1]);
        return p;
    }

    int inv(int i) const {
        int k = 0;
        for (int j = i + 1; j <= n(); ++j)
            if ((*this)(j) < (*this)(i)) ++k;
        return k;
    }

    int length() const {
        int k = 0;
        for (int i = 1; i <= n(); ++i) k += inv(i);
        return k;
    }

    // The permutation whose inversion counts inv_1..inv_n are `code`.
    static FinitePermutation from_lehmer(const std::vector<int>& code) {
        int n = static_cast<int>(code.size());
        std::vector<int> avail(n);
        std::iota(avail.begin(), avail.end(), 1);
        std::vector<int> v;
        for (int i = 0; i < n; ++i) {
            if (code[i] < 0 || code[i] >= static_cast<int>(avail.size())) throw error(error::code::domain, "invalid inversion code");
            v.push_back(avail[code[i]]);
            avail.erase(avail.begin() + code[i]);
        }
        return FinitePermutation(std::move(v));
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < w_.size(); ++i) s += (i ? "," : "") + std::to_string(w_[i]);
        return s + "]";
    }

    auto operator<=>(const FinitePermutation&) const = default;

private:
    std::vector<int> w_;
};

inline std::vector<FinitePermutation> all_permutations(int n) {
    std::vector<FinitePermutation> out;
    auto v = FinitePermutation::identity(n).oneline();
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

inline int binom2(int a) { return a < 2 ? 0 : a * (a - 1) / 2; }

// Conjugate columns C(n-i,2) + inv_i(w0 w).
inline Partition sh_map(const FinitePermutation& w) {
    int n = w.n();
    FinitePermutation u = FinitePermutation::longest(n) * w;
    std::vector<int> cols;
    for (int i = 1; i <= n; ++i) cols.push_back(binom2(n - i) + u.inv(i));
    return conjugate(normalized(cols));
}

// (n-1, (n-2)^2, ..., 1^(n-1))
inline Partition staircase_box(int n) {
    Partition p;
    for (int k = n - 1; k >= 1; --k)
        for (int j = 0; j < n - k; ++j) p.push_back(k);
    return p;
}

struct QuantumTerm {
    FinitePermutation perm;
    std::vector<int> d;  // exponents of q_1..q_{n-1}
    auto operator<=>(const QuantumTerm&) const = default;
};

inline std::string monomial_string(const std::vector<int>& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i]) s += "q" + std::to_string(i + 1) + (d[i] > 1 ? "^" + std::to_string(d[i]) : std::string());
    return s.empty() ? "1" : s;
}

// σ_{s_r} * σ_w in the small quantum cohomology of the flag manifold.
inline std::vector<QuantumTerm> quantum_monk(int r, const FinitePermutation& w) {
    int n = w.n();
    if (r < 1 || r >= n) throw error(error::code::out_of_range, "r must satisfy 1 <= r < n");
    int len = w.length();
    std::vector<QuantumTerm> out;
    for (int a = 1; a <= r; ++a)
        for (int b = r + 1; b <= n; ++b) {
            FinitePermutation x = w.swap_positions(a, b);
            int lx = x.length();
            if (lx == len + 1) out.push_back({x, std::vector<int>(n - 1, 0)});
            else if (lx == len - 2 * (b - a) + 1) {
                std::vector<int> d(n - 1, 0);
                for (int i = a; i < b; ++i) d[i - 1] = 1;
                out.push_back({x, d});
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline void require_degree_vector(const std::vector<int>& d, int n) {
    if (static_cast<int>(d.size()) != n - 1) throw error(error::code::domain, "degree vector needs n-1 entries");
    for (int x : d)
        if (x < 0) throw error(error::code::domain, "degree vector entries must be nonnegative");
}

// Columns 1..n-1 of sh(v) plus the given per-column change; nullopt unless a bounded partition.
inline std::optional<Partition> shift_columns(const Partition& base, const std::vector<long long>& delta, int n) {
    Partition cols = conjugate(base);
    cols.resize(n - 1, 0);
    std::vector<int> out(n - 1);
    for (int i = 0; i < n - 1; ++i) {
        long long c = cols[i] + delta[i];
        if (c < 0) return std::nullopt;
        out[i] = static_cast<int>(c);
        if (i > 0 && out[i] > out[i - 1]) return std::nullopt;
    }
    return conjugate(normalized(out));
}

}  // namespace detail

// ⟨u,w,v⟩_d as c^eta_{sh(u),sh(w)}; 0 when eta is not a bounded partition.
inline std::int64_t gw_invariant(const FinitePermutation& u, const FinitePermutation& w, const FinitePermutation& v,
                                 const std::vector<int>& d) {
    int n = u.n();
    if (w.n() != n || v.n() != n) throw error(error::code::domain, "permutations must lie in the same S_n");
    detail::require_degree_vector(d, n);
    std::vector<long long> delta(n - 1);
    for (int i = 1; i < n; ++i) {
        long long prev = i >= 2 ? d[i - 2] : 0;
        delta[i - 1] = binom2(n + 1 - i) - static_cast<long long>(n - i + 1) * d[i - 1] + static_cast<long long>(n - i) * prev;
    }
    auto eta = detail::shift_columns(sh_map(v), delta, n);
    if (!eta) return 0;
    Partition a = sh_map(u), b = sh_map(w);
    if (size(*eta) != size(a) + size(b)) return 0;
    return homology_structure_constant(c_map(a, n), c_map(b, n), c_map(*eta, n));
}

// Reads (x, d) off a shape nu = eta_d ∪ sh(x) ∪ R_r, column by column.
inline std::optional<QuantumTerm> quantum_term_of_shape(const Partition& nu, int r, int n) {
    Partition cols = conjugate(nu);
    Partition rcols = conjugate(rectangle(r, n - r));
    cols.resize(n, 0);
    rcols.resize(n, 0);
    if (static_cast<int>(conjugate(nu).size()) > n - 1) return std::nullopt;
    std::vector<int> code(n, 0), d(n - 1, 0);
    int prev = 0;
    for (int i = 1; i < n; ++i) {
        // inv_i - (n+1-i) d_i = x with 0 <= inv_i <= n-i
        int x = cols[i - 1] - rcols[i - 1] - binom2(n - i) - (n - i) * prev;
        int k = n + 1 - i;
        int di = -static_cast<int>(floor_div(x, k));
        if (di < 0) return std::nullopt;
        d[i - 1] = di;
        code[i - 1] = x + k * di;
        prev = di;
    }
    // sh(x) has inv_i(w0 x) as its column data
    FinitePermutation u = FinitePermutation::from_lehmer(code);
    return QuantumTerm{FinitePermutation::longest(n) * u, d};
}

// ---------------------------------------------------------------- checkers

struct CheckReport {
    std::string conjecture;
    std::string instance;
    int n = 0;
    bool match = false;
    std::vector<std::pair<Partition, std::int64_t>> lhs, rhs;  // reverse-lex by shape
    std::vector<std::string> diff;                             // "-" lhs only, "+" rhs only
};

namespace detail {

inline std::vector<std::pair<Partition, std::int64_t>> sorted_terms(const std::map<Partition, std::int64_t, RevLex>& m) {
    return {m.begin(), m.end()};
}

inline void fill_report(CheckReport& rep, const std::map<Partition, std::int64_t, RevLex>& lhs,
                        const std::map<Partition, std::int64_t, RevLex>& rhs) {
    rep.lhs = sorted_terms(lhs);
    rep.rhs = sorted_terms(rhs);
    rep.match = lhs == rhs;
    std::set<Partition, RevLex> keys;
    for (const auto& [p, k] : lhs) keys.insert(p);
    for (const auto& [p, k] : rhs) keys.insert(p);
    for (const auto& p : keys) {
        auto a = lhs.find(p), b = rhs.find(p);
        std::int64_t ka = a == lhs.end() ? 0 : a->second, kb = b == rhs.end() ? 0 : b->second;
        if (ka == kb) rep.diff.push_back(" " + std::to_string(ka) + " " + to_string(p));
        else {
            if (ka) rep.diff.push_back("-" + std::to_string(ka) + " " + to_string(p));
            if (kb) rep.diff.push_back("+" + std::to_string(kb) + " " + to_string(p));
        }
    }
}

}  // namespace detail

// R'_r: the rectangle (r^(n-r)) without its corner.
inline Partition rectangle_minus_corner(int r, int n) {
    Partition p = rectangle(r, n - r);
    p.back() -= 1;
    return normalized(p);
}

// Bounded nu whose core is covered by R(r,lam) and shorter in a row where lam ∪ R_r has length r.
inline std::map<Partition, std::int64_t, RevLex> affine_monk_terms(int r, const Partition& lam, int n) {
    NCore top = rect_translation(lam, r, n);
    Partition eta = union_of(lam, rectangle(r, n - r));
    std::map<Partition, std::int64_t, RevLex> out;
    for (const auto& cv : strong_covers_down(top)) {
        bool ok = false;
        for (int i = 1; i <= static_cast<int>(eta.size()); ++i)
            if (eta[i - 1] == r && part(cv.lower.shape, i) < part(top.shape, i)) ok = true;
        if (ok) out[c_inverse(cv.lower)] += 1;
    }
    return out;
}

inline CheckReport affine_monk_check(int r, const Partition& lam, int n) {
    if (r < 1 || r >= n) throw error(error::code::out_of_range, "r must satisfy 1 <= r < n");
    require_bounded(lam, n);
    CheckReport rep;
    rep.conjecture = "affine-monk";
    rep.instance = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " lambda=" + to_string(lam);
    rep.n = n;
    auto lhs = homology_structure_constants(c_map(rectangle_minus_corner(r, n), n), c_map(lam, n)).bounded_terms();
    detail::fill_report(rep, lhs, affine_monk_terms(r, lam, n));
    return rep;
}

// (r^(n-1-r), r-b)
inline Partition near_rectangle(int r, int b, int n) {
    Partition p(n - 1 - r, r);
    p.push_back(r - b);
    return normalized(p);
}

inline CheckReport rect_pieri_check(int r, int b, const Partition& lam, int n,
                                    RibbonStripRule rule = RibbonStripRule::horizontal_ribbon,
                                    HeadAnchor anchor = HeadAnchor::base_shape) {
    if (r < 1 || r >= n) throw error(error::code::out_of_range, "r must satisfy 1 <= r < n");
    if (b < 1 || b >= r) throw error(error::code::out_of_range, "b must satisfy 1 <= b < r");
    require_bounded(lam, n);
    CheckReport rep;
    rep.conjecture = "rect-pieri";
    rep.instance = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " b=" + std::to_string(b) + " lambda=" + to_string(lam);
    rep.n = n;
    auto lhs = homology_structure_constants(c_map(near_rectangle(r, b, n), n), c_map(lam, n)).bounded_terms();
    std::map<Partition, std::int64_t, RevLex> rhs;
    for (const auto& c : ribbon_strong_strips(lam, r, b, n, rule, anchor)) rhs[c_inverse(c)] += 1;
    detail::fill_report(rep, lhs, rhs);
    return rep;
}

// Horizontal strong m-strips from lam against ribbon strong strips of length m for r = n-1.
inline CheckReport length_one_check(const NCore& lam, int m, HeadAnchor anchor = HeadAnchor::base_shape) {
    int n = lam.n;
    CheckReport rep;
    rep.conjecture = "horizontal-vs-ribbon";
    rep.instance = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " core=" + to_string(lam.shape);
    rep.n = n;
    std::map<Partition, std::int64_t, RevLex> lhs, rhs;
    for (const auto& hs : horizontal_strong_strips_from(lam, m)) lhs[c_inverse(hs.nu)] = 1;
    for (const auto& c : ribbon_strong_strips(c_inverse(lam), n - 1, m, n, RibbonStripRule::horizontal_ribbon, anchor))
        rhs[c_inverse(c)] = 1;
    detail::fill_report(rep, lhs, rhs);
    return rep;
}

}  // namespace affschub
