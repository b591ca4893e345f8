#pragma once

// Symmetric functions of fixed degree with Laurent-polynomial coefficients in t.
// Every basis is stored as a matrix into the monomial basis, per degree.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "abc.hpp"
#include "affine_weyl.hpp"
#include "cores.hpp"
#include "partition.hpp"
#include "tpoly.hpp"

namespace affschub {

enum class Basis { m, h, s, ptilde, hl, dualk, kschur };

inline std::string basis_name(Basis b) {
    switch (b) {
        case Basis::m: return "m";
        case Basis::h: return "h";
        case Basis::s: return "s";
        case Basis::ptilde: return "ptilde";
        case Basis::hl: return "H0t";
        case Basis::dualk: return "dualk";
        case Basis::kschur: return "k";
    }
    return "?";
}

inline bool is_n_basis(Basis b) { return b == Basis::dualk || b == Basis::kschur; }

// dualk and kschur terms are keyed by the bounded partition of the core.
struct SymFuncT {
    Basis basis = Basis::m;
    int n = 0;
    int degree = 0;
    std::map<Partition, TPoly, RevLex> terms;

    TPoly coeff(const Partition& p) const {
        auto it = terms.find(p);
        return it == terms.end() ? TPoly() : it->second;
    }

    void add(const Partition& p, const TPoly& c) {
        if (c.is_zero()) return;
        TPoly& slot = terms[p];
        slot += c;
        if (slot.is_zero()) terms.erase(p);
    }

    bool operator==(const SymFuncT& o) const = default;
};

inline SymFuncT at_t(const SymFuncT& f, std::int64_t v) {
    SymFuncT g = f;
    g.terms.clear();
    for (const auto& [p, c] : f.terms) g.add(p, TPoly(c.eval(v)));
    return g;
}

// ---------------------------------------------------------------- tableaux

// Semistandard tableau; rows[i] lists row i+1 (bottom row first) left to right.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    std::vector<int> weight() const {
        std::vector<int> w;
        for (const auto& r : rows)
            for (int x : r) {
                if (static_cast<int>(w.size()) < x) w.resize(x, 0);
                ++w[x - 1];
            }
        return w;
    }
};

// SSYT(shape, weight) as chains of horizontal strips, letter 1 first.
inline std::vector<Tableau> ssyt(const Partition& shape, const std::vector<int>& weight) {
    require_partition(shape);
    std::vector<Tableau> out;
    int total = 0;
    for (int a : weight) {
        if (a < 0) throw error(error::code::domain, "weights must be nonnegative");
        total += a;
    }
    if (total != size(shape)) return out;
    std::vector<Partition> chain{Partition(shape.size(), 0)};
    auto emit = [&]() {
        Tableau t;
        t.shape = shape;
        t.rows.resize(shape.size());
        for (std::size_t i = 1; i < chain.size(); ++i)
            for (std::size_t r = 0; r < shape.size(); ++r)
                for (int c = chain[i - 1][r]; c < chain[i][r]; ++c) t.rows[r].push_back(static_cast<int>(i));
        out.push_back(std::move(t));
    };
    auto rec = [&](auto&& self, std::size_t letter) -> void {
        if (letter == weight.size()) {
            emit();
            return;
        }
        const Partition cur = chain.back();
        Partition next = cur;
        auto fill = [&](auto&& fself, std::size_t row, int left) -> void {
            if (row == shape.size()) {
                if (left == 0) {
                    chain.push_back(next);
                    self(self, letter + 1);
                    chain.pop_back();
                }
                return;
            }
            int cap = std::min(shape[row], row == 0 ? shape[0] : cur[row - 1]);
            for (int len = cur[row]; len <= cap && len - cur[row] <= left; ++len) {
                next[row] = len;
                fself(fself, row + 1, left - (len - cur[row]));
            }
            next[row] = cur[row];
        };
        fill(fill, 0, weight[letter]);
    };
    rec(rec, 0);
    return out;
}

inline void require_partition_weight(const std::vector<int>& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] > w[i - 1]) throw error(error::code::domain, "cocharge needs partition weight");
}

// Index vectors of the standard sequences, each starting from the rightmost 1.
inline std::vector<std::vector<int>> cocharge_index_vectors(const Tableau& t) {
    require_partition_weight(t.weight());
    struct Entry {
        Cell cell;
        int letter;
        bool used;
    };
    std::vector<Entry> cells;
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (std::size_t c = 0; c < t.rows[r].size(); ++c)
            cells.push_back({{static_cast<int>(r) + 1, static_cast<int>(c) + 1}, t.rows[r][c], false});
    // south-easternmost among candidates: largest column, then lowest row
    auto better = [](const Entry& a, const Entry& b) {
        if (a.cell.col != b.cell.col) return a.cell.col > b.cell.col;
        return a.cell.row < b.cell.row;
    };
    std::vector<std::vector<int>> out;
    while (true) {
        int start = -1;
        for (std::size_t k = 0; k < cells.size(); ++k)
            if (!cells[k].used && cells[k].letter == 1 && (start < 0 || better(cells[k], cells[start]))) start = static_cast<int>(k);
        if (start < 0) break;
        std::vector<int> seq{start};
        cells[start].used = true;
        for (int x = 1;; ++x) {
            const Cell from = cells[seq.back()].cell;
            int above = -1, any = -1;
            for (std::size_t k = 0; k < cells.size(); ++k) {
                if (cells[k].used || cells[k].letter != x + 1) continue;
                if (any < 0 || better(cells[k], cells[any])) any = static_cast<int>(k);
                if (cells[k].cell.row > from.row && (above < 0 || better(cells[k], cells[above]))) above = static_cast<int>(k);
            }
            int pick = above >= 0 ? above : any;
            if (pick < 0) break;
            cells[pick].used = true;
            seq.push_back(pick);
        }
        std::vector<int> idx{0};
        for (std::size_t k = 1; k < seq.size(); ++k) {
            bool same = content(cells[seq[k]].cell) > content(cells[seq[k - 1]].cell);
            idx.push_back(idx.back() + (same ? 0 : 1));
        }
        out.push_back(std::move(idx));
    }
    return out;
}

inline long long cocharge(const Tableau& t) {
    long long total = 0;
    for (const auto& v : cocharge_index_vectors(t))
        for (int e : v) total += e;
    return total;
}

inline long long kostka_number(const Partition& lam, const Partition& mu) { return static_cast<long long>(ssyt(lam, mu).size()); }

// sum over SSYT(lam, mu) of t^cocharge
inline TPoly kostka_foulkes(const Partition& lam, const Partition& mu) {
    require_partition(mu);
    TPoly out;
    for (const auto& t : ssyt(lam, mu)) out += TPoly::monomial(1, static_cast<int>(cocharge(t)));
    return out;
}

// sum over ABC(c(lam), mu) of t^(n-cocharge)
inline TPoly weak_kostka_foulkes(const Partition& lam, const Partition& mu, int n) {
    require_bounded(lam, n);
    require_bounded(mu, n);
    TPoly out;
    if (size(lam) != size(mu)) return out;
    for (const auto& a : enumerate_abc(c_map(lam, n), mu)) out += TPoly::monomial(1, static_cast<int>(a.n_cocharge()));
    return out;
}

// Number of factorizations v^r...v^1 of each core's element, |v^i| = weight_i, built
// by applying cyclically decreasing elements to the empty core.
inline std::map<Partition, std::int64_t> weak_kostka_numbers(const std::vector<int>& weight, int n) {
    require_weight(weight, n);
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
                if (ok) next[p] = detail::checked_add(next[p], count);
            }
        cur = std::move(next);
    }
    return cur;
}

// ---------------------------------------------------------------- degree tables

namespace detail {

struct FullTables {
    std::vector<Partition> parts;  // reverse-lex
    std::map<Partition, std::size_t> index;
    TMatrix kostka, kf;
    std::map<Basis, TMatrix> to_m, from_m;
};

struct BoundedTables {
    std::vector<Partition> parts;  // bounded partitions, reverse-lex
    std::map<Partition, std::size_t> index;
    TMatrix weak_kf, weak_kf_inv;
};

struct BoundedOneTables {
    std::vector<Partition> parts;
    std::map<Partition, std::size_t> index;
    TMatrix weak_k, weak_k_inv;  // t = 1
};

template <class T, class Key>
struct Cache {
    std::mutex mu;
    std::map<Key, std::shared_ptr<const T>> memo;

    template <class Build>
    std::shared_ptr<const T> get(const Key& key, Build build) {
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
        }
        auto made = std::make_shared<const T>(build());
        std::lock_guard<std::mutex> lock(mu);
        return memo.emplace(key, made).first->second;
    }
};

inline Cache<FullTables, int>& full_cache() {
    static Cache<FullTables, int> c;
    return c;
}

inline Cache<BoundedTables, std::pair<int, int>>& bounded_cache() {
    static Cache<BoundedTables, std::pair<int, int>> c;
    return c;
}

inline Cache<BoundedOneTables, std::pair<int, int>>& bounded_one_cache() {
    static Cache<BoundedOneTables, std::pair<int, int>> c;
    return c;
}

inline FullTables build_full(int d) {
    FullTables t;
    t.parts = partitions(d);
    for (std::size_t i = 0; i < t.parts.size(); ++i) t.index[t.parts[i]] = i;
    std::size_t k = t.parts.size();
    t.kostka.assign(k, std::vector<TPoly>(k));
    t.kf.assign(k, std::vector<TPoly>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (!dominated_by(t.parts[j], t.parts[i])) continue;
            auto tabs = ssyt(t.parts[i], t.parts[j]);
            t.kostka[i][j] = TPoly(static_cast<std::int64_t>(tabs.size()));
            TPoly acc;
            for (const auto& tab : tabs) acc += TPoly::monomial(1, static_cast<int>(cocharge(tab)));
            t.kf[i][j] = acc;
        }
    TMatrix kinv = upper_triangular_inverse(t.kostka);
    TMatrix kfinv = upper_triangular_inverse(t.kf);
    t.to_m[Basis::m] = identity_matrix(k);
    t.from_m[Basis::m] = identity_matrix(k);
    t.to_m[Basis::s] = t.kostka;
    t.from_m[Basis::s] = kinv;
    t.to_m[Basis::h] = transpose(t.kostka) * t.kostka;
    t.from_m[Basis::h] = kinv * transpose(kinv);
    t.to_m[Basis::ptilde] = kfinv * t.kostka;
    t.from_m[Basis::ptilde] = kinv * t.kf;
    t.to_m[Basis::hl] = transpose(t.kf) * t.kostka;
    t.from_m[Basis::hl] = kinv * transpose(kfinv);
    return t;
}

inline BoundedTables build_bounded(int n, int d) {
    BoundedTables t;
    t.parts = partitions(d, n - 1);
    for (std::size_t i = 0; i < t.parts.size(); ++i) t.index[t.parts[i]] = i;
    std::size_t k = t.parts.size();
    t.weak_kf.assign(k, std::vector<TPoly>(k));
    for (std::size_t i = 0; i < k; ++i) {
        NCore core = c_map(t.parts[i], n);
        for (std::size_t j = 0; j < k; ++j)
            for (const auto& a : enumerate_abc(core, t.parts[j])) t.weak_kf[i][j] += TPoly::monomial(1, static_cast<int>(a.n_cocharge()));
    }
    t.weak_kf_inv = upper_triangular_inverse(t.weak_kf);
    return t;
}

inline BoundedOneTables build_bounded_one(int n, int d) {
    BoundedOneTables t;
    t.parts = partitions(d, n - 1);
    for (std::size_t i = 0; i < t.parts.size(); ++i) t.index[t.parts[i]] = i;
    std::size_t k = t.parts.size();
    t.weak_k.assign(k, std::vector<TPoly>(k));
    std::map<Partition, std::size_t> by_core;
    for (std::size_t i = 0; i < k; ++i) by_core[c_map(t.parts[i], n).shape] = i;
    for (std::size_t j = 0; j < k; ++j)
        for (const auto& [shape, count] : weak_kostka_numbers(t.parts[j], n)) t.weak_k[by_core.at(shape)][j] = TPoly(count);
    t.weak_k_inv = upper_triangular_inverse(t.weak_k);
    return t;
}

}  // namespace detail

inline std::shared_ptr<const detail::FullTables> full_tables(int d) {
    return detail::full_cache().get(d, [d] { return detail::build_full(d); });
}

inline std::shared_ptr<const detail::BoundedTables> bounded_tables(int n, int d) {
    return detail::bounded_cache().get({n, d}, [n, d] { return detail::build_bounded(n, d); });
}

inline std::shared_ptr<const detail::BoundedOneTables> bounded_one_tables(int n, int d) {
    return detail::bounded_one_cache().get({n, d}, [n, d] { return detail::build_bounded_one(n, d); });
}

// K(t) and K^n(t) as matrices over the reverse-lex index of the degree.
inline TMatrix kostka_foulkes_matrix(int d) { return full_tables(d)->kf; }
inline TMatrix weak_kostka_foulkes_matrix(int n, int d) { return bounded_tables(n, d)->weak_kf; }

// ---------------------------------------------------------------- basis changes

namespace detail {

inline std::vector<TPoly> row_times(const std::vector<TPoly>& v, const TMatrix& a) {
    std::size_t cols = a.empty() ? 0 : a[0].size();
    std::vector<TPoly> out(cols);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < cols; ++j)
            if (!a[i][j].is_zero()) out[j] += v[i] * a[i][j];
    }
    return out;
}

inline std::vector<TPoly> dense(const SymFuncT& f, const std::map<Partition, std::size_t>& index) {
    std::vector<TPoly> v(index.size());
    for (const auto& [p, c] : f.terms) {
        auto it = index.find(p);
        if (it == index.end()) throw error(error::code::domain, "term " + to_string(p) + " lies outside the basis index");
        v[it->second] = c;
    }
    return v;
}

inline SymFuncT sparse(Basis b, int n, int d, const std::vector<TPoly>& v, const std::vector<Partition>& parts) {
    SymFuncT f;
    f.basis = b;
    f.n = n;
    f.degree = d;
    for (std::size_t i = 0; i < v.size(); ++i) f.add(parts[i], v[i]);
    return f;
}

}  // namespace detail

inline SymFuncT to_m(const SymFuncT& f) {
    auto full = full_tables(f.degree);
    if (!is_n_basis(f.basis)) {
        auto v = detail::row_times(detail::dense(f, full->index), full->to_m.at(f.basis));
        return detail::sparse(Basis::m, 0, f.degree, v, full->parts);
    }
    auto bt = bounded_tables(f.n, f.degree);
    auto coeffs = detail::dense(f, bt->index);
    std::vector<TPoly> inner;
    Basis via;
    if (f.basis == Basis::dualk) {
        inner = detail::row_times(coeffs, bt->weak_kf);
        via = Basis::ptilde;
    } else {
        inner = detail::row_times(coeffs, transpose(bt->weak_kf_inv));
        via = Basis::hl;
    }
    SymFuncT g;
    g.basis = via;
    g.degree = f.degree;
    for (std::size_t i = 0; i < inner.size(); ++i) g.add(bt->parts[i], inner[i]);
    return to_m(g);
}

// Re-expands f in `target`; n is required for dualk and kschur.
inline SymFuncT change_basis(const SymFuncT& f, Basis target, int n = 0) {
    SymFuncT mf = to_m(f);
    auto full = full_tables(f.degree);
    auto mv = detail::dense(mf, full->index);
    if (!is_n_basis(target)) {
        auto v = detail::row_times(mv, full->from_m.at(target));
        return detail::sparse(target, 0, f.degree, v, full->parts);
    }
    if (n < 2) throw error(error::code::out_of_range, "modulus required for this basis");
    auto bt = bounded_tables(n, f.degree);
    Basis via = target == Basis::dualk ? Basis::ptilde : Basis::hl;
    auto v = detail::row_times(mv, full->from_m.at(via));
    std::vector<TPoly> restricted(bt->parts.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        auto it = bt->index.find(full->parts[i]);
        if (it == bt->index.end()) throw error(error::code::domain, "function lies outside the n-bounded span");
        restricted[it->second] = v[i];
    }
    std::vector<TPoly> out = target == Basis::dualk ? detail::row_times(restricted, bt->weak_kf_inv)
                                                    : detail::row_times(restricted, transpose(bt->weak_kf));
    return detail::sparse(target, n, f.degree, out, bt->parts);
}

inline SymFuncT single(Basis b, const Partition& p, int n = 0) {
    SymFuncT f;
    f.basis = b;
    f.n = n;
    f.degree = size(p);
    f.add(p, 1);
    return f;
}

inline SymFuncT schur(const Partition& p) { return single(Basis::s, p); }
inline SymFuncT monomial(const Partition& p) { return single(Basis::m, p); }
inline SymFuncT complete(const Partition& p) { return single(Basis::h, p); }

inline SymFuncT ptilde_in_m(const Partition& mu) {
    require_partition(mu);
    return to_m(single(Basis::ptilde, mu));
}

inline SymFuncT hall_littlewood_in_m(const Partition& mu) {
    require_partition(mu);
    return to_m(single(Basis::hl, mu));
}

// <h_a, m_b> = delta
inline TPoly hall_pairing(const SymFuncT& f, const SymFuncT& g) {
    if (f.degree != g.degree) return TPoly();
    SymFuncT fh = f.basis == Basis::h ? f : change_basis(f, Basis::h);
    SymFuncT gm = g.basis == Basis::m ? g : to_m(g);
    TPoly acc;
    for (const auto& [p, c] : fh.terms) acc += c * gm.coeff(p);
    return acc;
}

// Dual k-Schur function of a core, in m. Without t, coefficients are ABC counts.
inline SymFuncT dual_kschur(const NCore& core, bool t_on) {
    Partition lam = c_inverse(core);
    int d = size(lam);
    if (t_on) return to_m(single(Basis::dualk, lam, core.n));
    SymFuncT f;
    f.basis = Basis::m;
    f.degree = d;
    for (const auto& mu : partitions(d, core.n - 1)) f.add(mu, TPoly(static_cast<std::int64_t>(enumerate_abc(core, mu).size())));
    return f;
}

// k-Schur function of a core: in H(x;0,t) with t, in h without.
inline SymFuncT kschur(const NCore& core, bool t_on) {
    Partition lam = c_inverse(core);
    int d = size(lam);
    SymFuncT f;
    f.n = 0;
    f.degree = d;
    if (t_on) {
        auto bt = bounded_tables(core.n, d);
        f.basis = Basis::hl;
        std::size_t i = bt->index.at(lam);
        for (std::size_t j = 0; j < bt->parts.size(); ++j) f.add(bt->parts[j], bt->weak_kf_inv[j][i]);
    } else {
        auto bt = bounded_one_tables(core.n, d);
        f.basis = Basis::h;
        std::size_t i = bt->index.at(lam);
        for (std::size_t j = 0; j < bt->parts.size(); ++j) f.add(bt->parts[j], bt->weak_k_inv[j][i]);
    }
    return f;
}

// ---------------------------------------------------------------- products

// Coefficient of m_nu in m_a * m_b.
inline std::int64_t monomial_product_coeff(const Partition& a, const Partition& b, const Partition& nu) {
    std::size_t len = nu.size();
    if (a.size() > len || b.size() > len || size(a) + size(b) != size(nu)) return 0;
    std::vector<int> alpha(a.begin(), a.end());
    alpha.resize(len, 0);
    std::sort(alpha.begin(), alpha.end());
    Partition target_b = b;
    std::int64_t count = 0;
    do {
        std::vector<int> beta(len);
        bool ok = true;
        for (std::size_t i = 0; i < len && ok; ++i) {
            beta[i] = nu[i] - alpha[i];
            if (beta[i] < 0) ok = false;
        }
        if (ok && normalized(beta) == target_b) ++count;
    } while (std::next_permutation(alpha.begin(), alpha.end()));
    return count;
}

inline SymFuncT multiply_m(const SymFuncT& f, const SymFuncT& g) {
    SymFuncT a = f.basis == Basis::m ? f : to_m(f);
    SymFuncT b = g.basis == Basis::m ? g : to_m(g);
    SymFuncT out;
    out.basis = Basis::m;
    out.degree = f.degree + g.degree;
    for (const auto& nu : partitions(out.degree))
        for (const auto& [p, c] : a.terms)
            for (const auto& [q, e] : b.terms) {
                std::int64_t k = monomial_product_coeff(p, q, nu);
                if (k) out.add(nu, c * e * TPoly(k));
            }
    return out;
}

// Drops m_lambda with lambda_1 >= n (the quotient onto the n-bounded span).
inline SymFuncT truncate_bounded(const SymFuncT& f, int n) {
    if (f.basis != Basis::m) throw error(error::code::domain, "truncation applies to the m basis");
    SymFuncT g = f;
    for (auto it = g.terms.begin(); it != g.terms.end();)
        if (!it->first.empty() && it->first[0] >= n) it = g.terms.erase(it);
        else ++it;
    return g;
}

}  // namespace affschub
