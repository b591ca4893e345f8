#pragma once

// Affine Bruhat countertableaux (ABCs): enumeration, the map to affine
// factorizations, extensions, offsets and n-cocharge.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "affine_weyl.hpp"
#include "cores.hpp"
#include "strips.hpp"

namespace affschub {

// How consecutive letters sharing a column move the index.
enum class ColumnTie {
    increment,  // treated like a westward step
    keep,       // treated like an eastward step
};

struct LetterRibbon {
    int letter;
    std::vector<Cell> cells;  // countertableau coordinates, tail first
    bool offset;              // lies above the letter's own row
};

struct Extension {
    int n = 0;
    std::vector<std::vector<int>> columns;  // columns[x-1]: sorted columns holding letter x

    std::vector<int> residues(int letter) const {
        std::vector<int> out;
        for (int c : columns[letter - 1]) out.push_back(mod(c - 1, n));
        std::sort(out.begin(), out.end());
        return out;
    }
};

class ABC {
public:
    ABC(int n, std::vector<int> weight, std::vector<NCore> lambda_chain, std::vector<HorizontalStrongStrip> strips)
        : n_(n), weight_(std::move(weight)), chain_(std::move(lambda_chain)), strips_(std::move(strips)) {}

    int n() const { return n_; }
    int rows() const { return static_cast<int>(weight_.size()); }
    const std::vector<int>& weight() const { return weight_; }
    const std::vector<NCore>& lambda_chain() const { return chain_; }
    const NCore& shape() const { return chain_.back(); }
    // strips()[x-1] joins lambda_chain()[x-1] to lambda_chain()[x].
    const std::vector<HorizontalStrongStrip>& strips() const { return strips_; }

    // mu^(0) ⊂ ... ⊂ mu^(r).
    std::vector<Partition> mu_chain() const {
        int r = rows();
        std::vector<Partition> out{chain_[r].shape};
        for (int p = 1; p <= r; ++p) {
            Partition mu;
            for (int q = 1; q <= p - 1; ++q) mu.push_back(part(chain_[r - q].shape, 1) + n_ - 1);
            const Partition& base = chain_[r - p].shape;
            mu.push_back(part(base, 1) + n_ - 1);
            mu.insert(mu.end(), base.begin(), base.end());
            out.push_back(std::move(mu));
        }
        return out;
    }

    // Letter of each cell of mu^(r)/mu^(0), indexed [row-1][col-1]; 0 marks the inner shape.
    std::vector<std::vector<int>> filling() const {
        auto mus = mu_chain();
        int r = rows();
        std::vector<std::vector<int>> out(mus.back().size());
        for (std::size_t b = 0; b < out.size(); ++b) out[b].assign(mus.back()[b], 0);
        for (int x = 1; x <= r; ++x)
            for (const auto& c : skew_cells(mus[x], mus[x - 1])) out[c.row - 1][c.col - 1] = r - x + 1;
        return out;
    }

    // Ribbons of every letter, from the strong chains of each step.
    std::vector<LetterRibbon> tiling() const {
        std::vector<LetterRibbon> out;
        int r = rows();
        for (int i = 1; i <= r; ++i) {
            const auto& hs = strips_[i - 1];
            int shift = r - i;
            for (std::size_t j = 1; j < hs.chain.size(); ++j) {
                const Partition& hi = hs.chain[j].shape;
                const Partition& lo = hs.chain[j - 1].shape;
                int len = part(hi, 1) - part(lo, 1);
                for (auto rib : split_ribbons(skew_cells(hi, lo), len)) {
                    bool off = false;
                    for (auto& c : rib) {
                        if (c.row > 1) off = true;
                        c.row += shift;
                    }
                    out.push_back({i, std::move(rib), off});
                }
            }
        }
        return out;
    }

    long long off() const {
        long long total = 0;
        for (const auto& rib : tiling())
            if (rib.offset) total += static_cast<long long>(rib.cells.size()) - 1;
        return total;
    }

    Extension extension() const {
        Extension ext;
        ext.n = n_;
        int r = rows();
        ext.columns.resize(r);
        for (int x = 1; x <= r; ++x) {
            const auto& hs = strips_[x - 1];
            auto& cols = ext.columns[x - 1];
            for (std::size_t j = 1; j < hs.chain.size(); ++j) {
                int lo = part(hs.chain[j - 1].shape, 1);
                int hi = part(hs.chain[j].shape, 1);
                for (int c = lo + 2; c <= hi; ++c) cols.push_back(c);
            }
            int prev = part(chain_[x - 1].shape, 1);
            int len = part(chain_[x].shape, 1) - prev + 1;
            for (int c = prev + n_ + 1; c <= prev + n_ - 1 + len; ++c) cols.push_back(c);
            std::sort(cols.begin(), cols.end());
        }
        return ext;
    }

    // Factors [v^r, ..., v^1] whose product left to right is w_shape.
    std::vector<Word> theta() const {
        std::vector<Word> out;
        for (int i = rows(); i >= 1; --i) {
            AffinePermutation v = window_of(chain_[i]) * window_of(chain_[i - 1]).inverse();
            auto word = is_cyclically_decreasing(v);
            if (!word) throw error(error::code::domain, "ABC step is not cyclically decreasing");
            out.push_back(*word);
        }
        return out;
    }

    // Index vectors of the successive standard sequences of ext(A).
    std::vector<std::vector<int>> index_vectors(ColumnTie tie = ColumnTie::increment) const {
        for (std::size_t i = 1; i < weight_.size(); ++i)
            if (weight_[i] > weight_[i - 1]) throw error(error::code::domain, "n-cocharge needs partition weight");
        Extension ext = extension();
        std::vector<std::vector<int>> left = ext.columns;
        std::vector<std::vector<int>> out;
        while (!left.empty() && !left[0].empty()) {
            std::vector<int> seq{left[0].back()};
            left[0].pop_back();
            for (std::size_t x = 1; x < left.size() && !left[x].empty(); ++x) {
                int from = mod(seq.back() - 1, n_);
                int pick = -1;
                for (int k = 1; k <= n_ && pick < 0; ++k) {
                    int want = mod(from - k, n_);
                    for (std::size_t q = 0; q < left[x].size(); ++q)
                        if (mod(left[x][q] - 1, n_) == want) {
                            pick = static_cast<int>(q);
                            break;
                        }
                }
                seq.push_back(left[x][pick]);
                left[x].erase(left[x].begin() + pick);
            }
            std::vector<int> idx{0};
            for (std::size_t k = 1; k < seq.size(); ++k) {
                bool step = seq[k] < seq[k - 1] || (seq[k] == seq[k - 1] && tie == ColumnTie::increment);
                idx.push_back(idx.back() + (step ? 1 : 0));
            }
            out.push_back(std::move(idx));
        }
        return out;
    }

    long long n_cocharge(ColumnTie tie = ColumnTie::increment) const {
        long long total = off();
        for (const auto& v : index_vectors(tie))
            for (int e : v) total += e;
        return total;
    }

    std::string pretty() const {
        auto fill = filling();
        std::string s;
        for (auto it = fill.rbegin(); it != fill.rend(); ++it) {
            for (std::size_t c = 0; c < it->size(); ++c) {
                if (c) s += ' ';
                s += (*it)[c] == 0 ? std::string(".") : std::to_string((*it)[c]);
            }
            s += '\n';
        }
        return s;
    }

private:
    int n_;
    std::vector<int> weight_;
    std::vector<NCore> chain_;
    std::vector<HorizontalStrongStrip> strips_;
};

inline void require_weight(const std::vector<int>& alpha, int n) {
    for (int a : alpha)
        if (a < 1 || a >= n) throw error(error::code::out_of_range, "weight parts must lie in [1, n-1]");
}

// ABC(lam, alpha), one per chain of horizontal strong strips ending at lam.
inline std::vector<ABC> enumerate_abc(const NCore& lam, const std::vector<int>& alpha) {
    int n = lam.n;
    require_weight(alpha, n);
    std::vector<ABC> out;
    int total = 0;
    for (int a : alpha) total += a;
    if (total != degree(lam)) return out;
    std::vector<NCore> chain{NCore({}, n)};
    std::vector<HorizontalStrongStrip> strips;
    auto rec = [&](auto&& self, std::size_t x) -> void {
        if (x == alpha.size()) {
            if (chain.back() == lam) out.emplace_back(n, alpha, chain, strips);
            return;
        }
        for (const auto& hs : horizontal_strong_strips_from(chain.back(), n - 1 - alpha[x])) {
            if (!contains(lam.shape, hs.nu.shape)) continue;
            chain.push_back(hs.nu);
            strips.push_back(hs);
            self(self, x + 1);
            chain.pop_back();
            strips.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace affschub
