#pragma once

// The affine symmetric group in window notation [w(1), ..., w(n)],
// extended to all integers by w(i + rn) = w(i) + rn.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "partition.hpp"

namespace affschub {

using Word = std::vector<int>;

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

class AffinePermutation {
public:
    AffinePermutation() = default;

    AffinePermutation(int n, std::vector<std::int64_t> window) : n_(n), window_(std::move(window)) {
        if (n_ < 2) throw error(error::code::out_of_range, "modulus must be at least 2");
        if (static_cast<int>(window_.size()) != n_) throw error(error::code::domain, "window must have n entries");
        std::vector<bool> seen(n_, false);
        std::int64_t sum = 0;
        for (auto v : window_) {
            int r = mod(v, n_);
            if (seen[r]) throw error(error::code::domain, "window entries must be pairwise incongruent mod n");
            seen[r] = true;
            sum += v;
        }
        if (sum != static_cast<std::int64_t>(n_) * (n_ + 1) / 2)
            throw error(error::code::domain, "window entries must sum to n(n+1)/2");
    }

    static AffinePermutation identity(int n) {
        std::vector<std::int64_t> w(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        return AffinePermutation(n, std::move(w));
    }

    int n() const { return n_; }
    const std::vector<std::int64_t>& window() const { return window_; }

    std::int64_t operator()(std::int64_t i) const {
        std::int64_t q = floor_div(i - 1, n_);
        std::int64_t r = i - q * n_;
        return window_[r - 1] + q * n_;
    }

    AffinePermutation inverse() const {
        std::vector<std::int64_t> inv(n_);
        for (int i = 1; i <= n_; ++i) {
            std::int64_t v = window_[i - 1];
            std::int64_t q = floor_div(v - 1, n_);
            std::int64_t r = v - q * n_;
            inv[r - 1] = i - q * n_;
        }
        return from_trusted(n_, std::move(inv));
    }

    // (u * w)(i) = u(w(i)).
    friend AffinePermutation operator*(const AffinePermutation& u, const AffinePermutation& w) {
        if (u.n_ != w.n_) throw error(error::code::domain, "moduli differ");
        std::vector<std::int64_t> out(w.n_);
        for (int i = 0; i < w.n_; ++i) out[i] = u(w.window_[i]);
        return from_trusted(w.n_, std::move(out));
    }

    bool operator==(const AffinePermutation& o) const = default;
    auto operator<=>(const AffinePermutation& o) const = default;

    // s_i * w
    AffinePermutation left_simple(int i) const {
        std::vector<std::int64_t> out = window_;
        for (auto& v : out) {
            int r = mod(v, n_);
            if (r == mod(i, n_)) ++v;
            else if (r == mod(i + 1, n_)) --v;
        }
        return from_trusted(n_, std::move(out));
    }

    // w * s_i
    AffinePermutation right_simple(int i) const {
        i = mod(i, n_);
        std::vector<std::int64_t> out = window_;
        if (i == 0) {
            out[0] = window_[n_ - 1] - n_;
            out[n_ - 1] = window_[0] + n_;
        } else {
            std::swap(out[i - 1], out[i]);
        }
        return from_trusted(n_, std::move(out));
    }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < n_; ++i) {
            if (i) s += ",";
            s += std::to_string(window_[i]);
        }
        return s + "]";
    }

    static AffinePermutation from_trusted(int n, std::vector<std::int64_t> w) {
        AffinePermutation p;
        p.n_ = n;
        p.window_ = std::move(w);
        return p;
    }

private:
    int n_ = 0;
    std::vector<std::int64_t> window_;
};

inline void require_word(const Word& word, int n) {
    for (int a : word)
        if (a < 0 || a >= n) throw error(error::code::invalid_letter, "letter " + std::to_string(a) + " is not below n");
}

inline AffinePermutation from_word(const Word& word, int n) {
    require_word(word, n);
    AffinePermutation w = AffinePermutation::identity(n);
    for (int a : word) w = w.right_simple(a);
    return w;
}

// Affine inversion count.
inline std::int64_t length(const AffinePermutation& w) {
    std::int64_t len = 0;
    const auto& win = w.window();
    for (int i = 0; i < w.n(); ++i)
        for (int j = i + 1; j < w.n(); ++j) {
            std::int64_t q = floor_div(win[j] - win[i], w.n());
            len += q < 0 ? -q : q;
        }
    return len;
}

inline bool grassmannian_test(const AffinePermutation& w) {
    const auto& win = w.window();
    return std::is_sorted(win.begin(), win.end(), [](auto a, auto b) { return a <= b; });
}

inline AffinePermutation transposition(std::int64_t i, std::int64_t j, int n) {
    if (mod(i, n) == mod(j, n)) throw error(error::code::degenerate_transposition, "transposition indices are congruent mod n");
    if (i > j) std::swap(i, j);
    std::int64_t d = j - i;
    std::vector<std::int64_t> out(n);
    for (int k = 1; k <= n; ++k) {
        if (mod(k, n) == mod(i, n)) out[k - 1] = k + d;
        else if (mod(k, n) == mod(j, n)) out[k - 1] = k - d;
        else out[k - 1] = k;
    }
    return AffinePermutation::from_trusted(n, std::move(out));
}

// A reduced word, peeling left descents with the largest letter first.
inline Word reduced_word(const AffinePermutation& w) {
    Word word;
    AffinePermutation cur = w;
    std::int64_t len = length(cur);
    while (len > 0) {
        bool found = false;
        for (int i = cur.n() - 1; i >= 0 && !found; --i) {
            AffinePermutation next = cur.left_simple(i);
            std::int64_t l2 = length(next);
            if (l2 < len) {
                word.push_back(i);
                cur = next;
                len = l2;
                found = true;
            }
        }
        if (!found) throw error(error::code::domain, "no left descent found");
    }
    return word;
}

// Letters of a proper subset of Z/n, ordered so that i+1 precedes i,
// with the cycle cut just after the smallest missing residue.
inline Word cyclically_decreasing_word(const std::vector<int>& letters, int n) {
    std::vector<bool> in(n, false);
    for (int a : letters) {
        if (a < 0 || a >= n) throw error(error::code::invalid_letter, "letter out of range");
        if (in[a]) throw error(error::code::domain, "repeated letter");
        in[a] = true;
    }
    int anchor = -1;
    for (int i = 0; i < n; ++i)
        if (!in[i]) {
            anchor = i;
            break;
        }
    if (anchor < 0) throw error(error::code::domain, "a cyclically decreasing word omits some residue");
    Word word;
    for (int k = 1; k < n; ++k) {
        int a = mod(anchor - k, n);
        if (in[a]) word.push_back(a);
    }
    return word;
}

inline bool is_cyclically_decreasing_word(const Word& word, int n) {
    std::vector<int> pos(n, -1);
    for (std::size_t k = 0; k < word.size(); ++k) {
        int a = word[k];
        if (a < 0 || a >= n || pos[a] >= 0) return false;
        pos[a] = static_cast<int>(k);
    }
    if (static_cast<int>(word.size()) >= n) return false;
    for (int i = 0; i < n; ++i) {
        int up = mod(i + 1, n);
        if (pos[i] >= 0 && pos[up] >= 0 && pos[up] > pos[i]) return false;
    }
    return true;
}

inline std::optional<Word> is_cyclically_decreasing(const AffinePermutation& w) {
    int n = w.n();
    std::int64_t len = length(w);
    if (len >= n) return std::nullopt;
    int m = static_cast<int>(len);
    std::vector<int> pick(n, 0);
    std::fill(pick.begin(), pick.begin() + m, 1);
    std::prev_permutation(pick.begin(), pick.end());
    std::next_permutation(pick.begin(), pick.end());
    do {
        std::vector<int> letters;
        for (int i = 0; i < n; ++i)
            if (pick[i]) letters.push_back(i);
        Word word = cyclically_decreasing_word(letters, n);
        if (from_word(word, n) == w) return word;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return std::nullopt;
}

// Every cyclically decreasing element of length m, as canonical words.
inline std::vector<Word> cyclically_decreasing_words(int m, int n) {
    std::vector<Word> out;
    if (m < 0 || m >= n) return out;
    std::vector<int> pick(n, 0);
    std::fill(pick.begin(), pick.begin() + m, 1);
    do {
        std::vector<int> letters;
        for (int i = 0; i < n; ++i)
            if (pick[i]) letters.push_back(i);
        out.push_back(cyclically_decreasing_word(letters, n));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

}  // namespace affschub
