#pragma once

// Integer partitions stored as weakly decreasing vectors of positive parts.
// Row 1 is the bottom row; cell (i, j) sits in row i and column j.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affschub {

using Partition = std::vector<int>;

struct Cell {
    int row;
    int col;
    auto operator<=>(const Cell&) const = default;
};

class error : public std::runtime_error {
public:
    enum class code {
        invalid_letter,
        degenerate_transposition,
        non_reduced_word,
        no_action,
        out_of_range,
        domain,
        invalid_partition,
        overflow,
    };

    error(code c, const std::string& what) : std::runtime_error(what), code_(c) {}
    code kind() const noexcept { return code_; }

private:
    code code_;
};

inline int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline int part(const Partition& p, int i) {
    return (i >= 1 && i <= static_cast<int>(p.size())) ? p[i - 1] : 0;
}

inline bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

inline Partition normalized(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
}

inline void require_partition(const Partition& p) {
    if (!is_partition(p)) throw error(error::code::invalid_partition, "parts must be positive and weakly decreasing");
}

inline Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    c.assign(p[0], 0);
    for (int r : p)
        for (int j = 0; j < r; ++j) ++c[j];
    return c;
}

inline bool contains(const Partition& big, const Partition& small) {
    if (small.size() > big.size()) return false;
    for (std::size_t i = 0; i < small.size(); ++i)
        if (small[i] > big[i]) return false;
    return true;
}

// Multiset union of parts.
inline Partition union_of(const Partition& a, const Partition& b) {
    Partition u = a;
    u.insert(u.end(), b.begin(), b.end());
    return normalized(std::move(u));
}

inline Partition rectangle(int width, int height) {
    return Partition(height > 0 && width > 0 ? height : 0, width);
}

// Sum of (i-1) * p_i.
inline long long n_of(const Partition& p) {
    long long s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<long long>(i) * p[i];
    return s;
}

// True when a is dominated by b (a ⊴ b); sizes must agree.
inline bool dominated_by(const Partition& a, const Partition& b) {
    if (size(a) != size(b)) return false;
    long long sa = 0, sb = 0;
    std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa > sb) return false;
    }
    return true;
}

// Reverse-lexicographic order: larger partitions (lexicographically) first.
inline bool revlex_less(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

struct RevLex {
    bool operator()(const Partition& a, const Partition& b) const { return revlex_less(a, b); }
};

// All partitions of d with parts at most max_part, in reverse-lex order.
inline std::vector<Partition> partitions(int d, int max_part = -1) {
    std::vector<Partition> out;
    if (d < 0) return out;
    if (max_part < 0 || max_part > d) max_part = d;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(d, max_part);
    return out;
}

// Compositions of d into parts in [1, max_part].
inline std::vector<std::vector<int>> compositions(int d, int max_part) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= std::min(rest, max_part); ++p) {
            cur.push_back(p);
            rec(rest - p);
            cur.pop_back();
        }
    };
    rec(d);
    return out;
}

inline std::vector<Cell> cells(const Partition& p) {
    std::vector<Cell> out;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 1; j <= p[i]; ++j) out.push_back({static_cast<int>(i) + 1, j});
    return out;
}

inline std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner) {
    std::vector<Cell> out;
    for (std::size_t i = 0; i < outer.size(); ++i)
        for (int j = part(inner, static_cast<int>(i) + 1) + 1; j <= outer[i]; ++j)
            out.push_back({static_cast<int>(i) + 1, j});
    return out;
}

inline bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
    if (!contains(outer, inner)) return false;
    for (std::size_t i = 1; i < outer.size(); ++i)
        if (outer[i] > part(inner, static_cast<int>(i))) return false;
    return true;
}

inline int content(const Cell& c) { return c.col - c.row; }

inline int mod(long long a, int n) {
    long long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

inline int residue(const Cell& c, int n) { return mod(content(c), n); }

inline std::string to_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

}  // namespace affschub
