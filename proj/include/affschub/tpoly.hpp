#pragma once

// Laurent polynomials in t with overflow-checked int64 coefficients, and
// the small amount of matrix algebra the symmetric-function layer needs.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "partition.hpp"

namespace affschub {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw error(error::code::overflow, "integer overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw error(error::code::overflow, "integer overflow in multiplication");
    return r;
}

}  // namespace detail

class TPoly {
public:
    TPoly() = default;
    TPoly(std::int64_t c) {  // NOLINT: constants convert implicitly
        if (c != 0) coeffs_ = {c};
    }

    // sum_k coeffs[k] t^(low + k)
    static TPoly from_coeffs(std::vector<std::int64_t> coeffs, int low = 0) {
        TPoly p;
        p.coeffs_ = std::move(coeffs);
        p.low_ = low;
        p.trim();
        return p;
    }

    static TPoly monomial(std::int64_t c, int exp) { return from_coeffs({c}, exp); }

    bool is_zero() const { return coeffs_.empty(); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    std::int64_t coeff(int exp) const {
        int k = exp - low_;
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : 0;
    }

    bool is_polynomial() const { return is_zero() || low_ >= 0; }

    // Nonzero coefficients all positive.
    bool is_nonnegative() const {
        for (auto c : coeffs_)
            if (c < 0) return false;
        return true;
    }

    // A unit of Z[t, 1/t]: +-t^k.
    bool is_unit() const { return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1); }

    TPoly unit_inverse() const {
        if (!is_unit()) throw error(error::code::domain, "polynomial is not a unit");
        return monomial(coeffs_[0], -low_);
    }

    std::int64_t eval(std::int64_t v) const {
        if (is_zero()) return 0;
        if (low_ < 0 && v != 1 && v != -1) throw error(error::code::domain, "negative powers of t do not evaluate to an integer here");
        std::int64_t acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = detail::checked_add(detail::checked_mul(acc, v), *it);
        // v^low; when low < 0, v is +-1 and v^low = v^|low|
        std::int64_t scale = 1;
        for (int k = 0; k < (low_ < 0 ? -low_ : low_); ++k) scale = detail::checked_mul(scale, v);
        return detail::checked_mul(acc, scale);
    }

    friend TPoly operator+(const TPoly& a, const TPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int lo = std::min(a.low_, b.low_);
        int hi = std::max(a.high(), b.high());
        std::vector<std::int64_t> c(hi - lo + 1, 0);
        for (int e = lo; e <= hi; ++e) c[e - lo] = detail::checked_add(a.coeff(e), b.coeff(e));
        return from_coeffs(std::move(c), lo);
    }

    TPoly operator-() const {
        TPoly r = *this;
        for (auto& c : r.coeffs_) c = detail::checked_mul(c, -1);
        return r;
    }

    friend TPoly operator-(const TPoly& a, const TPoly& b) { return a + (-b); }

    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        if (a.is_zero() || b.is_zero()) return TPoly();
        std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] = detail::checked_add(c[i + j], detail::checked_mul(a.coeffs_[i], b.coeffs_[j]));
        }
        return from_coeffs(std::move(c), a.low_ + b.low_);
    }

    TPoly& operator+=(const TPoly& o) { return *this = *this + o; }
    TPoly& operator-=(const TPoly& o) { return *this = *this - o; }
    TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

    bool operator==(const TPoly& o) const { return low_ == o.low_ && coeffs_ == o.coeffs_; }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            std::int64_t c = coeffs_[k];
            if (c == 0) continue;
            int e = low_ + static_cast<int>(k);
            if (!s.empty()) s += c > 0 ? " + " : " - ";
            else if (c < 0) s += "-";
            std::int64_t a = c < 0 ? -c : c;
            if (e == 0) s += std::to_string(a);
            else {
                if (a != 1) s += std::to_string(a) + "*";
                s += "t";
                if (e != 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    void trim() {
        std::size_t first = 0;
        while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
        if (first == coeffs_.size()) {
            coeffs_.clear();
            low_ = 0;
            return;
        }
        while (coeffs_.back() == 0) coeffs_.pop_back();
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + first);
        low_ += static_cast<int>(first);
    }

    int low_ = 0;
    std::vector<std::int64_t> coeffs_;
};

using TMatrix = std::vector<std::vector<TPoly>>;

inline TMatrix identity_matrix(std::size_t k) {
    TMatrix m(k, std::vector<TPoly>(k));
    for (std::size_t i = 0; i < k; ++i) m[i][i] = 1;
    return m;
}

inline TMatrix transpose(const TMatrix& a) {
    if (a.empty()) return {};
    TMatrix t(a[0].size(), std::vector<TPoly>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline TMatrix operator*(const TMatrix& a, const TMatrix& b) {
    if (a.empty()) return {};
    std::size_t inner = b.size(), cols = b.empty() ? 0 : b[0].size();
    TMatrix c(a.size(), std::vector<TPoly>(cols));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j)
                if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline bool is_upper_triangular(const TMatrix& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!a[i][j].is_zero()) return false;
    return true;
}

// Inverse of an upper-triangular matrix whose diagonal entries are units +-t^k.
inline TMatrix upper_triangular_inverse(const TMatrix& a) {
    std::size_t k = a.size();
    if (!is_upper_triangular(a)) throw error(error::code::domain, "matrix is not upper triangular");
    std::vector<TPoly> dinv(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (!a[i][i].is_unit()) throw error(error::code::domain, "diagonal entry is not a unit: " + a[i][i].to_string());
        dinv[i] = a[i][i].unit_inverse();
    }
    TMatrix inv(k, std::vector<TPoly>(k));
    for (std::size_t j = 0; j < k; ++j) {
        inv[j][j] = dinv[j];
        for (std::size_t i = j; i-- > 0;) {
            TPoly acc;
            for (std::size_t l = i + 1; l <= j; ++l)
                if (!a[i][l].is_zero() && !inv[l][j].is_zero()) acc += a[i][l] * inv[l][j];
            inv[i][j] = -(dinv[i] * acc);
        }
    }
    return inv;
}

}  // namespace affschub
