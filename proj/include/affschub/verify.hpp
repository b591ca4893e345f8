#pragma once

// Parallel verification sweeps. Each instance is independent; results are
// gathered in instance order, so output does not depend on scheduling.

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "abc.hpp"
#include "schubert.hpp"
#include "strips.hpp"

namespace affschub {

// ASK_THREADS caps the worker count; otherwise hardware concurrency.
inline unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ASK_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
}

template <class T, class F>
auto parallel_map(const std::vector<T>& items, F fn) -> std::vector<decltype(fn(items[0]))> {
    using R = decltype(fn(items[0]));
    std::vector<R> out(items.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex fail_mu;
    auto work = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            try {
                out[i] = fn(items[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(fail_mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    unsigned k = std::min<std::size_t>(worker_count(), std::max<std::size_t>(1, items.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < k; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return out;
}

struct SweepResult {
    std::string check;
    std::vector<int> moduli;
    int max_deg = 0;
    std::size_t instances = 0;
    std::vector<CheckReport> failures;
    bool ok() const { return failures.empty(); }
};

namespace detail {

inline SweepResult collect(std::string check, std::vector<int> moduli, int max_deg, const std::vector<CheckReport>& reports) {
    SweepResult res{std::move(check), std::move(moduli), max_deg, reports.size(), {}};
    for (const auto& r : reports)
        if (!r.match) res.failures.push_back(r);
    return res;
}

inline std::vector<NCore> cores_up_to(int n, int max_deg) {
    std::vector<NCore> out;
    for (int d = 0; d <= max_deg; ++d)
        for (auto& c : cores_of_degree(n, d)) out.push_back(std::move(c));
    return out;
}

}  // namespace detail

// Weak Pieri terms against horizontal strong strip targets, plus the psi/phi
// round trip and psi(S) = w_nu w_lambda^{-1} on every strip.
inline SweepResult prop_main_sweep(const std::vector<int>& moduli, int max_deg) {
    std::vector<std::pair<NCore, int>> items;
    for (int n : moduli)
        for (const auto& c : detail::cores_up_to(n, max_deg))
            for (int m = 1; m < n; ++m) items.emplace_back(c, m);
    auto reports = parallel_map(items, [](const std::pair<NCore, int>& it) {
        const auto& [lam, m] = it;
        CheckReport rep;
        rep.conjecture = "prop-main";
        rep.n = lam.n;
        rep.instance = "n=" + std::to_string(lam.n) + " m=" + std::to_string(m) + " core=" + to_string(lam.shape);
        detail::fill_report(rep, weak_pieri(m, lam).bounded_terms(), horizontal_pieri(m, lam).bounded_terms());
        AffinePermutation wl = window_of(lam);
        for (const auto& hs : horizontal_strong_strips_from(lam, lam.n - 1 - m)) {
            Word word = psi(hs);
            bool ok = static_cast<int>(word.size()) == m && from_word(word, lam.n) == window_of(hs.nu) * wl.inverse() &&
                      phi(word, lam) == hs;
            if (!ok) {
                rep.match = false;
                rep.diff.push_back("! psi/phi round trip fails at nu=" + to_string(hs.nu.shape));
            }
        }
        return rep;
    });
    return detail::collect("prop-main", moduli, max_deg, reports);
}

// |ABC(lam, alpha)| against the number of factorizations of w_lam of weight alpha;
// theta must be injective and land on factorizations of w_lam.
inline SweepResult theta_sweep(const std::vector<int>& moduli, int max_deg) {
    std::vector<std::pair<NCore, std::vector<int>>> items;
    for (int n : moduli)
        for (const auto& c : detail::cores_up_to(n, max_deg))
            for (const auto& alpha : compositions(degree(c), n - 1)) items.emplace_back(c, alpha);
    auto reports = parallel_map(items, [](const std::pair<NCore, std::vector<int>>& it) {
        const auto& [lam, alpha] = it;
        CheckReport rep;
        rep.conjecture = "theta-bijection";
        rep.n = lam.n;
        std::string a;
        for (std::size_t i = 0; i < alpha.size(); ++i) a += (i ? "," : "") + std::to_string(alpha[i]);
        rep.instance = "n=" + std::to_string(lam.n) + " core=" + to_string(lam.shape) + " alpha=(" + a + ")";
        auto abcs = enumerate_abc(lam, alpha);
        std::set<std::vector<Word>> images;
        AffinePermutation wl = window_of(lam);
        bool ok = true;
        for (const auto& abc : abcs) {
            auto th = abc.theta();
            AffinePermutation prod = AffinePermutation::identity(lam.n);
            for (std::size_t i = 0; i < th.size(); ++i) {
                if (static_cast<int>(th[i].size()) != alpha[alpha.size() - 1 - i]) ok = false;
                prod = prod * from_word(th[i], lam.n);
            }
            if (!(prod == wl)) ok = false;
            images.insert(th);
        }
        if (images.size() != abcs.size()) ok = false;
        std::map<Partition, std::int64_t, RevLex> lhs{{lam.shape, static_cast<std::int64_t>(abcs.size())}};
        std::map<Partition, std::int64_t, RevLex> rhs{{lam.shape, weak_kostka_number(lam, alpha)}};
        detail::fill_report(rep, lhs, rhs);
        if (!ok) {
            rep.match = false;
            rep.diff.push_back("! theta is not an injection onto factorizations");
        }
        return rep;
    });
    return detail::collect("theta-bijection", moduli, max_deg, reports);
}

inline SweepResult affine_monk_sweep(const std::vector<int>& moduli, int max_size) {
    std::vector<std::tuple<int, int, Partition>> items;
    for (int n : moduli)
        for (int d = 0; d <= max_size; ++d)
            for (const auto& lam : partitions(d, n - 1))
                for (int r = 1; r < n; ++r) items.emplace_back(n, r, lam);
    auto reports = parallel_map(items, [](const std::tuple<int, int, Partition>& it) {
        return affine_monk_check(std::get<1>(it), std::get<2>(it), std::get<0>(it));
    });
    return detail::collect("affine-monk", moduli, max_size, reports);
}

inline SweepResult rect_pieri_sweep(const std::vector<int>& moduli, int max_size) {
    std::vector<std::tuple<int, int, int, Partition>> items;
    for (int n : moduli)
        for (int d = 0; d <= max_size; ++d)
            for (const auto& lam : partitions(d, n - 1))
                for (int r = 2; r < n; ++r)
                    for (int b = 1; b < r; ++b) items.emplace_back(n, r, b, lam);
    auto reports = parallel_map(items, [](const std::tuple<int, int, int, Partition>& it) {
        return rect_pieri_check(std::get<1>(it), std::get<2>(it), std::get<3>(it), std::get<0>(it));
    });
    return detail::collect("rect-pieri", moduli, max_size, reports);
}

// Horizontal strong strips against ribbon strong strips with respect to n-1.
inline SweepResult length_one_sweep(const std::vector<int>& moduli, int max_deg) {
    std::vector<std::pair<NCore, int>> items;
    for (int n : moduli)
        for (const auto& c : detail::cores_up_to(n, max_deg))
            for (int m = 0; m < n; ++m) items.emplace_back(c, m);
    auto reports = parallel_map(items, [](const std::pair<NCore, int>& it) { return length_one_check(it.first, it.second); });
    return detail::collect("length-one", moduli, max_deg, reports);
}

}  // namespace affschub
