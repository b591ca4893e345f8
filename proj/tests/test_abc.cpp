#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affschub/abc.hpp"
#include "affschub/symfun.hpp"
#include "oracles.hpp"

using namespace affschub;

namespace {

std::optional<ABC> find_abc(const NCore& lam, const std::vector<int>& weight, const std::vector<Partition>& chain) {
    for (const auto& a : enumerate_abc(lam, weight)) {
        bool same = true;
        for (std::size_t i = 0; i < chain.size(); ++i)
            if (a.lambda_chain()[i].shape != chain[i]) same = false;
        if (same) return a;
    }
    return std::nullopt;
}

oracle::Window as_window(const AffinePermutation& w) { return {w.window().begin(), w.window().end()}; }

}  // namespace

TEST_CASE("ABC of shape (4,3) and weight (3,3,1) for n = 6") {
    auto a = find_abc(NCore({4, 3}, 6), {3, 3, 1}, {{}, {3}, {4, 2}, {4, 3}});
    REQUIRE(a.has_value());
    CHECK(a->mu_chain() == std::vector<Partition>{{4, 3}, {9, 4, 2}, {9, 8, 3}, {9, 8, 5}});
    auto th = a->theta();
    REQUIRE(th.size() == 3);
    CHECK(th[0].size() == 1);
    CHECK(th[2].size() == 3);
}

TEST_CASE("extension and cocharge of an ABC of shape (6,3,2,1) for n = 6") {
    auto a = find_abc(NCore({6, 3, 2, 1}, 6), {3, 3, 3, 1}, {{}, {3}, {4, 2}, {6, 3, 2}, {6, 3, 2, 1}});
    REQUIRE(a.has_value());
    auto ext = a->extension();
    CHECK(ext.columns == std::vector<std::vector<int>>{{7, 8, 9}, {6, 7, 10}, {8, 11, 12}, {10}});
    CHECK(a->index_vectors() == std::vector<std::vector<int>>{{0, 1, 1, 2}, {0, 1, 1}, {0, 0, 1}});
    CHECK(a->off() == 1);
    CHECK(a->n_cocharge() == 8);
}

TEST_CASE("ABC of weight 1^7 and shape (3,3,1,1,1) for n = 4") {
    std::vector<int> ones(7, 1);
    auto a = find_abc(NCore({3, 3, 1, 1, 1}, 4), ones,
                      {{}, {1}, {2}, {2, 1}, {3, 1, 1}, {3, 2, 1}, {3, 3, 1, 1}, {3, 3, 1, 1, 1}});
    REQUIRE(a.has_value());
    CHECK(a->index_vectors() == std::vector<std::vector<int>>{{0, 0, 1, 1, 2, 2, 3}});
    CHECK(a->off() == 1);
    CHECK(a->n_cocharge() == 10);
}

TEST_CASE("weights are validated") {
    CHECK_THROWS_AS(enumerate_abc(NCore({2}, 3), {3}), error);
    CHECK_THROWS_AS(enumerate_abc(NCore({2}, 3), {0, 2}), error);
    CHECK(enumerate_abc(NCore({2}, 3), {1}).empty());
    auto comp = enumerate_abc(NCore({2, 1}, 4), {1, 2});
    REQUIRE_FALSE(comp.empty());
    CHECK_THROWS_AS(comp[0].n_cocharge(), error);
}

TEST_CASE("theta counts match factorizations of w_lambda") {
    for (int n = 3; n <= 4; ++n)
        for (int d = 0; d <= 5; ++d)
            for (const auto& lam : cores_of_degree(n, d)) {
                auto wl = as_window(window_of(lam));
                for (const auto& alpha : compositions(d, n - 1)) {
                    auto abcs = enumerate_abc(lam, alpha);
                    CHECK(static_cast<long long>(abcs.size()) == oracle::factorization_count(wl, alpha));
                    std::set<std::vector<Word>> images;
                    for (const auto& a : abcs) images.insert(a.theta());
                    CHECK(images.size() == abcs.size());
                }
            }
}

TEST_CASE("ABC counts are symmetric in the weight") {
    for (int n = 3; n <= 5; ++n)
        for (int d = 0; d <= 6; ++d)
            for (const auto& lam : cores_of_degree(n, d))
                for (const auto& alpha : compositions(d, n - 1)) {
                    std::vector<int> sorted = alpha;
                    std::sort(sorted.rbegin(), sorted.rend());
                    CHECK(enumerate_abc(lam, alpha).size() == enumerate_abc(lam, sorted).size());
                }
}

TEST_CASE("below degree n the n-cocharge is classical cocharge") {
    for (int n = 3; n <= 6; ++n)
        for (int d = 1; d < n; ++d)
            for (const auto& lam : partitions(d, n - 1))
                for (const auto& mu : partitions(d, n - 1)) {
                    std::vector<long long> ours, classical;
                    for (const auto& a : enumerate_abc(c_map(lam, n), mu)) {
                        CHECK(a.off() == 0);
                        ours.push_back(a.n_cocharge());
                    }
                    for (const auto& t : ssyt(lam, mu)) classical.push_back(cocharge(t));
                    std::sort(ours.begin(), ours.end());
                    std::sort(classical.begin(), classical.end());
                    CHECK(ours == classical);
                }
}

TEST_CASE("both column-tie readings agree on small cases") {
    for (int n = 3; n <= 4; ++n)
        for (int d = 0; d <= 6; ++d)
            for (const auto& lam : cores_of_degree(n, d))
                for (const auto& mu : partitions(d, n - 1))
                    for (const auto& a : enumerate_abc(lam, mu)) CHECK(a.n_cocharge(ColumnTie::increment) == a.n_cocharge(ColumnTie::keep));
}
