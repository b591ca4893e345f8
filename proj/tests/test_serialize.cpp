#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affschub/serialize.hpp"

using namespace affschub;

namespace {

template <class T>
T round_trip(const T& x) {
    json j = x;
    return json::parse(j.dump()).get<T>();
}

}  // namespace

TEST_CASE("polynomials") {
    TPoly p = TPoly::from_coeffs({0, 1, 1});
    CHECK(json(p).dump() == "[0,1,1]");
    CHECK(round_trip(p) == p);
    TPoly q = TPoly::from_coeffs({-1, 2}, -2);
    CHECK(json(q) == json::parse(R"({"valuation":-2,"coeffs":[-1,2]})"));
    CHECK(round_trip(q) == q);
    CHECK(json(TPoly()).dump() == "[]");
    CHECK(json::parse("3").get<TPoly>() == TPoly(3));
}

TEST_CASE("cores and affine permutations") {
    NCore c({4, 1, 1}, 4);
    CHECK(json(c) == json::parse(R"({"n":4,"shape":[4,1,1]})"));
    CHECK(round_trip(c) == c);
    CHECK_THROWS_AS(json::parse(R"({"n":4,"shape":[4]})").get<NCore>(), error);
    AffinePermutation w = from_word({2, 1, 3, 0}, 4);
    CHECK(json(w) == json::parse(R"({"n":4,"window":[-2,1,4,7]})"));
    CHECK(round_trip(w) == w);
    CHECK_THROWS_AS(json::parse(R"({"n":3,"window":[1,1,4]})").get<AffinePermutation>(), error);
}

TEST_CASE("strips") {
    auto ss = strong_strips(NCore({3}, 4), NCore({4, 1, 1}, 4), 2);
    REQUIRE(ss.size() == 1);
    StrongStrip back = round_trip(ss[0]);
    CHECK(back.contents == ss[0].contents);
    CHECK(back.chain == ss[0].chain);
    for (const auto& h : horizontal_strong_strips_from(c_map({3, 1, 1}, 5), 2)) {
        json j = h;
        CHECK(j.at("psi").get<Word>() == psi(h));
        CHECK(round_trip(h) == h);
    }
    for (const auto& r : ribbon_strong_strip_chains({4, 2}, 3, 2, 5)) {
        json j = r;
        CHECK(j.at("contents").get<std::vector<int>>() == r.contents);
    }
}

TEST_CASE("ABCs rebuild from their lambda chain") {
    for (const auto& a : enumerate_abc(NCore({6, 3, 2, 1}, 6), {3, 3, 3, 1})) {
        json j = abc_json(a);
        ABC b = abc_from_json(json::parse(j.dump()));
        CHECK(abc_json(b) == j);
        CHECK(j.at("cocharge").get<long long>() == a.n_cocharge());
    }
    json bad = abc_json(enumerate_abc(NCore({4, 3}, 6), {3, 3, 1}).front());
    bad["weight"] = {3, 3};
    CHECK_THROWS_AS(abc_from_json(bad), error);
}

TEST_CASE("symmetric functions") {
    for (Basis b : {Basis::m, Basis::h, Basis::s, Basis::ptilde, Basis::hl}) {
        SymFuncT f = change_basis(single(Basis::hl, {2, 1}), b);
        CHECK(round_trip(f) == f);
        CHECK(basis_from_name(basis_name(b)) == b);
    }
    SymFuncT k = single(Basis::kschur, {2, 1}, 3);
    json j = k;
    CHECK(j.at("n") == 3);
    CHECK(round_trip(k) == k);
    CHECK(basis_from_name("kschur") == Basis::kschur);
    CHECK(basis_from_name("hl") == Basis::hl);
    CHECK_THROWS_AS(basis_from_name("q"), error);
}

TEST_CASE("Schubert expansions, quantum terms and reports") {
    SchubertExpansion e = strong_pieri_cohomology(2, NCore({3}, 4));
    CHECK(round_trip(e) == e);
    json ej = e;
    for (const auto& t : ej.at("terms")) CHECK(t.at("bounded") == partition_json(c_inverse(NCore(partition_from_json(t.at("core")), 4))));
    for (const auto& q : quantum_monk(3, FinitePermutation({4, 2, 5, 3, 1}))) {
        json j = q;
        CHECK(j.at("monomial") == monomial_string(q.d));
        CHECK(round_trip(q) == q);
    }
    CheckReport rep = affine_monk_check(3, {3, 2, 1, 1}, 5);
    CheckReport back = round_trip(rep);
    CHECK(back.match == rep.match);
    CHECK(back.lhs == rep.lhs);
    CHECK(back.rhs == rep.rhs);
    CHECK(back.diff == rep.diff);
    CHECK(back.instance == rep.instance);
}

TEST_CASE("matrices") {
    auto bt = bounded_tables(3, 3);
    json m = matrix_json(bt->parts, bt->weak_kf);
    CHECK(m.at("index").size() == bt->parts.size());
    CHECK(m.at("rows").size() == bt->parts.size());
    CHECK(m.at("rows")[0][0].get<TPoly>() == bt->weak_kf[0][0]);
}
