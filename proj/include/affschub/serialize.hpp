#pragma once

// JSON encodings (nlohmann) for the library types. Schemas are listed in README.md.

#include <json.hpp>

#include "abc.hpp"
#include "schubert.hpp"
#include "strips.hpp"
#include "symfun.hpp"

namespace affschub {

using json = nlohmann::json;

inline json partition_json(const Partition& p) { return json(std::vector<int>(p.begin(), p.end())); }

inline Partition partition_from_json(const json& j) {
    Partition p = j.get<std::vector<int>>();
    require_partition(p);
    return p;
}

// Plain coefficient array from t^0 upward, or {"valuation", "coeffs"} when negative powers occur.
inline void to_json(json& j, const TPoly& p) {
    if (p.is_polynomial()) {
        std::vector<std::int64_t> c(p.is_zero() ? 0 : p.high() + 1, 0);
        for (int e = 0; e < static_cast<int>(c.size()); ++e) c[e] = p.coeff(e);
        j = c;
    } else {
        j = json{{"valuation", p.low()}, {"coeffs", p.coeffs()}};
    }
}

inline void from_json(const json& j, TPoly& p) {
    if (j.is_array()) p = TPoly::from_coeffs(j.get<std::vector<std::int64_t>>(), 0);
    else if (j.is_number_integer()) p = TPoly(j.get<std::int64_t>());
    else p = TPoly::from_coeffs(j.at("coeffs").get<std::vector<std::int64_t>>(), j.at("valuation").get<int>());
}

inline void to_json(json& j, const NCore& c) { j = json{{"n", c.n}, {"shape", partition_json(c.shape)}}; }

inline void from_json(const json& j, NCore& c) { c = NCore(partition_from_json(j.at("shape")), j.at("n").get<int>()); }

inline void to_json(json& j, const AffinePermutation& w) { j = json{{"n", w.n()}, {"window", w.window()}}; }

inline void from_json(const json& j, AffinePermutation& w) {
    w = AffinePermutation(j.at("n").get<int>(), j.at("window").get<std::vector<std::int64_t>>());
}

inline json shape_list(const std::vector<NCore>& chain) {
    json a = json::array();
    for (const auto& c : chain) a.push_back(partition_json(c.shape));
    return a;
}

inline std::vector<NCore> shape_list_from_json(const json& j, int n) {
    std::vector<NCore> out;
    for (const auto& s : j) out.emplace_back(partition_from_json(s), n);
    return out;
}

inline void to_json(json& j, const StrongStrip& s) {
    j = json{{"n", s.chain.front().n}, {"chain", shape_list(s.chain)}, {"contents", s.contents}};
}

inline void from_json(const json& j, StrongStrip& s) {
    s.chain = shape_list_from_json(j.at("chain"), j.at("n").get<int>());
    s.contents = j.at("contents").get<std::vector<int>>();
}

inline void to_json(json& j, const HorizontalStrongStrip& s) {
    j = json{{"n", s.lambda.n},
             {"lambda", partition_json(s.lambda.shape)},
             {"nu", partition_json(s.nu.shape)},
             {"chain", shape_list(s.chain)},
             {"contents", s.contents},
             {"psi", psi(s)}};
}

inline void from_json(const json& j, HorizontalStrongStrip& s) {
    int n = j.at("n").get<int>();
    s.lambda = NCore(partition_from_json(j.at("lambda")), n);
    s.nu = NCore(partition_from_json(j.at("nu")), n);
    s.chain = shape_list_from_json(j.at("chain"), n);
    s.contents = j.at("contents").get<std::vector<int>>();
}

inline void to_json(json& j, const RibbonStrongStrip& s) {
    j = json{{"n", s.nu.n},
             {"lambda", partition_json(s.lambda)},
             {"r", s.r},
             {"nu", partition_json(s.nu.shape)},
             {"chain", shape_list(s.chain)},
             {"contents", s.contents}};
}

inline json abc_json(const ABC& a, ColumnTie tie = ColumnTie::increment) {
    json chain = json::array();
    for (const auto& c : a.lambda_chain()) chain.push_back(partition_json(c.shape));
    json mu = json::array();
    for (const auto& p : a.mu_chain()) mu.push_back(partition_json(p));
    return json{{"n", a.n()},
                {"weight", a.weight()},
                {"lambda_chain", chain},
                {"mu_chain", mu},
                {"extension", a.extension().columns},
                {"index_vectors", a.index_vectors(tie)},
                {"off", a.off()},
                {"cocharge", a.n_cocharge(tie)},
                {"theta", a.theta()}};
}

// Rebuilds an ABC from its lambda chain and weight; the strips are recomputed.
inline ABC abc_from_json(const json& j) {
    int n = j.at("n").get<int>();
    auto weight = j.at("weight").get<std::vector<int>>();
    auto chain = shape_list_from_json(j.at("lambda_chain"), n);
    if (chain.size() != weight.size() + 1) throw error(error::code::domain, "lambda chain and weight lengths disagree");
    std::vector<HorizontalStrongStrip> strips;
    for (std::size_t x = 0; x < weight.size(); ++x) {
        auto hs = horizontal_strong_strip(chain[x], chain[x + 1]);
        if (!hs || static_cast<int>(hs->chain.size()) - 1 != n - 1 - weight[x])
            throw error(error::code::domain, "lambda chain step is not a horizontal strong strip of the stated weight");
        strips.push_back(*hs);
    }
    return ABC(n, weight, chain, strips);
}

// Accepts the serialized names and the aliases "kschur" and "hl".
inline Basis basis_from_name(const std::string& s) {
    if (s == "kschur") return Basis::kschur;
    if (s == "hl") return Basis::hl;
    for (Basis b : {Basis::m, Basis::h, Basis::s, Basis::ptilde, Basis::hl, Basis::dualk, Basis::kschur})
        if (basis_name(b) == s) return b;
    throw error(error::code::domain, "unknown basis " + s);
}

inline void to_json(json& j, const SymFuncT& f) {
    json terms = json::array();
    for (const auto& [p, c] : f.terms) terms.push_back(json{{"index", partition_json(p)}, {"coeff", c}});
    j = json{{"basis", basis_name(f.basis)}, {"n", f.n}, {"degree", f.degree}, {"terms", terms}};
}

inline void from_json(const json& j, SymFuncT& f) {
    f = SymFuncT{};
    f.basis = basis_from_name(j.at("basis").get<std::string>());
    f.n = j.at("n").get<int>();
    f.degree = j.at("degree").get<int>();
    for (const auto& t : j.at("terms")) f.add(partition_from_json(t.at("index")), t.at("coeff").get<TPoly>());
}

inline void to_json(json& j, const SchubertExpansion& e) {
    json terms = json::array();
    for (const auto& [c, k] : e.terms)
        terms.push_back(json{{"core", partition_json(c.shape)}, {"bounded", partition_json(c_inverse(c))}, {"coeff", k}});
    j = json{{"n", e.n}, {"terms", terms}};
}

inline void from_json(const json& j, SchubertExpansion& e) {
    e = SchubertExpansion{};
    e.n = j.at("n").get<int>();
    for (const auto& t : j.at("terms")) e.add(NCore(partition_from_json(t.at("core")), e.n), t.at("coeff").get<std::int64_t>());
}

inline void to_json(json& j, const QuantumTerm& q) {
    j = json{{"perm", q.perm.oneline()}, {"q", q.d}, {"monomial", monomial_string(q.d)}};
}

inline void from_json(const json& j, QuantumTerm& q) {
    q.perm = FinitePermutation(j.at("perm").get<std::vector<int>>());
    q.d = j.at("q").get<std::vector<int>>();
}

inline json term_list(const std::vector<std::pair<Partition, std::int64_t>>& terms) {
    json a = json::array();
    for (const auto& [p, k] : terms) a.push_back(json{{"shape", partition_json(p)}, {"coeff", k}});
    return a;
}

inline void to_json(json& j, const CheckReport& r) {
    j = json{{"conjecture", r.conjecture},
             {"instance", r.instance},
             {"n", r.n},
             {"match", r.match},
             {"lhs", term_list(r.lhs)},
             {"rhs", term_list(r.rhs)},
             {"diff", r.diff}};
}

inline void from_json(const json& j, CheckReport& r) {
    r = CheckReport{};
    r.conjecture = j.at("conjecture").get<std::string>();
    r.instance = j.at("instance").get<std::string>();
    r.n = j.at("n").get<int>();
    r.match = j.at("match").get<bool>();
    for (const auto& t : j.at("lhs")) r.lhs.emplace_back(partition_from_json(t.at("shape")), t.at("coeff").get<std::int64_t>());
    for (const auto& t : j.at("rhs")) r.rhs.emplace_back(partition_from_json(t.at("shape")), t.at("coeff").get<std::int64_t>());
    r.diff = j.at("diff").get<std::vector<std::string>>();
}

// Rows and columns indexed by the same reverse-lex partition list.
inline json matrix_json(const std::vector<Partition>& index, const TMatrix& m) {
    json idx = json::array();
    for (const auto& p : index) idx.push_back(partition_json(p));
    json rows = json::array();
    for (const auto& row : m) rows.push_back(json(row));
    return json{{"index", idx}, {"rows", rows}};
}

}  // namespace affschub
