// Batch front end: tables, expansions, enumerations and verification sweeps.
// Exit status: 0 success, 1 usage error, 2 verification mismatch.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "affschub/serialize.hpp"
#include "affschub/verify.hpp"

using namespace affschub;

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "3,1,1"; "" or "-" is the empty partition.
Partition parse_partition(const std::string& s) {
    Partition p;
    if (s.empty() || s == "-") return p;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw usage_error("invalid partition syntax: " + s);
        }
        if (used != tok.size()) throw usage_error("invalid partition syntax: " + s);
        p.push_back(v);
    }
    if (!is_partition(p)) throw usage_error("not a weakly decreasing list of positive integers: " + s);
    return p;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw usage_error("invalid integer list: " + s);
        }
    }
    return out;
}

void require_n(int n) {
    if (n < 2) throw usage_error("--n must be at least 2");
}

struct ShapeArgs {
    std::string core, bounded;
};

void add_shape_options(CLI::App* app, ShapeArgs& a) {
    app->add_option("--core", a.core, "n-core, comma separated");
    app->add_option("--bounded", a.bounded, "partition with parts < n, mapped to its core");
}

NCore shape_of(const ShapeArgs& a, int n) {
    if (!a.core.empty() && !a.bounded.empty()) throw usage_error("give --core or --bounded, not both");
    if (!a.bounded.empty()) {
        Partition p = a.bounded == "-" ? Partition{} : parse_partition(a.bounded);
        if (!p.empty() && p[0] >= n) throw usage_error("bounded partition parts must be < n");
        return c_map(p, n);
    }
    Partition p = parse_partition(a.core);
    if (!is_ncore(p, n)) throw usage_error(to_string(p) + " is not a " + std::to_string(n) + "-core");
    return NCore(p, n);
}

void emit(const json& j, bool text, const std::string& text_form) {
    if (text) std::cout << text_form;
    else std::cout << j.dump(2) << "\n";
}

std::string expansion_text(const SchubertExpansion& e) {
    std::ostringstream os;
    for (const auto& [c, k] : e.terms) os << std::setw(4) << k << "  " << to_string(c.shape) << "  bounded " << to_string(c_inverse(c)) << "\n";
    return os.str();
}

std::string symfun_text(const SymFuncT& f) {
    std::ostringstream os;
    for (const auto& [p, c] : f.terms) os << std::left << std::setw(20) << to_string(p) << " " << c.to_string() << "\n";
    return os.str();
}

json sweep_json(const SweepResult& s) {
    json fails = json::array();
    for (const auto& r : s.failures) fails.push_back(r);
    return json{{"check", s.check}, {"moduli", s.moduli}, {"max_deg", s.max_deg},
                {"instances", s.instances}, {"failures", s.failures.size()}, {"match", s.ok()}, {"witnesses", fails}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"affine Schubert calculus toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool text = false;
    app.add_flag("--text", text, "aligned text instead of JSON");
    int exit_code = 0;

    // cores
    auto* cores_cmd = app.add_subcommand("cores", "list n-cores of a degree");
    int cores_n = 0, cores_deg = 0;
    cores_cmd->add_option("--n", cores_n)->required();
    cores_cmd->add_option("--deg", cores_deg)->required()->check(CLI::NonNegativeNumber);

    // strips
    auto* strips_cmd = app.add_subcommand("strips", "enumerate horizontal, strong or ribbon strong strips");
    int strips_n = 0, strips_m = -1, strips_r = 0, strips_b = -1;
    std::string strips_kind = "horizontal", strips_to, strips_rule = "horizontal", strips_anchor = "base";
    ShapeArgs strips_shape;
    strips_cmd->add_option("--n", strips_n)->required();
    strips_cmd->add_option("--kind", strips_kind)->check(CLI::IsMember({"horizontal", "strong", "ribbon"}));
    add_shape_options(strips_cmd, strips_shape);
    strips_cmd->add_option("--to", strips_to, "end core for strong strips");
    strips_cmd->add_option("--m", strips_m, "strip length");
    strips_cmd->add_option("--r", strips_r, "rectangle width for ribbon strips");
    strips_cmd->add_option("--b", strips_b, "ribbon strip length");
    strips_cmd->add_option("--rule", strips_rule)->check(CLI::IsMember({"horizontal", "increasing"}));
    strips_cmd->add_option("--anchor", strips_anchor)->check(CLI::IsMember({"base", "previous"}));

    // abc
    auto* abc_cmd = app.add_subcommand("abc", "enumerate ABCs with n-cocharge");
    int abc_n = 0;
    std::string abc_weight, abc_tie = "increment";
    ShapeArgs abc_shape;
    abc_cmd->add_option("--n", abc_n)->required();
    add_shape_options(abc_cmd, abc_shape);
    abc_cmd->add_option("--weight", abc_weight)->required();
    abc_cmd->add_option("--tie", abc_tie)->check(CLI::IsMember({"increment", "keep"}));

    // kf-table
    auto* kf_cmd = app.add_subcommand("kf-table", "Kostka-Foulkes or weak Kostka-Foulkes matrix");
    int kf_n = 0, kf_deg = 0;
    bool kf_weak = false;
    std::optional<std::int64_t> kf_at;
    kf_cmd->add_option("--n", kf_n);
    kf_cmd->add_option("--deg", kf_deg)->required()->check(CLI::NonNegativeNumber);
    kf_cmd->add_flag("--weak", kf_weak);
    kf_cmd->add_option("--at-t", kf_at);

    // expand
    auto* exp_cmd = app.add_subcommand("expand", "expand a basis element");
    int exp_n = 0;
    std::string exp_basis = "dualk", exp_into, exp_part;
    std::optional<std::int64_t> exp_at;
    bool exp_plain = false;
    ShapeArgs exp_shape;
    exp_cmd->add_option("--basis", exp_basis)->check(CLI::IsMember({"dualk", "kschur", "k", "ptilde", "hl", "H0t", "s", "h", "m"}));
    exp_cmd->add_option("--n", exp_n);
    add_shape_options(exp_cmd, exp_shape);
    exp_cmd->add_option("--partition", exp_part, "index for the classical bases");
    exp_cmd->add_option("--into", exp_into)->check(CLI::IsMember({"m", "h", "s", "ptilde", "hl", "H0t", "dualk", "kschur", "k"}));
    exp_cmd->add_option("--at-t", exp_at);
    exp_cmd->add_flag("--t-off", exp_plain, "the t = 1 function computed directly");

    // pieri
    auto* pieri_cmd = app.add_subcommand("pieri", "weak, horizontal and strong Pieri rules");
    int pieri_n = 0, pieri_m = 0;
    ShapeArgs pieri_shape;
    pieri_cmd->add_option("--n", pieri_n)->required();
    add_shape_options(pieri_cmd, pieri_shape);
    pieri_cmd->add_option("--m", pieri_m)->required();

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "verification sweeps");
    std::string ver_which;
    int ver_n = 0, ver_max_n = 0, ver_deg = 6;
    ver_cmd->add_option("check", ver_which)->required()->check(
        CLI::IsMember({"affine-monk", "rect-pieri", "prop-main", "theta-bijection", "length-one"}));
    ver_cmd->add_option("--n", ver_n, "single modulus");
    ver_cmd->add_option("--max-n", ver_max_n, "all moduli 2..max-n");
    ver_cmd->add_option("--max-deg", ver_deg, "degree (or size of lambda) bound")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*cores_cmd) {
            require_n(cores_n);
            json arr = json::array();
            std::ostringstream os;
            for (const auto& c : cores_of_degree(cores_n, cores_deg)) {
                Partition b = c_inverse(c);
                arr.push_back(json{{"n", c.n}, {"shape", partition_json(c.shape)}, {"bounded", partition_json(b)}, {"word", core_to_word(c)}});
                os << std::left << std::setw(24) << to_string(c.shape) << " bounded " << to_string(b) << "\n";
            }
            emit(arr, text, os.str());
        } else if (*strips_cmd) {
            require_n(strips_n);
            json arr = json::array();
            std::ostringstream os;
            if (strips_kind == "horizontal") {
                if (strips_m < 0 || strips_m >= strips_n) throw usage_error("--m must satisfy 0 <= m < n");
                NCore lam = shape_of(strips_shape, strips_n);
                for (const auto& hs : horizontal_strong_strips_from(lam, strips_m)) {
                    arr.push_back(hs);
                    os << to_string(hs.nu.shape) << "  contents";
                    for (int c : hs.contents) os << " " << c;
                    os << "\n";
                }
            } else if (strips_kind == "strong") {
                NCore nu = shape_of(strips_shape, strips_n);
                if (strips_to.empty()) throw usage_error("--to is required for strong strips");
                NCore gamma = shape_of(ShapeArgs{strips_to, ""}, strips_n);
                int m = degree(gamma) - degree(nu);
                if (strips_m >= 0 && strips_m != m) throw usage_error("--m disagrees with the degree difference");
                for (const auto& s : strong_strips(nu, gamma, m)) {
                    arr.push_back(s);
                    os << "contents";
                    for (int c : s.contents) os << " " << c;
                    os << "\n";
                }
                json chains = json::array();
                for (const auto& ch : saturated_chains(nu, gamma)) chains.push_back(shape_list(ch));
                arr = json{{"strips", arr}, {"saturated_chains", chains}};
            } else {
                if (strips_shape.bounded.empty()) throw usage_error("ribbon strips take --bounded");
                Partition lam = parse_partition(strips_shape.bounded);
                if (strips_r < 1 || strips_r >= strips_n) throw usage_error("--r must satisfy 1 <= r < n");
                if (strips_b < 0) throw usage_error("--b is required");
                auto rule = strips_rule == "horizontal" ? RibbonStripRule::horizontal_ribbon : RibbonStripRule::increasing_contents;
                auto anchor = strips_anchor == "base" ? HeadAnchor::base_shape : HeadAnchor::previous_shape;
                for (const auto& rs : ribbon_strong_strip_chains(lam, strips_r, strips_b, strips_n, rule, anchor)) {
                    arr.push_back(rs);
                    os << to_string(rs.nu.shape) << "  bounded " << to_string(c_inverse(rs.nu)) << "\n";
                }
            }
            emit(arr, text, os.str());
        } else if (*abc_cmd) {
            require_n(abc_n);
            NCore lam = shape_of(abc_shape, abc_n);
            auto weight = parse_ints(abc_weight);
            for (int a : weight)
                if (a < 1 || a >= abc_n) throw usage_error("weight parts must lie in [1, n-1]");
            ColumnTie tie = abc_tie == "keep" ? ColumnTie::keep : ColumnTie::increment;
            bool partition_weight = is_partition(weight);
            json arr = json::array();
            std::ostringstream os;
            for (const auto& a : enumerate_abc(lam, weight)) {
                if (partition_weight) {
                    arr.push_back(abc_json(a, tie));
                    os << a.pretty() << "cocharge " << a.n_cocharge(tie) << "\n\n";
                } else {
                    json chain = json::array();
                    for (const auto& c : a.lambda_chain()) chain.push_back(partition_json(c.shape));
                    arr.push_back(json{{"n", a.n()}, {"weight", a.weight()}, {"lambda_chain", chain}, {"theta", a.theta()}});
                    os << a.pretty() << "\n";
                }
            }
            emit(arr, text, os.str());
        } else if (*kf_cmd) {
            std::vector<Partition> index;
            TMatrix mat;
            if (kf_weak) {
                require_n(kf_n);
                auto bt = bounded_tables(kf_n, kf_deg);
                index = bt->parts;
                mat = bt->weak_kf;
            } else {
                auto ft = full_tables(kf_deg);
                index = ft->parts;
                mat = ft->kf;
            }
            if (kf_at)
                for (auto& row : mat)
                    for (auto& c : row) c = TPoly(c.eval(*kf_at));
            json j = matrix_json(index, mat);
            j["weak"] = kf_weak;
            j["degree"] = kf_deg;
            if (kf_weak) j["n"] = kf_n;
            std::ostringstream os;
            for (std::size_t i = 0; i < index.size(); ++i) {
                os << std::left << std::setw(16) << to_string(index[i]);
                for (const auto& c : mat[i]) os << " " << std::setw(10) << c.to_string();
                os << "\n";
            }
            emit(j, text, os.str());
        } else if (*exp_cmd) {
            SymFuncT f;
            Basis b = basis_from_name(exp_basis);
            if (is_n_basis(b)) {
                require_n(exp_n);
                NCore core = shape_of(exp_shape, exp_n);
                f = b == Basis::dualk ? dual_kschur(core, !exp_plain) : kschur(core, !exp_plain);
            } else {
                f = single(b, parse_partition(exp_part));
            }
            if (!exp_into.empty()) {
                Basis target = basis_from_name(exp_into);
                if (is_n_basis(target)) require_n(exp_n);
                f = change_basis(f, target, exp_n);
            } else if (b != Basis::kschur && b != Basis::m) {
                f = to_m(f);
            }
            if (exp_at) f = at_t(f, *exp_at);
            emit(json(f), text, symfun_text(f));
        } else if (*pieri_cmd) {
            require_n(pieri_n);
            if (pieri_m < 1 || pieri_m >= pieri_n) throw usage_error("--m must satisfy 1 <= m < n");
            NCore lam = shape_of(pieri_shape, pieri_n);
            auto weak = weak_pieri(pieri_m, lam);
            auto hor = horizontal_pieri(pieri_m, lam);
            auto strong = strong_pieri_cohomology(pieri_m, lam);
            json j{{"n", pieri_n}, {"m", pieri_m}, {"core", partition_json(lam.shape)},
                   {"weak", weak}, {"horizontal", hor}, {"strong_cohomology", strong}, {"agreement", weak == hor}};
            std::ostringstream os;
            os << "weak\n" << expansion_text(weak) << "horizontal\n" << expansion_text(hor) << "strong (cohomology)\n"
               << expansion_text(strong) << "agreement " << (weak == hor ? "true" : "false") << "\n";
            emit(j, text, os.str());
            if (!(weak == hor)) exit_code = 2;
        } else if (*ver_cmd) {
            std::vector<int> moduli;
            if (ver_n && ver_max_n) throw usage_error("give --n or --max-n, not both");
            if (ver_n) {
                require_n(ver_n);
                moduli = {ver_n};
            } else {
                int top = ver_max_n ? ver_max_n : 4;
                require_n(top);
                for (int n = 2; n <= top; ++n) moduli.push_back(n);
            }
            SweepResult res;
            if (ver_which == "prop-main") res = prop_main_sweep(moduli, ver_deg);
            else if (ver_which == "theta-bijection") res = theta_sweep(moduli, ver_deg);
            else if (ver_which == "affine-monk") res = affine_monk_sweep(moduli, ver_deg);
            else if (ver_which == "rect-pieri") res = rect_pieri_sweep(moduli, ver_deg);
            else res = length_one_sweep(moduli, ver_deg);
            std::ostringstream os;
            os << res.check << ": " << res.instances << " instances, " << res.failures.size() << " failures\n";
            for (const auto& r : res.failures) {
                os << "  " << r.instance << "\n";
                for (const auto& d : r.diff) os << "    " << d << "\n";
            }
            emit(sweep_json(res), text, os.str());
            if (!res.ok()) exit_code = 2;
        }
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
