// stratalab: Weyl-group strata combinatorics, pseudo-Levi sheet pairs and
// the partition calculus for nilpotent orbits, behind one command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "stratalab/errors.hpp"
#include "stratalab/orbits.hpp"
#include "stratalab/sheets.hpp"
#include "stratalab/strata.hpp"
#include "stratalab/verify.hpp"
#include "stratalab/weyl.hpp"

using namespace stratalab;

namespace {

struct TypeOpt {
    std::string type = "A";
    int rank = 1;

    char label() const {
        if (type.size() == 1) return type[0];
        if (type == "G2") return 'G';
        if (type == "F4") return 'F';
        if (type == "E6") return 'E';
        return '?';
    }
};

void add_type_options(CLI::App* cmd, TypeOpt& t) {
    cmd->add_option("--type", t.type, "type label: A,B,C,D,E,F,G")->required();
    cmd->add_option("--rank", t.rank, "rank")->required();
}

WeylGroup make_group(const TypeOpt& t) {
    return WeylGroup(RootSystem::build(t.label(), t.rank));
}

std::string fmt_word(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::string s;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) s += '.';
        s += "s" + std::to_string(word[i]);
    }
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weyl-group strata, sheets and nilpotent-orbit combinatorics"};
    app.require_subcommand(1);

    Config cfg;
    if (const char* env = std::getenv("STRATALAB_BUDGET")) {
        try {
            cfg.scan_budget = std::stoll(env);
        } catch (const std::exception&) {
            std::cerr << "bad STRATALAB_BUDGET value\n";
            return 2;
        }
    }
    std::string format = "table";
    app.add_option("--format", format, "output format: table|json|dot")->capture_default_str();

    // roots
    auto* roots = app.add_subcommand("roots", "root system data");
    auto* roots_show = roots->add_subcommand("show", "print a root system");
    TypeOpt roots_t;
    add_type_options(roots_show, roots_t);

    // weyl
    auto* weyl = app.add_subcommand("weyl", "Weyl group scans");
    auto* weyl_classes = weyl->add_subcommand("classes", "all conjugacy classes");
    auto* weyl_inv = weyl->add_subcommand("involutions", "involution classes");
    TypeOpt weyl_t;
    add_type_options(weyl_classes, weyl_t);
    add_type_options(weyl_inv, weyl_t);

    // strata
    auto* strata_cmd = app.add_subcommand("strata", "spherical strata");
    auto* strata_list = strata_cmd->add_subcommand("list", "strata with their class unions");
    auto* strata_dims = strata_cmd->add_subcommand("dims", "stratum dimension values");
    TypeOpt strata_t;
    add_type_options(strata_list, strata_t);
    add_type_options(strata_dims, strata_t);

    // orbits
    auto* orbits_cmd = app.add_subcommand("orbits", "nilpotent orbit partition calculus");
    std::string alg_name = "so";
    std::vector<std::string> parts_args;
    int natural = 0;
    auto* o_dual = orbits_cmd->add_subcommand("dual", "dual partition");
    o_dual->add_option("partition", parts_args, "partition, e.g. 3,2^2,1")->required();
    auto* o_dom = orbits_cmd->add_subcommand("dominance", "dominance comparison p <= q");
    o_dom->add_option("partitions", parts_args, "two partitions")->required()->expected(2);
    auto* o_pre = orbits_cmd->add_subcommand("preceq", "sheet order comparison p preceq q");
    o_pre->add_option("partitions", parts_args, "two partitions")->required()->expected(2);
    auto* o_col = orbits_cmd->add_subcommand("collapse", "B/C/D collapse of a candidate");
    o_col->add_option("--algebra", alg_name, "gl|sl|so|sp")->required();
    o_col->add_option("partition", parts_args, "candidate partition")->required();
    auto* o_rigid = orbits_cmd->add_subcommand("rigid", "rigidity of an orbit");
    o_rigid->add_option("--algebra", alg_name, "gl|sl|so|sp")->required();
    o_rigid->add_option("partition", parts_args, "orbit partition")->required();
    auto* o_scan = orbits_cmd->add_subcommand("scan", "rigid-above-non-rigid closure pairs");
    o_scan->add_option("--algebra", alg_name, "gl|sl|so|sp")->required();
    o_scan->add_option("--natural", natural,
                       "natural module dimension (omit to sweep the family)");
    auto* o_ind = orbits_cmd->add_subcommand("induce", "induce from a Levi");
    std::vector<int> blocks;
    std::vector<std::string> nu_args;
    std::string mu_arg;
    int residual = 0;
    o_ind->add_option("--algebra", alg_name, "gl|sl|so|sp")->required();
    o_ind->add_option("--natural", natural, "ambient natural dimension")->required();
    o_ind->add_option("--blocks", blocks, "gl block sizes")->delimiter(',');
    o_ind->add_option("--nu", nu_args, "one partition per block");
    o_ind->add_option("--residual", residual, "residual natural dimension");
    o_ind->add_option("--mu", mu_arg, "orbit on the residual factor");
    auto* o_hasse = orbits_cmd->add_subcommand("hasse", "closure order DOT");
    o_hasse->add_option("--algebra", alg_name, "gl|sl|so|sp")->required();
    o_hasse->add_option("--natural", natural, "natural module dimension")->required();

    // sheets
    auto* sheets_cmd = app.add_subcommand("sheets", "pseudo-Levi and sheet parametrization");
    auto* sh_list = sheets_cmd->add_subcommand("list", "sheet pairs (M, O)");
    auto* sh_pl = sheets_cmd->add_subcommand("pseudolevis", "pseudo-Levi classes");
    TypeOpt sheets_t;
    add_type_options(sh_list, sheets_t);
    add_type_options(sh_pl, sheets_t);
    auto* sh_poset = sheets_cmd->add_subcommand("poset", "sl_n sheet-closure poset");
    int poset_n = 4;
    sh_poset->add_option("--n", poset_n, "n for sl_n")->required();
    auto* sh_iso = sheets_cmd->add_subcommand("isolated", "extend a basis to full rank");
    TypeOpt iso_t;
    add_type_options(sh_iso, iso_t);
    std::vector<int> subset;
    sh_iso->add_option("--subset", subset, "extended-diagram nodes, 0 = alpha0")->required()->delimiter(',');

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "machine-check the lemmas");
    std::string check_name;
    bool check_all = false;
    TypeOpt verify_t;
    verify_cmd->add_option("--check", check_name, "check name");
    verify_cmd->add_flag("--all", check_all, "run every check on the default matrix");
    verify_cmd->add_option("--type", verify_t.type, "type label");
    verify_cmd->add_option("--rank", verify_t.rank, "rank");

    // let --format (and the budget) appear after the subcommand too
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (CLI::App* sub : a->get_subcommands({})) enable_fallthrough(sub);
    };
    enable_fallthrough(&app);

    CLI11_PARSE(app, argc, argv);

    try {
        if (roots_show->parsed()) {
            RootSystem rs = RootSystem::build(roots_t.label(), roots_t.rank);
            if (format == "json") {
                std::cout << rs.to_json().dump(2) << "\n";
            } else {
                std::cout << rs.name() << ": " << rs.root_count() << " roots, highest root [";
                const RootVector& h = rs.highest_root();
                for (size_t i = 0; i < h.size(); ++i) std::cout << (i ? "," : "") << h[i];
                std::cout << "]\n";
                for (int i = 0; i < rs.positive_count(); ++i) {
                    const RootVector& v = rs.root(i);
                    std::cout << "  ";
                    for (size_t k = 0; k < v.size(); ++k) std::cout << (k ? "," : "") << v[k];
                    std::cout << "\n";
                }
            }
            return 0;
        }

        if (weyl_classes->parsed() || weyl_inv->parsed()) {
            WeylGroup W = make_group(weyl_t);
            auto classes = weyl_inv->parsed() ? W.involution_classes(cfg) : W.all_classes(cfg);
            if (format == "json") {
                nlohmann::ordered_json out = nlohmann::ordered_json::array();
                for (const auto& c : classes) out.push_back(W.class_to_json(c));
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& c : classes) {
                    std::cout << "size " << c.elements.size() << "  lengths [" << c.min_length
                              << "," << c.max_length << "]";
                    if (c.maximum) std::cout << "  max " << fmt_word(W.reduced_word(*c.maximum));
                    std::cout << "\n";
                }
            }
            return 0;
        }

        if (strata_list->parsed() || strata_dims->parsed()) {
            WeylGroup W = make_group(strata_t);
            auto strata = spherical_strata(W, cfg);
            if (strata_dims->parsed()) {
                for (const auto& s : strata)
                    std::cout << fmt_word(W.reduced_word(s.m_c)) << "  dim " << s.dim_spherical
                              << "\n";
                return 0;
            }
            if (format == "json") {
                nlohmann::ordered_json out = nlohmann::ordered_json::array();
                for (const auto& s : strata) out.push_back(stratum_to_json(W, s));
                std::cout << out.dump(2) << "\n";
            } else if (format == "dot") {
                std::cout << strata_dot(W, strata);
            } else {
                std::cout << strata.size() << " strata\n";
                for (const auto& s : strata) {
                    std::cout << "m = " << fmt_word(W.reduced_word(s.m_c)) << "  dim "
                              << s.dim_spherical << "  classes " << s.w_union.size();
                    if (s.flagged) std::cout << "  [class without unique maximum]";
                    std::cout << "\n";
                }
            }
            return 0;
        }

        if (o_dual->parsed()) {
            std::cout << dual(Partition::parse(parts_args[0])).str() << "\n";
            return 0;
        }
        if (o_dom->parsed()) {
            std::cout << (dominance_leq(Partition::parse(parts_args[0]),
                                        Partition::parse(parts_args[1]))
                              ? "true"
                              : "false")
                      << "\n";
            return 0;
        }
        if (o_pre->parsed()) {
            std::cout << (sheet_preceq(Partition::parse(parts_args[0]),
                                       Partition::parse(parts_args[1]))
                              ? "true"
                              : "false")
                      << "\n";
            return 0;
        }
        if (o_col->parsed()) {
            Partition p = Partition::parse(parts_args[0]);
            std::cout << collapse(parse_algebra(alg_name), p.n(), p).partition.str() << "\n";
            return 0;
        }
        if (o_rigid->parsed()) {
            Partition p = Partition::parse(parts_args[0]);
            OrbitLabel o{parse_algebra(alg_name), p.n(), p, std::nullopt};
            if (format == "json") {
                std::cout << orbit_to_json(o, cfg).dump(2) << "\n";
            } else {
                std::cout << (is_rigid(o, cfg) ? "rigid" : "not rigid") << "\n";
            }
            return 0;
        }
        if (o_scan->parsed()) {
            Algebra alg = parse_algebra(alg_name);
            std::vector<int> sizes;
            if (natural > 0) {
                sizes.push_back(natural);
            } else {
                // sweep the whole family up to the rigidity budget
                for (int n = (alg == Algebra::sp) ? 2 : 1; n <= cfg.rigidity_bound;
                     n += (alg == Algebra::sp) ? 2 : 1)
                    sizes.push_back(n);
            }
            bool any = false;
            for (int n : sizes) {
                auto scan = counterexample_scan(alg, n, cfg);
                for (const auto& [o1, o2] : scan.pairs) {
                    any = true;
                    std::cout << algebra_str(alg, n) << ": rigid [" << o1.str()
                              << "] contains non-rigid [" << o2.str() << "] in its closure\n";
                }
                for (const auto& [o1, o2] : scan.flagged_very_even)
                    std::cout << algebra_str(alg, n) << ": flagged (very even): [" << o1.str()
                              << "] over [" << o2.str() << "]\n";
            }
            if (!any) std::cout << "no pairs\n";
            return 0;
        }
        if (o_ind->parsed()) {
            Algebra alg = parse_algebra(alg_name);
            ClassicalLevi levi{alg, natural, blocks, residual};
            std::vector<Partition> nu;
            for (const auto& s : nu_args) nu.push_back(Partition::parse(s));
            std::optional<Partition> mu;
            if (!mu_arg.empty()) mu = Partition::parse(mu_arg);
            OrbitLabel o = induce(levi, nu, mu);
            std::cout << o.partition.str();
            if (o.very_even_mark) std::cout << " (very even, tag unresolved)";
            std::cout << "\n";
            return 0;
        }
        if (o_hasse->parsed()) {
            std::cout << dominance_hasse_dot(parse_algebra(alg_name), natural);
            return 0;
        }

        if (sh_list->parsed() || sh_pl->parsed()) {
            WeylGroup W = make_group(sheets_t);
            if (sh_pl->parsed()) {
                auto classes = pseudo_levi_classes(W, cfg);
                if (format == "json") {
                    nlohmann::ordered_json out = nlohmann::ordered_json::array();
                    for (const auto& c : classes) out.push_back(pseudo_levi_to_json(c));
                    std::cout << out.dump(2) << "\n";
                } else {
                    for (const auto& c : classes) {
                        std::cout << "{";
                        for (size_t i = 0; i < c.rep_nodes.size(); ++i)
                            std::cout << (i ? "," : "") << c.rep_nodes[i];
                        std::cout << "} ";
                        for (const auto& t : c.component_types) std::cout << t.str() << " ";
                        std::cout << (c.is_levi ? "levi" : "non-levi") << " z=" << c.z_order
                                  << " members=" << c.members.size() << "\n";
                    }
                }
                return 0;
            }
            auto list = enumerate_sheet_pairs(W, cfg);
            if (format == "json") {
                nlohmann::ordered_json out = nlohmann::ordered_json::array();
                for (const auto& p : list.pairs) out.push_back(sheet_pair_to_json(p));
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << list.pairs.size() << " sheet pairs\n";
                for (const auto& p : list.pairs) {
                    std::cout << "M = {";
                    for (size_t i = 0; i < p.levi->rep_nodes.size(); ++i)
                        std::cout << (i ? "," : "") << p.levi->rep_nodes[i];
                    std::cout << "}  O = (";
                    for (size_t i = 0; i < p.orbits.size(); ++i)
                        std::cout << (i ? " | " : "") << p.levi->component_types[i].str() << ":"
                                  << p.orbits[i].partition.str();
                    std::cout << ")\n";
                }
            }
            return 0;
        }
        if (sh_poset->parsed()) {
            auto poset = sl_sheet_poset(poset_n, cfg);
            if (format == "dot") {
                std::cout << sl_sheet_poset_dot(poset);
            } else {
                std::cout << poset.sheets.size() << " sheets of sl_" << poset_n << "\n";
                for (auto [lo, hi] : poset.hasse)
                    std::cout << "[" << poset.sheets[lo].str() << "] < [" << poset.sheets[hi].str()
                              << "]\n";
            }
            return 0;
        }
        if (sh_iso->parsed()) {
            WeylGroup W = make_group(iso_t);
            IsolatedExtension ext = isolated_extension(W, subset, cfg);
            if (ext.levi_case) {
                std::cout << "levi: unipotent class exists\n";
                return 0;
            }
            std::vector<RootVector> basis;
            for (int node : ext.nodes) basis.push_back(W.roots().extended_node_root(node));
            std::cout << "extension {";
            for (size_t i = 0; i < ext.nodes.size(); ++i)
                std::cout << (i ? "," : "") << ext.nodes[i];
            std::cout << "} of type ";
            auto types = subsystem_type(W.roots(), basis);
            for (size_t i = 0; i < types.size(); ++i)
                std::cout << (i ? " x " : "") << types[i].str();
            std::cout << "\n";
            std::cout << "all extensions:\n";
            for (const auto& nodes : isolated_extensions(W.roots(), subset)) {
                std::vector<RootVector> b2;
                for (int node : nodes) b2.push_back(W.roots().extended_node_root(node));
                std::cout << "  {";
                for (size_t i = 0; i < nodes.size(); ++i) std::cout << (i ? "," : "") << nodes[i];
                std::cout << "} ";
                auto t2 = subsystem_type(W.roots(), b2);
                for (size_t i = 0; i < t2.size(); ++i) std::cout << (i ? " x " : "") << t2[i].str();
                std::cout << "\n";
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            std::vector<CheckResult> results;
            if (check_all) {
                results = run_all_checks(cfg);
            } else if (!check_name.empty()) {
                auto names = known_checks();
                if (std::find(names.begin(), names.end(), check_name) == names.end()) {
                    std::cerr << "unknown check '" << check_name << "'\n";
                    return 2;
                }
                if (check_needs_group(check_name)) {
                    if (verify_cmd->count("--type")) {
                        results.push_back(run_group_check(check_name, verify_t.label(),
                                                          verify_t.rank, cfg));
                    } else {
                        for (auto [label, rank] : default_scope(check_name))
                            results.push_back(run_group_check(check_name, label, rank, cfg));
                    }
                } else {
                    results.push_back(run_global_check(check_name, cfg));
                }
            } else {
                std::cerr << "verify needs --check NAME or --all\n";
                return 2;
            }
            bool all_pass = true;
            for (const auto& r : results) {
                std::cout << r.line() << "\n";
                all_pass = all_pass && r.pass;
            }
            std::cout << (all_pass ? "verify: all checks passed" : "verify: FAILURES") << " ("
                      << results.size() << " checks)\n";
            return all_pass ? 0 : 1;
        }
    } catch (const UnsupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
