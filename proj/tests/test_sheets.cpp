#include "doctest.h"

#include <map>
#include <set>

#include "stratalab/errors.hpp"
#include "stratalab/sheets.hpp"

using namespace stratalab;

namespace {

Config cfg;

std::string types_str(const std::vector<ComponentType>& ts) {
    std::string s;
    for (const auto& t : ts) s += t.str() + " ";
    return s;
}

} // namespace

TEST_CASE("center component orders") {
    RootSystem d4 = RootSystem::build('D', 4);
    // basis = Delta spans the root lattice: trivial quotient
    std::vector<RootVector> delta;
    for (int i = 1; i <= 4; ++i) delta.push_back(d4.root(d4.simple_root_index(i)));
    CHECK(center_component_order(d4, delta) == 1);
    // the D2 x D2 fixture
    std::vector<RootVector> fixture = {{1, 0, 0, 0}, {1, 2, 1, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    CHECK(center_component_order(d4, fixture) == 2);
}

TEST_CASE("pseudo-Levi classes of D4") {
    WeylGroup d4(RootSystem::build('D', 4));
    auto classes = pseudo_levi_classes(d4, cfg);

    // the subset {0,1,3,4} generates the D2 x D2 = 4 x A1 pseudo-Levi
    bool found_d2d2 = false, found_full = false, found_empty = false;
    for (const auto& c : classes) {
        if (c.rep_nodes == std::vector<int>{0, 1, 3, 4}) {
            found_d2d2 = true;
            CHECK(c.component_types == std::vector<ComponentType>{{'A', 1}, {'A', 1}, {'A', 1}, {'A', 1}});
            CHECK_FALSE(c.is_levi);
            CHECK(c.z_order == 2);
        }
        if (c.component_types == std::vector<ComponentType>{{'D', 4}}) {
            found_full = true;
            CHECK(c.is_levi);
            // Delta itself is a member; the representative is lex-minimal
            bool has_delta = false;
            for (const auto& m : c.members)
                if (m == std::vector<int>{1, 2, 3, 4}) has_delta = true;
            CHECK(has_delta);
        }
        if (c.rep_nodes.empty()) {
            found_empty = true;
            CHECK(c.component_types.empty());
            CHECK(c.is_levi);
            CHECK(c.z_order == 1);
        }
    }
    CHECK(found_d2d2);
    CHECK(found_full);
    CHECK(found_empty);

    // same abstract type, different conjugacy class: A1 x A1 pairs split into
    // the same-support class {e_i +- e_j} and TWO disjoint-support flavors
    // (exchanged by triality, not by W)
    int a1a1 = 0;
    for (const auto& c : classes)
        if (c.component_types == std::vector<ComponentType>{{'A', 1}, {'A', 1}}) ++a1a1;
    CHECK(a1a1 == 3);
}

TEST_CASE("pseudo-Levi classes of C5 contain the isolated fixture") {
    WeylGroup c5(RootSystem::build('C', 5));
    auto classes = pseudo_levi_classes(c5, cfg);
    bool found = false;
    for (const auto& c : classes)
        for (const auto& m : c.members)
            if (m == std::vector<int>{0, 3, 5}) {
                found = true;
                CHECK(c.component_types ==
                      std::vector<ComponentType>{{'A', 1}, {'C', 1}, {'C', 1}});
                CHECK_FALSE(c.is_levi);
                CHECK(c.z_order == 2);
            }
    CHECK(found);
}

TEST_CASE("type A pseudo-Levi classes are counted by partitions") {
    // W-classes of subsystems of A_{n-1} from the extended (cycle) diagram
    // match partitions of n; cross-checks the sl_sheet_pair_count shortcut
    for (int n = 2; n <= 6; ++n) {
        WeylGroup W(RootSystem::build('A', n - 1));
        auto classes = pseudo_levi_classes(W, cfg);
        CHECK(static_cast<long long>(classes.size()) == sl_sheet_pair_count(n));
        for (const auto& c : classes) CHECK(c.is_levi);
        for (const auto& c : classes) CHECK(c.z_order == 1);
    }
}

TEST_CASE("exceptional pseudo-Levi tables") {
    // classical reference points: the maximal-rank subgroups and their
    // center component orders
    auto find = [&](const WeylGroup& W, const std::vector<ComponentType>& types) {
        for (const auto& c : pseudo_levi_classes(W, cfg))
            if (c.component_types == types) return std::make_pair(c.is_levi, c.z_order);
        return std::make_pair(false, -1LL);
    };

    WeylGroup g2(RootSystem::build('G', 2));
    CHECK(pseudo_levi_classes(g2, cfg).size() == 6);
    CHECK(find(g2, {{'A', 2}}) == std::make_pair(false, 3LL));          // SL3, center mu_3
    CHECK(find(g2, {{'A', 1}, {'A', 1}}) == std::make_pair(false, 2LL)); // A1 x ~A1

    WeylGroup f4(RootSystem::build('F', 4));
    CHECK(find(f4, {{'B', 4}}) == std::make_pair(false, 2LL));           // Spin9
    CHECK(find(f4, {{'A', 1}, {'C', 3}}) == std::make_pair(false, 2LL));
    CHECK(find(f4, {{'A', 2}, {'A', 2}}) == std::make_pair(false, 3LL)); // SL3 x SL3 / mu_3
    CHECK(find(f4, {{'A', 1}, {'A', 3}}) == std::make_pair(false, 4LL)); // the mu_4 case

    WeylGroup e6(RootSystem::build('E', 6));
    CHECK(find(e6, {{'A', 2}, {'A', 2}, {'A', 2}}) == std::make_pair(false, 3LL));
    CHECK(find(e6, {{'A', 1}, {'A', 5}}) == std::make_pair(false, 2LL));
    CHECK(find(e6, {{'D', 5}}) == std::make_pair(true, 1LL)); // a Levi, trivial torsion
}

TEST_CASE("McNinch-Sommers bound on classical types") {
    for (auto [label, rank] : std::vector<std::pair<char, int>>{
             {'A', 4}, {'B', 3}, {'B', 4}, {'C', 4}, {'C', 5}, {'D', 4}, {'D', 5}}) {
        WeylGroup W(RootSystem::build(label, rank));
        for (const auto& c : pseudo_levi_classes(W, cfg)) CHECK(c.z_order <= 2);
    }
}

TEST_CASE("sheet pairs of D4") {
    WeylGroup d4(RootSystem::build('D', 4));
    auto list = enumerate_sheet_pairs(d4, cfg);

    bool d2d2_trivial = false, full_rigid = false, torus = false;
    for (const auto& p : list.pairs) {
        if (p.levi->rep_nodes == std::vector<int>{0, 1, 3, 4}) {
            bool all_zero = true;
            for (const auto& o : p.orbits)
                if (!(o.partition == Partition::parse("1,1"))) all_zero = false;
            if (all_zero) d2d2_trivial = true;
        }
        if (p.levi->component_types == std::vector<ComponentType>{{'D', 4}} &&
            p.orbits.size() == 1 && p.orbits[0].partition == Partition::parse("3,2^2,1"))
            full_rigid = true;
        if (p.levi->rep_nodes.empty()) torus = true;
    }
    CHECK(d2d2_trivial);
    CHECK(full_rigid);
    CHECK(torus);

    // the pair with the rigid orbit [3,2^2,1] is unique: the two central
    // cosets that distinguish triples collapse at the pair level
    int rigid_pairs = 0;
    for (const auto& p : list.pairs)
        for (const auto& o : p.orbits)
            if (o.partition == Partition::parse("3,2^2,1")) ++rigid_pairs;
    CHECK(rigid_pairs == 1);

    // every orbit in every pair is rigid in its component
    for (const auto& p : list.pairs)
        for (const auto& o : p.orbits) CHECK(is_rigid(o, cfg));
}

TEST_CASE("sheet pairs of sl_n match the partition count") {
    for (int n = 2; n <= 7; ++n) {
        WeylGroup W(RootSystem::build('A', n - 1));
        auto list = enumerate_sheet_pairs(W, cfg);
        CHECK(static_cast<long long>(list.pairs.size()) == sl_sheet_pair_count(n));
        for (const auto& p : list.pairs)
            for (const auto& o : p.orbits)
                CHECK(o.partition == Partition(std::vector<int>(o.natural, 1)));
    }
}

TEST_CASE("conjugate components are not double-counted") {
    // C4 contains the pseudo-Levi C2 x C2 from both ends of the extended
    // diagram; sp(4) has two rigid orbits, and the component swap identifies
    // (a,b) with (b,a): 3 unordered pairs instead of 4
    WeylGroup c4(RootSystem::build('C', 4));
    auto list = enumerate_sheet_pairs(c4, cfg);
    int c2c2_pairs = 0;
    for (const auto& p : list.pairs)
        if (p.levi->component_types == std::vector<ComponentType>{{'C', 2}, {'C', 2}} &&
            p.levi->rep_nodes.size() == 4)
            ++c2c2_pairs;
    CHECK(c2c2_pairs == 3);

    // same for C3 x C3 inside C6 (sp(6) also has two rigid orbits)
    WeylGroup c6(RootSystem::build('C', 6));
    auto list6 = enumerate_sheet_pairs(c6, cfg);
    int c3c3_pairs = 0;
    for (const auto& p : list6.pairs)
        if (p.levi->component_types == std::vector<ComponentType>{{'C', 3}, {'C', 3}})
            ++c3c3_pairs;
    CHECK(c3c3_pairs == 3);
}

TEST_CASE("D4 sheet pair count") {
    // 12 pseudo-Levi classes; only the full D4 component carries more than
    // one rigid orbit (three of them), so pairs = 11 + 3
    WeylGroup d4(RootSystem::build('D', 4));
    auto list = enumerate_sheet_pairs(d4, cfg);
    CHECK(list.classes.size() == 12);
    CHECK(list.pairs.size() == 14);
}

TEST_CASE("sheet pairs reject exceptional ambient types") {
    WeylGroup g2(RootSystem::build('G', 2));
    CHECK_THROWS_AS(enumerate_sheet_pairs(g2, cfg), UnsupportedError);
    WeylGroup f4(RootSystem::build('F', 4));
    CHECK_THROWS_AS(enumerate_sheet_pairs(f4, cfg), UnsupportedError);
}

TEST_CASE("isolated extension fixtures from C5") {
    WeylGroup c5(RootSystem::build('C', 5));
    IsolatedExtension ext = isolated_extension(c5, {0, 3, 5}, cfg);
    CHECK_FALSE(ext.levi_case);
    CHECK(ext.nodes == std::vector<int>{0, 1, 2, 3, 5}); // lowest added indices

    // all extensions together realize both Sp4 x Sp6 and Sp2 x Sp8
    std::set<std::string> type_sets;
    for (const auto& nodes : isolated_extensions(c5.roots(), {0, 3, 5})) {
        std::vector<RootVector> basis;
        for (int node : nodes) basis.push_back(c5.roots().extended_node_root(node));
        type_sets.insert(types_str(subsystem_type(c5.roots(), basis)));
    }
    CHECK(type_sets.count("C2 C3 ") == 1); // Sp4 x Sp6
    CHECK(type_sets.count("C1 C4 ") == 1); // Sp2 x Sp8
}

TEST_CASE("isolated extension levi and full-rank cases") {
    WeylGroup d4(RootSystem::build('D', 4));
    // a subset of Delta is a Levi: flagged, no extension
    IsolatedExtension levi = isolated_extension(d4, {1, 3}, cfg);
    CHECK(levi.levi_case);
    CHECK(levi.nodes == std::vector<int>{1, 3});
    // full-rank non-Levi input returns itself
    IsolatedExtension fixed = isolated_extension(d4, {0, 1, 3, 4}, cfg);
    CHECK_FALSE(fixed.levi_case);
    CHECK(fixed.nodes == std::vector<int>{0, 1, 3, 4});
}

TEST_CASE("every non-Levi pseudo-Levi extends to full rank") {
    for (auto [label, rank] : std::vector<std::pair<char, int>>{
             {'B', 3}, {'C', 4}, {'D', 4}, {'D', 5}, {'G', 2}, {'F', 4}}) {
        WeylGroup W(RootSystem::build(label, rank));
        for (const auto& c : pseudo_levi_classes(W, cfg)) {
            if (c.is_levi || static_cast<int>(c.rep_nodes.size()) == rank) continue;
            auto all = isolated_extensions(W.roots(), c.rep_nodes);
            CHECK(!all.empty());
            for (const auto& nodes : all) CHECK(static_cast<int>(nodes.size()) == rank);
        }
    }
}

TEST_CASE("sl sheet poset") {
    auto poset = sl_sheet_poset(4, cfg);
    REQUIRE(poset.sheets.size() == 5);
    // descending lex: [4], [3,1], [2,2], [2,1,1], [1^4]
    CHECK(poset.sheets[0] == Partition::parse("4"));
    CHECK(poset.sheets[4] == Partition::parse("1,1,1,1"));

    // frozen Hasse diagram of the preceq order on partitions of 4:
    // 1^4 < 2,1,1; 1^4 < 2,2; 2,1,1 < 3,1; 2,2 < 3,1; 3,1 < 4
    std::set<std::pair<std::string, std::string>> edges;
    for (auto [lo, hi] : poset.hasse)
        edges.insert({poset.sheets[lo].str(), poset.sheets[hi].str()});
    CHECK(edges == std::set<std::pair<std::string, std::string>>{
                       {"1,1,1,1", "2,1,1"},
                       {"1,1,1,1", "2,2"},
                       {"2,1,1", "3,1"},
                       {"2,2", "3,1"},
                       {"3,1", "4"}});

    // the zero sheet is the unique minimum for every n
    for (int n = 2; n <= 9; ++n) {
        auto p = sl_sheet_poset(n, cfg);
        Partition zero(std::vector<int>(n, 1));
        for (const auto& s : p.sheets) CHECK(sheet_preceq(zero, s));
    }

    Config tiny;
    tiny.poset_bound = 5;
    CHECK_THROWS_AS(sl_sheet_poset(6, tiny), BudgetError);
}

TEST_CASE("poset DOT export") {
    auto poset = sl_sheet_poset(4, cfg);
    std::string dot = sl_sheet_poset_dot(poset);
    CHECK(dot.find("\"3,1\" -> \"2,2\"") != std::string::npos);
    CHECK(dot.find("\"2,2\" -> \"2,1,1\"") == std::string::npos); // incomparable
}

TEST_CASE("pseudo-Levi JSON shape") {
    WeylGroup d4(RootSystem::build('D', 4));
    auto classes = pseudo_levi_classes(d4, cfg);
    for (const auto& c : classes)
        if (c.rep_nodes == std::vector<int>{0, 1, 3, 4}) {
            auto j = pseudo_levi_to_json(c);
            CHECK(j["indices"] == nlohmann::ordered_json::array({0, 1, 3, 4}));
            CHECK(j["is_levi"] == false);
            CHECK(j["z_order"] == 2);
            CHECK(j["types"].size() == 4);
            CHECK(j.dump() ==
                  R"({"indices":[0,1,3,4],"types":[["A",1],["A",1],["A",1],["A",1]],)"
                  R"("is_levi":false,"z_order":2})");
        }
}

TEST_CASE("sheet pair JSON schema") {
    WeylGroup d4(RootSystem::build('D', 4));
    auto list = enumerate_sheet_pairs(d4, cfg);
    for (const auto& p : list.pairs) {
        auto j = sheet_pair_to_json(p);
        auto keys_of = [](const nlohmann::ordered_json& o) {
            std::vector<std::string> k;
            for (auto it = o.begin(); it != o.end(); ++it) k.push_back(it.key());
            return k;
        };
        CHECK(keys_of(j) == std::vector<std::string>{"levi", "orbits"});
        CHECK(keys_of(j["levi"]) ==
              std::vector<std::string>{"indices", "types", "is_levi", "z_order"});
        for (const auto& o : j["orbits"])
            CHECK(keys_of(o) == std::vector<std::string>{"component", "partition"});
    }
}
