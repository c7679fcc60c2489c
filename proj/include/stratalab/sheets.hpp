#pragma once

// Pseudo-Levi subsystems from the extended Dynkin diagram, classified up to
// Weyl-group conjugacy of their root sets, center component groups via Smith
// reduction, the (M, O) sheet parametrization for classical types, isolated
// extensions, and the sheet-closure poset of sl_n.

#include <string>
#include <vector>

#include "stratalab/orbits.hpp"
#include "stratalab/weyl.hpp"

#include "json.hpp"

namespace stratalab {

struct PseudoLeviClass {
    std::vector<int> rep_nodes;     // extended-diagram nodes of the representative
    std::vector<int> rep_roots;     // sorted root indices of the representative basis
    std::vector<ComponentType> component_types; // sorted by (label, rank)
    bool is_levi = false;
    long long z_order = 1;          // torsion of root lattice / basis span
    std::vector<std::vector<int>> members; // all extended subsets in the class
};

// All proper subsets of the n+1 extended-diagram nodes, grouped by
// W-conjugacy of the subsystems they generate.  Deterministic reps.
std::vector<PseudoLeviClass> pseudo_levi_classes(const WeylGroup& W, const Config& cfg);

// Torsion order of (root lattice)/(span of basis roots), by Smith reduction.
long long center_component_order(const RootSystem& rs, const std::vector<RootVector>& basis);

struct SheetPair {
    const PseudoLeviClass* levi = nullptr;
    std::vector<OrbitLabel> orbits; // one per component, component order = sorted basis
};

struct SheetPairList {
    std::vector<PseudoLeviClass> classes;
    std::vector<SheetPair> pairs; // levi pointers index into classes
};

// Theorem-level parametrization: every (pseudo-Levi class, rigid orbit
// tuple) pair, tuples taken up to the symmetry of conjugate components.
// Classical ambient types only.
SheetPairList enumerate_sheet_pairs(const WeylGroup& W, const Config& cfg);

// Number of sheet pairs of sl_n via the type-A bijection (valid for any n).
long long sl_sheet_pair_count(int n);

struct IsolatedExtension {
    bool levi_case = false;     // subsystem is conjugate into Delta
    std::vector<int> nodes;     // J~ (or J itself when |J| = rank or levi_case)
};

// Extend a non-Levi subsystem basis J inside the extended diagram to full
// rank; deterministic lowest-index choice.
IsolatedExtension isolated_extension(const WeylGroup& W, const std::vector<int>& j_nodes,
                                     const Config& cfg);
// All full-rank extensions of J, each linearly independent.
std::vector<std::vector<int>> isolated_extensions(const RootSystem& rs,
                                                  const std::vector<int>& j_nodes);

struct SlSheetPoset {
    int n = 0;
    std::vector<Partition> sheets;               // labels, descending lex
    std::vector<std::pair<int, int>> hasse;      // (lower, upper) index pairs
};

SlSheetPoset sl_sheet_poset(int n, const Config& cfg);
std::string sl_sheet_poset_dot(const SlSheetPoset& poset);

nlohmann::ordered_json pseudo_levi_to_json(const PseudoLeviClass& c);
nlohmann::ordered_json sheet_pair_to_json(const SheetPair& p);

} // namespace stratalab
