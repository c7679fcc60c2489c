#pragma once

// Root systems as explicit integer data in the simple-root basis.
// Supported: A1-A8, B2-B6, C2-C6, D4-D7, G2, F4, E6 (Bourbaki numbering).
// The bilinear form is reconstructed from the Cartan matrix via the
// symmetrizers d_i, so every geometric question is answered in exact
// integer arithmetic.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stratalab/intlin.hpp"

#include "json.hpp"

namespace stratalab {

using RootVector = std::vector<int>; // coordinates in the simple-root basis

struct ComponentType {
    char label; // 'A'..'G'
    int rank;
    bool operator==(const ComponentType&) const = default;
    auto operator<=>(const ComponentType&) const = default;
    std::string str() const { return std::string(1, label) + std::to_string(rank); }
};

class RootSystem {
public:
    // Throws UnsupportedError outside the build matrix.
    static RootSystem build(char label, int rank);
    static bool supported(char label, int rank);

    char label() const { return label_; }
    int rank() const { return rank_; }
    std::string name() const { return std::string(1, label_) + std::to_string(rank_); }

    // Roots are indexed 0..count-1, positives first; negate(i) flips sign.
    int root_count() const { return static_cast<int>(roots_.size()); }
    int positive_count() const { return root_count() / 2; }
    const RootVector& root(int idx) const { return roots_[idx]; }
    int index_of(const RootVector& v) const; // -1 if not a root
    int negate(int idx) const;
    bool is_positive(int idx) const { return idx < positive_count(); }

    int simple_root_index(int i) const { return simple_idx_[i - 1]; } // i is 1-based
    const RootVector& highest_root() const { return highest_; }
    int alpha0_index() const; // index of -highest_root

    const Mat& cartan() const { return cartan_; }

    // Invariant symmetric form and coroot pairing <beta, gamma^vee>.
    long long form(const RootVector& x, const RootVector& y) const;
    long long pairing(const RootVector& beta, const RootVector& gamma) const;
    long long long_norm() const { return long_norm_; } // max (alpha,alpha) over roots

    // Extended-diagram node: 0 means alpha0 = -highest_root, 1..n the simples.
    RootVector extended_node_root(int node) const;

    // Smallest closed subsystem containing the given roots, as sorted indices.
    std::vector<int> subsystem_closure(const std::vector<int>& root_indices) const;

    // Weyl group order of this type.
    long long weyl_order() const;

    nlohmann::ordered_json to_json() const;

private:
    char label_ = 'A';
    int rank_ = 0;
    Mat cartan_;                      // cartan_(i,j) = <alpha_j, alpha_i^vee>
    std::vector<long long> sym_;      // d_i with d_i a_ij symmetric
    std::vector<RootVector> roots_;   // positives sorted by (height, lex), then negatives
    std::vector<int> simple_idx_;
    RootVector highest_;
    long long long_norm_ = 2;
    std::map<RootVector, int> index_;

    RootSystem() = default;
};

struct SubsystemBasis {
    std::vector<int> indices;              // extended-diagram nodes, 0 = alpha0
    std::vector<RootVector> resolved_roots;
};

// Resolve extended-diagram nodes; validates the index range.
SubsystemBasis make_extended_basis(const RootSystem& rs, std::vector<int> nodes);

// One irreducible component of a subsystem basis.
struct SubsystemComponent {
    ComponentType type;
    std::vector<RootVector> basis; // the basis roots lying in this component
};

// Decompose a basis into irreducible components and classify each.
// Throws InvalidInputError if the roots are not a valid base of finite type.
std::vector<SubsystemComponent> classify_components(const RootSystem& rs,
                                                    const std::vector<RootVector>& basis);

// Multiset of component types, sorted by (label, rank).
std::vector<ComponentType> subsystem_type(const RootSystem& rs,
                                          const std::vector<RootVector>& basis);

bool is_orthogonal(const RootSystem& rs, const RootVector& a, const RootVector& b);

} // namespace stratalab
