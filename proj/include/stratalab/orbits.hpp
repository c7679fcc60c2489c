#pragma once

// Partition calculus for nilpotent orbits of the classical Lie algebras:
// dual partitions, dominance, the sheet order on sl_n, B/C/D collapse,
// Lusztig-Spaltenstein induction and rigidity by exhaustive search.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stratalab/config.hpp"

#include "json.hpp"

namespace stratalab {

struct Partition {
    std::vector<int> parts; // weakly decreasing, all >= 1; empty = partition of 0

    Partition() = default;
    explicit Partition(std::vector<int> p);
    static Partition parse(const std::string& s); // accepts "3,2^2,1"

    int n() const;
    std::string str() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
};

Partition dual(const Partition& p);
bool dominance_leq(const Partition& p, const Partition& q); // throws on size mismatch
bool sheet_preceq(const Partition& p, const Partition& q);  // the Appendix order on sl_n

enum class Algebra { gl, sl, so, sp };

std::string algebra_str(Algebra a, int natural);
Algebra parse_algebra(const std::string& s);

// I/II marks for very even type-D orbits; 'U' = unresolved (from induction).
struct OrbitLabel {
    Algebra alg = Algebra::gl;
    int natural = 0; // dimension of the natural module
    Partition partition;
    std::optional<char> very_even_mark;
};

bool is_valid_orbit(Algebra alg, int natural, const Partition& p);
bool is_very_even(Algebra alg, int natural, const Partition& p);

// Greatest valid partition dominated by the candidate (B/C/D collapse).
OrbitLabel collapse(Algebra alg, int natural, const Partition& candidate);

// Standard Levi: gl blocks plus a residual classical factor of natural
// dimension `residual`.  For gl/sl ambient the residual is 0 and the blocks
// sum to n; for so/sp, 2*sum(blocks) + residual = natural.
struct ClassicalLevi {
    Algebra ambient = Algebra::gl;
    int natural = 0;
    std::vector<int> gl_blocks;
    int residual = 0;

    long long dimension() const;
    void validate() const;
};

// Lusztig-Spaltenstein induction from a Levi orbit (nu_i on the gl blocks,
// mu on the residual factor; mu must be absent iff the ambient is gl/sl).
OrbitLabel induce(const ClassicalLevi& levi, const std::vector<Partition>& nu,
                  const std::optional<Partition>& mu);

long long algebra_dimension(Algebra alg, int natural);
long long orbit_dimension(const OrbitLabel& o);

std::vector<Partition> all_partitions(int n);
std::vector<Partition> valid_partitions(Algebra alg, int natural);
std::vector<ClassicalLevi> proper_levis(Algebra alg, int natural);

// Every partition arising by induction from a proper Levi (cached).
const std::set<Partition>& induced_partitions(Algebra alg, int natural);

bool is_rigid(const OrbitLabel& o, const Config& cfg);
std::vector<Partition> rigid_partitions(Algebra alg, int natural, const Config& cfg);

// Pairs (rigid o1, non-rigid o2) with o2 strictly below o1 in the dominance
// (closure) order.  Very even partitions are ambiguous at the partition
// level (two orbits share the label) and are reported separately.
struct CounterexampleScan {
    std::vector<std::pair<Partition, Partition>> pairs;
    std::vector<std::pair<Partition, Partition>> flagged_very_even;
};
CounterexampleScan counterexample_scan(Algebra alg, int natural, const Config& cfg);

// Sheet-closure order on sl_n / gl_n labels (Appendix lemma).
bool sheet_closure_leq(const OrbitLabel& a, const OrbitLabel& b);

nlohmann::ordered_json orbit_to_json(const OrbitLabel& o, const Config& cfg);

// Hasse diagram of the dominance (closure) order on valid partitions, DOT.
std::string dominance_hasse_dot(Algebra alg, int natural);

} // namespace stratalab
