#pragma once

// The combinatorial side of spherical strata: the families T and M of
// subsets of the simple roots, the inclusion-maximum map M_Pi, stratum
// descriptors for involution classes with a maximum, and the grouping of
// involution classes into the unions underlying each stratum.

#include <vector>

#include "stratalab/weyl.hpp"

#include "json.hpp"

namespace stratalab {

struct TSubset {
    std::vector<int> pi;  // 1-based simple-root indices, sorted
    WeylElement w_pi;     // longest element of W_Pi
    bool in_m = false;
};

// All Pi with w0 and w_Pi agreeing on the subsystem Phi_Pi, sorted by
// (size, lex).  Membership is tested by direct action on every root of
// Phi_Pi.
std::vector<TSubset> compute_T(const WeylGroup& W);

// T with the in_m flags filled: Pi is in M when w0 w_Pi is the unique
// maximal-length element of its class and its Bruhat maximum.  The two
// predicates are computed separately; a class where they disagree is
// reported through the returned flag on the group (none is known).
std::vector<TSubset> compute_M(const WeylGroup& W, const Config& cfg);

// Inclusion-maximum of {Pi' in M : Pi' subset of Pi}; identity on M.
// Throws LemmaViolationError if the candidates have no maximum.
TSubset m_pi(const WeylGroup& W, const TSubset& pi, const std::vector<TSubset>& family);

// For Pi in T \ M: Pi \ M_Pi must consist of simple roots orthogonal to
// every root of Phi_{M_Pi} and to each other.  Throws InvalidInputError
// when called with Pi in M.
bool decomposition_check(const WeylGroup& W, const TSubset& pi,
                         const std::vector<TSubset>& family);

struct StratumDescriptor {
    WeylElement m_c;                 // class maximum, = w0 w_Pi for the Pi below
    std::vector<int> pi;             // the member of M, 1-based indices
    int dim_spherical = 0;           // length(m_c) + rk(1 - m_c)
    std::vector<ConjClass> w_union;  // involution classes grouped into this stratum
    bool flagged = false;            // some grouped class lacked a unique maximum
};

// One descriptor per element of M; every involution class is assigned to
// exactly one descriptor through the rule m_c = w0 w_{M_Sigma} applied to
// its maximal-length elements w0 w_Sigma.
std::vector<StratumDescriptor> spherical_strata(const WeylGroup& W, const Config& cfg);

// length + reflection rank; throws InvalidInputError on non-involutions.
int dimension_formula(const WeylGroup& W, const WeylElement& w);

nlohmann::ordered_json stratum_to_json(const WeylGroup& W, const StratumDescriptor& s);
std::string strata_dot(const WeylGroup& W, const std::vector<StratumDescriptor>& strata);

} // namespace stratalab
