#include "stratalab/strata.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "stratalab/errors.hpp"

namespace stratalab {

namespace {

// roots of the parabolic subsystem Phi_Pi: support contained in Pi
std::vector<int> parabolic_roots(const RootSystem& rs, const std::vector<int>& pi) {
    std::vector<bool> in_pi(rs.rank() + 1, false);
    for (int i : pi) in_pi[i] = true;
    std::vector<int> out;
    for (int idx = 0; idx < rs.root_count(); ++idx) {
        const RootVector& v = rs.root(idx);
        bool ok = true;
        for (int k = 0; k < rs.rank(); ++k)
            if (v[k] != 0 && !in_pi[k + 1]) { ok = false; break; }
        if (ok) out.push_back(idx);
    }
    return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

std::vector<TSubset> compute_T(const WeylGroup& W) {
    const int n = W.rank();
    const WeylElement w0 = W.longest_element();
    std::vector<TSubset> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> pi;
        for (int i = 1; i <= n; ++i)
            if (mask & (1u << (i - 1))) pi.push_back(i);
        WeylElement wpi = W.parabolic_longest(pi);
        bool member = true;
        for (int idx : parabolic_roots(W.roots(), pi))
            if (W.act_index(w0, idx) != W.act_index(wpi, idx)) { member = false; break; }
        if (member) out.push_back({pi, wpi, false});
    }
    std::sort(out.begin(), out.end(), [](const TSubset& a, const TSubset& b) {
        if (a.pi.size() != b.pi.size()) return a.pi.size() < b.pi.size();
        return a.pi < b.pi;
    });
    return out;
}

std::vector<TSubset> compute_M(const WeylGroup& W, const Config& cfg) {
    std::vector<TSubset> family = compute_T(W);
    const WeylElement w0 = W.longest_element();
    for (TSubset& t : family) {
        ConjClass c = W.conjugacy_class(W.compose(w0, t.w_pi), cfg);
        t.in_m = c.unique_max_length && c.bruhat_dominant;
    }
    return family;
}

TSubset m_pi(const WeylGroup& W, const TSubset& pi, const std::vector<TSubset>& family) {
    (void)W;
    if (pi.in_m) return pi;
    const TSubset* best = nullptr;
    for (const TSubset& cand : family) {
        if (!cand.in_m || !subset_of(cand.pi, pi.pi)) continue;
        if (!best || cand.pi.size() > best->pi.size()) best = &cand;
    }
    if (!best)
        throw LemmaViolationError("no member of M inside the given subset");
    for (const TSubset& cand : family)
        if (cand.in_m && subset_of(cand.pi, pi.pi) && !subset_of(cand.pi, best->pi))
            throw LemmaViolationError("members of M below the subset have no maximum");
    return *best;
}

bool decomposition_check(const WeylGroup& W, const TSubset& pi,
                         const std::vector<TSubset>& family) {
    if (pi.in_m) throw InvalidInputError("decomposition_check expects Pi outside M");
    TSubset m = m_pi(W, pi, family);
    std::vector<int> rest;
    std::set_difference(pi.pi.begin(), pi.pi.end(), m.pi.begin(), m.pi.end(),
                        std::back_inserter(rest));
    const RootSystem& rs = W.roots();
    std::vector<int> m_roots = parabolic_roots(rs, m.pi);
    for (size_t a = 0; a < rest.size(); ++a) {
        const RootVector& beta = rs.root(rs.simple_root_index(rest[a]));
        for (int idx : m_roots)
            if (!is_orthogonal(rs, beta, rs.root(idx))) return false;
        for (size_t b = a + 1; b < rest.size(); ++b)
            if (!is_orthogonal(rs, beta, rs.root(rs.simple_root_index(rest[b])))) return false;
    }
    return true;
}

int dimension_formula(const WeylGroup& W, const WeylElement& w) {
    if (!W.is_involution(w))
        throw InvalidInputError("dimension formula applies to involutions only");
    return W.length(w) + W.reflection_rank(w);
}

std::vector<StratumDescriptor> spherical_strata(const WeylGroup& W, const Config& cfg) {
    std::vector<TSubset> family = compute_M(W, cfg);
    const WeylElement w0 = W.longest_element();

    std::vector<StratumDescriptor> strata;
    std::map<uint64_t, size_t> stratum_of; // key(m_c) -> index
    for (const TSubset& t : family) {
        if (!t.in_m) continue;
        StratumDescriptor s;
        s.m_c = W.compose(w0, t.w_pi);
        s.pi = t.pi;
        s.dim_spherical = dimension_formula(W, s.m_c);
        stratum_of[W.key(s.m_c)] = strata.size();
        strata.push_back(std::move(s));
    }

    // T-subsets by the key of w0 w_Pi, for recognizing C_max elements
    std::map<uint64_t, const TSubset*> t_by_key;
    for (const TSubset& t : family) t_by_key[W.key(W.compose(w0, t.w_pi))] = &t;

    for (ConjClass& c : W.involution_classes(cfg)) {
        // every maximal-length element must be w0 w_Sigma with Sigma in T,
        // and all of them must point at the same member of M
        const TSubset* target = nullptr;
        for (const WeylElement& x : c.c_max) {
            auto it = t_by_key.find(W.key(x));
            if (it == t_by_key.end())
                throw LemmaViolationError(
                    "maximal-length involution is not of the form w0 w_Sigma with Sigma in T");
            TSubset m = m_pi(W, *it->second, family);
            if (target && m.pi != target->pi)
                throw LemmaViolationError(
                    "maximal-length elements of one class disagree on M_Sigma");
            if (!target)
                for (const TSubset& t : family)
                    if (t.pi == m.pi) target = &t;
        }
        StratumDescriptor& s = strata[stratum_of.at(W.key(W.compose(w0, target->w_pi)))];
        if (!c.maximum) s.flagged = true;
        s.w_union.push_back(std::move(c));
    }

    std::sort(strata.begin(), strata.end(),
              [&W](const StratumDescriptor& a, const StratumDescriptor& b) {
                  if (a.dim_spherical != b.dim_spherical) return a.dim_spherical < b.dim_spherical;
                  int la = W.length(a.m_c), lb = W.length(b.m_c);
                  if (la != lb) return la < lb;
                  return W.matrix(a.m_c).a < W.matrix(b.m_c).a;
              });
    return strata;
}

nlohmann::ordered_json stratum_to_json(const WeylGroup& W, const StratumDescriptor& s) {
    nlohmann::ordered_json j;
    j["m_word"] = W.reduced_word(s.m_c);
    j["dim"] = s.dim_spherical;
    nlohmann::ordered_json classes = nlohmann::ordered_json::array();
    for (const ConjClass& c : s.w_union) {
        nlohmann::ordered_json cj;
        cj["size"] = c.elements.size();
        cj["max_word"] = W.reduced_word(c.maximum ? *c.maximum : c.c_max.front());
        classes.push_back(std::move(cj));
    }
    j["classes"] = classes;
    j["pi"] = s.pi;
    return j;
}

std::string strata_dot(const WeylGroup& W, const std::vector<StratumDescriptor>& strata) {
    auto name = [&W](const StratumDescriptor& s) {
        std::string w;
        for (int i : W.reduced_word(s.m_c)) w += std::to_string(i);
        return "m=" + (w.empty() ? std::string("e") : w) + " dim=" + std::to_string(s.dim_spherical);
    };
    std::ostringstream out;
    out << "digraph strata {\n";
    for (const auto& s : strata) out << "  \"" << name(s) << "\";\n";
    // edge = reverse inclusion of the defining subsets (Bruhat anti-isomorphism)
    for (const auto& a : strata)
        for (const auto& b : strata) {
            if (a.pi == b.pi || !std::includes(b.pi.begin(), b.pi.end(), a.pi.begin(), a.pi.end()))
                continue;
            bool cover = true;
            for (const auto& c : strata) {
                if (c.pi == a.pi || c.pi == b.pi) continue;
                if (std::includes(c.pi.begin(), c.pi.end(), a.pi.begin(), a.pi.end()) &&
                    std::includes(b.pi.begin(), b.pi.end(), c.pi.begin(), c.pi.end())) {
                    cover = false;
                    break;
                }
            }
            if (cover) out << "  \"" << name(a) << "\" -> \"" << name(b) << "\";\n";
        }
    out << "}\n";
    return out.str();
}

} // namespace stratalab
