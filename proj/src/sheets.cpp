#include "stratalab/sheets.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "stratalab/errors.hpp"

namespace stratalab {

namespace {

// Root sets are kept as sorted byte strings (root indices fit in a byte):
// compact, hashable, and lexicographic compare matches index order.
std::string to_key(const std::vector<int>& set) {
    std::string s(set.size(), '\0');
    for (size_t i = 0; i < set.size(); ++i) s[i] = static_cast<char>(set[i]);
    return s;
}

std::string apply_to_key(const WeylElement& w, const std::string& key) {
    std::string out(key.size(), '\0');
    for (size_t i = 0; i < key.size(); ++i)
        out[i] = static_cast<char>(w.perm[static_cast<unsigned char>(key[i])]);
    std::sort(out.begin(), out.end(),
              [](char a, char b) { return static_cast<unsigned char>(a) < static_cast<unsigned char>(b); });
    return out;
}

struct OrthTable {
    int count;
    std::vector<char> orth;
    explicit OrthTable(const RootSystem& rs) : count(rs.root_count()), orth(count * count) {
        for (int i = 0; i < count; ++i)
            for (int j = 0; j < count; ++j)
                orth[i * count + j] = rs.form(rs.root(i), rs.root(j)) == 0;
    }
    bool operator()(int i, int j) const { return orth[i * count + j]; }
};

// component id per position of a sorted root-set key, least-root order
std::vector<int> components_of_key(const std::string& key, const OrthTable& orth) {
    const int k = static_cast<int>(key.size());
    std::vector<int> comp(k, -1);
    int ncomp = 0;
    for (int s = 0; s < k; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < k; ++w)
                if (comp[w] < 0 &&
                    !orth(static_cast<unsigned char>(key[v]), static_cast<unsigned char>(key[w]))) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    return comp;
}

// Lexicographically minimal W-image of a root set; every set visited during
// an orbit walk is cached, so repeated queries across subsets are free.
struct Canonicalizer {
    const WeylGroup& W;
    long long state_cap;
    std::unordered_map<std::string, std::string> cache;

    std::string canonical(const std::vector<int>& set) {
        std::string start = to_key(set);
        auto hit = cache.find(start);
        if (hit != cache.end()) return hit->second;
        std::unordered_set<std::string> visited{start};
        std::vector<std::string> queue{start};
        std::string best = start;
        for (size_t head = 0; head < queue.size(); ++head) {
            std::string cur = queue[head];
            for (int i = 1; i <= W.rank(); ++i) {
                std::string img = apply_to_key(W.simple_reflection(i), cur);
                if (visited.insert(img).second) {
                    if (img < best) best = img;
                    queue.push_back(std::move(img));
                }
            }
            if (static_cast<long long>(queue.size()) > state_cap)
                throw BudgetError("subsystem orbit exceeds the scan budget");
        }
        for (const auto& s : visited) cache.emplace(s, best);
        return best;
    }
};

// Permutations of the components of `rep_set` induced by its W-stabilizer:
// Schreier generators from the orbit walk, closed into a group.
std::vector<std::vector<int>> component_symmetries(const WeylGroup& W,
                                                   const std::vector<int>& rep_set,
                                                   const Config& cfg) {
    const RootSystem& rs = W.roots();
    OrthTable orth(rs);

    struct State {
        std::vector<int> comp_of;   // intrinsic component per position
        std::vector<int> transport; // rep component i -> intrinsic component
    };
    std::string rep = to_key(rep_set);
    std::vector<int> rep_comp_of = components_of_key(rep, orth);
    const int m = rep_comp_of.empty() ? 0 : *std::max_element(rep_comp_of.begin(), rep_comp_of.end()) + 1;

    std::vector<int> id(m);
    for (int i = 0; i < m; ++i) id[i] = i;

    std::unordered_map<std::string, State> states;
    states.emplace(rep, State{rep_comp_of, id});
    std::vector<std::string> queue{rep};
    std::set<std::vector<int>> gens;

    // first position of each intrinsic component, per state key
    auto witness = [](const std::string& key, const std::vector<int>& comp_of, int c) {
        for (size_t i = 0; i < comp_of.size(); ++i)
            if (comp_of[i] == c) return static_cast<unsigned char>(key[i]);
        return static_cast<unsigned char>(0);
    };

    for (size_t head = 0; head < queue.size(); ++head) {
        std::string cur = queue[head];
        State cur_state = states.at(cur);
        for (int i = 1; i <= W.rank(); ++i) {
            const WeylElement& s = W.simple_reflection(i);
            std::string img = apply_to_key(s, cur);
            auto it = states.find(img);
            bool fresh = it == states.end();
            if (fresh) {
                State st;
                st.comp_of = components_of_key(img, orth);
                st.transport.resize(m);
                it = states.emplace(img, std::move(st)).first;
            }
            // transport: follow one witness root of each rep component
            std::vector<int> img_map(m);
            for (int c = 0; c < m; ++c) {
                int root = witness(cur, cur_state.comp_of, cur_state.transport[c]);
                int image_root = s.perm[root];
                size_t pos = std::lower_bound(it->first.begin(), it->first.end(),
                                              static_cast<char>(image_root),
                                              [](char a, char b) {
                                                  return static_cast<unsigned char>(a) <
                                                         static_cast<unsigned char>(b);
                                              }) -
                             it->first.begin();
                img_map[c] = it->second.comp_of[pos];
            }
            if (fresh) {
                it->second.transport = img_map;
                queue.push_back(img);
                if (static_cast<long long>(queue.size()) > cfg.scan_budget)
                    throw BudgetError("subsystem orbit exceeds the scan budget");
            } else {
                const std::vector<int>& old_map = it->second.transport;
                std::vector<int> sigma(m);
                for (int c = 0; c < m; ++c) {
                    auto pos = std::find(old_map.begin(), old_map.end(), img_map[c]);
                    sigma[c] = static_cast<int>(pos - old_map.begin());
                }
                gens.insert(std::move(sigma));
            }
        }
    }

    std::set<std::vector<int>> group{id};
    std::vector<std::vector<int>> gq{id};
    for (size_t head = 0; head < gq.size(); ++head) {
        std::vector<int> g = gq[head];
        for (const auto& s : gens) {
            std::vector<int> gs(m);
            for (int c = 0; c < m; ++c) gs[c] = s[g[c]];
            if (group.insert(gs).second) gq.push_back(std::move(gs));
        }
    }
    return {group.begin(), group.end()};
}

struct ComponentAlgebra {
    Algebra alg;
    int natural;
};

ComponentAlgebra component_algebra(const ComponentType& t) {
    switch (t.label) {
    case 'A': return {Algebra::gl, t.rank + 1};
    case 'B': return {Algebra::so, 2 * t.rank + 1};
    case 'C': return {Algebra::sp, 2 * t.rank};
    case 'D': return {Algebra::so, 2 * t.rank};
    default:
        throw UnsupportedError("no rigid-orbit data for component type " + t.str());
    }
}

} // namespace

long long center_component_order(const RootSystem& rs, const std::vector<RootVector>& basis) {
    Mat m(static_cast<int>(basis.size()), rs.rank());
    for (size_t i = 0; i < basis.size(); ++i)
        for (int j = 0; j < rs.rank(); ++j) m.at(static_cast<int>(i), j) = basis[i][j];
    return lattice_torsion_order(m);
}

std::vector<PseudoLeviClass> pseudo_levi_classes(const WeylGroup& W, const Config& cfg) {
    const RootSystem& rs = W.roots();
    const int n = rs.rank();
    Canonicalizer canon{W, cfg.scan_budget, {}};

    // canonical forms of the standard parabolic subsystems, for is_levi
    std::unordered_set<std::string> levi_forms;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> idxs;
        for (int i = 1; i <= n; ++i)
            if (mask & (1u << (i - 1))) idxs.push_back(rs.simple_root_index(i));
        levi_forms.insert(canon.canonical(rs.subsystem_closure(idxs)));
    }

    std::map<std::string, PseudoLeviClass> by_form;
    const unsigned full = (1u << (n + 1)) - 1;
    for (unsigned mask = 0; mask < full; ++mask) { // proper subsets only
        std::vector<int> nodes, idxs;
        for (int node = 0; node <= n; ++node)
            if (mask & (1u << node)) {
                nodes.push_back(node);
                idxs.push_back(node == 0 ? rs.alpha0_index() : rs.simple_root_index(node));
            }
        by_form[canon.canonical(rs.subsystem_closure(idxs))].members.push_back(nodes);
    }

    std::vector<PseudoLeviClass> out;
    for (auto& [form, cls] : by_form) {
        std::sort(cls.members.begin(), cls.members.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                      if (a.size() != b.size()) return a.size() < b.size();
                      return a < b;
                  });
        cls.rep_nodes = cls.members.front();
        std::vector<RootVector> basis;
        for (int node : cls.rep_nodes) {
            basis.push_back(rs.extended_node_root(node));
            cls.rep_roots.push_back(node == 0 ? rs.alpha0_index() : rs.simple_root_index(node));
        }
        std::sort(cls.rep_roots.begin(), cls.rep_roots.end());
        auto comps = classify_components(rs, basis);
        std::sort(comps.begin(), comps.end(),
                  [&rs](const SubsystemComponent& a, const SubsystemComponent& b) {
                      if (a.type != b.type) return a.type < b.type;
                      return rs.index_of(a.basis.front()) < rs.index_of(b.basis.front());
                  });
        for (const auto& c : comps) cls.component_types.push_back(c.type);
        cls.is_levi = levi_forms.count(form) > 0;
        cls.z_order = center_component_order(rs, basis);
        out.push_back(std::move(cls));
    }
    std::sort(out.begin(), out.end(), [](const PseudoLeviClass& a, const PseudoLeviClass& b) {
        if (a.rep_nodes.size() != b.rep_nodes.size()) return a.rep_nodes.size() < b.rep_nodes.size();
        return a.rep_nodes < b.rep_nodes;
    });
    return out;
}

SheetPairList enumerate_sheet_pairs(const WeylGroup& W, const Config& cfg) {
    const RootSystem& rs = W.roots();
    if (rs.label() != 'A' && rs.label() != 'B' && rs.label() != 'C' && rs.label() != 'D')
        throw UnsupportedError("sheet pairs require a classical ambient type");

    SheetPairList list;
    list.classes = pseudo_levi_classes(W, cfg);
    OrthTable orth(rs);
    for (const PseudoLeviClass& cls : list.classes) {
        std::vector<RootVector> basis;
        for (int node : cls.rep_nodes) basis.push_back(rs.extended_node_root(node));
        auto comps = classify_components(rs, basis);
        // component order must match PseudoLeviClass::component_types
        std::sort(comps.begin(), comps.end(),
                  [&rs](const SubsystemComponent& a, const SubsystemComponent& b) {
                      if (a.type != b.type) return a.type < b.type;
                      return rs.index_of(a.basis.front()) < rs.index_of(b.basis.front());
                  });

        std::vector<std::vector<Partition>> rigid_lists;
        std::vector<ComponentAlgebra> algebras;
        for (const auto& c : comps) {
            ComponentAlgebra ca = component_algebra(c.type);
            algebras.push_back(ca);
            // type-A components carry only the zero orbit
            rigid_lists.push_back(ca.alg == Algebra::gl
                                      ? std::vector<Partition>{Partition(std::vector<int>(ca.natural, 1))}
                                      : rigid_partitions(ca.alg, ca.natural, cfg));
        }

        // symmetry of conjugate components matters only when a repeated type
        // carries more than one rigid orbit
        bool need_symmetry = false;
        for (size_t i = 0; i < comps.size() && !need_symmetry; ++i)
            for (size_t j = i + 1; j < comps.size() && !need_symmetry; ++j)
                if (comps[i].type == comps[j].type && rigid_lists[i].size() > 1)
                    need_symmetry = true;

        std::vector<std::vector<int>> group;
        std::vector<int> to_intrinsic(comps.size(), 0);
        if (need_symmetry) {
            std::vector<int> root_set;
            for (const auto& v : basis) root_set.push_back(rs.index_of(v));
            std::vector<int> closed = rs.subsystem_closure(root_set);
            group = component_symmetries(W, closed, cfg);
            std::vector<int> comp_of = components_of_key(to_key(closed), orth);
            for (size_t i = 0; i < comps.size(); ++i) {
                int root = rs.index_of(comps[i].basis.front());
                size_t pos = std::lower_bound(closed.begin(), closed.end(), root) - closed.begin();
                to_intrinsic[i] = comp_of[pos];
            }
        }

        std::set<std::vector<int>> emitted;
        std::vector<int> choice(comps.size(), 0);
        auto canonical_choice = [&](const std::vector<int>& t) {
            if (!need_symmetry) return t;
            std::vector<int> best = t;
            for (const auto& sigma : group) {
                std::vector<int> img(t.size());
                for (size_t i = 0; i < t.size(); ++i) {
                    int target = sigma[to_intrinsic[i]];
                    for (size_t k = 0; k < t.size(); ++k)
                        if (to_intrinsic[k] == target) img[k] = t[i];
                }
                if (img < best) best = img;
            }
            return best;
        };
        auto rec = [&](auto&& self, size_t i) -> void {
            if (i == comps.size()) {
                std::vector<int> canonical = canonical_choice(choice);
                if (!emitted.insert(canonical).second) return;
                SheetPair pair;
                pair.levi = &cls;
                for (size_t c = 0; c < comps.size(); ++c) {
                    OrbitLabel o{algebras[c].alg, algebras[c].natural, rigid_lists[c][canonical[c]],
                                 std::nullopt};
                    if (is_very_even(o.alg, o.natural, o.partition)) o.very_even_mark = 'U';
                    pair.orbits.push_back(std::move(o));
                }
                list.pairs.push_back(std::move(pair));
                return;
            }
            for (size_t k = 0; k < rigid_lists[i].size(); ++k) {
                choice[i] = static_cast<int>(k);
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    }
    return list;
}

long long sl_sheet_pair_count(int n) {
    // type A: rigid orbits are trivial, so pairs = pseudo-Levi classes of
    // sl_n = partitions of n (cross-checked against the generic enumeration
    // for every buildable rank in the test suite)
    return static_cast<long long>(all_partitions(n).size());
}

std::vector<std::vector<int>> isolated_extensions(const RootSystem& rs,
                                                  const std::vector<int>& j_nodes) {
    const int n = rs.rank();
    std::vector<int> sorted = j_nodes;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> missing;
    for (int node = 0; node <= n; ++node)
        if (!std::binary_search(sorted.begin(), sorted.end(), node)) missing.push_back(node);

    std::vector<std::vector<int>> out;
    const int need = n - static_cast<int>(sorted.size());
    if (need < 0) return out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, size_t from, int left) -> void {
        if (left == 0) {
            std::vector<int> ext = sorted;
            ext.insert(ext.end(), pick.begin(), pick.end());
            std::sort(ext.begin(), ext.end());
            Mat m(n, n);
            for (int i = 0; i < n; ++i) {
                RootVector v = rs.extended_node_root(ext[i]);
                for (int k = 0; k < n; ++k) m.at(i, k) = v[k];
            }
            if (mat_rank(m) == n) out.push_back(std::move(ext));
            return;
        }
        for (size_t i = from; i < missing.size(); ++i) {
            pick.push_back(missing[i]);
            self(self, i + 1, left - 1);
            pick.pop_back();
        }
    };
    rec(rec, 0, need);
    return out;
}

IsolatedExtension isolated_extension(const WeylGroup& W, const std::vector<int>& j_nodes,
                                     const Config& cfg) {
    const RootSystem& rs = W.roots();
    SubsystemBasis basis = make_extended_basis(rs, j_nodes);
    classify_components(rs, basis.resolved_roots); // validates the base

    Canonicalizer canon{W, cfg.scan_budget, {}};
    std::unordered_set<std::string> levi_forms;
    for (unsigned mask = 0; mask < (1u << rs.rank()); ++mask) {
        std::vector<int> idxs;
        for (int i = 1; i <= rs.rank(); ++i)
            if (mask & (1u << (i - 1))) idxs.push_back(rs.simple_root_index(i));
        levi_forms.insert(canon.canonical(rs.subsystem_closure(idxs)));
    }
    std::vector<int> root_idxs;
    for (const auto& v : basis.resolved_roots) root_idxs.push_back(rs.index_of(v));
    if (levi_forms.count(canon.canonical(rs.subsystem_closure(root_idxs))))
        return {true, basis.indices};

    if (static_cast<int>(basis.indices.size()) == rs.rank())
        return {false, basis.indices}; // already of full rank: isolated as is

    auto all = isolated_extensions(rs, basis.indices);
    if (all.empty())
        throw LemmaViolationError("no full-rank extension exists");
    return {false, all.front()}; // lowest added indices
}

SlSheetPoset sl_sheet_poset(int n, const Config& cfg) {
    if (n > cfg.poset_bound)
        throw BudgetError("sl sheet poset beyond the configured bound (" +
                          std::to_string(cfg.poset_bound) + ")");
    SlSheetPoset poset;
    poset.n = n;
    poset.sheets = all_partitions(n);
    std::sort(poset.sheets.begin(), poset.sheets.end(),
              [](const Partition& a, const Partition& b) { return b.parts < a.parts; });
    const int k = static_cast<int>(poset.sheets.size());
    std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            leq[i][j] = sheet_preceq(poset.sheets[i], poset.sheets[j]);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j || !leq[i][j]) continue;
            bool cover = true;
            for (int v = 0; v < k && cover; ++v)
                if (v != i && v != j && leq[i][v] && leq[v][j]) cover = false;
            if (cover) poset.hasse.emplace_back(i, j);
        }
    std::sort(poset.hasse.begin(), poset.hasse.end());
    return poset;
}

std::string sl_sheet_poset_dot(const SlSheetPoset& poset) {
    std::ostringstream out;
    out << "digraph sheets {\n";
    for (const auto& p : poset.sheets) out << "  \"" << p.str() << "\";\n";
    for (auto [lo, hi] : poset.hasse)
        out << "  \"" << poset.sheets[hi].str() << "\" -> \"" << poset.sheets[lo].str() << "\";\n";
    out << "}\n";
    return out.str();
}

nlohmann::ordered_json pseudo_levi_to_json(const PseudoLeviClass& c) {
    nlohmann::ordered_json j;
    j["indices"] = c.rep_nodes;
    nlohmann::ordered_json types = nlohmann::ordered_json::array();
    for (const auto& t : c.component_types)
        types.push_back(nlohmann::ordered_json::array({std::string(1, t.label), t.rank}));
    j["types"] = types;
    j["is_levi"] = c.is_levi;
    j["z_order"] = c.z_order;
    return j;
}

nlohmann::ordered_json sheet_pair_to_json(const SheetPair& p) {
    nlohmann::ordered_json j;
    j["levi"] = pseudo_levi_to_json(*p.levi);
    nlohmann::ordered_json orbits = nlohmann::ordered_json::array();
    for (size_t i = 0; i < p.orbits.size(); ++i) {
        nlohmann::ordered_json oj;
        oj["component"] = i;
        oj["partition"] = p.orbits[i].partition.parts;
        orbits.push_back(std::move(oj));
    }
    j["orbits"] = orbits;
    return j;
}

} // namespace stratalab
