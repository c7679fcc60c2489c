#include "stratalab/root_system.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "stratalab/errors.hpp"

namespace stratalab {

namespace {

// Edges of the Dynkin diagram with multiplicities, Bourbaki numbering.
// An edge {i,j,aij,aji} contributes cartan(i,j) = aij, cartan(j,i) = aji
// (1-based nodes, aij = <alpha_j, alpha_i^vee>).
struct Edge {
    int i, j;
    int aij, aji;
};

std::vector<Edge> diagram_edges(char label, int n) {
    std::vector<Edge> e;
    auto chain = [&](int a, int b) {
        for (int k = a; k < b; ++k) e.push_back({k, k + 1, -1, -1});
    };
    switch (label) {
    case 'A':
        chain(1, n);
        break;
    case 'B': // alpha_n short
        chain(1, n - 1);
        e.push_back({n - 1, n, -1, -2});
        break;
    case 'C': // alpha_n long
        chain(1, n - 1);
        e.push_back({n - 1, n, -2, -1});
        break;
    case 'D':
        chain(1, n - 1);
        e.push_back({n - 2, n, -1, -1});
        break;
    case 'E': // E6: chain 1-3-4-5-6, node 2 hangs off 4
        e.push_back({1, 3, -1, -1});
        e.push_back({3, 4, -1, -1});
        e.push_back({4, 5, -1, -1});
        e.push_back({5, 6, -1, -1});
        e.push_back({2, 4, -1, -1});
        break;
    case 'F': // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        e.push_back({1, 2, -1, -1});
        e.push_back({2, 3, -1, -2});
        e.push_back({3, 4, -1, -1});
        break;
    case 'G': // alpha_1 short, alpha_2 long
        e.push_back({1, 2, -3, -1});
        break;
    }
    return e;
}

long long expected_root_count(char label, int n) {
    switch (label) {
    case 'A': return static_cast<long long>(n) * (n + 1);
    case 'B':
    case 'C': return 2LL * n * n;
    case 'D': return 2LL * n * (n - 1);
    case 'E': return n == 6 ? 72 : (n == 7 ? 126 : 240);
    case 'F': return 48;
    case 'G': return 12;
    }
    return -1;
}

int height(const RootVector& v) {
    return std::accumulate(v.begin(), v.end(), 0);
}

} // namespace

bool RootSystem::supported(char label, int rank) {
    switch (label) {
    case 'A': return rank >= 1 && rank <= 8;
    case 'B': return rank >= 2 && rank <= 6;
    case 'C': return rank >= 2 && rank <= 6;
    case 'D': return rank >= 4 && rank <= 7;
    case 'E': return rank == 6;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
    }
}

RootSystem RootSystem::build(char label, int rank) {
    if (!supported(label, rank))
        throw UnsupportedError("unsupported type " + std::string(1, label) + std::to_string(rank));

    RootSystem rs;
    rs.label_ = label;
    rs.rank_ = rank;
    rs.cartan_ = Mat(rank, rank);
    for (int i = 0; i < rank; ++i) rs.cartan_.at(i, i) = 2;
    for (const Edge& e : diagram_edges(label, rank)) {
        rs.cartan_.at(e.i - 1, e.j - 1) = e.aij;
        rs.cartan_.at(e.j - 1, e.i - 1) = e.aji;
    }

    // symmetrizers: d_i a_ij = d_j a_ji, propagated along the diagram
    std::vector<long long> num(rank, 0), den(rank, 1);
    num[0] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                if (i == j || rs.cartan_.at(i, j) == 0) continue;
                if (num[i] != 0 && num[j] == 0) {
                    // d_j = d_i * a_ij / a_ji
                    num[j] = num[i] * rs.cartan_.at(i, j);
                    den[j] = den[i] * rs.cartan_.at(j, i);
                    if ((num[j] < 0) == (den[j] < 0)) { num[j] = std::abs(num[j]); den[j] = std::abs(den[j]); }
                    changed = true;
                }
            }
    }
    long long l = 1;
    for (int i = 0; i < rank; ++i) l = std::lcm(l, den[i]);
    rs.sym_.resize(rank);
    long long g = 0;
    for (int i = 0; i < rank; ++i) {
        rs.sym_[i] = num[i] * (l / den[i]);
        g = std::gcd(g, rs.sym_[i]);
    }
    for (auto& d : rs.sym_) d /= g;

    // all roots: closure of the simples under simple reflections
    std::set<RootVector> seen;
    std::vector<RootVector> queue;
    for (int i = 0; i < rank; ++i) {
        RootVector alpha(rank, 0);
        alpha[i] = 1;
        seen.insert(alpha);
        queue.push_back(alpha);
    }
    while (!queue.empty()) {
        RootVector v = queue.back();
        queue.pop_back();
        for (int i = 0; i < rank; ++i) {
            long long c = 0;
            for (int j = 0; j < rank; ++j) c += rs.cartan_.at(i, j) * v[j];
            RootVector w = v;
            w[i] -= static_cast<int>(c);
            if (seen.insert(w).second) queue.push_back(w);
        }
    }

    std::vector<RootVector> positives;
    for (const auto& v : seen) {
        bool nonneg = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
        bool nonpos = std::all_of(v.begin(), v.end(), [](int x) { return x <= 0; });
        if (!nonneg && !nonpos)
            throw LemmaViolationError("root with mixed signs in " + rs.name());
        if (nonneg) positives.push_back(v);
    }
    if (2 * static_cast<long long>(positives.size()) != expected_root_count(label, rank))
        throw LemmaViolationError("root count mismatch in " + rs.name());

    std::sort(positives.begin(), positives.end(), [](const RootVector& a, const RootVector& b) {
        int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    rs.roots_ = positives;
    for (const auto& v : positives) {
        RootVector neg(v.size());
        for (size_t k = 0; k < v.size(); ++k) neg[k] = -v[k];
        rs.roots_.push_back(neg);
    }
    for (int idx = 0; idx < rs.root_count(); ++idx) rs.index_[rs.roots_[idx]] = idx;

    rs.simple_idx_.resize(rank);
    for (int i = 0; i < rank; ++i) {
        RootVector alpha(rank, 0);
        alpha[i] = 1;
        rs.simple_idx_[i] = rs.index_.at(alpha);
    }

    rs.highest_ = positives.back();
    for (const auto& v : positives)
        for (int k = 0; k < rank; ++k)
            if (v[k] > rs.highest_[k])
                throw LemmaViolationError("highest root fails coefficientwise dominance in " + rs.name());

    rs.long_norm_ = 0;
    for (const auto& v : positives) rs.long_norm_ = std::max(rs.long_norm_, rs.form(v, v));
    return rs;
}

int RootSystem::index_of(const RootVector& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

int RootSystem::negate(int idx) const {
    int m = positive_count();
    return idx < m ? idx + m : idx - m;
}

int RootSystem::alpha0_index() const {
    return index_.at(roots_[positive_count() - 1]) + positive_count();
}

long long RootSystem::form(const RootVector& x, const RootVector& y) const {
    long long s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < rank_; ++j)
            s += static_cast<long long>(x[i]) * sym_[i] * cartan_.at(i, j) * y[j];
    }
    return s;
}

long long RootSystem::pairing(const RootVector& beta, const RootVector& gamma) const {
    long long num = 2 * form(beta, gamma);
    long long den = form(gamma, gamma);
    assert(den != 0 && num % den == 0);
    return num / den;
}

RootVector RootSystem::extended_node_root(int node) const {
    if (node == 0) {
        RootVector v = highest_;
        for (auto& x : v) x = -x;
        return v;
    }
    if (node < 1 || node > rank_)
        throw InvalidInputError("extended node out of range: " + std::to_string(node));
    RootVector v(rank_, 0);
    v[node - 1] = 1;
    return v;
}

std::vector<int> RootSystem::subsystem_closure(const std::vector<int>& root_indices) const {
    // orbit of the base under the reflections it defines; for a valid base
    // this is exactly the generated subsystem
    std::set<int> closed;
    std::vector<int> queue;
    for (int idx : root_indices) {
        if (closed.insert(idx).second) queue.push_back(idx);
        int neg = negate(idx);
        if (closed.insert(neg).second) queue.push_back(neg);
    }
    while (!queue.empty()) {
        int g = queue.back();
        queue.pop_back();
        for (int b : root_indices) {
            const RootVector& beta = roots_[b];
            long long c = pairing(roots_[g], beta);
            RootVector w = roots_[g];
            for (int k = 0; k < rank_; ++k) w[k] -= static_cast<int>(c) * beta[k];
            int idx = index_.at(w);
            if (closed.insert(idx).second) queue.push_back(idx);
        }
    }
    return {closed.begin(), closed.end()};
}

long long RootSystem::weyl_order() const {
    long long f = 1;
    switch (label_) {
    case 'A':
        for (int k = 2; k <= rank_ + 1; ++k) f *= k;
        return f;
    case 'B':
    case 'C':
        for (int k = 2; k <= rank_; ++k) f *= k;
        return f << rank_;
    case 'D':
        for (int k = 2; k <= rank_; ++k) f *= k;
        return f << (rank_ - 1);
    case 'E': return 51840; // E6
    case 'F': return 1152;
    case 'G': return 12;
    }
    return 0;
}

nlohmann::ordered_json RootSystem::to_json() const {
    nlohmann::ordered_json j;
    j["label"] = std::string(1, label_);
    j["rank"] = rank_;
    nlohmann::ordered_json simples = nlohmann::ordered_json::array();
    for (int i = 1; i <= rank_; ++i) simples.push_back(roots_[simple_idx_[i - 1]]);
    j["simple_roots"] = simples;
    nlohmann::ordered_json pos = nlohmann::ordered_json::array();
    for (int i = 0; i < positive_count(); ++i) pos.push_back(roots_[i]);
    j["positive_roots"] = pos;
    j["highest_root"] = highest_;
    return j;
}

SubsystemBasis make_extended_basis(const RootSystem& rs, std::vector<int> nodes) {
    std::sort(nodes.begin(), nodes.end());
    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
        throw InvalidInputError("duplicate extended-diagram node");
    SubsystemBasis b;
    b.indices = nodes;
    for (int node : nodes) b.resolved_roots.push_back(rs.extended_node_root(node));
    return b;
}

std::vector<SubsystemComponent> classify_components(const RootSystem& rs,
                                                    const std::vector<RootVector>& basis) {
    const int k = static_cast<int>(basis.size());
    for (const auto& v : basis)
        if (rs.index_of(v) < 0)
            throw InvalidInputError("basis vector is not a root");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (rs.pairing(basis[i], basis[j]) > 0)
                throw InvalidInputError("basis roots with positive Cartan pairing");

    {
        Mat m(k, rs.rank());
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < rs.rank(); ++j) m.at(i, j) = basis[i][j];
        if (mat_rank(m) != k)
            throw InvalidInputError("basis roots are linearly dependent");
    }
    // finite type <=> the Gram matrix is positive definite
    {
        Mat gram(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) gram.at(i, j) = rs.form(basis[i], basis[j]);
        for (int t = 1; t <= k; ++t) {
            Mat minor(t, t);
            for (int i = 0; i < t; ++i)
                for (int j = 0; j < t; ++j) minor.at(i, j) = gram.at(i, j);
            if (mat_det(minor) <= 0)
                throw InvalidInputError("Gram matrix not of finite type");
        }
    }

    // connected components of the basis diagram
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
                if (comp[w] < 0 && rs.form(basis[v], basis[w]) != 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }

    std::vector<SubsystemComponent> out;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<RootVector> part;
        for (int i = 0; i < k; ++i)
            if (comp[i] == c) part.push_back(basis[i]);
        const int m = static_cast<int>(part.size());

        if (m == 1) {
            // rank-1 flavor depends on the ambient: a long root in sp is C1,
            // a short root in so(2n+1) is B1, everything else plain A1
            bool lng = rs.form(part[0], part[0]) == rs.long_norm();
            char lab = 'A';
            if (rs.label() == 'C' && lng) lab = 'C';
            if (rs.label() == 'B' && !lng) lab = 'B';
            out.push_back({{lab, 1}, part});
            continue;
        }

        int edges = 0, doubles = 0, triples = 0;
        std::vector<int> deg(m, 0);
        std::vector<std::vector<int>> adj(m);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                long long mult = rs.pairing(part[i], part[j]) * rs.pairing(part[j], part[i]);
                if (mult == 0) continue;
                ++edges;
                ++deg[i];
                ++deg[j];
                adj[i].push_back(j);
                adj[j].push_back(i);
                if (mult == 2) ++doubles;
                if (mult == 3) ++triples;
                if (mult > 3) throw InvalidInputError("Gram matrix not of finite type");
            }
        if (edges != m - 1) throw InvalidInputError("component diagram is not a tree");

        char lab;
        if (triples > 0) {
            if (m != 2 || triples != 1) throw InvalidInputError("bad triple bond");
            lab = 'G';
        } else if (doubles > 0) {
            if (doubles != 1 || *std::max_element(deg.begin(), deg.end()) > 2)
                throw InvalidInputError("Gram matrix not of finite type");
            if (m == 2) {
                lab = rs.label() == 'C' ? 'C' : 'B'; // B2 = C2; name follows the ambient
            } else {
                int shorts = 0;
                for (const auto& v : part)
                    if (rs.form(v, v) != rs.long_norm()) ++shorts;
                if (shorts == 1) lab = 'B';
                else if (shorts == m - 1) lab = 'C';
                else if (m == 4 && shorts == 2) lab = 'F';
                else throw InvalidInputError("Gram matrix not of finite type");
            }
        } else {
            int branch = -1;
            for (int i = 0; i < m; ++i) {
                if (deg[i] > 3) throw InvalidInputError("diagram node of degree > 3");
                if (deg[i] == 3) {
                    if (branch >= 0) throw InvalidInputError("two branch nodes");
                    branch = i;
                }
            }
            if (branch < 0) {
                lab = 'A';
            } else {
                std::vector<int> arms;
                for (int s0 : adj[branch]) {
                    int len = 1, prev = branch, cur = s0;
                    while (deg[cur] == 2) {
                        int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                        prev = cur;
                        cur = nxt;
                        ++len;
                    }
                    arms.push_back(len);
                }
                std::sort(arms.begin(), arms.end());
                if (arms[0] == 1 && arms[1] == 1) lab = 'D';
                else if (arms == std::vector<int>{1, 2, 2}) lab = 'E';
                else if (arms == std::vector<int>{1, 2, 3}) lab = 'E';
                else if (arms == std::vector<int>{1, 2, 4}) lab = 'E';
                else throw InvalidInputError("Gram matrix not of finite type");
            }
        }
        out.push_back({{lab, m}, part});
    }
    return out;
}

std::vector<ComponentType> subsystem_type(const RootSystem& rs,
                                          const std::vector<RootVector>& basis) {
    std::vector<ComponentType> types;
    for (const auto& c : classify_components(rs, basis)) types.push_back(c.type);
    std::sort(types.begin(), types.end());
    return types;
}

bool is_orthogonal(const RootSystem& rs, const RootVector& a, const RootVector& b) {
    return rs.form(a, b) == 0;
}

} // namespace stratalab
