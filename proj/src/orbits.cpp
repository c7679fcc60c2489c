#include "stratalab/orbits.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "stratalab/errors.hpp"

namespace stratalab {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw InvalidInputError("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw InvalidInputError("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw InvalidInputError("empty token in partition");
        size_t caret = tok.find('^');
        int value, mult = 1;
        try {
            if (caret == std::string::npos) {
                value = std::stoi(tok);
            } else {
                value = std::stoi(tok.substr(0, caret));
                mult = std::stoi(tok.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw InvalidInputError("cannot parse partition token '" + tok + "'");
        }
        if (mult < 1) throw InvalidInputError("multiplicity must be positive");
        for (int k = 0; k < mult; ++k) parts.push_back(value);
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

int Partition::n() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::str() const {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s;
}

Partition dual(const Partition& p) {
    std::vector<int> d;
    int rows = static_cast<int>(p.parts.size());
    for (int i = 1; rows > 0; ++i) {
        int cnt = 0;
        for (int part : p.parts)
            if (part >= i) ++cnt;
        if (cnt == 0) break;
        d.push_back(cnt);
    }
    return Partition(d);
}

bool dominance_leq(const Partition& p, const Partition& q) {
    if (p.n() != q.n()) throw InvalidInputError("dominance: partitions of different size");
    int sp = 0, sq = 0;
    size_t k = std::max(p.parts.size(), q.parts.size());
    for (size_t i = 0; i < k; ++i) {
        sp += i < p.parts.size() ? p.parts[i] : 0;
        sq += i < q.parts.size() ? q.parts[i] : 0;
        if (sp > sq) return false;
    }
    return true;
}

bool sheet_preceq(const Partition& p, const Partition& q) {
    if (p.n() != q.n()) throw InvalidInputError("preceq: partitions of different size");
    const std::vector<int> target = dual(p).parts; // lambda~
    const std::vector<int> parts = dual(q).parts;  // lambda'~, to be grouped
    const int c = static_cast<int>(parts.size());
    if (static_cast<int>(target.size()) > c) return false;

    std::vector<int> mask_sum(1 << c, 0);
    for (int m = 1; m < (1 << c); ++m) {
        int low = m & -m;
        int i = __builtin_ctz(static_cast<unsigned>(m));
        mask_sum[m] = mask_sum[m ^ low] + parts[i];
    }

    // memoized exact grouping: block i of the remaining parts must sum to target[i]
    std::map<std::pair<int, int>, bool> memo;
    auto rec = [&](auto&& self, int i, int mask) -> bool {
        if (i == static_cast<int>(target.size())) return mask == 0;
        auto it = memo.find({i, mask});
        if (it != memo.end()) return it->second;
        bool ok = false;
        // the lowest remaining part must join some block; force it into block i
        // only when target values repeat would over-prune, so enumerate freely
        for (int sub = mask; sub > 0 && !ok; sub = (sub - 1) & mask)
            if (mask_sum[sub] == target[i]) ok = self(self, i + 1, mask ^ sub);
        memo[{i, mask}] = ok;
        return ok;
    };
    return rec(rec, 0, (1 << c) - 1);
}

std::string algebra_str(Algebra a, int natural) {
    switch (a) {
    case Algebra::gl: return "gl(" + std::to_string(natural) + ")";
    case Algebra::sl: return "sl(" + std::to_string(natural) + ")";
    case Algebra::so: return "so(" + std::to_string(natural) + ")";
    case Algebra::sp: return "sp(" + std::to_string(natural) + ")";
    }
    return "?";
}

Algebra parse_algebra(const std::string& s) {
    if (s == "gl") return Algebra::gl;
    if (s == "sl") return Algebra::sl;
    if (s == "so") return Algebra::so;
    if (s == "sp") return Algebra::sp;
    throw InvalidInputError("unknown algebra '" + s + "' (expected gl|sl|so|sp)");
}

namespace {

// sl labels are handled as gl throughout; the combinatorics agree
Algebra norm_alg(Algebra a) { return a == Algebra::sl ? Algebra::gl : a; }

} // namespace

bool is_valid_orbit(Algebra alg, int natural, const Partition& p) {
    if (p.n() != natural) return false;
    Algebra a = norm_alg(alg);
    if (a == Algebra::sp && natural % 2 != 0) return false;
    if (a == Algebra::gl) return true;
    std::map<int, int> mult;
    for (int part : p.parts) ++mult[part];
    for (auto [v, m] : mult) {
        if (a == Algebra::sp && v % 2 == 1 && m % 2 == 1) return false;
        if (a == Algebra::so && v % 2 == 0 && m % 2 == 1) return false;
    }
    return true;
}

bool is_very_even(Algebra alg, int natural, const Partition& p) {
    if (norm_alg(alg) != Algebra::so || natural % 2 != 0) return false;
    if (!is_valid_orbit(alg, natural, p)) return false;
    return std::all_of(p.parts.begin(), p.parts.end(), [](int v) { return v % 2 == 0; });
}

OrbitLabel collapse(Algebra alg, int natural, const Partition& candidate) {
    Algebra a = norm_alg(alg);
    if (candidate.n() != natural)
        throw InvalidInputError("collapse: partition does not sum to the natural dimension");
    if (a == Algebra::sp && natural % 2 != 0)
        throw InvalidInputError("collapse: sp needs even natural dimension");

    std::vector<int> p = candidate.parts;
    if (a != Algebra::gl) {
        const int bad_parity = a == Algebra::sp ? 1 : 0;
        while (true) {
            // largest part with the wrong parity and odd multiplicity
            int v = 0;
            for (size_t i = 0; i < p.size(); ++i) {
                int count = 0;
                for (int x : p)
                    if (x == p[i]) ++count;
                if (p[i] % 2 == bad_parity && count % 2 == 1) { v = p[i]; break; }
            }
            if (v == 0) break;
            size_t r = 0;
            for (size_t i = 0; i < p.size(); ++i)
                if (p[i] == v) r = i;
            p[r] -= 1;
            // move the box down: first slot after r that keeps the parts sorted
            size_t s = r + 1;
            while (s < p.size() && p[s] + 1 > p[s - 1]) ++s;
            if (s < p.size()) p[s] += 1;
            else p.push_back(1);
            while (!p.empty() && p.back() == 0) p.pop_back();
        }
    }
    Partition result(p);
    assert(is_valid_orbit(a, natural, result));
    OrbitLabel o{alg, natural, result, std::nullopt};
    if (is_very_even(alg, natural, result)) o.very_even_mark = 'U';
    return o;
}

long long ClassicalLevi::dimension() const {
    long long d = 0;
    for (int b : gl_blocks) d += static_cast<long long>(b) * b;
    if (norm_alg(ambient) == Algebra::sp) d += static_cast<long long>(residual / 2) * (residual + 1);
    if (norm_alg(ambient) == Algebra::so) d += static_cast<long long>(residual) * (residual - 1) / 2;
    return d;
}

void ClassicalLevi::validate() const {
    long long sum = 0;
    for (int b : gl_blocks) {
        if (b < 1) throw InvalidInputError("Levi block sizes must be positive");
        sum += b;
    }
    Algebra a = norm_alg(ambient);
    if (a == Algebra::gl) {
        if (residual != 0) throw InvalidInputError("gl Levi cannot have a residual factor");
        if (sum != natural) throw InvalidInputError("gl Levi blocks must sum to n");
    } else {
        if (residual < 0 || 2 * sum + residual != natural)
            throw InvalidInputError("Levi blocks incompatible with the natural dimension");
        if (a == Algebra::sp && residual % 2 != 0)
            throw InvalidInputError("sp residual factor must have even dimension");
    }
}

namespace {

// componentwise (row-wise) sum of padded partitions
std::vector<int> row_sum(const std::vector<const std::vector<int>*>& ps) {
    size_t rows = 0;
    for (auto* p : ps) rows = std::max(rows, p->size());
    std::vector<int> r(rows, 0);
    for (auto* p : ps)
        for (size_t i = 0; i < p->size(); ++i) r[i] += (*p)[i];
    return r;
}

} // namespace

OrbitLabel induce(const ClassicalLevi& levi, const std::vector<Partition>& nu,
                  const std::optional<Partition>& mu) {
    levi.validate();
    if (nu.size() != levi.gl_blocks.size())
        throw InvalidInputError("induce: one partition per gl block required");
    for (size_t i = 0; i < nu.size(); ++i)
        if (nu[i].n() != levi.gl_blocks[i])
            throw InvalidInputError("induce: partition does not match its block size");

    Algebra a = norm_alg(levi.ambient);
    if (a == Algebra::gl) {
        if (mu.has_value()) throw InvalidInputError("induce: gl ambient takes no residual orbit");
        std::vector<const std::vector<int>*> ps;
        for (const auto& v : nu) ps.push_back(&v.parts);
        return OrbitLabel{levi.ambient, levi.natural, Partition(row_sum(ps)), std::nullopt};
    }

    if (!mu.has_value())
        throw InvalidInputError("induce: classical ambient requires a residual orbit");
    if (!is_valid_orbit(a, levi.residual, *mu))
        throw InvalidInputError("induce: residual orbit invalid for " +
                                algebra_str(a, levi.residual));
    std::vector<const std::vector<int>*> ps;
    for (const auto& v : nu) {
        ps.push_back(&v.parts);
        ps.push_back(&v.parts); // each gl block enters twice
    }
    ps.push_back(&mu->parts);
    return collapse(levi.ambient, levi.natural, Partition(row_sum(ps)));
}

long long algebra_dimension(Algebra alg, int natural) {
    switch (norm_alg(alg)) {
    case Algebra::gl: return static_cast<long long>(natural) * natural;
    case Algebra::so: return static_cast<long long>(natural) * (natural - 1) / 2;
    case Algebra::sp: return static_cast<long long>(natural) * (natural + 1) / 2;
    default: return 0;
    }
}

long long orbit_dimension(const OrbitLabel& o) {
    Algebra a = norm_alg(o.alg);
    if (!is_valid_orbit(a, o.natural, o.partition))
        throw InvalidInputError("orbit_dimension: invalid label");
    long long sq = 0;
    for (int d : dual(o.partition).parts) sq += static_cast<long long>(d) * d;
    if (a == Algebra::gl) return algebra_dimension(a, o.natural) - sq;
    long long odd = 0;
    for (int part : o.partition.parts)
        if (part % 2 == 1) ++odd;
    long long centralizer = a == Algebra::sp ? (sq + odd) / 2 : (sq - odd) / 2;
    return algebra_dimension(a, o.natural) - centralizer;
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int next = std::min(rest, maxpart); next >= 1; --next) {
            cur.push_back(next);
            self(self, rest - next, next);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

std::vector<Partition> valid_partitions(Algebra alg, int natural) {
    std::vector<Partition> out;
    for (auto& p : all_partitions(natural))
        if (is_valid_orbit(alg, natural, p)) out.push_back(std::move(p));
    return out;
}

std::vector<ClassicalLevi> proper_levis(Algebra alg, int natural) {
    Algebra a = norm_alg(alg);
    std::vector<ClassicalLevi> out;
    if (a == Algebra::gl) {
        for (auto& blocks : all_partitions(natural))
            if (blocks.parts.size() >= 2)
                out.push_back({alg, natural, blocks.parts, 0});
        return out;
    }
    for (int m = natural % 2; m <= natural; m += 2) {
        int rest = (natural - m) / 2;
        for (auto& blocks : all_partitions(rest)) {
            if (m == natural && blocks.parts.empty()) continue; // the ambient itself
            out.push_back({alg, natural, blocks.parts, m});
        }
    }
    return out;
}

const std::set<Partition>& induced_partitions(Algebra alg, int natural) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::set<Partition>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto cache_key = std::make_pair(static_cast<int>(norm_alg(alg)), natural);
    auto it = cache.find(cache_key);
    if (it != cache.end()) return it->second;

    std::set<Partition> induced;
    for (const ClassicalLevi& levi : proper_levis(alg, natural)) {
        // all tuples of block partitions
        std::vector<std::vector<Partition>> choices;
        for (int b : levi.gl_blocks) choices.push_back(all_partitions(b));
        std::vector<Partition> residual_orbits;
        if (norm_alg(alg) != Algebra::gl)
            residual_orbits = valid_partitions(alg, levi.residual);

        std::vector<Partition> nu(choices.size());
        auto rec = [&](auto&& self, size_t i) -> void {
            if (i == choices.size()) {
                if (norm_alg(alg) == Algebra::gl) {
                    induced.insert(induce(levi, nu, std::nullopt).partition);
                } else {
                    for (const auto& mu : residual_orbits)
                        induced.insert(induce(levi, nu, mu).partition);
                }
                return;
            }
            for (const auto& p : choices[i]) {
                nu[i] = p;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    }
    return cache.emplace(cache_key, std::move(induced)).first->second;
}

bool is_rigid(const OrbitLabel& o, const Config& cfg) {
    if (o.natural > cfg.rigidity_bound)
        throw BudgetError("rigidity search beyond the configured bound (" +
                          std::to_string(cfg.rigidity_bound) + ")");
    if (!is_valid_orbit(o.alg, o.natural, o.partition))
        throw InvalidInputError("is_rigid: invalid orbit label");
    return induced_partitions(o.alg, o.natural).count(o.partition) == 0;
}

std::vector<Partition> rigid_partitions(Algebra alg, int natural, const Config& cfg) {
    if (natural > cfg.rigidity_bound)
        throw BudgetError("rigidity search beyond the configured bound");
    std::vector<Partition> out;
    const auto& induced = induced_partitions(alg, natural);
    for (auto& p : valid_partitions(alg, natural))
        if (induced.count(p) == 0) out.push_back(std::move(p));
    return out;
}

CounterexampleScan counterexample_scan(Algebra alg, int natural, const Config& cfg) {
    if (natural > cfg.rigidity_bound)
        throw BudgetError("rigidity search beyond the configured bound");
    CounterexampleScan scan;
    const auto& induced = induced_partitions(alg, natural);
    auto valid = valid_partitions(alg, natural);
    for (const auto& o1 : valid) {
        if (induced.count(o1)) continue; // o1 must be rigid
        for (const auto& o2 : valid) {
            if (o2 == o1 || !induced.count(o2)) continue; // o2 must be non-rigid
            if (!dominance_leq(o2, o1)) continue;
            // a very even label names two orbits, so the partition-level pair
            // is ambiguous; report it separately instead of as a pair
            if (is_very_even(alg, natural, o1) || is_very_even(alg, natural, o2))
                scan.flagged_very_even.emplace_back(o1, o2);
            else
                scan.pairs.emplace_back(o1, o2);
        }
    }
    std::sort(scan.pairs.begin(), scan.pairs.end());
    std::sort(scan.flagged_very_even.begin(), scan.flagged_very_even.end());
    return scan;
}

bool sheet_closure_leq(const OrbitLabel& a, const OrbitLabel& b) {
    if (norm_alg(a.alg) != Algebra::gl || norm_alg(b.alg) != Algebra::gl)
        throw InvalidInputError("sheet_closure_leq is defined for type A only");
    if (a.natural != b.natural)
        throw InvalidInputError("sheet_closure_leq: different ambient algebras");
    return sheet_preceq(a.partition, b.partition);
}

nlohmann::ordered_json orbit_to_json(const OrbitLabel& o, const Config& cfg) {
    nlohmann::ordered_json j;
    j["algebra"] = algebra_str(o.alg, o.natural);
    j["partition"] = o.partition.parts;
    j["rigid"] = is_rigid(o, cfg);
    j["dim"] = orbit_dimension(o);
    return j;
}

std::string dominance_hasse_dot(Algebra alg, int natural) {
    auto nodes = valid_partitions(alg, natural);
    std::sort(nodes.begin(), nodes.end(), [](const Partition& a, const Partition& b) {
        return b.parts < a.parts; // descending: regular orbit first
    });
    // very even type-D labels name two orbits; emit both tags with no
    // edge between them (the number-theoretic data cannot relate them)
    auto names = [&](const Partition& p) {
        std::vector<std::string> out{p.str()};
        if (is_very_even(alg, natural, p)) out = {p.str() + " (I)", p.str() + " (II)"};
        return out;
    };
    auto leq = [&](const Partition& a, const Partition& b) { return dominance_leq(a, b); };
    std::ostringstream out;
    out << "digraph closure {\n";
    for (const auto& p : nodes)
        for (const auto& n : names(p)) out << "  \"" << n << "\";\n";
    for (const auto& q : nodes)
        for (const auto& p : nodes) {
            if (p == q || !leq(p, q)) continue;
            bool covered = true;
            for (const auto& v : nodes)
                if (v != p && v != q && leq(p, v) && leq(v, q)) { covered = false; break; }
            if (covered)
                for (const auto& hi : names(q))
                    for (const auto& lo : names(p)) out << "  \"" << hi << "\" -> \"" << lo << "\";\n";
        }
    out << "}\n";
    return out.str();
}

} // namespace stratalab
