#include "stratalab/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "stratalab/errors.hpp"

namespace stratalab {

WeylGroup::WeylGroup(RootSystem rs) : rs_(std::move(rs)) {
    const int count = rs_.root_count();
    identity_.perm.resize(count);
    for (int i = 0; i < count; ++i) identity_.perm[i] = static_cast<uint8_t>(i);
    simples_.reserve(rs_.rank());
    for (int i = 1; i <= rs_.rank(); ++i)
        simples_.push_back(reflection(rs_.simple_root_index(i)));
}

WeylElement WeylGroup::reflection(int root_idx) const {
    const RootVector& beta = rs_.root(root_idx);
    WeylElement s;
    s.perm.resize(rs_.root_count());
    for (int g = 0; g < rs_.root_count(); ++g) {
        long long c = rs_.pairing(rs_.root(g), beta);
        RootVector w = rs_.root(g);
        for (int k = 0; k < rs_.rank(); ++k) w[k] -= static_cast<int>(c) * beta[k];
        int idx = rs_.index_of(w);
        assert(idx >= 0);
        s.perm[g] = static_cast<uint8_t>(idx);
    }
    return s;
}

WeylElement WeylGroup::compose(const WeylElement& u, const WeylElement& w) const {
    WeylElement r;
    r.perm.resize(w.perm.size());
    for (size_t i = 0; i < w.perm.size(); ++i) r.perm[i] = u.perm[w.perm[i]];
    return r;
}

WeylElement WeylGroup::inverse(const WeylElement& w) const {
    WeylElement r;
    r.perm.resize(w.perm.size());
    for (size_t i = 0; i < w.perm.size(); ++i) r.perm[w.perm[i]] = static_cast<uint8_t>(i);
    return r;
}

RootVector WeylGroup::act(const WeylElement& w, const RootVector& v) const {
    return mat_apply(matrix(w), v);
}

int WeylGroup::length(const WeylElement& w) const {
    const int m = rs_.positive_count();
    int l = 0;
    for (int i = 0; i < m; ++i)
        if (w.perm[i] >= m) ++l;
    return l;
}

Mat WeylGroup::matrix(const WeylElement& w) const {
    const int n = rs_.rank();
    Mat m(n, n);
    for (int j = 1; j <= n; ++j) {
        const RootVector& img = rs_.root(w.perm[rs_.simple_root_index(j)]);
        for (int i = 0; i < n; ++i) m.at(i, j - 1) = img[i];
    }
    return m;
}

int WeylGroup::reflection_rank(const WeylElement& w) const {
    return mat_rank(mat_sub(Mat::identity(rs_.rank()), matrix(w)));
}

bool WeylGroup::is_involution(const WeylElement& w) const {
    for (size_t i = 0; i < w.perm.size(); ++i)
        if (w.perm[w.perm[i]] != i) return false;
    return true;
}

bool WeylGroup::bruhat_leq(const WeylElement& u0, const WeylElement& w0) const {
    // descent recursion: u <= w iff min(u, u s) <= w s for a right descent s of w
    WeylElement u = u0, w = w0;
    while (w != identity_) {
        if (length(u) > length(w)) return false;
        int i = 1;
        for (; i <= rs_.rank(); ++i)
            if (w.perm[rs_.simple_root_index(i)] >= static_cast<size_t>(rs_.positive_count())) break;
        assert(i <= rs_.rank());
        w = compose(w, simples_[i - 1]);
        WeylElement us = compose(u, simples_[i - 1]);
        if (length(us) < length(u)) u = std::move(us);
    }
    return u == identity_;
}

bool WeylGroup::elem_less(const WeylElement& u, const WeylElement& w) const {
    int lu = length(u), lw = length(w);
    if (lu != lw) return lu < lw;
    return matrix(u).a < matrix(w).a;
}

std::vector<int> WeylGroup::reduced_word(const WeylElement& w0) const {
    WeylElement w = w0;
    std::vector<int> word;
    while (w != identity_) {
        int i = 1;
        for (; i <= rs_.rank(); ++i)
            if (w.perm[rs_.simple_root_index(i)] >= static_cast<size_t>(rs_.positive_count())) break;
        word.push_back(i);
        w = compose(w, simples_[i - 1]);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

WeylElement WeylGroup::from_word(const std::vector<int>& word) const {
    WeylElement w = identity_;
    for (int i : word) w = compose(w, simples_[i - 1]);
    return w;
}

WeylElement WeylGroup::longest_element() const {
    std::vector<int> all(rs_.rank());
    for (int i = 0; i < rs_.rank(); ++i) all[i] = i + 1;
    return parabolic_longest(all);
}

WeylElement WeylGroup::parabolic_longest(const std::vector<int>& pi) const {
    WeylElement w = identity_;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i : pi) {
            if (w.perm[rs_.simple_root_index(i)] < static_cast<size_t>(rs_.positive_count())) {
                w = compose(w, simples_[i - 1]);
                moved = true;
            }
        }
    }
    return w;
}

uint64_t WeylGroup::key(const WeylElement& w) const {
    uint64_t k = 0;
    for (int i = 1; i <= rs_.rank(); ++i)
        k = (k << 8) | w.perm[rs_.simple_root_index(i)];
    return k;
}

void WeylGroup::ensure_elements(const Config& cfg) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (!elements_.empty()) return;
    if (order() > cfg.scan_budget)
        throw BudgetError("group " + rs_.name() + " of order " + std::to_string(order()) +
                          " exceeds the scan budget " + std::to_string(cfg.scan_budget));
    elements_.push_back(identity_);
    element_index_[key(identity_)] = 0;
    for (size_t head = 0; head < elements_.size(); ++head) {
        WeylElement w = elements_[head]; // copy: elements_ may reallocate
        for (int i = 1; i <= rs_.rank(); ++i) {
            WeylElement ws = compose(w, simples_[i - 1]);
            uint64_t k = key(ws);
            if (element_index_.emplace(k, static_cast<int>(elements_.size())).second)
                elements_.push_back(std::move(ws));
        }
    }
    assert(static_cast<long long>(elements_.size()) == order());
}

const std::vector<WeylElement>& WeylGroup::all_elements(const Config& cfg) const {
    ensure_elements(cfg);
    return elements_;
}

void WeylGroup::ensure_abs_lengths(const Config& cfg) const {
    ensure_elements(cfg);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (!abs_length_.empty()) return;
    // BFS from the identity in the Cayley graph over all reflections
    std::vector<WeylElement> refls;
    for (int b = 0; b < rs_.positive_count(); ++b) refls.push_back(reflection(b));
    abs_length_[key(identity_)] = 0;
    std::deque<WeylElement> queue{identity_};
    while (!queue.empty()) {
        WeylElement w = std::move(queue.front());
        queue.pop_front();
        int d = abs_length_.at(key(w));
        for (const WeylElement& t : refls) {
            WeylElement wt = compose(w, t);
            if (abs_length_.emplace(key(wt), d + 1).second) queue.push_back(std::move(wt));
        }
    }
}

int WeylGroup::absolute_length(const WeylElement& w) const {
    ensure_abs_lengths(Config{});
    return abs_length_.at(key(w));
}

void WeylGroup::finish_class(ConjClass& c) const {
    std::vector<std::pair<std::vector<long long>, size_t>> order;
    order.reserve(c.elements.size());
    for (size_t i = 0; i < c.elements.size(); ++i) {
        std::vector<long long> k = matrix(c.elements[i]).a;
        k.insert(k.begin(), length(c.elements[i]));
        order.emplace_back(std::move(k), i);
    }
    std::sort(order.begin(), order.end());
    std::vector<WeylElement> sorted;
    sorted.reserve(c.elements.size());
    for (auto& [k, i] : order) sorted.push_back(std::move(c.elements[i]));
    c.elements = std::move(sorted);

    c.min_length = length(c.elements.front());
    c.max_length = length(c.elements.back());
    for (const auto& w : c.elements) {
        int l = length(w);
        if (l == c.min_length) c.c_min.push_back(w);
        if (l == c.max_length) c.c_max.push_back(w);
    }
    c.unique_max_length = c.c_max.size() == 1;
    c.reflection_rank = reflection_rank(c.elements.front());
    if (c.unique_max_length) {
        const WeylElement& m = c.c_max.front();
        c.bruhat_dominant = true;
        for (const auto& w : c.elements)
            if (!(w == m) && !bruhat_leq(w, m)) {
                c.bruhat_dominant = false;
                break;
            }
        if (c.bruhat_dominant) c.maximum = m;
    }
}

ConjClass WeylGroup::conjugacy_class(const WeylElement& w, const Config& cfg) const {
    if (order() > cfg.scan_budget)
        throw BudgetError("class scan in " + rs_.name() + " exceeds the budget");
    ConjClass c;
    std::unordered_map<uint64_t, bool> seen;
    c.elements.push_back(w);
    seen[key(w)] = true;
    for (size_t head = 0; head < c.elements.size(); ++head) {
        WeylElement x = c.elements[head];
        for (int i = 0; i < rs_.rank(); ++i) {
            WeylElement y = compose(simples_[i], compose(x, simples_[i]));
            if (seen.emplace(key(y), true).second) c.elements.push_back(std::move(y));
        }
    }
    finish_class(c);
    return c;
}

std::vector<ConjClass> WeylGroup::involution_classes(const Config& cfg) const {
    ensure_elements(cfg);
    std::vector<bool> assigned(elements_.size(), false);
    std::vector<ConjClass> classes;
    for (size_t idx = 0; idx < elements_.size(); ++idx) {
        if (assigned[idx] || !is_involution(elements_[idx])) continue;
        ConjClass c = conjugacy_class(elements_[idx], cfg);
        for (const auto& w : c.elements) assigned[element_index_.at(key(w))] = true;
        classes.push_back(std::move(c));
    }
    std::sort(classes.begin(), classes.end(), [this](const ConjClass& a, const ConjClass& b) {
        int da = a.max_length + a.reflection_rank, db = b.max_length + b.reflection_rank;
        if (da != db) return da < db;
        if (a.max_length != b.max_length) return a.max_length < b.max_length;
        return matrix(a.elements.front()).a < matrix(b.elements.front()).a;
    });
    return classes;
}

std::vector<ConjClass> WeylGroup::all_classes(const Config& cfg) const {
    ensure_elements(cfg);
    std::vector<bool> assigned(elements_.size(), false);
    std::vector<ConjClass> classes;
    for (size_t idx = 0; idx < elements_.size(); ++idx) {
        if (assigned[idx]) continue;
        ConjClass c = conjugacy_class(elements_[idx], cfg);
        for (const auto& w : c.elements) assigned[element_index_.at(key(w))] = true;
        classes.push_back(std::move(c));
    }
    std::sort(classes.begin(), classes.end(), [this](const ConjClass& a, const ConjClass& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        if (a.max_length != b.max_length) return a.max_length < b.max_length;
        return matrix(a.elements.front()).a < matrix(b.elements.front()).a;
    });
    return classes;
}

nlohmann::ordered_json WeylGroup::class_to_json(const ConjClass& c) const {
    nlohmann::ordered_json j;
    j["size"] = c.elements.size();
    j["min_length"] = c.min_length;
    j["max_length"] = c.max_length;
    j["has_maximum"] = c.maximum.has_value();
    j["maximum_word"] = c.maximum ? reduced_word(*c.maximum) : std::vector<int>{};
    return j;
}

} // namespace stratalab
