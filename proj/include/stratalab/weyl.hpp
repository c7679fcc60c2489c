#pragma once

// Exact Weyl group elements.  An element is stored as the permutation it
// induces on the root list; the n x n integer matrix on the simple-root
// basis is recovered from the images of the simple roots whenever a rank
// computation needs it.  Equality, hashing and the exhaustive scans all
// work on the permutation form.

#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "stratalab/config.hpp"
#include "stratalab/root_system.hpp"

#include "json.hpp"

namespace stratalab {

struct WeylElement {
    std::vector<uint8_t> perm; // image of every root, by index
    bool operator==(const WeylElement&) const = default;
};

struct ConjClass {
    std::vector<WeylElement> elements; // sorted by (length, matrix lex)
    std::vector<WeylElement> c_min, c_max;
    int min_length = 0, max_length = 0;
    bool unique_max_length = false; // |c_max| == 1
    bool bruhat_dominant = false;   // the unique longest element dominates the class
    std::optional<WeylElement> maximum; // present iff both flags hold
    int reflection_rank = 0;            // rk(1 - w), constant on the class
};

class WeylGroup {
public:
    explicit WeylGroup(RootSystem rs);

    const RootSystem& roots() const { return rs_; }
    int rank() const { return rs_.rank(); }
    long long order() const { return rs_.weyl_order(); }

    const WeylElement& identity() const { return identity_; }
    const WeylElement& simple_reflection(int i) const { return simples_[i - 1]; } // 1-based
    WeylElement reflection(int root_idx) const;

    WeylElement compose(const WeylElement& u, const WeylElement& w) const; // u after w
    WeylElement inverse(const WeylElement& w) const;
    int act_index(const WeylElement& w, int root_idx) const { return w.perm[root_idx]; }
    RootVector act(const WeylElement& w, const RootVector& v) const;

    int length(const WeylElement& w) const;
    Mat matrix(const WeylElement& w) const;
    int reflection_rank(const WeylElement& w) const; // rk(1 - w)
    int absolute_length(const WeylElement& w) const; // BFS over all reflections
    bool is_involution(const WeylElement& w) const;
    bool bruhat_leq(const WeylElement& u, const WeylElement& w) const;

    // Deterministic comparison: (length, matrix row-major lex).
    bool elem_less(const WeylElement& u, const WeylElement& w) const;

    std::vector<int> reduced_word(const WeylElement& w) const; // 1-based letters
    WeylElement from_word(const std::vector<int>& word) const;

    WeylElement longest_element() const;
    // Longest element of the parabolic W_Pi, Pi given as 1-based simple indices.
    WeylElement parabolic_longest(const std::vector<int>& pi) const;

    uint64_t key(const WeylElement& w) const; // packed images of the simples

    const std::vector<WeylElement>& all_elements(const Config& cfg) const;

    ConjClass conjugacy_class(const WeylElement& w, const Config& cfg) const;
    std::vector<ConjClass> involution_classes(const Config& cfg) const;
    std::vector<ConjClass> all_classes(const Config& cfg) const;

    nlohmann::ordered_json class_to_json(const ConjClass& c) const;

private:
    RootSystem rs_;
    WeylElement identity_;
    std::vector<WeylElement> simples_;

    mutable std::mutex cache_mutex_; // guards first-touch of the lazy caches
    mutable std::vector<WeylElement> elements_;               // lazy full enumeration
    mutable std::unordered_map<uint64_t, int> element_index_;
    mutable std::unordered_map<uint64_t, int> abs_length_;    // lazy, keyed like elements

    void ensure_elements(const Config& cfg) const;
    void ensure_abs_lengths(const Config& cfg) const;
    void finish_class(ConjClass& c) const;
};

} // namespace stratalab
