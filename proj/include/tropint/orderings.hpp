#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace tropint {

// A cyclic ordering of the labels {1..n} modulo rotation and reflection.
// Canonical form: label 1 first; of the ordering and its reversal (each
// rotated to start with 1), the lexicographically smaller one is kept.
class Ordering {
public:
    Ordering() = default;

    // Canonicalizes an arbitrary permutation of {1..n}, n >= 4.
    // Throws std::invalid_argument if seq is not such a permutation.
    explicit Ordering(std::vector<int> seq);

    int n() const { return static_cast<int>(labels_.size()); }
    const std::vector<int>& labels() const { return labels_; }
    int operator[](int i) const { return labels_[static_cast<std::size_t>(i)]; }

    // Position of each label in the cycle: result[label] in [0, n).
    std::vector<int> positions() const;

    // Applies a bijection on {1..n} to every label and re-canonicalizes.
    // perm[k-1] is the image of label k.
    Ordering relabeled(const std::vector<int>& perm) const;

    // Comma-separated labels, e.g. "1,3,5,2,4".
    std::string str() const;
    static Ordering parse(const std::string& text);

    auto operator<=>(const Ordering&) const = default;

private:
    std::vector<int> labels_;
};

// All (n-1)!/2 canonical orderings, sorted lexicographically. The sort
// order fixes the row/column indexing of every matrix in this project.
class OrderingCatalog {
public:
    // 4 <= n <= kMaxN. Enumeration is by permutations of {2..n} prefixed
    // by 1, keeping only representatives that are <= their reflection.
    explicit OrderingCatalog(int n);

    static constexpr int kMaxN = 10;

    int n() const { return n_; }
    std::size_t size() const { return orderings_.size(); }
    const Ordering& at(std::size_t i) const { return orderings_[i]; }
    const std::vector<Ordering>& all() const { return orderings_; }

    // Index of a canonical ordering; throws if absent.
    std::size_t index_of(const Ordering& o) const;

private:
    int n_ = 0;
    std::vector<Ordering> orderings_;
};

}  // namespace tropint
