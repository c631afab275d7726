#include "tropint/orderings.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tropint {

namespace {

void check_permutation(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size());
    if (n < 4)
        throw std::invalid_argument("ordering needs at least 4 labels, got " +
                                    std::to_string(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : seq) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("sequence is not a permutation of {1..n}");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

// Rotates seq so that label 1 comes first.
std::vector<int> rotate_to_one(const std::vector<int>& seq) {
    auto it = std::find(seq.begin(), seq.end(), 1);
    std::vector<int> out(seq.size());
    std::rotate_copy(seq.begin(), it, seq.end(), out.begin());
    return out;
}

}  // namespace

Ordering::Ordering(std::vector<int> seq) {
    check_permutation(seq);
    std::vector<int> fwd = rotate_to_one(seq);
    std::reverse(seq.begin(), seq.end());
    std::vector<int> rev = rotate_to_one(seq);
    labels_ = std::min(fwd, rev);
}

std::vector<int> Ordering::positions() const {
    std::vector<int> pos(labels_.size() + 1, -1);
    for (std::size_t i = 0; i < labels_.size(); ++i)
        pos[static_cast<std::size_t>(labels_[i])] = static_cast<int>(i);
    return pos;
}

Ordering Ordering::relabeled(const std::vector<int>& perm) const {
    const std::size_t n = labels_.size();
    if (perm.size() != n)
        throw std::invalid_argument("relabeling permutation has wrong size");
    check_permutation(perm);
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = perm[static_cast<std::size_t>(labels_[i] - 1)];
    return Ordering(std::move(out));
}

std::string Ordering::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i) os << ',';
        os << labels_[i];
    }
    return os.str();
}

Ordering Ordering::parse(const std::string& text) {
    std::vector<int> seq;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used])))
            ++used;
        if (used != tok.size())
            throw std::invalid_argument("bad ordering token '" + tok + "'");
        seq.push_back(v);
    }
    return Ordering(std::move(seq));
}

OrderingCatalog::OrderingCatalog(int n) : n_(n) {
    if (n < 4 || n > kMaxN)
        throw std::invalid_argument("catalog supports 4 <= n <= " +
                                    std::to_string(kMaxN) + ", got " +
                                    std::to_string(n));
    std::vector<int> tail(static_cast<std::size_t>(n - 1));
    std::iota(tail.begin(), tail.end(), 2);
    do {
        std::vector<int> seq;
        seq.reserve(static_cast<std::size_t>(n));
        seq.push_back(1);
        seq.insert(seq.end(), tail.begin(), tail.end());
        // Reflection duplicates are dropped by keeping only sequences that
        // are already canonical.
        Ordering o(seq);
        if (o.labels() == seq) orderings_.push_back(std::move(o));
    } while (std::next_permutation(tail.begin(), tail.end()));
    // Prefixed-by-1 sequences come out of next_permutation in lexicographic
    // order already; keep the sort as a guard.
    std::sort(orderings_.begin(), orderings_.end());
}

std::size_t OrderingCatalog::index_of(const Ordering& o) const {
    auto it = std::lower_bound(orderings_.begin(), orderings_.end(), o);
    if (it == orderings_.end() || *it != o)
        throw std::invalid_argument("ordering " + o.str() + " not in catalog (n mismatch?)");
    return static_cast<std::size_t>(it - orderings_.begin());
}

}  // namespace tropint
