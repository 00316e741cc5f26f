#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace liecoh {

/// A basis label e^{i1} ^ ... ^ e^{ik} of the exterior algebra: a strictly
/// increasing sequence of generator indices in 1..n. The empty sequence is
/// the scalar label (degree 0).
class IndexSet {
public:
    IndexSet() = default;

    /// Throws std::invalid_argument unless idx is strictly increasing with
    /// all entries >= 1.
    explicit IndexSet(std::vector<int> idx);

    int degree() const { return static_cast<int>(idx_.size()); }
    int max_index() const { return idx_.empty() ? 0 : idx_.back(); }
    const std::vector<int>& indices() const { return idx_; }

    auto operator<=>(const IndexSet&) const = default;

    std::string to_string() const;  // "e135" / "e(1,3,12)" past index 9 / "1" for scalars

private:
    std::vector<int> idx_;
};

/// Merges two disjoint increasing sequences, returning the merged label and
/// the shuffle parity (+1/-1). Returns nullopt when the sequences intersect.
std::optional<std::pair<IndexSet, int>> merge_with_sign(const IndexSet& a, const IndexSet& b);

/// All C(n,k) strictly increasing k-subsets of 1..n in lexicographic order;
/// the canonical coordinate order for every matrix in the library.
/// k < 0 or k > n yields an empty list.
std::vector<IndexSet> exterior_basis(int n, int k);

long binomial(int n, int k);

}  // namespace liecoh
