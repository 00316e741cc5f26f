#include "liecoh/index_set.hpp"

#include <stdexcept>
#include <string>

namespace liecoh {

IndexSet::IndexSet(std::vector<int> idx) : idx_(std::move(idx)) {
    for (std::size_t i = 0; i < idx_.size(); ++i) {
        if (idx_[i] < 1) throw std::invalid_argument("IndexSet: indices start at 1");
        if (i > 0 && idx_[i - 1] >= idx_[i])
            throw std::invalid_argument("IndexSet: indices must be strictly increasing");
    }
}

std::string IndexSet::to_string() const {
    if (idx_.empty()) return "1";
    if (idx_.back() <= 9) {
        std::string s = "e";
        for (int i : idx_) s += static_cast<char>('0' + i);
        return s;
    }
    std::string s = "e(";
    for (std::size_t i = 0; i < idx_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(idx_[i]);
    }
    s += ')';
    return s;
}

std::optional<std::pair<IndexSet, int>> merge_with_sign(const IndexSet& a, const IndexSet& b) {
    const auto& u = a.indices();
    const auto& v = b.indices();
    std::vector<int> out;
    out.reserve(u.size() + v.size());
    int sign = 1;
    std::size_t i = 0, j = 0;
    while (i < u.size() && j < v.size()) {
        if (u[i] == v[j]) return std::nullopt;
        if (u[i] < v[j]) {
            out.push_back(u[i++]);
        } else {
            // v[j] jumps over the remaining entries of u
            if ((u.size() - i) % 2 != 0) sign = -sign;
            out.push_back(v[j++]);
        }
    }
    while (i < u.size()) out.push_back(u[i++]);
    while (j < v.size()) out.push_back(v[j++]);
    return std::make_pair(IndexSet(std::move(out)), sign);
}

std::vector<IndexSet> exterior_basis(int n, int k) {
    std::vector<IndexSet> out;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.emplace_back(cur);
        // next k-combination of 1..n in lexicographic order
        int t = k - 1;
        while (t >= 0 && cur[static_cast<std::size_t>(t)] == n - (k - 1 - t)) --t;
        if (t < 0) break;
        ++cur[static_cast<std::size_t>(t)];
        for (int s = t + 1; s < k; ++s)
            cur[static_cast<std::size_t>(s)] = cur[static_cast<std::size_t>(s - 1)] + 1;
    }
    return out;
}

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace liecoh
