#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace pirlrc {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline std::uint64_t factorial(std::uint64_t n) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

/// k-subsets of {0..n-1} in lexicographic order.
inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

/// rank-th k-subset of {0..n-1} in lexicographic order.
inline std::vector<std::size_t> unrank_subset(std::size_t n, std::size_t k, std::uint64_t rank) {
    std::vector<std::size_t> out;
    out.reserve(k);
    std::size_t start = 0;
    for (std::size_t slot = 0; slot < k; ++slot) {
        for (std::size_t v = start;; ++v) {
            std::uint64_t block = binomial(n - 1 - v, k - 1 - slot);
            if (rank < block) {
                out.push_back(v);
                start = v + 1;
                break;
            }
            rank -= block;
        }
    }
    return out;
}

/// rank-th permutation of items (factorial number system, items in given order).
template <typename T>
std::vector<T> unrank_permutation(std::vector<T> items, std::uint64_t rank) {
    std::vector<T> out;
    out.reserve(items.size());
    while (!items.empty()) {
        std::uint64_t f = factorial(items.size() - 1);
        std::size_t idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        out.push_back(items[idx]);
        items.erase(items.begin() + idx);
    }
    return out;
}

/// Lehmer rank of a permutation of {0..n-1}; inverse of unrank_permutation
/// applied to the identity item list.
inline std::uint64_t rank_permutation(const std::vector<std::size_t>& perm) {
    std::uint64_t rank = 0;
    std::size_t n = perm.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (perm[j] < perm[i]) ++smaller;
        rank += smaller * factorial(n - 1 - i);
    }
    return rank;
}

}  // namespace pirlrc
