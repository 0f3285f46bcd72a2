#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vanish {

// Exact binomial coefficient; saturates loudly rather than overflowing.
inline long long binomial(long long n, long long r) {
    if (r < 0 || n < 0 || r > n) return 0;
    r = std::min(r, n - r);
    long long acc = 1;
    for (long long i = 1; i <= r; ++i) {
        if (acc > (1LL << 62) / n)
            throw std::overflow_error("binomial: value does not fit in long long");
        acc = acc * (n - r + i) / i;
    }
    return acc;
}

// Visit all r-subsets of {0,...,n-1} in lexicographic order.
template <class F>
void for_each_combination(int n, int r, F&& visit) {
    if (r < 0 || r > n) return;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        visit(const_cast<const std::vector<int>&>(idx));
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Visit all r-subsets of a sorted base set, in lexicographic order.
template <class F>
void for_each_subset_of(const std::vector<int>& base, int r, F&& visit) {
    std::vector<int> current(static_cast<size_t>(std::max(r, 0)));
    for_each_combination(static_cast<int>(base.size()), r, [&](const std::vector<int>& idx) {
        for (int i = 0; i < r; ++i) current[i] = base[idx[i]];
        visit(const_cast<const std::vector<int>&>(current));
    });
}

struct Budget {
    long long max_vertices = 1'000'000;
    long long max_edge_tests = 100'000'000;
};

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace vanish
