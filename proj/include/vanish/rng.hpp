#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace vanish {

// splitmix64 finalizer; the basis of every random decision in this project so
// that runs are reproducible from a single master seed.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t combine(std::uint64_t a, std::uint64_t b) {
    return mix64(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

// Derive an independent stream seed from (master, tag, counters).
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                 std::uint64_t c0 = 0, std::uint64_t c1 = 0) {
    std::uint64_t h = mix64(master);
    for (char ch : tag) h = combine(h, static_cast<std::uint64_t>(static_cast<unsigned char>(ch)));
    h = combine(h, c0);
    h = combine(h, c1);
    return h;
}

// Unbiased-enough map of a hash value into [0, bound) via 128-bit multiply.
inline std::uint64_t map_below(std::uint64_t h, std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(h) * bound) >> 64);
}

// Keyed hash of a sorted integer set; used for lazily materialized random maps.
inline std::uint64_t subset_hash(std::uint64_t seed, std::span<const int> s) {
    std::uint64_t h = mix64(seed);
    for (int v : s) h = combine(h, static_cast<std::uint64_t>(v) + 1);
    return h;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return map_below(next(), bound); }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // count distinct values from {0,...,n-1}, sorted.
    std::vector<int> sample_distinct(int n, int count);

    // Fisher-Yates shuffle.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

inline std::vector<int> Rng::sample_distinct(int n, int count) {
    // Floyd's algorithm keeps this cheap even when count << n.
    std::vector<int> out;
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int i = n - count; i < n; ++i) {
        int t = static_cast<int>(below(static_cast<std::uint64_t>(i) + 1));
        if (seen[static_cast<size_t>(t)]) t = i;
        seen[static_cast<size_t>(t)] = true;
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace vanish
