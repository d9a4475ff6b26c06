#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spanhyper/rational.hpp"

namespace spanhyper {

// Advances a sorted r-subset of 1..n to its lexicographic successor.
inline bool next_subset(std::vector<int>& s, int n) {
    int r = static_cast<int>(s.size());
    for (int i = r - 1; i >= 0; --i) {
        if (s[i] < n - (r - 1 - i)) {
            ++s[i];
            for (int j = i + 1; j < r; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<int> first_subset(int r) {
    std::vector<int> s(r);
    for (int i = 0; i < r; ++i) s[i] = i + 1;
    return s;
}

// Lexicographic rank of a sorted r-subset of 1..n, in 0..C(n,r)-1.
inline std::uint64_t rank_subset(std::span<const int> s, int n) {
    int r = static_cast<int>(s.size());
    std::uint64_t rank = 0;
    int prev = 0;
    for (int i = 0; i < r; ++i) {
        for (int v = prev + 1; v < s[i]; ++v) rank += binomial_u64(n - v, r - 1 - i);
        prev = s[i];
    }
    return rank;
}

// Inverse of rank_subset.
inline std::vector<int> unrank_subset(std::uint64_t rank, int n, int r) {
    std::vector<int> out;
    out.reserve(r);
    int v = 1;
    for (int slots = r; slots > 0; --slots) {
        while (true) {
            std::uint64_t below = binomial_u64(n - v, slots - 1);
            if (rank < below) break;
            rank -= below;
            ++v;
        }
        out.push_back(v);
        ++v;
    }
    return out;
}

}  // namespace spanhyper
