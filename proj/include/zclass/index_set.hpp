#pragma once

#include <cstddef>
#include <vector>

#include "zclass/rational.hpp"

namespace zclass {

// Sorted, distinct indices into [0, n).
using IndexSet = std::vector<std::size_t>;

inline void check_index_set(const IndexSet& s, std::size_t n) {
    if (s.empty()) throw dimension_error("empty index set");
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] >= n) throw dimension_error("index set out of range");
        if (k > 0 && s[k] <= s[k - 1]) throw dimension_error("index set not strictly increasing");
    }
}

// All size-k subsets of {0,...,n-1} in lexicographic order.
inline std::vector<IndexSet> subsets_of_size(std::size_t n, std::size_t k) {
    std::vector<IndexSet> out;
    if (k == 0 || k > n) return out;
    IndexSet cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (cur[i] != i + n - k) break;
            if (i == 0) return out;
        }
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

inline IndexSet complement_of(const IndexSet& s, std::size_t n) {
    IndexSet out;
    std::size_t p = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (p < s.size() && s[p] == i) {
            ++p;
        } else {
            out.push_back(i);
        }
    }
    return out;
}

}  // namespace zclass
