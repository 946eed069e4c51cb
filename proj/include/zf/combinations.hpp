#pragma once

#include <vector>

namespace zf {

/// k-subset positions in lexicographic order: {0,1},{0,2},...,{1,2},...
/// Returns false once exhausted. Start with first_combination.
inline bool first_combination(std::vector<int>& idx, int n, int k)
{
    if (k < 0 || k > n)
        return false;
    idx.resize(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    return true;
}

inline bool next_combination_lex(std::vector<int>& idx, int n)
{
    int k = static_cast<int>(idx.size());
    for (int j = k - 1; j >= 0; --j) {
        if (idx[j] < n - k + j) {
            ++idx[j];
            for (int t = j + 1; t < k; ++t)
                idx[t] = idx[t - 1] + 1;
            return true;
        }
    }
    return false;
}

/// Colexicographic order: {0,1},{0,2},{1,2},{0,3},{1,3},{2,3},...
inline bool next_combination_colex(std::vector<int>& idx, int n)
{
    int k = static_cast<int>(idx.size());
    for (int j = 0; j < k; ++j) {
        int limit = (j + 1 < k) ? idx[j + 1] : n;
        if (idx[j] + 1 < limit) {
            ++idx[j];
            for (int t = 0; t < j; ++t)
                idx[t] = t;
            return true;
        }
    }
    return false;
}

} // namespace zf
