#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

namespace qgrass
{

/// Sign of a permutation of 0..n-1 given in one-line notation.
inline int permutation_sign(std::span<const int> w)
{
    int inversions = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            inversions += w[i] > w[j] ? 1 : 0;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

/// Calls fn(w, sign) for every permutation of 0..n-1 in lexicographic order.
template <class Fn>
void for_each_permutation(int n, Fn &&fn)
{
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    do {
        fn(std::span<const int>(w), permutation_sign(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

} // namespace qgrass
