#ifndef GCH_KOSZUL_HPP
#define GCH_KOSZUL_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace gch {

/* Parity of a permutation given as the image sequence perm[i] = sigma(i),
 * via inversion count.  Returns +1 or -1. */
inline int permutation_sign(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

/* Koszul sign of reordering a list of graded objects.
 *
 * The input lists the objects in their target (output) order; entry k holds
 * (source position, parity).  Each crossing of two objects contributes a
 * factor (-1)^{p_i p_j}, so only inversions between two odd objects flip the
 * sign.  Source positions must be distinct. */
inline int koszul_reorder_sign(const std::vector<std::pair<int, int>>& objs) {
    int flips = 0;
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = i + 1; j < objs.size(); ++j)
            if (objs[i].first > objs[j].first)
                flips += objs[i].second * objs[j].second;
    return (flips % 2 == 0) ? 1 : -1;
}

/* Sign of stable-sorting a list of keys whose entries all have odd parity
 * (the common case: edge lists).  Returns 0 if two keys are equal, which
 * for odd objects means the element vanishes; otherwise +1/-1. */
template <class Key>
inline int odd_sort_sign(std::vector<Key>& keys) {
    int inv = 0;
    const std::size_t n = keys.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (keys[i] == keys[j]) return 0;
            if (keys[j] < keys[i]) ++inv;
        }
    std::sort(keys.begin(), keys.end());
    return (inv % 2 == 0) ? 1 : -1;
}

} // namespace gch

#endif
