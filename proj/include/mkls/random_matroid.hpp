#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mkls/matroid.hpp"

namespace mkls {

// Seeded random sparse paving matroid: pick a rank, then greedily pack random
// k-subsets as circuit-hyperplanes under the pairwise |intersection| <= k-2
// rule. Deterministic for a fixed generator state.
inline Matroid random_sparse_paving(std::mt19937_64& rng, int n_min, int n_max,
                                    int max_hyperplanes = 3) {
    std::uniform_int_distribution<int> nd(n_min, n_max);
    const int n = nd(rng);
    std::uniform_int_distribution<int> kd(2, n - 1);
    const int k = kd(rng);
    std::uniform_int_distribution<int> cd(0, max_hyperplanes);
    const int target = cd(rng);

    std::vector<int> elems(n);
    for (int i = 0; i < n; ++i) elems[i] = i;
    std::vector<Bits> chosen;
    int attempts = 0;
    while (static_cast<int>(chosen.size()) < target && attempts < 50 * (target + 1)) {
        ++attempts;
        std::vector<int> pool(elems);
        std::shuffle(pool.begin(), pool.end(), rng);
        Bits cand = 0;
        for (int i = 0; i < k; ++i) cand |= Bits(1) << pool[i];
        bool ok = true;
        for (Bits h : chosen)
            if (popcount(h & cand) > k - 2) ok = false;
        if (ok) chosen.push_back(cand);
    }
    return Matroid::sparse_paving(n, k, chosen);
}

}  // namespace mkls
