#pragma once

#include <cstddef>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "invvec/bigint.hpp"
#include "invvec/partition.hpp"

namespace invvec {

Int factorial(int n);

/// Dimension of the irreducible representation V_lambda by the hook length
/// formula, n! / prod(hooks).  Equals character(lambda, (1^n)).
Int dimension(const Partition& lambda);

/// Number of permutations in S_n with cycle type mu: n! / z_mu where
/// z_mu = prod_i i^{m_i} m_i!.
Int class_size(const Partition& mu);

/// Exact irreducible character values chi_lambda(mu) of S_n by
/// Murnaghan-Nakayama border-strip recursion: peel a strip of length
/// mu_1 (largest part first) from lambda in every legal way and recurse with
/// sign (-1)^(strip height - 1).
///
/// Values are memoized per engine instance.  The cache is mutex-guarded, so
/// one engine may be shared between threads (calls then serialize); for
/// parallel fan-out give each worker its own engine.
class CharacterEngine {
  public:
    /// chi_lambda(mu).  Throws std::domain_error when sizes differ.
    Int character(const Partition& lambda, const Partition& mu);

    std::size_t cache_size() const;

  private:
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const noexcept {
            std::size_t h = 1469598103934665603ull;
            for (int x : v)
                h = (h ^ static_cast<std::size_t>(x + 1)) * 1099511628211ull;
            return h;
        }
    };

    Int recurse(const std::vector<int>& lambda, const std::vector<int>& mu,
                std::size_t mu_index);

    std::unordered_map<std::vector<int>, Int, VecHash> cache_;
    mutable std::mutex mutex_;
};

} // namespace invvec
