#include "invvec/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace invvec {

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int dimension(const Partition& lambda) {
    Partition conj = conjugate(lambda);
    Int hooks = 1;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda.part(r); ++c)
            hooks *= (lambda.part(r) - c) + (conj.part(c) - r) - 1;
    Int num = factorial(lambda.n());
    if (num % hooks != 0)
        throw InternalError("dimension: hook product does not divide n!");
    return num / hooks;
}

Int class_size(const Partition& mu) {
    Int z = 1;
    int run = 0, prev = 0;
    for (int m : mu.parts()) {
        z *= m;
        if (m == prev) ++run; else { run = 1; prev = m; }
        z *= run; // accumulates m_i! one factor at a time
    }
    Int num = factorial(mu.n());
    if (num % z != 0) throw InternalError("class_size: z_mu does not divide n!");
    return num / z;
}

Int CharacterEngine::character(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        throw std::domain_error("character: lambda and mu must partition the same n");
    std::lock_guard<std::mutex> lock(mutex_);
    return recurse(lambda.parts(), mu.parts(), 0);
}

std::size_t CharacterEngine::cache_size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.size();
}

Int CharacterEngine::recurse(const std::vector<int>& lambda, const std::vector<int>& mu,
                             std::size_t mu_index) {
    if (mu_index == mu.size()) return 1; // lambda is empty here (sizes stay in sync)

    std::vector<int> key = lambda;
    key.push_back(-1);
    key.insert(key.end(), mu.begin() + static_cast<long>(mu_index), mu.end());
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    const int strip = mu[mu_index];
    const int rows = static_cast<int>(lambda.size());

    // First-column hook lengths (beta numbers): removing a border strip of
    // length k means replacing some b by b-k with b-k not yet present; the
    // strip's height is the number of beta numbers strictly between them.
    std::vector<int> beta(rows);
    for (int i = 0; i < rows; ++i) beta[i] = lambda[i] + (rows - 1 - i);

    Int total = 0;
    for (int i = 0; i < rows; ++i) { // i = starting (top) row of the strip
        int target = beta[i] - strip;
        if (target < 0) continue;
        int height = 0;
        bool occupied = false;
        for (int j = i + 1; j < rows; ++j) {
            if (beta[j] > target) ++height;
            if (beta[j] == target) { occupied = true; break; }
        }
        if (occupied) continue;

        std::vector<int> next_beta = beta;
        next_beta[i] = target;
        std::sort(next_beta.rbegin(), next_beta.rend());
        std::vector<int> next_lambda;
        next_lambda.reserve(rows);
        for (int j = 0; j < rows; ++j) {
            int part = next_beta[j] - (rows - 1 - j);
            if (part > 0) next_lambda.push_back(part);
        }

        Int term = recurse(next_lambda, mu, mu_index + 1);
        if (height % 2) total -= term; else total += term;
    }

    cache_.emplace(std::move(key), total);
    return total;
}

} // namespace invvec
