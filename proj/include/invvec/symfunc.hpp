#pragma once

#include "invvec/characters.hpp"
#include "invvec/schur_expansion.hpp"

namespace invvec {

/// Schur expansion of the power sum p_mu: coefficient of s_lambda is
/// chi_lambda(mu), for every lambda of the same size.
SchurExpansion power_sum_to_schur(CharacterEngine& engine, const Partition& mu,
                                  int bound = kDefaultEnumerationBound);

/// f_mu: the Frobenius characteristic of the representation of S_n induced
/// from the trivial representation of the cyclic group generated by a
/// permutation of cycle type mu.  Computed as the plain average
/// (1/m) sum_{j=0}^{m-1} p2s(cycle type of w^j) with m = order_of(mu),
/// accumulated in integers; the final division by m must be exact (the sum
/// counts fixed points of a group action), so a remainder throws
/// std::logic_error.
SchurExpansion frobenius_f(CharacterEngine& engine, const Partition& mu,
                           int bound = kDefaultEnumerationBound);

/// Multiplicity of s_lambda in f_mu, computed without symmetric functions:
/// (1/m) sum over d | m of totient(m/d) * chi_lambda(cycle type of w^d).
/// This is the independent second route to the same number (the dimension of
/// the w_mu-fixed subspace of V_lambda).
Int multiplicity(CharacterEngine& engine, const Partition& lambda, const Partition& mu);

/// f >= g in the Schur basis: every coefficient of g is <= the corresponding
/// coefficient of f.  Throws std::domain_error when the degrees differ.
bool dominates_expansion(const SchurExpansion& f, const SchurExpansion& g);

/// Bilinear extension of schur_product; degrees add.
SchurExpansion expansion_product(const SchurExpansion& f, const SchurExpansion& g,
                                 int bound = kDefaultEnumerationBound);

} // namespace invvec
