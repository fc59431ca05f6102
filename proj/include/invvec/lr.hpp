#pragma once

#include <string>
#include <vector>

#include "invvec/partition.hpp"
#include "invvec/schur_expansion.hpp"

namespace invvec {

/// A Littlewood-Richardson tableau: a semistandard filling of a skew shape
/// whose reverse row reading word (rows read right to left, top to bottom) is
/// a lattice permutation.  The constructor validates all of that, so every
/// live LRTableau is a certificate.
class LRTableau {
  public:
    /// rows[r][j] is the entry in row r, absolute column shape.row_begin(r)+j.
    LRTableau(SkewShape shape, std::vector<std::vector<int>> rows);

    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    /// Entry at row r, absolute column c (must be a cell of the shape).
    int entry(int r, int c) const { return rows_[r][c - shape_.row_begin(r)]; }
    /// Content counts: weight().part(i-1) = number of cells holding i.
    const Partition& weight() const { return weight_; }

    /// One row per line, inner cells shown as dots: "...11" etc.
    std::string to_string() const;

  private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
    Partition weight_;
};

/// The Littlewood-Richardson coefficient c^lambda_{alpha,beta}: the number of
/// LR tableaux of shape lambda/alpha and weight beta.  Returns 0 (rather than
/// erroring) when alpha is not contained in lambda or the sizes do not add
/// up, so expansion loops need no special-casing.
long long lr_coefficient(const Partition& lambda, const Partition& alpha,
                         const Partition& beta);

/// All LR tableaux of the given shape and weight, in the deterministic order
/// produced by row-major backtracking with smaller entries tried first.
/// Throws std::domain_error when the cell count differs from weight.n().
std::vector<LRTableau> enumerate_lr_tableaux(const SkewShape& shape,
                                             const Partition& weight);

/// The column tableau of lambda/alpha: entry i in the i-th cell of each
/// column, top to bottom.  Its weight is the dominance-greatest weight with a
/// positive LR coefficient for this shape.  Throws std::domain_error when
/// alpha is not contained in lambda.
LRTableau canonical_column_tableau(const Partition& lambda, const Partition& alpha);

/// s_alpha * s_beta = sum over lambda of c^lambda_{alpha,beta} s_lambda.
SchurExpansion schur_product(const Partition& alpha, const Partition& beta,
                             int bound = kDefaultEnumerationBound);

} // namespace invvec
