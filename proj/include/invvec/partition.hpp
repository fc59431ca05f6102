#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace invvec {

/// Thrown when an enumeration would exceed the configured size bound.
class SizeLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an internal exactness invariant fails (a division that must
/// be exact was not, a checked postcondition broke).  Must never fire.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Default cap on n for partition enumeration; p(30) = 5604 keeps every
/// enumeration desk-sized.  Overridable per call (CLI flag --bound).
inline constexpr int kDefaultEnumerationBound = 30;

/// An integer partition: weakly decreasing positive parts.  Doubles as the
/// cycle type of a permutation of S_n.
///
/// Immutable value type.  The canonical total order is by size n first, then
/// reverse-lexicographic within fixed n, so (4) < (3,1) < (2,2) < (2,1,1) <
/// (1,1,1,1); sorted associations keyed by Partition iterate in this order.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Parses the text form: comma-separated weakly decreasing positive
    /// integers, e.g. "5,3,2"; the empty partition is written "-".
    /// Rejects out-of-order or non-positive input instead of sorting it.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    /// Size of the partition (sum of parts).
    int n() const { return n_; }
    /// Number of parts.
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// Part at index i, zero-padded past the last part.
    int part(int i) const { return i >= 0 && i < length() ? parts_[i] : 0; }

    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        if (a.n_ != b.n_) return a.n_ <=> b.n_;
        return b.parts_ <=> a.parts_; // reverse-lexicographic: (n) first
    }

  private:
    std::vector<int> parts_;
    int n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// All partitions of n in reverse-lexicographic order, (n) first, (1^n) last.
/// Throws SizeLimitError when n exceeds the bound.
std::vector<Partition> enumerate_partitions(int n, int bound = kDefaultEnumerationBound);

/// Conjugate (transposed Young diagram): result[i] = #{j : parts[j] >= i+1}.
Partition conjugate(const Partition& p);

/// True iff inner fits inside outer row by row (with zero padding).
bool contains(const Partition& outer, const Partition& inner);

/// Dominance order on partitions of equal size: every prefix sum of a is >=
/// the corresponding prefix sum of b.  Throws std::domain_error on unequal
/// sizes.
bool dominates(const Partition& a, const Partition& b);

/// Cycle type of w^power for w of cycle type mu: each part m splits into
/// gcd(m, power) cycles of length m / gcd(m, power).
Partition power_cycle_type(const Partition& mu, long long power);

/// Order of a permutation of cycle type mu (lcm of the parts).  Throws
/// std::domain_error for the empty partition.
long long order_of(const Partition& mu);

/// Parity of a permutation of cycle type mu: even iff sum(part - 1) is even.
bool is_even_permutation(const Partition& mu);

/// A skew shape outer/inner.  inner must be contained in outer.
/// Rows and columns are 0-indexed; row r holds cells in columns
/// [row_begin(r), row_end(r)).
class SkewShape {
  public:
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

    int cell_count() const { return outer_.n() - inner_.n(); }
    int row_count() const { return outer_.length(); }
    int row_begin(int r) const { return inner_.part(r); }
    int row_end(int r) const { return outer_.part(r); }
    int cells_in_row(int r) const { return row_end(r) - row_begin(r); }

    /// Number of skew cells in column c (they form a contiguous run of rows).
    int column_length(int c) const;
    /// column_length for every column of outer, index 0..outer[0]-1.
    std::vector<int> column_lengths() const;

    friend bool operator==(const SkewShape& a, const SkewShape& b) = default;

  private:
    Partition outer_;
    Partition inner_;
};

} // namespace invvec
