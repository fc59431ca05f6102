#include "invvec/lr.hpp"

#include <algorithm>
#include <stdexcept>

namespace invvec {

namespace {

Partition weight_of_counts(const std::vector<int>& counts) {
    std::vector<int> parts(counts);
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts)); // ctor rejects gaps / increases
}

} // namespace

LRTableau::LRTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.row_count())
        throw std::invalid_argument("LRTableau: row count does not match shape");
    int max_entry = 0;
    for (int r = 0; r < shape_.row_count(); ++r) {
        if (static_cast<int>(rows_[r].size()) != shape_.cells_in_row(r))
            throw std::invalid_argument("LRTableau: row length does not match shape");
        for (std::size_t j = 0; j < rows_[r].size(); ++j) {
            int e = rows_[r][j];
            if (e < 1) throw std::invalid_argument("LRTableau: entries must be positive");
            max_entry = std::max(max_entry, e);
            if (j > 0 && e < rows_[r][j - 1])
                throw std::invalid_argument("LRTableau: rows must weakly increase");
        }
        if (r > 0) {
            for (int c = shape_.row_begin(r); c < shape_.row_end(r); ++c) {
                bool above_in_shape = c >= shape_.row_begin(r - 1) && c < shape_.row_end(r - 1);
                if (above_in_shape && entry(r, c) <= entry(r - 1, c))
                    throw std::invalid_argument("LRTableau: columns must strictly increase");
            }
        }
    }
    // Reverse row reading word: rows right to left, top to bottom.
    std::vector<int> counts(max_entry, 0);
    for (const auto& row : rows_) {
        for (auto it = row.rbegin(); it != row.rend(); ++it) {
            int e = *it;
            ++counts[e - 1];
            if (e > 1 && counts[e - 1] > counts[e - 2])
                throw std::invalid_argument("LRTableau: reading word is not a lattice permutation");
        }
    }
    weight_ = weight_of_counts(counts);
}

std::string LRTableau::to_string() const {
    std::string out;
    for (int r = 0; r < shape_.row_count(); ++r) {
        if (r) out += '\n';
        for (int c = 0; c < shape_.row_end(r); ++c) {
            if (c) out += ' ';
            if (c < shape_.row_begin(r)) out += '.';
            else out += std::to_string(entry(r, c));
        }
    }
    return out;
}

namespace {

// Row-major backtracking over the cells of the shape, smaller entries first.
// Prunes on the semistandard constraints, on remaining weight, and on the
// lattice condition in its cell-local form: the number of e's in rows <= r
// may not exceed the number of (e-1)'s in rows <= r-1.
template <typename Emit>
void walk_lr_fillings(const SkewShape& shape, const Partition& weight, Emit&& emit) {
    const int max_entry = weight.length();
    std::vector<int> remaining = weight.parts();
    std::vector<std::vector<int>> rows(shape.row_count());
    for (int r = 0; r < shape.row_count(); ++r)
        rows[r].assign(static_cast<std::size_t>(shape.cells_in_row(r)), 0);

    struct Cell { int row, col; }; // col is absolute
    std::vector<Cell> order;
    for (int r = 0; r < shape.row_count(); ++r)
        for (int c = shape.row_begin(r); c < shape.row_end(r); ++c)
            order.push_back({r, c});

    std::vector<int> counts(max_entry, 0);          // entries placed so far
    std::vector<int> prev_row_counts(max_entry, 0); // counts before the current row

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == order.size()) {
            emit(rows);
            return;
        }
        const auto [r, c] = order[idx];
        const bool starts_row = idx == 0 || order[idx - 1].row != r;
        std::vector<int> saved;
        if (starts_row) {
            saved = prev_row_counts;
            prev_row_counts = counts;
        }

        int lo = 1;
        if (c > shape.row_begin(r)) lo = std::max(lo, rows[r][c - 1 - shape.row_begin(r)]);
        if (r > 0 && c >= shape.row_begin(r - 1) && c < shape.row_end(r - 1))
            lo = std::max(lo, rows[r - 1][c - shape.row_begin(r - 1)] + 1);

        for (int e = lo; e <= max_entry; ++e) {
            if (remaining[e - 1] == 0) continue;
            if (e > 1 && counts[e - 1] + 1 > prev_row_counts[e - 2]) continue;
            rows[r][c - shape.row_begin(r)] = e;
            --remaining[e - 1];
            ++counts[e - 1];
            self(self, idx + 1);
            --counts[e - 1];
            ++remaining[e - 1];
            rows[r][c - shape.row_begin(r)] = 0;
        }

        if (starts_row) prev_row_counts = saved;
    };
    rec(rec, 0);
}

} // namespace

long long lr_coefficient(const Partition& lambda, const Partition& alpha,
                         const Partition& beta) {
    if (alpha.n() + beta.n() != lambda.n()) return 0;
    if (!contains(lambda, alpha)) return 0;
    SkewShape shape(lambda, alpha);
    long long count = 0;
    walk_lr_fillings(shape, beta, [&](const std::vector<std::vector<int>>&) { ++count; });
    return count;
}

std::vector<LRTableau> enumerate_lr_tableaux(const SkewShape& shape,
                                             const Partition& weight) {
    if (shape.cell_count() != weight.n())
        throw std::domain_error("enumerate_lr_tableaux: weight size differs from cell count");
    std::vector<LRTableau> out;
    walk_lr_fillings(shape, weight, [&](const std::vector<std::vector<int>>& rows) {
        out.emplace_back(shape, rows);
    });
    return out;
}

LRTableau canonical_column_tableau(const Partition& lambda, const Partition& alpha) {
    if (!contains(lambda, alpha))
        throw std::domain_error("canonical_column_tableau: alpha not contained in lambda");
    SkewShape shape(lambda, alpha);
    std::vector<std::vector<int>> rows(shape.row_count());
    for (int r = 0; r < shape.row_count(); ++r) {
        for (int c = shape.row_begin(r); c < shape.row_end(r); ++c) {
            // top row of this column's run of skew cells
            int top = 0;
            while (shape.row_begin(top) > c) ++top;
            rows[r].push_back(r - top + 1);
        }
    }
    return LRTableau(std::move(shape), std::move(rows));
}

SchurExpansion schur_product(const Partition& alpha, const Partition& beta, int bound) {
    SchurExpansion result(alpha.n() + beta.n());
    for (const Partition& lambda : enumerate_partitions(alpha.n() + beta.n(), bound)) {
        if (!contains(lambda, alpha)) continue;
        long long c = lr_coefficient(lambda, alpha, beta);
        if (c != 0) result.add(lambda, Int(c));
    }
    return result;
}

} // namespace invvec
