#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multiassoc/rat.hpp"

namespace multiassoc {

// Dense exact-rational matrix with labeled rows. Row labels are the edge
// names ("3-7" for polygon edges, "2:4" for bipartite ones); column labels
// are vertex/coordinate pairs. Labels are carried for reports and tests,
// the numeric kernels ignore them.
struct RationalMatrix {
    std::size_t cols = 0;
    std::vector<std::vector<Rat>> rows;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

    RationalMatrix() = default;
    explicit RationalMatrix(std::size_t ncols) : cols(ncols) {}

    std::size_t nrows() const { return rows.size(); }

    void add_row(std::vector<Rat> row, std::string label = {});

    RationalMatrix restricted(const std::vector<std::size_t>& row_idx) const;
};

// Fraction-free (Bareiss) echelon form of the rows, tracking the row
// transform so the same factorization answers rank, left-kernel and
// in-span queries. Pivots are chosen by minimal bit length to control
// coefficient growth. Denominators are cleared column-wise up front;
// column scaling changes neither row dependences nor rank.
class RowSpace {
public:
    explicit RowSpace(const RationalMatrix& m, bool track_transform = true);

    int rank() const { return rank_; }
    std::size_t nrows() const { return nrows_; }

    // Basis of the left kernel (row dependences) as primitive integer
    // vectors, first nonzero entry positive.
    std::vector<std::vector<Rat>> left_kernel() const;

    // Coefficients c with sum_i c_i * row_i = target, or nullopt if the
    // target is outside the row span. Requires track_transform.
    std::optional<std::vector<Rat>> express(const std::vector<Rat>& target) const;

private:
    std::size_t nrows_ = 0, ncols_ = 0;
    bool tracked_ = false;
    int rank_ = 0;
    std::vector<Int> col_scale_;
    std::vector<std::vector<Int>> u_;  // echelon rows, then kernel transform rows
    std::vector<std::vector<Int>> t_;  // t_ * (scaled input) = u_
    std::vector<int> pivot_col_;       // per echelon row
};

int rank(const RationalMatrix& m);

// Basis of the left kernel: every returned v satisfies v^T M = 0 exactly.
std::vector<std::vector<Rat>> kernel_basis(const RationalMatrix& m);

// Unique coefficients expressing target in a linearly independent row set.
// Throws NotInSpan when no expression exists.
std::vector<Rat> solve_in_basis(const RationalMatrix& rows, const std::vector<Rat>& target);

// Scales a rational vector to a primitive integer one (same direction).
std::vector<Int> primitive_integer(const std::vector<Rat>& v);

} // namespace multiassoc
