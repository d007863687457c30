#pragma once

#include <vector>

#include "coxpoly/numeric.hpp"

namespace coxpoly {

// Dense rectangular matrix over Q. Entries are GMP rationals, always in
// lowest terms with positive denominator.
class RatMatrix {
public:
    RatMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    void swap_rows(int i, int j);

private:
    int rows_, cols_;
    std::vector<Rat> e_;
};

struct RankNullity {
    int rank;
    int nullity;
};

// Exact Gaussian elimination. Pivot selection is the first nonzero entry in
// column order, no magnitude heuristics, so runs are deterministic.
RankNullity rat_solve_dim(RatMatrix A);

// Reduced row echelon form, in place; returns the rank.
int rref_in_place(RatMatrix& A);

}  // namespace coxpoly
