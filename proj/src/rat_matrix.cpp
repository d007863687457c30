#include "coxpoly/rat_matrix.hpp"

namespace coxpoly {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols)
{
    if (rows < 0 || cols < 0)
        throw InvalidParameter("RatMatrix: negative dimension");
    e_.assign(static_cast<size_t>(rows) * cols, Rat(0));
}

void RatMatrix::swap_rows(int i, int j)
{
    if (i == j)
        return;
    for (int c = 0; c < cols_; ++c)
        swap(at(i, c), at(j, c));
}

int rref_in_place(RatMatrix& A)
{
    int rank = 0;
    for (int c = 0; c < A.cols() && rank < A.rows(); ++c) {
        int piv = -1;
        for (int i = rank; i < A.rows(); ++i)
            if (A.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        A.swap_rows(rank, piv);
        const Rat lead = A.at(rank, c);
        for (int j = c; j < A.cols(); ++j)
            A.at(rank, j) /= lead;
        for (int i = 0; i < A.rows(); ++i) {
            if (i == rank || A.at(i, c) == 0)
                continue;
            const Rat f = A.at(i, c);
            for (int j = c; j < A.cols(); ++j)
                A.at(i, j) -= f * A.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

RankNullity rat_solve_dim(RatMatrix A)
{
    int rank = 0;
    for (int c = 0; c < A.cols() && rank < A.rows(); ++c) {
        int piv = -1;
        for (int i = rank; i < A.rows(); ++i)
            if (A.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        A.swap_rows(rank, piv);
        for (int i = rank + 1; i < A.rows(); ++i) {
            if (A.at(i, c) == 0)
                continue;
            const Rat f = A.at(i, c) / A.at(rank, c);
            for (int j = c; j < A.cols(); ++j)
                A.at(i, j) -= f * A.at(rank, j);
        }
        ++rank;
    }
    return {rank, A.cols() - rank};
}

}  // namespace coxpoly
