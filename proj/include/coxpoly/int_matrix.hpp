#pragma once

#include <vector>

#include "coxpoly/numeric.hpp"
#include "coxpoly/poly.hpp"

namespace coxpoly {

// Dense square integer matrix, row-major, 0-based element access.
class IntMatrix {
public:
    explicit IntMatrix(int n);
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    int dim() const { return n_; }
    Int& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator-() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

    Int trace() const;
    std::string to_string() const;

private:
    int n_;
    std::vector<Int> e_;
};

using DimVector = std::vector<Int>;

DimVector row_times_matrix(const DimVector& x, const IntMatrix& M);

struct NotUnimodular : std::runtime_error {
    Int det;
    NotUnimodular(const std::string& msg, Int d) : std::runtime_error(msg), det(std::move(d)) {}
};

// Exact determinant (fraction-free Bareiss elimination).
Int det(const IntMatrix& M);

// det(lambda*I - M), ascending coefficients, monic of degree n. Division-free
// Samuelson-Berkowitz iteration on leading principal submatrices, so every
// intermediate value stays an integer.
PolyZ char_poly_int(const IntMatrix& M);

// Integer inverse of a matrix with det = +-1; throws NotUnimodular otherwise.
IntMatrix unimodular_inverse(const IntMatrix& M);

}  // namespace coxpoly
