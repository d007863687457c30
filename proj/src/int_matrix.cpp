#include "coxpoly/int_matrix.hpp"

#include <sstream>

#include "coxpoly/rat_matrix.hpp"

namespace coxpoly {

IntMatrix::IntMatrix(int n) : n_(n)
{
    if (n < 1)
        throw InvalidParameter("IntMatrix: dimension must be >= 1");
    e_.assign(static_cast<size_t>(n) * n, Int(0));
}

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows)
{
    const int n = static_cast<int>(rows.size());
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw DimensionMismatch("IntMatrix::from_rows: ragged rows");
        for (int j = 0; j < n; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator-() const
{
    IntMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            m.at(i, j) = -at(i, j);
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.dim() != b.dim())
        throw DimensionMismatch("IntMatrix product: dimensions differ");
    const int n = a.dim();
    IntMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < n; ++j)
                c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

Int IntMatrix::trace() const
{
    Int t = 0;
    for (int i = 0; i < n_; ++i)
        t += at(i, i);
    return t;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < n_; ++j)
            os << at(i, j).get_str() << (j + 1 < n_ ? " " : "");
        os << (i + 1 < n_ ? "\n" : "]");
    }
    return os.str();
}

DimVector row_times_matrix(const DimVector& x, const IntMatrix& M)
{
    if (static_cast<int>(x.size()) != M.dim())
        throw DimensionMismatch("row_times_matrix: length mismatch");
    DimVector y(x.size(), Int(0));
    for (int i = 0; i < M.dim(); ++i) {
        if (x[i] == 0)
            continue;
        for (int j = 0; j < M.dim(); ++j)
            y[j] += x[i] * M.at(i, j);
    }
    return y;
}

Int det(const IntMatrix& M)
{
    const int n = M.dim();
    IntMatrix a = M;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0)
                return 0;
            for (int j = 0; j < n; ++j)
                swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

PolyZ char_poly_int(const IntMatrix& M)
{
    const int n = M.dim();
    // Descending coefficients of the current principal submatrix.
    std::vector<Int> p{Int(1), -M.at(0, 0)};
    for (int k = 1; k < n; ++k) {
        // Split the (k+1)x(k+1) principal block as inner A_k, last row R,
        // last column S, corner a. The new coefficient vector is the lower
        // triangular Toeplitz product with t = (1, -a, -R S, -R A_k S, ...).
        std::vector<Int> t(k + 2);
        t[0] = 1;
        t[1] = -M.at(k, k);
        std::vector<Int> v(k);
        for (int i = 0; i < k; ++i)
            v[i] = M.at(i, k);
        for (int j = 2; j <= k + 1; ++j) {
            Int dot = 0;
            for (int i = 0; i < k; ++i)
                dot += M.at(k, i) * v[i];
            t[j] = -dot;
            if (j <= k) {
                std::vector<Int> w(k, Int(0));
                for (int i = 0; i < k; ++i)
                    for (int l = 0; l < k; ++l)
                        w[i] += M.at(i, l) * v[l];
                v.swap(w);
            }
        }
        std::vector<Int> q(k + 2, Int(0));
        for (int i = 0; i < k + 2; ++i)
            for (int j = 0; j < static_cast<int>(p.size()) && j <= i; ++j)
                if (i - j < static_cast<int>(t.size()))
                    q[i] += t[i - j] * p[j];
        p.swap(q);
    }
    std::vector<Int> asc(p.rbegin(), p.rend());
    return PolyZ(std::move(asc));
}

IntMatrix unimodular_inverse(const IntMatrix& M)
{
    Int d = det(M);
    if (d != 1 && d != -1)
        throw NotUnimodular("unimodular_inverse: det = " + d.get_str(), d);
    const int n = M.dim();
    RatMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug.at(i, j) = Rat(M.at(i, j));
        aug.at(i, n + i) = 1;
    }
    rref_in_place(aug);
    IntMatrix inv(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& e = aug.at(i, n + j);
            if (e.get_den() != 1)
                throw std::logic_error("unimodular_inverse: non-integer entry");
            inv.at(i, j) = e.get_num();
        }
    return inv;
}

}  // namespace coxpoly
