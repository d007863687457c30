#include "coxpoly/coxeter.hpp"

namespace coxpoly {

IntMatrix coxeter_matrix(const IntMatrix& C)
{
    return -(unimodular_inverse(C).transpose() * C);
}

PolyZ coxeter_polynomial(const IntMatrix& C)
{
    return char_poly_int(coxeter_matrix(C));
}

Int euler_form(const IntMatrix& C, const DimVector& x, const DimVector& y)
{
    const int n = C.dim();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw DimensionMismatch("euler_form: vector length differs from Cartan dimension");
    const DimVector xc = row_times_matrix(x, unimodular_inverse(C).transpose());
    Int s = 0;
    for (int i = 0; i < n; ++i)
        s += xc[i] * y[i];
    return s;
}

Int tau_twisted_euler(const IntMatrix& C, const DimVector& m, int j)
{
    if (static_cast<int>(m.size()) != C.dim())
        throw DimensionMismatch("tau_twisted_euler: vector length differs from Cartan dimension");
    DimVector v = m;
    if (j != 0) {
        IntMatrix phi = coxeter_matrix(C);
        if (j < 0)
            phi = unimodular_inverse(phi);
        for (int k = 0; k < (j < 0 ? -j : j); ++k)
            v = row_times_matrix(v, phi);
    }
    return euler_form(C, v, m);
}

DimVector injective_class(const IntMatrix& C, int j)
{
    if (j < 1 || j > C.dim())
        throw IndexOutOfRange("injective_class: vertex index out of range");
    DimVector r(C.dim());
    for (int i = 0; i < C.dim(); ++i)
        r[i] = C.at(j - 1, i);
    return r;
}

}  // namespace coxpoly
