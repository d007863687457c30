#pragma once

#include "coxpoly/int_matrix.hpp"

namespace coxpoly {

// Phi = -(C^-1)^t C for a unimodular Cartan matrix C.
IntMatrix coxeter_matrix(const IntMatrix& C);

// Characteristic polynomial of the Coxeter matrix; monic of degree n.
PolyZ coxeter_polynomial(const IntMatrix& C);

// Euler form <x,y> = x C^-t y^t on row vectors.
Int euler_form(const IntMatrix& C, const DimVector& x, const DimVector& y);

// <tau^j m, m> = (m Phi^j) C^-t m^t. Dimension vectors are rows acting on
// the right by Phi; negative j goes through the inverse of Phi.
Int tau_twisted_euler(const IntMatrix& C, const DimVector& m, int j);

// Class of the j-th indecomposable injective: row j of C (1-based j).
DimVector injective_class(const IntMatrix& C, int j);

}  // namespace coxpoly
