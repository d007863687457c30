#pragma once

#include <map>
#include <string>

#include "coxpoly/coxeter.hpp"
#include "coxpoly/poly.hpp"

namespace coxpoly {

// Audit trail for a closed-form evaluation: the integer numerator and
// denominator assembled before the exact division, plus which case of the
// dispatch fired. Invariant: numerator == result * denominator.
struct FormulaReport {
    std::map<std::string, long> params;
    std::string case_label;
    PolyZ numerator;
    PolyZ denominator;
    PolyZ result;
};

// Coxeter polynomial of the 2 x u grid algebra, degree 2u.
PolyZ chi_rectangle_formula(int u);
FormulaReport chi_rectangle_report(int u);

// Same polynomial assembled from the division-free expanded sums.
PolyZ chi_rectangle_expansion(int u);

// One-vertex branch extension, degree 2u+1.
PolyZ chi_ext1_formula(int u);
FormulaReport chi_ext1_report(int u);

// Length-v branch extension, degree 2u+v; v = 0 falls back to the rectangle.
PolyZ chi_ext_formula(int u, int v);
FormulaReport chi_ext_report(int u, int v);

// Coxeter polynomial of the Nakayama algebra N(n,r); requires 2r >= n+2.
PolyZ chi_nakayama_formula(int n, int r);
FormulaReport chi_nakayama_report(int n, int r);

// Coefficient recursion for a one-point extension by a module with class m:
// b_i = a_i - a_{i-1}(<M,M> - 1) - sum_{j=2..i} a_{i-j} <tau^{j-1} M, M>.
// chiA must be monic with deg(chiA) == dim(C) == len(m).
PolyZ happel_extension_poly(const PolyZ& chiA, const IntMatrix& C, const DimVector& m);

// chi_B = (1 + lambda) chiA - lambda chiPerp.
PolyZ one_point_step(const PolyZ& chiA, const PolyZ& chiPerp);

}  // namespace coxpoly
