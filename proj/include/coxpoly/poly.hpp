#pragma once

#include <string>
#include <vector>

#include "coxpoly/numeric.hpp"

namespace coxpoly {

// Integer polynomial in one variable, ascending coefficient list
// (coeffs()[i] is the coefficient of lambda^i). The representation is
// normalized: the last stored coefficient is nonzero, and the zero
// polynomial is the empty list, so operator== is structural equality.
class PolyZ {
public:
    PolyZ() = default;
    explicit PolyZ(std::vector<Int> coeffs);

    static PolyZ constant(Int c);
    static PolyZ monomial(int degree, Int c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of lambda^i; zero beyond the stored range.
    const Int& coeff(int i) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& leading() const;

    // Multiply by lambda^k, k >= 0.
    PolyZ shifted(int k) const;
    // Coefficient list reversed (lambda^n * p(1/lambda) for deg-n p).
    PolyZ reversed() const;
    bool is_palindromic() const;

    PolyZ operator-() const;
    friend PolyZ operator+(const PolyZ& a, const PolyZ& b);
    friend PolyZ operator-(const PolyZ& a, const PolyZ& b);
    friend PolyZ operator*(const PolyZ& a, const PolyZ& b);
    friend PolyZ operator*(const Int& c, const PolyZ& p);
    bool operator==(const PolyZ& o) const { return coeffs_ == o.coeffs_; }

    std::string to_string() const;  // human-readable, ascending

private:
    std::vector<Int> coeffs_;
    void normalize();
};

struct NonExactDivision : std::runtime_error {
    PolyZ remainder;  // integer multiple of the true remainder when the
                      // quotient left Z[lambda]; exact remainder otherwise
    NonExactDivision(const std::string& msg, PolyZ rem)
        : std::runtime_error(msg), remainder(std::move(rem))
    {
    }
};

// Exact quotient num / den in Z[lambda]; throws NonExactDivision unless
// num == q * den holds on the nose.
PolyZ poly_exact_div(const PolyZ& num, const PolyZ& den);

}  // namespace coxpoly
