#include "coxpoly/poly.hpp"

#include <sstream>

namespace coxpoly {

namespace {
const Int kZero = 0;
}

PolyZ::PolyZ(std::vector<Int> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

void PolyZ::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

PolyZ PolyZ::constant(Int c)
{
    std::vector<Int> v;
    v.push_back(std::move(c));
    return PolyZ(std::move(v));
}

PolyZ PolyZ::monomial(int degree, Int c)
{
    if (degree < 0)
        throw InvalidParameter("monomial: negative degree");
    std::vector<Int> v(degree + 1, Int(0));
    v[degree] = std::move(c);
    return PolyZ(std::move(v));
}

const Int& PolyZ::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return kZero;
    return coeffs_[i];
}

const Int& PolyZ::leading() const
{
    if (coeffs_.empty())
        return kZero;
    return coeffs_.back();
}

PolyZ PolyZ::shifted(int k) const
{
    if (k < 0)
        throw InvalidParameter("shifted: negative shift");
    if (is_zero())
        return {};
    std::vector<Int> v(coeffs_.size() + k, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        v[i + k] = coeffs_[i];
    return PolyZ(std::move(v));
}

PolyZ PolyZ::reversed() const
{
    std::vector<Int> v(coeffs_.rbegin(), coeffs_.rend());
    return PolyZ(std::move(v));
}

bool PolyZ::is_palindromic() const
{
    const size_t n = coeffs_.size();
    for (size_t i = 0; i < n / 2; ++i)
        if (coeffs_[i] != coeffs_[n - 1 - i])
            return false;
    return true;
}

PolyZ PolyZ::operator-() const
{
    std::vector<Int> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        v[i] = -coeffs_[i];
    return PolyZ(std::move(v));
}

PolyZ operator+(const PolyZ& a, const PolyZ& b)
{
    std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        v[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i)
        v[i] += b.coeffs_[i];
    return PolyZ(std::move(v));
}

PolyZ operator-(const PolyZ& a, const PolyZ& b)
{
    return a + (-b);
}

PolyZ operator*(const PolyZ& a, const PolyZ& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PolyZ(std::move(v));
}

PolyZ operator*(const Int& c, const PolyZ& p)
{
    std::vector<Int> v(p.coeffs_.size());
    for (size_t i = 0; i < p.coeffs_.size(); ++i)
        v[i] = c * p.coeffs_[i];
    return PolyZ(std::move(v));
}

std::string PolyZ::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        if (!first)
            os << (coeffs_[i] > 0 ? " + " : " - ");
        else if (coeffs_[i] < 0)
            os << "-";
        Int a = abs(coeffs_[i]);
        if (i == 0 || a != 1)
            os << a.get_str();
        if (i > 0) {
            if (a != 1)
                os << "*";
            os << "x";
            if (i > 1)
                os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

PolyZ poly_exact_div(const PolyZ& num, const PolyZ& den)
{
    if (den.is_zero())
        throw InvalidParameter("poly_exact_div: zero divisor");
    if (num.is_zero())
        return {};
    if (num.degree() < den.degree())
        throw NonExactDivision("poly_exact_div: degree of numerator below divisor", num);

    // Long division over Q; the quotient is accepted only if the remainder
    // vanishes and every quotient coefficient is an integer.
    const int dn = num.degree();
    const int dd = den.degree();
    std::vector<Rat> rem(dn + 1);
    for (int i = 0; i <= dn; ++i)
        rem[i] = Rat(num.coeff(i));
    std::vector<Rat> quot(dn - dd + 1);
    const Rat lead(den.leading());
    for (int k = dn - dd; k >= 0; --k) {
        Rat q = rem[k + dd] / lead;
        quot[k] = q;
        if (q == 0)
            continue;
        for (int j = 0; j <= dd; ++j)
            rem[k + j] -= q * Rat(den.coeff(j));
    }

    bool rem_zero = true;
    for (int i = 0; i < dd && rem_zero; ++i)
        rem_zero = rem[i] == 0;
    bool quot_integral = true;
    std::vector<Int> qz(quot.size());
    for (size_t i = 0; i < quot.size() && quot_integral; ++i) {
        if (quot[i].get_den() != 1)
            quot_integral = false;
        else
            qz[i] = quot[i].get_num();
    }
    if (rem_zero && !quot_integral)
        throw NonExactDivision("poly_exact_div: quotient not in Z[x]", PolyZ{});
    if (!rem_zero) {
        // Clear denominators so the diagnostic stays integral.
        Int lcm = 1;
        for (int i = 0; i < dd; ++i)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rem[i].get_den().get_mpz_t());
        std::vector<Int> rz(dd, Int(0));
        for (int i = 0; i < dd; ++i)
            rz[i] = rem[i].get_num() * (lcm / rem[i].get_den());
        PolyZ r(std::move(rz));
        throw NonExactDivision("poly_exact_div: nonzero remainder " + r.to_string(), r);
    }
    return PolyZ(std::move(qz));
}

}  // namespace coxpoly
