#include "coxpoly/closed_forms.hpp"

namespace coxpoly {

namespace {

PolyZ xp(int k)
{
    return PolyZ::monomial(k);
}

PolyZ cst(long v)
{
    return PolyZ::constant(Int(v));
}

// lambda^k + s with s = +-1
PolyZ power_plus(int k, const Int& s)
{
    return xp(k) + PolyZ::constant(s);
}

// (-lambda)^k
PolyZ neg_lambda_pow(int k)
{
    return PolyZ::monomial(k, sign_pow(k));
}

PolyZ finish(FormulaReport& rep)
{
    rep.result = poly_exact_div(rep.numerator, rep.denominator);
    return rep.result;
}

}  // namespace

FormulaReport chi_rectangle_report(int u)
{
    if (u < 1)
        throw InvalidParameter("chi_rectangle_formula: u must be >= 1");
    FormulaReport rep;
    rep.params["u"] = u;
    const Int s = sign_pow(u + 1);
    if (u % 3 != 2) {
        rep.case_label = "u%3!=2";
        rep.numerator = (xp(1) + cst(1)) * power_plus(3 * u + 3, -s);
        rep.denominator = power_plus(3, 1) * power_plus(u + 1, -s);
    } else {
        rep.case_label = "u%3==2";
        const PolyZ f = power_plus(u + 1, -s);
        rep.numerator = (xp(1) + cst(1)) * f * f;
        rep.denominator = power_plus(3, 1);
    }
    finish(rep);
    return rep;
}

PolyZ chi_rectangle_formula(int u)
{
    return chi_rectangle_report(u).result;
}

PolyZ chi_rectangle_expansion(int u)
{
    if (u < 1)
        throw InvalidParameter("chi_rectangle_expansion: u must be >= 1");
    const int i = u / 3;
    const PolyZ lp1 = xp(1) + cst(1);
    PolyZ out;
    switch (u % 3) {
        case 0: {
            for (int j = 0; j <= i - 1; ++j)
                out = out - lp1 * neg_lambda_pow(3 * i + 2 + 3 * j);
            out = out + neg_lambda_pow(3 * i);
            for (int j = 0; j <= i - 1; ++j)
                out = out + lp1 * neg_lambda_pow(3 * j);
            break;
        }
        case 1: {
            for (int j = 0; j <= i - 1; ++j)
                out = out - lp1 * neg_lambda_pow(3 * i + 4 + 3 * j);
            out = out + neg_lambda_pow(3 * i) * (xp(2) + xp(1) + cst(1));
            for (int j = 0; j <= i - 1; ++j)
                out = out + lp1 * neg_lambda_pow(3 * j);
            break;
        }
        case 2: {
            for (int j = 0; j <= i; ++j)
                out = out - lp1 * neg_lambda_pow(3 * i + 3 + 3 * j);
            for (int j = 0; j <= i; ++j)
                out = out + lp1 * neg_lambda_pow(3 * j);
            break;
        }
    }
    return out;
}

FormulaReport chi_ext1_report(int u)
{
    if (u < 1)
        throw InvalidParameter("chi_ext1_formula: u must be >= 1");
    FormulaReport rep;
    rep.params["u"] = u;
    const PolyZ lp1 = xp(1) + cst(1);
    const Int s = sign_pow(u + 1);
    switch (u % 3) {
        case 0:
            rep.case_label = "u%3==0";
            rep.numerator = lp1 * power_plus(2 * u + 3, 1);
            break;
        case 1:
            rep.case_label = "u%3==1";
            rep.numerator = lp1 * power_plus(u + 1, s) * power_plus(u + 2, s);
            break;
        default:
            rep.case_label = "u%3==2";
            rep.numerator = lp1 * power_plus(u + 1, -s) * power_plus(u + 2, -s);
            break;
    }
    rep.denominator = power_plus(3, 1);
    finish(rep);
    return rep;
}

PolyZ chi_ext1_formula(int u)
{
    return chi_ext1_report(u).result;
}

FormulaReport chi_ext_report(int u, int v)
{
    if (u < 1 || v < 0)
        throw InvalidParameter("chi_ext_formula: need u >= 1, v >= 0");
    if (v == 0) {
        FormulaReport rep = chi_rectangle_report(u);
        rep.params["v"] = 0;
        rep.case_label += " (v=0 base)";
        return rep;
    }
    FormulaReport rep;
    rep.params["u"] = u;
    rep.params["v"] = v;
    const PolyZ lp1 = xp(1) + cst(1);
    switch (u % 3) {
        case 0: {
            rep.case_label = "u%3==0";
            PolyZ mid;
            for (int j = 2; j <= v; ++j)
                mid = mid + PolyZ::monomial(u + j, sign_pow(u));
            rep.numerator = lp1 * (xp(2 * u + v + 2) + mid + cst(1));
            break;
        }
        case 1: {
            rep.case_label = "u%3==1";
            PolyZ mid;
            for (int j = 0; j <= v; ++j)
                mid = mid + PolyZ::monomial(u + j + 1, sign_pow(u + 1));
            rep.numerator = lp1 * (xp(2 * u + v + 2) + mid + cst(1));
            break;
        }
        default: {
            rep.case_label = "u%3==2";
            const Int s = sign_pow(u + 1);
            rep.numerator = lp1 * power_plus(u + 1, -s) * power_plus(u + v + 1, -s);
            break;
        }
    }
    rep.denominator = power_plus(3, 1);
    finish(rep);
    return rep;
}

PolyZ chi_ext_formula(int u, int v)
{
    return chi_ext_report(u, v).result;
}

FormulaReport chi_nakayama_report(int n, int r)
{
    if (r < 2 || r > n)
        throw InvalidParameter("chi_nakayama_formula: need 2 <= r <= n");
    if (2 * r < n + 2)
        throw PreconditionViolated("chi_nakayama_formula: need 2r >= n+2");
    FormulaReport rep;
    rep.params["n"] = n;
    rep.params["r"] = r;
    const int s = n - r;
    const Int sg = sign_pow(s);
    const PolyZ lp1 = xp(1) + cst(1);
    if (2 * r == n + 2) {
        if (s % 3 != 1) {
            rep.case_label = "2r=n+2, (n-r)%3!=1";
            rep.numerator = lp1 * power_plus(3 * s + 6, -sg);
            rep.denominator = power_plus(3, 1) * power_plus(s + 2, -sg);
        } else {
            rep.case_label = "2r=n+2, (n-r)%3==1";
            const PolyZ f = power_plus(s + 2, -sg);
            rep.numerator = lp1 * f * f;
            rep.denominator = power_plus(3, 1);
        }
    } else {
        rep.denominator = power_plus(3, 1);
        switch (s % 3) {
            case 0: {
                rep.case_label = "2r>=n+3, (n-r)%3==0";
                PolyZ mid;
                for (int j = 0; j <= 2 * r - n - 2; ++j)
                    mid = mid + PolyZ::monomial(s + 2 + j, sg);
                rep.numerator = lp1 * (xp(n + 2) + mid + cst(1));
                break;
            }
            case 1:
                rep.case_label = "2r>=n+3, (n-r)%3==1";
                rep.numerator = lp1 * power_plus(s + 2, -sg) * power_plus(r, -sg);
                break;
            default: {
                rep.case_label = "2r>=n+3, (n-r)%3==2";
                PolyZ mid;
                for (int j = 2; j <= 2 * r - n - 2; ++j)
                    mid = mid + PolyZ::monomial(s + 1 + j, -sg);
                rep.numerator = lp1 * (xp(n + 2) + mid + cst(1));
                break;
            }
        }
    }
    finish(rep);
    return rep;
}

PolyZ chi_nakayama_formula(int n, int r)
{
    return chi_nakayama_report(n, r).result;
}

PolyZ happel_extension_poly(const PolyZ& chiA, const IntMatrix& C, const DimVector& m)
{
    const int n = C.dim();
    if (chiA.degree() != n || static_cast<int>(m.size()) != n)
        throw DimensionMismatch("happel_extension_poly: degree/dimension mismatch");
    if (chiA.leading() != 1)
        throw InvalidParameter("happel_extension_poly: chiA must be monic");

    // a[i] is the coefficient of lambda^(n-i).
    std::vector<Int> a(n + 1);
    for (int i = 0; i <= n; ++i)
        a[i] = chiA.coeff(n - i);
    const Int self = euler_form(C, m, m);
    std::vector<Int> twisted(n + 1);  // twisted[j] = <tau^j m, m>, j = 1..n
    for (int j = 1; j <= n; ++j)
        twisted[j] = tau_twisted_euler(C, m, j);

    std::vector<Int> b(n + 2, Int(0));
    for (int i = 0; i <= n + 1; ++i) {
        Int bi = (i <= n) ? a[i] : Int(0);
        if (i >= 1)
            bi -= a[i - 1] * (self - 1);
        for (int j = 2; j <= i; ++j)
            if (i - j <= n)
                bi -= a[i - j] * twisted[j - 1];
        b[i] = bi;
    }
    std::vector<Int> asc(n + 2);
    for (int i = 0; i <= n + 1; ++i)
        asc[n + 1 - i] = b[i];
    return PolyZ(std::move(asc));
}

PolyZ one_point_step(const PolyZ& chiA, const PolyZ& chiPerp)
{
    return chiA + chiA.shifted(1) - chiPerp.shifted(1);
}

}  // namespace coxpoly
