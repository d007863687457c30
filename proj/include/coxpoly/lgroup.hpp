#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxpoly/numeric.hpp"

namespace coxpoly {

// Weight triple of the rank-one abelian group L(p1,p2,p3) on generators
// x1,x2,x3 with p1 x1 = p2 x2 = p3 x3 = c.
struct WeightTriple {
    int p1, p2, p3;
    WeightTriple(int a, int b, int c) : p1(a), p2(b), p3(c)
    {
        if (a < 2 || b < 2 || c < 2)
            throw InvalidParameter("WeightTriple: weights must be >= 2");
    }
};

// Element in normal form n1 x1 + n2 x2 + n3 x3 + m c with 0 <= ni < pi.
// Elements are only ever stored normalized, so operator== is group equality.
struct LElement {
    std::int64_t n1 = 0, n2 = 0, n3 = 0, m = 0;
    bool operator==(const LElement&) const = default;
};

LElement normalize(const WeightTriple& p, std::int64_t n1, std::int64_t n2, std::int64_t n3,
                   std::int64_t m);
LElement add(const WeightTriple& p, const LElement& a, const LElement& b);
LElement neg(const WeightTriple& p, const LElement& a);
LElement scale(const WeightTriple& p, std::int64_t k, const LElement& a);

// Dualizing element c - (x1 + x2 + x3); normal form (p1-1, p2-1, p3-1, -2).
LElement canonical_omega(const WeightTriple& p);

enum class ShiftTarget { zero, x1, x2, x3 };

ShiftTarget shift_target_from_string(const std::string& s);
std::string to_string(ShiftTarget t);

// All (a, b) with 1 <= b <= 2u+1 solving a x1 - b omega = target in
// L(2, 3, u+1). For each b the unique candidate a is read off the normal
// form of b omega + target, which represents a multiple of x1 exactly when
// its x2 and x3 components vanish.
std::vector<std::pair<std::int64_t, std::int64_t>> solve_shift_equation(int u, ShiftTarget target);

// Signed count sum_t (-1)^(n1) over targets t in {0, x1+omega, x2+omega,
// x3+omega} whose shifted normal form j omega + t lands on a multiple of x1.
// Requires 1 <= j <= 2u+1.
int auslander_euler(int u, int j);

}  // namespace coxpoly
