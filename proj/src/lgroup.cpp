#include "coxpoly/lgroup.hpp"

namespace coxpoly {

namespace {

// Floored division carry: n = q*p + r with 0 <= r < p.
std::pair<std::int64_t, std::int64_t> divmod(std::int64_t n, std::int64_t p)
{
    std::int64_t q = n / p;
    std::int64_t r = n % p;
    if (r < 0) {
        r += p;
        --q;
    }
    return {q, r};
}

}  // namespace

LElement normalize(const WeightTriple& p, std::int64_t n1, std::int64_t n2, std::int64_t n3,
                   std::int64_t m)
{
    LElement e;
    auto [q1, r1] = divmod(n1, p.p1);
    auto [q2, r2] = divmod(n2, p.p2);
    auto [q3, r3] = divmod(n3, p.p3);
    e.n1 = r1;
    e.n2 = r2;
    e.n3 = r3;
    e.m = m + q1 + q2 + q3;
    return e;
}

LElement add(const WeightTriple& p, const LElement& a, const LElement& b)
{
    return normalize(p, a.n1 + b.n1, a.n2 + b.n2, a.n3 + b.n3, a.m + b.m);
}

LElement neg(const WeightTriple& p, const LElement& a)
{
    return normalize(p, -a.n1, -a.n2, -a.n3, -a.m);
}

LElement scale(const WeightTriple& p, std::int64_t k, const LElement& a)
{
    return normalize(p, k * a.n1, k * a.n2, k * a.n3, k * a.m);
}

LElement canonical_omega(const WeightTriple& p)
{
    return normalize(p, -1, -1, -1, 1);
}

ShiftTarget shift_target_from_string(const std::string& s)
{
    if (s == "zero")
        return ShiftTarget::zero;
    if (s == "x1")
        return ShiftTarget::x1;
    if (s == "x2")
        return ShiftTarget::x2;
    if (s == "x3")
        return ShiftTarget::x3;
    throw InvalidParameter("unknown shift target '" + s + "'");
}

std::string to_string(ShiftTarget t)
{
    switch (t) {
        case ShiftTarget::zero: return "zero";
        case ShiftTarget::x1: return "x1";
        case ShiftTarget::x2: return "x2";
        case ShiftTarget::x3: return "x3";
    }
    return "?";
}

namespace {

LElement target_element(const WeightTriple& p, ShiftTarget t)
{
    switch (t) {
        case ShiftTarget::zero: return normalize(p, 0, 0, 0, 0);
        case ShiftTarget::x1: return normalize(p, 1, 0, 0, 0);
        case ShiftTarget::x2: return normalize(p, 0, 1, 0, 0);
        case ShiftTarget::x3: return normalize(p, 0, 0, 1, 0);
    }
    throw InvalidParameter("bad shift target");
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> solve_shift_equation(int u, ShiftTarget target)
{
    if (u < 1)
        throw InvalidParameter("solve_shift_equation: u must be >= 1");
    const WeightTriple p(2, 3, u + 1);
    const LElement omega = canonical_omega(p);
    const LElement t = target_element(p, target);
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t b = 1; b <= 2 * u + 1; ++b) {
        // a x1 = b omega + target; a x1 has normal form (a mod 2, 0, 0, a/2).
        const LElement rhs = add(p, scale(p, b, omega), t);
        if (rhs.n2 == 0 && rhs.n3 == 0)
            out.emplace_back(rhs.n1 + 2 * rhs.m, b);
    }
    return out;
}

int auslander_euler(int u, int j)
{
    if (u < 1)
        throw InvalidParameter("auslander_euler: u must be >= 1");
    if (j < 1 || j > 2 * u + 1)
        throw RangeError("auslander_euler: j must lie in [1, 2u+1]");
    const WeightTriple p(2, 3, u + 1);
    const LElement omega = canonical_omega(p);
    const LElement jw = scale(p, j, omega);
    const LElement targets[4] = {
        normalize(p, 0, 0, 0, 0),
        add(p, normalize(p, 1, 0, 0, 0), omega),
        add(p, normalize(p, 0, 1, 0, 0), omega),
        add(p, normalize(p, 0, 0, 1, 0), omega),
    };
    int total = 0;
    for (const LElement& t : targets) {
        const LElement rhs = add(p, jw, t);
        if (rhs.n2 == 0 && rhs.n3 == 0)
            total += (rhs.n1 % 2 == 0) ? 1 : -1;  // (-1)^(n1 + 2m)
    }
    return total;
}

}  // namespace coxpoly
