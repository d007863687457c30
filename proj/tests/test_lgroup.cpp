#include "doctest.h"

#include <random>

#include "coxpoly/coxeter.hpp"
#include "coxpoly/lgroup.hpp"
#include "coxpoly/poset.hpp"

using namespace coxpoly;

namespace {

LElement elem(std::int64_t n1, std::int64_t n2, std::int64_t n3, std::int64_t m)
{
    return LElement{n1, n2, n3, m};
}

LElement x1(const WeightTriple& p)
{
    return normalize(p, 1, 0, 0, 0);
}

}  // namespace

TEST_SUITE("lgroup")
{
    TEST_CASE("normal form, worked examples")
    {
        const WeightTriple p(2, 3, 6);
        CHECK(normalize(p, 0, 0, 7, 0) == elem(0, 0, 1, 1));
        CHECK(normalize(p, 1, 2, 5, -2) == elem(1, 2, 5, -2));
        CHECK(normalize(p, -1, -1, -1, 1) == elem(1, 2, 5, -2));
        CHECK_THROWS_AS(WeightTriple(1, 3, 6), InvalidParameter);
    }

    TEST_CASE("group laws on random elements")
    {
        std::mt19937 rng(7401);
        std::uniform_int_distribution<int> weight(2, 9);
        std::uniform_int_distribution<std::int64_t> raw(-20, 20);
        for (int it = 0; it < 200; ++it) {
            const WeightTriple p(weight(rng), weight(rng), weight(rng));
            const LElement a = normalize(p, raw(rng), raw(rng), raw(rng), raw(rng));
            const LElement b = normalize(p, raw(rng), raw(rng), raw(rng), raw(rng));
            const LElement c = normalize(p, raw(rng), raw(rng), raw(rng), raw(rng));
            CHECK(normalize(p, a.n1, a.n2, a.n3, a.m) == a);  // idempotent
            CHECK(add(p, a, b) == add(p, b, a));
            CHECK(add(p, add(p, a, b), c) == add(p, a, add(p, b, c)));
            CHECK(add(p, a, neg(p, a)) == elem(0, 0, 0, 0));
        }
    }

    TEST_CASE("defining relations")
    {
        for (int u = 1; u <= 30; ++u) {
            const WeightTriple p(2, 3, u + 1);
            const LElement c = elem(0, 0, 0, 1);
            CHECK(scale(p, 2, x1(p)) == c);
            CHECK(scale(p, 3, normalize(p, 0, 1, 0, 0)) == c);
            CHECK(scale(p, u + 1, normalize(p, 0, 0, 1, 0)) == c);
        }
        CHECK(scale(WeightTriple(2, 3, 6), 6, canonical_omega(WeightTriple(2, 3, 6))) ==
              elem(0, 0, 0, 0));
    }

    TEST_CASE("dualizing element")
    {
        CHECK(canonical_omega(WeightTriple(2, 3, 6)) == elem(1, 2, 5, -2));
        CHECK(canonical_omega(WeightTriple(2, 3, 2)) == elem(1, 2, 1, -2));
        std::mt19937 rng(7402);
        std::uniform_int_distribution<int> weight(2, 12);
        for (int it = 0; it < 50; ++it) {
            const WeightTriple p(weight(rng), weight(rng), weight(rng));
            CHECK(canonical_omega(p) == elem(p.p1 - 1, p.p2 - 1, p.p3 - 1, -2));
        }
    }

    TEST_CASE("shift equation solver, worked examples")
    {
        using Pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;
        CHECK(solve_shift_equation(5, ShiftTarget::zero) == Pairs{{0, 6}});
        CHECK(solve_shift_equation(3, ShiftTarget::x2) == Pairs{{0, 4}});
        CHECK(solve_shift_equation(4, ShiftTarget::x3) == Pairs{{0, 6}});
        CHECK(solve_shift_equation(3, ShiftTarget::zero) == Pairs{});
    }

    TEST_CASE("solver results satisfy the equation and the case table")
    {
        for (int u = 1; u <= 60; ++u) {
            const WeightTriple p(2, 3, u + 1);
            const LElement omega = canonical_omega(p);
            for (auto target : {ShiftTarget::zero, ShiftTarget::x1, ShiftTarget::x2,
                                ShiftTarget::x3}) {
                LElement t = elem(0, 0, 0, 0);
                if (target == ShiftTarget::x1)
                    t = x1(p);
                if (target == ShiftTarget::x2)
                    t = normalize(p, 0, 1, 0, 0);
                if (target == ShiftTarget::x3)
                    t = normalize(p, 0, 0, 1, 0);
                const auto sols = solve_shift_equation(u, target);
                for (auto [a, b] : sols) {
                    CHECK(1 <= b);
                    CHECK(b <= 2 * u + 1);
                    CHECK(add(p, scale(p, a, x1(p)), neg(p, scale(p, b, omega))) == t);
                }
                // presence and values predicted by the divisibility table
                switch (target) {
                    case ShiftTarget::zero:
                        if ((u + 1) % 3 == 0) {
                            REQUIRE(sols.size() == 1);
                            CHECK(sols[0] == std::pair<std::int64_t, std::int64_t>{(u - 5) / 3,
                                                                                   u + 1});
                        } else
                            CHECK(sols.empty());
                        break;
                    case ShiftTarget::x1:
                        if ((u + 1) % 3 == 0) {
                            REQUIRE(sols.size() == 1);
                            CHECK(sols[0] == std::pair<std::int64_t, std::int64_t>{(u - 2) / 3,
                                                                                   u + 1});
                        } else
                            CHECK(sols.empty());
                        break;
                    case ShiftTarget::x2:
                        if (u % 3 == 0) {
                            REQUIRE(sols.size() == 1);
                            CHECK(sols[0] == std::pair<std::int64_t, std::int64_t>{(u - 3) / 3,
                                                                                   u + 1});
                        } else
                            CHECK(sols.empty());
                        break;
                    case ShiftTarget::x3:
                        if ((u + 2) % 3 == 0) {
                            REQUIRE(sols.size() == 1);
                            CHECK(sols[0] == std::pair<std::int64_t, std::int64_t>{(u - 4) / 3,
                                                                                   u + 2});
                        } else
                            CHECK(sols.empty());
                        break;
                }
            }
        }
    }

    TEST_CASE("signed Euler counts, worked examples")
    {
        CHECK(auslander_euler(3, 3) == 1);
        CHECK(auslander_euler(3, 2) == 0);
        CHECK(auslander_euler(2, 2) == 1);
        CHECK(auslander_euler(2, 3) == -1);
        CHECK_THROWS_AS(auslander_euler(3, 99), RangeError);
        CHECK_THROWS_AS(auslander_euler(3, 0), RangeError);
    }

    TEST_CASE("nonvanishing pattern over the three congruence classes")
    {
        // Inside 1 <= j <= 2u the signed count is nonzero exactly on the
        // congruence pattern. At the boundary j = 2u+1 a second solution
        // family of the shift equation enters (its b = j+1 = 2u+2 falls
        // just outside the solver's stated window), giving an extra +-1
        // whenever u is not divisible by 3; the matrix route confirms the
        // same values, see the bridge test below.
        for (int u = 1; u <= 30; ++u) {
            for (int j = 1; j <= 2 * u; ++j) {
                const bool expected_nonzero = (u % 3 == 0 && j == u) ||
                                              ((u + 1) % 3 == 0 && (j == u || j == u + 1)) ||
                                              ((u + 2) % 3 == 0 && j == u + 1);
                CHECK((auslander_euler(u, j) != 0) == expected_nonzero);
            }
            int boundary = 0;
            if (u % 3 == 1)
                boundary = 1;
            else if (u % 3 == 2)
                boundary = -1;
            CHECK(auslander_euler(u, 2 * u + 1) == boundary);
        }
    }

    TEST_CASE("group route matches the matrix route on the grid")
    {
        for (int u = 1; u <= 8; ++u) {
            const Poset X = rectangle_poset(u);
            const auto order = X.default_linear_extension();
            const IntMatrix C = incidence_cartan(X, order);
            int min_vertex = -1;
            for (size_t i = 0; i < order.size(); ++i)
                if (X.is_minimal(order[i]))
                    min_vertex = static_cast<int>(i) + 1;
            const DimVector m = injective_class(C, min_vertex);
            for (int j = 1; j <= 2 * u + 1; ++j)
                CHECK(Int(auslander_euler(u, j)) == tau_twisted_euler(C, m, j));
        }
    }
}
