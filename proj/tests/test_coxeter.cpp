#include "doctest.h"

#include <random>

#include "coxpoly/coxeter.hpp"
#include "coxpoly/poset.hpp"

using namespace coxpoly;

namespace {

PolyZ P(std::vector<Int> asc)
{
    return PolyZ(std::move(asc));
}

const IntMatrix kChain2 = IntMatrix::from_rows({{1, 1}, {0, 1}});

DimVector random_vector(std::mt19937& rng, int n)
{
    std::uniform_int_distribution<int> c(-5, 5);
    DimVector v(n);
    for (auto& x : v)
        x = c(rng);
    return v;
}

}  // namespace

TEST_SUITE("coxeter")
{
    TEST_CASE("coxeter_matrix worked examples")
    {
        CHECK(coxeter_matrix(IntMatrix::identity(3)) == -IntMatrix::identity(3));
        CHECK(coxeter_matrix(kChain2) == IntMatrix::from_rows({{-1, -1}, {1, 0}}));
        CHECK(coxeter_matrix(nakayama_cartan(3, 2)) ==
              IntMatrix::from_rows({{-1, -1, 0}, {1, 0, -1}, {-1, 0, 0}}));
        CHECK_THROWS_AS(coxeter_matrix(IntMatrix::from_rows({{2, 0}, {0, 1}})), NotUnimodular);
    }

    TEST_CASE("coxeter_polynomial worked examples")
    {
        CHECK(coxeter_polynomial(kChain2) == P({1, 1, 1}));
        CHECK(coxeter_polynomial(nakayama_cartan(3, 2)) == P({1, 1, 1, 1}));
        CHECK(coxeter_polynomial(incidence_cartan(rectangle_poset(2))) == P({1, 1, 0, 1, 1}));
    }

    TEST_CASE("euler_form worked examples")
    {
        CHECK(euler_form(IntMatrix::identity(2), {1, 0}, {1, 0}) == 1);
        CHECK(euler_form(kChain2, {1, 1}, {1, 1}) == 1);
        CHECK_THROWS_AS(euler_form(kChain2, {1}, {1, 1}), DimensionMismatch);
    }

    TEST_CASE("tau_twisted_euler worked examples")
    {
        const DimVector m{1, 1};
        CHECK(tau_twisted_euler(kChain2, m, 0) == euler_form(kChain2, m, m));
        CHECK(tau_twisted_euler(kChain2, m, 1) == 0);
        CHECK(tau_twisted_euler(kChain2, m, 2) == -1);
    }

    TEST_CASE("injective_class worked examples")
    {
        CHECK(injective_class(IntMatrix::identity(3), 2) == DimVector{0, 1, 0});
        CHECK(injective_class(kChain2, 1) == DimVector{1, 1});
        CHECK(injective_class(nakayama_cartan(3, 2), 2) == DimVector{0, 1, 1});
        CHECK_THROWS_AS(injective_class(kChain2, 0), IndexOutOfRange);
        CHECK_THROWS_AS(injective_class(kChain2, 3), IndexOutOfRange);
    }

    TEST_CASE("Coxeter polynomials of the families are palindromic with unit ends")
    {
        std::vector<IntMatrix> cartans;
        for (int u = 1; u <= 8; ++u)
            cartans.push_back(incidence_cartan(rectangle_poset(u)));
        for (int u = 1; u <= 8; ++u)
            for (int v = 1; v <= 8; ++v)
                for (auto var : {ExtensionVariant::lower_out, ExtensionVariant::upper_out,
                                 ExtensionVariant::lower_in, ExtensionVariant::upper_in})
                    cartans.push_back(incidence_cartan(extension_poset(u, v, var)));
        for (int n = 2; n <= 16; ++n)
            for (int r = 2; r <= n; ++r)
                cartans.push_back(nakayama_cartan(n, r));
        for (const auto& C : cartans) {
            const PolyZ chi = coxeter_polynomial(C);
            CHECK(chi.is_palindromic());
            CHECK(chi.coeff(0) == 1);
            CHECK(chi.leading() == 1);
        }
    }

    TEST_CASE("Serre-type identity <x,y> = -<y, x Phi>")
    {
        std::mt19937 rng(7101);
        const IntMatrix cartans[] = {kChain2, nakayama_cartan(5, 3),
                                     incidence_cartan(rectangle_poset(3))};
        for (const auto& C : cartans) {
            const IntMatrix phi = coxeter_matrix(C);
            for (int it = 0; it < 100; ++it) {
                const DimVector x = random_vector(rng, C.dim());
                const DimVector y = random_vector(rng, C.dim());
                CHECK(euler_form(C, x, y) == -euler_form(C, y, row_times_matrix(x, phi)));
            }
        }
    }

    TEST_CASE("negative twists invert positive ones")
    {
        std::mt19937 rng(7102);
        const IntMatrix C = incidence_cartan(rectangle_poset(2));
        const IntMatrix phi = coxeter_matrix(C);
        const IntMatrix phi_inv = unimodular_inverse(phi);
        for (int it = 0; it < 50; ++it) {
            const DimVector m = random_vector(rng, C.dim());
            const DimVector x = random_vector(rng, C.dim());
            CHECK(tau_twisted_euler(C, m, 0) == euler_form(C, m, m));
            CHECK(row_times_matrix(row_times_matrix(m, phi), phi_inv) == m);
            // the form is invariant under the simultaneous twist
            CHECK(euler_form(C, row_times_matrix(x, phi), row_times_matrix(m, phi)) ==
                  euler_form(C, x, m));
            CHECK(tau_twisted_euler(C, m, -1) ==
                  euler_form(C, row_times_matrix(m, phi_inv), m));
        }
    }
}
