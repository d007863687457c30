#include "doctest.h"

#include <random>
#include <sstream>

#include "coxpoly/coxeter.hpp"
#include "coxpoly/flip.hpp"
#include "coxpoly/verify.hpp"

using namespace coxpoly;

namespace {

Poset three_chain()
{
    std::istringstream in("elem 1\nelem 2\nelem 3\n1 < 2\n2 < 3\n");
    return parse_poset(in);
}

}  // namespace

TEST_SUITE("ladkani-flip")
{
    TEST_CASE("flip Cartan, worked examples")
    {
        const Poset chain = three_chain();
        const std::vector<int> Y{chain.index_of("1")};
        const std::vector<int> order{chain.index_of("1"), chain.index_of("2"),
                                     chain.index_of("3")};
        CHECK(flip_cartan(chain, Y, order) ==
              IntMatrix::from_rows({{1, 0, 0}, {1, 1, 1}, {1, 0, 1}}));

        // Y = X and Y = {} both degenerate to the incidence Cartan matrix.
        const std::vector<int> all{0, 1, 2};
        CHECK(flip_cartan(chain, all, chain.default_linear_extension()) ==
              incidence_cartan(chain));
        CHECK(flip_cartan(chain, {}, chain.default_linear_extension()) ==
              incidence_cartan(chain));

        CHECK_THROWS_AS(flip_cartan(chain, {chain.index_of("2")}), NotClosed);
        CHECK_THROWS_AS(flip_cartan(chain, Y, {order[1], order[0], order[2]}),
                        NotLinearExtension);
    }

    TEST_CASE("permutation matcher")
    {
        const IntMatrix A = nakayama_cartan(4, 2);
        IntMatrix B(4);
        const int perm[4] = {2, 0, 3, 1};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                B.at(i, j) = A.at(perm[i], perm[j]);
        CHECK(simultaneous_permutation_equal(A, B));
        const auto sigma = find_simultaneous_permutation(A, B);
        REQUIRE(sigma.has_value());
        for (int i = 0; i < 4; ++i)
            CHECK((*sigma)[i] == perm[i]);
        CHECK(!simultaneous_permutation_equal(A, nakayama_cartan(4, 3)));
        CHECK(!simultaneous_permutation_equal(A, nakayama_cartan(3, 2)));
    }

    TEST_CASE("flip preserves the Coxeter polynomial on random posets")
    {
        std::mt19937 rng(7301);
        for (int it = 0; it < 50; ++it) {
            const Poset X = random_poset(rng, 8);
            const auto Y = random_downward_closed(rng, X);
            CHECK(coxeter_polynomial(flip_cartan(X, Y)) ==
                  coxeter_polynomial(incidence_cartan(X)));
        }
    }

    TEST_CASE("chain flip recovers the opposite-corner extension")
    {
        for (int u = 1; u <= 4; ++u)
            for (int v = 1; v <= 4; ++v) {
                const Poset X = extension_poset(u, v, ExtensionVariant::upper_in);
                std::vector<int> chain;
                for (int k = 1; k <= v; ++k)
                    chain.push_back(X.index_of("c" + std::to_string(k)));
                CHECK(simultaneous_permutation_equal(
                    flip_cartan(X, chain),
                    incidence_cartan(extension_poset(u, v, ExtensionVariant::lower_out))));
            }
    }

    TEST_CASE("chain plus lower row flips onto the Nakayama Cartan")
    {
        for (int u = 1; u <= 4; ++u)
            for (int v = 1; v <= 4; ++v) {
                const Poset X = extension_poset(u, v, ExtensionVariant::upper_in);
                std::vector<int> Z;
                for (int k = 1; k <= v; ++k)
                    Z.push_back(X.index_of("c" + std::to_string(k)));
                for (int j = 1; j <= u; ++j)
                    Z.push_back(X.index_of("p1_" + std::to_string(j)));
                CHECK(simultaneous_permutation_equal(flip_cartan(X, Z),
                                                     nakayama_cartan(2 * u + v, u + v + 1)));
            }
    }

    TEST_CASE("row flip realizes the odd-length symmetry")
    {
        for (int r = 2; r <= 6; ++r) {
            const Poset X = extension_poset(r - 1, 1, ExtensionVariant::lower_in);
            std::vector<int> Y;
            for (int j = 1; j <= r - 1; ++j)
                Y.push_back(X.index_of("p1_" + std::to_string(j)));
            CHECK(simultaneous_permutation_equal(flip_cartan(X, Y),
                                                 nakayama_cartan(2 * r - 1, r)));
        }
    }
}
