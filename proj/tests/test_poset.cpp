#include "doctest.h"

#include <sstream>

#include "coxpoly/coxeter.hpp"
#include "coxpoly/flip.hpp"
#include "coxpoly/poset.hpp"

using namespace coxpoly;

namespace {

int comparable_pairs(const Poset& X)
{
    int c = 0;
    for (int i = 0; i < X.size(); ++i)
        for (int j = 0; j < X.size(); ++j)
            if (X.leq(i, j))
                ++c;
    return c;
}

}  // namespace

TEST_SUITE("quiver-poset")
{
    TEST_CASE("rectangle poset shapes")
    {
        const Poset two_chain = rectangle_poset(1);
        CHECK(two_chain.size() == 2);
        CHECK(comparable_pairs(two_chain) == 3);

        const Poset grid2 = rectangle_poset(2);
        CHECK(grid2.size() == 4);
        CHECK(comparable_pairs(grid2) == 9);

        const Poset grid3 = rectangle_poset(3);
        CHECK(grid3.size() == 6);
        const int a = grid3.index_of("p1_2");
        const int b = grid3.index_of("p2_1");
        CHECK(!grid3.leq(a, b));
        CHECK(!grid3.leq(b, a));

        CHECK_THROWS_AS(rectangle_poset(0), InvalidParameter);
    }

    TEST_CASE("extension poset shapes")
    {
        const Poset threechain = extension_poset(1, 1, ExtensionVariant::lower_out);
        CHECK(threechain.size() == 3);
        CHECK(comparable_pairs(threechain) == 6);  // total order on 3 elements

        const Poset fork = extension_poset(1, 1, ExtensionVariant::upper_out);
        CHECK(fork.size() == 3);
        int minima = 0, maximal = 0;
        for (int i = 0; i < fork.size(); ++i) {
            if (fork.is_minimal(i))
                ++minima;
            bool is_max = true;
            for (int j = 0; j < fork.size(); ++j)
                if (j != i && fork.leq(i, j))
                    is_max = false;
            if (is_max)
                ++maximal;
        }
        CHECK(minima == 1);
        CHECK(maximal == 2);

        for (int u = 1; u <= 4; ++u)
            for (int v = 1; v <= 4; ++v)
                for (auto var : {ExtensionVariant::lower_out, ExtensionVariant::upper_out,
                                 ExtensionVariant::lower_in, ExtensionVariant::upper_in})
                    CHECK(extension_poset(u, v, var).size() == 2 * u + v);

        CHECK_THROWS_AS(extension_poset(0, 1, ExtensionVariant::lower_out), InvalidParameter);
        CHECK_THROWS_AS(extension_poset(1, 0, ExtensionVariant::lower_out), InvalidParameter);
    }

    TEST_CASE("incidence_cartan worked examples")
    {
        const Poset chain = rectangle_poset(1);
        const int lo = chain.index_of("p1_1"), hi = chain.index_of("p2_1");
        CHECK(incidence_cartan(chain, {lo, hi}) == IntMatrix::from_rows({{1, 1}, {0, 1}}));
        CHECK_THROWS_AS(incidence_cartan(chain, {hi, lo}), NotLinearExtension);

        const Poset grid = rectangle_poset(2);
        const std::vector<int> rowmajor{grid.index_of("p1_1"), grid.index_of("p1_2"),
                                        grid.index_of("p2_1"), grid.index_of("p2_2")};
        CHECK(incidence_cartan(grid, rowmajor) ==
              IntMatrix::from_rows({{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}}));
    }

    TEST_CASE("nakayama_cartan worked examples")
    {
        CHECK(nakayama_cartan(3, 2) == IntMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
        CHECK(nakayama_cartan(3, 3) == IntMatrix::from_rows({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}));
        CHECK_THROWS_AS(nakayama_cartan(3, 1), InvalidParameter);
    }

    TEST_CASE("downward closed sets")
    {
        std::istringstream in("elem 1\nelem 2\nelem 3\n1 < 2\n2 < 3\n");
        const Poset chain = parse_poset(in);
        CHECK(is_downward_closed_names(chain, {"1"}));
        CHECK(!is_downward_closed_names(chain, {"2"}));
        CHECK(is_downward_closed_names(chain, {}));
        CHECK_THROWS_AS(is_downward_closed_names(chain, {"7"}), UnknownElement);
    }

    TEST_CASE("poset text format")
    {
        std::istringstream in(
            "# a diamond\n"
            "elem bot\nelem l\nelem r\nelem top\n"
            "bot < l\nbot < r\n"
            "l < top\nr < top  # closes the square\n");
        const Poset d = parse_poset(in);
        CHECK(d.size() == 4);
        CHECK(d.leq(d.index_of("bot"), d.index_of("top")));
        CHECK(!d.leq(d.index_of("l"), d.index_of("r")));

        std::istringstream dup("elem a\nelem a\n");
        CHECK_THROWS_AS(parse_poset(dup), PosetParseError);
        std::istringstream cyc("elem a\nelem b\na < b\nb < a\n");
        CHECK_THROWS_AS(parse_poset(cyc), PosetParseError);
        std::istringstream undecl("elem a\na < b\n");
        CHECK_THROWS_AS(parse_poset(undecl), PosetParseError);
    }

    TEST_CASE("family Cartan matrices are unimodular and triangular")
    {
        for (int u = 1; u <= 5; ++u)
            for (int v = 1; v <= 5; ++v)
                for (auto var : {ExtensionVariant::lower_out, ExtensionVariant::upper_out,
                                 ExtensionVariant::lower_in, ExtensionVariant::upper_in}) {
                    const IntMatrix C = incidence_cartan(extension_poset(u, v, var));
                    CHECK(det(C) == 1);
                    for (int i = 0; i < C.dim(); ++i) {
                        CHECK(C.at(i, i) == 1);
                        for (int j = 0; j < i; ++j)
                            CHECK(C.at(i, j) == 0);
                    }
                }
    }

    TEST_CASE("in-variants are opposite to out-variants")
    {
        // The bijection reverses both grid coordinates and the chain:
        // p{i}_{j} <-> p{3-i}_{u+1-j}, c{k} <-> c{v+1-k}.
        const auto mirror = [](const Poset& from, const Poset& to, int u, int v) {
            std::vector<int> img(from.size());
            for (int i = 1; i <= 2; ++i)
                for (int j = 1; j <= u; ++j)
                    img[from.index_of("p" + std::to_string(i) + "_" + std::to_string(j))] =
                        to.index_of("p" + std::to_string(3 - i) + "_" +
                                    std::to_string(u + 1 - j));
            for (int k = 1; k <= v; ++k)
                img[from.index_of("c" + std::to_string(k))] =
                    to.index_of("c" + std::to_string(v + 1 - k));
            return img;
        };
        const auto check_antiiso = [&](ExtensionVariant a, ExtensionVariant b, int u, int v) {
            const Poset A = extension_poset(u, v, a);
            const Poset B = extension_poset(u, v, b);
            const auto img = mirror(A, B, u, v);
            for (int x = 0; x < A.size(); ++x)
                for (int y = 0; y < A.size(); ++y)
                    CHECK(A.leq(x, y) == B.leq(img[y], img[x]));
        };
        for (int u = 1; u <= 5; ++u)
            for (int v = 1; v <= 5; ++v) {
                check_antiiso(ExtensionVariant::lower_out, ExtensionVariant::upper_in, u, v);
                check_antiiso(ExtensionVariant::upper_out, ExtensionVariant::lower_in, u, v);
            }
    }

    TEST_CASE("grid and Nakayama sizes line up")
    {
        for (int u = 1; u <= 6; ++u)
            CHECK(nakayama_cartan(2 * u, u + 1).dim() ==
                  incidence_cartan(rectangle_poset(u)).dim());
    }

    TEST_CASE("linear extension choice does not change the Coxeter polynomial")
    {
        for (int u = 1; u <= 4; ++u)
            for (int v = 1; v <= 4; ++v)
                for (auto var : {ExtensionVariant::lower_out, ExtensionVariant::upper_out,
                                 ExtensionVariant::lower_in, ExtensionVariant::upper_in}) {
                    const Poset X = extension_poset(u, v, var);
                    const auto e1 = X.default_linear_extension();
                    const auto e2 = X.alternate_linear_extension();
                    CHECK(X.is_linear_extension(e1));
                    CHECK(X.is_linear_extension(e2));
                    CHECK(coxeter_polynomial(incidence_cartan(X, e1)) ==
                          coxeter_polynomial(incidence_cartan(X, e2)));
                }
    }
}
