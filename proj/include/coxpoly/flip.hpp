#pragma once

#include <optional>

#include "coxpoly/poset.hpp"

namespace coxpoly {

struct NotClosed : input_error {
    using input_error::input_error;
};

// Cartan matrix of the algebra obtained from a poset X and a downward closed
// subset Y (complement U), in the given vertex order. The basis families
// give c_{y,y'} = [y <= y'], c_{u',u} = [u' <= u], c_{u,y} = [y < u] and
// c_{y,u} = 0. The order must list Y first, then U, each part in a linear
// extension of its induced order.
IntMatrix flip_cartan(const Poset& X, const std::vector<int>& Y, const std::vector<int>& order);
// Default order: Y then U, each breadth-first from minima with lex ties.
IntMatrix flip_cartan(const Poset& X, const std::vector<int>& Y);

// Whether B = P A P^t for some simultaneous row/column permutation P.
// Backtracking on row/column profiles; intended for n <= 25 or so.
bool simultaneous_permutation_equal(const IntMatrix& A, const IntMatrix& B);
// The witness permutation sigma with A[sigma(i)][sigma(j)] == B[i][j].
std::optional<std::vector<int>> find_simultaneous_permutation(const IntMatrix& A,
                                                              const IntMatrix& B);

}  // namespace coxpoly
