#include "coxpoly/flip.hpp"

#include <algorithm>

namespace coxpoly {

namespace {

// order must enumerate Y (in an extension of Y's induced order) followed by
// U (likewise); anything else is rejected.
void check_flip_order(const Poset& X, const std::vector<char>& inY, int ysize,
                      const std::vector<int>& order)
{
    const int n = X.size();
    if (static_cast<int>(order.size()) != n)
        throw NotLinearExtension("flip_cartan: order has wrong length");
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        int e = order[i];
        if (e < 0 || e >= n || seen[e])
            throw NotLinearExtension("flip_cartan: order is not a permutation");
        seen[e] = 1;
        if ((i < ysize) != (inY[e] != 0))
            throw NotLinearExtension("flip_cartan: order must list the closed part first");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const bool same_part = (i < ysize) == (j < ysize);
            if (same_part && X.leq(order[j], order[i]) && order[i] != order[j])
                throw NotLinearExtension("flip_cartan: part order violates the poset");
        }
}

}  // namespace

IntMatrix flip_cartan(const Poset& X, const std::vector<int>& Y, const std::vector<int>& order)
{
    if (!is_downward_closed(X, Y))
        throw NotClosed("flip_cartan: subset is not downward closed");
    std::vector<char> inY(X.size(), 0);
    for (int y : Y)
        inY[y] = 1;
    int ysize = 0;
    for (char c : inY)
        ysize += c;
    check_flip_order(X, inY, ysize, order);

    const int n = X.size();
    IntMatrix C(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int a = order[i], b = order[j];
            int val = 0;
            if (inY[a] && inY[b])
                val = X.leq(a, b) ? 1 : 0;
            else if (!inY[a] && !inY[b])
                val = X.leq(a, b) ? 1 : 0;
            else if (!inY[a] && inY[b])  // row in U, column in Y: strict
                val = (X.leq(b, a) && a != b) ? 1 : 0;
            C.at(i, j) = val;
        }
    return C;
}

IntMatrix flip_cartan(const Poset& X, const std::vector<int>& Y)
{
    std::vector<char> inY(X.size(), 0);
    for (int y : Y) {
        if (y < 0 || y >= X.size())
            throw UnknownElement("flip_cartan: bad element id");
        inY[y] = 1;
    }
    std::vector<int> ys, us;
    for (int i = 0; i < X.size(); ++i)
        (inY[i] ? ys : us).push_back(i);
    std::vector<int> order;
    for (int local : X.restricted_to(ys).default_linear_extension())
        order.push_back(ys[local]);
    for (int local : X.restricted_to(us).default_linear_extension())
        order.push_back(us[local]);
    return flip_cartan(X, Y, order);
}

std::optional<std::vector<int>> find_simultaneous_permutation(const IntMatrix& A,
                                                              const IntMatrix& B)
{
    if (A.dim() != B.dim())
        return std::nullopt;
    const int n = A.dim();

    // Profile pruning: candidates must match on diagonal and row/column sums.
    auto profile = [n](const IntMatrix& M, int i) {
        Int rs = 0, cs = 0;
        for (int j = 0; j < n; ++j) {
            rs += M.at(i, j);
            cs += M.at(j, i);
        }
        return std::tuple<Int, Int, Int>(M.at(i, i), rs, cs);
    };
    std::vector<std::tuple<Int, Int, Int>> pa(n), pb(n);
    for (int i = 0; i < n; ++i) {
        pa[i] = profile(A, i);
        pb[i] = profile(B, i);
    }

    std::vector<int> sigma(n, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == n)
            return true;
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand] || pa[cand] != pb[i])
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = A.at(cand, sigma[j]) == B.at(i, j) && A.at(sigma[j], cand) == B.at(j, i);
            if (ok && A.at(cand, cand) == B.at(i, i)) {
                used[cand] = 1;
                sigma[i] = cand;
                if (self(self, i + 1))
                    return true;
                used[cand] = 0;
                sigma[i] = -1;
            }
        }
        return false;
    };
    if (rec(rec, 0))
        return sigma;
    return std::nullopt;
}

bool simultaneous_permutation_equal(const IntMatrix& A, const IntMatrix& B)
{
    return find_simultaneous_permutation(A, B).has_value();
}

}  // namespace coxpoly
