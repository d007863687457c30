#include "coxpoly/poset.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace coxpoly {

Poset Poset::from_covers(std::vector<std::string> elements,
                         const std::vector<std::pair<int, int>>& covers)
{
    Poset p;
    p.names_ = std::move(elements);
    const int n = p.size();
    p.leq_.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        p.leq_[static_cast<size_t>(i) * n + i] = 1;
    for (auto& [a, b] : covers) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw UnknownElement("poset cover references unknown element id");
        p.leq_[static_cast<size_t>(a) * n + b] = 1;
    }
    // Warshall closure.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!p.leq(i, k))
                continue;
            for (int j = 0; j < n; ++j)
                if (p.leq(k, j))
                    p.leq_[static_cast<size_t>(i) * n + j] = 1;
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p.leq(i, j) && p.leq(j, i))
                throw PosetParseError("relation cycle through '" + p.names_[i] + "' and '" +
                                      p.names_[j] + "'");
    return p;
}

int Poset::index_of(const std::string& name) const
{
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name)
            return i;
    return -1;
}

bool Poset::is_minimal(int a) const
{
    for (int i = 0; i < size(); ++i)
        if (i != a && leq(i, a))
            return false;
    return true;
}

bool Poset::is_linear_extension(const std::vector<int>& order) const
{
    const int n = size();
    if (static_cast<int>(order.size()) != n)
        return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || pos[order[i]] != -1)
            return false;
        pos[order[i]] = i;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (leq(a, b) && pos[a] > pos[b])
                return false;
    return true;
}

std::vector<int> Poset::extension_by_tiebreak(bool reverse_names) const
{
    const int n = size();
    std::vector<int> below(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && leq(a, b))
                ++below[b];
    std::vector<int> out;
    std::vector<char> placed(n, 0);
    while (static_cast<int>(out.size()) < n) {
        int best = -1;
        for (int a = 0; a < n; ++a) {
            if (placed[a] || below[a] != 0)
                continue;
            if (best < 0 || (reverse_names ? names_[a] > names_[best] : names_[a] < names_[best]))
                best = a;
        }
        placed[best] = 1;
        out.push_back(best);
        for (int b = 0; b < n; ++b)
            if (b != best && !placed[b] && leq(best, b))
                --below[b];
    }
    return out;
}

std::vector<int> Poset::default_linear_extension() const
{
    return extension_by_tiebreak(false);
}

std::vector<int> Poset::alternate_linear_extension() const
{
    return extension_by_tiebreak(true);
}

Poset Poset::opposite() const
{
    Poset p;
    p.names_ = names_;
    const int n = size();
    p.leq_.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            p.leq_[static_cast<size_t>(i) * n + j] = leq(j, i) ? 1 : 0;
    return p;
}

Poset Poset::restricted_to(const std::vector<int>& ids) const
{
    Poset p;
    const int m = static_cast<int>(ids.size());
    p.names_.reserve(m);
    for (int id : ids) {
        if (id < 0 || id >= size())
            throw UnknownElement("restricted_to: bad element id");
        p.names_.push_back(names_[id]);
    }
    p.leq_.assign(static_cast<size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            p.leq_[static_cast<size_t>(i) * m + j] = leq(ids[i], ids[j]) ? 1 : 0;
    return p;
}

Poset parse_poset(std::istream& in)
{
    std::vector<std::string> names;
    std::map<std::string, int> index;
    std::vector<std::pair<int, int>> covers;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;)
            tok.push_back(t);
        if (tok.empty())
            continue;
        const std::string where = " (line " + std::to_string(lineno) + ")";
        if (tok[0] == "elem") {
            if (tok.size() != 2)
                throw PosetParseError("expected 'elem NAME'" + where);
            if (index.count(tok[1]))
                throw PosetParseError("duplicate element '" + tok[1] + "'" + where);
            index[tok[1]] = static_cast<int>(names.size());
            names.push_back(tok[1]);
        } else if (tok.size() == 3 && tok[1] == "<") {
            auto a = index.find(tok[0]);
            auto b = index.find(tok[2]);
            if (a == index.end() || b == index.end())
                throw PosetParseError("relation uses undeclared element" + where);
            if (a->second == b->second)
                throw PosetParseError("element related to itself" + where);
            covers.emplace_back(a->second, b->second);
        } else {
            throw PosetParseError("unparsable declaration" + where);
        }
    }
    if (names.empty())
        throw PosetParseError("poset file declares no elements");
    return Poset::from_covers(std::move(names), covers);
}

Poset parse_poset_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw PosetParseError("cannot open poset file '" + path + "'");
    return parse_poset(f);
}

namespace {

std::string grid_name(int i, int j)
{
    return "p" + std::to_string(i) + "_" + std::to_string(j);
}

std::string chain_name(int k)
{
    return "c" + std::to_string(k);
}

}  // namespace

Poset rectangle_poset(int u)
{
    if (u < 1)
        throw InvalidParameter("rectangle_poset: u must be >= 1");
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> covers;
    auto id = [u](int i, int j) { return (i - 1) * u + (j - 1); };
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= u; ++j)
            names.push_back(grid_name(i, j));
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j < u; ++j)
            covers.emplace_back(id(i, j), id(i, j + 1));
    for (int j = 1; j <= u; ++j)
        covers.emplace_back(id(1, j), id(2, j));
    return Poset::from_covers(std::move(names), covers);
}

ExtensionVariant extension_variant_from_string(const std::string& s)
{
    if (s == "lower-out" || s == "lower_out")
        return ExtensionVariant::lower_out;
    if (s == "upper-out" || s == "upper_out")
        return ExtensionVariant::upper_out;
    if (s == "lower-in" || s == "lower_in")
        return ExtensionVariant::lower_in;
    if (s == "upper-in" || s == "upper_in")
        return ExtensionVariant::upper_in;
    throw InvalidParameter("unknown extension variant '" + s + "'");
}

std::string to_string(ExtensionVariant v)
{
    switch (v) {
        case ExtensionVariant::lower_out: return "lower-out";
        case ExtensionVariant::upper_out: return "upper-out";
        case ExtensionVariant::lower_in: return "lower-in";
        case ExtensionVariant::upper_in: return "upper-in";
    }
    return "?";
}

Poset extension_poset(int u, int v, ExtensionVariant variant)
{
    if (u < 1 || v < 1)
        throw InvalidParameter("extension_poset: u and v must be >= 1");
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> covers;
    auto id = [u](int i, int j) { return (i - 1) * u + (j - 1); };
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= u; ++j)
            names.push_back(grid_name(i, j));
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j < u; ++j)
            covers.emplace_back(id(i, j), id(i, j + 1));
    for (int j = 1; j <= u; ++j)
        covers.emplace_back(id(1, j), id(2, j));
    const int c0 = 2 * u;  // id of c1
    for (int k = 1; k <= v; ++k)
        names.push_back(chain_name(k));
    for (int k = 1; k < v; ++k)
        covers.emplace_back(c0 + k - 1, c0 + k);
    switch (variant) {
        case ExtensionVariant::lower_out:  // chain above the global maximum
            covers.emplace_back(id(2, u), c0);
            break;
        case ExtensionVariant::upper_out:  // chain above (1,u) only
            covers.emplace_back(id(1, u), c0);
            break;
        case ExtensionVariant::lower_in:  // chain below (2,1) only
            covers.emplace_back(c0 + v - 1, id(2, 1));
            break;
        case ExtensionVariant::upper_in:  // chain below the global minimum
            covers.emplace_back(c0 + v - 1, id(1, 1));
            break;
    }
    return Poset::from_covers(std::move(names), covers);
}

IntMatrix incidence_cartan(const Poset& X, const std::vector<int>& order)
{
    if (!X.is_linear_extension(order))
        throw NotLinearExtension("incidence_cartan: order is not a linear extension");
    const int n = X.size();
    IntMatrix C(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            C.at(i, j) = X.leq(order[i], order[j]) ? 1 : 0;
    return C;
}

IntMatrix incidence_cartan(const Poset& X)
{
    return incidence_cartan(X, X.default_linear_extension());
}

IntMatrix nakayama_cartan(int n, int r)
{
    if (n < 1 || r < 2 || r > n)
        throw InvalidParameter("nakayama_cartan: need 2 <= r <= n");
    IntMatrix C(n);
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n && b < a + r; ++b)
            C.at(a - 1, b - 1) = 1;
    return C;
}

bool is_downward_closed(const Poset& X, const std::vector<int>& Y)
{
    std::vector<char> in(X.size(), 0);
    for (int y : Y) {
        if (y < 0 || y >= X.size())
            throw UnknownElement("is_downward_closed: bad element id");
        in[y] = 1;
    }
    for (int y = 0; y < X.size(); ++y) {
        if (!in[y])
            continue;
        for (int z = 0; z < X.size(); ++z)
            if (X.leq(z, y) && !in[z])
                return false;
    }
    return true;
}

bool is_downward_closed_names(const Poset& X, const std::vector<std::string>& names)
{
    std::vector<int> ids;
    ids.reserve(names.size());
    for (const auto& nm : names) {
        int id = X.index_of(nm);
        if (id < 0)
            throw UnknownElement("is_downward_closed: unknown element '" + nm + "'");
        ids.push_back(id);
    }
    return is_downward_closed(X, ids);
}

}  // namespace coxpoly
