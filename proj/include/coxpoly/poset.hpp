#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "coxpoly/int_matrix.hpp"

namespace coxpoly {

struct NotLinearExtension : input_error {
    using input_error::input_error;
};

struct UnknownElement : input_error {
    using input_error::input_error;
};

struct PosetParseError : input_error {
    using input_error::input_error;
};

// Finite poset with named elements. The order relation is stored as the full
// reflexive-transitive closure; reflexivity, antisymmetry and transitivity
// are established on construction.
class Poset {
public:
    static Poset from_covers(std::vector<std::string> elements,
                             const std::vector<std::pair<int, int>>& covers);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& elements() const { return names_; }
    const std::string& name(int i) const { return names_[i]; }
    // -1 when the name is not an element.
    int index_of(const std::string& name) const;

    bool leq(int a, int b) const { return leq_[static_cast<size_t>(a) * size() + b]; }

    bool is_minimal(int a) const;
    bool is_linear_extension(const std::vector<int>& order) const;
    // Breadth-first from the minima, lexicographic tie-breaking on names.
    std::vector<int> default_linear_extension() const;
    // A second deterministic extension (reverse-lexicographic tie-breaking);
    // coincides with the default exactly when the order leaves no choice.
    std::vector<int> alternate_linear_extension() const;

    Poset opposite() const;
    // Induced subposet on the given element ids, in the given id order.
    Poset restricted_to(const std::vector<int>& ids) const;

private:
    std::vector<std::string> names_;
    std::vector<char> leq_;
    std::vector<int> extension_by_tiebreak(bool reverse_names) const;
};

// Text format: one declaration per line, `elem NAME` declares an element,
// `A < B` declares a cover relation, `#` starts a comment. Duplicate
// elements, undeclared names and cycles are rejected.
Poset parse_poset(std::istream& in);
Poset parse_poset_file(const std::string& path);

// Product poset {1,2} x {1..u}; elements are named p{i}_{j}.
Poset rectangle_poset(int u);

// Where the length-v chain c1 < ... < cv attaches to the rectangle.
enum class ExtensionVariant { lower_out, upper_out, lower_in, upper_in };

ExtensionVariant extension_variant_from_string(const std::string& s);
std::string to_string(ExtensionVariant v);

Poset extension_poset(int u, int v, ExtensionVariant variant);

// 0/1 Cartan matrix c_{xy} = [x <= y] in the given vertex order, which must
// be a linear extension (so the matrix is upper triangular with unit
// diagonal).
IntMatrix incidence_cartan(const Poset& X, const std::vector<int>& order);
IntMatrix incidence_cartan(const Poset& X);

// Cartan matrix of the linear A_n quiver algebra with every path of length
// r killed: c_{ab} = [a <= b < a+r], 1-based. Requires 2 <= r <= n.
IntMatrix nakayama_cartan(int n, int r);

bool is_downward_closed(const Poset& X, const std::vector<int>& Y);
bool is_downward_closed_names(const Poset& X, const std::vector<std::string>& names);

}  // namespace coxpoly
