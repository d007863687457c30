#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coxpoly/int_matrix.hpp"
#include "coxpoly/parallel.hpp"
#include "coxpoly/rat_matrix.hpp"

namespace coxpoly {

struct SpecMismatch : input_error {
    using input_error::input_error;
};

struct ComplexFormatError : input_error {
    using input_error::input_error;
};

struct NonTerminating : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class LadderFlavor { projective, injective };

// The additive category of indecomposable projectives (or injectives) of the
// linear Nakayama algebra with n vertices and nilpotency degree r, reduced to
// its combinatorics: one object per ladder index 1..n, Hom spaces of
// dimension zero or one, and composition of the canonical basis maps xi
// truncated by the nilpotency relation. Injective objects are addressed by
// ladder index s = n+1-a for the injective with socle index a, which mirrors
// the projective picture and keeps every complex a descending word.
struct LadderSpec {
    int n;
    int r;
    LadderFlavor flavor;

    LadderSpec(int n_, int r_, LadderFlavor f) : n(n_), r(r_), flavor(f)
    {
        if (r < 2 || r > n)
            throw InvalidParameter("LadderSpec: need 2 <= r <= n");
    }
    bool operator==(const LadderSpec&) const = default;
};

// Dimension (0 or 1) of the ladder Hom space from object a to object b.
int ladder_hom_dim(const LadderSpec& spec, int a, int b);

struct WordCheck {
    bool ok;
    std::string reason;
};

// A word lists the summand indices of an indecomposable complex in ascending
// degree order. Valid when every consecutive basis map is nonzero (and not
// an identity) and every composite of two consecutive maps vanishes.
WordCheck validate_word(const LadderSpec& spec, const std::vector<int>& word);

// Bounded complex over the ladder category. Each degree holds a list of
// summand indices; the differential from degree d to d+1 is a rational
// coefficient matrix (entry (s,t) scales the canonical basis map from
// summand t of degree d to summand s of degree d+1) which must vanish
// wherever the ladder Hom space does. Consecutive differentials compose to
// zero in the ladder category; this is checked on construction.
class LadderComplex {
public:
    static LadderComplex word(const LadderSpec& spec, int min_deg, std::vector<int> indices);
    static LadderComplex from_parts(const LadderSpec& spec, int min_deg,
                                    std::vector<std::vector<int>> summands,
                                    std::vector<RatMatrix> diffs);

    const LadderSpec& spec() const { return spec_; }
    int min_deg() const { return min_deg_; }
    int max_deg() const { return min_deg_ + static_cast<int>(summands_.size()) - 1; }
    const std::vector<int>& summands_at(int deg) const;
    // Coefficient of the basis map from summand col of degree deg to summand
    // row of degree deg+1; zero outside the stored range.
    Rat diff_entry(int deg, int row, int col) const;

    std::string to_string() const;

private:
    LadderComplex(LadderSpec spec, int min_deg, std::vector<std::vector<int>> summands,
                  std::vector<RatMatrix> diffs);
    LadderSpec spec_;
    int min_deg_;
    std::vector<std::vector<int>> summands_;
    std::vector<RatMatrix> diffs_;  // diffs_[d]: degree min_deg_+d -> min_deg_+d+1
};

// dim over the base field of chain maps X -> Y[k] modulo null-homotopic
// maps. Assembles the chain-map constraints and the homotopy image over
// exact rationals and differences the dimensions.
int complex_hom_k_dim(const LadderComplex& X, const LadderComplex& Y, int k);

// Minimal projective resolution of the length-j quotient of P_a (top index
// a), as a word in nonpositive degrees with P_a in degree 0. Requires
// 1 <= j <= min(a, r) and projective flavor. A repeated syzygy would raise
// NonTerminating; on this ladder the top index strictly decreases, so the
// guard documents the contract rather than an expected path.
LadderComplex projective_resolution(const LadderSpec& spec, int a, int j);

// Minimal injective coresolution of the same module (socle index a-j+1),
// as a word in nonnegative degrees; injective flavor.
LadderComplex injective_coresolution(const LadderSpec& spec, int a, int j);

// Class in K0 in the simple basis: alternating sum over degrees of the
// summand classes, with [P_a] = column a and [I_a] = row a of the Cartan
// matrix of N(n,r).
DimVector k0_class(const LadderComplex& X);

enum class TiltingWhich { upper, lower, post, pre };

TiltingWhich tilting_which_from_string(const std::string& s);
std::string to_string(TiltingWhich w);

// The four tilting families over N(2u+v, u+v+1), in construction order.
std::vector<LadderComplex> tilting_family(int u, int v, TiltingWhich which);

struct RigidityViolation {
    int s, t, k;  // 0-based summand pair, shift
    int dim;
};

struct TiltingReport {
    bool rigid;
    std::vector<RigidityViolation> violations;
    std::vector<DimVector> k0_classes;
    bool k0_unimodular;  // det of the class matrix is +-1 (false when the
                         // family size differs from the rank of K0)
    Int k0_det;
    IntMatrix end_cartan;  // g_{st} = dim Hom(T_s, T_t) in the homotopy category
    int shift_bound;       // rigidity checked for 0 < |k| <= shift_bound
};

// Rigidity sweep over all summand pairs and shifts, K0 class matrix, and
// endomorphism Cartan matrix. The sweep is a pure data-parallel loop; with
// RunMode::parallel it runs under OpenMP and results are written into
// per-index slots, so serial and parallel runs agree bit for bit.
TiltingReport verify_tilting(const std::vector<LadderComplex>& family,
                             RunMode mode = RunMode::parallel);

// Text format, one declaration per line: `@d: a1,a2,...` lists summand
// indices in degree d; `d[d]: c11 c12 ; c21 c22` gives the differential out
// of degree d (rows = summands of degree d+1, columns = summands of degree
// d, rational entries). Omitted differentials default to the canonical
// basis map with coefficient 1 when both degrees hold a single summand.
LadderComplex parse_complex(const LadderSpec& spec, std::istream& in);
LadderComplex parse_complex_file(const LadderSpec& spec, const std::string& path);

}  // namespace coxpoly
