#pragma once

#include <random>
#include <string>
#include <vector>

#include "coxpoly/ladder.hpp"
#include "coxpoly/poset.hpp"

namespace coxpoly {

// One verification sweep. `checked` counts assertions that ran; an instance
// line is recorded per check so the CLI can echo them under --verbose.
struct SuiteResult {
    std::string name;
    bool pass = true;
    long checked = 0;
    std::vector<std::string> failures;
    std::vector<std::string> instances;

    explicit SuiteResult(std::string n = {}) : name(std::move(n)) {}
    void check(bool ok, const std::string& what);
};

struct SweepOptions {
    int u_max = 8;
    int v_max = 8;
    int n_max = 20;
    int r_max = 8;
    int samples = 200;
    unsigned seed = 20240001;
    RunMode mode = RunMode::parallel;
};

SuiteResult suite_rect_formula(const SweepOptions& opt);      // grid algebras
SuiteResult suite_ext_formula(const SweepOptions& opt);       // branch extensions
SuiteResult suite_four_families(const SweepOptions& opt);     // shared Coxeter polynomial
SuiteResult suite_nakayama_formula(const SweepOptions& opt);  // closed Nakayama form
SuiteResult suite_recursion(const SweepOptions& opt);         // three-term recursion
SuiteResult suite_happel(const SweepOptions& opt);            // one-point extension route
SuiteResult suite_ladkani(const SweepOptions& opt);           // flip algebras
SuiteResult suite_lemma32(const SweepOptions& opt);           // shift equation solver
SuiteResult suite_lemma34_bridge(const SweepOptions& opt);    // group-vs-matrix Euler values
SuiteResult suite_symmetry(const SweepOptions& opt);          // N(2r-1,r) vs N(2r-1,r+1)
SuiteResult suite_hom_lemmas(const SweepOptions& opt);        // homotopy Hom predicates
SuiteResult suite_tilting(const SweepOptions& opt);           // four tilting families
SuiteResult suite_structural(const SweepOptions& opt);        // palindromy, constant term

// Everything a single tilting-family certificate asserts.
struct TiltingCheck {
    int u, v;
    TiltingWhich which;
    TiltingReport report;
    bool diag_ones;
    bool end_matches_poset;
    bool chi_matches_nakayama;
    bool pass() const
    {
        return report.rigid && report.k0_unimodular && diag_ones && end_matches_poset &&
               chi_matches_nakayama;
    }
};

TiltingCheck check_tilting_instance(int u, int v, TiltingWhich which, RunMode mode);

// Extension poset whose incidence algebra matches the endomorphism algebra
// of the given tilting family.
ExtensionVariant matching_variant(TiltingWhich which);

// Deterministic random poset on at most max_elems elements plus a random
// downward closed subset, used by the flip sweep and the property tests.
Poset random_poset(std::mt19937& rng, int max_elems);
std::vector<int> random_downward_closed(std::mt19937& rng, const Poset& X);

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const SweepOptions& opt);

}  // namespace coxpoly
