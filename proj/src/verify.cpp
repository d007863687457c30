#include "coxpoly/verify.hpp"

#include <algorithm>
#include <sstream>

#include "coxpoly/closed_forms.hpp"
#include "coxpoly/coxeter.hpp"
#include "coxpoly/flip.hpp"
#include "coxpoly/lgroup.hpp"

namespace coxpoly {

void SuiteResult::check(bool ok, const std::string& what)
{
    ++checked;
    instances.push_back((ok ? "ok   " : "FAIL ") + what);
    if (!ok) {
        pass = false;
        failures.push_back(what);
    }
}

namespace {

std::string fmt_uv(int u, int v)
{
    return "u=" + std::to_string(u) + " v=" + std::to_string(v);
}

// Vertex index (1-based, Cartan ordering) of the unique poset minimum.
int minimum_vertex(const Poset& X, const std::vector<int>& order)
{
    for (size_t i = 0; i < order.size(); ++i)
        if (X.is_minimal(order[i]))
            return static_cast<int>(i) + 1;
    throw std::logic_error("poset without minimal element");
}

std::vector<int> chain_ids(const Poset& X, int v)
{
    std::vector<int> ids;
    for (int k = 1; k <= v; ++k) {
        int id = X.index_of("c" + std::to_string(k));
        if (id < 0)
            throw std::logic_error("missing chain element");
        ids.push_back(id);
    }
    return ids;
}

std::vector<int> row_ids(const Poset& X, int row, int u)
{
    std::vector<int> ids;
    for (int j = 1; j <= u; ++j) {
        int id = X.index_of("p" + std::to_string(row) + "_" + std::to_string(j));
        if (id < 0)
            throw std::logic_error("missing grid element");
        ids.push_back(id);
    }
    return ids;
}

}  // namespace

SuiteResult suite_rect_formula(const SweepOptions& opt)
{
    SuiteResult res{"rect-formula"};
    for (int u = 1; u <= opt.u_max; ++u) {
        const PolyZ by_matrix = coxeter_polynomial(incidence_cartan(rectangle_poset(u)));
        const PolyZ by_formula = chi_rectangle_formula(u);
        const PolyZ by_expansion = chi_rectangle_expansion(u);
        res.check(by_matrix == by_formula && by_formula == by_expansion,
                  "u=" + std::to_string(u) + " matrix/closed-form/expansion agree");
    }
    return res;
}

SuiteResult suite_ext_formula(const SweepOptions& opt)
{
    SuiteResult res{"ext-formula"};
    for (int u = 1; u <= opt.u_max; ++u)
        for (int v = 1; v <= opt.v_max; ++v) {
            const PolyZ by_matrix =
                coxeter_polynomial(incidence_cartan(extension_poset(u, v, ExtensionVariant::lower_out)));
            bool ok = by_matrix == chi_ext_formula(u, v);
            if (v == 1)
                ok = ok && by_matrix == chi_ext1_formula(u);
            res.check(ok, fmt_uv(u, v) + " extension matrix equals closed form");
        }
    return res;
}

SuiteResult suite_four_families(const SweepOptions& opt)
{
    SuiteResult res{"four-families"};
    struct Cell {
        int u, v;
        bool ok;
    };
    std::vector<Cell> cells;
    for (int u = 1; u <= opt.u_max; ++u)
        for (int v = 1; v <= opt.v_max; ++v)
            cells.push_back({u, v, false});
    run_indexed(static_cast<long>(cells.size()), opt.mode, [&](long i) {
        const int u = cells[i].u, v = cells[i].v;
        const PolyZ target = coxeter_polynomial(nakayama_cartan(2 * u + v, u + v + 1));
        bool ok = true;
        for (auto variant : {ExtensionVariant::lower_out, ExtensionVariant::upper_out,
                             ExtensionVariant::lower_in, ExtensionVariant::upper_in})
            ok = ok &&
                 coxeter_polynomial(incidence_cartan(extension_poset(u, v, variant))) == target;
        cells[i].ok = ok;
    });
    for (const auto& c : cells)
        res.check(c.ok, fmt_uv(c.u, c.v) + " all four variants match N(2u+v,u+v+1)");
    return res;
}

SuiteResult suite_nakayama_formula(const SweepOptions& opt)
{
    SuiteResult res{"nakayama-formula"};
    struct Cell {
        int n, r;
        bool ok;
    };
    std::vector<Cell> cells;
    for (int n = 2; n <= opt.n_max; ++n)
        for (int r = 2; r <= n; ++r)
            if (2 * r >= n + 2)
                cells.push_back({n, r, false});
    run_indexed(static_cast<long>(cells.size()), opt.mode, [&](long i) {
        cells[i].ok = coxeter_polynomial(nakayama_cartan(cells[i].n, cells[i].r)) ==
                      chi_nakayama_formula(cells[i].n, cells[i].r);
    });
    for (const auto& c : cells)
        res.check(c.ok, "n=" + std::to_string(c.n) + " r=" + std::to_string(c.r) +
                            " Nakayama closed form");
    return res;
}

SuiteResult suite_recursion(const SweepOptions& opt)
{
    SuiteResult res{"recursion"};
    for (int u = 1; u <= std::min(opt.u_max, 6); ++u)
        for (int v = 1; v <= std::min(opt.v_max, 6); ++v)
            res.check(one_point_step(chi_ext_formula(u, v), chi_ext_formula(u, v - 1)) ==
                          chi_ext_formula(u, v + 1),
                      fmt_uv(u, v) + " three-term step");
    return res;
}

SuiteResult suite_happel(const SweepOptions& opt)
{
    SuiteResult res{"happel"};
    for (int u = 1; u <= opt.u_max; ++u) {
        const Poset X = rectangle_poset(u);
        const auto order = X.default_linear_extension();
        const IntMatrix C = incidence_cartan(X, order);
        const DimVector m = injective_class(C, minimum_vertex(X, order));
        const PolyZ lifted = happel_extension_poly(chi_rectangle_formula(u), C, m);
        res.check(lifted == chi_ext1_formula(u),
                  "u=" + std::to_string(u) + " coefficient recursion hits closed form");
    }
    return res;
}

Poset random_poset(std::mt19937& rng, int max_elems)
{
    std::uniform_int_distribution<int> size_dist(2, max_elems);
    const int n = size_dist(rng);
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i)
        names.push_back("e" + std::to_string(i));
    std::uniform_int_distribution<int> coin(0, 9);
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < 4)
                covers.emplace_back(i, j);  // only i < j, so no cycles
    return Poset::from_covers(std::move(names), covers);
}

std::vector<int> random_downward_closed(std::mt19937& rng, const Poset& X)
{
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<char> in(X.size(), 0);
    for (int i = 0; i < X.size(); ++i)
        in[i] = static_cast<char>(coin(rng));
    // close downward
    for (int y = 0; y < X.size(); ++y)
        if (in[y])
            for (int z = 0; z < X.size(); ++z)
                if (X.leq(z, y))
                    in[z] = 1;
    std::vector<int> ids;
    for (int i = 0; i < X.size(); ++i)
        if (in[i])
            ids.push_back(i);
    return ids;
}

SuiteResult suite_ladkani(const SweepOptions& opt)
{
    SuiteResult res{"ladkani"};
    std::mt19937 rng(opt.seed);
    const int random_cases = std::max(opt.samples, 50);
    for (int i = 0; i < random_cases; ++i) {
        const Poset X = random_poset(rng, 8);
        const auto Y = random_downward_closed(rng, X);
        const bool ok =
            coxeter_polynomial(flip_cartan(X, Y)) == coxeter_polynomial(incidence_cartan(X));
        res.check(ok, "random poset #" + std::to_string(i + 1) + " flip preserves chi");
    }
    const int uv = std::min(opt.u_max, 5);
    for (int u = 1; u <= uv; ++u)
        for (int v = 1; v <= std::min(opt.v_max, 5); ++v) {
            const Poset X = extension_poset(u, v, ExtensionVariant::upper_in);
            const auto chain = chain_ids(X, v);
            const IntMatrix first = flip_cartan(X, chain);
            const IntMatrix expect1 =
                incidence_cartan(extension_poset(u, v, ExtensionVariant::lower_out));
            res.check(simultaneous_permutation_equal(first, expect1),
                      fmt_uv(u, v) + " chain flip reproduces the branch extension");

            std::vector<int> Z = chain;
            for (int id : row_ids(X, 1, u))
                Z.push_back(id);
            const IntMatrix second = flip_cartan(X, Z);
            res.check(simultaneous_permutation_equal(second,
                                                     nakayama_cartan(2 * u + v, u + v + 1)),
                      fmt_uv(u, v) + " chain+row flip reproduces the Nakayama Cartan");
        }
    for (int r = 2; r <= opt.r_max; ++r) {
        const Poset X = extension_poset(r - 1, 1, ExtensionVariant::lower_in);
        const auto Y = row_ids(X, 1, r - 1);
        res.check(simultaneous_permutation_equal(flip_cartan(X, Y), nakayama_cartan(2 * r - 1, r)),
                  "r=" + std::to_string(r) + " row flip reproduces N(2r-1,r)");
    }
    return res;
}

SuiteResult suite_lemma32(const SweepOptions& opt)
{
    SuiteResult res{"lemma32"};
    using Pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;
    const int u_max = std::max(opt.u_max, 60);
    for (int u = 1; u <= u_max; ++u) {
        const Pairs expect_zero =
            (u + 1) % 3 == 0 ? Pairs{{(u - 5) / 3, u + 1}} : Pairs{};
        const Pairs expect_x1 = (u + 1) % 3 == 0 ? Pairs{{(u - 2) / 3, u + 1}} : Pairs{};
        const Pairs expect_x2 = u % 3 == 0 ? Pairs{{(u - 3) / 3, u + 1}} : Pairs{};
        const Pairs expect_x3 = (u + 2) % 3 == 0 ? Pairs{{(u - 4) / 3, u + 2}} : Pairs{};
        res.check(solve_shift_equation(u, ShiftTarget::zero) == expect_zero &&
                      solve_shift_equation(u, ShiftTarget::x1) == expect_x1 &&
                      solve_shift_equation(u, ShiftTarget::x2) == expect_x2 &&
                      solve_shift_equation(u, ShiftTarget::x3) == expect_x3,
                  "u=" + std::to_string(u) + " solver matches case table");
    }
    return res;
}

SuiteResult suite_lemma34_bridge(const SweepOptions& opt)
{
    SuiteResult res{"lemma34-bridge"};
    const int u_max = std::max(opt.u_max, 12);
    for (int u = 1; u <= u_max; ++u) {
        const Poset X = rectangle_poset(u);
        const auto order = X.default_linear_extension();
        const IntMatrix C = incidence_cartan(X, order);
        const DimVector m = injective_class(C, minimum_vertex(X, order));
        bool ok = true;
        for (int j = 1; j <= 2 * u + 1 && ok; ++j)
            ok = Int(auslander_euler(u, j)) == tau_twisted_euler(C, m, j);
        res.check(ok, "u=" + std::to_string(u) + " group route equals matrix route");
    }
    return res;
}

SuiteResult suite_symmetry(const SweepOptions& opt)
{
    SuiteResult res{"symmetry"};
    for (int r = 2; r <= std::max(opt.r_max, 2); ++r)
        res.check(coxeter_polynomial(nakayama_cartan(2 * r - 1, r)) ==
                      coxeter_polynomial(nakayama_cartan(2 * r - 1, r + 1)),
                  "r=" + std::to_string(r) + " N(2r-1,r) ~ N(2r-1,r+1)");
    return res;
}

namespace {

// Random word over the projective ladder, left index first.
std::vector<int> random_word(std::mt19937& rng, const LadderSpec& spec, int max_len)
{
    std::uniform_int_distribution<int> start(1, spec.n);
    std::vector<int> w{start(rng)};
    std::uniform_int_distribution<int> coin(0, 2);
    while (static_cast<int>(w.size()) < max_len) {
        const int lo = w.size() >= 2 ? std::max(w[w.size() - 2] + spec.r, w.back() + 1)
                                     : w.back() + 1;
        const int hi = std::min(w.back() + spec.r - 1, spec.n);
        if (lo > hi || coin(rng) == 0)
            break;
        std::uniform_int_distribution<int> next(lo, hi);
        w.push_back(next(rng));
    }
    return w;
}

int hom_or_zero(const LadderSpec& spec, const std::vector<int>& xs, const std::vector<int>& ys)
{
    if (xs.empty() || ys.empty())
        return 0;
    return ladder_hom_dim(spec, xs[0], ys[0]);
}

}  // namespace

SuiteResult suite_hom_lemmas(const SweepOptions& opt)
{
    SuiteResult res{"hom-lemmas"};
    std::mt19937 rng(opt.seed);
    const int n_cap = std::min(std::max(opt.n_max, 2), 8);
    std::uniform_int_distribution<int> n_dist(2, n_cap);

    // Vanishing for right- against left-supported words overlapping in one
    // degree: if the boundary Hom spaces are alive, every chain map is
    // null-homotopic.
    struct Pair {
        LadderComplex x, y;
        int expected;  // -1 when only "dim == 0" is asserted
        std::string label;
    };
    std::vector<Pair> jobs;

    int premise_hits = 0;
    int attempts = 0;
    while (premise_hits < opt.samples && attempts < opt.samples * 300) {
        ++attempts;
        const int n = n_dist(rng);
        std::uniform_int_distribution<int> r_dist(2, n);
        const LadderSpec spec(n, r_dist(rng), LadderFlavor::projective);
        const auto xw = random_word(rng, spec, 3);
        const auto yw = random_word(rng, spec, 3);
        const LadderComplex X = LadderComplex::word(spec, 0, xw);
        const LadderComplex Y =
            LadderComplex::word(spec, -(static_cast<int>(yw.size()) - 1), yw);
        const bool premise =
            (X.summands_at(1).empty()
                 ? false
                 : hom_or_zero(spec, X.summands_at(1), Y.summands_at(0)) != 0) ||
            (Y.summands_at(-1).empty()
                 ? false
                 : hom_or_zero(spec, X.summands_at(0), Y.summands_at(-1)) != 0);
        if (!premise)
            continue;
        ++premise_hits;
        jobs.push_back({X, Y, 0,
                        "overlap vanishing #" + std::to_string(premise_hits) + " n=" +
                            std::to_string(n) + " r=" + std::to_string(spec.r)});
    }

    // Same with the left word starting one degree lower and a live corner
    // Hom plus any of the three side conditions.
    premise_hits = 0;
    attempts = 0;
    while (premise_hits < opt.samples && attempts < opt.samples * 300) {
        ++attempts;
        const int n = n_dist(rng);
        std::uniform_int_distribution<int> r_dist(2, n);
        const LadderSpec spec(n, r_dist(rng), LadderFlavor::projective);
        const auto xw = random_word(rng, spec, 3);
        const auto yw = random_word(rng, spec, 3);
        const LadderComplex X = LadderComplex::word(spec, -1, xw);
        const LadderComplex Y =
            LadderComplex::word(spec, -(static_cast<int>(yw.size()) - 1), yw);
        if (hom_or_zero(spec, X.summands_at(0), Y.summands_at(-1)) == 0)
            continue;
        const bool side = hom_or_zero(spec, X.summands_at(-1), Y.summands_at(0)) != 0 ||
                          hom_or_zero(spec, X.summands_at(-1), Y.summands_at(-2)) != 0 ||
                          hom_or_zero(spec, X.summands_at(1), Y.summands_at(0)) != 0;
        if (!side)
            continue;
        ++premise_hits;
        jobs.push_back({X, Y, 0,
                        "corner vanishing #" + std::to_string(premise_hits) + " n=" +
                            std::to_string(n) + " r=" + std::to_string(spec.r)});
    }

    // Exhaustive one-dimensionality test for three-term words sharing the
    // middle summand.
    for (int n = 2; n <= std::min(n_cap, 7); ++n)
        for (int r = 2; r <= n; ++r) {
            const LadderSpec spec(n, r, LadderFlavor::projective);
            for (int a0 = 1; a0 <= n; ++a0) {
                std::vector<std::pair<int, int>> shapes;  // (left, right), 0 = absent
                for (int left = 0; left <= n; ++left) {
                    if (left != 0 && !(left < a0 && a0 < left + r))
                        continue;
                    for (int right = 0; right <= n; ++right) {
                        if (right != 0 && !(a0 < right && right < a0 + r))
                            continue;
                        if (left != 0 && right != 0 && right < left + r)
                            continue;  // composite would not vanish
                        shapes.emplace_back(left, right);
                    }
                }
                auto build = [&](std::pair<int, int> sh) {
                    std::vector<int> w;
                    if (sh.first)
                        w.push_back(sh.first);
                    w.push_back(a0);
                    if (sh.second)
                        w.push_back(sh.second);
                    return LadderComplex::word(spec, sh.first ? -1 : 0, w);
                };
                for (const auto& sx : shapes)
                    for (const auto& sy : shapes) {
                        const bool cond1 =
                            sx.first == 0 ||
                            (sy.first != 0 && ladder_hom_dim(spec, sx.first, sy.first) != 0);
                        const bool cond2 =
                            sy.second == 0 ||
                            (sx.second != 0 && ladder_hom_dim(spec, sx.second, sy.second) != 0);
                        std::ostringstream label;
                        label << "shared-middle n=" << n << " r=" << r << " a0=" << a0 << " X=("
                              << sx.first << "," << sx.second << ") Y=(" << sy.first << ","
                              << sy.second << ")";
                        jobs.push_back({build(sx), build(sy), (cond1 && cond2) ? 1 : 0,
                                        label.str()});
                    }
            }
        }

    std::vector<int> dims(jobs.size());
    run_indexed(static_cast<long>(jobs.size()), opt.mode,
                [&](long i) { dims[i] = complex_hom_k_dim(jobs[i].x, jobs[i].y, 0); });
    for (size_t i = 0; i < jobs.size(); ++i)
        res.check(dims[i] == jobs[i].expected, jobs[i].label);
    return res;
}

ExtensionVariant matching_variant(TiltingWhich which)
{
    switch (which) {
        case TiltingWhich::upper: return ExtensionVariant::upper_out;
        case TiltingWhich::lower: return ExtensionVariant::lower_in;
        case TiltingWhich::post: return ExtensionVariant::lower_out;
        case TiltingWhich::pre: return ExtensionVariant::upper_in;
    }
    throw InvalidParameter("bad tilting family");
}

TiltingCheck check_tilting_instance(int u, int v, TiltingWhich which, RunMode mode)
{
    TiltingReport rep = verify_tilting(tilting_family(u, v, which), mode);
    TiltingCheck chk{u, v, which, std::move(rep), true, false, false};
    const int m = chk.report.end_cartan.dim();
    for (int i = 0; i < m; ++i)
        if (chk.report.end_cartan.at(i, i) != 1)
            chk.diag_ones = false;
    chk.end_matches_poset = simultaneous_permutation_equal(
        chk.report.end_cartan, incidence_cartan(extension_poset(u, v, matching_variant(which))));
    chk.chi_matches_nakayama = coxeter_polynomial(chk.report.end_cartan) ==
                               coxeter_polynomial(nakayama_cartan(2 * u + v, u + v + 1));
    return chk;
}

SuiteResult suite_tilting(const SweepOptions& opt)
{
    SuiteResult res{"tilting"};
    const int uv = std::min(std::min(opt.u_max, opt.v_max), 5);
    for (int u = 1; u <= uv; ++u)
        for (int v = 1; v <= uv; ++v)
            for (auto which :
                 {TiltingWhich::upper, TiltingWhich::lower, TiltingWhich::post, TiltingWhich::pre}) {
                const TiltingCheck chk = check_tilting_instance(u, v, which, opt.mode);
                res.check(chk.pass(), fmt_uv(u, v) + " " + to_string(which) +
                                          " rigid/K0/shape/chi certificate");
            }
    return res;
}

SuiteResult suite_structural(const SweepOptions& opt)
{
    SuiteResult res{"structural"};
    auto structural_ok = [](const PolyZ& p) {
        return p.is_palindromic() && p.coeff(0) == 1 && p.leading() == 1;
    };
    for (int u = 1; u <= std::max(opt.u_max, 12); ++u)
        res.check(structural_ok(chi_rectangle_formula(u)),
                  "rect u=" + std::to_string(u) + " palindromic, unit ends");
    for (int u = 1; u <= opt.u_max; ++u)
        for (int v = 1; v <= opt.v_max; ++v)
            res.check(structural_ok(chi_ext_formula(u, v)),
                      "ext " + fmt_uv(u, v) + " palindromic, unit ends");
    for (int n = 2; n <= opt.n_max; ++n)
        for (int r = 2; r <= n; ++r)
            if (2 * r >= n + 2)
                res.check(structural_ok(coxeter_polynomial(nakayama_cartan(n, r))),
                          "nakayama n=" + std::to_string(n) + " r=" + std::to_string(r) +
                              " palindromic, unit ends");
    for (int u = 1; u <= std::min(opt.u_max, 5); ++u)
        for (int v = 1; v <= std::min(opt.v_max, 5); ++v)
            for (auto which :
                 {TiltingWhich::upper, TiltingWhich::lower, TiltingWhich::post, TiltingWhich::pre}) {
                const TiltingReport rep = verify_tilting(tilting_family(u, v, which), opt.mode);
                res.check(structural_ok(coxeter_polynomial(rep.end_cartan)),
                          "tilting " + fmt_uv(u, v) + " " + to_string(which) +
                              " endomorphism chi palindromic");
            }
    return res;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{
        "rect-formula",     "ext-formula", "four-families", "nakayama-formula",
        "recursion",        "happel",      "ladkani",       "lemma32",
        "lemma34-bridge",   "symmetry",    "hom-lemmas",    "tilting",
        "structural",
    };
    return names;
}

SuiteResult run_suite(const std::string& name, const SweepOptions& opt)
{
    if (name == "rect-formula")
        return suite_rect_formula(opt);
    if (name == "ext-formula")
        return suite_ext_formula(opt);
    if (name == "four-families")
        return suite_four_families(opt);
    if (name == "nakayama-formula")
        return suite_nakayama_formula(opt);
    if (name == "recursion")
        return suite_recursion(opt);
    if (name == "happel")
        return suite_happel(opt);
    if (name == "ladkani")
        return suite_ladkani(opt);
    if (name == "lemma32")
        return suite_lemma32(opt);
    if (name == "lemma34-bridge")
        return suite_lemma34_bridge(opt);
    if (name == "symmetry")
        return suite_symmetry(opt);
    if (name == "hom-lemmas")
        return suite_hom_lemmas(opt);
    if (name == "tilting")
        return suite_tilting(opt);
    if (name == "structural")
        return suite_structural(opt);
    throw InvalidParameter("unknown suite '" + name + "'");
}

}  // namespace coxpoly
