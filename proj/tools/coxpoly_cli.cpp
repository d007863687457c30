// coxpoly command line front end. Subcommands construct the algebra
// families, evaluate closed forms, and run the verification sweeps; output
// is a deterministic JSON (or CSV) report on stdout.
//
// Exit codes: 0 every checked equality held, 1 a verification failed,
// 2 usage or input error.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "coxpoly/closed_forms.hpp"
#include "coxpoly/coxeter.hpp"
#include "coxpoly/flip.hpp"
#include "coxpoly/ladder.hpp"
#include "coxpoly/lgroup.hpp"
#include "coxpoly/poset.hpp"
#include "coxpoly/verify.hpp"

using json = nlohmann::ordered_json;
using namespace coxpoly;

namespace {

json int_to_json(const Int& v)
{
    if (v.fits_slong_p())
        return json(v.get_si());
    return json(v.get_str());
}

json poly_to_json(const PolyZ& p)
{
    // ascending: entry i is the coefficient of lambda^i, so palindromes
    // read the same both ways
    json a = json::array();
    for (const Int& c : p.coeffs())
        a.push_back(int_to_json(c));
    return a;
}

json matrix_to_json(const IntMatrix& m)
{
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j)
            row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json vector_to_json(const DimVector& v)
{
    json a = json::array();
    for (const Int& c : v)
        a.push_back(int_to_json(c));
    return a;
}

bool all_scalar(const json& a)
{
    for (const auto& e : a)
        if (e.is_structured())
            return false;
    return true;
}

void write_csv(std::ostream& os, const json& j, const std::string& prefix)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            write_csv(os, v, prefix.empty() ? k : prefix + "." + k);
    } else if (j.is_array()) {
        if (all_scalar(j)) {
            os << prefix;
            for (const auto& e : j)
                os << "," << (e.is_string() ? e.get<std::string>() : e.dump());
            os << "\n";
        } else {
            int i = 0;
            for (const auto& e : j)
                write_csv(os, e, prefix + "[" + std::to_string(i++) + "]");
        }
    } else {
        os << prefix << "," << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

struct Output {
    std::string format = "json";
    void emit(const json& report) const
    {
        if (format == "csv")
            write_csv(std::cout, report, "");
        else
            std::cout << report.dump(2) << "\n";
    }
};

// Options shared by `cartan` and `coxeter`.
struct FamilyOptions {
    std::string family;
    int u = 0, v = 1, n = 0, r = 0;
    std::string variant = "lower-out";
    std::string poset_path;

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("--family", family, "rect | ext | nakayama | poset-file")->required();
        cmd->add_option("--u", u, "grid length");
        cmd->add_option("--v", v, "branch length (ext family)");
        cmd->add_option("--n", n, "number of vertices (nakayama)");
        cmd->add_option("--r", r, "nilpotency degree (nakayama)");
        cmd->add_option("--variant", variant,
                        "ext attachment: lower-out | upper-out | lower-in | upper-in");
        cmd->add_option("--poset", poset_path, "poset file (poset-file family)");
    }

    IntMatrix build(json& params) const
    {
        params["family"] = family;
        if (family == "rect") {
            params["u"] = u;
            return incidence_cartan(rectangle_poset(u));
        }
        if (family == "ext") {
            params["u"] = u;
            params["v"] = v;
            params["variant"] = variant;
            return incidence_cartan(extension_poset(u, v, extension_variant_from_string(variant)));
        }
        if (family == "nakayama") {
            params["n"] = n;
            params["r"] = r;
            return nakayama_cartan(n, r);
        }
        if (family == "poset-file") {
            params["poset"] = poset_path;
            return incidence_cartan(parse_poset_file(poset_path));
        }
        throw InvalidParameter("unknown family '" + family + "'");
    }

    bool has_formula() const { return family != "poset-file"; }

    PolyZ formula(json& params) const
    {
        if (family == "rect")
            return chi_rectangle_formula(u);
        if (family == "ext") {
            if (variant != "lower-out")
                params["formula_note"] = "closed form is variant independent";
            return chi_ext_formula(u, v);
        }
        if (family == "nakayama")
            return chi_nakayama_formula(n, r);
        throw InvalidParameter("family '" + family + "' has no closed form");
    }
};

std::vector<std::string> split_names(const std::string& csv)
{
    std::vector<std::string> out;
    std::istringstream in(csv);
    for (std::string tok; std::getline(in, tok, ',');)
        if (!tok.empty())
            out.push_back(tok);
    return out;
}

int run(int argc, char** argv)
{
    CLI::App app{
        "exact Coxeter-polynomial computations for poset and Nakayama algebras\n"
        "polynomials are serialized ascending: entry i is the coefficient of lambda^i,\n"
        "so palindromic output reads the same in both directions"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--format", out.format, "json (default) or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // cartan ---------------------------------------------------------------
    auto* cartan_cmd = app.add_subcommand("cartan", "Cartan matrix of a family member");
    FamilyOptions cartan_fam;
    cartan_fam.add_to(cartan_cmd);

    // coxeter --------------------------------------------------------------
    auto* cox_cmd = app.add_subcommand("coxeter", "Coxeter polynomial, by matrix or closed form");
    FamilyOptions cox_fam;
    cox_fam.add_to(cox_cmd);
    std::string method = "matrix";
    cox_cmd->add_option("--method", method, "matrix | formula | both")
        ->check(CLI::IsMember({"matrix", "formula", "both"}));

    // verify ---------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
    std::string suite;
    std::string suite_help = "one of:";
    for (const auto& s : suite_names())
        suite_help += " " + s;
    verify_cmd->add_option("suite", suite, suite_help)->required();
    SweepOptions sweep;
    bool verbose = false, serial = false;
    int tilt_u = 0, tilt_v = 0;
    std::string tilt_which;
    verify_cmd->add_option("--u-max", sweep.u_max);
    verify_cmd->add_option("--v-max", sweep.v_max);
    verify_cmd->add_option("--n-max", sweep.n_max);
    verify_cmd->add_option("--r-max", sweep.r_max);
    verify_cmd->add_option("--samples", sweep.samples);
    verify_cmd->add_option("--seed", sweep.seed);
    verify_cmd->add_option("--u", tilt_u, "single tilting instance: grid length");
    verify_cmd->add_option("--v", tilt_v, "single tilting instance: branch length");
    verify_cmd->add_option("--which", tilt_which, "upper | lower | post | pre");
    verify_cmd->add_flag("--verbose", verbose, "echo one line per instance");
    verify_cmd->add_flag("--serial", serial, "force the serial reference sweep");

    // lgroup ---------------------------------------------------------------
    auto* lgroup_cmd = app.add_subcommand("lgroup", "rank-one group computations");
    lgroup_cmd->require_subcommand(1);
    auto* solve_cmd = lgroup_cmd->add_subcommand("solve", "solve a x1 - b omega = target");
    int lg_u = 1;
    std::string lg_target = "zero";
    solve_cmd->add_option("--u", lg_u)->required();
    solve_cmd->add_option("--target", lg_target, "zero | x1 | x2 | x3");
    auto* euler_cmd = lgroup_cmd->add_subcommand("euler", "signed Euler count");
    int eu_u = 1, eu_j = 1;
    euler_cmd->add_option("--u", eu_u)->required();
    euler_cmd->add_option("--j", eu_j)->required();

    // flip -----------------------------------------------------------------
    auto* flip_cmd = app.add_subcommand("flip", "Cartan matrix of a flip algebra");
    std::string flip_poset_path, flip_closed;
    int flip_u = 0, flip_v = 1;
    std::string flip_family, flip_variant = "upper-in";
    flip_cmd->add_option("--poset", flip_poset_path, "poset file");
    flip_cmd->add_option("--family", flip_family, "ext (built-in family instead of a file)");
    flip_cmd->add_option("--u", flip_u);
    flip_cmd->add_option("--v", flip_v);
    flip_cmd->add_option("--variant", flip_variant);
    flip_cmd->add_option("--closed", flip_closed, "comma separated downward closed subset")
        ->required();

    // hom ------------------------------------------------------------------
    auto* hom_cmd = app.add_subcommand("hom", "homotopy-category Hom dimension");
    int hom_n = 0, hom_r = 0, hom_k = 0, hom_expect = -1;
    std::string hom_flavor = "projective", hom_x, hom_y;
    hom_cmd->add_option("--n", hom_n)->required();
    hom_cmd->add_option("--r", hom_r)->required();
    hom_cmd->add_option("--flavor", hom_flavor, "projective | injective")
        ->check(CLI::IsMember({"projective", "injective"}));
    hom_cmd->add_option("--x", hom_x, "complex file, source")->required();
    hom_cmd->add_option("--y", hom_y, "complex file, target")->required();
    hom_cmd->add_option("--k", hom_k, "shift applied to the target");
    hom_cmd->add_option("--expect", hom_expect, "fail (exit 1) unless the dimension matches");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    json report;
    std::string status = "pass";

    try {
        if (cartan_cmd->parsed()) {
            report["command"] = "cartan";
            json params;
            const IntMatrix C = cartan_fam.build(params);
            report["params"] = params;
            report["results"]["cartan"] = matrix_to_json(C);
            report["results"]["det"] = int_to_json(det(C));
        } else if (cox_cmd->parsed()) {
            report["command"] = "coxeter";
            json params;
            params["method"] = method;
            json results;
            if (method != "formula") {
                const IntMatrix C = cox_fam.build(params);
                results["coeffs"] = poly_to_json(coxeter_polynomial(C));
            }
            if (method != "matrix") {
                if (!cox_fam.has_formula())
                    throw InvalidParameter("no closed form for this family");
                json dummy;
                const PolyZ chi = cox_fam.formula(method == "formula" ? params : dummy);
                if (method == "formula") {
                    cox_fam.build(params);  // echo family parameters
                    results["coeffs"] = poly_to_json(chi);
                } else {
                    results["formula_coeffs"] = poly_to_json(chi);
                    const bool equal = results["coeffs"] == results["formula_coeffs"];
                    results["equal"] = equal;
                    if (!equal)
                        status = "fail";
                }
            }
            report["params"] = params;
            report["results"] = results;
        } else if (verify_cmd->parsed()) {
            report["command"] = "verify";
            sweep.mode = serial ? RunMode::serial : RunMode::parallel;
            json params;
            params["suite"] = suite;
            if (suite == "tilting" && tilt_u > 0 && tilt_v > 0 && !tilt_which.empty()) {
                params["u"] = tilt_u;
                params["v"] = tilt_v;
                params["which"] = tilt_which;
                const TiltingCheck chk = check_tilting_instance(
                    tilt_u, tilt_v, tilting_which_from_string(tilt_which), sweep.mode);
                json rep;
                rep["rigid"] = chk.report.rigid;
                json viols = json::array();
                for (const auto& viol : chk.report.violations)
                    viols.push_back(json{{"s", viol.s}, {"t", viol.t}, {"k", viol.k},
                                         {"dim", viol.dim}});
                rep["violations"] = viols;
                json classes = json::array();
                for (const auto& cls : chk.report.k0_classes)
                    classes.push_back(vector_to_json(cls));
                rep["k0_classes"] = classes;
                rep["k0_unimodular"] = chk.report.k0_unimodular;
                rep["k0_det"] = int_to_json(chk.report.k0_det);
                rep["end_cartan"] = matrix_to_json(chk.report.end_cartan);
                rep["shift_bound"] = chk.report.shift_bound;
                rep["end_matches_poset"] = chk.end_matches_poset;
                rep["chi_matches_nakayama"] = chk.chi_matches_nakayama;
                report["params"] = params;
                report["results"]["tilting"] = rep;
                if (!chk.pass())
                    status = "fail";
            } else {
                params["u_max"] = sweep.u_max;
                params["v_max"] = sweep.v_max;
                params["n_max"] = sweep.n_max;
                params["r_max"] = sweep.r_max;
                params["samples"] = sweep.samples;
                params["seed"] = sweep.seed;
                const SuiteResult res = run_suite(suite, sweep);
                report["params"] = params;
                report["results"]["checked"] = res.checked;
                report["results"]["failures"] = json(res.failures);
                if (verbose)
                    report["results"]["instances"] = json(res.instances);
                if (!res.pass)
                    status = "fail";
            }
        } else if (lgroup_cmd->parsed()) {
            report["command"] = "lgroup";
            if (solve_cmd->parsed()) {
                report["params"] = json{{"action", "solve"}, {"u", lg_u}, {"target", lg_target}};
                json pairs = json::array();
                for (auto [a, b] : solve_shift_equation(lg_u, shift_target_from_string(lg_target)))
                    pairs.push_back(json{{"a", a}, {"b", b}});
                report["results"]["solutions"] = pairs;
            } else {
                report["params"] = json{{"action", "euler"}, {"u", eu_u}, {"j", eu_j}};
                report["results"]["value"] = auslander_euler(eu_u, eu_j);
            }
        } else if (flip_cmd->parsed()) {
            report["command"] = "flip";
            json params;
            Poset X = [&] {
                if (!flip_family.empty()) {
                    params["family"] = flip_family;
                    params["u"] = flip_u;
                    params["v"] = flip_v;
                    params["variant"] = flip_variant;
                    if (flip_family != "ext")
                        throw InvalidParameter("flip --family supports only 'ext'");
                    return extension_poset(flip_u, flip_v,
                                           extension_variant_from_string(flip_variant));
                }
                if (flip_poset_path.empty())
                    throw InvalidParameter("flip needs --poset FILE or --family ext");
                params["poset"] = flip_poset_path;
                return parse_poset_file(flip_poset_path);
            }();
            params["closed"] = flip_closed;
            std::vector<int> Y;
            for (const auto& nm : split_names(flip_closed)) {
                const int id = X.index_of(nm);
                if (id < 0)
                    throw UnknownElement("unknown element '" + nm + "'");
                Y.push_back(id);
            }
            const IntMatrix F = flip_cartan(X, Y);
            report["params"] = params;
            report["results"]["flip_cartan"] = matrix_to_json(F);
            const PolyZ chi_flip = coxeter_polynomial(F);
            const PolyZ chi_incidence = coxeter_polynomial(incidence_cartan(X));
            report["results"]["chi_flip"] = poly_to_json(chi_flip);
            report["results"]["chi_incidence"] = poly_to_json(chi_incidence);
            const bool equal = chi_flip == chi_incidence;
            report["results"]["equal"] = equal;
            if (!equal)
                status = "fail";
        } else if (hom_cmd->parsed()) {
            report["command"] = "hom";
            const LadderSpec spec(hom_n, hom_r,
                                  hom_flavor == "projective" ? LadderFlavor::projective
                                                             : LadderFlavor::injective);
            report["params"] = json{{"n", hom_n},           {"r", hom_r}, {"flavor", hom_flavor},
                                    {"x", hom_x},           {"y", hom_y}, {"k", hom_k}};
            const LadderComplex X = parse_complex_file(spec, hom_x);
            const LadderComplex Y = parse_complex_file(spec, hom_y);
            const int dim = complex_hom_k_dim(X, Y, hom_k);
            report["results"]["dim"] = dim;
            if (hom_expect >= 0) {
                report["results"]["expected"] = hom_expect;
                if (dim != hom_expect)
                    status = "fail";
            }
        }
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        report["status"] = "error";
        report["error"] = e.what();
        out.emit(report);
        return 1;
    }

    report["status"] = status;
    out.emit(report);
    return status == "pass" ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    return run(argc, argv);
}
