/*
   Copyright 2026 The gft Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// gft: command-line front end for the series, membership, radius and bound tools.
//
// Exit codes: 0 success or member, 1 non-member or failed check,
// 2 usage or input error, 3 partial result (pole during a radius scan).

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "gft/bounds.hpp"
#include "gft/errors.hpp"
#include "gft/geometry.hpp"
#include "gft/io.hpp"
#include "gft/omega.hpp"
#include "gft/roots.hpp"
#include "gft/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPartial = 3;

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

// ---- roots ----------------------------------------------------------------

struct RootsArgs {
    std::string eq;
    bool all = false;
    bool json = false;
};

int cmd_roots(const RootsArgs& a) {
    std::vector<const gft::NamedEquation*> eqs;
    if (a.all) {
        for (const gft::NamedEquation& e : gft::equation_catalog()) eqs.push_back(&e);
    } else if (!a.eq.empty()) {
        eqs.push_back(&gft::find_equation(a.eq));
    } else {
        throw gft::DomainError("roots: give --eq NAME or --all");
    }
    nlohmann::json out = nlohmann::json::array();
    for (const gft::NamedEquation* e : eqs) {
        const gft::RootResult r = gft::solve_bracketed(e->F, e->lo, e->hi);
        if (a.json) {
            nlohmann::json j = gft::to_json(r);
            j["name"] = e->name;
            j["expression"] = e->expression;
            j["bracket"] = {e->lo, e->hi};
            out.push_back(j);
        } else {
            fmt::print("{:<22} {:.15f}  residual {:.3e}  bracket [{:g}, {:g}]  {}\n", e->name, r.root, r.residual, e->lo,
                       e->hi, e->expression);
        }
    }
    if (a.json) print_json(a.all ? out : out.front());
    return kExitOk;
}

// ---- member ---------------------------------------------------------------

struct MemberArgs {
    std::string input;
    double lambda = gft::kOmegaLambda;
    double tol = gft::kMembershipTol;
};

int cmd_member(const MemberArgs& a) {
    if (!(a.lambda > 0.0)) throw gft::InvalidLambda("lambda must be > 0");
    const gft::TaylorSeries f = gft::read_series_file(a.input);
    const gft::MembershipCertificate c = gft::is_member(f, a.lambda, a.tol);
    print_json(gft::to_json(c));
    return c.member ? kExitOk : kExitNegative;
}

// ---- radius ---------------------------------------------------------------

struct RadiusArgs {
    std::string property;
    std::string input;
    std::optional<int> partial_sum;
    gft::ScanConfig cfg;
};

int cmd_radius(const RadiusArgs& a) {
    const gft::Property kind = gft::parse_property(a.property);
    a.cfg.validate();
    const gft::TaylorSeries f = gft::read_series_file(a.input);
    try {
        const gft::RadiusResult r =
            a.partial_sum ? gft::partial_sum_radius(kind, f, *a.partial_sum, a.cfg) : gft::radius_of_positivity(kind, f, a.cfg);
        nlohmann::json j = gft::to_json(r);
        if (a.partial_sum) j["partial_sum"] = *a.partial_sum;
        print_json(j);
        return kExitOk;
    } catch (const gft::PoleEncountered& e) {
        nlohmann::json j = {{"property", gft::property_name(kind)},
                            {"partial", true},
                            {"radius", e.last_good_radius()},
                            {"pole_radius", e.radius()},
                            {"pole_theta", e.theta()},
                            {"error", e.what()}};
        print_json(j);
        return kExitPartial;
    }
}

// ---- family ---------------------------------------------------------------

struct FamilyArgs {
    std::string name;
    double mu = 0.0;
    double lambda = gft::kOmegaLambda;
    int k = 2;
    std::optional<int> degree;
    std::string out;
};

int cmd_family(const FamilyArgs& a) {
    const int degree = a.degree ? *a.degree : gft::default_degree();
    std::optional<gft::TaylorSeries> f;
    if (a.name == "fmu") {
        f = gft::family_f_mu(a.mu, degree);
    } else if (a.name == "eq16") {
        f = gft::example_cubic(a.lambda);
    } else if (a.name == "extremal") {
        f = gft::extremal_k(a.k, a.lambda);
    } else {
        throw gft::DomainError("unknown family '" + a.name + "' (expected fmu, eq16 or extremal)");
    }
    if (a.out.empty() || a.out == "-") {
        print_json(gft::series_to_json(*f));
    } else {
        gft::write_series_file(a.out, *f);
    }
    return kExitOk;
}

// ---- figure1 --------------------------------------------------------------

struct FigureArgs {
    int nmin = 2;
    int nmax = 40;
    std::string format = "csv";
    std::string out;
};

int cmd_figure1(const FigureArgs& a) {
    if (a.nmax < 2 || a.nmin < 2 || a.nmin > a.nmax) throw gft::DomainError("need 2 <= nmin <= nmax");
    const auto rows = gft::positivity_table(a.nmin, a.nmax);
    const std::string body = a.format == "json" ? gft::positivity_json(rows) + "\n" : gft::positivity_csv(rows);
    if (a.out.empty() || a.out == "-") {
        std::cout << body;
    } else {
        std::ofstream os(a.out);
        if (!os) throw gft::Error("cannot open '" + a.out + "' for writing");
        os << body;
        if (!os.flush()) throw gft::Error("write to '" + a.out + "' failed");
    }
    const auto plateau = gft::positivity_plateau_start(rows);
    // Summary goes to stderr when the table itself is on stdout.
    std::FILE* sink = (a.out.empty() || a.out == "-") ? stderr : stdout;
    if (plateau) {
        fmt::print(sink, "plateau from n = {} at radius {:.6f}\n", *plateau,
                   rows[static_cast<std::size_t>(*plateau - a.nmin)].radius);
    } else {
        fmt::print(sink, "no plateau detected up to n = {}\n", a.nmax);
    }
    return kExitOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    gft::VerifyOptions opts;
    bool json = false;
};

int cmd_verify(const VerifyArgs& a) {
    if (a.suite != "all" && !gft::is_suite_name(a.suite)) throw gft::DomainError("unknown suite '" + a.suite + "'");
    const auto reports = gft::run_suites(a.suite, a.opts);
    bool ok = true;
    nlohmann::json out = nlohmann::json::array();
    for (const gft::SuiteReport& r : reports) {
        ok = ok && r.ok();
        if (a.json) {
            out.push_back(gft::to_json(r));
        } else {
            std::cout << gft::to_text(r);
        }
    }
    if (a.json) print_json({{"seed", a.opts.seed}, {"samples", a.opts.samples}, {"ok", ok}, {"suites", out}});
    return ok ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical tools for the function classes Omega and Omega_lambda"};
    app.require_subcommand(1);

    RootsArgs roots;
    auto* sr = app.add_subcommand("roots", "Solve the named radius equations");
    auto* eq = sr->add_option("--eq", roots.eq, "Equation name");
    sr->add_flag("--all", roots.all, "Solve every catalogued equation")->excludes(eq);
    sr->add_flag("--json", roots.json, "Emit JSON");

    MemberArgs member;
    auto* sm = app.add_subcommand("member", "Test membership in Omega_lambda");
    sm->add_option("--input", member.input, "Coefficient JSON file")->required();
    sm->add_option("--lambda", member.lambda, "Class parameter lambda")->capture_default_str();
    sm->add_option("--tol", member.tol, "Tolerance on the boundary defect")->capture_default_str();

    RadiusArgs radius;
    auto* sd = app.add_subcommand("radius", "Radius of starlikeness, convexity or close-to-convexity");
    sd->add_option("--property", radius.property, "starlike, convex or ctc")->required();
    sd->add_option("--input", radius.input, "Coefficient JSON file")->required();
    sd->add_option("--partial-sum", radius.partial_sum, "Use the partial sum s_n");
    sd->add_option("--theta-samples", radius.cfg.theta_samples)->capture_default_str();
    sd->add_option("--r-step", radius.cfg.r_step)->capture_default_str();
    sd->add_option("--bisection-tol", radius.cfg.bisection_tol)->capture_default_str();
    sd->add_option("--r-max", radius.cfg.r_max)->capture_default_str();

    FamilyArgs family;
    auto* sf = app.add_subcommand("family", "Write coefficients of a built-in family");
    sf->add_option("--name", family.name, "fmu, eq16 or extremal")->required();
    sf->add_option("--mu", family.mu, "Parameter mu of f_mu");
    sf->add_option("--lambda", family.lambda, "Class parameter lambda");
    sf->add_option("--k", family.k, "Index of the extremal function");
    sf->add_option("--degree", family.degree, "Truncation degree (default GFT_DEFAULT_DEGREE or 64)");
    sf->add_option("--out", family.out, "Output file (default stdout)");

    FigureArgs figure;
    auto* sg = app.add_subcommand("figure1", "Tabulate the partial-sum positivity radius against n");
    sg->add_option("--nmin", figure.nmin)->capture_default_str();
    sg->add_option("--nmax", figure.nmax)->capture_default_str();
    sg->add_option("--format", figure.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sg->add_option("--out", figure.out, "Output file (default stdout)");

    VerifyArgs verify;
    auto* sv = app.add_subcommand("verify", "Run the bound verification suites");
    sv->add_option("--suite", verify.suite, "all or a suite name")->capture_default_str();
    sv->add_option("--seed", verify.opts.seed)->capture_default_str();
    sv->add_option("--samples", verify.opts.samples, "Random functions per randomized check")->capture_default_str();
    sv->add_flag("--json", verify.json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*sr) return cmd_roots(roots);
        if (*sm) return cmd_member(member);
        if (*sd) return cmd_radius(radius);
        if (*sf) return cmd_family(family);
        if (*sg) return cmd_figure1(figure);
        if (*sv) return cmd_verify(verify);
    } catch (const std::exception& e) {
        fmt::print(stderr, "gft: {}\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
