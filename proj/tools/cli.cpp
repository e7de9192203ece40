#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "srr/code_analysis.hpp"
#include "srr/error.hpp"
#include "srr/matrix_file.hpp"
#include "srr/outer_bounds.hpp"
#include "srr/recovery.hpp"
#include "srr/report.hpp"
#include "srr/srr_core.hpp"

namespace srr::cli {

namespace {

using report::json;

constexpr const char* kModule = "cli";

struct Input
{
    GeneratorMatrix g;
    std::string digest;
};

Input load(const std::string& path)
{
    std::string contents;
    GeneratorMatrix g = load_matrix_file(path, &contents);
    return {std::move(g), report::digest(contents)};
}

Rational parse_mu(const std::string& text)
{
    Rational mu = parse_rational(text);
    if (mu <= 0)
        throw Error(ErrorKind::ValidationError, kModule, "--mu must be positive");
    return mu;
}

VectorQ parse_demand(const std::string& text, int k, const char* flag)
{
    VectorQ v = parse_rational_list(text);
    if (v.size() != k)
        throw Error(ErrorKind::LengthMismatch, kModule,
                    std::string(flag) + " has " + std::to_string(v.size()) + " entries, expected k = " + std::to_string(k));
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) < 0)
            throw Error(ErrorKind::ValidationError, kModule, std::string(flag) + " entries must be nonnegative");
    return v;
}

void write(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty())
    {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw Error(ErrorKind::ValidationError, kModule, "cannot write '" + path + "'");
    file << text;
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

ProjectionMethod parse_method(const std::string& name)
{
    return name == "fm" ? ProjectionMethod::FourierMotzkin : ProjectionMethod::SupportHull;
}

json vertices_json(const std::vector<VectorQ>& points)
{
    json out = json::array();
    for (const auto& p : points)
        out.push_back(report::to_json(p));
    return out;
}

// ---------------------------------------------------------------- analyze

json analyze(const Input& in, bool r2)
{
    RecoverySystem minimal = minimal_recovery_system(in.g);
    json result = {{"profile", report::to_json(code_profile(in.g, minimal))},
                   {"recovery", report::to_json(minimal)}};
    if (r2)
    {
        try
        {
            result["params"] = report::to_json(region_params(minimal, {2}));
        }
        catch (const Error& e)
        {
            if (!is_guard(e.kind()))
                throw;
            result["params"] = report::to_json(region_params(minimal));
            result["r2_error"] = e.what();
        }
    }
    else
    {
        result["params"] = report::to_json(region_params(minimal));
    }
    return result;
}

// ----------------------------------------------------------------- member

json member(const Input& in, const std::string& lambda_text, const std::string& mu_text, bool integerize)
{
    RecoverySystem minimal = minimal_recovery_system(in.g);
    VectorQ lambda = parse_demand(lambda_text, in.g.k(), "--lambda");
    Rational mu = parse_mu(mu_text);
    MembershipResult m = srr_membership(minimal, mu, lambda);
    json result = {{"lambda", report::to_json(lambda)}, {"mu", report::to_json(mu)}, {"membership", report::to_json(m)}};
    if (integerize && m.certificate)
        result["integer_allocation"] = report::to_json(to_integer_allocation(*m.certificate));
    return result;
}

// ----------------------------------------------------------------- region

std::string region(const Input& in, const std::string& format, const std::string& method, const std::string& mu_text,
                   const std::function<json(json)>& wrap)
{
    const int k = in.g.k();
    if (format == "svg" && k > 3)
        throw Error(ErrorKind::UnsupportedDimension, kModule,
                    "SVG output supports k = 2 (k = 3 exports facet and vertex lists); got k = " + std::to_string(k));
    RecoverySystem minimal = minimal_recovery_system(in.g);
    Rational mu = parse_mu(mu_text);
    RegionOptions options;
    options.method = parse_method(method);
    Region r = region_polytope(minimal, mu, options);

    if (format == "csv")
        return report::vertices_csv(r.v);
    if (format == "svg" && k == 2)
        return report::svg_plot({{"service rate region", r.v.vertices, "#1f4e79", "#9dc3e6"}}, "Service rate region");

    json result = {{"k", k}, {"mu", report::to_json(mu)}, {"method", method}, {"region", report::to_json(r)}};
    if (format == "svg")
        result["note"] = "3-D regions are exported as facet and vertex lists";
    return dump(wrap(std::move(result)));
}

// ----------------------------------------------------------------- bounds

const char* const kPalette[] = {"#c00000", "#2e75b6", "#548235", "#bf9000", "#7030a0", "#ed7d31", "#00b0f0", "#7f7f7f"};

json bounds(const Input& in, const std::string& set, const std::vector<std::string>& b_texts, const std::string& svg_path,
            std::ostream& out)
{
    const int k = in.g.k();
    if (!svg_path.empty() && k != 2)
        throw Error(ErrorKind::UnsupportedDimension, kModule, "--svg needs k = 2, got k = " + std::to_string(k));
    std::vector<std::string> names;
    if (set != "all")
    {
        std::stringstream ss(set);
        std::string name;
        while (std::getline(ss, name, ','))
            if (!name.empty())
                names.push_back(name);
    }
    std::vector<VectorQ> extra;
    for (const auto& text : b_texts)
        extra.push_back(parse_demand(text, k, "--b"));

    RecoverySystem minimal = minimal_recovery_system(in.g);
    BoundSet set_result = all_bounds(in.g, minimal, names, extra);
    Region region = region_polytope(minimal, 1);

    std::vector<report::SvgLayer> layers;
    layers.push_back({"region", region.v.vertices, "#404040", "#bfbfbf"});
    json list = json::array();
    std::size_t colour = 0;
    for (const auto& bound : set_result.bounds)
    {
        json entry = report::to_json(bound);
        bool contains = true;
        for (const auto& v : region.v.vertices)
            contains = contains && bound.evaluate(v).satisfied;
        entry["contains_region"] = contains;
        if (k <= 3)
        {
            HPolytope p = bound.polytope();
            entry["polytope"] = report::to_json(p);
            if (is_bounded(p))
            {
                VPolytope v = enumerate_vertices(p);
                entry["vertices"] = vertices_json(v.vertices);
                entry["volume"] = report::to_json(volume(p, v).value);
                if (k == 2)
                    layers.push_back({bound.name, v.vertices, kPalette[colour++ % std::size(kPalette)], ""});
            }
            else
            {
                entry["vertices"] = nullptr;
            }
        }
        list.push_back(std::move(entry));
    }
    json skipped = json::array();
    for (const auto& [name, reason] : set_result.skipped)
        skipped.push_back({{"name", name}, {"reason", reason}});

    if (!svg_path.empty())
        write(report::svg_plot(layers, "Outer bounds"), svg_path, out);
    return {{"region_vertices", vertices_json(region.v.vertices)},
            {"region_volume", report::to_json(volume(region.h, region.v).value)},
            {"bounds", list},
            {"skipped", skipped}};
}

// ----------------------------------------------------------------- volume

std::optional<Rational> closed_form(const CodeProfile& profile, std::string& formula)
{
    if (profile.is_replication)
    {
        formula = "replication";
        return closed_form_volume(VolumeFormula::Replication, profile.n, profile.s);
    }
    if (profile.is_mds && profile.k == 2 && profile.n >= 4)
    {
        formula = "mds2";
        return closed_form_volume(VolumeFormula::Mds2, profile.n);
    }
    if (profile.is_mds && profile.k == 3 && profile.n >= 6)
    {
        formula = "mds3";
        return closed_form_volume(VolumeFormula::Mds3, profile.n);
    }
    return std::nullopt;
}

json volume_cmd(const Input& in, const std::string& method, bool verify, bool& agreed)
{
    RecoverySystem minimal = minimal_recovery_system(in.g);
    CodeProfile profile = code_profile(in.g, minimal);
    std::string formula;
    std::optional<Rational> closed = closed_form(profile, formula);
    auto triangulate = [&] {
        Region r = region_polytope(minimal, 1);
        return volume(r.h, r.v).value;
    };

    json result = {{"method", method}};
    agreed = true;
    if (method == "closed-form")
    {
        if (!closed)
            throw Error(ErrorKind::RegimeViolation, kModule,
                        "no closed form applies (needs an MDS matrix with k in {2,3} or a replication matrix)");
        result["path"] = "closed-form";
        result["formula"] = formula;
        result["volume"] = report::to_json(*closed);
    }
    else if (method == "triangulate" || !closed)
    {
        result["path"] = "triangulate";
        result["volume"] = report::to_json(triangulate());
    }
    else
    {
        result["path"] = "closed-form";
        result["formula"] = formula;
        result["volume"] = report::to_json(*closed);
        if (verify)
        {
            Rational t = triangulate();
            agreed = t == *closed;
            result["triangulated"] = report::to_json(t);
            result["agree"] = agreed;
        }
    }
    return result;
}

int exit_code(ErrorKind kind)
{
    if (kind == ErrorKind::ParseError)
        return kParse;
    if (is_guard(kind))
        return kGuard;
    return kValidation;
}

}   // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact service rate regions of coded distributed storage", "srr"};
    app.set_version_flag("--version", std::string(report::kToolName) + " " + report::kToolVersion);
    app.require_subcommand(1);

    std::string file, output, mu = "1", lambda, format = "json", method = "hull", set = "all", svg;
    std::string volume_method = "auto";
    std::vector<std::string> b_texts;
    bool r2 = false, integerize = false, verify = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", file, "Matrix file")->required();
        sub->add_option("-o,--output", output, "Write the report here instead of stdout");
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "Code profile, minimal recovery sets and region parameters");
    add_common(analyze_cmd);
    analyze_cmd->add_flag("--r2", r2, "Also report the maximum of the sum of squared rates");

    auto* member_cmd = app.add_subcommand("member", "Membership test with an exact allocation certificate");
    add_common(member_cmd);
    member_cmd->add_option("--lambda", lambda, "Demand vector, e.g. 3/2,3/2,1/2")->required();
    member_cmd->add_option("--mu", mu, "Server capacity");
    member_cmd->add_flag("--integerize", integerize, "Scale the certificate to an integer allocation");

    auto* region_cmd = app.add_subcommand("region", "H- and V-representation of the service rate region");
    add_common(region_cmd);
    region_cmd->add_option("--format", format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
    region_cmd->add_option("--method", method, "Projection: hull or fm")->check(CLI::IsMember({"hull", "fm"}));
    region_cmd->add_option("--mu", mu, "Server capacity");

    auto* bounds_cmd = app.add_subcommand("bounds", "Outer bounds with containment verdicts");
    add_common(bounds_cmd);
    bounds_cmd->add_option("--set", set, "all, or a comma-separated list of bound names");
    bounds_cmd->add_option("--b", b_texts, "Extra clipped-sum weight vector (repeatable)");
    bounds_cmd->add_option("--svg", svg, "Write a layered SVG plot (k = 2)");

    auto* volume_sub = app.add_subcommand("volume", "Exact region volume");
    add_common(volume_sub);
    volume_sub->add_option("--method", volume_method, "auto, closed-form or triangulate")
        ->check(CLI::IsMember({"auto", "closed-form", "triangulate"}));
    volume_sub->add_flag("--verify", verify, "With --method auto, also triangulate and compare");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kValidation;
    }

    const auto start = std::chrono::steady_clock::now();
    auto wrap = [&](const std::string& command, const std::string& digest) {
        return [&, command, digest](json result) {
            const double ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            return report::envelope(command, digest, std::move(result), ms);
        };
    };

    try
    {
        if (analyze_cmd->parsed())
        {
            Input in = load(file);
            write(dump(wrap("analyze", in.digest)(analyze(in, r2))), output, out);
        }
        else if (member_cmd->parsed())
        {
            Input in = load(file);
            write(dump(wrap("member", in.digest)(member(in, lambda, mu, integerize))), output, out);
        }
        else if (region_cmd->parsed())
        {
            Input in = load(file);
            write(region(in, format, method, mu, wrap("region", in.digest)), output, out);
        }
        else if (bounds_cmd->parsed())
        {
            Input in = load(file);
            write(dump(wrap("bounds", in.digest)(bounds(in, set, b_texts, svg, out))), output, out);
        }
        else if (volume_sub->parsed())
        {
            Input in = load(file);
            bool agreed = true;
            json result = volume_cmd(in, volume_method, verify, agreed);
            write(dump(wrap("volume", in.digest)(std::move(result))), output, out);
            if (!agreed)
            {
                err << "srr: error: volume: closed form and triangulation disagree\n";
                return kFailure;
            }
        }
    }
    catch (const Error& e)
    {
        err << "srr: error: " << e.what() << "\n";
        return exit_code(e.kind());
    }
    catch (const std::exception& e)
    {
        err << "srr: error: " << e.what() << "\n";
        return kFailure;
    }
    return kSuccess;
}

}   // namespace srr::cli
