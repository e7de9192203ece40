#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "srr/report.hpp"
#include "support.hpp"

using namespace srr;
using report::json;
using support::q;
using support::vec;

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name)
{
    return std::string(SRR_TEST_DATA) + "/" + name;
}

json result_of(const Run& r)
{
    REQUIRE(r.code == 0);
    return json::parse(r.out)["result"];
}

std::vector<VectorQ> points(const json& j)
{
    std::vector<VectorQ> out;
    for (const auto& x : j)
        out.push_back(report::vector_from_json(x));
    return out;
}

}   // namespace

TEST_CASE("cli: analyze reports profile, recovery lists and parameters")
{
    json r = result_of(run({"analyze", data("pentagon.txt"), "--r2"}));
    CHECK(r["profile"]["is_mds"] == true);
    CHECK(r["profile"]["d"] == 3);
    CHECK(r["params"]["max_sum"] == "3");
    CHECK(r["params"]["r_max_sum"]["2"] == "25/4");
    CHECK(r["params"]["simplex"] == "5/2");
    CHECK(r["params"]["axis_maxima"] == json({"5/2", "5/2"}));

    json g2 = result_of(run({"analyze", data("g2.txt")}));
    const auto& objects = g2["recovery"]["objects"];
    REQUIRE(objects.size() == 3);
    CHECK(objects[0]["sets"][0] == json({1}));
    CHECK(objects[0]["sets"].size() == 7);
    CHECK(objects[1]["sets"].size() == 6);
    CHECK(objects[2]["sets"].size() == 7);
    CHECK(g2["recovery"]["origin"] == "minimal");
}

TEST_CASE("cli: member with certificate and integerization")
{
    json r = result_of(run({"member", data("g2.txt"), "--lambda", "3/2,3/2,1/2"}));
    CHECK(r["membership"]["inside"] == true);
    CHECK(r["membership"]["certificate"]["rates"] == json({"3/2", "3/2", "1/2"}));

    json p = result_of(run({"member", data("pentagon.txt"), "--lambda", "4/3,2/3", "--integerize"}));
    const auto& ia = p["integer_allocation"];
    CHECK(ia["feasible"] == true);
    const Rational s = report::rational_from_json(ia["s"]);
    CHECK(s == 3);
    for (const auto& load : ia["loads"])
        CHECK(report::rational_from_json(load) <= s);
    CHECK(ia["rates"] == json({"4", "2"}));

    json outside = result_of(run({"member", data("pentagon.txt"), "--lambda", "3,1/10"}));
    CHECK(outside["membership"]["inside"] == false);
    CHECK(outside["membership"]["certificate"].is_null());

    json scaled = result_of(run({"member", data("pentagon.txt"), "--lambda", "3,1/10", "--mu", "2"}));
    CHECK(scaled["membership"]["inside"] == true);

    auto wrong = run({"member", data("pentagon.txt"), "--lambda", "1,1,1"});
    CHECK(wrong.code == cli::kValidation);
    CHECK(wrong.err.find("LengthMismatch") != std::string::npos);
}

TEST_CASE("cli: region formats")
{
    json g1 = result_of(run({"region", data("g1.txt")}));
    CHECK(points(g1["region"]["v"]["vertices"])
          == std::vector<VectorQ>{vec({0, 0}), vec({0, 1}), vec({3, 0}), vec({3, 1})});

    auto csv = run({"region", data("pentagon.txt"), "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "lambda_1,lambda_2\n0,0\n0,5/2\n1,2\n2,1\n5/2,0\n");

    auto svg = run({"region", data("pentagon.txt"), "--format", "svg"});
    CHECK(svg.code == 0);
    CHECK(svg.out.rfind("<svg", 0) == 0);

    json three = result_of(run({"region", data("g2.txt"), "--format", "svg"}));
    CHECK(three["region"]["v"]["dim"] == 3);
    CHECK(three.contains("note"));

    auto four = run({"region", data("k4.txt"), "--format", "svg"});
    CHECK(four.code == cli::kValidation);
    CHECK(four.err.find("UnsupportedDimension") != std::string::npos);
    CHECK(four.err.find("cli") != std::string::npos);
}

TEST_CASE("cli: region JSON re-imports to the same vertex set")
{
    for (const char* file : {"g1.txt", "g2.txt", "pentagon.txt", "gf4.txt"})
    {
        CAPTURE(file);
        json r = result_of(run({"region", data(file)}));
        VPolytope v = report::vpolytope_from_json(r["region"]["v"]);
        HPolytope h = report::hpolytope_from_json(r["region"]["h"]);
        CHECK(enumerate_vertices(h).vertices == v.vertices);
        json fm = result_of(run({"region", data(file), "--method", "fm"}));
        CHECK(report::vpolytope_from_json(fm["region"]["v"]).vertices == v.vertices);
    }
}

TEST_CASE("cli: payloads are byte-identical apart from timing")
{
    auto strip = [](const std::string& text) {
        json j = json::parse(text);
        j.erase("timing");
        return j.dump();
    };
    for (std::vector<std::string> args : {std::vector<std::string>{"analyze", data("g2.txt"), "--r2"},
                                          {"bounds", data("pentagon.txt")},
                                          {"region", data("mds_3_6.txt")},
                                          {"volume", data("mds_3_6.txt"), "--verify"}})
    {
        auto a = run(args);
        auto b = run(args);
        REQUIRE(a.code == 0);
        CHECK(strip(a.out) == strip(b.out));
        CHECK(json::parse(a.out)["input_digest"] == json::parse(b.out)["input_digest"]);
    }
    CHECK(run({"region", data("pentagon.txt"), "--format", "svg"}).out
          == run({"region", data("pentagon.txt"), "--format", "svg"}).out);
}

TEST_CASE("cli: bounds")
{
    json r = result_of(run({"bounds", data("g2.txt"), "--set", "dual,sysnode"}));
    REQUIRE(r["bounds"].size() == 2);
    for (const auto& b : r["bounds"])
    {
        CHECK(b["contains_region"] == true);
        CHECK(b["vertices"].is_array());
    }

    json wide = result_of(run({"bounds", data("wide.txt"), "--set", "clip", "--b", "3,2", "--b", "3,5"}));
    std::vector<std::string> names;
    for (const auto& b : wide["bounds"])
        names.push_back(b["name"]);
    CHECK(names == std::vector<std::string>{"clip(1,0)", "clip(0,1)", "clip(1,1)", "clip(3,2)", "clip(3,5)"});

    json g1 = result_of(run({"bounds", data("g1.txt")}));
    for (const auto& b : g1["bounds"])
        CHECK(b["contains_region"] == true);

    json nonsys = result_of(run({"bounds", data("gf4.txt")}));
    CHECK(nonsys["skipped"].is_array());

    auto unknown = run({"bounds", data("g1.txt"), "--set", "dual,nope"});
    CHECK(unknown.code == cli::kValidation);
    for (const char* name : {"dual", "sysnode", "hybrid", "uniform", "hyperplane", "clip"})
        CHECK(unknown.err.find(name) != std::string::npos);

    const std::string svg_path = "cli_bounds_test.svg";
    CHECK(run({"bounds", data("wide.txt"), "--b", "3,2", "--svg", svg_path}).code == 0);
    std::ifstream svg(svg_path);
    std::stringstream contents;
    contents << svg.rdbuf();
    CHECK(contents.str().find("clip(3,2)") != std::string::npos);
    std::remove(svg_path.c_str());

    CHECK(run({"bounds", data("g2.txt"), "--svg", svg_path}).code == cli::kValidation);
}

TEST_CASE("cli: volume paths")
{
    json mds = result_of(run({"volume", data("pentagon.txt"), "--verify"}));
    CHECK(mds["volume"] == "4");
    CHECK(mds["path"] == "closed-form");
    CHECK(mds["agree"] == true);

    json rep = result_of(run({"volume", data("g1.txt")}));
    CHECK(rep["volume"] == "3");
    CHECK(rep["formula"] == "replication");

    json m36 = result_of(run({"volume", data("mds_3_6.txt"), "--method", "triangulate"}));
    CHECK(m36["volume"] == "65/9");
    CHECK(m36["path"] == "triangulate");

    json g2 = result_of(run({"volume", data("g2.txt")}));
    CHECK(g2["path"] == "triangulate");

    auto regime = run({"volume", data("g2.txt"), "--method", "closed-form"});
    CHECK(regime.code == cli::kValidation);
    CHECK(regime.err.find("RegimeViolation") != std::string::npos);
}

TEST_CASE("cli: exit codes")
{
    auto parse = run({"analyze", data("bad_header.txt")});
    CHECK(parse.code == cli::kParse);
    CHECK(parse.err.find("line 1") != std::string::npos);
    CHECK(parse.err.find("matrix_file") != std::string::npos);

    CHECK(run({"analyze", data("missing.txt")}).code == cli::kParse);
    CHECK(run({}).code == cli::kValidation);
    CHECK(run({"frobnicate"}).code == cli::kValidation);
    CHECK(run({"region", data("g1.txt"), "--format", "png"}).code == cli::kValidation);
    CHECK(run({"member", data("g1.txt"), "--lambda", "1,x"}).code == cli::kParse);
    CHECK(run({"member", data("g1.txt"), "--lambda", "1,1", "--mu", "0"}).code == cli::kValidation);
    CHECK(run({"--help"}).code == cli::kSuccess);

    // 2 x 21 replication matrix: recovery enumeration is beyond the guard.
    const std::string path = "cli_guard_test.txt";
    {
        std::ofstream f(path);
        f << "2 2 21\n";
        for (int r = 0; r < 2; ++r)
        {
            for (int c = 0; c < 21; ++c)
                f << (c % 2 == r ? 1 : 0) << (c == 20 ? "\n" : " ");
        }
    }
    auto guard = run({"analyze", path});
    std::remove(path.c_str());
    if (guard_scale() <= 1)
    {
        CHECK(guard.code == cli::kGuard);
        CHECK(guard.err.find("TooLarge") != std::string::npos);
        CHECK(guard.err.find("recovery") != std::string::npos);
    }
}
