#include <functional>
#include <random>
#include <tuple>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "srr/code_analysis.hpp"
#include "srr/error.hpp"

using namespace srr;

namespace {

ErrorKind kind_of(const std::function<void()>& fn)
{
    try
    {
        fn();
    }
    catch (const Error& e)
    {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::ParseError;
}

}   // namespace

TEST_CASE("minimum distance")
{
    CHECK(min_distance(fixtures::parity3()) == 2);
    CHECK(min_distance(fixtures::simplex()) == 4);
    CHECK(min_distance(fixtures::g1()) == 1);
    for (const auto& [name, g] : fixtures::all())
    {
        CAPTURE(name);
        CHECK(min_distance(g) == oracles::min_weight_by_enumeration(g.matrix()));
        CHECK(min_distance(g) >= 1);
        CHECK(min_distance(g) <= g.n() - g.k() + 1);
    }
}

TEST_CASE("dual matrix")
{
    auto f3 = FieldContext::make(3);
    // [I | P] gives [-P^T | I]
    GeneratorMatrix g(f3, 2, 4, {1, 0, 1, 1, 0, 1, 1, 2});
    auto h = dual_matrix(g);
    CHECK(h == FFMatrix(f3, 2, 4, {2, 2, 1, 0, 2, 1, 0, 1}));
    for (const auto& [name, fixture] : fixtures::all())
    {
        CAPTURE(name);
        auto dual = dual_matrix(fixture);
        CHECK(dual.rows() == fixture.n() - fixture.k());
        CHECK(rank(dual) == fixture.n() - fixture.k());
        CHECK((fixture.matrix() * dual.transpose()).is_zero());
    }
}

TEST_CASE("dual distance")
{
    CHECK(dual_min_distance(fixtures::uneven()) == 2);
    CHECK(dual_min_distance(fixtures::parity3()) == 4);
    CHECK(dual_min_distance(fixtures::g1()) == 2);
    CHECK(dual_min_distance(fixtures::g2()) == 3);
    for (const auto& [name, g] : fixtures::all())
    {
        CAPTURE(name);
        CHECK(dual_min_distance(g) == oracles::min_weight_by_enumeration(dual_matrix(g)));
    }
}

TEST_CASE("MDS classification")
{
    CHECK(is_mds(fixtures::pentagon()));
    CHECK_FALSE(is_mds(fixtures::g1()));
    CHECK(is_mds(fixtures::parity3()));
    for (const auto& [name, g] : fixtures::all())
    {
        CAPTURE(name);
        CHECK(is_mds(g) == (min_distance(g) == g.n() - g.k() + 1));
    }
}

TEST_CASE("systematic profile")
{
    auto uneven = systematic_profile(fixtures::uneven());
    CHECK(uneven.s == std::vector<int>{0, 1, 0});
    CHECK_FALSE(uneven.is_systematic);
    auto g1 = systematic_profile(fixtures::g1());
    CHECK(g1.s == std::vector<int>{3, 1});
    CHECK(g1.is_replication);
    auto g2 = systematic_profile(fixtures::g2());
    CHECK(g2.s == std::vector<int>{1, 1, 1});
    CHECK(g2.is_systematic);
    CHECK_FALSE(g2.is_replication);
    std::mt19937 rng(1);
    auto rep = systematic_profile(fixtures::replication({2, 3, 1}, rng));
    CHECK(rep.is_replication);
    CHECK(rep.s == std::vector<int>{2, 3, 1});
}

TEST_CASE("availability")
{
    auto simplex = fixtures::simplex();
    CHECK(availability(simplex, minimal_recovery_system(simplex)) == 3);
    auto parity3 = fixtures::parity3();
    CHECK(availability(parity3, minimal_recovery_system(parity3)) == 1);
    auto g2 = fixtures::g2();
    // {1},{5,6},{2,3,4} / {2},{3,5},{4,6} / {3},{2,5},{1,4,6}
    CHECK(availability(g2, minimal_recovery_system(g2)) == 2);
    auto uneven = fixtures::uneven();
    CHECK(kind_of([&] { availability(uneven, minimal_recovery_system(uneven)); }) == ErrorKind::NotSystematic);
    for (const auto& [name, g] : fixtures::all())
    {
        if (!systematic_profile(g).is_systematic)
            continue;
        CAPTURE(name);
        CHECK(min_distance(g) >= availability(g, minimal_recovery_system(g)) + 1);
    }
}

TEST_CASE("set packing")
{
    CHECK(max_disjoint_sets({}) == 0);
    CHECK(max_disjoint_sets({{1, 2}, {2, 3}, {3, 4}}) == 2);
    CHECK(max_disjoint_sets({{1}, {1, 2}, {2, 3}, {3}}) == 2);
    CHECK(max_disjoint_sets({{1}, {2, 3}, {3}, {2}}) == 3);
}

TEST_CASE("projective hyperplanes")
{
    auto g1 = pg_hyperplane_stats(fixtures::g1());
    CHECK(g1.hyperplanes.size() == 3);
    CHECK(g1.max_points == 3);
    auto parity = pg_hyperplane_stats(fixtures::parity3());
    CHECK(parity.hyperplanes.size() == 7);
    CHECK(parity.max_points == 2);
    CHECK(pg_hyperplane_stats(fixtures::pentagon()).max_points == 1);
    for (const auto& [name, g] : fixtures::all())
    {
        CAPTURE(name);
        auto stats = pg_hyperplane_stats(g);
        CHECK(min_distance(g) == g.n() - stats.max_points);
        for (const auto& h : stats.hyperplanes)
        {
            std::size_t lead = 0;
            while (h.normal[lead] == 0)
                ++lead;
            CHECK(h.normal[lead] == 1);
        }
    }
}

TEST_CASE("Vandermonde constructor")
{
    auto g = rs_matrix(2, 3, 5, 2);
    CHECK(g.matrix() == FFMatrix(FieldContext::make(5), 2, 3, {1, 1, 1, 1, 2, 4}));
    auto g4 = rs_matrix(2, 4, 5, 2);
    CHECK(is_mds(g4));
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b)
            CHECK(g4.server(a) != g4.server(b));
    CHECK(kind_of([] { rs_matrix(2, 5, 5, 2); }) == ErrorKind::FieldTooSmall);
    CHECK(kind_of([] { rs_matrix(2, 4, 5, 4); }) == ErrorKind::NotPrimitive);
    CHECK(kind_of([] { rs_matrix(3, 3, 7, 3); }) == ErrorKind::ValidationError);
    for (auto [a, b, q, alpha] : {std::tuple{3, 6, 7u, 3u}, std::tuple{3, 10, 11u, 2u}, std::tuple{4, 7, 11u, 2u}})
    {
        auto rs = rs_matrix(a, b, q, alpha);
        CHECK(is_mds(rs));
        CHECK(min_distance(rs) == b - a + 1);
    }
    auto f4 = FieldContext::make(2, 2, {1, 1, 1});
    CHECK(is_mds(rs_matrix(2, 3, f4, 2)));
}

TEST_CASE("code profile bundles the invariants")
{
    for (const auto& [name, g] : fixtures::all())
    {
        CAPTURE(name);
        auto profile = code_profile(g, minimal_recovery_system(g));
        CHECK(profile.d == profile.n - profile.max_hyperplane_points);
        int total = 0;
        for (int s : profile.s)
            total += s;
        CHECK(total <= profile.n);
        CHECK(profile.is_replication == (total == profile.n));
        CHECK(profile.availability_t.has_value() == profile.is_systematic);
    }
}
