#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "support.hpp"
#include "srr/code_analysis.hpp"
#include "srr/srr_core.hpp"

using namespace srr;
using support::q;
using support::vec;

namespace {

RecoverySystem sys(const GeneratorMatrix& g) { return minimal_recovery_system(g); }

std::vector<VectorQ> sorted(std::vector<VectorQ> v)
{
    std::sort(v.begin(), v.end(), lex_less);
    return v;
}

bool has_vertex(const Region& r, const VectorQ& x)
{
    return std::find(r.v.vertices.begin(), r.v.vertices.end(), x) != r.v.vertices.end();
}

bool inside(const RecoverySystem& s, const VectorQ& x, const Rational& mu = 1)
{
    return srr_membership(s, mu, x).inside;
}

/// Small fixtures whose regions are quick to build.
std::vector<fixtures::Named> region_fixtures()
{
    return {{"g1", fixtures::g1()},
            {"g2", fixtures::g2()},
            {"pentagon", fixtures::pentagon()},
            {"hypercube_gap", fixtures::hypercube_gap()},
            {"parity3", fixtures::parity3()},
            {"uneven", fixtures::uneven()},
            {"nonsystematic_f7", fixtures::nonsystematic_f7()}};
}

}   // namespace

TEST_CASE("allocation index and polytope")
{
    auto s = sys(fixtures::pentagon());
    auto index = AllocationIndex::of(s);
    CHECK(index.size() == 8);
    CHECK(index.block_start == std::vector<int>{0, 4, 8});
    CHECK(index.find(1, {2, 3}) == 1);
    CHECK(index.find(2, {1, 4}) == 6);
    CHECK(index.find(2, {1, 2}) == -1);
    auto p = allocation_polytope(s, 1);
    CHECK(p.num_constraints() == 4 + 8);
    CHECK(p.dim() == 8);
    auto f = summation_map(index);
    CHECK(f.rows() == 2);
    CHECK(f.row(0).sum() == 4);
}

TEST_CASE("membership with exact certificates")
{
    auto g2 = sys(fixtures::g2());
    auto result = srr_membership(g2, 1, vec({q("3/2"), q("3/2"), q("1/2")}));
    REQUIRE(result.inside);
    REQUIRE(result.certificate);
    CHECK(result.certificate->feasible());
    CHECK(result.certificate->rates() == vec({q("3/2"), q("3/2"), q("1/2")}));

    CHECK(inside(g2, vec({0, 0, 0})));
    CHECK_FALSE(inside(g2, vec({10, 0, 0})));
    CHECK_FALSE(srr_membership(g2, 1, vec({10, 0, 0})).certificate);
    CHECK(support::error_kind([&] { srr_membership(g2, 1, vec({1, 1})); }) == ErrorKind::LengthMismatch);
    CHECK(support::error_kind([&] { srr_membership(g2, 1, vec({-1, 0, 0})); }) == ErrorKind::ValidationError);
}

TEST_CASE("integerizing a certificate")
{
    auto pentagon = sys(fixtures::pentagon());
    auto result = srr_membership(pentagon, 1, vec({q("4/3"), q("2/3")}));
    REQUIRE(result.certificate);
    auto alpha = to_integer_allocation(*result.certificate);
    CHECK(alpha.feasible());
    CHECK(3 % alpha.s == 0);
    std::vector<Integer> rates = alpha.rates();
    CHECK(rates[0] * 3 == alpha.s * 4);
    CHECK(rates[1] * 3 == alpha.s * 2);

    IntegerAllocation listed{AllocationIndex::of(pentagon), {2, 1, 0, 1, 1, 0, 1, 0}, 3};
    CHECK(listed.loads() == std::vector<Integer>{3, 2, 2, 2});
    CHECK(listed.rates() == std::vector<Integer>{4, 2});
    CHECK(listed.feasible());

    FractionalAllocation whole{AllocationIndex::of(pentagon), VectorQ::Zero(8), 1};
    whole.values(0) = 2;
    auto same = to_integer_allocation(whole);
    CHECK(same.s == 1);
    CHECK(same.counts[0] == 2);
}

TEST_CASE("one-shot region")
{
    auto pentagon = sys(fixtures::pentagon());
    auto three = one_shot_region(pentagon, 3);
    CHECK(std::binary_search(three.begin(), three.end(), std::vector<int>{4, 2}));
    auto one = one_shot_region(pentagon, 1);
    CHECK(std::binary_search(one.begin(), one.end(), std::vector<int>{0, 0}));
    CHECK(std::binary_search(one.begin(), one.end(), std::vector<int>{2, 0}));
    CHECK(std::binary_search(one.begin(), one.end(), std::vector<int>{1, 0}));
    CHECK(std::binary_search(one.begin(), one.end(), std::vector<int>{0, 1}));
}

TEST_CASE("one-shot region equals the scaled grid points of the region")
{
    auto pentagon = sys(fixtures::pentagon());
    for (int s = 1; s <= 3; ++s)
    {
        auto shot = one_shot_region(pentagon, s);
        std::vector<std::vector<int>> grid;
        for (int a = 0; a <= 3 * s; ++a)
            for (int b = 0; b <= 3 * s; ++b)
                if (inside(pentagon, vec({Rational(a, s), Rational(b, s)})))
                    grid.push_back({a, b});
        CHECK(shot == grid);
    }
}

TEST_CASE("one-shot soundness on several systems")
{
    for (auto [name, g] : {fixtures::Named{"g1", fixtures::g1()}, fixtures::Named{"parity3", fixtures::parity3()},
                          fixtures::Named{"hypercube_gap", fixtures::hypercube_gap()}})
    {
        CAPTURE(name);
        auto s = sys(g);
        for (int uses = 1; uses <= 2; ++uses)
            for (const auto& rate : one_shot_region(s, uses))
            {
                VectorQ x(s.k);
                for (int i = 0; i < s.k; ++i)
                    x(i) = Rational(rate[i], uses);
                CHECK(inside(s, x));
            }
    }
}

TEST_CASE("region examples")
{
    auto g1 = region_polytope(sys(fixtures::g1()), 1);
    CHECK(g1.v.vertices == sorted({vec({0, 0}), vec({0, 1}), vec({3, 0}), vec({3, 1})}));

    auto pentagon = region_polytope(sys(fixtures::pentagon()), 1);
    CHECK(pentagon.v.vertices
          == sorted({vec({0, 0}), vec({q("5/2"), 0}), vec({2, 1}), vec({1, 2}), vec({0, q("5/2")})}));

    auto gap = region_polytope(sys(fixtures::hypercube_gap()), 1);
    CHECK(gap.h.contains(vec({2, 1, 0})));
    CHECK(gap.h.contains(vec({1, 0, 1})));

    auto g2 = region_polytope(sys(fixtures::g2()), 1);
    CHECK(has_vertex(g2, vec({2, q("3/2"), q("1/2")})));
    CHECK(has_vertex(g2, vec({1, 1, 2})));
    CHECK(has_vertex(g2, vec({1, 3, 0})));
}

TEST_CASE("both projection routes give the same region")
{
    RegionOptions fm;
    fm.method = ProjectionMethod::FourierMotzkin;
    auto cases = region_fixtures();
    cases.push_back({"mds_2_5", fixtures::systematic_mds(2, 5)});
    cases.push_back({"mds_3_6", fixtures::systematic_mds(3, 6)});
    for (const auto& [name, g] : cases)
    {
        CAPTURE(name);
        auto s = sys(g);
        auto hull = region_polytope(s, 1);
        auto elim = region_polytope(s, 1, fm);
        CHECK(hull.v.vertices == elim.v.vertices);
        CHECK(hull.h.num_constraints() == elim.h.num_constraints());
    }
}

TEST_CASE("projection consistency")
{
    const Rational eps(1, 1000);
    for (const auto& [name, g] : region_fixtures())
    {
        CAPTURE(name);
        auto s = sys(g);
        auto region = region_polytope(s, 1);
        for (const auto& v : region.v.vertices)
        {
            CHECK(inside(s, v));
            for (int r : region.h.tight(v))
                for (int i = 0; i < s.k; ++i)
                {
                    if (region.h.A(r, i) <= 0)
                        continue;
                    VectorQ out = v;
                    out(i) += eps;
                    CHECK_FALSE(inside(s, out));
                }
        }
    }
}

TEST_CASE("rational certificates at random interior points")
{
    std::mt19937 rng(17);
    for (const auto& [name, g] : region_fixtures())
    {
        CAPTURE(name);
        auto s = sys(g);
        auto region = region_polytope(s, 1);
        for (int trial = 0; trial < 20; ++trial)
        {
            VectorQ x = support::random_convex_combination(region.v.vertices, rng);
            auto result = srr_membership(s, 1, x);
            REQUIRE(result.certificate);
            CHECK(result.certificate->rates() == x);
            auto alpha = to_integer_allocation(*result.certificate);
            CHECK(alpha.feasible());
        }
    }
}

TEST_CASE("down-monotonicity")
{
    for (const auto& [name, g] : region_fixtures())
    {
        CAPTURE(name);
        auto s = sys(g);
        auto region = region_polytope(s, 1);
        for (const auto& v : region.v.vertices)
            for (int i = 0; i < s.k; ++i)
                for (int step = 0; step < 4; ++step)
                {
                    VectorQ w = v;
                    w(i) = v(i) * Rational(step, 4);
                    CHECK(region.h.contains(w));
                    CHECK(inside(s, w));
                }
    }
}

TEST_CASE("capacity scaling")
{
    for (const auto& [name, g] : region_fixtures())
    {
        CAPTURE(name);
        auto s = sys(g);
        auto unit = region_polytope(s, 1);
        for (const Rational& mu : {q("1/2"), q("3"), q("7/3")})
        {
            auto scaled = region_polytope(s, mu);
            std::vector<VectorQ> expected;
            for (const auto& v : unit.v.vertices)
                expected.push_back(v * mu);
            CHECK(scaled.v.vertices == sorted(expected));
        }
    }
    CHECK(support::error_kind([] { region_polytope(sys(fixtures::g1()), 0); }) == ErrorKind::ValidationError);
}

TEST_CASE("dropping recovery sets never enlarges the region")
{
    std::mt19937 rng(23);
    for (const auto& [name, g] : region_fixtures())
    {
        CAPTURE(name);
        auto full = sys(g);
        auto full_region = region_polytope(full, 1);
        for (int trial = 0; trial < 3; ++trial)
        {
            std::vector<std::vector<RecoverySet>> kept(full.k);
            for (int i = 1; i <= full.k; ++i)
            {
                const auto& sets = full.of(i);
                std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
                const std::size_t always = pick(rng);
                for (std::size_t j = 0; j < sets.size(); ++j)
                    if (j == always || rng() % 2 == 0)
                        kept[i - 1].push_back(sets[j]);
            }
            auto sub = make_recovery_system(g, kept);
            for (const auto& v : region_polytope(sub, 1).v.vertices)
                CHECK(full_region.h.contains(v));
        }
    }
}

TEST_CASE("region parameters")
{
    auto pentagon = sys(fixtures::pentagon());
    auto p = region_params(pentagon, {2});
    CHECK(p.max_sum == 3);
    REQUIRE(p.r_max_sum.size() == 1);
    CHECK(p.r_max_sum[0] == std::pair<int, Rational>{2, q("25/4")});
    CHECK(p.axis_maxima == vec({q("5/2"), q("5/2")}));
    CHECK(p.max_axis == q("5/2"));
    CHECK(p.simplex == q("5/2"));

    auto gap = region_params(sys(fixtures::hypercube_gap()));
    CHECK(gap.hypercube == q("1/2"));
    CHECK(gap.max_sum == 3);
    CHECK(gap.simplex == 1);

    CHECK(region_params(sys(fixtures::parity3())).simplex == 2);
}

TEST_CASE("parameter coherence")
{
    for (const auto& [name, g] : region_fixtures())
    {
        CAPTURE(name);
        auto s = sys(g);
        auto p = region_params(s);
        const Rational bound = min(p.max_sum / s.k, p.simplex);
        CHECK(p.hypercube <= bound);
        CHECK(p.simplex <= p.max_axis);
        CHECK(p.max_axis <= p.max_sum);
        const int d = min_distance(g);
        CHECK(boost::multiprecision::numerator(p.simplex)
                  <= Integer(d) * boost::multiprecision::denominator(p.simplex));
    }
    auto g1 = region_params(sys(fixtures::g1()));
    CHECK(g1.hypercube == min(g1.max_sum / 2, g1.simplex));
    auto gap = region_params(sys(fixtures::hypercube_gap()));
    CHECK(gap.hypercube < min(gap.max_sum / 3, gap.simplex));
}

TEST_CASE("availability points lie in the region")
{
    for (const auto& [name, g] : fixtures::all())
    {
        auto profile = systematic_profile(g);
        if (!profile.is_systematic)
            continue;
        CAPTURE(name);
        auto s = sys(g);
        const int t = availability(g, s);
        for (int i = 0; i < s.k; ++i)
        {
            VectorQ e = VectorQ::Zero(s.k);
            e(i) = t + 1;
            CHECK(inside(s, e));
        }
    }
}

TEST_CASE("optimizing over the region")
{
    auto pentagon = sys(fixtures::pentagon());
    auto best = optimize_rates(pentagon, 1, vec({1, 0}));
    REQUIRE(best.status == LPStatus::Optimal);
    CHECK(best.value == q("5/2"));
    CHECK(best.point == vec({q("5/2"), 0}));
    CHECK(optimize_rates(pentagon, 2, vec({1, 1})).value == 6);
}

TEST_CASE("MDS region membership")
{
    CHECK(mds_region_membership(2, 4, vec({1, 2})));
    CHECK(mds_region_membership(3, 6, vec({0, 0, 0})));
    CHECK_FALSE(mds_region_membership(2, 4, vec({2, 2})));
    CHECK(support::error_kind([] { mds_region_membership(3, 5, vec({0, 0, 0})); }) == ErrorKind::RegimeViolation);

    std::mt19937 rng(29);
    std::uniform_int_distribution<int> num(0, 16);
    for (auto [k, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 6}})
    {
        auto s = sys(fixtures::systematic_mds(k, n));
        auto region = region_polytope(s, 1);
        for (int trial = 0; trial < 60; ++trial)
        {
            VectorQ x(k);
            for (int i = 0; i < k; ++i)
                x(i) = Rational(num(rng), 4);
            CHECK(mds_region_membership(k, n, x) == region.h.contains(x));
        }
    }
}

TEST_CASE("closed-form volumes")
{
    CHECK(closed_form_volume(VolumeFormula::Mds2, 4) == 4);
    CHECK(closed_form_volume(VolumeFormula::Mds3, 6) == q("65/9"));
    CHECK(closed_form_volume(VolumeFormula::Replication, 0, {3, 1}) == 3);
    CHECK(support::error_kind([] { closed_form_volume(VolumeFormula::Mds2, 3); }) == ErrorKind::RegimeViolation);
    CHECK(support::error_kind([] { closed_form_volume(VolumeFormula::Mds3, 5); }) == ErrorKind::RegimeViolation);

    for (int n = 4; n <= 6; ++n)
    {
        auto region = region_polytope(sys(fixtures::systematic_mds(2, n)), 1);
        CHECK(volume(region.h, region.v).value == closed_form_volume(VolumeFormula::Mds2, n));
    }
    auto mds3 = region_polytope(sys(fixtures::systematic_mds(3, 6)), 1);
    CHECK(volume(mds3.h, mds3.v).value == q("65/9"));

    std::mt19937 rng(31);
    for (const auto& s : {std::vector<int>{2, 1}, std::vector<int>{1, 2, 2}, std::vector<int>{3, 1, 1}})
    {
        auto g = fixtures::replication(s, rng);
        auto region = region_polytope(sys(g), 1);
        CHECK(volume(region.h, region.v).value == closed_form_volume(VolumeFormula::Replication, 0, s));
    }
}

TEST_CASE("MDS simplex lower bound and max-sum")
{
    for (auto [k, n] : {std::pair{2, 4}, std::pair{2, 6}, std::pair{3, 6}})
    {
        CAPTURE(n);
        auto s = sys(fixtures::systematic_mds(k, n));
        for (int i = 0; i < k; ++i)
        {
            VectorQ e = VectorQ::Zero(k);
            e(i) = Rational(n, k);
            CHECK(inside(s, e));
        }
        auto region = region_polytope(s, 1);
        Rational factorial = 1;
        for (int j = 2; j <= k; ++j)
            factorial *= j;
        Rational corner = 1;
        for (int j = 0; j < k; ++j)
            corner *= Rational(n, k);
        CHECK(volume(region.h, region.v).value >= corner / factorial);
        CHECK(region_params(s).max_sum == Rational(k) + Rational(n - k, k));
    }
    CHECK(region_params(sys(fixtures::nonsystematic_f7())).max_sum == 2);
}

TEST_CASE("all-subsets systems and the uniform allocation")
{
    auto system = all_subsets_system(2, 4);
    CHECK(system.k == 2);
    CHECK(system.of(1).size() == 6);

    auto a = rs_uniform_allocation(2, 4, 5, 2, vec({2, 0}));
    CHECK(a.feasible());
    for (int j = 0; j < 6; ++j)
        CHECK(a.values(j) == q("1/3"));
    CHECK(a.loads() == VectorQ::Ones(4));

    auto zero = rs_uniform_allocation(2, 4, 5, 2, vec({0, 0}));
    CHECK(zero.values.isZero());

    auto b = rs_uniform_allocation(3, 6, 7, 3, vec({1, q("1/2"), q("1/4")}));
    CHECK(b.feasible());
    for (int v = 0; v < 6; ++v)
        CHECK(b.loads()(v) == Rational(3, 6) * q("7/4"));
    CHECK(inside(all_subsets_system(3, 6), b.rates()));

    CHECK(support::error_kind([] { rs_uniform_allocation(2, 4, 5, 2, vec({2, 1})); }) == ErrorKind::DemandTooLarge);
}
