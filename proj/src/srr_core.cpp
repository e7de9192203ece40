#include "srr/srr_core.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "srr/code_analysis.hpp"
#include "srr/error.hpp"

namespace srr {

namespace {

constexpr const char* kModule = "srr_core";
constexpr std::uint64_t kOneShotGuard = std::uint64_t{1} << 22;

void check_demand(const RecoverySystem& system, const DemandVector& lambda)
{
    if (lambda.size() != system.k)
        throw Error(ErrorKind::LengthMismatch, kModule,
                    "demand has " + std::to_string(lambda.size()) + " entries, expected " + std::to_string(system.k));
    for (Eigen::Index i = 0; i < lambda.size(); ++i)
        if (lambda(i) < 0)
            throw Error(ErrorKind::ValidationError, kModule, "demand entries must be nonnegative");
}

/// Allocation variables with capacity rows; rates are linear in them.
LinearProgram allocation_program(const AllocationIndex& index, const Rational& mu, int extra_vars = 0)
{
    LinearProgram lp(index.size() + extra_vars);
    lp.set_all_nonnegative();
    std::vector<std::vector<std::pair<int, Rational>>> server_terms(index.n);
    for (int j = 0; j < index.size(); ++j)
        for (int nu : index.entries[j].second)
            server_terms[nu - 1].emplace_back(j, Rational(1));
    for (int nu = 0; nu < index.n; ++nu)
        lp.add_constraint(server_terms[nu], Relation::LessEqual, mu);
    return lp;
}

Rational binomial(int n, int r)
{
    Rational out = 1;
    for (int i = 1; i <= r; ++i)
        out = out * (n - r + i) / i;
    return out;
}

}   // namespace

AllocationIndex AllocationIndex::of(const RecoverySystem& system)
{
    AllocationIndex index;
    index.k = system.k;
    index.n = system.n;
    index.block_start.push_back(0);
    for (int i = 1; i <= system.k; ++i)
    {
        for (const auto& r : system.of(i))
            index.entries.emplace_back(i, r);
        index.block_start.push_back(static_cast<int>(index.entries.size()));
    }
    return index;
}

int AllocationIndex::find(int i, const RecoverySet& r) const
{
    if (i < 1 || i > k)
        return -1;
    for (int j = block_start[i - 1]; j < block_start[i]; ++j)
        if (entries[j].second == r)
            return j;
    return -1;
}

VectorQ FractionalAllocation::rates() const
{
    VectorQ out = VectorQ::Zero(index.k);
    for (int j = 0; j < index.size(); ++j)
        out(index.entries[j].first - 1) += values(j);
    return out;
}

VectorQ FractionalAllocation::loads() const
{
    VectorQ out = VectorQ::Zero(index.n);
    for (int j = 0; j < index.size(); ++j)
        for (int nu : index.entries[j].second)
            out(nu - 1) += values(j);
    return out;
}

bool FractionalAllocation::feasible() const
{
    for (Eigen::Index j = 0; j < values.size(); ++j)
        if (values(j) < 0)
            return false;
    VectorQ load = loads();
    for (Eigen::Index nu = 0; nu < load.size(); ++nu)
        if (load(nu) > mu)
            return false;
    return true;
}

std::vector<Integer> IntegerAllocation::loads() const
{
    std::vector<Integer> out(index.n, Integer(0));
    for (int j = 0; j < index.size(); ++j)
        for (int nu : index.entries[j].second)
            out[nu - 1] += counts[j];
    return out;
}

std::vector<Integer> IntegerAllocation::rates() const
{
    std::vector<Integer> out(index.k, Integer(0));
    for (int j = 0; j < index.size(); ++j)
        out[index.entries[j].first - 1] += counts[j];
    return out;
}

bool IntegerAllocation::feasible() const
{
    for (const auto& c : counts)
        if (c < 0)
            return false;
    for (const auto& load : loads())
        if (load > s)
            return false;
    return true;
}

HPolytope allocation_polytope(const RecoverySystem& system, const Rational& mu)
{
    AllocationIndex index = AllocationIndex::of(system);
    const int m = index.size();
    HPolytope p(MatrixQ::Zero(system.n + m, m), VectorQ::Zero(system.n + m));
    for (int j = 0; j < m; ++j)
    {
        for (int nu : index.entries[j].second)
            p.A(nu - 1, j) = 1;
        p.A(system.n + j, j) = -1;
    }
    for (int nu = 0; nu < system.n; ++nu)
        p.b(nu) = mu;
    return p;
}

MatrixQ summation_map(const AllocationIndex& index)
{
    MatrixQ f = MatrixQ::Zero(index.k, index.size());
    for (int j = 0; j < index.size(); ++j)
        f(index.entries[j].first - 1, j) = 1;
    return f;
}

MembershipResult srr_membership(const RecoverySystem& system, const Rational& mu, const DemandVector& lambda)
{
    check_demand(system, lambda);
    AllocationIndex index = AllocationIndex::of(system);
    LinearProgram lp = allocation_program(index, mu);
    for (int i = 1; i <= system.k; ++i)
    {
        std::vector<std::pair<int, Rational>> terms;
        for (int j = index.block_start[i - 1]; j < index.block_start[i]; ++j)
            terms.emplace_back(j, Rational(1));
        lp.add_constraint(terms, Relation::Equal, lambda(i - 1));
    }
    lp.set_objective(VectorQ::Zero(index.size()), Sense::Maximize);
    auto outcome = lp.solve();
    MembershipResult result;
    result.status = outcome.status;
    result.inside = outcome.status == LPStatus::Optimal;
    if (result.inside)
        result.certificate = FractionalAllocation{std::move(index), outcome.point, mu};
    return result;
}

IntegerAllocation to_integer_allocation(const FractionalAllocation& a)
{
    if (a.mu <= 0)
        throw Error(ErrorKind::ValidationError, kModule, "capacity must be positive");
    VectorQ scaled = a.values / a.mu;
    Integer s = 1;
    for (Eigen::Index j = 0; j < scaled.size(); ++j)
    {
        if (scaled(j) < 0)
            throw Error(ErrorKind::ValidationError, kModule, "allocation values must be nonnegative");
        s = lcm(s, boost::multiprecision::denominator(scaled(j)));
    }
    IntegerAllocation out;
    out.index = a.index;
    out.s = s;
    for (Eigen::Index j = 0; j < scaled.size(); ++j)
        out.counts.push_back(boost::multiprecision::numerator(scaled(j)) * (s / boost::multiprecision::denominator(scaled(j))));
    return out;
}

std::vector<std::vector<int>> one_shot_region(const RecoverySystem& system, int s)
{
    if (s < 1)
        throw Error(ErrorKind::ValidationError, kModule, "number of uses must be positive");
    AllocationIndex index = AllocationIndex::of(system);
    const int m = index.size();
    const std::uint64_t limit = scaled_guard(kOneShotGuard);
    std::set<std::vector<int>> rates;
    std::set<std::pair<std::vector<int>, std::vector<int>>> visited;   // (remaining loads + position, rates)
    std::vector<int> remaining(system.n, s), rate(system.k, 0);
    std::uint64_t nodes = 0;
    std::function<void(int)> search = [&](int j) {
        if (++nodes > limit)
            throw Error(ErrorKind::TooLarge, kModule, "one-shot enumeration exceeds the guard");
        if (j == m)
        {
            rates.insert(rate);
            return;
        }
        std::vector<int> key = remaining;
        key.push_back(j);
        if (!visited.emplace(std::move(key), rate).second)
            return;
        const auto& r = index.entries[j].second;
        int most = s;
        for (int nu : r)
            most = std::min(most, remaining[nu - 1]);
        for (int count = 0; count <= most; ++count)
        {
            for (int nu : r)
                remaining[nu - 1] -= count;
            rate[index.entries[j].first - 1] += count;
            search(j + 1);
            for (int nu : r)
                remaining[nu - 1] += count;
            rate[index.entries[j].first - 1] -= count;
        }
    };
    search(0);
    return {rates.begin(), rates.end()};
}

LPOutcome optimize_rates(const RecoverySystem& system, const Rational& mu, const VectorQ& c)
{
    if (c.size() != system.k)
        throw Error(ErrorKind::LengthMismatch, kModule, "objective length differs from k");
    AllocationIndex index = AllocationIndex::of(system);
    LinearProgram lp = allocation_program(index, mu);
    VectorQ lifted(index.size());
    for (int j = 0; j < index.size(); ++j)
        lifted(j) = c(index.entries[j].first - 1);
    lp.set_objective(lifted, Sense::Maximize);
    auto outcome = lp.solve();
    if (outcome.status == LPStatus::Optimal)
        outcome.point = summation_map(index) * outcome.point;
    return outcome;
}

namespace {

Region region_by_support(const RecoverySystem& system, const Rational& mu)
{
    const int k = system.k;
    VPolytope points;
    points.dim = k;
    points.vertices.push_back(VectorQ::Zero(k));
    for (int i = 0; i < k; ++i)
    {
        VectorQ c = VectorQ::Zero(k);
        c(i) = 1;
        auto outcome = optimize_rates(system, mu, c);
        VectorQ axis = VectorQ::Zero(k);
        axis(i) = outcome.value;
        points.vertices.push_back(axis);
    }
    std::set<std::vector<Rational>> confirmed;
    while (true)
    {
        HPolytope hull = facets_from_vertices(points);
        bool grown = false;
        for (int r = 0; r < hull.num_constraints(); ++r)
        {
            std::vector<Rational> key(hull.A.row(r).data(), hull.A.row(r).data() + k);
            key.push_back(hull.b(r));
            if (confirmed.count(key))
                continue;
            auto outcome = optimize_rates(system, mu, hull.A.row(r).transpose());
            if (outcome.value > hull.b(r))
            {
                points.vertices.push_back(outcome.point);
                grown = true;
            }
            else
            {
                confirmed.insert(std::move(key));
            }
        }
        if (!grown)
        {
            Region region{remove_redundant(hull), {}};
            region.v = enumerate_vertices(region.h);
            return region;
        }
        // Keep only hull vertices to bound the facet search.
        points.canonicalize();
        HPolytope current = facets_from_vertices(points);
        VPolytope trimmed = enumerate_vertices(current);
        std::set<VectorQ, bool (*)(const VectorQ&, const VectorQ&)> keep(
            trimmed.vertices.begin(), trimmed.vertices.end(), lex_less);
        points.vertices.assign(keep.begin(), keep.end());
    }
}

}   // namespace

Region region_polytope(const RecoverySystem& system, const Rational& mu, const RegionOptions& options)
{
    if (mu <= 0)
        throw Error(ErrorKind::ValidationError, kModule, "capacity must be positive");
    if (options.method == ProjectionMethod::SupportHull)
        return region_by_support(system, mu);
    AllocationIndex index = AllocationIndex::of(system);
    Region region;
    region.h = fm_project(allocation_polytope(system, mu), summation_map(index), options.fm);
    region.v = enumerate_vertices(region.h);
    return region;
}

RegionParams region_params(const RecoverySystem& system, const std::vector<int>& rs, const Region* region)
{
    const int k = system.k;
    RegionParams params;
    params.max_sum = optimize_rates(system, 1, VectorQ::Ones(k)).value;
    params.axis_maxima.resize(k);
    for (int i = 0; i < k; ++i)
    {
        VectorQ c = VectorQ::Zero(k);
        c(i) = 1;
        params.axis_maxima(i) = optimize_rates(system, 1, c).value;
    }
    params.max_axis = params.axis_maxima.maxCoeff();
    params.simplex = params.axis_maxima.minCoeff();

    // h: maximize t with sum_{R in R_i} lambda_{i,R} = t for every i.
    AllocationIndex index = AllocationIndex::of(system);
    LinearProgram lp = allocation_program(index, 1, 1);
    const int t = index.size();
    for (int i = 1; i <= k; ++i)
    {
        std::vector<std::pair<int, Rational>> terms;
        for (int j = index.block_start[i - 1]; j < index.block_start[i]; ++j)
            terms.emplace_back(j, Rational(1));
        terms.emplace_back(t, Rational(-1));
        lp.add_constraint(terms, Relation::Equal, 0);
    }
    VectorQ objective = VectorQ::Zero(t + 1);
    objective(t) = 1;
    lp.set_objective(objective, Sense::Maximize);
    params.hypercube = lp.solve().value;

    std::optional<Region> computed;
    const bool need_vertices = std::any_of(rs.begin(), rs.end(), [](int r) { return r >= 2; });
    if (need_vertices && region == nullptr)
    {
        computed = region_polytope(system, 1);
        region = &*computed;
    }
    for (int r : rs)
    {
        if (r < 1)
            throw Error(ErrorKind::ValidationError, kModule, "power-sum exponent must be positive");
        if (r == 1)
        {
            params.r_max_sum.emplace_back(1, params.max_sum);
            continue;
        }
        Rational best = 0;
        for (const auto& v : region->v.vertices)
        {
            Rational sum = 0;
            for (int i = 0; i < k; ++i)
            {
                Rational power = 1;
                for (int e = 0; e < r; ++e)
                    power *= v(i);
                sum += power;
            }
            best = max(best, sum);
        }
        params.r_max_sum.emplace_back(r, best);
    }
    if (region != nullptr)
        params.volume = volume(region->h, region->v).value;
    return params;
}

bool mds_region_membership(int k, int n, const DemandVector& lambda)
{
    if (n < 2 * k)
        throw Error(ErrorKind::RegimeViolation, kModule, "the closed form needs n >= 2k");
    if (lambda.size() != k)
        throw Error(ErrorKind::LengthMismatch, kModule, "demand length differs from k");
    Rational lhs = 0;
    int below_one = 0;
    for (int i = 0; i < k; ++i)
    {
        if (lambda(i) < 0)
            throw Error(ErrorKind::ValidationError, kModule, "demand entries must be nonnegative");
        if (lambda(i) < 1)
        {
            ++below_one;
            lhs += lambda(i);
        }
        else
        {
            lhs += k * lambda(i);
        }
    }
    return lhs <= Rational(n + (k - 1) * (k - below_one));
}

Rational closed_form_volume(VolumeFormula kind, int n, const std::vector<int>& s)
{
    switch (kind)
    {
        case VolumeFormula::Mds2:
            if (n < 4)
                throw Error(ErrorKind::RegimeViolation, kModule, "the k = 2 formula needs n >= 4");
            return Rational(n * n + 4 * n, 8);
        case VolumeFormula::Mds3:
            if (n < 6)
                throw Error(ErrorKind::RegimeViolation, kModule, "the k = 3 formula needs n >= 6");
            return Rational(Integer(n) * n * n + 18 * n * n + 54 * n - 18, 162);
        case VolumeFormula::Replication:
        {
            if (s.empty())
                throw Error(ErrorKind::RegimeViolation, kModule, "replication volume needs the s vector");
            Rational out = 1;
            for (int si : s)
            {
                if (si < 1)
                    throw Error(ErrorKind::RegimeViolation, kModule, "every object needs a systematic node");
                out *= si;
            }
            return out;
        }
    }
    return 0;
}

RecoverySystem all_subsets_system(int a, int b)
{
    RecoverySystem system;
    system.k = a;
    system.n = b;
    system.origin = SystemOrigin::UserSupplied;
    std::vector<RecoverySet> subsets;
    std::vector<int> pick(b, 0);
    std::fill(pick.begin(), pick.begin() + a, 1);
    do
    {
        RecoverySet r;
        for (int nu = 0; nu < b; ++nu)
            if (pick[nu])
                r.push_back(nu + 1);
        subsets.push_back(r);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(subsets.begin(), subsets.end(), shortlex_less);
    system.sets.assign(a, subsets);
    return system;
}

FractionalAllocation rs_uniform_allocation(int a, int b, std::uint32_t q, Element alpha, const DemandVector& lambda)
{
    rs_matrix(a, b, q, alpha);   // validates the parameters
    RecoverySystem system = all_subsets_system(a, b);
    check_demand(system, lambda);
    if (lambda.sum() > Rational(b, a))
        throw Error(ErrorKind::DemandTooLarge, kModule, "sum of demands exceeds b / a");
    FractionalAllocation out;
    out.index = AllocationIndex::of(system);
    out.mu = 1;
    out.values.resize(out.index.size());
    const Rational share = binomial(b, a);
    for (int j = 0; j < out.index.size(); ++j)
        out.values(j) = lambda(out.index.entries[j].first - 1) / share;
    return out;
}

}   // namespace srr
