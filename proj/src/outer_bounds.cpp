#include "srr/outer_bounds.hpp"

#include <algorithm>
#include <functional>

#include "srr/error.hpp"

namespace srr {

namespace {

constexpr const char* kModule = "outer_bounds";

SystematicProfile require_systematic(const GeneratorMatrix& g, const char* bound)
{
    auto profile = systematic_profile(g);
    if (!profile.is_systematic)
        throw Error(ErrorKind::NotSystematic, kModule,
                    std::string(bound) + " needs a systematic generator matrix");
    return profile;
}

BoundReport piecewise(std::string name, std::string description, int n)
{
    BoundReport report;
    report.name = std::move(name);
    report.kind = BoundKind::PiecewiseLinear;
    report.description = std::move(description);
    report.constant = 0;
    report.rhs = n;
    return report;
}

}   // namespace

const char* to_string(BoundKind kind)
{
    switch (kind)
    {
        case BoundKind::HalfSpace: return "half-space";
        case BoundKind::PiecewiseLinear: return "piecewise-linear";
        case BoundKind::ScalarCap: return "scalar-cap";
    }
    return "unknown";
}

Rational PiecewiseTerm::at(const Rational& x) const
{
    return low_slope * min(x, breakpoint) + high_slope * max(Rational(0), x - breakpoint);
}

BoundEvaluation BoundReport::evaluate(const DemandVector& lambda) const
{
    if (lambda.size() != static_cast<Eigen::Index>(terms.size()))
        throw Error(ErrorKind::LengthMismatch, kModule,
                    "demand vector has " + std::to_string(lambda.size()) + " entries, bound expects "
                        + std::to_string(terms.size()));
    BoundEvaluation out;
    out.lhs = constant;
    for (std::size_t i = 0; i < terms.size(); ++i)
        out.lhs += terms[i].at(lambda(static_cast<Eigen::Index>(i)));
    out.rhs = rhs;
    out.satisfied = out.lhs <= out.rhs;
    return out;
}

HPolytope BoundReport::polytope() const
{
    const int k = static_cast<int>(terms.size());
    // Each convex term is the max of its two linear pieces on x >= 0.
    std::vector<std::vector<std::pair<Rational, Rational>>> pieces(k);   // (slope, offset)
    for (int i = 0; i < k; ++i)
    {
        const auto& t = terms[i];
        if (t.breakpoint == 0 || t.low_slope == t.high_slope)
        {
            pieces[i].push_back({t.breakpoint == 0 ? t.high_slope : t.low_slope, 0});
            continue;
        }
        if (t.high_slope < t.low_slope)
            throw Error(ErrorKind::ValidationError, kModule, "bound term is not convex");
        pieces[i].push_back({t.low_slope, 0});
        pieces[i].push_back({t.high_slope, (t.high_slope - t.low_slope) * t.breakpoint});
    }
    HPolytope out(MatrixQ(0, k), VectorQ(0));
    std::vector<std::size_t> choice(k, 0);
    while (true)
    {
        RowVectorQ a(k);
        Rational b = rhs - constant;
        for (int i = 0; i < k; ++i)
        {
            a(i) = pieces[i][choice[i]].first;
            b += pieces[i][choice[i]].second;
        }
        out.add_row(a, b);
        int i = 0;
        while (i < k && ++choice[i] == pieces[i].size())
            choice[i++] = 0;
        if (i == k)
            break;
    }
    for (int i = 0; i < k; ++i)
    {
        RowVectorQ e = RowVectorQ::Zero(k);
        e(i) = -1;
        out.add_row(e, 0);
    }
    return remove_redundant(out);
}

BoundEvaluation total_capacity_check(const FractionalAllocation& a, int n, const Rational& mu)
{
    BoundEvaluation out;
    out.lhs = 0;
    for (int j = 0; j < a.index.size(); ++j)
        out.lhs += Rational(static_cast<long>(a.index.entries[j].second.size())) * a.values(j);
    out.rhs = mu * n;
    out.satisfied = out.lhs <= out.rhs;
    return out;
}

BoundReport dual_distance_bound(const GeneratorMatrix& g)
{
    require_systematic(g, "the dual distance bound");
    const int dd = dual_min_distance(g);
    auto report = piecewise("dual", "dual distance bound", g.n());
    for (int i = 0; i < g.k(); ++i)
        report.terms.push_back({1, 1, Rational(dd - 1)});
    report.metadata.dual_distance = dd;
    return report;
}

BoundReport systematic_node_bound(const GeneratorMatrix& g)
{
    auto profile = require_systematic(g, "the systematic-node bound");
    auto report = piecewise("sysnode", "systematic-node bound", g.n());
    for (int i = 0; i < g.k(); ++i)
        report.terms.push_back({1, Rational(profile.s[i]), 2});
    report.metadata.systematic = profile.s;
    return report;
}

BoundReport hybrid_bound(const GeneratorMatrix& g)
{
    auto profile = systematic_profile(g);
    const int dd = dual_min_distance(g);
    const Rational weight = std::max(2, dd - 1);
    auto report = piecewise("hybrid", "systematic nodes with dual distance", g.n());
    for (int i = 0; i < g.k(); ++i)
    {
        if (profile.s[i] != 0)
            report.terms.push_back({1, Rational(profile.s[i]), weight});
        else
            report.terms.push_back(PiecewiseTerm::linear(2));
    }
    report.metadata.dual_distance = dd;
    report.metadata.systematic = profile.s;
    return report;
}

BoundReport uniform_size_bound(const GeneratorMatrix& g, const RecoverySystem& minimal)
{
    if (minimal.k != g.k() || minimal.n != g.n())
        throw Error(ErrorKind::DimensionMismatch, kModule, "recovery system does not match the matrix");
    auto profile = systematic_profile(g);
    const int dd = dual_min_distance(g);
    const Rational weight = std::max(2, dd - 1);
    auto report = piecewise("uniform", "uniform recovery-set size bound", g.n());
    report.metadata.dual_distance = dd;
    report.metadata.systematic = profile.s;
    for (int i = 1; i <= g.k(); ++i)
    {
        const auto& sets = minimal.of(i);
        const int s = profile.s[i - 1];
        std::vector<std::size_t> sizes;
        Rational total = 0;
        for (const auto& r : sets)
            if (r.size() != 1)
            {
                sizes.push_back(r.size());
                total += static_cast<long>(r.size());
            }
        const bool uniform = std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) == sizes.end();
        if (uniform)
            report.metadata.uniform_objects.push_back(i);
        const long others = static_cast<long>(sets.size()) - s;
        std::optional<Rational> mu;
        if (others > 0)
            mu = total / others;
        else
            report.metadata.flags.push_back("DivisionByZero: object " + std::to_string(i)
                                            + " has only systematic recovery sets");
        report.metadata.mu.push_back(mu);

        if (!uniform || !mu)
        {
            report.terms.push_back(s != 0 ? PiecewiseTerm{1, Rational(s), weight} : PiecewiseTerm::linear(2));
        }
        else if (s == 0)
        {
            report.terms.push_back(PiecewiseTerm::linear(*mu));
        }
        else
        {
            // mu lambda + (1 - mu) min{s, lambda}
            report.terms.push_back({1, Rational(s), *mu});
        }
    }
    return report;
}

BoundReport hyperplane_bound(const GeneratorMatrix& g, const std::vector<int>& objects)
{
    const int k = g.k();
    BoundReport report;
    report.kind = BoundKind::HalfSpace;
    report.description = "hyperplane bound";
    report.constant = 0;
    report.terms.assign(k, PiecewiseTerm::linear(0));
    std::vector<int> sorted = objects;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::string name = "hyperplane{";
    for (std::size_t j = 0; j < sorted.size(); ++j)
    {
        const int i = sorted[j];
        if (i < 1 || i > k)
            throw Error(ErrorKind::IndexOutOfRange, kModule, "object " + std::to_string(i) + " out of range");
        report.terms[i - 1] = PiecewiseTerm::linear(1);
        name += (j ? "," : "") + std::to_string(i);
    }
    report.name = name + "}";
    report.metadata.objects = sorted;
    report.rhs = g.n();
    if (sorted.empty())
        return report;
    auto stats = pg_hyperplane_stats(g);
    std::optional<int> best;
    for (const auto& h : stats.hyperplanes)
    {
        const bool avoids = std::all_of(sorted.begin(), sorted.end(), [&](int i) { return h.normal[i - 1] != 0; });
        if (!avoids)
            continue;
        const int outside = g.n() - h.points;
        if (!best || outside < *best)
        {
            best = outside;
            report.metadata.normal = h.normal;
        }
    }
    report.rhs = *best;
    return report;
}

DantzigResult clipped_sum_bound(const RecoverySystem& system, const VectorQ& c)
{
    auto index = AllocationIndex::of(system);
    if (c.size() != index.size())
        throw Error(ErrorKind::DimensionMismatch, kModule,
                    "objective has " + std::to_string(c.size()) + " entries, A(R) has "
                        + std::to_string(index.size()) + " coordinates");
    VectorQ y(index.size());
    for (int j = 0; j < index.size(); ++j)
        y(j) = static_cast<long>(index.entries[j].second.size());
    return dantzig_max(c, y, system.n);
}

BoundReport clip_srr_bound(const RecoverySystem& system, const VectorQ& b)
{
    if (b.size() != system.k)
        throw Error(ErrorKind::LengthMismatch, kModule, "weight vector must have one entry per object");
    for (int i = 0; i < system.k; ++i)
        if (b(i) < 0)
            throw Error(ErrorKind::NegativeObjective, kModule,
                        "weight of object " + std::to_string(i + 1) + " is negative");
    auto index = AllocationIndex::of(system);
    VectorQ c(index.size());
    for (int j = 0; j < index.size(); ++j)
        c(j) = b(index.entries[j].first - 1);
    auto greedy = clipped_sum_bound(system, c);

    BoundReport report;
    report.kind = BoundKind::HalfSpace;
    report.description = "clipped-sum bound";
    std::string name = "clip(";
    for (int i = 0; i < system.k; ++i)
    {
        report.terms.push_back(PiecewiseTerm::linear(b(i)));
        name += (i ? "," : "") + to_string(b(i));
    }
    report.name = name + ")";
    report.constant = 0;
    report.rhs = greedy.value;
    report.metadata.weights = b;
    report.metadata.order = greedy.order;
    report.metadata.critical = greedy.r;
    report.metadata.sigma = greedy.sigma;
    return report;
}

Rational hcube_cap(const RegionParams& params)
{
    const auto k = static_cast<long>(params.axis_maxima.size());
    return min(params.max_sum / k, params.simplex);
}

Rational bhatia_davis_cap(const RegionParams& params, int k)
{
    return Rational(k - 1, k) * params.max_axis * params.max_sum + params.max_sum * params.max_sum / k;
}

Rational mds_maxsum_cap(int k, int n)
{
    return Rational(k) + Rational(n - k, k);
}

const std::vector<std::string>& bound_names()
{
    static const std::vector<std::string> names{"dual", "sysnode", "hybrid", "uniform", "hyperplane", "clip"};
    return names;
}

BoundSet all_bounds(const GeneratorMatrix& g, const RecoverySystem& minimal, const std::vector<std::string>& names,
                    const std::vector<VectorQ>& extra_b)
{
    const auto& valid = bound_names();
    for (const auto& name : names)
        if (std::find(valid.begin(), valid.end(), name) == valid.end())
        {
            std::string list;
            for (const auto& v : valid)
                list += (list.empty() ? "" : ", ") + v;
            throw Error(ErrorKind::ValidationError, kModule, "unknown bound '" + name + "' (valid: " + list + ")");
        }
    auto wanted = [&](const char* name) {
        return names.empty() || std::find(names.begin(), names.end(), name) != names.end();
    };
    BoundSet out;
    auto attempt = [&](const char* name, auto&& make) {
        if (!wanted(name))
            return;
        try
        {
            out.bounds.push_back(make());
        }
        catch (const Error& e)
        {
            if (e.kind() != ErrorKind::NotSystematic)
                throw;
            out.skipped.emplace_back(name, e.what());
        }
    };
    attempt("dual", [&] { return dual_distance_bound(g); });
    attempt("sysnode", [&] { return systematic_node_bound(g); });
    attempt("hybrid", [&] { return hybrid_bound(g); });
    attempt("uniform", [&] { return uniform_size_bound(g, minimal); });
    if (wanted("hyperplane"))
    {
        for (int i = 1; i <= g.k(); ++i)
            out.bounds.push_back(hyperplane_bound(g, {i}));
        if (g.k() > 1)
        {
            std::vector<int> every(g.k());
            for (int i = 0; i < g.k(); ++i)
                every[i] = i + 1;
            out.bounds.push_back(hyperplane_bound(g, every));
        }
    }
    if (wanted("clip"))
    {
        for (std::uint32_t mask = 1; mask < (1u << g.k()); ++mask)
        {
            VectorQ b(g.k());
            for (int i = 0; i < g.k(); ++i)
                b(i) = (mask >> i) & 1u;
            out.bounds.push_back(clip_srr_bound(minimal, b));
        }
        for (const auto& b : extra_b)
            out.bounds.push_back(clip_srr_bound(minimal, b));
    }
    return out;
}

}   // namespace srr
