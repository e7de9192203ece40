#include "srr/code_analysis.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "srr/error.hpp"

namespace srr {

namespace {

constexpr const char* kModule = "code_analysis";
constexpr std::uint64_t kCodewordGuard = std::uint64_t{1} << 24;
constexpr std::uint64_t kProjectiveGuard = std::uint64_t{1} << 20;

/// q^exponent, saturating once it passes limit.
std::uint64_t bounded_power(std::uint64_t q, int exponent, std::uint64_t limit)
{
    std::uint64_t value = 1;
    for (int i = 0; i < exponent; ++i)
    {
        value *= q;
        if (value > limit)
            return limit + 1;
    }
    return value;
}

std::vector<std::vector<Element>> projective_points_unchecked(const FieldContext& field, int k)
{
    const std::uint32_t q = field.order();
    std::vector<std::vector<Element>> points;
    for (int lead = 0; lead < k; ++lead)
    {
        std::vector<Element> v(k, 0);
        v[lead] = 1;
        while (true)
        {
            points.push_back(v);
            int pos = k - 1;
            while (pos > lead && v[pos] == q - 1)
            {
                v[pos] = 0;
                --pos;
            }
            if (pos == lead)
                break;
            ++v[pos];
        }
    }
    return points;
}

int weight_of_combination(const FFMatrix& m, const std::vector<Element>& x)
{
    const FieldContext& f = m.field();
    int weight = 0;
    for (int c = 0; c < m.cols(); ++c)
    {
        Element acc = 0;
        for (int r = 0; r < m.rows(); ++r)
            if (x[r] != 0)
                acc = f.add(acc, f.mul(x[r], m(r, c)));
        if (acc != 0)
            ++weight;
    }
    return weight;
}

}   // namespace

std::vector<std::vector<Element>> projective_points(const FieldContext& field, int k)
{
    const std::uint64_t limit = scaled_guard(kProjectiveGuard);
    // (q^k - 1)/(q - 1) <= q^k; compare exactly by summing q^j for j < k.
    std::uint64_t count = 0, power = 1;
    for (int j = 0; j < k; ++j)
    {
        count += power;
        power *= field.order();
        if (count > limit)
            throw Error(ErrorKind::TooLarge, kModule, "projective space PG(" + std::to_string(k - 1) + ", "
                                                          + std::to_string(field.order())
                                                          + ") exceeds the enumeration guard");
    }
    return projective_points_unchecked(field, k);
}

int codeword_min_distance(const FFMatrix& m)
{
    if (m.rows() == 0)
        return m.cols() + 1;
    const std::uint64_t limit = scaled_guard(kCodewordGuard);
    if (bounded_power(m.field().order(), m.rows(), limit) > limit)
        throw Error(ErrorKind::TooLarge, kModule,
                    std::to_string(m.field().order()) + "^" + std::to_string(m.rows())
                        + " codewords exceed the enumeration guard");
    // Scalar multiples share a weight, so one representative per line suffices.
    int best = m.cols() + 1;
    for (const auto& x : projective_points_unchecked(m.field(), m.rows()))
        best = std::min(best, weight_of_combination(m, x));
    return best;
}

int min_distance(const GeneratorMatrix& g)
{
    return codeword_min_distance(g.matrix());
}

FFMatrix dual_matrix(const GeneratorMatrix& g)
{
    auto basis = null_space(g.matrix());
    FFMatrix h(g.field(), static_cast<int>(basis.size()), g.n());
    for (int r = 0; r < h.rows(); ++r)
        for (int c = 0; c < g.n(); ++c)
            h.set(r, c, basis[r][c]);
    return h;
}

int dual_min_distance(const GeneratorMatrix& g)
{
    return codeword_min_distance(dual_matrix(g));
}

bool is_mds(const GeneratorMatrix& g)
{
    const int k = g.k(), n = g.n();
    std::vector<int> combo(k);
    for (int j = 0; j < k; ++j)
        combo[j] = j;
    std::uint64_t visited = 0;
    const std::uint64_t limit = scaled_guard(kCodewordGuard);
    while (true)
    {
        if (++visited > limit)
            throw Error(ErrorKind::TooLarge, kModule, "too many column subsets for the MDS check");
        if (rank(g.matrix().select_columns(combo)) < k)
            return false;
        int pos = k - 1;
        while (pos >= 0 && combo[pos] == n - k + pos)
            --pos;
        if (pos < 0)
            return true;
        ++combo[pos];
        for (int j = pos + 1; j < k; ++j)
            combo[j] = combo[j - 1] + 1;
    }
}

SystematicProfile systematic_profile(const GeneratorMatrix& g)
{
    const FFMatrix& m = g.matrix();
    SystematicProfile profile;
    profile.s.assign(g.k(), 0);
    int systematic_columns = 0;
    for (int c = 0; c < g.n(); ++c)
    {
        int support = -1, count = 0;
        for (int r = 0; r < g.k(); ++r)
            if (m(r, c) != 0)
            {
                support = r;
                ++count;
            }
        if (count == 1)
        {
            ++profile.s[support];
            ++systematic_columns;
        }
    }
    profile.is_replication = systematic_columns == g.n();
    profile.is_systematic = g.n() >= g.k();
    for (int c = 0; c < g.k() && profile.is_systematic; ++c)
        for (int r = 0; r < g.k(); ++r)
            if (m(r, c) != (r == c ? 1u : 0u))
            {
                profile.is_systematic = false;
                break;
            }
    return profile;
}

int max_disjoint_sets(const std::vector<RecoverySet>& sets)
{
    std::vector<std::uint64_t> masks;
    for (const auto& r : sets)
    {
        std::uint64_t mask = 0;
        for (int nu : r)
        {
            if (nu < 1 || nu > 64)
                throw Error(ErrorKind::TooLarge, kModule, "set packing supports at most 64 servers");
            mask |= std::uint64_t{1} << (nu - 1);
        }
        masks.push_back(mask);
    }
    std::sort(masks.begin(), masks.end(),
              [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b); });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    if (masks.empty())
        return 0;
    const int min_size = std::popcount(masks.front());
    int universe = 0;
    for (auto mask : masks)
        universe = std::max(universe, 64 - std::countl_zero(mask));

    int best = 0;
    std::function<void(std::size_t, std::uint64_t, int)> search = [&](std::size_t start, std::uint64_t used,
                                                                      int count) {
        best = std::max(best, count);
        int free_servers = universe - std::popcount(used);
        if (count + free_servers / min_size <= best)
            return;
        for (std::size_t j = start; j < masks.size(); ++j)
            if ((masks[j] & used) == 0)
                search(j + 1, used | masks[j], count + 1);
    };
    search(0, 0, 0);
    return best;
}

int availability(const GeneratorMatrix& g, const RecoverySystem& minimal)
{
    if (!systematic_profile(g).is_systematic)
        throw Error(ErrorKind::NotSystematic, kModule, "availability is defined for systematic matrices only");
    int t = -1;
    for (int i = 1; i <= minimal.k; ++i)
    {
        int packing = max_disjoint_sets(minimal.of(i));
        t = (t < 0) ? packing - 1 : std::min(t, packing - 1);
    }
    return t;
}

HyperplaneStats pg_hyperplane_stats(const GeneratorMatrix& g)
{
    const FieldContext& f = g.field();
    const FFMatrix& m = g.matrix();
    HyperplaneStats stats;
    for (auto& normal : projective_points(f, g.k()))
    {
        int points = 0;
        for (int c = 0; c < g.n(); ++c)
        {
            Element acc = 0;
            for (int r = 0; r < g.k(); ++r)
                acc = f.add(acc, f.mul(normal[r], m(r, c)));
            if (acc == 0)
                ++points;
        }
        stats.max_points = std::max(stats.max_points, points);
        stats.hyperplanes.push_back({std::move(normal), points});
    }
    return stats;
}

GeneratorMatrix rs_matrix(int a, int b, const FieldContext& field, Element alpha)
{
    if (a < 2 || a >= b)
        throw Error(ErrorKind::ValidationError, kModule, "need 2 <= a < b");
    if (static_cast<std::uint64_t>(b) >= field.order())
        throw Error(ErrorKind::FieldTooSmall, kModule,
                    "b = " + std::to_string(b) + " requires q > b, got q = " + std::to_string(field.order()));
    if (alpha >= field.order() || !field.is_primitive(alpha))
        throw Error(ErrorKind::NotPrimitive, kModule,
                    std::to_string(alpha) + " is not a primitive element of F_" + std::to_string(field.order()));
    FFMatrix m(field, a, b);
    for (int r = 0; r < a; ++r)
        for (int c = 0; c < b; ++c)
            m.set(r, c, field.pow(alpha, static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(c)));
    return GeneratorMatrix(std::move(m));
}

GeneratorMatrix rs_matrix(int a, int b, std::uint32_t q, Element alpha)
{
    return rs_matrix(a, b, FieldContext::make(q), alpha);
}

CodeProfile code_profile(const GeneratorMatrix& g, const RecoverySystem& minimal)
{
    CodeProfile profile;
    profile.n = g.n();
    profile.k = g.k();
    profile.q = g.field().order();
    profile.d = min_distance(g);
    profile.d_dual = dual_min_distance(g);
    profile.is_mds = is_mds(g);
    auto sys = systematic_profile(g);
    profile.is_systematic = sys.is_systematic;
    profile.is_replication = sys.is_replication;
    profile.s = sys.s;
    if (sys.is_systematic)
        profile.availability_t = availability(g, minimal);
    profile.max_hyperplane_points = pg_hyperplane_stats(g).max_points;
    return profile;
}

}   // namespace srr
