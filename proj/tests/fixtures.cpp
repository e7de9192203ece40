#include "fixtures.hpp"

#include <algorithm>

#include "srr/code_analysis.hpp"

namespace fixtures {

GeneratorMatrix make(std::uint32_t q, int k, int n, std::vector<Element> entries)
{
    return GeneratorMatrix(srr::FieldContext::make(q), k, n, std::move(entries));
}

GeneratorMatrix g1()
{
    return make(2, 2, 4, {1, 0, 1, 1,
                          0, 1, 0, 0});
}

GeneratorMatrix g2()
{
    return make(3, 3, 6, {1, 0, 0, 1, 0, 1,
                          0, 1, 0, 1, 2, 2,
                          0, 0, 1, 1, 1, 1});
}

GeneratorMatrix pentagon()
{
    return make(3, 2, 4, {1, 0, 1, 1,
                          0, 1, 1, 2});
}

GeneratorMatrix hypercube_gap()
{
    return make(2, 3, 4, {1, 1, 0, 1,
                          0, 0, 1, 1,
                          0, 0, 0, 1});
}

GeneratorMatrix parity3()
{
    return make(2, 3, 4, {1, 0, 0, 1,
                          0, 1, 0, 1,
                          0, 0, 1, 1});
}

GeneratorMatrix simplex()
{
    return make(2, 3, 7, {1, 0, 0, 1, 1, 0, 1,
                          0, 1, 0, 1, 0, 1, 1,
                          0, 0, 1, 0, 1, 1, 1});
}

GeneratorMatrix uneven()
{
    return make(3, 3, 6, {0, 1, 1, 2, 1, 2,
                          1, 2, 2, 2, 1, 1,
                          0, 0, 0, 1, 2, 2});
}

GeneratorMatrix wide()
{
    return make(3, 2, 8, {1, 0, 1, 1, 0, 0, 1, 1,
                          0, 1, 0, 0, 1, 1, 1, 2});
}

GeneratorMatrix nonsystematic_f7()
{
    return make(7, 2, 4, {2, 1, 3, 4,
                          1, 2, 3, 5});
}

GeneratorMatrix systematic_mds(int k, int n)
{
    for (std::uint32_t q = 2;; ++q)
    {
        if (!srr::is_prime(q) || q < static_cast<std::uint32_t>(n - k + 1))
            continue;
        auto field = srr::FieldContext::make(q);
        std::vector<Element> entries(static_cast<std::size_t>(k) * n, 0);
        for (int r = 0; r < k; ++r)
        {
            entries[r * n + r] = 1;
            for (int j = 0; j < n - k; ++j)
                entries[r * n + k + j] = field.pow(static_cast<Element>(j + 1), static_cast<std::uint64_t>(r));
        }
        GeneratorMatrix g(field, k, n, entries);
        if (srr::is_mds(g))
            return g;
    }
}

GeneratorMatrix replication(const std::vector<int>& s, std::mt19937& rng)
{
    const int k = static_cast<int>(s.size());
    std::vector<int> owners;
    for (int i = 0; i < k; ++i)
        owners.insert(owners.end(), s[i], i);
    std::shuffle(owners.begin(), owners.end(), rng);
    const int n = static_cast<int>(owners.size());
    std::vector<Element> entries(static_cast<std::size_t>(k) * n, 0);
    for (int c = 0; c < n; ++c)
        entries[owners[c] * n + c] = 1;
    return make(2, k, n, entries);
}

std::vector<Named> all()
{
    return {{"g1", g1()},
            {"g2", g2()},
            {"pentagon", pentagon()},
            {"hypercube_gap", hypercube_gap()},
            {"parity3", parity3()},
            {"simplex", simplex()},
            {"uneven", uneven()},
            {"wide", wide()},
            {"nonsystematic_f7", nonsystematic_f7()},
            {"mds_2_6", systematic_mds(2, 6)},
            {"mds_3_6", systematic_mds(3, 6)}};
}

}   // namespace fixtures
