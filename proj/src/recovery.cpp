#include "srr/recovery.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "srr/error.hpp"

namespace srr {

namespace {

constexpr const char* kModule = "recovery";
constexpr std::uint64_t kSubsetGuard = std::uint64_t{1} << 20;

void check_object(const GeneratorMatrix& g, int i)
{
    if (i < 1 || i > g.k())
        throw Error(ErrorKind::IndexOutOfRange, kModule,
                    "object index " + std::to_string(i) + " outside 1.." + std::to_string(g.k()));
}

void check_set(const GeneratorMatrix& g, const RecoverySet& r)
{
    if (r.empty())
        throw Error(ErrorKind::ValidationError, kModule, "recovery sets must be nonempty");
    for (std::size_t j = 0; j < r.size(); ++j)
    {
        if (r[j] < 1 || r[j] > g.n())
            throw Error(ErrorKind::IndexOutOfRange, kModule,
                        "server index " + std::to_string(r[j]) + " outside 1.." + std::to_string(g.n()));
        if (j > 0 && r[j] <= r[j - 1])
            throw Error(ErrorKind::ValidationError, kModule, "recovery set indices must be strictly increasing");
    }
}

bool recovers(const GeneratorMatrix& g, int i, const RecoverySet& r)
{
    std::vector<std::vector<Element>> columns;
    columns.reserve(r.size());
    for (int nu : r)
        columns.push_back(g.server(nu));
    std::vector<Element> target(g.k(), 0);
    target[i - 1] = 1;
    return in_span(g.field(), columns, target).contained;
}

std::uint32_t to_mask(const RecoverySet& r)
{
    std::uint32_t mask = 0;
    for (int nu : r)
        mask |= std::uint32_t{1} << (nu - 1);
    return mask;
}

void check_size(int n)
{
    if (n > 30 || (std::uint64_t{1} << n) > scaled_guard(kSubsetGuard))
        throw Error(ErrorKind::TooLarge, kModule,
                    "2^" + std::to_string(n) + " subsets exceed the enumeration guard");
}

}   // namespace

int RecoverySystem::size() const
{
    int m = 0;
    for (const auto& collection : sets)
        m += static_cast<int>(collection.size());
    return m;
}

bool shortlex_less(const RecoverySet& a, const RecoverySet& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

bool is_recovery_set(const GeneratorMatrix& g, int i, const RecoverySet& r)
{
    check_object(g, i);
    check_set(g, r);
    return recovers(g, i, r);
}

bool is_minimal(const GeneratorMatrix& g, int i, const RecoverySet& r)
{
    if (!is_recovery_set(g, i, r))
        throw Error(ErrorKind::NotARecoverySet, kModule, "set does not recover object " + std::to_string(i));
    // Recoverability is monotone, so checking subsets missing one element suffices.
    if (r.size() == 1)
        return true;
    for (std::size_t drop = 0; drop < r.size(); ++drop)
    {
        RecoverySet smaller;
        for (std::size_t j = 0; j < r.size(); ++j)
            if (j != drop)
                smaller.push_back(r[j]);
        if (recovers(g, i, smaller))
            return false;
    }
    return true;
}

RecoverySystem minimal_recovery_system(const GeneratorMatrix& g)
{
    const int n = g.n();
    check_size(n);
    RecoverySystem system;
    system.k = g.k();
    system.n = n;
    system.origin = SystemOrigin::MinimalOfG;
    system.sets.resize(g.k());
    for (int i = 1; i <= g.k(); ++i)
    {
        std::vector<std::uint32_t> kept;
        auto& out = system.sets[i - 1];
        // A minimal set has independent columns, hence at most k elements.
        for (int size = 1; size <= std::min(n, g.k()); ++size)
        {
            std::vector<int> combo(size);
            for (int j = 0; j < size; ++j)
                combo[j] = j + 1;
            while (true)
            {
                std::uint32_t mask = to_mask(combo);
                bool dominated = std::any_of(kept.begin(), kept.end(),
                                             [mask](std::uint32_t s) { return (s & mask) == s; });
                if (!dominated && recovers(g, i, combo))
                {
                    kept.push_back(mask);
                    out.push_back(combo);
                }
                int pos = size - 1;
                while (pos >= 0 && combo[pos] == n - size + pos + 1)
                    --pos;
                if (pos < 0)
                    break;
                ++combo[pos];
                for (int j = pos + 1; j < size; ++j)
                    combo[j] = combo[j - 1] + 1;
            }
        }
    }
    return system;
}

RecoverySystem make_recovery_system(const GeneratorMatrix& g, std::vector<std::vector<RecoverySet>> sets)
{
    if (static_cast<int>(sets.size()) != g.k())
        throw Error(ErrorKind::LengthMismatch, kModule,
                    "expected " + std::to_string(g.k()) + " collections, got " + std::to_string(sets.size()));
    RecoverySystem system;
    system.k = g.k();
    system.n = g.n();
    system.origin = SystemOrigin::UserSupplied;
    for (int i = 1; i <= g.k(); ++i)
    {
        auto& collection = sets[i - 1];
        if (collection.empty())
            throw Error(ErrorKind::ValidationError, kModule,
                        "object " + std::to_string(i) + " has no recovery sets");
        for (const auto& r : collection)
            if (!is_recovery_set(g, i, r))
                throw Error(ErrorKind::NotARecoverySet, kModule,
                            "a supplied set does not recover object " + std::to_string(i));
        std::sort(collection.begin(), collection.end(), shortlex_less);
        collection.erase(std::unique(collection.begin(), collection.end()), collection.end());
    }
    system.sets = std::move(sets);
    return system;
}

std::uint64_t all_recovery_supersets_count(const GeneratorMatrix& g, int i)
{
    check_object(g, i);
    check_size(g.n());
    RecoverySystem minimal = minimal_recovery_system(g);
    // Signed weights indexed by union masks of nonempty families of minimal sets.
    std::map<std::uint32_t, std::int64_t> terms;
    for (const auto& r : minimal.of(i))
    {
        std::uint32_t mask = to_mask(r);
        std::map<std::uint32_t, std::int64_t> added;
        added[mask] += 1;
        for (const auto& [u, w] : terms)
            added[u | mask] -= w;
        for (const auto& [u, w] : added)
            terms[u] += w;
    }
    std::int64_t total = 0;
    for (const auto& [u, w] : terms)
        total += w * (std::int64_t{1} << (g.n() - std::popcount(u)));
    return static_cast<std::uint64_t>(total);
}

}   // namespace srr
