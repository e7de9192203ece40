#ifndef SRR_RECOVERY_HPP
#define SRR_RECOVERY_HPP

#include <cstdint>
#include <vector>

#include "srr/generator_matrix.hpp"

namespace srr {

/// Strictly increasing, nonempty list of 1-based server indices.
using RecoverySet = std::vector<int>;

enum class SystemOrigin
{
    MinimalOfG,
    UserSupplied
};

/**
 * A G-system: one nonempty collection of recovery sets per object.  Each
 * collection is ordered by cardinality, then lexicographically.
 */
struct RecoverySystem
{
    int k = 0;
    int n = 0;
    std::vector<std::vector<RecoverySet>> sets;
    SystemOrigin origin = SystemOrigin::UserSupplied;

    /// Sets of object i (1-based).
    const std::vector<RecoverySet>& of(int i) const { return sets.at(static_cast<std::size_t>(i - 1)); }

    /// m(R), the total number of (object, set) pairs.
    int size() const;
};

/// Cardinality-then-lexicographic order used for every recovery listing.
bool shortlex_less(const RecoverySet& a, const RecoverySet& b);

bool is_recovery_set(const GeneratorMatrix& g, int i, const RecoverySet& r);

/// Throws NotARecoverySet when r does not recover object i.
bool is_minimal(const GeneratorMatrix& g, int i, const RecoverySet& r);

/// R^min(G).  Throws TooLarge when n exceeds 20 (scaled by SRR_GUARD_SCALE).
RecoverySystem minimal_recovery_system(const GeneratorMatrix& g);

/**
 * Validates a user-supplied system (nonempty collections of genuine recovery
 * sets), then sorts and deduplicates each collection.
 */
RecoverySystem make_recovery_system(const GeneratorMatrix& g,
                                    std::vector<std::vector<RecoverySet>> sets);

/// |R_i^all(G)|, via inclusion-exclusion over the upward closures of R_i^min.
std::uint64_t all_recovery_supersets_count(const GeneratorMatrix& g, int i);

}   // namespace srr

#endif
