#ifndef SRR_SRR_CORE_HPP
#define SRR_SRR_CORE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "srr/exact_polyhedra.hpp"
#include "srr/recovery.hpp"

namespace srr {

/// Demand vectors (lambda_1, ..., lambda_k) are plain rational vectors.
using DemandVector = VectorQ;

/// Coordinates of A(R): pairs (object i, set R) in object-major order.
struct AllocationIndex
{
    int k = 0;
    int n = 0;
    std::vector<std::pair<int, RecoverySet>> entries;
    std::vector<int> block_start;   ///< size k + 1; block of object i is [start[i-1], start[i])

    static AllocationIndex of(const RecoverySystem& system);

    int size() const { return static_cast<int>(entries.size()); }
    /// Coordinate of (i, r), or -1.
    int find(int i, const RecoverySet& r) const;
};

struct FractionalAllocation
{
    AllocationIndex index;
    VectorQ values;   ///< lambda_{i,R}
    Rational mu;

    /// Per-object sums, the service rate of the allocation.
    VectorQ rates() const;
    /// Per-server load, indexed by server - 1.
    VectorQ loads() const;
    /// Nonnegative with every load at most mu.
    bool feasible() const;
};

struct IntegerAllocation
{
    AllocationIndex index;
    std::vector<Integer> counts;   ///< alpha_i(R)
    Integer s;                     ///< number of uses (per-server capacity)

    /// delta_nu(R, alpha), indexed by server - 1.
    std::vector<Integer> loads() const;
    /// lambda(alpha), the integer rate vector.
    std::vector<Integer> rates() const;
    bool feasible() const;
};

/// n server rows followed by m(R) nonnegativity rows.
HPolytope allocation_polytope(const RecoverySystem& system, const Rational& mu);

/// The k x m(R) summation map f.
MatrixQ summation_map(const AllocationIndex& index);

struct MembershipResult
{
    bool inside = false;
    LPStatus status = LPStatus::Infeasible;
    std::optional<FractionalAllocation> certificate;
};

/// Phase-1 feasibility of constraints (1)-(3); the certificate is exact.
MembershipResult srr_membership(const RecoverySystem& system, const Rational& mu, const DemandVector& lambda);

/// Scales by the lcm of the value denominators.
IntegerAllocation to_integer_allocation(const FractionalAllocation& a);

/**
 * s * Lambda_1(R, s): every integer rate vector of a feasible integer
 * allocation with loads at most s, sorted and duplicate-free.  Throws
 * TooLarge when the search is beyond the guard.
 */
std::vector<std::vector<int>> one_shot_region(const RecoverySystem& system, int s);

struct Region
{
    HPolytope h;
    VPolytope v;
};

enum class ProjectionMethod
{
    FourierMotzkin,
    SupportHull   ///< iterative hull from LP support queries
};

struct RegionOptions
{
    ProjectionMethod method = ProjectionMethod::SupportHull;
    FMOptions fm;
};

/// Lambda(R, mu) as matching H- and V-representations.
Region region_polytope(const RecoverySystem& system, const Rational& mu, const RegionOptions& options = {});

struct RegionParams
{
    Rational max_sum;                                 ///< lambda(R)
    std::vector<std::pair<int, Rational>> r_max_sum;  ///< (r, lambda^r(R)) for r >= 2
    VectorQ axis_maxima;                              ///< lambda_i^*(R)
    Rational max_axis;                                ///< lambda^*(R)
    Rational hypercube;                               ///< h(R)
    Rational simplex;                                 ///< delta(R)
    std::optional<Rational> volume;
};

/**
 * Shape parameters at mu = 1.  lambda^r for r >= 2 is maximized over the
 * region's vertices, computed on demand unless a region is supplied.
 */
RegionParams region_params(const RecoverySystem& system, const std::vector<int>& rs = {},
                           const Region* region = nullptr);

/// Optimum of c . lambda over Lambda(R, mu) via the lifted allocation LP.
LPOutcome optimize_rates(const RecoverySystem& system, const Rational& mu, const VectorQ& c);

/// chi(lambda) . lambda <= n + (k-1)(k - |lambda_{<1}|); RegimeViolation when n < 2k.
bool mds_region_membership(int k, int n, const DemandVector& lambda);

enum class VolumeFormula
{
    Mds2,
    Mds3,
    Replication
};

/// (n^2+4n)/8, (n^3+18n^2+54n-18)/162, or the product of s_i.
Rational closed_form_volume(VolumeFormula kind, int n, const std::vector<int>& s = {});

/// All a-subsets of {1..b} for every object, as a G-system of G^{a,b}_alpha.
RecoverySystem all_subsets_system(int a, int b);

/**
 * Spreads each lambda_i evenly over the C(b, a) a-subsets.  Throws
 * DemandTooLarge when sum lambda_i > b / a.
 */
FractionalAllocation rs_uniform_allocation(int a, int b, std::uint32_t q, Element alpha, const DemandVector& lambda);

}   // namespace srr

#endif
