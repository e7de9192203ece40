#ifndef SRR_OUTER_BOUNDS_HPP
#define SRR_OUTER_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "srr/code_analysis.hpp"
#include "srr/exact_polyhedra.hpp"
#include "srr/srr_core.hpp"

namespace srr {

enum class BoundKind
{
    HalfSpace,
    PiecewiseLinear,
    ScalarCap
};

const char* to_string(BoundKind kind);

/**
 * f(x) = low_slope * min(x, breakpoint) + high_slope * max(0, x - breakpoint)
 * for x >= 0.  A purely linear term has breakpoint 0.
 */
struct PiecewiseTerm
{
    Rational low_slope;
    Rational breakpoint;
    Rational high_slope;

    Rational at(const Rational& x) const;
    static PiecewiseTerm linear(const Rational& slope) { return {0, 0, slope}; }
};

struct BoundEvaluation
{
    Rational lhs;
    Rational rhs;
    bool satisfied = false;
};

/// Auxiliary quantities a bound was built from.  Objects are 1-based.
struct BoundMetadata
{
    std::optional<int> dual_distance;
    std::vector<int> systematic;                 ///< s
    std::vector<std::optional<Rational>> mu;     ///< mu_i; nullopt where the quotient is 0/0
    std::vector<int> uniform_objects;            ///< J
    std::vector<int> objects;                    ///< I of a hyperplane bound
    std::vector<Element> normal;                 ///< witness hyperplane
    VectorQ weights;                             ///< b of a clipped half-space
    std::vector<int> order;                      ///< Dantzig permutation, 0-based over A(R)
    std::optional<int> critical;                 ///< Dantzig r
    std::optional<Rational> sigma;
    std::vector<std::string> flags;
};

/**
 * sum_i terms[i](lambda_i) + constant <= rhs, for lambda >= 0.  Half-spaces
 * use linear terms only.
 */
struct BoundReport
{
    std::string name;
    BoundKind kind = BoundKind::PiecewiseLinear;
    std::string description;
    std::vector<PiecewiseTerm> terms;
    Rational constant;
    Rational rhs;
    BoundMetadata metadata;

    BoundEvaluation evaluate(const DemandVector& lambda) const;
    /// {lambda >= 0 : bound holds}, one row per linearization cell, irredundant.
    HPolytope polytope() const;
};

/// sum_i sum_R |R| lambda_{i,R} <= mu n.
BoundEvaluation total_capacity_check(const FractionalAllocation& a, int n, const Rational& mu);

/// sum_i min{lambda_i, 1} + (d_dual - 1) max{0, lambda_i - 1} <= n.  Throws NotSystematic.
BoundReport dual_distance_bound(const GeneratorMatrix& g);

/// sum_i min{lambda_i, s_i} + 2 max{0, lambda_i - s_i} <= n.  Throws NotSystematic.
BoundReport systematic_node_bound(const GeneratorMatrix& g);

/// Systematic-node terms weighted by max{2, d_dual - 1}; 2 lambda_i when s_i = 0.
BoundReport hybrid_bound(const GeneratorMatrix& g);

/**
 * Refinement of the hybrid bound for objects whose non-singleton minimal
 * sets share one size.  Objects served only by systematic nodes keep the
 * hybrid term and carry a DivisionByZero flag.
 */
BoundReport uniform_size_bound(const GeneratorMatrix& g, const RecoverySystem& minimal);

/**
 * sum_{i in I} lambda_i <= min |S \ H| over hyperplanes H avoiding every e_i,
 * i in I.  I = {} gives the trivial rhs n.
 */
BoundReport hyperplane_bound(const GeneratorMatrix& g, const std::vector<int>& objects);

/// max c x over the knapsack relaxation {x in [0,1]^m : y(R) x <= n} of A(R).
DantzigResult clipped_sum_bound(const RecoverySystem& system, const VectorQ& c);

/// b . lambda <= rhs, with c lifted blockwise from b.
BoundReport clip_srr_bound(const RecoverySystem& system, const VectorQ& b);

/// min{lambda / k, delta}, an upper bound on h; k is the number of axis maxima.
Rational hcube_cap(const RegionParams& params);

/// ((k-1)/k) lambda^* lambda + lambda^2 / k, an upper bound on lambda^2(R).
Rational bhatia_davis_cap(const RegionParams& params, int k);

/// k + (n - k) / k.
Rational mds_maxsum_cap(int k, int n);

struct BoundSet
{
    std::vector<BoundReport> bounds;
    /// Bounds that do not apply to this matrix, with the reason.
    std::vector<std::pair<std::string, std::string>> skipped;
};

/// Names accepted by all_bounds.
const std::vector<std::string>& bound_names();

/**
 * The requested bounds ("dual", "sysnode", "hybrid", "uniform", "hyperplane",
 * "clip"); an empty list means all.  Hyperplane bounds cover every singleton
 * and the full object set; clip covers every b in {0,1}^k plus extra_b.
 */
BoundSet all_bounds(const GeneratorMatrix& g, const RecoverySystem& minimal, const std::vector<std::string>& names = {},
                    const std::vector<VectorQ>& extra_b = {});

}   // namespace srr

#endif
