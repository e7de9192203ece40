#ifndef SRR_EXACT_POLYHEDRA_HPP
#define SRR_EXACT_POLYHEDRA_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "srr/linear_program.hpp"
#include "srr/rational.hpp"

namespace srr {

/// {x : A x <= b}.  Nonnegativity, when wanted, appears as explicit rows.
struct HPolytope
{
    MatrixQ A;
    VectorQ b;

    HPolytope() = default;
    HPolytope(MatrixQ a, VectorQ rhs);

    int dim() const { return static_cast<int>(A.cols()); }
    int num_constraints() const { return static_cast<int>(A.rows()); }

    bool contains(const VectorQ& x) const;
    /// Indices of constraints satisfied with equality at x.
    std::vector<int> tight(const VectorQ& x) const;

    /// Appends a x <= rhs.
    void add_row(const RowVectorQ& a, const Rational& rhs);
};

/// Convex hull of a finite point set, stored sorted and duplicate-free.
struct VPolytope
{
    int dim = 0;
    std::vector<VectorQ> vertices;

    /// Sorts vertices lexicographically and drops duplicates.
    void canonicalize();
};

// --- exact dense helpers ---------------------------------------------------

int exact_rank(const MatrixQ& m);
Rational exact_determinant(MatrixQ m);
/// Solves M x = rhs for square nonsingular M; nullopt when singular.
std::optional<VectorQ> exact_solve(MatrixQ m, VectorQ rhs);

// --- linear programming ------------------------------------------------------

/// Optimizes c x over P.  Coordinates with an explicit -x_j <= 0 row are
/// treated as sign-constrained; the others are free.
LPOutcome lp_solve(const HPolytope& p, const VectorQ& c, Sense sense);

/// Every coordinate bounded above and below over P (P nonempty).
bool is_bounded(const HPolytope& p);

/// Drops constraints implied by the others (one LP per constraint),
/// after normalizing rows and merging parallel duplicates.
HPolytope remove_redundant(const HPolytope& p);

// --- projection ----------------------------------------------------------------

struct FMOptions
{
    std::uint64_t max_constraints = 50000;   ///< scaled by SRR_GUARD_SCALE
    /// Intermediate systems larger than this (and twice the last pruned size)
    /// are reduced with one LP per row before the next elimination.
    std::size_t prune_threshold = 400;
};

/// Statistics of the last elimination, for diagnostics.
struct FMStats
{
    int eliminated = 0;
    std::uint64_t peak_constraints = 0;
    std::uint64_t redundancy_lps = 0;
};

/**
 * Image of P under y = L x, by substituting the defining equalities and
 * Fourier-Motzkin eliminating the remaining x coordinates.  Each step
 * discards combinations ruled out by Chernikov's history test (with implicitly
 * eliminated variables counted) and merges parallel rows; LP redundancy
 * removal runs when the system grows past prune_threshold and once at the
 * end.  Throws Explosion when the constraint count passes the cap.
 */
HPolytope fm_project(const HPolytope& p, const MatrixQ& map, const FMOptions& options = {},
                     FMStats* stats = nullptr);

/// Projection onto the listed coordinates, in the given order.
HPolytope fm_project(const HPolytope& p, const std::vector<int>& keep, const FMOptions& options = {},
                     FMStats* stats = nullptr);

// --- vertices, facets, volume ---------------------------------------------------

/**
 * All vertices of a bounded P, by walking the graph of feasible bases from
 * an LP vertex.  Throws EmptyPolytope, TooManyBases or ValidationError
 * (unbounded direction).
 */
VPolytope enumerate_vertices(const HPolytope& p, std::uint64_t max_bases = 200000);

/// Facet description of conv(V) for full-dimensional V (m-subset search).
HPolytope facets_from_vertices(const VPolytope& v);

/// No vertex lies in the convex hull of the others (LP separation).
bool is_irredundant(const VPolytope& v);

struct VolumeResult
{
    Rational value;
    bool degenerate = false;   ///< not full-dimensional: value is 0
};

/// |det(v_1 - v_0, ..., v_m - v_0)| / m!
Rational simplex_volume(const std::vector<VectorQ>& points);

/// Volume by fan triangulation over the face lattice of P = conv(V).
VolumeResult volume(const HPolytope& h, const VPolytope& v);
VolumeResult volume(const VPolytope& v);
VolumeResult volume(const HPolytope& h);

/// Volume of {x in [0,1]^m : y x <= cap} by the signed vertex sum.
Rational knapsack_volume(const VectorQ& y, const Rational& cap);

/// {x in [0,1]^m : y x <= cap} as an HPolytope.
HPolytope knapsack_polytope(const VectorQ& y, const Rational& cap);

struct DantzigResult
{
    Rational value;
    VectorQ x;
    std::vector<int> order;   ///< 0-based permutation by c_j / y_j, descending
    int r = 0;                ///< 1-based critical position; m + 1 when all items fit
    Rational sigma;           ///< fractional fill at position r
};

/**
 * max{c x : x in [0,1]^m, y x <= cap} by the greedy ratio rule.  Throws
 * NegativeObjective for c with a negative entry and ValidationError for
 * nonpositive y or negative cap.
 */
DantzigResult dantzig_max(const VectorQ& c, const VectorQ& y, const Rational& cap);

}   // namespace srr

#endif
