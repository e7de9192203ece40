#ifndef SRR_CODE_ANALYSIS_HPP
#define SRR_CODE_ANALYSIS_HPP

#include <optional>
#include <vector>

#include "srr/generator_matrix.hpp"
#include "srr/recovery.hpp"

namespace srr {

/// Minimum Hamming weight of a nonzero codeword xM.  Guard: q^rows <= 2^24.
int codeword_min_distance(const FFMatrix& m);

int min_distance(const GeneratorMatrix& g);

/// (n-k) x n parity-check matrix H with G H^T = 0.
FFMatrix dual_matrix(const GeneratorMatrix& g);

/// Minimum distance of the dual code; n + 1 when the dual code is {0}.
int dual_min_distance(const GeneratorMatrix& g);

/// Every k columns linearly independent.
bool is_mds(const GeneratorMatrix& g);

struct SystematicProfile
{
    bool is_systematic = false;   ///< first k columns form the identity
    std::vector<int> s;           ///< s_i: columns that are nonzero multiples of e_i
    bool is_replication = false;  ///< every column is systematic
};

SystematicProfile systematic_profile(const GeneratorMatrix& g);

/**
 * Largest t such that every object has t + 1 pairwise disjoint recovery sets,
 * found by exact set packing over the supplied minimal system.  Throws
 * NotSystematic.
 */
int availability(const GeneratorMatrix& g, const RecoverySystem& minimal);

/// Largest number of pairwise disjoint sets in the collection.
int max_disjoint_sets(const std::vector<RecoverySet>& sets);

struct Hyperplane
{
    std::vector<Element> normal;   ///< first nonzero coordinate is 1
    int points = 0;                ///< columns of G (with multiplicity) on the hyperplane
};

struct HyperplaneStats
{
    std::vector<Hyperplane> hyperplanes;
    int max_points = 0;
};

/// All hyperplanes of PG(k-1, q).  Guard: (q^k - 1)/(q - 1) <= 2^20.
HyperplaneStats pg_hyperplane_stats(const GeneratorMatrix& g);

/// Projective normals (first nonzero coordinate 1) of length k over the field.
std::vector<std::vector<Element>> projective_points(const FieldContext& field, int k);

/**
 * a x b matrix with entry (r, c) = alpha^{(r-1)(c-1)}.  Throws
 * ValidationError unless 2 <= a < b, FieldTooSmall unless b < q,
 * NotPrimitive unless alpha generates F_q^*.
 */
GeneratorMatrix rs_matrix(int a, int b, const FieldContext& field, Element alpha);
GeneratorMatrix rs_matrix(int a, int b, std::uint32_t q, Element alpha);

struct CodeProfile
{
    int n = 0;
    int k = 0;
    std::uint32_t q = 0;
    int d = 0;
    int d_dual = 0;
    bool is_mds = false;
    bool is_systematic = false;
    bool is_replication = false;
    std::vector<int> s;
    std::optional<int> availability_t;   ///< only for systematic G
    int max_hyperplane_points = 0;
};

CodeProfile code_profile(const GeneratorMatrix& g, const RecoverySystem& minimal);

}   // namespace srr

#endif
