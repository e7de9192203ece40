#ifndef SRR_TEST_FIXTURES_HPP
#define SRR_TEST_FIXTURES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "srr/generator_matrix.hpp"

namespace fixtures {

using srr::Element;
using srr::GeneratorMatrix;

GeneratorMatrix make(std::uint32_t q, int k, int n, std::vector<Element> entries);

/// [[1,0,1,1],[0,1,0,0]] over F_2: a replication matrix with s = (3,1).
GeneratorMatrix g1();
/// 3 x 6 over F_3 with identity block.
GeneratorMatrix g2();
/// Systematic 2 x 4 MDS matrix over F_3.
GeneratorMatrix pentagon();
/// 3 x 4 over F_2 where h is strictly below min(lambda/k, delta).
GeneratorMatrix hypercube_gap();
/// [I_3 | 1] over F_2.
GeneratorMatrix parity3();
/// Binary simplex code generator, 3 x 7.
GeneratorMatrix simplex();
/// 3 x 6 over F_3 with s = (0,1,0) and dual distance 2.
GeneratorMatrix uneven();
/// 2 x 8 over F_3 used for weighted clipped-sum bounds.
GeneratorMatrix wide();
/// Non-systematic 2 x 4 MDS matrix over F_7 with max-sum 2.
GeneratorMatrix nonsystematic_f7();

/// [I_k | Vandermonde tail] over the smallest prime field where it is MDS.
GeneratorMatrix systematic_mds(int k, int n);

/// Replication matrix with s_i copies of e_i, columns shuffled by rng.
GeneratorMatrix replication(const std::vector<int>& s, std::mt19937& rng);

struct Named
{
    std::string name;
    GeneratorMatrix g;
};

/// Every small fixture above, for sweeps.
std::vector<Named> all();

}   // namespace fixtures

#endif
