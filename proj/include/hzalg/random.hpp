#pragma once

// Seeded generators for small test objects (entries in [-3, 3], ranks <= 3).

#include "hzalg/chain.hpp"
#include "hzalg/simplicial.hpp"

#include <random>

namespace hzalg {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);

/// Random complex on [lo, hi].  With `torsion`, some degrees are quotients
/// t * Z^k with the t's chosen so that d carries relations into relations.
ChainComplex random_complex(Rng& rng, Ring ring, int lo, int hi, bool torsion,
                            Grading grading = Grading::Unbounded, std::size_t max_rank = 3);

/// Random element of the chain map group, as a combination of generators.
ChainMap random_chain_map(Rng& rng, const ChainComplex& source, const ChainComplex& target);

/// Product of a few elementary integer operations (determinant +-1).
Matrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps);

/// Sum of Gamma of a random complex and a reduced sphere, in scrambled
/// coordinates.  Free unless `torsion`.
SimplicialAbelianGroup random_simplicial_group(Rng& rng, Ring ring, std::size_t truncation, bool torsion);

}  // namespace hzalg
