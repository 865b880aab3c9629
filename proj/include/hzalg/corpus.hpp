#pragma once

// Seeded random spectra, maps and equivariant complexes for the suites.

#include "hzalg/functors.hpp"
#include "hzalg/random.hpp"

namespace hzalg {

/// Non-negative complex on [0, 1] of rank <= 2.
ChainComplex random_small_complex(Rng& rng, bool torsion = false);
/// Cokernel of a nonzero F_1 K -> F_0 K'.
ChainSpectrum random_two_cell(Rng& rng, std::size_t truncation);
/// A quasi-isomorphism Y -> Y (+) D^k, (id, g) with g random.
ChainMap random_quasi_iso(Rng& rng, const ChainComplex& y);
/// Cycles through split maps (id, g) : X -> X (+) F_m D^k, F_m of a
/// quasi-isomorphism, and R of a quasi-isomorphism.
ChainSpectrumMap random_level_equivalence(Rng& rng, std::size_t truncation, std::size_t index);
/// Level n of a free, symmetric-power, R or two-cell spectrum.
EquivariantComplex random_equivariant(Rng& rng, std::size_t n, std::size_t index);

}  // namespace hzalg
