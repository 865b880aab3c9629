#pragma once

// The adjoint pair D -| R between chain spectra and chain complexes, the
// comparison DX (x) DY -> D(X ^ Y), and complexes with a symmetric group action.

#include "hzalg/spectra.hpp"

#include <vector>

namespace hzalg {

/// Finite sets 0..L and all injections between them.
struct InjectionDiagram {
  struct Arrow {
    std::size_t from;
    std::size_t to;
    Perm image;  // image[j] is where j goes
  };
  std::size_t bound = 0;
  std::vector<Arrow> arrows;  // by (from, to), images lexicographic

  explicit InjectionDiagram(std::size_t bound);
  std::size_t count(std::size_t n, std::size_t m) const;
  /// Every composite of two arrows is again an arrow.
  bool composition_closed() const;
};

/// shift(X_n, -n) -> shift(X_m, -m) for the injection `image` : n -> m.  The
/// standard inclusion onto the last n positions is shift(sigma^{m-n}, -m); a
/// general one precomposes with the sign-twisted permutation action.
ChainMap diagram_map(const ChainSpectrum& x, const Perm& image, std::size_t m);

/// The colimit over injections between 0..L, as a presentation and in
/// simplified form.
struct TruncatedColimit {
  ChainComplex result;
  std::size_t exactness_bound = 0;

  std::vector<ChainComplex> parts;  // shift(X_n, -n), n <= L
  ChainComplex sum;                 // direct_sum(parts)
  ChainComplex presented;           // sum modulo the diagram relations
  ChainMap projection;              // sum -> presented
  ChainMap to_result;               // presented -> result
  ChainMap from_result;             // result -> presented

  /// shift(X_n, -n) -> result.
  ChainMap inclusion(std::size_t n) const;
};

TruncatedColimit functor_D(const ChainSpectrum& x, std::size_t bound);
inline TruncatedColimit functor_D(const ChainSpectrum& x) { return functor_D(x, x.truncation()); }
ChainMap functor_D(const ChainSpectrumMap& f, const TruncatedColimit& dsource, const TruncatedColimit& dtarget);
ChainMap functor_D(const ChainSpectrumMap& f);

/// Level m is connective_cover(shift(Y, m)) with the sign action.
ChainSpectrum functor_R(const ChainComplex& y, std::size_t truncation);
ChainSpectrumMap functor_R(const ChainMap& g, std::size_t truncation);

/// dx must be functor_D(x) at the full truncation of x.
ChainMap transpose_to_chain(const ChainSpectrumMap& f, const TruncatedColimit& dx, const ChainComplex& y);
ChainSpectrumMap transpose_to_spectrum(const ChainMap& g, const ChainSpectrum& x, const TruncatedColimit& dx);
/// X -> R D X.
ChainSpectrumMap unit(const ChainSpectrum& x);
/// D R Y -> Y.
ChainMap counit(const ChainComplex& y, std::size_t truncation);

/// counit_{DX} o D(unit_X) = id and R(counit_Y) o unit_{RY} = id.
bool triangle_identity_D(const ChainSpectrum& x);
bool triangle_identity_R(const ChainComplex& y, std::size_t truncation);

/// D_{lx} X (x) D_{ly} Y -> D_L(X ^ Y), induced by X_p (x) Y_q -> (X ^ Y)_{p+q}
/// with the sign (-1)^{qa}, a the degree in shift(X_p, -p).  Needs lx + ly <= L.
struct Gamma {
  TruncatedColimit dx;
  TruncatedColimit dy;
  TruncatedColimit dxy;
  ChainMap map;
};
Gamma gamma_monoidal(const ChainSpectrum& x, std::size_t lx, const ChainSpectrum& y, std::size_t ly);

/// Sigma_n acting on a complex through adjacent transpositions.
struct EquivariantComplex {
  ChainComplex complex;
  std::size_t n = 0;
  std::vector<ChainMap> actions;

  bool validate() const;
};

EquivariantComplex level_action(const ChainSpectrum& x, std::size_t n);
EquivariantComplex base_change_Q(const EquivariantComplex& c);
/// C / (t_i - 1).
ChainComplex coinvariants(const EquivariantComplex& c);
/// (H_k C) / (t_i - 1).
FpGroup homology_coinvariants(const EquivariantComplex& c, int k);
/// Z_sign in degree 1 -> Z[Sigma_2] in degree 0, 1 |-> e - t.
EquivariantComplex sign_counterexample(Ring ring = Ring::Integers);

/// (f, g) : X -> A (+) B.
ChainSpectrumMap spectrum_pair(const ChainSpectrumMap& f, const ChainSpectrumMap& g);

}  // namespace hzalg
