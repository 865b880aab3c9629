#include "hzalg/corpus.hpp"

namespace hzalg {
namespace {

ChainComplex with_sphere(Rng& rng, int degree) {
  return direct_sum(sphere(degree, Ring::Integers, Grading::NonNegative), random_small_complex(rng))
      .with_grading(Grading::NonNegative);
}

ChainSpectrumMap random_spectrum_map(Rng& rng, const ChainSpectrum& x, const ChainSpectrum& y) {
  SpectrumMapGroup hom(x, y);
  std::vector<long> c;
  for (std::size_t i = 0; i < hom.generator_count(); ++i) c.push_back(uniform(rng, -2, 2));
  return hom.combination(c);
}

}  // namespace

ChainComplex random_small_complex(Rng& rng, bool torsion) {
  return random_complex(rng, Ring::Integers, 0, 1, torsion, Grading::NonNegative, 2);
}

ChainSpectrum random_two_cell(Rng& rng, std::size_t l) {
  ChainComplex k = with_sphere(rng, 1), k0 = with_sphere(rng, 0);
  ChainSpectrum x = free_spectrum(0, k0, l);
  ChainMap g = ChainMap::zero(k, x.level(1));
  for (int tries = 0; tries < 20 && g.equals(ChainMap::zero(k, x.level(1))); ++tries)
    g = random_chain_map(rng, k, x.level(1));
  return cokernel(free_extension(1, k, x, g)).spectrum;
}

ChainMap random_quasi_iso(Rng& rng, const ChainComplex& y) {
  const int lo = y.empty() ? 0 : y.lo(), hi = y.empty() ? 1 : y.hi() + 1;
  const int k = int(uniform(rng, y.grading() == Grading::NonNegative ? std::max(lo, 1) : lo, std::max(hi, 1)));
  ChainComplex d = disk(k, y.ring(), y.grading());
  ChainComplex sum = direct_sum(y, d).with_grading(y.grading());
  return block_map({y}, y, {y, d}, sum, {{0, 0, ChainMap::identity(y)}, {1, 0, random_chain_map(rng, y, d)}});
}

ChainSpectrumMap random_level_equivalence(Rng& rng, std::size_t l, std::size_t index) {
  switch (index % 3) {
    case 0: {
      ChainSpectrum x = random_two_cell(rng, l);
      const std::size_t m = uniform(rng, 0, 1);
      ChainSpectrum a = free_spectrum(m, disk(int(uniform(rng, 1, 2)), Ring::Integers, Grading::NonNegative), l);
      return spectrum_pair(identity_map(x), random_spectrum_map(rng, x, a));
    }
    case 1: {
      const std::size_t m = uniform(rng, 0, std::min<long>(2, long(l)));
      return free_spectrum(m, random_quasi_iso(rng, random_small_complex(rng)), l);
    }
    default:
      return functor_R(random_quasi_iso(rng, random_complex(rng, Ring::Integers, -1, 1, false, Grading::Unbounded, 2)), l);
  }
}

EquivariantComplex random_equivariant(Rng& rng, std::size_t n, std::size_t index) {
  switch (index % 4) {
    case 0:
      return level_action(free_spectrum(uniform(rng, 0, long(n)), random_small_complex(rng, true), n), n);
    case 1: {
      ChainSequence s = sym_sequence(random_complex(rng, Ring::Integers, 0, 1, false, Grading::NonNegative, 1), n);
      EquivariantComplex out{s.level(n), n, {}};
      for (std::size_t i = 0; i + 1 < n; ++i) out.actions.push_back(s.action(n, i));
      return out;
    }
    case 2:
      return level_action(functor_R(random_complex(rng, Ring::Integers, -2, 1, true), n), n);
    default:
      return level_action(random_two_cell(rng, std::max<std::size_t>(n, 1)), n);
  }
}

}  // namespace hzalg
