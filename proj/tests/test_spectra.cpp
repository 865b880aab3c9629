#include "doctest.h"
#include "hzalg/random.hpp"
#include "hzalg/spectra.hpp"

using namespace hzalg;

namespace {

const ChainComplex z0 = sphere(0, Ring::Integers, Grading::NonNegative);

ChainComplex small_complex(Rng& rng, Grading g = Grading::NonNegative) {
  return random_complex(rng, Ring::Integers, 0, 1, false, g, 2);
}

}  // namespace

TEST_CASE("sphere spectrum is Sym(Z[1]) with the sign action") {
  const std::size_t l = 3;
  ChainSpectrum s = sphere_spectrum(Ring::Integers, l);
  CHECK(s.validate());
  ChainSequence sym = sym_sequence(sphere(1, Ring::Integers, Grading::NonNegative), l);
  CHECK(sym.validate());
  for (std::size_t n = 0; n <= l; ++n) {
    CHECK(same_complex(s.level(n), sym.level(n)));
    CHECK(s.level(n).generators(int(n)) == 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      CHECK(s.action(n, i).component(int(n)) == Matrix{{-1}});
      CHECK(sym.action(n, i).component(int(n)) == Matrix{{-1}});
    }
  }
}

TEST_CASE("free spectra") {
  const std::size_t l = 3;
  ChainSpectrum f1 = free_spectrum(1, z0, l);
  CHECK(f1.validate());
  CHECK(f1.level(0).empty());
  CHECK(f1.level(2).generators(1) == 2);
  CHECK(f1.level(3).generators(2) == 3);
  CHECK_FALSE(omega_check(f1));
  CHECK(omega_check(sphere_spectrum(Ring::Integers, l)));

  ChainSpectrum f2 = free_spectrum(2, z0, l);
  CHECK(f2.validate());
  CHECK(f2.level(2).generators(0) == 2);
  CHECK(f2.level(3).generators(1) == 6);

  Rng rng(11);
  for (int trial = 0; trial < 3; ++trial) {
    ChainComplex k = small_complex(rng);
    for (std::size_t m = 0; m <= 2; ++m) CHECK(free_spectrum(m, k, l).validate());
  }
}

TEST_CASE("sequence tensor product and coherence") {
  const std::size_t l = 3;
  ChainSequence a = sphere_spectrum(Ring::Integers, l).seq;
  ChainSequence b = free_spectrum(1, z0, l).seq;
  ChainSequence ab = seq_tensor(a, b);
  CHECK(ab.validate());
  CHECK(seq_tensor(b, b).validate());
  auto assoc = seq_associator(a, b, a);
  ChainSequence left = seq_tensor(ab, a), right = seq_tensor(a, seq_tensor(b, a));
  CHECK(is_equivariant(left, right, assoc));
  for (const auto& f : assoc) CHECK(f.is_iso());
  auto lu = seq_left_unitor(b), ru = seq_right_unitor(b);
  ChainSequence u = unit_sequence(Ring::Integers, l);
  CHECK(is_equivariant(seq_tensor(u, b), b, lu));
  CHECK(is_equivariant(seq_tensor(b, u), b, ru));
  for (std::size_t n = 0; n <= l; ++n) {
    CHECK(lu[n].is_iso());
    CHECK(ru[n].is_iso());
  }
}

TEST_CASE("free extension is a spectrum map and restricts to g") {
  const std::size_t l = 3;
  Rng rng(5);
  ChainSpectrum x = direct_sum(free_spectrum(1, small_complex(rng), l), sphere_spectrum(Ring::Integers, l));
  REQUIRE(x.validate());
  for (std::size_t m = 0; m <= 2; ++m) {
    ChainComplex k = small_complex(rng);
    ChainMap g = random_chain_map(rng, k, x.level(m));
    ChainSpectrumMap f = free_extension(m, k, x, g);
    CHECK(f.validate());
    CHECK(compose(f.levels[m], free_unit(m, f.source, k)).equals(g));
  }
}

TEST_CASE("maps out of a free spectrum are maps into a level") {
  const std::size_t l = 2;
  Rng rng(8);
  ChainSpectrum x = direct_sum(free_spectrum(1, small_complex(rng), l), free_spectrum(0, small_complex(rng), l));
  for (std::size_t m = 0; m <= 2; ++m) {
    ChainComplex k = small_complex(rng);
    ChainSpectrum fm = free_spectrum(m, k, l);
    SpectrumMapGroup maps(fm, x);
    CHECK(maps.group().to_string() == chain_map_group(k, x.level(m)).to_string());
    for (std::size_t i = 0; i < maps.generator_count(); ++i) {
      ChainSpectrumMap f = maps.generator(i);
      CHECK(f.validate());
      ChainMap g = compose(f.levels[m], free_unit(m, fm, k));
      CHECK(equal_maps(free_extension(m, k, x, g), f));
    }
  }
}

TEST_CASE("smash of free spectra") {
  const std::size_t l = 3;
  ChainSpectrum f1 = free_spectrum(1, z0, l), f0 = sphere_spectrum(Ring::Integers, l);
  ChainSpectrum s = smash(f1, f1);
  CHECK(s.validate());
  ChainSpectrum f2 = free_spectrum(2, tensor(z0, z0), l);
  for (std::size_t n = 0; n <= l; ++n)
    for (int d = 0; d <= int(n); ++d)
      CHECK(level_homology(s, n, d).to_string() == level_homology(f2, n, d).to_string());
  ChainSpectrum u = smash(f0, f1);
  CHECK(u.validate());
  for (std::size_t n = 0; n <= l; ++n)
    for (int d = 0; d <= int(n); ++d)
      CHECK(level_homology(u, n, d).to_string() == level_homology(f1, n, d).to_string());
  CHECK(spectrum_map_group(f2, s).to_string() == spectrum_map_group(f2, f2).to_string());
  CHECK(spectrum_map_group(f2, f2).to_string() == "Z^2");
}

TEST_CASE("cokernels and connective prolongation") {
  const std::size_t l = 2;
  Rng rng(3);
  ChainSpectrum x = free_spectrum(0, small_complex(rng), l);
  ChainComplex k = small_complex(rng);
  ChainSpectrumMap f = free_extension(1, k, x, random_chain_map(rng, k, x.level(1)));
  SpectrumQuotient q = cokernel(f);
  CHECK(q.spectrum.validate());
  CHECK(q.projection.validate());

  ChainSpectrum full = include_i(x);
  CHECK(full.validate());
  ChainSpectrum c = connective_prolong(full);
  CHECK(c.validate());
  CHECK(connective_prolong_counit(full).validate());
  ChainSpectrumMap unit = connective_prolong_unit(x);
  CHECK(unit.validate());
  CHECK(is_iso(unit));
  CHECK(f_zero_counit(x).validate());
}
