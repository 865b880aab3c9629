#include "doctest.h"
#include "hzalg/corpus.hpp"

using namespace hzalg;

namespace {

const ChainComplex z0 = sphere(0, Ring::Integers, Grading::NonNegative);

// Groups agree in every degree of either support.
bool same_groups(const ChainComplex& a, const ChainComplex& b) {
  const int lo = std::min(a.empty() ? 0 : a.lo(), b.empty() ? 0 : b.lo());
  const int hi = std::max(a.empty() ? 0 : a.hi(), b.empty() ? 0 : b.hi());
  for (int n = lo; n <= hi; ++n)
    if (!a.group(n).isomorphic(b.group(n))) return false;
  return true;
}

// shift(K, -m) -> D(F_m K) through the identity summand at level m.
ChainMap free_comparison(std::size_t m, const ChainComplex& k, const ChainSpectrum& fm, const TruncatedColimit& d) {
  ChainMap u = shift(free_unit(m, fm, k), -int(m));
  return compose(d.inclusion(m), rewrap(u, shift(k, -int(m)), d.parts[m]));
}

}  // namespace

TEST_CASE("injection diagram") {
  for (std::size_t l = 0; l <= 4; ++l) {
    InjectionDiagram d(l);
    CHECK(d.composition_closed());
    for (std::size_t n = 0; n <= l; ++n)
      for (std::size_t m = n; m <= l; ++m) {
        std::size_t expect = 1;
        for (std::size_t j = m - n + 1; j <= m; ++j) expect *= j;
        CHECK(d.count(n, m) == expect);
      }
  }
}

TEST_CASE("diagram maps are functorial") {
  const std::size_t l = 3;
  Rng rng(4);
  ChainComplex k = random_complex(rng, Ring::Integers, 0, 1, false, Grading::NonNegative, 2);
  ChainSpectrum x = direct_sum(free_spectrum(1, k, l), sphere_spectrum(Ring::Integers, l));
  InjectionDiagram d(l);
  for (const auto& a : d.arrows)
    for (const auto& b : d.arrows) {
      if (b.from != a.to) continue;
      Perm c;
      for (std::size_t v : a.image) c.push_back(b.image[v]);
      ChainMap lhs = diagram_map(x, c, b.to);
      ChainMap rhs = compose(diagram_map(x, b.image, b.to), diagram_map(x, a.image, a.to));
      CHECK(lhs.equals(rhs));
    }
}

TEST_CASE("D of free spectra") {
  Rng rng(21);
  std::vector<ChainComplex> ks = {z0, sphere(2, Ring::Integers, Grading::NonNegative),
                                  disk(1, Ring::Integers, Grading::NonNegative),
                                  random_complex(rng, Ring::Integers, 0, 1, true, Grading::NonNegative, 2)};
  for (const auto& k : ks)
    for (std::size_t m = 0; m <= 2; ++m)
      for (std::size_t l : {m, m + 1}) {
        ChainSpectrum fm = free_spectrum(m, k, l);
        TruncatedColimit d = functor_D(fm, l);
        CHECK(d.exactness_bound == l);
        CHECK(same_groups(d.result, shift(k, -int(m))));
        CHECK(free_comparison(m, k, fm, d).is_iso());
      }
  CHECK(same_groups(functor_D(sphere_spectrum(Ring::Integers, 3)).result, sphere(0)));
  CHECK(functor_D(zero_spectrum(Ring::Integers, 2)).result.empty());
}

TEST_CASE("R is an Omega-spectrum with shifted homology") {
  Rng rng(2);
  const std::size_t l = 3;
  for (int trial = 0; trial < 4; ++trial) {
    ChainComplex y = random_complex(rng, Ring::Integers, -2, 2, true);
    ChainSpectrum r = functor_R(y, l);
    CHECK(r.validate());
    CHECK(omega_check(r));
    for (std::size_t m = 0; m <= l; ++m)
      for (int n = 0; n <= 3; ++n) CHECK(level_homology(r, m, n).isomorphic(homology(y, n - int(m))));
  }
  ChainSpectrum r = functor_R(sphere(-2), l);
  CHECK(r.level(1).empty());
  CHECK(level_homology(r, 3, 1).to_string() == "Z");
}

TEST_CASE("D -| R") {
  const std::size_t l = 2;
  Rng rng(9);
  std::vector<ChainSpectrum> xs = {free_spectrum(1, z0, l), free_spectrum(0, disk(2, Ring::Integers, Grading::NonNegative), l),
                                   free_spectrum(2, disk(1, Ring::Integers, Grading::NonNegative), l)};
  std::vector<ChainComplex> ys = {sphere(2), sphere(-1), random_complex(rng, Ring::Integers, -1, 1, true)};
  for (const auto& x : xs) {
    TruncatedColimit dx = functor_D(x);
    CHECK(triangle_identity_D(x));
    for (const auto& y : ys) {
      ChainSpectrum ry = functor_R(y, l);
      ChainMapGroup chain(dx.result, y);
      SpectrumMapGroup spec(x, ry);
      CHECK(chain.group().to_string() == spec.group().to_string());
      for (std::size_t i = 0; i < spec.generator_count(); ++i) {
        ChainSpectrumMap f = spec.generator(i);
        ChainMap g = transpose_to_chain(f, dx, y);
        CHECK(equal_maps(transpose_to_spectrum(g, x, dx), f));
      }
      for (std::size_t i = 0; i < chain.generator_count(); ++i) {
        ChainMap g = chain.generator(i);
        ChainSpectrumMap f = transpose_to_spectrum(g, x, dx);
        CHECK(f.validate());
        CHECK(transpose_to_chain(f, dx, y).equals(g));
      }
    }
  }
  for (const auto& y : ys) CHECK(triangle_identity_R(y, l));
}

TEST_CASE("gamma on free spectra") {
  const std::size_t l = 3;
  for (std::size_t m = 0; m <= 2; ++m)
    for (std::size_t n = 0; m + n <= l; ++n) {
      ChainSpectrum x = free_spectrum(m, z0, l), y = free_spectrum(n, disk(1, Ring::Integers, Grading::NonNegative), l);
      Gamma g = gamma_monoidal(x, m, y, n);
      CHECK(g.map.is_iso());
    }
}

TEST_CASE("coinvariants and homology") {
  EquivariantComplex c = sign_counterexample();
  REQUIRE(c.validate());
  CHECK(homology(coinvariants(c), 1).to_string() == "Z/2");
  CHECK(homology_coinvariants(c, 1).to_string() == "0");
  EquivariantComplex q = base_change_Q(c);
  CHECK(q.validate());
  CHECK(homology(coinvariants(q), 1).is_trivial());
}

TEST_CASE("gamma on two-cell spectra") {
  Rng rng(31);
  const std::size_t l = 2;
  for (int trial = 0; trial < 2; ++trial) {
    ChainSpectrum x = random_two_cell(rng, l), y = random_two_cell(rng, l);
    REQUIRE(x.validate());
    Gamma g = gamma_monoidal(x, 1, y, 1);
    CHECK(g.map.is_iso());
  }
}

TEST_CASE("R preserves and reflects quasi-isomorphisms") {
  Rng rng(12);
  const std::size_t l = 3;
  for (int trial = 0; trial < 6; ++trial) {
    ChainComplex y = random_complex(rng, Ring::Integers, -2, 1, true);
    ChainMap f = trial % 2 ? random_quasi_iso(rng, y) : random_chain_map(rng, y, random_complex(rng, Ring::Integers, -2, 1, true));
    ChainSpectrumMap rf = functor_R(f, l);
    CHECK(rf.validate());
    CHECK(is_level_equiv(rf) == is_quasi_iso(f));
  }
}

TEST_CASE("rational exactness of coinvariants and of D") {
  Rng rng(17);
  for (std::size_t i = 0; i < 8; ++i) {
    const std::size_t n = 1 + i % 3;
    EquivariantComplex c = base_change_Q(random_equivariant(rng, n, i));
    REQUIRE(c.validate());
    ChainComplex co = coinvariants(c);
    for (int k = c.complex.lo(); k <= c.complex.hi() && !c.complex.empty(); ++k)
      CHECK(homology(co, k).isomorphic(homology_coinvariants(c, k)));
  }
  for (std::size_t i = 0; i < 6; ++i) {
    ChainSpectrumMap f = random_level_equivalence(rng, 2, i);
    REQUIRE(f.validate());
    REQUIRE(is_level_equiv(f));
    CHECK(is_quasi_iso(functor_D(base_change_Q(f))));
  }
}

TEST_CASE("gamma is natural") {
  Rng rng(41);
  const std::size_t l = 2;
  for (int trial = 0; trial < 2; ++trial) {
    ChainSpectrum x = free_spectrum(0, random_small_complex(rng), l), x2 = random_two_cell(rng, l);
    ChainComplex k = random_small_complex(rng);
    ChainSpectrumMap f = free_extension(1, k, x2, random_chain_map(rng, k, x2.level(1)));
    ChainSpectrumMap g = free_extension(0, x.level(0), x2, random_chain_map(rng, x.level(0), x2.level(0)));
    ChainSpectrumMap fg = smash(f, g);
    REQUIRE(fg.validate());
    Gamma src = gamma_monoidal(f.source, 1, g.source, 1), tgt = gamma_monoidal(f.target, 1, g.target, 1);
    ChainMap left = compose(functor_D(fg, src.dxy, tgt.dxy), src.map);
    ChainMap right = compose(tgt.map, tensor(functor_D(f, src.dx, tgt.dx), functor_D(g, src.dy, tgt.dy)));
    CHECK(left.equals(right));
  }
}
