#include "doctest.h"
#include "hzalg/spectra.hpp"

using namespace hzalg;

namespace {

bool same_sset_spectrum(const SSetSpectrum& a, const SSetSpectrum& b) {
  if (a.truncation() != b.truncation()) return false;
  for (std::size_t n = 0; n <= a.truncation(); ++n) {
    if (!(a.level(n) == b.level(n))) return false;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (a.action(n, i).images != b.action(n, i).images) return false;
    if (n < a.truncation() && a.sigma[n].images != b.sigma[n].images) return false;
  }
  return true;
}

// Nondegenerate simplices of Delta[k] by degree: subsets of [k] of size d+1.
std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n + 1 - i) / i;
  return r;
}

}  // namespace

TEST_CASE("standard simplices, boundaries and horns") {
  const std::size_t t = 4;
  for (std::size_t k = 0; k <= 3; ++k) {
    PointedSimplicialSet s = simplex_plus(k, t);
    CHECK(s.validate());
    auto nd = s.nondegenerate_counts();
    for (std::size_t d = 0; d <= t; ++d) CHECK(nd[d] == binomial(k + 1, d + 1) + (d == 0 ? 1 : 0));
    if (k == 0) continue;
    PointedSimplicialSet b = boundary_plus(k, t);
    CHECK(b.validate());
    auto nb = b.nondegenerate_counts();
    CHECK(nb[k] == 0);
    if (k >= 1) CHECK(nb[k - 1] == (k == 1 ? 3u : k + 1));
    CHECK(boundary_inclusion(k, t).validate());
    for (std::size_t i = 0; i <= k; ++i) {
      CHECK(horn_plus(k, i, t).validate());
      CHECK(horn_inclusion(k, i, t).validate());
      CHECK(coface_map(k, i, t).validate());
    }
  }
  // Lambda^2_1 has the two edges through vertex 1.
  CHECK(horn_plus(2, 1, t).nondegenerate_counts()[1] == 2);
}

TEST_CASE("sphere spectra and Sym(Z~S^1)") {
  const std::size_t l = 3, t = 4;
  SSetSpectrum s = sphere_sset(l, t);
  CHECK(s.validate());
  SAbSpectrum z = sym_sab(l, t);
  CHECK(z.validate());
  for (std::size_t n = 0; n <= l; ++n) CHECK(same_simplicial(z.level(n), free_abelian(simplicial_sphere(n, t))));
}

TEST_CASE("free simplicial-set spectra and their maps") {
  const std::size_t l = 3, t = 3;
  for (std::size_t m = 0; m <= 2; ++m) {
    SSetSpectrum f = free_sset(m, simplex_plus(1, t), l);
    CHECK(f.validate());
    SSetSpectrumMap g = free_sset(m, boundary_inclusion(1, t), l);
    CHECK(g.validate());
  }
  CHECK(same_sset_spectrum(free_sset(0, sphere0(t), l), sphere_sset(l, t)));
  for (std::size_t n = 0; n + 1 <= l; ++n) CHECK(lambda_map(n, l, t).validate());
  SSetSpectrumMap h = free_sset(0, horn_inclusion(2, 1, t), l);
  CHECK(h.validate());
  SSetSpectrumMap c = free_sset(1, coface_map(1, 0, t), l);
  CHECK(c.validate());
}

TEST_CASE("free abelian prolongation of generating maps") {
  const std::size_t l = 2, t = 3;
  std::vector<SSetSpectrumMap> maps = {free_sset(1, boundary_inclusion(1, t), l), free_sset(0, horn_inclusion(2, 1, t), l),
                                       free_sset(1, coface_map(1, 1, t), l), lambda_map(0, l, t)};
  for (const auto& f : maps) {
    SAbSpectrumMap g = free_abelian(f);
    CHECK(g.source.validate());
    CHECK(g.target.validate());
    CHECK(g.validate());
  }
}

TEST_CASE("HZ window, U and Z") {
  const std::size_t l = 2, t = 3;
  SSetSpectrum h = hz(l, t);
  CHECK(h.validate());
  HZModule m = hz_as_module(l, t);
  CHECK(m.validate(h));
  HZModule u = forget_U(sym_sab(l, t));
  CHECK(same_sset_spectrum(u.spectrum, h));
  for (std::size_t q = 0; q <= l; ++q)
    for (std::size_t p = 0; q + p <= l; ++p) CHECK(u.action[q][p].images == m.action[q][p].images);
  CHECK(u.validate(h));
  SAbSpectrum z = functor_Z(m, h);
  CHECK(z.validate());
  SAbSpectrumMap nu = nu_tilde(z, l, t);
  CHECK(nu.validate());
  for (const auto& f : nu.levels) CHECK(f.is_iso());
}

TEST_CASE("normalization of Sym(Z~S^1) and phi") {
  const std::size_t l = 3, t = 5;
  ChainSpectrum calN = build_calN(l, t);
  CHECK(calN.validate());
  ChainSpectrumMap phi = build_phi(l, t);
  CHECK(phi.validate());
  CHECK(phi_is_monoidal(phi, t));
  for (std::size_t n = 0; n <= l; ++n) {
    const int top = int(t - l + n);
    CHECK(is_quasi_iso_through(phi.levels[n], top - 1));
    for (int d = 0; d < top; ++d) CHECK(level_homology(calN, n, d).to_string() == (d == int(n) ? "Z" : "0"));
  }
  CHECK(phi.levels[0].is_iso());
  CHECK(phi.levels[1].is_iso());
}
