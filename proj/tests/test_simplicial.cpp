#include "doctest.h"
#include "hzalg/random.hpp"
#include "hzalg/simplicial.hpp"

using namespace hzalg;

namespace {

using Word = std::vector<int>;

// Monotone 0/1 words of length k+1.
std::vector<Word> words(std::size_t k) {
  std::vector<Word> out;
  for (std::size_t j = 0; j <= k + 1; ++j) {
    Word w(k + 1, 1);
    for (std::size_t i = 0; i < j; ++i) w[i] = 0;
    out.push_back(w);
  }
  return out;
}

bool constant(const Word& w) {
  for (int x : w)
    if (x != w[0]) return false;
  return true;
}

// Nondegenerate simplices of S^1 ^ S^1 in degree k, from vertex words of
// Delta[1] x Delta[1]: a pair is degenerate iff two consecutive vertices agree.
std::size_t smash_nondegenerate(std::size_t k) {
  std::size_t count = k == 0 ? 1 : 0;  // the basepoint
  for (const auto& u : words(k))
    for (const auto& v : words(k)) {
      if (constant(u) || constant(v)) continue;
      bool degenerate = false;
      for (std::size_t i = 0; i < k; ++i)
        if (u[i] == u[i + 1] && v[i] == v[i + 1]) degenerate = true;
      if (!degenerate) ++count;
    }
  return count;
}

std::size_t zeros(const Word& w) {
  std::size_t z = 0;
  for (int x : w) z += x == 0;
  return z;
}

}  // namespace

TEST_CASE("permutation words and shuffles") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : all_permutations(n)) {
      Perm q = identity_perm(n);
      for (std::size_t i : adjacent_word(p)) q = compose(q, transposition(n, i));
      CHECK(q == p);
    }
  CHECK(shuffles(2, 2).size() == 6);
  CHECK(injections(2, 4).size() == 12);
  for (const auto& s : shuffles(2, 3)) {
    CHECK(s[0] < s[1]);
    CHECK(s[2] < s[3]);
    CHECK(s[3] < s[4]);
  }
}

TEST_CASE("circle and spheres") {
  const std::size_t t = 5;
  auto s1 = circle(t);
  CHECK(s1.validate());
  auto c1 = s1.nondegenerate_counts();
  CHECK(c1[0] == 1);
  CHECK(c1[1] == 1);
  for (std::size_t k = 2; k <= t; ++k) CHECK(c1[k] == 0);
  auto s2 = simplicial_sphere(2, t);
  CHECK(s2.validate());
  auto c2 = s2.nondegenerate_counts();
  for (std::size_t k = 0; k <= t; ++k) CHECK(c2[k] == smash_nondegenerate(k));
  CHECK(c2[0] == 1);
  CHECK(c2[1] == 1);
  CHECK(c2[2] == 2);
  CHECK(smash(s1, s1) == s2);
  auto s0 = sphere0(t);
  CHECK(s0.validate());
  CHECK(s0.count(3) == 2);
  CHECK(smash(s2, s0) == s2);
  CHECK(smash(s0, s2) == s2);
  CHECK(smash(s2, point(t)) == point(t));
  CHECK(smash(simplicial_sphere(2, 4), simplicial_sphere(1, 4)) == simplicial_sphere(3, 4));
  for (std::size_t n = 0; n <= 3; ++n) CHECK(simplicial_sphere(n, 4).validate());
}

TEST_CASE("sphere permutations are simplicial automorphisms") {
  const std::size_t t = 4;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto s = simplicial_sphere(n, t);
    for (const auto& g : all_permutations(n)) {
      PointedMap f{s, s, {}};
      for (std::size_t k = 0; k <= t; ++k) f.images.push_back(sphere_permutation(g, k));
      CHECK(f.validate());
    }
  }
}

TEST_CASE("free abelian functor") {
  const std::size_t t = 4;
  auto z0 = free_abelian(sphere0(t));
  for (std::size_t k = 0; k <= t; ++k) CHECK(z0.generators(k) == 1);
  CHECK(free_abelian(point(t)).generators(3) == 0);
  auto z1 = free_abelian(circle(t));
  CHECK(z1.generators(1) == 1);
  CHECK(z1.validate());
  // operator_matrix agrees with precomposition on vertex words of the circle.
  for (std::size_t n = 1; n <= t; ++n)
    for (std::size_t m = 0; m <= t; ++m) {
      // all monotone maps [m] -> [n]
      std::vector<Monotone> maps{{}};
      for (std::size_t i = 0; i <= m; ++i) {
        std::vector<Monotone> next;
        for (const auto& pre : maps)
          for (std::size_t v = pre.empty() ? 0 : pre.back(); v <= n; ++v) {
            auto q = pre;
            q.push_back(v);
            next.push_back(q);
          }
        maps = next;
      }
      for (const auto& theta : maps) {
        Matrix op = z1.operator_matrix(theta, n);
        for (const auto& w : words(n)) {
          const std::size_t j = zeros(w);
          if (j == 0 || j == n + 1) continue;
          Word pulled;
          for (std::size_t x : theta) pulled.push_back(w[x]);
          const std::size_t jj = zeros(pulled);
          Matrix expect(z1.generators(m), 1);
          if (jj != 0 && jj != m + 1) expect(jj - 1, 0) = 1;
          CHECK(op.column(j - 1) == expect);
        }
      }
    }
}

TEST_CASE("normalization of spheres") {
  const std::size_t t = 5;
  ChainComplex n1 = normalize(free_abelian(circle(t)));
  CHECK(n1.lo() == 1);
  CHECK(n1.hi() == 1);
  for (std::size_t n = 0; n <= 3; ++n) {
    ChainComplex c = normalize(free_abelian(simplicial_sphere(n, t)));
    for (int d = 0; d < int(t); ++d) CHECK(homology(c, d).to_string() == (d == int(n) ? "Z" : "0"));
  }
  ChainComplex k = normalize(constant_simplicial(FpGroup::cyclic(Ring::Integers, 3), t));
  CHECK(k.group(0).to_string() == "Z/3");
  for (int d = 1; d <= int(t); ++d) CHECK(k.group(d).is_trivial());
}

TEST_CASE("dold-kan") {
  const std::size_t t = 5;
  CHECK(dold_kan_gamma(sphere(1, Ring::Integers, Grading::NonNegative), 3).generators(2) == 2);
  auto g0 = dold_kan_gamma(sphere(0, Ring::Integers, Grading::NonNegative), t);
  for (std::size_t k = 0; k <= t; ++k) CHECK(g0.generators(k) == 1);
  Rng rng(21);
  for (int trial = 0; trial < 6; ++trial) {
    ChainComplex c = random_complex(rng, Ring::Integers, 0, int(t) - 1, trial % 2 == 0, Grading::NonNegative, 2);
    auto g = dold_kan_gamma(c, t);
    CHECK(g.validate());
    CHECK(gamma_unit(c, t).is_iso());
  }
  for (int trial = 0; trial < 4; ++trial) {
    auto a = random_simplicial_group(rng, Ring::Integers, 4, trial % 2 == 1);
    REQUIRE(a.validate());
    auto e = gamma_counit(a);
    CHECK(e.validate());
    CHECK(e.is_iso());
  }
}

TEST_CASE("eilenberg-zilber") {
  const std::size_t t = 4;
  auto zc = constant_simplicial(FpGroup::free(Ring::Integers, 1), t);
  ChainMap nab = shuffle_map(zc, zc);
  CHECK(nab.is_iso());
  auto z1 = free_abelian(circle(t));
  ChainMap sh = shuffle_map(z1, z1);
  CHECK(is_quasi_iso_through(sh, int(t) - 1));
  CHECK(homology_map(sh, 2).is_iso());
  ChainMap aw = alexander_whitney(z1, z1);
  CHECK(compose(aw, sh).equals(ChainMap::identity(sh.source())));
  Rng rng(22);
  for (int trial = 0; trial < 3; ++trial) {
    auto a = random_simplicial_group(rng, Ring::Integers, 3, false);
    auto b = random_simplicial_group(rng, Ring::Integers, 3, false);
    ChainMap s = shuffle_map(a, b);
    ChainMap w = alexander_whitney(a, b);
    CHECK(compose(w, s).equals(ChainMap::identity(s.source())));
    CHECK(is_quasi_iso_through(s, 2));
  }
}
