#include "doctest.h"
#include "hzalg/chain.hpp"
#include "hzalg/random.hpp"
#include "oracles.hpp"

using namespace hzalg;

namespace {

ChainComplex two_term(long a) {
  return ChainComplex(Ring::Integers, 0, {FpGroup::free(Ring::Integers, 1), FpGroup::free(Ring::Integers, 1)},
                      {Matrix{{a}}});
}

ChainMap map_to_disk_generator(int n) {
  // i_n : Z[n-1] -> D^n
  ChainComplex s = sphere(n - 1), d = disk(n);
  return ChainMap(s, d, {{n - 1, Matrix{{1}}}});
}

ChainMap from_zero(const ChainComplex& c) { return ChainMap::zero(zero_complex(c.ring()), c); }

}  // namespace

TEST_CASE("spheres and disks") {
  CHECK(homology(sphere(0), 0).to_string() == "Z");
  for (int n = -2; n <= 3; ++n) CHECK(is_acyclic(disk(n)));
  CHECK(homology(sphere(-2, Ring::Rationals), -2).to_string() == "Q");
  CHECK(homology(two_term(2), 0).to_string() == "Z/2");
  CHECK(homology(two_term(2), 1).is_trivial());
}

TEST_CASE("homology of random free complexes matches invariant factors") {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    ChainComplex c = random_complex(rng, Ring::Integers, -1, 2, false);
    for (int n = c.lo(); n <= c.hi(); ++n) {
      auto expect = oracle::free_homology(c.generators(n), c.differential(n), c.differential(n + 1));
      auto h = homology(c, n);
      CHECK(h.free_rank() == expect.free_rank);
      CHECK(h.torsion() == expect.torsion);
    }
  }
}

TEST_CASE("tensor and shift basics") {
  CHECK(homology(tensor(sphere(2), sphere(-3)), -1).to_string() == "Z");
  CHECK(tensor(sphere(2), sphere(-3)).lo() == -1);
  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    ChainComplex c = random_complex(rng, Ring::Integers, 0, 2, true);
    ChainComplex u = tensor(sphere(0), c);
    for (int n = c.lo(); n <= c.hi(); ++n) {
      CHECK(u.differential(n) == c.differential(n));
      CHECK(u.group(n).isomorphic(c.group(n)));
    }
    for (int k = -2; k <= 2; ++k) {
      ChainComplex s = shift(c, k), t = tensor(sphere(k), c);
      for (int n = s.lo(); n <= s.hi(); ++n) CHECK(s.differential(n) == t.differential(n));
      ChainComplex ss = shift(shift(c, k), 1), direct = shift(c, k + 1);
      for (int n = ss.lo(); n <= ss.hi(); ++n) {
        CHECK(ss.differential(n) == direct.differential(n));
        CHECK(homology(ss, n).isomorphic(homology(c, n - k - 1)));
      }
    }
  }
  CHECK(is_acyclic(shift(disk(1), -1)));
  CHECK(shift(disk(1), -1).lo() == -1);
}

TEST_CASE("rational kunneth formula") {
  Rng rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    ChainComplex c = random_complex(rng, Ring::Rationals, -1, 1, false);
    ChainComplex e = random_complex(rng, Ring::Rationals, 0, 2, false);
    ChainComplex t = tensor(c, e);
    for (int n = t.lo(); n <= t.hi(); ++n) {
      std::size_t expect = 0;
      for (int p = c.lo(); p <= c.hi(); ++p) expect += homology(c, p).free_rank() * homology(e, n - p).free_rank();
      CHECK(homology(t, n).free_rank() == expect);
    }
  }
}

TEST_CASE("braiding is a chain isomorphism") {
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    ChainComplex c = random_complex(rng, Ring::Integers, -1, 1, true);
    ChainComplex e = random_complex(rng, Ring::Integers, 0, 2, true);
    ChainMap b = braiding(c, e);
    CHECK(b.is_iso());
    CHECK(compose(braiding(e, c), b).equals(ChainMap::identity(tensor(c, e))));
  }
}

TEST_CASE("disks tensored with anything are acyclic") {
  Rng rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    ChainComplex z = random_complex(rng, Ring::Integers, -1, 2, true);
    for (int n = 0; n <= 3; ++n) CHECK(is_acyclic(tensor(disk(n), z)));
  }
  ChainComplex z2(Ring::Integers, 0, {FpGroup::cyclic(Ring::Integers, 2)}, {});
  CHECK(is_acyclic(tensor(disk(3), z2)));
}

TEST_CASE("connective cover") {
  CHECK(connective_cover(sphere(-1)).empty());
  CHECK(connective_cover(disk(0)).empty());
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    ChainComplex c = random_complex(rng, Ring::Integers, -2, 2, true);
    ChainComplex cc = connective_cover(c);
    CHECK(cc.grading() == Grading::NonNegative);
    for (int n = 0; n <= 2; ++n) CHECK(homology(cc, n).isomorphic(homology(c, n)));
    ChainComplex a = random_complex(rng, Ring::Integers, 0, 2, true, Grading::NonNegative);
    ChainMapGroup left(a, c), right(a, cc);
    CHECK(left.group().isomorphic(right.group()));
    // Post-composing with the counit identifies the two groups.
    ChainMap counit = connective_counit(c);
    for (std::size_t i = 0; i < right.generator_count(); ++i)
      CHECK(left.coordinates(compose(counit, right.generator(i))).has_value());
    ChainComplex nn = random_complex(rng, Ring::Integers, 0, 2, true, Grading::NonNegative);
    ChainComplex cn = connective_cover(nn);
    for (int n = 0; n <= 2; ++n) CHECK(cn.differential(n) == nn.differential(n));
  }
}

TEST_CASE("quasi-isomorphisms") {
  CHECK(is_quasi_iso(ChainMap::identity(two_term(3))));
  CHECK(is_quasi_iso(from_zero(disk(2))));
  ChainComplex z = sphere(0);
  CHECK_FALSE(is_quasi_iso(ChainMap(z, z, {{0, Matrix{{2}}}})));
  CHECK_FALSE(is_quasi_iso(from_zero(sphere(1))));
}

TEST_CASE("chain map groups") {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    ChainComplex y = random_complex(rng, Ring::Integers, -1, 2, true);
    for (int n = -1; n <= 2; ++n) {
      GroupMap d(y.group(n), y.group(n - 1), y.differential(n));
      CHECK(chain_map_group(sphere(n), y).isomorphic(kernel(d).group));
      CHECK(chain_map_group(disk(n), y).isomorphic(y.group(n)));
    }
    CHECK(chain_map_group(zero_complex(), y).is_trivial());
  }
}

TEST_CASE("pushout products") {
  // (0 -> Z[0]) box i_n is i_n.
  ChainMap unit = from_zero(sphere(0));
  for (int n = 1; n <= 3; ++n) {
    ChainMap in = map_to_disk_generator(n);
    ChainMap pp = pushout_product(unit, in);
    CHECK(pp.is_iso() == false);
    CHECK(pp.is_injective());
    for (int k = n - 1; k <= n; ++k) CHECK(pp.source().group(k).isomorphic(in.source().group(k)));
  }
  Rng rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    ChainComplex b = random_complex(rng, Ring::Integers, 0, 2, false);
    // B with its top degree removed is a subcomplex.
    std::vector<FpGroup> ag;
    std::vector<Matrix> ad;
    for (int n = b.lo(); n <= b.hi(); ++n) ag.push_back(n == b.hi() ? FpGroup(Ring::Integers, 0) : b.group(n));
    for (int n = b.lo() + 1; n <= b.hi(); ++n)
      ad.push_back(n == b.hi() ? Matrix(b.generators(n - 1), 0) : b.differential(n));
    ChainComplex a(Ring::Integers, b.lo(), ag, ad);
    std::map<int, Matrix> comp;
    for (int n = a.lo(); n <= a.hi(); ++n) comp.emplace(n, Matrix::identity(a.generators(n)));
    ChainMap f(a, b, comp);
    REQUIRE(f.is_injective());
    for (int n = 1; n <= 3; ++n) {
      CHECK(pushout_product(f, map_to_disk_generator(n)).is_injective());
      ChainMap jn = from_zero(disk(n));
      ChainMap pj = pushout_product(f, jn);
      CHECK(pj.is_injective());
      CHECK(is_quasi_iso(pj));
    }
  }
}
