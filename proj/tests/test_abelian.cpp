#include "doctest.h"
#include "hzalg/abelian.hpp"

#include <functional>
#include <random>

using namespace hzalg;

namespace {

long gcd_long(long a, long b) { return b == 0 ? (a < 0 ? -a : a) : gcd_long(b, a % b); }

// Number of set maps f: Z/a -> Z/b that are homomorphisms, by enumeration.
long brute_hom_count(long a, long b) {
  long count = 0;
  std::vector<long> f(a);
  std::function<void(long)> rec = [&](long i) {
    if (i == a) {
      for (long x = 0; x < a; ++x)
        for (long y = 0; y < a; ++y)
          if (f[(x + y) % a] != (f[x] + f[y]) % b) return;
      ++count;
      return;
    }
    for (long v = 0; v < b; ++v) {
      f[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

mpz_class order(const FpGroup& g) {
  mpz_class o = 1;
  for (const auto& t : g.torsion()) o *= t;
  return o;
}

}  // namespace

TEST_CASE("canonical printing") {
  CHECK(FpGroup(Ring::Integers, 0).to_string() == "0");
  CHECK(FpGroup::free(Ring::Integers, 2).to_string() == "Z^2");
  Matrix r{{2, 0}, {0, 3}};
  CHECK(FpGroup(Ring::Integers, 2, r).to_string() == "Z/6");
  CHECK(FpGroup(Ring::Rationals, 2, r).to_string() == "0");
  CHECK(FpGroup::canonical(Ring::Integers, 2, {2, 6}).to_string() == "Z^2 + Z/2 + Z/6");
  CHECK(FpGroup::free(Ring::Rationals, 3).to_string() == "Q^3");
}

TEST_CASE("tensor products of cyclic groups") {
  auto z2 = FpGroup::cyclic(Ring::Integers, 2), z3 = FpGroup::cyclic(Ring::Integers, 3);
  CHECK(tensor_group(z2, z3).is_trivial());
  CHECK(tensor_group(z2, z2).to_string() == "Z/2");
  for (long a = 1; a <= 8; ++a)
    for (long b = 1; b <= 8; ++b) {
      auto t = tensor_group(FpGroup::cyclic(Ring::Integers, a), FpGroup::cyclic(Ring::Integers, b));
      CHECK(order(t) == gcd_long(a, b));
    }
}

TEST_CASE("hom groups match enumeration of set maps") {
  CHECK(hom_group(FpGroup::cyclic(Ring::Integers, 4), FpGroup::cyclic(Ring::Integers, 6)).to_string() == "Z/2");
  for (long a = 1; a <= 6; ++a)
    for (long b = 1; b <= 5; ++b) {
      auto h = hom_group(FpGroup::cyclic(Ring::Integers, a), FpGroup::cyclic(Ring::Integers, b));
      CHECK(order(h) == brute_hom_count(a, b));
    }
  CHECK(hom_group(FpGroup::free(Ring::Integers, 2), FpGroup::cyclic(Ring::Integers, 3)).to_string() == "Z/3 + Z/3");
  CHECK(hom_group(FpGroup::cyclic(Ring::Integers, 3), FpGroup::free(Ring::Integers, 2)).is_trivial());
}

TEST_CASE("sign action coinvariants") {
  auto z = FpGroup::free(Ring::Integers, 1);
  GroupMap sign(z, z, Matrix{{-1}});
  CHECK(coinvariants(z, {sign}).to_string() == "Z/2");
  auto q = FpGroup::free(Ring::Rationals, 1);
  CHECK(coinvariants(q, {GroupMap(q, q, Matrix{{-1}})}).is_trivial());
}

TEST_CASE("group maps validate relations") {
  auto z4 = FpGroup::cyclic(Ring::Integers, 4), z6 = FpGroup::cyclic(Ring::Integers, 6);
  CHECK_THROWS(GroupMap(z4, z6, Matrix{{1}}));
  GroupMap f(z4, z6, Matrix{{3}});
  CHECK(kernel(f).group.to_string() == "Z/2");
  CHECK(cokernel(f).group.to_string() == "Z/3");
  CHECK(image(f).to_string() == "Z/2");
  CHECK_FALSE(f.is_iso());
  CHECK(GroupMap(z6, z6, Matrix{{5}}).is_iso());
  CHECK_FALSE(GroupMap(z6, z6, Matrix{{2}}).is_iso());
}

TEST_CASE("random maps satisfy rank and order identities") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 4, m = 1 + rng() % 4;
    FpGroup a(Ring::Integers, n, random_matrix(rng, n, rng() % 3, -3, 3));
    FpGroup b(Ring::Integers, m, random_matrix(rng, m, rng() % 3, -3, 3));
    // Random matrix; keep it only if it is a homomorphism.
    Matrix f = random_matrix(rng, m, n, -3, 3);
    if (a.has_relations() && !b.vanishes(f * a.relations())) continue;
    GroupMap g(a, b, f);
    auto k = kernel(g).group, c = cokernel(g).group;
    auto im = image(g);
    // rank(a) = rank(ker) + rank(im), rank(b) = rank(im) + rank(coker)
    CHECK(a.free_rank() == k.free_rank() + im.free_rank());
    CHECK(b.free_rank() == im.free_rank() + c.free_rank());
    if (a.free_rank() == 0) CHECK(order(a) == order(k) * order(im));
    CHECK(kernel(g).inclusion.is_injective());
    CHECK(compose(g, kernel(g).inclusion).is_zero());
  }
}

TEST_CASE("hom system generators are solutions") {
  auto z4 = FpGroup::cyclic(Ring::Integers, 4), z6 = FpGroup::cyclic(Ring::Integers, 6);
  HomSystem sys(Ring::Integers);
  sys.add_unknown(z4, z6);
  auto sol = sys.solve();
  REQUIRE(sol.generators.size() == 1);
  GroupMap g(z4, z6, sol.generators[0][0]);
  CHECK_FALSE(g.is_zero());
  CHECK(sol.coordinates({Matrix{{3}}}).has_value());
  CHECK_FALSE(sol.coordinates({Matrix{{1}}}).has_value());
}
