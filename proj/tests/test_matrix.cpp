#include "doctest.h"
#include "hzalg/smith.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace hzalg;



TEST_CASE("smith form of a small diagonal matrix") {
  Matrix m{{2, 0}, {0, 3}};
  auto f = smith_normal_form(m);
  CHECK(f.S == Matrix({{1, 0}, {0, 6}}));
  CHECK(f.U * m * f.V == f.S);
}

TEST_CASE("smith form agrees with determinantal divisors on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    Matrix m = random_matrix(rng, r, c, -6, 6);
    auto f = smith_normal_form(m);
    CHECK(f.U * m * f.V == f.S);
    CHECK(inverse(f.U, Ring::Integers).has_value());
    CHECK(inverse(f.V, Ring::Integers).has_value());
    std::vector<mpz_class> diag;
    for (std::size_t i = 0; i < std::min(r, c); ++i)
      if (sgn(f.S(i, i)) != 0) diag.push_back(f.S(i, i).get_num());
    CHECK(diag == oracle::determinantal_factors(m));
  }
}

TEST_CASE("kernel basis is saturated") {
  Matrix m{{2, 4, 6}};
  Matrix k = kernel_basis(m, Ring::Integers);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
  // (1,1,-1) is in the integer kernel and must have integral coordinates.
  Lattice l(k, Ring::Integers);
  CHECK(l.contains(Matrix{{1}, {1}, {-1}}));
}

TEST_CASE("lattice coordinates reject non-members") {
  Lattice l(Matrix{{2}, {0}}, Ring::Integers);
  CHECK_FALSE(l.contains(Matrix{{1}, {0}}));
  CHECK(l.contains(Matrix{{-4}, {0}}));
  Lattice q(Matrix{{2}, {0}}, Ring::Rationals);
  CHECK(q.contains(Matrix{{1}, {0}}));
}

TEST_CASE("smith presentation round trip") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 4, r = rng() % 4;
    Matrix rel = random_matrix(rng, n, r, -4, 4);
    auto sp = smith_presentation(n, rel, Ring::Integers);
    auto inv = presentation_invariants(n, rel, Ring::Integers);
    CHECK(sp.gens == inv.free_rank + inv.torsion.size());
    // to * from is the identity on the new generators.
    CHECK((sp.to * sp.from).is_identity());
    // Old relations map into new relations.
    Lattice nr(sp.relations.cols() ? sp.relations : Matrix(sp.gens, 0), Ring::Integers);
    if (r > 0) CHECK(nr.contains(sp.to * rel));
  }
}
