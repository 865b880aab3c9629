#pragma once

// Finitely presented abelian groups over Z (or vector spaces over Q) and the
// kernel / cokernel / tensor / hom calculus on them.

#include "hzalg/matrix.hpp"
#include "hzalg/smith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hzalg {

/// ring^generators modulo the column span of `relations`.  The relation
/// matrix is kept in echelon form; the canonical invariants (free rank and
/// torsion divisibility chain) are computed on construction.
class FpGroup {
 public:
  FpGroup() : FpGroup(Ring::Integers, 0) {}
  FpGroup(Ring ring, std::size_t generators);
  FpGroup(Ring ring, std::size_t generators, const Matrix& relations);

  static FpGroup free(Ring ring, std::size_t rank) { return FpGroup(ring, rank); }
  static FpGroup cyclic(Ring ring, long order);
  /// Group in Smith form with the given invariants.
  static FpGroup canonical(Ring ring, std::size_t free_rank, const std::vector<mpz_class>& torsion);

  Ring ring() const { return ring_; }
  std::size_t generators() const { return gens_; }
  const Matrix& relations() const { return relations_.basis(); }
  bool has_relations() const { return relations_.rank() > 0; }

  std::size_t free_rank() const { return inv_.free_rank; }
  const std::vector<mpz_class>& torsion() const { return inv_.torsion; }
  bool is_trivial() const { return inv_.free_rank == 0 && inv_.torsion.empty(); }

  /// Same ring and same canonical form.
  bool isomorphic(const FpGroup& other) const;

  /// True when every column of `vectors` is zero in the group.
  bool vanishes(const Matrix& vectors) const { return relations_.contains(vectors); }
  std::optional<Matrix> relation_coordinates(const Matrix& vectors) const {
    return relations_.coordinates(vectors);
  }

  /// "0", "Z", "Z^2 + Z/2 + Z/6", "Q^3".
  std::string to_string() const;

 private:
  Ring ring_;
  std::size_t gens_;
  Lattice relations_;
  Invariants inv_;
};

std::string canonical_string(Ring ring, std::size_t free_rank, const std::vector<mpz_class>& torsion);

/// Homomorphism given by its matrix on generators; construction checks that
/// relations are carried into relations.
class GroupMap {
 public:
  GroupMap(FpGroup source, FpGroup target, Matrix matrix);

  static GroupMap identity(const FpGroup& g);
  static GroupMap zero(const FpGroup& source, const FpGroup& target);

  const FpGroup& source() const { return source_; }
  const FpGroup& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  /// Equality as homomorphisms (matrices may differ by relations).
  bool equals(const GroupMap& other) const;
  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_iso() const;

 private:
  FpGroup source_;
  FpGroup target_;
  Matrix matrix_;
};

GroupMap compose(const GroupMap& g, const GroupMap& f);  // g after f

void require_same_ring(Ring a, Ring b, const char* what);

struct Subgroup {
  FpGroup group;
  GroupMap inclusion;
};
struct Quotient {
  FpGroup group;
  GroupMap projection;
};

/// Lattice of x with (matrix * x) zero in `target`.
Lattice preimage_of_zero(const Matrix& matrix, const FpGroup& target);

/// The subgroup of `ambient` cut out by a lattice containing its relations.
Subgroup subgroup_from_lattice(const FpGroup& ambient, const Lattice& lattice);

Subgroup kernel(const GroupMap& f);
Quotient cokernel(const GroupMap& f);
FpGroup image(const GroupMap& f);

FpGroup direct_sum(const std::vector<FpGroup>& parts);
FpGroup tensor_group(const FpGroup& a, const FpGroup& b);
FpGroup hom_group(const FpGroup& a, const FpGroup& b);

/// Coinvariants of a finite group acting through automorphisms of `a`, one
/// per group generator.
FpGroup coinvariants(const FpGroup& a, const std::vector<GroupMap>& action);

/// Extension of scalars from Z to Q.
FpGroup rationalize(const FpGroup& g);

/// Simultaneous linear conditions on unknown homomorphisms F_u : S_u -> T_u.
/// Constraints have the form  sum_t left_t * F_{u_t} * right_t == 0  in a
/// given group.  Solving yields the group of all solutions modulo the null
/// solutions (matrices whose columns vanish in their targets).
class HomSystem {
 public:
  struct Term {
    std::size_t unknown;
    Matrix left;
    Matrix right;
  };

  explicit HomSystem(Ring ring) : ring_(ring) {}

  std::size_t add_unknown(const FpGroup& source, const FpGroup& target);
  void add_constraint(const std::vector<Term>& terms, const FpGroup& modulo);

  struct Solution {
    FpGroup group;
    /// generators[i][u] is the matrix of unknown u for group generator i.
    std::vector<std::vector<Matrix>> generators;
    /// Class of a solution in `group` coordinates; nullopt if not a solution.
    std::optional<Matrix> coordinates(const std::vector<Matrix>& maps) const;

    Lattice solutions{0, Ring::Integers};
    Matrix to_group;
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
  };

  Solution solve() const;

 private:
  struct Unknown {
    FpGroup source;
    FpGroup target;
    std::size_t offset;
  };
  struct Constraint {
    std::vector<Term> terms;
    FpGroup modulo;
  };
  Ring ring_;
  std::vector<Unknown> unknowns_;
  std::vector<Constraint> constraints_;
  std::size_t vars_ = 0;
};

}  // namespace hzalg
