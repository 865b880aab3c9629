#pragma once

// Smith normal form and lattice (submodule) calculus over Z and Q.

#include "hzalg/matrix.hpp"

#include <optional>
#include <vector>

namespace hzalg {

/// U * M * V = S with U, V invertible over the ring and S diagonal, each
/// nonzero diagonal entry dividing the next.  Over Q the nonzero diagonal is
/// all ones.
struct SmithForm {
  Matrix U;
  Matrix S;
  Matrix V;
};

SmithForm smith_normal_form(const Matrix& m, Ring ring = Ring::Integers);

/// Invariants of the group  ring^gens / colspan(relations).
struct Invariants {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // divisibility chain, every entry >= 2
};

Invariants presentation_invariants(std::size_t gens, const Matrix& relations, Ring ring);

/// Generators of ring^gens / colspan(relations) rewritten in Smith form:
/// torsion generators first (relations diag(torsion)), then free generators.
/// `to` maps old coordinates to new ones, `from` maps new to old.
struct SmithPresentation {
  std::size_t gens = 0;
  Matrix relations;
  Matrix to;
  Matrix from;
};

SmithPresentation smith_presentation(std::size_t gens, const Matrix& relations, Ring ring);

/// Column echelon form H = M * T with T invertible over the ring.  Columns
/// [0, rank) of H are nonzero with strictly increasing pivot rows; the rest
/// are zero.  T is only computed when requested.
struct ColumnEchelon {
  Matrix H;
  Matrix T;
  std::vector<std::size_t> pivot_rows;
  std::size_t rank = 0;
};

ColumnEchelon column_echelon(const Matrix& m, Ring ring, bool with_transform);

/// Basis (as columns) of { x : M x = 0 }, saturated over the ring.
Matrix kernel_basis(const Matrix& m, Ring ring);

/// A submodule of ring^n, held as an echelon basis.
class Lattice {
 public:
  Lattice(std::size_t ambient, Ring ring);
  Lattice(const Matrix& generators, Ring ring);

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return basis_.cols(); }
  Ring ring() const { return ring_; }
  const Matrix& basis() const { return basis_; }

  bool contains(const Matrix& vectors) const;
  /// Coordinates C with basis * C == vectors, or nullopt if some column
  /// does not lie in the lattice.
  std::optional<Matrix> coordinates(const Matrix& vectors) const;

 private:
  std::size_t ambient_;
  Ring ring_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Inverse of a square matrix over the ring; nullopt if not invertible there.
std::optional<Matrix> inverse(const Matrix& m, Ring ring);

std::size_t rank(const Matrix& m);

}  // namespace hzalg
