#pragma once

// Truncated pointed simplicial sets, simplicial abelian groups, Dold-Kan and
// the Eilenberg-Zilber maps.

#include "hzalg/chain.hpp"
#include "hzalg/permutation.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace hzalg {

/// A monotone map [m] -> [n], stored as its values.
using Monotone = std::vector<std::size_t>;

/// All simplices of degrees 0..T.  Simplex 0 of every degree is the basepoint.
class PointedSimplicialSet {
 public:
  using Table = std::vector<std::vector<std::size_t>>;  // [operator index][simplex]

  PointedSimplicialSet() = default;
  /// faces[k] (k = 1..T, faces[0] unused) and degeneracies[k] (k = 0..T-1).
  PointedSimplicialSet(std::size_t truncation, std::vector<std::size_t> counts, std::vector<Table> faces,
                       std::vector<Table> degeneracies);

  std::size_t truncation() const { return truncation_; }
  std::size_t count(std::size_t k) const { return counts_.at(k); }
  std::size_t face(std::size_t k, std::size_t i, std::size_t x) const { return faces_.at(k).at(i).at(x); }
  std::size_t degeneracy(std::size_t k, std::size_t i, std::size_t x) const {
    return degens_.at(k).at(i).at(x);
  }
  bool is_degenerate(std::size_t k, std::size_t x) const;
  /// Nondegenerate simplices per degree, basepoint included.
  std::vector<std::size_t> nondegenerate_counts() const;

  /// Checks the simplicial identities and that the basepoint is preserved.
  bool validate() const;

  bool operator==(const PointedSimplicialSet& other) const;

 private:
  std::size_t truncation_ = 0;
  std::vector<std::size_t> counts_;
  std::vector<Table> faces_;
  std::vector<Table> degens_;
};

PointedSimplicialSet point(std::size_t truncation);
PointedSimplicialSet sphere0(std::size_t truncation);
PointedSimplicialSet circle(std::size_t truncation);
/// The n-fold smash of circles.  A non-basepoint k-simplex is a tuple of
/// circle labels (j_1, ..., j_n), 1 <= j_i <= k, listed lexicographically.
PointedSimplicialSet simplicial_sphere(std::size_t n, std::size_t truncation);
/// Non-basepoint pairs in lexicographic order.
PointedSimplicialSet smash(const PointedSimplicialSet& k, const PointedSimplicialSet& l);

/// Index of the tuple in simplicial_sphere(n) degree k (0 for the basepoint).
std::size_t sphere_index(const std::vector<std::size_t>& labels, std::size_t k);
std::vector<std::size_t> sphere_labels(std::size_t index, std::size_t n, std::size_t k);
/// Permuting smash factors of S^n: factor i moves to position g[i].
std::vector<std::size_t> sphere_permutation(const Perm& g, std::size_t k);

/// Pointed simplicial map, images[k][x].
struct PointedMap {
  PointedSimplicialSet source;
  PointedSimplicialSet target;
  std::vector<std::vector<std::size_t>> images;
  bool validate() const;
};

class SimplicialAbelianGroup {
 public:
  using Operators = std::vector<Matrix>;

  SimplicialAbelianGroup() = default;
  SimplicialAbelianGroup(Ring ring, std::size_t truncation, std::vector<FpGroup> groups, std::vector<Operators> faces,
                         std::vector<Operators> degeneracies);

  Ring ring() const { return ring_; }
  std::size_t truncation() const { return truncation_; }
  const FpGroup& group(std::size_t k) const { return data_->groups.at(k); }
  std::size_t generators(std::size_t k) const { return data_->groups.at(k).generators(); }
  const Matrix& face(std::size_t k, std::size_t i) const { return data_->faces.at(k).at(i); }
  const Matrix& degeneracy(std::size_t k, std::size_t i) const { return data_->degens.at(k).at(i); }
  /// Copies share their data; true when both are copies of one object.
  bool shares_data(const SimplicialAbelianGroup& other) const { return data_ == other.data_; }

  /// N_k as a lattice in A_k, computed once per degree and shared by copies.
  const Lattice& moore_lattice(std::size_t k) const;
  /// Coordinates of the projection A_k -> N_k along the degenerate subgroup
  /// (free groups only); memoized like moore_lattice.
  const Matrix& moore_projection(std::size_t k) const;

  /// theta^* : A_n -> A_m for a monotone theta : [m] -> [n].
  Matrix operator_matrix(const Monotone& theta, std::size_t n) const;

  bool validate() const;
  bool is_free() const;

 private:
  struct Data {
    std::vector<FpGroup> groups;
    std::vector<Operators> faces;
    std::vector<Operators> degens;
    struct Memo {
      std::mutex lock;
      std::map<std::size_t, Lattice> moore;
      std::map<std::size_t, Matrix> projection;
    };
    std::shared_ptr<Memo> memo = std::make_shared<Memo>();
  };

  Ring ring_ = Ring::Integers;
  std::size_t truncation_ = 0;
  std::shared_ptr<const Data> data_ = std::make_shared<const Data>();
};

struct SimplicialMap {
  SimplicialAbelianGroup source;
  SimplicialAbelianGroup target;
  std::vector<Matrix> levels;
  bool validate() const;
  bool is_iso() const;
};

SimplicialAbelianGroup free_abelian(const PointedSimplicialSet& k, Ring ring = Ring::Integers);
SimplicialMap free_abelian(const PointedMap& f, Ring ring = Ring::Integers);
/// The matrices of free_abelian(f) alone.
std::vector<Matrix> free_abelian_levels(const PointedMap& f);
SimplicialAbelianGroup constant_simplicial(const FpGroup& a, std::size_t truncation);
SimplicialAbelianGroup tensor(const SimplicialAbelianGroup& a, const SimplicialAbelianGroup& b);
SimplicialAbelianGroup direct_sum(const SimplicialAbelianGroup& a, const SimplicialAbelianGroup& b);
/// Same object in new coordinates: x_new = P_k x_old for invertible P_k.
SimplicialAbelianGroup change_basis(const SimplicialAbelianGroup& a, const std::vector<Matrix>& p);

/// Moore complex: N_k = intersection of ker d_i for i >= 1, differential d_0.
/// Degrees 0..T are stored; degree T is not reliable for homology.
ChainComplex normalize(const SimplicialAbelianGroup& a);
ChainMap normalize(const SimplicialMap& f);
/// Basis of N_k inside A_k (columns).
Matrix normalized_basis(const SimplicialAbelianGroup& a, std::size_t k);
/// Coordinates in normalized_basis of the projection A_k -> N_k along the
/// degenerate subgroup.  Requires free groups.
Matrix normalized_projection(const SimplicialAbelianGroup& a, std::size_t k);

/// Surjections [n] ->> [k] for k = 0..n (ordered by k, then lexicographically).
std::vector<Monotone> surjections(std::size_t n);

SimplicialAbelianGroup dold_kan_gamma(const ChainComplex& c, std::size_t truncation);
/// The inclusion of the identity summands, C -> N(Gamma C).
ChainMap gamma_unit(const ChainComplex& c, std::size_t truncation);
/// (eta, x) |-> eta^* x, Gamma(N A) -> A.
SimplicialMap gamma_counit(const SimplicialAbelianGroup& a);

ChainMap shuffle_map(const SimplicialAbelianGroup& a, const SimplicialAbelianGroup& b);
ChainMap alexander_whitney(const SimplicialAbelianGroup& a, const SimplicialAbelianGroup& b);

SimplicialAbelianGroup base_change_Q(const SimplicialAbelianGroup& a);

}  // namespace hzalg
