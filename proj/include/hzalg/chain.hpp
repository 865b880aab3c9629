#pragma once

// Bounded chain complexes of finitely presented groups, d lowering degree.

#include "hzalg/abelian.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hzalg {

enum class Grading { Unbounded, NonNegative };

class ChainComplex {
 public:
  explicit ChainComplex(Ring ring = Ring::Integers, Grading grading = Grading::Unbounded);
  /// groups[i] sits in degree lo+i; differentials[i] is d: C_{lo+i+1} -> C_{lo+i}.
  ChainComplex(Ring ring, int lo, std::vector<FpGroup> groups, std::vector<Matrix> differentials,
               Grading grading = Grading::Unbounded);

  Ring ring() const { return ring_; }
  Grading grading() const { return grading_; }
  /// Support [lo, hi]; empty complexes have hi < lo.
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(groups_.size()) - 1; }
  bool empty() const { return groups_.empty(); }

  const FpGroup& group(int n) const;
  std::size_t generators(int n) const { return group(n).generators(); }
  /// d_n : C_n -> C_{n-1} (a zero matrix of the right shape outside the support).
  Matrix differential(int n) const;

  ChainComplex with_grading(Grading g) const;
  std::string to_string() const;

 private:
  Ring ring_;
  Grading grading_;
  int lo_ = 0;
  std::vector<FpGroup> groups_;
  std::vector<Matrix> diffs_;
  FpGroup zero_;
};

/// Degree-zero chain map; components outside the joint support are zero.
class ChainMap {
 public:
  /// The zero map between zero complexes.
  ChainMap() : ChainMap(ChainComplex(), ChainComplex(), {}) {}
  ChainMap(ChainComplex source, ChainComplex target, std::map<int, Matrix> components);

  static ChainMap identity(const ChainComplex& c);
  static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  Matrix component(int n) const;
  GroupMap component_map(int n) const;

  bool equals(const ChainMap& other) const;
  bool is_iso() const;
  bool is_injective() const;

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::map<int, Matrix> components_;
};

ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap operator+(const ChainMap& a, const ChainMap& b);
ChainMap operator-(const ChainMap& a);

ChainComplex sphere(int n, Ring ring = Ring::Integers, Grading grading = Grading::Unbounded);
ChainComplex disk(int n, Ring ring = Ring::Integers, Grading grading = Grading::Unbounded);
ChainComplex zero_complex(Ring ring = Ring::Integers, Grading grading = Grading::Unbounded);

/// Summand placement inside (C (x) E)_n: block for p starts at `offset`.
struct TensorBlock {
  int p;
  std::size_t offset;
  std::size_t size;
};
std::vector<TensorBlock> tensor_blocks(const ChainComplex& c, const ChainComplex& e, int n);

ChainComplex tensor(const ChainComplex& c, const ChainComplex& e);
ChainMap tensor(const ChainMap& f, const ChainMap& g);
/// a (x) b |-> (-1)^{|a||b|} b (x) a.
ChainMap braiding(const ChainComplex& c, const ChainComplex& e);

ChainComplex shift(const ChainComplex& c, int k);
ChainMap shift(const ChainMap& f, int k);

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);
/// Summands stacked in order in every degree.
ChainComplex direct_sum(const std::vector<ChainComplex>& parts);
/// Offset of summand `j` in degree n of direct_sum(parts).
std::size_t summand_offset(const std::vector<ChainComplex>& parts, std::size_t j, int n);

/// Component of a map between direct sums, from one source summand to one
/// target summand.
struct SummandBlock {
  std::size_t target;
  std::size_t source;
  ChainMap map;
  Scalar factor = 1;
};
/// Sum of the placed blocks.  `source` and `target` only need the generator
/// counts of direct_sum(source_parts) and direct_sum(target_parts).
ChainMap block_map(const std::vector<ChainComplex>& source_parts, const ChainComplex& source,
                   const std::vector<ChainComplex>& target_parts, const ChainComplex& target,
                   const std::vector<SummandBlock>& blocks);

/// Every group rewritten in Smith form (unit generators dropped), with the
/// comparison isomorphisms.
struct SimplifiedComplex {
  ChainComplex complex;
  ChainMap to;    // c -> complex
  ChainMap from;  // complex -> c
};
SimplifiedComplex simplify(const ChainComplex& c);

/// Same ring, support, presentations and differentials (grading ignored).
bool same_complex(const ChainComplex& a, const ChainComplex& b);
/// The same matrices viewed between other complexes with equal presentations.
ChainMap rewrap(const ChainMap& f, const ChainComplex& source, const ChainComplex& target);
/// (A (x) B) (x) C -> A (x) (B (x) C), a permutation in every degree.
ChainMap associator(const ChainComplex& a, const ChainComplex& b, const ChainComplex& c);
ChainComplex connective_cover(const ChainComplex& c);
/// The canonical inclusion connective_cover(c) -> c.
ChainMap connective_counit(const ChainComplex& c);
/// f : X -> Y with X non-negative, factored through connective_cover(Y).
ChainMap connective_lift(const ChainMap& f);
ChainMap connective_cover(const ChainMap& f);

FpGroup homology(const ChainComplex& c, int n);
bool is_acyclic(const ChainComplex& c);

/// H_n with generators the cycle lattice basis.
struct HomologyPresentation {
  Lattice cycles;
  FpGroup group;
};
HomologyPresentation homology_presentation(const ChainComplex& c, int n);
GroupMap homology_map(const ChainMap& f, int n);
/// H_n(f) is an isomorphism for every n <= top.
bool is_quasi_iso_through(const ChainMap& f, int top);

/// Drops every degree above `top` (a quotient complex).
ChainComplex truncate_above(const ChainComplex& c, int top);

ChainComplex mapping_cone(const ChainMap& f);
bool is_quasi_iso(const ChainMap& f);

struct ChainQuotient {
  ChainComplex complex;
  ChainMap projection;
};
ChainQuotient cokernel(const ChainMap& f);

/// Map from A (x) L  +_{A (x) K}  B (x) K  to  B (x) L.
ChainMap pushout_product(const ChainMap& f, const ChainMap& g);

/// The chain maps of degree zero, with explicit generators.
class ChainMapGroup {
 public:
  ChainMapGroup(const ChainComplex& source, const ChainComplex& target);

  const FpGroup& group() const { return solution_.group; }
  std::size_t generator_count() const { return solution_.generators.size(); }
  ChainMap generator(std::size_t i) const;
  std::optional<Matrix> coordinates(const ChainMap& f) const;

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::vector<int> degrees_;
  HomSystem::Solution solution_;
};

FpGroup chain_map_group(const ChainComplex& source, const ChainComplex& target);

ChainComplex base_change_Q(const ChainComplex& c);
ChainMap base_change_Q(const ChainMap& f);

}  // namespace hzalg
