#include "hzalg/abelian.hpp"

#include <sstream>
#include <stdexcept>

namespace hzalg {

FpGroup::FpGroup(Ring ring, std::size_t generators) : FpGroup(ring, generators, Matrix(generators, 0)) {}

FpGroup::FpGroup(Ring ring, std::size_t generators, const Matrix& relations)
    : ring_(ring),
      gens_(generators),
      relations_(relations.cols() == 0 ? Lattice(generators, ring) : Lattice(relations, ring)) {
  if (relations.rows() != generators && !(relations.cols() == 0))
    throw std::invalid_argument("FpGroup: relation rows must equal generator count");
  inv_ = presentation_invariants(gens_, relations_.basis(), ring_);
}

FpGroup FpGroup::cyclic(Ring ring, long order) {
  Matrix r(1, 1);
  r(0, 0) = order;
  return FpGroup(ring, 1, r);
}

FpGroup FpGroup::canonical(Ring ring, std::size_t free_rank, const std::vector<mpz_class>& torsion) {
  const std::size_t n = free_rank + torsion.size();
  Matrix r(n, torsion.size());
  for (std::size_t k = 0; k < torsion.size(); ++k) r(k, k) = Scalar(torsion[k]);
  return FpGroup(ring, n, r);
}

bool FpGroup::isomorphic(const FpGroup& other) const {
  return ring_ == other.ring_ && inv_.free_rank == other.inv_.free_rank && inv_.torsion == other.inv_.torsion;
}

std::string canonical_string(Ring ring, std::size_t free_rank, const std::vector<mpz_class>& torsion) {
  const char* base = ring == Ring::Integers ? "Z" : "Q";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << base;
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << base << "/" << t.get_str();
    first = false;
  }
  return first ? "0" : os.str();
}

std::string FpGroup::to_string() const { return canonical_string(ring_, inv_.free_rank, inv_.torsion); }

void require_same_ring(Ring a, Ring b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": coefficient ring mismatch");
}

GroupMap::GroupMap(FpGroup source, FpGroup target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  require_same_ring(source_.ring(), target_.ring(), "GroupMap");
  if (matrix_.rows() != target_.generators() || matrix_.cols() != source_.generators())
    throw std::invalid_argument("GroupMap: matrix shape does not match generator counts");
  if (source_.ring() == Ring::Integers && !matrix_.is_integral())
    throw std::invalid_argument("GroupMap: non-integral matrix over Z");
  if (source_.has_relations() && !target_.vanishes(matrix_ * source_.relations()))
    throw std::invalid_argument("GroupMap: relations are not carried into relations");
}

GroupMap GroupMap::identity(const FpGroup& g) { return GroupMap(g, g, Matrix::identity(g.generators())); }

GroupMap GroupMap::zero(const FpGroup& source, const FpGroup& target) {
  return GroupMap(source, target, Matrix(target.generators(), source.generators()));
}

bool GroupMap::equals(const GroupMap& other) const {
  if (matrix_.rows() != other.matrix_.rows() || matrix_.cols() != other.matrix_.cols()) return false;
  return target_.vanishes(matrix_ - other.matrix_);
}

bool GroupMap::is_zero() const { return target_.vanishes(matrix_); }

bool GroupMap::is_injective() const { return kernel(*this).group.is_trivial(); }

bool GroupMap::is_surjective() const { return cokernel(*this).group.is_trivial(); }

bool GroupMap::is_iso() const {
  // A surjection between isomorphic finitely generated groups is injective.
  return source_.isomorphic(target_) && is_surjective();
}

GroupMap compose(const GroupMap& g, const GroupMap& f) {
  if (f.target().generators() != g.source().generators())
    throw std::invalid_argument("compose: intermediate groups differ");
  return GroupMap(f.source(), g.target(), g.matrix() * f.matrix());
}

Lattice preimage_of_zero(const Matrix& matrix, const FpGroup& target) {
  const Ring ring = target.ring();
  const std::size_t n = matrix.cols();
  if (!target.has_relations()) return Lattice(kernel_basis(matrix, ring), ring);
  Matrix big = hstack(matrix, -target.relations());
  Matrix ker = kernel_basis(big, ring);
  return Lattice(ker.block(0, 0, n, ker.cols()), ring);
}

Subgroup subgroup_from_lattice(const FpGroup& ambient, const Lattice& lattice) {
  const Ring ring = ambient.ring();
  Matrix rel(lattice.rank(), 0);
  if (ambient.has_relations()) {
    auto c = lattice.coordinates(ambient.relations());
    if (!c) throw std::logic_error("subgroup lattice does not contain the ambient relations");
    rel = *c;
  }
  FpGroup sub(ring, lattice.rank(), rel);
  GroupMap inc(sub, ambient, lattice.basis());
  return {sub, inc};
}

Subgroup kernel(const GroupMap& f) {
  return subgroup_from_lattice(f.source(), preimage_of_zero(f.matrix(), f.target()));
}

Quotient cokernel(const GroupMap& f) {
  const auto& t = f.target();
  FpGroup q(t.ring(), t.generators(), hstack(t.relations(), f.matrix()));
  return {q, GroupMap(t, q, Matrix::identity(t.generators()))};
}

FpGroup image(const GroupMap& f) {
  const auto& t = f.target();
  Lattice span(hstack(f.matrix(), t.relations()), t.ring());
  Matrix rel(span.rank(), 0);
  if (t.has_relations()) rel = *span.coordinates(t.relations());
  return FpGroup(t.ring(), span.rank(), rel);
}

FpGroup direct_sum(const std::vector<FpGroup>& parts) {
  if (parts.empty()) return FpGroup();
  const Ring ring = parts.front().ring();
  std::vector<Matrix> rels;
  for (const auto& p : parts) {
    require_same_ring(ring, p.ring(), "direct_sum");
    rels.push_back(p.relations());
  }
  Matrix r = block_diagonal(rels);
  return FpGroup(ring, r.rows(), r);
}

FpGroup tensor_group(const FpGroup& a, const FpGroup& b) {
  require_same_ring(a.ring(), b.ring(), "tensor_group");
  Matrix r1 = kron(a.relations(), Matrix::identity(b.generators()));
  Matrix r2 = kron(Matrix::identity(a.generators()), b.relations());
  return FpGroup(a.ring(), a.generators() * b.generators(), hstack(r1, r2));
}

FpGroup hom_group(const FpGroup& a, const FpGroup& b) {
  require_same_ring(a.ring(), b.ring(), "hom_group");
  HomSystem sys(a.ring());
  sys.add_unknown(a, b);
  return sys.solve().group;
}

FpGroup coinvariants(const FpGroup& a, const std::vector<GroupMap>& action) {
  std::vector<Matrix> cols{a.relations()};
  for (const auto& g : action) {
    if (g.source().generators() != a.generators() || g.target().generators() != a.generators())
      throw std::invalid_argument("coinvariants: action map is not an endomorphism of the group");
    if (!g.is_iso()) throw std::invalid_argument("coinvariants: action map is not an automorphism");
    cols.push_back(g.matrix() - Matrix::identity(a.generators()));
  }
  return FpGroup(a.ring(), a.generators(), hstack(cols, a.generators()));
}

FpGroup rationalize(const FpGroup& g) {
  return FpGroup(Ring::Rationals, g.generators(), g.relations());
}

std::size_t HomSystem::add_unknown(const FpGroup& source, const FpGroup& target) {
  require_same_ring(ring_, source.ring(), "HomSystem");
  require_same_ring(ring_, target.ring(), "HomSystem");
  const std::size_t id = unknowns_.size();
  unknowns_.push_back({source, target, vars_});
  vars_ += source.generators() * target.generators();
  if (source.has_relations())
    add_constraint({{id, Matrix::identity(target.generators()), source.relations()}}, target);
  return id;
}

void HomSystem::add_constraint(const std::vector<Term>& terms, const FpGroup& modulo) {
  for (const auto& t : terms) {
    const auto& u = unknowns_.at(t.unknown);
    if (t.left.cols() != u.target.generators() || t.right.rows() != u.source.generators() ||
        t.left.rows() != modulo.generators() || t.right.cols() != terms.front().right.cols())
      throw std::invalid_argument("HomSystem: constraint term has inconsistent shape");
  }
  constraints_.push_back({terms, modulo});
}

HomSystem::Solution HomSystem::solve() const {
  // Slack variables W_c with constraint_c == R_c * W_c.
  std::size_t slack = 0, eqs = 0;
  std::vector<std::size_t> slack_off, eq_off;
  for (const auto& c : constraints_) {
    const std::size_t q = c.terms.front().right.cols();
    eq_off.push_back(eqs);
    slack_off.push_back(vars_ + slack);
    eqs += c.modulo.generators() * q;
    slack += c.modulo.relations().cols() * q;
  }
  Matrix big(eqs, vars_ + slack);
  for (std::size_t ci = 0; ci < constraints_.size(); ++ci) {
    const auto& c = constraints_[ci];
    const std::size_t q = c.terms.front().right.cols();
    for (const auto& t : c.terms) {
      const auto& u = unknowns_[t.unknown];
      big.add_block(eq_off[ci], u.offset, kron(t.right.transpose(), t.left));
    }
    if (c.modulo.relations().cols() > 0)
      big.add_block(eq_off[ci], slack_off[ci], kron(Matrix::identity(q), c.modulo.relations()), Scalar(-1));
  }
  Matrix ker = kernel_basis(big, ring_);
  Lattice sols(ker.block(0, 0, vars_, ker.cols()), ring_);

  std::vector<Matrix> nulls;
  for (const auto& u : unknowns_)
    nulls.push_back(kron(Matrix::identity(u.source.generators()), u.target.relations()));
  Matrix null_gens = block_diagonal(nulls);
  if (null_gens.rows() != vars_) null_gens = Matrix(vars_, 0);
  Matrix rel(sols.rank(), 0);
  if (null_gens.cols() > 0) {
    auto c = sols.coordinates(null_gens);
    if (!c) throw std::logic_error("HomSystem: null maps are not solutions");
    rel = *c;
  }
  auto sp = smith_presentation(sols.rank(), rel, ring_);

  Solution out;
  out.group = FpGroup(ring_, sp.gens, sp.relations);
  out.solutions = sols;
  out.to_group = sp.to;
  for (const auto& u : unknowns_) out.shapes.emplace_back(u.target.generators(), u.source.generators());
  Matrix gens = sols.basis() * sp.from;
  for (std::size_t i = 0; i < sp.gens; ++i) {
    std::vector<Matrix> maps;
    for (const auto& u : unknowns_) {
      const std::size_t r = u.target.generators(), c = u.source.generators();
      maps.push_back(unvec(gens.block(u.offset, i, r * c, 1), r, c));
    }
    out.generators.push_back(std::move(maps));
  }
  return out;
}

std::optional<Matrix> HomSystem::Solution::coordinates(const std::vector<Matrix>& maps) const {
  if (maps.size() != shapes.size()) throw std::invalid_argument("HomSystem: wrong number of maps");
  std::vector<Matrix> parts;
  std::size_t total = 0;
  for (std::size_t u = 0; u < maps.size(); ++u) {
    if (maps[u].rows() != shapes[u].first || maps[u].cols() != shapes[u].second)
      throw std::invalid_argument("HomSystem: map has wrong shape");
    parts.push_back(vec(maps[u]));
    total += parts.back().rows();
  }
  Matrix v(total, 1);
  std::size_t off = 0;
  for (const auto& p : parts) {
    v.set_block(off, 0, p);
    off += p.rows();
  }
  auto c = solutions.coordinates(v);
  if (!c) return std::nullopt;
  return to_group * *c;
}

}  // namespace hzalg
