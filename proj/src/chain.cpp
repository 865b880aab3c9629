#include "hzalg/chain.hpp"
#include "hzalg/smith.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hzalg {
namespace {

int sign_of(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

ChainComplex::ChainComplex(Ring ring, Grading grading) : ring_(ring), grading_(grading), zero_(ring, 0) {}

ChainComplex::ChainComplex(Ring ring, int lo, std::vector<FpGroup> groups, std::vector<Matrix> differentials,
                           Grading grading)
    : ring_(ring), grading_(grading), lo_(lo), groups_(std::move(groups)), diffs_(std::move(differentials)),
      zero_(ring, 0) {
  if (groups_.empty() ? !diffs_.empty() : diffs_.size() + 1 != groups_.size())
    throw std::invalid_argument("ChainComplex: need one differential between consecutive groups");
  for (const auto& g : groups_) require_same_ring(ring_, g.ring(), "ChainComplex");
  // Trim zero-generator ends so the stored support is minimal.
  while (!groups_.empty() && groups_.back().generators() == 0) {
    groups_.pop_back();
    if (!diffs_.empty()) diffs_.pop_back();
  }
  while (!groups_.empty() && groups_.front().generators() == 0) {
    groups_.erase(groups_.begin());
    if (!diffs_.empty()) diffs_.erase(diffs_.begin());
    ++lo_;
  }
  if (groups_.empty()) lo_ = 0;
  if (grading_ == Grading::NonNegative && !groups_.empty() && lo_ < 0)
    throw std::invalid_argument("ChainComplex: non-negative complex with negative degrees");
  for (std::size_t i = 0; i < diffs_.size(); ++i) {
    GroupMap d(groups_[i + 1], groups_[i], diffs_[i]);
    if (i + 1 < diffs_.size() && !groups_[i].vanishes(diffs_[i] * diffs_[i + 1]))
      throw std::invalid_argument("ChainComplex: d o d is not zero");
  }
}

const FpGroup& ChainComplex::group(int n) const {
  if (n < lo_ || n > hi()) return zero_;
  return groups_[n - lo_];
}

Matrix ChainComplex::differential(int n) const {
  if (n - 1 < lo_ || n > hi()) return Matrix(generators(n - 1), generators(n));
  return diffs_[n - 1 - lo_];
}

ChainComplex ChainComplex::with_grading(Grading g) const {
  ChainComplex out = *this;
  if (g == Grading::NonNegative && !empty() && lo_ < 0)
    throw std::invalid_argument("with_grading: complex has negative degrees");
  out.grading_ = g;
  return out;
}

std::string ChainComplex::to_string() const {
  std::ostringstream os;
  os << "{";
  for (int n = lo_; n <= hi(); ++n) os << (n == lo_ ? "" : ", ") << n << ": " << group(n).to_string();
  os << "}";
  return os.str();
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::map<int, Matrix> components)
    : source_(std::move(source)), target_(std::move(target)) {
  require_same_ring(source_.ring(), target_.ring(), "ChainMap");
  for (auto& [n, m] : components) {
    if (m.rows() != target_.generators(n) || m.cols() != source_.generators(n))
      throw std::invalid_argument("ChainMap: component shape mismatch in degree " + std::to_string(n));
    if (m.rows() > 0 && m.cols() > 0) components_.emplace(n, std::move(m));
  }
  if (source_.empty() || target_.empty()) return;
  const int lo = std::min(source_.lo(), target_.lo()), hi = std::max(source_.hi(), target_.hi()) + 1;
  for (int n = lo; n <= hi; ++n) {
    GroupMap check(source_.group(n), target_.group(n), component(n));
    Matrix diff = target_.differential(n) * component(n) - component(n - 1) * source_.differential(n);
    if (!target_.group(n - 1).vanishes(diff))
      throw std::invalid_argument("ChainMap: does not commute with differentials in degree " + std::to_string(n));
  }
}

ChainMap ChainMap::identity(const ChainComplex& c) {
  std::map<int, Matrix> comp;
  for (int n = c.lo(); n <= c.hi(); ++n) comp.emplace(n, Matrix::identity(c.generators(n)));
  return ChainMap(c, c, comp);
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) { return ChainMap(source, target, {}); }

Matrix ChainMap::component(int n) const {
  auto it = components_.find(n);
  if (it != components_.end()) return it->second;
  return Matrix(target_.generators(n), source_.generators(n));
}

GroupMap ChainMap::component_map(int n) const { return GroupMap(source_.group(n), target_.group(n), component(n)); }

bool ChainMap::equals(const ChainMap& other) const {
  const int lo = std::min(source_.lo(), target_.lo()), hi = std::max(source_.hi(), target_.hi());
  for (int n = lo; n <= hi; ++n) {
    Matrix a = component(n), b = other.component(n);
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if (!target_.group(n).vanishes(a - b)) return false;
  }
  return true;
}

bool ChainMap::is_iso() const {
  const int lo = std::min(source_.lo(), target_.lo()), hi = std::max(source_.hi(), target_.hi());
  for (int n = lo; n <= hi; ++n)
    if (!component_map(n).is_iso()) return false;
  return true;
}

bool ChainMap::is_injective() const {
  for (int n = source_.lo(); n <= source_.hi(); ++n)
    if (!component_map(n).is_injective()) return false;
  return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  std::map<int, Matrix> comp;
  const auto& s = f.source();
  for (int n = s.lo(); n <= s.hi(); ++n) comp.emplace(n, g.component(n) * f.component(n));
  return ChainMap(s, g.target(), comp);
}

ChainMap operator+(const ChainMap& a, const ChainMap& b) {
  std::map<int, Matrix> comp;
  const auto& s = a.source();
  for (int n = s.lo(); n <= s.hi(); ++n) comp.emplace(n, a.component(n) + b.component(n));
  return ChainMap(s, a.target(), comp);
}

ChainMap operator-(const ChainMap& a) {
  std::map<int, Matrix> comp;
  const auto& s = a.source();
  for (int n = s.lo(); n <= s.hi(); ++n) comp.emplace(n, -a.component(n));
  return ChainMap(s, a.target(), comp);
}

ChainComplex sphere(int n, Ring ring, Grading grading) {
  return ChainComplex(ring, n, {FpGroup::free(ring, 1)}, {}, grading);
}

ChainComplex disk(int n, Ring ring, Grading grading) {
  return ChainComplex(ring, n - 1, {FpGroup::free(ring, 1), FpGroup::free(ring, 1)}, {Matrix{{1}}}, grading);
}

ChainComplex zero_complex(Ring ring, Grading grading) { return ChainComplex(ring, grading); }

std::vector<TensorBlock> tensor_blocks(const ChainComplex& c, const ChainComplex& e, int n) {
  std::vector<TensorBlock> out;
  std::size_t off = 0;
  for (int p = c.lo(); p <= c.hi(); ++p) {
    const std::size_t size = c.generators(p) * e.generators(n - p);
    if (size == 0) continue;
    out.push_back({p, off, size});
    off += size;
  }
  return out;
}

namespace {

std::size_t total_size(const std::vector<TensorBlock>& blocks) {
  return blocks.empty() ? 0 : blocks.back().offset + blocks.back().size;
}

const TensorBlock* find_block(const std::vector<TensorBlock>& blocks, int p) {
  for (const auto& b : blocks)
    if (b.p == p) return &b;
  return nullptr;
}

}  // namespace

ChainComplex tensor(const ChainComplex& c, const ChainComplex& e) {
  require_same_ring(c.ring(), e.ring(), "tensor");
  const Grading grading = (c.grading() == Grading::NonNegative && e.grading() == Grading::NonNegative)
                              ? Grading::NonNegative
                              : Grading::Unbounded;
  if (c.empty() || e.empty()) return zero_complex(c.ring(), grading);
  const int lo = c.lo() + e.lo(), hi = c.hi() + e.hi();
  std::vector<FpGroup> groups;
  std::vector<std::vector<TensorBlock>> layout;
  for (int n = lo; n <= hi; ++n) {
    std::vector<FpGroup> parts;
    layout.push_back(tensor_blocks(c, e, n));
    for (const auto& b : layout.back()) parts.push_back(tensor_group(c.group(b.p), e.group(n - b.p)));
    groups.push_back(parts.empty() ? FpGroup(c.ring(), 0) : direct_sum(parts));
  }
  std::vector<Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    const auto& src = layout[n - lo];
    const auto& tgt = layout[n - 1 - lo];
    Matrix d(total_size(tgt), total_size(src));
    for (const auto& b : src) {
      const int p = b.p, q = n - p;
      if (const auto* t = find_block(tgt, p - 1))
        d.set_block(t->offset, b.offset, kron(c.differential(p), Matrix::identity(e.generators(q))));
      if (const auto* t = find_block(tgt, p))
        d.add_block(t->offset, b.offset, kron(Matrix::identity(c.generators(p)), e.differential(q)),
                    Scalar(sign_of(p)));
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex(c.ring(), lo, std::move(groups), std::move(diffs), grading);
}

ChainMap tensor(const ChainMap& f, const ChainMap& g) {
  ChainComplex s = tensor(f.source(), g.source()), t = tensor(f.target(), g.target());
  std::map<int, Matrix> comp;
  for (int n = s.lo(); n <= s.hi(); ++n) {
    auto sb = tensor_blocks(f.source(), g.source(), n);
    auto tb = tensor_blocks(f.target(), g.target(), n);
    Matrix m(t.generators(n), s.generators(n));
    for (const auto& b : sb)
      if (const auto* tt = find_block(tb, b.p))
        m.set_block(tt->offset, b.offset, kron(f.component(b.p), g.component(n - b.p)));
    comp.emplace(n, std::move(m));
  }
  return ChainMap(s, t, comp);
}

ChainMap braiding(const ChainComplex& c, const ChainComplex& e) {
  ChainComplex s = tensor(c, e), t = tensor(e, c);
  std::map<int, Matrix> comp;
  for (int n = s.lo(); n <= s.hi(); ++n) {
    auto sb = tensor_blocks(c, e, n);
    auto tb = tensor_blocks(e, c, n);
    Matrix m(t.generators(n), s.generators(n));
    for (const auto& b : sb) {
      const int p = b.p, q = n - p;
      const auto* tt = find_block(tb, q);
      const std::size_t cp = c.generators(p), eq = e.generators(q);
      for (std::size_t a = 0; a < cp; ++a)
        for (std::size_t x = 0; x < eq; ++x) m(tt->offset + x * cp + a, b.offset + a * eq + x) = sign_of(long(p) * q);
    }
    comp.emplace(n, std::move(m));
  }
  return ChainMap(s, t, comp);
}

ChainComplex shift(const ChainComplex& c, int k) {
  const Grading grading =
      (k >= 0 && c.grading() == Grading::NonNegative) ? Grading::NonNegative : Grading::Unbounded;
  if (c.empty()) return zero_complex(c.ring(), grading);
  std::vector<FpGroup> groups;
  std::vector<Matrix> diffs;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    groups.push_back(c.group(n));
    if (n > c.lo()) diffs.push_back(c.differential(n) * Scalar(sign_of(k)));
  }
  return ChainComplex(c.ring(), c.lo() + k, std::move(groups), std::move(diffs), grading);
}

ChainMap shift(const ChainMap& f, int k) {
  std::map<int, Matrix> comp;
  for (int n = f.source().lo(); n <= f.source().hi(); ++n) comp.emplace(n + k, f.component(n));
  return ChainMap(shift(f.source(), k), shift(f.target(), k), comp);
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
  require_same_ring(a.ring(), b.ring(), "direct_sum");
  const Grading grading = (a.grading() == Grading::NonNegative && b.grading() == Grading::NonNegative)
                              ? Grading::NonNegative
                              : Grading::Unbounded;
  if (a.empty()) return b.with_grading(grading);
  if (b.empty()) return a.with_grading(grading);
  const int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  std::vector<FpGroup> groups;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    groups.push_back(direct_sum({a.group(n), b.group(n)}));
    if (n > lo) diffs.push_back(block_diagonal({a.differential(n), b.differential(n)}));
  }
  return ChainComplex(a.ring(), lo, std::move(groups), std::move(diffs), grading);
}

namespace {

struct Cover {
  ChainComplex complex;
  Matrix inclusion;  // degree-0 cycles into C_0
};

Cover cover(const ChainComplex& c) {
  const Ring ring = c.ring();
  if (c.empty() || c.hi() < 0) return {zero_complex(ring, Grading::NonNegative), Matrix()};
  if (c.lo() > 0) return {c.with_grading(Grading::NonNegative), Matrix()};
  Lattice z0 = preimage_of_zero(c.differential(0), c.group(-1));
  Subgroup cycles = subgroup_from_lattice(c.group(0), z0);
  std::vector<FpGroup> groups{cycles.group};
  std::vector<Matrix> diffs;
  for (int n = 1; n <= c.hi(); ++n) {
    groups.push_back(c.group(n));
    if (n == 1) {
      auto coords = z0.coordinates(c.differential(1));
      if (!coords) throw std::logic_error("connective_cover: boundaries are not cycles");
      diffs.push_back(*coords);
    } else {
      diffs.push_back(c.differential(n));
    }
  }
  return {ChainComplex(ring, 0, std::move(groups), std::move(diffs), Grading::NonNegative), z0.basis()};
}

}  // namespace

ChainComplex connective_cover(const ChainComplex& c) { return cover(c).complex; }

ChainMap connective_counit(const ChainComplex& c) {
  Cover cv = cover(c);
  std::map<int, Matrix> comp;
  for (int n = std::max(0, cv.complex.lo()); n <= cv.complex.hi(); ++n)
    comp.emplace(n, (n == 0 && c.lo() <= 0) ? cv.inclusion : Matrix::identity(c.generators(n)));
  return ChainMap(cv.complex, c.with_grading(Grading::Unbounded), comp);
}

HomologyPresentation homology_presentation(const ChainComplex& c, int n) {
  const Ring ring = c.ring();
  Lattice z = c.generators(n) == 0 ? Lattice(0, ring) : preimage_of_zero(c.differential(n), c.group(n - 1));
  Matrix kill = hstack(c.group(n).relations(), c.differential(n + 1));
  auto coords = z.coordinates(kill);
  if (!coords) throw std::logic_error("homology: boundaries are not cycles");
  return {z, FpGroup(ring, z.rank(), *coords)};
}

FpGroup homology(const ChainComplex& c, int n) { return homology_presentation(c, n).group; }

GroupMap homology_map(const ChainMap& f, int n) {
  auto hs = homology_presentation(f.source(), n), ht = homology_presentation(f.target(), n);
  auto coords = ht.cycles.coordinates(f.component(n) * hs.cycles.basis());
  if (!coords) throw std::logic_error("homology_map: cycles not carried to cycles");
  return GroupMap(hs.group, ht.group, *coords);
}

bool is_quasi_iso_through(const ChainMap& f, int top) {
  const int lo = std::min(f.source().lo(), f.target().lo());
  for (int n = lo; n <= top; ++n)
    if (!homology_map(f, n).is_iso()) return false;
  return true;
}

ChainComplex truncate_above(const ChainComplex& c, int top) {
  if (c.empty() || c.hi() <= top) return c;
  std::vector<FpGroup> groups;
  std::vector<Matrix> diffs;
  for (int n = c.lo(); n <= top; ++n) {
    groups.push_back(c.group(n));
    if (n > c.lo()) diffs.push_back(c.differential(n));
  }
  return ChainComplex(c.ring(), c.lo(), std::move(groups), std::move(diffs), c.grading());
}

bool is_acyclic(const ChainComplex& c) {
  for (int n = c.lo(); n <= c.hi(); ++n)
    if (!homology(c, n).is_trivial()) return false;
  return true;
}

ChainComplex mapping_cone(const ChainMap& f) {
  const auto& x = f.source();
  const auto& y = f.target();
  if (x.empty()) return y.with_grading(Grading::Unbounded);
  const int lo = y.empty() ? x.lo() + 1 : std::min(x.lo() + 1, y.lo());
  const int hi = y.empty() ? x.hi() + 1 : std::max(x.hi() + 1, y.hi());
  std::vector<FpGroup> groups;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    groups.push_back(direct_sum({x.group(n - 1), y.group(n)}));
    if (n == lo) continue;
    const std::size_t xa = x.generators(n - 1), xb = x.generators(n - 2);
    Matrix d(xb + y.generators(n - 1), xa + y.generators(n));
    d.set_block(0, 0, -x.differential(n - 1));
    d.set_block(xb, 0, f.component(n - 1));
    d.set_block(xb, xa, y.differential(n));
    diffs.push_back(std::move(d));
  }
  return ChainComplex(x.ring(), lo, std::move(groups), std::move(diffs));
}

bool is_quasi_iso(const ChainMap& f) { return is_acyclic(mapping_cone(f)); }

ChainQuotient cokernel(const ChainMap& f) {
  const auto& t = f.target();
  if (t.empty()) return {t, ChainMap::identity(t)};
  std::vector<FpGroup> groups;
  std::vector<Matrix> diffs;
  std::map<int, Matrix> proj;
  for (int n = t.lo(); n <= t.hi(); ++n) {
    groups.push_back(FpGroup(t.ring(), t.generators(n), hstack(t.group(n).relations(), f.component(n))));
    if (n > t.lo()) diffs.push_back(t.differential(n));
    proj.emplace(n, Matrix::identity(t.generators(n)));
  }
  ChainComplex q(t.ring(), t.lo(), std::move(groups), std::move(diffs), t.grading());
  return {q, ChainMap(t, q, proj)};
}

ChainMap pushout_product(const ChainMap& f, const ChainMap& g) {
  require_same_ring(f.source().ring(), g.source().ring(), "pushout_product");
  const auto &a = f.source(), &b = f.target(), &k = g.source(), &l = g.target();
  ChainMap g_a = tensor(ChainMap::identity(a), g);  // A(x)K -> A(x)L
  ChainMap f_k = tensor(f, ChainMap::identity(k));  // A(x)K -> B(x)K
  ChainMap f_l = tensor(f, ChainMap::identity(l));  // A(x)L -> B(x)L
  ChainMap g_b = tensor(ChainMap::identity(b), g);  // B(x)K -> B(x)L
  ChainComplex ak = g_a.source(), al = g_a.target(), bk = f_k.target(), bl = g_b.target();
  ChainComplex sum = direct_sum(al, bk);
  std::map<int, Matrix> h, out;
  for (int n = ak.lo(); n <= ak.hi(); ++n) h.emplace(n, vstack(g_a.component(n), -f_k.component(n)));
  ChainQuotient q = cokernel(ChainMap(ak, sum, h));
  for (int n = sum.lo(); n <= sum.hi(); ++n) out.emplace(n, hstack(f_l.component(n), g_b.component(n)));
  return ChainMap(q.complex, bl, out);
}

ChainMapGroup::ChainMapGroup(const ChainComplex& source, const ChainComplex& target)
    : source_(source), target_(target) {
  require_same_ring(source.ring(), target.ring(), "chain_map_group");
  HomSystem sys(source.ring());
  std::map<int, std::size_t> id;
  for (int n = source.lo(); n <= source.hi(); ++n)
    if (target.generators(n) > 0 && source.generators(n) > 0) {
      id[n] = sys.add_unknown(source.group(n), target.group(n));
      degrees_.push_back(n);
    }
  for (int n = source.lo(); n <= source.hi() + 1; ++n) {
    const std::size_t cols = source.generators(n);
    if (cols == 0 || target.generators(n - 1) == 0) continue;
    std::vector<HomSystem::Term> terms;
    if (id.count(n)) terms.push_back({id[n], target.differential(n), Matrix::identity(cols)});
    if (id.count(n - 1))
      terms.push_back({id[n - 1], -Matrix::identity(target.generators(n - 1)), source.differential(n)});
    if (!terms.empty()) sys.add_constraint(terms, target.group(n - 1));
  }
  solution_ = sys.solve();
}

ChainMap ChainMapGroup::generator(std::size_t i) const {
  std::map<int, Matrix> comp;
  for (std::size_t u = 0; u < degrees_.size(); ++u) comp.emplace(degrees_[u], solution_.generators.at(i)[u]);
  return ChainMap(source_, target_, comp);
}

std::optional<Matrix> ChainMapGroup::coordinates(const ChainMap& f) const {
  std::vector<Matrix> maps;
  for (int n : degrees_) maps.push_back(f.component(n));
  return solution_.coordinates(maps);
}

FpGroup chain_map_group(const ChainComplex& source, const ChainComplex& target) {
  return ChainMapGroup(source, target).group();
}

ChainComplex base_change_Q(const ChainComplex& c) {
  std::vector<FpGroup> groups;
  std::vector<Matrix> diffs;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    groups.push_back(rationalize(c.group(n)));
    if (n > c.lo()) diffs.push_back(c.differential(n));
  }
  return ChainComplex(Ring::Rationals, c.lo(), std::move(groups), std::move(diffs), c.grading());
}

ChainMap base_change_Q(const ChainMap& f) {
  std::map<int, Matrix> comp;
  for (int n = f.source().lo(); n <= f.source().hi(); ++n) comp.emplace(n, f.component(n));
  return ChainMap(base_change_Q(f.source()), base_change_Q(f.target()), comp);
}

}  // namespace hzalg

namespace hzalg {

ChainComplex direct_sum(const std::vector<ChainComplex>& parts) {
  if (parts.empty()) return zero_complex();
  ChainComplex out = parts[0];
  for (std::size_t j = 1; j < parts.size(); ++j) out = direct_sum(out, parts[j]);
  return out;
}

std::size_t summand_offset(const std::vector<ChainComplex>& parts, std::size_t j, int n) {
  std::size_t off = 0;
  for (std::size_t i = 0; i < j; ++i) off += parts[i].generators(n);
  return off;
}

bool same_complex(const ChainComplex& a, const ChainComplex& b) {
  if (a.ring() != b.ring() || a.empty() != b.empty()) return false;
  if (a.empty()) return true;
  if (a.lo() != b.lo() || a.hi() != b.hi()) return false;
  for (int n = a.lo(); n <= a.hi(); ++n) {
    const auto &ga = a.group(n), &gb = b.group(n);
    if (ga.generators() != gb.generators() || !(ga.relations() == gb.relations())) return false;
    if (n > a.lo() && !(a.differential(n) == b.differential(n))) return false;
  }
  return true;
}

ChainMap rewrap(const ChainMap& f, const ChainComplex& source, const ChainComplex& target) {
  std::map<int, Matrix> comp;
  for (int n = source.lo(); n <= source.hi(); ++n) comp.emplace(n, f.component(n));
  return ChainMap(source, target, comp);
}

ChainMap associator(const ChainComplex& a, const ChainComplex& b, const ChainComplex& c) {
  ChainComplex ab = tensor(a, b), bc = tensor(b, c);
  ChainComplex s = tensor(ab, c), t = tensor(a, bc);
  auto offset_of = [](const std::vector<TensorBlock>& blocks, int p) -> std::size_t {
    for (const auto& blk : blocks)
      if (blk.p == p) return blk.offset;
    throw std::logic_error("associator: missing tensor block");
  };
  std::map<int, Matrix> comp;
  for (int n = s.lo(); n <= s.hi() && !s.empty(); ++n) {
    Matrix m(t.generators(n), s.generators(n));
    const auto left = tensor_blocks(ab, c, n), right = tensor_blocks(a, bc, n);
    for (int p = a.lo(); p <= a.hi(); ++p)
      for (int q = b.lo(); q <= b.hi(); ++q) {
        const int r = n - p - q;
        const std::size_t na = a.generators(p), nb = b.generators(q), nc = c.generators(r);
        if (na * nb * nc == 0) continue;
        const std::size_t l0 = offset_of(left, p + q), ab0 = offset_of(tensor_blocks(a, b, p + q), p);
        const std::size_t r0 = offset_of(right, p), bc0 = offset_of(tensor_blocks(b, c, n - p), q);
        const std::size_t nbc = bc.generators(n - p);
        for (std::size_t x = 0; x < na; ++x)
          for (std::size_t y = 0; y < nb; ++y)
            for (std::size_t z = 0; z < nc; ++z)
              m(r0 + x * nbc + bc0 + y * nc + z, l0 + (ab0 + x * nb + y) * nc + z) = 1;
      }
    comp.emplace(n, std::move(m));
  }
  return ChainMap(s, t, comp);
}

}  // namespace hzalg

namespace hzalg {

ChainMap connective_lift(const ChainMap& f) {
  const ChainComplex& x = f.source();
  const ChainComplex& y = f.target();
  if (!x.empty() && x.lo() < 0) throw std::invalid_argument("connective_lift: source has negative degrees");
  ChainComplex c0 = connective_cover(y);
  std::map<int, Matrix> comp;
  for (int n = std::max(0, x.lo()); n <= x.hi() && !x.empty(); ++n) {
    if (c0.generators(n) == 0) continue;
    if (n == 0 && y.lo() <= 0) {
      Lattice z0 = preimage_of_zero(y.differential(0), y.group(-1));
      auto coords = z0.coordinates(f.component(0));
      if (!coords) throw std::logic_error("connective_lift: degree-0 image is not a cycle");
      comp.emplace(0, *coords);
    } else {
      comp.emplace(n, f.component(n));
    }
  }
  return ChainMap(x, c0, comp);
}

ChainMap connective_cover(const ChainMap& f) {
  return connective_lift(compose(f, connective_counit(f.source())));
}

}  // namespace hzalg

namespace hzalg {

ChainMap block_map(const std::vector<ChainComplex>& source_parts, const ChainComplex& source,
                   const std::vector<ChainComplex>& target_parts, const ChainComplex& target,
                   const std::vector<SummandBlock>& blocks) {
  std::map<int, Matrix> comp;
  if (!source.empty())
    for (int n = source.lo(); n <= source.hi(); ++n) comp.emplace(n, Matrix(target.generators(n), source.generators(n)));
  for (const auto& b : blocks) {
    const ChainComplex& s = b.map.source();
    for (int n = s.lo(); n <= s.hi() && !s.empty(); ++n) {
      Matrix m = b.map.component(n);
      if (m.empty()) continue;
      comp.at(n).add_block(summand_offset(target_parts, b.target, n), summand_offset(source_parts, b.source, n), m,
                           b.factor);
    }
  }
  return ChainMap(source, target, comp);
}

SimplifiedComplex simplify(const ChainComplex& c) {
  if (c.empty()) return {c, ChainMap::identity(c), ChainMap::identity(c)};
  std::vector<SmithPresentation> sp;
  std::vector<FpGroup> groups;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    const FpGroup& g = c.group(n);
    sp.push_back(smith_presentation(g.generators(), g.relations(), c.ring()));
    groups.emplace_back(c.ring(), sp.back().gens, sp.back().relations);
  }
  std::vector<Matrix> diffs;
  for (int n = c.lo() + 1; n <= c.hi(); ++n) {
    const std::size_t i = std::size_t(n - c.lo());
    diffs.push_back(sp[i - 1].to * c.differential(n) * sp[i].from);
  }
  ChainComplex s(c.ring(), c.lo(), groups, diffs, c.grading());
  std::map<int, Matrix> to, from;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    to.emplace(n, sp[std::size_t(n - c.lo())].to);
    from.emplace(n, sp[std::size_t(n - c.lo())].from);
  }
  return {s, ChainMap(c, s, to), ChainMap(s, c, from)};
}

}  // namespace hzalg
