#include "hzalg/simplicial.hpp"

#include <stdexcept>

namespace hzalg {
namespace {

bool same_in(const FpGroup& g, const Matrix& a, const Matrix& b) { return g.vanishes(a - b); }

// Splits theta into its image (a face composite) and a surjection.
struct Factored {
  std::vector<std::size_t> missing;  // values of [n] not hit, increasing
  std::vector<std::size_t> repeats;  // i with eps(i) == eps(i+1), increasing
  std::size_t middle = 0;            // j with eps : [m] ->> [j]
};

Factored factor(const Monotone& theta, std::size_t n) {
  Factored f;
  std::vector<bool> hit(n + 1, false);
  for (std::size_t v : theta) {
    if (v > n) throw std::invalid_argument("monotone map out of range");
    hit[v] = true;
  }
  for (std::size_t v = 0; v <= n; ++v)
    if (!hit[v]) f.missing.push_back(v);
  for (std::size_t i = 0; i + 1 < theta.size(); ++i) {
    if (theta[i] > theta[i + 1]) throw std::invalid_argument("map is not monotone");
    if (theta[i] == theta[i + 1]) f.repeats.push_back(i);
  }
  f.middle = n - f.missing.size();
  return f;
}

Monotone coface(std::size_t n, std::size_t i) {
  // d^i : [n-1] -> [n] skipping i
  Monotone m;
  for (std::size_t x = 0; x < n; ++x) m.push_back(x < i ? x : x + 1);
  return m;
}

Monotone codegeneracy(std::size_t n, std::size_t i) {
  // s^i : [n+1] -> [n] hitting i twice
  Monotone m;
  for (std::size_t x = 0; x <= n + 1; ++x) m.push_back(x <= i ? x : x - 1);
  return m;
}

Matrix stacked_faces(const SimplicialAbelianGroup& a, std::size_t k) {
  Matrix out(0, a.generators(k));
  for (std::size_t i = 1; i <= k; ++i) out = vstack(out, a.face(k, i));
  return out;
}

Lattice normalized_lattice(const SimplicialAbelianGroup& a, std::size_t k) {
  if (k == 0) return Lattice(Matrix::identity(a.generators(0)), a.ring());
  std::vector<FpGroup> copies(k, a.group(k - 1));
  return preimage_of_zero(stacked_faces(a, k), direct_sum(copies));
}

}  // namespace

SimplicialAbelianGroup::SimplicialAbelianGroup(Ring ring, std::size_t truncation, std::vector<FpGroup> groups,
                                               std::vector<Operators> faces, std::vector<Operators> degeneracies)
    : ring_(ring), truncation_(truncation) {
  const std::size_t t = truncation_;
  if (groups.size() != t + 1 || faces.size() != t + 1 || degeneracies.size() != t + 1)
    throw std::invalid_argument("SimplicialAbelianGroup: data must cover degrees 0..T");
  for (std::size_t k = 0; k <= t; ++k) {
    require_same_ring(ring_, groups[k].ring(), "SimplicialAbelianGroup");
    if (k > 0 && faces[k].size() != k + 1) throw std::invalid_argument("SimplicialAbelianGroup: face count");
    if (k < t && degeneracies[k].size() != k + 1)
      throw std::invalid_argument("SimplicialAbelianGroup: degeneracy count");
    for (std::size_t i = 0; k > 0 && i <= k; ++i) GroupMap(groups[k], groups[k - 1], faces[k][i]);
    for (std::size_t i = 0; k < t && i <= k; ++i) GroupMap(groups[k], groups[k + 1], degeneracies[k][i]);
  }
  data_ = std::make_shared<const Data>(Data{std::move(groups), std::move(faces), std::move(degeneracies)});
}

Matrix SimplicialAbelianGroup::operator_matrix(const Monotone& theta, std::size_t n) const {
  Factored f = factor(theta, n);
  Matrix m = Matrix::identity(generators(n));
  std::size_t deg = n;
  for (auto it = f.missing.rbegin(); it != f.missing.rend(); ++it) {
    m = face(deg, *it) * m;
    --deg;
  }
  for (std::size_t i : f.repeats) {
    m = degeneracy(deg, i) * m;
    ++deg;
  }
  return m;
}

bool SimplicialAbelianGroup::validate() const {
  const std::size_t t = truncation_;
  for (std::size_t k = 0; k <= t; ++k) {
    for (std::size_t j = 1; k >= 2 && j <= k; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (!same_in(group(k - 2), face(k - 1, i) * face(k, j), face(k - 1, j - 1) * face(k, i))) return false;
    for (std::size_t j = 0; k + 2 <= t && j <= k; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        if (!same_in(group(k + 2), degeneracy(k + 1, i) * degeneracy(k, j),
                     degeneracy(k + 1, j + 1) * degeneracy(k, i)))
          return false;
    for (std::size_t j = 0; k < t && j <= k; ++j)
      for (std::size_t i = 0; i <= k + 1; ++i) {
        Matrix lhs = face(k + 1, i) * degeneracy(k, j), rhs;
        if (i == j || i == j + 1)
          rhs = Matrix::identity(generators(k));
        else if (i < j)
          rhs = degeneracy(k - 1, j - 1) * face(k, i);
        else
          rhs = degeneracy(k - 1, j) * face(k, i - 1);
        if (!same_in(group(k), lhs, rhs)) return false;
      }
  }
  return true;
}

bool SimplicialAbelianGroup::is_free() const {
  for (const auto& g : data_->groups)
    if (g.has_relations()) return false;
  return true;
}

bool SimplicialMap::validate() const {
  const std::size_t t = source.truncation();
  if (target.truncation() != t || levels.size() != t + 1) return false;
  for (std::size_t k = 0; k <= t; ++k) {
    if (levels[k].rows() != target.generators(k) || levels[k].cols() != source.generators(k)) return false;
    if (source.group(k).has_relations() && !target.group(k).vanishes(levels[k] * source.group(k).relations()))
      return false;
    for (std::size_t i = 0; k > 0 && i <= k; ++i)
      if (!same_in(target.group(k - 1), levels[k - 1] * source.face(k, i), target.face(k, i) * levels[k]))
        return false;
    for (std::size_t i = 0; k < t && i <= k; ++i)
      if (!same_in(target.group(k + 1), levels[k + 1] * source.degeneracy(k, i),
                   target.degeneracy(k, i) * levels[k]))
        return false;
  }
  return true;
}

bool SimplicialMap::is_iso() const {
  for (std::size_t k = 0; k <= source.truncation(); ++k)
    if (!GroupMap(source.group(k), target.group(k), levels[k]).is_iso()) return false;
  return true;
}

SimplicialAbelianGroup free_abelian(const PointedSimplicialSet& k, Ring ring) {
  const std::size_t t = k.truncation();
  std::vector<FpGroup> groups;
  std::vector<SimplicialAbelianGroup::Operators> faces(t + 1), degens(t + 1);
  for (std::size_t d = 0; d <= t; ++d) groups.push_back(FpGroup::free(ring, k.count(d) - 1));
  for (std::size_t d = 0; d <= t; ++d) {
    for (std::size_t i = 0; d > 0 && i <= d; ++i) {
      Matrix m(k.count(d - 1) - 1, k.count(d) - 1);
      for (std::size_t x = 1; x < k.count(d); ++x)
        if (std::size_t y = k.face(d, i, x)) m(y - 1, x - 1) = 1;
      faces[d].push_back(std::move(m));
    }
    for (std::size_t i = 0; d < t && i <= d; ++i) {
      Matrix m(k.count(d + 1) - 1, k.count(d) - 1);
      for (std::size_t x = 1; x < k.count(d); ++x)
        if (std::size_t y = k.degeneracy(d, i, x)) m(y - 1, x - 1) = 1;
      degens[d].push_back(std::move(m));
    }
  }
  return SimplicialAbelianGroup(ring, t, groups, faces, degens);
}

std::vector<Matrix> free_abelian_levels(const PointedMap& f) {
  std::vector<Matrix> levels;
  for (std::size_t k = 0; k <= f.source.truncation(); ++k) {
    Matrix m(f.target.count(k) - 1, f.source.count(k) - 1);
    for (std::size_t x = 1; x < f.source.count(k); ++x)
      if (std::size_t y = f.images[k][x]) m(y - 1, x - 1) = 1;
    levels.push_back(std::move(m));
  }
  return levels;
}

SimplicialMap free_abelian(const PointedMap& f, Ring ring) {
  return {free_abelian(f.source, ring), free_abelian(f.target, ring), free_abelian_levels(f)};
}

SimplicialAbelianGroup constant_simplicial(const FpGroup& a, std::size_t t) {
  std::vector<SimplicialAbelianGroup::Operators> faces(t + 1), degens(t + 1);
  const Matrix id = Matrix::identity(a.generators());
  for (std::size_t k = 0; k <= t; ++k) {
    if (k > 0) faces[k].assign(k + 1, id);
    if (k < t) degens[k].assign(k + 1, id);
  }
  return SimplicialAbelianGroup(a.ring(), t, std::vector<FpGroup>(t + 1, a), faces, degens);
}

SimplicialAbelianGroup tensor(const SimplicialAbelianGroup& a, const SimplicialAbelianGroup& b) {
  require_same_ring(a.ring(), b.ring(), "tensor");
  if (a.truncation() != b.truncation()) throw std::invalid_argument("tensor: truncations differ");
  const std::size_t t = a.truncation();
  std::vector<FpGroup> groups;
  std::vector<SimplicialAbelianGroup::Operators> faces(t + 1), degens(t + 1);
  for (std::size_t k = 0; k <= t; ++k) {
    groups.push_back(tensor_group(a.group(k), b.group(k)));
    for (std::size_t i = 0; k > 0 && i <= k; ++i) faces[k].push_back(kron(a.face(k, i), b.face(k, i)));
    for (std::size_t i = 0; k < t && i <= k; ++i) degens[k].push_back(kron(a.degeneracy(k, i), b.degeneracy(k, i)));
  }
  return SimplicialAbelianGroup(a.ring(), t, groups, faces, degens);
}

SimplicialAbelianGroup direct_sum(const SimplicialAbelianGroup& a, const SimplicialAbelianGroup& b) {
  require_same_ring(a.ring(), b.ring(), "direct_sum");
  if (a.truncation() != b.truncation()) throw std::invalid_argument("direct_sum: truncations differ");
  const std::size_t t = a.truncation();
  std::vector<FpGroup> groups;
  std::vector<SimplicialAbelianGroup::Operators> faces(t + 1), degens(t + 1);
  for (std::size_t k = 0; k <= t; ++k) {
    groups.push_back(direct_sum({a.group(k), b.group(k)}));
    for (std::size_t i = 0; k > 0 && i <= k; ++i) faces[k].push_back(block_diagonal({a.face(k, i), b.face(k, i)}));
    for (std::size_t i = 0; k < t && i <= k; ++i)
      degens[k].push_back(block_diagonal({a.degeneracy(k, i), b.degeneracy(k, i)}));
  }
  return SimplicialAbelianGroup(a.ring(), t, groups, faces, degens);
}

SimplicialAbelianGroup change_basis(const SimplicialAbelianGroup& a, const std::vector<Matrix>& p) {
  const std::size_t t = a.truncation();
  std::vector<Matrix> inv;
  for (std::size_t k = 0; k <= t; ++k) {
    auto q = inverse(p.at(k), a.ring());
    if (!q) throw std::invalid_argument("change_basis: matrix is not invertible over the ring");
    inv.push_back(*q);
  }
  std::vector<FpGroup> groups;
  std::vector<SimplicialAbelianGroup::Operators> faces(t + 1), degens(t + 1);
  for (std::size_t k = 0; k <= t; ++k) {
    groups.emplace_back(a.ring(), a.generators(k), p[k] * a.group(k).relations());
    for (std::size_t i = 0; k > 0 && i <= k; ++i) faces[k].push_back(p[k - 1] * a.face(k, i) * inv[k]);
    for (std::size_t i = 0; k < t && i <= k; ++i) degens[k].push_back(p[k + 1] * a.degeneracy(k, i) * inv[k]);
  }
  return SimplicialAbelianGroup(a.ring(), t, groups, faces, degens);
}

const Lattice& SimplicialAbelianGroup::moore_lattice(std::size_t k) const {
  {
    std::lock_guard<std::mutex> hold(data_->memo->lock);
    auto it = data_->memo->moore.find(k);
    if (it != data_->memo->moore.end()) return it->second;
  }
  Lattice lat = normalized_lattice(*this, k);
  std::lock_guard<std::mutex> hold(data_->memo->lock);
  return data_->memo->moore.try_emplace(k, std::move(lat)).first->second;
}

const Matrix& SimplicialAbelianGroup::moore_projection(std::size_t k) const {
  {
    std::lock_guard<std::mutex> hold(data_->memo->lock);
    auto it = data_->memo->projection.find(k);
    if (it != data_->memo->projection.end()) return it->second;
  }
  if (group(k).has_relations()) throw std::invalid_argument("normalized_projection: needs free groups");
  const Matrix& nb = moore_lattice(k).basis();
  Matrix deg(generators(k), 0);
  for (std::size_t i = 0; k > 0 && i < k; ++i) deg = hstack(deg, degeneracy(k - 1, i));
  Lattice dl(deg, ring());
  Matrix full = hstack(nb, dl.basis());
  auto inv = inverse(full, ring());
  if (full.rows() != full.cols() || !inv)
    throw std::logic_error("normalized_projection: normalized and degenerate parts do not split");
  Matrix p = inv->block(0, 0, nb.cols(), full.cols());
  std::lock_guard<std::mutex> hold(data_->memo->lock);
  return data_->memo->projection.try_emplace(k, std::move(p)).first->second;
}

Matrix normalized_basis(const SimplicialAbelianGroup& a, std::size_t k) { return a.moore_lattice(k).basis(); }

ChainComplex normalize(const SimplicialAbelianGroup& a) {
  const std::size_t t = a.truncation();
  std::vector<Lattice> lat;
  std::vector<FpGroup> groups;
  std::vector<Matrix> diffs;
  for (std::size_t k = 0; k <= t; ++k) {
    lat.push_back(a.moore_lattice(k));
    groups.push_back(subgroup_from_lattice(a.group(k), lat.back()).group);
    if (k == 0) continue;
    auto c = lat[k - 1].coordinates(a.face(k, 0) * lat[k].basis());
    if (!c) throw std::logic_error("normalize: d_0 leaves the normalized subgroup");
    diffs.push_back(*c);
  }
  return ChainComplex(a.ring(), 0, groups, diffs, Grading::NonNegative);
}

ChainMap normalize(const SimplicialMap& f) {
  ChainComplex s = normalize(f.source), t = normalize(f.target);
  std::map<int, Matrix> comp;
  for (std::size_t k = 0; k <= f.source.truncation(); ++k) {
    const Lattice& tl = f.target.moore_lattice(k);
    auto c = tl.coordinates(f.levels[k] * normalized_basis(f.source, k));
    if (!c) throw std::logic_error("normalize: map leaves the normalized subgroup");
    comp.emplace(int(k), *c);
  }
  return ChainMap(s, t, comp);
}

Matrix normalized_projection(const SimplicialAbelianGroup& a, std::size_t k) { return a.moore_projection(k); }

std::vector<Monotone> surjections(std::size_t n) {
  std::vector<Monotone> out;
  for (std::size_t k = 0; k <= n; ++k) {
    // Choose which of the n steps increase; k of them do.
    std::vector<Monotone> level;
    Monotone cur{0};
    auto rec = [&](auto&& self, std::size_t ups) -> void {
      if (cur.size() == n + 1) {
        if (ups == k) level.push_back(cur);
        return;
      }
      const std::size_t last = cur.back();
      cur.push_back(last);
      self(self, ups);
      cur.back() = last + 1;
      if (ups < k) self(self, ups + 1);
      cur.pop_back();
    };
    rec(rec, 0);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

struct GammaLayout {
  std::vector<Monotone> eta;
  std::vector<std::size_t> target;  // k of each summand
  std::vector<std::size_t> offset;
  std::size_t size = 0;
};

GammaLayout gamma_layout(const ChainComplex& c, std::size_t n) {
  GammaLayout l;
  for (auto& e : surjections(n)) {
    const std::size_t k = e.back();
    l.offset.push_back(l.size);
    l.size += c.generators(int(k));
    l.target.push_back(k);
    l.eta.push_back(std::move(e));
  }
  return l;
}

std::size_t find_summand(const GammaLayout& l, const Monotone& eps) {
  for (std::size_t s = 0; s < l.eta.size(); ++s)
    if (l.eta[s] == eps) return s;
  throw std::logic_error("gamma: missing summand");
}

// theta^* : Gamma_n -> Gamma_m.
Matrix gamma_operator(const ChainComplex& c, const std::vector<GammaLayout>& lay, const Monotone& theta,
                      std::size_t n) {
  const std::size_t m = theta.size() - 1;
  const auto& src = lay[n];
  const auto& tgt = lay[m];
  Matrix out(tgt.size, src.size);
  for (std::size_t s = 0; s < src.eta.size(); ++s) {
    const std::size_t k = src.target[s];
    if (c.generators(int(k)) == 0) continue;
    Monotone comp;
    for (std::size_t x : theta) comp.push_back(src.eta[s][x]);
    Factored f = factor(comp, k);
    Monotone eps{0};
    for (std::size_t i = 0; i + 1 < comp.size(); ++i) eps.push_back(eps.back() + (comp[i] == comp[i + 1] ? 0 : 1));
    if (f.missing.empty()) {
      out.set_block(tgt.offset[find_summand(tgt, eps)], src.offset[s], Matrix::identity(c.generators(int(k))));
    } else if (f.missing.size() == 1 && f.missing[0] == 0) {
      out.set_block(tgt.offset[find_summand(tgt, eps)], src.offset[s], c.differential(int(k)));
    }
  }
  return out;
}

}  // namespace

SimplicialAbelianGroup dold_kan_gamma(const ChainComplex& c, std::size_t t) {
  if (!c.empty() && c.lo() < 0) throw std::invalid_argument("dold_kan_gamma: complex has negative degrees");
  std::vector<GammaLayout> lay;
  std::vector<FpGroup> groups;
  for (std::size_t n = 0; n <= t; ++n) {
    lay.push_back(gamma_layout(c, n));
    std::vector<FpGroup> parts;
    for (std::size_t k : lay.back().target) parts.push_back(c.group(int(k)));
    groups.push_back(direct_sum(parts));
  }
  std::vector<SimplicialAbelianGroup::Operators> faces(t + 1), degens(t + 1);
  for (std::size_t n = 0; n <= t; ++n) {
    for (std::size_t i = 0; n > 0 && i <= n; ++i) faces[n].push_back(gamma_operator(c, lay, coface(n, i), n));
    for (std::size_t i = 0; n < t && i <= n; ++i)
      degens[n].push_back(gamma_operator(c, lay, codegeneracy(n, i), n));
  }
  return SimplicialAbelianGroup(c.ring(), t, groups, faces, degens);
}

ChainMap gamma_unit(const ChainComplex& c, std::size_t t) {
  if (!c.empty() && c.hi() > int(t)) throw std::invalid_argument("gamma_unit: complex exceeds truncation");
  SimplicialAbelianGroup g = dold_kan_gamma(c, t);
  ChainComplex ng = normalize(g);
  std::map<int, Matrix> comp;
  for (int k = std::max(0, c.lo()); k <= c.hi(); ++k) {
    GammaLayout l = gamma_layout(c, std::size_t(k));
    Monotone id = identity_perm(std::size_t(k) + 1);
    Matrix inc(l.size, c.generators(k));
    inc.set_block(l.offset[find_summand(l, id)], 0, Matrix::identity(c.generators(k)));
    auto coords = g.moore_lattice(std::size_t(k)).coordinates(inc);
    if (!coords) throw std::logic_error("gamma_unit: identity summand is not normalized");
    comp.emplace(k, *coords);
  }
  return ChainMap(c, ng, comp);
}

SimplicialMap gamma_counit(const SimplicialAbelianGroup& a) {
  const std::size_t t = a.truncation();
  ChainComplex na = normalize(a);
  SimplicialAbelianGroup g = dold_kan_gamma(na, t);
  std::vector<Matrix> nb;
  for (std::size_t k = 0; k <= t; ++k) nb.push_back(normalized_basis(a, k));
  SimplicialMap f{g, a, {}};
  for (std::size_t n = 0; n <= t; ++n) {
    GammaLayout l = gamma_layout(na, n);
    Matrix m(a.generators(n), l.size);
    for (std::size_t s = 0; s < l.eta.size(); ++s) {
      const std::size_t k = l.target[s];
      if (na.generators(int(k)) == 0) continue;
      m.set_block(0, l.offset[s], a.operator_matrix(l.eta[s], k) * nb[k]);
    }
    f.levels.push_back(std::move(m));
  }
  return f;
}

ChainMap shuffle_map(const SimplicialAbelianGroup& a, const SimplicialAbelianGroup& b) {
  if (!a.is_free() || !b.is_free()) throw std::invalid_argument("shuffle_map: needs free simplicial groups");
  const std::size_t t = a.truncation();
  SimplicialAbelianGroup ab = tensor(a, b);
  ChainComplex na = normalize(a), nb = normalize(b);
  ChainComplex src = truncate_above(tensor(na, nb), int(t)), tgt = normalize(ab);
  std::map<int, Matrix> comp;
  for (int n = 0; n <= src.hi(); ++n) {
    Matrix m(ab.generators(std::size_t(n)), src.generators(n));
    for (const auto& blk : tensor_blocks(na, nb, n)) {
      const std::size_t p = std::size_t(blk.p), q = std::size_t(n) - p;
      Matrix ba = normalized_basis(a, p), bb = normalized_basis(b, q);
      Matrix sum(ab.generators(std::size_t(n)), ba.cols() * bb.cols());
      for (const auto& sh : shuffles(p, q)) {
        // Degeneracies indexed by the nu block act on a, by the mu block on b.
        Monotone ea{0}, eb{0};
        std::vector<bool> in_nu(std::size_t(n), false);
        for (std::size_t i = p; i < sh.size(); ++i) in_nu[sh[i]] = true;
        for (std::size_t i = 0; i + 1 < std::size_t(n) + 1; ++i) {
          ea.push_back(ea.back() + (in_nu[i] ? 0 : 1));
          eb.push_back(eb.back() + (in_nu[i] ? 1 : 0));
        }
        Matrix sa = a.operator_matrix(ea, p) * ba, sb = b.operator_matrix(eb, q) * bb;
        sum.add_block(0, 0, kron(sa, sb), Scalar(sign(sh)));
      }
      m.set_block(0, blk.offset, sum);
    }
    // Shuffles of normalized chains are normalized.
    auto coords = ab.moore_lattice(std::size_t(n)).coordinates(m);
    if (!coords) throw std::logic_error("shuffle_map: image is not normalized");
    comp.emplace(n, std::move(*coords));
  }
  return ChainMap(src, tgt, comp);
}

ChainMap alexander_whitney(const SimplicialAbelianGroup& a, const SimplicialAbelianGroup& b) {
  if (!a.is_free() || !b.is_free()) throw std::invalid_argument("alexander_whitney: needs free simplicial groups");
  const std::size_t t = a.truncation();
  SimplicialAbelianGroup ab = tensor(a, b);
  ChainComplex na = normalize(a), nb = normalize(b);
  ChainComplex src = normalize(ab), tgt = truncate_above(tensor(na, nb), int(t));
  std::map<int, Matrix> comp;
  for (int n = 0; n <= int(t); ++n) {
    Matrix basis = normalized_basis(ab, std::size_t(n));
    Matrix m(tgt.generators(n), src.generators(n));
    for (const auto& blk : tensor_blocks(na, nb, n)) {
      const std::size_t p = std::size_t(blk.p), q = std::size_t(n) - p;
      Monotone front, back;
      for (std::size_t i = 0; i <= p; ++i) front.push_back(i);
      for (std::size_t i = 0; i <= q; ++i) back.push_back(i + p);
      Matrix fa = normalized_projection(a, p) * a.operator_matrix(front, std::size_t(n));
      Matrix fb = normalized_projection(b, q) * b.operator_matrix(back, std::size_t(n));
      m.set_block(blk.offset, 0, kron(fa, fb) * basis);
    }
    comp.emplace(n, std::move(m));
  }
  return ChainMap(src, tgt, comp);
}

SimplicialAbelianGroup base_change_Q(const SimplicialAbelianGroup& a) {
  const std::size_t t = a.truncation();
  std::vector<FpGroup> groups;
  std::vector<SimplicialAbelianGroup::Operators> faces(t + 1), degens(t + 1);
  for (std::size_t k = 0; k <= t; ++k) {
    groups.push_back(rationalize(a.group(k)));
    for (std::size_t i = 0; k > 0 && i <= k; ++i) faces[k].push_back(a.face(k, i));
    for (std::size_t i = 0; k < t && i <= k; ++i) degens[k].push_back(a.degeneracy(k, i));
  }
  return SimplicialAbelianGroup(Ring::Rationals, t, groups, faces, degens);
}

}  // namespace hzalg
