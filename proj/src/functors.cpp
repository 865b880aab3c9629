#include "hzalg/functors.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

namespace hzalg {
namespace {

ChainComplex total_of(const std::vector<ChainComplex>& parts, Ring ring) {
  ChainComplex t = parts.empty() ? zero_complex(ring) : direct_sum(parts);
  return t.empty() ? zero_complex(ring) : t.with_grading(Grading::Unbounded);
}

std::vector<std::size_t> complement(const Perm& image, std::size_t m) {
  std::vector<bool> hit(m, false);
  for (std::size_t v : image) hit[v] = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < m; ++v)
    if (!hit[v]) out.push_back(v);
  return out;
}

// The permutation carrying the last n positions onto `image`, identity-ordered
// on the rest.
Perm coset_rep(const Perm& image, std::size_t m) {
  Perm g = complement(image, m);
  g.insert(g.end(), image.begin(), image.end());
  return g;
}

// The matrices of f viewed on the given presentations; the constructor checks
// that relations go to relations.
ChainMap descend(const ChainMap& f, const ChainComplex& source, const ChainComplex& target) {
  std::map<int, Matrix> comp;
  for (int n = source.lo(); n <= source.hi() && !source.empty(); ++n) comp.emplace(n, f.component(n));
  return ChainMap(source, target, comp);
}

void require_truncation(const ChainSpectrum& x, std::size_t bound, const char* what) {
  if (x.base() != Base::ChPlus && x.base() != Base::ChFull)
    throw std::invalid_argument(std::string(what) + ": not a chain spectrum");
  if (bound > x.truncation()) throw std::invalid_argument(std::string(what) + ": truncation below the bound");
}

}  // namespace

InjectionDiagram::InjectionDiagram(std::size_t l) : bound(l) {
  for (std::size_t n = 0; n <= l; ++n)
    for (std::size_t m = n; m <= l; ++m)
      for (const auto& a : injections(n, m)) arrows.push_back({n, m, a});
}

std::size_t InjectionDiagram::count(std::size_t n, std::size_t m) const {
  std::size_t c = 0;
  for (const auto& a : arrows) c += (a.from == n && a.to == m);
  return c;
}

bool InjectionDiagram::composition_closed() const {
  std::map<std::pair<std::size_t, Perm>, bool> present;
  for (const auto& a : arrows) present[{a.to, a.image}] = true;
  for (const auto& a : arrows)
    for (const auto& b : arrows) {
      if (b.from != a.to) continue;
      Perm c;
      for (std::size_t v : a.image) c.push_back(b.image[v]);
      if (!present.count({b.to, c})) return false;
    }
  return true;
}

ChainMap diagram_map(const ChainSpectrum& x, const Perm& image, std::size_t m) {
  const std::size_t n = image.size();
  const Perm g = coset_rep(image, m);
  ChainMap h = compose(x.permutation(m, g), x.iterated_sigma(n, m - n));
  ChainMap s = rewrap(shift(h, -int(m)), shift(x.level(n), -int(n)), shift(x.level(m), -int(m)));
  return sign(g) > 0 ? s : -s;
}

ChainMap TruncatedColimit::inclusion(std::size_t n) const {
  ChainMap inc = block_map({parts.at(n)}, parts[n], parts, sum, {{n, 0, ChainMap::identity(parts[n])}});
  return compose(to_result, compose(projection, inc));
}

TruncatedColimit functor_D(const ChainSpectrum& x, std::size_t l) {
  require_truncation(x, l, "functor_D");
  const Ring ring = x.level(0).ring();
  TruncatedColimit out;
  out.exactness_bound = l;
  for (std::size_t n = 0; n <= l; ++n) out.parts.push_back(shift(x.level(n), -int(n)).with_grading(Grading::Unbounded));
  out.sum = total_of(out.parts, ring);

  std::vector<ChainComplex> rparts;
  std::vector<SummandBlock> blocks;
  for (const auto& a : InjectionDiagram(l).arrows) {
    if (out.parts[a.from].empty() || (a.from == a.to && is_identity(a.image))) continue;
    const std::size_t r = rparts.size();
    rparts.push_back(out.parts[a.from]);
    blocks.push_back({a.from, r, ChainMap::identity(out.parts[a.from]), 1});
    blocks.push_back({a.to, r, diagram_map(x, a.image, a.to), -1});
  }
  if (rparts.empty()) {
    out.presented = out.sum;
    out.projection = ChainMap::identity(out.sum);
  } else {
    ChainQuotient q = cokernel(block_map(rparts, total_of(rparts, ring), out.parts, out.sum, blocks));
    out.presented = q.complex;
    out.projection = q.projection;
  }
  SimplifiedComplex s = simplify(out.presented);
  out.result = s.complex;
  out.to_result = s.to;
  out.from_result = s.from;
  return out;
}

ChainMap functor_D(const ChainSpectrumMap& f, const TruncatedColimit& ds, const TruncatedColimit& dt) {
  std::vector<SummandBlock> blocks;
  for (std::size_t n = 0; n <= ds.exactness_bound; ++n) {
    if (ds.parts[n].empty() || dt.parts[n].empty()) continue;
    blocks.push_back({n, n, rewrap(shift(f.levels.at(n), -int(n)), ds.parts[n], dt.parts[n]), 1});
  }
  ChainMap raw = compose(dt.projection, block_map(ds.parts, ds.sum, dt.parts, dt.sum, blocks));
  return compose(dt.to_result, compose(descend(raw, ds.presented, dt.presented), ds.from_result));
}

ChainMap functor_D(const ChainSpectrumMap& f) { return functor_D(f, functor_D(f.source), functor_D(f.target)); }

ChainSpectrum functor_R(const ChainComplex& y0, std::size_t l) {
  const ChainComplex y = y0.with_grading(Grading::Unbounded);
  ChainSpectrum out{{Base::ChPlus, {}, {}}, {}};
  for (std::size_t m = 0; m <= l; ++m) {
    ChainComplex lvl = connective_cover(shift(y, int(m)));
    std::vector<ChainMap> acts;
    for (std::size_t i = 0; i + 1 < m; ++i) acts.push_back(-ChainMap::identity(lvl));
    out.seq.levels.push_back(lvl);
    out.seq.actions.push_back(std::move(acts));
  }
  // shift(C_0(Y[m]), 1) -> Y[m+1] factors through C_0(Y[m+1]).
  for (std::size_t m = 0; m < l; ++m) {
    ChainMap c = shift(connective_counit(shift(y, int(m))), 1);
    ChainMap g = rewrap(c, shift(out.level(m), 1), shift(y, int(m) + 1));
    out.sigma.push_back(connective_lift(g));
  }
  return out;
}

ChainSpectrumMap functor_R(const ChainMap& g0, std::size_t l) {
  ChainMap g = rewrap(g0, g0.source().with_grading(Grading::Unbounded), g0.target().with_grading(Grading::Unbounded));
  ChainSpectrumMap out{functor_R(g.source(), l), functor_R(g.target(), l), {}};
  for (std::size_t m = 0; m <= l; ++m) out.levels.push_back(connective_cover(shift(g, int(m))));
  return out;
}

ChainMap transpose_to_chain(const ChainSpectrumMap& f, const TruncatedColimit& dx, const ChainComplex& y0) {
  const ChainComplex y = y0.with_grading(Grading::Unbounded);
  std::vector<SummandBlock> blocks;
  for (std::size_t n = 0; n <= dx.exactness_bound; ++n) {
    if (dx.parts[n].empty()) continue;
    ChainMap k = compose(connective_counit(shift(y, int(n))), f.levels.at(n));
    blocks.push_back({0, n, rewrap(shift(k, -int(n)), dx.parts[n], y), 1});
  }
  ChainMap raw = block_map(dx.parts, dx.sum, {y}, y, blocks);
  return compose(descend(raw, dx.presented, y), dx.from_result);
}

ChainSpectrumMap transpose_to_spectrum(const ChainMap& g, const ChainSpectrum& x, const TruncatedColimit& dx) {
  if (dx.exactness_bound != x.truncation()) throw std::invalid_argument("transpose_to_spectrum: truncation mismatch");
  const ChainComplex y = g.target().with_grading(Grading::Unbounded);
  ChainSpectrumMap out{x, functor_R(y, x.truncation()), {}};
  for (std::size_t n = 0; n <= x.truncation(); ++n) {
    ChainMap h = shift(compose(g, dx.inclusion(n)), int(n));
    out.levels.push_back(connective_lift(rewrap(h, x.level(n), shift(y, int(n)))));
  }
  return out;
}

ChainSpectrumMap unit(const ChainSpectrum& x) {
  TruncatedColimit dx = functor_D(x);
  return transpose_to_spectrum(ChainMap::identity(dx.result), x, dx);
}

ChainMap counit(const ChainComplex& y, std::size_t l) {
  ChainSpectrum ry = functor_R(y, l);
  return transpose_to_chain(identity_map(ry), functor_D(ry), y);
}

bool triangle_identity_D(const ChainSpectrum& x) {
  TruncatedColimit dx = functor_D(x);
  ChainSpectrumMap eta = unit(x);
  ChainSpectrum rdx = eta.target;
  TruncatedColimit drdx = functor_D(rdx);
  ChainMap eps = transpose_to_chain(identity_map(rdx), drdx, dx.result);
  return compose(eps, functor_D(eta, dx, drdx)).equals(ChainMap::identity(dx.result));
}

bool triangle_identity_R(const ChainComplex& y, std::size_t l) {
  ChainSpectrum ry = functor_R(y, l);
  ChainSpectrumMap eta = unit(ry);
  ChainSpectrumMap r_eps = functor_R(counit(y, l), l);
  // R D R Y as built by unit and by R(counit) have the same matrices.
  ChainSpectrumMap composite{ry, ry, {}};
  for (std::size_t n = 0; n <= l; ++n)
    composite.levels.push_back(compose(r_eps.levels[n], rewrap(eta.levels[n], ry.level(n), r_eps.source.level(n))));
  return equal_maps(composite, identity_map(ry));
}

Gamma gamma_monoidal(const ChainSpectrum& x, std::size_t lx, const ChainSpectrum& y, std::size_t ly) {
  if (x.truncation() != y.truncation() || lx + ly > x.truncation())
    throw std::invalid_argument("gamma_monoidal: truncation below the generation levels");
  const std::size_t l = x.truncation();
  ChainSpectrum xy = smash(x, y);
  Gamma out{functor_D(x, lx), functor_D(y, ly), functor_D(xy, l), {}};
  const auto& px = out.dx.parts;
  const auto& py = out.dy.parts;
  const ChainComplex src = tensor(out.dx.presented, out.dy.presented);
  std::map<std::pair<std::size_t, std::size_t>, ChainMap> incl;
  for (std::size_t p = 0; p <= lx; ++p)
    for (std::size_t q = 0; q <= ly; ++q) incl.emplace(std::make_pair(p, q), smash_inclusion(x, y, xy, p, q));

  std::map<int, Matrix> comp;
  for (int e = src.lo(); e <= src.hi() && !src.empty(); ++e) {
    Matrix m(out.dxy.sum.generators(e), src.generators(e));
    for (const auto& tb : tensor_blocks(out.dx.sum, out.dy.sum, e)) {
      const int a = tb.p, b = e - tb.p;
      const std::size_t ny = out.dy.sum.generators(b);
      for (std::size_t p = 0; p <= lx; ++p)
        for (std::size_t q = 0; q <= ly; ++q) {
          const std::size_t gx = px[p].generators(a), gy = py[q].generators(b);
          if (gx == 0 || gy == 0) continue;
          const std::size_t ox = summand_offset(px, p, a), oy = summand_offset(py, q, b);
          const int top = e + int(p + q);
          const ChainMap& inc = incl.at({p, q});
          const Matrix im = inc.component(top);
          std::size_t ob = 0;
          for (const auto& ib : tensor_blocks(x.level(p), y.level(q), top))
            if (ib.p == a + int(p)) ob = ib.offset;
          const Scalar s = (q * std::size_t(std::abs(a))) % 2 ? -1 : 1;
          const std::size_t row0 = summand_offset(out.dxy.parts, p + q, e);
          for (std::size_t ix = 0; ix < gx; ++ix)
            for (std::size_t iy = 0; iy < gy; ++iy) {
              const std::size_t col = tb.offset + (ox + ix) * ny + (oy + iy);
              const std::size_t icol = ob + ix * gy + iy;
              for (std::size_t r = 0; r < im.rows(); ++r)
                if (im(r, icol) != 0) m(row0 + r, col) += s * im(r, icol);
            }
        }
    }
    comp.emplace(e, std::move(m));
  }
  ChainMap raw(src, out.dxy.presented, [&] {
    std::map<int, Matrix> c;
    for (auto& [e, mat] : comp) c.emplace(e, out.dxy.projection.component(e) * mat);
    return c;
  }());
  out.map = compose(out.dxy.to_result, compose(raw, tensor(out.dx.from_result, out.dy.from_result)));
  return out;
}

bool EquivariantComplex::validate() const {
  if (actions.size() != (n >= 2 ? n - 1 : 0)) return false;
  const ChainMap id = ChainMap::identity(complex);
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (!same_complex(actions[i].source(), complex) || !same_complex(actions[i].target(), complex)) return false;
    if (!compose(actions[i], actions[i]).equals(id)) return false;
    if (i + 1 < actions.size()) {
      ChainMap p = compose(actions[i], actions[i + 1]);
      if (!compose(p, compose(p, p)).equals(id)) return false;
    }
    for (std::size_t j = i + 2; j < actions.size(); ++j)
      if (!compose(actions[i], actions[j]).equals(compose(actions[j], actions[i]))) return false;
  }
  return true;
}

EquivariantComplex level_action(const ChainSpectrum& x, std::size_t n) {
  EquivariantComplex out{x.level(n), n, {}};
  for (std::size_t i = 0; i + 1 < n; ++i) out.actions.push_back(x.action(n, i));
  return out;
}

EquivariantComplex base_change_Q(const EquivariantComplex& c) {
  EquivariantComplex out{base_change_Q(c.complex), c.n, {}};
  for (const auto& t : c.actions) out.actions.push_back(base_change_Q(t));
  return out;
}

ChainComplex coinvariants(const EquivariantComplex& c) {
  if (c.actions.empty() || c.complex.empty()) return c.complex;
  std::vector<ChainComplex> copies(c.actions.size(), c.complex);
  std::vector<SummandBlock> blocks;
  const ChainMap id = ChainMap::identity(c.complex);
  for (std::size_t i = 0; i < c.actions.size(); ++i) blocks.push_back({0, i, c.actions[i] + (-id), 1});
  return cokernel(block_map(copies, direct_sum(copies), {c.complex}, c.complex, blocks)).complex;
}

FpGroup homology_coinvariants(const EquivariantComplex& c, int k) {
  FpGroup h = homology_presentation(c.complex, k).group;
  std::vector<GroupMap> maps;
  for (const auto& t : c.actions) maps.push_back(homology_map(t, k));
  return coinvariants(h, maps);
}

EquivariantComplex sign_counterexample(Ring ring) {
  // Z[Sigma_2] on the basis (e, t); the transposition swaps them.
  ChainComplex c(ring, 0, {FpGroup(ring, 2), FpGroup(ring, 1)}, {Matrix{{1}, {-1}}}, Grading::NonNegative);
  ChainMap t(c, c, {{0, Matrix{{0, 1}, {1, 0}}}, {1, Matrix{{-1}}}});
  return {c, 2, {t}};
}

ChainSpectrumMap spectrum_pair(const ChainSpectrumMap& f, const ChainSpectrumMap& g) {
  ChainSpectrum t = direct_sum(f.target, g.target);
  ChainSpectrumMap out{f.source, t, {}};
  for (std::size_t n = 0; n < f.levels.size(); ++n) {
    const ChainMap& a = f.levels[n];
    const ChainMap& b = g.levels.at(n);
    out.levels.push_back(
        block_map({a.source()}, a.source(), {a.target(), b.target()}, t.level(n), {{0, 0, a}, {1, 0, b}}));
  }
  return out;
}

}  // namespace hzalg
