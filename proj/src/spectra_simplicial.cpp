#include "hzalg/spectra.hpp"

#include <map>
#include <set>

namespace hzalg {
namespace {

std::size_t pair_index(std::size_t x, std::size_t y, std::size_t nb) { return x && y ? (x - 1) * nb + y : 0; }

// Window coordinates: 2j-1 is +j, 2j is -j.
std::size_t signed_index(std::size_t j, bool neg) { return j ? 2 * j - (neg ? 0 : 1) : 0; }
std::size_t window_base(std::size_t x) { return (x + 1) / 2; }
bool window_neg(std::size_t x) { return x != 0 && x % 2 == 0; }

std::size_t nonbase(const PointedSimplicialSet& k, std::size_t d) { return k.count(d) - 1; }

PointedSimplicialSet signed_window(const PointedSimplicialSet& s) {
  const std::size_t t = s.truncation();
  std::vector<std::size_t> counts;
  std::vector<PointedSimplicialSet::Table> faces(t + 1), degens(t + 1);
  for (std::size_t d = 0; d <= t; ++d) counts.push_back(2 * nonbase(s, d) + 1);
  auto lift = [](std::size_t img, std::size_t x) { return signed_index(img, window_neg(x)); };
  for (std::size_t d = 0; d <= t; ++d) {
    if (d > 0) {
      faces[d].assign(d + 1, std::vector<std::size_t>(counts[d], 0));
      for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t x = 1; x < counts[d]; ++x) faces[d][i][x] = lift(s.face(d, i, window_base(x)), x);
    }
    if (d < t) {
      degens[d].assign(d + 1, std::vector<std::size_t>(counts[d], 0));
      for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t x = 1; x < counts[d]; ++x) degens[d][i][x] = lift(s.degeneracy(d, i, window_base(x)), x);
    }
  }
  return PointedSimplicialSet(t, counts, faces, degens);
}

// Images of a signed monomial matrix on the window {0, +e_j, -e_j}.
std::vector<std::size_t> window_images(const Matrix& m) {
  std::vector<std::size_t> out(2 * m.cols() + 1, 0);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t row = 0;
    bool neg = false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (sgn(m(r, c)) == 0) continue;
      if (row != 0 || (m(r, c) != 1 && m(r, c) != -1))
        throw std::invalid_argument("forget_U: operator is not a signed monomial matrix");
      row = r + 1;
      neg = m(r, c) == -1;
    }
    out[2 * c + 1] = signed_index(row, neg);
    out[2 * c + 2] = signed_index(row, !neg);
  }
  return out;
}

PointedSimplicialSet window_of(const SimplicialAbelianGroup& a) {
  const std::size_t t = a.truncation();
  std::vector<std::size_t> counts;
  std::vector<PointedSimplicialSet::Table> faces(t + 1), degens(t + 1);
  for (std::size_t d = 0; d <= t; ++d) {
    if (a.group(d).has_relations()) throw std::invalid_argument("forget_U: needs free groups");
    counts.push_back(2 * a.generators(d) + 1);
  }
  for (std::size_t d = 0; d <= t; ++d) {
    for (std::size_t i = 0; d > 0 && i <= d; ++i) faces[d].push_back(window_images(a.face(d, i)));
    for (std::size_t i = 0; d < t && i <= d; ++i) degens[d].push_back(window_images(a.degeneracy(d, i)));
  }
  return PointedSimplicialSet(t, counts, faces, degens);
}

std::vector<Monotone> monotone_maps(std::size_t d, std::size_t k) {
  std::vector<Monotone> out;
  Monotone cur(d + 1, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t lo) -> void {
    if (pos == d + 1) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = lo; v <= k; ++v) {
      cur[pos] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

enum class Part { Full, Boundary, Horn };

bool keep(const Monotone& theta, std::size_t k, Part part, std::size_t horn) {
  std::vector<bool> hit(k + 1, false);
  for (std::size_t v : theta) hit[v] = true;
  switch (part) {
    case Part::Full: return true;
    case Part::Boundary:
      for (std::size_t v = 0; v <= k; ++v)
        if (!hit[v]) return true;
      return false;
    case Part::Horn:
      for (std::size_t v = 0; v <= k; ++v)
        if (v != horn && !hit[v]) return true;
      return false;
  }
  return false;
}

struct SimplexPart {
  PointedSimplicialSet set;
  std::vector<std::map<Monotone, std::size_t>> index;  // label -> simplex index, per degree
};

SimplexPart simplex_part(std::size_t k, Part part, std::size_t horn, std::size_t t) {
  std::vector<std::vector<Monotone>> labels(t + 1);
  SimplexPart out;
  out.index.resize(t + 1);
  for (std::size_t d = 0; d <= t; ++d)
    for (const auto& theta : monotone_maps(d, k))
      if (keep(theta, k, part, horn)) {
        labels[d].push_back(theta);
        out.index[d][theta] = labels[d].size();
      }
  std::vector<std::size_t> counts;
  std::vector<PointedSimplicialSet::Table> faces(t + 1), degens(t + 1);
  for (std::size_t d = 0; d <= t; ++d) counts.push_back(labels[d].size() + 1);
  for (std::size_t d = 0; d <= t; ++d) {
    if (d > 0) {
      faces[d].assign(d + 1, std::vector<std::size_t>(counts[d], 0));
      for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t x = 1; x < counts[d]; ++x) {
          Monotone f = labels[d][x - 1];
          f.erase(f.begin() + i);
          faces[d][i][x] = out.index[d - 1].at(f);
        }
    }
    if (d < t) {
      degens[d].assign(d + 1, std::vector<std::size_t>(counts[d], 0));
      for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t x = 1; x < counts[d]; ++x) {
          Monotone s = labels[d][x - 1];
          s.insert(s.begin() + i, s[i]);
          degens[d][i][x] = out.index[d + 1].at(s);
        }
    }
  }
  out.set = PointedSimplicialSet(t, counts, faces, degens);
  return out;
}

PointedMap part_map(const SimplexPart& from, const SimplexPart& to, std::size_t shift_at) {
  PointedMap out{from.set, to.set, {}};
  for (std::size_t d = 0; d < from.index.size(); ++d) {
    std::vector<std::size_t> img(from.set.count(d), 0);
    for (const auto& [theta, x] : from.index[d]) {
      Monotone m = theta;
      for (auto& v : m)
        if (v >= shift_at) ++v;
      img[x] = to.index[d].at(m);
    }
    out.images.push_back(std::move(img));
  }
  return out;
}

std::size_t wedge_offset(const std::vector<PointedSimplicialSet>& parts, std::size_t j, std::size_t d) {
  std::size_t off = 0;
  for (std::size_t i = 0; i < j; ++i) off += nonbase(parts[i], d);
  return off;
}

std::vector<std::size_t> complement(const Perm& image, std::size_t n) {
  std::vector<bool> hit(n, false);
  for (std::size_t v : image) hit[v] = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v)
    if (!hit[v]) out.push_back(v);
  return out;
}

// h with h[j] the rank of list[j].
Perm rank_pattern(const std::vector<std::size_t>& list) {
  Perm h(list.size(), 0);
  for (std::size_t j = 0; j < list.size(); ++j)
    for (std::size_t i = 0; i < list.size(); ++i)
      if (list[i] < list[j]) ++h[j];
  return h;
}

std::size_t sphere_count(std::size_t n, std::size_t d) {
  if (n == 0) return 1;
  std::size_t c = 1;
  for (std::size_t i = 0; i < n; ++i) c *= d;
  return c;
}

SSetSpectrum empty_sset_spectrum() { return SSetSpectrum{{Base::SSetPointed, {}, {}}, {}}; }

ChainMap truncated(const ChainMap& f, const ChainComplex& source, const ChainComplex& target, int top) {
  std::map<int, Matrix> comp;
  for (int d = 0; d <= top; ++d) comp.emplace(d, f.component(d));
  return ChainMap(source, target, comp);
}

}  // namespace

PointedSimplicialSet wedge(const std::vector<PointedSimplicialSet>& parts, std::size_t t) {
  if (parts.empty()) return point(t);
  std::vector<std::size_t> counts(t + 1, 1);
  for (std::size_t d = 0; d <= t; ++d)
    for (const auto& p : parts) counts[d] += nonbase(p, d);
  std::vector<PointedSimplicialSet::Table> faces(t + 1), degens(t + 1);
  for (std::size_t d = 0; d <= t; ++d) {
    if (d > 0) faces[d].assign(d + 1, std::vector<std::size_t>(counts[d], 0));
    if (d < t) degens[d].assign(d + 1, std::vector<std::size_t>(counts[d], 0));
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const std::size_t off = wedge_offset(parts, j, d);
      for (std::size_t u = 1; u <= nonbase(parts[j], d); ++u)
        for (std::size_t i = 0; i <= d; ++i) {
          if (d > 0)
            if (std::size_t f = parts[j].face(d, i, u)) faces[d][i][off + u] = wedge_offset(parts, j, d - 1) + f;
          if (d < t)
            if (std::size_t s = parts[j].degeneracy(d, i, u)) degens[d][i][off + u] = wedge_offset(parts, j, d + 1) + s;
        }
    }
  }
  return PointedSimplicialSet(t, counts, faces, degens);
}

SSetSpectrum sphere_sset(std::size_t l, std::size_t t) {
  SSetSpectrum out = empty_sset_spectrum();
  for (std::size_t n = 0; n <= l; ++n) {
    PointedSimplicialSet s = simplicial_sphere(n, t);
    std::vector<PointedMap> acts;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      PointedMap a{s, s, {}};
      for (std::size_t d = 0; d <= t; ++d) a.images.push_back(sphere_permutation(transposition(n, i), d));
      acts.push_back(std::move(a));
    }
    out.seq.levels.push_back(s);
    out.seq.actions.push_back(std::move(acts));
  }
  for (std::size_t n = 0; n < l; ++n) {
    PointedSimplicialSet src = SSetBase::suspend(out.level(n));
    PointedMap s{src, out.level(n + 1), {}};
    for (std::size_t d = 0; d <= t; ++d) s.images.push_back(identity_perm(src.count(d)));
    out.sigma.push_back(std::move(s));
  }
  return out;
}

SAbSpectrum free_abelian(const SSetSpectrum& x) {
  SAbSpectrum out{{Base::SAb, {}, {}}, {}};
  for (std::size_t n = 0; n <= x.truncation(); ++n) {
    out.seq.levels.push_back(free_abelian(x.level(n)));
    std::vector<SimplicialMap> acts;
    for (std::size_t i = 0; i + 1 < n; ++i)
      acts.push_back(SimplicialMap{out.level(n), out.level(n), free_abelian_levels(x.action(n, i))});
    out.seq.actions.push_back(std::move(acts));
  }
  for (std::size_t n = 0; n < x.truncation(); ++n)
    out.sigma.push_back(
        SimplicialMap{SAbBase::suspend(out.level(n)), out.level(n + 1), free_abelian_levels(x.sigma[n])});
  return out;
}

SAbSpectrumMap free_abelian(const SSetSpectrumMap& f) {
  SAbSpectrumMap out{free_abelian(f.source), free_abelian(f.target), {}};
  for (std::size_t n = 0; n < f.levels.size(); ++n)
    out.levels.push_back(SimplicialMap{out.source.level(n), out.target.level(n), free_abelian_levels(f.levels[n])});
  return out;
}

SAbSpectrum sym_sab(std::size_t l, std::size_t t) { return free_abelian(sphere_sset(l, t)); }

PointedSimplicialSet simplex_plus(std::size_t k, std::size_t t) { return simplex_part(k, Part::Full, 0, t).set; }
PointedSimplicialSet boundary_plus(std::size_t k, std::size_t t) {
  return simplex_part(k, Part::Boundary, 0, t).set;
}
PointedSimplicialSet horn_plus(std::size_t k, std::size_t i, std::size_t t) {
  return simplex_part(k, Part::Horn, i, t).set;
}

PointedMap boundary_inclusion(std::size_t k, std::size_t t) {
  return part_map(simplex_part(k, Part::Boundary, 0, t), simplex_part(k, Part::Full, 0, t), k + 1);
}

PointedMap horn_inclusion(std::size_t k, std::size_t i, std::size_t t) {
  return part_map(simplex_part(k, Part::Horn, i, t), simplex_part(k, Part::Full, 0, t), k + 1);
}

PointedMap coface_map(std::size_t k, std::size_t j, std::size_t t) {
  if (k == 0 || j > k) throw std::invalid_argument("coface_map: index out of range");
  return part_map(simplex_part(k - 1, Part::Full, 0, t), simplex_part(k, Part::Full, 0, t), j);
}

// ---- free simplicial-set spectra ---------------------------------------------

namespace {

struct FreeSSetLevel {
  std::vector<Perm> inj;
  std::vector<PointedSimplicialSet> parts;
  PointedSimplicialSet total;
};

FreeSSetLevel free_sset_level(std::size_t m, const PointedSimplicialSet& k, std::size_t n) {
  const std::size_t t = k.truncation();
  FreeSSetLevel lv;
  if (n >= m) {
    lv.inj = injections(m, n);
    PointedSimplicialSet part = smash(simplicial_sphere(n - m, t), k);
    lv.parts.assign(lv.inj.size(), part);
  }
  lv.total = wedge(lv.parts, t);
  return lv;
}

std::size_t find_injection(const std::vector<Perm>& inj, const Perm& b) {
  for (std::size_t j = 0; j < inj.size(); ++j)
    if (inj[j] == b) return j;
  throw std::logic_error("injection not found");
}

}  // namespace

SSetSpectrum free_sset(std::size_t m, const PointedSimplicialSet& k, std::size_t l) {
  if (m > l) throw std::invalid_argument("free_sset: level above the truncation");
  const std::size_t t = k.truncation();
  SSetSpectrum out = empty_sset_spectrum();
  std::vector<FreeSSetLevel> lv;
  for (std::size_t n = 0; n <= l; ++n) lv.push_back(free_sset_level(m, k, n));
  for (std::size_t n = 0; n <= l; ++n) {
    const auto& v = lv[n];
    std::vector<PointedMap> acts;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Perm g = transposition(n, i);
      PointedMap a{v.total, v.total, {}};
      for (std::size_t d = 0; d <= t; ++d) {
        std::vector<std::size_t> img(v.total.count(d), 0);
        const std::size_t nk = nonbase(k, d);
        for (std::size_t j = 0; j < v.inj.size(); ++j) {
          Perm moved;
          for (std::size_t x : v.inj[j]) moved.push_back(g[x]);
          std::vector<std::size_t> comp_moved;
          for (std::size_t x : complement(v.inj[j], n)) comp_moved.push_back(g[x]);
          const auto sp = sphere_permutation(rank_pattern(comp_moved), d);
          const std::size_t jt = find_injection(v.inj, moved);
          const std::size_t off = wedge_offset(v.parts, j, d), offt = wedge_offset(v.parts, jt, d);
          for (std::size_t u = 1; u <= nonbase(v.parts[j], d); ++u) {
            const std::size_t s = (u - 1) / nk + 1, kk = (u - 1) % nk + 1;
            img[off + u] = offt + pair_index(sp[s], kk, nk);
          }
        }
        a.images.push_back(std::move(img));
      }
      acts.push_back(std::move(a));
    }
    out.seq.levels.push_back(v.total);
    out.seq.actions.push_back(std::move(acts));
  }
  for (std::size_t n = 0; n < l; ++n) {
    const auto &v = lv[n], &w = lv[n + 1];
    PointedSimplicialSet src = SSetBase::suspend(v.total);
    PointedMap s{src, w.total, {}};
    for (std::size_t d = 0; d <= t; ++d) {
      std::vector<std::size_t> img(src.count(d), 0);
      const std::size_t nk = nonbase(k, d), nw = nonbase(v.total, d);
      const std::size_t ns = n >= m ? sphere_count(n - m, d) : 0;
      for (std::size_t j = 0; j < v.inj.size(); ++j) {
        Perm up;
        for (std::size_t x : v.inj[j]) up.push_back(x + 1);
        const std::size_t jt = find_injection(w.inj, up);
        const std::size_t off = wedge_offset(v.parts, j, d), offt = wedge_offset(w.parts, jt, d);
        for (std::size_t a = 1; a <= d; ++a)
          for (std::size_t u = 1; u <= nonbase(v.parts[j], d); ++u) {
            const std::size_t sv = (u - 1) / nk + 1, kk = (u - 1) % nk + 1;
            img[pair_index(a, off + u, nw)] = offt + pair_index((a - 1) * ns + sv, kk, nk);
          }
      }
      s.images.push_back(std::move(img));
    }
    out.sigma.push_back(std::move(s));
  }
  return out;
}

SSetSpectrumMap free_sset(std::size_t m, const PointedMap& f, std::size_t l) {
  SSetSpectrumMap out{free_sset(m, f.source, l), free_sset(m, f.target, l), {}};
  const std::size_t t = f.source.truncation();
  for (std::size_t n = 0; n <= l; ++n) {
    const auto& src = out.source.level(n);
    PointedMap g{src, out.target.level(n), {}};
    const std::size_t parts = n >= m ? injections(m, n).size() : 0;
    for (std::size_t d = 0; d <= t; ++d) {
      std::vector<std::size_t> img(src.count(d), 0);
      const std::size_t ns = n >= m ? sphere_count(n - m, d) : 0;
      const std::size_t nk = nonbase(f.source, d), nl = nonbase(f.target, d);
      for (std::size_t j = 0; j < parts; ++j)
        for (std::size_t s = 1; s <= ns; ++s)
          for (std::size_t kk = 1; kk <= nk; ++kk)
            if (std::size_t y = f.images[d][kk]) img[j * ns * nk + pair_index(s, kk, nk)] = j * ns * nl + pair_index(s, y, nl);
      g.images.push_back(std::move(img));
    }
    out.levels.push_back(std::move(g));
  }
  return out;
}

SSetSpectrumMap free_sset_extension(std::size_t m, const PointedSimplicialSet& k, const SSetSpectrum& x,
                                    const PointedMap& g) {
  const std::size_t l = x.truncation(), t = k.truncation();
  SSetSpectrumMap out{free_sset(m, k, l), x, {}};
  for (std::size_t n = 0; n <= l; ++n) {
    const auto& src = out.source.level(n);
    PointedMap f{src, x.level(n), {}};
    if (n < m) {
      for (std::size_t d = 0; d <= t; ++d) f.images.emplace_back(src.count(d), 0);
      out.levels.push_back(std::move(f));
      continue;
    }
    const auto inj = injections(m, n);
    const PointedMap sig = x.iterated_sigma(m, n - m);
    std::vector<PointedMap> perms;
    for (const auto& b : inj) {
      Perm c = complement(b, n);
      c.insert(c.end(), b.begin(), b.end());
      perms.push_back(x.permutation(n, c));
    }
    for (std::size_t d = 0; d <= t; ++d) {
      std::vector<std::size_t> img(src.count(d), 0);
      const std::size_t ns = sphere_count(n - m, d), nk = nonbase(k, d), nx = nonbase(x.level(m), d);
      for (std::size_t j = 0; j < inj.size(); ++j)
        for (std::size_t s = 1; s <= ns; ++s)
          for (std::size_t kk = 1; kk <= nk; ++kk)
            if (std::size_t y = g.images[d][kk])
              img[j * ns * nk + pair_index(s, kk, nk)] = perms[j].images[d][sig.images[d][pair_index(s, y, nx)]];
      f.images.push_back(std::move(img));
    }
    out.levels.push_back(std::move(f));
  }
  return out;
}

SSetSpectrumMap lambda_map(std::size_t n, std::size_t l, std::size_t t) {
  if (n + 1 > l) throw std::invalid_argument("lambda_map: level above the truncation");
  SSetSpectrum y = free_sset(n, sphere0(t), l);
  PointedSimplicialSet s1 = circle(t);
  // S^1 -> S^1 ^ (F_n S^0)_n -> (F_n S^0)_{n+1} through the identity injection.
  const std::size_t id = find_injection(injections(n, n), identity_perm(n));
  PointedMap g{s1, y.level(n + 1), {}};
  for (std::size_t d = 0; d <= t; ++d) {
    std::vector<std::size_t> img(s1.count(d), 0);
    const std::size_t nw = nonbase(y.level(n), d);
    for (std::size_t a = 1; a <= d; ++a) img[a] = y.sigma[n].images[d][pair_index(a, id + 1, nw)];
    g.images.push_back(std::move(img));
  }
  return free_sset_extension(n + 1, s1, y, g);
}

// ---- HZ ------------------------------------------------------------------

SSetSpectrum hz(std::size_t l, std::size_t t) {
  SSetSpectrum spheres = sphere_sset(l, t);
  SSetSpectrum out = empty_sset_spectrum();
  for (std::size_t n = 0; n <= l; ++n) {
    PointedSimplicialSet w = signed_window(spheres.level(n));
    std::vector<PointedMap> acts;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      PointedMap a{w, w, {}};
      for (std::size_t d = 0; d <= t; ++d) {
        std::vector<std::size_t> img(w.count(d), 0);
        for (std::size_t x = 1; x < w.count(d); ++x)
          img[x] = signed_index(spheres.action(n, i).images[d][window_base(x)], window_neg(x));
        a.images.push_back(std::move(img));
      }
      acts.push_back(std::move(a));
    }
    out.seq.levels.push_back(w);
    out.seq.actions.push_back(std::move(acts));
  }
  for (std::size_t n = 0; n < l; ++n) {
    PointedSimplicialSet src = SSetBase::suspend(out.level(n));
    PointedMap s{src, out.level(n + 1), {}};
    for (std::size_t d = 0; d <= t; ++d) {
      std::vector<std::size_t> img(src.count(d), 0);
      const std::size_t nw = nonbase(out.level(n), d), ns = sphere_count(n, d);
      for (std::size_t a = 1; a <= d; ++a)
        for (std::size_t w = 1; w <= nw; ++w)
          img[pair_index(a, w, nw)] = signed_index((a - 1) * ns + window_base(w), window_neg(w));
      s.images.push_back(std::move(img));
    }
    out.sigma.push_back(std::move(s));
  }
  return out;
}

namespace {

// Product hz_q ^ hz_p -> hz_{q+p}.
PointedMap hz_product(const SSetSpectrum& h, std::size_t q, std::size_t p) {
  PointedSimplicialSet src = smash(h.level(q), h.level(p));
  PointedMap out{src, h.level(q + p), {}};
  for (std::size_t d = 0; d <= src.truncation(); ++d) {
    std::vector<std::size_t> img(src.count(d), 0);
    const std::size_t nq = nonbase(h.level(q), d), np = nonbase(h.level(p), d);
    const std::size_t sp = sphere_count(p, d);
    for (std::size_t u = 1; u <= nq; ++u)
      for (std::size_t v = 1; v <= np; ++v)
        img[pair_index(u, v, np)] =
            signed_index((window_base(u) - 1) * sp + window_base(v), window_neg(u) != window_neg(v));
    out.images.push_back(std::move(img));
  }
  return out;
}

}  // namespace

bool HZModule::validate(const SSetSpectrum& h) const {
  const SSetSpectrum& m = spectrum;
  const std::size_t l = m.truncation();
  if (!m.validate() || h.truncation() < l || action.size() != l + 1) return false;
  const std::size_t t = m.level(0).truncation();
  for (std::size_t q = 0; q <= l; ++q) {
    if (action[q].size() != l + 1 - q) return false;
    for (std::size_t p = 0; q + p <= l; ++p) {
      const PointedMap& a = action[q][p];
      if (!(a.source == smash(h.level(q), m.level(p))) || !(a.target == m.level(q + p)) || !a.validate())
        return false;
    }
  }
  auto act = [&](std::size_t q, std::size_t p, std::size_t d, std::size_t u, std::size_t x) {
    return action[q][p].images[d][pair_index(u, x, nonbase(m.level(p), d))];
  };
  for (std::size_t d = 0; d <= t; ++d) {
    for (std::size_t p = 0; p <= l; ++p)
      for (std::size_t x = 1; x <= nonbase(m.level(p), d); ++x) {
        if (act(0, p, d, 1, x) != x) return false;
        if (p < l)
          for (std::size_t a = 1; a <= d; ++a)
            if (m.sigma[p].images[d][pair_index(a, x, nonbase(m.level(p), d))] != act(1, p, d, signed_index(a, false), x))
              return false;
      }
    for (std::size_t q1 = 0; q1 <= l; ++q1)
      for (std::size_t q2 = 0; q1 + q2 <= l; ++q2) {
        const PointedMap mult = hz_product(h, q1, q2);
        for (std::size_t p = 0; q1 + q2 + p <= l; ++p)
          for (std::size_t u = 1; u <= nonbase(h.level(q1), d); ++u)
            for (std::size_t v = 1; v <= nonbase(h.level(q2), d); ++v)
              for (std::size_t x = 1; x <= nonbase(m.level(p), d); ++x) {
                const std::size_t lhs = act(q1, q2 + p, d, u, act(q2, p, d, v, x));
                const std::size_t uv = mult.images[d][pair_index(u, v, nonbase(h.level(q2), d))];
                if (lhs != act(q1 + q2, p, d, uv, x)) return false;
              }
      }
    for (std::size_t q = 0; q <= l; ++q)
      for (std::size_t p = 0; q + p <= l; ++p)
        for (std::size_t u = 1; u <= nonbase(h.level(q), d); ++u)
          for (std::size_t x = 1; x <= nonbase(m.level(p), d); ++x) {
            const std::size_t y = act(q, p, d, u, x);
            for (std::size_t i = 0; i + 1 < q; ++i)
              if (act(q, p, d, h.action(q, i).images[d][u], x) != m.action(q + p, i).images[d][y]) return false;
            for (std::size_t i = 0; i + 1 < p; ++i)
              if (act(q, p, d, u, m.action(p, i).images[d][x]) != m.action(q + p, q + i).images[d][y]) return false;
          }
  }
  return true;
}

HZModule hz_as_module(std::size_t l, std::size_t t) {
  HZModule out{hz(l, t), {}};
  for (std::size_t q = 0; q <= l; ++q) {
    out.action.emplace_back();
    for (std::size_t p = 0; q + p <= l; ++p) out.action[q].push_back(hz_product(out.spectrum, q, p));
  }
  return out;
}

HZModule forget_U(const SAbSpectrum& x) {
  const std::size_t l = x.truncation(), t = x.level(0).truncation();
  SSetSpectrum h = hz(l, t);
  HZModule out{empty_sset_spectrum(), {}};
  SSetSpectrum& u = out.spectrum;
  for (std::size_t n = 0; n <= l; ++n) {
    PointedSimplicialSet w = window_of(x.level(n));
    std::vector<PointedMap> acts;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      PointedMap a{w, w, {}};
      for (std::size_t d = 0; d <= t; ++d) a.images.push_back(window_images(x.action(n, i).levels[d]));
      acts.push_back(std::move(a));
    }
    u.seq.levels.push_back(w);
    u.seq.actions.push_back(std::move(acts));
  }
  for (std::size_t n = 0; n < l; ++n) {
    PointedSimplicialSet src = SSetBase::suspend(u.level(n));
    PointedMap s{src, u.level(n + 1), {}};
    for (std::size_t d = 0; d <= t; ++d) {
      const auto cols = window_images(x.sigma[n].levels[d]);
      std::vector<std::size_t> img(src.count(d), 0);
      const std::size_t nx = x.level(n).generators(d), nw = nonbase(u.level(n), d);
      for (std::size_t a = 1; a <= d; ++a)
        for (std::size_t w = 1; w <= nw; ++w) {
          const std::size_t c = cols[2 * ((a - 1) * nx + window_base(w) - 1) + 1];
          img[pair_index(a, w, nw)] = signed_index(window_base(c), window_neg(c) != window_neg(w));
        }
      s.images.push_back(std::move(img));
    }
    u.sigma.push_back(std::move(s));
  }
  for (std::size_t q = 0; q <= l; ++q) {
    out.action.emplace_back();
    for (std::size_t p = 0; q + p <= l; ++p) {
      // (+-s, +-e_j) |-> +-sigma^q(s (x) e_j)
      const SimplicialMap sig = x.iterated_sigma(p, q);
      PointedSimplicialSet src = smash(h.level(q), u.level(p));
      PointedMap a{src, u.level(q + p), {}};
      for (std::size_t d = 0; d <= t; ++d) {
        const auto cols = window_images(sig.levels[d]);
        std::vector<std::size_t> img(src.count(d), 0);
        const std::size_t nx = x.level(p).generators(d), nw = nonbase(u.level(p), d);
        for (std::size_t s = 1; s <= nonbase(h.level(q), d); ++s)
          for (std::size_t w = 1; w <= nw; ++w) {
            const std::size_t c = cols[2 * ((window_base(s) - 1) * nx + window_base(w) - 1) + 1];
            img[pair_index(s, w, nw)] =
                signed_index(window_base(c), window_neg(c) != (window_neg(s) != window_neg(w)));
          }
        a.images.push_back(std::move(img));
      }
      out.action[q].push_back(std::move(a));
    }
  }
  return out;
}

SAbSpectrum functor_Z(const HZModule& m, const SSetSpectrum& h) {
  const SSetSpectrum& x = m.spectrum;
  const std::size_t l = x.truncation(), t = x.level(0).truncation();
  SAbSpectrum out{{Base::SAb, {}, {}}, {}};
  for (std::size_t n = 0; n <= l; ++n) {
    SimplicialAbelianGroup free = free_abelian(x.level(n));
    // [(-s) m] + [(+s) m] = 0, moved by coset representatives of Sigma_q x Sigma_p.
    std::vector<std::set<std::vector<std::pair<std::size_t, long>>>> rels(t + 1);
    for (std::size_t q = 0; q <= n; ++q) {
      const std::size_t p = n - q;
      for (const auto& c : shuffles(q, p)) {
        const PointedMap perm = x.permutation(n, c);
        for (std::size_t d = 0; d <= t; ++d) {
          const std::size_t np = nonbase(x.level(p), d);
          for (std::size_t s = 1; 2 * s <= nonbase(h.level(q), d); ++s)
            for (std::size_t y = 1; y <= np; ++y) {
              std::map<std::size_t, long> v;
              for (std::size_t sv : {2 * s - 1, 2 * s})
                if (std::size_t z = perm.images[d][m.action[q][p].images[d][pair_index(sv, y, np)]]) v[z] += 1;
              if (!v.empty()) rels[d].insert(std::vector<std::pair<std::size_t, long>>(v.begin(), v.end()));
            }
        }
      }
    }
    std::vector<FpGroup> groups;
    std::vector<SimplicialAbelianGroup::Operators> faces(t + 1), degens(t + 1);
    for (std::size_t d = 0; d <= t; ++d) {
      Matrix r(free.generators(d), rels[d].size());
      std::size_t col = 0;
      for (const auto& v : rels[d]) {
        for (auto [z, c] : v) r(z - 1, col) = c;
        ++col;
      }
      groups.emplace_back(free.ring(), free.generators(d), r);
      for (std::size_t i = 0; d > 0 && i <= d; ++i) faces[d].push_back(free.face(d, i));
      for (std::size_t i = 0; d < t && i <= d; ++i) degens[d].push_back(free.degeneracy(d, i));
    }
    SimplicialAbelianGroup level(free.ring(), t, groups, faces, degens);
    std::vector<SimplicialMap> acts;
    for (std::size_t i = 0; i + 1 < n; ++i) acts.push_back(SimplicialMap{level, level, free_abelian_levels(x.action(n, i))});
    out.seq.levels.push_back(level);
    out.seq.actions.push_back(std::move(acts));
  }
  for (std::size_t n = 0; n < l; ++n)
    out.sigma.push_back(
        SimplicialMap{SAbBase::suspend(out.level(n)), out.level(n + 1), free_abelian_levels(x.sigma[n])});
  return out;
}

SAbSpectrumMap nu_tilde(const SAbSpectrum& z, std::size_t l, std::size_t t) {
  SAbSpectrumMap out{z, sym_sab(l, t), {}};
  for (std::size_t n = 0; n <= l; ++n) {
    SimplicialMap f{z.level(n), out.target.level(n), {}};
    for (std::size_t d = 0; d <= t; ++d) {
      Matrix m(out.target.level(n).generators(d), z.level(n).generators(d));
      for (std::size_t j = 0; j < m.rows(); ++j) {
        m(j, 2 * j) = 1;
        m(j, 2 * j + 1) = -1;
      }
      f.levels.push_back(std::move(m));
    }
    out.levels.push_back(std::move(f));
  }
  return out;
}

// ---- normalization ---------------------------------------------------------

namespace {

int top_degree(std::size_t l, std::size_t t, std::size_t n) { return int(t) - int(l) + int(n); }

}  // namespace

ChainSpectrum prolong_normalization(const SAbSpectrum& x) {
  const std::size_t l = x.truncation(), t = x.level(0).truncation();
  if (t < l) throw std::invalid_argument("prolong_normalization: simplicial bound below the truncation");
  const Ring ring = x.level(0).ring();
  ChainSpectrum out{{Base::ChPlus, {}, {}}, {}};
  std::vector<ChainComplex> full;
  for (std::size_t n = 0; n <= l; ++n) {
    full.push_back(normalize(x.level(n)));
    const int top = top_degree(l, t, n);
    ChainComplex c = truncate_above(full[n], top).with_grading(Grading::NonNegative);
    std::vector<ChainMap> acts;
    for (std::size_t i = 0; i + 1 < n; ++i) acts.push_back(truncated(normalize(x.action(n, i)), c, c, top));
    out.seq.levels.push_back(c);
    out.seq.actions.push_back(std::move(acts));
  }
  SimplicialAbelianGroup s1 = free_abelian(circle(t), ring);
  ChainComplex ns1 = normalize(s1);
  for (int d = ns1.lo(); d <= ns1.hi(); ++d)
    if (ns1.generators(d) != (d == 1 ? 1u : 0u)) throw std::logic_error("prolong_normalization: N of the circle");
  for (std::size_t n = 0; n < l; ++n) {
    // N(sigma) o shuffle o (phi_1 (x) id), with phi_1 the identity Z[1] = N Z~S^1.
    ChainMap m = compose(normalize(x.sigma[n]), shuffle_map(s1, x.level(n)));
    out.sigma.push_back(truncated(m, shift(out.level(n), 1), out.level(n + 1), top_degree(l, t, n + 1)));
  }
  return out;
}

ChainSpectrumMap prolong_normalization(const SAbSpectrumMap& f) {
  ChainSpectrumMap out{prolong_normalization(f.source), prolong_normalization(f.target), {}};
  const std::size_t l = f.source.truncation(), t = f.source.level(0).truncation();
  for (std::size_t n = 0; n <= l; ++n)
    out.levels.push_back(truncated(normalize(f.levels[n]), out.source.level(n), out.target.level(n), top_degree(l, t, n)));
  return out;
}

ChainSpectrum build_calN(std::size_t l, std::size_t t) { return prolong_normalization(sym_sab(l, t)); }

ChainSpectrumMap build_phi(std::size_t l, std::size_t t) {
  ChainSpectrum s = sphere_spectrum(Ring::Integers, l);
  ChainSpectrum n = build_calN(l, t);
  ChainSpectrumMap out{s, n, {}};
  out.levels.push_back(ChainMap(s.level(0), n.level(0), {{0, Matrix{{1}}}}));
  for (std::size_t k = 1; k <= l; ++k)
    out.levels.push_back(rewrap(compose(n.sigma[k - 1], shift(out.levels[k - 1], 1)), s.level(k), n.level(k)));
  return out;
}

ChainMap calN_product(std::size_t p, std::size_t q, std::size_t t) {
  SimplicialAbelianGroup a = free_abelian(simplicial_sphere(p, t)), b = free_abelian(simplicial_sphere(q, t));
  ChainMap sh = shuffle_map(a, b);
  return rewrap(sh, sh.source(), normalize(free_abelian(simplicial_sphere(p + q, t))));
}

bool phi_is_monoidal(const ChainSpectrumMap& phi, std::size_t t) {
  const std::size_t l = phi.source.truncation();
  if (!(phi.levels.at(0).component(0) == Matrix{{1}})) return false;
  for (std::size_t p = 0; p <= l; ++p)
    for (std::size_t q = 0; p + q <= l; ++q) {
      ChainMap prod = calN_product(p, q, t);
      const int n = int(p + q);
      Matrix x = kron(phi.levels[p].component(int(p)), phi.levels[q].component(int(q)));
      Matrix v(prod.source().generators(n), 1);
      for (const auto& blk : tensor_blocks(normalize(free_abelian(simplicial_sphere(p, t))),
                                           normalize(free_abelian(simplicial_sphere(q, t))), n))
        if (blk.p == int(p)) v.add_block(blk.offset, 0, x);
      if (!(prod.component(n) * v == phi.levels[p + q].component(n))) return false;
    }
  return true;
}

}  // namespace hzalg
