#include "hzalg/spectra.hpp"

#include <algorithm>
#include <map>

namespace hzalg {
namespace {

Grading grading_of(Base base) { return base == Base::ChPlus ? Grading::NonNegative : Grading::Unbounded; }

void require_chain_base(Base base, const char* what) {
  if (base != Base::ChPlus && base != Base::ChFull) throw std::invalid_argument(std::string(what) + ": not a chain base");
}

using Block = SummandBlock;

// Sorted copy of `list` and h with h[j] the rank of list[j].
std::pair<std::vector<std::size_t>, Perm> sort_with_pattern(const std::vector<std::size_t>& list) {
  std::vector<std::size_t> sorted = list;
  std::sort(sorted.begin(), sorted.end());
  Perm h(list.size());
  for (std::size_t j = 0; j < list.size(); ++j)
    h[j] = std::lower_bound(sorted.begin(), sorted.end(), list[j]) - sorted.begin();
  return {sorted, h};
}

std::vector<std::size_t> image_of(const Perm& g, const std::vector<std::size_t>& list) {
  std::vector<std::size_t> out;
  for (std::size_t x : list) out.push_back(g[x]);
  return out;
}

std::vector<std::size_t> slice(const Perm& s, std::size_t from, std::size_t to) {
  return std::vector<std::size_t>(s.begin() + from, s.begin() + to);
}

std::vector<std::size_t> concat(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Summands of (X (x) Y)_n.
struct TensorLayout {
  std::vector<std::size_t> p;
  std::vector<Perm> shuffle;
  std::map<std::pair<std::size_t, Perm>, std::size_t> index;
  std::vector<ChainComplex> parts;

  std::size_t find(std::size_t first, const Perm& s) const { return index.at({first, s}); }
};

TensorLayout tensor_layout(const ChainSequence& x, const ChainSequence& y, std::size_t n) {
  TensorLayout l;
  for (std::size_t p = 0; p <= n; ++p)
    for (const auto& s : shuffles(p, n - p)) {
      l.index[{p, s}] = l.p.size();
      l.p.push_back(p);
      l.shuffle.push_back(s);
      l.parts.push_back(tensor(x.level(p), y.level(n - p)));
    }
  return l;
}

ChainComplex total_of(const std::vector<ChainComplex>& parts, Ring ring, Grading grading) {
  if (parts.empty()) return zero_complex(ring, grading);
  ChainComplex t = direct_sum(parts);
  return t.empty() ? zero_complex(ring, grading) : t.with_grading(grading);
}

std::vector<std::size_t> complement(const std::vector<std::size_t>& image, std::size_t n) {
  std::vector<bool> hit(n, false);
  for (std::size_t v : image) hit[v] = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v)
    if (!hit[v]) out.push_back(v);
  return out;
}

// tensor(f, id) with the source viewed as `source`.
ChainMap tensor_id(const ChainMap& f, const ChainComplex& other) { return tensor(f, ChainMap::identity(other)); }
ChainMap id_tensor(const ChainComplex& other, const ChainMap& f) { return tensor(ChainMap::identity(other), f); }

ChainMap transpose_map(const ChainMap& f) {
  std::map<int, Matrix> comp;
  const auto& t = f.target();
  for (int n = t.lo(); n <= t.hi() && !t.empty(); ++n) comp.emplace(n, f.component(n).transpose());
  return ChainMap(f.target(), f.source(), comp);
}

// tensor(direct_sum(parts), c) -> direct_sum(tensor(part_j, c)).
ChainMap distribute_left(const std::vector<ChainComplex>& parts, const ChainComplex& c) {
  ChainComplex sum = direct_sum(parts);
  ChainComplex s = tensor(sum, c);
  std::vector<ChainComplex> tparts;
  for (const auto& p : parts) tparts.push_back(tensor(p, c));
  ChainComplex t = direct_sum(tparts);
  std::map<int, Matrix> comp;
  for (int n = s.lo(); n <= s.hi() && !s.empty(); ++n) {
    Matrix m(t.generators(n), s.generators(n));
    std::size_t src_off = 0;
    for (const auto& blk : tensor_blocks(sum, c, n)) {
      const int p = blk.p;
      const std::size_t nc = c.generators(n - p);
      for (std::size_t j = 0; j < parts.size(); ++j) {
        const std::size_t na = parts[j].generators(p);
        if (na == 0) continue;
        std::size_t inner = 0;
        for (const auto& b2 : tensor_blocks(parts[j], c, n))
          if (b2.p == p) inner = b2.offset;
        const std::size_t base_t = summand_offset(tparts, j, n) + inner;
        const std::size_t a0 = summand_offset(parts, j, p);
        for (std::size_t a = 0; a < na; ++a)
          for (std::size_t z = 0; z < nc; ++z) m(base_t + a * nc + z, src_off + (a0 + a) * nc + z) = 1;
      }
      src_off += blk.size;
    }
    comp.emplace(n, std::move(m));
  }
  return ChainMap(s, t, comp);
}

// tensor(c, direct_sum(parts)) -> direct_sum(tensor(c, part_j)).
ChainMap distribute_right(const ChainComplex& c, const std::vector<ChainComplex>& parts) {
  ChainComplex sum = direct_sum(parts);
  ChainComplex s = tensor(c, sum);
  std::vector<ChainComplex> tparts;
  for (const auto& p : parts) tparts.push_back(tensor(c, p));
  ChainComplex t = direct_sum(tparts);
  std::map<int, Matrix> comp;
  for (int n = s.lo(); n <= s.hi() && !s.empty(); ++n) {
    Matrix m(t.generators(n), s.generators(n));
    for (const auto& blk : tensor_blocks(c, sum, n)) {
      const int p = blk.p, q = n - p;
      const std::size_t nx = c.generators(p), ns = sum.generators(q);
      for (std::size_t j = 0; j < parts.size(); ++j) {
        const std::size_t nb = parts[j].generators(q);
        if (nb == 0) continue;
        std::size_t inner = 0;
        for (const auto& b2 : tensor_blocks(c, parts[j], n))
          if (b2.p == p) inner = b2.offset;
        const std::size_t base_t = summand_offset(tparts, j, n) + inner;
        const std::size_t b0 = summand_offset(parts, j, q);
        for (std::size_t x = 0; x < nx; ++x)
          for (std::size_t b = 0; b < nb; ++b) m(base_t + x * nb + b, blk.offset + x * ns + b0 + b) = 1;
      }
    }
    comp.emplace(n, std::move(m));
  }
  return ChainMap(s, t, comp);
}

ChainMap block_diagonal_map(const std::vector<ChainMap>& maps, const ChainComplex& src, const ChainComplex& tgt) {
  std::vector<ChainComplex> sp, tp;
  std::vector<Block> blocks;
  for (std::size_t j = 0; j < maps.size(); ++j) {
    sp.push_back(maps[j].source());
    tp.push_back(maps[j].target());
    blocks.push_back({j, j, maps[j]});
  }
  return block_map(sp, src, tp, tgt, blocks);
}

}  // namespace

// ---- sequences ------------------------------------------------------------

ChainSequence unit_sequence(Ring ring, std::size_t l, Base base) {
  require_chain_base(base, "unit_sequence");
  ChainSequence out{base, {}, {}};
  for (std::size_t n = 0; n <= l; ++n) {
    ChainComplex c = n == 0 ? sphere(0, ring, grading_of(base)) : zero_complex(ring, grading_of(base));
    out.levels.push_back(c);
    out.actions.emplace_back();
    for (std::size_t i = 0; i + 1 < n; ++i) out.actions[n].push_back(ChainMap::identity(c));
  }
  return out;
}

ChainSequence sym_sequence(const ChainComplex& k, std::size_t l, Base base) {
  require_chain_base(base, "sym_sequence");
  ChainSequence out{base, {}, {}};
  out.levels.push_back(sphere(0, k.ring(), grading_of(base)));
  out.actions.emplace_back();
  for (std::size_t n = 1; n <= l; ++n) {
    ChainComplex lvl = tensor(k, out.levels[n - 1]).with_grading(grading_of(base));
    std::vector<ChainMap> acts;
    if (n >= 2) {
      const ChainComplex& rest = out.levels[n - 2];
      ChainMap assoc = associator(k, k, rest);
      ChainMap braid = tensor_id(braiding(k, k), rest);
      ChainMap t0 = compose(assoc, compose(braid, transpose_map(assoc)));
      acts.push_back(rewrap(t0, lvl, lvl));
      for (std::size_t i = 1; i + 1 < n; ++i) acts.push_back(rewrap(id_tensor(k, out.actions[n - 1][i - 1]), lvl, lvl));
    }
    out.levels.push_back(lvl);
    out.actions.push_back(std::move(acts));
  }
  return out;
}

ChainSequence seq_tensor(const ChainSequence& x, const ChainSequence& y) {
  if (x.base != y.base) throw std::invalid_argument("seq_tensor: base mismatch");
  if (x.truncation() != y.truncation()) throw std::invalid_argument("seq_tensor: truncation mismatch");
  const Ring ring = x.level(0).ring();
  ChainSequence out{x.base, {}, {}};
  for (std::size_t n = 0; n <= x.truncation(); ++n) {
    TensorLayout l = tensor_layout(x, y, n);
    ChainComplex total = total_of(l.parts, ring, grading_of(x.base));
    std::vector<ChainMap> acts;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Perm g = transposition(n, i);
      std::vector<Block> blocks;
      for (std::size_t j = 0; j < l.parts.size(); ++j) {
        const std::size_t p = l.p[j], q = n - p;
        auto [a, h1] = sort_with_pattern(image_of(g, slice(l.shuffle[j], 0, p)));
        auto [b, h2] = sort_with_pattern(image_of(g, slice(l.shuffle[j], p, n)));
        ChainMap inner = tensor(x.permutation(p, h1), y.permutation(q, h2));
        blocks.push_back({l.find(p, concat(a, b)), j, inner});
      }
      acts.push_back(block_map(l.parts, total, l.parts, total, blocks));
    }
    out.levels.push_back(total);
    out.actions.push_back(std::move(acts));
  }
  return out;
}

std::vector<ChainMap> seq_associator(const ChainSequence& x, const ChainSequence& y, const ChainSequence& z) {
  ChainSequence xy = seq_tensor(x, y), yz = seq_tensor(y, z);
  ChainSequence left = seq_tensor(xy, z), right = seq_tensor(x, yz);
  std::vector<ChainMap> out;
  for (std::size_t n = 0; n <= x.truncation(); ++n) {
    TensorLayout lo = tensor_layout(xy, z, n), ro = tensor_layout(x, yz, n);
    // Fine summands indexed by 3-block arrangements.
    std::vector<ChainComplex> fine_l, fine_r;
    std::map<std::vector<std::size_t>, std::size_t> fl_index, fr_index;
    std::vector<ChainMap> dist_l, coll_r;
    for (std::size_t j = 0; j < lo.parts.size(); ++j) {
      const std::size_t pq = lo.p[j];
      TensorLayout inner = tensor_layout(x, y, pq);
      std::vector<ChainComplex> pieces;
      for (std::size_t u = 0; u < inner.parts.size(); ++u) {
        const std::size_t p = inner.p[u];
        // positions: outer first block lo.shuffle[j][0..pq) indexed by inner shuffle
        std::vector<std::size_t> key;
        for (std::size_t v = 0; v < pq; ++v) key.push_back(lo.shuffle[j][inner.shuffle[u][v]]);
        std::vector<std::size_t> a(key.begin(), key.begin() + p), b(key.begin() + p, key.end());
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        std::vector<std::size_t> c = slice(lo.shuffle[j], pq, n);
        std::vector<std::size_t> tag = concat(concat({p, b.size()}, a), concat(b, c));
        fl_index[tag] = fine_l.size();
        ChainComplex piece = tensor(tensor(x.level(p), y.level(pq - p)), z.level(n - pq));
        fine_l.push_back(piece);
        pieces.push_back(tensor(x.level(p), y.level(pq - p)));
      }
      dist_l.push_back(distribute_left(pieces, z.level(n - pq)));
    }
    for (std::size_t j = 0; j < ro.parts.size(); ++j) {
      const std::size_t p = ro.p[j];
      TensorLayout inner = tensor_layout(y, z, n - p);
      std::vector<ChainComplex> pieces;
      for (std::size_t u = 0; u < inner.parts.size(); ++u) {
        const std::size_t q = inner.p[u];
        std::vector<std::size_t> key;
        for (std::size_t v = 0; v < n - p; ++v) key.push_back(ro.shuffle[j][p + inner.shuffle[u][v]]);
        std::vector<std::size_t> b(key.begin(), key.begin() + q), c(key.begin() + q, key.end());
        std::sort(b.begin(), b.end());
        std::sort(c.begin(), c.end());
        std::vector<std::size_t> a = slice(ro.shuffle[j], 0, p);
        std::vector<std::size_t> tag = concat(concat({p, q}, a), concat(b, c));
        fr_index[tag] = fine_r.size();
        fine_r.push_back(tensor(x.level(p), tensor(y.level(q), z.level(n - p - q))));
        pieces.push_back(tensor(y.level(q), z.level(n - p - q)));
      }
      coll_r.push_back(transpose_map(distribute_right(x.level(p), pieces)));
    }
    ChainComplex fl_total = total_of(fine_l, x.level(0).ring(), Grading::Unbounded);
    ChainComplex fr_total = total_of(fine_r, x.level(0).ring(), Grading::Unbounded);
    // left total -> fine left
    std::vector<ChainComplex> dl_targets;
    for (const auto& d : dist_l) dl_targets.push_back(d.target());
    ChainMap step1 = block_diagonal_map(dist_l, left.level(n), direct_sum(dl_targets));
    step1 = rewrap(step1, left.level(n), fl_total);
    std::vector<Block> blocks;
    for (const auto& [tag, li] : fl_index) {
      const std::size_t p = tag[0], q = tag[1];
      blocks.push_back({fr_index.at(tag), li, associator(x.level(p), y.level(q), z.level(n - p - q))});
    }
    ChainMap step2 = block_map(fine_l, fl_total, fine_r, fr_total, blocks);
    std::vector<ChainComplex> cr_sources;
    for (const auto& c : coll_r) cr_sources.push_back(c.source());
    ChainMap step3 = block_diagonal_map(coll_r, direct_sum(cr_sources), right.level(n));
    step3 = rewrap(step3, fr_total, right.level(n));
    out.push_back(compose(step3, compose(step2, step1)));
  }
  return out;
}

std::vector<ChainMap> seq_left_unitor(const ChainSequence& x) {
  ChainSequence u = unit_sequence(x.level(0).ring(), x.truncation(), x.base);
  ChainSequence ux = seq_tensor(u, x);
  std::vector<ChainMap> out;
  for (std::size_t n = 0; n <= x.truncation(); ++n) {
    TensorLayout l = tensor_layout(u, x, n);
    ChainMap inner = rewrap(ChainMap::identity(x.level(n)), tensor(u.level(0), x.level(n)), x.level(n));
    out.push_back(block_map(l.parts, ux.level(n), {x.level(n)}, x.level(n), {{0, l.find(0, identity_perm(n)), inner}}));
  }
  return out;
}

std::vector<ChainMap> seq_right_unitor(const ChainSequence& x) {
  ChainSequence u = unit_sequence(x.level(0).ring(), x.truncation(), x.base);
  ChainSequence xu = seq_tensor(x, u);
  std::vector<ChainMap> out;
  for (std::size_t n = 0; n <= x.truncation(); ++n) {
    TensorLayout l = tensor_layout(x, u, n);
    ChainMap inner = rewrap(ChainMap::identity(x.level(n)), tensor(x.level(n), u.level(0)), x.level(n));
    out.push_back(block_map(l.parts, xu.level(n), {x.level(n)}, x.level(n), {{0, l.find(n, identity_perm(n)), inner}}));
  }
  return out;
}

bool is_equivariant(const ChainSequence& x, const ChainSequence& y, const std::vector<ChainMap>& f) {
  for (std::size_t n = 0; n <= x.truncation(); ++n)
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (!compose(f.at(n), x.action(n, i)).equals(compose(y.action(n, i), f[n]))) return false;
  return true;
}

// ---- spectra --------------------------------------------------------------

ChainSpectrum zero_spectrum(Ring ring, std::size_t l, Base base) {
  require_chain_base(base, "zero_spectrum");
  ChainSpectrum out{{base, {}, {}}, {}};
  ChainComplex z = zero_complex(ring, grading_of(base));
  for (std::size_t n = 0; n <= l; ++n) {
    out.seq.levels.push_back(z);
    out.seq.actions.emplace_back();
    for (std::size_t i = 0; i + 1 < n; ++i) out.seq.actions[n].push_back(ChainMap::identity(z));
    if (n < l) out.sigma.push_back(ChainMap::zero(z, z));
  }
  return out;
}

ChainSpectrum sphere_spectrum(Ring ring, std::size_t l, Base base) {
  return free_spectrum(0, sphere(0, ring, grading_of(base)), l, base);
}

ChainSpectrum free_spectrum(std::size_t m, const ChainComplex& k0, std::size_t l, Base base) {
  require_chain_base(base, "free_spectrum");
  if (m > l) throw std::invalid_argument("free_spectrum: level above the truncation");
  const ChainComplex k = k0.with_grading(grading_of(base));
  const Ring ring = k.ring();
  ChainSpectrum out{{base, {}, {}}, {}};
  std::vector<std::vector<ChainComplex>> parts(l + 1);
  std::vector<std::vector<Perm>> inj(l + 1);
  for (std::size_t n = 0; n <= l; ++n) {
    if (n >= m) {
      inj[n] = injections(m, n);
      for (std::size_t j = 0; j < inj[n].size(); ++j) parts[n].push_back(shift(k, int(n - m)));
    }
    ChainComplex total = total_of(parts[n], ring, grading_of(base));
    std::map<Perm, std::size_t> where;
    for (std::size_t j = 0; j < inj[n].size(); ++j) where[inj[n][j]] = j;
    std::vector<ChainMap> acts;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Perm g = transposition(n, i);
      std::vector<Block> blocks;
      for (std::size_t j = 0; j < inj[n].size(); ++j) {
        const auto& b = inj[n][j];
        auto comp_b = complement(b, n);
        auto [sorted, h] = sort_with_pattern(image_of(g, comp_b));
        blocks.push_back({where.at(image_of(g, b)), j, ChainMap::identity(parts[n][j]), Scalar(sign(h))});
      }
      acts.push_back(block_map(parts[n], total, parts[n], total, blocks));
    }
    out.seq.levels.push_back(total);
    out.seq.actions.push_back(std::move(acts));
  }
  for (std::size_t n = 0; n < l; ++n) {
    ChainComplex src = shift(out.seq.levels[n], 1);
    const ChainComplex& tgt = out.seq.levels[n + 1];
    if (n < m) {
      out.sigma.push_back(ChainMap::zero(src, tgt));
      continue;
    }
    std::map<Perm, std::size_t> where;
    for (std::size_t j = 0; j < inj[n + 1].size(); ++j) where[inj[n + 1][j]] = j;
    std::vector<ChainComplex> sparts;
    std::vector<Block> blocks;
    for (std::size_t j = 0; j < inj[n].size(); ++j) {
      sparts.push_back(shift(parts[n][j], 1));
      Perm up = inj[n][j];
      for (auto& v : up) ++v;
      blocks.push_back({where.at(up), j, rewrap(ChainMap::identity(parts[n + 1][0]), sparts.back(), parts[n + 1][0])});
    }
    out.sigma.push_back(block_map(sparts, src, parts[n + 1], tgt, blocks));
  }
  return out;
}

ChainSpectrumMap free_spectrum(std::size_t m, const ChainMap& f, std::size_t l, Base base) {
  ChainSpectrum s = free_spectrum(m, f.source(), l, base), t = free_spectrum(m, f.target(), l, base);
  ChainSpectrumMap out{s, t, {}};
  for (std::size_t n = 0; n <= l; ++n) {
    if (n < m) {
      out.levels.push_back(ChainMap::zero(s.level(n), t.level(n)));
      continue;
    }
    const std::size_t count = injections(m, n).size();
    std::vector<ChainComplex> sp(count, shift(f.source(), int(n - m))), tp(count, shift(f.target(), int(n - m)));
    std::vector<Block> blocks;
    for (std::size_t j = 0; j < count; ++j) blocks.push_back({j, j, shift(f, int(n - m))});
    out.levels.push_back(block_map(sp, s.level(n), tp, t.level(n), blocks));
  }
  return out;
}

ChainSpectrumMap free_extension(std::size_t m, const ChainComplex& k, const ChainSpectrum& x, const ChainMap& g) {
  const std::size_t l = x.truncation();
  ChainSpectrum f = free_spectrum(m, k, l, x.base());
  ChainSpectrumMap out{f, x, {}};
  for (std::size_t n = 0; n <= l; ++n) {
    if (n < m) {
      out.levels.push_back(ChainMap::zero(f.level(n), x.level(n)));
      continue;
    }
    ChainMap base_map = compose(x.iterated_sigma(m, n - m), shift(g, int(n - m)));
    const auto inj = injections(m, n);
    std::vector<ChainComplex> sp(inj.size(), shift(k, int(n - m)));
    std::vector<Block> blocks;
    for (std::size_t j = 0; j < inj.size(); ++j) {
      Perm c = concat(complement(inj[j], n), inj[j]);
      blocks.push_back({0, j, compose(x.permutation(n, c), base_map)});
    }
    out.levels.push_back(block_map(sp, f.level(n), {x.level(n)}, x.level(n), blocks));
  }
  return out;
}

ChainMap free_unit(std::size_t m, const ChainSpectrum& fm, const ChainComplex& k) {
  const std::size_t count = injections(m, m).size();
  std::vector<ChainComplex> parts(count, shift(k, 0));
  return block_map({k}, k, parts, fm.level(m), {{0, 0, ChainMap::identity(k)}});
}

namespace {

struct SmashLevel {
  TensorLayout layout;
  ChainComplex total;     // (X (x) Y)_n
  ChainComplex quotient;  // (X ^ Y)_n
};

SmashLevel smash_level(const ChainSpectrum& x, const ChainSpectrum& y, std::size_t n) {
  const Ring ring = x.level(0).ring();
  const Grading gr = grading_of(x.base());
  SmashLevel s{tensor_layout(x.seq, y.seq, n), ChainComplex(ring, gr), ChainComplex(ring, gr)};
  s.total = total_of(s.layout.parts, ring, gr);
  if (n == 0) {
    s.quotient = s.total;
    return s;
  }
  ChainComplex s1 = sphere(1, ring);
  std::vector<ChainComplex> rparts;
  std::vector<Block> blocks;
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t q = n - 1 - p;
    ChainComplex rel = tensor(x.level(p), shift(y.level(q), 1));
    ChainMap braid = rewrap(braiding(x.level(p), s1), tensor(x.level(p), s1), shift(x.level(p), 1));
    ChainMap act_x = compose(x.sigma[p], braid);
    for (const auto& arr : multi_shuffles({p, 1, q})) {
      const std::size_t r = rparts.size();
      rparts.push_back(rel);
      std::vector<std::size_t> a = slice(arr, 0, p), c = slice(arr, p + 1, n);
      const std::size_t b = arr[p];
      // through X: x * s lands in X_{p+1} with coordinates ordered (b, A)
      auto [xa, h1] = sort_with_pattern(concat({b}, a));
      ChainMap route_x = rewrap(tensor_id(compose(x.permutation(p + 1, h1), act_x), y.level(q)), rel,
                                s.layout.parts[s.layout.find(p + 1, concat(xa, c))]);
      blocks.push_back({s.layout.find(p + 1, concat(xa, c)), r, route_x, 1});
      // through Y: s * y lands in Y_{q+1} with coordinates ordered (b, C)
      auto [yc, h2] = sort_with_pattern(concat({b}, c));
      ChainMap route_y = id_tensor(x.level(p), compose(y.permutation(q + 1, h2), y.sigma[q]));
      blocks.push_back({s.layout.find(p, concat(a, yc)), r, route_y, -1});
    }
  }
  ChainComplex rtotal = total_of(rparts, ring, gr);
  ChainMap diff = block_map(rparts, rtotal, s.layout.parts, s.total, blocks);
  s.quotient = cokernel(diff).complex.with_grading(gr);
  return s;
}

}  // namespace

ChainSpectrum smash(const ChainSpectrum& x, const ChainSpectrum& y) {
  if (x.base() != y.base()) throw std::invalid_argument("smash: base mismatch");
  if (x.truncation() != y.truncation()) throw std::invalid_argument("smash: truncation mismatch");
  const std::size_t l = x.truncation();
  ChainSequence t = seq_tensor(x.seq, y.seq);
  std::vector<SmashLevel> lv;
  for (std::size_t n = 0; n <= l; ++n) lv.push_back(smash_level(x, y, n));
  ChainSpectrum out{{x.base(), {}, {}}, {}};
  for (std::size_t n = 0; n <= l; ++n) {
    out.seq.levels.push_back(lv[n].quotient);
    std::vector<ChainMap> acts;
    for (std::size_t i = 0; i + 1 < n; ++i) acts.push_back(rewrap(t.action(n, i), lv[n].quotient, lv[n].quotient));
    out.seq.actions.push_back(std::move(acts));
  }
  for (std::size_t n = 0; n < l; ++n) {
    const auto& lo = lv[n].layout;
    std::vector<ChainComplex> sparts;
    std::vector<Block> blocks;
    for (std::size_t j = 0; j < lo.parts.size(); ++j) {
      const std::size_t p = lo.p[j], q = n - p;
      sparts.push_back(shift(lo.parts[j], 1));
      Perm up{0};
      for (std::size_t v : lo.shuffle[j]) up.push_back(v + 1);
      const std::size_t tj = lv[n + 1].layout.find(p + 1, up);
      ChainMap inner = rewrap(tensor_id(x.sigma[p], y.level(q)), sparts.back(), lv[n + 1].layout.parts[tj]);
      blocks.push_back({tj, j, inner});
    }
    out.sigma.push_back(
        block_map(sparts, shift(lv[n].quotient, 1), lv[n + 1].layout.parts, lv[n + 1].quotient, blocks));
  }
  return out;
}

ChainSpectrumMap smash(const ChainSpectrumMap& f, const ChainSpectrumMap& g) {
  ChainSpectrumMap out{smash(f.source, g.source), smash(f.target, g.target), {}};
  for (std::size_t n = 0; n <= out.source.truncation(); ++n) {
    TensorLayout ls = tensor_layout(f.source.seq, g.source.seq, n), lt = tensor_layout(f.target.seq, g.target.seq, n);
    std::vector<Block> blocks;
    for (std::size_t j = 0; j < ls.parts.size(); ++j)
      blocks.push_back({j, j, tensor(f.levels[ls.p[j]], g.levels[n - ls.p[j]])});
    out.levels.push_back(block_map(ls.parts, out.source.level(n), lt.parts, out.target.level(n), blocks));
  }
  return out;
}

ChainMap smash_inclusion(const ChainSpectrum& x, const ChainSpectrum& y, const ChainSpectrum& xy, std::size_t p,
                         std::size_t q) {
  TensorLayout l = tensor_layout(x.seq, y.seq, p + q);
  ChainComplex src = tensor(x.level(p), y.level(q));
  return block_map({src}, src, l.parts, xy.level(p + q),
                   {{l.find(p, identity_perm(p + q)), 0, ChainMap::identity(src)}});
}

ChainSpectrum direct_sum(const ChainSpectrum& a, const ChainSpectrum& b) {
  if (a.base() != b.base() || a.truncation() != b.truncation())
    throw std::invalid_argument("direct_sum: spectra do not match");
  const std::size_t l = a.truncation();
  ChainSpectrum out{{a.base(), {}, {}}, {}};
  auto diag = [](const ChainMap& f, const ChainMap& g, const ChainComplex& s, const ChainComplex& t) {
    return block_map({f.source(), g.source()}, s, {f.target(), g.target()}, t, {{0, 0, f}, {1, 1, g}});
  };
  for (std::size_t n = 0; n <= l; ++n) {
    ChainComplex lvl = direct_sum(a.level(n), b.level(n)).with_grading(grading_of(a.base()));
    std::vector<ChainMap> acts;
    for (std::size_t i = 0; i + 1 < n; ++i) acts.push_back(diag(a.action(n, i), b.action(n, i), lvl, lvl));
    out.seq.levels.push_back(lvl);
    out.seq.actions.push_back(std::move(acts));
  }
  for (std::size_t n = 0; n < l; ++n)
    out.sigma.push_back(diag(a.sigma[n], b.sigma[n], shift(out.seq.levels[n], 1), out.seq.levels[n + 1]));
  return out;
}

ChainSpectrumMap operator+(const ChainSpectrumMap& a, const ChainSpectrumMap& b) {
  ChainSpectrumMap out{a.source, a.target, {}};
  for (std::size_t n = 0; n < a.levels.size(); ++n) out.levels.push_back(a.levels[n] + b.levels.at(n));
  return out;
}

ChainSpectrumMap operator-(const ChainSpectrumMap& a) {
  ChainSpectrumMap out{a.source, a.target, {}};
  for (const auto& f : a.levels) out.levels.push_back(-f);
  return out;
}

SpectrumQuotient cokernel(const ChainSpectrumMap& f) {
  const ChainSpectrum& y = f.target;
  const std::size_t l = y.truncation();
  ChainSpectrum q{{y.base(), {}, {}}, {}};
  for (std::size_t n = 0; n <= l; ++n) {
    ChainComplex c = cokernel(f.levels.at(n)).complex.with_grading(y.level(n).grading());
    std::vector<ChainMap> acts;
    for (std::size_t i = 0; i + 1 < n; ++i) acts.push_back(rewrap(y.action(n, i), c, c));
    q.seq.levels.push_back(c);
    q.seq.actions.push_back(std::move(acts));
  }
  for (std::size_t n = 0; n < l; ++n) q.sigma.push_back(rewrap(y.sigma[n], shift(q.level(n), 1), q.level(n + 1)));
  ChainSpectrumMap proj{y, q, {}};
  for (std::size_t n = 0; n <= l; ++n) proj.levels.push_back(rewrap(ChainMap::identity(y.level(n)), y.level(n), q.level(n)));
  return {q, proj};
}

FpGroup level_homology(const ChainSpectrum& x, std::size_t n, int k) { return homology(x.level(n), k); }

bool is_level_equiv(const ChainSpectrumMap& f) {
  for (const auto& m : f.levels)
    if (!is_quasi_iso(m)) return false;
  return true;
}

bool is_iso(const ChainSpectrumMap& f) {
  for (const auto& m : f.levels)
    if (!m.is_iso()) return false;
  return true;
}

ChainMap omega_adjoint(const ChainSpectrum& x, std::size_t n) {
  const ChainMap& s = x.sigma.at(n);
  ChainComplex down = shift(x.level(n + 1), -1);
  std::map<int, Matrix> comp;
  const ChainComplex& src = x.level(n);
  for (int d = src.lo(); d <= src.hi() && !src.empty(); ++d) comp.emplace(d, s.component(d + 1));
  return connective_lift(ChainMap(src, down, comp));
}

bool omega_check(const ChainSpectrum& x) {
  if (x.base() != Base::ChPlus) throw std::invalid_argument("omega_check: needs a ch+ spectrum");
  for (std::size_t n = 0; n < x.truncation(); ++n)
    if (!is_quasi_iso(omega_adjoint(x, n))) return false;
  return true;
}

SpectrumMapGroup::SpectrumMapGroup(const ChainSpectrum& source, const ChainSpectrum& target)
    : source_(source), target_(target) {
  if (source.truncation() != target.truncation()) throw std::invalid_argument("spectrum maps: truncation mismatch");
  const Ring ring = source.level(0).ring();
  HomSystem sys(ring);
  std::map<std::pair<std::size_t, int>, std::size_t> id;
  const std::size_t l = source.truncation();
  for (std::size_t n = 0; n <= l; ++n) {
    const ChainComplex &x = source.level(n), &y = target.level(n);
    for (int d = x.lo(); d <= x.hi() && !x.empty(); ++d)
      if (x.generators(d) > 0 && y.generators(d) > 0) {
        id[{n, d}] = sys.add_unknown(x.group(d), y.group(d));
        unknowns_.push_back({n, d});
      }
  }
  auto has = [&](std::size_t n, int d) { return id.count({n, d}) > 0; };
  auto add = [&](std::vector<HomSystem::Term>& terms, std::size_t n, int d, Matrix left, Matrix right) {
    if (has(n, d)) terms.push_back({id.at({n, d}), std::move(left), std::move(right)});
  };
  for (std::size_t n = 0; n <= l; ++n) {
    const ChainComplex &x = source.level(n), &y = target.level(n);
    if (x.empty()) continue;
    for (int d = x.lo(); d <= x.hi() + 1; ++d) {
      if (x.generators(d) == 0 || y.generators(d - 1) == 0) continue;
      std::vector<HomSystem::Term> terms;
      add(terms, n, d, y.differential(d), Matrix::identity(x.generators(d)));
      add(terms, n, d - 1, -Matrix::identity(y.generators(d - 1)), x.differential(d));
      if (!terms.empty()) sys.add_constraint(terms, y.group(d - 1));
    }
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (int d = x.lo(); d <= x.hi(); ++d) {
        if (!has(n, d)) continue;
        std::vector<HomSystem::Term> terms;
        add(terms, n, d, target.action(n, i).component(d), Matrix::identity(x.generators(d)));
        add(terms, n, d, -Matrix::identity(y.generators(d)), source.action(n, i).component(d));
        sys.add_constraint(terms, y.group(d));
      }
    if (n < l) {
      const ChainComplex& y1 = target.level(n + 1);
      for (int d = x.lo() + 1; d <= x.hi() + 1; ++d) {
        if (x.generators(d - 1) == 0 || y1.generators(d) == 0) continue;
        std::vector<HomSystem::Term> terms;
        add(terms, n + 1, d, Matrix::identity(y1.generators(d)), source.sigma[n].component(d));
        add(terms, n, d - 1, -target.sigma[n].component(d), Matrix::identity(x.generators(d - 1)));
        if (!terms.empty()) sys.add_constraint(terms, y1.group(d));
      }
    }
  }
  solution_ = sys.solve();
}

ChainSpectrumMap SpectrumMapGroup::generator(std::size_t i) const {
  std::vector<long> c(generator_count(), 0);
  c.at(i) = 1;
  return combination(c);
}

ChainSpectrumMap SpectrumMapGroup::combination(const std::vector<long>& c) const {
  const std::size_t l = source_.truncation();
  std::vector<std::map<int, Matrix>> comp(l + 1);
  for (std::size_t u = 0; u < unknowns_.size(); ++u) {
    auto [n, d] = unknowns_[u];
    Matrix m(target_.level(n).generators(d), source_.level(n).generators(d));
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) m.add_block(0, 0, solution_.generators.at(i)[u], Scalar(c[i]));
    comp[n].emplace(d, std::move(m));
  }
  ChainSpectrumMap out{source_, target_, {}};
  for (std::size_t n = 0; n <= l; ++n) out.levels.push_back(ChainMap(source_.level(n), target_.level(n), comp[n]));
  return out;
}

std::optional<Matrix> SpectrumMapGroup::coordinates(const ChainSpectrumMap& f) const {
  std::vector<Matrix> maps;
  for (auto [n, d] : unknowns_) maps.push_back(f.levels.at(n).component(d));
  return solution_.coordinates(maps);
}

FpGroup spectrum_map_group(const ChainSpectrum& source, const ChainSpectrum& target) {
  return SpectrumMapGroup(source, target).group();
}

// ---- change of base -------------------------------------------------------

namespace {

ChainSpectrum regraded(const ChainSpectrum& x, Base base) {
  ChainSpectrum out{{base, {}, {}}, {}};
  for (std::size_t n = 0; n <= x.truncation(); ++n) {
    ChainComplex c = x.level(n).with_grading(grading_of(base));
    std::vector<ChainMap> acts;
    for (std::size_t i = 0; i + 1 < n; ++i) acts.push_back(rewrap(x.action(n, i), c, c));
    out.seq.levels.push_back(c);
    out.seq.actions.push_back(std::move(acts));
  }
  for (std::size_t n = 0; n < x.truncation(); ++n)
    out.sigma.push_back(rewrap(x.sigma[n], shift(out.level(n), 1), out.level(n + 1)));
  return out;
}

}  // namespace

ChainSpectrum include_i(const ChainSpectrum& x) {
  if (x.base() != Base::ChPlus) throw std::invalid_argument("include_i: needs a ch+ spectrum");
  return regraded(x, Base::ChFull);
}

ChainSpectrumMap include_i(const ChainSpectrumMap& f) {
  ChainSpectrumMap out{include_i(f.source), include_i(f.target), {}};
  for (std::size_t n = 0; n < f.levels.size(); ++n)
    out.levels.push_back(rewrap(f.levels[n], out.source.level(n), out.target.level(n)));
  return out;
}

ChainSpectrum connective_prolong(const ChainSpectrum& x) {
  if (x.base() != Base::ChFull) throw std::invalid_argument("connective_prolong: needs a Ch spectrum");
  ChainSpectrum out{{Base::ChPlus, {}, {}}, {}};
  for (std::size_t n = 0; n <= x.truncation(); ++n) {
    out.seq.levels.push_back(connective_cover(x.level(n)));
    std::vector<ChainMap> acts;
    for (std::size_t i = 0; i + 1 < n; ++i) acts.push_back(connective_cover(x.action(n, i)));
    out.seq.actions.push_back(std::move(acts));
  }
  for (std::size_t n = 0; n < x.truncation(); ++n) {
    ChainMap incl = shift(connective_counit(x.level(n)), 1);
    out.sigma.push_back(connective_lift(compose(x.sigma[n], incl)));
  }
  return out;
}

ChainSpectrumMap connective_prolong(const ChainSpectrumMap& f) {
  ChainSpectrumMap out{connective_prolong(f.source), connective_prolong(f.target), {}};
  for (const auto& m : f.levels) out.levels.push_back(connective_cover(m));
  return out;
}

ChainSpectrumMap connective_prolong_counit(const ChainSpectrum& x) {
  ChainSpectrumMap out{include_i(connective_prolong(x)), x, {}};
  for (std::size_t n = 0; n <= x.truncation(); ++n)
    out.levels.push_back(rewrap(connective_counit(x.level(n)), out.source.level(n), x.level(n)));
  return out;
}

ChainSpectrumMap connective_prolong_unit(const ChainSpectrum& x) {
  ChainSpectrumMap out{x, connective_prolong(include_i(x)), {}};
  for (std::size_t n = 0; n <= x.truncation(); ++n) {
    ChainMap id = rewrap(ChainMap::identity(x.level(n)), x.level(n), x.level(n).with_grading(Grading::Unbounded));
    out.levels.push_back(connective_lift(id));
  }
  return out;
}

ChainSpectrum f_zero(const ChainComplex& c, std::size_t l) { return free_spectrum(0, c, l, Base::ChFull); }

ChainComplex ev_zero(const ChainSpectrum& x) { return x.level(0); }

ChainSpectrumMap f_zero_counit(const ChainSpectrum& x) {
  return free_extension(0, x.level(0), x, ChainMap::identity(x.level(0)));
}

ChainSpectrum base_change_Q(const ChainSpectrum& x) {
  ChainSpectrum out{{x.base(), {}, {}}, {}};
  for (std::size_t n = 0; n <= x.truncation(); ++n) {
    out.seq.levels.push_back(base_change_Q(x.level(n)));
    std::vector<ChainMap> acts;
    for (std::size_t i = 0; i + 1 < n; ++i) acts.push_back(base_change_Q(x.action(n, i)));
    out.seq.actions.push_back(std::move(acts));
  }
  for (const auto& s : x.sigma) out.sigma.push_back(base_change_Q(s));
  return out;
}

ChainSpectrumMap base_change_Q(const ChainSpectrumMap& f) {
  ChainSpectrumMap out{base_change_Q(f.source), base_change_Q(f.target), {}};
  for (const auto& m : f.levels) out.levels.push_back(base_change_Q(m));
  return out;
}

}  // namespace hzalg
