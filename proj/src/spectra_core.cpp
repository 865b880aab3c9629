#include "hzalg/spectra.hpp"

namespace hzalg {

std::string base_name(Base b) {
  switch (b) {
    case Base::ChPlus: return "ch+";
    case Base::ChFull: return "Ch";
    case Base::SAb: return "sAb";
    case Base::SSetPointed: return "sSet*";
  }
  return "?";
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  SimplicialMap out{f.source, g.target, {}};
  for (std::size_t k = 0; k < f.levels.size(); ++k) out.levels.push_back(g.levels.at(k) * f.levels[k]);
  return out;
}

SimplicialMap identity_map(const SimplicialAbelianGroup& a) {
  SimplicialMap out{a, a, {}};
  for (std::size_t k = 0; k <= a.truncation(); ++k) out.levels.push_back(Matrix::identity(a.generators(k)));
  return out;
}

bool equal_maps(const SimplicialMap& a, const SimplicialMap& b) {
  if (a.levels.size() != b.levels.size()) return false;
  for (std::size_t k = 0; k < a.levels.size(); ++k) {
    const Matrix &x = a.levels[k], &y = b.levels[k];
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    if (!a.target.group(k).vanishes(x - y)) return false;
  }
  return true;
}

bool same_simplicial(const SimplicialAbelianGroup& a, const SimplicialAbelianGroup& b) {
  if (a.shares_data(b)) return true;
  if (a.ring() != b.ring() || a.truncation() != b.truncation()) return false;
  const std::size_t t = a.truncation();
  for (std::size_t k = 0; k <= t; ++k) {
    if (a.generators(k) != b.generators(k) || !(a.group(k).relations() == b.group(k).relations())) return false;
    for (std::size_t i = 0; k > 0 && i <= k; ++i)
      if (!(a.face(k, i) == b.face(k, i))) return false;
    for (std::size_t i = 0; k < t && i <= k; ++i)
      if (!(a.degeneracy(k, i) == b.degeneracy(k, i))) return false;
  }
  return true;
}

PointedMap compose(const PointedMap& g, const PointedMap& f) {
  PointedMap out{f.source, g.target, {}};
  for (std::size_t k = 0; k < f.images.size(); ++k) {
    std::vector<std::size_t> img;
    for (std::size_t y : f.images[k]) img.push_back(g.images.at(k).at(y));
    out.images.push_back(std::move(img));
  }
  return out;
}

PointedMap identity_map(const PointedSimplicialSet& k) {
  PointedMap out{k, k, {}};
  for (std::size_t d = 0; d <= k.truncation(); ++d) out.images.push_back(identity_perm(k.count(d)));
  return out;
}

PointedMap smash_circle(const PointedMap& f) {
  const std::size_t t = f.source.truncation();
  PointedSimplicialSet s1 = circle(t);
  PointedMap out{smash(s1, f.source), smash(s1, f.target), {}};
  for (std::size_t k = 0; k <= t; ++k) {
    const std::size_t ns = f.source.count(k) - 1, nt = f.target.count(k) - 1;
    std::vector<std::size_t> img(out.source.count(k), 0);
    for (std::size_t a = 0; a + 1 < s1.count(k); ++a)
      for (std::size_t y = 1; y <= ns; ++y)
        if (std::size_t z = f.images[k][y]) img[1 + a * ns + (y - 1)] = 1 + a * nt + (z - 1);
    out.images.push_back(std::move(img));
  }
  return out;
}

SimplicialMap tensor_circle(const SimplicialMap& f) {
  const std::size_t t = f.source.truncation();
  SimplicialAbelianGroup s1 = free_abelian(circle(t), f.source.ring());
  SimplicialMap out{tensor(s1, f.source), tensor(s1, f.target), {}};
  for (std::size_t k = 0; k <= t; ++k) out.levels.push_back(kron(Matrix::identity(s1.generators(k)), f.levels[k]));
  return out;
}

ChainMap ChainBase::swap(const ChainComplex& x) {
  ChainComplex kkx = shift(x, 2);
  return -ChainMap::identity(kkx);
}

SimplicialAbelianGroup SAbBase::suspend(const SimplicialAbelianGroup& x) {
  return tensor(free_abelian(circle(x.truncation()), x.ring()), x);
}

SimplicialMap SAbBase::swap(const SimplicialAbelianGroup& x) {
  SimplicialAbelianGroup kkx = suspend(suspend(x));
  SimplicialMap out{kkx, kkx, {}};
  for (std::size_t k = 0; k <= x.truncation(); ++k) {
    const std::size_t nx = x.generators(k);
    Perm p(k * k * nx);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t i = 0; i < nx; ++i) p[(a * k + b) * nx + i] = (b * k + a) * nx + i;
    out.levels.push_back(permutation_matrix(p));
  }
  return out;
}

PointedMap SSetBase::swap(const PointedSimplicialSet& x) {
  PointedSimplicialSet kkx = suspend(suspend(x));
  PointedMap out{kkx, kkx, {}};
  for (std::size_t k = 0; k <= x.truncation(); ++k) {
    const std::size_t nx = x.count(k) - 1;
    std::vector<std::size_t> img(kkx.count(k), 0);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t i = 0; i < nx; ++i) img[1 + (a * k + b) * nx + i] = 1 + (b * k + a) * nx + i;
    out.images.push_back(std::move(img));
  }
  return out;
}

}  // namespace hzalg
