#include "hzalg/simplicial.hpp"

#include <optional>
#include <stdexcept>

namespace hzalg {

PointedSimplicialSet::PointedSimplicialSet(std::size_t truncation, std::vector<std::size_t> counts,
                                           std::vector<Table> faces, std::vector<Table> degeneracies)
    : truncation_(truncation), counts_(std::move(counts)), faces_(std::move(faces)), degens_(std::move(degeneracies)) {
  if (counts_.size() != truncation_ + 1 || faces_.size() != truncation_ + 1 || degens_.size() != truncation_ + 1)
    throw std::invalid_argument("PointedSimplicialSet: tables must cover degrees 0..T");
  for (std::size_t k = 0; k <= truncation_; ++k) {
    if (counts_[k] == 0) throw std::invalid_argument("PointedSimplicialSet: missing basepoint");
    if (k > 0 && faces_[k].size() != k + 1) throw std::invalid_argument("PointedSimplicialSet: face count");
    if (k < truncation_ && degens_[k].size() != k + 1)
      throw std::invalid_argument("PointedSimplicialSet: degeneracy count");
  }
}

bool PointedSimplicialSet::is_degenerate(std::size_t k, std::size_t x) const {
  if (k == 0) return false;
  for (std::size_t i = 0; i < k; ++i)
    if (degeneracy(k - 1, i, face(k, i, x)) == x) return true;
  return false;
}

std::vector<std::size_t> PointedSimplicialSet::nondegenerate_counts() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= truncation_; ++k) {
    std::size_t c = 0;
    for (std::size_t x = 0; x < counts_[k]; ++x)
      if (!is_degenerate(k, x)) ++c;
    out.push_back(c);
  }
  return out;
}

bool PointedSimplicialSet::validate() const {
  const std::size_t t = truncation_;
  for (std::size_t k = 0; k <= t; ++k) {
    for (std::size_t i = 0; k > 0 && i <= k; ++i) {
      if (faces_[k][i].size() != counts_[k] || face(k, i, 0) != 0) return false;
      for (std::size_t x = 0; x < counts_[k]; ++x)
        if (face(k, i, x) >= counts_[k - 1]) return false;
    }
    for (std::size_t i = 0; k < t && i <= k; ++i) {
      if (degens_[k][i].size() != counts_[k] || degeneracy(k, i, 0) != 0) return false;
      for (std::size_t x = 0; x < counts_[k]; ++x)
        if (degeneracy(k, i, x) >= counts_[k + 1]) return false;
    }
  }
  for (std::size_t k = 0; k <= t; ++k)
    for (std::size_t x = 0; x < counts_[k]; ++x) {
      // d_i d_j = d_{j-1} d_i for i < j
      for (std::size_t j = 1; k >= 2 && j <= k; ++j)
        for (std::size_t i = 0; i < j; ++i)
          if (face(k - 1, i, face(k, j, x)) != face(k - 1, j - 1, face(k, i, x))) return false;
      // s_i s_j = s_{j+1} s_i for i <= j
      for (std::size_t j = 0; k + 2 <= t && j <= k; ++j)
        for (std::size_t i = 0; i <= j; ++i)
          if (degeneracy(k + 1, i, degeneracy(k, j, x)) != degeneracy(k + 1, j + 1, degeneracy(k, i, x)))
            return false;
      // d_i s_j
      for (std::size_t j = 0; k < t && j <= k; ++j) {
        const std::size_t y = degeneracy(k, j, x);
        for (std::size_t i = 0; i <= k + 1; ++i) {
          std::size_t lhs = face(k + 1, i, y), rhs;
          if (i == j || i == j + 1) {
            rhs = x;
          } else if (i < j) {
            rhs = degeneracy(k - 1, j - 1, face(k, i, x));
          } else {
            rhs = degeneracy(k - 1, j, face(k, i - 1, x));
          }
          if (lhs != rhs) return false;
        }
      }
    }
  return true;
}

bool PointedSimplicialSet::operator==(const PointedSimplicialSet& other) const {
  return truncation_ == other.truncation_ && counts_ == other.counts_ && faces_ == other.faces_ &&
         degens_ == other.degens_;
}

namespace {

// Builds a simplicial set from per-degree simplex labels and label-level operators.
template <class Label, class Face, class Degen>
PointedSimplicialSet from_labels(std::size_t t, const std::vector<std::vector<Label>>& labels, Face face_label,
                                 Degen degen_label, std::size_t (*index)(const Label&, std::size_t)) {
  std::vector<std::size_t> counts;
  std::vector<PointedSimplicialSet::Table> faces(t + 1), degens(t + 1);
  for (std::size_t k = 0; k <= t; ++k) counts.push_back(labels[k].size() + 1);
  for (std::size_t k = 0; k <= t; ++k) {
    if (k > 0) {
      faces[k].assign(k + 1, std::vector<std::size_t>(counts[k], 0));
      for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t x = 1; x < counts[k]; ++x) {
          auto img = face_label(labels[k][x - 1], k, i);
          faces[k][i][x] = img ? index(*img, k - 1) : 0;
        }
    }
    if (k < t) {
      degens[k].assign(k + 1, std::vector<std::size_t>(counts[k], 0));
      for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t x = 1; x < counts[k]; ++x) {
          auto img = degen_label(labels[k][x - 1], k, i);
          degens[k][i][x] = img ? index(*img, k + 1) : 0;
        }
    }
  }
  return PointedSimplicialSet(t, counts, faces, degens);
}

using Tuple = std::vector<std::size_t>;

std::size_t tuple_index(const Tuple& labels, std::size_t k) { return sphere_index(labels, k); }

std::vector<Tuple> all_tuples(std::size_t n, std::size_t k) {
  std::vector<Tuple> out;
  if (k == 0 && n > 0) return out;
  Tuple cur(n, 1);
  while (true) {
    out.push_back(cur);
    std::size_t pos = n;
    while (pos > 0 && cur[pos - 1] == k) cur[--pos] = 1;
    if (pos == 0) break;
    ++cur[pos - 1];
  }
  return out;
}

}  // namespace

std::size_t sphere_index(const std::vector<std::size_t>& labels, std::size_t k) {
  std::size_t idx = 0;
  for (std::size_t j : labels) {
    if (j == 0 || j > k) return 0;
    idx = idx * k + (j - 1);
  }
  return idx + 1;
}

std::vector<std::size_t> sphere_labels(std::size_t index, std::size_t n, std::size_t k) {
  if (index == 0) throw std::invalid_argument("sphere_labels: basepoint has no labels");
  std::vector<std::size_t> labels(n);
  std::size_t r = index - 1;
  for (std::size_t i = n; i > 0; --i) {
    labels[i - 1] = r % k + 1;
    r /= k;
  }
  return labels;
}

std::vector<std::size_t> sphere_permutation(const Perm& g, std::size_t k) {
  const std::size_t n = g.size();
  const auto tuples = all_tuples(n, k);
  std::vector<std::size_t> out(tuples.size() + 1, 0);
  for (std::size_t x = 0; x < tuples.size(); ++x) {
    Tuple moved(n);
    for (std::size_t i = 0; i < n; ++i) moved[g[i]] = tuples[x][i];
    out[x + 1] = sphere_index(moved, k);
  }
  return out;
}

PointedSimplicialSet point(std::size_t t) {
  std::vector<PointedSimplicialSet::Table> faces(t + 1), degens(t + 1);
  for (std::size_t k = 0; k <= t; ++k) {
    if (k > 0) faces[k].assign(k + 1, {0});
    if (k < t) degens[k].assign(k + 1, {0});
  }
  return PointedSimplicialSet(t, std::vector<std::size_t>(t + 1, 1), faces, degens);
}

PointedSimplicialSet sphere0(std::size_t t) { return simplicial_sphere(0, t); }

PointedSimplicialSet circle(std::size_t t) { return simplicial_sphere(1, t); }

PointedSimplicialSet simplicial_sphere(std::size_t n, std::size_t t) {
  // Circle label j in degree k is the vertex word 0^j 1^{k+1-j}; j = 0 and
  // j = k+1 are the basepoint.
  std::vector<std::vector<Tuple>> labels;
  for (std::size_t k = 0; k <= t; ++k) labels.push_back(all_tuples(n, k));
  auto face = [](const Tuple& tu, std::size_t k, std::size_t i) -> std::optional<Tuple> {
    Tuple out(tu.size());
    for (std::size_t a = 0; a < tu.size(); ++a) {
      const std::size_t j = i < tu[a] ? tu[a] - 1 : tu[a];
      if (j == 0 || j == k) return std::nullopt;
      out[a] = j;
    }
    return out;
  };
  auto degen = [](const Tuple& tu, std::size_t, std::size_t i) -> std::optional<Tuple> {
    Tuple out(tu.size());
    for (std::size_t a = 0; a < tu.size(); ++a) out[a] = i < tu[a] ? tu[a] + 1 : tu[a];
    return out;
  };
  return from_labels<Tuple>(t, labels, face, degen, &tuple_index);
}

PointedSimplicialSet smash(const PointedSimplicialSet& a, const PointedSimplicialSet& b) {
  if (a.truncation() != b.truncation()) throw std::invalid_argument("smash: truncations differ");
  const std::size_t t = a.truncation();
  std::vector<PointedSimplicialSet::Table> faces(t + 1), degens(t + 1);
  std::vector<std::size_t> counts;
  for (std::size_t k = 0; k <= t; ++k) counts.push_back((a.count(k) - 1) * (b.count(k) - 1) + 1);
  auto pair_index = [&](std::size_t x, std::size_t y, std::size_t k) -> std::size_t {
    if (x == 0 || y == 0) return 0;
    return (x - 1) * (b.count(k) - 1) + (y - 1) + 1;
  };
  for (std::size_t k = 0; k <= t; ++k) {
    const std::size_t nb = b.count(k) - 1;
    if (k > 0) faces[k].assign(k + 1, std::vector<std::size_t>(counts[k], 0));
    if (k < t) degens[k].assign(k + 1, std::vector<std::size_t>(counts[k], 0));
    for (std::size_t z = 1; z < counts[k]; ++z) {
      const std::size_t x = (z - 1) / nb + 1, y = (z - 1) % nb + 1;
      for (std::size_t i = 0; k > 0 && i <= k; ++i)
        faces[k][i][z] = pair_index(a.face(k, i, x), b.face(k, i, y), k - 1);
      for (std::size_t i = 0; k < t && i <= k; ++i)
        degens[k][i][z] = pair_index(a.degeneracy(k, i, x), b.degeneracy(k, i, y), k + 1);
    }
  }
  return PointedSimplicialSet(t, counts, faces, degens);
}

bool PointedMap::validate() const {
  const std::size_t t = source.truncation();
  if (target.truncation() != t || images.size() != t + 1) return false;
  for (std::size_t k = 0; k <= t; ++k) {
    if (images[k].size() != source.count(k) || images[k][0] != 0) return false;
    for (std::size_t x = 0; x < source.count(k); ++x) {
      if (images[k][x] >= target.count(k)) return false;
      for (std::size_t i = 0; k > 0 && i <= k; ++i)
        if (images[k - 1][source.face(k, i, x)] != target.face(k, i, images[k][x])) return false;
      for (std::size_t i = 0; k < t && i <= k; ++i)
        if (images[k + 1][source.degeneracy(k, i, x)] != target.degeneracy(k, i, images[k][x])) return false;
    }
  }
  return true;
}

}  // namespace hzalg
