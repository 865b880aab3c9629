#include "hzalg/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hzalg {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm transposition(std::size_t n, std::size_t i) {
  if (i + 1 >= n) throw std::out_of_range("transposition index");
  Perm p = identity_perm(n);
  std::swap(p[i], p[i + 1]);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

int sign(const Perm& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

std::vector<std::size_t> adjacent_word(const Perm& p) {
  // Bubble sort p^{-1}'s one-line form; the swaps spell p.
  Perm cur = p;
  std::vector<std::size_t> word;
  for (std::size_t pass = 0; pass < cur.size(); ++pass)
    for (std::size_t i = 0; i + 1 < cur.size(); ++i)
      if (cur[i] > cur[i + 1]) {
        // cur = p o t_1 ... ; right-multiplying by t_i swaps entries i, i+1.
        std::swap(cur[i], cur[i + 1]);
        word.push_back(i);
      }
  // p o t_{w0} o t_{w1} ... = id, so p = t_{wk} ... t_{w0}.
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<Perm> all_permutations(std::size_t n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Perm> injections(std::size_t m, std::size_t n) {
  std::vector<Perm> out;
  if (m > n) return out;
  Perm cur;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == m) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      used[v] = false;
    }
  };
  rec(rec);
  return out;
}

std::vector<Perm> shuffles(std::size_t p, std::size_t q) { return multi_shuffles({p, q}); }

Perm block_sum(const Perm& a, const Perm& b) {
  Perm c(a);
  for (std::size_t x : b) c.push_back(a.size() + x);
  return c;
}

std::vector<Perm> multi_shuffles(const std::vector<std::size_t>& sizes) {
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  // Assign each position of {0..n-1} a block label; every labelling with the
  // right block sizes is one shuffle.  Enumerate label words lexicographically
  // by the images of the blocks in order.
  std::vector<Perm> out;
  std::vector<std::size_t> label(n);
  std::vector<std::size_t> left(sizes);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      Perm s(n);
      std::vector<std::size_t> start(sizes.size(), 0);
      for (std::size_t b = 1; b < sizes.size(); ++b) start[b] = start[b - 1] + sizes[b - 1];
      for (std::size_t v = 0; v < n; ++v) s[start[label[v]]++] = v;
      out.push_back(s);
      return;
    }
    for (std::size_t b = 0; b < sizes.size(); ++b) {
      if (left[b] == 0) continue;
      --left[b];
      label[pos] = b;
      self(self, pos + 1);
      ++left[b];
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hzalg
