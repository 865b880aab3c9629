#pragma once

// Permutations, injections and shuffles of {0, ..., n-1}.

#include <cstddef>
#include <vector>

namespace hzalg {

/// perm[i] is the image of i.
using Perm = std::vector<std::size_t>;

Perm identity_perm(std::size_t n);
/// The adjacent transposition (i i+1) in Sigma_n.
Perm transposition(std::size_t n, std::size_t i);
Perm compose(const Perm& a, const Perm& b);  // a after b
Perm inverse(const Perm& p);
int sign(const Perm& p);
bool is_identity(const Perm& p);

/// Word in adjacent transpositions t_{w[0]} t_{w[1]} ... equal to p.
std::vector<std::size_t> adjacent_word(const Perm& p);

/// All permutations of n letters in lexicographic order.
std::vector<Perm> all_permutations(std::size_t n);

/// Injections {0..m-1} -> {0..n-1} as image lists, lexicographic order.
std::vector<Perm> injections(std::size_t m, std::size_t n);

/// (p,q)-shuffles as permutations of p+q letters, lexicographic in the
/// image of the first block.  s[i] for i < p are increasing, as are s[p..].
std::vector<Perm> shuffles(std::size_t p, std::size_t q);

/// Block sum a (+) b acting on p+q letters.
Perm block_sum(const Perm& a, const Perm& b);

/// Ordered partitions of {0..n-1} into consecutive increasing blocks of the
/// given sizes, as permutations (a "multi-shuffle").
std::vector<Perm> multi_shuffles(const std::vector<std::size_t>& sizes);

}  // namespace hzalg
