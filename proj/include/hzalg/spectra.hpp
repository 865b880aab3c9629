#pragma once

// Truncated symmetric sequences and Sym(K)-module spectra over chain
// complexes, simplicial abelian groups and pointed simplicial sets.
//
// Conventions: sigma_n : K (x) X_n -> X_{n+1} puts the new coordinate first,
// so Sigma_m acts on the first m positions of X_{n+m} and Sigma_n on the last n.

#include "hzalg/chain.hpp"
#include "hzalg/permutation.hpp"
#include "hzalg/simplicial.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hzalg {

enum class Base { ChPlus, ChFull, SAb, SSetPointed };
std::string base_name(Base b);

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
SimplicialMap identity_map(const SimplicialAbelianGroup& a);
bool equal_maps(const SimplicialMap& a, const SimplicialMap& b);
bool same_simplicial(const SimplicialAbelianGroup& a, const SimplicialAbelianGroup& b);
PointedMap compose(const PointedMap& g, const PointedMap& f);
PointedMap identity_map(const PointedSimplicialSet& k);
/// id_{S^1} ^ f.
PointedMap smash_circle(const PointedMap& f);
/// id (x) f for the reduced free circle.
SimplicialMap tensor_circle(const SimplicialMap& f);

/// K = Z[1]; K (x) X is shift(X, 1).
struct ChainBase {
  using Object = ChainComplex;
  using Morphism = ChainMap;
  static Object suspend(const Object& x) { return shift(x, 1); }
  static Morphism suspend(const Morphism& f) { return shift(f, 1); }
  /// The exchange of the two K factors of K (x) K (x) x.
  static Morphism swap(const Object& x);
  static Morphism identity(const Object& x) { return ChainMap::identity(x); }
  static Morphism compose(const Morphism& g, const Morphism& f) { return hzalg::compose(g, f); }
  static bool equal(const Morphism& a, const Morphism& b) { return a.equals(b); }
  static bool valid(const Morphism&) { return true; }
  static bool same(const Object& a, const Object& b) { return same_complex(a, b); }
  static const Object& source(const Morphism& f) { return f.source(); }
  static const Object& target(const Morphism& f) { return f.target(); }
};

/// K = reduced free abelian group on the simplicial circle.
struct SAbBase {
  using Object = SimplicialAbelianGroup;
  using Morphism = SimplicialMap;
  static Object suspend(const Object& x);
  static Morphism suspend(const Morphism& f) { return tensor_circle(f); }
  static Morphism swap(const Object& x);
  static Morphism identity(const Object& x) { return identity_map(x); }
  static Morphism compose(const Morphism& g, const Morphism& f) { return hzalg::compose(g, f); }
  static bool equal(const Morphism& a, const Morphism& b) { return equal_maps(a, b); }
  static bool valid(const Morphism& f) { return f.validate(); }
  static bool same(const Object& a, const Object& b) { return same_simplicial(a, b); }
  static const Object& source(const Morphism& f) { return f.source; }
  static const Object& target(const Morphism& f) { return f.target; }
};

/// K = the simplicial circle.
struct SSetBase {
  using Object = PointedSimplicialSet;
  using Morphism = PointedMap;
  static Object suspend(const Object& x) { return smash(circle(x.truncation()), x); }
  static Morphism suspend(const Morphism& f) { return smash_circle(f); }
  static Morphism swap(const Object& x);
  static Morphism identity(const Object& x) { return identity_map(x); }
  static Morphism compose(const Morphism& g, const Morphism& f) { return hzalg::compose(g, f); }
  static bool equal(const Morphism& a, const Morphism& b) { return a.images == b.images; }
  static bool valid(const Morphism& f) { return f.validate(); }
  static bool same(const Object& a, const Object& b) { return a == b; }
  static const Object& source(const Morphism& f) { return f.source; }
  static const Object& target(const Morphism& f) { return f.target; }
};

/// Levels 0..L with Sigma_n acting through adjacent transpositions:
/// actions[n][i] is t_i = (i i+1) on level n.
template <class B>
struct SymmetricSequence {
  using Object = typename B::Object;
  using Morphism = typename B::Morphism;

  Base base;
  std::vector<Object> levels;
  std::vector<std::vector<Morphism>> actions;

  std::size_t truncation() const { return levels.size() - 1; }
  const Object& level(std::size_t n) const { return levels.at(n); }
  const Morphism& action(std::size_t n, std::size_t i) const { return actions.at(n).at(i); }

  /// The action of g (g[i] the image of i), built from its adjacent word.
  Morphism permutation(std::size_t n, const Perm& g) const {
    Morphism out = B::identity(levels.at(n));
    for (std::size_t i : adjacent_word(g)) out = B::compose(out, action(n, i));
    return out;
  }

  bool validate() const {
    if (levels.empty() || actions.size() != levels.size()) return false;
    for (std::size_t n = 0; n < levels.size(); ++n) {
      const auto& acts = actions[n];
      if (acts.size() != (n >= 2 ? n - 1 : 0)) return false;
      for (const auto& t : acts)
        if (!B::valid(t) || !B::same(B::source(t), levels[n]) || !B::same(B::target(t), levels[n])) return false;
      const Morphism id = B::identity(levels[n]);
      for (std::size_t i = 0; i < acts.size(); ++i) {
        if (!B::equal(B::compose(acts[i], acts[i]), id)) return false;
        if (i + 1 < acts.size()) {
          Morphism p = B::compose(acts[i], acts[i + 1]);
          if (!B::equal(B::compose(p, B::compose(p, p)), id)) return false;
        }
        for (std::size_t j = i + 2; j < acts.size(); ++j)
          if (!B::equal(B::compose(acts[i], acts[j]), B::compose(acts[j], acts[i]))) return false;
      }
    }
    return true;
  }
};

template <class B>
struct Spectrum {
  using Object = typename B::Object;
  using Morphism = typename B::Morphism;

  SymmetricSequence<B> seq;
  /// sigma[n] : K (x) X_n -> X_{n+1} for n < L.
  std::vector<Morphism> sigma;

  Base base() const { return seq.base; }
  std::size_t truncation() const { return seq.truncation(); }
  const Object& level(std::size_t n) const { return seq.level(n); }
  const Morphism& action(std::size_t n, std::size_t i) const { return seq.action(n, i); }
  Morphism permutation(std::size_t n, const Perm& g) const { return seq.permutation(n, g); }

  /// sigma^m : K^m (x) X_n -> X_{n+m}, the source being suspend^m(X_n).
  Morphism iterated_sigma(std::size_t n, std::size_t m) const {
    Morphism out = B::identity(level(n));
    for (std::size_t j = 0; j < m; ++j) out = B::compose(sigma.at(n + j), B::suspend(out));
    return out;
  }

  /// Coxeter relations, structure maps between the right objects, and
  /// equivariance of the iterated structure maps.  Equivariance is checked on
  /// generators: sigma commutes with Sigma_n, and the two K factors of
  /// sigma^2 are exchanged by t_0.  Together these give (Sigma_m x Sigma_n)
  /// equivariance of every sigma^m by induction on m.
  bool validate() const {
    if (!seq.validate() || sigma.size() != truncation()) return false;
    for (std::size_t n = 0; n < truncation(); ++n) {
      const Morphism& s = sigma[n];
      if (!B::valid(s) || !B::same(B::source(s), B::suspend(level(n))) || !B::same(B::target(s), level(n + 1)))
        return false;
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (!B::equal(B::compose(s, B::suspend(action(n, i))), B::compose(action(n + 1, i + 1), s))) return false;
      if (n + 2 <= truncation()) {
        Morphism s2 = B::compose(sigma[n + 1], B::suspend(s));
        if (!B::equal(B::compose(s2, B::swap(level(n))), B::compose(action(n + 2, 0), s2))) return false;
      }
    }
    return true;
  }
};

template <class B>
struct SpectrumMap {
  using Morphism = typename B::Morphism;

  Spectrum<B> source;
  Spectrum<B> target;
  std::vector<Morphism> levels;

  bool validate() const {
    const std::size_t l = source.truncation();
    if (target.truncation() != l || levels.size() != l + 1) return false;
    for (std::size_t n = 0; n <= l; ++n) {
      const Morphism& f = levels[n];
      if (!B::valid(f) || !B::same(B::source(f), source.level(n)) || !B::same(B::target(f), target.level(n)))
        return false;
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (!B::equal(B::compose(f, source.action(n, i)), B::compose(target.action(n, i), f))) return false;
      if (n < l && !B::equal(B::compose(levels[n + 1], source.sigma[n]),
                             B::compose(target.sigma[n], B::suspend(f))))
        return false;
    }
    return true;
  }
};

template <class B>
SpectrumMap<B> compose(const SpectrumMap<B>& g, const SpectrumMap<B>& f) {
  SpectrumMap<B> out{f.source, g.target, {}};
  for (std::size_t n = 0; n < f.levels.size(); ++n) out.levels.push_back(B::compose(g.levels.at(n), f.levels[n]));
  return out;
}

template <class B>
SpectrumMap<B> identity_map(const Spectrum<B>& x) {
  SpectrumMap<B> out{x, x, {}};
  for (std::size_t n = 0; n <= x.truncation(); ++n) out.levels.push_back(B::identity(x.level(n)));
  return out;
}

template <class B>
bool equal_maps(const SpectrumMap<B>& a, const SpectrumMap<B>& b) {
  if (a.levels.size() != b.levels.size()) return false;
  for (std::size_t n = 0; n < a.levels.size(); ++n)
    if (!B::equal(a.levels[n], b.levels[n])) return false;
  return true;
}

using ChainSequence = SymmetricSequence<ChainBase>;
using ChainSpectrum = Spectrum<ChainBase>;
using ChainSpectrumMap = SpectrumMap<ChainBase>;
using SAbSpectrum = Spectrum<SAbBase>;
using SAbSpectrumMap = SpectrumMap<SAbBase>;
using SSetSpectrum = Spectrum<SSetBase>;
using SSetSpectrumMap = SpectrumMap<SSetBase>;

// ---- chain complexes ------------------------------------------------------

/// Z[0] in level 0, zero above.
ChainSequence unit_sequence(Ring ring, std::size_t truncation, Base base = Base::ChPlus);
/// K^{(x) n} (nested to the right) with Sigma_n permuting factors with Koszul signs.
ChainSequence sym_sequence(const ChainComplex& k, std::size_t truncation, Base base = Base::ChPlus);
/// Level n is the sum over p+q = n and (p,q)-shuffles (p ascending, shuffles
/// lexicographic) of X_p (x) Y_q.
ChainSequence seq_tensor(const ChainSequence& x, const ChainSequence& y);
/// Coherence isomorphisms, level by level.
std::vector<ChainMap> seq_associator(const ChainSequence& x, const ChainSequence& y, const ChainSequence& z);
std::vector<ChainMap> seq_left_unitor(const ChainSequence& x);   // unit (x) X -> X
std::vector<ChainMap> seq_right_unitor(const ChainSequence& x);  // X (x) unit -> X
/// Levelwise maps commute with every adjacent transposition.
bool is_equivariant(const ChainSequence& x, const ChainSequence& y, const std::vector<ChainMap>& f);

ChainSpectrum zero_spectrum(Ring ring, std::size_t truncation, Base base = Base::ChPlus);
/// Sym(Z[1]): level n is Z[n] with the sign action, structure maps identities.
ChainSpectrum sphere_spectrum(Ring ring, std::size_t truncation, Base base = Base::ChPlus);
/// F_m K.  Level n is the sum over injections b : [m] -> [n] (lexicographic)
/// of shift(K, n-m); b records where the K coordinates sit.
ChainSpectrum free_spectrum(std::size_t m, const ChainComplex& k, std::size_t truncation, Base base = Base::ChPlus);
ChainSpectrumMap free_spectrum(std::size_t m, const ChainMap& f, std::size_t truncation, Base base = Base::ChPlus);
/// The map F_m K -> X adjoint to g : K -> X_m.
ChainSpectrumMap free_extension(std::size_t m, const ChainComplex& k, const ChainSpectrum& x, const ChainMap& g);
/// Level m, summand of the identity injection: K -> (F_m K)_m.
ChainMap free_unit(std::size_t m, const ChainSpectrum& free_m_k, const ChainComplex& k);

ChainSpectrum smash(const ChainSpectrum& x, const ChainSpectrum& y);
ChainSpectrumMap smash(const ChainSpectrumMap& f, const ChainSpectrumMap& g);
/// The levelwise inclusion X_p (x) Y_q -> (X ^ Y)_{p+q} of the identity shuffle.
ChainMap smash_inclusion(const ChainSpectrum& x, const ChainSpectrum& y, const ChainSpectrum& xy, std::size_t p,
                         std::size_t q);
ChainSpectrum direct_sum(const ChainSpectrum& a, const ChainSpectrum& b);
ChainSpectrumMap operator+(const ChainSpectrumMap& a, const ChainSpectrumMap& b);
ChainSpectrumMap operator-(const ChainSpectrumMap& a);

struct SpectrumQuotient {
  ChainSpectrum spectrum;
  ChainSpectrumMap projection;
};
SpectrumQuotient cokernel(const ChainSpectrumMap& f);

FpGroup level_homology(const ChainSpectrum& x, std::size_t n, int k);
bool is_level_equiv(const ChainSpectrumMap& f);
bool is_iso(const ChainSpectrumMap& f);
/// X_n -> C_0(shift(X_{n+1}, -1)) adjoint to sigma_n.
ChainMap omega_adjoint(const ChainSpectrum& x, std::size_t n);
bool omega_check(const ChainSpectrum& x);

/// Spectrum maps of degree zero with explicit generators.
class SpectrumMapGroup {
 public:
  SpectrumMapGroup(const ChainSpectrum& source, const ChainSpectrum& target);

  const FpGroup& group() const { return solution_.group; }
  std::size_t generator_count() const { return solution_.generators.size(); }
  ChainSpectrumMap generator(std::size_t i) const;
  std::optional<Matrix> coordinates(const ChainSpectrumMap& f) const;
  /// sum_i c_i generator(i).
  ChainSpectrumMap combination(const std::vector<long>& c) const;

 private:
  ChainSpectrum source_;
  ChainSpectrum target_;
  std::vector<std::pair<std::size_t, int>> unknowns_;  // (level, degree)
  HomSystem::Solution solution_;
};

FpGroup spectrum_map_group(const ChainSpectrum& source, const ChainSpectrum& target);

ChainSpectrum include_i(const ChainSpectrum& x);
ChainSpectrumMap include_i(const ChainSpectrumMap& f);
/// Connective cover in every level.
ChainSpectrum connective_prolong(const ChainSpectrum& x);
ChainSpectrumMap connective_prolong(const ChainSpectrumMap& f);
/// i C_0 X -> X.
ChainSpectrumMap connective_prolong_counit(const ChainSpectrum& x);
/// X -> C_0 i X for non-negative X.
ChainSpectrumMap connective_prolong_unit(const ChainSpectrum& x);
ChainSpectrum f_zero(const ChainComplex& c, std::size_t truncation);
ChainComplex ev_zero(const ChainSpectrum& x);
/// F_0 Ev_0 X -> X.
ChainSpectrumMap f_zero_counit(const ChainSpectrum& x);

ChainSpectrum base_change_Q(const ChainSpectrum& x);
ChainSpectrumMap base_change_Q(const ChainSpectrumMap& f);

// ---- simplicial -----------------------------------------------------------

/// Sym(Z~S^1): level n is Z~S^n, permutations of smash factors, identity structure maps.
SAbSpectrum sym_sab(std::size_t truncation, std::size_t simplicial_bound);
/// The sphere spectrum (S^0, S^1, S^2, ...).
SSetSpectrum sphere_sset(std::size_t truncation, std::size_t simplicial_bound);

/// Prolongation of the reduced free functor.
SAbSpectrum free_abelian(const SSetSpectrum& x);
SAbSpectrumMap free_abelian(const SSetSpectrumMap& f);

/// Standard simplex Delta[k], its boundary and the horn Lambda^k_i, each with a
/// disjoint basepoint.
PointedSimplicialSet simplex_plus(std::size_t k, std::size_t simplicial_bound);
PointedSimplicialSet boundary_plus(std::size_t k, std::size_t simplicial_bound);
PointedSimplicialSet horn_plus(std::size_t k, std::size_t i, std::size_t simplicial_bound);
/// Simplices of Delta[k] are the monotone maps [d] -> [k], lexicographic.
PointedMap boundary_inclusion(std::size_t k, std::size_t simplicial_bound);
PointedMap horn_inclusion(std::size_t k, std::size_t i, std::size_t simplicial_bound);
/// The coface d^j : Delta[k-1]_+ -> Delta[k]_+.
PointedMap coface_map(std::size_t k, std::size_t j, std::size_t simplicial_bound);

/// One-point union, summands stacked in order.
PointedSimplicialSet wedge(const std::vector<PointedSimplicialSet>& parts, std::size_t simplicial_bound);

SSetSpectrum free_sset(std::size_t m, const PointedSimplicialSet& k, std::size_t truncation);
SSetSpectrumMap free_sset(std::size_t m, const PointedMap& f, std::size_t truncation);
SSetSpectrumMap free_sset_extension(std::size_t m, const PointedSimplicialSet& k, const SSetSpectrum& x,
                                    const PointedMap& g);
/// lambda_n : F_{n+1} S^1 -> F_n S^0.
SSetSpectrumMap lambda_map(std::size_t n, std::size_t truncation, std::size_t simplicial_bound);

/// The window {0, +s, -s} of HZ_n = Z~S^n (s a simplex of S^n).  Element
/// 2j-1 is +s_j and 2j is -s_j; closed under faces, degeneracies, permutations,
/// structure maps and products.
SSetSpectrum hz(std::size_t truncation, std::size_t simplicial_bound);

/// A module over the window of HZ: action[q][p] : hz_q ^ M_p -> M_{q+p}.
struct HZModule {
  SSetSpectrum spectrum;
  std::vector<std::vector<PointedMap>> action;
  /// Unit, associativity, compatibility with the structure maps and
  /// equivariance, through level L.
  bool validate(const SSetSpectrum& hz_window) const;
};
HZModule hz_as_module(std::size_t truncation, std::size_t simplicial_bound);

/// U, restricted to the window {0, +e, -e} of the basis; needs every operator
/// to be a signed monomial matrix.
HZModule forget_U(const SAbSpectrum& x);
/// Z(M) = Z~M over Z~(HZ) along mu, levelwise presented by generators and relations.
SAbSpectrum functor_Z(const HZModule& m, const SSetSpectrum& hz_window);
/// nu~ : Z(HZ) -> Sym(Z~S^1), [+-s] |-> +-s.
SAbSpectrumMap nu_tilde(const SAbSpectrum& z_hz, std::size_t truncation, std::size_t simplicial_bound);

/// phi*N.  Level n is N(X_n) truncated above degree T-L+n, so that the
/// structure maps N(sigma) o shuffle o (phi_1 (x) id) stay chain maps.
ChainSpectrum prolong_normalization(const SAbSpectrum& x);
ChainSpectrumMap prolong_normalization(const SAbSpectrumMap& f);
/// The spectrum N(Sym(Z~S^1)) and phi : Sym(Z[1]) -> N.
ChainSpectrum build_calN(std::size_t truncation, std::size_t simplicial_bound);
ChainSpectrumMap build_phi(std::size_t truncation, std::size_t simplicial_bound);
/// N Z~S^p (x) N Z~S^q -> N Z~S^{p+q}, the shuffle map followed by N of the smash iso.
ChainMap calN_product(std::size_t p, std::size_t q, std::size_t simplicial_bound);
/// phi_{p+q} o mu = mu o (phi_p (x) phi_q) for p+q <= L, and phi_0 is the unit.
bool phi_is_monoidal(const ChainSpectrumMap& phi, std::size_t simplicial_bound);

}  // namespace hzalg
