#include "hzalg/suites.hpp"

#include "hzalg/corpus.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

namespace hzalg {
namespace {

class Recorder {
 public:
  explicit Recorder(SuiteReport& report) : report_(report) {}

  void check(const std::string& name, bool ok, const std::string& detail = {},
             std::optional<Document> reproducer = std::nullopt) {
    Check c{name, ok ? CheckStatus::Pass : CheckStatus::Fail, detail, std::nullopt};
    if (!ok) c.reproducer = std::move(reproducer);
    report_.checks.push_back(std::move(c));
  }
  // A statement expected to hold only rationally, tested over Z.
  void integral(const std::string& name, bool ok, const std::string& detail) {
    report_.checks.push_back({name, ok ? CheckStatus::Pass : CheckStatus::Counterexample, detail, std::nullopt});
  }
  void skip(const std::string& name, const std::string& why) {
    report_.checks.push_back({name, CheckStatus::Skipped, why, std::nullopt});
  }
  // Runs body; an exception fails the named check.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(name, false, std::string("exception: ") + e.what());
    }
  }
  void document(Document d) { docs_.push_back(std::move(d)); }

  void finish() {
    std::size_t bad = 0;
    for (const auto& d : docs_)
      if (!round_trips(d)) ++bad;
    report_.documents = docs_.size();
    check("documents round-trip (" + std::to_string(docs_.size()) + ")", bad == 0,
          bad ? std::to_string(bad) + " documents changed" : "");
  }

 private:
  SuiteReport& report_;
  std::vector<Document> docs_;
};

std::string idx(const char* what, std::size_t v) { return std::string(what) + "=" + std::to_string(v); }

bool same_groups(const ChainComplex& a, const ChainComplex& b) {
  const int lo = std::min(a.empty() ? 0 : a.lo(), b.empty() ? 0 : b.lo());
  const int hi = std::max(a.empty() ? 0 : a.hi(), b.empty() ? 0 : b.hi());
  for (int n = lo; n <= hi; ++n)
    if (!a.group(n).isomorphic(b.group(n))) return false;
  return true;
}

// shift(K, -m) -> D(F_m K) through the identity summand at level m.
ChainMap free_comparison(std::size_t m, const ChainComplex& k, const ChainSpectrum& fm, const TruncatedColimit& d) {
  ChainMap u = shift(free_unit(m, fm, k), -int(m));
  return compose(d.inclusion(m), rewrap(u, shift(k, -int(m)), d.parts[m]));
}


// Random complex on [0, 1] with both groups nonzero.
ChainComplex two_term(Rng& rng) {
  for (;;) {
    ChainComplex c = random_complex(rng, Ring::Integers, 0, 1, false, Grading::NonNegative, 2);
    if (!c.empty() && c.lo() == 0 && c.hi() == 1 && c.generators(0) > 0 && c.generators(1) > 0) return c;
  }
}

// ---- lem-D ----------------------------------------------------------------------

void lem_d(Recorder& r, const SuiteOptions& o) {
  Rng rng(o.seed);
  const std::vector<std::pair<std::string, ChainComplex>> ks = {{"Z[0]", sphere(0, Ring::Integers, Grading::NonNegative)},
                                                                {"Z[2]", sphere(2, Ring::Integers, Grading::NonNegative)},
                                                                {"D^1", disk(1, Ring::Integers, Grading::NonNegative)},
                                                                {"random", two_term(rng)}};
  for (const auto& [name, k] : ks)
    for (std::size_t m = 0; m <= 3; ++m) {
      std::vector<std::size_t> ls = {m, m + 1, 4};
      std::sort(ls.begin(), ls.end());
      ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
      for (std::size_t l : ls) {
        const std::string label = "D(F_m K) = K[-m], K=" + name + ", " + idx("m", m) + ", " + idx("L", l);
        r.guarded(label, [&] {
          ChainSpectrum fm = free_spectrum(m, k, l);
          TruncatedColimit d = functor_D(fm, l);
          const bool ok =
              d.exactness_bound == l && same_groups(d.result, shift(k, -int(m))) && free_comparison(m, k, fm, d).is_iso();
          r.check(label, ok, "", Document{fm, std::nullopt});
          r.document({d.result, l});
          if (l == m) r.document({fm, std::nullopt});
        });
      }
    }
  r.guarded("D(Sym Z[1]) = Z[0]", [&] {
    TruncatedColimit d = functor_D(sphere_spectrum(Ring::Integers, o.truncation));
    r.check("D(Sym Z[1]) = Z[0]", same_groups(d.result, sphere(0)));
  });
  r.guarded("D(0) = 0", [&] { r.check("D(0) = 0", functor_D(zero_spectrum(Ring::Integers, o.truncation)).result.empty()); });
}

// ---- prop-DR ---------------------------------------------------------------------

void prop_dr(Recorder& r, const SuiteOptions& o) {
  Rng rng(o.seed);
  const std::size_t l = o.truncation;
  std::vector<std::pair<std::string, ChainSpectrum>> xs;
  std::vector<int> disk_degree;
  for (std::size_t m = 0; m <= std::min<std::size_t>(2, l); ++m) {
    for (int n = 1; n <= 3; ++n) {
      xs.push_back({"F_" + std::to_string(m) + " D^" + std::to_string(n), free_spectrum(m, disk(n, Ring::Integers, Grading::NonNegative), l)});
      disk_degree.push_back(n - int(m));
    }
    xs.push_back({"F_" + std::to_string(m) + " Z[0]", free_spectrum(m, sphere(0, Ring::Integers, Grading::NonNegative), l)});
    disk_degree.push_back(INT32_MIN);
  }
  std::vector<std::pair<std::string, ChainComplex>> ys;
  for (int k = -2; k <= 2; ++k) ys.push_back({"Z[" + std::to_string(k) + "]", sphere(k)});
  for (int i = 0; i < 3; ++i) ys.push_back({"random " + std::to_string(i), random_complex(rng, Ring::Integers, -2, 2, true)});

  for (std::size_t xi = 0; xi < xs.size(); ++xi) {
    const auto& [xn, x] = xs[xi];
    TruncatedColimit dx = functor_D(x);
    r.document({x, std::nullopt});
    r.document({dx.result, l});
    r.guarded("triangle counit o D(unit) = id, X=" + xn,
              [&] { r.check("triangle counit o D(unit) = id, X=" + xn, triangle_identity_D(x), "", Document{x, std::nullopt}); });
    for (const auto& [yn, y] : ys) {
      const std::string label = "Hom(DX, Y) = Hom(X, RY), X=" + xn + ", Y=" + yn;
      r.guarded(label, [&] {
        ChainSpectrum ry = functor_R(y, l);
        ChainMapGroup chain(dx.result, y);
        SpectrumMapGroup spec(x, ry);
        bool ok = chain.group().isomorphic(spec.group());
        for (std::size_t i = 0; ok && i < spec.generator_count(); ++i) {
          ChainSpectrumMap f = spec.generator(i);
          ok = equal_maps(transpose_to_spectrum(transpose_to_chain(f, dx, y), x, dx), f);
        }
        for (std::size_t i = 0; ok && i < chain.generator_count(); ++i) {
          ChainMap g = chain.generator(i);
          ChainSpectrumMap f = transpose_to_spectrum(g, x, dx);
          ok = f.validate() && transpose_to_chain(f, dx, y).equals(g);
          if (i == 0) r.document({f, std::nullopt});
        }
        r.check(label, ok, chain.group().to_string() + " vs " + spec.group().to_string(), Document{y, std::nullopt});
        if (disk_degree[xi] != INT32_MIN)
          r.check("Hom(D(F_m D^n), Y) = Y_{n-m}, X=" + xn + ", Y=" + yn,
                  chain.group().isomorphic(y.group(disk_degree[xi])));
      });
    }
  }
  for (const auto& [yn, y] : ys)
    r.guarded("triangle R(counit) o unit = id, Y=" + yn, [&] {
      r.check("triangle R(counit) o unit = id, Y=" + yn, triangle_identity_R(y, l), "", Document{y, std::nullopt});
      r.document({functor_R(y, l), std::nullopt});
    });
}

// ---- prop-DR2 --------------------------------------------------------------------

void prop_dr2(Recorder& r, const SuiteOptions& o) {
  Rng rng(o.seed);
  const std::size_t l = o.truncation;
  const int low = -int(std::min<std::size_t>(l, 2));
  for (int i = 0; i < 20; ++i) {
    const std::string label = "R(Y) is an Omega-spectrum, Y=random " + std::to_string(i);
    r.guarded(label, [&] {
      ChainComplex y = random_complex(rng, Ring::Integers, low, 2, true);
      ChainSpectrum ry = functor_R(y, l);
      r.check(label, ry.validate() && omega_check(ry), "", Document{y, std::nullopt});
      bool ok = true;
      for (std::size_t m = 0; m <= std::min<std::size_t>(l, 3); ++m)
        for (int n = 0; n <= 5; ++n) ok = ok && level_homology(ry, m, n).isomorphic(homology(y, n - int(m)));
      r.check("H_n(RY)_m = H_{n-m}(Y), Y=random " + std::to_string(i), ok, "", Document{y, std::nullopt});
      if (i < 3) r.document({ry, std::nullopt});
    });
  }
  std::size_t qi = 0;
  for (int i = 0; i < 20; ++i) {
    const std::string label = "R preserves and reflects quasi-isos, map " + std::to_string(i);
    r.guarded(label, [&] {
      ChainComplex y = random_complex(rng, Ring::Integers, low, 2, true);
      ChainMap f = i % 2 ? random_quasi_iso(rng, y) : random_chain_map(rng, y, random_complex(rng, Ring::Integers, low, 2, true));
      const bool q = is_quasi_iso(f);
      qi += q;
      ChainSpectrumMap rf = functor_R(f, l);
      r.check(label, rf.validate() && is_level_equiv(rf) == q, q ? "quasi-iso" : "not a quasi-iso", Document{f, std::nullopt});
      if (i < 2) r.document({f, std::nullopt});
    });
  }
  r.check("map corpus has both kinds", qi > 0 && qi < 20, std::to_string(qi) + " of 20 are quasi-isos");

  const std::vector<std::pair<std::string, ChainComplex>> ks = {{"Z[0]", sphere(0, Ring::Integers, Grading::NonNegative)},
                                                                {"D^1", disk(1, Ring::Integers, Grading::NonNegative)}};
  for (std::size_t m = 0; m <= std::min<std::size_t>(3, l); ++m)
    for (std::size_t n = 0; m + n <= std::min<std::size_t>(3, l); ++n)
      for (const auto& [kn, k] : ks) {
        const std::string label = "gamma iso on F_" + std::to_string(m) + " Z[0], F_" + std::to_string(n) + " " + kn;
        r.guarded(label, [&] {
          ChainSpectrum x = free_spectrum(m, ks[0].second, l), y = free_spectrum(n, k, l);
          Gamma g = gamma_monoidal(x, m, y, n);
          r.check(label, g.map.is_iso());
          r.document({g.map, std::nullopt});
        });
      }
  if (l < 2) {
    r.skip("gamma iso on two-cell spectra", "needs truncation >= 2");
    return;
  }
  for (int i = 0; i < 5; ++i) {
    const std::string label = "gamma iso on two-cell spectra, pair " + std::to_string(i);
    r.guarded(label, [&] {
      ChainSpectrum x = random_two_cell(rng, 2), y = random_two_cell(rng, 2);
      Gamma g = gamma_monoidal(x, 1, y, 1);
      r.check(label, x.validate() && y.validate() && g.map.is_iso(), "", Document{x, std::nullopt});
      r.document({x, std::nullopt});
    });
  }
  for (int i = 0; i < 2; ++i) {
    const std::string label = "gamma natural, pair " + std::to_string(i);
    r.guarded(label, [&] {
      ChainSpectrum x = free_spectrum(0, random_small_complex(rng), 2), x2 = random_two_cell(rng, 2);
      ChainComplex k = random_small_complex(rng);
      ChainSpectrumMap f = free_extension(1, k, x2, random_chain_map(rng, k, x2.level(1)));
      ChainSpectrumMap g = free_extension(0, x.level(0), x2, random_chain_map(rng, x.level(0), x2.level(0)));
      Gamma src = gamma_monoidal(f.source, 1, g.source, 1), tgt = gamma_monoidal(f.target, 1, g.target, 1);
      ChainMap left = compose(functor_D(smash(f, g), src.dxy, tgt.dxy), src.map);
      ChainMap right = compose(tgt.map, tensor(functor_D(f, src.dx, tgt.dx), functor_D(g, src.dy, tgt.dy)));
      r.check(label, left.equals(right), "", Document{f, std::nullopt});
    });
  }
}

// ---- prop-ma-ch --------------------------------------------------------------------

ChainMap cell_inclusion(int n) { return ChainMap(sphere(n - 1), disk(n), {{n - 1, Matrix{{1}}}}); }

// B with its top degree removed, included in B.
ChainMap top_removed(const ChainComplex& b) {
  std::vector<FpGroup> ag;
  std::vector<Matrix> ad;
  for (int n = b.lo(); n <= b.hi(); ++n) ag.push_back(n == b.hi() ? FpGroup(b.ring(), 0) : b.group(n));
  for (int n = b.lo() + 1; n <= b.hi(); ++n) ad.push_back(n == b.hi() ? Matrix(b.generators(n - 1), 0) : b.differential(n));
  ChainComplex a(b.ring(), b.lo(), ag, ad);
  std::map<int, Matrix> comp;
  for (int n = a.lo(); n <= a.hi(); ++n) comp.emplace(n, Matrix::identity(a.generators(n)));
  return ChainMap(a, b, comp);
}

void prop_ma_ch(Recorder& r, const SuiteOptions& o) {
  Rng rng(o.seed);
  for (int i = 0; i < 10; ++i) {
    ChainComplex z = random_complex(rng, Ring::Integers, -1, 2, true);
    for (int n = 0; n <= 3; ++n)
      r.check("D^" + std::to_string(n) + " (x) Z acyclic, Z=random " + std::to_string(i), is_acyclic(tensor(disk(n), z)), "",
              Document{z, std::nullopt});
    if (i < 3) r.document({z, std::nullopt});
  }
  for (int i = 0; i < 10; ++i) {
    const std::string label = "pushout products, mono " + std::to_string(i);
    r.guarded(label, [&] {
      ChainMap f = i % 2 ? random_quasi_iso(rng, random_complex(rng, Ring::Integers, -1, 1, true))
                         : top_removed(random_complex(rng, Ring::Integers, 0, 2, false));
      r.check(label + " is injective", f.is_injective(), "", Document{f, std::nullopt});
      for (int n = 1; n <= 3; ++n) {
        r.check(label + " box i_" + std::to_string(n) + " injective", pushout_product(f, cell_inclusion(n)).is_injective(), "",
                Document{f, std::nullopt});
        ChainMap pj = pushout_product(f, ChainMap::zero(zero_complex(), disk(n)));
        r.check(label + " box j_" + std::to_string(n) + " injective quasi-iso", pj.is_injective() && is_quasi_iso(pj), "",
                Document{f, std::nullopt});
      }
      r.document({f, std::nullopt});
    });
  }
}

// ---- Dold-Kan and Eilenberg-Zilber ----------------------------------------------------

void dold_kan(Recorder& r, const SuiteOptions& o) {
  Rng rng(o.seed);
  const std::size_t t = o.simplicial_bound;
  for (int i = 0; i < 10; ++i) {
    const std::string label = "N Gamma = id, C=random " + std::to_string(i);
    r.guarded(label, [&] {
      ChainComplex c = random_complex(rng, Ring::Integers, 0, int(t) - 1, i % 2 == 0, Grading::NonNegative, 2);
      SimplicialAbelianGroup g = dold_kan_gamma(c, t);
      ChainMap u = gamma_unit(c, t);
      bool ok = g.validate() && u.is_iso();
      ChainComplex n = normalize(g);
      for (int k = 0; ok && k < int(t); ++k) ok = n.group(k).isomorphic(c.group(k));
      r.check(label, ok, "", Document{c, std::nullopt});
      if (i < 2) r.document({g, std::nullopt});
    });
  }
  for (int i = 0; i < 10; ++i) {
    const std::string label = "Gamma N = id, A=random " + std::to_string(i);
    r.guarded(label, [&] {
      SimplicialAbelianGroup a = random_simplicial_group(rng, Ring::Integers, t, i % 2 == 1);
      SimplicialMap e = gamma_counit(a);
      r.check(label, a.validate() && e.validate() && e.is_iso(), "", Document{a, std::nullopt});
      if (i < 2) r.document({a, std::nullopt});
    });
  }
}

void eilenberg_zilber(Recorder& r, const SuiteOptions& o) {
  Rng rng(o.seed);
  const std::size_t t = o.simplicial_bound;
  for (int i = 0; i < 10; ++i) {
    const std::string label = "AW o shuffle = id, pair " + std::to_string(i);
    r.guarded(label, [&] {
      SimplicialAbelianGroup a = random_simplicial_group(rng, Ring::Integers, t, false);
      SimplicialAbelianGroup b = random_simplicial_group(rng, Ring::Integers, t, false);
      ChainMap s = shuffle_map(a, b), w = alexander_whitney(a, b);
      r.check(label, compose(w, s).equals(ChainMap::identity(s.source())), "", Document{a, std::nullopt});
      r.check("shuffle quasi-iso through " + std::to_string(t - 1) + ", pair " + std::to_string(i),
              is_quasi_iso_through(s, int(t) - 1), "", Document{b, std::nullopt});
      if (i < 2) r.document({s, std::nullopt});
    });
  }
}

// ---- simplicial side ---------------------------------------------------------------

void prop_sab_ch(Recorder& r, const SuiteOptions& o) {
  const std::size_t l = o.truncation, t = o.simplicial_bound;
  if (t < l + 1) {
    r.skip("phi", "needs simplicial bound > truncation");
    return;
  }
  r.guarded("phi", [&] {
    ChainSpectrum calN = build_calN(l, t);
    ChainSpectrumMap phi = build_phi(l, t);
    r.check("N Z~S is a spectrum", calN.validate());
    r.check("phi is a spectrum map", phi.validate());
    r.check("phi is a monoid map", phi_is_monoidal(phi, t));
    for (std::size_t n = 0; n <= l; ++n) {
      const int top = int(t - l + n);
      bool conc = true;
      for (int d = 0; d < top; ++d) conc = conc && level_homology(calN, n, d).to_string() == (d == int(n) ? "Z" : "0");
      r.check("H(N Z~S^" + std::to_string(n) + ") = Z[" + std::to_string(n) + "]", conc);
      r.check("phi_" + std::to_string(n) + " quasi-iso through " + std::to_string(top - 1),
              is_quasi_iso_through(phi.levels[n], top - 1));
    }
    r.document({phi, std::nullopt});
  });
}

void prop_hz_sab(Recorder& r, const SuiteOptions& o) {
  const std::size_t l = o.truncation, t = o.simplicial_bound;
  r.guarded("HZ", [&] {
    SSetSpectrum h = hz(l, t);
    r.check("HZ window is a spectrum", h.validate());
    HZModule m = hz_as_module(l, t);
    r.check("HZ is an HZ-module", m.validate(h));
    HZModule u = forget_U(sym_sab(l, t));
    bool same = u.spectrum.truncation() == h.truncation();
    for (std::size_t n = 0; same && n <= l; ++n) same = u.spectrum.level(n) == h.level(n);
    r.check("U(Sym Z~S^1) restricts to the HZ window", same && u.validate(h));
    SAbSpectrum z = functor_Z(m, h);
    r.check("Z(HZ) is a spectrum", z.validate());
    SAbSpectrumMap nu = nu_tilde(z, l, t);
    r.check("nu~ is a spectrum map", nu.validate());
    for (std::size_t n = 0; n <= l; ++n) r.check("nu~ iso at level " + std::to_string(n), nu.levels[n].is_iso());
    r.document({nu, std::nullopt});
  });
}

void prop_cof_gen(Recorder& r, const SuiteOptions& o) {
  const std::size_t l = o.truncation, t = o.simplicial_bound;
  std::vector<std::pair<std::string, std::function<SSetSpectrumMap()>>> maps = {
      {"F_0(d Delta[1]+ -> Delta[1]+)", [&] { return free_sset(0, boundary_inclusion(1, t), l); }},
      {"F_1(d Delta[1]+ -> Delta[1]+)", [&] { return free_sset(1, boundary_inclusion(1, t), l); }},
      {"F_0(Lambda^2_1+ -> Delta[2]+)", [&] { return free_sset(0, horn_inclusion(2, 1, t), l); }},
      {"F_1(d^0 : Delta[0]+ -> Delta[1]+)", [&] { return free_sset(1, coface_map(1, 0, t), l); }},
      {"lambda_0", [&] { return lambda_map(0, l, t); }}};
  for (const auto& [name, make] : maps)
    r.guarded("Z~ of " + name, [&] {
      SSetSpectrumMap f = make();
      SAbSpectrumMap g = free_abelian(f);
      r.check("Z~ of " + name, f.validate() && g.source.validate() && g.target.validate() && g.validate(), "",
              Document{f, std::nullopt});
      r.document({g, std::nullopt});
    });
}

// ---- prop-extra --------------------------------------------------------------------

ChainSpectrum random_full(Rng& rng, std::size_t l) {
  return direct_sum(include_i(random_two_cell(rng, l)),
                    f_zero(random_complex(rng, Ring::Integers, -2, 1, true, Grading::Unbounded, 2), l));
}

void prop_extra(Recorder& r, const SuiteOptions& o) {
  Rng rng(o.seed);
  const std::size_t l = o.truncation;
  for (int i = 0; i < 10; ++i) {
    const std::string tag = ", input " + std::to_string(i);
    r.guarded("i -| C_0" + tag, [&] {
      ChainSpectrum x = i % 2 ? random_two_cell(rng, l) : free_spectrum(i % 3, random_small_complex(rng, true), l);
      ChainSpectrum y = random_full(rng, l);
      const FpGroup a = spectrum_map_group(include_i(x), y), b = spectrum_map_group(x, connective_prolong(y));
      r.check("Hom(iX, Y) = Hom(X, C_0 Y)" + tag, a.isomorphic(b), a.to_string() + " vs " + b.to_string(),
              Document{y, std::nullopt});
      r.check("unit X -> C_0 iX iso" + tag, is_iso(connective_prolong_unit(x)), "", Document{x, std::nullopt});
      ChainSpectrumMap eps = connective_prolong_counit(y);
      bool counit = eps.validate();
      for (std::size_t n = 0; counit && n <= l; ++n) {
        const ChainComplex& yn = y.level(n);
        for (int k = 0; counit && !yn.empty() && k <= yn.hi(); ++k) counit = homology_map(eps.levels[n], k).is_iso();
      }
      r.check("counit i C_0 Y -> Y iso on H_{>=0}" + tag, counit, "", Document{y, std::nullopt});
      if (i < 2) r.document({y, std::nullopt});
    });
    r.guarded("F_0 -| Ev_0" + tag, [&] {
      ChainComplex c = random_complex(rng, Ring::Integers, -2, 1, true);
      ChainSpectrum y = random_full(rng, l);
      ChainSpectrum fc = f_zero(c, l);
      const FpGroup a = spectrum_map_group(fc, y), b = chain_map_group(c, ev_zero(y));
      r.check("Hom(F_0 C, Y) = Hom(C, Ev_0 Y)" + tag, a.isomorphic(b), a.to_string() + " vs " + b.to_string(),
              Document{c, std::nullopt});
      r.check("unit C -> Ev_0 F_0 C iso" + tag, same_complex(ev_zero(fc), c), "", Document{c, std::nullopt});
      ChainSpectrumMap eps = f_zero_counit(y);
      r.check("counit F_0 Ev_0 Y -> Y valid, iso at level 0" + tag, eps.validate() && eps.levels[0].is_iso(), "",
              Document{y, std::nullopt});
      if (i < 2) r.document({fc, std::nullopt});
    });
  }
}

// ---- lem-D-rat -----------------------------------------------------------------------

void lem_d_rat(Recorder& r, const SuiteOptions& o) {
  Rng rng(o.seed);
  const Ring ring = o.ring.value_or(Ring::Rationals);
  const bool rational = ring == Ring::Rationals;
  const std::string over = rational ? " over Q" : " over Z";
  auto record = [&](const std::string& name, bool ok, const std::string& detail, const Document& d) {
    if (rational) r.check(name, ok, detail, d);
    else r.integral(name, ok, detail);
  };
  for (std::size_t i = 0; i < 10; ++i) {
    const std::size_t n = 1 + i % 3;
    const std::string label = "H(C_Sigma) = H(C)_Sigma" + over + ", n=" + std::to_string(n) + ", complex " + std::to_string(i);
    r.guarded(label, [&] {
      EquivariantComplex c = random_equivariant(rng, n, i);
      if (rational) c = base_change_Q(c);
      if (!c.validate()) {
        r.check(label + " (action)", false);
        return;
      }
      ChainComplex co = coinvariants(c);
      bool ok = true;
      std::string detail;
      for (int k = c.complex.lo(); k <= c.complex.hi() && !c.complex.empty(); ++k) {
        FpGroup a = homology(co, k), b = homology_coinvariants(c, k);
        if (!a.isomorphic(b)) {
          ok = false;
          detail += "degree " + std::to_string(k) + ": " + a.to_string() + " vs " + b.to_string() + "; ";
        }
      }
      record(label, ok, detail, Document{c.complex, std::nullopt});
      if (i < 2) r.document({c.complex, std::nullopt});
    });
  }
  for (std::size_t i = 0; i < 10; ++i) {
    const std::string label = "D(level equivalence) quasi-iso" + over + ", map " + std::to_string(i);
    r.guarded(label, [&] {
      ChainSpectrumMap f = random_level_equivalence(rng, o.truncation, i);
      if (!f.validate() || !is_level_equiv(f)) {
        r.check(label + " (input)", false, "not a level equivalence", Document{f, std::nullopt});
        return;
      }
      if (rational) f = base_change_Q(f);
      record(label, is_quasi_iso(functor_D(f)), "", Document{f, std::nullopt});
      if (i < 2) r.document({f, std::nullopt});
    });
  }
  EquivariantComplex s = sign_counterexample(Ring::Integers);
  {
    EquivariantComplex sr = rational ? base_change_Q(s) : s;
    const FpGroup a = homology(coinvariants(sr), 1), b = homology_coinvariants(sr, 1);
    record("H(C_Sigma) = H(C)_Sigma" + over + ", sign action", a.isomorphic(b),
           "degree 1: " + a.to_string() + " vs " + b.to_string(), Document{sr.complex, std::nullopt});
  }
  const FpGroup h1 = homology(coinvariants(s), 1), c1 = homology_coinvariants(s, 1);
  r.check("sign action over Z: H_1(C_Sigma) = Z/2, (H_1 C)_Sigma = 0", h1.to_string() == "Z/2" && c1.is_trivial(),
          h1.to_string() + " vs " + c1.to_string(), Document{s.complex, std::nullopt});
  EquivariantComplex sq = base_change_Q(s);
  r.check("sign action over Q: both vanish", homology(coinvariants(sq), 1).is_trivial() && homology_coinvariants(sq, 1).is_trivial());
  r.document({s.complex, std::nullopt});
  r.document({s.actions[0], std::nullopt});
}

using SuiteFn = void (*)(Recorder&, const SuiteOptions&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r = {
      {"lem-D", lem_d},          {"prop-DR", prop_dr},
      {"prop-DR2", prop_dr2},    {"prop-ma-ch", prop_ma_ch},
      {"dold-kan", dold_kan},    {"eilenberg-zilber", eilenberg_zilber},
      {"prop-sab-ch", prop_sab_ch}, {"prop-hz-sab", prop_hz_sab},
      {"prop-extra", prop_extra}, {"lem-D-rat", lem_d_rat},
      {"prop-cof-gen", prop_cof_gen}};
  return r;
}

}  // namespace

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIP";
    case CheckStatus::Counterexample: return "COUNTEREXAMPLE";
  }
  return "?";
}

bool SuiteReport::passed() const { return count(CheckStatus::Fail) == 0; }

std::size_t SuiteReport::count(CheckStatus s) const {
  std::size_t c = 0;
  for (const auto& ch : checks) c += ch.status == s;
  return c;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << " (L=" << options.truncation << ", T=" << options.simplicial_bound
     << ", seed=" << options.seed << ")\n";
  for (const auto& c : checks) {
    os << "  " << status_name(c.status) << "  " << c.name;
    if (!c.detail.empty() && c.status != CheckStatus::Pass) os << "  [" << c.detail << "]";
    os << "\n";
    if (c.reproducer) os << "    reproducer: " << hzalg::to_json(*c.reproducer).dump() << "\n";
  }
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", seconds);
  os << "  " << count(CheckStatus::Pass) << " passed, " << count(CheckStatus::Fail) << " failed, "
     << count(CheckStatus::Skipped) << " skipped, " << count(CheckStatus::Counterexample) << " counterexamples in "
     << secs << " s\n";
  return os.str();
}

Json SuiteReport::to_json() const {
  Json checks_json = Json::array();
  for (const auto& c : checks) {
    Json j = {{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}};
    if (c.reproducer) j["reproducer"] = hzalg::to_json(*c.reproducer);
    checks_json.push_back(std::move(j));
  }
  return {{"suite", suite},
          {"truncation", options.truncation},
          {"simplicial_bound", options.simplicial_bound},
          {"seed", options.seed},
          {"passed", passed()},
          {"seconds", seconds},
          {"documents", documents},
          {"checks", checks_json}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lem-D",       "prop-DR",     "prop-DR2",   "prop-ma-ch",
                                                 "dold-kan",    "eilenberg-zilber", "prop-sab-ch", "prop-hz-sab",
                                                 "prop-extra",  "lem-D-rat",   "prop-cof-gen"};
  return names;
}

bool is_suite(const std::string& name) { return registry().count(name) > 0; }

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  SuiteReport report;
  report.suite = name;
  report.options = options;
  const auto start = std::chrono::steady_clock::now();
  Recorder r(report);
  r.guarded(name, [&] { it->second(r, options); });
  r.finish();
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace hzalg
