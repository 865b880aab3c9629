#include "cli.hpp"

#include "hzalg/functors.hpp"
#include "hzalg/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace hzalg::cli {
namespace {

constexpr std::size_t kMaxTruncation = 4;
constexpr std::size_t kMaxSimplicialBound = 6;

class Failure : public std::runtime_error {
 public:
  Failure(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

std::string base_label(Base b) {
  switch (b) {
    case Base::ChPlus: return "ch+";
    case Base::ChFull: return "Ch";
    case Base::SAb: return "sAb";
    case Base::SSetPointed: return "sSet*";
  }
  return "?";
}

// "complex", "Ch spectrum", "map of sSet* spectra", ...
std::string describe(const DocumentObject& o) {
  return std::visit(Overloaded{[](const ChainComplex& c) -> std::string {
                                 return c.grading() == Grading::NonNegative ? "non-negative complex" : "complex";
                               },
                               [](const PointedSimplicialSet&) -> std::string { return "pointed simplicial set"; },
                               [](const SimplicialAbelianGroup&) -> std::string { return "simplicial abelian group"; },
                               [](const ChainSequence& s) -> std::string { return base_label(s.base) + " sequence"; },
                               [](const ChainSpectrum& x) -> std::string { return base_label(x.base()) + " spectrum"; },
                               [](const SAbSpectrum&) -> std::string { return "sAb spectrum"; },
                               [](const SSetSpectrum&) -> std::string { return "sSet* spectrum"; },
                               [](const ChainMap&) -> std::string { return "chain map"; },
                               [](const PointedMap&) -> std::string { return "pointed simplicial map"; },
                               [](const SimplicialMap&) -> std::string { return "simplicial homomorphism"; },
                               [](const ChainSpectrumMap& f) -> std::string {
                                 return "map of " + base_label(f.source.base()) + " spectra";
                               },
                               [](const SAbSpectrumMap&) -> std::string { return "map of sAb spectra"; },
                               [](const SSetSpectrumMap&) -> std::string { return "map of sSet* spectra"; }},
                    o);
}

[[noreturn]] void category_error(const std::string& functor, const std::string& expected, const DocumentObject& got) {
  throw Failure(kCategory, functor + ": expected " + expected + ", got a " + describe(got));
}

Document read_document(const std::string& path, std::istream& in) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream f(path);
    if (!f) throw Failure(kUsage, "cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  return parse(text);
}

// ---- functors ----------------------------------------------------------------------

struct Settings {
  std::optional<std::size_t> truncation;
  std::size_t simplicial_bound = 5;
};

std::size_t chosen_truncation(const Settings& s) { return s.truncation.value_or(3); }

// The bound D is computed at: --truncation if given, else the full truncation.
std::size_t d_bound(const Settings& s, std::size_t available) {
  const std::size_t b = s.truncation.value_or(available);
  if (b > available)
    throw Failure(kTruncation, "D: bound " + std::to_string(b) + " exceeds the spectrum truncation " +
                                   std::to_string(available));
  return b;
}

ChainComplex unbounded(const ChainComplex& c) { return c.with_grading(Grading::Unbounded); }
ChainMap unbounded(const ChainMap& f) {
  std::map<int, Matrix> comp;
  for (int n = f.source().lo(); !f.source().empty() && n <= f.source().hi(); ++n) comp.emplace(n, f.component(n));
  return ChainMap(unbounded(f.source()), unbounded(f.target()), comp);
}

void require_chain_base(const std::string& name, Base b, Base want, const DocumentObject& o) {
  if (b != want) category_error(name, "a " + base_label(want) + " spectrum or map", o);
}

Document apply_one(const std::string& name, const Document& in, const Settings& s) {
  const DocumentObject& o = in.object;
  auto keep = [&](DocumentObject r) { return Document{std::move(r), in.exactness_bound}; };
  if (name == "D") {
    if (auto* x = std::get_if<ChainSpectrum>(&o)) {
      const std::size_t b = d_bound(s, x->truncation());
      return {functor_D(*x, b).result, b};
    }
    if (auto* f = std::get_if<ChainSpectrumMap>(&o)) {
      const std::size_t b = d_bound(s, f->source.truncation());
      return {functor_D(*f, functor_D(f->source, b), functor_D(f->target, b)), b};
    }
    category_error(name, "a chain spectrum or a map of chain spectra", o);
  }
  if (name == "R") {
    const std::size_t l = chosen_truncation(s);
    if (auto* y = std::get_if<ChainComplex>(&o)) return {functor_R(unbounded(*y), l), l};
    if (auto* g = std::get_if<ChainMap>(&o)) return {functor_R(unbounded(*g), l), l};
    category_error(name, "a complex or a chain map", o);
  }
  if (name == "phiN") {
    auto check = [&](const SAbSpectrum& x) {
      if (x.level(0).truncation() <= x.truncation())
        throw Failure(kTruncation, "phiN: simplicial bound " + std::to_string(x.level(0).truncation()) +
                                       " must exceed the truncation " + std::to_string(x.truncation()));
    };
    if (auto* x = std::get_if<SAbSpectrum>(&o)) {
      check(*x);
      return {prolong_normalization(*x), x->truncation()};
    }
    if (auto* f = std::get_if<SAbSpectrumMap>(&o)) {
      check(f->source);
      return {prolong_normalization(*f), f->source.truncation()};
    }
    category_error(name, "an sAb spectrum or a map of sAb spectra", o);
  }
  if (name == "Z") {
    if (auto* x = std::get_if<SSetSpectrum>(&o)) return keep(free_abelian(*x));
    if (auto* f = std::get_if<SSetSpectrumMap>(&o)) return keep(free_abelian(*f));
    if (auto* k = std::get_if<PointedSimplicialSet>(&o)) return keep(free_abelian(*k));
    if (auto* f = std::get_if<PointedMap>(&o)) return keep(free_abelian(*f));
    category_error(name, "an sSet* spectrum, a pointed simplicial set or a map of either", o);
  }
  if (name == "U") {
    if (auto* x = std::get_if<SAbSpectrum>(&o)) {
      try {
        return keep(forget_U(*x).spectrum);
      } catch (const std::invalid_argument& e) {
        throw Failure(kCategory, std::string("U: ") + e.what());
      }
    }
    category_error(name, "an sAb spectrum", o);
  }
  if (name == "i") {
    if (auto* x = std::get_if<ChainSpectrum>(&o)) {
      require_chain_base(name, x->base(), Base::ChPlus, o);
      return keep(include_i(*x));
    }
    if (auto* f = std::get_if<ChainSpectrumMap>(&o)) {
      require_chain_base(name, f->source.base(), Base::ChPlus, o);
      return keep(include_i(*f));
    }
    if (auto* c = std::get_if<ChainComplex>(&o)) return keep(unbounded(*c));
    category_error(name, "a ch+ spectrum, a map of them, or a complex", o);
  }
  if (name == "C0") {
    if (auto* x = std::get_if<ChainSpectrum>(&o)) {
      require_chain_base(name, x->base(), Base::ChFull, o);
      return keep(connective_prolong(*x));
    }
    if (auto* f = std::get_if<ChainSpectrumMap>(&o)) {
      require_chain_base(name, f->source.base(), Base::ChFull, o);
      return keep(connective_prolong(*f));
    }
    if (auto* c = std::get_if<ChainComplex>(&o)) return keep(connective_cover(*c));
    if (auto* f = std::get_if<ChainMap>(&o)) return keep(connective_cover(*f));
    category_error(name, "a Ch spectrum, a complex or a map of either", o);
  }
  if (name == "F0") {
    const std::size_t l = chosen_truncation(s);
    if (auto* c = std::get_if<ChainComplex>(&o)) return {f_zero(unbounded(*c), l), l};
    if (auto* f = std::get_if<ChainMap>(&o)) return {free_spectrum(0, unbounded(*f), l, Base::ChFull), l};
    category_error(name, "a complex or a chain map", o);
  }
  if (name == "Ev0") {
    if (auto* x = std::get_if<ChainSpectrum>(&o)) return keep(ev_zero(*x));
    if (auto* f = std::get_if<ChainSpectrumMap>(&o)) return keep(f->levels.at(0));
    category_error(name, "a chain spectrum or a map of chain spectra", o);
  }
  if (name == "baseQ") {
    if (auto* c = std::get_if<ChainComplex>(&o)) return keep(base_change_Q(*c));
    if (auto* f = std::get_if<ChainMap>(&o)) return keep(base_change_Q(*f));
    if (auto* x = std::get_if<ChainSpectrum>(&o)) return keep(base_change_Q(*x));
    if (auto* f = std::get_if<ChainSpectrumMap>(&o)) return keep(base_change_Q(*f));
    if (auto* a = std::get_if<SimplicialAbelianGroup>(&o)) return keep(base_change_Q(*a));
    category_error(name, "a complex, a chain spectrum, a simplicial abelian group or a chain-level map", o);
  }
  throw Failure(kUsage, "unknown functor '" + name + "' (expected D, R, phiN, Z, U, i, C0, F0, Ev0 or baseQ)");
}

// --ring Q base-changes the input; --ring Z insists on integral input.
Document apply_ring(const std::string& ring, Document d, const Settings& s) {
  if (ring.empty()) return d;
  const Ring have = document_ring(d.object);
  if (ring == "Q") return have == Ring::Rationals ? d : apply_one("baseQ", d, s);
  if (have != Ring::Integers) throw Failure(kCategory, "--ring Z: the document is over Q");
  return d;
}

// ---- homology ---------------------------------------------------------------------

FpGroup simplicial_homology(const SimplicialAbelianGroup& a, int degree) {
  if (degree >= int(a.truncation()))
    throw Failure(kTruncation, "degree " + std::to_string(degree) + " needs simplicial bound above " +
                                   std::to_string(degree) + ", have " + std::to_string(a.truncation()));
  return homology(normalize(a), degree);
}

FpGroup homology_of(const DocumentObject& o, int degree, std::optional<std::size_t> level) {
  auto need_level = [&](std::size_t truncation) {
    if (!level) throw Failure(kUsage, "homology of a spectrum needs --level");
    if (*level > truncation)
      throw Failure(kTruncation, "level " + std::to_string(*level) + " exceeds the truncation " +
                                     std::to_string(truncation));
    return *level;
  };
  if (auto* c = std::get_if<ChainComplex>(&o)) return homology(*c, degree);
  if (auto* x = std::get_if<ChainSpectrum>(&o)) return level_homology(*x, need_level(x->truncation()), degree);
  if (auto* a = std::get_if<SimplicialAbelianGroup>(&o)) return simplicial_homology(*a, degree);
  if (auto* k = std::get_if<PointedSimplicialSet>(&o)) return simplicial_homology(free_abelian(*k), degree);
  if (auto* x = std::get_if<SAbSpectrum>(&o)) return simplicial_homology(x->level(need_level(x->truncation())), degree);
  if (auto* x = std::get_if<SSetSpectrum>(&o))
    return simplicial_homology(free_abelian(x->level(need_level(x->truncation()))), degree);
  if (auto* s = std::get_if<ChainSequence>(&o)) return homology(s->level(need_level(s->truncation())), degree);
  category_error("homology", "a complex, spectrum or simplicial object", o);
}

Json group_json(const FpGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion()) torsion.push_back(t.get_str());
  return {{"ring", ring_name(g.ring())}, {"free_rank", g.free_rank()}, {"torsion", torsion}, {"text", g.to_string()}};
}

// ---- show --------------------------------------------------------------------------

void show_complex(std::ostream& out, const ChainComplex& c, const std::string& indent) {
  if (c.empty()) {
    out << indent << "zero\n";
    return;
  }
  for (int n = c.hi(); n >= c.lo(); --n)
    out << indent << "degree " << n << ": C = " << c.group(n).to_string() << ", H = " << homology(c, n).to_string()
        << "\n";
}

void show(std::ostream& out, const Document& d) {
  const DocumentObject& o = d.object;
  out << describe(o) << " over " << ring_name(document_ring(o));
  if (d.exactness_bound) out << ", exact through " << *d.exactness_bound;
  out << "\n";
  std::visit(Overloaded{[&](const ChainComplex& c) { show_complex(out, c, "  "); },
                        [&](const PointedSimplicialSet& k) {
                          auto nd = k.nondegenerate_counts();
                          for (std::size_t j = 0; j <= k.truncation(); ++j)
                            out << "  dimension " << j << ": " << k.count(j) - 1 << " simplices, " << nd[j] - 1
                                << " nondegenerate (basepoint excluded)\n";
                        },
                        [&](const SimplicialAbelianGroup& a) {
                          for (std::size_t j = 0; j <= a.truncation(); ++j)
                            out << "  dimension " << j << ": " << a.group(j).to_string() << "\n";
                        },
                        [&](const ChainSequence& s) {
                          for (std::size_t n = 0; n <= s.truncation(); ++n) {
                            out << "  level " << n << ":\n";
                            show_complex(out, s.level(n), "    ");
                          }
                        },
                        [&](const ChainSpectrum& x) {
                          for (std::size_t n = 0; n <= x.truncation(); ++n) {
                            out << "  level " << n << ":\n";
                            show_complex(out, x.level(n), "    ");
                          }
                        },
                        [&](const SAbSpectrum& x) {
                          for (std::size_t n = 0; n <= x.truncation(); ++n) {
                            out << "  level " << n << ":";
                            for (std::size_t j = 0; j <= x.level(n).truncation(); ++j)
                              out << " " << x.level(n).generators(j);
                            out << " generators by dimension\n";
                          }
                        },
                        [&](const SSetSpectrum& x) {
                          for (std::size_t n = 0; n <= x.truncation(); ++n) {
                            out << "  level " << n << ":";
                            for (std::size_t j = 0; j <= x.level(n).truncation(); ++j)
                              out << " " << x.level(n).count(j) - 1;
                            out << " simplices by dimension\n";
                          }
                        },
                        [&](const ChainMap& f) {
                          out << "  source:\n";
                          show_complex(out, f.source(), "    ");
                          out << "  target:\n";
                          show_complex(out, f.target(), "    ");
                          out << "  quasi-isomorphism: " << (is_quasi_iso(f) ? "yes" : "no") << "\n";
                        },
                        [&](const ChainSpectrumMap& f) {
                          out << "  levels 0.." << f.source.truncation()
                              << ", level equivalence: " << (is_level_equiv(f) ? "yes" : "no") << "\n";
                        },
                        [&](const PointedMap& f) {
                          out << "  dimensions 0.." << f.images.size() - 1 << ", valid: " << (f.validate() ? "yes" : "no")
                              << "\n";
                        },
                        [&](const auto& f) {
                          out << "  levels 0.." << f.levels.size() - 1 << ", valid: " << (f.validate() ? "yes" : "no")
                              << "\n";
                        }},
             o);
}

// ---- verbs -------------------------------------------------------------------------

void check_range(const Settings& s) {
  if (s.truncation && *s.truncation > kMaxTruncation)
    throw Failure(kUsage, "--truncation is at most " + std::to_string(kMaxTruncation));
  if (s.simplicial_bound > kMaxSimplicialBound || s.simplicial_bound == 0)
    throw Failure(kUsage, "--simplicial-bound must lie in 1.." + std::to_string(kMaxSimplicialBound));
}

int verify(const std::string& suite, const Settings& s, std::uint64_t seed, const std::string& ring,
           const std::string& format, std::ostream& out) {
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else if (is_suite(suite)) names = {suite};
  else {
    std::string known;
    for (const auto& n : suite_names()) known += " " + n;
    throw Failure(kUsage, "unknown suite '" + suite + "'; known:" + known + " all");
  }
  SuiteOptions opt;
  opt.truncation = chosen_truncation(s);
  opt.simplicial_bound = s.simplicial_bound;
  opt.seed = seed;
  if (!ring.empty()) opt.ring = ring == "Q" ? Ring::Rationals : Ring::Integers;
  bool ok = true;
  Json reports = Json::array();
  for (const auto& n : names) {
    SuiteReport r = run_suite(n, opt);
    ok = ok && r.passed();
    if (format == "doc") reports.push_back(r.to_json());
    else out << r.to_text() << std::flush;
  }
  if (format == "doc") out << reports.dump(1) << "\n";
  else if (names.size() > 1) out << (ok ? "all suites passed\n" : "some suites failed\n");
  return ok ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with chain complexes, simplicial objects and symmetric spectra."};
  app.name("hzalg");
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  std::size_t truncation = 3;
  std::string ring, format, input;
  std::uint64_t seed = 1;
  app.add_option("--ring", ring, "Coefficient ring")->check(CLI::IsMember({"Z", "Q"}));
  auto* trunc_opt = app.add_option("--truncation,-L", truncation, "Spectrum truncation L (at most 4)");
  app.add_option("--simplicial-bound,-T", s.simplicial_bound, "Simplicial bound T (at most 6)");
  app.add_option("--seed", seed, "Seed for the verification corpus");
  app.add_option("--format", format, "Output format (apply defaults to doc, the other verbs to text)")->check(CLI::IsMember({"text", "doc"}));

  auto* homology_cmd = app.add_subcommand("homology", "Homology of a complex, spectrum level or simplicial object");
  int degree = 0;
  std::optional<std::size_t> level;
  homology_cmd->add_option("--degree,-d", degree, "Degree")->required();
  homology_cmd->add_option("--level", level, "Spectrum level");
  homology_cmd->add_option("input", input, "Document path (default: standard input)");

  auto* apply_cmd = app.add_subcommand("apply", "Apply a pipeline of functors, left to right");
  std::vector<std::string> pipeline;
  apply_cmd->add_option("--pipeline,-p", pipeline, "Comma-separated functors among D R phiN Z U i C0 F0 Ev0 baseQ")
      ->delimiter(',')
      ->allow_extra_args(false);
  apply_cmd->add_option("input", input, "Document path (default: standard input)");

  auto* verify_cmd = app.add_subcommand("verify", "Run a named verification suite, or all of them");
  std::string suite;
  verify_cmd->add_option("suite", suite, "Suite name or 'all'")->required();

  auto* show_cmd = app.add_subcommand("show", "Summarize a document (--format doc re-emits it canonically)");
  show_cmd->add_option("input", input, "Document path (default: standard input)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "hzalg: " << e.what() << "\n";
    return kUsage;
  }
  if (trunc_opt->count() > 0) s.truncation = truncation;

  try {
    check_range(s);
    if (format.empty()) format = apply_cmd->parsed() ? "doc" : "text";
    if (verify_cmd->parsed()) return verify(suite, s, seed, ring, format, out);

    Document d = apply_ring(ring, read_document(input, in), s);
    if (homology_cmd->parsed()) {
      FpGroup h = homology_of(d.object, degree, level);
      if (format == "doc") out << group_json(h).dump(1) << "\n";
      else out << h.to_string() << "\n";
    } else if (apply_cmd->parsed()) {
      for (const auto& name : pipeline)
        if (!name.empty()) d = apply_one(name, d, s);  // "-p ''" is the empty pipeline
      if (!d.exactness_bound) {
        if (auto* x = std::get_if<ChainSpectrum>(&d.object)) d.exactness_bound = x->truncation();
      }
      if (format == "text") show(out, d);
      else out << emit(d) << "\n";
    } else if (show_cmd->parsed()) {
      if (format == "doc") out << emit(d) << "\n";
      else show(out, d);
    }
    return kOk;
  } catch (const Failure& e) {
    err << "hzalg: " << e.what() << "\n";
    return e.code();
  } catch (const DocumentError& e) {
    err << "hzalg: " << e.what() << "\n";
    return e.code();
  } catch (const std::exception& e) {
    err << "hzalg: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace hzalg::cli
