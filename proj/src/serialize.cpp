#include "hzalg/serialize.hpp"

namespace hzalg {
namespace {

[[noreturn]] void malformed(const std::string& what) { throw DocumentError(2, "parse error: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t natural(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) malformed("expected a non-negative integer");
  return j.get<std::size_t>();
}

const Json& list(const Json& j) {
  if (!j.is_array()) malformed("expected a list");
  return j;
}

// ---- scalars, matrices, groups ----------------------------------------------

Json scalar_json(const Scalar& s) {
  if (s.get_den() == 1 && s.get_num().fits_slong_p()) return s.get_num().get_si();
  return s.get_str();
}

Scalar scalar_of(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) malformed("expected an integer or a \"p/q\" string");
  Scalar s;
  if (s.set_str(j.get<std::string>(), 10) != 0 || s.get_den() == 0) malformed("bad scalar '" + j.get<std::string>() + "'");
  s.canonicalize();
  return s;
}

// Sparse matrices are written as [row, col, value] triples.
Json matrix_json(const Matrix& m) {
  if (m.sparse()) {
    Json nz = Json::array();
    m.for_each_nonzero([&](std::size_t i, std::size_t k, const Scalar& x) { nz.push_back({i, k, scalar_json(x)}); });
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"nonzeros", nz}};
  }
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Matrix matrix_of(const Json& j) {
  const std::size_t r = natural(field(j, "rows")), c = natural(field(j, "cols"));
  if (j.contains("nonzeros")) {
    Matrix m(r, c);
    for (const Json& t : list(j.at("nonzeros"))) {
      if (list(t).size() != 3) malformed("a nonzero entry is [row, col, value]");
      const std::size_t i = natural(t[0]), k = natural(t[1]);
      if (i >= r || k >= c) throw DocumentError(3, "dimension mismatch: entry outside the matrix");
      m(i, k) = scalar_of(t[2]);
    }
    return m;
  }
  const Json& e = list(field(j, "entries"));
  if (e.size() != r) throw DocumentError(3, "dimension mismatch: matrix row count");
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (list(e[i]).size() != c) throw DocumentError(3, "dimension mismatch: matrix row length");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = scalar_of(e[i][k]);
  }
  return m;
}

std::string ring_tag(Ring r) { return r == Ring::Integers ? "Z" : "Q"; }

Ring ring_of(const Json& j) {
  if (j == "Z") return Ring::Integers;
  if (j == "Q") return Ring::Rationals;
  malformed("ring must be \"Z\" or \"Q\"");
}

Json group_json(const FpGroup& g) { return {{"generators", g.generators()}, {"relations", matrix_json(g.relations())}}; }

FpGroup group_of(const Json& j, Ring ring) {
  const std::size_t n = natural(field(j, "generators"));
  Matrix rel = matrix_of(field(j, "relations"));
  if (rel.rows() != n && !(rel.cols() == 0)) throw DocumentError(3, "dimension mismatch: relations");
  if (rel.rows() != n) rel = Matrix(n, 0);
  return FpGroup(ring, n, rel);
}

// Constructors report inconsistent data as invalid_argument.
template <class F>
auto checked(F&& make) {
  try {
    return make();
  } catch (const DocumentError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw DocumentError(3, std::string("dimension mismatch: ") + e.what());
  }
}

// ---- chain complexes and maps -----------------------------------------------

Json complex_json(const ChainComplex& c) {
  Json groups = Json::array(), diffs = Json::array();
  for (int n = c.lo(); n <= c.hi() && !c.empty(); ++n) {
    groups.push_back(group_json(c.group(n)));
    if (n > c.lo()) diffs.push_back(matrix_json(c.differential(n)));
  }
  return {{"grading", c.grading() == Grading::NonNegative ? "nonnegative" : "unbounded"},
          {"lo", c.empty() ? 0 : c.lo()},
          {"groups", groups},
          {"differentials", diffs}};
}

ChainComplex complex_of(const Json& j, Ring ring) {
  const Json& g = field(j, "grading");
  Grading gr = Grading::Unbounded;
  if (g == "nonnegative") gr = Grading::NonNegative;
  else if (g != "unbounded") malformed("grading must be \"nonnegative\" or \"unbounded\"");
  const Json& lo = field(j, "lo");
  if (!lo.is_number_integer()) malformed("lo must be an integer");
  std::vector<FpGroup> groups;
  std::vector<Matrix> diffs;
  for (const auto& x : list(field(j, "groups"))) groups.push_back(group_of(x, ring));
  for (const auto& x : list(field(j, "differentials"))) diffs.push_back(matrix_of(x));
  if (groups.empty()) return zero_complex(ring, gr);
  if (diffs.size() + 1 != groups.size()) throw DocumentError(3, "dimension mismatch: differential count");
  return checked([&] { return ChainComplex(ring, lo.get<int>(), groups, diffs, gr); });
}

Json components_json(const ChainMap& f) {
  Json out = Json::array();
  for (int n = f.source().lo(); n <= f.source().hi() && !f.source().empty(); ++n)
    out.push_back({{"degree", n}, {"matrix", matrix_json(f.component(n))}});
  return out;
}

ChainMap chain_map_of(const Json& comps, const ChainComplex& s, const ChainComplex& t) {
  std::map<int, Matrix> m;
  for (const auto& c : list(comps)) {
    const Json& d = field(c, "degree");
    if (!d.is_number_integer()) malformed("degree must be an integer");
    m[d.get<int>()] = matrix_of(field(c, "matrix"));
  }
  return checked([&] { return ChainMap(s, t, m); });
}

// ---- simplicial ---------------------------------------------------------------

Json sset_json(const PointedSimplicialSet& k) {
  const std::size_t t = k.truncation();
  Json counts = Json::array(), faces = Json::array(), degens = Json::array();
  for (std::size_t d = 0; d <= t; ++d) {
    counts.push_back(k.count(d));
    Json fd = Json::array(), sd = Json::array();
    for (std::size_t i = 0; d > 0 && i <= d; ++i) {
      Json row = Json::array();
      for (std::size_t x = 0; x < k.count(d); ++x) row.push_back(k.face(d, i, x));
      fd.push_back(row);
    }
    for (std::size_t i = 0; d < t && i <= d; ++i) {
      Json row = Json::array();
      for (std::size_t x = 0; x < k.count(d); ++x) row.push_back(k.degeneracy(d, i, x));
      sd.push_back(row);
    }
    faces.push_back(fd);
    degens.push_back(sd);
  }
  return {{"truncation", t}, {"counts", counts}, {"faces", faces}, {"degeneracies", degens}};
}

PointedSimplicialSet sset_of(const Json& j) {
  const std::size_t t = natural(field(j, "truncation"));
  std::vector<std::size_t> counts;
  for (const auto& c : list(field(j, "counts"))) counts.push_back(natural(c));
  auto tables = [&](const Json& src, bool faces) {
    std::vector<PointedSimplicialSet::Table> out;
    std::size_t d = 0;
    for (const auto& td : list(src)) {
      PointedSimplicialSet::Table tab;
      for (const auto& row : list(td)) {
        std::vector<std::size_t> r;
        for (const auto& x : list(row)) r.push_back(natural(x));
        if (d < counts.size() && r.size() != counts[d]) throw DocumentError(3, "dimension mismatch: simplex table");
        const std::size_t bound = faces ? (d > 0 ? d - 1 : 0) : d + 1;
        for (std::size_t v : r)
          if (bound >= counts.size() || v >= counts[bound]) throw DocumentError(3, "dimension mismatch: simplex index");
        tab.push_back(std::move(r));
      }
      out.push_back(std::move(tab));
      ++d;
    }
    return out;
  };
  auto faces = tables(field(j, "faces"), true);
  auto degens = tables(field(j, "degeneracies"), false);
  return checked([&] { return PointedSimplicialSet(t, counts, faces, degens); });
}

Json sab_json(const SimplicialAbelianGroup& a) {
  const std::size_t t = a.truncation();
  Json groups = Json::array(), faces = Json::array(), degens = Json::array();
  for (std::size_t d = 0; d <= t; ++d) {
    groups.push_back(group_json(a.group(d)));
    Json fd = Json::array(), sd = Json::array();
    for (std::size_t i = 0; d > 0 && i <= d; ++i) fd.push_back(matrix_json(a.face(d, i)));
    for (std::size_t i = 0; d < t && i <= d; ++i) sd.push_back(matrix_json(a.degeneracy(d, i)));
    faces.push_back(fd);
    degens.push_back(sd);
  }
  return {{"truncation", t}, {"groups", groups}, {"faces", faces}, {"degeneracies", degens}};
}

SimplicialAbelianGroup sab_of(const Json& j, Ring ring) {
  const std::size_t t = natural(field(j, "truncation"));
  std::vector<FpGroup> groups;
  for (const auto& g : list(field(j, "groups"))) groups.push_back(group_of(g, ring));
  auto ops = [&](const Json& src) {
    std::vector<SimplicialAbelianGroup::Operators> out;
    for (const auto& od : list(src)) {
      SimplicialAbelianGroup::Operators o;
      for (const auto& m : list(od)) o.push_back(matrix_of(m));
      out.push_back(std::move(o));
    }
    return out;
  };
  auto faces = ops(field(j, "faces"));
  auto degens = ops(field(j, "degeneracies"));
  return checked([&] { return SimplicialAbelianGroup(ring, t, groups, faces, degens); });
}

Json images_json(const PointedMap& f) { return f.images; }

PointedMap pointed_map_of(const Json& j, const PointedSimplicialSet& s, const PointedSimplicialSet& t) {
  PointedMap f{s, t, {}};
  for (const auto& row : list(j)) {
    std::vector<std::size_t> r;
    for (const auto& x : list(row)) r.push_back(natural(x));
    f.images.push_back(std::move(r));
  }
  if (f.images.size() != s.truncation() + 1) throw DocumentError(3, "dimension mismatch: map degrees");
  for (std::size_t d = 0; d <= s.truncation(); ++d) {
    if (f.images[d].size() != s.count(d)) throw DocumentError(3, "dimension mismatch: map images");
    for (std::size_t v : f.images[d])
      if (d > t.truncation() || v >= t.count(d)) throw DocumentError(3, "dimension mismatch: map image index");
  }
  return f;
}

Json sab_map_json(const SimplicialMap& f) {
  Json out = Json::array();
  for (const auto& m : f.levels) out.push_back(matrix_json(m));
  return out;
}

SimplicialMap sab_map_of(const Json& j, const SimplicialAbelianGroup& s, const SimplicialAbelianGroup& t) {
  SimplicialMap f{s, t, {}};
  for (const auto& m : list(j)) f.levels.push_back(matrix_of(m));
  if (f.levels.size() != s.truncation() + 1) throw DocumentError(3, "dimension mismatch: map degrees");
  for (std::size_t d = 0; d < f.levels.size(); ++d)
    if (f.levels[d].rows() != t.generators(d) || f.levels[d].cols() != s.generators(d))
      throw DocumentError(3, "dimension mismatch: map component");
  return f;
}

// ---- spectra, generic in the base ---------------------------------------------

template <class B>
struct Codec;

template <>
struct Codec<ChainBase> {
  static Json object(const ChainComplex& c) { return complex_json(c); }
  static ChainComplex object(const Json& j, Ring r) { return complex_of(j, r); }
  static Json morphism(const ChainMap& f) { return components_json(f); }
  static ChainMap morphism(const Json& j, const ChainComplex& s, const ChainComplex& t) { return chain_map_of(j, s, t); }
};

template <>
struct Codec<SAbBase> {
  static Json object(const SimplicialAbelianGroup& a) { return sab_json(a); }
  static SimplicialAbelianGroup object(const Json& j, Ring r) { return sab_of(j, r); }
  static Json morphism(const SimplicialMap& f) { return sab_map_json(f); }
  static SimplicialMap morphism(const Json& j, const SimplicialAbelianGroup& s, const SimplicialAbelianGroup& t) {
    return sab_map_of(j, s, t);
  }
};

template <>
struct Codec<SSetBase> {
  static Json object(const PointedSimplicialSet& k) { return sset_json(k); }
  static PointedSimplicialSet object(const Json& j, Ring) { return sset_of(j); }
  static Json morphism(const PointedMap& f) { return images_json(f); }
  static PointedMap morphism(const Json& j, const PointedSimplicialSet& s, const PointedSimplicialSet& t) {
    return pointed_map_of(j, s, t);
  }
};

std::string base_tag(Base b) {
  switch (b) {
    case Base::ChPlus: return "ch+";
    case Base::ChFull: return "Ch";
    case Base::SAb: return "sAb";
    case Base::SSetPointed: return "sSet*";
  }
  return "?";
}

Base base_of(const Json& j) {
  for (Base b : {Base::ChPlus, Base::ChFull, Base::SAb, Base::SSetPointed})
    if (j == base_tag(b)) return b;
  malformed("unknown base");
}

template <class B>
Json sequence_json(const SymmetricSequence<B>& s) {
  Json levels = Json::array(), actions = Json::array();
  for (std::size_t n = 0; n <= s.truncation(); ++n) {
    levels.push_back(Codec<B>::object(s.level(n)));
    Json acts = Json::array();
    for (const auto& t : s.actions[n]) acts.push_back(Codec<B>::morphism(t));
    actions.push_back(acts);
  }
  return {{"base", base_tag(s.base)}, {"levels", levels}, {"actions", actions}};
}

template <class B>
SymmetricSequence<B> sequence_of(const Json& j, Ring ring) {
  SymmetricSequence<B> s{base_of(field(j, "base")), {}, {}};
  for (const auto& l : list(field(j, "levels"))) s.levels.push_back(Codec<B>::object(l, ring));
  const Json& acts = list(field(j, "actions"));
  if (s.levels.empty() || acts.size() != s.levels.size()) throw DocumentError(3, "dimension mismatch: action levels");
  for (std::size_t n = 0; n < s.levels.size(); ++n) {
    std::vector<typename B::Morphism> a;
    for (const auto& t : list(acts[n])) a.push_back(Codec<B>::morphism(t, s.levels[n], s.levels[n]));
    s.actions.push_back(std::move(a));
  }
  return s;
}

template <class B>
Json spectrum_json(const Spectrum<B>& x) {
  Json j = sequence_json(x.seq);
  Json sigma = Json::array();
  for (const auto& s : x.sigma) sigma.push_back(Codec<B>::morphism(s));
  j["sigma"] = sigma;
  return j;
}

template <class B>
Spectrum<B> spectrum_of(const Json& j, Ring ring) {
  Spectrum<B> x{sequence_of<B>(j, ring), {}};
  const Json& sig = list(field(j, "sigma"));
  if (sig.size() != x.truncation()) throw DocumentError(3, "dimension mismatch: structure map count");
  for (std::size_t n = 0; n < sig.size(); ++n)
    x.sigma.push_back(Codec<B>::morphism(sig[n], B::suspend(x.level(n)), x.level(n + 1)));
  return x;
}

template <class B>
Json spectrum_map_json(const SpectrumMap<B>& f) {
  Json levels = Json::array();
  for (const auto& m : f.levels) levels.push_back(Codec<B>::morphism(m));
  return {{"source", spectrum_json(f.source)}, {"target", spectrum_json(f.target)}, {"levels", levels}};
}

template <class B>
SpectrumMap<B> spectrum_map_of(const Json& j, Ring ring) {
  SpectrumMap<B> f{spectrum_of<B>(field(j, "source"), ring), spectrum_of<B>(field(j, "target"), ring), {}};
  const Json& lv = list(field(j, "levels"));
  if (lv.size() != f.source.truncation() + 1 || f.target.truncation() != f.source.truncation())
    throw DocumentError(3, "dimension mismatch: map levels");
  for (std::size_t n = 0; n < lv.size(); ++n) f.levels.push_back(Codec<B>::morphism(lv[n], f.source.level(n), f.target.level(n)));
  return f;
}

Ring chain_ring(const ChainComplex& c) { return c.ring(); }

}  // namespace

std::string document_kind(const DocumentObject& o) {
  switch (o.index()) {
    case 0: return "complex";
    case 1: return "simplicial_set";
    case 2: return "simplicial_abelian";
    case 3: return "sequence";
    case 4:
    case 5:
    case 6: return "spectrum";
    default: return "map";
  }
}

Ring document_ring(const DocumentObject& o) {
  return std::visit(
      [](const auto& x) -> Ring {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ChainComplex>) return chain_ring(x);
        else if constexpr (std::is_same_v<T, SimplicialAbelianGroup>) return x.ring();
        else if constexpr (std::is_same_v<T, ChainSequence>) return x.level(0).ring();
        else if constexpr (std::is_same_v<T, ChainSpectrum> || std::is_same_v<T, SAbSpectrum>) return x.level(0).ring();
        else if constexpr (std::is_same_v<T, ChainMap>) return x.source().ring();
        else if constexpr (std::is_same_v<T, SimplicialMap>) return x.source.ring();
        else if constexpr (std::is_same_v<T, ChainSpectrumMap> || std::is_same_v<T, SAbSpectrumMap>)
          return x.source.level(0).ring();
        else return Ring::Integers;
      },
      o);
}

Json to_json(const Document& doc) {
  const DocumentObject& o = doc.object;
  Json payload = std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ChainComplex>) return complex_json(x);
        else if constexpr (std::is_same_v<T, PointedSimplicialSet>) return sset_json(x);
        else if constexpr (std::is_same_v<T, SimplicialAbelianGroup>) return sab_json(x);
        else if constexpr (std::is_same_v<T, ChainSequence>) return sequence_json(x);
        else if constexpr (std::is_same_v<T, ChainSpectrum> || std::is_same_v<T, SAbSpectrum> ||
                           std::is_same_v<T, SSetSpectrum>)
          return spectrum_json(x);
        else if constexpr (std::is_same_v<T, ChainMap>)
          return {{"category", "complex"}, {"source", complex_json(x.source())}, {"target", complex_json(x.target())},
                  {"components", components_json(x)}};
        else if constexpr (std::is_same_v<T, PointedMap>)
          return {{"category", "simplicial_set"}, {"source", sset_json(x.source)}, {"target", sset_json(x.target)},
                  {"images", images_json(x)}};
        else if constexpr (std::is_same_v<T, SimplicialMap>)
          return {{"category", "simplicial_abelian"}, {"source", sab_json(x.source)}, {"target", sab_json(x.target)},
                  {"levels", sab_map_json(x)}};
        else {
          Json j = spectrum_map_json(x);
          j["category"] = "spectrum";
          return j;
        }
      },
      o);
  Json out = {{"schema_version", kSchemaVersion}, {"kind", document_kind(o)}, {"ring", ring_tag(document_ring(o))}};
  if (doc.exactness_bound) out["exactness_bound"] = *doc.exactness_bound;
  out["payload"] = payload;
  return out;
}

Document from_json(const Json& j) {
  try {
    const Json& v = field(j, "schema_version");
    if (!v.is_number_integer() || v.get<int>() != kSchemaVersion) malformed("unsupported schema_version");
    const Ring ring = ring_of(field(j, "ring"));
    const Json& kind = field(j, "kind");
    const Json& p = field(j, "payload");
    Document doc{ChainComplex(), std::nullopt};
    if (j.contains("exactness_bound")) doc.exactness_bound = natural(j.at("exactness_bound"));
    if (kind == "complex") {
      doc.object = complex_of(p, ring);
    } else if (kind == "simplicial_set") {
      doc.object = sset_of(p);
    } else if (kind == "simplicial_abelian") {
      doc.object = sab_of(p, ring);
    } else if (kind == "sequence") {
      doc.object = sequence_of<ChainBase>(p, ring);
    } else if (kind == "spectrum") {
      const Base b = base_of(field(p, "base"));
      if (b == Base::SAb) doc.object = spectrum_of<SAbBase>(p, ring);
      else if (b == Base::SSetPointed) doc.object = spectrum_of<SSetBase>(p, ring);
      else doc.object = spectrum_of<ChainBase>(p, ring);
    } else if (kind == "map") {
      const Json& cat = field(p, "category");
      if (cat == "complex") {
        ChainComplex s = complex_of(field(p, "source"), ring), t = complex_of(field(p, "target"), ring);
        doc.object = chain_map_of(field(p, "components"), s, t);
      } else if (cat == "simplicial_set") {
        doc.object = pointed_map_of(field(p, "images"), sset_of(field(p, "source")), sset_of(field(p, "target")));
      } else if (cat == "simplicial_abelian") {
        doc.object = sab_map_of(field(p, "levels"), sab_of(field(p, "source"), ring), sab_of(field(p, "target"), ring));
      } else if (cat == "spectrum") {
        const Base b = base_of(field(field(p, "source"), "base"));
        if (b == Base::SAb) doc.object = spectrum_map_of<SAbBase>(p, ring);
        else if (b == Base::SSetPointed) doc.object = spectrum_map_of<SSetBase>(p, ring);
        else doc.object = spectrum_map_of<ChainBase>(p, ring);
      } else {
        malformed("unknown map category");
      }
    } else {
      malformed("unknown kind");
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw DocumentError(2, std::string("parse error: ") + e.what());
  }
}

std::string emit(const Document& doc) { return to_json(doc).dump(1); }

Document parse(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DocumentError(2, std::string("parse error: ") + e.what());
  }
  return from_json(j);
}

bool round_trips(const Document& doc) {
  const std::string a = emit(doc);
  return emit(parse(a)) == a;
}

}  // namespace hzalg
