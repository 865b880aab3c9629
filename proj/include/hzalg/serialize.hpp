#pragma once

// JSON documents for complexes, simplicial objects, spectra and maps.
// Scalars are integers or "p/q" strings.

#include "hzalg/spectra.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace hzalg {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Exit code 2 for malformed input, 3 for inconsistent dimensions.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

using DocumentObject =
    std::variant<ChainComplex, PointedSimplicialSet, SimplicialAbelianGroup, ChainSequence, ChainSpectrum,
                 SAbSpectrum, SSetSpectrum, ChainMap, PointedMap, SimplicialMap, ChainSpectrumMap, SAbSpectrumMap,
                 SSetSpectrumMap>;

struct Document {
  DocumentObject object;
  std::optional<std::size_t> exactness_bound;
};

/// "complex", "simplicial_set", "simplicial_abelian", "sequence", "spectrum" or "map".
std::string document_kind(const DocumentObject& object);
Ring document_ring(const DocumentObject& object);

Json to_json(const Document& doc);
Document from_json(const Json& j);
std::string emit(const Document& doc);
Document parse(const std::string& text);

/// emit(parse(emit(doc))) == emit(doc).
bool round_trips(const Document& doc);

}  // namespace hzalg
