#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ainf/artin.hpp"
#include "ainf/formal_series.hpp"
#include "ainf/inner_product.hpp"
#include "ainf/morphism.hpp"

namespace ainf {

inline constexpr int kSchemaVersion = 1;

/// Malformed or inconsistent input, located by a JSON pointer into the document.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string where, std::string what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)), detail_(std::move(what)) {}
  [[nodiscard]] const std::string& where() const { return where_; }
  [[nodiscard]] const std::string& detail() const { return detail_; }

 private:
  std::string where_;
  std::string detail_;
};

/// A∞-morphism h from an embedded source algebra into the document's algebra.
struct MorphismDoc {
  std::string id;
  AlgebraPtr source;
  std::optional<CyclicPairing> source_pairing;
  MultilinearTable h;
  int arity_cap = 6;
};

struct CochainDoc {
  std::string id;
  HochschildCochain alpha;
};

struct MCDoc {
  std::string id;
  ArtinVec b;
};

struct GaugeDoc {
  std::string id;
  ArtinVec b0;
  ArtinVec c;
};

struct AlgebraDocument {
  int schema_version = kSchemaVersion;
  std::string name;
  std::string description;
  AlgebraPtr algebra;
  std::optional<CyclicPairing> pairing;
  std::optional<InnerProductMap> phi;
  std::vector<MorphismDoc> morphisms;
  std::vector<CochainDoc> cochains;
  int eps_order = 4;
  std::vector<MCDoc> mc;
  std::vector<GaugeDoc> gauge;
  /// Negative controls name the checks they are built to fail.
  std::vector<std::string> expect_fail;

  [[nodiscard]] AInfMorphism morphism(const std::string& id) const;
  /// The inner product the document certifies: phi if present, else the cyclic pairing.
  [[nodiscard]] std::optional<InnerProductMap> shi() const;
};

AlgebraDocument load_document(const nlohmann::ordered_json& j);
AlgebraDocument load_file(const std::filesystem::path& path);
nlohmann::ordered_json save_document(const AlgebraDocument& doc);
void save_file(const AlgebraDocument& doc, const std::filesystem::path& path);

nlohmann::ordered_json artin_to_json(const ArtinScalar& a);
nlohmann::ordered_json series_to_json(const FormalSeries& s);

}  // namespace ainf
