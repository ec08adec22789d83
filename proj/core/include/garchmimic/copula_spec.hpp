#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace garchmimic {

class BivariateCopula;

// Declarative description of a copula: a family leaf or a structural node
// (rotation / mixture / khoudraji / v-transform wrappers) over children.
// This is the form that round-trips through the JSON schema.
struct CopulaSpec {
  std::string kind;
  std::vector<std::pair<std::string, double>> params;
  std::vector<CopulaSpec> children;
  std::vector<double> weights;  // mixture components only

  double param(const std::string& name) const;
  bool has_param(const std::string& name) const;
};

// Instantiate a copula from its description (throws on unknown kinds or
// out-of-domain parameters).
std::shared_ptr<const BivariateCopula> make_copula(const CopulaSpec& spec);

// JSON round trip; the document carries a top-level schema marker.
std::string copula_spec_to_json(const CopulaSpec& spec, bool with_schema = true);
CopulaSpec copula_spec_from_json(const std::string& text);

}  // namespace garchmimic
