#include <json.hpp>
#include <stdexcept>

#include "garchmimic/copula.hpp"
#include "garchmimic/copula_spec.hpp"
#include "garchmimic/vt_copula.hpp"

namespace garchmimic {

namespace {

using nlohmann::json;

bool is_family(const std::string& kind) {
  return kind == "independence" || kind == "gaussian" || kind == "student_t" ||
         kind == "spherical_t" || kind == "abs_spherical_t" || kind == "clayton" ||
         kind == "gumbel" || kind == "joe";
}

json vt_node(const CopulaSpec& s, const char* prefix) {
  json j;
  j["delta"] = s.param(std::string(prefix) + ".delta");
  if (s.has_param(std::string(prefix) + ".kappa")) {
    j["generator"] = "power";
    j["kappa"] = s.param(std::string(prefix) + ".kappa");
  } else {
    j["generator"] = "linear";
  }
  return j;
}

json to_json(const CopulaSpec& s) {
  json j;
  if (is_family(s.kind)) {
    j["family"] = s.kind;
    json params = json::object();
    for (const auto& [key, value] : s.params) params[key] = value;
    j["params"] = params;
    return j;
  }
  if (s.kind == "rotation") {
    j["structure"] = "rotation";
    j["angle"] = static_cast<int>(s.param("angle"));
    j["base"] = to_json(s.children.at(0));
    return j;
  }
  if (s.kind == "mixture") {
    j["structure"] = "mixture";
    json comps = json::array();
    for (std::size_t i = 0; i < s.children.size(); ++i)
      comps.push_back({{"weight", s.weights.at(i)}, {"copula", to_json(s.children[i])}});
    j["components"] = comps;
    return j;
  }
  if (s.kind == "khoudraji") {
    j["structure"] = "khoudraji";
    j["a1"] = s.param("a1");
    j["a2"] = s.param("a2");
    j["base"] = to_json(s.children.at(0));
    return j;
  }
  if (s.kind == "inverse_vt" || s.kind == "forward_vt") {
    j["structure"] = "vt";
    j["direction"] = s.kind == "inverse_vt" ? "inverse" : "forward";
    j["vt1"] = vt_node(s, "vt1");
    j["vt2"] = vt_node(s, "vt2");
    j["base"] = to_json(s.children.at(0));
    return j;
  }
  throw std::invalid_argument("copula spec: unknown kind " + s.kind);
}

void read_vt(const json& j, const char* prefix, CopulaSpec& s) {
  s.params.emplace_back(std::string(prefix) + ".delta", j.at("delta").get<double>());
  const std::string gen = j.value("generator", "linear");
  if (gen == "power")
    s.params.emplace_back(std::string(prefix) + ".kappa", j.at("kappa").get<double>());
  else if (gen != "linear")
    throw std::invalid_argument("copula spec: unknown v-transform generator " + gen);
}

CopulaSpec from_json(const json& j) {
  CopulaSpec s;
  if (j.contains("family")) {
    s.kind = j.at("family").get<std::string>();
    if (j.contains("params"))
      for (const auto& [key, value] : j.at("params").items())
        s.params.emplace_back(key, value.get<double>());
    return s;
  }
  const std::string structure = j.at("structure").get<std::string>();
  if (structure == "rotation") {
    s.kind = "rotation";
    s.params.emplace_back("angle", j.at("angle").get<double>());
    s.children.push_back(from_json(j.at("base")));
    return s;
  }
  if (structure == "mixture") {
    s.kind = "mixture";
    for (const auto& comp : j.at("components")) {
      s.weights.push_back(comp.at("weight").get<double>());
      s.children.push_back(from_json(comp.at("copula")));
    }
    return s;
  }
  if (structure == "khoudraji") {
    s.kind = "khoudraji";
    s.params.emplace_back("a1", j.at("a1").get<double>());
    s.params.emplace_back("a2", j.at("a2").get<double>());
    s.children.push_back(from_json(j.at("base")));
    return s;
  }
  if (structure == "vt") {
    const std::string dir = j.at("direction").get<std::string>();
    if (dir != "inverse" && dir != "forward")
      throw std::invalid_argument("copula spec: unknown vt direction " + dir);
    s.kind = dir == "inverse" ? "inverse_vt" : "forward_vt";
    read_vt(j.at("vt1"), "vt1", s);
    read_vt(j.at("vt2"), "vt2", s);
    s.children.push_back(from_json(j.at("base")));
    return s;
  }
  throw std::invalid_argument("copula spec: unknown structure " + structure);
}

VTransform vt_from_spec(const CopulaSpec& s, const char* prefix) {
  const double delta = s.param(std::string(prefix) + ".delta");
  if (s.has_param(std::string(prefix) + ".kappa"))
    return VTransform::power(delta, s.param(std::string(prefix) + ".kappa"));
  return VTransform::linear(delta);
}

}  // namespace

CopulaPtr make_copula(const CopulaSpec& s) {
  if (s.kind == "independence") return independence_copula();
  if (s.kind == "gaussian") return gaussian_copula(s.param("rho"));
  if (s.kind == "student_t") return student_t_copula(s.param("rho"), s.param("nu"));
  if (s.kind == "spherical_t") return spherical_t_copula(s.param("nu"));
  if (s.kind == "abs_spherical_t") return abs_spherical_t_copula(s.param("nu"));
  if (s.kind == "clayton") return clayton_copula(s.param("theta"));
  if (s.kind == "gumbel") return gumbel_copula(s.param("theta"));
  if (s.kind == "joe") return joe_copula(s.param("theta"));
  if (s.kind == "rotation")
    return rotate_copula(make_copula(s.children.at(0)), static_cast<int>(s.param("angle")));
  if (s.kind == "mixture") {
    std::vector<CopulaPtr> parts;
    for (const auto& child : s.children) parts.push_back(make_copula(child));
    return mixture_copula(std::move(parts), s.weights);
  }
  if (s.kind == "khoudraji")
    return khoudraji_copula(make_copula(s.children.at(0)), s.param("a1"), s.param("a2"));
  if (s.kind == "inverse_vt")
    return inverse_vt_copula(make_copula(s.children.at(0)), vt_from_spec(s, "vt1"),
                             vt_from_spec(s, "vt2"));
  if (s.kind == "forward_vt")
    return forward_vt_copula(make_copula(s.children.at(0)), vt_from_spec(s, "vt1"),
                             vt_from_spec(s, "vt2"));
  throw std::invalid_argument("make_copula: unknown kind " + s.kind);
}

std::string copula_spec_to_json(const CopulaSpec& spec, bool with_schema) {
  json j = to_json(spec);
  if (!with_schema) return j.dump(2);
  json doc;
  doc["schema"] = "garchmimic/1";
  doc["copula"] = j;
  return doc.dump(2);
}

CopulaSpec copula_spec_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.contains("copula")) j = j.at("copula");
  return from_json(j);
}

}  // namespace garchmimic
