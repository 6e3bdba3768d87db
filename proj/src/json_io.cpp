#include "gfp/json_io.hpp"

#include <string>

#include "gfp/errors.hpp"

namespace gfp {

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

Poly poly_from_json(const Json& j) {
  if (j.is_string()) return parse_poly(j.get<std::string>());
  if (!j.is_array()) throw ParseError("polynomial must be a coefficient array or a string");
  std::vector<Integer> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) {
    if (c.is_number_integer()) {
      coeffs.emplace_back(std::to_string(c.get<long long>()));
    } else if (c.is_string()) {
      Integer v;
      const auto text = c.get<std::string>();
      if (text.empty() || v.set_str(text, 10) != 0) throw ParseError("bad coefficient \"" + text + "\"");
      coeffs.push_back(std::move(v));
    } else {
      throw ParseError("coefficient must be an integer or a string");
    }
  }
  return Poly(std::move(coeffs));
}

Json to_json(const Family& f) {
  Json out;
  out["name"] = f.name;
  out["kind"] = std::string(to_string(f.kind));
  out["d"] = to_json(f.d);
  out["g"] = to_json(f.g);
  out["p0"] = to_json(f.p0);
  out["p1"] = to_json(f.p1);
  return out;
}

Family family_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("family must be a JSON object");
  auto field = [&](const char* key) -> const Json& {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("family is missing \"") + key + "\"");
    return *it;
  };
  Family f;
  const Json& name = field("name");
  const Json& kind = field("kind");
  if (!name.is_string() || !kind.is_string()) throw ParseError("family name and kind must be strings");
  f.name = name.get<std::string>();
  f.kind = parse_kind(kind.get<std::string>());
  f.d = poly_from_json(field("d"));
  f.g = poly_from_json(field("g"));
  f.p0 = poly_from_json(field("p0"));
  f.p1 = poly_from_json(field("p1"));
  return f;
}

Json to_json(const GcdReport& r) {
  Json out;
  out["m"] = r.m;
  out["n"] = r.n;
  out["case_tag"] = r.case_tag ? Json(std::string(to_string(*r.case_tag))) : Json(nullptr);
  out["closed_form"] = r.closed_form ? to_json(*r.closed_form) : Json(nullptr);
  out["oracle"] = to_json(r.oracle);
  out["agrees"] = r.agrees;
  return out;
}

Json to_json(const IdentityReport& r) {
  Json out;
  out["identity_id"] = r.identity_id;
  out["family"] = r.family;
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  out["params"] = std::move(params);
  out["pass"] = r.pass;
  out["lhs"] = to_json(r.lhs);
  out["rhs"] = to_json(r.rhs);
  if (r.witness) out["witness"] = to_json(*r.witness);
  return out;
}

}  // namespace gfp
