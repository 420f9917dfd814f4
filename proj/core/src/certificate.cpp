#include "opaque/certificate.hpp"

#include <cmath>
#include <functional>
#include <set>

#include <nlohmann/json.hpp>

#include "opaque/barrier_io.hpp"
#include "opaque/bounds.hpp"
#include "opaque/error.hpp"
#include "opaque/final_bound.hpp"

namespace opaque {

namespace {

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

double number_field(const nlohmann::json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + "." + key, "missing field");
  if (!it->is_number()) throw ParseError(where + "." + key, "expected a number");
  return it->get<double>();
}

BoundCertificate parse_one(const nlohmann::json& obj, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where, "expected an object");
  BoundCertificate cert;
  const auto name = obj.find("name");
  if (name == obj.end() || !name->is_string()) throw ParseError(where + ".name", "expected a string");
  cert.name = name->get<std::string>();
  cert.value = number_field(obj, "value", where);
  cert.tolerance = number_field(obj, "tolerance", where);

  if (const auto params = obj.find("parameters"); params != obj.end()) {
    if (!params->is_object()) throw ParseError(where + ".parameters", "expected an object");
    for (const auto& [key, v] : params->items()) {
      if (!v.is_number()) throw ParseError(where + ".parameters." + key, "expected a number");
      cert.parameters[key] = v.get<double>();
    }
  }
  if (const auto deps = obj.find("depends_on"); deps != obj.end()) {
    if (!deps->is_array()) throw ParseError(where + ".depends_on", "expected an array");
    for (std::size_t i = 0; i < deps->size(); ++i) {
      if (!(*deps)[i].is_string()) {
        throw ParseError(where + ".depends_on[" + std::to_string(i) + "]", "expected a string");
      }
      cert.depends_on.push_back((*deps)[i].get<std::string>());
    }
  }
  return cert;
}

double param(const BoundCertificate& c, const std::string& key) {
  const auto it = c.parameters.find(key);
  if (it == c.parameters.end()) {
    throw DomainError("certificate " + c.name + " lacks parameter " + key);
  }
  return it->second;
}

double param_or(const BoundCertificate& c, const std::string& key, double fallback) {
  const auto it = c.parameters.find(key);
  return it == c.parameters.end() ? fallback : it->second;
}

}  // namespace

std::string certificate_to_json(const BoundCertificate& c) {
  std::string out = "{\"name\": " + quoted(c.name) + ", \"value\": " + format_real(c.value) +
                    ", \"parameters\": {";
  bool first = true;
  for (const auto& [key, v] : c.parameters) {
    out += (first ? "" : ", ") + quoted(key) + ": " + format_real(v);
    first = false;
  }
  out += "}, \"depends_on\": [";
  for (std::size_t i = 0; i < c.depends_on.size(); ++i) {
    out += (i ? ", " : "") + quoted(c.depends_on[i]);
  }
  out += "], \"tolerance\": " + format_real(c.tolerance) + "}";
  return out;
}

std::string certificates_to_json(const std::vector<BoundCertificate>& certificates) {
  std::string out = "[";
  for (std::size_t i = 0; i < certificates.size(); ++i) {
    out += (i ? ",\n  " : "\n  ") + certificate_to_json(certificates[i]);
  }
  out += certificates.empty() ? "]\n" : "\n]\n";
  return out;
}

std::vector<BoundCertificate> certificates_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed certificate text");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("document", e.what());
  }
  std::vector<BoundCertificate> out;
  if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      out.push_back(parse_one(doc[i], "[" + std::to_string(i) + "]"));
    }
  } else {
    out.push_back(parse_one(doc, "certificate"));
  }
  return out;
}

void check_acyclic(const std::vector<BoundCertificate>& certificates) {
  std::map<std::string, const BoundCertificate*> by_name;
  for (const BoundCertificate& c : certificates) by_name[c.name] = &c;

  enum class Mark { fresh, active, done };
  std::map<std::string, Mark> mark;
  std::function<void(const BoundCertificate&)> visit = [&](const BoundCertificate& c) {
    mark[c.name] = Mark::active;
    for (const std::string& dep : c.depends_on) {
      const auto it = by_name.find(dep);
      if (it == by_name.end()) continue;
      const Mark m = mark.count(dep) ? mark[dep] : Mark::fresh;
      if (m == Mark::active) throw DomainError("certificate dependency cycle through " + dep);
      if (m == Mark::fresh) visit(*it->second);
    }
    mark[c.name] = Mark::done;
  };
  for (const BoundCertificate& c : certificates) {
    if (!mark.count(c.name)) visit(c);
  }
}

CertificateCheck recheck_certificate(const BoundCertificate& c) {
  CertificateCheck out;
  out.known = true;
  if (c.name == "jones.unit_triangle") {
    out.recomputed = jones_bound(ConvexPolygon::unit_triangle()).value;
  } else if (c.name == "jones.unit_square") {
    out.recomputed = jones_bound(ConvexPolygon::unit_square()).value;
  } else if (c.name == "jones.regular_hexagon") {
    out.recomputed = jones_bound(ConvexPolygon::regular_hexagon(param_or(c, "side", 1.0))).value;
  } else if (c.name == "weighted_ratio") {
    out.recomputed = weighted_ratio_closed_form(param(c, "c"));
  } else if (c.name == "restricted6.limit") {
    // The limit itself is sqrt 3; what can be checked at finite c is that
    // the ratio has come within the stated tolerance of it.
    out.recomputed = weighted_ratio_closed_form(param(c, "c"));
  } else if (c.name == "restricted3") {
    out.recomputed = 1.5 + restricted3_delta();
  } else if (c.name == "final_bound" || c.name == "final_theorem") {
    out.recomputed = 1.5 + final_bound_excess(param(c, "beta"), param(c, "epsilon"), param(c, "L3"),
                                              param_or(c, "L6", kSqrt3));
  } else {
    out.known = false;
    return out;
  }
  out.passed = std::isfinite(c.value) && std::abs(out.recomputed - c.value) <= c.tolerance;
  return out;
}

}  // namespace opaque
