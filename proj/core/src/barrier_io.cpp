#include "opaque/barrier_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "opaque/error.hpp"

namespace opaque {

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string barrier_to_json(const Barrier& barrier) {
  std::string out = "{\"segments\": [";
  bool first = true;
  for (const Segment& s : barrier.segments()) {
    out += first ? "\n  " : ",\n  ";
    first = false;
    out += "{\"ax\": " + format_real(s.a().x) + ", \"ay\": " + format_real(s.a().y) +
           ", \"bx\": " + format_real(s.b().x) + ", \"by\": " + format_real(s.b().y) + "}";
  }
  out += first ? "]}\n" : "\n]}\n";
  return out;
}

namespace {

double read_coordinate(const nlohmann::json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  const std::string field = where + "." + key;
  if (it == obj.end()) throw ParseError(field, "missing field");
  if (!it->is_number()) throw ParseError(field, "expected a number");
  const double v = it->get<double>();
  if (!std::isfinite(v)) throw ParseError(field, "coordinate is not finite");
  return v;
}

}  // namespace

Barrier barrier_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed barrier text");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("document", e.what());
  }
  if (!doc.is_object()) throw ParseError("document", "expected an object");
  const auto segs = doc.find("segments");
  if (segs == doc.end()) throw ParseError("segments", "missing field");
  if (!segs->is_array()) throw ParseError("segments", "expected an array");

  std::vector<Segment> out;
  for (std::size_t i = 0; i < segs->size(); ++i) {
    const std::string where = "segments[" + std::to_string(i) + "]";
    const nlohmann::json& item = (*segs)[i];
    if (!item.is_object()) throw ParseError(where, "expected an object");
    const Point a{read_coordinate(item, "ax", where), read_coordinate(item, "ay", where)};
    const Point b{read_coordinate(item, "bx", where), read_coordinate(item, "by", where)};
    if (a == b) throw ParseError(where, "zero-length segment");
    out.emplace_back(a, b);
  }
  return Barrier(std::move(out));
}

Barrier read_barrier_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return barrier_from_json(ss.str());
}

void write_barrier_file(const std::filesystem::path& path, const Barrier& barrier) {
  std::ofstream out(path);
  if (!out) throw ParseError(path.string(), "cannot open file for writing");
  out << barrier_to_json(barrier);
}

}  // namespace opaque
