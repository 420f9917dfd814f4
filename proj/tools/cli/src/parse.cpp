#include "parse.hpp"

#include <cmath>
#include <cstdlib>
#include <regex>

#include "opaque/error.hpp"

namespace opaque::cli {

namespace {

bool full_strtod(const std::string& s, double& value) {
  if (s.empty()) return false;
  char* end = nullptr;
  value = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

double parse_real(const std::string& text, const std::string& flag) {
  double value = 0.0;
  static const std::regex frac_exp(R"(([+-]?(?:\d+\.?\d*|\.\d+))[eE]([+-]?\d*\.\d+))");
  std::smatch m;
  if (std::regex_match(text, m, frac_exp)) {
    value = std::stod(m[1].str()) * std::pow(10.0, std::stod(m[2].str()));
  } else if (!full_strtod(text, value)) {
    throw ParseError(flag, "not a number: '" + text + "'");
  }
  if (!std::isfinite(value)) throw ParseError(flag, "value must be finite");
  return value;
}

std::vector<Angle> parse_angles(const std::string& text) {
  std::vector<Angle> out;
  if (trim(text) == "all") return out;
  static const std::regex pi_form(R"(([+-]?\d*\.?\d*)\*?pi(?:/(\d+\.?\d*))?)");
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = trim(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    start = comma == std::string::npos ? text.size() + 1 : comma + 1;
    if (item.empty()) throw ParseError("--angles", "empty entry");

    std::smatch m;
    double radians = 0.0;
    if (std::regex_match(item, m, pi_form)) {
      const std::string num = m[1].str();
      const double k = num.empty() || num == "+" ? 1.0 : num == "-" ? -1.0 : parse_real(num, "--angles");
      const double den = m[2].matched ? parse_real(m[2].str(), "--angles") : 1.0;
      if (den == 0.0) throw ParseError("--angles", "zero denominator in '" + item + "'");
      radians = k * kPi / den;
    } else if (item.size() > 3 && item.ends_with("deg")) {
      radians = parse_real(item.substr(0, item.size() - 3), "--angles") * kPi / 180.0;
    } else {
      radians = parse_real(item, "--angles");
    }
    out.emplace_back(radians);
  }
  return out;
}

std::vector<double> parse_sweep(const std::string& text, const std::string& flag) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw ParseError(flag, "expected a:b:step");
  const double a = parse_real(text.substr(0, c1), flag);
  const double b = parse_real(text.substr(c1 + 1, c2 - c1 - 1), flag);
  const double step = parse_real(text.substr(c2 + 1), flag);
  if (!(step > 0.0)) throw ParseError(flag, "step must be positive");
  if (b < a) throw ParseError(flag, "end must not precede start");
  std::vector<double> out;
  for (long i = 0;; ++i) {
    const double v = a + static_cast<double>(i) * step;
    if (v > b + step * 1e-6) break;
    out.push_back(v);
    if (out.size() > 100000) throw ParseError(flag, "too many sweep points");
  }
  return out;
}

}  // namespace opaque::cli
