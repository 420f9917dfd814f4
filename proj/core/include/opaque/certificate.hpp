#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace opaque {

/// A named lower bound on |B| with the inputs that produced it and the
/// names of the certificates it builds on.
struct BoundCertificate {
  std::string name;
  double value = 0.0;
  std::map<std::string, double> parameters;
  std::vector<std::string> depends_on;
  double tolerance = 0.0;
};

/// {"name":..., "value":..., "parameters":{...}, "depends_on":[...],
/// "tolerance":...}, numbers with 17 significant digits.
std::string certificate_to_json(const BoundCertificate& certificate);
/// A JSON array of certificates, one per line.
std::string certificates_to_json(const std::vector<BoundCertificate>& certificates);

/// Accepts a single certificate object or an array of them. Throws
/// ParseError for malformed input.
std::vector<BoundCertificate> certificates_from_json(std::string_view text);

/// Throws DomainError if some depends_on entry names a certificate of the
/// same set that (transitively) depends back on it. Names outside the set
/// are ignored.
void check_acyclic(const std::vector<BoundCertificate>& certificates);

struct CertificateCheck {
  bool known = false;      // the name has a recomputation rule
  bool passed = false;     // |recomputed - value| <= tolerance
  double recomputed = 0.0;
};

/// Recomputes the certificate from its name and parameters with the
/// library's own routines.
CertificateCheck recheck_certificate(const BoundCertificate& certificate);

}  // namespace opaque
