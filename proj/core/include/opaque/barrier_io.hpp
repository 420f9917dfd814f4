#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "opaque/barrier.hpp"

namespace opaque {

/// {"segments": [{"ax":..., "ay":..., "bx":..., "by":...}, ...]} with every
/// coordinate printed to 17 significant digits, so reading it back yields
/// bit-identical doubles.
std::string barrier_to_json(const Barrier& barrier);

/// Parses the barrier format. Throws ParseError naming the offending element
/// for malformed text, missing fields, non-finite numbers and zero-length
/// segments.
Barrier barrier_from_json(std::string_view text);

Barrier read_barrier_file(const std::filesystem::path& path);
void write_barrier_file(const std::filesystem::path& path, const Barrier& barrier);

/// Shortest "%.17g" rendering used by every text output of the library.
std::string format_real(double value);

}  // namespace opaque
