#ifndef SLP_IDEAL_IO_HPP
#define SLP_IDEAL_IO_HPP

#include <cstdint>
#include <string>

#include "slp/monomial.hpp"

namespace slp {

/// Parses the ideal file format:
///
///   vars: N
///   gens:
///   e1 e2 ... eN     (one generator per line, nonnegative integers)
///
/// Blank lines and lines starting with '#' are ignored. Parse failures carry
/// line and column positions.
MonomialIdeal parse_ideal_file(const std::string& path);

MonomialIdeal parse_ideal_text(const std::string& text, const std::string& origin = "<input>");

/// Canonical text form that parse_ideal_text round-trips.
std::string format_ideal_file(const MonomialIdeal& ideal);

/// FNV-1a 64-bit digest of a file's bytes, as "fnv1a:<hex>"; used to pin
/// inputs inside reports.
std::string file_digest(const std::string& path);

std::string text_digest(const std::string& text);

}  // namespace slp

#endif
