#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "topo/complex.hpp"

namespace topo::io {

struct ComplexFile {
  SimplicialComplex complex;
  std::optional<SimplicialComplex> sub;
};

/// One maximal simplex per line as whitespace-separated tokens; `#` starts a
/// comment; a `[subcomplex]` line switches to the sub part of a pair.
ComplexFile parse_complex(std::string_view text);
ComplexFile read_complex_file(const std::string& path);

/// Lines of the form `v -> w`; blank lines and `#` comments are ignored.
std::map<std::string, std::string> parse_map(std::string_view text);
std::map<std::string, std::string> read_map_file(const std::string& path);

/// Writes maximal simplices in the complex text format, lexicographic order.
std::string format_complex(const SimplicialComplex& K);
std::string format_map(const SimplicialMap& f);

}  // namespace topo::io
