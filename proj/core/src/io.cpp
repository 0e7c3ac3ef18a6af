#include "topo/io.hpp"

#include <fstream>
#include <sstream>

#include "topo/error.hpp"

namespace topo::io {

namespace {

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

ComplexFile parse_complex(std::string_view text) {
  std::vector<TokenSimplex> ambient;
  std::vector<TokenSimplex> sub;
  bool in_sub = false;
  std::istringstream lines{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(lines, raw)) {
    ++line_no;
    auto line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line == "[subcomplex]") {
      if (in_sub) fail(ErrorKind::ParseError, "duplicate [subcomplex] at line " + std::to_string(line_no));
      in_sub = true;
      continue;
    }
    std::istringstream words{std::string(line)};
    TokenSimplex simplex;
    for (std::string w; words >> w;) simplex.push_back(w);
    (in_sub ? sub : ambient).push_back(std::move(simplex));
  }
  ComplexFile file{build_complex(ambient), std::nullopt};
  if (in_sub) {
    file.sub = build_complex(sub);
    SimplicialPair check(file.complex, *file.sub);
  }
  return file;
}

ComplexFile read_complex_file(const std::string& path) { return parse_complex(slurp(path)); }

std::map<std::string, std::string> parse_map(std::string_view text) {
  std::map<std::string, std::string> out;
  std::istringstream lines{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(lines, raw)) {
    ++line_no;
    auto line = trim(strip_comment(raw));
    if (line.empty()) continue;
    auto arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      fail(ErrorKind::ParseError, "expected 'v -> w' at line " + std::to_string(line_no));
    }
    auto from = trim(line.substr(0, arrow));
    auto to = trim(line.substr(arrow + 2));
    if (from.empty() || to.empty() || from.find_first_of(" \t") != std::string_view::npos ||
        to.find_first_of(" \t") != std::string_view::npos) {
      fail(ErrorKind::ParseError, "malformed map line " + std::to_string(line_no));
    }
    if (!out.emplace(std::string(from), std::string(to)).second) {
      fail(ErrorKind::ParseError, "vertex '" + std::string(from) + "' mapped twice");
    }
  }
  return out;
}

std::map<std::string, std::string> read_map_file(const std::string& path) {
  return parse_map(slurp(path));
}

std::string format_complex(const SimplicialComplex& K) {
  std::string out;
  for (const auto& s : K.maximal_token_simplices()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ' ';
      out += s[i];
    }
    out += '\n';
  }
  return out;
}

std::string format_map(const SimplicialMap& f) {
  std::string out;
  for (VertexId v = 0; v < f.source().vertex_count(); ++v) {
    out += f.source().token(v) + " -> " + f.target().token(f(v)) + "\n";
  }
  return out;
}

}  // namespace topo::io
