#include "topo/corpus.hpp"

#include <charconv>

#include "topo/error.hpp"

namespace topo {

namespace {

std::string num(int v) { return std::to_string(v); }

int parse_parameter(std::string_view name, std::string_view prefix) {
  std::string_view rest = name.substr(prefix.size());
  int value = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty()) {
    fail(ErrorKind::UnknownBuiltin, "bad parameter in '" + std::string(name) + "'");
  }
  return value;
}

SimplicialComplex full_simplex(int n) {
  TokenSimplex s;
  for (int i = 0; i <= n; ++i) s.push_back(num(i));
  return build_complex({s});
}

SimplicialComplex sphere(int n) {
  std::vector<TokenSimplex> facets;
  for (int skip = 0; skip <= n + 1; ++skip) {
    TokenSimplex s;
    for (int i = 0; i <= n + 1; ++i) {
      if (i != skip) s.push_back(num(i));
    }
    facets.push_back(std::move(s));
  }
  return build_complex(facets);
}

SimplicialComplex polygon(int n) {
  std::vector<TokenSimplex> edges;
  for (int i = 0; i < n; ++i) edges.push_back({num(i), num((i + 1) % n)});
  return build_complex(edges);
}

// Möbius–Kantor torus: translates of {0,1,3} and {0,2,3} mod 7.
SimplicialComplex seven_vertex_torus() {
  std::vector<TokenSimplex> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({num(i), num((i + 1) % 7), num((i + 3) % 7)});
    facets.push_back({num(i), num((i + 2) % 7), num((i + 3) % 7)});
  }
  return build_complex(facets);
}

SimplicialComplex projective_plane() {
  return build_complex({{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"},
                        {"1", "6", "2"}, {"2", "3", "5"}, {"3", "4", "6"}, {"4", "5", "2"},
                        {"5", "6", "3"}, {"6", "2", "4"}});
}

// 3x3 grid with (i,3) ~ (i,0) and (3,j) ~ (0,-j).
SimplicialComplex klein_bottle() {
  auto vertex = [](int i, int j) {
    if (i == 3) {
      i = 0;
      j = (3 - j) % 3;
    }
    j %= 3;
    return num(3 * i + j);
  };
  std::vector<TokenSimplex> facets;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      facets.push_back({vertex(i, j), vertex(i + 1, j), vertex(i + 1, j + 1)});
      facets.push_back({vertex(i, j), vertex(i, j + 1), vertex(i + 1, j + 1)});
    }
  }
  return build_complex(facets);
}

SimplicialComplex moebius_strip() {
  std::vector<TokenSimplex> facets;
  for (int i = 0; i < 5; ++i) facets.push_back({num(i), num((i + 1) % 5), num((i + 2) % 5)});
  return build_complex(facets);
}

SimplicialComplex cylinder() {
  std::vector<TokenSimplex> facets;
  for (int i = 0; i < 3; ++i) {
    const int k = (i + 1) % 3;
    facets.push_back({"a" + num(i), "a" + num(k), "b" + num(i)});
    facets.push_back({"a" + num(k), "b" + num(i), "b" + num(k)});
  }
  return build_complex(facets);
}

SimplicialComplex torus_power(int n) {
  SimplicialComplex circle = polygon(3);
  SimplicialComplex result = circle;
  for (int i = 1; i < n; ++i) result = product(result, circle);
  return result;
}

}  // namespace

SimplicialComplex builtin(std::string_view name) {
  auto starts = [&](std::string_view p) { return name.substr(0, p.size()) == p; };
  if (name == "torus") return seven_vertex_torus();
  if (name == "rp2") return projective_plane();
  if (name == "klein") return klein_bottle();
  if (name == "moebius") return moebius_strip();
  if (name == "cylinder") return cylinder();
  if (name == "point") return build_complex({{"0"}});
  if (starts("sphere:")) {
    int n = parse_parameter(name, "sphere:");
    if (n < 0 || n > 12) fail(ErrorKind::UnknownBuiltin, "sphere dimension out of range");
    return sphere(n);
  }
  if (starts("simplex:")) {
    int n = parse_parameter(name, "simplex:");
    if (n < 0 || n > 12) fail(ErrorKind::UnknownBuiltin, "simplex dimension out of range");
    return full_simplex(n);
  }
  if (starts("circle:")) {
    int n = parse_parameter(name, "circle:");
    if (n < 3 || n > 100000) fail(ErrorKind::UnknownBuiltin, "circle needs at least 3 vertices");
    return polygon(n);
  }
  if (starts("torus:")) {
    int n = parse_parameter(name, "torus:");
    if (n < 1 || n > 5) fail(ErrorKind::UnknownBuiltin, "torus power out of range");
    return torus_power(n);
  }
  fail(ErrorKind::UnknownBuiltin, "no builtin named '" + std::string(name) + "'");
}

std::vector<std::pair<std::string, SimplicialComplex>> closed_corpus() {
  std::vector<std::pair<std::string, SimplicialComplex>> out;
  for (const char* name : {"sphere:1", "sphere:2", "sphere:3", "torus", "torus:1", "torus:2",
                           "rp2", "klein"}) {
    out.emplace_back(name, builtin(name));
  }
  return out;
}

std::vector<std::pair<std::string, SimplicialComplex>> full_corpus() {
  auto out = closed_corpus();
  for (const char* name : {"point", "simplex:2", "simplex:3", "moebius", "cylinder"}) {
    out.emplace_back(name, builtin(name));
  }
  return out;
}

}  // namespace topo
