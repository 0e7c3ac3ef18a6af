#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "topo/chain.hpp"
#include "topo/cohomology.hpp"
#include "topo/complex.hpp"
#include "topo/corpus.hpp"
#include "topo/error.hpp"
#include "topo/homology.hpp"
#include "topo/hopfcatalog.hpp"
#include "topo/io.hpp"
#include "topo/lefschetz.hpp"
#include "topo/manifold.hpp"
#include "topo/pi1.hpp"

namespace topo::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Tsv };

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os, Format f) const {
    if (f == Format::Tsv) {
      tsv_row(os, header_);
      for (const auto& r : rows_) tsv_row(os, r);
      return;
    }
    std::vector<std::size_t> width(header_.size(), 0);
    auto grow = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
    };
    grow(header_);
    for (const auto& r : rows_) grow(r);
    auto line = [&](const std::vector<std::string>& r) {
      std::string s;
      for (std::size_t i = 0; i < r.size(); ++i) {
        s += r[i];
        if (i + 1 < r.size()) s += std::string(width[i] - r[i].size() + 2, ' ');
      }
      os << s << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
  }

 private:
  static void tsv_row(std::ostream& os, const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "\t" : "") << r[i];
    os << '\n';
  }
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

class Report {
 public:
  Report(std::ostream& os, Format f) : os_(os), f_(f) {}

  void echo(const std::vector<std::string>& args) {
    os_ << "# topo";
    for (const auto& a : args) os_ << ' ' << a;
    os_ << '\n';
  }
  void kv(const std::string& key, const std::string& value) {
    os_ << key << (f_ == Format::Tsv ? "\t" : ": ") << value << '\n';
  }
  void section(const std::string& title) { os_ << (f_ == Format::Tsv ? "# " : "== ") << title << '\n'; }
  void table(const Table& t) { t.print(os_, f_); }
  void line(const std::string& s) { os_ << s << '\n'; }
  void check(bool ok, const std::string& what) {
    ok_ = ok_ && ok;
    os_ << (ok ? "ok   " : "FAIL ") << what << '\n';
  }
  void verification(const VerificationReport& r) {
    section(r.title);
    for (const auto& l : r.lines) line(l);
    ok_ = ok_ && r.ok;
  }
  int finish() {
    kv("verdict", ok_ ? "PASS" : "FAIL");
    return ok_ ? kOk : kVerdictFailed;
  }

 private:
  std::ostream& os_;
  Format f_;
  bool ok_ = true;
};

struct Options {
  std::vector<std::string> builtins;
  std::vector<std::string> files;
  std::string coeff;
  std::string rel;
  std::vector<std::string> maps;
  bool reduced = false;
  bool boundaries = false;
  bool strict = false;
  int times = 1;
  std::string cone_apex;
  int sphere_dim = 2;
  std::string embed = "equator";
  std::vector<std::string> catalog_args;
  int center = 0;
  std::vector<std::string> factors;
  std::vector<long> ks;
  std::vector<long> ls;
  long bound = 10;
  int max_l = 8;
};

struct Input {
  std::string name;
  SimplicialComplex complex;
  std::optional<SimplicialComplex> sub;
};

std::vector<Input> load_inputs(const Options& o) {
  std::vector<Input> out;
  for (const auto& b : o.builtins) out.push_back({b, builtin(b), std::nullopt});
  for (const auto& f : o.files) {
    io::ComplexFile file = io::read_complex_file(f);
    out.push_back({f, file.complex, file.sub});
  }
  return out;
}

Input one_input(const Options& o) {
  auto in = load_inputs(o);
  if (in.size() != 1) throw UsageError("expected exactly one complex (--builtin NAME or a file)");
  return in[0];
}

std::pair<Input, Input> two_inputs(const Options& o) {
  auto in = load_inputs(o);
  if (in.size() != 2) throw UsageError("expected exactly two complexes (builtins first, then files)");
  return {in[0], in[1]};
}

std::optional<SimplicialComplex> relative_of(const Options& o, const Input& in) {
  if (o.rel.empty()) return in.sub;
  if (o.rel == "boundary") return boundary_complex(in.complex);
  if (o.rel.rfind("builtin:", 0) == 0) return builtin(o.rel.substr(8));
  return io::read_complex_file(o.rel).complex;
}

long parse_long(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError("bad " + what + " '" + s + "'");
  return v;
}

Coefficients coefficients(const Options& o, const std::string& fallback) {
  return Coefficients::parse(o.coeff.empty() ? fallback : o.coeff);
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join_integers(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s;
}

std::string vector_text(const std::vector<Scalar>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_scalar(v[i]);
  return s + ")";
}

std::string polynomial_text(const std::vector<Integer>& p) {
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (sgn(p[k]) == 0) continue;
    if (!s.empty()) s += " + ";
    const bool one = p[k] == 1;
    if (k == 0) {
      s += p[k].get_str();
    } else {
      if (!one) s += p[k].get_str();
      s += k == 1 ? "t" : "t^" + std::to_string(k);
    }
  }
  return s.empty() ? "0" : s;
}

std::string describe_groups_at(const std::vector<HomologyGroup>& h, const std::string& ring, int q) {
  return q >= 0 && q < static_cast<int>(h.size()) ? h[static_cast<std::size_t>(q)].describe(ring) : "0";
}

void describe_complex(Report& r, const Input& in) {
  r.kv("complex", in.name);
  r.kv("f-vector", join(in.complex.f_vector()));
}

struct ResolvedMap {
  std::string name;
  ChainMap chain;
};

ResolvedMap resolve_map(const std::string& spec, const std::vector<Input>& inputs) {
  auto arg = [&](const std::string& prefix) { return parse_long(spec.substr(prefix.size()), "map parameter"); };
  auto need_input = [&]() -> const SimplicialComplex& {
    if (inputs.empty()) throw UsageError("map '" + spec + "' needs a complex");
    return inputs[0].complex;
  };
  if (spec == "identity") return {spec, ChainMap::identity(need_input())};
  if (spec.rfind("power:", 0) == 0) return {spec, circle_power_map(static_cast<int>(arg("power:"))).chain_map()};
  if (spec.rfind("antipodal:", 0) == 0) {
    return {spec, ChainMap::from_simplicial(antipodal_involution(static_cast<int>(arg("antipodal:"))))};
  }
  if (spec == "translation") return {spec, ChainMap::from_simplicial(torus_translation())};
  if (spec.rfind("approx-identity:", 0) == 0) {
    return {spec, identity_approximation(need_input(), static_cast<int>(arg("approx-identity:"))).chain_map()};
  }
  const SimplicialComplex& source = need_input();
  const SimplicialComplex& target = inputs.size() > 1 ? inputs[1].complex : source;
  return {spec, ChainMap::from_simplicial(SimplicialMap::from_tokens(source, target, io::read_map_file(spec)))};
}

int cmd_homology(const Options& o, Report& r) {
  const Input in = one_input(o);
  const Coefficients coeff = coefficients(o, "Z");
  const auto rel = relative_of(o, in);
  describe_complex(r, in);
  r.kv("coefficients", coeff.name());
  if (rel) r.kv("relative to", join(rel->f_vector()));
  if (o.reduced) r.kv("reduced", "yes");
  const auto h = homology(in.complex, coeff, rel, o.reduced);
  Table t({"q", "H_q"});
  for (const auto& g : h) t.add({std::to_string(g.degree), g.describe(coeff.name())});
  r.table(t);
  if (o.boundaries) {
    const ChainComplexRep C = ChainComplexRep::build(in.complex, rel);
    Table b({"q", "rank C_q", "rank d_q (Q)", "invariant factors of d_q"});
    for (int q = 0; q <= C.top_degree(); ++q) {
      const IntMatrix& d = C.boundary(q);
      b.add({std::to_string(q), std::to_string(C.rank(q)), std::to_string(rank_over_field(d, 0)),
             join_integers(invariant_factors(d))});
    }
    r.section("boundary matrices");
    r.table(b);
  }
  return r.finish();
}

int cmd_cohomology(const Options& o, Report& r) {
  const Input in = one_input(o);
  const Coefficients coeff = coefficients(o, "Z");
  const auto rel = relative_of(o, in);
  describe_complex(r, in);
  r.kv("coefficients", coeff.name());
  const auto h = cohomology_groups(in.complex, coeff, rel);
  Table t({"q", "H^q"});
  for (const auto& g : h) t.add({std::to_string(g.degree), g.describe(coeff.name())});
  r.table(t);
  return r.finish();
}

int cmd_ring(const Options& o, Report& r) {
  const Input in = one_input(o);
  const Coefficients coeff = coefficients(o, "Q");
  if (!coeff.is_field()) throw UsageError("ring needs a field (Q or F<p>)");
  describe_complex(r, in);
  r.kv("coefficients", coeff.name());
  const CohomologyRing ring = ring_structure(in.complex, coeff);
  r.kv("dimensions", join(ring.dimensions()));
  Table t({"p", "i", "q", "j", "e^p_i * e^q_j"});
  for (int p = 0; p <= ring.dim(); ++p) {
    for (int q = 0; p + q <= ring.dim(); ++q) {
      for (std::size_t i = 0; i < ring.dimension(p); ++i) {
        for (std::size_t j = 0; j < ring.dimension(q); ++j) {
          const auto& c = ring.product(p, i, q, j);
          if (std::all_of(c.begin(), c.end(), [](const Scalar& x) { return sgn(x) == 0; })) continue;
          t.add({std::to_string(p), std::to_string(i), std::to_string(q), std::to_string(j), vector_text(c)});
        }
      }
    }
  }
  r.section("nonzero basis products");
  r.table(t);
  const auto ext = exterior_rank_degrees(ring);
  if (const auto* e = std::get_if<ExteriorRank>(&ext)) {
    r.kv("free exterior", "yes");
    r.kv("generators", std::to_string(e->r));
    r.kv("degrees", join_ints(e->degrees));
  } else {
    r.kv("free exterior", "no (" + std::get<NotFreeExterior>(ext).reason + ")");
  }
  return r.finish();
}

int cmd_euler(const Options& o, Report& r) {
  const Input in = one_input(o);
  describe_complex(r, in);
  const EulerReport e = euler_report(in.complex);
  r.kv("by simplex counts", std::to_string(e.by_counts));
  r.kv("by Betti numbers", std::to_string(e.by_betti));
  r.kv("by Lefschetz number of identity", std::to_string(e.by_lefschetz));
  r.check(e.agree(), "three computations agree");
  r.kv("E", std::to_string(e.by_counts));
  return r.finish();
}

int cmd_pi1(const Options& o, Report& r) {
  const Input in = one_input(o);
  describe_complex(r, in);
  const auto tree = spanning_tree(in.complex);
  std::string edges;
  for (const auto& [a, b] : tree) {
    edges += (edges.empty() ? "" : " ") + in.complex.token(a) + "-" + in.complex.token(b);
  }
  r.kv("spanning tree", edges.empty() ? "(none)" : edges);
  const GroupPresentation P = edge_path_group(in.complex, tree);
  r.kv("generators", std::to_string(P.generators.size()));
  r.kv("relators", std::to_string(P.relators.size()));
  r.kv("presentation", P.to_string());
  r.kv("abelianization", abelianization(P).describe());
  return r.finish();
}

int cmd_hurewicz(const Options& o, Report& r) {
  const Input in = one_input(o);
  describe_complex(r, in);
  r.verification(verify_hurewicz(in.complex));
  return r.finish();
}

int cmd_orient(const Options& o, Report& r) {
  const Input in = one_input(o);
  describe_complex(r, in);
  const int n = in.complex.dim();
  const PseudomanifoldCheck pm = is_closed_pseudomanifold(in.complex, n);
  r.kv("closed pseudomanifold", pm.ok ? "yes" : "no");
  for (const auto& d : pm.diagnostics) r.line("  " + d);
  if (!pm.ok) {
    r.check(false, "closed pseudomanifold of dimension " + std::to_string(n));
    return r.finish();
  }
  const auto orientation = orient(in.complex);
  const auto hz = homology(in.complex, Coefficients::integers());
  const auto h2 = homology(in.complex, Coefficients::prime(2));
  r.kv("orientable", orientation ? "yes" : "no");
  r.kv("H_n(Z)", describe_groups_at(hz, "Z", n));
  r.kv("H_n(F2)", describe_groups_at(h2, "F2", n));
  r.check(orientation.has_value() == (hz[static_cast<std::size_t>(n)].betti == 1), "orientable iff H_n(Z) = Z");
  r.check(h2[static_cast<std::size_t>(n)].betti == 1, "H_n(F2) = F2");
  r.check(mod2_fundamental_class_is_cycle(in.complex), "sum of all n-simplices is a mod 2 cycle");
  if (orientation) {
    r.check(is_coherent(in.complex, *orientation), "orientation is coherent");
    const FundamentalClass z = fundamental_class(in.complex, *orientation);
    std::size_t negative = 0;
    for (const auto& c : z.chain) negative += sgn(c) < 0 ? 1 : 0;
    r.kv("fundamental class", std::to_string(z.chain.size()) + " simplices, " + std::to_string(negative) +
                                  " with reversed sign");
  }
  return r.finish();
}

int cmd_duality(const Options& o, Report& r) {
  const Input in = one_input(o);
  describe_complex(r, in);
  const int n = in.complex.dim();
  if (!is_closed_pseudomanifold(in.complex, n).ok) {
    const ParityReport p = boundary_parity_check(in.complex);
    r.kv("E(boundary)", std::to_string(p.euler));
    for (const auto& item : p.items) {
      if (item.applicable) r.check(item.pass, item.statement);
    }
    return r.finish();
  }
  const Coefficients coeff = coefficients(o, "Q");
  if (!coeff.is_field()) throw UsageError("duality needs a field (Q or F<p>)");
  r.kv("coefficients", coeff.name());
  FundamentalClass zeta;
  if (coeff.characteristic() == 2) {
    zeta.n = n;
    zeta.chain.assign(in.complex.count(n), Integer(1));
  } else {
    zeta = fundamental_class(in.complex);
  }
  const FieldHomology H(in.complex, coeff.field());
  Table t({"q", "dim H^q", "dim H^(n-q)", "rank", "nondegenerate"});
  bool all = true;
  bool palindrome = true;
  for (int q = 0; q <= n; ++q) {
    const PairingMatrix M = poincare_pairing(H, zeta, q);
    all = all && M.nondegenerate();
    palindrome = palindrome && H.dimension(q) == H.dimension(n - q);
    t.add({std::to_string(q), std::to_string(M.rows), std::to_string(M.cols), std::to_string(M.rank),
           M.nondegenerate() ? "yes" : "no"});
  }
  r.table(t);
  r.check(all, "every pairing matrix is nondegenerate");
  r.check(palindrome, "b_q = b_(n-q)");
  const ParityReport p = parity_checks(in.complex);
  r.kv("E", std::to_string(p.euler));
  for (const auto& item : p.items) {
    if (item.applicable) r.check(item.pass, item.statement);
  }
  return r.finish();
}

int cmd_degree(const Options& o, Report& r) {
  const auto inputs = load_inputs(o);
  if (o.maps.size() != 1) throw UsageError("degree needs one --map");
  const ResolvedMap f = resolve_map(o.maps[0], inputs);
  r.kv("map", f.name);
  r.kv("degree", std::to_string(degree(f.chain)));
  return r.finish();
}

int cmd_lefschetz(const Options& o, Report& r) {
  const auto inputs = load_inputs(o);
  if (o.maps.size() > 1) throw UsageError("lefschetz takes at most one --map");
  const ResolvedMap f = resolve_map(o.maps.empty() ? "identity" : o.maps[0], inputs);
  r.kv("map", f.name);
  const LefschetzReport rep = hopf_trace_check(f.chain);
  Table t({"q", "chain trace", "homology trace"});
  for (std::size_t q = 0; q < rep.chain_traces.size(); ++q) {
    t.add({std::to_string(q), format_scalar(rep.chain_traces[q]), format_scalar(rep.homology_traces[q])});
  }
  r.table(t);
  r.kv("chain alternating sum", format_scalar(rep.chain_sum));
  r.kv("homology alternating sum", format_scalar(rep.homology_sum));
  r.check(rep.agree(), "Hopf trace: the two alternating sums agree");
  r.kv("lambda", format_scalar(rep.homology_sum));
  r.kv("certificate", to_string(rep.certificate));
  return r.finish();
}

int cmd_coincidence(const Options& o, Report& r) {
  const auto inputs = load_inputs(o);
  if (o.maps.size() != 2) throw UsageError("coincidence needs two --map options");
  const ResolvedMap f = resolve_map(o.maps[0], inputs);
  const ResolvedMap g = resolve_map(o.maps[1], inputs);
  r.kv("f", f.name);
  r.kv("g", g.name);
  const long long fg = coincidence_number(f.chain, g.chain);
  const long long gf = coincidence_number(g.chain, f.chain);
  const int n = f.chain.source().dim();
  r.kv("lambda(f,g)", std::to_string(fg));
  r.kv("lambda(g,f)", std::to_string(gf));
  r.check(fg == (n % 2 == 0 ? gf : -gf), "lambda(f,g) = (-1)^n lambda(g,f)");
  return r.finish();
}

int cmd_separation(const Options& o, Report& r) {
  const auto inputs = load_inputs(o);
  SeparationReport s;
  if (inputs.empty()) {
    r.kv("ambient", "sphere:" + std::to_string(o.sphere_dim));
    r.kv("embedding", o.embed);
    s = separation_check(o.sphere_dim, o.embed);
  } else {
    if (inputs.size() != 1) throw UsageError("separation takes one ambient complex");
    const auto A = relative_of(o, inputs[0]);
    if (!A) throw UsageError("separation needs the embedded complex via --rel or a [subcomplex] section");
    describe_complex(r, inputs[0]);
    s = separation_check(inputs[0].complex, *A);
  }
  r.kv("vertices of Sd^2", std::to_string(s.ambient_vertices));
  r.kv("vertices of embedded copy", std::to_string(s.embedded_vertices));
  r.kv("complement components", std::to_string(s.components));
  r.check(s.ok(), "complement has exactly two components");
  return r.finish();
}

int cmd_kunneth(const Options& o, Report& r) {
  const auto [K, L] = two_inputs(o);
  r.kv("factors", K.name + " x " + L.name);
  r.verification(verify_kunneth(K.complex, L.complex, coefficients(o, "Q")));
  return r.finish();
}

int cmd_uct(const Options& o, Report& r) {
  const Input in = one_input(o);
  describe_complex(r, in);
  std::vector<unsigned long> primes{2, 3, 5};
  if (!o.coeff.empty()) {
    const Coefficients c = Coefficients::parse(o.coeff);
    if (c.kind() != Coefficients::Kind::PrimeField) throw UsageError("uct needs --coeff F<p>");
    primes = {c.characteristic()};
  }
  for (unsigned long p : primes) r.verification(verify_uct(in.complex, p));
  return r.finish();
}

int cmd_les(const Options& o, Report& r) {
  const Input in = one_input(o);
  const auto A = relative_of(o, in);
  if (!A) throw UsageError("les needs a subcomplex via --rel or a [subcomplex] section");
  describe_complex(r, in);
  std::optional<Coefficients> coeff;
  if (!o.coeff.empty()) coeff = Coefficients::parse(o.coeff);
  r.verification(verify_les_pair(in.complex, *A, coeff));
  return r.finish();
}

int cmd_mv(const Options& o, Report& r) {
  const auto [K1, K2] = two_inputs(o);
  const SimplicialComplex K = complex_union(K1.complex, K2.complex);
  r.kv("cover", K1.name + " + " + K2.name);
  r.kv("union f-vector", join(K.f_vector()));
  std::optional<Coefficients> coeff;
  if (!o.coeff.empty()) coeff = Coefficients::parse(o.coeff);
  r.verification(verify_mayer_vietoris(K, K1.complex, K2.complex, coeff));
  return r.finish();
}

int cmd_product(const Options& o, Report& r) {
  if (!o.cone_apex.empty()) {
    const Input in = one_input(o);
    r.line(io::format_complex(cone(in.complex, o.cone_apex)));
    return kOk;
  }
  const auto [K, L] = two_inputs(o);
  r.line(io::format_complex(product(K.complex, L.complex)));
  return kOk;
}

int cmd_subdivide(const Options& o, Report& r) {
  const Input in = one_input(o);
  if (o.times < 0) throw UsageError("--times must be non-negative");
  r.line(io::format_complex(iterated_subdivision(in.complex, o.times)));
  return kOk;
}

CatalogEntry parse_factor(const std::string& text, bool strict) {
  if (text.size() >= 2 && (text[0] == 'E' || text[0] == 'F' || text[0] == 'G')) {
    return catalog(parse_lie_type(text), 0, strict);
  }
  if (text.size() < 2) throw UsageError("bad factor '" + text + "' (use A2, D4, G2, ...)");
  return catalog(parse_lie_type(text.substr(0, 1)), static_cast<int>(parse_long(text.substr(1), "rank")), strict);
}

int cmd_catalog(const Options& o, Report& r) {
  std::vector<CatalogEntry> entries;
  if (o.catalog_args.empty()) {
    entries = full_catalog(o.max_l, o.strict);
  } else {
    const LieType t = parse_lie_type(o.catalog_args[0]);
    if (has_parameter(t)) {
      if (o.catalog_args.size() != 2) throw UsageError("type " + to_string(t) + " needs l");
      entries.push_back(catalog(t, static_cast<int>(parse_long(o.catalog_args[1], "l")), o.strict));
    } else {
      if (o.catalog_args.size() != 1) throw UsageError("type " + to_string(t) + " takes no l");
      entries.push_back(catalog(t, 0, o.strict));
    }
  }
  r.kv("mode", o.strict ? "strict-paper" : "sum-consistent");
  Table t({"type", "l", "degrees", "rank", "dim", "sum", "parity", "consistent"});
  for (const auto& e : entries) {
    t.add({to_string(e.type), std::to_string(e.l), join_ints(e.model.degrees()), std::to_string(e.rank),
           std::to_string(e.dim), std::to_string(e.model.dimension()), e.parity_matches ? "pass" : "fail",
           e.consistent() ? "yes" : "no"});
  }
  r.table(t);
  for (const auto& e : entries) {
    if (!e.consistent()) {
      r.check(false, e.name() + ": " + std::to_string(e.model.rank()) + " generators of total degree " +
                         std::to_string(e.model.dimension()) + ", expected " + std::to_string(e.rank) +
                         " generators summing to dim " + std::to_string(e.dim));
    }
  }
  return r.finish();
}

int cmd_group_predict(const Options& o, Report& r) {
  std::vector<CatalogEntry> factors;
  for (const auto& f : o.factors) factors.push_back(parse_factor(f, o.strict));
  const GroupModel g = GroupModel::make(o.center, factors);
  const GroupPrediction p = group_prediction(g);
  std::string names;
  for (const auto& f : factors) names += " x " + f.name();
  r.kv("group", "T" + std::to_string(o.center) + names);
  r.kv("generator degrees", join_ints(p.model.degrees()));
  r.kv("rank", std::to_string(p.rank));
  r.kv("dim", std::to_string(p.dim));
  r.kv("Poincare polynomial", polynomial_text(p.poincare));
  r.kv("E(G)", p.euler.get_str());
  r.kv("pi1 free rank from center", std::to_string(g.pi1_center_rank()));
  r.check(p.parity_matches, "dim = rank (mod 2)");

  Table torsion({"k", "|Z(G)^0[k]|"});
  for (long k : o.ks.empty() ? std::vector<long>{2, 3, 4, 5, 6} : o.ks) {
    torsion.add({std::to_string(k), p.torsion_points(k).get_str()});
  }
  r.section("torsion points of the center");
  r.table(torsion);

  std::vector<long> ls = o.ls;
  if (ls.empty()) {
    for (long l = -5; l <= 5; ++l) ls.push_back(l);
  }
  Table power({"l", "enumerated", "(1-l)^r"});
  bool agree = true;
  for (long l : ls) {
    const PowerMapTrace t = power_map_trace(p.model, l);
    agree = agree && t.agree();
    power.add({std::to_string(l), t.enumerated.get_str(), t.closed_form.get_str()});
  }
  r.section("Lefschetz numbers of power maps");
  r.table(power);
  r.check(agree, "monomial enumeration matches (1-l)^r");

  r.section("comultiplication on primitives");
  for (std::size_t i = 0; i < p.model.rank(); ++i) {
    r.line("mu*(y" + std::to_string(i + 1) + ") = " + comultiplication_primitive(p.model, i).to_string(p.model));
  }
  const PrimitivePowerCheck c = check_primitive_power_maps(p.model, o.bound);
  for (const auto& f : c.failures) r.line("  " + f);
  r.check(c.ok(), "(p_k)*(y) = k y for |k| <= " + std::to_string(o.bound) + " (" + std::to_string(c.checked) +
                      " cases)");
  return r.finish();
}

int cmd_torsion(const Options& o, Report& r) {
  const Input in = one_input(o);
  describe_complex(r, in);
  const AbelianInvariants inv = abelianization(edge_path_group(in.complex));
  r.kv("abelianized pi1", inv.describe());
  Table t({"k", "#{x : kx = 0}"});
  for (long k : o.ks.empty() ? std::vector<long>{2, 3, 4, 5, 6} : o.ks) {
    t.add({std::to_string(k), torsion_count(inv, k).get_str()});
  }
  r.table(t);
  return r.finish();
}

void add_inputs(CLI::App* sub, Options& o) {
  sub->add_option("--builtin", o.builtins, "builtin complex (sphere:n, torus, rp2, ...); repeatable");
  sub->add_option("files", o.files, "complex files");
}

void add_coeff(CLI::App* sub, Options& o) {
  sub->add_option("--coeff", o.coeff, "coefficients: Z, Q or F<p>");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::string format = "text";
  bool timing = false;

  CLI::App app{"Exact computations on finite simplicial complexes", "topo"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "tsv"}));
  app.add_flag("--timing", timing, "report wall-clock time on stderr");

  using Handler = int (*)(const Options&, Report&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto command = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, h);
    return sub;
  };

  auto* homology_cmd = command("homology", "homology groups H_q(K[,A]; R)", cmd_homology);
  add_inputs(homology_cmd, o);
  add_coeff(homology_cmd, o);
  homology_cmd->add_option("--rel", o.rel, "subcomplex file, builtin:NAME, or boundary");
  homology_cmd->add_flag("--reduced", o.reduced, "reduced homology");
  homology_cmd->add_flag("--boundaries", o.boundaries, "print ranks and invariant factors of boundary maps");

  auto* cohomology_cmd = command("cohomology", "cohomology groups H^q(K[,A]; R)", cmd_cohomology);
  add_inputs(cohomology_cmd, o);
  add_coeff(cohomology_cmd, o);
  cohomology_cmd->add_option("--rel", o.rel, "subcomplex file, builtin:NAME, or boundary");

  auto* ring_cmd = command("ring", "cup product table and exterior structure", cmd_ring);
  add_inputs(ring_cmd, o);
  add_coeff(ring_cmd, o);

  add_inputs(command("euler", "Euler characteristic three ways", cmd_euler), o);
  add_inputs(command("pi1", "edge-path group presentation", cmd_pi1), o);
  add_inputs(command("hurewicz", "abelianized pi1 against H_1", cmd_hurewicz), o);
  add_inputs(command("orient", "pseudomanifold, orientation and fundamental class", cmd_orient), o);

  auto* duality_cmd = command("duality", "Poincare pairing ranks and parity checks", cmd_duality);
  add_inputs(duality_cmd, o);
  add_coeff(duality_cmd, o);

  const std::string map_help =
      "map: identity, power:D, antipodal:N, translation, approx-identity:K, or a map file";
  auto* degree_cmd = command("degree", "degree of a map of oriented pseudomanifolds", cmd_degree);
  add_inputs(degree_cmd, o);
  degree_cmd->add_option("--map", o.maps, map_help);

  auto* lefschetz_cmd = command("lefschetz", "Lefschetz number, Hopf trace and certificate", cmd_lefschetz);
  add_inputs(lefschetz_cmd, o);
  lefschetz_cmd->add_option("--map", o.maps, map_help);

  auto* coincidence_cmd = command("coincidence", "coincidence number of two maps", cmd_coincidence);
  add_inputs(coincidence_cmd, o);
  coincidence_cmd->add_option("--map", o.maps, map_help + "; give twice");

  auto* separation_cmd = command("separation", "components of the complement of a codimension-one sphere",
                                 cmd_separation);
  add_inputs(separation_cmd, o);
  separation_cmd->add_option("--rel", o.rel, "embedded subcomplex file (or builtin:NAME)");
  separation_cmd->add_option("--dim", o.sphere_dim, "ambient sphere dimension when no complex is given");
  separation_cmd->add_option("--embed", o.embed, "equator or facet")->check(CLI::IsMember({"equator", "facet"}));

  auto* kunneth_cmd = command("kunneth", "Kunneth dimension identities for K x L", cmd_kunneth);
  add_inputs(kunneth_cmd, o);
  add_coeff(kunneth_cmd, o);

  auto* uct_cmd = command("uct", "universal coefficients for F_p", cmd_uct);
  add_inputs(uct_cmd, o);
  add_coeff(uct_cmd, o);

  auto* les_cmd = command("les", "exactness of the long exact sequence of a pair", cmd_les);
  add_inputs(les_cmd, o);
  add_coeff(les_cmd, o);
  les_cmd->add_option("--rel", o.rel, "subcomplex file, builtin:NAME, or boundary");

  auto* mv_cmd = command("mv", "exactness of Mayer-Vietoris for K1 and K2", cmd_mv);
  add_inputs(mv_cmd, o);
  add_coeff(mv_cmd, o);

  auto* product_cmd = command("product", "staircase product K x L, or a cone", cmd_product);
  add_inputs(product_cmd, o);
  product_cmd->add_option("--cone", o.cone_apex, "cone on the single input with this apex");

  auto* subdivide_cmd = command("subdivide", "iterated barycentric subdivision", cmd_subdivide);
  add_inputs(subdivide_cmd, o);
  subdivide_cmd->add_option("--times", o.times, "number of subdivisions");

  auto* catalog_cmd = command("catalog", "exterior models of compact simple types", cmd_catalog);
  catalog_cmd->add_option("type", o.catalog_args, "type and l, e.g. A 2 or E8");
  catalog_cmd->add_option("--max-l", o.max_l, "largest l in the full table");
  catalog_cmd->add_flag("--strict-paper", o.strict, "use the printed lists without the Sigma-forced generators");

  auto* group_cmd = command("group-predict", "predictions for a torus times simple factors", cmd_group_predict);
  group_cmd->add_option("--center", o.center, "dimension of the central torus");
  group_cmd->add_option("--factor", o.factors, "simple factor such as A2, D4, G2; repeatable");
  group_cmd->add_option("--k", o.ks, "k values for torsion counts");
  group_cmd->add_option("--l", o.ls, "l values for power maps");
  group_cmd->add_option("--bound", o.bound, "bound on |k| for the primitive check");
  group_cmd->add_flag("--strict-paper", o.strict, "use the printed lists without the Sigma-forced generators");

  auto* torsion_cmd = command("torsion", "k-torsion counts of the abelianized pi1", cmd_torsion);
  add_inputs(torsion_cmd, o);
  torsion_cmd->add_option("--k", o.ks, "k values");

  auto started = std::chrono::steady_clock::now();
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  Report report(out, format == "tsv" ? Format::Tsv : Format::Text);
  int code = kUsage;
  try {
    for (const auto& [sub, handler] : commands) {
      if (sub->parsed()) {
        report.echo(args);
        code = handler(o, report);
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    code = kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    code = e.kind() == ErrorKind::InternalMismatch ? kVerdictFailed : kUsage;
  }
  if (timing) {
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
    err << "time_ms: " << ms << '\n';
  }
  return code;
}

}  // namespace topo::cli
