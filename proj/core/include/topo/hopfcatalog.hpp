#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "topo/exactlinalg.hpp"

namespace topo {

/// ⋀[y_1..y_r] with odd generator degrees, kept sorted.
class ExteriorModel {
 public:
  ExteriorModel() = default;
  /// Throws RangeError unless every degree is odd and positive.
  ExteriorModel(std::vector<int> degrees, std::string label = {});

  const std::vector<int>& degrees() const noexcept { return degrees_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t rank() const noexcept { return degrees_.size(); }
  /// Top degree Σ g_i.
  long long dimension() const;

 private:
  std::vector<int> degrees_;
  std::string label_;
};

/// The tensor product: degrees are merged.
ExteriorModel tensor(const ExteriorModel& a, const ExteriorModel& b);

/// Coefficients of Π(1 + t^{g_i}), index = degree.
std::vector<Integer> poincare_polynomial(const ExteriorModel& m);

struct PowerMapTrace {
  Integer enumerated;   // Σ over monomials of (-1)^deg · l^len
  Integer closed_form;  // (1 - l)^r
  bool agree() const { return enumerated == closed_form; }
};

PowerMapTrace power_map_trace(const ExteriorModel& m, long l);
/// λ(p_l); throws InternalMismatch when enumeration and (1-l)^r differ.
Integer power_map_lefschetz(const ExteriorModel& m, long l);

/// Element of the exterior algebra: monomial (bit set of generators) -> coefficient.
using ExteriorElement = std::map<std::uint64_t, Integer>;

struct TensorTerm {
  Integer coefficient;
  std::uint64_t left = 0;
  std::uint64_t right = 0;
};

/// Σ c · (left ⊗ right).
struct TensorExpression {
  std::vector<TensorTerm> terms;
  std::string to_string(const ExteriorModel& m) const;
};

/// μ*(y_i) = y_i⊗1 + 1⊗y_i. Throws IndexOutOfRange.
TensorExpression comultiplication_primitive(const ExteriorModel& m, std::size_t i);

/// Product in ⋀ with the Koszul sign for odd generators.
ExteriorElement exterior_multiply(const ExteriorModel& m, const ExteriorElement& a, const ExteriorElement& b);

/// (p_k)*(y_i), obtained by iterating (p_{k±1})* = Δ*∘((p_k)*⊗q*)∘μ* from
/// p_0 (constant) with q = 1 upward and q = ι downward, ι*(y) = -y.
/// Throws IndexOutOfRange.
ExteriorElement power_map_on_primitive(const ExteriorModel& m, std::size_t i, long k);

struct PrimitivePowerCheck {
  long bound = 0;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// (p_k)*(y_i) = k·y_i for every generator and |k| <= bound.
PrimitivePowerCheck check_primitive_power_maps(const ExteriorModel& m, long bound = 10);

std::string format_element(const ExteriorModel& m, const ExteriorElement& x);

enum class LieType { A, B, C, D, E6, E7, E8, F4, G2 };

/// "A".."D", "E6", "E7", "E8", "F4", "G2". Throws ParseError.
LieType parse_lie_type(std::string_view text);
std::string to_string(LieType t);
/// Whether the type takes a rank parameter l.
bool has_parameter(LieType t);

struct CatalogEntry {
  LieType type = LieType::A;
  int l = 0;
  ExteriorModel model;
  long long dim = 0;
  int rank = 0;
  bool strict = false;
  bool sum_matches = false;     // Σ g_i = dim
  bool parity_matches = false;  // dim ≡ rank (mod 2)
  bool count_matches = false;   // number of generators = rank
  bool consistent() const { return sum_matches && parity_matches && count_matches; }
  std::string name() const;
};

/// Degrees for the given type. Strict mode keeps the lists as printed in the
/// classical table, without the D_l generator 2l-1 and the E8 generator 27.
/// Throws RangeError (A: l>=1, B: l>=2, C: l>=3, D: l>=4).
CatalogEntry catalog(LieType type, int l = 0, bool strict = false);

/// Every type, parameterized types for their least l up to max_l.
std::vector<CatalogEntry> full_catalog(int max_l, bool strict = false);

/// H*(G; F_p) is p-torsion free for simply connected G of this type.
/// Throws NotPrime.
bool torsion_free_mod(LieType type, unsigned long p);

struct GroupModel {
  ExteriorModel center;  // all degrees 1
  std::vector<CatalogEntry> simple_factors;
  /// Center of the given dimension. Throws RangeError when negative.
  static GroupModel make(int center_dim, std::vector<CatalogEntry> factors);
  int pi1_center_rank() const { return static_cast<int>(center.rank()); }
};

struct GroupPrediction {
  ExteriorModel model;
  std::vector<Integer> poincare;
  int rank = 0;
  long long dim = 0;
  Integer euler;
  bool parity_matches = false;  // dim ≡ rank (mod 2)
  int center_dim = 0;
  /// |{x in Z(G)^0 : kx = 0}| = k^{dim Z(G)^0}. Throws RangeError for k < 1.
  Integer torsion_points(long k) const;
};

/// Throws RangeError when a center degree is not 1, InternalMismatch when
/// rank > 0 and E(G) != 0.
GroupPrediction group_prediction(const GroupModel& g);

}  // namespace topo
