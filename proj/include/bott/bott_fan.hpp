#pragma once

// Fan of the Bott-tower toric limit.
//
// The lattice is Z^r with standard basis e_1^+ .. e_r^+, and
//   e_i^- = -e_i^+ - sum_{j>i} beta_ij e_j^+.
// Maximal cones are the sign vectors in {+,-}^r; a cone never contains both
// e_i^+ and e_i^-. Each ray vector e_i^± vanishes in coordinates < i and has
// ±1 in coordinate i, so every cone matrix is triangular with unit diagonal.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bott/matrix.hpp"
#include "bott/root_data.hpp"

namespace bott {

/// Exhaustive (2^r cone) routines refuse longer words.
inline constexpr int kMaxOracleLength = 16;

/// Pairing matrix B[i][j] = <beta_j, coroot beta_i>, 1-based. The strict
/// upper triangle is the Bott-tower matrix; the full square is kept because
/// divisor-class recursions read pairings in both index orders.
class BottMatrix {
 public:
  /// Square integer matrix with 2 on the diagonal.
  explicit BottMatrix(IntMatrix entries);

  int length() const { return static_cast<int>(entries_.rows()); }
  Int beta(int i, int j) const;
  const IntMatrix& entries() const { return entries_; }

  friend bool operator==(const BottMatrix&, const BottMatrix&) = default;

 private:
  IntMatrix entries_;
};

BottMatrix bott_matrix(const GeneralizedCartanMatrix& gcm, const Word& word);

enum class Sign : std::uint8_t { plus, minus };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// The ray rho_i^± spanned by e_i^±.
struct RayId {
  int position = 1;
  Sign sign = Sign::plus;

  static RayId plus(int i) { return {i, Sign::plus}; }
  static RayId minus(int i) { return {i, Sign::minus}; }
  /// "3+" / "3-"; position must lie in 1..length.
  static RayId parse(std::string_view label, int length);

  std::string label() const { return std::to_string(position) + sign_char(sign); }
  RayId opposite() const { return {position, flip(sign)}; }

  friend auto operator<=>(const RayId&, const RayId&) = default;
};

/// A maximal cone: one sign per position. Stored as a bit mask of minus signs.
class SignVector {
 public:
  SignVector(int length, std::uint64_t minus_mask);
  static SignVector all_plus(int length) { return {length, 0}; }
  static SignVector all_minus(int length);

  int length() const { return length_; }
  std::uint64_t minus_mask() const { return minus_; }
  Sign operator[](int i) const;
  SignVector with(int i, Sign s) const;
  RayId ray(int i) const { return {i, (*this)[i]}; }

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  int length_;
  std::uint64_t minus_;
};

/// Number of maximal cones, 2^r.
std::uint64_t maximal_cone_count(int length);

/// Visits every sign vector by counter; nothing is materialized.
template <class Visitor>
void for_each_sign_vector(int length, Visitor&& visit) {
  const std::uint64_t count = maximal_cone_count(length);
  for (std::uint64_t mask = 0; mask < count; ++mask) visit(SignVector(length, mask));
}

using LatticePoint = std::vector<Int>;
using RayCoefficients = std::map<RayId, Int>;

LatticePoint ray_vector(const BottMatrix& m, RayId ray);

/// Matrix whose k-th column is the ray vector e_k^{eps_k}.
IntMatrix cone_matrix(const BottMatrix& m, const SignVector& cone);

/// Determinant of the cone's ray matrix (generic fraction-free elimination).
Int cone_determinant(const BottMatrix& m, const SignVector& cone);

/// Coordinates of v in the basis of the cone's rays (triangular solve).
/// Coefficients may be of any sign.
std::vector<Int> express_in_cone(const BottMatrix& m, const SignVector& cone, std::span<const Int> v);

/// Minimal cone containing v, with its strictly positive coefficients.
struct ConeLocation {
  RayCoefficients coeffs;

  std::vector<RayId> support() const;
  friend bool operator==(const ConeLocation&, const ConeLocation&) = default;
};

/// Back-substitution: walk positions upward, take e_i^+ or e_i^- by the sign of
/// the residual's i-th coordinate and subtract. O(r^2).
ConeLocation locate_point(const BottMatrix& m, std::span<const Int> v);

/// Brute-force oracle: solve v in every one of the 2^r maximal cones with a
/// generic exact inverse, keep cones with nonnegative coordinates, and check
/// that all of them agree on the positive part. Limited to kMaxOracleLength.
std::vector<ConeLocation> locate_points_exhaustive(const BottMatrix& m, const std::vector<LatticePoint>& points);
ConeLocation locate_point_exhaustive(const BottMatrix& m, std::span<const Int> v);

struct SmoothnessCertificate {
  bool unimodular = false;
  std::string method;  // "triangular" or "exhaustive"
  std::uint64_t cones_certified = 0;
};

/// Triangular method: checks the ray shape that forces det = ±1 on every cone.
/// Exhaustive method: computes all 2^r determinants (kMaxOracleLength cap).
SmoothnessCertificate certify_smoothness(const BottMatrix& m, bool exhaustive);

}  // namespace bott
