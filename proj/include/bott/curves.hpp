#pragma once

// Torus-invariant curves on the Bott-tower toric limit: primitive relations,
// walls and their relations, Schubert lines, and the Mori cone basis r(P_i).

#include <vector>

#include "bott/bott_fan.hpp"
#include "bott/divisor.hpp"

namespace bott {

/// u(rho_i^+) + u(rho_i^-) = sum c_rho u_rho, with the sum taken over the
/// minimal cone containing the left-hand side.
struct PrimitiveRelation {
  int position = 1;
  RayCoefficients gamma_rays;  // all c_rho > 0, all positions > position

  /// 2 - sum c_rho, which equals -K . r(P_i).
  Int anticanonical_degree() const;
};

PrimitiveRelation primitive_relation(const BottMatrix& m, int i);

/// A codimension-one cone: every position but one carries a ray. The two
/// maximal cones through it are completed by e_p^+ and e_p^- at the missing
/// position p.
class Wall {
 public:
  /// Validates r-1 rays at distinct positions of a word of the given length.
  static Wall from_rays(int length, std::vector<RayId> rays);
  /// Drops position p from a maximal cone.
  static Wall between(const SignVector& cone, int p);

  int length() const { return length_; }
  int missing_position() const { return missing_; }
  const std::vector<RayId>& rays() const { return rays_; }
  RayId first() const { return RayId::plus(missing_); }
  RayId second() const { return RayId::minus(missing_); }
  /// The maximal cone completed by the given sign at the missing position.
  SignVector cone(Sign at_missing) const;

  friend bool operator==(const Wall&, const Wall&) = default;

 private:
  int length_ = 0;
  int missing_ = 0;
  std::vector<RayId> rays_;  // sorted by position
};

/// The functional D_rho -> D_rho . C. Only nonzero entries are stored.
struct CurveClass {
  RayCoefficients intersections;

  Int operator[](RayId ray) const {
    auto it = intersections.find(ray);
    return it == intersections.end() ? 0 : it->second;
  }
  /// K . C = -sum_rho D_rho . C
  Int canonical_degree() const;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

Rational intersect(const ToricDivisor& d, const CurveClass& c);

/// sum_rho (D_rho . C) u_rho == 0 in the lattice.
bool satisfies_ray_relation(const BottMatrix& m, const CurveClass& c);

/// Class of V(tau) from the wall relation u_a + sum b_k u_k + u_b = 0.
CurveClass wall_relation(const BottMatrix& m, const Wall& wall);

/// {rho_i^±: 1, gamma rays: -c_rho}
CurveClass relation_class(const PrimitiveRelation& rel);

struct ATerm {
  int k;
  int j;
  Int value;
  friend bool operator==(const ATerm&, const ATerm&) = default;
};

/// Index set {i = j_1 < j_2 < ... < j_m}. j_2 is the least j with a_{1,j} > 0,
/// later j_k the least j with a_{k-1,j} < 0. Every computed a_{k,j} is kept.
struct MoriIndexSet {
  int position = 1;
  std::vector<int> indices;
  std::vector<ATerm> trace;

  /// Looks up a_{k,j}; throws if it was never computed.
  Int a(int k, int j) const;
};

MoriIndexSet mori_index_set(const BottMatrix& m, int i);

/// The wall whose curve is L_{I_i}: sign - on the positions of I_i other than i,
/// + elsewhere, position i dropped.
Wall mori_wall(const BottMatrix& m, const MoriIndexSet& set);

struct SchubertLine {
  Wall wall;
  CurveClass curve;
};

/// L_j: the all-plus cone with position j dropped.
SchubertLine schubert_line(const BottMatrix& m, int j);

/// -2 - sum_{k>j} beta_jk
Int schubert_canonical_degree_closed_form(const BottMatrix& m, int j);

/// r(P_1) .. r(P_r) computed from the index-set walls. Each class is checked
/// against the primitive relation; a mismatch raises ConsistencyError.
std::vector<CurveClass> mori_cone_basis(const BottMatrix& m);

/// Coordinates of a curve class in the basis r(P_i), found by pairing with the
/// divisors D_{rho_i^+} (a basis of the Picard group).
std::vector<Int> curve_in_basis(const BottMatrix& m, const std::vector<CurveClass>& basis, const CurveClass& c);
std::vector<Int> curve_in_basis(const BottMatrix& m, const Wall& wall);

/// All r * 2^(r-1) walls, found by dropping each ray of each maximal cone and
/// deduplicating. Limited to kMaxOracleLength.
std::vector<Wall> enumerate_walls(int length);

}  // namespace bott
