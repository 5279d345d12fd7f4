#include "bott/curves.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace bott {

namespace {

void check_position(int length, int i) {
  if (i < 1 || i > length)
    throw InputError("position " + std::to_string(i) + " out of range 1.." + std::to_string(length));
}

std::string describe(const CurveClass& c) {
  std::string s = "{";
  for (const auto& [ray, v] : c.intersections) s += ray.label() + ":" + std::to_string(v) + " ";
  return s + "}";
}

}  // namespace

ToricDivisor ToricDivisor::anticanonical(int length) {
  ToricDivisor d;
  for (int i = 1; i <= length; ++i) {
    d.coeffs[RayId::plus(i)] = 1;
    d.coeffs[RayId::minus(i)] = 1;
  }
  return d;
}

Int PrimitiveRelation::anticanonical_degree() const {
  Int deg = 2;
  for (const auto& [ray, c] : gamma_rays) deg = checked_sub(deg, c);
  return deg;
}

PrimitiveRelation primitive_relation(const BottMatrix& m, int i) {
  check_position(m.length(), i);
  LatticePoint sum = ray_vector(m, RayId::plus(i));
  const LatticePoint minus = ray_vector(m, RayId::minus(i));
  for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = checked_add(sum[k], minus[k]);
  return {i, locate_point(m, sum).coeffs};
}

Wall Wall::from_rays(int length, std::vector<RayId> rays) {
  if (length < 1 || length > kMaxWordLength) throw InputError("wall length out of range");
  if (static_cast<int>(rays.size()) != length - 1)
    throw InputError("a wall needs exactly " + std::to_string(length - 1) + " rays, got " +
                     std::to_string(rays.size()));
  std::sort(rays.begin(), rays.end());
  std::vector<bool> used(static_cast<std::size_t>(length) + 1, false);
  for (const RayId& ray : rays) {
    check_position(length, ray.position);
    if (used[ray.position])
      throw InputError("wall uses position " + std::to_string(ray.position) +
                       " twice (a cone never contains both rays of a position)");
    used[ray.position] = true;
  }
  Wall w;
  w.length_ = length;
  w.rays_ = std::move(rays);
  for (int p = 1; p <= length; ++p)
    if (!used[p]) w.missing_ = p;
  return w;
}

Wall Wall::between(const SignVector& cone, int p) {
  check_position(cone.length(), p);
  std::vector<RayId> rays;
  for (int k = 1; k <= cone.length(); ++k)
    if (k != p) rays.push_back(cone.ray(k));
  return from_rays(cone.length(), std::move(rays));
}

SignVector Wall::cone(Sign at_missing) const {
  SignVector s = SignVector::all_plus(length_);
  for (const RayId& ray : rays_) s = s.with(ray.position, ray.sign);
  return s.with(missing_, at_missing);
}

Int CurveClass::canonical_degree() const {
  Int deg = 0;
  for (const auto& [ray, v] : intersections) deg = checked_sub(deg, v);
  return deg;
}

Rational intersect(const ToricDivisor& d, const CurveClass& c) {
  Rational total = 0;
  for (const auto& [ray, v] : c.intersections) total += d[ray] * Rational(v);
  return total;
}

bool satisfies_ray_relation(const BottMatrix& m, const CurveClass& c) {
  LatticePoint total(static_cast<std::size_t>(m.length()), 0);
  for (const auto& [ray, v] : c.intersections) {
    const LatticePoint u = ray_vector(m, ray);
    for (std::size_t k = 0; k < total.size(); ++k) total[k] = checked_add(total[k], checked_mul(v, u[k]));
  }
  return std::all_of(total.begin(), total.end(), [](Int x) { return x == 0; });
}

CurveClass wall_relation(const BottMatrix& m, const Wall& wall) {
  if (wall.length() != m.length()) throw InputError("wall does not match the word length");
  const int p = wall.missing_position();
  // sum_k b_k u_k = -(u_p^+ + u_p^-) = sum_{j>p} beta_pj e_j^+
  LatticePoint target(static_cast<std::size_t>(m.length()), 0);
  for (int j = p + 1; j <= m.length(); ++j) target[j - 1] = m.beta(p, j);

  const SignVector cone = wall.cone(Sign::plus);
  const std::vector<Int> b = express_in_cone(m, cone, target);
  if (b[p - 1] != 0) throw ConsistencyError("degenerate wall at position " + std::to_string(p));

  CurveClass c;
  c.intersections[wall.first()] = 1;
  c.intersections[wall.second()] = 1;
  for (const RayId& ray : wall.rays())
    if (b[ray.position - 1] != 0) c.intersections[ray] = b[ray.position - 1];
  return c;
}

CurveClass relation_class(const PrimitiveRelation& rel) {
  CurveClass c;
  c.intersections[RayId::plus(rel.position)] = 1;
  c.intersections[RayId::minus(rel.position)] = 1;
  for (const auto& [ray, coeff] : rel.gamma_rays) c.intersections[ray] = checked_neg(coeff);
  return c;
}

Int MoriIndexSet::a(int k, int j) const {
  for (const ATerm& t : trace)
    if (t.k == k && t.j == j) return t.value;
  throw InputError("a_{" + std::to_string(k) + "," + std::to_string(j) + "} was not computed");
}

MoriIndexSet mori_index_set(const BottMatrix& m, int i) {
  check_position(m.length(), i);
  const int r = m.length();
  MoriIndexSet out;
  out.position = i;
  out.indices.push_back(i);

  // current[j] holds a_{k,j} for j > j_k.
  std::vector<Int> current(static_cast<std::size_t>(r) + 1, 0);
  for (int j = i + 1; j <= r; ++j) {
    current[j] = m.beta(i, j);
    out.trace.push_back({1, j, current[j]});
  }

  for (int k = 2;; ++k) {
    const int prev = out.indices.back();
    int next = 0;
    for (int j = prev + 1; j <= r && next == 0; ++j) {
      const bool qualifies = k == 2 ? current[j] > 0 : current[j] < 0;
      if (qualifies) next = j;
    }
    if (next == 0) break;
    out.indices.push_back(next);
    const Int pivot = current[next];
    for (int j = next + 1; j <= r; ++j) {
      if (k == 2)
        current[j] = checked_sub(checked_mul(m.beta(i, next), m.beta(next, j)), m.beta(i, j));
      else
        current[j] = checked_add(checked_neg(checked_mul(pivot, m.beta(next, j))), current[j]);
      out.trace.push_back({k, j, current[j]});
    }
  }
  return out;
}

Wall mori_wall(const BottMatrix& m, const MoriIndexSet& set) {
  SignVector s = SignVector::all_plus(m.length());
  for (int l : set.indices)
    if (l != set.position) s = s.with(l, Sign::minus);
  return Wall::between(s, set.position);
}

SchubertLine schubert_line(const BottMatrix& m, int j) {
  check_position(m.length(), j);
  Wall w = Wall::between(SignVector::all_plus(m.length()), j);
  CurveClass c = wall_relation(m, w);
  return {std::move(w), std::move(c)};
}

Int schubert_canonical_degree_closed_form(const BottMatrix& m, int j) {
  check_position(m.length(), j);
  Int deg = -2;
  for (int k = j + 1; k <= m.length(); ++k) deg = checked_sub(deg, m.beta(j, k));
  return deg;
}

std::vector<CurveClass> mori_cone_basis(const BottMatrix& m) {
  std::vector<CurveClass> basis;
  basis.reserve(static_cast<std::size_t>(m.length()));
  for (int i = 1; i <= m.length(); ++i) {
    CurveClass from_wall = wall_relation(m, mori_wall(m, mori_index_set(m, i)));
    CurveClass from_relation = relation_class(primitive_relation(m, i));
    if (!(from_wall == from_relation))
      throw ConsistencyError("r(P_" + std::to_string(i) + ") differs: wall " + describe(from_wall) +
                             " vs primitive relation " + describe(from_relation));
    basis.push_back(std::move(from_wall));
  }
  return basis;
}

std::vector<Int> curve_in_basis(const BottMatrix& m, const std::vector<CurveClass>& basis, const CurveClass& c) {
  const int r = m.length();
  if (static_cast<int>(basis.size()) != r) throw InputError("basis has the wrong size");
  // basis[j][rho_i^+] is 1 on the diagonal and nonzero below it only.
  std::vector<Int> x(static_cast<std::size_t>(r), 0);
  for (int i = 1; i <= r; ++i) {
    Int rhs = c[RayId::plus(i)];
    for (int j = 1; j < i; ++j) rhs = checked_sub(rhs, checked_mul(basis[j - 1][RayId::plus(i)], x[j - 1]));
    if (basis[i - 1][RayId::plus(i)] != 1) throw ConsistencyError("basis pairing matrix is not unitriangular");
    x[i - 1] = rhs;
  }
  // Equality on D_{rho_i^+} forces numerical equality; verify on every ray.
  for (int i = 1; i <= r; ++i)
    for (Sign s : {Sign::plus, Sign::minus}) {
      const RayId ray{i, s};
      Int combined = 0;
      for (int j = 1; j <= r; ++j) combined = checked_add(combined, checked_mul(x[j - 1], basis[j - 1][ray]));
      if (combined != c[ray]) throw ConsistencyError("curve class is not a combination of the basis classes");
    }
  return x;
}

std::vector<Int> curve_in_basis(const BottMatrix& m, const Wall& wall) {
  return curve_in_basis(m, mori_cone_basis(m), wall_relation(m, wall));
}

std::vector<Wall> enumerate_walls(int length) {
  if (length > kMaxOracleLength)
    throw InputError("wall enumeration limited to words of length <= " + std::to_string(kMaxOracleLength));
  std::set<std::pair<int, std::uint64_t>> seen;
  std::vector<Wall> walls;
  for_each_sign_vector(length, [&](const SignVector& cone) {
    for (int p = 1; p <= length; ++p) {
      const std::uint64_t key = cone.with(p, Sign::plus).minus_mask();
      if (!seen.emplace(p, key).second) continue;
      walls.push_back(Wall::between(cone, p));
    }
  });
  return walls;
}

}  // namespace bott
