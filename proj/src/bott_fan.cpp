#include "bott/bott_fan.hpp"

#include <charconv>

namespace bott {

namespace {

void check_position(int length, int i) {
  if (i < 1 || i > length)
    throw InputError("position " + std::to_string(i) + " out of range 1.." + std::to_string(length));
}

void check_oracle_length(int length) {
  if (length > kMaxOracleLength)
    throw InputError("exhaustive oracle limited to words of length <= " + std::to_string(kMaxOracleLength) +
                     " (got " + std::to_string(length) + ")");
}

void check_point(const BottMatrix& m, std::span<const Int> v) {
  if (static_cast<int>(v.size()) != m.length())
    throw InputError("lattice point has " + std::to_string(v.size()) + " coordinates, expected " +
                     std::to_string(m.length()));
}

}  // namespace

BottMatrix::BottMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) throw InputError("bott matrix must be square");
  if (entries_.rows() > static_cast<std::size_t>(kMaxWordLength)) throw InputError("bott matrix too large");
  for (std::size_t i = 0; i < entries_.rows(); ++i)
    if (entries_(i, i) != 2) throw InputError("bott matrix diagonal must be 2");
}

Int BottMatrix::beta(int i, int j) const {
  check_position(length(), i);
  check_position(length(), j);
  return entries_(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
}

BottMatrix bott_matrix(const GeneralizedCartanMatrix& gcm, const Word& word) {
  const auto r = static_cast<std::size_t>(word.length());
  IntMatrix b(r, r);
  for (int i = 1; i <= word.length(); ++i)
    for (int j = 1; j <= word.length(); ++j) b(i - 1, j - 1) = pairing(gcm, word[i], word[j]);
  return BottMatrix(std::move(b));
}

RayId RayId::parse(std::string_view label, int length) {
  if (label.size() < 2 || (label.back() != '+' && label.back() != '-'))
    throw InputError("ray label '" + std::string(label) + "' must look like \"3+\" or \"3-\"");
  int position = 0;
  auto digits = label.substr(0, label.size() - 1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), position);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw InputError("ray label '" + std::string(label) + "' has a bad position");
  if (position < 1 || position > length)
    throw InputError("ray label '" + std::string(label) + "' names position " + std::to_string(position) +
                     ", outside 1.." + std::to_string(length));
  return {position, label.back() == '+' ? Sign::plus : Sign::minus};
}

SignVector::SignVector(int length, std::uint64_t minus_mask) : length_(length), minus_(minus_mask) {
  if (length < 1 || length > kMaxWordLength) throw InputError("sign vector length out of range");
  if (length < 64 && (minus_mask >> length) != 0) throw InputError("sign vector mask has stray bits");
}

SignVector SignVector::all_minus(int length) { return {length, maximal_cone_count(length) - 1}; }

Sign SignVector::operator[](int i) const {
  check_position(length_, i);
  return ((minus_ >> (i - 1)) & 1U) != 0 ? Sign::minus : Sign::plus;
}

SignVector SignVector::with(int i, Sign s) const {
  check_position(length_, i);
  const std::uint64_t bit = std::uint64_t{1} << (i - 1);
  return {length_, s == Sign::minus ? (minus_ | bit) : (minus_ & ~bit)};
}

std::uint64_t maximal_cone_count(int length) {
  if (length < 0 || length > kMaxWordLength) throw InputError("word length out of range");
  return std::uint64_t{1} << length;
}

LatticePoint ray_vector(const BottMatrix& m, RayId ray) {
  check_position(m.length(), ray.position);
  LatticePoint v(static_cast<std::size_t>(m.length()), 0);
  const int i = ray.position;
  if (ray.sign == Sign::plus) {
    v[i - 1] = 1;
    return v;
  }
  v[i - 1] = -1;
  for (int j = i + 1; j <= m.length(); ++j) v[j - 1] = checked_neg(m.beta(i, j));
  return v;
}

IntMatrix cone_matrix(const BottMatrix& m, const SignVector& cone) {
  const auto r = static_cast<std::size_t>(m.length());
  IntMatrix out(r, r);
  for (int k = 1; k <= m.length(); ++k) {
    const LatticePoint u = ray_vector(m, cone.ray(k));
    for (std::size_t row = 0; row < r; ++row) out(row, k - 1) = u[row];
  }
  return out;
}

Int cone_determinant(const BottMatrix& m, const SignVector& cone) { return determinant(cone_matrix(m, cone)); }

std::vector<Int> express_in_cone(const BottMatrix& m, const SignVector& cone, std::span<const Int> v) {
  check_point(m, v);
  std::vector<Int> residual(v.begin(), v.end());
  std::vector<Int> coeffs(residual.size(), 0);
  for (int i = 1; i <= m.length(); ++i) {
    const Int x = residual[i - 1];
    if (x == 0) continue;
    if (cone[i] == Sign::plus) {
      coeffs[i - 1] = x;
      residual[i - 1] = 0;
      continue;
    }
    // x = c * (-1) for the coefficient c of e_i^-.
    const Int c = checked_neg(x);
    coeffs[i - 1] = c;
    residual[i - 1] = 0;
    for (int k = i + 1; k <= m.length(); ++k)
      residual[k - 1] = checked_add(residual[k - 1], checked_mul(c, m.beta(i, k)));
  }
  return coeffs;
}

std::vector<RayId> ConeLocation::support() const {
  std::vector<RayId> out;
  out.reserve(coeffs.size());
  for (const auto& [ray, c] : coeffs) out.push_back(ray);
  return out;
}

ConeLocation locate_point(const BottMatrix& m, std::span<const Int> v) {
  check_point(m, v);
  std::vector<Int> residual(v.begin(), v.end());
  ConeLocation out;
  for (int i = 1; i <= m.length(); ++i) {
    const Int x = residual[i - 1];
    if (x == 0) continue;
    residual[i - 1] = 0;
    if (x > 0) {
      out.coeffs.emplace(RayId::plus(i), x);
      continue;
    }
    const Int c = checked_neg(x);
    out.coeffs.emplace(RayId::minus(i), c);
    for (int k = i + 1; k <= m.length(); ++k)
      residual[k - 1] = checked_add(residual[k - 1], checked_mul(c, m.beta(i, k)));
  }
  return out;
}

std::vector<ConeLocation> locate_points_exhaustive(const BottMatrix& m, const std::vector<LatticePoint>& points) {
  check_oracle_length(m.length());
  for (const auto& v : points) check_point(m, v);
  const int r = m.length();

  struct Found {
    bool any = false;
    ConeLocation location;
    std::uint64_t cones = 0;
  };
  std::vector<Found> found(points.size());

  for_each_sign_vector(r, [&](const SignVector& cone) {
    const auto inv = inverse(cone_matrix(m, cone));
    if (!inv) throw ConsistencyError("singular maximal cone in a complete smooth fan");
    IntMatrix inv_int(inv->rows(), inv->cols());
    for (std::size_t a = 0; a < inv->rows(); ++a)
      for (std::size_t b = 0; b < inv->cols(); ++b) {
        if (!(*inv)(a, b).is_integer()) throw ConsistencyError("cone inverse is not integral: fan is not smooth");
        inv_int(a, b) = (*inv)(a, b).num();
      }
    for (std::size_t p = 0; p < points.size(); ++p) {
      const std::vector<Int> x = multiply(inv_int, points[p]);
      bool inside = true;
      for (Int c : x) inside = inside && c >= 0;
      if (!inside) continue;
      ConeLocation loc;
      for (int k = 1; k <= r; ++k)
        if (x[k - 1] > 0) loc.coeffs.emplace(cone.ray(k), x[k - 1]);
      Found& f = found[p];
      if (f.any && !(f.location == loc))
        throw ConsistencyError("containing maximal cones disagree on the positive support");
      f.any = true;
      f.location = std::move(loc);
      ++f.cones;
    }
  });

  std::vector<ConeLocation> out;
  out.reserve(points.size());
  for (auto& f : found) {
    if (!f.any) throw ConsistencyError("point lies in no maximal cone: fan is not complete");
    // A point in the relative interior of a k-dimensional cone lies in exactly
    // 2^(r-k) maximal cones (free choice of sign at every unused position).
    if (f.cones != maximal_cone_count(r - static_cast<int>(f.location.coeffs.size())))
      throw ConsistencyError("unexpected number of maximal cones containing a point");
    out.push_back(std::move(f.location));
  }
  return out;
}

ConeLocation locate_point_exhaustive(const BottMatrix& m, std::span<const Int> v) {
  return locate_points_exhaustive(m, {LatticePoint(v.begin(), v.end())}).front();
}

SmoothnessCertificate certify_smoothness(const BottMatrix& m, bool exhaustive) {
  const int r = m.length();
  SmoothnessCertificate cert;
  if (!exhaustive) {
    cert.method = "triangular";
    bool ok = true;
    for (int i = 1; i <= r && ok; ++i) {
      for (Sign s : {Sign::plus, Sign::minus}) {
        const LatticePoint u = ray_vector(m, {i, s});
        for (int k = 1; k < i; ++k) ok = ok && u[k - 1] == 0;
        ok = ok && (u[i - 1] == 1 || u[i - 1] == -1);
      }
    }
    cert.unimodular = ok;
    cert.cones_certified = ok ? maximal_cone_count(r) : 0;
    return cert;
  }
  check_oracle_length(r);
  cert.method = "exhaustive";
  cert.unimodular = true;
  for_each_sign_vector(r, [&](const SignVector& cone) {
    const Int det = cone_determinant(m, cone);
    if (det == 1 || det == -1)
      ++cert.cones_certified;
    else
      cert.unimodular = false;
  });
  return cert;
}

}  // namespace bott
