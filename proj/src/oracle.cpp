#include "bott/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace bott::oracle {

CurveClass wall_relation_generic(const BottMatrix& m, const Wall& wall) {
  const auto r = static_cast<std::size_t>(m.length());
  std::vector<RayId> basis{wall.first()};
  basis.insert(basis.end(), wall.rays().begin(), wall.rays().end());
  IntMatrix cols(r, r);
  for (std::size_t c = 0; c < r; ++c) {
    const LatticePoint u = ray_vector(m, basis[c]);
    for (std::size_t row = 0; row < r; ++row) cols(row, c) = u[row];
  }
  const LatticePoint ub = ray_vector(m, wall.second());
  const auto y = solve(cols, ub);
  if (!y) throw ConsistencyError("wall cone is singular");
  // u_b = -u_a - sum b_k u_k
  if (!((*y)[0] == Rational(-1))) throw ConsistencyError("wall relation does not give the completing rays weight 1");
  CurveClass c;
  c.intersections[wall.first()] = 1;
  c.intersections[wall.second()] = 1;
  for (std::size_t k = 1; k < r; ++k) {
    const Rational b = -(*y)[k];
    if (!b.is_integer()) throw ConsistencyError("non-integral wall relation");
    if (b.num() != 0) c.intersections[basis[k]] = b.num();
  }
  return c;
}

IntMatrix h_table_by_elimination(const BottMatrix& m) {
  const auto r = static_cast<std::size_t>(m.length());
  // div(chi^{e_k^*}) has coefficient (u_rho)_k on D_rho. Rows of `minus` are the
  // minus-ray vectors, so minus * mvec gives the D_{rho^-} coefficients.
  IntMatrix minus(r, r);
  for (std::size_t l = 0; l < r; ++l) {
    const LatticePoint u = ray_vector(m, RayId::minus(static_cast<int>(l) + 1));
    for (std::size_t k = 0; k < r; ++k) minus(l, k) = u[k];
  }
  IntMatrix h(r, r, 0);
  for (std::size_t j = 0; j < r; ++j) {
    // D_{rho_j^-} + sum_k mvec_k div(chi^{e_k^*}) must have no minus part.
    std::vector<Int> rhs(r, 0);
    rhs[j] = -1;
    const auto mvec = solve(minus, rhs);
    if (!mvec) throw ConsistencyError("minus rays are linearly dependent");
    // The plus part of div(chi^{e_k^*}) is D_{rho_k^+}.
    for (std::size_t i = 0; i < r; ++i) {
      if (!(*mvec)[i].is_integer()) throw ConsistencyError("non-integral divisor class");
      h(j, i) = (*mvec)[i].num();
    }
  }
  return h;
}

bool positive_on_all_walls(const BottMatrix& m, const ToricDivisor& d, bool strict) {
  for (const Wall& w : enumerate_walls(m.length())) {
    const int s = intersect(d, wall_relation_generic(m, w)).sign();
    if (strict ? s <= 0 : s < 0) return false;
  }
  return true;
}

GeneralizedCartanMatrix random_gcm(std::mt19937_64& rng, int rank, Int min_entry) {
  std::vector<std::vector<Int>> a(rank, std::vector<Int>(rank, 0));
  std::uniform_int_distribution<Int> entry(min_entry, -1);
  std::bernoulli_distribution connected(0.5);
  for (int p = 0; p < rank; ++p) {
    a[p][p] = 2;
    for (int q = p + 1; q < rank; ++q) {
      if (!connected(rng)) continue;
      a[p][q] = entry(rng);
      a[q][p] = entry(rng);
    }
  }
  return GeneralizedCartanMatrix::from_rows(a);
}

Word random_word(std::mt19937_64& rng, const GeneralizedCartanMatrix& gcm, int min_length, int max_length) {
  std::uniform_int_distribution<int> length(min_length, max_length);
  std::uniform_int_distribution<int> letter(1, gcm.rank());
  std::vector<int> letters(static_cast<std::size_t>(length(rng)));
  for (int& l : letters) l = letter(rng);
  return Word(gcm, std::move(letters));
}

ToricDivisor random_divisor(std::mt19937_64& rng, int length, Int bound) {
  std::uniform_int_distribution<Int> coeff(-bound, bound);
  ToricDivisor d;
  for (int i = 1; i <= length; ++i) {
    d.coeffs[RayId::plus(i)] = coeff(rng);
    d.coeffs[RayId::minus(i)] = coeff(rng);
  }
  return d;
}

std::vector<CheckTally> self_test(std::uint64_t seed, int cases, int max_length, int wall_limit) {
  std::mt19937_64 rng(seed);
  std::map<std::string, CheckTally> tallies;
  std::vector<std::string> order;

  const auto check = [&](const std::string& name, const std::function<bool()>& body) {
    auto [it, inserted] = tallies.try_emplace(name, CheckTally{name, 0, 0, {}});
    if (inserted) order.push_back(name);
    std::string why;
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (ok) {
      ++it->second.passed;
    } else {
      ++it->second.failed;
      if (it->second.first_failure.empty()) it->second.first_failure = why.empty() ? "mismatch" : why;
    }
  };

  std::uniform_int_distribution<int> rank_dist(1, 5);
  std::uniform_int_distribution<Int> coord(-20, 20);
  for (int n = 0; n < cases; ++n) {
    const GeneralizedCartanMatrix gcm = random_gcm(rng, rank_dist(rng));
    const Word word = random_word(rng, gcm, 1, max_length);
    const BottMatrix m = bott_matrix(gcm, word);
    const int r = m.length();

    check("locate_point fast == exhaustive", [&] {
      std::vector<LatticePoint> points;
      for (int i = 1; i <= r; ++i) {
        LatticePoint v = ray_vector(m, RayId::plus(i));
        const LatticePoint w = ray_vector(m, RayId::minus(i));
        for (int k = 0; k < r; ++k) v[k] += w[k];
        points.push_back(v);
      }
      for (int p = 0; p < 8; ++p) {
        LatticePoint v(static_cast<std::size_t>(r));
        for (Int& x : v) x = coord(rng);
        points.push_back(v);
      }
      const auto slow = locate_points_exhaustive(m, points);
      for (std::size_t p = 0; p < points.size(); ++p)
        if (!(locate_point(m, points[p]) == slow[p])) return false;
      return true;
    });

    check("all maximal cones unimodular", [&] { return certify_smoothness(m, true).unimodular; });

    check("primitive relation == index-set wall", [&] {
      mori_cone_basis(m);  // throws on mismatch
      for (int i = 1; i <= r; ++i) {
        const MoriIndexSet set = mori_index_set(m, i);
        std::vector<int> minus_positions;
        for (const auto& [ray, c] : primitive_relation(m, i).gamma_rays)
          if (ray.sign == Sign::minus) minus_positions.push_back(ray.position);
        if (!std::equal(minus_positions.begin(), minus_positions.end(), set.indices.begin() + 1, set.indices.end()))
          return false;
      }
      return true;
    });

    check("h_table == dual-basis elimination", [&] { return h_table(m) == h_table_by_elimination(m); });

    check("g-conversion preserves intersections", [&] {
      const auto basis = mori_cone_basis(m);
      for (int t = 0; t < 5; ++t) {
        const ToricDivisor d = random_divisor(rng, r, 5);
        const auto g = g_values(m, d);
        ToricDivisor converted;
        for (int i = 1; i <= r; ++i) converted.coeffs[RayId::plus(i)] = g[i - 1];
        for (const CurveClass& c : basis)
          if (!(intersect(d, c) == intersect(converted, c))) return false;
      }
      return true;
    });

    check("-K . r(P_i) == 2 - sum c", [&] {
      for (int i = 1; i <= r; ++i) {
        const PrimitiveRelation rel = primitive_relation(m, i);
        if (-relation_class(rel).canonical_degree() != rel.anticanonical_degree()) return false;
      }
      return true;
    });

    check("K . L_j closed form", [&] {
      for (int j = 1; j <= r; ++j)
        if (schubert_line(m, j).curve.canonical_degree() != schubert_canonical_degree_closed_form(m, j)) return false;
      return true;
    });

    check("condition I => condition II, condition I => Fano", [&] {
      const bool c1 = condition_I(m).holds;
      return (!c1 || condition_II(m).holds) && (!c1 || is_fano(m));
    });

    check("Fano <=> every extremal ray Mori", [&] {
      bool all = true;
      for (int i = 1; i <= r; ++i) all = all && is_mori_ray(m, i);
      return all == is_fano(m);
    });

    if (r <= wall_limit) {
      check("wall relation == generic solve, classes in Mori cone", [&] {
        const auto basis = mori_cone_basis(m);
        for (const Wall& w : enumerate_walls(r)) {
          const CurveClass c = wall_relation(m, w);
          if (!(c == wall_relation_generic(m, w)) || !satisfies_ray_relation(m, c)) return false;
          const auto x = curve_in_basis(m, basis, c);
          if (std::any_of(x.begin(), x.end(), [](Int v) { return v < 0; })) return false;
        }
        return true;
      });
      check("ample/nef via d_i == Kleiman on walls", [&] {
        const ToricDivisor k = ToricDivisor::anticanonical(r);
        const ToricDivisor d = random_divisor(rng, r, 3);
        return is_ample(m, k) == positive_on_all_walls(m, k, true) &&
               is_nef(m, k) == positive_on_all_walls(m, k, false) &&
               is_ample(m, d) == positive_on_all_walls(m, d, true) &&
               is_nef(m, d) == positive_on_all_walls(m, d, false);
      });
    }
  }

  std::vector<CheckTally> out;
  for (const auto& name : order) out.push_back(tallies.at(name));
  return out;
}

}  // namespace bott::oracle
