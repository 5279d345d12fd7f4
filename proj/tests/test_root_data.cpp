#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bott/oracle.hpp"
#include "bott/root_data.hpp"

using namespace bott;

namespace {

Root root(std::vector<Int> c) { return Root{std::move(c)}; }
Coroot coroot(std::vector<Int> c) { return Coroot{std::move(c)}; }

// Type A_n Weyl group as permutations of {0..n}. A root e_a - e_b is stored as
// the ordered pair (a, b); simple root alpha_p = e_{p-1} - e_p (0-based).
struct PermRoot {
  int a;
  int b;
};

PermRoot act(int p, PermRoot x) {
  const auto swap = [p](int v) { return v == p - 1 ? p : (v == p ? p - 1 : v); };
  return {swap(x.a), swap(x.b)};
}

Root to_simple_basis(int n, PermRoot x) {
  Root out{std::vector<Int>(static_cast<std::size_t>(n), 0)};
  const int lo = std::min(x.a, x.b);
  const int hi = std::max(x.a, x.b);
  const Int sign = x.a < x.b ? 1 : -1;
  for (int k = lo; k < hi; ++k) out.coeffs[k] = sign;  // e_lo - e_hi = alpha_{lo+1} + ... + alpha_hi
  return out;
}

// A word is reduced iff its length equals the inversion count of the product.
bool is_reduced(int n, const std::vector<int>& letters) {
  std::vector<int> perm(static_cast<std::size_t>(n) + 1);
  std::iota(perm.begin(), perm.end(), 0);
  for (int p : letters) std::swap(perm[p - 1], perm[p]);
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  return inversions == static_cast<int>(letters.size());
}

}  // namespace

TEST_CASE("builtin Cartan matrices") {
  const auto a4 = builtin_cartan(CartanFamily::A, 4);
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; q <= 4; ++q) CHECK(a4(p, q) == (p == q ? 2 : (std::abs(p - q) == 1 ? -1 : 0)));

  const auto b2 = builtin_cartan(CartanFamily::B, 2);
  CHECK(b2(2, 1) == -2);
  CHECK(b2(1, 2) == -1);

  const auto g2 = builtin_cartan(CartanFamily::G2, 2);
  CHECK(g2(2, 1) == -1);
  CHECK(g2(1, 2) == -3);

  const auto c3 = builtin_cartan(CartanFamily::C, 3);
  CHECK(c3(2, 3) == -2);
  CHECK(c3(3, 2) == -1);

  const auto d4 = builtin_cartan(CartanFamily::D, 4);
  CHECK(d4(2, 4) == -1);
  CHECK(d4(3, 4) == 0);

  CHECK_THROWS_AS(builtin_cartan(CartanFamily::G2, 3), InputError);
  CHECK_THROWS_AS(builtin_cartan(CartanFamily::B, 1), InputError);
  CHECK_THROWS_AS(builtin_cartan(CartanFamily::D, 3), InputError);
  CHECK_THROWS_AS(builtin_cartan(CartanFamily::A, 0), InputError);
  CHECK_THROWS_AS(parse_family("E"), InputError);
}

TEST_CASE("pairing") {
  const auto a4 = builtin_cartan(CartanFamily::A, 4);
  CHECK(pairing(a4, 2, 1) == -1);
  CHECK(pairing(a4, 3, 3) == 2);
  CHECK(pairing(builtin_cartan(CartanFamily::B, 2), 2, 1) == -2);
  CHECK_THROWS_AS(pairing(a4, 5, 1), InputError);
  CHECK_THROWS_AS(pairing(a4, 0, 1), InputError);
}

TEST_CASE("user Cartan matrices are validated") {
  CHECK_NOTHROW(GeneralizedCartanMatrix::from_rows({{2, -3}, {-5, 2}}));
  CHECK_THROWS_AS(GeneralizedCartanMatrix::from_rows({{2, -1}, {0, 2}}), InputError);
  CHECK_THROWS_AS(GeneralizedCartanMatrix::from_rows({{1, 0}, {0, 2}}), InputError);
  CHECK_THROWS_AS(GeneralizedCartanMatrix::from_rows({{2, 1}, {1, 2}}), InputError);
  CHECK_THROWS_AS(GeneralizedCartanMatrix::from_rows({{2, -1}}), InputError);
  CHECK_THROWS_AS(GeneralizedCartanMatrix::from_rows({}), InputError);
}

TEST_CASE("words") {
  const auto a2 = builtin_cartan(CartanFamily::A, 2);
  CHECK(Word(a2, {1, 2, 1})[3] == 1);
  CHECK_THROWS_AS(Word(a2, {}), InputError);
  CHECK_THROWS_AS(Word(a2, {1, 3}), InputError);
  CHECK_THROWS_AS(Word(a2, std::vector<int>(63, 1)), InputError);
  CHECK_NOTHROW(Word(a2, std::vector<int>(62, 1)));
}

TEST_CASE("root and coroot reflections") {
  const auto a4 = builtin_cartan(CartanFamily::A, 4);
  const auto b2 = builtin_cartan(CartanFamily::B, 2);

  for (int p = 1; p <= 4; ++p) {
    Root neg = Root::simple(4, p);
    for (Int& c : neg.coeffs) c = -c;
    CHECK(reflect_root(a4, p, Root::simple(4, p)) == neg);
  }
  CHECK(reflect_root(a4, 2, Root::simple(4, 1)) == root({1, 1, 0, 0}));
  CHECK(reflect_root(b2, 2, Root::simple(2, 1)) == root({1, 2}));
  CHECK(reflect_coroot(a4, 2, Coroot::simple(4, 1)) == coroot({1, 1, 0, 0}));
  CHECK(reflect_coroot(b2, 2, Coroot::simple(2, 1)) == coroot({1, 1}));
  CHECK(reflect_coroot(b2, 1, Coroot::simple(2, 1)) == coroot({-1, 0}));

  // Matrix action: s_p = I - E_p A_p (row p of A in column p) on coefficient vectors.
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Int> coeff(-6, 6);
  for (int t = 0; t < 200; ++t) {
    const auto gcm = oracle::random_gcm(rng, 4);
    const int p = 1 + static_cast<int>(rng() % 4);
    Root beta{std::vector<Int>(4)};
    for (Int& c : beta.coeffs) c = coeff(rng);
    Root expected = beta;
    for (int q = 1; q <= 4; ++q) expected.coeffs[p - 1] -= gcm(p, q) * beta.coeffs[q - 1];
    REQUIRE(reflect_root(gcm, p, beta) == expected);
    REQUIRE(reflect_root(gcm, p, reflect_root(gcm, p, beta)) == beta);
    Coroot cb{beta.coeffs};
    REQUIRE(reflect_coroot(gcm, p, reflect_coroot(gcm, p, cb)) == cb);
  }
}

TEST_CASE("height") {
  CHECK(height(Root::simple(3, 1)) == 1);
  CHECK(height(root({1, 1, 0})) == 2);
  CHECK(height(root({-1, 0, 0})) == -1);
  CHECK(height(coroot({2, 3})) == 5);
}

TEST_CASE("gamma data examples") {
  const auto a3 = builtin_cartan(CartanFamily::A, 3);
  const auto g = gamma_data(a3, Word(a3, {1, 2}));
  REQUIRE(g.size() == 2);
  CHECK(g[0].gamma == root({1, 1, 0}));
  CHECK(g[0].b == 2);
  CHECK(g[1].gamma == root({0, 1, 0}));
  CHECK(g[1].b == 1);

  const auto single = gamma_data(a3, Word(a3, {3}));
  CHECK(single[0].gamma == Root::simple(3, 3));
  CHECK(single[0].b == 1);

  const auto b2 = builtin_cartan(CartanFamily::B, 2);
  const auto gb = gamma_data(b2, Word(b2, {1, 2}));
  CHECK(gb[0].coroot == coroot({1, 1}));
  CHECK(gb[0].b == 2);
  CHECK(gb[0].gamma == root({1, 2}));  // root height 3 differs from the coroot height
}

TEST_CASE("simply-laced: root and coroot heights agree") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    // Symmetric random GCM.
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n, 0));
    for (int p = 0; p < n; ++p) {
      a[p][p] = 2;
      for (int q = p + 1; q < n; ++q)
        if (rng() % 2) a[p][q] = a[q][p] = -static_cast<Int>(1 + rng() % 3);
    }
    const auto gcm = GeneralizedCartanMatrix::from_rows(a);
    const Word w = oracle::random_word(rng, gcm, 1, 8);
    for (const auto& d : gamma_data(gcm, w)) REQUIRE(height(d.gamma) == d.b);
  }
}

TEST_CASE("reduced type-A words give positive gamma (Weyl group oracle)") {
  std::mt19937_64 rng(3);
  int reduced_seen = 0;
  for (int t = 0; t < 3000; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);  // A2..A5
    const int len = 1 + static_cast<int>(rng() % 6);
    std::vector<int> letters(static_cast<std::size_t>(len));
    for (int& l : letters) l = 1 + static_cast<int>(rng() % n);
    if (!is_reduced(n, letters)) continue;
    ++reduced_seen;
    const auto gcm = builtin_cartan(CartanFamily::A, n);
    const auto data = gamma_data(gcm, Word(gcm, letters));
    for (int i = 0; i < len; ++i) {
      PermRoot x{letters[i] - 1, letters[i]};
      for (int k = i + 1; k < len; ++k) x = act(letters[k], x);
      REQUIRE(data[i].gamma == to_simple_basis(n, x));
      REQUIRE(data[i].b >= 1);
    }
  }
  CHECK(reduced_seen > 500);
}

TEST_CASE("zero pattern symmetric for builtin and fuzzed matrices") {
  std::vector<GeneralizedCartanMatrix> all = {
      builtin_cartan(CartanFamily::A, 5), builtin_cartan(CartanFamily::B, 4), builtin_cartan(CartanFamily::C, 4),
      builtin_cartan(CartanFamily::D, 5), builtin_cartan(CartanFamily::G2, 2)};
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) all.push_back(oracle::random_gcm(rng, 5));
  for (const auto& g : all)
    for (int p = 1; p <= g.rank(); ++p)
      for (int q = 1; q <= g.rank(); ++q) CHECK((pairing(g, p, q) == 0) == (pairing(g, q, p) == 0));
}
