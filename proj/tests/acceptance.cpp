// Acceptance run: prints one PASS/FAIL line per criterion and exits nonzero if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bott/oracle.hpp"
#include "cli.hpp"
#include "schema_check.hpp"

using namespace bott;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::string str(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

BottMatrix of(CartanFamily f, int rank, std::vector<int> letters) {
  const auto gcm = builtin_cartan(f, rank);
  return bott_matrix(gcm, Word(gcm, std::move(letters)));
}

struct FuzzCase {
  GeneralizedCartanMatrix gcm;
  Word word;
  BottMatrix m;
};

std::vector<FuzzCase> make_cases(std::uint64_t seed, int count, int max_length) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> rank(1, 5);
  std::vector<FuzzCase> out;
  for (int n = 0; n < count; ++n) {
    auto gcm = oracle::random_gcm(rng, rank(rng), -4);
    Word w = oracle::random_word(rng, gcm, 1, max_length);
    BottMatrix m = bott_matrix(gcm, w);
    out.push_back({std::move(gcm), std::move(w), std::move(m)});
  }
  return out;
}

std::string where(const FuzzCase& c) {
  std::ostringstream os;
  os << "cartan [";
  for (const auto& row : c.gcm.rows()) {
    os << "[";
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << row[k];
    os << "]";
  }
  os << "] word (";
  for (int i = 1; i <= c.word.length(); ++i) os << (i > 1 ? "," : "") << c.word[i];
  return os.str() + ")";
}

// ------------------------------------------------------------------ criteria

std::string golden_example() {
  const BottMatrix m = of(CartanFamily::A, 4, {2, 1, 3, 1, 2, 1, 2});
  const std::vector<Int> row{-1, -1, -1, 2, -1, 2};
  for (int j = 2; j <= 7; ++j) expect(m.beta(1, j) == row[j - 2], "beta_1" + std::to_string(j));
  const MoriIndexSet s = mori_index_set(m, 1);
  expect(s.a(1, 5) == 2, "a_{1,5}");
  expect(s.a(2, 6) == -1, "a_{2,6}");
  expect(s.a(2, 7) == 2, "a_{2,7}");
  expect(s.a(3, 7) == 1, "a_{3,7}");
  expect(s.indices == std::vector<int>{1, 5, 6}, "index set");
  return "beta row (-1,-1,-1,2,-1,2), a-values 2,-1,2,1, index set {1,5,6}";
}

std::string classification_fixtures() {
  const auto k = ToricDivisor::anticanonical(2);
  const BottMatrix b12 = of(CartanFamily::B, 2, {1, 2});
  expect(condition_I(b12).holds && is_ample(b12, k), "B2 (1,2)");
  const BottMatrix b21 = of(CartanFamily::B, 2, {2, 1});
  expect(condition_II(b21).holds && !condition_I(b21).holds && is_nef(b21, k) && !is_ample(b21, k), "B2 (2,1)");
  const BottMatrix g21 = of(CartanFamily::G2, 2, {2, 1});
  expect(condition_I(g21).holds && is_ample(g21, k), "G2 (2,1)");
  const BottMatrix g12 = of(CartanFamily::G2, 2, {1, 2});
  expect(!is_nef(g12, k), "G2 (1,2)");
  const BottMatrix a11 = of(CartanFamily::A, 3, {1, 1});
  expect(!condition_I(a11).holds && is_nef(a11, k) && !is_ample(a11, k), "A3 (1,1)");
  return "B2 (1,2), B2 (2,1), G2 (2,1), G2 (1,2), A3 (1,1)";
}

std::string discrepancy_fixtures() {
  const auto a3 = builtin_cartan(CartanFamily::A, 3);
  const auto has = [](const ClassificationReport& r, const std::string& text) {
    return std::any_of(r.discrepancies.begin(), r.discrepancies.end(),
                       [&](const Discrepancy& d) { return d.claim.find(text) != std::string::npos; });
  };
  const auto f2 = consistency_report(a3, Word(a3, {1, 1}));
  expect(!f2.condition_II.holds && f2.weak_fano, "word (1,1) values");
  expect(has(f2, "condition II"), "word (1,1) not flagged");
  const auto w121 = consistency_report(a3, Word(a3, {1, 2, 1}));
  expect(!w121.weak_fano && w121.d_values[0] == Rational(-1), "word (1,2,1) values");
  expect(has(w121, "(1,2,1)") && has(w121, "weak Fano"), "word (1,2,1) not flagged");
  return "(1,1): condition II false, weak Fano true, flagged; A3 (1,2,1): d = " + str(w121.d_values) +
         ", published weak Fano claim flagged";
}

std::string oracle_equivalence(const std::vector<FuzzCase>& cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<Int> coord(-20, 20);
  std::size_t points = 0, relations = 0;
  for (const FuzzCase& c : cases) {
    const BottMatrix& m = c.m;
    const int r = m.length();
    std::vector<LatticePoint> batch;
    for (int p = 0; p < 3; ++p) {
      LatticePoint v(static_cast<std::size_t>(r));
      for (Int& x : v) x = coord(rng);
      batch.push_back(v);
    }
    for (int i = 1; i <= r; ++i) {
      LatticePoint v = ray_vector(m, RayId::plus(i));
      const LatticePoint w = ray_vector(m, RayId::minus(i));
      for (int k = 0; k < r; ++k) v[k] += w[k];
      batch.push_back(v);
    }
    const auto slow = locate_points_exhaustive(m, batch);
    for (std::size_t p = 0; p < batch.size(); ++p)
      expect(locate_point(m, batch[p]) == slow[p], "locate_point mismatch on " + where(c));
    points += batch.size();

    for (int i = 1; i <= r; ++i) {
      const PrimitiveRelation rel = primitive_relation(m, i);
      const MoriIndexSet set = mori_index_set(m, i);
      std::vector<int> minus_positions;
      for (const auto& [ray, coeff] : rel.gamma_rays)
        if (ray.sign == Sign::minus) minus_positions.push_back(ray.position);
      expect(std::vector<int>(set.indices.begin() + 1, set.indices.end()) == minus_positions,
             "index set vs primitive relation on " + where(c) + " at " + std::to_string(i));
      expect(wall_relation(m, mori_wall(m, set)) == relation_class(rel),
             "r(P_i) routes differ on " + where(c) + " at " + std::to_string(i));
      ++relations;
    }
    expect(h_table(m) == oracle::h_table_by_elimination(m), "h table mismatch on " + where(c));
  }
  return std::to_string(cases.size()) + " words, " + std::to_string(points) + " points located, " +
         std::to_string(relations) + " primitive relations";
}

std::string smoothness(const std::vector<FuzzCase>& cases) {
  std::uint64_t cones = 0;
  for (const FuzzCase& c : cases) {
    const auto cert = certify_smoothness(c.m, true);
    expect(cert.unimodular, "non-unimodular cone on " + where(c));
    cones += cert.cones_certified;
  }
  return std::to_string(cones) + " maximal cones, all |det| = 1";
}

std::string intersection_identities(const std::vector<FuzzCase>& cases, std::uint64_t seed, int wall_limit) {
  std::mt19937_64 rng(seed + 6);
  std::size_t words = 0, walls = 0;
  for (const FuzzCase& c : cases) {
    const BottMatrix& m = c.m;
    const int r = m.length();
    if (r > wall_limit) continue;
    ++words;
    bool all_mori = true;
    for (int i = 1; i <= r; ++i) {
      const PrimitiveRelation rel = primitive_relation(m, i);
      const CurveClass cls = relation_class(rel);
      expect(-cls.canonical_degree() == rel.anticanonical_degree(), "degree identity on " + where(c));
      expect(is_mori_ray(m, i) == (cls.canonical_degree() < 0), "Mori-ray criterion on " + where(c));
      all_mori = all_mori && is_mori_ray(m, i);
    }
    expect(is_fano(m) == all_mori, "Fano vs Mori rays on " + where(c));
    for (int j = 1; j <= r; ++j) {
      const SchubertLine l = schubert_line(m, j);
      expect(l.curve == oracle::wall_relation_generic(m, l.wall), "Schubert wall relation on " + where(c));
      expect(l.curve.canonical_degree() == schubert_canonical_degree_closed_form(m, j), "K.L_j on " + where(c));
    }
    std::vector<ToricDivisor> divisors{ToricDivisor::anticanonical(r)};
    for (int n = 0; n < 3; ++n) divisors.push_back(oracle::random_divisor(rng, r, 2));
    for (const ToricDivisor& d : divisors) {
      expect(is_ample(m, d) == oracle::positive_on_all_walls(m, d, true), "ample vs walls on " + where(c));
      expect(is_nef(m, d) == oracle::positive_on_all_walls(m, d, false), "nef vs walls on " + where(c));
    }
    const auto basis = mori_cone_basis(m);
    for (const Wall& w : enumerate_walls(r)) {
      const CurveClass cls = wall_relation(m, w);
      expect(cls == oracle::wall_relation_generic(m, w), "wall relation on " + where(c));
      const auto x = curve_in_basis(m, basis, cls);
      expect(std::all_of(x.begin(), x.end(), [](Int v) { return v >= 0; }), "wall outside Mori cone on " + where(c));
      ++walls;
    }
  }
  return std::to_string(words) + " words with r <= " + std::to_string(wall_limit) + ", " + std::to_string(walls) +
         " walls";
}

std::string divisor_conversion(const std::vector<FuzzCase>& cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 7);
  std::size_t checked = 0;
  for (const FuzzCase& c : cases) {
    const BottMatrix& m = c.m;
    const int r = m.length();
    const auto basis = mori_cone_basis(m);
    for (int n = 0; n < 200; ++n) {
      const ToricDivisor d = oracle::random_divisor(rng, r, 10);
      const auto g = g_values(m, d);
      ToricDivisor converted;
      for (int i = 1; i <= r; ++i) converted.coeffs[RayId::plus(i)] = g[i - 1];
      for (const CurveClass& cls : basis)
        expect(intersect(d, cls) == intersect(converted, cls), "g conversion on " + where(c));
      ++checked;
    }
  }
  return std::to_string(checked) + " divisors";
}

std::string log_fano_fixtures() {
  const auto a3 = builtin_cartan(CartanFamily::A, 3);
  const auto res = log_fano(a3, Word(a3, {1, 2}), {Rational(0), Rational(0)});
  expect(res.b == std::vector<Int>{2, 1}, "b for A3 (1,2)");
  expect(res.f == std::vector<Rational>{Rational(1), Rational(2)}, "f for A3 (1,2)");
  expect(res.log_fano, "A3 (1,2) verdict");
  for (int r = 1; r <= 6; ++r) {
    const auto ar = builtin_cartan(CartanFamily::A, 2 * r);
    std::vector<int> letters;
    for (int i = 0; i < r; ++i) letters.push_back(2 * i + 1);
    const auto p = log_fano(ar, Word(ar, letters), std::vector<Rational>(static_cast<std::size_t>(r), Rational(0)));
    expect(std::all_of(p.f.begin(), p.f.end(), [](const Rational& f) { return f == Rational(2); }) && p.log_fano,
           "product of " + std::to_string(r) + " lines");
  }
  return "A3 (1,2): b = (2,1), f = " + str(res.f) + ", log Fano; (P1)^r for r <= 6: f_i = 2";
}

std::string cli_conformance() {
  struct Fixture {
    const char* command;
    const char* name;
  };
  for (const Fixture& f : {Fixture{"classify", "classify_b2_21"}, Fixture{"mori", "mori_a4_example"},
                           Fixture{"fan", "fan_a3_1"}}) {
    const std::string input = std::string(BOTT_FIXTURE_DIR) + "/" + f.name + ".json";
    std::ifstream golden_file(std::string(BOTT_GOLDEN_DIR) + "/" + f.name + ".json");
    std::stringstream golden;
    golden << golden_file.rdbuf();
    const auto run = [&](bool oracle) {
      std::vector<std::string> args{"--command", f.command, "--format", "json", "--sorted-keys", "--input", input};
      if (oracle) args.push_back("--oracle");
      std::istringstream in;
      std::ostringstream out, err;
      expect(cli::run(args, in, out, err) == 0, std::string(f.name) + ": " + err.str());
      return out.str();
    };
    const std::string first = run(false);
    expect(first == golden.str(), std::string(f.name) + " differs from golden output");
    expect(run(false) == first, std::string(f.name) + " is not stable across runs");
    const auto doc = nlohmann::json::parse(first);
    const auto schema = schema_check::load(std::string(BOTT_SCHEMA_DIR) + "/" +
                                           schema_check::schema_name_for(f.command) + ".schema.json");
    if (auto e = schema_check::validate(doc, schema)) throw Failure(std::string(f.name) + ": " + *e);
    auto with_oracle = nlohmann::json::parse(run(true));
    expect(with_oracle["oracle"]["agrees"] == true, std::string(f.name) + " oracle disagrees");
    with_oracle.erase("oracle");
    expect(with_oracle == doc, std::string(f.name) + " oracle output differs from fast path");
  }
  return "classify B2 (2,1), mori A4 golden word, fan A3 (1): golden, schema-valid, oracle agrees";
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 20240601;
  int cases = 500;
  int max_length = 10;
  int wall_limit = 7;
  CLI::App app{"Acceptance criteria"};
  app.add_option("--seed", seed)->capture_default_str();
  app.add_option("--cases", cases)->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--max-length", max_length)->check(CLI::Range(1, kMaxOracleLength))->capture_default_str();
  app.add_option("--wall-limit", wall_limit)->check(CLI::Range(1, kMaxOracleLength))->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  const auto fuzz = make_cases(seed, cases, max_length);

  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"golden rank-4 example", golden_example},
      {"rank-two classification fixtures", classification_fixtures},
      {"documented discrepancies reported", discrepancy_fixtures},
      {"oracle equivalence", [&] { return oracle_equivalence(fuzz, seed); }},
      {"smoothness", [&] { return smoothness(fuzz); }},
      {"intersection identities", [&] { return intersection_identities(fuzz, seed, wall_limit); }},
      {"divisor conversion", [&] { return divisor_conversion(fuzz, seed); }},
      {"log-Fano fixtures", log_fano_fixtures},
      {"CLI conformance", cli_conformance},
  };

  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = criteria[n].second();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << (n + 1) << ". " << criteria[n].first << " [" << detail << "] ("
              << std::fixed << std::setprecision(2) << secs << " s)\n";
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << " (seed "
            << seed << ", " << cases << " cases, " << std::fixed << std::setprecision(2) << total << " s)\n";
  return failed == 0 ? 0 : 1;
}
