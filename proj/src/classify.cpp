#include "bott/classify.hpp"

#include <algorithm>

namespace bott {

namespace {

std::string pos(int i) { return std::to_string(i); }

// beta_mk = 0 for all k > m
bool row_tail_zero(const BottMatrix& m, int row, int after) {
  for (int k = after + 1; k <= m.length(); ++k)
    if (m.beta(row, k) != 0) return false;
  return true;
}

std::string yes_no(bool v) { return v ? "true" : "false"; }

}  // namespace

EtaSets eta_sets(const BottMatrix& m, int i) {
  EtaSets eta;
  for (int j = i + 1; j <= m.length(); ++j) {
    const Int b = m.beta(i, j);
    if (b > 0) eta.plus.push_back(j);
    if (b < 0) eta.minus.push_back(j);
  }
  return eta;
}

std::optional<std::string> check_n1(const BottMatrix& m, int i) {
  const EtaSets eta = eta_sets(m, i);
  const bool clause_i = eta.plus.empty() && eta.minus.size() <= 1 &&
                        (eta.minus.size() != 1 || m.beta(i, eta.minus[0]) == -1);
  if (clause_i) return std::nullopt;
  const bool clause_ii =
      eta.minus.empty() && eta.plus.size() <= 1 &&
      (eta.plus.size() != 1 || (m.beta(i, eta.plus[0]) == 1 && row_tail_zero(m, eta.plus[0], eta.plus[0])));
  if (clause_ii) return std::nullopt;

  if (!eta.plus.empty() && !eta.minus.empty()) return "N1: both eta+ and eta- are nonempty";
  if (eta.plus.empty()) {
    if (eta.minus.size() > 1) return "N1(i): |eta-| = " + std::to_string(eta.minus.size()) + " > 1";
    return "N1(i): beta_" + pos(i) + "," + pos(eta.minus[0]) + " = " +
           std::to_string(m.beta(i, eta.minus[0])) + " != -1";
  }
  if (eta.plus.size() > 1) return "N1(ii): |eta+| = " + std::to_string(eta.plus.size()) + " > 1";
  const int mm = eta.plus[0];
  if (m.beta(i, mm) != 1)
    return "N1(ii): beta_" + pos(i) + "," + pos(mm) + " = " + std::to_string(m.beta(i, mm)) + " != 1";
  return "N1(ii): beta_" + pos(mm) + ",k != 0 for some k > " + pos(mm);
}

std::optional<std::string> check_n2(const BottMatrix& m, int i) {
  const EtaSets eta = eta_sets(m, i);
  const int r = m.length();

  if (eta.plus.empty()) {
    // Case 1; the single-element clause is read as beta_il.
    if (eta.minus.size() > 2) return "N2 case 1: |eta-| = " + std::to_string(eta.minus.size()) + " > 2";
    if (eta.minus.size() == 1) {
      const Int b = m.beta(i, eta.minus[0]);
      if (b != -1 && b != -2)
        return "N2 case 1: beta_" + pos(i) + "," + pos(eta.minus[0]) + " = " + std::to_string(b) +
               " is not -1 or -2";
    }
    if (eta.minus.size() == 2 && (m.beta(i, eta.minus[0]) != -1 || m.beta(i, eta.minus[1]) != -1))
      return "N2 case 1: |eta-| = 2 but beta_" + pos(i) + "," + pos(eta.minus[0]) + " = " +
             std::to_string(m.beta(i, eta.minus[0])) + ", beta_" + pos(i) + "," + pos(eta.minus[1]) + " = " +
             std::to_string(m.beta(i, eta.minus[1]));
    return std::nullopt;
  }

  if (eta.plus.size() > 1) return "N2: |eta+| = " + std::to_string(eta.plus.size()) + " > 1";

  // Case 3, |eta+| = 1.
  const int mm = eta.plus[0];
  if (m.beta(i, mm) != 1)
    return "N2 case 3: beta_" + pos(i) + "," + pos(mm) + " = " + std::to_string(m.beta(i, mm)) + " != 1";

  const bool case2 = eta.minus.size() == 1 && eta.minus[0] < mm && m.beta(i, eta.minus[0]) == -1 &&
                     row_tail_zero(m, mm, mm);
  if (case2) return std::nullopt;

  const bool sub_ii = eta.minus.empty() && row_tail_zero(m, mm, mm);
  if (sub_ii) return std::nullopt;

  // (iii), verbatim including the mixed s/k indices in the second branch.
  int matches = 0;
  for (int s = mm + 1; s <= r; ++s) {
    const Int diff = m.beta(mm, s) - m.beta(i, s);
    bool first = diff == 1;
    for (int k = s + 1; k <= r && first; ++k) first = m.beta(mm, k) - m.beta(i, k) == 0;
    bool second = diff == -1;
    for (int k = s + 1; k <= r && second; ++k) second = m.beta(i, s) - m.beta(mm, s) - m.beta(s, k) == 0;
    if (first || second) ++matches;
  }
  if (matches == 1) return std::nullopt;
  return "N2 case 3: none of (i) case 2, (ii), (iii) holds (" + std::to_string(matches) +
         " candidate s for (iii), need exactly 1)";
}

namespace {

template <class Check>
ConditionResult run_condition(const BottMatrix& m, Check check) {
  ConditionResult result;
  for (int i = 1; i <= m.length(); ++i) {
    if (auto failure = check(m, i)) {
      result.holds = false;
      result.failures.push_back({i, *failure});
    }
  }
  return result;
}

}  // namespace

ConditionResult condition_I(const BottMatrix& m) { return run_condition(m, check_n1); }
ConditionResult condition_II(const BottMatrix& m) { return run_condition(m, check_n2); }

std::vector<Rational> d_values(const BottMatrix& m, const ToricDivisor& d) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(m.length()));
  for (int i = 1; i <= m.length(); ++i) {
    const PrimitiveRelation rel = primitive_relation(m, i);
    Rational di = d[RayId::plus(i)] + d[RayId::minus(i)];
    for (const auto& [ray, c] : rel.gamma_rays) di -= Rational(c) * d[ray];
    out.push_back(di);
  }
  return out;
}

bool is_ample(const BottMatrix& m, const ToricDivisor& d) {
  const auto dv = d_values(m, d);
  return std::all_of(dv.begin(), dv.end(), [](const Rational& x) { return x.sign() > 0; });
}

bool is_nef(const BottMatrix& m, const ToricDivisor& d) {
  const auto dv = d_values(m, d);
  return std::all_of(dv.begin(), dv.end(), [](const Rational& x) { return x.sign() >= 0; });
}

// -K is always big here: the complement of the boundary is the open torus.
bool is_fano(const BottMatrix& m) { return is_ample(m, ToricDivisor::anticanonical(m.length())); }
bool is_weak_fano(const BottMatrix& m) { return is_nef(m, ToricDivisor::anticanonical(m.length())); }

bool is_mori_ray(const BottMatrix& m, int i) {
  const PrimitiveRelation rel = primitive_relation(m, i);
  const bool literal = rel.gamma_rays.empty() || (rel.gamma_rays.size() == 1 && rel.gamma_rays.begin()->second == 1);
  const bool by_degree = relation_class(rel).canonical_degree() < 0;
  if (literal != by_degree)
    throw ConsistencyError("Mori-ray criterion disagrees with K . r(P_" + std::to_string(i) + ") < 0");
  return literal;
}

IntMatrix h_table(const BottMatrix& m) {
  const auto r = static_cast<std::size_t>(m.length());
  IntMatrix h(r, r, 0);
  for (int i = 1; i <= m.length(); ++i) {
    h(i - 1, i - 1) = 1;
    for (int j = i + 1; j <= m.length(); ++j) {
      Int acc = 0;
      for (int k = i; k < j; ++k) acc = checked_add(acc, checked_mul(m.beta(k, j), h(k - 1, i - 1)));
      h(j - 1, i - 1) = checked_neg(acc);
    }
  }
  return h;
}

std::vector<Rational> g_values(const BottMatrix& m, const ToricDivisor& d) {
  const IntMatrix h = h_table(m);
  std::vector<Rational> g;
  g.reserve(static_cast<std::size_t>(m.length()));
  for (int i = 1; i <= m.length(); ++i) {
    Rational gi = d[RayId::plus(i)];
    for (int j = i; j <= m.length(); ++j) gi += d[RayId::minus(j)] * Rational(h_entry(h, j, i));
    g.push_back(gi);
  }
  return g;
}

std::vector<Rational> log_fano_f(const BottMatrix& m, const std::vector<Int>& b, const std::vector<Rational>& a) {
  const auto r = static_cast<std::size_t>(m.length());
  if (b.size() != r) throw InputError("b has " + std::to_string(b.size()) + " entries, expected " + std::to_string(r));
  if (a.size() != r)
    throw InputError("boundary divisor has " + std::to_string(a.size()) + " coefficients, expected " +
                     std::to_string(r));
  for (std::size_t i = 0; i < r; ++i)
    if (a[i].sign() < 0 || a[i] >= Rational(1))
      throw InputError("boundary coefficient a_" + std::to_string(i + 1) + " = " + a[i].str() +
                       " outside [0, 1) (the round-down of the boundary must vanish)");

  const auto weight = [&](int j) { return Rational(b[j - 1]) + Rational(1) + a[j - 1]; };
  std::vector<Rational> f;
  f.reserve(r);
  for (int i = 1; i <= m.length(); ++i) {
    Rational fi = weight(i);
    for (const auto& [ray, c] : primitive_relation(m, i).gamma_rays)
      if (ray.sign == Sign::plus) fi -= Rational(c) * weight(ray.position);
    f.push_back(fi);
  }
  return f;
}

LogFanoResult log_fano(const BottMatrix& m, const std::vector<Int>& b, const std::vector<Rational>& a) {
  LogFanoResult out;
  out.b = b;
  out.f = log_fano_f(m, b, a);
  out.log_fano = true;
  for (std::size_t i = 0; i < out.f.size(); ++i) {
    if (out.f[i].sign() <= 0) {
      out.log_fano = false;
      if (!out.witness) out.witness = static_cast<int>(i + 1);
    }
  }
  return out;
}

LogFanoResult log_fano(const GeneralizedCartanMatrix& gcm, const Word& word, const std::vector<Rational>& a) {
  std::vector<Int> b;
  for (const GammaDatum& g : gamma_data(gcm, word)) b.push_back(g.b);
  return log_fano(bott_matrix(gcm, word), b, a);
}

bool is_log_fano(const GeneralizedCartanMatrix& gcm, const Word& word, const std::vector<Rational>& a) {
  return log_fano(gcm, word, a).log_fano;
}

const std::vector<PublishedClaim>& published_claims() {
  static const std::vector<PublishedClaim> claims = {
      {CartanFamily::B, 2, {1, 2}, "condition_I", true, "B2 word (1,2) satisfies condition I"},
      {CartanFamily::B, 2, {1, 2}, "fano", true, "B2 word (1,2): toric limit is Fano"},
      {CartanFamily::B, 2, {2, 1}, "condition_I", false, "B2 word (2,1) does not satisfy condition I"},
      {CartanFamily::B, 2, {2, 1}, "condition_II", true, "B2 word (2,1) satisfies condition II"},
      {CartanFamily::B, 2, {2, 1}, "weak_fano", true, "B2 word (2,1): toric limit is weak Fano"},
      {CartanFamily::G2, 2, {2, 1}, "condition_I", true, "G2 word (2,1) satisfies condition I"},
      {CartanFamily::G2, 2, {2, 1}, "fano", true, "G2 word (2,1): toric limit is Fano"},
      {CartanFamily::G2, 2, {1, 2}, "condition_I", false, "G2 word (1,2) satisfies neither condition"},
      {CartanFamily::G2, 2, {1, 2}, "condition_II", false, "G2 word (1,2) satisfies neither condition"},
      {CartanFamily::G2, 2, {1, 2}, "weak_fano", false, "G2 word (1,2): toric limit is not weak Fano"},
      {CartanFamily::A, 3, {1, 1}, "condition_I", false, "A3 word (1,1) does not satisfy condition I"},
      {CartanFamily::A, 3, {1, 1}, "fano", false, "A3 word (1,1): toric limit is not Fano"},
      {CartanFamily::A, 3, {1, 3, 1}, "condition_II", true, "A3 word (1,3,1) satisfies condition II"},
      {CartanFamily::A, 3, {1, 3, 1}, "condition_I", false, "A3 word (1,3,1) does not satisfy condition I"},
      {CartanFamily::A, 3, {1, 2, 1}, "weak_fano", true, "A3 word (1,2,1): toric limit is weak Fano"},
      {CartanFamily::A, 3, {1, 2, 1}, "fano", false, "A3 word (1,2,1): toric limit is not Fano"},
      {CartanFamily::B, 2, {1, 2, 1}, "weak_fano", false, "B2 word (1,2,1): toric limit is not weak Fano"},
  };
  return claims;
}

ClassificationReport consistency_report(const GeneralizedCartanMatrix& gcm, const Word& word) {
  const BottMatrix m = bott_matrix(gcm, word);
  ClassificationReport rep;
  rep.condition_I = condition_I(m);
  rep.condition_II = condition_II(m);
  rep.d_values = d_values(m, ToricDivisor::anticanonical(m.length()));
  rep.fano = std::all_of(rep.d_values.begin(), rep.d_values.end(), [](const Rational& x) { return x.sign() > 0; });
  rep.weak_fano =
      std::all_of(rep.d_values.begin(), rep.d_values.end(), [](const Rational& x) { return x.sign() >= 0; });
  for (int i = 1; i <= m.length(); ++i) rep.mori_rays.push_back(is_mori_ray(m, i));

  if (rep.fano && !rep.weak_fano) throw ConsistencyError("ample -K that is not nef");
  if (rep.condition_I.holds && !rep.condition_II.holds)
    throw ConsistencyError("condition I holds but condition II fails");
  const bool all_mori = std::all_of(rep.mori_rays.begin(), rep.mori_rays.end(), [](bool b) { return b; });
  if (all_mori != rep.fano) throw ConsistencyError("Fano status disagrees with the Mori-ray test");

  if (rep.condition_I.holds != rep.fano)
    rep.discrepancies.push_back({"condition I holds exactly when the toric limit is Fano",
                                 "condition_I = " + yes_no(rep.condition_I.holds) + ", fano = " + yes_no(rep.fano),
                                 "syntactic criterion vs d_i test on -K"});
  if (rep.condition_II.holds != rep.weak_fano)
    rep.discrepancies.push_back(
        {"condition II holds exactly when the toric limit is weak Fano",
         "condition_II = " + yes_no(rep.condition_II.holds) + ", weak_fano = " + yes_no(rep.weak_fano),
         "syntactic criterion vs d_i test on -K"});

  for (const PublishedClaim& claim : published_claims()) {
    const GeneralizedCartanMatrix claim_gcm = builtin_cartan(claim.family, claim.rank);
    if (static_cast<int>(claim.word.size()) != word.length()) continue;
    if (!(bott_matrix(claim_gcm, Word(claim_gcm, claim.word)) == m)) continue;
    bool observed = false;
    if (claim.property == "fano") observed = rep.fano;
    if (claim.property == "weak_fano") observed = rep.weak_fano;
    if (claim.property == "condition_I") observed = rep.condition_I.holds;
    if (claim.property == "condition_II") observed = rep.condition_II.holds;
    if (observed == claim.value) continue;
    std::string detail = claim.property + " = " + yes_no(observed);
    if (claim.property == "fano" || claim.property == "weak_fano") {
      detail += " (d = [";
      for (std::size_t i = 0; i < rep.d_values.size(); ++i) detail += (i ? ", " : "") + rep.d_values[i].str();
      detail += "])";
    }
    rep.discrepancies.push_back({claim.statement, detail, "published classification example"});
  }

  rep.notes.push_back("condition II case 1 with |eta-| = 1 is evaluated on beta_il");
  rep.notes.push_back("condition II case 3(iii) is evaluated verbatim, including its mixed s/k indices");
  return rep;
}

}  // namespace bott
