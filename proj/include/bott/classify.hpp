#pragma once

// Fano-type classification of the Bott-tower toric limit.
//
// The semantic tests (signs of d_i for -K) decide Fano and weak Fano. The
// syntactic conditions I and II are literal transcriptions of the published
// criteria and are reported next to the semantic answer, never in its place.

#include <optional>
#include <string>
#include <vector>

#include "bott/curves.hpp"
#include "bott/divisor.hpp"
#include "bott/root_data.hpp"

namespace bott {

struct ConditionWitness {
  int position;
  std::string clause;
};

struct ConditionResult {
  bool holds = true;
  std::vector<ConditionWitness> failures;  // one per failing position, in order
};

/// eta_i^+ = {j > i : beta_ij > 0}, eta_i^- = {j > i : beta_ij < 0}.
struct EtaSets {
  std::vector<int> plus;
  std::vector<int> minus;
};
EtaSets eta_sets(const BottMatrix& m, int i);

/// N_i^1 at a single position; nullopt when it holds, else the failing clause.
std::optional<std::string> check_n1(const BottMatrix& m, int i);
/// N_i^2 at a single position.
std::optional<std::string> check_n2(const BottMatrix& m, int i);

ConditionResult condition_I(const BottMatrix& m);
ConditionResult condition_II(const BottMatrix& m);

/// d_i = a(rho_i^+) + a(rho_i^-) - sum_rho c_rho a(rho) = D . r(P_i).
std::vector<Rational> d_values(const BottMatrix& m, const ToricDivisor& d);
bool is_ample(const BottMatrix& m, const ToricDivisor& d);
bool is_nef(const BottMatrix& m, const ToricDivisor& d);

bool is_fano(const BottMatrix& m);
bool is_weak_fano(const BottMatrix& m);

/// Literal criterion: gamma support empty, or a single ray with c = 1.
/// Cross-checked against K . r(P_i) < 0.
bool is_mori_ray(const BottMatrix& m, int i);

/// H(j, i) = h_j^i, the coefficient of D_{rho_i^+} in the class of D_{rho_j^-}
/// (1-based access through h_entry). Lower unitriangular.
IntMatrix h_table(const BottMatrix& m);
inline Int h_entry(const IntMatrix& h, int j, int i) {
  return h(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1));
}

/// g_i = a(rho_i^+) + sum_{j>=i} a(rho_j^-) h_j^i, so D ~ sum g_i D_{rho_i^+}.
std::vector<Rational> g_values(const BottMatrix& m, const ToricDivisor& d);

struct LogFanoResult {
  std::vector<Int> b;
  std::vector<Rational> f;
  bool log_fano = false;
  std::optional<int> witness;  // first position with f_i <= 0
};

/// f_i = (b_i + 1 + a_i) - sum over plus-sign rays rho_j^+ of gamma(P_i) of c_j (b_j + 1 + a_j).
/// Requires 0 <= a_i < 1.
std::vector<Rational> log_fano_f(const BottMatrix& m, const std::vector<Int>& b, const std::vector<Rational>& a);

/// b defaults to the coroot heights from gamma_data.
LogFanoResult log_fano(const BottMatrix& m, const std::vector<Int>& b, const std::vector<Rational>& a);
LogFanoResult log_fano(const GeneralizedCartanMatrix& gcm, const Word& word, const std::vector<Rational>& a);
bool is_log_fano(const GeneralizedCartanMatrix& gcm, const Word& word, const std::vector<Rational>& a);

struct Discrepancy {
  std::string claim;
  std::string observed;
  std::string source;
};

struct ClassificationReport {
  ConditionResult condition_I;
  ConditionResult condition_II;
  bool fano = false;
  bool weak_fano = false;
  std::vector<Rational> d_values;  // for -K
  std::vector<bool> mori_rays;
  std::vector<Discrepancy> discrepancies;
  std::vector<std::string> notes;
};

/// A classification statement from the literature about one word.
struct PublishedClaim {
  CartanFamily family;
  int rank;
  std::vector<int> word;
  std::string property;  // "fano", "weak_fano", "condition_I" or "condition_II"
  bool value;
  std::string statement;
};

const std::vector<PublishedClaim>& published_claims();

/// Runs every classifier. Flags condition I vs Fano and condition II vs weak
/// Fano mismatches, and any published claim about a word with the same Bott
/// matrix that the computation contradicts.
ClassificationReport consistency_report(const GeneralizedCartanMatrix& gcm, const Word& word);

}  // namespace bott
