#pragma once

// Root-system primitives for a (Kac-Moody) generalized Cartan matrix.
//
// Indexing convention for the whole library: simple roots, word letters and
// word positions are 1-based, matching how they are written in input documents.
// The Cartan matrix entry A[p][q] is the pairing <alpha_q, coroot alpha_p>.

#include <string_view>
#include <vector>

#include "bott/arith.hpp"
#include "bott/matrix.hpp"

namespace bott {

inline constexpr int kMaxWordLength = 62;

class GeneralizedCartanMatrix {
 public:
  /// Validates A[p][p] = 2, A[p][q] <= 0 off the diagonal, A[p][q] = 0 iff A[q][p] = 0.
  static GeneralizedCartanMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  int rank() const { return static_cast<int>(entries_.rows()); }
  /// A[p][q], 1-based.
  Int operator()(int p, int q) const;
  const IntMatrix& entries() const { return entries_; }
  std::vector<std::vector<Int>> rows() const;

  friend bool operator==(const GeneralizedCartanMatrix&, const GeneralizedCartanMatrix&) = default;

 private:
  explicit GeneralizedCartanMatrix(IntMatrix entries) : entries_(std::move(entries)) {}
  IntMatrix entries_;
};

enum class CartanFamily { A, B, C, D, G2 };

CartanFamily parse_family(std::string_view name);
std::string_view family_name(CartanFamily family);

/// Finite-type Cartan matrices. For B_n the last simple root is short, so
/// A[n][n-1] = -2; C_n is the transpose. G2 has A[2][1] = -1, A[1][2] = -3.
GeneralizedCartanMatrix builtin_cartan(CartanFamily family, int rank);

/// <alpha_q, coroot alpha_p> = A[p][q].
Int pairing(const GeneralizedCartanMatrix& gcm, int p, int q);

/// Coordinates in the simple-root basis.
struct Root {
  std::vector<Int> coeffs;
  static Root simple(int rank, int p);
  friend bool operator==(const Root&, const Root&) = default;
};

/// Coordinates in the simple-coroot basis.
struct Coroot {
  std::vector<Int> coeffs;
  static Coroot simple(int rank, int p);
  friend bool operator==(const Coroot&, const Coroot&) = default;
};

/// Sequence of simple-reflection indices; repetitions allowed.
class Word {
 public:
  Word() = default;
  /// Checks 1 <= length <= kMaxWordLength and every letter in 1..gcm.rank().
  Word(const GeneralizedCartanMatrix& gcm, std::vector<int> letters);

  int length() const { return static_cast<int>(letters_.size()); }
  /// Letter at 1-based position i.
  int operator[](int i) const { return letters_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& letters() const { return letters_; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

/// s_p(beta) = beta - <beta, coroot alpha_p> alpha_p.
Root reflect_root(const GeneralizedCartanMatrix& gcm, int p, const Root& beta);
/// s_p(beta^) = beta^ - <alpha_p, beta^> alpha_p^.
Coroot reflect_coroot(const GeneralizedCartanMatrix& gcm, int p, const Coroot& beta);

Int height(const Root& v);
Int height(const Coroot& v);

struct GammaDatum {
  Root gamma;      // s_{beta_r} ... s_{beta_{i+1}} (beta_i)
  Coroot coroot;   // the same reflections applied to the simple coroot
  Int b;           // height of the coroot, i.e. <delta, coroot>
};

/// One entry per word position. b is the coroot height; it agrees with
/// height(gamma) only in the simply-laced case.
std::vector<GammaDatum> gamma_data(const GeneralizedCartanMatrix& gcm, const Word& word);

}  // namespace bott
