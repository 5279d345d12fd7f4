#include "bott/root_data.hpp"

#include <string>

namespace bott {

namespace {

void check_index(int rank, int p, const char* what) {
  if (p < 1 || p > rank)
    throw InputError(std::string(what) + " " + std::to_string(p) + " out of range 1.." + std::to_string(rank));
}

}  // namespace

GeneralizedCartanMatrix GeneralizedCartanMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw InputError("cartan matrix must have positive rank");
  IntMatrix m(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    if (rows[p].size() != n) throw InputError("cartan matrix must be square");
    for (std::size_t q = 0; q < n; ++q) m(p, q) = rows[p][q];
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (m(p, p) != 2)
      throw InputError("cartan matrix diagonal entry A[" + std::to_string(p + 1) + "][" + std::to_string(p + 1) +
                       "] must be 2");
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      const std::string at = "A[" + std::to_string(p + 1) + "][" + std::to_string(q + 1) + "]";
      if (m(p, q) > 0) throw InputError("cartan matrix off-diagonal entry " + at + " must be <= 0");
      if ((m(p, q) == 0) != (m(q, p) == 0))
        throw InputError("cartan matrix zero pattern not symmetric at " + at);
    }
  }
  return GeneralizedCartanMatrix(std::move(m));
}

Int GeneralizedCartanMatrix::operator()(int p, int q) const {
  check_index(rank(), p, "root index");
  check_index(rank(), q, "root index");
  return entries_(static_cast<std::size_t>(p - 1), static_cast<std::size_t>(q - 1));
}

std::vector<std::vector<Int>> GeneralizedCartanMatrix::rows() const {
  std::vector<std::vector<Int>> out;
  for (std::size_t r = 0; r < entries_.rows(); ++r) out.emplace_back(entries_.row(r).begin(), entries_.row(r).end());
  return out;
}

CartanFamily parse_family(std::string_view name) {
  if (name == "A") return CartanFamily::A;
  if (name == "B") return CartanFamily::B;
  if (name == "C") return CartanFamily::C;
  if (name == "D") return CartanFamily::D;
  if (name == "G2" || name == "G") return CartanFamily::G2;
  throw InputError("unknown root system family '" + std::string(name) + "' (expected A, B, C, D or G2)");
}

std::string_view family_name(CartanFamily family) {
  switch (family) {
    case CartanFamily::A: return "A";
    case CartanFamily::B: return "B";
    case CartanFamily::C: return "C";
    case CartanFamily::D: return "D";
    case CartanFamily::G2: return "G2";
  }
  return "?";
}

GeneralizedCartanMatrix builtin_cartan(CartanFamily family, int rank) {
  const auto bad = [&](const char* need) {
    return InputError("invalid rank " + std::to_string(rank) + " for family " + std::string(family_name(family)) +
                      " (" + need + ")");
  };
  switch (family) {
    case CartanFamily::A:
      if (rank < 1) throw bad("rank >= 1");
      break;
    case CartanFamily::B:
    case CartanFamily::C:
      if (rank < 2) throw bad("rank >= 2");
      break;
    case CartanFamily::D:
      if (rank < 4) throw bad("rank >= 4");
      break;
    case CartanFamily::G2:
      if (rank != 2) throw bad("rank 2");
      break;
  }

  std::vector<std::vector<Int>> a(rank, std::vector<Int>(rank, 0));
  for (int p = 0; p < rank; ++p) a[p][p] = 2;
  const int chain = family == CartanFamily::D ? rank - 1 : rank;
  for (int p = 0; p + 1 < chain; ++p) a[p][p + 1] = a[p + 1][p] = -1;

  const int n = rank - 1;  // 0-based index of the last node
  switch (family) {
    case CartanFamily::A:
      break;
    case CartanFamily::B:
      a[n][n - 1] = -2;
      break;
    case CartanFamily::C:
      a[n - 1][n] = -2;
      break;
    case CartanFamily::D:
      a[n][n - 2] = a[n - 2][n] = -1;
      break;
    case CartanFamily::G2:
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return GeneralizedCartanMatrix::from_rows(a);
}

Int pairing(const GeneralizedCartanMatrix& gcm, int p, int q) { return gcm(p, q); }

Root Root::simple(int rank, int p) {
  check_index(rank, p, "root index");
  Root r{std::vector<Int>(static_cast<std::size_t>(rank), 0)};
  r.coeffs[static_cast<std::size_t>(p - 1)] = 1;
  return r;
}

Coroot Coroot::simple(int rank, int p) {
  check_index(rank, p, "coroot index");
  Coroot r{std::vector<Int>(static_cast<std::size_t>(rank), 0)};
  r.coeffs[static_cast<std::size_t>(p - 1)] = 1;
  return r;
}

Word::Word(const GeneralizedCartanMatrix& gcm, std::vector<int> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw InputError("word must have at least one letter");
  if (length() > kMaxWordLength)
    throw InputError("word length " + std::to_string(length()) + " exceeds the cap of " +
                     std::to_string(kMaxWordLength));
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] < 1 || letters_[i] > gcm.rank())
      throw InputError("word letter " + std::to_string(letters_[i]) + " at position " + std::to_string(i + 1) +
                       " out of range 1.." + std::to_string(gcm.rank()));
  }
}

Root reflect_root(const GeneralizedCartanMatrix& gcm, int p, const Root& beta) {
  if (static_cast<int>(beta.coeffs.size()) != gcm.rank()) throw InputError("root has wrong length");
  Int pair = 0;  // <beta, coroot alpha_p>
  for (int q = 1; q <= gcm.rank(); ++q) pair = checked_add(pair, checked_mul(beta.coeffs[q - 1], gcm(p, q)));
  Root out = beta;
  out.coeffs[p - 1] = checked_sub(out.coeffs[p - 1], pair);
  return out;
}

Coroot reflect_coroot(const GeneralizedCartanMatrix& gcm, int p, const Coroot& beta) {
  if (static_cast<int>(beta.coeffs.size()) != gcm.rank()) throw InputError("coroot has wrong length");
  Int pair = 0;  // <alpha_p, beta^>
  for (int q = 1; q <= gcm.rank(); ++q) pair = checked_add(pair, checked_mul(beta.coeffs[q - 1], gcm(q, p)));
  Coroot out = beta;
  out.coeffs[p - 1] = checked_sub(out.coeffs[p - 1], pair);
  return out;
}

Int height(const Root& v) {
  Int h = 0;
  for (Int c : v.coeffs) h = checked_add(h, c);
  return h;
}

Int height(const Coroot& v) {
  Int h = 0;
  for (Int c : v.coeffs) h = checked_add(h, c);
  return h;
}

std::vector<GammaDatum> gamma_data(const GeneralizedCartanMatrix& gcm, const Word& word) {
  std::vector<GammaDatum> out;
  out.reserve(static_cast<std::size_t>(word.length()));
  for (int i = 1; i <= word.length(); ++i) {
    Root gamma = Root::simple(gcm.rank(), word[i]);
    Coroot coroot = Coroot::simple(gcm.rank(), word[i]);
    for (int k = i + 1; k <= word.length(); ++k) {
      gamma = reflect_root(gcm, word[k], gamma);
      coroot = reflect_coroot(gcm, word[k], coroot);
    }
    const Int b = height(coroot);
    out.push_back({std::move(gamma), std::move(coroot), b});
  }
  return out;
}

}  // namespace bott
