#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

using Integer = mpz_class;
// mpq_class keeps values canonical (lowest terms, positive denominator)
// as long as every constructor from a numerator/denominator pair is
// followed by canonicalize(); make_rational does that.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
// Inverse of to_string; throws toric::Error on malformed text or zero
// denominator.
Rational parse_rational(std::string_view text);

int sign(const Rational& q);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  // Each vector becomes one column (resp. row).
  static RatMatrix from_columns(std::span<const LatticeVector> columns);
  static RatMatrix from_rows(std::span<const LatticeVector> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  RatMatrix transpose() const;
  std::vector<Rational> apply(std::span<const Rational> x) const;

  bool operator==(const RatMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

// Throws DimensionError for non-square input.
Rational det(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

// Index of the sublattice spanned by `vectors` inside its saturation
// N_sigma = span_R(vectors) ∩ Z^d. Equals |det| for a square family and
// the gcd of the maximal minors otherwise. Throws RankError when the
// vectors are linearly dependent.
Integer lattice_index(std::span<const LatticeVector> vectors);

// Some exact solution of A x = b (free variables set to zero), or nullopt
// if the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RatMatrix& a, std::span<const Rational> b);

// Basis of ker A; each vector primitive with its first nonzero entry positive.
std::vector<std::vector<Integer>> kernel_basis(const RatMatrix& a);

// Smallest integer multiple of v with gcd 1, first nonzero entry positive.
// The zero vector maps to the zero vector.
std::vector<Integer> primitive_integer(std::span<const Rational> v);

}  // namespace toric
