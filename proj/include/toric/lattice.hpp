#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace toric {

// Integer point of N = Z^d. Coordinates are 64-bit; anything built from
// them (determinants, relations, intersection numbers) is computed with
// arbitrary precision.
class LatticeVector {
 public:
  LatticeVector() = default;
  LatticeVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}
  explicit LatticeVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  std::size_t dim() const noexcept { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  std::span<const std::int64_t> coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  // gcd of the absolute values of the coordinates; 0 for the zero vector.
  std::int64_t content() const noexcept;
  bool is_primitive() const noexcept { return content() == 1; }

  LatticeVector operator-() const;
  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);

  auto operator<=>(const LatticeVector&) const = default;
  bool operator==(const LatticeVector&) const = default;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

// Pairing of a functional with a lattice point; both are integer vectors of
// the same dimension.
std::int64_t dot(const LatticeVector& a, const LatticeVector& b);

}  // namespace toric
