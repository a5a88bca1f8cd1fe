#include "toric/lattice.hpp"

#include <cassert>
#include <numeric>
#include <ostream>
#include <sstream>

namespace toric {

bool LatticeVector::is_zero() const noexcept {
  for (auto c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

std::int64_t LatticeVector::content() const noexcept {
  std::int64_t g = 0;
  for (auto c : coords_) g = std::gcd(g, c);
  return g;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  assert(a.dim() == b.dim());
  LatticeVector out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out.coords_[i] += b.coords_[i];
  return out;
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  assert(a.dim() == b.dim());
  LatticeVector out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) out.coords_[i] -= b.coords_[i];
  return out;
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ')';
}

std::int64_t dot(const LatticeVector& a, const LatticeVector& b) {
  assert(a.dim() == b.dim());
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace toric
