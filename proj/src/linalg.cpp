#include "toric/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>

#include "toric/error.hpp"

namespace toric {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw Error("malformed rational '" + std::string(text) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw Error("malformed rational '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw Error("malformed rational '" + std::string(text) + "'");
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error("rational with zero denominator: '" + std::string(text) + "'");
  return make_rational(parse_int(text.substr(0, slash)), den);
}

int sign(const Rational& q) { return sgn(q); }

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_columns(std::span<const LatticeVector> columns) {
  const std::size_t d = columns.empty() ? 0 : columns.front().dim();
  RatMatrix m(d, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].dim() != d) throw DimensionError("columns of differing dimension");
    for (std::size_t r = 0; r < d; ++r) m(r, c) = Rational(Integer(static_cast<long>(columns[c][r])));
  }
  return m;
}

RatMatrix RatMatrix::from_rows(std::span<const LatticeVector> rows) {
  return from_columns(rows).transpose();
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::vector<Rational> RatMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
  }
  return y;
}

bool RatMatrix::operator==(const RatMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c);
    }
    os << ']';
  }
  return os << ']';
}

namespace {

// In-place reduced row echelon form; returns the pivot column of each
// nonzero row.
std::vector<std::size_t> reduce(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational det(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Rational result = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(col, c));
      result = -result;
    }
    result *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return result;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return reduce(a).size();
}

Integer lattice_index(std::span<const LatticeVector> vectors) {
  const std::size_t k = vectors.size();
  if (k == 0) return 1;
  const std::size_t d = vectors.front().dim();
  if (k > d) throw RankError("more vectors than the ambient dimension");
  RatMatrix m = RatMatrix::from_columns(vectors);
  if (rank(m) != k) throw RankError("lattice_index of linearly dependent vectors");

  // gcd over all k x k minors (row subsets of the d x k matrix).
  Integer g = 0;
  std::vector<bool> pick(d, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    RatMatrix minor(k, k);
    std::size_t r = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (!pick[i]) continue;
      for (std::size_t c = 0; c < k; ++c) minor(r, c) = m(i, c);
      ++r;
    }
    const Rational dm = det(minor);
    assert(dm.get_den() == 1);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), dm.get_num_mpz_t());
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g;
}

std::optional<std::vector<Rational>> solve(const RatMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw DimensionError("right-hand side size mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto pivots = reduce(aug);
  std::vector<Rational> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == a.cols()) return std::nullopt;
    x[pivots[r]] = aug(r, a.cols());
  }
  return x;
}

std::vector<std::vector<Integer>> kernel_basis(const RatMatrix& a) {
  RatMatrix m = a;
  const auto pivots = reduce(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Integer>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(primitive_integer(v));
  }
  return basis;
}

std::vector<Integer> primitive_integer(std::span<const Rational> v) {
  Integer lcm_den = 1;
  for (const auto& q : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& q : v) {
    Integer z = q.get_num() * (lcm_den / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    out.push_back(std::move(z));
  }
  if (g == 0) return out;
  int s = 0;
  for (const auto& z : out) {
    if (z != 0) {
      s = sgn(z);
      break;
    }
  }
  for (auto& z : out) z = z / g * s;
  return out;
}

}  // namespace toric
