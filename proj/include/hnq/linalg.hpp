#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "hnq/error.hpp"
#include "hnq/scalar.hpp"

namespace hnq {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  T* row(std::size_t i) { return data_.data() + i * cols_; }
  const T* row(std::size_t i) const { return data_.data() + i * cols_; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(data_[i * cols_ + k], data_[j * cols_ + k]);
  }
  /// Drops rows beyond `rows`.
  void truncate_rows(std::size_t rows) {
    rows_ = rows;
    data_.resize(rows_ * cols_);
  }
  void append_row(const T* values) {
    data_.insert(data_.end(), values, values + cols_);
    ++rows_;
  }
  void append_rows(const Matrix& other) {
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
  }

  template <class U, class Fn>
  Matrix<U> map(Fn fn) const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = fn((*this)(i, j));
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Z/p with small p, elements stored as 0..p-1.
struct PrimeField {
  using value_type = std::int32_t;

  explicit PrimeField(int prime) : p(prime) {
    inverses.assign(static_cast<std::size_t>(p), 0);
    for (int a = 1; a < p; ++a)
      for (int b = 1; b < p; ++b)
        if ((a * b) % p == 1) inverses[static_cast<std::size_t>(a)] = b;
  }

  int p;
  std::vector<value_type> inverses;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const { return (a + b) % p; }
  value_type sub(value_type a, value_type b) const { return (a - b + p) % p; }
  value_type mul(value_type a, value_type b) const { return (a * b) % p; }
  value_type neg(value_type a) const { return (p - a) % p; }
  value_type inv(value_type a) const {
    if (a == 0) throw ArithmeticError("division by zero in F_p");
    return inverses[static_cast<std::size_t>(a)];
  }
  value_type from_rational(const Rational& q) const {
    mpz_class num = q.get_num() % p;
    mpz_class den = q.get_den() % p;
    if (den == 0) throw ArithmeticError("denominator divisible by the characteristic");
    long n = num.get_si();
    long d = den.get_si();
    value_type vn = static_cast<value_type>(((n % p) + p) % p);
    value_type vd = static_cast<value_type>(((d % p) + p) % p);
    return mul(vn, inv(vd));
  }
  Rational to_rational(value_type a) const { return Rational(a); }
  value_type random(std::mt19937_64& rng) const {
    return static_cast<value_type>(std::uniform_int_distribution<int>(0, p - 1)(rng));
  }
};

struct RationalField {
  using value_type = Rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw ArithmeticError("division by zero");
    return 1 / a;
  }
  value_type from_rational(const Rational& q) const { return q; }
  Rational to_rational(const value_type& a) const { return a; }
  value_type random(std::mt19937_64& rng) const {
    return Rational(std::uniform_int_distribution<int>(-3, 3)(rng));
  }
};

namespace linalg {

template <class F>
using Mat = Matrix<typename F::value_type>;

/// Brings `m` to reduced row echelon form and drops zero rows. Returns the
/// pivot column of each remaining row.
template <class F>
std::vector<std::size_t> rref(const F& f, Mat<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && f.is_zero(m(sel, c))) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(r, sel);
    auto scale = f.inv(m(r, c));
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) = f.mul(m(r, k), scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) = f.sub(m(i, k), f.mul(factor, m(r, k)));
    }
    pivots.push_back(c);
    ++r;
  }
  m.truncate_rows(r);
  return pivots;
}

template <class F>
Mat<F> rref_copy(const F& f, Mat<F> m) {
  rref(f, m);
  return m;
}

template <class F>
std::size_t rank(const F& f, Mat<F> m) {
  return rref(f, m).size();
}

template <class F>
Mat<F> multiply(const F& f, const Mat<F>& a, const Mat<F>& b) {
  if (a.cols() != b.rows()) throw InputError("matrix shapes do not compose");
  Mat<F> out(a.rows(), b.cols(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = f.add(out(i, j), f.mul(a(i, k), b(k, j)));
    }
  return out;
}

template <class F>
Mat<F> transpose(const Mat<F>& a) {
  Mat<F> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

template <class F>
Mat<F> identity(const F& f, std::size_t n) {
  Mat<F> out(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i) out(i, i) = f.one();
  return out;
}

template <class F>
bool is_zero_matrix(const F& f, const Mat<F>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!f.is_zero(m(i, j))) return false;
  return true;
}

/// Row span of `rows` in RREF (the canonical basis of the subspace).
template <class F>
Mat<F> span(const F& f, Mat<F> rows) {
  rref(f, rows);
  return rows;
}

/// Canonical basis of the sum of two subspaces given by row bases.
template <class F>
Mat<F> sum(const F& f, const Mat<F>& a, const Mat<F>& b) {
  Mat<F> m = a;
  m.append_rows(b);
  return span(f, std::move(m));
}

/// Image of the row space of `basis` under the linear map `map`
/// (shape target x source); returned in RREF.
template <class F>
Mat<F> image(const F& f, const Mat<F>& basis, const Mat<F>& map) {
  if (basis.rows() == 0) return Mat<F>(0, map.rows());
  return span(f, multiply(f, basis, transpose<F>(map)));
}

/// Reduces `v` (length = cols) modulo a subspace in RREF with the given pivots.
template <class F>
void reduce(const F& f, const Mat<F>& basis, const std::vector<std::size_t>& pivots,
            typename F::value_type* v) {
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    auto c = v[pivots[r]];
    if (f.is_zero(c)) continue;
    for (std::size_t k = 0; k < basis.cols(); ++k) v[k] = f.sub(v[k], f.mul(c, basis(r, k)));
  }
}

template <class F>
std::vector<std::size_t> pivots_of(const F& f, const Mat<F>& rref_basis) {
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < rref_basis.rows(); ++r) {
    std::size_t c = 0;
    while (c < rref_basis.cols() && f.is_zero(rref_basis(r, c))) ++c;
    pivots.push_back(c);
  }
  return pivots;
}

/// True when every row of `vectors` lies in the span of the RREF basis.
template <class F>
bool contains(const F& f, const Mat<F>& rref_basis, const Mat<F>& vectors) {
  if (vectors.rows() == 0) return true;
  auto pivots = pivots_of(f, rref_basis);
  std::vector<typename F::value_type> v(vectors.cols());
  for (std::size_t r = 0; r < vectors.rows(); ++r) {
    for (std::size_t k = 0; k < vectors.cols(); ++k) v[k] = vectors(r, k);
    reduce(f, rref_basis, pivots, v.data());
    for (const auto& x : v)
      if (!f.is_zero(x)) return false;
  }
  return true;
}

/// Non-pivot columns of an RREF basis; the corresponding unit vectors span
/// a complement.
template <class F>
std::vector<std::size_t> free_columns(const F& f, const Mat<F>& rref_basis) {
  auto pivots = pivots_of(f, rref_basis);
  std::vector<bool> is_pivot(rref_basis.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < rref_basis.cols(); ++c)
    if (!is_pivot[c]) out.push_back(c);
  return out;
}

template <class F>
std::optional<Mat<F>> inverse(const F& f, const Mat<F>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Mat<F> aug(n, 2 * n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  auto pivots = rref(f, aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Mat<F> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

template <class F>
Mat<F> random_invertible(const F& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Mat<F> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = f.random(rng);
    if (rank(f, m) == n) return m;
  }
}

/// Number of subspaces of F_p^n (sum of Gaussian binomials), saturating at
/// `cap`.
inline std::uint64_t subspace_count(int p, std::size_t n, std::uint64_t cap = UINT64_MAX) {
  // Row k of the q-Pascal triangle: [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q.
  std::vector<std::uint64_t> row{1};
  auto sat_add = [cap](std::uint64_t a, std::uint64_t b) { return (a > cap - b) ? cap : a + b; };
  auto sat_mul = [cap](std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > cap / a) return cap;
    return a * b;
  };
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<std::uint64_t> next(m + 1, 0);
    std::uint64_t qk = 1;
    for (std::size_t k = 0; k <= m; ++k) {
      std::uint64_t left = k > 0 ? row[k - 1] : 0;
      std::uint64_t right = k < m ? sat_mul(qk, row[k]) : 0;
      next[k] = sat_add(left, right);
      qk = sat_mul(qk, static_cast<std::uint64_t>(p));
    }
    row = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto v : row) total = sat_add(total, v);
  return total;
}

/// Calls `visit` with the RREF basis of every subspace of F_p^n, each
/// exactly once. Returns false if `visit` asked to stop.
inline bool for_each_subspace(const PrimeField& f, std::size_t n,
                              const std::function<bool(const Mat<PrimeField>&)>& visit) {
  for (std::size_t k = 0; k <= n; ++k) {
    // Pivot columns as an increasing k-combination of 0..n-1.
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    for (;;) {
      std::vector<bool> is_pivot(n, false);
      for (auto c : piv) is_pivot[c] = true;
      std::vector<std::pair<std::size_t, std::size_t>> free_slots;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = piv[r] + 1; c < n; ++c)
          if (!is_pivot[c]) free_slots.emplace_back(r, c);
      Mat<PrimeField> m(k, n, 0);
      for (std::size_t r = 0; r < k; ++r) m(r, piv[r]) = 1;
      std::vector<int> digits(free_slots.size(), 0);
      for (;;) {
        for (std::size_t s = 0; s < free_slots.size(); ++s)
          m(free_slots[s].first, free_slots[s].second) = digits[s];
        if (!visit(m)) return false;
        std::size_t s = 0;
        while (s < digits.size() && digits[s] == f.p - 1) digits[s++] = 0;
        if (s == digits.size()) break;
        ++digits[s];
      }
      // Next combination.
      std::size_t i = k;
      while (i > 0 && piv[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
  return true;
}

/// Calls `visit` with every subspace W with lower <= W <= F_p^n (RREF
/// bases), where `lower` is in RREF.
inline bool for_each_superspace(const PrimeField& f, const Mat<PrimeField>& lower, std::size_t n,
                                const std::function<bool(const Mat<PrimeField>&)>& visit) {
  auto free = free_columns(f, lower);
  return for_each_subspace(f, free.size(), [&](const Mat<PrimeField>& q) {
    Mat<PrimeField> lifted(q.rows(), n, 0);
    for (std::size_t r = 0; r < q.rows(); ++r)
      for (std::size_t j = 0; j < q.cols(); ++j) lifted(r, free[j]) = q(r, j);
    lifted.append_rows(lower);
    return visit(span(f, std::move(lifted)));
  });
}

inline std::uint64_t superspace_count(int p, std::size_t n, std::size_t lower_dim,
                                      std::uint64_t cap = UINT64_MAX) {
  return subspace_count(p, n - lower_dim, cap);
}

}  // namespace linalg
}  // namespace hnq
