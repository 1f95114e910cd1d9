#include "cmreg/gf.hpp"

#include "cmreg/errors.hpp"

namespace cmreg {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint32_t d = 3; static_cast<uint64_t>(d) * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

int64_t binomial(int64_t n, int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  int64_t r = 1;
  for (int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: r*(n-k+i) is divisible by i here
  }
  return r;
}

int64_t monomial_count(int nvars, int degree) {
  if (degree < 0) return 0;
  if (nvars <= 0) return degree == 0 ? 1 : 0;
  return binomial(degree + nvars - 1, nvars - 1);
}

Zp::Zp(uint32_t p) : p_(p) {
  if (!is_prime(p)) throw Error("characteristic must be a prime");
  if (p >= (1u << 31)) throw Error("characteristic too large");
}

uint32_t Zp::inv(uint32_t a) const {
  if (a == 0) throw Error("division by zero in GF(p)");
  // extended euclid on (a, p)
  int64_t t = 0, new_t = 1;
  int64_t r = p_, new_r = a;
  while (new_r != 0) {
    int64_t q = r / new_r;
    int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<uint32_t>(t);
}

uint32_t Zp::from_int(int64_t v) const {
  int64_t m = v % static_cast<int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<uint32_t>(m);
}

ZpMatrix::ZpMatrix(Zp field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

std::size_t ZpMatrix::rank() const {
  ZpMatrix m = *this;
  const Zp& F = m.field_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols_ && rank < m.rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows_ && m.at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows_) continue;
    if (pivot != rank) {
      for (std::size_t j = c; j < m.cols_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    }
    uint32_t piv_inv = F.inv(m.at(rank, c));
    for (std::size_t r = rank + 1; r < m.rows_; ++r) {
      uint32_t v = m.at(r, c);
      if (v == 0) continue;
      uint32_t factor = F.mul(v, piv_inv);
      m.at(r, c) = 0;
      for (std::size_t j = c + 1; j < m.cols_; ++j) {
        uint32_t x = m.at(rank, j);
        if (x != 0) m.at(r, j) = F.sub(m.at(r, j), F.mul(factor, x));
      }
    }
    ++rank;
  }
  return rank;
}

void ZpMatrix::row_reduce() {
  const Zp& F = field_;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
    std::size_t pivot = row;
    while (pivot < rows_ && at(pivot, c) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(row, j));
    }
    uint32_t piv_inv = F.inv(at(row, c));
    for (std::size_t j = 0; j < cols_; ++j) at(row, j) = F.mul(at(row, j), piv_inv);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row) continue;
      uint32_t v = at(r, c);
      if (v == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        uint32_t x = at(row, j);
        if (x != 0) at(r, j) = F.sub(at(r, j), F.mul(v, x));
      }
    }
    ++row;
  }
}

std::vector<std::vector<uint32_t>> ZpMatrix::kernel_basis() const {
  ZpMatrix m = *this;
  m.row_reduce();
  const Zp& F = m.field_;
  // locate pivot column of each nonzero row
  std::vector<std::ptrdiff_t> pivot_row_of_col(cols_, -1);
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
    if (m.at(row, c) != 0) {
      pivot_row_of_col[c] = static_cast<std::ptrdiff_t>(row);
      ++row;
    }
  }
  std::vector<std::vector<uint32_t>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivot_row_of_col[f] >= 0) continue;
    std::vector<uint32_t> v(cols_, 0);
    v[f] = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
      std::ptrdiff_t pr = pivot_row_of_col[c];
      if (pr >= 0) v[c] = F.neg(m.at(static_cast<std::size_t>(pr), f));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cmreg
