#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cmreg {

bool is_prime(uint32_t n);

// C(n, k); zero outside 0 <= k <= n. Arguments stay small enough here that
// the product never overflows int64.
int64_t binomial(int64_t n, int64_t k);

// Number of monomials of total degree `degree` in `nvars` variables.
int64_t monomial_count(int nvars, int degree);

// Arithmetic in GF(p), p prime. Elements are residues in [0, p).
class Zp {
 public:
  explicit Zp(uint32_t p);
  uint32_t p() const { return p_; }
  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + (p_ - b); }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  }
  uint32_t inv(uint32_t a) const;  // a != 0
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
  // Reduce an arbitrary signed value into [0, p).
  uint32_t from_int(int64_t v) const;
  friend bool operator==(const Zp&, const Zp&) = default;

 private:
  uint32_t p_;
};

// Dense row-major matrix over GF(p).
class ZpMatrix {
 public:
  ZpMatrix(Zp field, std::size_t rows, std::size_t cols);
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const Zp& field() const { return field_; }

  std::size_t rank() const;
  void row_reduce();  // reduced row echelon form, in place
  // Basis of the right kernel {v : A v = 0}.
  std::vector<std::vector<uint32_t>> kernel_basis() const;

 private:
  Zp field_;
  std::size_t rows_, cols_;
  std::vector<uint32_t> data_;
};

}  // namespace cmreg
