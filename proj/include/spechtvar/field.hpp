#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace spechtvar::ff {

/// A field element: the coefficient vector of a polynomial in x of degree < k,
/// packed as a base-p integer (digit i is the coefficient of x^i). Elements of
/// the prime field are therefore the residues 0..p-1, zero is 0 and one is 1 in
/// every field.
using Elem = std::uint32_t;

/// GF(p^k) = GF(p)[x]/(m(x)) where m is the lexicographically least monic
/// irreducible of degree k. Ordering compares the coefficient list
/// (c_{k-1}, ..., c_0) of x^k + c_{k-1}x^{k-1} + ... + c_0 as base-p digits.
///
/// GF(p) uses plain modular arithmetic. Extensions use log/antilog tables for
/// multiplication and either full addition tables (q <= 1024), XOR (p = 2) or
/// Zech logarithms for addition. Immutable after construction.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 22;
  static constexpr std::uint64_t kSmallOrder = 1024;

  explicit Field(unsigned p, unsigned k = 1);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  /// Coefficients c_0..c_{k-1} of the monic modulus (leading 1 implicit).
  const std::vector<unsigned>& modulus() const { return modulus_; }
  /// A generator of the multiplicative group.
  Elem primitive() const { return generator_; }

  Elem add(Elem a, Elem b) const {
    if (k_ == 1) return static_cast<Elem>((std::uint64_t{a} + b) % p_);
    if (p_ == 2) return a ^ b;
    if (small_) return add_tab_[std::size_t{a} * q_ + b];
    return add_large(a, b);
  }
  Elem neg(Elem a) const {
    if (a == 0 || p_ == 2) return a;
    if (k_ == 1) return p_ - a;
    if (small_) return neg_tab_[a];
    return exp_[log_[a] + (q_ - 1) / 2];
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (k_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
    if (small_) return mul_tab_[std::size_t{a} * q_ + b];
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Image of an integer in the prime subfield.
  Elem embed(long long c) const {
    long long r = c % static_cast<long long>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  bool in_prime_field(Elem a) const { return a < p_; }

  std::vector<unsigned> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const unsigned> c) const;
  /// "0", "2", "x^2+2x+1" style rendering.
  std::string to_string(Elem a) const;

  /// y += c * x over equal-length rows.
  void axpy(std::span<Elem> y, Elem c, std::span<const Elem> x) const;
  void scale(std::span<Elem> y, Elem c) const;

  bool operator==(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_;
  }

 private:
  Elem add_large(Elem a, Elem b) const;

  unsigned p_;
  unsigned k_;
  std::uint32_t q_;
  bool small_ = false;
  std::vector<unsigned> modulus_;
  Elem generator_ = 1;

  // Extension-field tables. exp_ has length 2(q-1) so log sums need no reduction.
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> zech_;
  std::vector<std::uint16_t> add_tab_;
  std::vector<std::uint16_t> mul_tab_;
  std::vector<std::uint16_t> neg_tab_;
};

bool is_prime(std::uint64_t n);

/// Brute-force irreducibility test over GF(p): no monic factor of degree
/// 1..deg/2 divides. `poly` lists coefficients from x^0 up, leading one included.
bool is_irreducible(std::span<const unsigned> poly, unsigned p);

}  // namespace spechtvar::ff
