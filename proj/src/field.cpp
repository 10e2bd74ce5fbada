#include "spechtvar/field.hpp"

#include <stdexcept>

#include "spechtvar/error.hpp"

namespace spechtvar::ff {

namespace {

using Poly = std::vector<unsigned>;  // coefficients from x^0 upward

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
Poly poly_rem(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const unsigned lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    }
    trim(a);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::span<const unsigned> poly, unsigned p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t t = v;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(t % p);
        t /= p;
      }
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field::Field(unsigned p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p)) throw Error(ErrorCode::PreconditionViolated, "field characteristic must be prime");
  if (k == 0) throw Error(ErrorCode::PreconditionViolated, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(ErrorCode::TooLarge, "field order exceeds table limit");
  }
  q_ = static_cast<std::uint32_t>(q);

  // Lexicographically least monic irreducible of degree k.
  modulus_.assign(k, 0);
  bool found = false;
  for (std::uint64_t v = 0; v < q && !found; ++v) {
    Poly cand(k + 1, 0);
    cand[k] = 1;
    std::uint64_t t = v;
    for (unsigned i = 0; i < k; ++i) {
      cand[i] = static_cast<unsigned>(t % p);
      t /= p;
    }
    if (is_irreducible(cand, p)) {
      modulus_.assign(cand.begin(), cand.end() - 1);
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::InvariantViolated, "no irreducible modulus found");

  if (k_ == 1) {
    // Smallest primitive root, for callers that want one.
    const auto factors = prime_factors(p_ - 1);
    for (Elem g = 1; g < p_; ++g) {
      bool ok = true;
      for (auto r : factors) {
        if (pow(g, (p_ - 1) / r) == 1) ok = false;
      }
      if (ok) {
        generator_ = g;
        break;
      }
    }
    return;
  }

  const Poly mod_full = [&] {
    Poly m(modulus_);
    m.push_back(1);
    return m;
  }();
  auto mulmod = [&](Elem a, Elem b) {
    const auto ca = coeffs(a);
    const auto cb = coeffs(b);
    Poly prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
      for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    }
    Poly r = poly_rem(prod, mod_full, p_);
    r.resize(k_, 0);
    return from_coeffs(r);
  };
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem result = 1;
    while (e > 0) {
      if (e & 1) result = mulmod(result, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return result;
  };

  const auto factors = prime_factors(q_ - 1);
  for (Elem g = 2; g < q_; ++g) {
    bool ok = true;
    for (auto r : factors) {
      if (slow_pow(g, (q_ - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      generator_ = g;
      break;
    }
  }

  const std::uint32_t ord = q_ - 1;
  log_.assign(q_, 0);
  exp_.assign(2 * std::size_t{ord}, 0);
  Elem cur = 1;
  for (std::uint32_t i = 0; i < ord; ++i) {
    exp_[i] = cur;
    exp_[i + ord] = cur;
    log_[cur] = i;
    cur = mulmod(cur, generator_);
  }
  if (cur != 1) throw Error(ErrorCode::InvariantViolated, "generator order mismatch");

  small_ = q_ <= kSmallOrder;
  if (small_) {
    add_tab_.assign(std::size_t{q_} * q_, 0);
    mul_tab_.assign(std::size_t{q_} * q_, 0);
    neg_tab_.assign(q_, 0);
    for (Elem a = 0; a < q_; ++a) {
      const auto ca = coeffs(a);
      std::vector<unsigned> cn(k_);
      for (unsigned i = 0; i < k_; ++i) cn[i] = (p_ - ca[i]) % p_;
      neg_tab_[a] = static_cast<std::uint16_t>(from_coeffs(cn));
      for (Elem b = 0; b < q_; ++b) {
        const auto cb = coeffs(b);
        std::vector<unsigned> cs(k_);
        for (unsigned i = 0; i < k_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
        add_tab_[std::size_t{a} * q_ + b] = static_cast<std::uint16_t>(from_coeffs(cs));
        mul_tab_[std::size_t{a} * q_ + b] =
            static_cast<std::uint16_t>((a == 0 || b == 0) ? 0 : exp_[log_[a] + log_[b]]);
      }
    }
  } else if (p_ != 2) {
    // zech_[d] = log(1 + g^d), or ord when 1 + g^d = 0.
    zech_.assign(ord, ord);
    for (std::uint32_t d = 0; d < ord; ++d) {
      Elem v = exp_[d];
      const Elem c0 = v % p_;
      v = v - c0 + (c0 + 1) % p_;
      if (v != 0) zech_[d] = log_[v];
    }
  }
}

Elem Field::add_large(Elem a, Elem b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t ord = q_ - 1;
  const std::uint32_t la = log_[a];
  const std::uint32_t lb = log_[b];
  const std::uint32_t d = lb >= la ? lb - la : lb + ord - la;
  const std::uint32_t z = zech_[d];
  if (z == ord) return 0;
  return exp_[la + z];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (k_ == 1) return pow(a, p_ - 2);
  const std::uint32_t ord = q_ - 1;
  return exp_[(ord - log_[a]) % ord];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::vector<unsigned> Field::coeffs(Elem a) const {
  std::vector<unsigned> c(k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Elem Field::from_coeffs(std::span<const unsigned> c) const {
  Elem v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + (c[i] % p_);
  return v;
}

std::string Field::to_string(Elem a) const {
  if (k_ == 1) return std::to_string(a);
  const auto c = coeffs(a);
  std::string out;
  for (unsigned i = k_; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]);
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

void Field::axpy(std::span<Elem> y, Elem c, std::span<const Elem> x) const {
  if (c == 0) return;
  const std::size_t n = y.size();
  if (k_ == 1) {
    const std::uint32_t p = p_;
    for (std::size_t j = 0; j < n; ++j) y[j] = (y[j] + c * x[j]) % p;
    return;
  }
  if (small_) {
    const std::uint16_t* mrow = mul_tab_.data() + std::size_t{c} * q_;
    const std::uint16_t* at = add_tab_.data();
    for (std::size_t j = 0; j < n; ++j) y[j] = at[std::size_t{y[j]} * q_ + mrow[x[j]]];
    return;
  }
  const std::uint32_t lc = log_[c];
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j] == 0) continue;
    const Elem t = exp_[lc + log_[x[j]]];
    y[j] = p_ == 2 ? (y[j] ^ t) : add_large(y[j], t);
  }
}

void Field::scale(std::span<Elem> y, Elem c) const {
  for (auto& v : y) v = mul(v, c);
}

}  // namespace spechtvar::ff
