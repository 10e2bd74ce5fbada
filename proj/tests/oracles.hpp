// Slow, direct reference implementations used only by the tests. None of them
// calls into the library's arithmetic or combinatorics.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

/// Polynomials over GF(p), coefficient of x^i at index i, no trailing zeros.
using Poly = std::vector<int>;

inline Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline Poly poly_mod(Poly a, const Poly& m, int p) {
  a = trim(std::move(a));
  // m monic.
  while (a.size() >= m.size()) {
    const int lead = a.back();
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    a = trim(std::move(a));
  }
  return a;
}

inline bool is_irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  // Try every monic divisor of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Poly g(static_cast<std::size_t>(d + 1), 0);
      int c = code;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = c % p;
        c /= p;
      }
      g[static_cast<std::size_t>(d)] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

/// Least monic irreducible of degree k, comparing (c_{k-1}, ..., c_0) as
/// base-p digits.
inline Poly least_irreducible(int p, int k) {
  int count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (int code = 0; code < count; ++code) {
    Poly f(static_cast<std::size_t>(k + 1), 0);
    int c = code;
    for (int i = 0; i < k; ++i) {
      f[static_cast<std::size_t>(i)] = c % p;
      c /= p;
    }
    f[static_cast<std::size_t>(k)] = 1;
    if (is_irreducible(f, p)) return f;
  }
  return {};
}

/// GF(p^k) by schoolbook polynomial arithmetic on base-p packed integers.
struct NaiveField {
  int p;
  int k;
  Poly modulus;

  NaiveField(int p_, int k_) : p(p_), k(k_), modulus(least_irreducible(p_, k_)) {}

  Poly unpack(std::uint32_t a) const {
    Poly out;
    for (int i = 0; i < k; ++i) {
      out.push_back(static_cast<int>(a % static_cast<std::uint32_t>(p)));
      a /= static_cast<std::uint32_t>(p);
    }
    return trim(out);
  }
  std::uint32_t pack(const Poly& a) const {
    std::uint32_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(a[i]);
    return v;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    Poly x = unpack(a);
    Poly y = unpack(b);
    x.resize(std::max(x.size(), y.size()), 0);
    for (std::size_t i = 0; i < y.size(); ++i) x[i] = (x[i] + y[i]) % p;
    return pack(trim(x));
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const Poly x = unpack(a);
    const Poly y = unpack(b);
    if (x.empty() || y.empty()) return 0;
    Poly z(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = 0; j < y.size(); ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p;
    }
    return pack(poly_mod(z, modulus, p));
  }
  std::uint32_t pow(std::uint32_t a, unsigned e) const {
    std::uint32_t r = 1;
    for (unsigned i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  std::uint32_t neg(std::uint32_t a) const {
    Poly x = unpack(a);
    for (auto& c : x) c = (p - c) % p;
    return pack(trim(x));
  }
  std::uint32_t inv(std::uint32_t a) const {
    const std::uint32_t q = order();
    for (std::uint32_t b = 1; b < q; ++b) {
      if (mul(a, b) == 1) return b;
    }
    return 0;
  }
  std::uint32_t order() const {
    std::uint32_t q = 1;
    for (int i = 0; i < k; ++i) q *= static_cast<std::uint32_t>(p);
    return q;
  }
};

using Mat = std::vector<std::vector<std::uint32_t>>;

/// Rank by plain Gaussian elimination over a NaiveField.
inline std::size_t rank(const NaiveField& f, Mat m) {
  if (m.size() > 0 && m[0].size() < m.size()) {
    // Eliminate along the short side.
    Mat t(m[0].size(), std::vector<std::uint32_t>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    }
    m = std::move(t);
  }
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const std::uint32_t inv = f.inv(m[r][c]);
    for (auto& x : m[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint32_t factor = f.neg(m[i][c]);
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = f.add(m[i][j], f.mul(factor, m[r][j]));
    }
    ++r;
  }
  return r;
}

inline Mat multiply(const NaiveField& f, const Mat& a, const Mat& b) {
  Mat c(a.size(), std::vector<std::uint32_t>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j) c[i][j] = f.add(c[i][j], f.mul(a[i][k], b[k][j]));
    }
  }
  return c;
}

using Parts = std::vector<int>;

/// p-core by repeatedly stripping a rim hook of length p, found from a node
/// with hook length p. Returns (core, number of hooks removed).
inline std::pair<Parts, int> core_by_rim_hooks(Parts mu, int p) {
  int removed = 0;
  while (true) {
    bool found = false;
    for (std::size_t i = 0; i < mu.size() && !found; ++i) {
      for (int j = 0; j < mu[i] && !found; ++j) {
        int leg = 0;
        for (std::size_t r = i + 1; r < mu.size() && mu[r] > j; ++r) ++leg;
        const int arm = mu[i] - j - 1;
        if (arm + leg + 1 != p) continue;
        // Rows above the bottom of the hook shrink to the next row's length
        // minus one; the bottom row keeps j cells.
        Parts next = mu;
        const std::size_t bottom = i + static_cast<std::size_t>(leg);
        for (std::size_t r = i; r <= bottom; ++r) next[r] = (r == bottom) ? j : mu[r + 1] - 1;
        while (!next.empty() && next.back() == 0) next.pop_back();
        mu = next;
        ++removed;
        found = true;
      }
    }
    if (!found) return {mu, removed};
  }
}

/// Number of standard tableaux by the branching recursion, memoised.
inline BigInt tableaux_by_branching(const Parts& mu, std::map<Parts, BigInt>& memo) {
  if (mu.empty()) return 1;
  if (auto it = memo.find(mu); it != memo.end()) return it->second;
  BigInt total = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i + 1 < mu.size() && mu[i + 1] == mu[i]) continue;
    Parts nu = mu;
    --nu[i];
    if (nu[i] == 0) nu.pop_back();
    total += tableaux_by_branching(nu, memo);
  }
  memo[mu] = total;
  return total;
}

/// M^mu with tabloids keyed by the row of each letter, enumerated as the
/// distinct arrangements of the multiset of row labels.
struct TabloidModule {
  std::vector<std::string> tabloids;
  std::map<std::string, std::size_t> index;

  explicit TabloidModule(const Parts& mu) {
    std::string rows;
    for (std::size_t r = 0; r < mu.size(); ++r) rows.append(static_cast<std::size_t>(mu[r]), static_cast<char>(r));
    do {
      index.emplace(rows, tabloids.size());
      tabloids.push_back(rows);
    } while (std::next_permutation(rows.begin(), rows.end()));
  }

  std::size_t size() const { return tabloids.size(); }

  /// Index of sigma {t}; sigma is zero-based, letter l goes to sigma[l].
  std::size_t act(const std::vector<int>& sigma, std::size_t t) const {
    std::string out(tabloids[t].size(), 0);
    for (std::size_t l = 0; l < out.size(); ++l) out[static_cast<std::size_t>(sigma[l])] = tabloids[t][l];
    return index.at(out);
  }

  /// Signed column-stabiliser sum of the tableau (rows of one-based letters),
  /// as a dense vector over GF(p).
  std::vector<std::uint32_t> polytabloid(const std::vector<std::vector<int>>& tableau, int p) const {
    std::vector<std::vector<int>> columns;
    for (std::size_t j = 0; j < tableau[0].size(); ++j) {
      std::vector<int> col;
      for (const auto& row : tableau) {
        if (j < row.size()) col.push_back(row[j]);
      }
      columns.push_back(col);
    }
    std::vector<std::uint32_t> v(size(), 0);
    std::vector<std::vector<int>> perm(columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      perm[j].resize(columns[j].size());
      for (std::size_t i = 0; i < perm[j].size(); ++i) perm[j][i] = static_cast<int>(i);
    }
    std::size_t letters = 0;
    for (const auto& row : tableau) letters += row.size();
    while (true) {
      std::string rows(letters, 0);
      int sign = 1;
      for (std::size_t j = 0; j < columns.size(); ++j) {
        for (std::size_t a = 0; a < perm[j].size(); ++a) {
          for (std::size_t b = a + 1; b < perm[j].size(); ++b) sign *= perm[j][a] > perm[j][b] ? -1 : 1;
          // The letter in column j, row a moves to row perm[j][a].
          rows[static_cast<std::size_t>(columns[j][a] - 1)] = static_cast<char>(perm[j][a]);
        }
      }
      auto& slot = v[index.at(rows)];
      slot = static_cast<std::uint32_t>((static_cast<int>(slot) + sign + p) % p);
      std::size_t j = 0;
      while (j < perm.size() && !std::next_permutation(perm[j].begin(), perm[j].end())) ++j;
      if (j == perm.size()) break;
    }
    return v;
  }
};

/// The p-cycle on letters (i-1)p .. ip-1, zero-based, inside S_m.
inline std::vector<int> block_generator(int m, int p, int i) {
  std::vector<int> sigma(static_cast<std::size_t>(m));
  for (int l = 0; l < m; ++l) sigma[static_cast<std::size_t>(l)] = l;
  const int lo = (i - 1) * p;
  for (int l = lo; l < lo + p; ++l) sigma[static_cast<std::size_t>(l)] = (l + 1 < lo + p) ? l + 1 : lo;
  return sigma;
}

/// Ranks of N^0..N^p on the span of `columns`, N = sum alpha_i (g_i - 1)
/// acting on M^mu. Works on the full tabloid space; no restricted matrices.
inline std::vector<std::size_t> span_rank_vector(const NaiveField& f, const TabloidModule& module,
                                                 const std::vector<std::vector<int>>& generators,
                                                 const std::vector<std::uint32_t>& alpha, Mat columns) {
  std::vector<std::vector<std::size_t>> images;
  for (const auto& g : generators) {
    std::vector<std::size_t> img(module.size());
    for (std::size_t t = 0; t < module.size(); ++t) img[t] = module.act(g, t);
    images.push_back(std::move(img));
  }
  auto apply = [&](const std::vector<std::uint32_t>& v) {
    std::vector<std::uint32_t> w(v.size(), 0);
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (alpha[i] == 0) continue;
      for (std::size_t t = 0; t < v.size(); ++t) {
        if (v[t] == 0) continue;
        const std::uint32_t c = f.mul(alpha[i], v[t]);
        w[images[i][t]] = f.add(w[images[i][t]], c);
        w[t] = f.add(w[t], f.neg(c));
      }
    }
    return w;
  };
  std::vector<std::size_t> ranks;
  for (int j = 0; j <= f.p; ++j) {
    ranks.push_back(columns.empty() ? 0 : rank(f, columns));
    for (auto& col : columns) col = apply(col);
  }
  return ranks;
}

}  // namespace oracle
