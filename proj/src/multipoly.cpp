#include "spechtvar/multipoly.hpp"

#include <algorithm>
#include <functional>

#include "spechtvar/error.hpp"

namespace spechtvar::ff {

namespace {

constexpr unsigned shift_of(unsigned var) { return 8 * (MultiPoly::kMaxVars - 1 - var); }

bool divides(MultiPoly::Monomial a, MultiPoly::Monomial b) {
  for (unsigned v = 0; v < MultiPoly::kMaxVars; ++v) {
    if (((a >> shift_of(v)) & 0xff) > ((b >> shift_of(v)) & 0xff)) return false;
  }
  return true;
}

unsigned inverse_mod(unsigned a, unsigned p) {
  unsigned result = 1;
  unsigned e = p - 2;
  std::uint64_t base = a;
  while (e > 0) {
    if (e & 1) result = static_cast<unsigned>((result * base) % p);
    base = (base * base) % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

MultiPoly::MultiPoly(unsigned nvars, unsigned p) : nvars_(nvars), p_(p) {
  if (nvars > kMaxVars) throw Error(ErrorCode::TooLarge, "MultiPoly supports at most 8 variables");
}

MultiPoly MultiPoly::constant(unsigned nvars, unsigned p, long long c) {
  MultiPoly f(nvars, p);
  std::vector<unsigned> zero(nvars, 0);
  f.add_term(zero, c);
  return f;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned p, unsigned i) {
  MultiPoly f(nvars, p);
  std::vector<unsigned> e(nvars, 0);
  e.at(i) = 1;
  f.add_term(e, 1);
  return f;
}

MultiPoly::Monomial MultiPoly::pack(std::span<const unsigned> exponents) {
  Monomial m = 0;
  for (unsigned v = 0; v < exponents.size(); ++v) {
    if (exponents[v] > kMaxExponent) throw Error(ErrorCode::TooLarge, "exponent exceeds 255");
    m |= Monomial{exponents[v]} << shift_of(v);
  }
  return m;
}

std::vector<unsigned> MultiPoly::exponents(Monomial m) const {
  std::vector<unsigned> e(nvars_);
  for (unsigned v = 0; v < nvars_; ++v) e[v] = static_cast<unsigned>((m >> shift_of(v)) & 0xff);
  return e;
}

void MultiPoly::add_term(std::span<const unsigned> exponents, long long coeff) {
  if (exponents.size() != nvars_) throw Error(ErrorCode::ArityMismatch, "exponent vector length");
  long long c = coeff % static_cast<long long>(p_);
  if (c < 0) c += p_;
  if (c == 0) return;
  MultiPoly single(nvars_, p_);
  single.terms_.push_back({pack(exponents), static_cast<unsigned>(c)});
  *this = *this + single;
}

unsigned MultiPoly::coefficient(std::span<const unsigned> exponents) const {
  const Monomial m = pack(exponents);
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

int MultiPoly::total_degree() const {
  int best = -1;
  for (const auto& t : terms_) {
    int d = 0;
    for (unsigned v = 0; v < nvars_; ++v) d += static_cast<int>((t.mono >> shift_of(v)) & 0xff);
    best = std::max(best, d);
  }
  return best;
}

bool MultiPoly::is_homogeneous() const {
  int deg = -1;
  for (const auto& t : terms_) {
    int d = 0;
    for (unsigned v = 0; v < nvars_; ++v) d += static_cast<int>((t.mono >> shift_of(v)) & 0xff);
    if (deg >= 0 && d != deg) return false;
    deg = d;
  }
  return true;
}

unsigned MultiPoly::max_exponent() const {
  unsigned best = 0;
  for (const auto& t : terms_) {
    for (unsigned v = 0; v < nvars_; ++v) best = std::max(best, static_cast<unsigned>((t.mono >> shift_of(v)) & 0xff));
  }
  return best;
}

MultiPoly MultiPoly::combine(const MultiPoly& o, unsigned factor) const {
  MultiPoly r(nvars_, p_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].mono > o.terms_[j].mono)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].mono > terms_[i].mono) {
      const unsigned c = (o.terms_[j].coeff * factor) % p_;
      if (c != 0) r.terms_.push_back({o.terms_[j].mono, c});
      ++j;
    } else {
      const unsigned c = (terms_[i].coeff + o.terms_[j].coeff * factor) % p_;
      if (c != 0) r.terms_.push_back({terms_[i].mono, c});
      ++i;
      ++j;
    }
  }
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const { return combine(o, 1); }

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return combine(o, p_ - 1); }

MultiPoly MultiPoly::scaled(unsigned c) const {
  c %= p_;
  MultiPoly r(nvars_, p_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, (t.coeff * c) % p_});
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(nvars_, p_);
  if (is_zero() || o.is_zero()) return r;
  if (max_exponent() + o.max_exponent() > kMaxExponent) throw Error(ErrorCode::TooLarge, "exponent overflow in product");
  std::vector<Term> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prods.push_back({a.mono + b.mono, (a.coeff * b.coeff) % p_});
  }
  std::sort(prods.begin(), prods.end(), [](const Term& x, const Term& y) { return x.mono > y.mono; });
  for (std::size_t i = 0; i < prods.size();) {
    const Monomial m = prods[i].mono;
    unsigned c = 0;
    for (; i < prods.size() && prods[i].mono == m; ++i) c = (c + prods[i].coeff) % p_;
    if (c != 0) r.terms_.push_back({m, c});
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (unsigned v = 0; v < nvars_; ++v) {
      const unsigned e = (t.mono >> shift_of(v)) & 0xff;
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(v + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += std::to_string(t.coeff);
    } else {
      if (t.coeff != 1) out += std::to_string(t.coeff) + "*";
      out += mono;
    }
  }
  return out;
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::NoSolution, "division by the zero polynomial");
  const unsigned p = a.p_;
  const auto lead = b.terms_.front();
  const unsigned lead_inv = inverse_mod(lead.coeff, p);
  MultiPoly quotient(a.nvars_, p);
  MultiPoly rem = a;
  while (!rem.is_zero()) {
    const auto top = rem.terms_.front();
    if (!divides(lead.mono, top.mono)) throw Error(ErrorCode::NoSolution, "polynomial division is not exact");
    const MultiPoly::Term qt{top.mono - lead.mono, (top.coeff * lead_inv) % p};
    quotient.terms_.push_back(qt);
    MultiPoly shifted(a.nvars_, p);
    shifted.terms_.reserve(b.terms_.size());
    for (const auto& t : b.terms_) shifted.terms_.push_back({t.mono + qt.mono, t.coeff});
    rem = rem.combine(shifted, (p - qt.coeff) % p);
  }
  // Quotient terms were produced in strictly descending order.
  return quotient;
}

Elem poly_eval(const Field& field, const MultiPoly& f, std::span<const Elem> point) {
  if (point.size() != f.nvars()) throw Error(ErrorCode::ArityMismatch, "point length differs from variable count");
  // Powers of each coordinate up to the largest exponent used.
  std::vector<std::vector<Elem>> powers(f.nvars());
  Elem value = 0;
  for (const auto& t : f.terms()) {
    const auto e = f.exponents(t.mono);
    Elem term = field.embed(t.coeff);
    for (unsigned v = 0; v < f.nvars(); ++v) {
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(1);
      while (pw.size() <= e[v]) pw.push_back(field.mul(pw.back(), point[v]));
      term = field.mul(term, pw[e[v]]);
    }
    value = field.add(value, term);
  }
  return value;
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, unsigned nvars, unsigned p)
    : rows_(rows), cols_(cols), entries_(rows * cols, MultiPoly(nvars, p)) {}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::ArityMismatch, "poly multiply: inner dimensions differ");
  const auto& proto = a(0, 0);
  PolyMatrix c(a.rows(), b.cols(), proto.nvars(), proto.characteristic());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j).is_zero()) continue;
        c(i, j) = c(i, j) + aik * b(k, j);
      }
    }
  }
  return c;
}

std::size_t fraction_free_rank(PolyMatrix m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const auto& proto = m(0, 0);
  MultiPoly prev = MultiPoly::constant(proto.nvars(), proto.characteristic(), 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    // Sparsest available pivot keeps intermediate minors small.
    std::size_t piv = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      if (piv == m.rows() || m(i, c).size() < m(piv, c).size()) piv = i;
    }
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    }
    const MultiPoly pivot = m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const MultiPoly lead = m(i, c);
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        MultiPoly num = pivot * m(i, j);
        if (!lead.is_zero() && !m(r, j).is_zero()) num = num - lead * m(r, j);
        m(i, j) = exact_divide(num, prev);
      }
      m(i, c) = MultiPoly(proto.nvars(), proto.characteristic());
    }
    prev = pivot;
    ++r;
  }
  return r;
}

}  // namespace spechtvar::ff
