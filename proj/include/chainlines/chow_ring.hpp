#ifndef CHAINLINES_CHOW_RING_HPP
#define CHAINLINES_CHOW_RING_HPP

// Exact arithmetic in the Chow ring of a product of projective spaces,
//
//   A*(P^{N_1} x ... x P^{N_k}) = Z[h_1, ..., h_k] / (h_1^{N_1+1}, ..., h_k^{N_k+1}),
//
// with arbitrary-precision integer coefficients.  Classes are stored sparsely,
// keyed by exponent vectors in lexicographic order, and are kept normalized:
// no zero coefficients and no monomial with e_i > N_i.

#include <chainlines/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chainlines {

using Integer = boost::multiprecision::cpp_int;

class ProductSpace {
 public:
  explicit ProductSpace(std::vector<std::uint32_t> factor_dims) : dims_(std::move(factor_dims)) {
    if (dims_.empty()) throw std::invalid_argument("product space needs at least one factor");
  }
  ProductSpace(std::initializer_list<std::uint32_t> factor_dims)
      : ProductSpace(std::vector<std::uint32_t>(factor_dims)) {}

  // (P^N)^k
  static ProductSpace power(std::uint32_t ambient, std::size_t k) {
    return ProductSpace(std::vector<std::uint32_t>(k, ambient));
  }

  std::size_t factors() const noexcept { return dims_.size(); }
  // 0-based
  std::uint32_t dim(std::size_t i) const { return dims_.at(i); }
  const std::vector<std::uint32_t>& dims() const noexcept { return dims_; }
  std::uint64_t total_dim() const noexcept {
    std::uint64_t s = 0;
    for (auto n : dims_) s += n;
    return s;
  }

  friend bool operator==(const ProductSpace&, const ProductSpace&) = default;

 private:
  std::vector<std::uint32_t> dims_;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {}
  Monomial(std::initializer_list<std::uint32_t> exponents) : exps_(exponents) {}

  static Monomial unit(std::size_t k) { return Monomial(std::vector<std::uint32_t>(k, 0)); }

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept {
    std::uint64_t s = 0;
    for (auto e : exps_) s += e;
    return s;
  }

  bool fits(const ProductSpace& space) const {
    if (exps_.size() != space.factors()) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > space.dim(i)) return false;
    return true;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

class ChowClass {
 public:
  using term_map = std::map<Monomial, Integer>;

  // The zero class.
  explicit ChowClass(ProductSpace space) : space_(std::move(space)) {}

  static ChowClass zero(const ProductSpace& space) { return ChowClass(space); }

  static ChowClass one(const ProductSpace& space) {
    return monomial(space, Monomial::unit(space.factors()), 1);
  }

  // coeff * h^m; zero if m is truncated away.
  static ChowClass monomial(const ProductSpace& space, const Monomial& m, const Integer& coeff) {
    if (m.size() != space.factors())
      throw std::invalid_argument("monomial length does not match the number of factors");
    ChowClass c(space);
    if (coeff != 0 && m.fits(space)) c.terms_.emplace(m, coeff);
    return c;
  }

  // h_i, with 1 <= i <= k.
  static ChowClass hyperplane(const ProductSpace& space, std::size_t i) {
    if (i < 1 || i > space.factors())
      throw std::out_of_range("factor index " + std::to_string(i) + " outside 1.." +
                              std::to_string(space.factors()));
    std::vector<std::uint32_t> e(space.factors(), 0);
    e[i - 1] = 1;
    return monomial(space, Monomial(std::move(e)), 1);
  }

  const ProductSpace& space() const noexcept { return space_; }
  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coefficient(const Monomial& m) const {
    if (m.size() != space_.factors())
      throw std::invalid_argument("monomial length does not match the number of factors");
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  // Coefficient of h_1^{N_1} ... h_k^{N_k}: the degree of a zero-dimensional class.
  Integer top_coefficient() const { return coefficient(Monomial(space_.dims())); }

  bool is_homogeneous() const noexcept {
    if (terms_.empty()) return true;
    auto d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }

  ChowClass& operator+=(const ChowClass& rhs) {
    require_same_space(rhs);
    for (const auto& [m, c] : rhs.terms_) {
      auto [it, inserted] = terms_.try_emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }

  ChowClass& operator-=(const ChowClass& rhs) { return *this += -rhs; }

  ChowClass& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  ChowClass operator-() const {
    ChowClass r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(ChowClass a, const Integer& s) { return a *= s; }
  friend ChowClass operator*(const Integer& s, ChowClass a) { return a *= s; }

  // Truncated product: monomials with some e_i > N_i are dropped as they arise.
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b) {
    a.require_same_space(b);
    ChowClass r(a.space_);
    const auto k = a.space_.factors();
    std::vector<std::uint32_t> e(k);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        bool fits = true;
        for (std::size_t i = 0; i < k; ++i) {
          e[i] = ma[i] + mb[i];
          if (e[i] > a.space_.dim(i)) {
            fits = false;
            break;
          }
        }
        if (!fits) continue;
        auto [it, inserted] = r.terms_.try_emplace(Monomial(e), Integer(ca * cb));
        if (!inserted) it->second += ca * cb;
      }
    }
    r.prune();
    return r;
  }

  ChowClass& operator*=(const ChowClass& rhs) { return *this = *this * rhs; }

  friend bool operator==(const ChowClass&, const ChowClass&) = default;

  // Terms in ascending lexicographic exponent order, "<c>*h1^<e1>*...", joined by " + ".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        os << "*h" << (i + 1);
        if (m[i] != 1) os << '^' << m[i];
      }
    }
    return os.str();
  }

 private:
  void require_same_space(const ChowClass& other) const {
    if (!(space_ == other.space_)) throw space_mismatch("Chow classes live in different product spaces");
  }

  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second == 0)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  ProductSpace space_;
  term_map terms_;
};

inline ChowClass hyperplane(const ProductSpace& space, std::size_t i) {
  return ChowClass::hyperplane(space, i);
}

inline ChowClass add(const ChowClass& a, const ChowClass& b) { return a + b; }
inline ChowClass mul(const ChowClass& a, const ChowClass& b) { return a * b; }

// Binary exponentiation over truncated multiplication; pow(a, 0) = 1.
inline ChowClass pow(const ChowClass& a, std::uint64_t e) {
  ChowClass result = ChowClass::one(a.space());
  ChowClass base = a;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) {
      // a remaining bit is set, so the result would pick up the zero base
      if (base.is_zero()) return ChowClass::zero(a.space());
      base *= base;
    }
  }
  return result;
}

inline Integer coefficient(const ChowClass& c, const Monomial& m) { return c.coefficient(m); }
inline Integer top_coefficient(const ChowClass& c) { return c.top_coefficient(); }
inline bool is_zero(const ChowClass& c) { return c.is_zero(); }

// Product of a list of classes, all in the same space.
template <class Range>
ChowClass product(const ProductSpace& space, const Range& factors) {
  ChowClass r = ChowClass::one(space);
  for (const auto& f : factors) {
    r *= f;
    if (r.is_zero()) break;
  }
  return r;
}

}  // namespace chainlines

#endif  // CHAINLINES_CHOW_RING_HPP
