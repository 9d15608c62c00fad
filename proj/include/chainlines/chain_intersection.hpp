#ifndef CHAINLINES_CHAIN_INTERSECTION_HPP
#define CHAINLINES_CHAIN_INTERSECTION_HPP

// Intersection classes on (P^N)^{l-1} for chains of l lines x -> p^1 -> ... ->
// p^{l-1} -> y between two fixed points of X.  The k-th factor carries the
// connection point p^k; each defining form G_i contributes one hypersurface
// per coefficient of G_i restricted to each line of the chain.
//
// Condition bookkeeping (D = sum d_i, m forms):
//   x-side    G_i(u x + v p^1):        d_i conditions on p^1, degrees 1..d_i
//   interior  G_i(p^k) = 0, 2<=k<=l-2: one condition of degree d_i on p^k
//   y-side    G_i(u p^{l-1} + v y):    d_i conditions on p^{l-1}, degrees 1..d_i
//   mixed     G_i(u p^{k-1} + v p^k):  d_i - 1 bihomogeneous conditions,
//             bidegrees (j, d_i - j) for j = 1..d_i-1, k = 2..l-1
// for a total of l*D - m.  For l = 2 both segments meet p^1 only; the y-side
// coefficient of degree d_i duplicates G_i(p^1), so it contributes 1..d_i-1.

#include <chainlines/chow_ring.hpp>
#include <chainlines/criteria.hpp>
#include <chainlines/errors.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace chainlines {

class ChainProblem {
 public:
  ChainProblem(DefiningData data, std::int64_t length) : data_(std::move(data)), length_(length) {
    detail::require_length(length_, 2);
  }

  const DefiningData& data() const noexcept { return data_; }
  std::int64_t length() const noexcept { return length_; }
  // One P^N factor per connection point.
  std::size_t points() const noexcept { return static_cast<std::size_t>(length_ - 1); }
  ProductSpace space() const {
    return ProductSpace::power(static_cast<std::uint32_t>(data_.ambient()), points());
  }
  // l*D - m
  std::int64_t condition_count() const noexcept {
    return length_ * data_.total_degree() - data_.equations();
  }

 private:
  DefiningData data_;
  std::int64_t length_;
};

struct ConditionTally {
  std::int64_t endpoint_x = 0;              // on factor 1
  std::int64_t endpoint_y = 0;              // on factor l-1 (factor 1 when l = 2)
  std::vector<std::int64_t> interior_pure;  // factors 2..l-2
  std::vector<std::int64_t> mixed;          // pairs (k-1, k), k = 2..l-1

  std::int64_t total() const noexcept {
    std::int64_t t = endpoint_x + endpoint_y;
    for (auto c : interior_pure) t += c;
    for (auto c : mixed) t += c;
    return t;
  }
};

inline ConditionTally condition_tally(const ChainProblem& p) {
  const auto d = p.data().total_degree();
  const auto m = p.data().equations();
  const auto l = p.length();
  ConditionTally t;
  t.endpoint_x = d;
  if (l == 2) {
    t.endpoint_y = d - m;
    return t;
  }
  t.endpoint_y = d;
  t.interior_pure.assign(static_cast<std::size_t>(l - 3), m);
  t.mixed.assign(static_cast<std::size_t>(l - 2), d - m);
  return t;
}

// N(l-1) - (l*D - m); may be negative.
inline std::int64_t expected_dimension(const ChainProblem& p) {
  return p.data().ambient() * (p.length() - 1) - p.condition_count();
}

// h_1^D h_2^m ... h_{l-2}^m h_{l-1}^D (h_1+h_2)^{D-m} ... (h_{l-2}+h_{l-1})^{D-m},
// collapsing to h_1^{2D-m} for l = 2.  Degree coefficients are dropped: this
// class only decides whether the intersection is empty.
inline ChowClass existence_class(const ChainProblem& p) {
  const auto space = p.space();
  const auto d = static_cast<std::uint32_t>(p.data().total_degree());
  const auto m = static_cast<std::uint32_t>(p.data().equations());
  const auto k = p.points();
  if (p.length() == 2) return ChowClass::monomial(space, Monomial{2 * d - m}, 1);

  std::vector<std::uint32_t> pure(k, m);
  pure.front() = d;
  pure.back() = d;
  ChowClass result = ChowClass::monomial(space, Monomial(std::move(pure)), 1);
  for (std::size_t j = 1; j < k && !result.is_zero(); ++j) {
    auto link = hyperplane(space, j) + hyperplane(space, j + 1);
    result *= pow(link, d - m);
  }
  return result;
}

enum class ConditionKind { endpoint_x, endpoint_y, interior_pure, mixed };

inline const char* to_string(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::endpoint_x: return "endpoint_x";
    case ConditionKind::endpoint_y: return "endpoint_y";
    case ConditionKind::interior_pure: return "interior_pure";
    case ConditionKind::mixed: return "mixed";
  }
  return "?";
}

struct ConditionFactor {
  ConditionKind kind;
  std::size_t polynomial;  // 0-based index of G_i
  ChowClass cls;
};

// Factor count beyond which counting classes are refused.
inline constexpr std::int64_t max_condition_count = 100'000;

// The hypersurface classes cut by each coefficient condition, pure factors
// first so that products stay small for as long as possible.
inline std::vector<ConditionFactor> counting_factors(const ChainProblem& p) {
  if (p.condition_count() > max_condition_count)
    throw budget_exceeded("counting class would need " + std::to_string(p.condition_count()) +
                          " factors (limit " + std::to_string(max_condition_count) + ")");
  const auto space = p.space();
  const auto k = p.points();
  const auto& degrees = p.data().degrees();
  auto h = [&](std::size_t i) { return hyperplane(space, i); };

  std::vector<ConditionFactor> out;
  out.reserve(static_cast<std::size_t>(p.condition_count()));
  for (std::size_t i = 0; i < degrees.size(); ++i)
    for (std::int64_t j = 1; j <= degrees[i]; ++j)
      out.push_back({ConditionKind::endpoint_x, i, Integer(j) * h(1)});

  if (p.length() == 2) {
    for (std::size_t i = 0; i < degrees.size(); ++i)
      for (std::int64_t j = 1; j < degrees[i]; ++j)
        out.push_back({ConditionKind::endpoint_y, i, Integer(j) * h(1)});
    return out;
  }

  for (std::size_t i = 0; i < degrees.size(); ++i)
    for (std::int64_t j = 1; j <= degrees[i]; ++j)
      out.push_back({ConditionKind::endpoint_y, i, Integer(j) * h(k)});
  for (std::size_t i = 0; i < degrees.size(); ++i)
    for (std::size_t pt = 2; pt < k; ++pt)
      out.push_back({ConditionKind::interior_pure, i, Integer(degrees[i]) * h(pt)});
  for (std::size_t i = 0; i < degrees.size(); ++i)
    for (std::size_t pt = 2; pt <= k; ++pt)
      for (std::int64_t j = 1; j < degrees[i]; ++j)
        out.push_back({ConditionKind::mixed, i, Integer(j) * h(pt - 1) + Integer(degrees[i] - j) * h(pt)});
  return out;
}

// Product of all condition hypersurfaces, with their degree coefficients.
inline ChowClass counting_class(const ChainProblem& p) {
  ChowClass r = ChowClass::one(p.space());
  for (const auto& f : counting_factors(p)) {
    r *= f.cls;
    if (r.is_zero()) break;
  }
  return r;
}

// Number of chains of length l through two general points, counted with
// multiplicity: the degree of the zero-dimensional counting class.  Assumes the
// conditions meet transversally, as for a generic X with the given degrees.
inline Integer chain_count(const ChainProblem& p) {
  const auto dim = expected_dimension(p);
  if (dim < 0) throw overdetermined_error(dim);
  if (dim > 0) throw underdetermined_error(dim);
  return counting_class(p).top_coefficient();
}

// floor(k (D - m) / (l - 1)) for k = 1..l-2.
inline std::vector<std::int64_t> witness_exponents(const ChainProblem& p) {
  const auto spread = p.data().total_degree() - p.data().equations();
  const auto l = p.length();
  std::vector<std::int64_t> j;
  for (std::int64_t k = 1; k <= l - 2; ++k) j.push_back(k * spread / (l - 1));
  return j;
}

struct WitnessMonomial {
  std::vector<std::int64_t> exponents;
  std::vector<std::int64_t> interior_splits;  // the witness exponents j_k
  std::int64_t bound = 0;                     // N
  std::int64_t expected_dimension = 0;

  bool fits(std::size_t factor) const { return exponents.at(factor) <= bound; }
  bool first_fits() const { return fits(0); }
  bool interior_fits() const {
    for (std::size_t i = 1; i + 1 < exponents.size(); ++i)
      if (!fits(i)) return false;
    return true;
  }
  bool last_fits() const { return fits(exponents.size() - 1); }
  // Every exponent survives truncation.
  bool verdict() const { return first_fits() && interior_fits() && last_fits(); }

  Monomial monomial() const {
    std::vector<std::uint32_t> e;
    for (auto x : exponents) e.push_back(static_cast<std::uint32_t>(x));
    return Monomial(std::move(e));
  }
};

// The summand h_1^{D+j_1} h_2^{D-j_1+j_2} ... h_{l-1}^{2D-m-j_{l-2}} of the
// existence class, which is nonzero exactly when every exponent is <= N.
inline WitnessMonomial witness_monomial(const ChainProblem& p) {
  const auto d = p.data().total_degree();
  const auto m = p.data().equations();
  WitnessMonomial w;
  w.bound = p.data().ambient();
  w.expected_dimension = expected_dimension(p);
  w.interior_splits = witness_exponents(p);
  const auto& j = w.interior_splits;
  if (p.length() == 2) {
    w.exponents = {2 * d - m};
    return w;
  }
  w.exponents.push_back(d + j.front());
  for (std::size_t k = 1; k < j.size(); ++k) w.exponents.push_back(d - j[k - 1] + j[k]);
  w.exponents.push_back(2 * d - m - j.back());
  return w;
}

}  // namespace chainlines

#endif  // CHAINLINES_CHAIN_INTERSECTION_HPP
