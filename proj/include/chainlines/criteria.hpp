#ifndef CHAINLINES_CRITERIA_HPP
#define CHAINLINES_CRITERIA_HPP

// Closed-form numeric criteria for connecting two general points of
// X in P^N, set-theoretically cut out by m forms of degrees d_1..d_m, by
// chains of lines.  Everything is evaluated in exact integer arithmetic.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chainlines {

// Input bounds keep every intermediate product l*D, N*(l-1) well inside int64.
inline constexpr std::int64_t max_degree = 1'000'000;
inline constexpr std::int64_t max_ambient = 1'000'000;
inline constexpr std::int64_t max_length = 1'000'000;
inline constexpr std::size_t max_equations = 1'000;

class DefiningData {
 public:
  DefiningData(std::vector<std::int64_t> degrees, std::int64_t ambient)
      : degrees_(std::move(degrees)), ambient_(ambient) {
    if (degrees_.empty()) throw std::invalid_argument("at least one defining degree is required");
    if (degrees_.size() > max_equations) throw std::invalid_argument("too many defining equations");
    for (auto d : degrees_)
      if (d < 1 || d > max_degree)
        throw std::invalid_argument("degree " + std::to_string(d) + " outside [1, " +
                                    std::to_string(max_degree) + "]");
    if (ambient_ < 1 || ambient_ > max_ambient)
      throw std::invalid_argument("ambient dimension " + std::to_string(ambient_) + " outside [1, " +
                                  std::to_string(max_ambient) + "]");
  }

  const std::vector<std::int64_t>& degrees() const noexcept { return degrees_; }
  std::int64_t ambient() const noexcept { return ambient_; }
  std::int64_t equations() const noexcept { return static_cast<std::int64_t>(degrees_.size()); }
  // D = sum of the degrees
  std::int64_t total_degree() const noexcept {
    return std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0});
  }
  bool all_linear() const noexcept {
    return std::all_of(degrees_.begin(), degrees_.end(), [](auto d) { return d == 1; });
  }

  friend bool operator==(const DefiningData&, const DefiningData&) = default;

 private:
  std::vector<std::int64_t> degrees_;
  std::int64_t ambient_;
};

namespace detail {

inline void require_length(std::int64_t l, std::int64_t least) {
  if (l < least || l > max_length)
    throw std::invalid_argument("chain length " + std::to_string(l) + " outside [" +
                                std::to_string(least) + ", " + std::to_string(max_length) + "]");
}

// ceil(a / b) for a >= 0, b > 0
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return a == 0 ? 0 : (a + b - 1) / b; }

}  // namespace detail

// Both sides of l*D <= N*(l-1) + m.
struct CriterionSides {
  std::int64_t lhs;
  std::int64_t rhs;
  bool holds() const noexcept { return lhs <= rhs; }
};

inline CriterionSides criterion_sides(const DefiningData& data, std::int64_t l) {
  detail::require_length(l, 2);
  return {l * data.total_degree(), data.ambient() * (l - 1) + data.equations()};
}

// D <= (N(l-1) + m) / l, cross-multiplied.
inline bool rc_criterion(const DefiningData& data, std::int64_t l) { return criterion_sides(data, l).holds(); }

// Least l for which rc_criterion holds.  Linear systems get 1 (X is a linear
// space); D >= N gets nullopt since the criterion then fails for every l.
inline std::optional<std::int64_t> min_chain_length(const DefiningData& data) {
  if (data.all_linear()) return 1;
  const auto n = data.ambient();
  const auto d = data.total_degree();
  const auto m = data.equations();
  if (d >= n) return std::nullopt;
  const auto l = std::max<std::int64_t>(2, detail::ceil_div(n - m, n - d));
  if (!rc_criterion(data, l) || (l > 2 && rc_criterion(data, l - 1)))
    throw std::logic_error("min_chain_length: closed form disagrees with the criterion");
  return l;
}

// ceil((N - c) / (N - D)) for a complete intersection of codimension c = m.
inline std::int64_t ci_length(const DefiningData& data) {
  const auto n = data.ambient();
  const auto d = data.total_degree();
  if (d >= n)
    throw std::domain_error("ci_length needs sum of degrees <= N - 1 (got " + std::to_string(d) +
                            " with N = " + std::to_string(n) + ")");
  return detail::ceil_div(n - data.equations(), n - d);
}

// i_X = N + 1 - D
inline std::int64_t fano_index_ci(const DefiningData& data) {
  const auto d = data.total_degree();
  if (d > data.ambient())
    throw std::domain_error("fano_index_ci needs sum of degrees <= N (got " + std::to_string(d) + ")");
  return data.ambient() + 1 - d;
}

// dim L_x = N - D - 1 for a complete intersection with D <= N - 1.
inline std::int64_t lx_dim_ci(const DefiningData& data) {
  const auto d = data.total_degree();
  if (d >= data.ambient())
    throw std::domain_error("lx_dim_ci needs sum of degrees <= N - 1 (got " + std::to_string(d) + ")");
  return data.ambient() - d - 1;
}

// Upper bound l * (dim L_x + 1) on the dimension of the locus of length-l chains
// through a general point of a prime Fano variety.
inline std::int64_t wa_bound(std::int64_t lx_dim, std::int64_t l) {
  if (lx_dim < 0) throw std::invalid_argument("dim L_x must be nonnegative");
  detail::require_length(l, 1);
  return l * (lx_dim + 1);
}

// True when the criterion holds and D < N, which is when X is covered by lines.
// For systems with some d_i >= 2 the criterion alone forces D < N; the extra
// test only matters for linear systems with m = N (a point).
inline bool covered_by_lines_in_range(const DefiningData& data, std::int64_t l) {
  if (!rc_criterion(data, l)) return false;
  const bool covered = data.total_degree() < data.ambient();
  if (!covered && !data.all_linear())
    throw std::logic_error("criterion holds with D >= N for a nonlinear system");
  return covered;
}

struct SharpnessReport {
  std::int64_t length;        // l
  std::int64_t degree;        // l + 1
  std::int64_t ambient;       // l + 2
  std::int64_t criterion_numerator;  // N(l-1) + m = l^2 + l - 1, over l
  bool criterion_at_length;          // false
  bool criterion_at_next_length;     // true
  std::int64_t lx_dim;               // 0
  std::int64_t locus_bound;          // wa_bound(0, l) = l
  std::int64_t variety_dim;          // l + 1
  std::optional<std::int64_t> min_length;

  // The locus of length-l chains is too small to fill X.
  bool not_connected_at_length() const noexcept { return locus_bound < variety_dim; }
};

// The degree l+1 hypersurface in P^{l+2}: the criterion misses length l by a
// fraction, and the locus bound shows X really is not connected at length l.
inline SharpnessReport sharpness_report(std::int64_t l) {
  detail::require_length(l, 2);
  const DefiningData data({l + 1}, l + 2);
  SharpnessReport r{};
  r.length = l;
  r.degree = l + 1;
  r.ambient = l + 2;
  r.criterion_numerator = criterion_sides(data, l).rhs;
  r.criterion_at_length = rc_criterion(data, l);
  r.criterion_at_next_length = rc_criterion(data, l + 1);
  r.lx_dim = lx_dim_ci(data);
  r.locus_bound = wa_bound(r.lx_dim, l);
  r.variety_dim = r.ambient - 1;
  r.min_length = min_chain_length(data);
  return r;
}

}  // namespace chainlines

#endif  // CHAINLINES_CRITERIA_HPP
