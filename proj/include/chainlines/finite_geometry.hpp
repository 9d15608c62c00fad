#ifndef CHAINLINES_FINITE_GEOMETRY_HPP
#define CHAINLINES_FINITE_GEOMETRY_HPP

// Brute-force projective geometry over a prime field F_p: points and lines of
// P^N(F_p), varieties given by explicit forms, lines contained in a variety,
// and chains of such lines found by breadth-first search.
//
// Everything here is a finite-field shadow of statements over C.  A missing
// chain over F_p says nothing about chains over C, and reachability sets only
// approximate loci of chains through a general point.

#include <chainlines/errors.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chainlines {

using Element = std::uint32_t;

class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31))
      throw std::invalid_argument("field characteristic " + std::to_string(p) + " outside [2, 2^31)");
    for (std::uint64_t q = 2; q * q <= p; ++q)
      if (p % q == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
  }

  std::uint64_t characteristic() const noexcept { return p_; }

  Element reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<Element>(r);
  }
  Element add(Element a, Element b) const noexcept { return static_cast<Element>((std::uint64_t{a} + b) % p_); }
  Element sub(Element a, Element b) const noexcept { return static_cast<Element>((std::uint64_t{a} + p_ - b) % p_); }
  Element mul(Element a, Element b) const noexcept { return static_cast<Element>((std::uint64_t{a} * b) % p_); }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : static_cast<Element>(p_ - a); }
  Element pow(Element a, std::uint64_t e) const noexcept {
    std::uint64_t r = 1 % p_, b = a % p_;
    while (e) {
      if (e & 1u) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return static_cast<Element>(r);
  }
  Element inv(Element a) const {
    if (a % p_ == 0) throw std::domain_error("zero has no inverse");
    return pow(a, p_ - 2);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

// A point of P^N(F_p), scaled so its first nonzero coordinate is 1.
class ProjPoint {
 public:
  ProjPoint(const PrimeField& f, std::vector<Element> coords) : coords_(std::move(coords)) {
    for (auto& c : coords_) c %= static_cast<Element>(f.characteristic());
    auto it = std::find_if(coords_.begin(), coords_.end(), [](Element c) { return c != 0; });
    if (it == coords_.end()) throw std::invalid_argument("the zero vector is not a projective point");
    if (*it == 1) return;
    const Element s = f.inv(*it);
    for (auto& c : coords_) c = f.mul(c, s);
  }

  static ProjPoint from_integers(const PrimeField& f, const std::vector<std::int64_t>& coords) {
    std::vector<Element> c;
    c.reserve(coords.size());
    for (auto v : coords) c.push_back(f.reduce(v));
    return ProjPoint(f, std::move(c));
  }

  const std::vector<Element>& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  // N for a point of P^N
  std::size_t ambient() const noexcept { return coords_.size() - 1; }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ":" : "") << coords_[i];
    return os.str();
  }

  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  std::vector<Element> coords_;
};

struct PolyTerm {
  Element coeff;
  std::vector<std::uint32_t> exponents;

  friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};

// A form of degree d in N+1 variables with coefficients in F_p.  Like terms
// are merged and zero terms dropped at construction; terms are kept sorted by
// exponent vector.
class HomogPoly {
 public:
  HomogPoly(const PrimeField& f, std::size_t variables, std::uint32_t degree, std::vector<PolyTerm> terms)
      : variables_(variables), degree_(degree) {
    if (degree_ < 1) throw std::invalid_argument("form degree must be at least 1");
    std::map<std::vector<std::uint32_t>, Element> merged;
    for (auto& t : terms) {
      if (t.exponents.size() != variables_)
        throw std::invalid_argument("term has " + std::to_string(t.exponents.size()) + " exponents, expected " +
                                    std::to_string(variables_));
      std::uint64_t s = 0;
      for (auto e : t.exponents) s += e;
      if (s != degree_)
        throw std::invalid_argument("term of degree " + std::to_string(s) + " in a form of degree " +
                                    std::to_string(degree_));
      auto& c = merged[t.exponents];
      c = f.add(c, t.coeff % static_cast<Element>(f.characteristic()));
    }
    for (auto& [e, c] : merged)
      if (c != 0) terms_.push_back({c, e});
  }

  std::size_t variables() const noexcept { return variables_; }
  std::uint32_t degree() const noexcept { return degree_; }
  const std::vector<PolyTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  friend bool operator==(const HomogPoly&, const HomogPoly&) = default;

 private:
  std::size_t variables_;
  std::uint32_t degree_;
  std::vector<PolyTerm> terms_;
};

// X in P^N cut out set-theoretically by the listed forms.
class VarietySpec {
 public:
  VarietySpec(PrimeField field, std::size_t ambient, std::vector<HomogPoly> polys)
      : field_(field), ambient_(ambient), polys_(std::move(polys)) {
    if (ambient_ < 2) throw std::invalid_argument("ambient dimension must be at least 2");
    if (polys_.empty()) throw std::invalid_argument("a variety needs at least one defining form");
    for (const auto& g : polys_)
      if (g.variables() != ambient_ + 1)
        throw std::invalid_argument("form in " + std::to_string(g.variables()) + " variables on P^" +
                                    std::to_string(ambient_));
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return ambient_; }
  const std::vector<HomogPoly>& polys() const noexcept { return polys_; }

  friend bool operator==(const VarietySpec&, const VarietySpec&) = default;

 private:
  PrimeField field_;
  std::size_t ambient_;
  std::vector<HomogPoly> polys_;
};

// A projective line as the row space of a 2 x (N+1) matrix in reduced row
// echelon form, which is unique for the line.
class Line {
 public:
  Line(const PrimeField& f, const ProjPoint& a, const ProjPoint& b) {
    if (a.size() != b.size()) throw std::invalid_argument("points live in different projective spaces");
    if (a == b) throw std::invalid_argument("a line needs two distinct points");
    rows_ = {a.coords(), b.coords()};
    auto& r0 = rows_[0];
    auto& r1 = rows_[1];
    const std::size_t n = r0.size();
    // a is normalized: r0 has a leading 1 at its first nonzero column c0.
    std::size_t c0 = 0;
    while (r0[c0] == 0) ++c0;
    // eliminate column c0 from r1, then pivot r1
    if (r1[c0] != 0) {
      const Element s = r1[c0];
      for (std::size_t i = 0; i < n; ++i) r1[i] = f.sub(r1[i], f.mul(s, r0[i]));
    }
    std::size_t c1 = 0;
    while (c1 < n && r1[c1] == 0) ++c1;
    const Element s1 = f.inv(r1[c1]);
    for (auto& c : r1) c = f.mul(c, s1);
    if (c1 < c0) std::swap(r0, r1), std::swap(c0, c1);
    // clear the second pivot column from the first row
    if (r0[c1] != 0) {
      const Element s = r0[c1];
      for (std::size_t i = 0; i < n; ++i) r0[i] = f.sub(r0[i], f.mul(s, r1[i]));
    }
  }

  const std::array<std::vector<Element>, 2>& basis() const noexcept { return rows_; }
  std::size_t ambient() const noexcept { return rows_[0].size() - 1; }

  // The p + 1 points of the line, sorted.
  std::vector<ProjPoint> points(const PrimeField& f) const {
    std::vector<ProjPoint> out;
    const auto p = f.characteristic();
    out.emplace_back(f, rows_[1]);
    for (std::uint64_t t = 0; t < p; ++t) {
      std::vector<Element> c(rows_[0].size());
      for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = f.add(rows_[0][i], f.mul(static_cast<Element>(t), rows_[1][i]));
      out.emplace_back(f, std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < 2; ++r) {
      if (r) os << ',';
      for (std::size_t i = 0; i < rows_[r].size(); ++i) os << (i ? ":" : "") << rows_[r][i];
    }
    return os.str();
  }

  friend auto operator<=>(const Line&, const Line&) = default;
  friend bool operator==(const Line&, const Line&) = default;

 private:
  std::array<std::vector<Element>, 2> rows_;
};

// x = points.front(), y = points.back(); lines[i] joins points[i] and points[i+1].
struct Chain {
  std::vector<ProjPoint> points;
  std::vector<Line> lines;

  std::size_t length() const noexcept { return lines.size(); }
};

inline Element eval(const PrimeField& f, const HomogPoly& g, const ProjPoint& pt) {
  if (g.variables() != pt.size())
    throw std::invalid_argument("form in " + std::to_string(g.variables()) + " variables evaluated at a point with " +
                                std::to_string(pt.size()) + " coordinates");
  Element sum = 0;
  for (const auto& t : g.terms()) {
    Element v = t.coeff;
    for (std::size_t i = 0; i < t.exponents.size() && v != 0; ++i)
      if (t.exponents[i]) v = f.mul(v, f.pow(pt.coords()[i], t.exponents[i]));
    sum = f.add(sum, v);
  }
  return sum;
}

inline bool on_variety(const VarietySpec& spec, const ProjPoint& pt) {
  return std::all_of(spec.polys().begin(), spec.polys().end(),
                     [&](const HomogPoly& g) { return eval(spec.field(), g, pt) == 0; });
}

// Enumerations touch O(p^N) points; refuse beyond this.
inline constexpr std::uint64_t enumeration_budget = 100'000'000;

inline void check_budget(const PrimeField& f, std::size_t ambient) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < ambient; ++i) {
    total *= f.characteristic();
    if (total > enumeration_budget)
      throw budget_exceeded("p^N exceeds the enumeration budget of " + std::to_string(enumeration_budget));
  }
}

// Visit every point of P^N(F_p) once, in increasing canonical order.
template <class Visitor>
void for_each_point(const PrimeField& f, std::size_t ambient, Visitor&& visit) {
  check_budget(f, ambient);
  const auto p = static_cast<Element>(f.characteristic());
  const std::size_t n = ambient + 1;
  // Points with leading 1 in column `lead` come after those with lead further right.
  for (std::size_t lead = n; lead-- > 0;) {
    std::vector<Element> c(n, 0);
    c[lead] = 1;
    while (true) {
      visit(static_cast<const std::vector<Element>&>(c));
      std::size_t i = n;
      while (i-- > lead + 1) {
        if (++c[i] < p) break;
        c[i] = 0;
      }
      if (i <= lead) break;
    }
  }
}

// X(F_p), sorted.
inline std::vector<ProjPoint> enumerate_points(const VarietySpec& spec) {
  std::vector<ProjPoint> out;
  const auto& f = spec.field();
  for_each_point(f, spec.ambient(), [&](const std::vector<Element>& c) {
    ProjPoint pt(f, c);
    if (on_variety(spec, pt)) out.push_back(std::move(pt));
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline Line line_through(const PrimeField& f, const ProjPoint& a, const ProjPoint& b) { return Line(f, a, b); }

// Coefficients of G(u a + v b) as a form in (u, v), indexed by the power of v.
inline std::vector<Element> restrict_to_line(const PrimeField& f, const HomogPoly& g, const Line& ln) {
  const auto& a = ln.basis()[0];
  const auto& b = ln.basis()[1];
  std::vector<Element> total(g.degree() + 1, 0);
  std::vector<Element> acc;
  for (const auto& t : g.terms()) {
    acc.assign(1, t.coeff);
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      for (std::uint32_t r = 0; r < t.exponents[i]; ++r) {
        // acc *= (a_i + b_i v)
        acc.push_back(0);
        for (std::size_t j = acc.size() - 1; j > 0; --j) acc[j] = f.add(f.mul(acc[j], a[i]), f.mul(acc[j - 1], b[i]));
        acc[0] = f.mul(acc[0], a[i]);
      }
    }
    for (std::size_t j = 0; j < acc.size(); ++j) total[j] = f.add(total[j], acc[j]);
  }
  return total;
}

// Symbolic test: every coefficient of every G_i(u a + v b) vanishes.  Sampling
// the p + 1 points of the line is not enough when p <= deg G_i.
inline bool line_in_variety(const VarietySpec& spec, const Line& ln) {
  if (ln.ambient() != spec.ambient()) throw std::invalid_argument("line and variety live in different spaces");
  for (const auto& g : spec.polys()) {
    const auto c = restrict_to_line(spec.field(), g, ln);
    if (std::any_of(c.begin(), c.end(), [](Element e) { return e != 0; })) return false;
  }
  return true;
}

namespace detail {

inline void require_on_variety(const VarietySpec& spec, const ProjPoint& x) {
  if (x.ambient() != spec.ambient())
    throw std::invalid_argument("point " + x.to_string() + " is not in P^" + std::to_string(spec.ambient()));
  if (!on_variety(spec, x)) throw std::invalid_argument("point " + x.to_string() + " is not on the variety");
}

// Lines through x in X, testing the join of x with each candidate once.
template <class Range>
std::vector<Line> lines_through_candidates(const VarietySpec& spec, const ProjPoint& x, const Range& candidates) {
  std::vector<Line> seen;
  std::vector<Line> found;
  for (const auto& y : candidates) {
    if (y == x) continue;
    Line ln(spec.field(), x, y);
    auto it = std::lower_bound(seen.begin(), seen.end(), ln);
    if (it != seen.end() && *it == ln) continue;
    seen.insert(it, ln);
    if (line_in_variety(spec, ln)) found.push_back(std::move(ln));
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace detail

// L_x over F_p, sorted.  Every F_p-line of X through x carries another F_p-point
// of X, so only joins with X(F_p) need testing.
inline std::vector<Line> lines_through(const VarietySpec& spec, const ProjPoint& x,
                                       const std::vector<ProjPoint>& variety_points) {
  detail::require_on_variety(spec, x);
  return detail::lines_through_candidates(spec, x, variety_points);
}

inline std::vector<Line> lines_through(const VarietySpec& spec, const ProjPoint& x) {
  detail::require_on_variety(spec, x);
  return detail::lines_through_candidates(spec, x, enumerate_points(spec));
}

// The graph on X(F_p) with an edge between distinct points whose joining line
// lies in X.  lines_through is computed once per point and cached.
class LineGraph {
 public:
  explicit LineGraph(const VarietySpec& spec) : spec_(spec), points_(enumerate_points(spec)) {
    const auto& f = spec_.field();
    lines_.reserve(points_.size());
    adjacency_.resize(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
      lines_.push_back(lines_through(spec_, points_[i], points_));
      auto& adj = adjacency_[i];
      for (const auto& ln : lines_.back())
        for (const auto& q : ln.points(f))
          if (q != points_[i]) adj.push_back(index_of(q).value());
      std::sort(adj.begin(), adj.end());
      adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
  }

  const VarietySpec& spec() const noexcept { return spec_; }
  const std::vector<ProjPoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Line>& lines_at(std::size_t i) const { return lines_.at(i); }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_.at(i); }

  std::optional<std::size_t> index_of(const ProjPoint& q) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), q);
    if (it == points_.end() || *it != q) return std::nullopt;
    return static_cast<std::size_t>(it - points_.begin());
  }

  std::size_t require_index(const ProjPoint& q) const {
    detail::require_on_variety(spec_, q);
    return index_of(q).value();
  }

  static constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

  // BFS distances from `source`, stopping at depth `max_depth`; also fills parents.
  std::vector<std::size_t> distances(std::size_t source, std::size_t max_depth,
                                     std::vector<std::size_t>* parent = nullptr) const {
    std::vector<std::size_t> dist(size(), unreachable);
    if (parent) parent->assign(size(), unreachable);
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      if (dist[u] == max_depth) continue;
      for (auto v : adjacency_[u]) {
        if (dist[v] != unreachable) continue;
        dist[v] = dist[u] + 1;
        if (parent) (*parent)[v] = u;
        queue.push_back(v);
      }
    }
    return dist;
  }

  // A shortest chain of at most max_length lines, or nullopt.
  std::optional<Chain> shortest_chain(const ProjPoint& x, const ProjPoint& y, std::size_t max_length) const {
    const auto s = require_index(x);
    const auto t = require_index(y);
    std::vector<std::size_t> parent;
    const auto dist = distances(s, max_length, &parent);
    if (dist[t] == unreachable) return std::nullopt;
    std::vector<std::size_t> path{t};
    while (path.back() != s) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    Chain c;
    for (auto i : path) c.points.push_back(points_[i]);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      c.lines.emplace_back(spec_.field(), c.points[i], c.points[i + 1]);
    return c;
  }

  // Points reachable from x in at most `steps` line steps, sorted.
  std::vector<ProjPoint> reachable(const ProjPoint& x, std::size_t steps) const {
    const auto dist = distances(require_index(x), steps);
    std::vector<ProjPoint> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (dist[i] != unreachable) out.push_back(points_[i]);
    return out;
  }

  // Sequences x = q^0, q^1, ..., q^l = y with every step along a line of X
  // (consecutive points distinct).  For l = 2 this counts the intermediate
  // points p^1 with both joins in X.
  std::uint64_t count_chains(const ProjPoint& x, const ProjPoint& y, std::size_t length) const {
    const auto s = require_index(x);
    const auto t = require_index(y);
    std::vector<std::uint64_t> walks(size(), 0), next(size());
    walks[s] = 1;
    for (std::size_t step = 0; step < length; ++step) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t u = 0; u < size(); ++u)
        if (walks[u])
          for (auto v : adjacency_[u]) next[v] += walks[u];
      walks.swap(next);
    }
    return walks[t];
  }

 private:
  VarietySpec spec_;
  std::vector<ProjPoint> points_;
  std::vector<std::vector<Line>> lines_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// Shortest chain of at most max_l lines from x to y inside X; x = y gives the
// empty chain.
inline std::optional<Chain> chain_search(const VarietySpec& spec, const ProjPoint& x, const ProjPoint& y,
                                         std::size_t max_l) {
  return LineGraph(spec).shortest_chain(x, y, max_l);
}

// F_p-analogue of the locus of chains of at most l lines through x.
inline std::vector<ProjPoint> locus(const VarietySpec& spec, const ProjPoint& x, std::size_t l) {
  if (l < 1) throw std::invalid_argument("locus length must be at least 1");
  return LineGraph(spec).reachable(x, l);
}

struct ConnectivityReport {
  std::size_t points = 0;
  std::uint64_t ordered_pairs = 0;           // ordered pairs of distinct points
  std::vector<std::uint64_t> connected;      // connected[l-1]: pairs joined by <= l lines
  std::map<std::size_t, std::size_t> lines_histogram;  // |L_x| -> number of points

  // Fraction of ordered pairs joined by a chain of at most l lines (1 when there are no pairs).
  double fraction(std::size_t l) const {
    if (ordered_pairs == 0) return 1.0;
    return static_cast<double>(connected.at(l - 1)) / static_cast<double>(ordered_pairs);
  }
  bool fully_connected(std::size_t l) const { return connected.at(l - 1) == ordered_pairs; }
};

inline ConnectivityReport connectivity_report(const LineGraph& graph, std::size_t max_l) {
  if (max_l < 1) throw std::invalid_argument("max length must be at least 1");
  ConnectivityReport r;
  r.points = graph.size();
  r.ordered_pairs = static_cast<std::uint64_t>(r.points) * (r.points ? r.points - 1 : 0);
  r.connected.assign(max_l, 0);
  for (std::size_t s = 0; s < graph.size(); ++s) {
    ++r.lines_histogram[graph.lines_at(s).size()];
    const auto dist = graph.distances(s, max_l);
    for (std::size_t t = 0; t < graph.size(); ++t)
      if (t != s && dist[t] != LineGraph::unreachable)
        for (std::size_t l = dist[t]; l <= max_l; ++l) ++r.connected[l - 1];
  }
  return r;
}

inline ConnectivityReport connectivity_report(const VarietySpec& spec, std::size_t max_l) {
  return connectivity_report(LineGraph(spec), max_l);
}

}  // namespace chainlines

#endif  // CHAINLINES_FINITE_GEOMETRY_HPP
