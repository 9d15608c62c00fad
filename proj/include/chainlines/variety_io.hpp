#ifndef CHAINLINES_VARIETY_IO_HPP
#define CHAINLINES_VARIETY_IO_HPP

// Plain-text variety files:
//
//   field <p>
//   ambient <N>
//   poly <d> : <c> <e0> ... <eN> ; <c> <e0> ... <eN> ; ...
//
// one `poly` line per defining form, `#` starting a comment line.  Points are
// written a0:a1:...:aN.

#include <chainlines/errors.hpp>
#include <chainlines/finite_geometry.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace chainlines {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::int64_t parse_int(std::string_view tok, std::size_t line, const char* what) {
  std::int64_t v = 0;
  const char* begin = tok.data();
  if (!tok.empty() && tok.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || begin == tok.data() + tok.size())
    throw parse_error(line, std::string("expected an integer ") + what + ", got '" + std::string(tok) + "'");
  return v;
}

}  // namespace detail

inline VarietySpec parse_variety(std::istream& in) {
  std::optional<PrimeField> field;
  std::optional<std::size_t> ambient;
  std::vector<HomogPoly> polys;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto words = detail::split_ws(line);
    const auto keyword = words.front();

    if (!field) {
      if (keyword != "field" || words.size() != 2) throw parse_error(lineno, "expected 'field <p>'");
      const auto p = detail::parse_int(words[1], lineno, "characteristic");
      try {
        field.emplace(static_cast<std::uint64_t>(p < 0 ? 0 : p));
      } catch (const std::invalid_argument& e) {
        throw parse_error(lineno, e.what());
      }
      continue;
    }
    if (!ambient) {
      if (keyword != "ambient" || words.size() != 2) throw parse_error(lineno, "expected 'ambient <N>'");
      const auto n = detail::parse_int(words[1], lineno, "ambient dimension");
      if (n < 2 || n > 64) throw parse_error(lineno, "ambient dimension must lie in [2, 64]");
      ambient = static_cast<std::size_t>(n);
      continue;
    }
    if (keyword != "poly") throw parse_error(lineno, "expected 'poly <d> : ...', got '" + std::string(keyword) + "'");

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw parse_error(lineno, "missing ':' after the degree");
    const auto head = detail::split_ws(line.substr(0, colon));
    if (head.size() != 2) throw parse_error(lineno, "expected 'poly <d> :'");
    const auto degree = detail::parse_int(head[1], lineno, "degree");
    if (degree < 1 || degree > 1000) throw parse_error(lineno, "degree must lie in [1, 1000]");

    std::vector<PolyTerm> terms;
    auto body = line.substr(colon + 1);
    while (true) {
      const auto semi = body.find(';');
      const auto group = detail::trim(body.substr(0, semi));
      if (!group.empty()) {
        const auto toks = detail::split_ws(group);
        if (toks.size() != *ambient + 2)
          throw parse_error(lineno, "term '" + std::string(group) + "' needs a coefficient and " +
                                        std::to_string(*ambient + 1) + " exponents");
        PolyTerm t{field->reduce(detail::parse_int(toks[0], lineno, "coefficient")), {}};
        for (std::size_t i = 1; i < toks.size(); ++i) {
          const auto e = detail::parse_int(toks[i], lineno, "exponent");
          if (e < 0 || e > degree) throw parse_error(lineno, "exponent out of range");
          t.exponents.push_back(static_cast<std::uint32_t>(e));
        }
        terms.push_back(std::move(t));
      } else if (semi != std::string_view::npos) {
        throw parse_error(lineno, "empty term");
      }
      if (semi == std::string_view::npos) break;
      body = body.substr(semi + 1);
    }
    try {
      HomogPoly g(*field, *ambient + 1, static_cast<std::uint32_t>(degree), std::move(terms));
      if (g.is_zero()) throw parse_error(lineno, "form is identically zero over F_" + std::to_string(field->characteristic()));
      polys.push_back(std::move(g));
    } catch (const std::invalid_argument& e) {
      throw parse_error(lineno, e.what());
    }
  }
  if (!field) throw parse_error(0, "missing 'field' line");
  if (!ambient) throw parse_error(0, "missing 'ambient' line");
  if (polys.empty()) throw parse_error(0, "no 'poly' lines");
  return VarietySpec(*field, *ambient, std::move(polys));
}

inline VarietySpec parse_variety_string(const std::string& text) {
  std::istringstream in(text);
  return parse_variety(in);
}

inline VarietySpec load_variety(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(0, "cannot open variety file '" + path + "'");
  return parse_variety(in);
}

inline void write_variety(std::ostream& out, const VarietySpec& spec) {
  out << "field " << spec.field().characteristic() << '\n';
  out << "ambient " << spec.ambient() << '\n';
  for (const auto& g : spec.polys()) {
    out << "poly " << g.degree() << " :";
    bool first = true;
    for (const auto& t : g.terms()) {
      out << (first ? " " : " ; ") << t.coeff;
      for (auto e : t.exponents) out << ' ' << e;
      first = false;
    }
    out << '\n';
  }
}

inline std::string to_string(const VarietySpec& spec) {
  std::ostringstream os;
  write_variety(os, spec);
  return os.str();
}

// "a0:a1:...:aN" in P^N over f.
inline ProjPoint parse_point(const PrimeField& f, std::string_view text, std::size_t ambient) {
  std::vector<std::int64_t> coords;
  std::size_t start = 0;
  while (true) {
    const auto sep = text.find(':', start);
    const auto tok = detail::trim(text.substr(start, sep == std::string_view::npos ? std::string_view::npos : sep - start));
    coords.push_back(detail::parse_int(tok, 0, "coordinate"));
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  if (coords.size() != ambient + 1)
    throw std::invalid_argument("point '" + std::string(text) + "' has " + std::to_string(coords.size()) +
                                " coordinates, expected " + std::to_string(ambient + 1));
  return ProjPoint::from_integers(f, coords);
}

// Sample varieties used by the tests and the `generate` subcommand.
namespace samples {

// x0 x3 - x1 x2 in P^3, a smooth quadric with two rulings.
inline VarietySpec split_quadric(std::uint64_t p) {
  PrimeField f(p);
  HomogPoly g(f, 4, 2, {{1, {1, 0, 0, 1}}, {f.neg(1), {0, 1, 1, 0}}});
  return VarietySpec(f, 3, {g});
}

// x0^3 + x1^3 + x2^3 + x3^3 in P^3.
inline VarietySpec fermat_cubic_surface(std::uint64_t p) {
  PrimeField f(p);
  HomogPoly g(f, 4, 3, {{1, {3, 0, 0, 0}}, {1, {0, 3, 0, 0}}, {1, {0, 0, 3, 0}}, {1, {0, 0, 0, 3}}});
  return VarietySpec(f, 3, {g});
}

// x0 = 0 in P^N.
inline VarietySpec coordinate_hyperplane(std::uint64_t p, std::size_t ambient) {
  PrimeField f(p);
  std::vector<std::uint32_t> e(ambient + 1, 0);
  e[0] = 1;
  return VarietySpec(f, ambient, {HomogPoly(f, ambient + 1, 1, {{1, e}})});
}

// x0 = x1 = ... = xN = 0: no projective points.
inline VarietySpec empty_linear_system(std::uint64_t p, std::size_t ambient) {
  PrimeField f(p);
  std::vector<HomogPoly> polys;
  for (std::size_t i = 0; i <= ambient; ++i) {
    std::vector<std::uint32_t> e(ambient + 1, 0);
    e[i] = 1;
    polys.emplace_back(f, ambient + 1, 1, std::vector<PolyTerm>{{1, e}});
  }
  return VarietySpec(f, ambient, std::move(polys));
}

// x0^3 + ... + x4^3 in P^4.
inline VarietySpec fermat_cubic_threefold(std::uint64_t p) {
  PrimeField f(p);
  std::vector<PolyTerm> terms;
  for (std::size_t i = 0; i < 5; ++i) {
    std::vector<std::uint32_t> e(5, 0);
    e[i] = 3;
    terms.push_back({1, e});
  }
  return VarietySpec(f, 4, {HomogPoly(f, 5, 3, std::move(terms))});
}

}  // namespace samples

}  // namespace chainlines

#endif  // CHAINLINES_VARIETY_IO_HPP
