#ifndef CHAINLINES_CLI_HPP
#define CHAINLINES_CLI_HPP

// Batch command-line front end.  run() parses arguments, executes one
// subcommand and renders a Report either as aligned human-readable text or,
// with --machine, as one key=value pair per line.
//
// Exit status: 0 success, 1 definite negative answer, 2 input error.

#include <chainlines/chain_intersection.hpp>
#include <chainlines/chow_ring.hpp>
#include <chainlines/criteria.hpp>
#include <chainlines/errors.hpp>
#include <chainlines/finite_geometry.hpp>
#include <chainlines/variety_io.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace chainlines::cli {

enum exit_status : int { success = 0, negative = 1, input_error = 2 };

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<std::string> caveats;
  int status = success;

  template <class T>
  Report& add(std::string key, const T& value) {
    std::ostringstream os;
    os << value;
    fields.emplace_back(std::move(key), os.str());
    return *this;
  }
  Report& add(std::string key, bool value) {
    fields.emplace_back(std::move(key), value ? "true" : "false");
    return *this;
  }
  Report& add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  Report& add(std::string key, const char* value) { return add(std::move(key), std::string(value)); }

  std::string value(const std::string& key) const {
    for (const auto& [k, v] : fields)
      if (k == key) return v;
    return {};
  }
};

inline void render_machine(std::ostream& out, const Report& r) {
  out << "command=" << r.command << '\n';
  for (const auto& [k, v] : r.fields) out << k << '=' << v << '\n';
  for (const auto& c : r.caveats) out << "caveat=" << c << '\n';
}

inline void render_human(std::ostream& out, const Report& r) {
  std::size_t width = 0;
  for (const auto& [k, v] : r.fields) width = std::max(width, k.size());
  out << r.command << '\n';
  for (const auto& [k, v] : r.fields) out << "  " << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
  for (const auto& c : r.caveats) out << "note: " << c << '\n';
}

namespace detail {

template <class Range>
std::string join(const Range& values, const char* sep = ",") {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << sep;
    os << v;
    first = false;
  }
  return os.str();
}

inline std::string space_name(const ProductSpace& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.factors(); ++i) os << (i ? "x" : "") << "P^" << s.dim(i);
  return os.str();
}

inline std::string fraction_string(std::uint64_t num, std::uint64_t den) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << (den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den));
  return os.str();
}

struct Options {
  bool machine = false;
  std::vector<std::int64_t> degrees;
  std::int64_t ambient = 0;
  std::int64_t length = 0;
  std::string mode = "counting";
  std::string variety;
  std::string point, from, to;
  std::string kind;
  std::uint64_t field = 0;
  std::string output;
};

inline void add_degree_options(CLI::App* sub, Options& o, bool with_length) {
  sub->add_option("--degrees", o.degrees, "degrees of the defining forms, comma separated")
      ->delimiter(',')
      ->required();
  sub->add_option("--ambient", o.ambient, "dimension N of the ambient P^N")->required();
  if (with_length) sub->add_option("--length", o.length, "chain length l")->required();
}

inline Report check(const Options& o) {
  const DefiningData data(o.degrees, o.ambient);
  const auto sides = criterion_sides(data, o.length);
  Report r{"check"};
  r.add("degrees", join(data.degrees()))
      .add("ambient", data.ambient())
      .add("length", o.length)
      .add("sum_degrees", data.total_degree())
      .add("equations", data.equations())
      .add("holds", sides.holds())
      .add("lhs", sides.lhs)
      .add("rhs", sides.rhs)
      .add("covered_by_lines", covered_by_lines_in_range(data, o.length));
  r.caveats.push_back("criterion is l*D <= N*(l-1)+m; it is sufficient, not necessary");
  r.status = sides.holds() ? success : negative;
  return r;
}

inline Report minlength(const Options& o) {
  const DefiningData data(o.degrees, o.ambient);
  const auto l = min_chain_length(data);
  Report r{"minlength"};
  r.add("degrees", join(data.degrees())).add("ambient", data.ambient());
  r.add("minlength", l ? std::to_string(*l) : std::string("none"));
  if (data.all_linear()) r.caveats.push_back("all forms are linear: X is a linear space, length 1 by convention");
  if (!l) {
    r.caveats.push_back("sum of degrees >= N: the criterion fails for every length");
    r.status = negative;
  }
  return r;
}

inline Report cilength(const Options& o) {
  const DefiningData data(o.degrees, o.ambient);
  Report r{"cilength"};
  r.add("degrees", join(data.degrees()))
      .add("ambient", data.ambient())
      .add("cilength", ci_length(data))
      .add("fano_index", fano_index_ci(data))
      .add("lx_dim", lx_dim_ci(data));
  r.caveats.push_back("formulas assume X is a smooth complete intersection; this is not checked");
  return r;
}

inline Report class_cmd(const Options& o) {
  const ChainProblem p(DefiningData(o.degrees, o.ambient), o.length);
  ChowClass c = [&] {
    if (o.mode == "existence") return existence_class(p);
    return counting_class(p);
  }();
  Report r{"class"};
  r.add("degrees", join(p.data().degrees()))
      .add("ambient", p.data().ambient())
      .add("length", p.length())
      .add("mode", o.mode)
      .add("space", space_name(p.space()))
      .add("conditions", p.condition_count())
      .add("class", c.to_string());
  return r;
}

inline Report count(const Options& o) {
  const ChainProblem p(DefiningData(o.degrees, o.ambient), o.length);
  Report r{"count"};
  r.add("degrees", join(p.data().degrees()))
      .add("ambient", p.data().ambient())
      .add("length", p.length())
      .add("expected_dimension", expected_dimension(p));
  r.add("count", chain_count(p).str());
  r.caveats.push_back("intersection number: chains counted with multiplicity for a generic X with these degrees");
  return r;
}

inline Report witness(const Options& o) {
  const ChainProblem p(DefiningData(o.degrees, o.ambient), o.length);
  const auto w = witness_monomial(p);
  Report r{"witness"};
  r.add("degrees", join(p.data().degrees()))
      .add("ambient", p.data().ambient())
      .add("length", p.length())
      .add("witness_exponents", join(w.interior_splits))
      .add("witness_monomial", join(w.exponents))
      .add("bound", w.bound)
      .add("first_fits", w.first_fits())
      .add("interior_fits", w.interior_fits())
      .add("last_fits", w.last_fits())
      .add("verdict", w.verdict())
      .add("criterion", rc_criterion(p.data(), p.length()));
  r.status = w.verdict() ? success : negative;
  return r;
}

inline Report sharpness(const Options& o) {
  const auto s = sharpness_report(o.length);
  Report r{"sharpness"};
  r.add("length", s.length)
      .add("degree", s.degree)
      .add("ambient", s.ambient)
      .add("criterion_rhs", std::to_string(s.criterion_numerator) + "/" + std::to_string(s.length))
      .add("criterion_at_length", s.criterion_at_length)
      .add("criterion_at_next_length", s.criterion_at_next_length)
      .add("minlength", s.min_length ? std::to_string(*s.min_length) : std::string("none"))
      .add("lx_dim", s.lx_dim)
      .add("locus_bound", s.locus_bound)
      .add("variety_dim", s.variety_dim)
      .add("verdict", s.not_connected_at_length() ? "not connected by length-l chains" : "inconclusive");
  r.caveats.push_back("locus bound holds for prime Fano varieties of dimension >= 3");
  return r;
}

inline Report lines(const Options& o) {
  const auto spec = load_variety(o.variety);
  const auto x = parse_point(spec.field(), o.point, spec.ambient());
  const auto found = lines_through(spec, x);
  Report r{"lines"};
  r.add("point", x.to_string()).add("line_count", found.size());
  for (std::size_t i = 0; i < found.size(); ++i) r.add("line." + std::to_string(i), found[i].to_string());
  return r;
}

inline Report chain(const Options& o) {
  const auto spec = load_variety(o.variety);
  const auto x = parse_point(spec.field(), o.from, spec.ambient());
  const auto y = parse_point(spec.field(), o.to, spec.ambient());
  if (o.length < 0) throw std::invalid_argument("--max-length must be nonnegative");
  const auto c = chain_search(spec, x, y, static_cast<std::size_t>(o.length));
  Report r{"chain"};
  r.add("from", x.to_string()).add("to", y.to_string()).add("max_length", o.length);
  if (!c) {
    r.add("chain", "absent");
    r.caveats.push_back("no chain over F_p does not rule out chains over the complex numbers");
    r.status = negative;
    return r;
  }
  r.add("chain", "found").add("length", c->length());
  for (std::size_t i = 0; i < c->points.size(); ++i) r.add("point." + std::to_string(i), c->points[i].to_string());
  for (std::size_t i = 0; i < c->lines.size(); ++i) r.add("line." + std::to_string(i), c->lines[i].to_string());
  return r;
}

inline Report locus_cmd(const Options& o) {
  const auto spec = load_variety(o.variety);
  const auto x = parse_point(spec.field(), o.point, spec.ambient());
  if (o.length < 1) throw std::invalid_argument("--length must be at least 1");
  const auto pts = locus(spec, x, static_cast<std::size_t>(o.length));
  Report r{"locus"};
  r.add("point", x.to_string()).add("length", o.length).add("size", pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) r.add("point." + std::to_string(i), pts[i].to_string());
  r.caveats.push_back("F_p reachability set; approximates the locus of chains through a general point");
  return r;
}

inline Report explore(const Options& o) {
  const auto spec = load_variety(o.variety);
  if (o.length < 1) throw std::invalid_argument("--max-length must be at least 1");
  const auto rep = connectivity_report(spec, static_cast<std::size_t>(o.length));
  Report r{"explore"};
  r.add("points", rep.points).add("ordered_pairs", rep.ordered_pairs);
  for (std::size_t l = 1; l <= rep.connected.size(); ++l) {
    r.add("connected." + std::to_string(l), rep.connected[l - 1]);
    r.add("fraction." + std::to_string(l), fraction_string(rep.connected[l - 1], rep.ordered_pairs));
  }
  for (const auto& [k, n] : rep.lines_histogram) r.add("lines_histogram." + std::to_string(k), n);
  return r;
}

inline VarietySpec sample(const Options& o) {
  if (o.kind == "quadric") return samples::split_quadric(o.field);
  if (o.kind == "fermat-cubic") return samples::fermat_cubic_surface(o.field);
  if (o.kind == "cubic-threefold") return samples::fermat_cubic_threefold(o.field);
  if (o.kind == "plane") return samples::coordinate_hyperplane(o.field, o.ambient > 0 ? static_cast<std::size_t>(o.ambient) : 3);
  if (o.kind == "empty") return samples::empty_linear_system(o.field, o.ambient > 0 ? static_cast<std::size_t>(o.ambient) : 3);
  throw std::invalid_argument("unknown sample kind '" + o.kind + "'");
}

}  // namespace detail

// Parses args (without the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Chains of lines on projective varieties: criteria, intersection counts and finite-field checks",
               "chainlines"};
  app.require_subcommand(1);
  app.add_flag("--machine", o.machine, "emit key=value lines")->configurable(false);
  app.fallthrough();

  auto* check = app.add_subcommand("check", "evaluate l*D <= N(l-1)+m");
  detail::add_degree_options(check, o, true);
  auto* minlength = app.add_subcommand("minlength", "least l for which the criterion holds");
  detail::add_degree_options(minlength, o, false);
  auto* cilength = app.add_subcommand("cilength", "complete-intersection length, Fano index, dim L_x");
  detail::add_degree_options(cilength, o, false);
  auto* cls = app.add_subcommand("class", "intersection class on (P^N)^(l-1)");
  detail::add_degree_options(cls, o, true);
  cls->add_option("--mode", o.mode, "existence or counting")->check(CLI::IsMember({"existence", "counting"}));
  auto* cnt = app.add_subcommand("count", "number of length-l chains through two general points");
  detail::add_degree_options(cnt, o, true);
  auto* wit = app.add_subcommand("witness", "witness monomial of the existence class");
  detail::add_degree_options(wit, o, true);
  auto* sharp = app.add_subcommand("sharpness", "degree l+1 hypersurface in P^(l+2)");
  sharp->add_option("--length", o.length, "chain length l")->required();

  auto* lin = app.add_subcommand("lines", "F_p-lines of X through a point");
  lin->add_option("--variety", o.variety, "variety file")->required();
  lin->add_option("--point", o.point, "point a0:a1:...:aN")->required();
  auto* chn = app.add_subcommand("chain", "shortest chain of lines between two points");
  chn->add_option("--variety", o.variety, "variety file")->required();
  chn->add_option("--from", o.from, "start point")->required();
  chn->add_option("--to", o.to, "end point")->required();
  chn->add_option("--max-length", o.length, "longest chain to search")->required();
  auto* loc = app.add_subcommand("locus", "points reachable by at most l lines");
  loc->add_option("--variety", o.variety, "variety file")->required();
  loc->add_option("--point", o.point, "base point")->required();
  loc->add_option("--length", o.length, "number of line steps")->required();
  auto* exp = app.add_subcommand("explore", "pairwise connectivity statistics");
  exp->add_option("--variety", o.variety, "variety file")->required();
  exp->add_option("--max-length", o.length, "longest chain length to tabulate")->required();
  auto* gen = app.add_subcommand("generate", "write a sample variety file");
  gen->add_option("--kind", o.kind, "quadric, fermat-cubic, cubic-threefold, plane or empty")->required();
  gen->add_option("--field", o.field, "prime p")->required();
  gen->add_option("--ambient", o.ambient, "N for plane and empty");
  gen->add_option("--output", o.output, "file to write (default: stdout)");

  std::vector<const char*> argv{"chainlines"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }

  Report report;
  try {
    if (gen->parsed()) {
      const auto spec = detail::sample(o);
      if (o.output.empty()) {
        write_variety(out, spec);
      } else {
        std::ofstream f(o.output);
        if (!f) throw std::invalid_argument("cannot write '" + o.output + "'");
        write_variety(f, spec);
      }
      return success;
    }
    if (check->parsed()) report = detail::check(o);
    else if (minlength->parsed()) report = detail::minlength(o);
    else if (cilength->parsed()) report = detail::cilength(o);
    else if (cls->parsed()) report = detail::class_cmd(o);
    else if (cnt->parsed()) report = detail::count(o);
    else if (wit->parsed()) report = detail::witness(o);
    else if (sharp->parsed()) report = detail::sharpness(o);
    else if (lin->parsed()) report = detail::lines(o);
    else if (chn->parsed()) report = detail::chain(o);
    else if (loc->parsed()) report = detail::locus_cmd(o);
    else if (exp->parsed()) report = detail::explore(o);
  } catch (const expected_dimension_error& e) {
    if (o.machine) out << "expected_dimension=" << e.dimension() << '\n';
    err << "error: " << e.what() << (e.dimension() < 0 ? " (try a larger N or a smaller l)" : " (try a smaller N or a larger l)")
        << '\n';
    return input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }

  if (o.machine)
    render_machine(out, report);
  else
    render_human(out, report);
  return report.status;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace chainlines::cli

#endif  // CHAINLINES_CLI_HPP
