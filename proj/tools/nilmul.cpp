// nilmul: multipliers, epicenters and capability of nilpotent Lie algebras.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include "nilmul/algebra_json.hpp"
#include "nilmul/multiplier.hpp"
#include "nilmul/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace nilmul;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;

struct Globals {
  bool json = false;
  std::string out;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw std::runtime_error(g.out + ": cannot write");
  f << text;
}

void emit_json(const Globals& g, const json& j) { emit(g, j.dump(2) + "\n"); }

std::string dims_of(const std::vector<Subspace>& list) {
  std::string s;
  for (const auto& x : list) s += (s.empty() ? "" : " ") + std::to_string(x.dim());
  return s;
}

json dims_json(const std::vector<Subspace>& list) {
  json a = json::array();
  for (const auto& x : list) a.push_back(x.dim());
  return a;
}

json subspace_json(const Subspace& s) {
  json rows = json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) {
    json row = json::array();
    for (const auto& x : s.basis().row(r)) row.push_back(to_string(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_info(const Globals& g, const std::string& file) {
  const LieAlgebra l = read_algebra(file);
  const auto rep = series(l);
  std::optional<DerivedDimOne> dd;
  if (rep.nilpotent() && rep.lower(2).dim() == 1) dd = recognize_derived_dim_one(l);
  if (g.json) {
    json j = {{"name", l.name()},
              {"dim", l.dim()},
              {"basis", l.labels()},
              {"nilpotent", rep.nilpotent()},
              {"class", rep.nilpotency_class ? json(*rep.nilpotency_class) : json(nullptr)},
              {"lower_central", dims_json(rep.lower_central)},
              {"upper_central", dims_json(rep.upper_central)},
              {"derived_dim_one", dd ? json{{"m", dd->heisenberg_rank}, {"abelian_part", dd->abelian_part}}
                                     : json(nullptr)}};
    emit_json(g, j);
    return exit_ok;
  }
  std::ostringstream os;
  os << "algebra " << l.name() << "\n"
     << "dim " << l.dim() << "\n"
     << "basis";
  for (const auto& s : l.labels()) os << ' ' << s;
  os << "\n";
  if (rep.nilpotent())
    os << "nilpotency class " << *rep.nilpotency_class << "\n";
  else
    os << "not nilpotent\n";
  os << "lower central series dims " << dims_of(rep.lower_central) << "\n"
     << "upper central series dims " << dims_of(rep.upper_central) << "\n";
  if (dd) os << "isomorphic to H(" << dd->heisenberg_rank << ") + A(" << dd->abelian_part << ")\n";
  emit(g, os.str());
  return exit_ok;
}

int cmd_witt(const Globals& g, std::size_t d, std::size_t n) {
  const auto count = witt(d, n);
  if (g.json)
    emit_json(g, {{"generators", d}, {"length", n}, {"count", count}});
  else
    emit(g, std::to_string(count) + "\n");
  return exit_ok;
}

int cmd_hall(const Globals& g, std::size_t d, std::size_t c) {
  const auto basis = hall_basis(d, c);
  const auto names = generator_names(d);
  if (g.json) {
    json words = json::array();
    for (std::size_t i = 0; i < basis.size(); ++i)
      words.push_back({{"index", i}, {"length", basis[i].length}, {"word", format_word(basis, i, names)}});
    emit_json(g, {{"generators", d}, {"class", c}, {"words", std::move(words)}});
    return exit_ok;
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < basis.size(); ++i)
    os << i << '\t' << basis[i].length << '\t' << format_word(basis, i, names) << "\n";
  emit(g, os.str());
  return exit_ok;
}

std::size_t parse_count(const std::string& s, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty() || s[0] == '-') throw InputError(std::string(what) + ": expected a count, got \"" + s + "\"");
  return static_cast<std::size_t>(v);
}

int cmd_make(const Globals& g, const std::string& kind, const std::vector<std::string>& args) {
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw InputError("make " + kind + ": expected " + std::to_string(k) + " argument(s), got " +
                       std::to_string(args.size()));
  };
  LieAlgebra l = [&] {
    if (kind == "abelian") {
      need(1);
      return abelian(parse_count(args[0], "n"));
    }
    if (kind == "heisenberg") {
      need(1);
      const auto m = parse_count(args[0], "m");
      if (m == 0) throw InputError("m: must be at least 1");
      return heisenberg(m);
    }
    if (kind == "free-nilpotent") {
      need(2);
      return as_lie_algebra(*free_nilpotent(parse_count(args[0], "generators"), parse_count(args[1], "class")));
    }
    if (kind == "direct-sum") {
      need(2);
      return direct_sum(read_algebra(args[0]), read_algebra(args[1]));
    }
    throw InputError("kind: unknown algebra kind \"" + kind + "\" (abelian, heisenberg, free-nilpotent, direct-sum)");
  }();
  emit_json(g, algebra_to_json(l));
  return exit_ok;
}

void warn_weight(std::size_t c) {
  if (c > 2)
    std::cerr << "warning: weight " << c << " uses a free nilpotent algebra of class k+" << c
              << "; dimension grows quickly\n";
}

int cmd_multiplier(const Globals& g, const std::string& file, std::size_t c, bool basis, bool opt_in) {
  const LieAlgebra l = read_algebra(file);
  PresentOptions opts;
  opts.allow_high_weight = opt_in;
  if (opt_in) warn_weight(c);
  const auto rep = nilpotent_multiplier(l, c, opts);
  if (g.json) {
    const auto s = series(l);
    const std::size_t m2 = c == 2 ? rep.dimension : nilpotent_multiplier(l, 2).dimension;
    const auto b = make_bound_report(l.dim(), s.lower(2).dim(), s.lower(3).dim(), m2);
    json report = {{"algebra", l.name()},
                   {"c", c},
                   {"dim_multiplier", rep.dimension},
                   {"basis_words", rep.words()},
                   {"bounds",
                    {{"eq1", b.general}, {"refined", b.refined ? json(*b.refined) : json(nullptr)}, {"value", b.value}}},
                   {"capable", is_capable(l)},
                   {"two_capable", is_two_capable(l)}};
    emit_json(g, report);
    return exit_ok;
  }
  std::ostringstream os;
  os << "dim M^(" << c << ")(" << l.name() << ") = " << rep.dimension << "\n";
  if (basis)
    for (const auto& w : rep.words()) os << "  " << w << "\n";
  emit(g, os.str());
  return exit_ok;
}

int cmd_capable(const Globals& g, const std::string& file, std::size_t c) {
  if (c != 1 && c != 2) throw InputError("c: capability is decided for c = 1 or c = 2");
  const LieAlgebra l = read_algebra(file);
  const Subspace z = z_star(l, c);
  const std::string prefix = c == 1 ? "" : "2-";
  const std::string sym = c == 1 ? "Z*" : "Z*₂";
  if (g.json) {
    emit_json(g, {{"algebra", l.name()},
                  {"c", c},
                  {c == 1 ? "capable" : "two_capable", z.is_zero()},
                  {"epicenter_dim", z.dim()},
                  {"epicenter", subspace_json(z)}});
    return exit_ok;
  }
  if (z.is_zero())
    emit(g, prefix + "capable; " + sym + " = 0\n");
  else
    emit(g, "not " + prefix + "capable; " + sym + " has dimension " + std::to_string(z.dim()) + "\n");
  return exit_ok;
}

int cmd_verify(const Globals& g, const VerifyLimits& limits) {
  const auto cases = verify_paper(limits);
  bool ok = true;
  for (const auto& c : cases) ok = ok && c.pass();
  if (g.json) {
    emit_json(g, verify_to_json(cases));
  } else {
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& c : cases) {
      passed += c.pass() ? 1 : 0;
      os << (c.pass() ? "PASS  " : "FAIL  ") << c.id << "  expected " << c.expected.dump() << " (" << c.provenance
         << ")  computed " << c.computed.dump() << "  " << c.description << "\n";
    }
    os << passed << "/" << cases.size() << " cases passed\n";
    emit(g, os.str());
  }
  return ok ? exit_ok : exit_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multipliers, epicenters and capability of nilpotent Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("-o,--output", g.out, "Write output to this file");

  std::string file;
  std::size_t d = 0, n = 0, c = 2;

  auto* info = app.add_subcommand("info", "Summarise an algebra file");
  info->add_option("file", file, "Algebra JSON")->required();

  auto* wit = app.add_subcommand("witt", "Count basic commutators of a given length");
  wit->add_option("--generators", d, "Number of generators")->required()->check(CLI::PositiveNumber);
  wit->add_option("--length", n, "Commutator length")->required()->check(CLI::PositiveNumber);

  auto* hall = app.add_subcommand("hall", "List a Hall basis");
  hall->add_option("--generators", d, "Number of generators")->required()->check(CLI::PositiveNumber);
  hall->add_option("--class", n, "Maximum length")->required()->check(CLI::PositiveNumber);

  std::string kind;
  std::vector<std::string> make_args;
  auto* make = app.add_subcommand("make", "Write an algebra file: abelian N | heisenberg M | free-nilpotent D C | "
                                          "direct-sum A.json B.json");
  make->add_option("kind", kind, "Algebra kind")->required();
  make->add_option("args", make_args, "Parameters");

  bool basis = false, opt_in = false;
  auto* mult = app.add_subcommand("multiplier", "Dimension (and basis) of the c-nilpotent multiplier");
  mult->add_option("file", file, "Algebra JSON")->required();
  mult->add_option("--c", c, "Weight c")->check(CLI::PositiveNumber);
  mult->add_flag("--basis", basis, "List Hall-word representatives");
  mult->add_flag("--opt-in-c3", opt_in, "Allow weights above 2");

  auto* cap = app.add_subcommand("capable", "Decide capability (c = 1) or 2-capability (c = 2)");
  cap->add_option("file", file, "Algebra JSON")->required();
  cap->add_option("--c", c, "Weight c");

  VerifyLimits limits;
  bool sequential = false;
  auto* ver = app.add_subcommand("verify-paper", "Check every closed-form result on the built-in corpus");
  ver->add_option("--max-abelian", limits.max_abelian, "Largest abelian dimension");
  ver->add_option("--max-heisenberg", limits.max_heisenberg, "Largest Heisenberg rank");
  ver->add_flag("--sequential", sequential, "Evaluate the corpus on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input;
  }

  try {
    if (*info) return cmd_info(g, file);
    if (*wit) return cmd_witt(g, d, n);
    if (*hall) return cmd_hall(g, d, n);
    if (*make) return cmd_make(g, kind, make_args);
    if (*mult) return cmd_multiplier(g, file, c, basis, opt_in);
    if (*cap) return cmd_capable(g, file, c);
    if (*ver) {
      limits.parallel = !sequential;
      return cmd_verify(g, limits);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}
