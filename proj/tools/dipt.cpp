// dipt: dimension tables, primitive counts, homology, property checks,
// antipodes and substitution dynamics for free dipterous algebras.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dipt/checks.hpp"
#include "dipt/dimensions.hpp"
#include "dipt/errors.hpp"
#include "dipt/homology.hpp"
#include "dipt/infinitesimal.hpp"
#include "dipt/lang_dynamics.hpp"
#include "dipt/qndipt.hpp"
#include "dipt/serialize.hpp"
#include "dipt/unital.hpp"

namespace {

using dipt::json;

constexpr int kPass = 0;
constexpr int kMathFail = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::size_t max_degree = 5;
  std::string t_text = "1";
  dipt::Rational t{1};
  std::uint64_t seed = 0;
  bool json = false;
  std::size_t weight_cap = 5;
  bool free_weights = false;
  bool inject_sign_fault = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
  return out.str();
}

void emit(const RunConfig& cfg, const json& j, const std::string& text) {
  if (cfg.json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

int cmd_dims(const RunConfig& cfg, const std::string& which) {
  const std::size_t n = cfg.max_degree;
  struct Row {
    std::string name;
    std::vector<std::uint64_t> computed, expected;
  };
  std::vector<Row> rows;
  const bool all = which == "all";
  dipt::DimTable table;
  if (all || which == "dipt" || which == "mag" || which == "ldipt") table = dipt::dim_table(n);
  if (all || which == "dipt") rows.push_back({"dipt", table.dipt, dipt::large_schroeder(n)});
  if (all || which == "mag") rows.push_back({"mag", table.mag, dipt::little_schroeder(n)});
  if (all || which == "ldipt") rows.push_back({"ldipt", table.ldipt, dipt::catalan(n)});
  if (all || which == "qndipt") {
    std::vector<std::uint64_t> qn;
    for (auto d : dipt::qn_dim_table(n)) qn.push_back(d);
    rows.push_back({"qndipt", qn, dipt::qndipt_series(n)});
  }
  bool ok = true;
  json j{{"operads", json::array()}};
  std::ostringstream text;
  for (const auto& r : rows) {
    const bool match = r.computed == r.expected;
    ok = ok && match;
    j["operads"].push_back({{"name", r.name}, {"computed", r.computed}, {"expected", r.expected}, {"match", match}});
    text << r.name << ": " << join(r.computed) << "  expected " << join(r.expected)
         << "  match=" << (match ? "true" : "false") << '\n';
  }
  j["ok"] = ok;
  emit(cfg, j, text.str());
  return ok ? kPass : kMathFail;
}

int cmd_prim(const RunConfig& cfg, const std::string& which) {
  const std::size_t n = cfg.max_degree;
  bool ok = true;
  json j = json::object();
  std::ostringstream text;
  if (which == "semiinf" || which == "both") {
    std::vector<std::uint64_t> dims;
    for (std::size_t d = 1; d <= n; ++d) dims.push_back(dipt::prim_basis(d, "x", {cfg.t}).size());
    const auto expected = dipt::little_schroeder(n);
    const bool match = dims == expected;
    ok = ok && match;
    j["semiinf"] = {{"t", cfg.t.str()}, {"kernel", dims}, {"expected", expected}, {"match", match}};
    text << "semiinf (t=" << cfg.t << "): " << join(dims) << "  expected " << join(expected)
         << "  match=" << (match ? "true" : "false") << '\n';
  }
  if (which == "hopf" || which == "both") {
    const auto rep = dipt::primcom_dims(n);
    ok = ok && rep.ok;
    j["hopf"] = dipt::to_json(rep);
    text << "hopf: " << join(rep.kernel) << "  oracle p_n " << join(rep.oracle)
         << "  match=" << (rep.ok ? "true" : "false") << '\n';
  }
  emit(cfg, j, text.str());
  return ok ? kPass : kMathFail;
}

int cmd_homology(const RunConfig& cfg) {
  constexpr std::size_t kMaxArity = 4;
  const auto rep = dipt::homology_report(kMaxArity, cfg.weight_cap, std::min<std::size_t>(cfg.weight_cap, 4),
                                         {cfg.inject_sign_fault});
  std::ostringstream text;
  text << "arity weight kernel image betti\n";
  for (const auto& p : rep.pieces)
    text << p.arity << ' ' << p.weight << ' ' << p.kernel << ' ' << p.image << ' ' << p.betti << '\n';
  const auto flag = [](bool b) { return b ? "true" : "false"; };
  text << "d_squared_zero=" << flag(rep.d_squared_zero) << " simplicial=" << flag(rep.simplicial)
       << " homotopy_ok=" << flag(rep.homotopy_ok) << " betti_ok=" << flag(rep.betti_ok) << '\n'
       << "koszul_ok=" << flag(rep.koszul_ok) << '\n';
  if (rep.witness) text << "witness: " << *rep.witness << '\n';
  emit(cfg, dipt::to_json(rep), text.str());
  return rep.koszul_ok ? kPass : kMathFail;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  const auto checks = dipt::run_suite(suite, {cfg.max_degree, cfg.seed, cfg.t});
  json j{{"suite", suite}, {"checks", json::array()}};
  std::ostringstream text;
  for (const auto& c : checks) {
    json item{{"name", c.name}, {"ok", c.ok}, {"cases", c.cases}};
    if (c.witness) item["witness"] = *c.witness;
    j["checks"].push_back(item);
    text << (c.ok ? "pass " : "FAIL ") << c.name << " (" << c.cases << " cases)";
    if (c.witness) text << "  counterexample: " << *c.witness;
    text << '\n';
  }
  const bool ok = dipt::all_ok(checks);
  j["ok"] = ok;
  emit(cfg, j, text.str());
  return ok ? kPass : kMathFail;
}

int cmd_antipode(const RunConfig& cfg, std::size_t degree, const std::string& alphabet) {
  if (degree < 1 || degree > cfg.max_degree) throw UsageError("degree must lie in 1..max-degree");
  const auto basis = dipt::dipt_basis(degree, alphabet);
  bool ok = true;
  for (const auto& b : basis)
    for (auto kind : {dipt::CoproductKind::SemiHopf, dipt::CoproductKind::SemiInfinitesimal})
      for (bool left : {true, false})
        ok = ok && dipt::antipode_convolution(kind, dipt::UnitalElement(dipt::UnitalKey(b)), left).empty();
  const json s = dipt::antipode_table(dipt::CoproductKind::SemiHopf, basis);
  const json sp = dipt::antipode_table(dipt::CoproductKind::SemiInfinitesimal, basis);
  std::ostringstream text;
  for (const auto& b : basis)
    text << b.key() << "\n  S  = " << s[b.key()].get<std::string>() << "\n  S' = " << sp[b.key()].get<std::string>()
         << '\n';
  text << "identities_ok=" << (ok ? "true" : "false") << '\n';
  emit(cfg, {{"degree", degree}, {"S", s}, {"S'", sp}, {"identities_ok", ok}}, text.str());
  return ok ? kPass : kMathFail;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_dynamics(const RunConfig& cfg, const std::string& path, const std::string& start, std::size_t steps,
                 bool graph) {
  const std::string text_in = read_file(path);
  const dipt::CoopTable tbl = graph ? dipt::graph_coop(dipt::parse_graph(text_in)) : dipt::parse_grammar(text_in);
  const dipt::Word w = dipt::parse_word(start);
  for (const auto& s : w)
    if (!tbl.contains(s)) throw UsageError("start symbol '" + s + "' is not in the alphabet");
  if (!cfg.free_weights && !tbl.is_stochastic())
    throw UsageError("weights are not stochastic; pass --free-weights to allow arbitrary weights");
  const auto states = dipt::dynamics_run(tbl, dipt::WordElement(w), steps, !cfg.free_weights);
  const auto terminals = tbl.terminals();
  const bool conserving = !cfg.free_weights && terminals.empty();
  json j{{"mode", cfg.free_weights ? "free" : "probability"}, {"terminals", terminals}, {"steps", json::array()}};
  std::ostringstream text;
  if (!terminals.empty()) text << "terminals (no rules): " << join(terminals) << '\n';
  bool ok = true;
  for (std::size_t k = 0; k < states.size(); ++k) {
    const auto mass = dipt::total_mass(states[k]);
    if (conserving && mass != dipt::Rational(1)) ok = false;
    j["steps"].push_back({{"step", k}, {"mass", mass.str()}, {"distribution", dipt::distribution_json(states[k])}});
    text << "step " << k << "  mass " << mass << '\n';
    for (const auto& [word, c] : dipt::distribution(states[k])) text << "  " << dipt::word_str(word) << " : " << c << '\n';
  }
  emit(cfg, j, text.str());
  return ok ? kPass : kMathFail;
}

int cmd_delta(const RunConfig& cfg, const std::string& element) {
  const dipt::DiptElement x(dipt::DiptBasis::parse(element));
  const auto d = dipt::delta(x, {cfg.t});
  std::ostringstream text;
  for (const auto& line : dipt::to_lines(d)) text << line << '\n';
  emit(cfg, dipt::to_json(d), text.str());
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in free dipterous algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--max-degree", cfg.max_degree, "Largest degree")->check(CLI::PositiveNumber);
  app.add_option("--t", cfg.t_text, "Coproduct parameter t (p/q)");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--weight-cap", cfg.weight_cap, "Largest homology weight")->check(CLI::PositiveNumber);
  app.add_flag("--free-weights", cfg.free_weights, "Allow non-stochastic grammar weights");
  app.add_flag("--inject-sign-fault", cfg.inject_sign_fault)->group("");

  std::string dims_which = "all";
  auto* dims = app.add_subcommand("dims", "Dimension tables");
  dims->add_option("operad", dims_which)->check(CLI::IsMember({"dipt", "mag", "qndipt", "ldipt", "all"}));

  std::string prim_which = "both";
  auto* prim = app.add_subcommand("prim", "Primitive dimensions");
  prim->add_option("coproduct", prim_which)->check(CLI::IsMember({"semiinf", "hopf", "both"}));

  auto* homology = app.add_subcommand("homology", "Koszul complex homology");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Property suites");
  verify->add_option("suite", suite)->check(CLI::IsMember(dipt::suite_names()));

  std::size_t antipode_degree = 2;
  std::string alphabet = "x";
  auto* antipode = app.add_subcommand("antipode", "Antipode tables");
  antipode->add_option("degree", antipode_degree);
  antipode->add_option("--alphabet", alphabet, "Generator letters");

  std::string grammar, start;
  std::size_t steps = 1;
  bool graph = false;
  auto* dynamics = app.add_subcommand("dynamics", "Substitution dynamics");
  dynamics->add_option("file", grammar)->required();
  dynamics->add_option("start", start)->required();
  dynamics->add_option("steps", steps);
  dynamics->add_flag("--graph", graph, "Read 'arc v w p/q' lines");

  std::string element;
  auto* delta = app.add_subcommand("delta", "Coproduct of a basis element");
  delta->add_option("element", element)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    cfg.t = dipt::Rational::parse(cfg.t_text);
    if (dims->parsed()) return cmd_dims(cfg, dims_which);
    if (prim->parsed()) return cmd_prim(cfg, prim_which);
    if (homology->parsed()) return cmd_homology(cfg);
    if (verify->parsed()) return cmd_verify(cfg, suite);
    if (antipode->parsed()) return cmd_antipode(cfg, antipode_degree, alphabet);
    if (dynamics->parsed()) return cmd_dynamics(cfg, grammar, start, steps, graph);
    if (delta->parsed()) return cmd_delta(cfg, element);
  } catch (const dipt::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
