#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "catsem/equiv.hpp"
#include "catsem/nat_algebra.hpp"
#include "catsem/nerve.hpp"
#include "catsem/omega_algebra.hpp"
#include "catsem/polynomial.hpp"
#include "catsem/scenario.hpp"
#include "catsem/sieves.hpp"
#include "catsem/tt_semantics.hpp"
#include "catsem/tt_syntax.hpp"

using namespace catsem;
using nlohmann::json;

namespace {

constexpr int kUsage = 2;

struct Common {
  std::string format = "text";
  std::size_t bound = 4;
  bool bound_given = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app->add_option_function<std::size_t>(
         "--bound", [&c](std::size_t n) { c.bound = n; c.bound_given = true; }, "Verification bound")
      ->check(CLI::PositiveNumber);
  app->add_option_function<std::uint64_t>(
      "--seed", [&c](std::uint64_t s) { c.seed = s; c.seed_given = true; }, "Seed for randomized suites");
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    const unsigned long v = std::stoul(item, &pos);
    if (pos != item.size()) throw CLI::ValidationError("fiber list", "not a number: " + item);
    out.push_back(v);
  }
  return out;
}

int cmd_verify(const std::vector<std::string>& files, const Common& c) {
  RunOptions opts;
  if (c.bound_given) opts.bound = c.bound;
  if (c.seed_given) opts.seed = c.seed;
  int code = 0;
  json all = json::array();
  for (const auto& f : files) {
    const Report r = run_scenario_file(f, opts);
    code = std::max(code, r.exit_code());
    if (c.format == "json") all.push_back(to_json(r));
    else std::cout << to_text(r);
  }
  if (c.format == "json") std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  return code;
}

int cmd_poly_compose(const std::string& p_text, const std::string& q_text, const Common& c) {
  const PolySignature p = canonical_signature(parse_sizes(p_text));
  const PolySignature q = canonical_signature(parse_sizes(q_text));
  const ComposedSignature pq = compose_signatures(p, q);
  const std::size_t x = c.bound_given ? c.bound : 2;
  const FinMap iso = composition_iso(pq, p, q, FinSet::range(x));
  if (c.format == "json") {
    json j = {{"p", p.map.fiber_sizes()},
              {"q", q.map.fiber_sizes()},
              {"composite", {{"base", pq.composite.base().size()}, {"total", pq.composite.total().size()},
                             {"fibers", pq.composite.map.fiber_sizes()}}},
              {"x", x},
              {"extension_size", iso.dom().size()},
              {"bijective", iso.is_bijective()}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "p·q : " << pq.composite.total().size() << " -> " << pq.composite.base().size() << "\n";
    for (std::size_t b = 0; b < pq.composite.base().size(); ++b) {
      std::cout << "  " << pq.composite.base()[b].str() << " : " << pq.composite.map.fiber_size(b) << "\n";
    }
    std::cout << "|P_{p·q}(" << x << ")| = " << iso.dom().size() << ", comparison with P_p(P_q(" << x << ")) is "
              << (iso.is_bijective() ? "a bijection" : "NOT a bijection") << "\n";
  }
  return iso.is_bijective() ? 0 : 1;
}

int cmd_presheaf_omega(const std::string& cat_name, const Common& c) {
  const IndexCategory cat = IndexCategory::named(cat_name);
  const Presheaf om = omega(cat);
  const bool bicond = omega_diagonal_is_biconditional(cat);
  const MLReport ml = verify_ml_algebra(omega_algebra(cat));
  if (c.format == "json") {
    json sieves = json::array();
    for (std::size_t o = 0; o < cat.object_count(); ++o) {
      json row = json::array();
      for (const auto& l : om.at(o).elements()) row.push_back(to_json_value(l));
      sieves.push_back({{"object", to_json_value(cat.objects()[o])}, {"sieves", row}});
    }
    json squares = json::object();
    for (const auto& s : ml.squares) squares[s.name] = to_string(s.status);
    std::cout << json{{"category", cat_name}, {"omega", sieves}, {"sizes", om.sizes()},
                      {"diagonal_is_biconditional", bicond}, {"ml_algebra", squares}}
                     .dump(2)
              << "\n";
  } else {
    for (std::size_t o = 0; o < cat.object_count(); ++o) {
      std::cout << "Ω(" << cat.objects()[o].str() << ") = " << om.at(o).str() << "\n";
    }
    std::cout << "diagonal classifies the biconditional: " << (bicond ? "yes" : "no") << "\n";
    for (const auto& s : ml.squares) std::cout << s.name << " square: " << to_string(s.status) << "\n";
  }
  return bicond && ml.passed() ? 0 : 1;
}

int cmd_universe_nerve(const std::string& cat_name, std::size_t kappa, const Common& c) {
  const IndexCategory cat = IndexCategory::named(cat_name);
  const HsReport rep = verify_hs_universe(cat, kappa);
  if (c.format == "json") {
    json squares = json::object();
    for (const auto& s : rep.ml.squares) squares[s.name] = to_string(s.status);
    json j = {{"category", cat_name}, {"kappa", kappa}, {"universe_sizes", rep.universe_sizes},
              {"generic_sizes", rep.generic_sizes}, {"squares", squares}};
    j["iso_to_omega"] = rep.iso_to_omega ? json(*rep.iso_to_omega) : json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "|V_" << kappa << "| per object:";
    for (auto n : rep.universe_sizes) std::cout << ' ' << n;
    std::cout << "\n|V̇_" << kappa << "| per object:";
    for (auto n : rep.generic_sizes) std::cout << ' ' << n;
    std::cout << "\n";
    if (rep.iso_to_omega) std::cout << "isomorphic to Ω: " << (*rep.iso_to_omega ? "yes" : "no") << "\n";
    for (const auto& s : rep.ml.squares) std::cout << s.name << " square: " << to_string(s.status) << "\n";
  }
  const bool ok = rep.ml.passed() && rep.iso_to_omega.value_or(true);
  return ok ? 0 : 1;
}

int cmd_equiv_fibers(const Common& c) {
  const std::size_t bound = c.bound_given ? c.bound : 5;
  const EquivClassifier ec = build_equiv(nat_eq_model(bound));
  const Family& u = ec.model.region;
  const std::size_t n = u.base().size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = ec.equiv.fiber_size(pair_index(ec, a, b));
  }
  if (c.format == "json") {
    std::cout << json{{"bound", bound}, {"fibers", table}, {"counts_consistent", ec.counts_consistent}}.dump(2)
              << "\n";
  } else {
    std::cout << "|Equiv(a, b)| for a, b < " << n << "\n";
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) std::cout << (b ? " " : "") << table[a][b];
      std::cout << "\n";
    }
    std::cout << "isEquiv counts consistent: " << (ec.counts_consistent ? "yes" : "no") << "\n";
  }
  return ec.counts_consistent ? 0 : 1;
}

int cmd_tt_eval(const std::vector<std::string>& exprs, const std::string& file, const std::string& context,
                const Common& c) {
  std::vector<std::string> lines = exprs;
  if (!file.empty() || exprs.empty()) {
    std::ifstream f;
    std::istream* in = &std::cin;
    if (!file.empty() && file != "-") {
      f.open(file);
      if (!f) throw CLI::ValidationError("--file", "cannot open " + file);
      in = &f;
    }
    std::string line;
    while (std::getline(*in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      lines.push_back(line);
    }
  }
  const Elaborator el;
  const Context ctx = parse_context(context);
  int code = 0;
  json out = json::array();
  for (const auto& text : lines) {
    try {
      const TypeTable t = el.elaborate(ctx, parse_type(text));
      if (c.format == "json") {
        json rows = json::array();
        for (std::size_t e = 0; e < t.extent.size(); ++e) {
          rows.push_back({{"env", to_json_value(t.extent[e])}, {"cardinality", t.card[e]}});
        }
        json item = {{"expr", text}, {"table", rows}};
        if (ctx.entries.empty()) item["cardinality"] = t.card.at(0);
        out.push_back(item);
      } else if (ctx.entries.empty()) {
        std::cout << t.card.at(0) << "\n";
      } else {
        for (std::size_t e = 0; e < t.extent.size(); ++e) std::cout << t.extent[e].str() << " " << t.card[e] << "\n";
      }
    } catch (const ParseError& e) {
      std::cerr << "error: " << text << ": " << e.what() << "\n";
      code = std::max(code, kUsage);
    } catch (const Error& e) {
      std::cerr << "error: " << text << ": " << e.what() << "\n";
      code = std::max(code, 1);
    }
  }
  if (c.format == "json") std::cout << out.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catsem: finite semantics of dependent type theory"};
  app.require_subcommand(1);
  Common common;

  std::vector<std::string> files;
  auto* verify = app.add_subcommand("verify", "Run scenario files");
  verify->add_option("files", files, "Scenario JSON files")->required()->check(CLI::ExistingFile);
  add_common(verify, common);

  auto* poly = app.add_subcommand("poly", "Polynomial functors");
  poly->require_subcommand(1);
  std::string p_text, q_text;
  auto* compose_cmd = poly->add_subcommand("compose", "Compose two signatures given by fiber sizes");
  compose_cmd->add_option("--p", p_text, "Fiber sizes of p, comma separated")->required();
  compose_cmd->add_option("--q", q_text, "Fiber sizes of q, comma separated")->required();
  add_common(compose_cmd, common);

  std::string cat_name = "arrow";
  auto* presheaf = app.add_subcommand("presheaf", "Presheaf constructions");
  presheaf->require_subcommand(1);
  auto* omega_cmd = presheaf->add_subcommand("omega", "Subobject classifier and its algebra");
  omega_cmd->add_option("--category", cat_name, "terminal, arrow or composable-pair")
      ->check(CLI::IsMember({"terminal", "arrow", "composable-pair"}));
  add_common(omega_cmd, common);

  std::size_t kappa = 2;
  auto* universe = app.add_subcommand("universe", "Universes");
  universe->require_subcommand(1);
  auto* nerve_cmd = universe->add_subcommand("nerve", "Hofmann-Streicher universe via the nerve");
  nerve_cmd->add_option("--category", cat_name, "terminal, arrow or composable-pair")
      ->check(CLI::IsMember({"terminal", "arrow", "composable-pair"}));
  nerve_cmd->add_option("--kappa", kappa, "Size bound (2 or 3)")->check(CLI::IsMember({2, 3}));
  add_common(nerve_cmd, common);

  auto* equiv = app.add_subcommand("equiv", "Equivalence classifier");
  equiv->require_subcommand(1);
  auto* fibers_cmd = equiv->add_subcommand("fibers", "Fiber sizes of Equiv over pairs of cardinals");
  add_common(fibers_cmd, common);

  std::vector<std::string> exprs;
  std::string file, context;
  auto* tt = app.add_subcommand("tt", "Type expressions");
  tt->require_subcommand(1);
  auto* eval_cmd = tt->add_subcommand("eval", "Elaborate type expressions into the cardinal model");
  eval_cmd->add_option("exprs", exprs, "Expressions; read from --file or stdin when absent");
  eval_cmd->add_option("--file", file, "File with one expression per line ('-' for stdin)");
  eval_cmd->add_option("--context", context, "Context telescope, e.g. \"x : Fin 3, y : Fin x\"");
  add_common(eval_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*verify) return cmd_verify(files, common);
    if (*compose_cmd) return cmd_poly_compose(p_text, q_text, common);
    if (*omega_cmd) return cmd_presheaf_omega(cat_name, common);
    if (*nerve_cmd) return cmd_universe_nerve(cat_name, kappa, common);
    if (*fibers_cmd) return cmd_equiv_fibers(common);
    if (*eval_cmd) return cmd_tt_eval(exprs, file, context, common);
  } catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
