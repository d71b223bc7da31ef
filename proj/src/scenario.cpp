#include "catsem/scenario.hpp"

#include <algorithm>
#include <cstdint>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "catsem/equiv.hpp"
#include "catsem/identity.hpp"
#include "catsem/kernels.hpp"
#include "catsem/nat_algebra.hpp"
#include "catsem/nerve.hpp"
#include "catsem/omega_algebra.hpp"
#include "catsem/polynomial.hpp"
#include "catsem/sieves.hpp"
#include "catsem/tt_semantics.hpp"
#include "catsem/tt_syntax.hpp"
#include "catsem/typeiso.hpp"

namespace catsem {

using nlohmann::json;

namespace {

const std::set<std::string> kTargetKinds = {"none", "nat", "omega", "category", "signatures",
                                            "expressions", "family", "presheaf"};
const std::set<std::string> kCheckKinds = {"square",         "ml-algebra",          "id-comparison",
                                           "equiv-fibers",   "hs-universe",         "omega-biconditional",
                                           "subobject-classifier", "composition-iso", "tt-golden",
                                           "tt-coherence",   "unit-search",         "typeiso"};

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw ScenarioError("scenario schema violation at " + where + ": " + what);
}

// Literals built in code arrive as signed integers, parsed files as unsigned.
bool is_natural(const json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

std::size_t positive(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) schema_error(where, "missing '" + key + "'");
  const json& v = obj.at(key);
  if (!is_natural(v) || v.get<std::size_t>() == 0) schema_error(where + "." + key, "expected a positive integer");
  return v.get<std::size_t>();
}

std::size_t optional_positive(const json& obj, const std::string& key, std::size_t fallback, const std::string& where) {
  return obj.contains(key) ? positive(obj, key, where) : fallback;
}

void validate_target(const json& t) {
  if (!t.is_object()) schema_error("target", "expected an object");
  if (!t.contains("kind") || !t["kind"].is_string()) schema_error("target", "missing string 'kind'");
  const std::string kind = t["kind"].get<std::string>();
  if (!kTargetKinds.count(kind)) schema_error("target.kind", "unknown target kind '" + kind + "'");
  if (kind == "nat") {
    positive(t, "bound", "target");
    if (t.contains("sigma_shift") && !is_natural(t["sigma_shift"])) {
      schema_error("target.sigma_shift", "expected a non-negative integer");
    }
    if (t.contains("capacity")) positive(t, "capacity", "target");
  } else if (kind == "omega" || kind == "category") {
    if (!t.contains("index_category")) schema_error("target", "missing 'index_category'");
  } else if (kind == "signatures") {
    if (!t.contains("p") || !t.contains("q")) schema_error("target", "signature pair needs 'p' and 'q'");
  } else if (kind == "expressions") {
    if (!t.contains("items") || !t["items"].is_array()) schema_error("target", "missing array 'items'");
    for (std::size_t i = 0; i < t["items"].size(); ++i) {
      const json& it = t["items"][i];
      const std::string where = "target.items[" + std::to_string(i) + "]";
      if (!it.is_object() || !it.contains("expr") || !it["expr"].is_string()) schema_error(where, "missing string 'expr'");
      if (it.contains("context") && !it["context"].is_string()) schema_error(where + ".context", "expected a string");
    }
  } else if (kind == "family") {
    if (!t.contains("family")) schema_error("target", "missing 'family'");
  } else if (kind == "presheaf") {
    if (!t.contains("presheaf")) schema_error("target", "missing 'presheaf'");
  }
}


std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

std::vector<FinMap> all_maps(const FinSet& x, const FinSet& y) {
  std::vector<std::size_t> radices(x.size(), y.size());
  std::vector<FinMap> out;
  for (auto& t : kernels::odometer(radices)) out.emplace_back(x, y, std::move(t));
  return out;
}

CheckResult from_square(const SquareCheck& sq, const Presheaf& base) {
  CheckResult r;
  r.status = sq.status;
  r.fibers_checked = sq.fibers_checked;
  r.elements_checked = sq.elements_checked;
  r.detail = sq.detail;
  if (sq.status == CheckStatus::fail) {
    std::ostringstream w;
    if (sq.failing_object && base.category().object_count() > 1) {
      w << "object " << base.category().objects()[*sq.failing_object].str() << ", ";
    }
    if (sq.failing_label) {
      w << "base element " << sq.failing_label->str() << ": left fiber " << sq.left_fiber_size << ", right fiber "
        << sq.right_fiber_size;
    } else {
      w << sq.detail;
    }
    r.witness = w.str();
  }
  return r;
}

// Builds targets on first use so that cheap checks never pay for the algebra.
class Runner {
 public:
  Runner(const Scenario& s, const RunOptions& opts) : s_(s), target_(s.target) {
    if (opts.bound && target_.value("kind", "") == "nat") target_["bound"] = *opts.bound;
    seed_ = opts.seed.value_or(s.seed);
  }

  std::uint64_t seed() const { return seed_; }

  CheckResult run(const json& check) {
    const std::string kind = check.at("kind").get<std::string>();
    CheckResult r;
    if (kind == "square") r = square(check);
    else if (kind == "ml-algebra") r = ml_algebra();
    else if (kind == "id-comparison") r = id_check();
    else if (kind == "equiv-fibers") r = equiv_fibers(check);
    else if (kind == "hs-universe") r = hs(check);
    else if (kind == "omega-biconditional") r = biconditional();
    else if (kind == "subobject-classifier") r = subobjects();
    else if (kind == "composition-iso") r = composition(check);
    else if (kind == "tt-golden") r = golden();
    else if (kind == "tt-coherence") r = coherence(check);
    else if (kind == "unit-search") r = unit_search();
    else if (kind == "typeiso") r = typeiso(check);
    r.name = check.at("name").get<std::string>();
    r.kind = kind;
    return r;
  }

 private:
  std::string target_kind() const { return target_.value("kind", "none"); }

  [[noreturn]] void unresolvable(const std::string& need) const {
    throw ScenarioError("unresolvable target: check needs " + need + " but the target is '" + target_kind() + "'");
  }

  const MLAlgebra& algebra() {
    if (alg_) return *alg_;
    if (target_kind() == "nat") {
      NatOptions o;
      o.capacity = target_.value("capacity", NatStructure::default_capacity);
      o.sigma_shift = target_.value("sigma_shift", std::size_t{0});
      alg_ = nat_algebra(target_.at("bound").get<std::size_t>(), o);
    } else if (target_kind() == "omega") {
      alg_ = omega_algebra(category());
    } else {
      unresolvable("an algebra");
    }
    return *alg_;
  }

  const IndexCategory& category() {
    if (cat_) return *cat_;
    if (target_kind() != "omega" && target_kind() != "category") unresolvable("an index category");
    try {
      cat_ = index_category_from_json(target_.at("index_category"));
    } catch (const Error& e) {
      throw ScenarioError(std::string("unresolvable target: ") + e.what());
    } catch (const json::exception& e) {
      throw ScenarioError(std::string("unresolvable target: ") + e.what());
    }
    return *cat_;
  }

  CheckResult square(const json& check) {
    const std::string which = check.value("square", "");
    const MLAlgebra& alg = algebra();
    if (which == "eq") {
      if (!alg.eq) {
        CheckResult r;
        r.status = CheckStatus::not_applicable;
        r.detail = "algebra has no Eq structure";
        return r;
      }
      return from_square(eq_structure_check(alg, *alg.eq), alg.t.src());
    }
    const MLReport rep = verify_ml_algebra(alg);
    for (const auto& sq : rep.squares) {
      if (sq.name == which) return from_square(sq, alg.t.src());
    }
    throw ScenarioError("square check needs 'square' to be one of unit, sigma, pi, eq");
  }

  CheckResult ml_algebra() {
    const MLAlgebra& alg = algebra();
    CheckResult r;
    for (const auto& sq : verify_ml_algebra(alg).squares) {
      CheckResult one = from_square(sq, alg.t.src());
      r.fibers_checked += one.fibers_checked;
      r.elements_checked += one.elements_checked;
      if (one.status == CheckStatus::fail && r.status != CheckStatus::fail) {
        r.status = CheckStatus::fail;
        r.witness = sq.name + " square, " + *one.witness;
        r.detail = one.detail;
      }
    }
    return r;
  }

  std::optional<EqModel> eq_data() {
    if (target_kind() == "nat" && target_.value("sigma_shift", std::size_t{0}) == 0) {
      return nat_eq_model(target_.at("bound").get<std::size_t>());
    }
    try {
      return eq_model(algebra());
    } catch (const StructureError&) {
      return std::nullopt;
    }
  }

  CheckResult id_check() {
    CheckResult r;
    auto model = eq_data();
    if (!model) {
      r.status = CheckStatus::not_applicable;
      r.detail = "no Set-level equality data";
      return r;
    }
    const IdComparison c = id_comparison(*model);
    r.fibers_checked = c.square.fibers_checked;
    r.elements_checked = c.comparison.dom().size();
    if (!c.bijective || !c.section_law) {
      r.status = CheckStatus::fail;
      r.witness = c.detail.empty() ? std::string("comparison map is not a bijection") : c.detail;
    }
    return r;
  }

  CheckResult equiv_fibers(const json& check) {
    CheckResult r;
    auto model = eq_data();
    if (!model) {
      r.status = CheckStatus::not_applicable;
      r.detail = "no Set-level equality data";
      return r;
    }
    const EquivClassifier ec = build_equiv(*model, check.value("serial", false));
    const Family& u = ec.model.region;
    for (std::size_t a = 0; a < u.base().size(); ++a) {
      for (std::size_t b = 0; b < u.base().size(); ++b) {
        const std::size_t m = u.fiber_size(a), n = u.fiber_size(b);
        const std::uint64_t expected = m == n ? factorial(m) : 0;
        const std::size_t got = ec.equiv.fiber_size(pair_index(ec, a, b));
        ++r.fibers_checked;
        r.elements_checked += got;
        if (got != expected && r.status == CheckStatus::pass) {
          r.status = CheckStatus::fail;
          r.witness = "fiber over " + ec.pairs.object[pair_index(ec, a, b)].str() + " has " + std::to_string(got) +
                      " elements, expected " + std::to_string(expected);
        }
      }
    }
    if (!ec.counts_consistent && r.status == CheckStatus::pass) {
      r.status = CheckStatus::fail;
      r.witness = "isEquiv counts disagree with the bijection enumeration";
    }
    return r;
  }

  CheckResult hs(const json& check) {
    const std::size_t kappa = optional_positive(check, "kappa", 2, "check");
    const HsReport rep = verify_hs_universe(category(), kappa);
    CheckResult r;
    for (const auto& sq : rep.ml.squares) {
      r.fibers_checked += sq.fibers_checked;
      r.elements_checked += sq.elements_checked;
      if (sq.status == CheckStatus::fail && r.status == CheckStatus::pass) {
        r.status = CheckStatus::fail;
        r.witness = sq.name + " square: " + sq.detail;
      }
    }
    if (rep.iso_to_omega && !*rep.iso_to_omega && r.status == CheckStatus::pass) {
      r.status = CheckStatus::fail;
      r.witness = "V_2 is not isomorphic to Ω";
    }
    std::ostringstream d;
    d << "|V| =";
    for (auto n : rep.universe_sizes) d << ' ' << n;
    d << ", |V̇| =";
    for (auto n : rep.generic_sizes) d << ' ' << n;
    r.detail = d.str();
    return r;
  }

  CheckResult biconditional() {
    CheckResult r;
    const IndexCategory& cat = category();
    r.elements_checked = omega(cat).total_size();
    if (!omega_diagonal_is_biconditional(cat)) {
      r.status = CheckStatus::fail;
      r.witness = "classifier of the diagonal differs from the biconditional";
    }
    return r;
  }

  CheckResult subobjects() {
    std::vector<Presheaf> xs;
    if (target_kind() == "presheaf") {
      try {
        xs.push_back(presheaf_from_json(target_.at("presheaf")));
      } catch (const Error& e) {
        throw ScenarioError(std::string("unresolvable target: ") + e.what());
      }
    } else {
      const IndexCategory& cat = category();
      for (std::size_t c = 0; c < cat.object_count(); ++c) xs.push_back(yoneda(cat, c));
      xs.push_back(omega(cat));
    }
    CheckResult r;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      const Presheaf& x = xs[k];
      const PNat top = omega_top(x.category());
      const auto subs = enumerate_subobjects(x);
      const auto homs = enumerate_nats(x, top.tgt());
      ++r.fibers_checked;
      r.elements_checked += subs.size();
      if (subs.size() != homs.size() && r.status == CheckStatus::pass) {
        r.status = CheckStatus::fail;
        r.witness = "presheaf " + std::to_string(k) + ": " + std::to_string(subs.size()) + " subobjects but " +
                    std::to_string(homs.size()) + " maps into Ω";
      }
      std::vector<PNat> seen;
      for (const auto& s : subs) {
        const PNat chi = classify(x, s);
        const bool round_trip = subobject_of(chi) == s;
        const bool fresh = std::find(seen.begin(), seen.end(), chi) == seen.end();
        seen.push_back(chi);
        if ((!round_trip || !fresh) && r.status == CheckStatus::pass) {
          r.status = CheckStatus::fail;
          r.witness = "presheaf " + std::to_string(k) + ": classification of a subobject " +
                      (round_trip ? "is not injective" : "does not round trip");
        }
      }
    }
    return r;
  }

  CheckResult composition(const json& check) {
    if (target_kind() != "signatures") unresolvable("a signature pair");
    PolySignature p, q;
    try {
      p = signature_from_json(target_.at("p"));
      q = signature_from_json(target_.at("q"));
    } catch (const Error& e) {
      throw ScenarioError(std::string("unresolvable target: ") + e.what());
    }
    std::vector<std::size_t> sizes = {0, 1, 2, 3};
    if (check.contains("sizes")) sizes = check["sizes"].get<std::vector<std::size_t>>();
    const ComposedSignature pq = compose_signatures(p, q);
    CheckResult r;
    std::vector<FinSet> xs;
    std::vector<FinMap> isos;
    for (std::size_t n : sizes) {
      xs.push_back(FinSet::range(n));
      isos.push_back(composition_iso(pq, p, q, xs.back()));
      ++r.fibers_checked;
      r.elements_checked += isos.back().dom().size();
      if (!isos.back().is_bijective() && r.status == CheckStatus::pass) {
        r.status = CheckStatus::fail;
        r.witness = "comparison at |X| = " + std::to_string(n) + " is not a bijection";
      }
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = 0; j < xs.size(); ++j) {
        for (const FinMap& h : all_maps(xs[i], xs[j])) {
          const FinMap left = compose(isos[j], extension_on_map(pq.composite, h));
          const FinMap right = compose(extension_on_map(p, extension_on_map(q, h)), isos[i]);
          if (!(left == right) && r.status == CheckStatus::pass) {
            r.status = CheckStatus::fail;
            r.witness = "naturality fails at |X| = " + std::to_string(sizes[i]) + ", |Y| = " + std::to_string(sizes[j]);
          }
        }
      }
    }
    return r;
  }

  CheckResult golden() {
    if (target_kind() != "expressions") unresolvable("an expression list");
    Elaborator el;
    CheckResult r;
    for (const json& it : target_.at("items")) {
      const std::string expr = it.at("expr").get<std::string>();
      TypeTable table;
      try {
        table = el.elaborate(parse_context(it.value("context", "")), parse_type(expr));
      } catch (const Error& e) {
        if (r.status == CheckStatus::pass) {
          r.status = CheckStatus::fail;
          r.witness = expr + ": " + e.what();
        }
        continue;
      }
      ++r.fibers_checked;
      r.elements_checked += table.extent.size();
      if (!it.contains("expect")) continue;
      const json& want = it.at("expect");
      const bool ok = want.is_array() ? want.get<std::vector<std::size_t>>() == table.card
                                      : std::all_of(table.card.begin(), table.card.end(),
                                                    [&](std::size_t c) { return c == want.get<std::size_t>(); });
      if (!ok && r.status == CheckStatus::pass) {
        r.status = CheckStatus::fail;
        r.witness = expr + " evaluates to " + json(table.card).dump() + ", expected " + want.dump();
      }
    }
    return r;
  }

  CheckResult coherence(const json& check) {
    CheckResult r;
    std::vector<TermPtr> sigma;
    for (const json& t : check.value("sigma", json::array())) sigma.push_back(parse_term(t.get<std::string>()));
    const CoherenceResult c = Elaborator().check_substitution(
        parse_context(check.value("delta", "")), parse_context(check.value("context", "")), sigma,
        parse_type(check.at("expr").get<std::string>()));
    r.fibers_checked = c.direct.extent.size();
    r.elements_checked = c.direct.extent.size();
    r.detail = "substituted: " + print(c.substituted);
    if (!c.equal) {
      r.status = CheckStatus::fail;
      r.witness = "environment " + (c.first_difference ? c.first_difference->str() : std::string("?")) +
                  ": direct and composed tables differ";
    }
    return r;
  }

  CheckResult unit_search() {
    PNat t;
    if (target_kind() == "family") {
      try {
        t = PNat::over_terminal(family_from_json(target_.at("family")).proj());
      } catch (const Error& e) {
        throw ScenarioError(std::string("unresolvable target: ") + e.what());
      }
    } else {
      t = algebra().t;
    }
    CheckResult r;
    r.elements_checked = t.tgt().total_size();
    if (!find_unit(t)) {
      r.status = CheckStatus::fail;
      r.witness = "no global element of U classifies a singleton fiber";
    }
    return r;
  }

  CheckResult typeiso(const json& check) {
    const std::size_t instances = optional_positive(check, "instances", 50, "check");
    const std::size_t max_fiber = optional_positive(check, "max_fiber", 4, "check");
    std::vector<TypeIsoLaw> laws;
    if (check.contains("law")) {
      try {
        laws.push_back(type_iso_law_from_string(check["law"].get<std::string>()));
      } catch (const StructureError& e) {
        throw ScenarioError(e.what());
      }
    } else {
      laws = {TypeIsoLaw::sigma_assoc, TypeIsoLaw::sigma_unit_l, TypeIsoLaw::sigma_unit_r, TypeIsoLaw::pi_assoc,
              TypeIsoLaw::pi_unit};
    }
    std::mt19937_64 rng(seed_);
    CheckResult r;
    for (TypeIsoLaw law : laws) {
      for (std::size_t i = 0; i < instances; ++i) {
        NestedFamilies n = random_nested(rng, max_fiber);
        while (typeiso_size(law, n) > 50000) n = random_nested(rng, max_fiber);
        const TypeIsoWitness w = typeiso_witness(law, n);
        ++r.fibers_checked;
        r.elements_checked += w.lhs.total().size();
        if (!w.ok() && r.status == CheckStatus::pass) {
          r.status = CheckStatus::fail;
          r.witness = to_string(law) + " instance " + std::to_string(i) + " fails";
        }
      }
    }
    return r;
  }

  const Scenario& s_;
  json target_;
  std::uint64_t seed_ = 0;
  std::optional<MLAlgebra> alg_;
  std::optional<IndexCategory> cat_;
};

}  // namespace

Scenario parse_scenario(const json& doc) {
  if (!doc.is_object()) schema_error("$", "expected an object");
  static const std::set<std::string> keys = {"name", "description", "target", "checks", "seed"};
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!keys.count(it.key())) schema_error("$", "unexpected key '" + it.key() + "'");
  }
  Scenario s;
  if (!doc.contains("name") || !doc["name"].is_string()) schema_error("$", "missing string 'name'");
  s.name = doc["name"].get<std::string>();
  s.target = doc.value("target", json{{"kind", "none"}});
  validate_target(s.target);
  if (doc.contains("seed")) {
    if (!is_natural(doc["seed"])) schema_error("seed", "expected a non-negative integer");
    s.seed = doc["seed"].get<std::uint64_t>();
  }
  if (!doc.contains("checks") || !doc["checks"].is_array()) schema_error("$", "missing array 'checks'");
  std::set<std::string> names;
  for (std::size_t i = 0; i < doc["checks"].size(); ++i) {
    const json& c = doc["checks"][i];
    const std::string where = "checks[" + std::to_string(i) + "]";
    if (!c.is_object()) schema_error(where, "expected an object");
    if (!c.contains("name") || !c["name"].is_string()) schema_error(where, "missing string 'name'");
    if (!c.contains("kind") || !c["kind"].is_string()) schema_error(where, "missing string 'kind'");
    if (!kCheckKinds.count(c["kind"].get<std::string>())) {
      schema_error(where + ".kind", "unknown check kind '" + c["kind"].get<std::string>() + "'");
    }
    if (!names.insert(c["name"].get<std::string>()).second) schema_error(where + ".name", "duplicate check name");
    if (c["kind"] == "tt-coherence" && (!c.contains("expr") || !c["expr"].is_string())) {
      schema_error(where, "tt-coherence needs a string 'expr'");
    }
    if (c.contains("sizes") && !c["sizes"].is_array()) schema_error(where + ".sizes", "expected an array");
    s.checks.push_back(c);
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ScenarioError(path + ": invalid JSON: " + e.what());
  }
  return parse_scenario(doc);
}

CheckStatus Report::status() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return CheckStatus::fail;
  }
  return CheckStatus::pass;
}

int Report::exit_code() const { return status() == CheckStatus::fail ? 1 : 0; }

Report run_scenario(const Scenario& s, const RunOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  Runner runner(s, opts);
  Report rep;
  rep.scenario = s.name;
  rep.seed = runner.seed();
  for (const json& check : s.checks) {
    try {
      rep.checks.push_back(runner.run(check));
    } catch (const ScenarioError&) {
      throw;
    } catch (const json::exception& e) {
      throw ScenarioError("check '" + check.at("name").get<std::string>() + "': malformed parameters: " + e.what());
    } catch (const ParseError& e) {
      throw ScenarioError("check '" + check.at("name").get<std::string>() + "': " + e.what());
    } catch (const Error& e) {
      CheckResult r;
      r.name = check.at("name").get<std::string>();
      r.kind = check.at("kind").get<std::string>();
      r.status = CheckStatus::fail;
      r.witness = e.what();
      rep.checks.push_back(std::move(r));
    }
  }
  rep.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Report run_scenario_file(const std::string& path, const RunOptions& opts) {
  return run_scenario(load_scenario(path), opts);
}

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"kind", c.kind},
                      {"status", to_string(c.status)},
                      {"counters", {{"fibers_checked", c.fibers_checked}, {"elements_checked", c.elements_checked}}},
                      {"witness", c.witness ? json(*c.witness) : json(nullptr)},
                      {"detail", c.detail}});
  }
  return {{"scenario", r.scenario},
          {"status", to_string(r.status())},
          {"seed", r.seed},
          {"checks", checks},
          {"duration_ms", r.duration_ms}};
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "scenario " << r.scenario << " (seed " << r.seed << ")\n";
  for (const auto& c : r.checks) {
    out << "  [" << to_string(c.status) << "] " << c.name << " (" << c.kind << "): " << c.fibers_checked
        << " fibers, " << c.elements_checked << " elements\n";
    if (c.witness) out << "      witness: " << *c.witness << "\n";
    if (!c.detail.empty()) out << "      " << c.detail << "\n";
  }
  out << "status: " << to_string(r.status()) << " in " << std::llround(r.duration_ms) << " ms\n";
  return out.str();
}

std::string emit_report(const Report& r, const std::string& format) {
  if (format == "json") return to_json(r).dump(2) + "\n";
  if (format == "text") return to_text(r);
  throw ScenarioError("unknown report format '" + format + "' (expected text or json)");
}

}  // namespace catsem
