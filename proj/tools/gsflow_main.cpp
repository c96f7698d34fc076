// gsflow: exact-arithmetic analysis of valuations over indivisible items.
//
// Subcommands: check, demand, flow, fuzz, audit. Exit codes: 0 when every
// check passes (or the data is consistent), 1 when a violation was found,
// 2 on usage or input errors.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsflow/analysis.hpp"
#include "gsflow/flow.hpp"
#include "gsflow/fuzz.hpp"
#include "gsflow/gen.hpp"
#include "gsflow/json_io.hpp"

using nlohmann::json;
using namespace gsflow;

namespace {

struct GlobalOptions {
  bool json_output = false;
  bool deterministic = false;
  std::uint64_t seed = 1;
};

std::string human_bundle(const std::vector<std::string>& items, Bundle b) {
  if (b.empty()) return "{}";
  std::vector<std::string> names;
  for (int i : b.items()) names.push_back(items[static_cast<std::size_t>(i)]);
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out + "}";
}

json input_digest(const std::vector<std::string>& paths) {
  json arr = json::array();
  for (const auto& path : paths) {
    std::ostringstream hex;
    hex << std::hex << io::fnv1a64(io::read_file(path));
    arr.push_back(json{{"path", path}, {"fnv1a64", hex.str()}});
  }
  return arr;
}

json prices_json(const std::vector<std::string>& items, const PriceVector& p) {
  json obj = json::object();
  for (int i = 0; i < p.item_count(); ++i) obj[items[static_cast<std::size_t>(i)]] = p[i].str();
  return obj;
}

class Reporter {
public:
  Reporter(const GlobalOptions& opt, std::string command, const std::vector<std::string>& inputs)
      : opt_(opt), start_(std::chrono::steady_clock::now()) {
    report_["command"] = std::move(command);
    report_["inputs"] = input_digest(inputs);
    report_["deterministic"] = opt.deterministic;
  }

  json& report() { return report_; }
  std::ostringstream& human() { return human_; }

  int emit(int exit_code) {
    auto elapsed = std::chrono::steady_clock::now() - start_;
    long ms = opt_.deterministic
                  ? 0
                  : std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    report_["timing_ms"] = ms;
    report_["exit"] = exit_code;
    if (opt_.json_output) {
      std::cout << report_.dump(2) << "\n";
    } else {
      std::cout << human_.str();
      std::cout << "time: " << ms << " ms\n";
    }
    return exit_code;
  }

private:
  const GlobalOptions& opt_;
  json report_;
  std::ostringstream human_;
  std::chrono::steady_clock::time_point start_;
};

int cmd_check(const GlobalOptions& opt, const std::string& valuation_path) {
  Valuation u = io::load_valuation(valuation_path);
  Reporter rep(opt, "check", {valuation_path});
  const auto& items = u.items();

  auto mnat = mnat_violation(u);
  auto tele = telescopic_violation(u);

  rep.report()["valuation"] = json{{"label", u.label()}, {"items", items}};
  rep.report()["verdicts"] = json{{"monotone", true},
                                  {"gross_substitutes", !mnat.has_value()},
                                  {"telescopic", !tele.has_value()}};
  json witnesses{{"mnat", nullptr}, {"telescopic", nullptr}};

  rep.human() << "check " << valuation_path;
  if (!u.label().empty()) rep.human() << " (" << u.label() << ")";
  rep.human() << "\nmonotone: pass\n";

  if (mnat) {
    json tried = json::array();
    for (const auto& cand : mnat->tried)
      tried.push_back(json{{"Yprime", io::bundle_key(items, cand.y_prime)},
                           {"lhs", cand.lhs.str()},
                           {"rhs", cand.rhs.str()}});
    witnesses["mnat"] = json{{"X", io::bundle_key(items, mnat->x_set)},
                             {"Y", io::bundle_key(items, mnat->y_set)},
                             {"Xprime", io::bundle_key(items, mnat->x_prime)},
                             {"tried", std::move(tried)}};
    rep.human() << "gross-substitutes (M-natural exchange): FAIL\n"
                << "  witness X=" << human_bundle(items, mnat->x_set)
                << " Y=" << human_bundle(items, mnat->y_set)
                << " X'=" << human_bundle(items, mnat->x_prime) << "\n";
    for (const auto& cand : mnat->tried)
      rep.human() << "    Y'=" << human_bundle(items, cand.y_prime) << ": " << cand.lhs << " < "
                  << cand.rhs << "\n";
  } else {
    rep.human() << "gross-substitutes (M-natural exchange): pass\n";
  }

  if (tele) {
    witnesses["telescopic"] = json{{"i", tele->small_size},
                                   {"j", tele->large_size},
                                   {"part", std::string(1, tele->part)},
                                   {"bundle", io::bundle_key(items, tele->witness)}};
    rep.human() << "telescopic maximizers: FAIL\n  part (" << tele->part << ") at (i="
                << tele->small_size << ", j=" << tele->large_size << "): "
                << (tele->part == 'a'
                        ? std::to_string(tele->small_size) + "-maximizer " +
                              human_bundle(items, tele->witness) + " is contained in no " +
                              std::to_string(tele->large_size) + "-maximizer"
                        : std::to_string(tele->large_size) + "-maximizer " +
                              human_bundle(items, tele->witness) + " contains no " +
                              std::to_string(tele->small_size) + "-maximizer")
                << "\n";
  } else {
    rep.human() << "telescopic maximizers: pass\n";
  }

  rep.report()["witnesses"] = std::move(witnesses);
  return rep.emit(mnat || tele ? 1 : 0);
}

int cmd_demand(const GlobalOptions& opt, const std::string& valuation_path,
               const std::string& price_path) {
  Valuation u = io::load_valuation(valuation_path);
  PriceVector p = io::load_prices(price_path, u.items());
  Reporter rep(opt, "demand", {valuation_path, price_path});
  const auto& items = u.items();

  DemandResult result = demand_set(u, p);
  json demands = json::array();
  for (Bundle b : result.demands) demands.push_back(io::bundle_key(items, b));
  rep.report()["demands"] = std::move(demands);
  rep.report()["optimum"] = result.optimum.str();
  rep.report()["demanded_items"] = io::bundle_key(items, result.demanded_items);

  rep.human() << "demand " << valuation_path << " at " << price_path << "\n";
  rep.human() << "optimum net utility: " << result.optimum << "\n";
  for (Bundle b : result.demands) rep.human() << "  demand: " << human_bundle(items, b) << "\n";
  rep.human() << "demanded items: " << human_bundle(items, result.demanded_items) << "\n";
  return rep.emit(0);
}

void render_flow_verdict(Reporter& rep, const std::vector<std::string>& items,
                         const PriceVector& p, const PriceVector& q, const FlowVerdict& verdict) {
  // delta table ascending, ties by item index (Figure-1 layout)
  std::vector<int> order(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return verdict.delta[a] < verdict.delta[b]; });

  json delta = json::array();
  rep.human() << "delta (ascending):\n";
  for (int i : order) {
    delta.push_back(json{{"item", items[static_cast<std::size_t>(i)]},
                         {"p", p[i].str()},
                         {"q", q[i].str()},
                         {"delta", verdict.delta[i].str()}});
    rep.human() << "  " << items[static_cast<std::size_t>(i)] << ": p=" << p[i] << " q=" << q[i]
                << " delta=" << verdict.delta[i] << "\n";
  }
  rep.report()["delta"] = std::move(delta);
  rep.report()["abandoned"] = io::bundle_key(items, verdict.abandoned);
  rep.report()["discovered"] = io::bundle_key(items, verdict.discovered);
  rep.report()["ddf_pass"] = verdict.ddf_pass;
  json violations = json::array();
  for (const auto& v : verdict.violations)
    violations.push_back(json{{"item", items[static_cast<std::size_t>(v.item)]},
                              {"clause", std::string(1, v.clause)},
                              {"explanation", v.explanation}});
  rep.report()["violations"] = std::move(violations);

  rep.human() << "abandoned:  " << human_bundle(items, verdict.abandoned) << "\n"
              << "discovered: " << human_bundle(items, verdict.discovered) << "\n"
              << "downward demand-flow: " << (verdict.ddf_pass ? "pass" : "FAIL") << "\n";
  for (const auto& v : verdict.violations)
    rep.human() << "  clause (" << v.clause << ") at " << items[static_cast<std::size_t>(v.item)]
                << ": " << v.explanation << "\n";
}

int cmd_flow(const GlobalOptions& opt, const std::string& valuation_path,
             const std::string& from_path, const std::string& to_path,
             const std::string& trace_item) {
  Valuation u = io::load_valuation(valuation_path);
  PriceVector p = io::load_prices(from_path, u.items());
  PriceVector q = io::load_prices(to_path, u.items());
  Reporter rep(opt, "flow", {valuation_path, from_path, to_path});
  const auto& items = u.items();

  rep.human() << "flow " << valuation_path << ": " << from_path << " -> " << to_path << "\n";
  FlowVerdict verdict = check_ddf(u, p, q);
  render_flow_verdict(rep, items, p, q, verdict);

  rep.report()["trace"] = nullptr;
  if (!trace_item.empty()) {
    auto pivot = u.find_item(trace_item);
    if (!pivot) throw io::InputError("--trace: unknown item '" + trace_item + "'");
    DdfTrace trace = trace_ddf(u, p, q, *pivot);
    json stages = json::array();
    rep.human() << "staging through pivot " << trace_item << ":\n"
                << "  p' = " << prices_json(items, trace.staged.p_prime).dump() << "\n"
                << "  q' = " << prices_json(items, trace.staged.q_prime).dump() << "\n"
                << "  demanded: p " << human_bundle(items, trace.demanded_p) << ", p' "
                << human_bundle(items, trace.demanded_p_prime) << ", q' "
                << human_bundle(items, trace.demanded_q_prime) << ", q "
                << human_bundle(items, trace.demanded_q) << "\n";
    for (const auto& stage : trace.stages) {
      stages.push_back(json{{"description", stage.description}, {"holds", stage.holds}});
      rep.human() << "  " << (stage.holds ? "holds " : "FAILS ") << stage.description << "\n";
    }
    rep.report()["trace"] = json{{"pivot", trace_item},
                                 {"p_prime", prices_json(items, trace.staged.p_prime)},
                                 {"q_prime", prices_json(items, trace.staged.q_prime)},
                                 {"demanded",
                                  json{{"p", io::bundle_key(items, trace.demanded_p)},
                                       {"p_prime", io::bundle_key(items, trace.demanded_p_prime)},
                                       {"q_prime", io::bundle_key(items, trace.demanded_q_prime)},
                                       {"q", io::bundle_key(items, trace.demanded_q)}}},
                                 {"stages", std::move(stages)},
                                 {"all_hold", trace.all_hold()}};
  }
  return rep.emit(verdict.ddf_pass ? 0 : 1);
}

int cmd_fuzz(const GlobalOptions& opt, const FuzzConfig& cfg) {
  Reporter rep(opt, "fuzz", {});
  FuzzReport result = run_fuzz(cfg);

  rep.report()["config"] = json{{"items", cfg.item_count},
                                {"trials", cfg.trials},
                                {"family", family_name(cfg.family)},
                                {"seed", cfg.seed},
                                {"value_range", {cfg.value_min, cfg.value_max}},
                                {"price_range", {cfg.price_min, cfg.price_max}},
                                {"price_pairs", cfg.price_pairs}};
  json checks = json::object();
  for (const auto& [name, count] : result.checks) checks[name] = count;
  rep.report()["checks"] = std::move(checks);
  rep.report()["trials_run"] = result.trials_run;
  rep.report()["mnat_pass"] = result.mnat_pass;

  rep.human() << "fuzz: family " << family_name(cfg.family) << ", m=" << cfg.item_count
              << ", trials=" << cfg.trials << ", seed=" << cfg.seed << "\n";
  for (const auto& [name, count] : result.checks)
    rep.human() << "  " << name << ": " << count << " checks\n";

  if (result.failure) {
    const auto& f = *result.failure;
    rep.report()["failure"] = json{{"assertion", f.assertion},
                                   {"trial", f.trial},
                                   {"valuation_seed", f.valuation_seed},
                                   {"detail", f.detail}};
    rep.human() << "FAIL: " << f.assertion << " (trial " << f.trial << ")\n  " << f.detail << "\n"
                << "reproduce with: gsflow fuzz --items " << cfg.item_count << " --trials "
                << cfg.trials << " --gen " << family_name(cfg.family) << " --seed " << cfg.seed
                << "\n";
    return rep.emit(1);
  }
  rep.report()["failure"] = nullptr;
  rep.human() << "all assertions passed\n";
  return rep.emit(0);
}

int cmd_audit(const GlobalOptions& opt, const std::string& obs_path) {
  io::ObservationData data = io::load_observations(obs_path);
  Reporter rep(opt, "audit", {obs_path});

  auto certificate = audit_observations(data.items, data.observations);
  rep.report()["observations"] = data.observations.size();
  rep.human() << "audit " << obs_path << " (" << data.observations.size() << " observations)\n";

  if (certificate) {
    json delta = json::object();
    for (int i = 0; i < certificate->delta.item_count(); ++i)
      delta[data.items[static_cast<std::size_t>(i)]] = certificate->delta[i].str();
    rep.report()["verdict"] = "complementarity";
    rep.report()["certificate"] =
        json{{"first_observation", certificate->first_obs},
             {"second_observation", certificate->second_obs},
             {"item", data.items[static_cast<std::size_t>(certificate->violation.item)]},
             {"clause", std::string(1, certificate->violation.clause)},
             {"explanation", certificate->violation.explanation},
             {"delta", std::move(delta)},
             {"assumption", kAuditAssumption}};
    rep.human() << "verdict: complementarity certificate\n"
                << "  observations " << certificate->first_obs << " -> "
                << certificate->second_obs << " violate downward demand-flow, clause ("
                << certificate->violation.clause << ")\n  " << certificate->violation.explanation
                << "\n  no gross-substitute valuation rationalizes these choices\n"
                << "  assumption: " << kAuditAssumption << "\n";
    return rep.emit(1);
  }
  rep.report()["verdict"] = "consistent";
  rep.report()["certificate"] = nullptr;
  rep.human() << "verdict: consistent with some gross-substitute valuation\n"
              << "  assumption: " << kAuditAssumption << "\n";
  return rep.emit(0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of gross-substitute valuations and demand flow"};
  app.require_subcommand(1);

  GlobalOptions opt;
  app.add_flag("--json", opt.json_output, "emit a machine-readable JSON report");
  app.add_flag("--deterministic", opt.deterministic,
               "zero the timing field so identical inputs give byte-identical reports");
  app.add_option("--seed", opt.seed, "seed for randomized commands");

  std::string valuation_path, price_path, from_path, to_path, obs_path, trace_item;

  CLI::App* check = app.add_subcommand(
      "check", "monotonicity, gross-substitutes and telescopic checks on a valuation file");
  check->add_option("valuation", valuation_path, "valuation JSON file")->required();

  CLI::App* demand = app.add_subcommand("demand", "all demanded bundles at a price vector");
  demand->add_option("valuation", valuation_path, "valuation JSON file")->required();
  demand->add_option("prices", price_path, "price JSON file")->required();

  CLI::App* flow = app.add_subcommand(
      "flow", "abandoned/discovered items and the downward-demand-flow verdict");
  flow->add_option("valuation", valuation_path, "valuation JSON file")->required();
  flow->add_option("from", from_path, "old price JSON file")->required();
  flow->add_option("to", to_path, "new price JSON file")->required();
  flow->add_option("--trace", trace_item, "add the staged p'/q' walk pivoted on this item");

  FuzzConfig fuzz_cfg;
  std::string family_str = "oxs";
  CLI::App* fuzz = app.add_subcommand("fuzz", "randomized verification suite");
  fuzz->add_option("--items", fuzz_cfg.item_count, "universe size (<= 16)")
      ->check(CLI::Range(1, kMaxItems));
  fuzz->add_option("--trials", fuzz_cfg.trials, "number of generated valuations")
      ->check(CLI::NonNegativeNumber);
  fuzz->add_option("--gen", family_str, "unit-demand | additive | oxs | monotone-random");
  fuzz->add_option("--value-min", fuzz_cfg.value_min, "smallest generated value");
  fuzz->add_option("--value-max", fuzz_cfg.value_max, "largest generated value");
  fuzz->add_option("--price-min", fuzz_cfg.price_min, "smallest generated price");
  fuzz->add_option("--price-max", fuzz_cfg.price_max, "largest generated price");
  fuzz->add_option("--pairs", fuzz_cfg.price_pairs, "price pairs per trial");

  CLI::App* audit = app.add_subcommand(
      "audit", "test observed choices for consistency with gross substitutes");
  audit->add_option("observations", obs_path, "observations JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(opt, valuation_path);
    if (demand->parsed()) return cmd_demand(opt, valuation_path, price_path);
    if (flow->parsed()) return cmd_flow(opt, valuation_path, from_path, to_path, trace_item);
    if (fuzz->parsed()) {
      auto family = parse_family(family_str);
      if (!family) throw io::InputError("--gen: unknown family '" + family_str + "'");
      fuzz_cfg.family = *family;
      fuzz_cfg.seed = opt.seed;
      return cmd_fuzz(opt, fuzz_cfg);
    }
    if (audit->parsed()) return cmd_audit(opt, obs_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
