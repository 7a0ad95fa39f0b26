#include "sascone/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "sascone/admissible_metric.hpp"
#include "sascone/cone_classifier.hpp"
#include "sascone/emit.hpp"
#include "sascone/error.hpp"
#include "sascone/quotient.hpp"
#include "sascone/replay.hpp"
#include "sascone/serialize.hpp"
#include "sascone/topology.hpp"

namespace sascone::cli {
namespace {

// Raw flag values; everything numeric is kept as text and parsed by the
// library so that "a/b" rationals and range errors map to exit status 2.
struct CommandConfig {
  std::string command;
  std::string format = "json";

  std::string l1 = "1", l2 = "1", w1 = "1", w2 = "1";
  std::string base = "CP1";
  bool relaxed = false;

  std::string v1, v2, ratio;
  std::string boundary_eps;

  std::string k, l, i;

  std::string m1, m2, r, d_n, fano_index, n;
  std::string grid = "201";
  std::string out = "csv";

  std::string inject_cp1_index;
  std::string config;
};

double parse_real(const std::string& text) {
  if (text.find('/') != std::string::npos) return Rational::parse(text).to_double();
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last || !std::isfinite(value)) {
    throw Error(ErrorKind::InvalidArgument, "not a real number: '" + text + "'");
  }
  return value;
}

Int require_int(const std::string& text, const char* flag) {
  if (text.empty()) {
    throw Error(ErrorKind::InvalidArgument, std::string("missing required flag --") + flag);
  }
  try {
    return parse_int(text);
  } catch (const Error&) {
    throw Error(ErrorKind::InvalidArgument,
                std::string("--") + flag + " expects an integer, got '" + text + "'");
  }
}

struct JoinInput {
  JoinParams join;
  Json notes = Json::array();
};

JoinInput read_join(const CommandConfig& cfg) {
  const BaseManifold base = BaseManifold::parse(cfg.base);
  JoinInput in{validate_join(require_int(cfg.l1, "l1"), require_int(cfg.l2, "l2"),
                             require_int(cfg.w1, "w1"), require_int(cfg.w2, "w2"), base,
                             cfg.relaxed ? Smoothness::Relaxed : Smoothness::Enforce)};
  if (in.join.weights_swapped()) {
    in.notes.push_back("weights given in ascending order; swapped so that w1 >= w2");
  }
  if (!in.join.smooth()) {
    in.notes.push_back("gcd(l2, l1*w1*w2) != 1: the join is not smooth");
  }
  return in;
}

ReebRay read_ray(const CommandConfig& cfg) {
  if (!cfg.ratio.empty()) {
    const Rational q = Rational::parse(cfg.ratio);
    if (q.sign() <= 0) {
      throw Error(ErrorKind::InvalidArgument, "--ratio must be positive");
    }
    return ReebRay(q.num(), q.den());
  }
  return ReebRay(require_int(cfg.v1, "v1"), require_int(cfg.v2, "v2"));
}

// Sphere-join exponent p when the base is CP^p.
std::optional<Int> sphere_p(const JoinParams& join) {
  const BaseManifold& b = join.base();
  if (b.c1_coeff == b.dim_c + 1) return b.dim_c;
  return std::nullopt;
}

void write(std::ostream& out, const Json& record, const CommandConfig& cfg) {
  out << emit::emit(record, emit::parse_format(cfg.format));
}

int cmd_invariants(const CommandConfig& cfg, std::ostream& out) {
  JoinInput in = read_join(cfg);
  const JoinParams& join = in.join;
  Json rec{{"join", join}};

  if (auto p = sphere_p(join)) {
    rec["c1_gamma_coeff"] = wide_to_json(topology::c1_gamma_coeff_sphere_join(*p, join));
    rec["spin"] = topology::spin_check(*p, join);
  } else {
    rec["c1_gamma_coeff"] = nullptr;
    rec["spin"] = nullptr;
    in.notes.push_back("c1(D) coefficient is only computed for bases CP^p");
  }

  rec["torsion_order"] = wide_to_json(topology::torsion_order(join));
  rec["torsion_caveat"] = topology::torsion_order_caveat(join);
  if (topology::torsion_order_caveat(join)) {
    in.notes.push_back("torsion order w1 w2 l1^2 describes the cohomology ring only for p > 1");
  }

  if (!topology::bouquet_applicable(join)) {
    rec["bouquet"] = "bouquet labels not applicable";
  } else {
    try {
      const topology::BouquetLabel label = topology::bouquet_label(join);
      Json b = label;
      b["level_set"] = topology::bouquet_level_set(label.k, label.l, label.i);
      rec["bouquet"] = b;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OddTotal) throw;
      rec["bouquet"] = "bouquet labels undefined: l1*(w1+w2) is odd";
    }
  }

  if (join.base().is_fano()) {
    rec["b_invariant"] = wide_to_json(topology::b_invariant_wcone(join));
  } else {
    rec["b_invariant"] = nullptr;
  }
  rec["notes"] = in.notes;
  write(out, rec, cfg);
  return 0;
}

int cmd_quotient(const CommandConfig& cfg, std::ostream& out) {
  const JoinInput in = read_join(cfg);
  const ReebRay v = read_ray(cfg);
  const quotient::QuotientData q = quotient::quotient_data(in.join, v);
  Json rec{{"join", in.join},
           {"ray", v},
           {"quotient", q},
           {"orb_fano", quotient::orb_fano_predicate(in.join, v)},
           {"orb_c1", quotient::orb_c1_report(in.join, v, q)},
           {"notes", in.notes}};
  write(out, rec, cfg);
  return 0;
}

int cmd_classify(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const JoinInput in = read_join(cfg);
  const ReebRay v = read_ray(cfg);
  const cone::PositivityRange range = cone::positivity_range(in.join);
  const Rational ratio = v.ratio();
  Json rec{{"join", in.join},
           {"ray", v},
           {"ratio", ratio},
           {"verdict", cone::to_string(cone::classify_ray(in.join, v))},
           {"range", range},
           {"range_text", emit::range_text(range)},
           {"boundary", range.on_boundary(ratio)},
           {"notes", in.notes}};
  const auto distance = range.distance_to_boundary(ratio);
  rec["distance_to_boundary"] = distance ? Json(*distance) : Json(nullptr);
  if (!cfg.boundary_eps.empty()) {
    const Rational eps = Rational::parse(cfg.boundary_eps);
    rec["near_boundary"] = distance.has_value() && *distance <= eps;
    if (distance && *distance <= eps) {
      err << "warning: ray is within " << eps
          << " of a range boundary; the verdict may differ for the exact ray\n";
    }
  }
  if (range.on_boundary(ratio)) {
    err << "warning: ray lies on the boundary of the positivity range (indefinite)\n";
  }
  write(out, rec, cfg);
  return 0;
}

int cmd_range(const CommandConfig& cfg, std::ostream& out) {
  const JoinInput in = read_join(cfg);
  const cone::PositivityRange range = cone::positivity_range(in.join);
  if (cfg.format == "text") {
    out << emit::range_text(range) << "\n";
    return 0;
  }
  Json rec{{"join", in.join},
           {"range", range},
           {"range_text", emit::range_text(range)},
           {"notes", in.notes}};
  if (auto p = sphere_p(in.join)) rec["whole_cone_rules"] = cone::whole_cone_rules(*p, in.join);
  write(out, rec, cfg);
  return 0;
}

int cmd_bouquet(const CommandConfig& cfg, std::ostream& out) {
  Json rec;
  if (!cfg.k.empty()) {
    const Int k = require_int(cfg.k, "k");
    const Int l = require_int(cfg.l, "l");
    const Int i = require_int(cfg.i, "i");
    if (k <= 0 || l <= 0 || i <= 0) {
      throw Error(ErrorKind::InvalidArgument, "k, l and i must be positive");
    }
    rec = Json{{"k", k}, {"l", l}, {"i", i},
               {"level_set", topology::bouquet_level_set(k, l, i)}};
  } else {
    const JoinInput in = read_join(cfg);
    if (!topology::bouquet_applicable(in.join)) {
      rec = Json{{"join", in.join}, {"bouquet", "bouquet labels not applicable"}};
    } else {
      const topology::BouquetLabel label = topology::bouquet_label(in.join);
      rec = Json{{"join", in.join},
                 {"label", label},
                 {"level_set", topology::bouquet_level_set(label.k, label.l, label.i)}};
    }
  }
  write(out, rec, cfg);
  return 0;
}

int emit_profile(const metric::MetricProfile& profile, const CommandConfig& cfg,
                 std::ostream& out, std::ostream& err, Json extra = Json::object()) {
  Json report = profile.report;
  err << emit::to_json_text(report);
  if (cfg.out == "csv") {
    std::vector<std::vector<double>> rows;
    rows.reserve(profile.samples.size());
    for (const metric::Sample& s : profile.samples) {
      rows.push_back({s.z, s.F, s.theta, s.ricci_h, s.ricci_v});
    }
    out << emit::to_csv({"z", "F", "Theta", "ricci_h", "ricci_v"}, rows);
  } else if (cfg.out == "json") {
    Json rec = profile;
    for (auto it = extra.begin(); it != extra.end(); ++it) rec[it.key()] = it.value();
    out << emit::to_json_text(rec);
  } else {
    throw Error(ErrorKind::InvalidArgument, "--out must be csv or json");
  }
  return 0;
}

int grid_size(const CommandConfig& cfg) {
  const Int grid = require_int(cfg.grid, "grid");
  if (grid < 3 || grid > 10'000'000) {
    throw Error(ErrorKind::InvalidArgument, "--grid must lie in [3, 10000000]");
  }
  return static_cast<int>(grid);
}

int cmd_metric(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const Int n = require_int(cfg.n, "n");
  const Int d_n = require_int(cfg.d_n, "dN");
  if (d_n < 0 || d_n > metric::kMaxBaseDimension) {
    throw Error(ErrorKind::InvalidArgument, "--dN out of range");
  }
  const double r = cfg.r.empty() ? metric::default_r(n) : parse_real(cfg.r);
  const metric::ProfileParams params = metric::ProfileParams::make(
      require_int(cfg.m1, "m1"), require_int(cfg.m2, "m2"), static_cast<int>(d_n), r, n,
      require_int(cfg.fano_index, "fano-index"));
  return emit_profile(metric::build_profile(params, grid_size(cfg)), cfg, out, err);
}

int cmd_metric_from_ray(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  const JoinInput in = read_join(cfg);
  const ReebRay v = read_ray(cfg);
  const quotient::QuotientData q = quotient::quotient_data(in.join, v);
  std::optional<double> r;
  if (!cfg.r.empty()) r = parse_real(cfg.r);
  const metric::ProfileParams params = metric::params_from_quotient(in.join, q, r);
  if (!metric::ricci_box_check(params)) {
    err << "warning: ray is outside the orbifold-Fano region; the profile is built "
           "but its Ricci form is not positive\n";
  }
  return emit_profile(metric::build_profile(params, grid_size(cfg)), cfg, out, err,
                      Json{{"join", in.join}, {"ray", v}, {"quotient", q}});
}

int cmd_replay(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  replay::Options options;
  if (!cfg.inject_cp1_index.empty()) {
    options.cp1_index = require_int(cfg.inject_cp1_index, "inject-cp1-index");
  }
  const std::vector<replay::Check> checks = replay::replay_tables(options);
  if (cfg.format == "text") {
    for (const replay::Check& c : checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.id << "  " << c.got << "\n";
    }
  } else {
    out << emit::to_json_text(replay::to_json(checks));
  }
  if (!replay::all_passed(checks)) {
    err << replay::diff_text(checks);
    return exit_code(ErrorKind::Mismatch);
  }
  return 0;
}

int dispatch(const CommandConfig& cfg, std::ostream& out, std::ostream& err);

// Batch file: {"commands": [{"command": "range", "l1": 4, ...}, ...]} or a
// bare array of such objects. Keys are flag names without the dashes.
int run_config(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open config '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(file);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, "invalid config JSON: " + std::string(e.what()));
  }
  const Json& commands = doc.is_array() ? doc : doc.at("commands");
  int status = 0;
  for (const Json& entry : commands) {
    std::vector<std::string> args{entry.at("command").get<std::string>()};
    for (auto it = entry.begin(); it != entry.end(); ++it) {
      if (it.key() == "command") continue;
      if (it.value().is_boolean()) {
        if (it.value().get<bool>()) args.push_back("--" + it.key());
        continue;
      }
      args.push_back("--" + it.key());
      args.push_back(it.value().is_string() ? it.value().get<std::string>()
                                            : it.value().dump());
    }
    status = std::max(status, run(args, out, err));
  }
  return status;
}

int dispatch(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == "invariants") return cmd_invariants(cfg, out);
  if (cfg.command == "quotient") return cmd_quotient(cfg, out);
  if (cfg.command == "classify") return cmd_classify(cfg, out, err);
  if (cfg.command == "range") return cmd_range(cfg, out);
  if (cfg.command == "bouquet") return cmd_bouquet(cfg, out);
  if (cfg.command == "metric") return cmd_metric(cfg, out, err);
  if (cfg.command == "metric-from-ray") return cmd_metric_from_ray(cfg, out, err);
  if (cfg.command == "replay-tables") return cmd_replay(cfg, out, err);
  throw Error(ErrorKind::InvalidArgument, "unknown command '" + cfg.command + "'");
}

void add_format(CLI::App* sub, CommandConfig& cfg) {
  sub->add_option("--format", cfg.format, "json | text | csv")
      ->check(CLI::IsMember({"json", "text", "csv"}));
}

void add_join(CLI::App* sub, CommandConfig& cfg) {
  sub->add_option("--l1", cfg.l1, "join parameter l1");
  sub->add_option("--l2", cfg.l2, "join parameter l2");
  sub->add_option("--w1", cfg.w1, "weight w1");
  sub->add_option("--w2", cfg.w2, "weight w2");
  sub->add_option("--base", cfg.base, "CP<p>, Sigma<g> or custom:<dim>:<c1>");
  sub->add_flag("--relaxed-smoothness", cfg.relaxed,
                "accept joins with gcd(l2, l1*w1*w2) != 1");
}

void add_ray(CLI::App* sub, CommandConfig& cfg) {
  sub->add_option("--v1", cfg.v1, "Reeb ray component v1");
  sub->add_option("--v2", cfg.v2, "Reeb ray component v2");
  sub->add_option("--ratio", cfg.ratio, "ray as a rational v1/v2, e.g. 3/2");
}

void add_profile_output(CLI::App* sub, CommandConfig& cfg) {
  sub->add_option("--r", cfg.r, "admissible parameter r (decimal or a/b)");
  sub->add_option("--grid", cfg.grid, "number of samples on [-1, 1]");
  sub->add_option("--out", cfg.out, "csv | json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Positivity in the w-Sasaki cone of weighted S3 joins", "sascone"};
  app.add_option("--config", cfg.config, "JSON batch of commands");

  auto* invariants = app.add_subcommand("invariants", "contact and topological invariants");
  add_join(invariants, cfg);
  add_format(invariants, cfg);

  auto* quotient_cmd = app.add_subcommand("quotient", "quotient log-pair data along a ray");
  add_join(quotient_cmd, cfg);
  add_ray(quotient_cmd, cfg);
  add_format(quotient_cmd, cfg);

  auto* classify = app.add_subcommand("classify", "positive or indefinite type of a ray");
  add_join(classify, cfg);
  add_ray(classify, cfg);
  classify->add_option("--boundary-eps", cfg.boundary_eps,
                       "flag rays within this rational distance of a boundary");
  add_format(classify, cfg);

  auto* range = app.add_subcommand("range", "exact positivity range on the w-cone");
  add_join(range, cfg);
  add_format(range, cfg);

  auto* bouquet = app.add_subcommand("bouquet", "(k, j, l) labels and level sets of g");
  add_join(bouquet, cfg);
  bouquet->add_option("--k", cfg.k, "label k (level-set mode)");
  bouquet->add_option("--l", cfg.l, "label l (level-set mode)");
  bouquet->add_option("--i", cfg.i, "value i of g (level-set mode)");
  add_format(bouquet, cfg);

  auto* metric_cmd = app.add_subcommand("metric", "admissible positive Ricci profile");
  metric_cmd->add_option("--m1", cfg.m1, "ramification index m1")->required();
  metric_cmd->add_option("--m2", cfg.m2, "ramification index m2")->required();
  metric_cmd->add_option("--dN", cfg.d_n, "complex dimension of the base")->required();
  metric_cmd->add_option("--fano-index", cfg.fano_index, "Fano index of the base")->required();
  metric_cmd->add_option("--n", cfg.n, "degree n of the quotient")->required();
  add_profile_output(metric_cmd, cfg);

  auto* from_ray = app.add_subcommand("metric-from-ray", "profile of the quotient along a ray");
  add_join(from_ray, cfg);
  add_ray(from_ray, cfg);
  add_profile_output(from_ray, cfg);

  auto* replay_cmd = app.add_subcommand("replay-tables", "recompute the published tables");
  add_format(replay_cmd, cfg);
  replay_cmd->add_option("--inject-cp1-index", cfg.inject_cp1_index,
                         "override the Fano index of CP1 (fault injection)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!cfg.config.empty()) return run_config(cfg.config, out, err);
    const auto subs = app.get_subcommands();
    if (subs.empty()) {
      err << app.help();
      return 2;
    }
    cfg.command = subs.front()->get_name();
    return dispatch(cfg, out, err);
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const Json::exception& e) {
    err << "error [InvalidArgument]: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace sascone::cli
