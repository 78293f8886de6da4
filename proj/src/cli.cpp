#include "siwkb/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "siwkb/errors.hpp"
#include "siwkb/oracle.hpp"
#include "siwkb/parallel.hpp"
#include "siwkb/potentials.hpp"
#include "siwkb/quantize.hpp"
#include "siwkb/relation.hpp"
#include "siwkb/verify.hpp"

namespace siwkb::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string family;
  std::vector<std::string> sets;
  std::vector<std::string> ranges;
  double hbar = 1.0;
  std::optional<int> n;
  int nmax = 5;
  std::vector<std::string> schemes;
  double tol = 1e-8;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::string output;
  bool skip_oracle = false;
};

// ---- argument decoding -----------------------------------------------------

Family parse_family(const std::string& key) {
  if (key.empty()) throw UsageError("--family is required");
  if (auto f = family_from_key(key)) return *f;
  std::string known;
  for (Family f : all_families) known += (known.empty() ? "" : ", ") + std::string(info(f).key);
  throw UsageError("unknown family '" + key + "' (known: " + known + ")");
}

double parse_number(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("bad number '" + text + "' in " + what);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

void check_key(Family f, const std::string& key) {
  const auto& names = info(f).param_names;
  if (std::find(names.begin(), names.end(), key) != names.end()) return;
  std::string known;
  for (auto n : names) known += (known.empty() ? "" : ", ") + std::string(n);
  throw UsageError("unknown parameter '" + key + "' for " + std::string(info(f).key) +
                   " (expected: " + known + ")");
}

PhysicalParams parse_sets(Family f, const std::vector<std::string>& sets, bool allow_missing) {
  PhysicalParams out;
  for (const auto& group : sets) {
    for (const auto& item : split(group, ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("expected key=value, got '" + item + "'");
      const std::string key = item.substr(0, eq);
      check_key(f, key);
      out[key] = parse_number(item.substr(eq + 1), "--set " + key);
    }
  }
  if (!allow_missing) {
    for (auto name : info(f).param_names) {
      if (!out.count(std::string(name)))
        throw UsageError("missing parameter '" + std::string(name) + "' (use --set)");
    }
  }
  return out;
}

struct Range {
  std::string key;
  std::vector<double> values;
};

Range parse_range(Family f, const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw UsageError("expected key=start:stop:count, got '" + text + "'");
  Range r{text.substr(0, eq), {}};
  check_key(f, r.key);
  const auto parts = split(text.substr(eq + 1), ':');
  if (parts.size() != 3) throw UsageError("expected key=start:stop:count, got '" + text + "'");
  const double start = parse_number(parts[0], "--range");
  const double stop = parse_number(parts[1], "--range");
  const double count = parse_number(parts[2], "--range");
  if (count < 1 || count != std::floor(count) || count > 100000)
    throw UsageError("range count must be a positive integer");
  const int m = static_cast<int>(count);
  for (int i = 0; i < m; ++i) r.values.push_back(m == 1 ? start : start + (stop - start) * i / (m - 1));
  return r;
}

std::vector<SchemeKind> parse_schemes(const std::vector<std::string>& keys) {
  if (keys.empty()) return {all_schemes.begin(), all_schemes.end()};
  std::vector<SchemeKind> out;
  for (const auto& group : keys) {
    for (const auto& k : split(group, ',')) {
      if (k.empty()) continue;
      auto s = scheme_from_key(k);
      if (!s) throw UsageError("unknown scheme '" + k + "' (known: wkb, langer-wkb, swkb)");
      out.push_back(*s);
    }
  }
  return out;
}

ParamSet checked_params(Family f, const PhysicalParams& phys, double hbar) {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw UsageError("--hbar must be positive");
  const ParamSet p = make_params(f, phys, hbar);
  require_valid(f, p);
  return p;
}

std::vector<int> levels(const RunConfig& cfg, Family f, const ParamSet& p) {
  const auto count = bound_state_count(f, p);
  if (cfg.n) {
    if (!count.admits(*cfg.n)) {
      throw OutOfSpectrumError("level n = " + std::to_string(*cfg.n) + " is not bound (" +
                               count.to_string() + " bound states)");
    }
    return {*cfg.n};
  }
  std::vector<int> out;
  for (int n = 0; n <= cfg.nmax && count.admits(n); ++n) out.push_back(n);
  return out;
}

// ---- rendering -------------------------------------------------------------

std::string pretty_bound(double x) {
  using std::numbers::pi;
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == pi) return "pi";
  if (x == pi / 2) return "pi/2";
  if (x == -pi / 2) return "-pi/2";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

std::string format_number(double v, bool compact) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, compact ? "%.10g" : "%.17g", v);
  return buf;
}

void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out,
             bool compact) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out, compact);
  } else if (v.is_number_float()) {
    out.emplace_back(prefix, format_number(v.get<double>(), compact));
  } else if (v.is_string()) {
    out.emplace_back(prefix, v.get<std::string>());
  } else if (v.is_null()) {
    out.emplace_back(prefix, "");
  } else {
    out.emplace_back(prefix, v.dump());
  }
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Table tabulate(const json& results, bool compact) {
  Table t;
  std::vector<std::vector<std::pair<std::string, std::string>>> flat;
  for (const auto& r : results) {
    flat.emplace_back();
    flatten(r, "", flat.back(), compact);
    for (const auto& [k, v] : flat.back())
      if (std::find(t.header.begin(), t.header.end(), k) == t.header.end()) t.header.push_back(k);
  }
  for (const auto& cells : flat) {
    std::vector<std::string> row(t.header.size());
    for (const auto& [k, v] : cells)
      row[static_cast<std::size_t>(std::find(t.header.begin(), t.header.end(), k) - t.header.begin())] = v;
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void write_csv(std::ostream& out, const json& results) {
  const Table t = tabulate(results, false);
  for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << csv_field(t.header[i]);
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << "\n";
  }
}

void write_table(std::ostream& out, const json& results) {
  const Table t = tabulate(results, true);
  std::vector<std::size_t> width(t.header.size());
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    width[i] = t.header[i].size();
    for (const auto& row : t.rows) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size(), ' ');
    }
    out << s << "\n";
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
}

json meta(const RunConfig& cfg) {
  json m;
  m["version"] = SIWKB_VERSION;
  m["command"] = cfg.command;
  m["seed"] = cfg.seed;
  m["hbar"] = cfg.hbar;
  m["tol"] = cfg.tol;
  return m;
}

void emit(std::ostream& out, const RunConfig& cfg, const json& results) {
  if (cfg.format == "csv") {
    write_csv(out, results);
  } else if (cfg.format == "table") {
    write_table(out, results);
  } else {
    json doc;
    doc["meta"] = meta(cfg);
    doc["results"] = results;
    out << doc.dump(2) << "\n";
  }
}

json params_json(const PhysicalParams& p) {
  json j = json::object();
  for (const auto& [k, v] : p) j[k] = v;
  return j;
}

json row_base(Family f, const PhysicalParams& phys) {
  json r;
  r["family"] = std::string(info(f).key);
  r["params"] = params_json(phys);
  return r;
}

// Common action-row layout; the extra fields land after the shared ones.
json action_row(Family f, const PhysicalParams& phys, int n, SchemeKind s, double action,
                double target, double tol) {
  json r = row_base(f, phys);
  r["n"] = n;
  r["scheme"] = std::string(to_string(s));
  r["action"] = action;
  r["target"] = target;
  r["residual"] = action - target;
  r["status"] = std::abs(action - target) <= tol ? "pass" : "fail";
  r["units_hbar"] = true;
  return r;
}

// ---- commands --------------------------------------------------------------

int cmd_list(const RunConfig& cfg, std::ostream& out) {
  json results = json::array();
  for (Family f : all_families) {
    const auto& row = info(f);
    json r;
    r["family"] = std::string(row.key);
    r["class"] = std::string(to_string(row.tag));
    r["name"] = std::string(row.name);
    r["superpotential"] = std::string(row.superpotential);
    r["partners"] = std::string(row.partner_potentials);
    r["mapping"] = std::string(row.mapping);
    r["domain"] = "(" + pretty_bound(row.domain.left) + ", " + pretty_bound(row.domain.right) + ")";
    r["constraints"] = std::string(row.constraints);
    std::string names;
    for (auto n : row.param_names) names += (names.empty() ? "" : ",") + std::string(n);
    r["params"] = names;
    results.push_back(r);
  }
  emit(out, cfg, results);
  return ok;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const Family f = parse_family(cfg.family);
  const auto phys = parse_sets(f, cfg.sets, false);
  const ParamSet p = checked_params(f, phys, cfg.hbar);
  const auto schemes = parse_schemes(cfg.schemes);
  const int top = cfg.n ? *cfg.n : cfg.nmax;
  const auto report = spectrum_report(f, p, top, schemes);
  json results = json::array();
  for (const auto& row : report.rows) {
    if (cfg.n && row.n != *cfg.n) continue;
    for (const auto& cell : row.cells) {
      json r = row_base(f, phys);
      r["n"] = row.n;
      r["scheme"] = std::string(to_string(cell.scheme));
      r["exact_energy"] = row.exact;
      r["solved_energy"] = cell.solved_energy;
      r["action"] = cell.action;
      r["target"] = cell.action - cell.residual;
      r["residual"] = cell.residual;
      r["status"] = row.status != "ok" ? row.status
                    : cell.status != "ok" ? cell.status
                    : std::abs(cell.residual) <= cfg.tol * p.hbar ? "pass"
                                                                   : "fail";
      r["units_hbar"] = true;
      results.push_back(r);
    }
  }
  emit(out, cfg, results);
  return ok;
}

int cmd_action(const RunConfig& cfg, std::ostream& out) {
  const Family f = parse_family(cfg.family);
  const auto phys = parse_sets(f, cfg.sets, false);
  const ParamSet p = checked_params(f, phys, cfg.hbar);
  json results = json::array();
  for (int n : levels(cfg, f, p)) {
    for (SchemeKind s : parse_schemes(cfg.schemes)) {
      const auto q = action_integral(f, p, n, s);
      json r = action_row(f, phys, n, s, q.action, q.target, cfg.tol * p.hbar);
      r["energy"] = q.energy;
      r["action_over_pi_hbar"] = q.action / (std::numbers::pi * p.hbar);
      r["x_left"] = q.turning.x_left;
      r["x_right"] = q.turning.x_right;
      r["degenerate"] = q.degenerate;
      r["quadrature_nodes"] = q.nodes_used;
      results.push_back(r);
    }
  }
  emit(out, cfg, results);
  return ok;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const Family f = parse_family(cfg.family);
  const auto phys = parse_sets(f, cfg.sets, false);
  const ParamSet p = checked_params(f, phys, cfg.hbar);
  json results = json::array();
  for (int n : levels(cfg, f, p)) {
    for (SchemeKind s : parse_schemes(cfg.schemes)) {
      json r = row_base(f, phys);
      r["n"] = n;
      r["scheme"] = std::string(to_string(s));
      const double exact = exact_energy(f, p, n);
      r["exact_energy"] = exact;
      try {
        const double e = solve_energy(f, p, n, s);
        r["solved_energy"] = e;
        r["error"] = e - exact;
        r["status"] = std::abs(e - exact) <= 1e-6 * (1.0 + std::abs(exact)) ? "pass" : "fail";
      } catch (const Error& e) {
        r["solved_energy"] = nullptr;
        r["error"] = nullptr;
        r["status"] = e.what();
      }
      results.push_back(r);
    }
  }
  emit(out, cfg, results);
  return ok;
}

int cmd_identity(const RunConfig& cfg, std::ostream& out) {
  const Family f = parse_family(cfg.family);
  const auto phys = parse_sets(f, cfg.sets, false);
  const ParamSet p = checked_params(f, phys, cfg.hbar);
  const auto grid = interior_grid(f, 200);
  json results = json::array();
  const auto ns = levels(cfg, f, p);
  const double scale = energy_scale(f, p, ns.back(), grid);
  for (int n : ns) {
    double worst = 0.0;
    for (double x : grid) worst = std::max(worst, std::abs(integrand_identity_residual(f, p, n, x)));
    const auto h = half_shift_action_check(f, p, n);
    json r = action_row(f, phys, n, SchemeKind::langer_wkb, h.langer, h.target, 2e-8 * p.hbar);
    r["shifted_a"] = shifted_params(f, p).a;
    r["shifted_action"] = h.shifted;
    r["shifted_residual"] = h.shifted - h.target;
    r["identity_max_residual"] = worst;
    r["identity_scale"] = scale;
    const bool pass = worst <= 1e-12 * scale &&
                      std::max({std::abs(h.langer - h.target), std::abs(h.shifted - h.target),
                                std::abs(h.langer - h.shifted)}) <= 2e-8 * p.hbar;
    r["status"] = pass ? "pass" : "fail";
    results.push_back(r);
  }
  emit(out, cfg, results);
  return ok;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const Family f = parse_family(cfg.family);
  const auto phys = parse_sets(f, cfg.sets, false);
  const ParamSet p = checked_params(f, phys, cfg.hbar);
  RunConfig capped = cfg;
  if (!cfg.n) capped.nmax = std::min(cfg.nmax, 3);
  json results = json::array();
  for (int n : levels(capped, f, p)) {
    json r = row_base(f, phys);
    r["n"] = n;
    const double exact = exact_energy(f, p, n);
    const double e = oracle::eigenvalue(f, p, n);
    r["exact_energy"] = exact;
    r["numerov_energy"] = e;
    r["relative_error"] = std::abs(e - exact) / (1.0 + std::abs(exact));
    r["status"] = std::abs(e - exact) <= 1e-6 * (1.0 + std::abs(exact)) ? "pass" : "fail";
    results.push_back(r);
  }
  emit(out, cfg, results);
  return ok;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const Family f = parse_family(cfg.family);
  if (cfg.ranges.empty()) throw UsageError("sweep needs at least one --range");
  const auto base = parse_sets(f, cfg.sets, true);
  std::vector<Range> ranges;
  for (const auto& text : cfg.ranges) ranges.push_back(parse_range(f, text));
  for (auto name : info(f).param_names) {
    const std::string key(name);
    const bool ranged = std::any_of(ranges.begin(), ranges.end(), [&](const Range& r) { return r.key == key; });
    if (!ranged && !base.count(key)) throw UsageError("parameter '" + key + "' needs --set or --range");
  }
  if (!(cfg.hbar > 0.0)) throw UsageError("--hbar must be positive");
  const auto schemes = parse_schemes(cfg.schemes);

  // Cartesian product, first range varying slowest
  std::vector<PhysicalParams> points{base};
  for (const auto& r : ranges) {
    std::vector<PhysicalParams> next;
    for (const auto& pt : points)
      for (double v : r.values) {
        PhysicalParams q = pt;
        q[r.key] = v;
        next.push_back(q);
      }
    points = std::move(next);
  }

  auto rows = parallel_map<json>(points.size(), [&](std::size_t i) {
    json block = json::array();
    const ParamSet p = make_params(f, points[i], cfg.hbar);
    const auto v = validate(f, p);
    if (!v.valid) {
      json r = row_base(f, points[i]);
      std::string why;
      for (const auto& s : v.violations) why += (why.empty() ? "" : "; ") + s;
      r["status"] = "invalid: " + why;
      block.push_back(r);
      return block;
    }
    const auto count = bound_state_count(f, p);
    std::vector<int> ns;
    for (int n = cfg.n.value_or(0); n <= cfg.n.value_or(cfg.nmax) && count.admits(n); ++n)
      ns.push_back(n);
    if (ns.empty()) {
      json r = row_base(f, points[i]);
      r["status"] = "out-of-spectrum";
      block.push_back(r);
    }
    for (int n : ns) {
      for (SchemeKind s : schemes) {
        try {
          const auto q = action_integral(f, p, n, s);
          json r = action_row(f, points[i], n, s, q.action, q.target, cfg.tol * p.hbar);
          r["energy"] = q.energy;
          block.push_back(r);
        } catch (const Error& e) {
          json r = row_base(f, points[i]);
          r["n"] = n;
          r["scheme"] = std::string(to_string(s));
          r["status"] = e.what();
          block.push_back(r);
        }
      }
    }
    return block;
  });
  json results = json::array();
  for (auto& block : rows)
    for (auto& r : block) results.push_back(std::move(r));
  emit(out, cfg, results);
  return ok;
}

json check_json(const CheckResult& c) {
  json r;
  r["check"] = c.check;
  if (!c.family.empty()) {
    r["family"] = c.family;
    r["params"] = params_json(c.params);
  }
  if (c.n >= 0) r["n"] = c.n;
  if (!c.scheme.empty()) r["scheme"] = c.scheme;
  r["value"] = std::isfinite(c.value) ? json(c.value) : json(nullptr);
  r["comparison"] = c.comparison;
  r["tolerance"] = c.tolerance;
  r["status"] = c.pass ? "pass" : "fail";
  r["units_hbar"] = c.units_hbar;
  if (!c.detail.empty()) r["detail"] = c.detail;
  return r;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");
  VerifyOptions opt;
  opt.seed = cfg.seed;
  opt.tol = cfg.tol;
  opt.oracle = !cfg.skip_oracle;
  const auto checks = verify_suite(opt);
  json results = json::array();
  int failed = 0;
  for (const auto& c : checks) {
    results.push_back(check_json(c));
    if (!c.pass) ++failed;
  }
  json summary;
  summary["checks"] = checks.size();
  summary["failed"] = failed;
  summary["status"] = failed == 0 ? "pass" : "fail";
  if (cfg.format == "json") {
    // JSON Lines: one record per check, then the summary
    for (const auto& r : results) out << r.dump() << "\n";
    json tail;
    tail["summary"] = summary;
    tail["meta"] = meta(cfg);
    out << tail.dump() << "\n";
  } else {
    emit(out, cfg, results);
  }
  return failed == 0 ? ok : verification;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Semiclassical quantization checks for the shape-invariant potentials", "siwkb"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(SIWKB_VERSION));

  auto add_common = [&](CLI::App* sub, bool family, bool levels_opt, bool schemes) {
    if (family) {
      sub->add_option("--family,-f", cfg.family, "potential family (kebab-case)")->required();
      sub->add_option("--set", cfg.sets, "parameters as key=value[,key=value]");
      sub->add_option("--hbar", cfg.hbar, "value of hbar")->capture_default_str();
    }
    if (levels_opt) {
      sub->add_option("--n", cfg.n, "single level index");
      sub->add_option("--nmax", cfg.nmax, "highest level index")->capture_default_str();
    }
    if (schemes) sub->add_option("--scheme", cfg.schemes, "wkb, langer-wkb, swkb (comma list)");
    sub->add_option("--tol", cfg.tol, "action tolerance in units of hbar")->capture_default_str();
    sub->add_option("--format", cfg.format, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed for randomized grids")->capture_default_str();
    sub->add_option("--output,-o", cfg.output, "write the report here instead of stdout");
  };

  add_common(app.add_subcommand("list", "the ten families"), false, false, false);
  add_common(app.add_subcommand("spectrum", "exact levels with every scheme"), true, true, true);
  add_common(app.add_subcommand("action", "action integrals at exact energies"), true, true, true);
  add_common(app.add_subcommand("solve", "energies from the quantization condition"), true, true, true);
  auto* verify = app.add_subcommand("verify", "full invariant suite; exit 4 on any failure");
  add_common(verify, false, false, false);
  verify->add_flag("--skip-oracle", cfg.skip_oracle, "leave out the Numerov cross-check");
  add_common(app.add_subcommand("identity", "Langer/SWKB interrelation"), true, true, false);
  add_common(app.add_subcommand("oracle", "Numerov eigenvalues against the exact spectrum"), true, true,
             false);
  auto* sweep = app.add_subcommand("sweep", "actions over a parameter grid");
  add_common(sweep, true, true, true);
  sweep->add_option("--range", cfg.ranges, "key=start:stop:count (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "error: cannot open " << cfg.output << " for writing\n";
      return usage;
    }
  }
  std::ostream& sink = cfg.output.empty() ? out : file;

  try {
    const std::string& c = cfg.command;
    if (c == "list") return cmd_list(cfg, sink);
    if (c == "spectrum") return cmd_spectrum(cfg, sink);
    if (c == "action") return cmd_action(cfg, sink);
    if (c == "solve") return cmd_solve(cfg, sink);
    if (c == "verify") return cmd_verify(cfg, sink);
    if (c == "identity") return cmd_identity(cfg, sink);
    if (c == "oracle") return cmd_oracle(cfg, sink);
    if (c == "sweep") return cmd_sweep(cfg, sink);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return validation;
  } catch (const OutOfSpectrumError& e) {
    err << "error: " << e.what() << "\n";
    return validation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return runtime_failure;
  }
  return usage;
}

}  // namespace siwkb::cli
