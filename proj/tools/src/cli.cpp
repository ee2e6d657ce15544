#include "cycaut_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <cycaut/brand.hpp>
#include <cycaut/equivalence.hpp>
#include <cycaut/io.hpp>

namespace cycaut::cli {

namespace {

struct Config {
  std::string format = "text";
  u64 cap = kDefaultEnumerationCap;
  unsigned jobs = 1;
  u64 seed = 1;
  bool json() const { return format == "json"; }
};

Descriptor load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_descriptor(ss.str());
}

int cmd_classify(const Config& cfg, const std::string& path, std::ostream& out) {
  const auto d = load(path);
  const auto c = std::visit([](const auto& x) { return classify(x); }, d);
  out << (cfg.json() ? to_json(c) : to_text(c)) << "\n";
  return kOk;
}

int cmd_equiv(const Config& cfg, const std::string& a_path, const std::string& b_path, std::ostream& out) {
  const auto a = load(a_path);
  const auto b = load(b_path);
  if (a.index() != b.index()) throw std::invalid_argument("equiv: a code cannot be compared with a graph");
  const SearchOptions opts{cfg.cap, cfg.jobs};
  const auto w = std::holds_alternative<CyclicCode>(a)
                     ? equivalent(std::get<CyclicCode>(a), std::get<CyclicCode>(b), opts)
                     : equivalent(std::get<CirculantGraph>(a), std::get<CirculantGraph>(b), opts);
  out << (cfg.json() ? to_json(w) : to_text(w)) << "\n";
  return w.equivalent() ? kOk : kNegative;
}

int cmd_table2(const Config& cfg, std::ostream& out) {
  const auto cells = compute_table2();
  bool all = true;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : cells) {
    all = all && c.match();
    if (cfg.json()) {
      rows.push_back({{"q", c.q},
                      {"p", c.p},
                      {"delta", c.delta},
                      {"b", c.b},
                      {"computed", c.computed_name},
                      {"computed_order", c.computed_order.str()},
                      {"expected", c.expected_name},
                      {"expected_order", c.expected_order.str()},
                      {"match", c.match()}});
    } else {
      out << "q=" << c.q << " p=" << c.p << " delta=" << c.delta << " b=" << c.b << ": computed "
          << c.computed_name << " (" << c.computed_order << "), expected " << c.expected_name << " ("
          << c.expected_order << ")" << (c.match() ? "" : "  MISMATCH") << "\n";
    }
  }
  if (cfg.json()) {
    out << nlohmann::json{{"cells", rows}, {"all_match", all}}.dump() << "\n";
  } else {
    const auto matched = std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.match(); });
    out << matched << "/" << cells.size() << " cells match\n";
  }
  return all ? kOk : kNegative;
}

u64 count_group(const QGroupId& id, u64 cap, u64& collisions) {
  u64 count = 0;
  const auto stats = enumerate(
      id,
      [&](const PolyPerm&) {
        ++count;
        return true;
      },
      cap);
  collisions = stats.collisions;
  return count;
}

int cmd_brand(const Config& cfg, u64 p, unsigned m, unsigned n, const std::string& action, std::ostream& out) {
  const PrimePowerLength len(p, m);
  const QGroupId q(len, n, false);
  if (action == "count") {
    nlohmann::json j{{"p", p}, {"m", m}, {"n", n}};
    u64 coll = 0;
    const u64 got = count_group(q, cfg.cap, coll);
    j["Q"] = {{"formula", q.cardinality()}, {"enumerated", got}, {"collisions", coll}};
    std::string text = "|" + q.name() + "| formula " + std::to_string(q.cardinality()) + ", enumerated " +
                       std::to_string(got);
    if (coll) text += " (" + std::to_string(coll) + " duplicate maps skipped)";
    if (m >= 2) {
      const QGroupId q1(len, n, true);
      u64 coll1 = 0;
      const u64 got1 = count_group(q1, cfg.cap, coll1);
      j["Q_1"] = {{"formula", q1.cardinality()}, {"enumerated", got1}, {"collisions", coll1}};
      text += "\n|" + q1.name() + "| formula " + std::to_string(q1.cardinality()) + ", enumerated " +
              std::to_string(got1);
      if (coll1) text += " (" + std::to_string(coll1) + " duplicate maps skipped)";
    }
    out << (cfg.json() ? j.dump() : text) << "\n";
    return kOk;
  }
  if (action == "list") {
    enumerate(
        q,
        [&](const PolyPerm& f) {
          if (cfg.json()) {
            out << nlohmann::json{{"coefficients", std::vector<u64>(f.coefficients().begin(), f.coefficients().end())},
                                  {"image", f.permutation().to_string()}}
                       .dump()
                << "\n";
          } else {
            out << f.to_string() << "\n";
          }
          return true;
        },
        cfg.cap);
    return kOk;
  }
  if (action == "check") {
    std::mt19937_64 rng(cfg.seed);
    const u64 total = q.cardinality();
    std::uniform_int_distribution<u64> pick(0, total - 1);
    const unsigned samples = 200;
    unsigned failures = 0;
    const auto id_perm = Permutation::identity(len.n());
    for (unsigned i = 0; i < samples; ++i) {
      const auto g = element_at(q, pick(rng));
      const auto h = element_at(q, pick(rng));
      const auto gh = compose(g, h);
      const auto gi = invert(g);
      const bool ok = membership(gh, q) && membership(gi, q) &&
                      compose(g.permutation(), gi.permutation()) == id_perm &&
                      gh.permutation() == compose(g.permutation(), h.permutation());
      if (!ok) {
        ++failures;
        if (!cfg.json()) out << "failure: g = " << g.to_string() << ", h = " << h.to_string() << "\n";
      }
    }
    if (cfg.json()) {
      out << nlohmann::json{{"group", q.name()}, {"samples", samples}, {"failures", failures}}.dump() << "\n";
    } else {
      out << q.name() << ": " << samples << " samples, " << failures << " failures\n";
    }
    return failures == 0 ? kOk : kNegative;
  }
  throw ParseError("brand: unknown action '" + action + "' (count, list, check)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Automorphism groups and equivalence of cyclic codes and circulant graphs", "cycaut"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap", cfg.cap, "Enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--jobs", cfg.jobs, "Worker threads for equivalence search")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Random seed for sampling subcommands");

  std::string path_a, path_b;
  auto* classify_cmd = app.add_subcommand("classify", "Classify the automorphism group of a descriptor");
  classify_cmd->add_option("descriptor", path_a, "JSON code or graph descriptor")->required();
  auto* equiv_cmd = app.add_subcommand("equiv", "Decide equivalence of two descriptors");
  equiv_cmd->add_option("first", path_a)->required();
  equiv_cmd->add_option("second", path_b)->required();
  auto* table_cmd = app.add_subcommand("table2", "Recompute the BCH permutation-group table");
  u64 p = 0;
  unsigned m = 0, n = 0;
  std::string action;
  auto* brand_cmd = app.add_subcommand("brand", "Inspect the groups Q^n and Q_1^n on Z_{p^m}");
  brand_cmd->add_option("p", p)->required();
  brand_cmd->add_option("m", m)->required();
  brand_cmd->add_option("n", n)->required();
  brand_cmd->add_option("action", action)->required()->check(CLI::IsMember({"count", "list", "check"}));
  for (auto* sub : {classify_cmd, equiv_cmd, table_cmd, brand_cmd}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (*classify_cmd) return cmd_classify(cfg, path_a, out);
    if (*equiv_cmd) return cmd_equiv(cfg, path_a, path_b, out);
    if (*table_cmd) return cmd_table2(cfg, out);
    if (*brand_cmd) return cmd_brand(cfg, p, m, n, action, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kUnsupported;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kParseError;
}

}  // namespace cycaut::cli
