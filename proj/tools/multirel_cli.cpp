#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "multirel/dsl.hpp"
#include "multirel/json_io.hpp"
#include "multirel/laws.hpp"

using namespace multirel;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

bool cap_reason(const std::string& reason) {
  for (const char* k : {"PowersetTooLarge", "MaskTooWide", "EnumerationTooLarge"}) {
    if (reason.rfind(k, 0) == 0) return true;
  }
  return false;
}

void print_counterexamples(const LawReport& r) {
  const Json j = report_json(r);
  for (const Json& c : j.at("counterexamples")) std::cout << "  counterexample: " << c.dump() << "\n";
}

void print_line(const LawReport& r) {
  std::cout << r.law << ": " << to_string(r.verdict) << " (" << r.mode << ", checked " << r.checked;
  if (r.skipped_by_condition) std::cout << ", skipped " << r.skipped_by_condition;
  std::cout << ", expected " << (r.expected_holds ? "pass" : "fail") << ")";
  if (!r.as_expected) std::cout << " UNEXPECTED";
  if (!r.reason.empty()) std::cout << " - " << r.reason;
  std::cout << "\n";
}

CheckOptions make_options(const std::vector<std::size_t>& sizes, std::uint64_t seed, std::uint64_t random,
                          double density, unsigned jobs) {
  CheckOptions o;
  if (!sizes.empty()) o.sizes = sizes;
  o.seed = seed;
  if (random) o.random_count = random;
  o.density = density;
  o.jobs = std::max(1u, jobs);
  return o;
}

// keeps the input's carrier and type fields, rewrites values canonically
Json convert_env(const Json& in) {
  const Env env = env_from_json(in);
  Json out = Json::object();
  if (in.contains("carriers")) out["carriers"] = in.at("carriers");
  for (const char* group : {"rels", "mrels"}) {
    if (!in.contains(group)) continue;
    Json g = Json::object();
    for (const auto& [name, v] : in.at(group).items()) {
      Json value = to_json(env.values.at(name).value);
      Json entry = Json::object();
      entry["src"] = v.at("src");
      entry["dst"] = v.at("dst");
      if (value.contains("pairs")) entry["pairs"] = value.at("pairs");
      if (value.contains("rows")) entry["rows"] = value.at("rows");
      g[name] = entry;
    }
    out[group] = g;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multirel: finite multirelation workbench"};
  app.require_subcommand(1);

  std::string env_path, expr, out_path;
  std::vector<std::size_t> sizes;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a term against an environment file");
  eval_cmd->add_option("--env", env_path, "environment JSON")->required();
  eval_cmd->add_option("--expr", expr, "term")->required();
  eval_cmd->add_option("--out", out_path, "write the value here");
  eval_cmd->add_option("--sizes", sizes, "sizes for open carriers")->delimiter(',');

  std::string filter;
  bool laws_json = false;
  auto* laws_cmd = app.add_subcommand("laws", "list the law registry");
  laws_cmd->add_option("--filter", filter, "id prefix");
  laws_cmd->add_flag("--json", laws_json, "print JSON");

  std::string law_id;
  bool all = false, as_json = false, timing = false, no_shrink = false;
  std::uint64_t seed = 42, random = 0;
  double density = 0.5;
  unsigned jobs = 1;
  auto* check_cmd = app.add_subcommand("check", "check one law or the whole registry");
  auto* law_opt = check_cmd->add_option("--law", law_id, "law id");
  auto* all_opt = check_cmd->add_flag("--all", all, "check every law");
  law_opt->excludes(all_opt);
  check_cmd->add_option("--sizes", sizes, "carrier sizes, last repeats")->delimiter(',');
  check_cmd->add_option("--seed", seed, "random seed");
  auto* random_opt = check_cmd->add_option("--random", random, "sample this many tuples");
  check_cmd->add_option("--density", density, "pair probability")->check(CLI::Range(0.0, 1.0))->needs(random_opt);
  check_cmd->add_flag("--json", as_json, "print JSON reports");
  check_cmd->add_option("--jobs", jobs, "worker threads");
  check_cmd->add_flag("--timing", timing, "include elapsed_ms");
  check_cmd->add_flag("--no-shrink", no_shrink, "report counterexamples unshrunk");

  std::string lhs, rhs, rel = "==";
  auto* cex_cmd = app.add_subcommand("find-cex", "search for a counterexample to lhs REL rhs");
  cex_cmd->add_option("--lhs", lhs, "left term")->required();
  cex_cmd->add_option("--rhs", rhs, "right term")->required();
  cex_cmd->add_option("--rel", rel, "comparison")
      ->check(CLI::IsMember({"==", "<=", "<u=", "<d=", "<ud=", "=u=", "=d=", "=ud="}));
  cex_cmd->add_option("--sizes", sizes, "carrier sizes, last repeats")->delimiter(',')->required();
  cex_cmd->add_option("--seed", seed, "random seed");
  auto* cex_random = cex_cmd->add_option("--random", random, "sample this many tuples");
  cex_cmd->add_option("--density", density, "pair probability")->check(CLI::Range(0.0, 1.0))->needs(cex_random);
  cex_cmd->add_flag("--json", as_json, "print JSON report");
  cex_cmd->add_option("--jobs", jobs, "worker threads");

  std::string in_path;
  auto* conv_cmd = app.add_subcommand("convert", "read a value or environment and write it canonically");
  conv_cmd->add_option("--in", in_path, "input JSON")->required();
  conv_cmd->add_option("--out", out_path, "output JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval_cmd) {
      const Env env = env_from_json(read_json_file(env_path));
      const Json v = result_to_json(evaluate(expr, env, sizes));
      if (!out_path.empty()) write_text_file(out_path, v.dump(2) + "\n");
      std::cout << v.dump() << "\n";
      return kOk;
    }

    if (*laws_cmd) {
      Json list = Json::array();
      for (const Law& l : registry()) {
        if (l.id.rfind(filter, 0) != 0) continue;
        if (laws_json) {
          Json j{{"id", l.id}, {"kind", to_string(l.kind)}, {"claim", l.claim}, {"statement", l.statement},
                 {"anchor", l.anchor}, {"expected", l.expect_holds ? "pass" : "fail"}};
          if (!l.guard.empty()) j["guard"] = l.guard;
          list.push_back(j);
        } else {
          std::cout << l.id << "\t" << to_string(l.kind) << "\t" << l.claim;
          if (!l.guard.empty()) std::cout << "\t[if " << l.guard << "]";
          std::cout << "\n";
        }
      }
      if (laws_json) std::cout << list.dump(2) << "\n";
      return kOk;
    }

    if (*check_cmd) {
      if (law_id.empty() && !all) {
        std::cerr << "check: one of --law or --all is required\n";
        return kUsage;
      }
      CheckOptions opts = make_options(sizes, seed, random, density, jobs);
      opts.shrink = !no_shrink;
      if (!all) {
        const LawReport r = check(find_law(law_id), opts);
        if (as_json) {
          std::cout << report_json(r, timing).dump(2) << "\n";
        } else {
          print_line(r);
          print_counterexamples(r);
        }
        if (r.verdict == Verdict::Skipped) return cap_reason(r.reason) ? kCap : kFailed;
        return r.verdict == Verdict::Pass ? kOk : kFailed;
      }
      Json reports = Json::array();
      Json unexpected = Json::array();
      std::size_t good = 0;
      for (const Law& l : registry()) {
        const LawReport r = check(l, opts);
        if (r.as_expected) {
          ++good;
        } else {
          unexpected.push_back(r.law);
        }
        if (as_json) {
          reports.push_back(report_json(r, timing));
        } else {
          print_line(r);
          if (!r.as_expected) print_counterexamples(r);
        }
      }
      const std::size_t total = registry().size();
      if (as_json) {
        Json j{{"seed", seed},
               {"reports", reports},
               {"summary", {{"laws", total}, {"as_expected", good}, {"unexpected", unexpected}}}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << good << "/" << total << " laws as expected\n";
      }
      return good == total ? kOk : kFailed;
    }

    if (*cex_cmd) {
      Law law;
      law.id = "find-cex";
      law.kind = LawKind::NonTheorem;
      law.claim = "(" + lhs + ") " + rel + " (" + rhs + ")";
      law.expect_holds = false;
      law.default_sizes = sizes;
      CheckOptions opts = make_options(sizes, seed, random, density, jobs);
      const LawReport r = check(law, opts);
      if (as_json) {
        std::cout << report_json(r).dump(2) << "\n";
      } else if (r.verdict == Verdict::Fail) {
        std::cout << "counterexample found (" << r.mode << ", checked " << r.checked << ")\n";
        print_counterexamples(r);
      } else if (r.verdict == Verdict::Pass) {
        std::cout << "no counterexample (" << r.mode << ", checked " << r.checked << ")\n";
      } else {
        std::cout << "skipped: " << r.reason << "\n";
      }
      if (r.verdict == Verdict::Skipped) return cap_reason(r.reason) ? kCap : kUsage;
      return r.verdict == Verdict::Fail ? kFailed : kOk;
    }

    if (*conv_cmd) {
      const Json in = read_json_file(in_path);
      Json out;
      if (in.is_object() && (in.contains("rows") || in.contains("pairs"))) {
        out = to_json(instance_from_json(in));
      } else {
        out = convert_env(in);
      }
      write_text_file(out_path, out.dump(2) + "\n");
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.is_cap_error() ? kCap : kUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
