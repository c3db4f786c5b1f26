#include "reo/cli.hpp"

#include "reo/enumerate.hpp"
#include "reo/iso.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace reo {

namespace {

using json = nlohmann::json;

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Indeterminate: return kExitIndeterminate;
    case ErrorKind::NotAnUpperBoundWitness: return kExitNotArrowing;
    case ErrorKind::ClaimViolated: return kExitVerifyFailed;
    default: return kExitUsage;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::string edges_json(const EdgeOrderedGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return json{{"vertices", g.vertex_count()}, {"edges", edges}}.dump();
}

int cmd_family(const std::string& name, const FamilyParams& raw, const RunConfig& config, std::ostream& out) {
  const auto family = family_from_string(name);
  if (!family) throw Error(ErrorKind::InvalidParameter, "unknown family '" + name + "'");
  FamilyParams params = raw;
  params.family = *family;
  const auto g = make_family(params);
  if (config.json) {
    out << edges_json(g) << '\n';
  } else {
    out << serialize_eog(g);
  }
  return kExitOk;
}

int cmd_arrows(const std::string& host_arg, const std::string& red_arg, const std::string& blue_arg,
               const std::string& mode, const RunConfig& config, std::ostream& out) {
  const auto host = load_graph_argument(host_arg);
  const auto red = load_graph_argument(red_arg);
  const auto blue = load_graph_argument(blue_arg);
  if (mode == "sample") {
    const auto samples = config.samples.value_or(1000);
    const auto r = sample_colorings(host, red, blue, samples, config.seed);
    if (config.json) {
      out << sample_report_json(r) << '\n';
    } else {
      out << r.failures << " failures in " << r.samples << " samples (seed " << r.seed << ")";
      if (r.first_failure) out << "; first " << r.first_failure->to_rb();
      out << '\n';
    }
    return r.failures > 0 ? kExitNotArrowing : kExitIndeterminate;
  }
  ArrowVerdict verdict;
  if (mode == "exact") {
    verdict = arrows(host, red, blue, config.arrow_options());
  } else if (mode == "naive") {
    verdict = arrows_naive(host, red, blue);
  } else {
    throw Error(ErrorKind::InvalidParameter, "mode must be exact, naive or sample");
  }
  if (config.json) {
    out << certificate_json(host, red, blue, verdict) << '\n';
  } else if (verdict.arrows) {
    out << "arrows (" << verdict.nodes_explored << " nodes)\n";
  } else {
    out << "does not arrow; counterexample " << verdict.counterexample->to_rb() << '\n';
  }
  return verdict.arrows ? kExitOk : kExitNotArrowing;
}

int cmd_search(const std::string& red_arg, const std::string& blue_arg, std::size_t m_max,
               const std::optional<std::string>& witness_arg, const RunConfig& config, std::ostream& out) {
  const auto red = load_graph_argument(red_arg);
  const auto blue = load_graph_argument(blue_arg);
  const LedgerStore store(config.cache_dir);
  const auto r = witness_arg ? certify_exact(red, blue, load_graph_argument(*witness_arg), store, config.sweep_options())
                             : size_redge_exact(red, blue, m_max, store, config.sweep_options());
  if (config.json) {
    out << result_json(r) << '\n';
  } else {
    out << to_string(r.status);
    if (r.value) out << ' ' << *r.value;
    out << '\n';
    if (r.witness_host) out << "witness " << canonical_form(*r.witness_host).digest_hex() << '\n';
    for (const auto& l : r.ledgers) {
      out << "ledger m=" << l.m << ' ' << l.entries << '/' << l.total << (l.complete ? " complete" : " partial")
          << ' ' << l.path.string() << '\n';
    }
  }
  return r.status == ResultStatus::Exact ? kExitOk : kExitIndeterminate;
}

int cmd_verify(const std::string& target, const VerifyParams& params, const RunConfig& config, std::ostream& out) {
  const auto report = verify_target(target, params, config);
  out << (config.json ? report_json(report) + "\n" : report_text(report));
  if (report.passed()) return kExitOk;
  return report.indeterminate() ? kExitIndeterminate : kExitVerifyFailed;
}

int cmd_enumerate(std::size_t m, bool count_only, std::optional<std::size_t> limit, const RunConfig& config,
                  std::ostream& out) {
  if (count_only) {
    const auto count = count_eographs(m);
    if (config.json) {
      out << json{{"m", m}, {"count", count}}.dump() << '\n';
    } else {
      out << count << '\n';
    }
    return kExitOk;
  }
  EdgeOrderedEnumerator it(m);
  std::size_t emitted = 0;
  while (!limit || emitted < *limit) {
    const auto g = it.next();
    if (!g) break;
    const auto digest = canonical_form(*g).digest_hex();
    if (config.json) {
      out << json{{"canon", digest}, {"edges", json::parse(edges_json(*g))["edges"]}}.dump() << '\n';
    } else {
      out << digest << '\n';
    }
    ++emitted;
  }
  return kExitOk;
}

int cmd_cert_check(const std::string& path, const RunConfig& config, std::ostream& out) {
  const auto cert = parse_certificate(read_file(path));
  const bool ok = verify_certificate(cert);
  if (config.json) {
    out << json{{"valid", ok}, {"arrows", cert.arrows}}.dump() << '\n';
  } else {
    out << (ok ? "valid" : "invalid") << " certificate (" << (cert.arrows ? "arrows" : "does not arrow") << ")\n";
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

EdgeOrderedGraph load_graph_argument(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_eog_file(arg);
  return make_family(parse_family_expression(arg));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Size edge-ordered Ramsey toolkit", "reo"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  RunConfig config;
  std::string cache;
  if (const char* env = std::getenv("REO_CACHE")) cache = env;
  if (cache.empty()) cache = "reo-cache";
  std::optional<std::uint64_t> node_budget, samples, max_hosts;
  app.add_option("--threads", config.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--json", config.json, "JSON output");
  app.add_option("--cache", cache, "Ledger directory (default $REO_CACHE)");
  app.add_option("--seed", config.seed, "Sampling seed");
  app.add_option("--node-budget", node_budget, "Search node budget per host");
  app.add_option("--samples", samples, "Sample count");
  app.add_option("--max-hosts", max_hosts, "Stop a sweep after this many new hosts");
  app.fallthrough();

  auto* family = app.add_subcommand("family", "Print a named family graph");
  std::string family_name;
  FamilyParams fp;
  std::string ranks;
  family->add_option("name", family_name, "matching, path4, star, complete-bipartite, book, cycle, complete")
      ->required();
  family->add_option("--m", fp.m);
  family->add_option("--n", fp.n);
  family->add_option("--s", fp.s);
  family->add_option("--t", fp.t);
  family->add_option("--variant", fp.variant);
  family->add_option("--ranks", ranks, "Cycle ranks, comma separated");

  auto* arrows_cmd = app.add_subcommand("arrows", "Decide host -> (red, blue)");
  std::string host_arg, red_arg, blue_arg, mode = "exact";
  arrows_cmd->add_option("host", host_arg)->required();
  arrows_cmd->add_option("red", red_arg)->required();
  arrows_cmd->add_option("blue", blue_arg)->required();
  arrows_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exact", "naive", "sample"}));

  auto* search = app.add_subcommand("search", "Exact size edge-ordered Ramsey number by sweep");
  std::size_t m_max = kMaxEnumerationEdges;
  std::optional<std::string> witness;
  search->add_option("red", red_arg)->required();
  search->add_option("blue", blue_arg)->required();
  search->add_option("--m-max", m_max);
  search->add_option("--witness", witness, "Arrowing host; only the level below it is swept");

  auto* verify = app.add_subcommand("verify", "Machine-check a claim within its envelope");
  std::string target;
  VerifyParams vp;
  verify->add_option("target", target)->required()->check(
      CLI::IsMember(std::vector<std::string>(std::begin(kVerifyTargets), std::end(kVerifyTargets))));
  verify->add_option("--m", vp.m);
  verify->add_option("--n", vp.n);
  verify->add_option("--s", vp.s);
  verify->add_option("--t", vp.t);
  verify->add_option("--variant", vp.variant);

  auto* enumerate = app.add_subcommand("enumerate", "List edge-ordered graph classes with m edges");
  std::size_t enum_m = 0;
  bool count_only = false;
  std::optional<std::size_t> limit;
  enumerate->add_option("--m", enum_m)->required();
  enumerate->add_flag("--count", count_only, "Print the class count only");
  enumerate->add_option("--limit", limit);

  auto* cert = app.add_subcommand("cert-check", "Re-check an arrowing certificate");
  std::string cert_path;
  cert->add_option("file", cert_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  config.cache_dir = cache;
  config.node_budget = node_budget;
  config.samples = samples;
  config.max_hosts = max_hosts;
  config.progress = &err;

  try {
    if (family->parsed()) {
      if (!ranks.empty()) fp.ranks = parse_family_expression("cycle:1:" + ranks).ranks;
      return cmd_family(family_name, fp, config, out);
    }
    if (arrows_cmd->parsed()) return cmd_arrows(host_arg, red_arg, blue_arg, mode, config, out);
    if (search->parsed()) return cmd_search(red_arg, blue_arg, m_max, witness, config, out);
    if (verify->parsed()) return cmd_verify(target, vp, config, out);
    if (enumerate->parsed()) return cmd_enumerate(enum_m, count_only, limit, config, out);
    if (cert->parsed()) return cmd_cert_check(cert_path, config, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_for(e.kind());
  }
  return kExitUsage;
}

}  // namespace reo
