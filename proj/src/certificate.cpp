#include "reo/arrowing.hpp"
#include "reo/errors.hpp"

#include <json.hpp>

namespace reo {

using nlohmann::json;

std::string certificate_json(const EdgeOrderedGraph& host, const EdgeOrderedGraph& red_pattern,
                             const EdgeOrderedGraph& blue_pattern, const ArrowVerdict& verdict) {
  json j;
  j["host"] = serialize_eog(host);
  j["red_pattern"] = serialize_eog(red_pattern);
  j["blue_pattern"] = serialize_eog(blue_pattern);
  j["arrows"] = verdict.arrows;
  j["counterexample"] = verdict.counterexample ? json(verdict.counterexample->to_rb()) : json(nullptr);
  j["nodes"] = verdict.nodes_explored;
  return j.dump(2);
}

Certificate parse_certificate(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
    Certificate cert;
    cert.host = parse_eog(j.at("host").get<std::string>());
    cert.red_pattern = parse_eog(j.at("red_pattern").get<std::string>());
    cert.blue_pattern = parse_eog(j.at("blue_pattern").get<std::string>());
    cert.arrows = j.at("arrows").get<bool>();
    if (!j.at("counterexample").is_null()) {
      cert.counterexample = Coloring::from_rb(j.at("counterexample").get<std::string>());
    }
    cert.nodes = j.at("nodes").get<std::uint64_t>();
    return cert;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("certificate: ") + e.what());
  }
}

bool verify_certificate(const Certificate& cert) {
  if (!cert.arrows) {
    if (!cert.counterexample || cert.counterexample->size() != cert.host.edge_count() ||
        !cert.counterexample->complete()) {
      return false;
    }
    return !check_coloring(cert.host, *cert.counterexample, cert.red_pattern, cert.blue_pattern);
  }
  if (cert.counterexample) return false;
  const auto verdict = cert.host.edge_count() <= kNaiveCap
                           ? arrows_naive(cert.host, cert.red_pattern, cert.blue_pattern)
                           : arrows(cert.host, cert.red_pattern, cert.blue_pattern);
  return verdict.arrows;
}

std::string sample_report_json(const SampleReport& report) {
  json j;
  j["samples"] = report.samples;
  j["failures"] = report.failures;
  j["seed"] = report.seed;
  j["first_failure"] = report.first_failure ? json(report.first_failure->to_rb()) : json(nullptr);
  return j.dump(2);
}

}  // namespace reo
