#include "kellerscope/report.hpp"

#include <json.hpp>

#include <fstream>

namespace kellerscope {

using OJson = nlohmann::ordered_json;

namespace {

OJson caps_json(const Caps& caps) {
  OJson j;
  j["factor_degree"] = caps.factor_degree;
  j["ext_degree"] = caps.ext_degree;
  j["tower_height"] = caps.tower_height;
  j["timeout_seconds"] = caps.timeout_seconds;
  return j;
}

OJson provenance_json(const Provenance& prov) {
  OJson j;
  j["seed"] = prov.seed;
  j["caps"] = caps_json(prov.caps);
  j["version"] = kToolVersion;
  return j;
}

OJson report_shell(const char* command, const PolyMap& F) {
  OJson j;
  j["schema"] = kSchemaTag;
  j["command"] = command;
  j["input"]["map"] = print_map(F);
  return j;
}

std::string finish(OJson j, const Provenance& prov) {
  j["provenance"] = provenance_json(prov);
  return j.dump(2) + "\n";
}

}  // namespace

std::string jacobian_report(const PolyMap& F, const Provenance& prov) {
  OJson j = report_shell("jacobian", F);
  j["jacobian"] = jacobian(F).str();
  return finish(std::move(j), prov);
}

std::string keller_report(const PolyMap& F, const Provenance& prov) {
  OJson j = report_shell("keller", F);
  KellerCertificate cert = keller_check(F);
  j["keller"]["jacobian"] = cert.jacobian.str();
  j["keller"]["is_keller"] = cert.is_keller;
  if (cert.is_keller) j["keller"]["constant_value"] = cert.constant_value.str();
  return finish(std::move(j), prov);
}

void write_report(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(out.good(), "cannot open report path: " + path);
  out << text;
  require(out.good(), "failed writing report to " + path);
}

}  // namespace kellerscope
