#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include <kellerscope/report.hpp>

namespace {

using namespace kellerscope;

struct CommonOpts {
  std::string map_text;
  std::string poly_text;
  std::string json_path;
  std::uint64_t seed = 0;
  int cap_ext = -1;
  int cap_degree = -1;
  double timeout = 60.0;
  bool force = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--map", o.map_text, "map as \"P ; Q\"");
  cmd->add_option("--poly", o.poly_text, "single polynomial in x, y");
  cmd->add_option("--json", o.json_path, "write the JSON report to this path");
  cmd->add_option("--seed", o.seed, "seed for randomized subroutines");
  cmd->add_option("--cap-ext", o.cap_ext, "cap on total field extension degree");
  cmd->add_option("--cap-degree", o.cap_degree, "cap on factorization degree");
  cmd->add_option("--timeout", o.timeout, "time budget in seconds");
  cmd->add_flag("--force", o.force, "continue past failed pipeline stages");
}

Provenance make_provenance(const CommonOpts& o) {
  Provenance prov;
  prov.seed = o.seed;
  if (o.cap_ext > 0) prov.caps.ext_degree = o.cap_ext;
  if (o.cap_degree > 0) prov.caps.factor_degree = o.cap_degree;
  prov.caps.timeout_seconds = o.timeout;
  prov.caps.started = std::chrono::steady_clock::now();
  return prov;
}

PolyMap require_map(const CommonOpts& o) {
  require(!o.map_text.empty(), "this command needs --map \"P ; Q\"");
  require(o.poly_text.empty(), "this command takes --map, not --poly");
  return parse_map(o.map_text);
}

void emit(const std::string& human, const std::string& json_body, const CommonOpts& o) {
  std::cout << human;
  if (!o.json_path.empty()) write_report(o.json_path, json_body);
}

void run_jacobian(const CommonOpts& o) {
  PolyMap F = require_map(o);
  Provenance prov = make_provenance(o);
  std::string human = "map: " + print_map(F) + "\njacobian: " + jacobian(F).str() + "\n";
  emit(human, jacobian_report(F, prov), o);
}

void run_keller(const CommonOpts& o) {
  PolyMap F = require_map(o);
  Provenance prov = make_provenance(o);
  KellerCertificate cert = keller_check(F);
  std::string human = "map: " + print_map(F) + "\njacobian: " + cert.jacobian.str() +
                      "\nis_keller: " + (cert.is_keller ? "true" : "false") + "\n";
  if (cert.is_keller) human += "constant_value: " + cert.constant_value.str() + "\n";
  emit(human, keller_report(F, prov), o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certificates for plane polynomial maps: Jacobians, places at infinity, "
               "non-proper sets, and polynomial inverses"};
  app.require_subcommand(1);
  CommonOpts opts;

  CLI::App* cmd_jacobian = app.add_subcommand("jacobian", "Jacobian determinant of a map");
  add_common(cmd_jacobian, opts);
  cmd_jacobian->callback([&] { run_jacobian(opts); });

  CLI::App* cmd_keller = app.add_subcommand("keller", "check for constant nonzero Jacobian");
  add_common(cmd_keller, opts);
  cmd_keller->callback([&] { run_keller(opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
