#pragma once

#include <cstdint>
#include <string>

#include "kellerscope/errors.hpp"
#include "kellerscope/polymap.hpp"

namespace kellerscope {

inline constexpr const char* kSchemaTag = "keller-scope/1";
inline constexpr const char* kToolVersion = "1.0.0";

// Everything that parametrizes a run; echoed into every JSON report so that
// reruns are reproducible byte for byte.
struct Provenance {
  std::uint64_t seed = 0;
  Caps caps;
};

// JSON report bodies (pretty-printed, trailing newline). Assembled with
// deterministic key order; rationals appear as decimal strings.
std::string jacobian_report(const PolyMap& F, const Provenance& prov);
std::string keller_report(const PolyMap& F, const Provenance& prov);

// Write text to path, replacing the file.
void write_report(const std::string& path, const std::string& text);

}  // namespace kellerscope
