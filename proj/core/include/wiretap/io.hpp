#pragma once

#include <string>

#include "wiretap/binary.hpp"
#include "wiretap/channel.hpp"
#include "wiretap/classify.hpp"
#include "wiretap/region.hpp"

namespace wiretap {

// All exported results print floats with 12 significant digits.
std::string format_sig(double v);

// Channel JSON: object with "main" and "eavesdropper" (row-major arrays of
// arrays) and an optional "name". Parse failures and invalid rows raise
// std::invalid_argument with a diagnostic.
WiretapChannel parse_channel_json(const std::string& text);
WiretapChannel load_channel_json(const std::string& path);
std::string channel_to_json(const WiretapChannel& w);
void save_channel_json(const WiretapChannel& w, const std::string& path);

std::string classification_to_json(const WiretapChannel& w,
                                   const ClassificationReport& report);

// Boundary exports: CSV rows `mu,R,Re`, and a JSON sidecar with mu_star,
// cb, ce, secrecy_capacity, warnings, and per-point chains as nested arrays.
void write_region_csv(const RegionBoundary& boundary, const std::string& path);
std::string region_to_json(const RegionBoundary& boundary);
void write_region_json(const RegionBoundary& boundary,
                       const std::string& path);

std::string secrecy_to_json(const SecrecyResult& result);

// Curve export: CSV rows `px,f,fmu,dfmu,d2fmu`.
void write_curve_csv(const CurveSample& curve, const std::string& path);

}  // namespace wiretap
