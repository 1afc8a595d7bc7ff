#include "wiretap/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace wiretap {
namespace {

using nlohmann::json;

// Round through the 12-significant-digit representation so serialized JSON
// numbers match the CSV formatting.
double round_sig(double v) { return std::strtod(format_sig(v).c_str(), nullptr); }

json matrix_to_json(const ChannelMatrix& m, bool rounded) {
  json rows = json::array();
  for (std::size_t x = 0; x < m.in_dim(); ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < m.out_dim(); ++y)
      row.push_back(rounded ? round_sig(m(x, y)) : m(x, y));
    rows.push_back(std::move(row));
  }
  return rows;
}

json pmf_to_json(const Pmf& p) {
  json arr = json::array();
  for (std::size_t i = 0; i < p.dim(); ++i) arr.push_back(round_sig(p[i]));
  return arr;
}

json chain_to_json(const AuxiliaryChain& chain) {
  return json{{"pu", pmf_to_json(chain.pu)},
              {"pv_given_u", matrix_to_json(chain.pv_given_u, true)},
              {"px_given_v", matrix_to_json(chain.px_given_v, true)}};
}

json point_to_json(const RegionPoint& pt) {
  return json{{"mu", round_sig(pt.mu)},
              {"R", round_sig(pt.rate)},
              {"Re", round_sig(pt.equivocation)},
              {"chain", chain_to_json(pt.chain)}};
}

ChannelMatrix matrix_from_json(const json& j, const char* field) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument(std::string("channel json: \"") + field +
                                "\" must be a non-empty array of rows");
  std::vector<std::vector<double>> rows;
  for (std::size_t x = 0; x < j.size(); ++x) {
    const json& row = j[x];
    if (!row.is_array() || row.empty())
      throw std::invalid_argument(std::string("channel json: \"") + field +
                                  "\" row " + std::to_string(x) +
                                  " must be a non-empty array");
    std::vector<double> r;
    for (std::size_t y = 0; y < row.size(); ++y) {
      if (!row[y].is_number())
        throw std::invalid_argument(std::string("channel json: \"") + field +
                                    "\" entry (" + std::to_string(x) + "," +
                                    std::to_string(y) + ") is not a number");
      r.push_back(row[y].get<double>());
    }
    rows.push_back(std::move(r));
  }
  return ChannelMatrix::from_rows(rows);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

std::string format_sig(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

WiretapChannel parse_channel_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("channel json: ") + e.what());
  }
  if (!j.is_object())
    throw std::invalid_argument("channel json: top level must be an object");
  if (!j.contains("main"))
    throw std::invalid_argument("channel json: missing \"main\"");
  if (!j.contains("eavesdropper"))
    throw std::invalid_argument("channel json: missing \"eavesdropper\"");
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string())
      throw std::invalid_argument("channel json: \"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  return make_wiretap(matrix_from_json(j["main"], "main"),
                      matrix_from_json(j["eavesdropper"], "eavesdropper"),
                      std::move(name));
}

WiretapChannel load_channel_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open channel file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_channel_json(ss.str());
}

std::string channel_to_json(const WiretapChannel& w) {
  // Full precision: a dumped channel re-parses element-wise identical.
  json j{{"main", matrix_to_json(w.main, false)},
         {"eavesdropper", matrix_to_json(w.eavesdropper, false)}};
  if (!w.name.empty()) j["name"] = w.name;
  return j.dump(2) + "\n";
}

void save_channel_json(const WiretapChannel& w, const std::string& path) {
  write_file(path, channel_to_json(w));
}

std::string classification_to_json(const WiretapChannel& w,
                                   const ClassificationReport& report) {
  json j{{"name", w.name},
         {"cb", round_sig(w.cb())},
         {"ce", round_sig(w.ce())},
         {"more_capable", report.more_capable},
         {"less_noisy", report.less_noisy},
         {"cyclic_shift_symmetric", report.cyclic_shift_symmetric},
         {"dominantly_cyclic", report.dominantly_cyclic},
         {"f_min",
          json{{"value", round_sig(report.f_min.value)},
               {"input", pmf_to_json(report.f_min.input)}}},
         {"f_max",
          json{{"value", round_sig(report.f_max.value)},
               {"input", pmf_to_json(report.f_max.input)}}},
         {"notes", report.notes}};
  return j.dump(2) + "\n";
}

void write_region_csv(const RegionBoundary& boundary,
                      const std::string& path) {
  std::ostringstream out;
  out << "mu,R,Re\n";
  for (const RegionPoint& pt : boundary.points)
    out << format_sig(pt.mu) << ',' << format_sig(pt.rate) << ','
        << format_sig(pt.equivocation) << '\n';
  write_file(path, out.str());
}

std::string region_to_json(const RegionBoundary& boundary) {
  json j;
  j["mu_star"] =
      boundary.mu_star ? json(round_sig(*boundary.mu_star)) : json(nullptr);
  j["cb"] = round_sig(boundary.cb);
  j["ce"] = round_sig(boundary.ce);
  j["secrecy_capacity"] = round_sig(boundary.secrecy_capacity);
  if (boundary.corner_segment) {
    j["corner_segment"] = json{{"from", point_to_json(boundary.corner_segment->first)},
                               {"to", point_to_json(boundary.corner_segment->second)}};
  } else {
    j["corner_segment"] = nullptr;
  }
  j["warnings"] = boundary.warnings;
  json points = json::array();
  for (const RegionPoint& pt : boundary.points)
    points.push_back(point_to_json(pt));
  j["points"] = std::move(points);
  return j.dump(2) + "\n";
}

void write_region_json(const RegionBoundary& boundary,
                       const std::string& path) {
  write_file(path, region_to_json(boundary));
}

std::string secrecy_to_json(const SecrecyResult& result) {
  json j{{"secrecy_capacity", round_sig(result.value)},
         {"method", result.method},
         {"chain", chain_to_json(result.chain)}};
  return j.dump(2) + "\n";
}

void write_curve_csv(const CurveSample& curve, const std::string& path) {
  std::ostringstream out;
  out << "px,f,fmu,dfmu,d2fmu\n";
  for (std::size_t i = 0; i < curve.grid.size(); ++i)
    out << format_sig(curve.grid[i]) << ',' << format_sig(curve.f[i]) << ','
        << format_sig(curve.fmu[i]) << ',' << format_sig(curve.dfmu[i]) << ','
        << format_sig(curve.d2fmu[i]) << '\n';
  write_file(path, out.str());
}

}  // namespace wiretap
