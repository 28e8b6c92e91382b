#include "hofstadter/gap_table.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "hofstadter/chern.hpp"
#include "hofstadter/rationals.hpp"
#include "hofstadter/spectrum.hpp"
#include "json.hpp"

namespace hofstadter {

std::string format_real(double value) {
  if (value == 0.0) value = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

double round12(double value) { return std::stod(format_real(value)); }

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

std::vector<GapRecord> build_gap_table(std::int64_t q_max) {
  std::vector<GapRecord> rows;
  for (const ReducedFraction& f : farey_sequence(q_max)) {
    if (f.q() == 1) continue;  // 0/1 and 1/1 have no gaps
    const SpectrumAtFlux s = spectrum_at(f);
    const auto tb = gap_labels(f, Regime::TightBinding);
    std::vector<GapLabel> landau;
    if (f.p() > 0) landau = gap_labels(f, Regime::LandauSplit);
    for (const Gap& gap : s.gaps) {
      const auto j = static_cast<std::size_t>(gap.index - 1);
      GapRecord r;
      r.p = f.p();
      r.q = f.q();
      r.j = gap.index;
      r.e_lo = round12(gap.lo);
      r.e_hi = round12(gap.hi);
      r.width = round12(gap.width);
      r.sigma_tb = tb[j].sigma;
      if (!landau.empty()) {
        r.sigma_landau = landau[j].sigma;
        r.ambiguous_landau = landau[j].ambiguous;
      }
      rows.push_back(r);
    }
  }
  std::sort(rows.begin(), rows.end(), [](const GapRecord& a, const GapRecord& b) {
    return std::tie(a.q, a.p, a.j) < std::tie(b.q, b.p, b.j);
  });
  return rows;
}

std::string gap_table_csv(const std::vector<GapRecord>& rows) {
  std::string out = kGapCsvHeader;
  out += '\n';
  for (const GapRecord& r : rows) {
    out += std::to_string(r.p) + ',' + std::to_string(r.q) + ',' + std::to_string(r.j) + ',' + format_real(r.e_lo) +
           ',' + format_real(r.e_hi) + ',' + format_real(r.width) + ',' + std::to_string(r.sigma_tb) + ',';
    if (r.sigma_landau) out += std::to_string(*r.sigma_landau);
    out += ',';
    if (r.ambiguous_landau) out += *r.ambiguous_landau ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string gap_table_json(const std::vector<GapRecord>& rows) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const GapRecord& r : rows) {
    nlohmann::ordered_json o;
    o["p"] = r.p;
    o["q"] = r.q;
    o["j"] = r.j;
    o["e_lo"] = r.e_lo;
    o["e_hi"] = r.e_hi;
    o["width"] = r.width;
    o["sigma_tb"] = r.sigma_tb;
    o["sigma_landau"] = r.sigma_landau ? nlohmann::ordered_json(*r.sigma_landau) : nlohmann::ordered_json(nullptr);
    o["ambiguous_landau"] =
        r.ambiguous_landau ? nlohmann::ordered_json(*r.ambiguous_landau) : nlohmann::ordered_json(nullptr);
    array.push_back(std::move(o));
  }
  return array.dump(2) + "\n";
}

std::vector<GapRecord> parse_gap_table_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kGapCsvHeader) throw std::invalid_argument("gap table CSV: bad header");
  std::vector<GapRecord> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 9) throw std::invalid_argument("gap table CSV: expected 9 fields in '" + line + "'");
    GapRecord r;
    r.p = std::stoll(f[0]);
    r.q = std::stoll(f[1]);
    r.j = std::stoi(f[2]);
    r.e_lo = std::stod(f[3]);
    r.e_hi = std::stod(f[4]);
    r.width = std::stod(f[5]);
    r.sigma_tb = std::stoll(f[6]);
    if (!f[7].empty()) r.sigma_landau = std::stoll(f[7]);
    if (f[8] == "true") {
      r.ambiguous_landau = true;
    } else if (f[8] == "false") {
      r.ambiguous_landau = false;
    } else if (!f[8].empty()) {
      throw std::invalid_argument("gap table CSV: bad ambiguity flag '" + f[8] + "'");
    }
    rows.push_back(r);
  }
  return rows;
}

std::vector<GapRecord> parse_gap_table_json(const std::string& text) {
  std::vector<GapRecord> rows;
  try {
    const auto array = nlohmann::json::parse(text);
    if (!array.is_array()) throw std::invalid_argument("gap table JSON: expected an array");
    for (const auto& o : array) {
      GapRecord r;
      r.p = o.at("p").get<std::int64_t>();
      r.q = o.at("q").get<std::int64_t>();
      r.j = o.at("j").get<int>();
      r.e_lo = o.at("e_lo").get<double>();
      r.e_hi = o.at("e_hi").get<double>();
      r.width = o.at("width").get<double>();
      r.sigma_tb = o.at("sigma_tb").get<std::int64_t>();
      if (!o.at("sigma_landau").is_null()) r.sigma_landau = o.at("sigma_landau").get<std::int64_t>();
      if (!o.at("ambiguous_landau").is_null()) r.ambiguous_landau = o.at("ambiguous_landau").get<bool>();
      rows.push_back(r);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("gap table JSON: ") + e.what());
  }
  return rows;
}

}  // namespace hofstadter
