#include "gensmooth/report.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace gensmooth {

namespace {

double lookup(const std::vector<NamedValue>& v, const std::string& key) {
  for (const auto& [k, x] : v)
    if (k == key) return x;
  return std::numeric_limits<double>::quiet_NaN();
}

nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

nlohmann::ordered_json named(const std::vector<NamedValue>& v) {
  auto o = nlohmann::ordered_json::object();
  for (const auto& [k, x] : v) o[k] = number(x);
  return o;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

double EstimateRecord::constant(const std::string& key) const { return lookup(constants, key); }
double EstimateRecord::exponent(const std::string& key) const { return lookup(exponents, key); }

bool EstimateReport::all_pass() const {
  for (const auto& r : records)
    if (!r.pass) return false;
  return true;
}

const EstimateRecord* EstimateReport::find(const std::string& name) const {
  for (const auto& r : records)
    if (r.name == name) return &r;
  return nullptr;
}

void EstimateReport::append(EstimateReport other) {
  for (auto& r : other.records) records.push_back(std::move(r));
  for (auto& n : other.notes) notes.push_back(std::move(n));
}

std::string EstimateReport::to_json() const {
  nlohmann::ordered_json j;
  j["environment"] = {{"lattice", lattice}, {"model_hash", model_hash}, {"config_hash", config_hash}, {"seed", seed}};
  j["all_pass"] = all_pass();
  auto recs = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json o;
    o["name"] = r.name;
    o["reference"] = r.reference;
    o["constants"] = named(r.constants);
    o["exponents"] = named(r.exponents);
    o["tolerance"] = number(r.tolerance);
    o["pass"] = r.pass;
    o["mc_dependent"] = r.mc_dependent;
    if (!r.note.empty()) o["note"] = r.note;
    recs.push_back(std::move(o));
  }
  j["records"] = std::move(recs);
  j["notes"] = notes;
  return j.dump(2) + "\n";
}

std::string EstimateReport::to_csv() const {
  std::ostringstream os;
  os << "record,kind,key,value,tolerance,pass\n";
  for (const auto& r : records) {
    auto emit = [&](const char* kind, const std::vector<NamedValue>& v) {
      for (const auto& [k, x] : v)
        os << csv_field(r.name) << ',' << kind << ',' << csv_field(k) << ',' << format_double(x) << ','
           << format_double(r.tolerance) << ',' << (r.pass ? 1 : 0) << '\n';
    };
    emit("constant", r.constants);
    emit("exponent", r.exponents);
    if (r.constants.empty() && r.exponents.empty())
      os << csv_field(r.name) << ",none,,," << format_double(r.tolerance) << ',' << (r.pass ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string series_csv(const Series& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.columns.size(); ++i) os << (i ? "," : "") << csv_field(s.columns[i]);
  os << '\n';
  for (const auto& row : s.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
    os << '\n';
  }
  return os.str();
}

}  // namespace gensmooth
