#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gensmooth {

using NamedValue = std::pair<std::string, double>;

// A per-check data table, written as its own CSV file.
struct Series {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct EstimateRecord {
  std::string name;
  std::string reference;  // the inequality being certified
  std::vector<NamedValue> constants;
  std::vector<NamedValue> exponents;
  double tolerance = 0.0;
  bool pass = false;
  bool mc_dependent = false;
  std::string note;
  Series series;

  double constant(const std::string& key) const;
  double exponent(const std::string& key) const;
};

struct EstimateReport {
  std::string lattice;
  std::string model_hash;
  std::string config_hash;
  std::uint64_t seed = 0;
  std::vector<EstimateRecord> records;
  std::vector<std::string> notes;

  bool all_pass() const;
  const EstimateRecord* find(const std::string& name) const;
  void append(EstimateReport other);

  std::string to_json() const;
  // One row per constant/exponent: record,kind,key,value,tolerance,pass
  std::string to_csv() const;
};

std::string series_csv(const Series& s);

// Shortest round-trip decimal form; "nan"/"inf" spelled out.
std::string format_double(double v);

}  // namespace gensmooth
