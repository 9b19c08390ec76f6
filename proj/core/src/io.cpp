#include "gensmooth/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gensmooth/errors.hpp"
#include "gensmooth/numerics.hpp"
#include "gensmooth/report.hpp"

namespace gensmooth {

namespace {

template <class T>
void put(std::string& out, T v) {
  auto bits = std::bit_cast<std::array<unsigned char, sizeof(T)>>(v);
  if constexpr (std::endian::native == std::endian::big) std::reverse(bits.begin(), bits.end());
  out.append(reinterpret_cast<const char*>(bits.data()), bits.size());
}

template <class T>
T get(const std::string& in, std::size_t& pos) {
  if (pos + sizeof(T) > in.size()) throw ConfigError("grid function", 0, "binary block is truncated");
  std::array<unsigned char, sizeof(T)> bits;
  std::memcpy(bits.data(), in.data() + pos, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bits.begin(), bits.end());
  pos += sizeof(T);
  return std::bit_cast<T>(bits);
}

double parse_number(std::string_view s, int line) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  double v = 0.0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw ConfigError("csv", line, "not a number: '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i)
    if (i == line.size() || line[i] == sep) {
      out.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

std::string encode_binary(const GridFunction& u) {
  const Lattice& lat = u.lattice();
  std::string out;
  out.reserve(16 + 16 * u.size());
  put<std::uint32_t>(out, static_cast<std::uint32_t>(lat.dim));
  put<double>(out, lat.box);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(lat.points));
  for (const auto& v : u.values()) {
    put<double>(out, v.real());
    put<double>(out, v.imag());
  }
  return out;
}

GridFunction decode_binary(const std::string& bytes) {
  std::size_t pos = 0;
  Lattice lat;
  lat.dim = static_cast<int>(get<std::uint32_t>(bytes, pos));
  lat.box = get<double>(bytes, pos);
  lat.points = static_cast<int>(get<std::uint32_t>(bytes, pos));
  try {
    lat.validate();
  } catch (const std::exception& e) {
    throw ConfigError("grid function", 0, e.what());
  }
  std::vector<cplx> v(lat.size());
  for (auto& z : v) {
    const double re = get<double>(bytes, pos);
    const double im = get<double>(bytes, pos);
    z = {re, im};
  }
  if (pos != bytes.size()) throw ConfigError("grid function", 0, "trailing bytes after binary block");
  return GridFunction(lat, std::move(v));
}

std::string encode_csv(const GridFunction& u) {
  const Lattice& lat = u.lattice();
  std::ostringstream os;
  os << (lat.dim == 2 ? "x,y,re,im\n" : "x,re,im\n");
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto x = lat.x(i);
    os << format_double(x[0]) << ',';
    if (lat.dim == 2) os << format_double(x[1]) << ',';
    os << format_double(u[i].real()) << ',' << format_double(u[i].imag()) << '\n';
  }
  return os.str();
}

GridFunction decode_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  int lineno = 0, width = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (lineno == 1 && (line[0] == 'x' || line[0] == 'X')) continue;
    const auto cols = split(line, ',');
    if (width == 0) width = static_cast<int>(cols.size());
    if (cols.size() != static_cast<std::size_t>(width) || (width != 3 && width != 4))
      throw ConfigError("csv", lineno, "expected x[,y],re,im columns");
    std::vector<double> r;
    for (auto c : cols) r.push_back(parse_number(c, lineno));
    rows.push_back(std::move(r));
  }
  if (rows.size() < 2) throw ConfigError("csv", lineno, "too few rows for a lattice");
  Lattice lat;
  lat.dim = width - 2;
  const double side = lat.dim == 1 ? rows.size() : std::sqrt(static_cast<double>(rows.size()));
  lat.points = static_cast<int>(std::lround(side));
  if (static_cast<std::size_t>(lat.points) * (lat.dim == 2 ? lat.points : 1) != rows.size())
    throw ConfigError("csv", lineno, "row count is not M^d");
  const std::size_t step = lat.dim == 2 ? static_cast<std::size_t>(lat.points) : 1;
  const double first = rows[0][0];
  const double h = std::abs(rows[step][0] - first);
  lat.box = h * lat.points;
  try {
    lat.validate();
  } catch (const std::exception& e) {
    throw ConfigError("csv", 0, e.what());
  }
  if (std::abs(first - lat.coord(0)) > 1e-9 * lat.box) throw ConfigError("csv", 2, "first coordinate is not -box/2");
  std::vector<cplx> v;
  for (const auto& r : rows) v.push_back({r[width - 2], r[width - 1]});
  return GridFunction(lat, std::move(v));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path, 0, "cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& bytes) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError(path, 0, "cannot write file");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw ConfigError(path, 0, "short write");
  }
  fs::rename(tmp, target);
}

GridFunction load_grid_function(const std::string& path) {
  const std::string bytes = read_file(path);
  try {
    return ends_with(path, ".csv") ? decode_csv(bytes) : decode_binary(bytes);
  } catch (const ConfigError& e) {
    throw ConfigError(path, e.line(), e.what());
  }
}

void save_grid_function(const GridFunction& u, const std::string& path) {
  write_file_atomic(path, ends_with(path, ".csv") ? encode_csv(u) : encode_binary(u));
}

std::vector<std::pair<double, double>> read_pairs_csv(const std::string& path) {
  std::istringstream is(read_file(path));
  std::string line;
  std::vector<std::pair<double, double>> out;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto cols = split(line, ',');
    if (cols.size() != 2) throw ConfigError(path, lineno, "expected two columns");
    try {
      out.push_back({parse_number(cols[0], lineno), parse_number(cols[1], lineno)});
    } catch (const ConfigError&) {
      if (out.empty() && lineno == 1) continue;
      throw ConfigError(path, lineno, "not a number");
    }
  }
  if (out.empty()) throw ConfigError(path, lineno, "no data rows");
  return out;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string checksum(const std::string& bytes) { return hex64(fnv1a64(bytes)); }

}  // namespace gensmooth
