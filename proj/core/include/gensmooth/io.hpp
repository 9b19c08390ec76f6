#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gensmooth/grid.hpp"

namespace gensmooth {

// Binary layout, little-endian: u32 d, f64 Λ, u32 M, then M^d (re, im) f64 pairs
// in lattice order.
std::string encode_binary(const GridFunction& u);
GridFunction decode_binary(const std::string& bytes);

// Columns x[,y],re,im; the lattice is recovered from the row count and spacing.
std::string encode_csv(const GridFunction& u);
GridFunction decode_csv(const std::string& text);

std::string read_file(const std::string& path);
// Writes through a temporary file in the same directory, then renames.
void write_file_atomic(const std::string& path, const std::string& bytes);

// .csv by extension, binary otherwise.
GridFunction load_grid_function(const std::string& path);
void save_grid_function(const GridFunction& u, const std::string& path);

// Two-column numeric CSV; a non-numeric first line is taken as a header.
std::vector<std::pair<double, double>> read_pairs_csv(const std::string& path);

std::string hex64(std::uint64_t v);
std::string checksum(const std::string& bytes);

}  // namespace gensmooth
