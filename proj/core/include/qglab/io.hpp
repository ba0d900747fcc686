#pragma once

#include <string>
#include <string_view>

#include "qglab/hopf.hpp"

namespace qglab {

// JSON quantum-group format:
//   { "dim": n, "labels": [...], "mult": [[[ [re,im], ... ]]], "unit": [[re,im],...],
//     "comult": ..., "counit": ..., "antipode": [[[re,im],...]], "star": ..., "haar": optional }
// Matrices are row-major in the HopfData convention (antipode(k, i) is
// row k, column i). Throws ParseError naming the offending field path.
HopfData parse_quantum_group(std::string_view json_text);
std::string dump_quantum_group(const HopfData& data, int indent = 1);

HopfData load_quantum_group(const std::string& path);
void save_quantum_group(const HopfData& data, const std::string& path);

// 16 hex digits of FNV-1a over the compact serialization.
std::string content_hash(const HopfData& data);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace qglab
