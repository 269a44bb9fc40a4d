#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pexc/whitney.hpp"

namespace pexc {

inline constexpr int kTableCacheVersion = 1;

// Cache file layout:
//
//   # whitney-table version=1 method=<method>
//   n,k,W
//   4,0,1
//   4,1,3
//   ...
//
// One (n, k, W) triple per line, W as a decimal string. A file may hold
// several rows; all share the method in the header.

void write_table_cache(std::ostream& out, const std::vector<WhitneyTable>& tables);
void write_table_cache(std::ostream& out, const WhitneyTable& table);

/// Throws std::runtime_error on a malformed header, wrong version, bad line,
/// or a row with missing or out-of-order k.
std::vector<WhitneyTable> read_table_cache(std::istream& in);

void save_table_cache(const std::string& path, const std::vector<WhitneyTable>& tables);
std::vector<WhitneyTable> load_table_cache(const std::string& path);

}  // namespace pexc
