#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rgasym/errors.hpp"
#include "rgasym/exact_counts.hpp"
#include "rgasym/rational.hpp"

namespace rgasym {

/// Parsed b-file: index -> value, in file order of indices.
using BFile = std::map<long, Integer>;

/// Lines "n a(n)"; blank lines and '#' comments are skipped. If an offset is
/// declared, the first index must equal it.
inline BFile parse_bfile(std::istream& in, std::optional<long> offset = std::nullopt) {
  BFile out;
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ss(line);
    std::string index_text;
    std::string value_text;
    std::string extra;
    if (!(ss >> index_text >> value_text) || (ss >> extra)) throw ParseError(lineno, "expected two integers");
    long index = 0;
    try {
      std::size_t used = 0;
      index = std::stol(index_text, &used);
      if (used != index_text.size()) throw ParseError(lineno, "bad index '" + index_text + "'");
    } catch (const std::logic_error&) {
      throw ParseError(lineno, "bad index '" + index_text + "'");
    }
    Integer value;
    if (value_text.empty() || value_text[0] == '+' || value.set_str(value_text, 10) != 0) {
      throw ParseError(lineno, "bad value '" + value_text + "'");
    }
    if (first && offset && *offset != index) {
      throw OffsetMismatch("declared offset " + std::to_string(*offset) + " but first index is " +
                           std::to_string(index));
    }
    if (!first && index != out.rbegin()->first + 1) throw ParseError(lineno, "indices must be consecutive");
    first = false;
    out.emplace(index, value);
  }
  return out;
}

inline BFile load_bfile(const std::filesystem::path& path, std::optional<long> offset = std::nullopt) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open b-file " + path.string());
  return parse_bfile(in, offset);
}

inline void write_bfile(std::ostream& out, const std::vector<std::string>& comments, long offset,
                        const std::vector<Integer>& values) {
  for (const auto& c : comments) out << "# " << c << '\n';
  for (std::size_t i = 0; i < values.size(); ++i) out << offset + static_cast<long>(i) << ' ' << values[i] << '\n';
}

/// Attaches a parsed b-file to the table under (k, connected).
inline void ingest(CountTable& table, int k, bool connected, const BFile& file) {
  for (const auto& [n, value] : file) table.insert(k, static_cast<int>(n), value, Provenance::ingested, connected);
}

inline std::filesystem::path bfile_path(const std::filesystem::path& data_dir, int k, bool connected) {
  return data_dir / "counts" / ((connected ? "connected_k" : "regular_k") + std::to_string(k) + ".txt");
}

/// Makes sure (k, n, connected) is in the table for n = 0..nmax: shipped
/// b-files first, then the residual-degree DP (regular) or the log of the
/// regular EGF (connected).
inline void ensure_counts(CountTable& table, const std::filesystem::path& data_dir, int k, int nmax, bool connected) {
  auto complete = [&] {
    for (int n = 0; n <= nmax; ++n) {
      if (!table.contains(k, n, connected)) return false;
    }
    return true;
  };
  if (complete()) return;
  auto path = bfile_path(data_dir, k, connected);
  if (!data_dir.empty() && std::filesystem::exists(path)) ingest(table, k, connected, load_bfile(path, 0));
  if (complete()) return;
  if (connected) {
    ensure_counts(table, data_dir, k, nmax, false);
    auto c = connected_counts(k, nmax, table);
    for (int n = 0; n <= nmax; ++n) {
      if (!table.contains(k, n, true)) {
        table.insert(k, n, c[static_cast<std::size_t>(n)], table.entry(k, n).provenance, true);
      }
    }
    return;
  }
  auto dp = count_degree_dp(k, nmax);
  for (int n = 0; n <= nmax; ++n) {
    if (!table.contains(k, n)) table.insert(k, n, dp[static_cast<std::size_t>(n)], Provenance::degree_dp);
  }
}

}  // namespace rgasym
