#pragma once

// Deterministic tabular output: CSV with a provenance header, a config hash,
// atomic file writes and an order-preserving parallel sweep.

#include <cstddef>
#include <filesystem>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace entrogeo::report {

struct Column {
  std::string name;
  std::string formula;  // emitted as a comment line for traceability
};

struct Table {
  std::string command;
  std::vector<Column> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> notes;
  // Optional leading text column; when named, row_labels[i] prefixes rows[i].
  std::string label_column;
  std::vector<std::string> row_labels;
};

// 17 significant digits, '.' decimal separator.
std::string format_number(double value);

// 64-bit FNV-1a of the canonical config string, as 16 hex digits.
std::string config_hash(std::string_view canonical_config);

// First line: "# entrogeo v<version> <command> <hash>", then one comment per
// column formula and per note, then the header row and data rows.
void write_csv(std::ostream& out, const Table& table, std::string_view hash);

// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

// Worker count for sweeps: ENTROGEO_THREADS when set to a positive integer,
// otherwise the hardware concurrency.
std::size_t sweep_threads();

// Runs body(i) for i in [0, n) on up to sweep_threads() workers. The first
// exception thrown by any worker is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace entrogeo::report
