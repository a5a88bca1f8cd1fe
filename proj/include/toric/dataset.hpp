#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

// One variety, given by the primitive generators of its fan.
//
// Text format: records are separated by blank lines. A record starts with
//   id <token> [dim <d>]
// followed by one generator per line as whitespace-separated integers.
// Lines starting with '#' are comments.
struct DatasetRecord {
  std::string id;
  std::size_t dim = 0;
  std::vector<LatticeVector> generators;

  bool operator==(const DatasetRecord&) const = default;
};

struct RecordError {
  std::size_t line = 0;
  std::string id;  // empty if the header itself was unreadable
  std::string message;
};

struct ParsedDataset {
  std::vector<DatasetRecord> records;
  std::vector<RecordError> errors;
};

// Strict parse: throws ParseError (with line number) on the first
// malformed or invalid record, including a repeated id.
std::vector<DatasetRecord> parse_dataset(std::string_view text);

// Collects per-record errors and keeps every record that parses.
ParsedDataset parse_dataset_lenient(std::string_view text);

std::string format_dataset(std::span<const DatasetRecord> records);

std::string read_text_file(const std::filesystem::path& path);

// Directory holding the bundled data files; $TORIC_DATA_DIR overrides the
// build-time location.
std::filesystem::path default_data_dir();

}  // namespace toric
