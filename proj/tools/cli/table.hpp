#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace tmh::cli {

enum class Format { Csv, Json };

using Cell = std::variant<std::int64_t, std::uint64_t, double, std::string>;

/// Row-oriented output. CSV rows are streamed as they arrive; JSON rows are
/// collected into an array of objects keyed by column name and written by
/// finish().
class TableWriter {
 public:
  TableWriter(std::ostream& out, Format format, std::vector<std::string> columns);
  TableWriter(const TableWriter&) = delete;
  TableWriter& operator=(const TableWriter&) = delete;

  void row(std::initializer_list<Cell> cells);
  void finish();

 private:
  std::ostream& out_;
  Format format_;
  std::vector<std::string> columns_;
  nlohmann::ordered_json rows_ = nlohmann::ordered_json::array();
  bool finished_ = false;
};

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

}  // namespace tmh::cli
