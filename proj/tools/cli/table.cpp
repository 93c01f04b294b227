#include "table.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace tmh::cli {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return {buf, end};
}

namespace {

std::string csv_field(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          if (v.find_first_of(",\"\n") == std::string::npos) return v;
          std::string quoted = "\"";
          for (char c : v) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
          return quoted + "\"";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

nlohmann::ordered_json json_value(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        // JSON has no inf/nan; those go out as strings.
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return format_double(v);
        }
        return v;
      },
      cell);
}

}  // namespace

TableWriter::TableWriter(std::ostream& out, Format format, std::vector<std::string> columns)
    : out_(out), format_(format), columns_(std::move(columns)) {
  if (format_ == Format::Csv) {
    for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
    out_ << '\n';
  }
}

void TableWriter::row(std::initializer_list<Cell> cells) {
  if (cells.size() != columns_.size()) throw std::logic_error("row width does not match the header");
  if (format_ == Format::Csv) {
    std::size_t i = 0;
    for (const Cell& c : cells) out_ << (i++ ? "," : "") << csv_field(c);
    out_ << '\n';
    return;
  }
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  std::size_t i = 0;
  for (const Cell& c : cells) obj[columns_[i++]] = json_value(c);
  rows_.push_back(std::move(obj));
}

void TableWriter::finish() {
  if (finished_) return;
  finished_ = true;
  if (format_ == Format::Json) out_ << rows_.dump(2) << '\n';
  out_.flush();
}

}  // namespace tmh::cli
