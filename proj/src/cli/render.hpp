#pragma once

// A tiny document model shared by every command, so that table, CSV and JSON
// renderings are produced from the same values.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jh/chord.hpp"

namespace jh::cli {

enum class OutputFormat { kTable, kJson, kCsv, kDot };

OutputFormat parse_format(const std::string& name);

struct Cell {
  enum class Kind { kNull, kInteger, kReal, kCents, kText };
  Kind kind = Kind::kNull;
  Natural integer = 0;
  double real = 0.0;
  std::string text;

  static Cell null() { return {}; }
  static Cell of(Natural n) { return {Kind::kInteger, n, 0.0, {}}; }
  static Cell of(double d) { return {Kind::kReal, 0, d, {}}; }
  static Cell cents(double d) { return {Kind::kCents, 0, d, {}}; }
  static Cell of(std::string s) { return {Kind::kText, 0, 0.0, std::move(s)}; }
  static Cell of(std::optional<double> d) { return d ? of(*d) : null(); }
};

struct Section {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  bool record = false;  // a single row shown as key / value pairs

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

struct Document {
  Document() = default;
  explicit Document(std::string name) : command(std::move(name)) {}

  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<Section> sections;
  std::vector<std::string> notes;  // diagnostics shown beside the results
  std::optional<nlohmann::json> raw_results;  // replaces sections in JSON
  std::optional<std::string> raw_text;        // replaces everything in text formats
};

nlohmann::json natural_json(Natural n);

std::string render_table(const Document& doc);
std::string render_csv(const Document& doc);
std::string render_json(const Document& doc);

}  // namespace jh::cli
