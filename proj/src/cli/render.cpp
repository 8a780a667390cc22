#include "render.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "jh/error.hpp"

namespace jh::cli {

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::kTable;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "dot") return OutputFormat::kDot;
  throw ParseError("unknown format '" + name + "'");
}

nlohmann::json natural_json(Natural n) {
  if (n <= static_cast<Natural>(UINT64_MAX)) return static_cast<std::uint64_t>(n);
  return to_string(n);
}

namespace {

std::string fixed(double d, int places) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, d);
  std::string s = buf;
  // Drop the sign of values that round to zero.
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string shown(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::kNull: return "n/a";
    case Cell::Kind::kInteger: return to_string(c.integer);
    case Cell::Kind::kReal: return fixed(c.real, 4);
    case Cell::Kind::kCents: return fixed(c.real, 2);
    case Cell::Kind::kText: return c.text;
  }
  return {};
}

// Shortest text that reads back to the same double.
std::string exact(double d) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, res.ptr);
}

std::string csv_field(const Cell& c) {
  std::string s;
  switch (c.kind) {
    case Cell::Kind::kNull: return "";
    case Cell::Kind::kInteger: return to_string(c.integer);
    case Cell::Kind::kReal:
    case Cell::Kind::kCents: return exact(c.real);
    case Cell::Kind::kText: s = c.text; break;
  }
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

nlohmann::json cell_json(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::kNull: return nullptr;
    case Cell::Kind::kInteger: return natural_json(c.integer);
    case Cell::Kind::kReal:
    case Cell::Kind::kCents: return c.real;
    case Cell::Kind::kText: return c.text;
  }
  return nullptr;
}

// Display width in code points, so the em dash placeholder lines up.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
}

void pad(std::ostringstream& os, const std::string& s, std::size_t w) {
  os << s;
  for (std::size_t i = width(s); i < w; ++i) os << ' ';
}

}  // namespace

std::string render_table(const Document& doc) {
  if (doc.raw_text) return *doc.raw_text;
  std::ostringstream os;
  bool first = true;
  for (const auto& sec : doc.sections) {
    if (!first) os << '\n';
    first = false;
    if (doc.sections.size() > 1) os << "# " << sec.name << '\n';
    if (sec.record) {
      std::size_t w = 0;
      for (const auto& c : sec.columns) w = std::max(w, width(c));
      for (const auto& row : sec.rows) {
        for (std::size_t i = 0; i < sec.columns.size(); ++i) {
          pad(os, sec.columns[i], w);
          os << "  " << shown(row[i]) << '\n';
        }
      }
      continue;
    }
    std::vector<std::size_t> w(sec.columns.size());
    std::vector<std::vector<std::string>> text;
    for (std::size_t i = 0; i < sec.columns.size(); ++i) w[i] = width(sec.columns[i]);
    for (const auto& row : sec.rows) {
      auto& t = text.emplace_back();
      for (std::size_t i = 0; i < row.size(); ++i) {
        t.push_back(shown(row[i]));
        w[i] = std::max(w[i], width(t.back()));
      }
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i + 1 == cells.size()) {
          os << cells[i];
        } else {
          pad(os, cells[i], w[i]);
          os << "  ";
        }
      }
      os << '\n';
    };
    line(sec.columns);
    for (const auto& t : text) line(t);
  }
  return os.str();
}

std::string render_csv(const Document& doc) {
  if (doc.raw_text) return *doc.raw_text;
  std::ostringstream os;
  bool first = true;
  for (const auto& sec : doc.sections) {
    if (!first) os << "\r\n";
    first = false;
    for (std::size_t i = 0; i < sec.columns.size(); ++i) {
      os << (i ? "," : "") << csv_field(Cell::of(sec.columns[i]));
    }
    os << "\r\n";
    for (const auto& row : sec.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
      os << "\r\n";
    }
  }
  return os.str();
}

std::string render_json(const Document& doc) {
  nlohmann::json j;
  j["command"] = doc.command;
  j["inputs"] = doc.inputs;
  if (doc.raw_results) {
    j["results"] = *doc.raw_results;
  } else {
    auto section_json = [](const Section& sec) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& row : sec.rows) {
        nlohmann::json o = nlohmann::json::object();
        for (std::size_t i = 0; i < sec.columns.size(); ++i) o[sec.columns[i]] = cell_json(row[i]);
        rows.push_back(std::move(o));
      }
      if (sec.record) return rows.empty() ? nlohmann::json(nullptr) : rows.front();
      return rows;
    };
    if (doc.sections.size() == 1) {
      j["results"] = section_json(doc.sections.front());
    } else {
      j["results"] = nlohmann::json::object();
      for (const auto& sec : doc.sections) j["results"][sec.name] = section_json(sec);
    }
  }
  if (!doc.notes.empty()) j["diagnostics"] = doc.notes;
  return j.dump(2) + "\n";
}

}  // namespace jh::cli
