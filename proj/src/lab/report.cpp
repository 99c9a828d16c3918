#include "trilab/lab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "trilab/error.hpp"

namespace trilab::lab {

void sort_rows(std::vector<ReportRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    if (a.exp_id != b.exp_id) return a.exp_id < b.exp_id;
    if (a.quantity != b.quantity) return a.quantity < b.quantity;
    return a.bound < b.bound;
  });
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.exp_id) << ',' << csv_field(r.kind) << ',' << r.p << ','
        << csv_field(r.sets) << ',' << csv_field(r.cards) << ',' << csv_field(r.quantity) << ','
        << format_double(r.lhs) << ',' << csv_field(r.bound) << ','
        << (r.rhs ? format_double(*r.rhs) : "") << ','
        << (r.ratio ? format_double(*r.ratio) : "") << ',' << csv_field(r.method) << ','
        << r.seed << ',' << format_double(r.ms) << '\n';
  }
}

namespace {

nlohmann::ordered_json number_or_null(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

std::optional<double> parse_optional(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stod(s);
}

}  // namespace

void write_json(std::ostream& out, const std::vector<ReportRow>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["exp_id"] = r.exp_id;
    o["kind"] = r.kind;
    o["p"] = r.p;
    o["sets"] = r.sets;
    o["cards"] = r.cards;
    o["quantity"] = r.quantity;
    o["lhs"] = number_or_null(r.lhs);
    o["bound"] = r.bound.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.bound);
    o["rhs"] = number_or_null(r.rhs);
    o["ratio"] = number_or_null(r.ratio);
    o["method"] = r.method;
    o["seed"] = r.seed;
    o["ms"] = r.ms;
    arr.push_back(std::move(o));
  }
  out << arr.dump(2) << '\n';
}

std::vector<ReportRow> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kMissingReport, "cannot open report " + path);
  std::string line;
  if (!std::getline(in, line)) return {};
  if (line != kCsvHeader) throw Error(ErrorCode::kConfigError, path + ": unexpected CSV header");
  std::vector<ReportRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 13) {
      throw Error(ErrorCode::kConfigError, path + ":" + std::to_string(lineno) + ": expected 13 fields");
    }
    try {
      ReportRow r;
      r.exp_id = f[0];
      r.kind = f[1];
      r.p = static_cast<std::uint32_t>(std::stoul(f[2]));
      r.sets = f[3];
      r.cards = f[4];
      r.quantity = f[5];
      r.lhs = std::stod(f[6]);
      r.bound = f[7];
      r.rhs = parse_optional(f[8]);
      r.ratio = parse_optional(f[9]);
      r.method = f[10];
      r.seed = std::stoull(f[11]);
      r.ms = std::stod(f[12]);
      rows.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kConfigError, path + ":" + std::to_string(lineno) + ": bad number");
    }
  }
  return rows;
}

std::string join_cards(const std::vector<std::size_t>& cards) {
  std::string s;
  for (std::size_t i = 0; i < cards.size(); ++i) {
    if (i) s += 'x';
    s += std::to_string(cards[i]);
  }
  return s;
}

}  // namespace trilab::lab
