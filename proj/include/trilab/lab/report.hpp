#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace trilab::lab {

inline constexpr const char* kCsvHeader =
    "exp_id,kind,p,sets,cards,quantity,lhs,bound,rhs,ratio,method,seed,ms";

/// One measurement. A row with no bound leaves bound, rhs and ratio empty.
struct ReportRow {
  std::string exp_id;
  std::string kind;
  std::uint32_t p = 0;
  std::string sets;   // set descriptors joined by ';'
  std::string cards;  // cardinalities joined by 'x'
  std::string quantity;
  double lhs = 0.0;
  std::string bound;  // suffixed "!hyp" when the bound's hypotheses fail
  std::optional<double> rhs;
  std::optional<double> ratio;
  std::string method;
  std::uint64_t seed = 0;
  double ms = 0.0;

  /// Row records a check that must hold (exact identity or constant-1 bound).
  bool hard = false;
  bool violated = false;
};

/// Orders by (exp_id, quantity, bound); stable otherwise.
void sort_rows(std::vector<ReportRow>& rows);

std::string format_double(double v);
std::string csv_field(const std::string& s);

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows);
void write_json(std::ostream& out, const std::vector<ReportRow>& rows);

/// Reads a CSV written by write_csv. Throws kMissingReport if the file is
/// absent and kConfigError if it is malformed.
std::vector<ReportRow> read_csv(const std::string& path);

std::string join_cards(const std::vector<std::size_t>& cards);

}  // namespace trilab::lab
