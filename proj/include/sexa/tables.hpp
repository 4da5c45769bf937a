#pragma once

// Reciprocal tables: doubling chains with halved reciprocals, standard tables
// of regular numbers, and structural verification of transcribed tables.
//
// Table files are UTF-8 text, one row per LF-terminated line, with three TAB
// separated fields: index, value (floating), reciprocal (anchored).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sexa/core.hpp"
#include "sexa/regular.hpp"
#include "sexa/translit.hpp"

namespace sexa {

struct TableRow {
  std::uint64_t index = 0;
  FloatingSex value;
  SexNumber reciprocal;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct DoublingTable {
  FloatingSex seed;
  std::vector<TableRow> rows;
};

/// Doubles the seed `count - 1` times and halves its reciprocal alongside.
/// The first reciprocal is 1 / (seed * 60^anchor_exponent), so with the
/// default anchor a seed of 10 starts the chain at 10 and 0;6.
inline DoublingTable generate_doubling(const FloatingSex& seed, std::uint64_t count,
                                       std::int64_t anchor_exponent = 0) {
  if (count == 0) throw DomainError("a doubling table needs at least one row");
  SexNumber value = anchor(seed, anchor_exponent);
  SexNumber igi = reciprocal(value);

  DoublingTable table{seed, {}};
  table.rows.reserve(count);
  for (std::uint64_t i = 1; i <= count; ++i) {
    if (i > 1) {
      value = doubled(value);
      igi = halved(igi);
    }
    table.rows.push_back({i, to_floating(value), igi});
  }
  return table;
}

/// Every regular integer in [2, limit], ascending.
inline std::vector<std::uint64_t> regular_integers(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p2 = 1; p2 <= limit; p2 *= 2) {
    for (std::uint64_t p3 = p2; p3 <= limit; p3 *= 3) {
      for (std::uint64_t p5 = p3; p5 <= limit; p5 *= 5) {
        if (p5 >= 2) out.push_back(p5);
        if (p5 > limit / 5) break;
      }
      if (p3 > limit / 3) break;
    }
    if (p2 > limit / 2) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Reciprocal pairs for every regular n with 2 <= n <= limit. Irregular n
/// are left out, as on the tablets.
inline std::vector<ReciprocalPair> generate_standard(std::uint64_t limit) {
  if (limit < 2) throw DomainError("a standard table needs limit >= 2");
  std::vector<ReciprocalPair> out;
  for (std::uint64_t n : regular_integers(limit)) {
    out.push_back(reciprocal_pair(FloatingSex::from_mantissa(n)));
  }
  return out;
}

/// The standard table as file rows: the index is n itself and the
/// reciprocal is 1/n exactly.
inline std::vector<TableRow> standard_rows(std::uint64_t limit) {
  if (limit < 2) throw DomainError("a standard table needs limit >= 2");
  std::vector<TableRow> out;
  for (std::uint64_t n : regular_integers(limit)) {
    SexNumber value = SexNumber::integer(n);
    out.push_back({n, to_floating(value), reciprocal(value)});
  }
  return out;
}

inline void write_tsv(std::ostream& os, const std::vector<TableRow>& rows) {
  for (const TableRow& row : rows) {
    os << row.index << '\t' << format(row.value) << '\t' << format(row.reciprocal) << '\n';
  }
}

// ---------------------------------------------------------------------------
// Verification

/// One row as written, before any interpretation.
struct TextRow {
  std::string index;
  std::string value;
  std::string reciprocal;
  /// Set when the line itself could not be split into three fields.
  std::optional<std::string> malformed;
};

/// Splits table text into rows. Never throws on content; a line without
/// exactly three fields becomes a malformed row.
inline std::vector<TextRow> read_tsv(std::istream& is) {
  std::vector<TextRow> rows;
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    TextRow row;
    if (fields.size() == 3) {
      row.index = std::move(fields[0]);
      row.value = std::move(fields[1]);
      row.reciprocal = std::move(fields[2]);
    } else {
      row.index = fields[0];
      row.malformed = "expected 3 tab-separated fields, found " + std::to_string(fields.size());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

enum class VerifyMode { pairs, doubling };

enum class FindingKind {
  pair_ok,
  pair_bad,
  doubling_ok,
  doubling_bad,
  halving_ok,
  halving_bad,
  parse_error,
};

inline std::string_view to_string(FindingKind kind) {
  switch (kind) {
    case FindingKind::pair_ok: return "PAIR_OK";
    case FindingKind::pair_bad: return "PAIR_BAD";
    case FindingKind::doubling_ok: return "DOUBLING_OK";
    case FindingKind::doubling_bad: return "DOUBLING_BAD";
    case FindingKind::halving_ok: return "HALVING_OK";
    case FindingKind::halving_bad: return "HALVING_BAD";
    case FindingKind::parse_error: return "PARSE_ERROR";
  }
  return "?";
}

inline bool is_bad(FindingKind kind) {
  return kind == FindingKind::pair_bad || kind == FindingKind::doubling_bad ||
         kind == FindingKind::halving_bad || kind == FindingKind::parse_error;
}

struct Finding {
  FindingKind kind;
  /// 1-based position of the row in the input.
  std::size_t row;
  /// For adjacency findings, the position of the following row.
  std::optional<std::size_t> next_row;
  std::string detail;

  bool concerns(std::size_t position) const {
    return row == position || next_row == position;
  }
};

struct VerificationReport {
  std::vector<Finding> findings;

  std::size_t count(FindingKind kind) const {
    return static_cast<std::size_t>(std::count_if(
        findings.begin(), findings.end(), [kind](const Finding& f) { return f.kind == kind; }));
  }

  std::size_t bad_count() const {
    return static_cast<std::size_t>(std::count_if(
        findings.begin(), findings.end(), [](const Finding& f) { return is_bad(f.kind); }));
  }

  bool ok() const { return bad_count() == 0; }
};

namespace detail {

struct ParsedRow {
  std::optional<FloatingSex> value;
  std::optional<SexNumber> reciprocal;
};

inline bool is_power_of_60(const FloatingSex& f) { return f.mantissa() == 1; }

inline ParsedRow parse_row(const TextRow& text, std::size_t position,
                           std::vector<Finding>& findings) {
  ParsedRow parsed;
  auto fail = [&](const std::string& what) {
    findings.push_back({FindingKind::parse_error, position, std::nullopt, what});
  };
  if (text.malformed) {
    fail(*text.malformed);
    return parsed;
  }
  bool index_ok = !text.index.empty() && text.index.size() <= 19 &&
                  std::all_of(text.index.begin(), text.index.end(), is_decimal) &&
                  text.index != "0" && text.index[0] != '0';
  if (!index_ok) fail("index: \"" + text.index + "\" is not a positive integer");
  try {
    parsed.value = to_floating(parse(text.value));
  } catch (const Error& e) {
    fail(std::string("value: ") + e.what());
  }
  try {
    parsed.reciprocal = to_absolute(parse(text.reciprocal));
  } catch (const Error& e) {
    fail(std::string("reciprocal: ") + e.what());
  }
  if (!index_ok) return {};
  return parsed;
}

}  // namespace detail

/// Checks each row's pair relation and, in doubling mode, that each value
/// doubles the previous one while its reciprocal halves the previous one.
/// Rows are only examined, never corrected.
inline VerificationReport verify_table(const std::vector<TextRow>& rows,
                                       VerifyMode mode = VerifyMode::pairs) {
  VerificationReport report;
  auto& findings = report.findings;

  std::vector<detail::ParsedRow> parsed;
  parsed.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t position = i + 1;
    parsed.push_back(detail::parse_row(rows[i], position, findings));
    const auto& row = parsed.back();
    if (!row.value || !row.reciprocal) continue;
    if (row.reciprocal->is_zero()) {
      findings.push_back({FindingKind::pair_bad, position, std::nullopt, "reciprocal is zero"});
    } else if (detail::is_power_of_60(*row.value * to_floating(*row.reciprocal))) {
      findings.push_back({FindingKind::pair_ok, position, std::nullopt, {}});
    } else {
      findings.push_back({FindingKind::pair_bad, position, std::nullopt,
                          format(*row.value) + " times " + rows[i].reciprocal +
                              " is not a power of 60"});
    }
  }

  if (mode != VerifyMode::doubling) return report;

  for (std::size_t i = 0; i + 1 < parsed.size(); ++i) {
    const auto& cur = parsed[i];
    const auto& next = parsed[i + 1];
    std::size_t position = i + 1;
    if (cur.value && next.value) {
      FloatingSex expected = *cur.value * FloatingSex::from_mantissa(2);
      if (expected == *next.value) {
        findings.push_back({FindingKind::doubling_ok, position, position + 1, {}});
      } else {
        findings.push_back({FindingKind::doubling_bad, position, position + 1,
                            "expected " + format(expected) + ", found " + rows[i + 1].value});
      }
    }
    if (cur.reciprocal && next.reciprocal) {
      SexNumber expected = halved(*cur.reciprocal);
      if (expected == *next.reciprocal) {
        findings.push_back({FindingKind::halving_ok, position, position + 1, {}});
      } else {
        findings.push_back({FindingKind::halving_bad, position, position + 1,
                            "expected " + format(expected) + ", found " + rows[i + 1].reciprocal});
      }
    }
  }
  return report;
}

}  // namespace sexa
