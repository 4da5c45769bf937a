#pragma once

// Command-line front end. run() takes the arguments after the program name
// and writes to the given streams, so it can be driven in-process.
//
// Exit codes: 0 success, 1 domain error (irregular number, no finite
// solution, failed verification), 2 usage or notation error, 3 I/O error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sexa/core.hpp"
#include "sexa/regular.hpp"
#include "sexa/tables.hpp"
#include "sexa/translit.hpp"

namespace sexa::cli {

enum ExitCode : int { kOk = 0, kDomain = 1, kUsage = 2, kIo = 3 };

/// Raised for usage problems found after CLI11 has accepted the arguments.
class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

namespace detail {

// A ParseError tagged with the argument it came from.
class ArgumentError : public Error {
 public:
  ArgumentError(const std::string& arg, const ParseError& e)
      : Error("\"" + arg + "\": " + e.what()) {}
};

inline Transliteration read_arg(const std::string& text) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ArgumentError(text, e);
  }
}

inline std::string join_factors(const std::vector<BigInt>& factors) {
  std::string out;
  for (const BigInt& f : factors) {
    if (!out.empty()) out += "·";
    out += f.str();
  }
  return out;
}

inline std::string explain_residue(const BigInt& residue) {
  auto factors = small_prime_factors(residue);
  std::string out = "residue " + residue.str();
  if (factors.size() > 1) out += " = " + join_factors(factors);
  return out;
}

inline void cmd_parse(const std::string& text, bool floating, bool absolute, std::ostream& out) {
  Transliteration t = read_arg(text);
  if (!floating && !absolute) {
    if (!t.semicolon_index) {
      throw UsageError("\"" + text + "\" has no semicolon; pass --floating or --absolute");
    }
    absolute = true;
  }
  if (absolute) {
    SexNumber x = to_absolute(t);
    out << "canonical: " << format(x) << '\n'
        << "mantissa: " << x.mantissa() << '\n'
        << "exponent: " << x.exponent() << '\n'
        << "#RESULT parse absolute " << format(x) << ' ' << x.mantissa() << ' ' << x.exponent()
        << '\n';
  } else {
    FloatingSex f = to_floating(t);
    out << "canonical: " << format(f) << '\n'
        << "mantissa: " << f.mantissa() << '\n'
        << "exponent: (floating)\n"
        << "#RESULT parse floating " << format(f) << ' ' << f.mantissa() << '\n';
  }
}

inline void cmd_recip(const std::string& text, std::ostream& out) {
  SexNumber x = to_absolute(read_arg(text));
  if (x.is_zero()) throw DomainError("0 has no reciprocal");
  try {
    SexNumber igi = reciprocal(x);
    out << "floating: " << format(to_floating(igi)) << '\n'
        << "anchored: " << format(igi) << '\n'
        << "#RESULT recip " << format(to_floating(igi)) << ' ' << format(igi) << '\n';
  } catch (const IrregularError& e) {
    throw DomainError("reciprocal of " + text + " is not obtained: " + text + " = " +
                      join_factors(small_prime_factors(e.mantissa())) + ", irregular " +
                      explain_residue(e.residue()));
  }
}

inline void cmd_mul(const std::string& m, const std::string& n, std::ostream& out) {
  SexNumber product = multiply(to_absolute(read_arg(m)), to_absolute(read_arg(n)));
  out << format(product) << '\n' << "#RESULT mul " << format(product) << '\n';
}

inline void cmd_solve(const std::string& a, const std::string& b, std::ostream& out) {
  SexNumber divisor = to_absolute(read_arg(a));
  SexNumber target = to_absolute(read_arg(b));
  try {
    SexNumber x = solve_linear(divisor, target);
    out << format(x) << '\n' << "#RESULT solve " << format(x) << '\n';
  } catch (const NoFiniteSolution& e) {
    throw DomainError("no finite solution of " + a + " · x = " + b +
                      ": reduced denominator has " + explain_residue(e.residue()));
  }
}

inline void cmd_verify(const std::string& path, const std::string& mode, std::ostream& out,
                       int& status) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  auto rows = read_tsv(in);
  if (in.bad()) throw IoError("error reading " + path);

  VerifyMode vm = mode == "doubling" ? VerifyMode::doubling : VerifyMode::pairs;
  VerificationReport report = verify_table(rows, vm);
  for (const Finding& f : report.findings) {
    if (f.next_row) out << "rows " << f.row << '-' << *f.next_row;
    else out << "row " << f.row;
    out << ": " << to_string(f.kind);
    if (!f.detail.empty()) out << ": " << f.detail;
    out << '\n';
  }
  out << "summary: " << rows.size() << " rows, " << report.bad_count() << " bad";
  for (FindingKind k : {FindingKind::pair_ok, FindingKind::pair_bad, FindingKind::doubling_ok,
                        FindingKind::doubling_bad, FindingKind::halving_ok,
                        FindingKind::halving_bad, FindingKind::parse_error}) {
    out << ", " << to_string(k) << ' ' << report.count(k);
  }
  out << '\n'
      << "#RESULT verify " << (report.ok() ? "ok" : "bad") << ' ' << report.bad_count() << '\n';
  status = report.ok() ? kOk : kDomain;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact sexagesimal arithmetic and reciprocal tables", "sexa"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string output_path;
  app.add_option("-o,--output", output_path, "Write results to FILE instead of standard output");

  std::string text, lhs, rhs, seed_text, file, mode = "pairs";
  bool floating = false, absolute = false;
  std::uint64_t rows = 0, limit = 0;
  std::int64_t anchor_exponent = 0;

  auto* parse_cmd = app.add_subcommand("parse", "Parse a number and report its canonical form");
  parse_cmd->add_option("text", text, "Number in transliteration, e.g. 10,12;45")->required();
  auto* floating_flag = parse_cmd->add_flag("--floating", floating, "Ignore place value");
  auto* absolute_flag =
      parse_cmd->add_flag("--absolute", absolute, "Read with place value (integer if no ;)");
  floating_flag->excludes(absolute_flag);

  auto* recip_cmd = app.add_subcommand("recip", "Reciprocal of a regular number");
  recip_cmd->add_option("text", text, "Number")->required();

  auto* mul_cmd = app.add_subcommand("mul", "Carry the multiplicand multiplier times");
  mul_cmd->add_option("multiplicand", lhs)->required();
  mul_cmd->add_option("multiplier", rhs)->required();

  auto* solve_cmd = app.add_subcommand("solve", "Find x with a · x = b");
  solve_cmd->add_option("a", lhs)->required();
  solve_cmd->add_option("b", rhs)->required();

  auto* table_cmd = app.add_subcommand("table", "Generate a reciprocal table");
  table_cmd->require_subcommand(1, 1);
  table_cmd->fallthrough();
  auto* double_cmd = table_cmd->add_subcommand("double", "Doubling table with halved reciprocals");
  double_cmd->fallthrough();
  double_cmd->add_option("--seed", seed_text, "Regular seed value")->required();
  double_cmd->add_option("--rows", rows, "Number of rows")
      ->required()
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1'000'000}));
  double_cmd->add_option("--anchor", anchor_exponent,
                         "Power of 60 the seed is read at (default 0)");
  auto* standard_cmd = table_cmd->add_subcommand("standard", "All regular n in [2, limit]");
  standard_cmd->fallthrough();
  standard_cmd->add_option("--limit", limit, "Largest n")
      ->required()
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1'000'000'000'000}));

  auto* verify_cmd = app.add_subcommand("verify", "Check a table file");
  verify_cmd->add_option("file", file, "Table file")->required();
  verify_cmd->add_option("--mode", mode, "pairs or doubling")
      ->check(CLI::IsMember({"pairs", "doubling"}));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  std::ostringstream buffer;
  int status = kOk;
  try {
    if (parse_cmd->parsed()) {
      detail::cmd_parse(text, floating, absolute, buffer);
    } else if (recip_cmd->parsed()) {
      detail::cmd_recip(text, buffer);
    } else if (mul_cmd->parsed()) {
      detail::cmd_mul(lhs, rhs, buffer);
    } else if (solve_cmd->parsed()) {
      detail::cmd_solve(lhs, rhs, buffer);
    } else if (double_cmd->parsed()) {
      FloatingSex seed = to_floating(detail::read_arg(seed_text));
      write_tsv(buffer, generate_doubling(seed, rows, anchor_exponent).rows);
    } else if (standard_cmd->parsed()) {
      write_tsv(buffer, standard_rows(limit));
    } else if (verify_cmd->parsed()) {
      detail::cmd_verify(file, mode, buffer, status);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const detail::ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }

  if (output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file_out(output_path, std::ios::binary);
    file_out << buffer.str();
    if (!file_out) {
      err << "error: cannot write " << output_path << '\n';
      return kIo;
    }
  }
  return status;
}

}  // namespace sexa::cli
