#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ucs/canonical.hpp"
#include "ucs/decisive_weight.hpp"
#include "ucs/dichotomy.hpp"
#include "ucs/fixtures.hpp"
#include "ucs/propagation.hpp"
#include "ucs/set_system.hpp"

namespace ucs::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Set-system text format: one `ground:` line, then `member:` lines; '#'
// starts a comment; the empty member is written as a bare `member:`.
SetSystem read_set_system(std::istream& in);
SetSystem read_set_system_string(const std::string& text);
void write_set_system(std::ostream& out, const SetSystem& s);

// `elements: <n>` followed by n rows of n 0-based indices.
MultiplicationTable read_table(std::istream& in);
void write_table(std::ostream& out, const MultiplicationTable& t);

// `weight: <label> ... = <rational>` per member; totality required.
LogWeight read_weight(std::istream& in, const SetSystem& s);
void write_weight(std::ostream& out, const LogWeight& w);

// `block: <label> ...` per level.
Spread read_spread(std::istream& in, const GroundSet& ground);
void write_spread(std::ostream& out, const Spread& spread);

// `class: <label> ...` per class; must partition the ground set.
Colouring read_colouring(std::istream& in, const GroundSet& ground);
void write_colouring(std::ostream& out, const Colouring& colouring);

enum class Format { table, csv, keyvalue };
Format parse_format(const std::string& name);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};
void emit(std::ostream& out, const Table& table, Format format);

std::string to_text(const VValue& v);
Table level_one_table(const std::vector<LevelOneRow>& rows);
Table tort_failure_table(const std::vector<TortFailureRow>& rows);
std::string dichotomy_record(const DichotomyResult& result, const SetSystem& s,
                             const Spread& spread);

}  // namespace ucs::io
