#include "ucs/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace ucs::io {

namespace {

struct Line {
  std::size_t number;
  std::string keyword;               // text before ':'
  std::vector<std::string> tokens;   // whitespace-split text after ':'
};

// Strips comments and blank lines, splits `keyword: tokens...`.
std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::size_t first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::size_t colon = raw.find(':');
    if (colon == std::string::npos)
      throw ParseError(number, "expected 'keyword: ...'");
    Line line;
    line.number = number;
    line.keyword = raw.substr(first, colon - first);
    while (!line.keyword.empty() && (line.keyword.back() == ' ' || line.keyword.back() == '\t'))
      line.keyword.pop_back();
    std::istringstream rest(raw.substr(colon + 1));
    std::string tok;
    while (rest >> tok) line.tokens.push_back(tok);
    lines.push_back(std::move(line));
  }
  return lines;
}

MemberSet member_from_tokens(const Line& line, const GroundSet& ground,
                             std::size_t skip_trailing = 0) {
  MemberSet m(ground.size());
  for (std::size_t i = 0; i + skip_trailing < line.tokens.size(); ++i) {
    const std::string& label = line.tokens[i];
    if (!ground.has_label(label))
      throw ParseError(line.number, "unknown label '" + label + "'");
    std::size_t idx = ground.index_of(label);
    if (m.contains(idx)) throw ParseError(line.number, "repeated label '" + label + "'");
    m.add(idx);
  }
  return m;
}

}  // namespace

SetSystem read_set_system(std::istream& in) {
  auto lines = read_lines(in);
  if (lines.empty()) throw ParseError(1, "empty set-system file");
  if (lines.front().keyword != "ground")
    throw ParseError(lines.front().number, "expected 'ground:' first");
  if (lines.front().tokens.empty())
    throw ParseError(lines.front().number, "ground set needs at least one label");
  GroundSet ground;
  try {
    ground = GroundSet{lines.front().tokens};
  } catch (const std::invalid_argument& e) {
    throw ParseError(lines.front().number, e.what());
  }

  std::vector<MemberSet> members;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].keyword != "member")
      throw ParseError(lines[i].number, "expected 'member:' line");
    MemberSet m = member_from_tokens(lines[i], ground);
    if (std::find(members.begin(), members.end(), m) != members.end())
      throw ParseError(lines[i].number, "duplicate member");
    members.push_back(std::move(m));
  }
  return SetSystem(ground, std::move(members), false);
}

SetSystem read_set_system_string(const std::string& text) {
  std::istringstream in(text);
  return read_set_system(in);
}

void write_set_system(std::ostream& out, const SetSystem& s) {
  out << "ground:";
  for (const auto& l : s.ground().labels()) out << ' ' << l;
  out << '\n';
  for (const auto& m : s.members()) {
    out << "member:";
    m.for_each_index([&](std::size_t i) { out << ' ' << s.ground().label(i); });
    out << '\n';
  }
}

MultiplicationTable read_table(std::istream& in) {
  std::string raw;
  std::size_t number = 0;
  MultiplicationTable t;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++number;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    if (!have_header) {
      std::string kw;
      if (!(line >> kw)) continue;
      if (kw != "elements:") throw ParseError(number, "expected 'elements: <n>'");
      if (!(line >> t.n) || t.n == 0) throw ParseError(number, "bad element count");
      have_header = true;
      continue;
    }
    std::vector<std::size_t> row;
    std::size_t v;
    while (line >> v) row.push_back(v);
    if (row.empty()) continue;
    if (row.size() != t.n) throw ParseError(number, "expected " + std::to_string(t.n) + " entries");
    t.product.push_back(std::move(row));
  }
  if (!have_header) throw ParseError(number ? number : 1, "missing 'elements:' header");
  if (t.product.size() != t.n)
    throw ParseError(number, "expected " + std::to_string(t.n) + " table rows");
  try {
    t.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(number, e.what());
  }
  return t;
}

void write_table(std::ostream& out, const MultiplicationTable& t) {
  out << "elements: " << t.n << '\n';
  for (const auto& row : t.product) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
}

LogWeight read_weight(std::istream& in, const SetSystem& s) {
  auto lines = read_lines(in);
  std::vector<Rational> values(s.size());
  std::vector<bool> assigned(s.size(), false);
  for (const auto& line : lines) {
    if (line.keyword != "weight") throw ParseError(line.number, "expected 'weight:' line");
    if (line.tokens.size() < 2 || line.tokens[line.tokens.size() - 2] != "=")
      throw ParseError(line.number, "expected 'weight: <labels> = <value>'");
    MemberSet m = member_from_tokens(line, s.ground(), 2);
    auto idx = s.index_of(m);
    if (!idx) throw ParseError(line.number, "set is not a member of the system");
    if (assigned[*idx]) throw ParseError(line.number, "member weighted twice");
    Rational v;
    try {
      v = Rational::parse(line.tokens.back());
    } catch (const std::invalid_argument& e) {
      throw ParseError(line.number, e.what());
    }
    if (v.negative()) throw ParseError(line.number, "negative weight");
    values[*idx] = v;
    assigned[*idx] = true;
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!assigned[i]) {
      std::ostringstream what;
      what << "missing weight for member:";
      s.member(i).for_each_index([&](std::size_t p) { what << ' ' << s.ground().label(p); });
      throw ParseError(lines.empty() ? 1 : lines.back().number, what.str());
    }
  return LogWeight(s, std::move(values));
}

void write_weight(std::ostream& out, const LogWeight& w) {
  const SetSystem& s = w.system();
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << "weight:";
    s.member(i).for_each_index([&](std::size_t p) { out << ' ' << s.ground().label(p); });
    out << " = " << w.value(i) << '\n';
  }
}

Spread read_spread(std::istream& in, const GroundSet& ground) {
  auto lines = read_lines(in);
  std::vector<MemberSet> blocks;
  for (const auto& line : lines) {
    if (line.keyword != "block") throw ParseError(line.number, "expected 'block:' line");
    MemberSet b = member_from_tokens(line, ground);
    if (b.empty()) throw ParseError(line.number, "empty block");
    blocks.push_back(std::move(b));
  }
  if (blocks.empty()) throw ParseError(1, "spread file has no blocks");
  try {
    return Spread(ground, std::move(blocks), /*allow_irregular=*/true);
  } catch (const std::invalid_argument& e) {
    throw ParseError(lines.back().number, e.what());
  }
}

void write_spread(std::ostream& out, const Spread& spread) {
  for (const auto& b : spread.blocks()) {
    out << "block:";
    b.for_each_index([&](std::size_t i) { out << ' ' << spread.ground().label(i); });
    out << '\n';
  }
}

Colouring read_colouring(std::istream& in, const GroundSet& ground) {
  auto lines = read_lines(in);
  std::vector<MemberSet> classes;
  for (const auto& line : lines) {
    if (line.keyword != "class") throw ParseError(line.number, "expected 'class:' line");
    classes.push_back(member_from_tokens(line, ground));
  }
  if (classes.empty()) throw ParseError(1, "colouring file has no classes");
  try {
    return Colouring(ground, std::move(classes));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lines.back().number, e.what());
  }
}

void write_colouring(std::ostream& out, const Colouring& colouring) {
  for (const auto& c : colouring.classes()) {
    out << "class:";
    c.for_each_index([&](std::size_t i) { out << ' ' << colouring.ground().label(i); });
    out << '\n';
  }
}

Format parse_format(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "csv") return Format::csv;
  if (name == "keyvalue") return Format::keyvalue;
  throw std::invalid_argument("unknown format '" + name + "' (table|csv|keyvalue)");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void emit(std::ostream& out, const Table& table, Format format) {
  switch (format) {
    case Format::csv: {
      for (std::size_t j = 0; j < table.header.size(); ++j)
        out << (j ? "," : "") << csv_field(table.header[j]);
      out << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << csv_field(row[j]);
        out << '\n';
      }
      break;
    }
    case Format::keyvalue: {
      for (std::size_t r = 0; r < table.rows.size(); ++r) {
        for (std::size_t j = 0; j < table.header.size(); ++j)
          out << "row" << r << "." << table.header[j] << ": " << table.rows[r][j] << '\n';
      }
      break;
    }
    case Format::table: {
      std::vector<std::size_t> width(table.header.size());
      for (std::size_t j = 0; j < table.header.size(); ++j) width[j] = table.header[j].size();
      for (const auto& row : table.rows)
        for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
      auto pad = [&](const std::string& s, std::size_t w, bool last) {
        if (last) return s;
        std::string out_s = s;
        out_s.resize(w, ' ');
        return out_s;
      };
      std::size_t cols = table.header.size();
      for (std::size_t j = 0; j < cols; ++j)
        out << (j ? "  " : "") << pad(table.header[j], width[j], j + 1 == cols);
      out << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t j = 0; j < row.size(); ++j)
          out << (j ? "  " : "") << pad(row[j], width[j], j + 1 == row.size());
        out << '\n';
      }
      break;
    }
  }
}

std::string to_text(const VValue& v) { return v.finite ? v.value.str() : "infinite"; }

Table level_one_table(const std::vector<LevelOneRow>& rows) {
  Table t;
  t.header = {"n", "block_size", "lambda_a_ok", "lambda_b", "V_exact", "V_power", "bound", "pass"};
  for (const auto& r : rows) {
    t.rows.push_back({std::to_string(r.n), std::to_string(r.block_size),
                      r.lambda_a_ok ? "yes" : "no", r.lambda_b.str(), to_text(r.v),
                      r.v_power ? to_text(*r.v_power) : "-", r.bound.str(),
                      r.pass ? "pass" : "FAIL"});
  }
  return t;
}

Table tort_failure_table(const std::vector<TortFailureRow>& rows) {
  Table t;
  t.header = {"n", "c0_block", "lambda_x_ok", "lambda_b", "V_exact", "bound", "pass"};
  for (const auto& r : rows) {
    t.rows.push_back({std::to_string(r.n), std::to_string(r.c0_block_count),
                      r.lambda_x_ok ? "yes" : "no", r.lambda_b.str(), to_text(r.v),
                      r.bound.str(), r.pass ? "pass" : "FAIL"});
  }
  return t;
}

namespace {

std::string member_text(const SetSystem& s, std::size_t index) {
  std::string out = "{";
  bool first = true;
  s.member(index).for_each_index([&](std::size_t i) {
    if (!first) out += ' ';
    out += s.ground().label(i);
    first = false;
  });
  out += '}';
  return out;
}

std::string index_list(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

std::string dichotomy_record(const DichotomyResult& result, const SetSystem& s,
                             const Spread& spread) {
  (void)spread;
  std::ostringstream out;
  switch (result.kind) {
    case DichotomyResult::Kind::shatter: out << "kind: shatter\n"; break;
    case DichotomyResult::Kind::decisive: out << "kind: decisive\n"; break;
    case DichotomyResult::Kind::inconclusive: out << "kind: inconclusive\n"; break;
  }
  out << "rounds: " << result.rounds.size() << '\n';
  for (std::size_t i = 0; i < result.rounds.size(); ++i) {
    const auto& r = result.rounds[i];
    out << "round" << i << ".classes: " << r.classes << '\n';
    out << "round" << i << ".window: " << index_list(r.window_blocks) << '\n';
    if (r.halver) out << "round" << i << ".halver: " << member_text(s, *r.halver) << '\n';
  }
  if (result.shatter) {
    const auto& w = *result.shatter;
    out << "shatter.threshold: " << w.threshold << '\n';
    out << "shatter.blocks: " << index_list(w.blocks) << '\n';
    for (std::size_t i = 0; i < w.members.size(); ++i)
      out << "shatter.member" << i << ": " << member_text(s, w.members[i]) << '\n';
    out << "shatter.cell_minima: " << index_list(w.cell_minima) << '\n';
  }
  if (result.decisive) {
    const auto& d = *result.decisive;
    out << "decisive.class: " << d.class_index << '\n';
    out << "decisive.max_statistic: " << d.max_statistic << '\n';
    out << "decisive.blocks: " << index_list(d.blocks) << '\n';
    out << "decisive.statistics: " << index_list(d.statistic) << '\n';
  }
  if (!result.inconclusive_reason.empty())
    out << "inconclusive.reason: " << result.inconclusive_reason << '\n';
  return out.str();
}

}  // namespace ucs::io
