// ucslab: exact experiments on finite union-closed set systems.
//
// Subcommands cover closure/breadth/filter computations, FBP propagation
// values, the canonical spread systems and their weights, the dichotomy
// search, and the bundled verification harnesses. All output is
// deterministic; exit codes: 0 ok, 1 a verified property failed, 2 parse
// error, 3 budget exhausted without a verdict.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ucs/decisive_weight.hpp"
#include "ucs/dichotomy.hpp"
#include "ucs/fixtures.hpp"
#include "ucs/io.hpp"

using namespace ucs;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

struct OutputTarget {
  std::string path;  // empty: stdout

  template <typename F>
  void write(F&& fn) const {
    if (path.empty()) {
      fn(std::cout);
    } else {
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
      fn(out);
    }
  }
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io::ParseError(0, "cannot open '" + path + "'");
  return in;
}

SetSystem load_system(const std::string& path) {
  std::ifstream in = open_input(path);
  return io::read_set_system(in);
}

// Members are given on the command line as whitespace-separated label lists
// (quote the argument); "-" denotes the empty member.
MemberSet parse_member(const std::string& text, const GroundSet& ground) {
  MemberSet m(ground.size());
  if (text == "-") return m;
  std::istringstream in(text);
  std::string token;
  while (in >> token) m.add(ground.index_of(token));
  return m;
}

struct WindowSpec {
  std::string text;
  Window resolve(const Spread& spread) const {
    Window w = Window::full(spread);
    if (text.empty()) return w;
    std::istringstream in(text);
    std::string part;
    std::vector<std::size_t> nums;
    while (std::getline(in, part, ':')) nums.push_back(std::stoul(part));
    if (nums.size() != 3) throw std::invalid_argument("window must be n0:N:t");
    w.first = nums[0];
    w.last = nums[1];
    w.threshold = nums[2];
    if (w.first == 0 || w.last > spread.levels() || w.first > w.last)
      throw std::invalid_argument("window out of range for the spread");
    return w;
  }
};

struct SpreadSource {
  std::string spread_path;
  std::string ground_path;
  std::size_t levels = 0;  // stock spread when set

  Spread resolve() const {
    if (levels > 0) return default_spread(levels);
    if (spread_path.empty()) throw std::invalid_argument("no spread given (use -s or --levels)");
    if (ground_path.empty())
      throw std::invalid_argument("a spread file needs a ground (-i system file)");
    SetSystem ground_carrier = load_system(ground_path);
    std::ifstream in = open_input(spread_path);
    return io::read_spread(in, ground_carrier.ground());
  }
  Spread resolve_against(const GroundSet& ground) const {
    if (levels > 0) return default_spread(levels);
    if (spread_path.empty()) throw std::invalid_argument("no spread given (use -s or --levels)");
    std::ifstream in = open_input(spread_path);
    return io::read_spread(in, ground);
  }
};

void write_member(std::ostream& out, const SetSystem& s, std::size_t index) {
  out << '{';
  bool first = true;
  s.member(index).for_each_index([&](std::size_t p) {
    if (!first) out << ',';
    out << s.ground().label(p);
    first = false;
  });
  out << '}';
}

void emit_breadth(std::ostream& out, const SetSystem& s, const BreadthResult& r) {
  out << "breadth: " << r.value << '\n';
  out << "status: " << (r.exact ? "exact" : "lower-bound") << '\n';
  out << "nodes: " << r.nodes << '\n';
  out << "witness:";
  for (std::size_t i : r.witness) {
    out << ' ';
    write_member(out, s, i);
  }
  out << '\n';
}

void emit_propagation(std::ostream& out, const SetSystem& s, const PropagationReport& r) {
  out << "level: " << r.level << '\n';
  out << "max_v: " << io::to_text(r.max_v) << '\n';
  out << "pairs_examined: " << r.pairs_examined << '\n';
  out << "exhaustive: " << (r.exhaustive ? "yes" : "no") << '\n';
  if (r.witness_z) {
    out << "witness_e:";
    for (std::size_t i : r.witness_e) {
      out << ' ';
      write_member(out, s, i);
    }
    out << '\n';
    out << "witness_z: ";
    write_member(out, s, *r.witness_z);
    out << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact laboratory for finite union-closed set systems"};
  app.require_subcommand(1);

  std::string input_path, weight_path, colouring_path, output_path, format_name = "table";
  SpreadSource spread_src;
  WindowSpec window_spec;
  std::vector<std::string> member_args;
  std::string target_arg;
  std::uint64_t cap_members = ClosureLimits{}.member_cap;
  std::size_t max_subset = PropagationLimits{}.max_subset_size;
  std::uint64_t max_subsets = PropagationLimits{}.max_subsets;
  std::uint64_t node_budget = BreadthLimits{}.node_budget;
  std::string level_arg = "0";
  std::int64_t bound = 0;
  std::size_t depth = 1;
  std::size_t columns = 8;
  std::size_t level_n = 2;
  std::size_t class_index = 0;
  std::string schedule_arg, second_path, map_path;
  bool via_cayley = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", output_path, "output file (default stdout)");
    cmd->add_option("--format", format_name, "table|csv|keyvalue");
  };

  CLI::App* closure_cmd = app.add_subcommand("closure", "union closure of a family");
  closure_cmd->add_option("-i,--input", input_path, "set-system file")->required();
  closure_cmd->add_option("--cap-members", cap_members, "closure member cap");
  add_common(closure_cmd);

  CLI::App* breadth_cmd = app.add_subcommand("breadth", "largest incompressible subfamily");
  breadth_cmd->add_option("-i,--input", input_path, "set-system file")->required();
  breadth_cmd->add_option("--node-budget", node_budget, "search node budget");
  add_common(breadth_cmd);

  CLI::App* filter_cmd = app.add_subcommand("filter", "filter generated by given members");
  filter_cmd->add_option("-i,--input", input_path, "set-system file")->required();
  filter_cmd->add_option("-e,--member", member_args, "generator (quoted space-separated labels)");
  add_common(filter_cmd);

  CLI::App* vprop_cmd = app.add_subcommand("vprop", "propagation value V_E(z)");
  vprop_cmd->add_option("-i,--input", input_path, "set-system file")->required();
  vprop_cmd->add_option("-w,--weight", weight_path, "weight file")->required();
  vprop_cmd->add_option("-e,--member", member_args, "member of E (repeatable)")->required();
  vprop_cmd->add_option("-z,--target", target_arg, "target member z")->required();
  add_common(vprop_cmd);

  CLI::App* propconst_cmd = app.add_subcommand("propconst", "propagation constant at a level");
  propconst_cmd->add_option("-i,--input", input_path, "set-system file")->required();
  propconst_cmd->add_option("-w,--weight", weight_path, "weight file")->required();
  propconst_cmd->add_option("--level", level_arg, "level L");
  propconst_cmd->add_option("--max-subset", max_subset, "largest |E| enumerated");
  propconst_cmd->add_option("--max-subsets", max_subsets, "subset count budget");
  add_common(propconst_cmd);

  CLI::App* canonical_cmd = app.add_subcommand("canonical", "build tmax/tmin/tort systems");
  std::string kind_name;
  canonical_cmd->add_option("kind", kind_name, "tmax|tmin|tort")->required();
  canonical_cmd->add_option("-s,--spread", spread_src.spread_path, "spread file");
  canonical_cmd->add_option("-i,--input", spread_src.ground_path, "ground carrier file");
  canonical_cmd->add_option("--levels", spread_src.levels, "use the stock spread");
  add_common(canonical_cmd);

  CLI::App* weight_cmd = app.add_subcommand("weight", "spread and colouring weights");
  std::string weight_kind;
  std::string host_path;
  bool host_power = false;
  weight_cmd->add_option("kind", weight_kind, "tmax|tmin|colouring")->required();
  weight_cmd->add_option("-s,--spread", spread_src.spread_path, "spread file");
  weight_cmd->add_option("-i,--input", spread_src.ground_path, "ground carrier file");
  weight_cmd->add_option("--levels", spread_src.levels, "use the stock spread");
  weight_cmd->add_option("--host", host_path, "host system file (default: the canonical system)");
  weight_cmd->add_flag("--host-power", host_power, "host on the full power set of the join");
  weight_cmd->add_option("-c,--colouring", colouring_path, "colouring file (kind=colouring)");
  weight_cmd->add_option("--class-index", class_index, "decisive class index");
  weight_cmd->add_option("--cap-members", cap_members, "power-set cap");
  add_common(weight_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "bound verification harnesses");
  std::string verify_what;
  verify_cmd->add_option("what", verify_what, "tmax|tmin|tort|section6|lemma61|lprop")
      ->required();
  verify_cmd->add_option("--levels", spread_src.levels, "levels for tmax/tmin/tort");
  verify_cmd->add_option("-c,--colouring", colouring_path, "colouring file (tort)");
  verify_cmd->add_option("--class-index", class_index, "decisive class index (tort)");
  verify_cmd->add_option("--columns", columns, "tile columns (section6/lemma61/lprop)");
  verify_cmd->add_option("-n", level_n, "level n (lemma61/section6 row)");
  verify_cmd->add_option("--level", level_arg, "level C or L (lemma61/lprop)");
  std::string which_system = "s";
  verify_cmd->add_option("--which", which_system, "s|r (lprop)");
  verify_cmd->add_option("--max-subset", max_subset, "largest |E| enumerated (lprop)");
  verify_cmd->add_option("--max-subsets", max_subsets, "subset count budget (lprop)");
  verify_cmd->add_option("--cap-members", cap_members, "closure member cap");
  add_common(verify_cmd);

  CLI::App* dichotomy_cmd = app.add_subcommand("dichotomy", "shatter-or-decisive search");
  dichotomy_cmd->add_option("-i,--input", input_path, "set-system file")->required();
  dichotomy_cmd->add_option("-s,--spread", spread_src.spread_path, "spread file")->required();
  dichotomy_cmd->add_option("--depth", depth, "shattering depth");
  dichotomy_cmd->add_option("--window", window_spec.text, "window n0:N:t");
  dichotomy_cmd->add_option("--bound", bound, "decisive bound B (-1 disables)");
  add_common(dichotomy_cmd);

  CLI::App* refine_cmd = app.add_subcommand("refine-structure", "transversal spread from a chain");
  refine_cmd->add_option("-i,--input", input_path, "set-system file")->required();
  refine_cmd->add_option("-e,--member", member_args, "chain member (repeatable)")->required();
  refine_cmd->add_option("--schedule", schedule_arg, "comma-separated cut positions");
  add_common(refine_cmd);

  CLI::App* section6_cmd = app.add_subcommand("section6", "emit the tile-system bundle");
  section6_cmd->add_option("--columns", columns, "tile columns J");
  section6_cmd->add_option("--cap-members", cap_members, "closure member cap");
  std::string prefix = "section6";
  section6_cmd->add_option("--prefix", prefix, "output file prefix");

  CLI::App* cayley_cmd = app.add_subcommand("cayley", "embed a multiplication table");
  cayley_cmd->add_option("-i,--input", input_path, "multiplication table file")->required();
  add_common(cayley_cmd);

  CLI::App* transfer_cmd =
      app.add_subcommand("transfer-tmax", "carry a tmax spread across representations");
  transfer_cmd->add_option("-i,--input", input_path, "first representation (system file)")
      ->required();
  transfer_cmd->add_option("-s,--spread", spread_src.spread_path, "spread file")->required();
  transfer_cmd->add_flag("--via-cayley", via_cayley, "second representation = Cayley embedding");
  transfer_cmd->add_option("--second", second_path, "second representation (system file)");
  transfer_cmd->add_option("--map", map_path, "member map file: lines '<first> <second>'");
  add_common(transfer_cmd);

  CLI11_PARSE(app, argc, argv);

  OutputTarget out{output_path};
  try {
    io::Format format = io::parse_format(format_name);

    if (closure_cmd->parsed()) {
      SetSystem family = load_system(input_path);
      if (family.size() == 0) throw std::invalid_argument("closure: the file has no members");
      SetSystem closed = union_closure(family.members(), family.ground(), {cap_members});
      out.write([&](std::ostream& os) { io::write_set_system(os, closed); });
      return kExitOk;
    }

    if (breadth_cmd->parsed()) {
      SetSystem s = load_system(input_path);
      BreadthResult r = breadth(s, {node_budget});
      out.write([&](std::ostream& os) { emit_breadth(os, s, r); });
      return r.exact ? kExitOk : kExitBudget;
    }

    if (filter_cmd->parsed()) {
      SetSystem s = load_system(input_path);
      std::vector<MemberSet> e;
      for (const auto& m : member_args) e.push_back(parse_member(m, s.ground()));
      SetSystem f = filter_generated(e, s);
      out.write([&](std::ostream& os) { io::write_set_system(os, f); });
      return kExitOk;
    }

    if (vprop_cmd->parsed()) {
      SetSystem s = load_system(input_path);
      std::ifstream win = open_input(weight_path);
      LogWeight w = io::read_weight(win, s);
      std::vector<MemberSet> e;
      for (const auto& m : member_args) e.push_back(parse_member(m, s.ground()));
      VValue v = v_value(e, parse_member(target_arg, s.ground()), w);
      out.write([&](std::ostream& os) { os << "v: " << io::to_text(v) << '\n'; });
      return kExitOk;
    }

    if (propconst_cmd->parsed()) {
      SetSystem s = load_system(input_path);
      std::ifstream win = open_input(weight_path);
      LogWeight w = io::read_weight(win, s);
      PropagationReport r =
          propagation_constant(w, Rational::parse(level_arg), {max_subset, max_subsets});
      out.write([&](std::ostream& os) { emit_propagation(os, s, r); });
      return kExitOk;
    }

    if (canonical_cmd->parsed()) {
      Spread spread = spread_src.resolve();
      CanonicalKind kind;
      if (kind_name == "tmax")
        kind = CanonicalKind::tmax;
      else if (kind_name == "tmin")
        kind = CanonicalKind::tmin;
      else if (kind_name == "tort")
        kind = CanonicalKind::tort;
      else
        throw std::invalid_argument("kind must be tmax|tmin|tort");
      SetSystem s = canonical_system(kind, spread);
      out.write([&](std::ostream& os) { io::write_set_system(os, s); });
      return kExitOk;
    }

    if (weight_cmd->parsed()) {
      if (weight_kind == "colouring") {
        if (spread_src.ground_path.empty())
          throw std::invalid_argument("weight colouring needs -i (host system)");
        SetSystem host = load_system(spread_src.ground_path);
        Spread spread = spread_src.resolve_against(host.ground());
        std::ifstream cfile = open_input(colouring_path);
        Colouring colouring = io::read_colouring(cfile, host.ground());
        LogWeight w = weight_from_colouring(host, spread, colouring, class_index);
        out.write([&](std::ostream& os) { io::write_weight(os, w); });
        return kExitOk;
      }
      if (weight_kind != "tmax" && weight_kind != "tmin")
        throw std::invalid_argument("kind must be tmax|tmin|colouring");
      Spread spread = spread_src.resolve();
      SetSystem host = [&]() {
        if (!host_path.empty()) return load_system(host_path);
        if (host_power) {
          GroundSet join_ground{spread.ground().labels_of(spread.join_all())};
          SetSystem power = power_set_system(join_ground, {cap_members});
          // translate back onto the spread's ground set
          std::vector<MemberSet> members;
          members.reserve(power.size());
          for (const auto& m : power.members()) {
            MemberSet t(spread.ground().size());
            m.for_each_index(
                [&](std::size_t i) { t.add(spread.ground().index_of(join_ground.label(i))); });
            members.push_back(std::move(t));
          }
          return SetSystem(spread.ground(), std::move(members), true);
        }
        return canonical_system(
            weight_kind == "tmax" ? CanonicalKind::tmax : CanonicalKind::tmin, spread);
      }();
      LogWeight w =
          weight_kind == "tmax" ? weight_tmax_on(spread, host) : weight_tmin_on(spread, host);
      out.write([&](std::ostream& os) { io::write_weight(os, w); });
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      if (verify_what == "tmax" || verify_what == "tmin") {
        if (spread_src.levels == 0) spread_src.levels = 4;
        auto rows = verify_level_one_failure(
            verify_what == "tmax" ? CanonicalKind::tmax : CanonicalKind::tmin,
            spread_src.levels);
        out.write([&](std::ostream& os) { io::emit(os, io::level_one_table(rows), format); });
        for (const auto& r : rows)
          if (!r.pass) return kExitFail;
        return kExitOk;
      }
      if (verify_what == "tort") {
        if (spread_src.levels == 0) spread_src.levels = 4;
        std::size_t total = 0;
        for (std::size_t n = 1; n <= spread_src.levels; ++n) total += n + 1;
        GroundSet ground = GroundSet::numbered(total);
        Colouring colouring = Colouring::trivial(ground);
        if (!colouring_path.empty()) {
          std::ifstream cfile = open_input(colouring_path);
          colouring = io::read_colouring(cfile, ground);
        }
        auto rows = verify_tort_failure(spread_src.levels, colouring, class_index);
        out.write([&](std::ostream& os) { io::emit(os, io::tort_failure_table(rows), format); });
        for (const auto& r : rows)
          if (!r.pass) return kExitFail;
        return kExitOk;
      }
      if (verify_what == "section6") {
        Section6Bundle bundle = section6_build(columns, {0, {cap_members}});
        Section6BoundRow row = verify_section6_bounds(bundle, level_n);
        out.write([&](std::ostream& os) {
          os << "n: " << row.n << '\n';
          os << "lambda_b: " << row.lambda_b << '\n';
          os << "family_in_w1: " << (row.family_in_w1 ? "yes" : "no") << '\n';
          os << "v: " << io::to_text(row.v) << '\n';
          os << "bound: " << row.bound << '\n';
          os << "pass: " << (row.pass ? "pass" : "FAIL") << '\n';
        });
        return row.pass ? kExitOk : kExitFail;
      }
      if (verify_what == "lemma61") {
        Section6Bundle bundle = section6_build(columns, {0, {cap_members}});
        Rational c = Rational::parse(level_arg);
        if (!c.is_integer()) throw std::invalid_argument("lemma61 level must be an integer");
        Lemma61Result r = verify_lemma_6_1(bundle, level_n, c.num());
        out.write([&](std::ostream& os) {
          os << "hypothesis_ok: " << (r.hypothesis_ok ? "yes" : "no") << '\n';
          os << "contained: " << (r.contained ? "yes" : "no") << '\n';
          if (r.offender) {
            os << "offender:";
            r.offender->for_each_index(
                [&](std::size_t i) { os << ' ' << bundle.universe.ground.label(i); });
            os << '\n';
          }
        });
        // under the hypothesis, containment is the verified property
        if (r.hypothesis_ok && !r.contained) return kExitFail;
        return kExitOk;
      }
      if (verify_what == "lprop") {
        Section6Bundle bundle = section6_build(columns, {0, {cap_members}});
        Section6System which = which_system == "r" ? Section6System::r : Section6System::s;
        LPropagationResult r = verify_l_propagation(bundle, which, Rational::parse(level_arg),
                                                    {max_subset, max_subsets});
        out.write([&](std::ostream& os) {
          emit_propagation(os, which == Section6System::r ? bundle.r : bundle.s, r.report);
          os << "pass: " << (r.pass ? "pass" : "FAIL") << '\n';
        });
        return r.pass ? kExitOk : kExitFail;
      }
      throw std::invalid_argument("verify: unknown harness '" + verify_what + "'");
    }

    if (dichotomy_cmd->parsed()) {
      SetSystem s = load_system(input_path);
      Spread spread = spread_src.resolve_against(s.ground());
      Window w = window_spec.resolve(spread);
      DichotomyParams params;
      params.depth = depth;
      params.threshold = w.threshold;
      params.bound = bound;
      DichotomyResult r = dichotomy_search(s, spread, params);
      out.write([&](std::ostream& os) { os << io::dichotomy_record(r, s, spread); });
      return kExitOk;
    }

    if (refine_cmd->parsed()) {
      SetSystem s = load_system(input_path);
      std::vector<MemberSet> chain;
      for (const auto& m : member_args) chain.push_back(parse_member(m, s.ground()));
      std::vector<std::size_t> schedule;
      if (!schedule_arg.empty()) {
        std::istringstream in(schedule_arg);
        std::string part;
        while (std::getline(in, part, ',')) schedule.push_back(std::stoul(part));
      }
      RefinedStructure r = refined_structure(s, chain, schedule);
      out.write([&](std::ostream& os) {
        io::write_spread(os, r.spread);
        os << "# schedule:";
        for (std::size_t nk : r.schedule) os << ' ' << nk;
        os << "\n# block sizes:";
        for (std::size_t b : r.block_sizes) os << ' ' << b;
        os << "\n# tmax witness entries: " << r.witness.entries.size() << '\n';
      });
      return kExitOk;
    }

    if (section6_cmd->parsed()) {
      Section6Bundle bundle = section6_build(columns, {0, {cap_members}});
      auto write_file = [&](const std::string& suffix, auto&& fn) {
        std::ofstream os(prefix + suffix);
        if (!os) throw std::runtime_error("cannot open '" + prefix + suffix + "'");
        fn(os);
      };
      write_file(".s.system", [&](std::ostream& os) { io::write_set_system(os, bundle.s); });
      write_file(".t.system", [&](std::ostream& os) { io::write_set_system(os, bundle.t); });
      write_file(".r.system", [&](std::ostream& os) { io::write_set_system(os, bundle.r); });
      write_file(".s.weight", [&](std::ostream& os) { io::write_weight(os, bundle.lambda_s); });
      write_file(".t.weight", [&](std::ostream& os) { io::write_weight(os, bundle.lambda_t); });
      write_file(".r.weight", [&](std::ostream& os) { io::write_weight(os, bundle.lambda_r); });
      std::cout << "columns: " << bundle.columns << '\n'
                << "tiles: " << bundle.tile_count << '\n'
                << "s_members: " << bundle.s.size() << '\n'
                << "t_members: " << bundle.t.size() << '\n'
                << "r_members: " << bundle.r.size() << '\n';
      return kExitOk;
    }

    if (cayley_cmd->parsed()) {
      std::ifstream in = open_input(input_path);
      MultiplicationTable t = io::read_table(in);
      CayleyEmbedding emb = cayley_embedding(t);
      out.write([&](std::ostream& os) {
        io::write_set_system(os, emb.system);
        for (std::size_t x = 0; x < t.n; ++x)
          os << "# element " << x << " -> member " << emb.element_to_member[x] << '\n';
      });
      return kExitOk;
    }

    if (transfer_cmd->parsed()) {
      SetSystem first = load_system(input_path);
      Spread spread = spread_src.resolve_against(first.ground());
      CanonicalSearch search = contains_canonical(first, spread, CanonicalKind::tmax);
      if (!search.witness)
        throw std::invalid_argument(
            "transfer-tmax: the first representation lacks a tmax witness");
      SetSystem second = first;
      std::vector<std::size_t> member_map(first.size());
      for (std::size_t i = 0; i < first.size(); ++i) member_map[i] = i;
      if (via_cayley) {
        CayleyEmbedding emb = cayley_embedding(table_of(first));
        second = emb.system;
        member_map = emb.element_to_member;
      } else if (!second_path.empty()) {
        second = load_system(second_path);
        if (map_path.empty()) throw std::invalid_argument("transfer-tmax: --second needs --map");
        std::ifstream min = open_input(map_path);
        std::size_t a, b;
        while (min >> a >> b) {
          if (a >= member_map.size() || b >= second.size())
            throw std::invalid_argument("transfer-tmax: map index out of range");
          member_map[a] = b;
        }
      }
      TransferResult r = transfer_tmax(first, spread, *search.witness, second, member_map);
      out.write([&](std::ostream& os) {
        io::write_spread(os, r.spread);
        os << "# reverified: yes (" << r.witness.entries.size() << " trace entries)\n";
      });
      return kExitOk;
    }

    throw std::invalid_argument("no subcommand dispatched");
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
}
