// Acceptance suite: one line per criterion, non-zero exit if any fails.
// Every tolerance here is exact (rational arithmetic, no epsilons).

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "ucs/decisive_weight.hpp"
#include "ucs/dichotomy.hpp"
#include "ucs/fixtures.hpp"
#include "ucs/io.hpp"

using namespace ucs;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << "    failed: " << what << '\n';
    }
  }
};

SetSystem m1() {
  GroundSet g{{"alpha", "beta", "gamma"}};
  return SetSystem(
      g, {MemberSet(3, {0}), MemberSet(3, {1}), MemberSet(3, {0, 1}), MemberSet(3, {0, 1, 2})},
      true);
}

// Power set of the first `points` points of the spread's ground, carrying
// the spread's weight formula.
SetSystem power_host_prefix(const Spread& spread, std::size_t points) {
  GroundSet sub = GroundSet::numbered(points);
  std::vector<MemberSet> members;
  members.reserve(std::size_t{1} << points);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << points); ++mask) {
    MemberSet m(spread.ground().size());
    for (std::size_t i = 0; i < points; ++i)
      if ((mask >> i) & 1) m.add(i);
    members.push_back(std::move(m));
  }
  return SetSystem(spread.ground(), std::move(members), true);
}

// criterion 1: the spread weights and the colouring weight are log-weights,
// checked by exhaustive pair scans with exact arithmetic.
void criterion_1(Check& c) {
  std::vector<std::vector<std::size_t>> prefixes = {{2}, {2, 3}, {2, 3, 4}, {2, 3, 4, 5}};
  for (const auto& sizes : prefixes) {
    std::size_t total = 0;
    for (std::size_t s : sizes) total += s;
    Spread spread = make_spread(sizes, GroundSet::numbered(total));
    SetSystem host = power_set_system(GroundSet::numbered(total));
    c.require(check_log_weight(weight_tmax_on(spread, host)).ok,
              "tmax weight subadditive on P(" + std::to_string(total) + ")");
    c.require(check_log_weight(weight_tmin_on(spread, host)).ok,
              "tmin weight subadditive on P(" + std::to_string(total) + ")");
  }
  // the 27-point spread (sizes 2..7), pair test restricted to the first 14
  // points of its ground
  Spread big = default_spread(6);
  SetSystem restricted = power_host_prefix(big, 14);
  c.require(check_log_weight(weight_tmax_on(big, restricted)).ok,
            "tmax weight subadditive on the 14-point restriction of the (2..7) spread");
  c.require(check_log_weight(weight_tmin_on(big, restricted)).ok,
            "tmin weight subadditive on the 14-point restriction of the (2..7) spread");

  // colouring weights on tort truncations
  for (std::size_t levels : {2, 3, 4, 5}) {
    Spread spread = default_spread(levels);
    SetSystem host = tort(spread);
    Colouring trivial = Colouring::trivial(spread.ground());
    c.require(check_log_weight(weight_from_colouring(host, spread, trivial, 0)).ok,
              "colouring weight subadditive on tort, " + std::to_string(levels) + " levels");
    // an alternating two-class colouring
    MemberSet c0(spread.ground().size()), c1(spread.ground().size());
    for (std::size_t n = 1; n <= levels; ++n) {
      auto pts = spread.block(n).indices();
      for (std::size_t i = 0; i < pts.size(); ++i) (i % 2 ? c1 : c0).add(pts[i]);
    }
    Colouring two(spread.ground(), {c0, c1});
    for (std::size_t ci : {0, 1})
      c.require(check_log_weight(weight_from_colouring(host, spread, two, ci)).ok,
                "two-class colouring weight subadditive on tort");
  }
}

// criterion 2: canonical constructors are union-closed; restriction to the
// join is the identity on traces.
void criterion_2(Check& c) {
  std::vector<std::vector<std::size_t>> size_lists = {
      {2},          {2, 3},       {2, 3, 4},  {2, 3, 4, 5}, {2, 3, 4, 5, 6},
      {1},          {1, 1},       {1, 1, 1},  {1, 1, 2},    {1, 2, 2},
      {2, 2, 2},    {3, 3, 3},    {1, 2, 3},  {2, 2, 3},    {3, 3},
      {1, 3, 3, 3}, {2, 2, 2, 2}, {1, 1, 1, 1, 1},
  };
  for (const auto& sizes : size_lists) {
    std::size_t total = 0;
    for (std::size_t s : sizes) total += s;
    Spread spread = make_spread(sizes, GroundSet::numbered(total), true);
    for (CanonicalKind kind : {CanonicalKind::tmax, CanonicalKind::tmin, CanonicalKind::tort}) {
      SetSystem s = canonical_system(kind, spread);
      c.require(is_union_closed(s).closed, to_string(kind) + " union-closed");
      TraceSystem t = restrict_to(s, spread.join_all());
      c.require(t.system == s, to_string(kind) + " restrict-over-join identity");
    }
  }
}

// criterion 3: tmax level-one failure rows for n = 2..6.
void criterion_3(Check& c) {
  auto rows = verify_level_one_failure(CanonicalKind::tmax, 6);
  c.require(rows.size() == 5, "rows n = 2..6");
  for (const auto& r : rows) {
    c.require(r.lambda_a_ok, "lambda(a) = 1 on F_" + std::to_string(r.n));
    c.require(r.lambda_b == Rational(0), "lambda(b_n) = 0 at n = " + std::to_string(r.n));
    c.require(r.v.finite, "V finite at n = " + std::to_string(r.n));
    if (r.v.finite)
      c.require(!(r.v.value < Rational((std::int64_t)r.block_size, 2)),
                "V >= half the block size at n = " + std::to_string(r.n));
    c.require(r.pass, "row passes at n = " + std::to_string(r.n));
  }
  if (!rows.empty()) c.require(rows[0].v == VValue::of(Rational(2)), "exact V = 2 at n = 2");
}

// criterion 4: the tmin analogue for n = 2..5.
void criterion_4(Check& c) {
  auto rows = verify_level_one_failure(CanonicalKind::tmin, 5);
  c.require(rows.size() == 4, "rows n = 2..5");
  for (const auto& r : rows) {
    c.require(r.lambda_a_ok, "lambda(a) = 1 on F_" + std::to_string(r.n));
    c.require(r.lambda_b == Rational(0), "lambda(b_n) = 0 at n = " + std::to_string(r.n));
    c.require(r.v.finite && !(r.v.value < Rational((std::int64_t)r.block_size, 2)),
              "V >= half the block size at n = " + std::to_string(r.n));
    c.require(r.pass, "row passes at n = " + std::to_string(r.n));
  }
}

// criterion 5: tort quarter bound for n = 2..5 with the trivial colouring.
void criterion_5(Check& c) {
  GroundSet ground = default_spread(5).ground();
  Colouring trivial = Colouring::trivial(ground);
  auto rows = verify_tort_failure(5, trivial, 0);
  std::size_t seen = 0;
  for (const auto& r : rows) {
    if (r.n < 2) continue;
    ++seen;
    c.require(r.lambda_x_ok, "lambda(x_i) = 1 at n = " + std::to_string(r.n));
    c.require(r.lambda_b == Rational(0), "lambda(b_n) = 0 at n = " + std::to_string(r.n));
    c.require(r.v.finite &&
                  !(r.v.value < Rational((std::int64_t)r.c0_block_count, 4)),
              "V >= quarter bound at n = " + std::to_string(r.n));
    c.require(r.pass, "row passes at n = " + std::to_string(r.n));
  }
  c.require(seen == 4, "rows n = 2..5 present");
}

// criterion 6: the tile-system bundle at 15 columns.
void criterion_6(Check& c) {
  Section6Options options;
  Section6Bundle bundle = section6_build(15, options);
  c.require(bundle.tile_count == 3, "three full tiles at 15 columns");

  for (const auto& x : bundle.xs)
    c.require(eval_lambda_star(bundle.universe, x) == Rational(1), "lambda*(x_j) = 1");
  for (const auto& b : bundle.bs)
    c.require(eval_lambda_star(bundle.universe, b) == Rational(0), "lambda*(b_n) = 0");

  Lemma61Result l21 = verify_lemma_6_1(bundle, 2, 1);
  c.require(l21.hypothesis_ok && l21.contained, "containment at (n,C) = (2,1)");
  Lemma61Result l22 = verify_lemma_6_1(bundle, 2, 2);
  c.require(l22.hypothesis_ok && l22.contained, "containment at (n,C) = (2,2)");
  Lemma61Result l23 = verify_lemma_6_1(bundle, 2, 3);
  c.require(!l23.hypothesis_ok && !l23.contained, "containment breaks at (n,C) = (2,3)");

  Section6BoundRow row = verify_section6_bounds(bundle, 2);
  c.require(row.v == VValue::of(Rational(3)), "exact V = 3 at n = 2");
  c.require(!(row.v.value < row.bound), "V >= 2 at n = 2");
  c.require(row.pass, "bound row passes");
  Section6BoundRow row3 = verify_section6_bounds(bundle, 3);
  c.require(row3.v.finite && !(row3.v.value < Rational(3)), "V >= 3 at n = 3");
  c.require(row3.pass, "n = 3 bound row passes");

  // unique irredundant factorization across the whole closure: the
  // generators inside each member cover it and each keeps a private point
  {
    std::vector<MemberSet> gens = bundle.as;
    gens.insert(gens.end(), bundle.xs.begin(), bundle.xs.end());
    bool factorization_ok = true;
    bool weight_counts_x = true;
    for (std::size_t zi = 0; zi < bundle.s.size(); ++zi) {
      const MemberSet& z = bundle.s.member(zi);
      std::vector<MemberSet> inside;
      for (const auto& g : gens)
        if (g.subset_of(z)) inside.push_back(g);
      if (!(join(inside) == z) || !is_incompressible(inside).incompressible)
        factorization_ok = false;
      std::int64_t x_factors = 0;
      for (const auto& x : bundle.xs)
        if (x.subset_of(z)) ++x_factors;
      if (!(bundle.lambda_s.value(zi) == Rational(x_factors))) weight_counts_x = false;
    }
    c.require(factorization_ok, "every member factors uniquely over the generators");
    c.require(weight_counts_x, "lambda counts the x factors of every member");
  }

  PropagationLimits s_limits;
  s_limits.max_subsets = 200000;
  for (std::int64_t level : {0, 1}) {
    LPropagationResult r =
        verify_l_propagation(bundle, Section6System::s, Rational(level), s_limits);
    c.require(r.pass, "(S, lambda) max V <= " + std::to_string(level));
  }
  PropagationLimits r_limits;
  r_limits.max_subsets = 8000;
  for (std::int64_t level : {0, 1}) {
    LPropagationResult r =
        verify_l_propagation(bundle, Section6System::r, Rational(level), r_limits);
    c.require(r.pass, "(R, lambda*) max V <= " + std::to_string(level));
  }
}

// criterion 7: closed-form filter vs fixpoint, V monotone in E and C,
// reachability ceiling; exhaustive on systems with at most 12 members.
void criterion_7(Check& c) {
  GroundSet sp2_ground = GroundSet::numbered(5);
  Spread sp2 = make_spread({2, 3}, sp2_ground);

  std::vector<SetSystem> systems;
  systems.push_back(m1());
  systems.push_back(tort(sp2));
  systems.push_back(tmin(sp2));
  systems.push_back(union_closure(
      {MemberSet(4, {0}), MemberSet(4, {1}), MemberSet(4, {2, 3})}, GroundSet::numbered(4)));

  auto fixpoint_oracle = [](const std::vector<MemberSet>& e, const SetSystem& s) {
    std::vector<MemberSet> f = e;
    bool changed = true;
    while (changed) {
      changed = false;
      std::size_t frozen = f.size();
      for (std::size_t i = 0; i < frozen; ++i)
        for (std::size_t j = i; j < frozen; ++j) {
          MemberSet u = f[i] | f[j];
          if (std::find(f.begin(), f.end(), u) == f.end()) {
            f.push_back(u);
            changed = true;
          }
        }
      for (const auto& z : s.members()) {
        bool div = false;
        for (std::size_t i = 0; i < f.size() && !div; ++i)
          if ((z | f[i]) == f[i]) div = true;
        if (div && std::find(f.begin(), f.end(), z) == f.end()) {
          f.push_back(z);
          changed = true;
        }
      }
    }
    std::sort(f.begin(), f.end(),
              [](const MemberSet& a, const MemberSet& b) { return lex_less(a, b); });
    return f;
  };

  for (const auto& s : systems) {
    c.require(s.size() <= 12, "fixture small enough for exhaustive scans");
    std::vector<Rational> card;
    for (const auto& mset : s.members()) card.push_back(Rational((std::int64_t)mset.count()));
    LogWeight w(s, card);
    PropagationEngine engine(w);
    Rational ceiling = w.max_value();

    std::uint64_t total = std::uint64_t{1} << s.size();
    for (std::uint64_t mask = 1; mask < total; ++mask) {
      std::vector<MemberSet> e;
      std::vector<std::uint32_t> e_idx;
      for (std::size_t i = 0; i < s.size(); ++i)
        if ((mask >> i) & 1) {
          e.push_back(s.member(i));
          e_idx.push_back((std::uint32_t)i);
        }
      if (filter_generated(e, s).members() != fixpoint_oracle(e, s)) {
        c.require(false, "closed-form filter equals the fixpoint");
        return;
      }
      // ceiling and finiteness on every target
      SetSystem filter = filter_generated(e, s);
      for (std::size_t zi = 0; zi < s.size(); ++zi) {
        VValue v = engine.v_value(e_idx, (std::uint32_t)zi);
        bool in_filter = filter.contains(s.member(zi));
        if (v.finite != in_filter) {
          c.require(false, "V finite exactly on the generated filter");
          return;
        }
        if (v.finite && ceiling < v.value) {
          c.require(false, "V below the reachability ceiling");
          return;
        }
      }
    }

    // monotonicity in C and in E over all pairs E ⊆ E' of size <= 2 plus
    // grid steps, on this fixture
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::vector<std::uint32_t> small = {(std::uint32_t)i};
      for (std::size_t j = 0; j < s.size(); ++j) {
        std::vector<std::uint32_t> big = {(std::uint32_t)i, (std::uint32_t)j};
        for (std::size_t g = 0; g < engine.grid().size(); ++g) {
          auto lo = engine.closure_at(small, g);
          auto hi = engine.closure_at(big, g);
          if (!std::includes(hi.members.begin(), hi.members.end(), lo.members.begin(),
                             lo.members.end())) {
            c.require(false, "closure monotone in E");
            return;
          }
          if (g + 1 < engine.grid().size()) {
            auto up = engine.closure_at(small, g + 1);
            if (!std::includes(up.members.begin(), up.members.end(), lo.members.begin(),
                               lo.members.end())) {
              c.require(false, "closure monotone in C");
              return;
            }
          }
        }
      }
    }
  }
}

// criterion 8: breadth values with brute-force confirmation.
void criterion_8(Check& c) {
  GroundSet g3{{"alpha", "beta", "gamma"}};
  SetSystem chain(g3, {MemberSet(3, {0}), MemberSet(3, {0, 1}), MemberSet(3, {0, 1, 2})}, true);
  c.require(breadth(chain).value == 1, "chains have breadth 1");
  c.require(breadth(m1()).value == 2, "M1 has breadth 2");

  for (std::size_t n = 1; n <= 5; ++n) {
    SetSystem ps = nonempty_power_set_system(GroundSet::numbered(n));
    BreadthResult r = breadth(ps);
    c.require(r.exact && r.value == n,
              "power set of " + std::to_string(n) + " points has breadth " + std::to_string(n));
    // brute force: the n singletons are incompressible, and no family of
    // n+1 members is (checked over every (n+1)-subfamily)
    std::vector<MemberSet> singles;
    for (std::size_t i = 0; i < n; ++i) singles.push_back(MemberSet(n, {i}));
    c.require(is_incompressible(singles).incompressible, "singletons incompressible");
    bool some_bigger = false;
    std::vector<std::size_t> comb(n + 1);
    if (ps.size() >= n + 1) {
      for (std::size_t i = 0; i <= n; ++i) comb[i] = i;
      while (true) {
        std::vector<MemberSet> fam;
        for (std::size_t i : comb) fam.push_back(ps.member(i));
        if (is_incompressible(fam).incompressible) {
          some_bigger = true;
          break;
        }
        std::size_t i = n + 1;
        while (i > 0 && comb[i - 1] == ps.size() - (n + 1) + i - 1) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t j = i; j < n + 1; ++j) comb[j] = comb[j - 1] + 1;
      }
    }
    c.require(!some_bigger, "no incompressible family of " + std::to_string(n + 1) + " members");
  }

  // prefixes of a shattering output are incompressible
  GroundSet g15 = GroundSet::numbered(15);
  Spread spread = make_spread({4, 5, 6}, g15);
  SetSystem ps = nonempty_power_set_system(g15);
  DichotomyParams params{1, 2, 2};
  DichotomyResult r = dichotomy_search(ps, spread, params);
  c.require(r.kind == DichotomyResult::Kind::shatter, "shatter witness available");
  if (r.shatter) {
    std::vector<MemberSet> seq;
    for (std::size_t i : r.shatter->members) seq.push_back(ps.member(i));
    for (std::size_t m = 1; m <= seq.size(); ++m) {
      std::vector<MemberSet> prefix(seq.begin(), seq.begin() + m);
      c.require(is_incompressible(prefix).incompressible, "shattering prefix incompressible");
    }
  }
}

// criterion 9: dichotomy behaviour on the pinned fixtures, byte-identical
// across runs.
void criterion_9(Check& c) {
  GroundSet g15 = GroundSet::numbered(15);
  Spread spread456 = make_spread({4, 5, 6}, g15);
  SetSystem ps = nonempty_power_set_system(g15);
  DichotomyParams params{1, 2, 2};
  DichotomyResult r1 = dichotomy_search(ps, spread456, params);
  c.require(r1.kind == DichotomyResult::Kind::shatter, "power set: shatter witness at depth 1");
  DichotomyResult r2 = dichotomy_search(ps, spread456, params);
  c.require(io::dichotomy_record(r1, ps, spread456) == io::dichotomy_record(r2, ps, spread456),
            "byte-identical record across runs");

  GroundSet g9 = GroundSet::numbered(9);
  Spread spread234 = make_spread({2, 3, 4}, g9);
  SetSystem tort234 = tort(spread234);
  DichotomyParams dparams{2, 1, 2};
  DichotomyResult d = dichotomy_search(tort234, spread234, dparams);
  c.require(d.kind == DichotomyResult::Kind::decisive, "tort (2,3,4): decisive report");
  if (d.decisive) {
    c.require(d.decisive->class_index == 0, "decisive class is the whole ground");
    c.require(d.decisive->max_statistic <= 2, "statistic within the bound");
  }

  GroundSet g5 = GroundSet::numbered(5);
  Spread sp2 = make_spread({2, 3}, g5);
  SetSystem tort_sp2 = tort(sp2);
  auto halver = find_halver(tort_sp2, Colouring::trivial(g5), sp2, Window::full(sp2));
  c.require(!halver.has_value(), "no halver on tort(SP2) over the full window");
}

// criterion 10: the transversal construction on four singletons.
void criterion_10(Check& c) {
  GroundSet g = GroundSet::numbered(4);
  SetSystem s = nonempty_power_set_system(g);
  std::vector<MemberSet> chain;
  for (std::size_t i = 0; i < 4; ++i) chain.push_back(MemberSet(4, {i}));
  RefinedStructure r = refined_structure(s, chain);
  c.require(r.schedule == std::vector<std::size_t>({1, 4}), "schedule 1, 4");
  c.require(r.spread.levels() == 2, "two blocks");
  if (r.spread.levels() == 2) {
    c.require(r.spread.block(1) == MemberSet(4, {0}), "first block {gamma_1}");
    c.require(r.spread.block(2) == MemberSet(4, {1, 2, 3}), "second block {gamma_2..4}");
  }
  c.require(r.witness.kind == CanonicalKind::tmax && !r.witness.entries.empty(),
            "tmax re-verification witness present");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<void(Check&)> run;
  };
  std::vector<Criterion> criteria = {
      {1, "weight legality (tmax/tmin/colouring weights are log-weights)", criterion_1},
      {2, "canonical constructors union-closed, restriction identity", criterion_2},
      {3, "tmax level-one failure bound, n = 2..6", criterion_3},
      {4, "tmin level-one failure bound, n = 2..5", criterion_4},
      {5, "tort quarter bound, n = 2..5", criterion_5},
      {6, "tile-system bundle at 15 columns", criterion_6},
      {7, "oracle equivalences (filter, monotonicity, ceiling)", criterion_7},
      {8, "breadth values with brute-force confirmation", criterion_8},
      {9, "dichotomy behaviour on pinned fixtures", criterion_9},
      {10, "transversal construction on four singletons", criterion_10},
  };

  bool all_ok = true;
  for (const auto& criterion : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail << "    exception: " << e.what() << '\n';
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (check.ok ? "PASS" : "FAIL") << " criterion-" << criterion.id << ": "
              << criterion.name << " (" << ms << " ms)\n";
    if (!check.ok) {
      std::cout << check.detail.str();
      all_ok = false;
    }
  }
  return all_ok ? 0 : 1;
}
