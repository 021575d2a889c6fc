#include "ucs/fixtures.hpp"

#include <algorithm>

namespace ucs {

NestedLevelsExample example_2_13(std::size_t levels, std::size_t tail) {
  if (levels < 2) throw std::invalid_argument("example_2_13: needs levels >= 2");
  if (tail < levels) throw std::invalid_argument("example_2_13: tail must reach every level");

  // Ground for the first representation: staircase points w<n>.<k> plus tail
  // points m1..m<tail>.
  std::vector<std::string> labels;
  for (std::size_t n = 1; n <= levels; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      labels.push_back("w" + std::to_string(n) + "." + std::to_string(k));
  std::size_t omega0 = labels.size();
  for (std::size_t m = 1; m <= tail; ++m) labels.push_back("m" + std::to_string(m));
  GroundSet ground{labels};

  auto stair_point = [&](std::size_t n, std::size_t k) { return (n - 1) * n / 2 + (k - 1); };

  std::vector<MemberSet> blocks;
  for (std::size_t n = 2; n <= levels; ++n) {
    MemberSet b(ground.size());
    for (std::size_t k = 1; k <= n; ++k) b.add(stair_point(n, k));
    blocks.push_back(std::move(b));
  }
  Spread spread(ground, std::move(blocks), /*allow_irregular=*/false);

  // Ground for the second representation: staircase points crossed with
  // columns 1..tail+1. The extra column keeps distinct tail parameters
  // distinguishable at the truncation (with only `tail` columns, m = tail
  // would cover the whole product ground for every trace).
  std::size_t cols = tail + 1;
  std::vector<std::string> labels2;
  for (std::size_t i = 0; i < omega0; ++i)
    for (std::size_t j = 1; j <= cols; ++j) labels2.push_back(labels[i] + "x" + std::to_string(j));
  GroundSet ground2{labels2};
  auto product_point = [&](std::size_t stair, std::size_t col) {
    return stair * cols + (col - 1);
  };

  // Members are indexed by a level-n trace (non-empty a ⊆ E_n, n ≥ 2) plus a
  // tail parameter m ≥ n; the first representation appends the tail prefix,
  // the second crosses with columns.
  std::vector<MemberSet> members1, members2;
  std::vector<std::pair<MemberSet, MemberSet>> pairs;
  for (std::size_t n = 2; n <= levels; ++n) {
    std::vector<std::size_t> block_pts;
    for (std::size_t k = 1; k <= n; ++k) block_pts.push_back(stair_point(n, k));
    std::uint64_t total = std::uint64_t{1} << block_pts.size();
    for (std::uint64_t mask = 1; mask < total; ++mask) {
      MemberSet trace(ground.size());
      for (std::size_t k = 0; k < block_pts.size(); ++k)
        if ((mask >> k) & 1) trace.add(block_pts[k]);
      // a = trace ∪ E_{>n} within the staircase
      MemberSet a = trace;
      for (std::size_t h = n + 1; h <= levels; ++h)
        for (std::size_t k = 1; k <= h; ++k) a.add(stair_point(h, k));
      for (std::size_t m = n; m <= tail; ++m) {
        MemberSet first = a;
        for (std::size_t j = 1; j <= m; ++j) first.add(omega0 + (j - 1));
        MemberSet second(ground2.size());
        a.for_each_index([&](std::size_t pt) {
          for (std::size_t j = 1; j <= cols; ++j) second.add(product_point(pt, j));
        });
        for (std::size_t pt = 0; pt < omega0; ++pt)
          for (std::size_t j = 1; j <= m; ++j) second.add(product_point(pt, j));
        pairs.push_back({std::move(first), std::move(second)});
      }
    }
  }
  for (auto& [f, s] : pairs) {
    members1.push_back(f);
    members2.push_back(s);
  }
  SetSystem sys1(ground, members1, /*closed=*/false);
  SetSystem sys2(ground2, members2, /*closed=*/false);

  NestedLevelsExample out{std::move(sys1), std::move(sys2), std::move(spread), {}};
  if (!is_union_closed(out.system).closed || !is_union_closed(out.product_system).closed)
    throw std::logic_error("example_2_13: construction is not union-closed");
  out.system.mark_closed(true);
  out.product_system.mark_closed(true);
  for (const auto& [f, s] : pairs)
    out.correspondence.push_back({*out.system.index_of(f), *out.product_system.index_of(s)});
  return out;
}

std::size_t TileUniverse::point(std::size_t row, std::size_t col) const {
  if (row > 2 || col == 0 || col > columns)
    throw std::out_of_range("tile universe: point out of range");
  return row * columns + (col - 1);
}

MemberSet TileUniverse::rows12() const {
  MemberSet w(ground.size());
  for (std::size_t row = 1; row <= 2; ++row)
    for (std::size_t col = 1; col <= columns; ++col) w.add(point(row, col));
  return w;
}

TileUniverse tile_universe(std::size_t columns) {
  if (columns < 3) throw std::invalid_argument("tile_universe: needs at least 3 columns");
  std::vector<std::string> labels;
  for (std::size_t row = 0; row <= 2; ++row)
    for (std::size_t col = 1; col <= columns; ++col)
      labels.push_back("(" + std::to_string(row) + "," + std::to_string(col) + ")");
  return {GroundSet{labels}, columns};
}

Rational eval_lambda_star(const TileUniverse& universe, const MemberSet& z) {
  std::size_t count = 0;
  for (std::size_t col = 1; col <= universe.columns; ++col)
    if (z.contains(universe.point(2, col))) ++count;
  return Rational(static_cast<std::int64_t>(count));
}

Section6Bundle section6_build(std::size_t columns, const Section6Options& options) {
  if (columns < 8)
    throw std::invalid_argument("section6_build: needs at least 8 columns for two full tiles");
  Section6Bundle bundle;
  bundle.universe = tile_universe(columns);
  bundle.columns = columns;
  bundle.r_columns = options.r_columns ? options.r_columns : std::min<std::size_t>(columns, 12);
  if (bundle.r_columns > columns)
    throw std::invalid_argument("section6_build: r_columns exceeds the universe");

  const TileUniverse& u = bundle.universe;
  for (std::size_t j = 1; j <= columns; ++j) {
    MemberSet x(u.ground.size());
    x.add(u.point(1, j));
    x.add(u.point(2, j));
    bundle.xs.push_back(std::move(x));
  }
  // Full tiles only: a_n needs every column n²..(n+1)²-1.
  for (std::size_t n = 1; (n + 1) * (n + 1) - 1 <= columns; ++n) {
    MemberSet a(u.ground.size());
    MemberSet b(u.ground.size());
    for (std::size_t k = n * n; k < (n + 1) * (n + 1); ++k) {
      a.add(u.point(0, k));
      a.add(u.point(1, k));
      b.add(u.point(1, k));
    }
    bundle.as.push_back(std::move(a));
    bundle.bs.push_back(std::move(b));
  }
  bundle.tile_count = bundle.as.size();
  for (std::size_t j = 1; j <= bundle.r_columns; ++j) {
    MemberSet g(u.ground.size());
    g.add(u.point(1, j));
    bundle.gs.push_back(std::move(g));
  }

  std::vector<MemberSet> s_gens = bundle.as;
  s_gens.insert(s_gens.end(), bundle.xs.begin(), bundle.xs.end());
  bundle.s = union_closure(s_gens, u.ground, options.closure);

  TraceSystem traces = restrict_to(bundle.s, u.rows12());
  bundle.t = std::move(traces.system);
  bundle.t_preimage = std::move(traces.preimage);

  std::vector<MemberSet> r_gens(bundle.xs.begin(), bundle.xs.begin() + bundle.r_columns);
  r_gens.insert(r_gens.end(), bundle.gs.begin(), bundle.gs.end());
  bundle.r = union_closure(r_gens, u.ground, options.closure);

  auto weigh = [&](const SetSystem& sys) {
    std::vector<Rational> values;
    values.reserve(sys.size());
    for (const auto& m : sys.members()) values.push_back(eval_lambda_star(u, m));
    return LogWeight(sys, std::move(values));
  };
  bundle.lambda_s = weigh(bundle.s);
  bundle.lambda_t = weigh(bundle.t);
  bundle.lambda_r = weigh(bundle.r);
  return bundle;
}

std::vector<std::uint32_t> Section6Bundle::level_family_t(std::size_t n) const {
  if (n == 0 || (n + 1) * (n + 1) - 1 > columns)
    throw std::invalid_argument("level_family_t: tile does not fit the universe");
  std::vector<std::uint32_t> idx;
  for (std::size_t k = n * n; k < (n + 1) * (n + 1); ++k) {
    auto i = t.index_of(xs[k - 1]);
    if (!i) throw std::logic_error("level_family_t: x generator missing from T");
    idx.push_back(static_cast<std::uint32_t>(*i));
  }
  return idx;
}

Lemma61Result verify_lemma_6_1(const Section6Bundle& bundle, std::size_t n, std::int64_t c) {
  if (c < 1) throw std::invalid_argument("verify_lemma_6_1: needs C >= 1");
  Lemma61Result result;
  result.hypothesis_ok = static_cast<std::size_t>(c) <= n;

  std::vector<std::uint32_t> family = bundle.level_family_t(n);
  std::vector<MemberSet> gens;
  for (std::uint32_t i : family) gens.push_back(bundle.t.member(i));
  SetSystem generated = union_closure(gens, bundle.t.ground());

  PropagationEngine engine(bundle.lambda_t);
  std::size_t g = 0;
  for (std::size_t i = 0; i < engine.grid().size(); ++i)
    if (!(Rational(c) < engine.grid()[i])) g = i;
  auto closure = engine.closure_at(family, g);
  for (std::uint32_t i : closure.members) {
    if (!generated.contains(bundle.t.member(i))) {
      result.contained = false;
      result.offender = bundle.t.member(i);
      break;
    }
  }
  return result;
}

Section6BoundRow verify_section6_bounds(const Section6Bundle& bundle, std::size_t n) {
  Section6BoundRow row;
  row.n = n;
  row.bound = Rational(static_cast<std::int64_t>(n));

  std::vector<std::uint32_t> family = bundle.level_family_t(n);
  for (std::uint32_t i : family)
    if (Rational(1) < bundle.lambda_t.value(i)) row.family_in_w1 = false;

  const MemberSet& b = bundle.bs.at(n - 1);
  auto b_idx = bundle.t.index_of(b);
  if (!b_idx) throw std::logic_error("verify_section6_bounds: b_n missing from T");
  row.lambda_b = bundle.lambda_t.value(*b_idx);

  PropagationEngine engine(bundle.lambda_t);
  row.v = engine.v_value(family, static_cast<std::uint32_t>(*b_idx));
  row.pass = row.family_in_w1 && row.lambda_b == Rational(0) && row.v.finite &&
             !(row.v.value < row.bound);
  return row;
}

LPropagationResult verify_l_propagation(const Section6Bundle& bundle, Section6System which,
                                        const Rational& level,
                                        const PropagationLimits& limits) {
  const LogWeight& w = which == Section6System::s ? bundle.lambda_s : bundle.lambda_r;
  LPropagationResult result;
  result.report = propagation_constant(w, level, limits);
  result.pass = result.report.max_v.finite && !(level < result.report.max_v.value);
  return result;
}

}  // namespace ucs
