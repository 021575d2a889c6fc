#include "ucs/canonical.hpp"

#include <algorithm>

namespace ucs {

Spread::Spread(GroundSet ground, std::vector<MemberSet> blocks, bool allow_irregular)
    : ground_(std::move(ground)), blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("spread: needs at least one block");
  MemberSet seen(ground_.size());
  std::size_t prev = 0;
  for (const auto& b : blocks_) {
    if (b.universe_size() != ground_.size())
      throw std::invalid_argument("spread: block over a different ground set");
    if (b.empty()) throw std::invalid_argument("spread: empty block");
    if (seen.intersects(b)) throw std::invalid_argument("spread: blocks are not disjoint");
    seen |= b;
    if (b.count() < prev) sizes_monotone_ = false;
    prev = b.count();
  }
  if (!sizes_monotone_ && !allow_irregular)
    throw std::invalid_argument("spread: block sizes decrease (pass allow_irregular to keep)");
}

MemberSet Spread::join_all() const {
  MemberSet u(ground_.size());
  for (const auto& b : blocks_) u |= b;
  return u;
}

MemberSet Spread::below(std::size_t level) const {
  MemberSet u(ground_.size());
  for (std::size_t k = 1; k < level; ++k) u |= block(k);
  return u;
}

MemberSet Spread::above(std::size_t level) const {
  MemberSet u(ground_.size());
  for (std::size_t k = level + 1; k <= levels(); ++k) u |= block(k);
  return u;
}

Spread make_spread(const std::vector<std::size_t>& sizes, const GroundSet& ground,
                   bool allow_irregular) {
  if (sizes.empty()) throw std::invalid_argument("make_spread: no block sizes");
  std::size_t total = 0;
  for (std::size_t s : sizes) {
    if (s == 0) throw std::invalid_argument("make_spread: zero block size");
    total += s;
  }
  if (total > ground.size())
    throw std::invalid_argument("make_spread: ground set too small for the requested blocks");
  std::vector<MemberSet> blocks;
  std::size_t next = 0;
  for (std::size_t s : sizes) {
    MemberSet b(ground.size());
    for (std::size_t i = 0; i < s; ++i) b.add(next++);
    blocks.push_back(std::move(b));
  }
  return Spread(ground, std::move(blocks), allow_irregular);
}

Spread default_spread(std::size_t levels) {
  if (levels == 0) throw std::invalid_argument("default_spread: needs at least one level");
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  for (std::size_t n = 1; n <= levels; ++n) {
    sizes.push_back(n + 1);
    total += n + 1;
  }
  return make_spread(sizes, GroundSet::numbered(total));
}

Spread refine(const Spread& spread,
              const std::vector<std::pair<std::size_t, MemberSet>>& selection) {
  if (selection.empty()) throw std::invalid_argument("refine: empty selection");
  std::vector<bool> used(spread.levels() + 1, false);
  std::vector<MemberSet> blocks;
  for (const auto& [level, subset] : selection) {
    if (level == 0 || level > spread.levels())
      throw std::invalid_argument("refine: block index out of range");
    if (used[level]) throw std::invalid_argument("refine: repeated block index");
    used[level] = true;
    if (subset.empty()) throw std::invalid_argument("refine: empty subset");
    if (!subset.subset_of(spread.block(level)))
      throw std::invalid_argument("refine: subset escapes its block");
    blocks.push_back(subset);
  }
  return Spread(spread.ground(), std::move(blocks), /*allow_irregular=*/true);
}

std::string to_string(CanonicalKind kind) {
  switch (kind) {
    case CanonicalKind::tmax: return "tmax";
    case CanonicalKind::tmin: return "tmin";
    case CanonicalKind::tort: return "tort";
  }
  return "?";
}

namespace {

// The canonical trace at (level, a): what a witness member must cut out of
// join(spread).
MemberSet canonical_trace(CanonicalKind kind, const Spread& spread, std::size_t level,
                          const MemberSet& part) {
  MemberSet t = part;
  if (kind != CanonicalKind::tmin) t |= spread.below(level);
  if (kind != CanonicalKind::tmax) t |= spread.above(level);
  return t;
}

std::vector<MemberSet> block_subsets(const MemberSet& block) {
  std::vector<std::size_t> pts = block.indices();
  std::vector<MemberSet> out;
  std::uint64_t total = std::uint64_t{1} << pts.size();
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    MemberSet a(block.universe_size());
    for (std::size_t i = 0; i < pts.size(); ++i)
      if ((mask >> i) & 1) a.add(pts[i]);
    out.push_back(std::move(a));
  }
  return out;
}

SetSystem build_canonical(CanonicalKind kind, const Spread& spread) {
  std::vector<MemberSet> members;
  for (std::size_t n = 1; n <= spread.levels(); ++n)
    for (auto& a : block_subsets(spread.block(n)))
      members.push_back(canonical_trace(kind, spread, n, a));
  std::sort(members.begin(), members.end(),
            [](const MemberSet& a, const MemberSet& b) { return lex_less(a, b); });
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return SetSystem(spread.ground(), std::move(members), /*closed=*/true);
}

}  // namespace

SetSystem tmax(const Spread& spread) { return build_canonical(CanonicalKind::tmax, spread); }
SetSystem tmin(const Spread& spread) { return build_canonical(CanonicalKind::tmin, spread); }
SetSystem tort(const Spread& spread) { return build_canonical(CanonicalKind::tort, spread); }

SetSystem canonical_system(CanonicalKind kind, const Spread& spread) {
  return build_canonical(kind, spread);
}

const CanonicalWitness::Entry* CanonicalWitness::find(std::size_t level,
                                                      const MemberSet& block_part) const {
  for (const auto& e : entries)
    if (e.level == level && e.block_part == block_part) return &e;
  return nullptr;
}

CanonicalSearch contains_canonical(const SetSystem& s, const Spread& spread,
                                   CanonicalKind kind) {
  if (spread.ground().size() != s.ground().size())
    throw std::invalid_argument("contains_canonical: spread over a different ground set");
  TraceSystem traces = restrict_to(s, spread.join_all());

  CanonicalWitness w{kind, {}};
  for (std::size_t n = 1; n <= spread.levels(); ++n) {
    for (auto& a : block_subsets(spread.block(n))) {
      MemberSet required = canonical_trace(kind, spread, n, a);
      auto idx = traces.system.index_of(required);
      if (!idx) {
        CanonicalSearch miss;
        miss.missing_level = n;
        miss.missing_part = a;
        return miss;
      }
      w.entries.push_back({n, a, traces.preimage[*idx]});
    }
  }
  CanonicalSearch hit;
  hit.witness = std::move(w);
  return hit;
}

Rational eval_weight_tmax(const Spread& spread, const MemberSet& x) {
  for (std::size_t n = spread.levels(); n >= 1; --n) {
    const MemberSet& block = spread.block(n);
    std::size_t hit = x.intersection_count(block);
    if (hit == 0) continue;
    if (hit == block.count()) return Rational(0);
    return Rational(static_cast<std::int64_t>(hit));
  }
  return Rational(0);
}

Rational eval_weight_tmin(const Spread& spread, const MemberSet& x) {
  for (std::size_t n = 1; n <= spread.levels(); ++n) {
    const MemberSet& block = spread.block(n);
    std::size_t hit = x.intersection_count(block);
    if (hit == 0) continue;
    if (hit == block.count()) return Rational(0);
    return Rational(static_cast<std::int64_t>(hit));
  }
  return Rational(0);
}

namespace {

LogWeight weight_on(const Spread& spread, const SetSystem& host,
                    Rational (*eval)(const Spread&, const MemberSet&)) {
  if (host.ground().size() != spread.ground().size())
    throw std::invalid_argument("spread weight: host over a different ground set");
  std::vector<Rational> values;
  values.reserve(host.size());
  for (const auto& m : host.members()) values.push_back(eval(spread, m));
  return LogWeight(host, std::move(values));
}

}  // namespace

LogWeight weight_tmax_on(const Spread& spread, const SetSystem& host) {
  return weight_on(spread, host, &eval_weight_tmax);
}

LogWeight weight_tmin_on(const Spread& spread, const SetSystem& host) {
  return weight_on(spread, host, &eval_weight_tmin);
}

std::vector<LevelOneRow> verify_level_one_failure(CanonicalKind kind, std::size_t levels,
                                                  const LevelOneOptions& options) {
  if (kind == CanonicalKind::tort)
    throw std::invalid_argument("verify_level_one_failure: use the decisive-weight harness for tort");
  if (levels < 2) throw std::invalid_argument("verify_level_one_failure: needs levels >= 2");

  Spread spread = default_spread(levels);
  SetSystem host = canonical_system(kind, spread);
  LogWeight w = kind == CanonicalKind::tmax ? weight_tmax_on(spread, host)
                                            : weight_tmin_on(spread, host);
  PropagationEngine engine(w);

  std::vector<LevelOneRow> rows;
  for (std::size_t n = 2; n <= levels; ++n) {
    LevelOneRow row;
    row.n = n;
    row.block_size = spread.block(n).count();
    row.bound = Rational(static_cast<std::int64_t>(row.block_size), 2);

    // F_n: members whose trace on E_n is a singleton (all earlier blocks for
    // tmax, all later blocks for tmin), b_n their join.
    std::vector<MemberSet> f;
    std::vector<std::uint32_t> f_idx;
    row.lambda_a_ok = true;
    for (std::size_t pt : spread.block(n).indices()) {
      MemberSet a(spread.ground().size());
      a.add(pt);
      MemberSet member = canonical_trace(kind, spread, n, a);
      auto idx = host.index_of(member);
      if (!idx) throw std::logic_error("verify_level_one_failure: missing canonical member");
      if (!(w.value(*idx) == Rational(1))) row.lambda_a_ok = false;
      f.push_back(member);
      f_idx.push_back(static_cast<std::uint32_t>(*idx));
    }
    MemberSet b = join(f);
    auto b_idx = host.index_of(b);
    if (!b_idx) throw std::logic_error("verify_level_one_failure: join escaped the host");
    row.lambda_b = w.value(*b_idx);

    row.v = engine.v_value(f_idx, static_cast<std::uint32_t>(*b_idx));

    // Cross-check on the full power set of the points of b_n, where every
    // conceivable factor is available.
    if (b.count() <= options.power_host_max_points) {
      GroundSet sub_ground{spread.ground().labels_of(b)};
      std::vector<MemberSet> sub_blocks;
      for (std::size_t k = 1; k <= spread.levels(); ++k) {
        MemberSet piece = spread.block(k) & b;
        if (piece.empty()) continue;
        MemberSet translated(sub_ground.size());
        piece.for_each_index(
            [&](std::size_t i) { translated.add(sub_ground.index_of(spread.ground().label(i))); });
        sub_blocks.push_back(std::move(translated));
      }
      Spread sub_spread(sub_ground, std::move(sub_blocks), /*allow_irregular=*/true);
      SetSystem power = power_set_system(sub_ground, options.closure);
      LogWeight pw = kind == CanonicalKind::tmax ? weight_tmax_on(sub_spread, power)
                                                 : weight_tmin_on(sub_spread, power);
      PropagationEngine pe(pw);
      std::vector<std::uint32_t> pf_idx;
      for (const auto& member : f) {
        MemberSet translated(sub_ground.size());
        (member & b).for_each_index(
            [&](std::size_t i) { translated.add(sub_ground.index_of(spread.ground().label(i))); });
        pf_idx.push_back(static_cast<std::uint32_t>(*power.index_of(translated)));
      }
      MemberSet tb(sub_ground.size());
      b.for_each_index(
          [&](std::size_t i) { tb.add(sub_ground.index_of(spread.ground().label(i))); });
      row.v_power = pe.v_value(pf_idx, static_cast<std::uint32_t>(*power.index_of(tb)));
    }

    row.pass = row.lambda_a_ok && row.lambda_b == Rational(0) && row.v.finite &&
               !(row.v.value < row.bound) &&
               (!row.v_power || *row.v_power == row.v);
    rows.push_back(std::move(row));
  }
  return rows;
}

TransferResult transfer_tmax(const SetSystem& first, const Spread& first_spread,
                             const CanonicalWitness& witness, const SetSystem& second,
                             const std::vector<std::size_t>& member_map) {
  if (witness.kind != CanonicalKind::tmax)
    throw std::invalid_argument("transfer_tmax: witness must certify tmax containment");
  if (member_map.size() != first.size())
    throw std::invalid_argument("transfer_tmax: member map must cover the first system");
  for (std::size_t idx : member_map)
    if (idx >= second.size())
      throw std::invalid_argument("transfer_tmax: member map index out of range");

  // Singleton-trace members per (level, point), carried into the second
  // representation through the map.
  std::vector<std::vector<const MemberSet*>> images(first_spread.levels() + 1);
  std::vector<std::vector<std::size_t>> points(first_spread.levels() + 1);
  for (std::size_t n = 1; n <= first_spread.levels(); ++n) {
    for (std::size_t pt : first_spread.block(n).indices()) {
      MemberSet a(first_spread.ground().size());
      a.add(pt);
      const auto* entry = witness.find(n, a);
      if (!entry)
        throw std::invalid_argument("transfer_tmax: witness lacks a singleton trace entry");
      images[n].push_back(&second.member(member_map[entry->member]));
      points[n].push_back(pt);
    }
  }

  // For each level-n position j pick the lowest point of the image that no
  // earlier-level image and no other level-n image contains.
  std::vector<MemberSet> new_blocks;
  for (std::size_t n = 1; n <= first_spread.levels(); ++n) {
    MemberSet block(second.ground().size());
    for (std::size_t j = 0; j < images[n].size(); ++j) {
      MemberSet eligible = *images[n][j];
      for (std::size_t m = 1; m < n; ++m)
        for (const auto* other : images[m]) eligible -= *other;
      for (std::size_t k = 0; k < images[n].size(); ++k)
        if (k != j) eligible -= *images[n][k];
      if (eligible.empty())
        throw std::invalid_argument(
            "transfer_tmax: no eligible point at level " + std::to_string(n) +
            " (witness or representations inconsistent)");
      block.add(eligible.indices().front());
    }
    new_blocks.push_back(std::move(block));
  }

  Spread transferred(second.ground(), std::move(new_blocks), /*allow_irregular=*/true);
  CanonicalSearch check = contains_canonical(second, transferred, CanonicalKind::tmax);
  if (!check.witness)
    throw std::invalid_argument("transfer_tmax: re-verification failed at level " +
                                std::to_string(check.missing_level));
  return {std::move(transferred), std::move(*check.witness)};
}

}  // namespace ucs
