#include "ucs/dichotomy.hpp"

#include <algorithm>

namespace ucs {

Colouring::Colouring(GroundSet ground, std::vector<MemberSet> classes)
    : ground_(std::move(ground)), classes_(std::move(classes)) {
  if (classes_.empty()) throw std::invalid_argument("colouring: needs at least one class");
  MemberSet seen(ground_.size());
  for (const auto& c : classes_) {
    if (c.universe_size() != ground_.size())
      throw std::invalid_argument("colouring: class over a different ground set");
    if (c.empty()) throw std::invalid_argument("colouring: empty class");
    if (seen.intersects(c)) throw std::invalid_argument("colouring: classes overlap");
    seen |= c;
  }
  if (!(seen == ground_.full_member()))
    throw std::invalid_argument("colouring: classes do not cover the ground set");
}

Colouring Colouring::trivial(const GroundSet& ground) {
  return Colouring(ground, {ground.full_member()});
}

namespace {

// Cell masks read the sets most-significant-first with a clear bit meaning
// "inside": mask 0 is the all-intersection cell.
MemberSet gamma_cell(const std::vector<MemberSet>& sets, const GroundSet& ground,
                     std::size_t depth, std::uint64_t mask) {
  MemberSet cell = ground.full_member();
  for (std::size_t j = 0; j < depth; ++j) {
    if ((mask >> (depth - 1 - j)) & 1)
      cell -= sets[j];
    else
      cell &= sets[j];
  }
  return cell;
}

}  // namespace

Colouring gamma_atoms(const std::vector<MemberSet>& sets, const GroundSet& ground) {
  if (sets.empty()) throw std::invalid_argument("gamma_atoms: needs at least one set");
  std::vector<MemberSet> classes;
  std::uint64_t cells = std::uint64_t{1} << sets.size();
  for (std::uint64_t mask = 0; mask < cells; ++mask) {
    MemberSet cell = gamma_cell(sets, ground, sets.size(), mask);
    if (!cell.empty()) classes.push_back(std::move(cell));
  }
  return Colouring(ground, std::move(classes));
}

ColoursSpreadResult colours_blocks(const Colouring& colouring, const Spread& spread,
                                   const std::vector<std::size_t>& blocks,
                                   std::size_t threshold) {
  for (std::size_t ci = 0; ci < colouring.size(); ++ci)
    for (std::size_t n : blocks)
      if (colouring.classes()[ci].intersection_count(spread.block(n)) < threshold)
        return {false, ci, n};
  return {true, 0, 0};
}

ColoursSpreadResult colours_spread(const Colouring& colouring, const Spread& spread,
                                   const Window& window) {
  return colours_blocks(colouring, spread, window.block_list(), window.threshold);
}

ShatterCheck shatters_blocks(const std::vector<MemberSet>& sequence, const Spread& spread,
                             std::size_t depth, const std::vector<std::size_t>& blocks,
                             std::size_t threshold) {
  if (sequence.size() < depth)
    throw std::invalid_argument("shatters: sequence shorter than the requested depth");
  ShatterCheck check{true, 0, SIZE_MAX};
  std::uint64_t cells = std::uint64_t{1} << depth;
  for (std::uint64_t mask = 0; mask < cells; ++mask) {
    MemberSet cell = gamma_cell(sequence, spread.ground(), depth, mask);
    for (std::size_t n : blocks) {
      std::size_t c = cell.intersection_count(spread.block(n));
      if (c < check.worst_count) {
        check.worst_count = c;
        check.worst_cell_mask = mask;
      }
    }
  }
  check.ok = check.worst_count >= threshold;
  return check;
}

ShatterCheck shatters(const std::vector<MemberSet>& sequence, const Spread& spread,
                      std::size_t depth, const Window& window) {
  return shatters_blocks(sequence, spread, depth, window.block_list(), window.threshold);
}

DecisiveReport decisive_statistic_blocks(const SetSystem& s, const Spread& spread,
                                         const Colouring& colouring, std::size_t class_index,
                                         const std::vector<std::size_t>& blocks) {
  if (class_index >= colouring.size())
    throw std::invalid_argument("decisive_statistic: class index out of range");
  DecisiveReport report;
  report.class_index = class_index;
  report.blocks = blocks;
  report.statistic.reserve(s.size());
  const MemberSet& c0 = colouring.classes()[class_index];
  for (std::size_t i = 0; i < s.size(); ++i) {
    const MemberSet& x = s.member(i);
    MemberSet xc = x.complement();
    std::size_t best = 0;
    for (std::size_t n : blocks) {
      const MemberSet& block = spread.block(n);
      std::size_t v = (x & c0).intersection_count(block);
      for (const auto& c : colouring.classes())
        v = std::min(v, (xc & c).intersection_count(block));
      best = std::max(best, v);
    }
    report.statistic.push_back(best);
    report.max_statistic = std::max(report.max_statistic, best);
  }
  return report;
}

DecisiveReport decisive_statistic(const SetSystem& s, const Spread& spread,
                                  const Colouring& colouring, std::size_t class_index,
                                  const Window& window) {
  return decisive_statistic_blocks(s, spread, colouring, class_index, window.block_list());
}

bool halves(const MemberSet& f, const MemberSet& d, const Spread& spread, const Window& window) {
  for (std::size_t n = window.first; n <= window.last; ++n) {
    const MemberSet& block = spread.block(n);
    if ((d & f).intersection_count(block) < window.threshold) return false;
    if ((d - f).intersection_count(block) < window.threshold) return false;
  }
  return true;
}

std::optional<HalverWitness> find_halver_blocks(const SetSystem& s, const Colouring& colouring,
                                                const Spread& spread,
                                                const std::vector<std::size_t>& blocks,
                                                std::size_t threshold) {
  ColoursSpreadResult pre = colours_blocks(colouring, spread, blocks, threshold);
  if (!pre.ok)
    throw std::invalid_argument("find_halver: colouring does not colour the spread window");
  // Strict majority of the window must survive, so the window shrinks by
  // less than half per round.
  std::size_t needed = blocks.size() / 2 + 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const MemberSet& y = s.member(i);
    std::vector<std::size_t> surviving;
    for (std::size_t n : blocks) {
      const MemberSet& block = spread.block(n);
      bool ok = true;
      for (const auto& c : colouring.classes()) {
        if ((c & y).intersection_count(block) < threshold ||
            (c - y).intersection_count(block) < threshold) {
          ok = false;
          break;
        }
      }
      if (ok) surviving.push_back(n);
    }
    if (surviving.size() >= needed) return HalverWitness{i, std::move(surviving)};
  }
  return std::nullopt;
}

std::optional<HalverWitness> find_halver(const SetSystem& s, const Colouring& colouring,
                                         const Spread& spread, const Window& window) {
  return find_halver_blocks(s, colouring, spread, window.block_list(), window.threshold);
}

DichotomyResult dichotomy_search(const SetSystem& s, const Spread& spread,
                                 const DichotomyParams& params) {
  DichotomyResult result;
  std::vector<std::size_t> blocks = Window::full(spread).block_list();
  std::vector<MemberSet> halvers;
  std::vector<std::size_t> halver_indices;

  auto try_decisive = [&](const Colouring& colouring) -> bool {
    if (params.bound < 0) return false;
    for (std::size_t ci = 0; ci < colouring.size(); ++ci) {
      DecisiveReport rep = decisive_statistic_blocks(s, spread, colouring, ci, blocks);
      if (rep.max_statistic <= static_cast<std::size_t>(params.bound)) {
        rep.decisive_at_bound = true;
        result.kind = DichotomyResult::Kind::decisive;
        result.decisive = std::move(rep);
        return true;
      }
    }
    return false;
  };

  while (true) {
    Colouring colouring = halvers.empty() ? Colouring::trivial(spread.ground())
                                          : gamma_atoms(halvers, spread.ground());
    DichotomyRound round;
    round.classes = colouring.size();
    round.window_blocks = blocks;

    ColoursSpreadResult colours = colours_blocks(colouring, spread, blocks, params.threshold);
    if (!colours.ok) {
      result.rounds.push_back(std::move(round));
      result.inconclusive_reason =
          "colouring stopped colouring the window (class " + std::to_string(colours.failing_class) +
          ", block " + std::to_string(colours.failing_block) + ")";
      return result;
    }

    if (halvers.size() >= params.depth) {
      ShatterCheck check = shatters_blocks(halvers, spread, params.depth, blocks,
                                           params.threshold);
      if (check.ok) {
        ShatterWitness w;
        w.members = halver_indices;
        w.blocks = blocks;
        w.threshold = params.threshold;
        std::uint64_t cells = std::uint64_t{1} << params.depth;
        for (std::uint64_t mask = 0; mask < cells; ++mask) {
          MemberSet cell = gamma_cell(halvers, spread.ground(), params.depth, mask);
          std::size_t mn = SIZE_MAX;
          for (std::size_t n : blocks) mn = std::min(mn, cell.intersection_count(spread.block(n)));
          w.cell_minima.push_back(mn);
        }
        result.kind = DichotomyResult::Kind::shatter;
        result.shatter = std::move(w);
        result.rounds.push_back(std::move(round));
        return result;
      }
      result.rounds.push_back(std::move(round));
      if (try_decisive(colouring)) return result;
      result.inconclusive_reason = "depth budget reached without a shattering certificate";
      return result;
    }

    std::optional<HalverWitness> halver =
        find_halver_blocks(s, colouring, spread, blocks, params.threshold);
    if (!halver) {
      result.rounds.push_back(std::move(round));
      if (try_decisive(colouring)) return result;
      result.inconclusive_reason = params.bound < 0
                                       ? "no halver found (decisive certificate disabled)"
                                       : "no halver and no decisive class within the bound";
      return result;
    }
    round.halver = halver->member;
    result.rounds.push_back(std::move(round));
    halvers.push_back(s.member(halver->member));
    halver_indices.push_back(halver->member);
    blocks = halver->surviving;
  }
}

RefinedStructure refined_structure(const SetSystem& s, const std::vector<MemberSet>& chain,
                                   std::vector<std::size_t> schedule) {
  if (chain.empty()) throw std::invalid_argument("refined_structure: empty chain");
  for (const auto& a : chain)
    if (!s.contains(a))
      throw std::invalid_argument("refined_structure: chain member outside the system");
  for (std::size_t k = 1; k <= chain.size(); ++k) {
    std::vector<MemberSet> prefix(chain.begin(), chain.begin() + k);
    if (!is_incompressible(prefix).incompressible)
      throw std::invalid_argument("refined_structure: prefix of length " + std::to_string(k) +
                                  " is compressible");
  }
  if (schedule.empty()) {
    for (std::size_t k = 1; k * k <= chain.size(); ++k) schedule.push_back(k * k);
  }
  if (schedule.empty() || schedule.front() == 0)
    throw std::invalid_argument("refined_structure: empty or zero schedule");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] > chain.size())
      throw std::invalid_argument("refined_structure: schedule exceeds the chain length");
    if (i > 0 && schedule[i] <= schedule[i - 1])
      throw std::invalid_argument("refined_structure: schedule must be strictly increasing");
  }

  std::size_t universe = s.ground().size();
  // d_k = join of the first n_k chain members.
  std::vector<MemberSet> d(schedule.size() + 1, MemberSet(universe));
  for (std::size_t k = 1; k <= schedule.size(); ++k) {
    d[k] = d[k - 1];
    for (std::size_t j = (k == 1 ? 0 : schedule[k - 2]); j < schedule[k - 1]; ++j)
      d[k] |= chain[j];
  }

  std::vector<MemberSet> blocks;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> transversal(schedule.size());
  for (std::size_t k = 1; k <= schedule.size(); ++k) {
    std::size_t lo = (k == 1 ? 0 : schedule[k - 2]);  // chain positions (0-based)
    std::size_t hi = schedule[k - 1];
    std::vector<MemberSet> reduced;
    for (std::size_t j = lo; j < hi; ++j) reduced.push_back(chain[j] - d[k - 1]);
    MemberSet block(universe);
    for (std::size_t j = 0; j < reduced.size(); ++j) {
      MemberSet eligible = reduced[j];
      for (std::size_t l = 0; l < reduced.size(); ++l)
        if (l != j) eligible -= reduced[l];
      if (eligible.empty())
        throw std::invalid_argument("refined_structure: no transversal point for chain member " +
                                    std::to_string(lo + j + 1));
      std::size_t point = eligible.indices().front();
      block.add(point);
      transversal[k - 1].push_back({point, lo + j});
    }
    blocks.push_back(std::move(block));
  }

  Spread spread(s.ground(), std::move(blocks), /*allow_irregular=*/true);

  // The witness members z = a_j ∪ d_{k-1} must already belong to S and cut
  // the trace E_{<k} ∪ {point} out of join(spread).
  MemberSet join_all = spread.join_all();
  for (std::size_t k = 1; k <= schedule.size(); ++k) {
    for (auto [point, chain_pos] : transversal[k - 1]) {
      MemberSet z = chain[chain_pos] | d[k - 1];
      if (!s.contains(z))
        throw std::invalid_argument("refined_structure: constructed member escapes the system");
      MemberSet expected = spread.below(k);
      expected.add(point);
      if (!((z & join_all) == expected))
        throw std::logic_error("refined_structure: trace equation violated");
    }
  }

  CanonicalSearch check = contains_canonical(s, spread, CanonicalKind::tmax);
  if (!check.witness)
    throw std::logic_error("refined_structure: tmax re-verification failed at level " +
                           std::to_string(check.missing_level));

  RefinedStructure out{std::move(spread), std::move(*check.witness), std::move(schedule), {}};
  for (const auto& b : out.spread.blocks()) out.block_sizes.push_back(b.count());
  return out;
}

}  // namespace ucs
