#include "ucs/propagation.hpp"

#include <algorithm>
#include <unordered_set>

namespace ucs {

LogWeight::LogWeight(const SetSystem& system, std::vector<Rational> values)
    : system_(&system), values_(std::move(values)) {
  if (values_.size() != system.size())
    throw std::invalid_argument("log weight: must assign a value to every member");
  for (const auto& v : values_)
    if (v.negative()) throw std::invalid_argument("log weight: negative value");
}

const Rational& LogWeight::value_of(const MemberSet& m) const {
  auto idx = system_->index_of(m);
  if (!idx) throw std::invalid_argument("log weight: set is not a member of the system");
  return values_[*idx];
}

Rational LogWeight::max_value() const {
  Rational mx(0);
  for (const auto& v : values_)
    if (mx < v) mx = v;
  return mx;
}

std::vector<Rational> LogWeight::level_grid() const {
  std::vector<Rational> grid = values_;
  grid.push_back(Rational(0));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

namespace {

SubadditivityWitness check_pairs_slow(const LogWeight& w) {
  const SetSystem& s = w.system();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j) {
      MemberSet u = s.member(i) | s.member(j);
      auto idx = s.index_of(u);
      if (!idx)
        throw std::invalid_argument("check_log_weight: system is not union-closed");
      if (w.value(i) + w.value(j) < w.value(*idx)) return {false, i, j};
    }
  }
  return {true, 0, 0};
}

}  // namespace

SubadditivityWitness check_log_weight(const LogWeight& w) {
  const SetSystem& s = w.system();
  bool integral = true;
  for (const auto& v : w.values())
    if (!v.is_integer()) {
      integral = false;
      break;
    }
  // Mask-indexed scan when the family is the full power set of a low-word
  // window; falls back to the member-order scan to report the first
  // violating pair deterministically.
  if (integral && s.ground().size() <= 64 && s.size() > 0) {
    MemberSet window(s.ground().size());
    for (const auto& m : s.members()) window |= m;
    std::uint64_t top = window.low_word();
    bool power_of_window = top < (std::uint64_t{1} << 20) &&
                           s.size() == (std::size_t{1} << window.count());
    if (power_of_window) {
      std::vector<std::int64_t> by_mask(top + 1, 0);
      std::vector<std::uint64_t> words;
      words.reserve(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::uint64_t word = s.member(i).low_word();
        by_mask[word] = w.value(i).num();
        words.push_back(word);
      }
      for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i; j < words.size(); ++j)
          if (by_mask[words[i] | words[j]] > by_mask[words[i]] + by_mask[words[j]])
            return check_pairs_slow(w);
      return {true, 0, 0};
    }
  }
  return check_pairs_slow(w);
}

SetSystem level_set(const LogWeight& w, const Rational& level) {
  const SetSystem& s = w.system();
  std::vector<MemberSet> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!(level < w.value(i))) out.push_back(s.member(i));
  return SetSystem(s.ground(), std::move(out), false);
}

PropagationEngine::PropagationEngine(const LogWeight& w)
    : weight_(&w), grid_(w.level_grid()), level_cache_(grid_.size()) {}

const std::vector<std::uint32_t>& PropagationEngine::level_members(std::size_t grid_index) {
  auto& slot = level_cache_.at(grid_index);
  if (!slot) {
    std::vector<std::uint32_t> idx;
    const Rational& c = grid_[grid_index];
    for (std::size_t i = 0; i < weight_->system().size(); ++i)
      if (!(c < weight_->value(i))) idx.push_back(static_cast<std::uint32_t>(i));
    slot = std::move(idx);
  }
  return *slot;
}

namespace {

// Keeps only the ⊆-maximal sets of `items`; deterministic order preserved.
std::vector<MemberSet> maximal_antichain(std::vector<MemberSet> items) {
  std::vector<MemberSet> out;
  for (auto& cand : items) {
    bool dominated = false;
    for (const auto& kept : out)
      if (cand.subset_of(kept)) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    std::erase_if(out, [&](const MemberSet& kept) { return kept.subset_of(cand); });
    out.push_back(std::move(cand));
  }
  return out;
}

}  // namespace

PropagationEngine::Closure PropagationEngine::closure_at(
    const std::vector<std::uint32_t>& e_indices, std::size_t grid_index) {
  const SetSystem& s = weight_->system();
  const Rational& c = grid_[grid_index];

  Closure result;
  std::vector<std::uint32_t> base;
  for (std::uint32_t i : e_indices)
    if (!(c < weight_->value(i))) base.push_back(i);
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  if (base.empty()) return result;

  MemberSet top(s.ground().size());
  for (std::uint32_t i : base) top |= s.member(i);

  // All sets the closure can ever contain: level-C members inside join(E∩W_C).
  const auto& wc = level_members(grid_index);
  std::vector<std::uint32_t> cand;
  cand.reserve(wc.size());
  for (std::uint32_t i : wc)
    if (s.member(i).subset_of(top)) cand.push_back(i);

  std::unordered_set<std::uint32_t> in_f(base.begin(), base.end());

  // Unions of pairs only matter through maximal members, so the iteration
  // tracks an antichain of maximal closure members and an antichain of the
  // pair-unions already processed.
  std::vector<MemberSet> f_max;
  for (std::uint32_t i : base) f_max.push_back(s.member(i));
  f_max = maximal_antichain(std::move(f_max));
  std::vector<MemberSet> front = f_max;
  std::vector<MemberSet> processed_unions;

  while (true) {
    std::vector<MemberSet> round_unions;
    for (const auto& a : front)
      for (const auto& b : f_max) round_unions.push_back(a | b);
    round_unions = maximal_antichain(std::move(round_unions));
    std::erase_if(round_unions, [&](const MemberSet& u) {
      for (const auto& p : processed_unions)
        if (u.subset_of(p)) return true;
      return false;
    });
    if (round_unions.empty()) break;

    std::vector<std::uint32_t> added;
    for (std::uint32_t i : cand) {
      if (in_f.count(i)) continue;
      for (const auto& u : round_unions)
        if (s.member(i).subset_of(u)) {
          added.push_back(i);
          break;
        }
    }
    for (const auto& u : round_unions) processed_unions.push_back(u);
    processed_unions = maximal_antichain(std::move(processed_unions));
    if (added.empty()) break;

    ++result.steps;
    std::vector<MemberSet> new_members;
    for (std::uint32_t i : added) {
      in_f.insert(i);
      new_members.push_back(s.member(i));
    }
    new_members = maximal_antichain(std::move(new_members));
    std::erase_if(new_members, [&](const MemberSet& m) {
      for (const auto& kept : f_max)
        if (m.subset_of(kept)) return true;
      return false;
    });
    if (new_members.empty()) break;  // nothing new can enlarge any union
    front = new_members;
    for (auto& m : new_members) f_max.push_back(std::move(m));
    f_max = maximal_antichain(std::move(f_max));
  }

  result.members.assign(in_f.begin(), in_f.end());
  std::sort(result.members.begin(), result.members.end());
  return result;
}

VValue PropagationEngine::v_value(const std::vector<std::uint32_t>& e_indices,
                                  std::uint32_t z_index) {
  if (e_indices.empty()) return VValue::infinite();
  const SetSystem& s = weight_->system();
  MemberSet top(s.ground().size());
  for (std::uint32_t i : e_indices) top |= s.member(i);
  if (!s.member(z_index).subset_of(top)) return VValue::infinite();

  for (std::size_t g = 0; g < grid_.size(); ++g) {
    if (grid_[g] < weight_->value(z_index)) continue;
    Closure cl = closure_at(e_indices, g);
    if (std::binary_search(cl.members.begin(), cl.members.end(), z_index))
      return VValue::of(grid_[g]);
  }
  return VValue::infinite();
}

PropagationReport PropagationEngine::propagation_constant(const Rational& level,
                                                          const PropagationLimits& limits) {
  PropagationReport report;
  report.level = level;
  report.max_v = VValue::of(Rational(0));

  std::vector<std::uint32_t> wl;
  for (std::size_t i = 0; i < weight_->system().size(); ++i)
    if (!(level < weight_->value(i))) wl.push_back(static_cast<std::uint32_t>(i));

  bool truncated_by_size = limits.max_subset_size < wl.size();
  bool truncated_by_count = false;
  std::uint64_t enumerated = 0;
  bool have_witness = false;

  const SetSystem& s = weight_->system();
  std::size_t max_k = std::min<std::size_t>(limits.max_subset_size, wl.size());
  std::vector<std::size_t> comb;
  for (std::size_t k = 1; k <= max_k && !truncated_by_count; ++k) {
    comb.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      if (enumerated >= limits.max_subsets) {
        truncated_by_count = true;
        break;
      }
      ++enumerated;

      std::vector<std::uint32_t> e_idx;
      e_idx.reserve(k);
      MemberSet top(s.ground().size());
      for (std::size_t pos : comb) {
        e_idx.push_back(wl[pos]);
        top |= s.member(wl[pos]);
      }
      std::vector<std::uint32_t> targets;
      for (std::uint32_t zi : wl)
        if (s.member(zi).subset_of(top)) targets.push_back(zi);

      // Resolve every target's V by one ascending sweep of the grid.
      std::vector<std::uint32_t> unresolved = targets;
      for (std::size_t g = 0; g < grid_.size() && !unresolved.empty(); ++g) {
        Closure cl = closure_at(e_idx, g);
        std::vector<std::uint32_t> still;
        for (std::uint32_t zi : unresolved) {
          if (std::binary_search(cl.members.begin(), cl.members.end(), zi)) {
            ++report.pairs_examined;
            VValue v = VValue::of(grid_[g]);
            if (!have_witness || report.max_v < v) {
              report.max_v = v;
              report.witness_e.assign(e_idx.begin(), e_idx.end());
              report.witness_z = zi;
              have_witness = true;
            }
          } else {
            still.push_back(zi);
          }
        }
        unresolved = std::move(still);
      }
      for (std::uint32_t zi : unresolved) {
        // Unreachable filter member: only possible on a non-union-closed
        // host. Report as infinite rather than hiding it.
        ++report.pairs_examined;
        if (!have_witness || report.max_v < VValue::infinite()) {
          report.max_v = VValue::infinite();
          report.witness_e.assign(e_idx.begin(), e_idx.end());
          report.witness_z = zi;
          have_witness = true;
        }
      }

      // next combination
      std::size_t i = k;
      while (i > 0 && comb[i - 1] == wl.size() - k + i - 1) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  report.exhaustive = !truncated_by_size && !truncated_by_count;
  return report;
}

SetSystem fbp_step(const std::vector<MemberSet>& e, const Rational& c, const LogWeight& w) {
  const SetSystem& s = w.system();
  std::vector<MemberSet> base;
  for (const auto& x : e) {
    auto idx = s.index_of(x);
    if (!idx) throw std::invalid_argument("fbp_step: set outside the system");
    if (!(c < w.value(*idx))) base.push_back(x);
  }
  if (base.empty()) return SetSystem(s.ground(), {}, false);

  std::vector<MemberSet> unions;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) unions.push_back(base[i] | base[j]);
  unions = maximal_antichain(std::move(unions));

  std::vector<MemberSet> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (c < w.value(i)) continue;
    for (const auto& u : unions)
      if (s.member(i).subset_of(u)) {
        out.push_back(s.member(i));
        break;
      }
  }
  return SetSystem(s.ground(), std::move(out), false);
}

FbpClosureResult fbp_closure(const std::vector<MemberSet>& e, const Rational& c,
                             const LogWeight& w) {
  const SetSystem& s = w.system();
  std::vector<std::uint32_t> e_idx;
  for (const auto& x : e) {
    auto idx = s.index_of(x);
    if (!idx) throw std::invalid_argument("fbp_closure: set outside the system");
    e_idx.push_back(static_cast<std::uint32_t>(*idx));
  }
  PropagationEngine engine(w);
  std::size_t g = 0;
  // Largest grid value ≤ c yields the same level set as c.
  for (std::size_t i = 0; i < engine.grid().size(); ++i)
    if (!(c < engine.grid()[i])) g = i;
  auto cl = engine.closure_at(e_idx, g);
  std::vector<MemberSet> members;
  members.reserve(cl.members.size());
  for (std::uint32_t i : cl.members) members.push_back(s.member(i));
  return {SetSystem(s.ground(), std::move(members), false), cl.steps};
}

VValue v_value(const std::vector<MemberSet>& e, const MemberSet& z, const LogWeight& w) {
  const SetSystem& s = w.system();
  auto z_idx = s.index_of(z);
  if (!z_idx) throw std::invalid_argument("v_value: target outside the system");
  std::vector<std::uint32_t> e_idx;
  for (const auto& x : e) {
    auto idx = s.index_of(x);
    if (!idx) throw std::invalid_argument("v_value: set outside the system");
    e_idx.push_back(static_cast<std::uint32_t>(*idx));
  }
  PropagationEngine engine(w);
  return engine.v_value(e_idx, static_cast<std::uint32_t>(*z_idx));
}

PropagationReport propagation_constant(const LogWeight& w, const Rational& level,
                                       const PropagationLimits& limits) {
  PropagationEngine engine(w);
  return engine.propagation_constant(level, limits);
}

}  // namespace ucs
