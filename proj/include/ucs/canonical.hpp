#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ucs/propagation.hpp"
#include "ucs/set_system.hpp"

namespace ucs {

// Pairwise disjoint, non-empty blocks E_1..E_N over a ground set. Block
// sizes are non-decreasing unless explicitly allowed otherwise.
class Spread {
 public:
  Spread(GroundSet ground, std::vector<MemberSet> blocks, bool allow_irregular = false);

  const GroundSet& ground() const { return ground_; }
  const std::vector<MemberSet>& blocks() const { return blocks_; }
  std::size_t levels() const { return blocks_.size(); }
  const MemberSet& block(std::size_t level) const { return blocks_.at(level - 1); }  // 1-based
  bool sizes_monotone() const { return sizes_monotone_; }

  MemberSet join_all() const;
  MemberSet below(std::size_t level) const;  // E_{<level}
  MemberSet above(std::size_t level) const;  // E_{>level} (empty at the top)

 private:
  GroundSet ground_;
  std::vector<MemberSet> blocks_;
  bool sizes_monotone_ = true;
};

// Consecutive disjoint blocks of the requested sizes over the ground.
Spread make_spread(const std::vector<std::size_t>& sizes, const GroundSet& ground,
                   bool allow_irregular = false);
// Ground plus spread with block sizes (2, ..., levels+1) over numbered points.
Spread default_spread(std::size_t levels);

// New spread whose j-th block is the chosen subset of block `selection[j].first`.
// Block indices are 1-based, pairwise distinct; subsets non-empty.
Spread refine(const Spread& spread,
              const std::vector<std::pair<std::size_t, MemberSet>>& selection);

enum class CanonicalKind { tmax, tmin, tort };
std::string to_string(CanonicalKind kind);

// The three canonical systems built from a spread: members at level n are
// E_{<n} ∪ a (tmax), a ∪ E_{>n} (tmin), E_{<n} ∪ a ∪ E_{>n} (tort) for
// non-empty a ⊆ E_n, with E_{>N} empty at the truncation.
SetSystem tmax(const Spread& spread);
SetSystem tmin(const Spread& spread);
SetSystem tort(const Spread& spread);
SetSystem canonical_system(CanonicalKind kind, const Spread& spread);

// Witness that S contains (exactly, trace by trace) the canonical system of
// the given kind on the spread.
struct CanonicalWitness {
  CanonicalKind kind;
  struct Entry {
    std::size_t level;     // 1-based
    MemberSet block_part;  // the non-empty a ⊆ E_level
    std::size_t member;    // index into the searched system
  };
  std::vector<Entry> entries;

  const Entry* find(std::size_t level, const MemberSet& block_part) const;
};

struct CanonicalSearch {
  std::optional<CanonicalWitness> witness;
  // When no witness: the first missing trace.
  std::size_t missing_level = 0;
  MemberSet missing_part;
};
CanonicalSearch contains_canonical(const SetSystem& s, const Spread& spread, CanonicalKind kind);

// Block-trace weights attached to a spread, evaluated on an arbitrary host
// family over the same ground set. weight_tmax charges the trace on the
// highest block met (0 if none is met or the highest one is fully inside);
// weight_tmin charges the lowest block met symmetrically.
Rational eval_weight_tmax(const Spread& spread, const MemberSet& x);
Rational eval_weight_tmin(const Spread& spread, const MemberSet& x);
LogWeight weight_tmax_on(const Spread& spread, const SetSystem& host);
LogWeight weight_tmin_on(const Spread& spread, const SetSystem& host);

// Level-one propagation failure table for the tmax/tmin constructions.
struct LevelOneRow {
  std::size_t n = 0;            // level
  std::size_t block_size = 0;   // |E_n|
  bool lambda_a_ok = false;     // λ(a) = 1 for every a in F_n
  Rational lambda_b;            // λ(b_n), must be 0
  VValue v;                     // exact V_{F_n}(b_n) on the canonical host
  std::optional<VValue> v_power;  // same V on the power-set host, when computed
  Rational bound;               // ½|E_n|
  bool pass = false;
};
struct LevelOneOptions {
  // Rows whose b_n spans at most this many points are re-checked on the
  // explicit full power set of those points.
  std::size_t power_host_max_points = 18;
  ClosureLimits closure;
};
std::vector<LevelOneRow> verify_level_one_failure(CanonicalKind kind, std::size_t levels,
                                                  const LevelOneOptions& options = {});

// Prop-style spread transfer between two representations of one semilattice.
// `member_map` sends member indices of `first` to member indices of `second`
// and must be a union-isomorphism; the witness certifies tmax containment in
// the first representation.
struct TransferResult {
  Spread spread;              // the spread in the second representation
  CanonicalWitness witness;   // re-verified tmax witness in `second`
};
TransferResult transfer_tmax(const SetSystem& first, const Spread& first_spread,
                             const CanonicalWitness& witness, const SetSystem& second,
                             const std::vector<std::size_t>& member_map);

}  // namespace ucs
