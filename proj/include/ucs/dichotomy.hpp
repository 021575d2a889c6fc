#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ucs/canonical.hpp"
#include "ucs/set_system.hpp"

namespace ucs {

// A partition of the ground set into non-empty classes.
class Colouring {
 public:
  Colouring(GroundSet ground, std::vector<MemberSet> classes);

  const GroundSet& ground() const { return ground_; }
  const std::vector<MemberSet>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }

  static Colouring trivial(const GroundSet& ground);

 private:
  GroundSet ground_;
  std::vector<MemberSet> classes_;
};

// Finite surrogate for "for all sufficiently large n": block indices
// first..last (1-based, inclusive) and the per-block threshold t.
struct Window {
  std::size_t first = 1;
  std::size_t last = 1;
  std::size_t threshold = 1;

  std::vector<std::size_t> block_list() const {
    std::vector<std::size_t> out;
    for (std::size_t n = first; n <= last; ++n) out.push_back(n);
    return out;
  }
  static Window full(const Spread& spread, std::size_t threshold = 1) {
    return {1, spread.levels(), threshold};
  }
};

// Intersection cells of {a_j, a_j^c}; empty cells dropped, order = binary
// mask order with bit j set meaning "inside a_j".
Colouring gamma_atoms(const std::vector<MemberSet>& sets, const GroundSet& ground);

struct ColoursSpreadResult {
  bool ok;
  std::size_t failing_class = 0;
  std::size_t failing_block = 0;  // 1-based
};
ColoursSpreadResult colours_spread(const Colouring& colouring, const Spread& spread,
                                   const Window& window);
ColoursSpreadResult colours_blocks(const Colouring& colouring, const Spread& spread,
                                   const std::vector<std::size_t>& blocks,
                                   std::size_t threshold);

struct ShatterCheck {
  bool ok;
  std::uint64_t worst_cell_mask = 0;  // cell attaining the minimum
  std::size_t worst_count = 0;
};
// Every ± intersection cell of the first `depth` sets must meet every listed
// block in at least `threshold` points.
ShatterCheck shatters(const std::vector<MemberSet>& sequence, const Spread& spread,
                      std::size_t depth, const Window& window);
ShatterCheck shatters_blocks(const std::vector<MemberSet>& sequence, const Spread& spread,
                             std::size_t depth, const std::vector<std::size_t>& blocks,
                             std::size_t threshold);

struct DecisiveReport {
  std::size_t class_index = 0;             // the candidate decisive class C_0
  std::vector<std::size_t> statistic;      // per member of S
  std::size_t max_statistic = 0;
  std::vector<std::size_t> blocks;         // blocks the statistic ranged over
  bool decisive_at_bound = false;          // max ≤ B (when a bound was given)
};
// Per member x: max over listed blocks n of
//   min( |x ∩ C0 ∩ E_n| ; |x^c ∩ C ∩ E_n| over all classes C ).
DecisiveReport decisive_statistic(const SetSystem& s, const Spread& spread,
                                  const Colouring& colouring, std::size_t class_index,
                                  const Window& window);
DecisiveReport decisive_statistic_blocks(const SetSystem& s, const Spread& spread,
                                         const Colouring& colouring, std::size_t class_index,
                                         const std::vector<std::size_t>& blocks);

// |D ∩ F ∩ E_n| ≥ t and |(D \ F) ∩ E_n| ≥ t for every block n in the window.
bool halves(const MemberSet& f, const MemberSet& d, const Spread& spread, const Window& window);

struct HalverWitness {
  std::size_t member = 0;                 // index into S
  std::vector<std::size_t> surviving;     // block indices where all classes halve
};
// First member (in member order) halving every colour class over at least
// half of the listed blocks.
std::optional<HalverWitness> find_halver(const SetSystem& s, const Colouring& colouring,
                                         const Spread& spread, const Window& window);
std::optional<HalverWitness> find_halver_blocks(const SetSystem& s, const Colouring& colouring,
                                                const Spread& spread,
                                                const std::vector<std::size_t>& blocks,
                                                std::size_t threshold);

struct ShatterWitness {
  std::vector<std::size_t> members;          // halver member indices, round order
  std::vector<std::size_t> blocks;           // surviving block indices
  std::size_t threshold = 1;
  std::vector<std::size_t> cell_minima;      // per cell mask, min trace size over blocks
};

struct DichotomyParams {
  std::size_t depth = 1;
  std::size_t threshold = 1;
  // Bound for the decisive verdict; -1 disables the decisive certificate.
  std::int64_t bound = 0;
};

struct DichotomyRound {
  std::size_t classes = 0;
  std::optional<std::size_t> halver;
  std::vector<std::size_t> window_blocks;
};

struct DichotomyResult {
  enum class Kind { shatter, decisive, inconclusive } kind = Kind::inconclusive;
  std::optional<ShatterWitness> shatter;
  std::optional<DecisiveReport> decisive;
  std::string inconclusive_reason;
  std::vector<DichotomyRound> rounds;
};

// Finite-scale dichotomy search: grow a halver sequence, refine the colouring
// through its atoms and shrink the block window, until either the sequence
// shatters at the requested depth or a reached colouring is decisive at the
// bound; otherwise reports which certificate failed.
DichotomyResult dichotomy_search(const SetSystem& s, const Spread& spread,
                                 const DichotomyParams& params);

struct RefinedStructure {
  Spread spread;
  CanonicalWitness witness;                 // tmax witness, re-verified
  std::vector<std::size_t> schedule;        // the n_k actually used
  std::vector<std::size_t> block_sizes;     // |E_k| = n_k - n_{k-1}
};
// Transversal construction: from a chain whose every prefix is
// incompressible, extract a spread witnessing tmax-style containment.
// The default schedule is n_k = k^2, cut at the chain length.
RefinedStructure refined_structure(const SetSystem& s, const std::vector<MemberSet>& chain,
                                   std::vector<std::size_t> schedule = {});

}  // namespace ucs
