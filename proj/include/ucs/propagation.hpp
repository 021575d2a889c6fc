#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ucs/rational.hpp"
#include "ucs/set_system.hpp"

namespace ucs {

// A total nonnegative weight on the members of a system, intended
// subadditive under union (checked by check_log_weight, never assumed).
class LogWeight {
 public:
  LogWeight() = default;
  LogWeight(const SetSystem& system, std::vector<Rational> values);

  const SetSystem& system() const { return *system_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& value(std::size_t member_index) const { return values_.at(member_index); }
  const Rational& value_of(const MemberSet& m) const;

  Rational max_value() const;
  // Sorted distinct candidate levels {0} ∪ { λ(x) : x ∈ S }.
  std::vector<Rational> level_grid() const;

 private:
  const SetSystem* system_ = nullptr;
  std::vector<Rational> values_;
};

struct SubadditivityWitness {
  bool ok;
  std::size_t first = 0, second = 0;  // first violating pair in member order
};
// Verifies λ(x∪y) ≤ λ(x)+λ(y) over all member pairs of a union-closed system.
SubadditivityWitness check_log_weight(const LogWeight& w);

// { x : λ(x) ≤ level }, order-preserving.
SetSystem level_set(const LogWeight& w, const Rational& level);

// V_E(z): +∞ when z lies outside the filter generated by E.
struct VValue {
  bool finite = false;
  Rational value;

  static VValue infinite() { return {false, Rational()}; }
  static VValue of(Rational v) { return {true, std::move(v)}; }
  friend bool operator==(const VValue& a, const VValue& b) {
    return a.finite == b.finite && (!a.finite || a.value == b.value);
  }
  // +∞ compares above every finite value.
  friend bool operator<(const VValue& a, const VValue& b) {
    if (a.finite && !b.finite) return true;
    if (!a.finite) return false;
    return a.value < b.value;
  }
};

struct PropagationLimits {
  std::size_t max_subset_size = 4;
  std::uint64_t max_subsets = 1'000'000;
};

struct PropagationReport {
  Rational level;                    // the L of the search
  std::uint64_t pairs_examined = 0;  // number of (E, z) evaluations
  VValue max_v;                      // largest V found (infinite only if a filter
                                     // member were unreachable, which cannot
                                     // happen on a union-closed system)
  std::vector<std::size_t> witness_e;  // member indices attaining the max
  std::optional<std::size_t> witness_z;
  bool exhaustive = false;  // every non-empty E ⊆ W_L was enumerated
};

struct FbpClosureResult {
  SetSystem family;
  std::size_t steps = 0;  // number of iterations that strictly grew the set
};

// One step of the factors-of-binary-products operator at level C, and its
// least fixpoint above E ∩ W_C. Requires a union-closed host system.
SetSystem fbp_step(const std::vector<MemberSet>& e, const Rational& c, const LogWeight& w);
FbpClosureResult fbp_closure(const std::vector<MemberSet>& e, const Rational& c,
                             const LogWeight& w);

// Least level on the candidate grid at which z becomes reachable from E.
VValue v_value(const std::vector<MemberSet>& e, const MemberSet& z, const LogWeight& w);

// Supremum of V_E(z) over non-empty E ⊆ W_L (up to the configured subset
// size and count) and z in the generated filter ∩ W_L.
PropagationReport propagation_constant(const LogWeight& w, const Rational& level,
                                       const PropagationLimits& limits = {});

// Shared machinery for repeated FBP searches against one weighted system.
// Caches level sets per grid value; all methods are deterministic.
class PropagationEngine {
 public:
  explicit PropagationEngine(const LogWeight& w);

  const LogWeight& weight() const { return *weight_; }
  const std::vector<Rational>& grid() const { return grid_; }
  // Member indices of W_{grid_[g]} in member order.
  const std::vector<std::uint32_t>& level_members(std::size_t grid_index);

  // Closure as a set of member indices (sorted), with the step count.
  struct Closure {
    std::vector<std::uint32_t> members;
    std::size_t steps = 0;
  };
  Closure closure_at(const std::vector<std::uint32_t>& e_indices, std::size_t grid_index);

  VValue v_value(const std::vector<std::uint32_t>& e_indices, std::uint32_t z_index);

  PropagationReport propagation_constant(const Rational& level, const PropagationLimits& limits);

 private:
  const LogWeight* weight_;
  std::vector<Rational> grid_;
  std::vector<std::optional<std::vector<std::uint32_t>>> level_cache_;
};

}  // namespace ucs
