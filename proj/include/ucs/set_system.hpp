#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ucs/ground_set.hpp"
#include "ucs/member_set.hpp"

namespace ucs {

// Thrown when an operation would exceed a configured resource cap.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct ClosureLimits {
  std::uint64_t member_cap = std::uint64_t{1} << 20;
};

// A finite family of members over a common ground set, kept sorted in the
// canonical member order and free of duplicates. `closed` caches whether the
// family is known to be union-closed.
class SetSystem {
 public:
  SetSystem() = default;
  SetSystem(GroundSet ground, std::vector<MemberSet> members, bool closed = false);

  const GroundSet& ground() const { return ground_; }
  const std::vector<MemberSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const MemberSet& member(std::size_t i) const { return members_.at(i); }
  bool closed_flag() const { return closed_; }
  void mark_closed(bool c) { closed_ = c; }

  bool contains(const MemberSet& m) const { return index_of(m).has_value(); }
  std::optional<std::size_t> index_of(const MemberSet& m) const;

  // True when the family is exactly the full power set of the ground set
  // (2^n members including the empty set); enables mask-indexed fast paths.
  bool is_full_power_set() const;

  friend bool operator==(const SetSystem& a, const SetSystem& b) {
    return a.ground_ == b.ground_ && a.members_ == b.members_;
  }

 private:
  GroundSet ground_;
  std::vector<MemberSet> members_;
  bool closed_ = false;
  mutable std::unordered_map<MemberSet, std::size_t, MemberSetHash> index_;
  mutable bool index_built_ = false;
  void build_index() const;
};

// Divisibility: a | b, i.e. a ∪ b = b, i.e. a ⊆ b.
bool divides(const MemberSet& a, const MemberSet& b);

// Union of a non-empty family; throws on the empty list.
MemberSet join(const std::vector<MemberSet>& family);

// Smallest union-closed family containing the generators, in canonical
// member order. Throws BudgetError if the closure would exceed the cap.
SetSystem union_closure(const std::vector<MemberSet>& generators, const GroundSet& ground,
                        const ClosureLimits& limits = {});

struct ClosureWitness {
  bool closed;
  // When !closed, a pair of member indices whose union is missing.
  std::size_t first = 0, second = 0;
};
ClosureWitness is_union_closed(const SetSystem& family);

// Filter-or-empty-set generated by E inside the union-closed system S:
// { z in S : z ⊆ join(E) } for non-empty E, the empty family for empty E.
SetSystem filter_generated(const std::vector<MemberSet>& e, const SetSystem& s);

struct IncompressibilityWitness {
  bool incompressible;
  // When compressible, the position of a member whose removal keeps the join.
  std::size_t dropped = 0;
};
// Single-drop test: each member must keep a point outside the join of the
// others. Throws on duplicate members.
IncompressibilityWitness is_incompressible(const std::vector<MemberSet>& family);

struct BreadthLimits {
  std::uint64_t node_budget = 10'000'000;
};
struct BreadthResult {
  std::size_t value = 0;
  bool exact = true;  // false: search budget exhausted, value is a lower bound
  std::vector<std::size_t> witness;  // member indices of a largest family found
  std::uint64_t nodes = 0;
};
// Maximum size of an incompressible subfamily, by branch and bound.
BreadthResult breadth(const SetSystem& s, const BreadthLimits& limits = {});

// Abstract semilattice given by its full multiplication table.
struct MultiplicationTable {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> product;  // n x n, entries in [0,n)

  // Throws std::invalid_argument unless the table is a commutative,
  // idempotent, associative operation.
  void validate() const;
};

struct CayleyEmbedding {
  SetSystem system;                        // image of x -> E_x
  std::vector<std::size_t> element_to_member;  // element index -> member index
  GroundSet element_ground;                // one point per abstract element
};
// Concrete representation of an abstract semilattice over its own element
// set: E_x = { y : x·y ≠ y }. Satisfies E_x ∪ E_y = E_{x·y}.
CayleyEmbedding cayley_embedding(const MultiplicationTable& table,
                                 const std::vector<std::string>& element_labels = {});

// Multiplication table of a union-closed system under union. Requires the
// closed flag (every pairwise union must be a member).
MultiplicationTable table_of(const SetSystem& s);

// The full power set of the ground (2^n members, empty set included).
// Throws BudgetError when 2^n would exceed the cap.
SetSystem power_set_system(const GroundSet& ground, const ClosureLimits& limits = {});
// All non-empty subsets.
SetSystem nonempty_power_set_system(const GroundSet& ground, const ClosureLimits& limits = {});

struct TraceSystem {
  SetSystem system;                      // { x ∩ window : x in S }, duplicates merged
  std::vector<std::size_t> preimage;     // per trace: smallest preimage index in S
};
// Trace system of S on the window J: { x ∩ J : x in S }, duplicates merged.
TraceSystem restrict_to(const SetSystem& s, const MemberSet& window);

}  // namespace ucs
