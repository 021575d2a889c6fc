#pragma once

// Shared micro-fixtures for the test suites.

#include <vector>

#include "ucs/canonical.hpp"
#include "ucs/set_system.hpp"

namespace fixtures {

using namespace ucs;

// Ground {α, β, γ} with the union-closed family {{α},{β},{α,β},{α,β,γ}}.
inline GroundSet m1_ground() { return GroundSet{{"alpha", "beta", "gamma"}}; }

inline SetSystem s_m1() {
  GroundSet g = m1_ground();
  std::vector<MemberSet> members = {
      MemberSet(3, {0}),
      MemberSet(3, {1}),
      MemberSet(3, {0, 1}),
      MemberSet(3, {0, 1, 2}),
  };
  return SetSystem(g, std::move(members), /*closed=*/true);
}

// Spread with blocks {a1,a2} and {b1,b2,b3} over a 5-point ground.
inline GroundSet sp2_ground() { return GroundSet{{"a1", "a2", "b1", "b2", "b3"}}; }

inline Spread sp2() { return make_spread({2, 3}, sp2_ground()); }

// All non-empty subsets of `points` of the ground, as members.
inline std::vector<MemberSet> all_nonempty_subsets(const GroundSet& g) {
  std::vector<MemberSet> out;
  std::size_t n = g.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    MemberSet m(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) m.add(i);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace fixtures
