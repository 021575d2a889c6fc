#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ucs/canonical.hpp"
#include "ucs/propagation.hpp"
#include "ucs/set_system.hpp"

namespace ucs {

// The nested-levels example: two concrete representations of one abstract
// semilattice built over a staircase spread (block n has n points), with
// members tagged by a level-(≥2) trace and a tail parameter m.
struct NestedLevelsExample {
  SetSystem system;          // members a ⊔ {tail 1..m} over Ω0 ⊔ tail points
  SetSystem product_system;  // members (a × cols) ∪ (Ω0 × {1..m}) over Ω0 × cols
  Spread spread;             // blocks E_2..E_N of the staircase
  // Natural correspondence: position i holds the member index in `system`
  // and in `product_system` of the same (a, m) parameter pair.
  std::vector<std::pair<std::size_t, std::size_t>> correspondence;
};
NestedLevelsExample example_2_13(std::size_t levels, std::size_t tail);

// The rectangular-tile systems over rows {0,1,2} and columns 1..J.
struct TileUniverse {
  GroundSet ground;   // labels "(r,c)"
  std::size_t columns = 0;

  std::size_t point(std::size_t row, std::size_t col) const;  // col is 1-based
  MemberSet rows12() const;  // the truncation window (rows 1 and 2)
};
TileUniverse tile_universe(std::size_t columns);

struct Section6Options {
  std::size_t r_columns = 0;  // columns for the R generators; 0 = min(J, 12)
  ClosureLimits closure;
};

struct Section6Bundle {
  TileUniverse universe;
  std::size_t columns = 0;    // J
  std::size_t tile_count = 0; // number of full a_n tiles that fit
  std::size_t r_columns = 0;

  std::vector<MemberSet> xs;  // x_j = {(1,j),(2,j)}, j = 1..J
  std::vector<MemberSet> as;  // a_n over columns n²..(n+1)²-1, full tiles only
  std::vector<MemberSet> gs;  // g_j = {(1,j)}, j = 1..r_columns
  std::vector<MemberSet> bs;  // b_n = q(a_n)

  SetSystem s;                // closure of as ∪ xs
  SetSystem t;                // q(S), the truncation to rows {1,2}
  std::vector<std::size_t> t_preimage;  // trace index -> member of s
  SetSystem r;                // closure of xs|r_cols ∪ gs

  LogWeight lambda_s;         // λ = λ* ∘ q on S
  LogWeight lambda_t;         // λ* on T
  LogWeight lambda_r;         // λ* on R

  // ℰ_n = { x_k : n² ≤ k < (n+1)² } as member indices of T.
  std::vector<std::uint32_t> level_family_t(std::size_t n) const;
};
// Counts the points (2,j); the weight each bundle system carries.
Rational eval_lambda_star(const TileUniverse& universe, const MemberSet& z);
Section6Bundle section6_build(std::size_t columns, const Section6Options& options = {});

struct Lemma61Result {
  bool hypothesis_ok = false;  // C ≤ n
  bool contained = true;       // FBP closure ⊆ closure generated by ℰ_n
  std::optional<MemberSet> offender;
};
// Containment of the FBP closure of ℰ_n at level C (inside T, λ*) in the
// union-closed family generated by ℰ_n.
Lemma61Result verify_lemma_6_1(const Section6Bundle& bundle, std::size_t n, std::int64_t c);

struct Section6BoundRow {
  std::size_t n = 0;
  Rational lambda_b;   // λ*(b_n), must be 0
  bool family_in_w1 = true;
  VValue v;            // exact V over (T, λ*)
  Rational bound;      // n
  bool pass = false;
};
Section6BoundRow verify_section6_bounds(const Section6Bundle& bundle, std::size_t n);

enum class Section6System { s, r };
// Propagation check for (S, λ) or (R, λ*); pass means max V ≤ level over the
// enumerated subsets.
struct LPropagationResult {
  PropagationReport report;
  bool pass = false;
};
LPropagationResult verify_l_propagation(const Section6Bundle& bundle, Section6System which,
                                        const Rational& level,
                                        const PropagationLimits& limits = {});

}  // namespace ucs
