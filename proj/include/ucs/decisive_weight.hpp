#pragma once

#include <vector>

#include "ucs/dichotomy.hpp"
#include "ucs/propagation.hpp"

namespace ucs {

// Block indices where x meets every colour class in at most half of the
// class's share of the block. Comparisons are exact (2·|x∩C∩E_n| ≤ |C∩E_n|).
struct TSet {
  std::vector<std::size_t> blocks;  // 1-based, ascending
};
TSet t_set(const MemberSet& x, const Spread& spread, const Colouring& colouring);

// λ(x) = max over n in T(x) of |x ∩ C0 ∩ E_n|, 0 when T(x) is empty.
Rational eval_weight_from_colouring(const MemberSet& x, const Spread& spread,
                                    const Colouring& colouring, std::size_t class_index);
LogWeight weight_from_colouring(const SetSystem& s, const Spread& spread,
                                const Colouring& colouring, std::size_t class_index);

struct TortFailureRow {
  std::size_t n = 0;
  std::size_t c0_block_count = 0;  // |C0 ∩ E_n|
  bool lambda_x_ok = false;        // λ(x_i) = 1 for all i
  Rational lambda_b;               // λ(b_n), must be 0
  VValue v;                        // exact V_{F_n}(b_n) on the tort host
  Rational bound;                  // ¼|C0 ∩ E_n|
  bool pass = false;
};
struct TortFailureOptions {
  // Rows start at the first level with |C0 ∩ E_n| ≥ 2 unless overridden.
  std::size_t first_level = 0;  // 0: automatic
};
// Builds the tort system on the stock spread with `levels` blocks, attaches
// the colouring-generated weight hosted on the system itself, and checks the
// quarter bound at every row.
std::vector<TortFailureRow> verify_tort_failure(std::size_t levels, const Colouring& colouring,
                                                std::size_t class_index,
                                                const TortFailureOptions& options = {});
// Same harness over an explicitly given spread.
std::vector<TortFailureRow> verify_tort_failure_on(const Spread& spread,
                                                   const Colouring& colouring,
                                                   std::size_t class_index,
                                                   const TortFailureOptions& options = {});

}  // namespace ucs
