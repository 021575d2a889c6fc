#include "ucs/decisive_weight.hpp"

namespace ucs {

TSet t_set(const MemberSet& x, const Spread& spread, const Colouring& colouring) {
  if (x.universe_size() != spread.ground().size())
    throw std::invalid_argument("t_set: set over a different ground set");
  TSet t;
  for (std::size_t n = 1; n <= spread.levels(); ++n) {
    const MemberSet& block = spread.block(n);
    bool ok = true;
    for (const auto& c : colouring.classes()) {
      std::size_t share = c.intersection_count(block);
      std::size_t hit = (x & c).intersection_count(block);
      if (2 * hit > share) {
        ok = false;
        break;
      }
    }
    if (ok) t.blocks.push_back(n);
  }
  return t;
}

Rational eval_weight_from_colouring(const MemberSet& x, const Spread& spread,
                                    const Colouring& colouring, std::size_t class_index) {
  if (class_index >= colouring.size())
    throw std::invalid_argument("weight_from_colouring: class index out of range");
  const MemberSet& c0 = colouring.classes()[class_index];
  std::size_t best = 0;
  for (std::size_t n : t_set(x, spread, colouring).blocks)
    best = std::max(best, (x & c0).intersection_count(spread.block(n)));
  return Rational(static_cast<std::int64_t>(best));
}

LogWeight weight_from_colouring(const SetSystem& s, const Spread& spread,
                                const Colouring& colouring, std::size_t class_index) {
  std::vector<Rational> values;
  values.reserve(s.size());
  for (const auto& m : s.members())
    values.push_back(eval_weight_from_colouring(m, spread, colouring, class_index));
  return LogWeight(s, std::move(values));
}

std::vector<TortFailureRow> verify_tort_failure_on(const Spread& spread,
                                                   const Colouring& colouring,
                                                   std::size_t class_index,
                                                   const TortFailureOptions& options) {
  ColoursSpreadResult colours = colours_spread(colouring, spread, Window::full(spread));
  if (!colours.ok)
    throw std::invalid_argument("verify_tort_failure: colouring does not colour the spread");

  const MemberSet& c0 = colouring.classes().at(class_index);
  std::size_t first = options.first_level;
  if (first == 0) {
    for (std::size_t n = 1; n <= spread.levels(); ++n)
      if (c0.intersection_count(spread.block(n)) >= 2) {
        first = n;
        break;
      }
    if (first == 0)
      throw std::invalid_argument("verify_tort_failure: no level with |C0 ∩ E_n| >= 2");
  }

  SetSystem host = tort(spread);
  LogWeight w = weight_from_colouring(host, spread, colouring, class_index);
  PropagationEngine engine(w);

  std::vector<TortFailureRow> rows;
  for (std::size_t n = first; n <= spread.levels(); ++n) {
    TortFailureRow row;
    row.n = n;
    MemberSet c0_block = c0 & spread.block(n);
    row.c0_block_count = c0_block.count();
    if (row.c0_block_count < 2)
      throw std::invalid_argument("verify_tort_failure: |C0 ∩ E_n| < 2 at level " +
                                  std::to_string(n));
    row.bound = Rational(static_cast<std::int64_t>(row.c0_block_count), 4);

    std::vector<MemberSet> f;
    std::vector<std::uint32_t> f_idx;
    row.lambda_x_ok = true;
    MemberSet shell = spread.below(n) | spread.above(n);
    for (std::size_t pt : c0_block.indices()) {
      MemberSet member = shell;
      member.add(pt);
      auto idx = host.index_of(member);
      if (!idx) throw std::logic_error("verify_tort_failure: missing tort member");
      if (!(w.value(*idx) == Rational(1))) row.lambda_x_ok = false;
      f.push_back(member);
      f_idx.push_back(static_cast<std::uint32_t>(*idx));
    }
    MemberSet b = join(f);
    auto b_idx = host.index_of(b);
    if (!b_idx) throw std::logic_error("verify_tort_failure: join escaped the host");
    row.lambda_b = w.value(*b_idx);

    row.v = engine.v_value(f_idx, static_cast<std::uint32_t>(*b_idx));
    row.pass = row.lambda_x_ok && row.lambda_b == Rational(0) && row.v.finite &&
               !(row.v.value < row.bound);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TortFailureRow> verify_tort_failure(std::size_t levels, const Colouring& colouring,
                                                std::size_t class_index,
                                                const TortFailureOptions& options) {
  if (levels < 1) throw std::invalid_argument("verify_tort_failure: needs at least one level");
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  for (std::size_t n = 1; n <= levels; ++n) {
    sizes.push_back(n + 1);
    total += n + 1;
  }
  if (colouring.ground().size() != total)
    throw std::invalid_argument("verify_tort_failure: colouring ground must have " +
                                std::to_string(total) + " points");
  Spread spread = make_spread(sizes, colouring.ground());
  return verify_tort_failure_on(spread, colouring, class_index, options);
}

}  // namespace ucs
