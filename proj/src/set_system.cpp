#include "ucs/set_system.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace ucs {

SetSystem::SetSystem(GroundSet ground, std::vector<MemberSet> members, bool closed)
    : ground_(std::move(ground)), members_(std::move(members)), closed_(closed) {
  for (const auto& m : members_)
    if (m.universe_size() != ground_.size())
      throw std::invalid_argument("set system: member over a different ground set");
  std::sort(members_.begin(), members_.end(), [](const MemberSet& a, const MemberSet& b) {
    return lex_less(a, b);
  });
  auto last = std::unique(members_.begin(), members_.end());
  if (last != members_.end())
    throw std::invalid_argument("set system: duplicate members");
}

void SetSystem::build_index() const {
  if (index_built_) return;
  index_.reserve(members_.size() * 2);
  for (std::size_t i = 0; i < members_.size(); ++i) index_.emplace(members_[i], i);
  index_built_ = true;
}

std::optional<std::size_t> SetSystem::index_of(const MemberSet& m) const {
  if (m.universe_size() != ground_.size()) return std::nullopt;
  build_index();
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool SetSystem::is_full_power_set() const {
  std::size_t n = ground_.size();
  if (n >= 63) return false;
  return members_.size() == (std::size_t{1} << n);
}

bool divides(const MemberSet& a, const MemberSet& b) { return a.subset_of(b); }

MemberSet join(const std::vector<MemberSet>& family) {
  if (family.empty()) throw std::invalid_argument("join: empty family");
  MemberSet u = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) u |= family[i];
  return u;
}

SetSystem union_closure(const std::vector<MemberSet>& generators, const GroundSet& ground,
                        const ClosureLimits& limits) {
  if (generators.empty()) throw std::invalid_argument("union_closure: no generators");
  for (const auto& g : generators)
    if (g.universe_size() != ground.size())
      throw std::invalid_argument("union_closure: generator over a different ground set");

  // Every member of the closure is reachable from a generator by repeatedly
  // union-ing in single generators, so a BFS over |closure| x |generators|
  // edges enumerates it without forming all pairs.
  std::unordered_set<MemberSet, MemberSetHash> seen;
  std::deque<MemberSet> queue;
  for (const auto& g : generators) {
    if (seen.insert(g).second) queue.push_back(g);
  }
  while (!queue.empty()) {
    MemberSet m = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      MemberSet u = m | g;
      if (seen.insert(u).second) {
        if (seen.size() > limits.member_cap)
          throw BudgetError("union_closure: member cap " + std::to_string(limits.member_cap) +
                            " exceeded");
        queue.push_back(u);
      }
    }
  }
  std::vector<MemberSet> members(seen.begin(), seen.end());
  return SetSystem(std::move(ground), std::move(members), /*closed=*/true);
}

ClosureWitness is_union_closed(const SetSystem& family) {
  const auto& ms = family.members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i; j < ms.size(); ++j) {
      if (!family.contains(ms[i] | ms[j])) return {false, i, j};
    }
  }
  return {true, 0, 0};
}

SetSystem filter_generated(const std::vector<MemberSet>& e, const SetSystem& s) {
  if (e.empty()) {
    return SetSystem(s.ground(), {}, false);
  }
  for (const auto& x : e)
    if (!s.contains(x))
      throw std::invalid_argument("filter_generated: set outside the system");
  MemberSet top = join(e);
  std::vector<MemberSet> out;
  for (const auto& z : s.members())
    if (z.subset_of(top)) out.push_back(z);
  return SetSystem(s.ground(), std::move(out), false);
}

IncompressibilityWitness is_incompressible(const std::vector<MemberSet>& family) {
  if (family.empty()) throw std::invalid_argument("is_incompressible: empty family");
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (family[i] == family[j])
        throw std::invalid_argument("is_incompressible: duplicate members");

  std::size_t n = family.size();
  // prefix[i] = union of family[0..i); suffix[i] = union of family[i..n).
  std::vector<MemberSet> prefix(n + 1, MemberSet(family[0].universe_size()));
  std::vector<MemberSet> suffix(n + 1, MemberSet(family[0].universe_size()));
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] | family[i];
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] | family[i];
  for (std::size_t i = 0; i < n; ++i) {
    MemberSet others = prefix[i] | suffix[i + 1];
    if (family[i].subset_of(others)) return {false, i};
  }
  return {true, 0};
}

namespace {

struct BreadthSearch {
  const std::vector<MemberSet>& ms;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exact = true;
  std::vector<std::size_t> best;
  std::vector<std::size_t> current;

  // A partial family is extendable only while every chosen member keeps a
  // private point outside the join of the other chosen members.
  bool viable(const std::vector<std::size_t>& picked) const {
    for (std::size_t i = 0; i < picked.size(); ++i) {
      MemberSet others(ms[0].universe_size());
      for (std::size_t j = 0; j < picked.size(); ++j)
        if (j != i) others |= ms[picked[j]];
      if (ms[picked[i]].subset_of(others)) return false;
    }
    return true;
  }

  void run(std::size_t start) {
    if (nodes >= budget) {
      exact = false;
      return;
    }
    ++nodes;
    if (current.size() > best.size()) best = current;
    if (current.size() + (ms.size() - start) <= best.size()) return;
    for (std::size_t i = start; i < ms.size(); ++i) {
      current.push_back(i);
      if (viable(current)) run(i + 1);
      current.pop_back();
      if (!exact) return;
    }
  }
};

}  // namespace

BreadthResult breadth(const SetSystem& s, const BreadthLimits& limits) {
  if (s.size() == 0) throw std::invalid_argument("breadth: empty system");
  BreadthSearch search{s.members(), limits.node_budget, 0, true, {}, {}};
  search.run(0);
  // The empty set can never sit in an incompressible family together with
  // anything, and alone it is compressible; the search handles this via the
  // private-point test (an empty member is always covered by the others'
  // join, and a singleton family {∅} fails because join(∅-family) = ∅).
  BreadthResult r;
  r.witness = search.best;
  r.value = search.best.size();
  r.exact = search.exact;
  r.nodes = search.nodes;
  if (r.value == 0) {
    // Only possible when every member is empty; a non-empty member alone is
    // incompressible. Keep the value honest.
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!s.member(i).empty()) {
        r.value = 1;
        r.witness = {i};
        break;
      }
    }
  }
  return r;
}

void MultiplicationTable::validate() const {
  if (product.size() != n) throw std::invalid_argument("multiplication table: wrong row count");
  for (const auto& row : product) {
    if (row.size() != n) throw std::invalid_argument("multiplication table: wrong row length");
    for (std::size_t v : row)
      if (v >= n) throw std::invalid_argument("multiplication table: entry out of range");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (product[i][i] != i) throw std::invalid_argument("multiplication table: not idempotent");
    for (std::size_t j = 0; j < n; ++j)
      if (product[i][j] != product[j][i])
        throw std::invalid_argument("multiplication table: not commutative");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (product[product[i][j]][k] != product[i][product[j][k]])
          throw std::invalid_argument("multiplication table: not associative");
}

CayleyEmbedding cayley_embedding(const MultiplicationTable& table,
                                 const std::vector<std::string>& element_labels) {
  table.validate();
  std::vector<std::string> labels = element_labels;
  if (labels.empty()) {
    labels.reserve(table.n);
    for (std::size_t i = 0; i < table.n; ++i) labels.push_back("s" + std::to_string(i));
  }
  if (labels.size() != table.n)
    throw std::invalid_argument("cayley_embedding: label count mismatch");
  GroundSet ground{labels};

  // E_x = { y : x·y ≠ y }, i.e. the complement of the set of multiples of x.
  std::vector<MemberSet> image;
  image.reserve(table.n);
  for (std::size_t x = 0; x < table.n; ++x) {
    MemberSet ex(table.n);
    for (std::size_t y = 0; y < table.n; ++y)
      if (table.product[x][y] != y) ex.add(y);
    image.push_back(std::move(ex));
  }
  for (std::size_t x = 0; x < table.n; ++x)
    for (std::size_t y = x + 1; y < table.n; ++y)
      if (image[x] == image[y])
        throw std::invalid_argument("cayley_embedding: map not injective (invalid table)");

  SetSystem sys(ground, image, /*closed=*/true);
  std::vector<std::size_t> elem_to_member(table.n);
  for (std::size_t x = 0; x < table.n; ++x) elem_to_member[x] = *sys.index_of(image[x]);
  return {std::move(sys), std::move(elem_to_member), ground};
}

MultiplicationTable table_of(const SetSystem& s) {
  MultiplicationTable t;
  t.n = s.size();
  t.product.assign(t.n, std::vector<std::size_t>(t.n, 0));
  for (std::size_t i = 0; i < t.n; ++i) {
    for (std::size_t j = i; j < t.n; ++j) {
      auto idx = s.index_of(s.member(i) | s.member(j));
      if (!idx)
        throw std::invalid_argument("table_of: system is not union-closed");
      t.product[i][j] = t.product[j][i] = *idx;
    }
  }
  return t;
}

SetSystem power_set_system(const GroundSet& ground, const ClosureLimits& limits) {
  std::size_t n = ground.size();
  if (n >= 63 || (std::uint64_t{1} << n) > limits.member_cap)
    throw BudgetError("power_set_system: 2^" + std::to_string(n) + " exceeds the member cap");
  std::vector<MemberSet> members;
  members.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    MemberSet m(n);
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) m.add(i);
    members.push_back(std::move(m));
  }
  return SetSystem(ground, std::move(members), /*closed=*/true);
}

SetSystem nonempty_power_set_system(const GroundSet& ground, const ClosureLimits& limits) {
  SetSystem full = power_set_system(ground, limits);
  std::vector<MemberSet> members;
  members.reserve(full.size() - 1);
  for (const auto& m : full.members())
    if (!m.empty()) members.push_back(m);
  return SetSystem(ground, std::move(members), /*closed=*/true);
}

TraceSystem restrict_to(const SetSystem& s, const MemberSet& window) {
  std::unordered_map<MemberSet, std::size_t, MemberSetHash> first_seen;
  for (std::size_t i = 0; i < s.size(); ++i) {
    MemberSet trace = s.member(i) & window;
    first_seen.emplace(std::move(trace), i);  // keeps the smallest member order index
  }
  std::vector<std::pair<MemberSet, std::size_t>> entries(first_seen.begin(), first_seen.end());
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  std::vector<MemberSet> traces;
  std::vector<std::size_t> preimage;
  traces.reserve(entries.size());
  for (auto& [t, idx] : entries) {
    traces.push_back(std::move(t));
    preimage.push_back(idx);
  }
  return {SetSystem(s.ground(), std::move(traces), s.closed_flag()), std::move(preimage)};
}

}  // namespace ucs
