#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "ucs/dichotomy.hpp"
#include "ucs/io.hpp"

using namespace ucs;
using namespace fixtures;

TEST_CASE("gamma_atoms") {
  GroundSet g = m1_ground();
  SUBCASE("one set splits the ground in two") {
    Colouring c = gamma_atoms({MemberSet(3, {0})}, g);
    REQUIRE(c.size() == 2);
    CHECK(c.classes()[0] == MemberSet(3, {0}));
    CHECK(c.classes()[1] == MemberSet(3, {1, 2}));
  }
  SUBCASE("duplicate sets collapse to the complementary pair") {
    Colouring c = gamma_atoms({MemberSet(3, {0}), MemberSet(3, {0})}, g);
    CHECK(c.size() == 2);
  }
  SUBCASE("two overlapping sets: empty cell dropped, mask order kept") {
    Colouring c = gamma_atoms({MemberSet(3, {0, 1}), MemberSet(3, {1, 2})}, g);
    REQUIRE(c.size() == 3);
    CHECK(c.classes()[0] == MemberSet(3, {1}));  // a1 ∩ a2
    CHECK(c.classes()[1] == MemberSet(3, {0}));  // a1 ∩ a2^c
    CHECK(c.classes()[2] == MemberSet(3, {2}));  // a1^c ∩ a2
  }
  SUBCASE("always a partition, between 1 and 2^m classes") {
    GroundSet g6 = GroundSet::numbered(6);
    std::vector<MemberSet> sets = {MemberSet(6, {0, 1, 2}), MemberSet(6, {2, 3}),
                                   MemberSet(6, {0, 4})};
    for (std::size_t m = 1; m <= sets.size(); ++m) {
      std::vector<MemberSet> prefix(sets.begin(), sets.begin() + m);
      Colouring c = gamma_atoms(prefix, g6);  // constructor validates the partition
      CHECK(c.size() >= 1);
      CHECK(c.size() <= (std::size_t{1} << m));
    }
  }
}

TEST_CASE("colours_spread") {
  Spread sp = sp2();
  SUBCASE("trivial colouring colours everything at t=1") {
    CHECK(colours_spread(Colouring::trivial(sp.ground()), sp, Window::full(sp)).ok);
  }
  SUBCASE("a class missing a block fails") {
    Colouring c(sp.ground(), {MemberSet(5, {0}), MemberSet(5, {1, 2, 3, 4})});
    ColoursSpreadResult r = colours_spread(c, sp, Window::full(sp));
    CHECK_FALSE(r.ok);
    CHECK(r.failing_class == 0);
    CHECK(r.failing_block == 2);  // {a1} misses E_2
  }
  SUBCASE("alternating two-colouring of blocks (4,6) at t=2") {
    GroundSet g = GroundSet::numbered(10);
    Spread spread = make_spread({4, 6}, g);
    MemberSet even(10), odd(10);
    for (std::size_t i = 0; i < 10; ++i) (i % 2 ? odd : even).add(i);
    Colouring c(g, {even, odd});
    Window w = Window::full(spread, 2);
    CHECK(colours_spread(c, spread, w).ok);
  }
}

TEST_CASE("shatters") {
  SUBCASE("half of each block shatters at depth 1") {
    GroundSet g = GroundSet::numbered(8);
    Spread spread = make_spread({4, 4}, g);
    MemberSet half(8, {0, 1, 4, 5});
    ShatterCheck r = shatters({half}, spread, 1, Window::full(spread, 2));
    CHECK(r.ok);
    CHECK(r.worst_count == 2);
  }
  SUBCASE("a set covering the whole join fails: empty complement cell") {
    Spread sp = sp2();
    ShatterCheck r = shatters({sp.join_all()}, sp, 1, Window::full(sp, 1));
    CHECK_FALSE(r.ok);
    CHECK(r.worst_count == 0);
    CHECK(r.worst_cell_mask == 1);  // the complement cell
  }
  SUBCASE("trace size 2 per block at t=2, 3 blocks of 4") {
    GroundSet g = GroundSet::numbered(12);
    Spread spread = make_spread({4, 4, 4}, g);
    MemberSet a1(12, {0, 1, 4, 5, 8, 9});
    ShatterCheck r = shatters({a1}, spread, 1, Window::full(spread, 2));
    CHECK(r.ok);
  }
  SUBCASE("shattering sequences have incompressible prefixes") {
    GroundSet g = GroundSet::numbered(12);
    Spread spread = make_spread({4, 4, 4}, g);
    std::vector<MemberSet> seq = {
        MemberSet(12, {0, 1, 4, 5, 8, 9}),
        MemberSet(12, {0, 2, 4, 6, 8, 10}),
    };
    ShatterCheck r = shatters(seq, spread, 2, Window::full(spread, 1));
    REQUIRE(r.ok);
    for (std::size_t m = 1; m <= seq.size(); ++m) {
      std::vector<MemberSet> prefix(seq.begin(), seq.begin() + m);
      CHECK(is_incompressible(prefix).incompressible);
    }
  }
}

TEST_CASE("decisive_statistic") {
  Spread sp = sp2();
  SetSystem s = tort(sp);
  Colouring trivial = Colouring::trivial(sp.ground());
  Window w = Window::full(sp);

  SUBCASE("tort member at level 2 scores 1") {
    DecisiveReport r = decisive_statistic(s, sp, trivial, 0, w);
    auto idx = s.index_of(MemberSet(5, {0, 1, 2}));  // E_1 ∪ {b1}
    REQUIRE(idx.has_value());
    CHECK(r.statistic[*idx] == 1);
  }
  SUBCASE("members covering the join score 0") {
    DecisiveReport r = decisive_statistic(s, sp, trivial, 0, w);
    auto idx = s.index_of(sp.join_all());
    REQUIRE(idx.has_value());
    CHECK(r.statistic[*idx] == 0);
  }
  SUBCASE("balanced members of a power set score half the smallest block") {
    GroundSet g = GroundSet::numbered(8);
    Spread spread = make_spread({4, 4}, g);
    SetSystem ps = nonempty_power_set_system(g);
    DecisiveReport r =
        decisive_statistic(ps, spread, Colouring::trivial(g), 0, Window::full(spread));
    auto idx = ps.index_of(MemberSet(8, {0, 1, 4, 5}));
    REQUIRE(idx.has_value());
    CHECK(r.statistic[*idx] == 2);
    CHECK(r.max_statistic == 2);
  }
  SUBCASE("removing members never increases the max statistic") {
    DecisiveReport full = decisive_statistic(s, sp, trivial, 0, w);
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<MemberSet> fewer;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) fewer.push_back(s.member(i));
      SetSystem sub(s.ground(), fewer);
      DecisiveReport r = decisive_statistic(sub, sp, trivial, 0, w);
      CHECK(r.max_statistic <= full.max_statistic);
    }
  }
}

TEST_CASE("halves") {
  SUBCASE("alternate points halve the ground") {
    GroundSet g = GroundSet::numbered(8);
    Spread spread = make_spread({4, 4}, g);
    MemberSet f(8, {0, 2, 4, 6});
    CHECK(halves(f, g.full_member(), spread, Window::full(spread)));
    CHECK(halves(f, g.full_member(), spread, Window::full(spread, 2)));
  }
  SUBCASE("F containing D never halves at t >= 1") {
    Spread sp = sp2();
    MemberSet d(5, {0, 2});
    MemberSet f(5, {0, 1, 2});
    CHECK_FALSE(halves(f, d, sp, Window::full(sp)));
  }
  SUBCASE("tort members fail halving of the join over two blocks") {
    Spread sp = sp2();
    SetSystem s = tort(sp);
    for (const auto& m : s.members()) {
      // complements touch only one block, so halving both blocks must fail
      CHECK_FALSE(halves(m, sp.join_all(), sp, Window::full(sp)));
    }
  }
}

TEST_CASE("find_halver") {
  SUBCASE("power set over 3 blocks: a witness exists") {
    GroundSet g = GroundSet::numbered(12);
    Spread spread = make_spread({4, 4, 4}, g);
    SetSystem ps = nonempty_power_set_system(g);
    auto w = find_halver(ps, Colouring::trivial(g), spread, Window::full(spread));
    REQUIRE(w.has_value());
    CHECK(w->surviving.size() >= 2);
    // the witness is the first such member in member order
    for (std::size_t i = 0; i < w->member; ++i) {
      std::size_t ok_blocks = 0;
      for (std::size_t n = 1; n <= 3; ++n) {
        if (ps.member(i).intersection_count(spread.block(n)) >= 1 &&
            (g.full_member() - ps.member(i)).intersection_count(spread.block(n)) >= 1)
          ++ok_blocks;
      }
      CHECK(ok_blocks < 2);
    }
  }
  SUBCASE("tort(SP2): no halver over the full window") {
    Spread sp = sp2();
    SetSystem s = tort(sp);
    auto w = find_halver(s, Colouring::trivial(sp.ground()), sp, Window::full(sp));
    CHECK_FALSE(w.has_value());
  }
  SUBCASE("a single member equal to the join: none") {
    Spread sp = sp2();
    SetSystem s(sp.ground(), {sp.join_all()});
    auto w = find_halver(s, Colouring::trivial(sp.ground()), sp, Window::full(sp));
    CHECK_FALSE(w.has_value());
  }
}

TEST_CASE("dichotomy_search") {
  SUBCASE("non-empty power set over blocks (4,5,6): shatter witness at depth 1, t=2") {
    GroundSet g = GroundSet::numbered(15);
    Spread spread = make_spread({4, 5, 6}, g);
    SetSystem ps = nonempty_power_set_system(g);
    DichotomyParams params;
    params.depth = 1;
    params.threshold = 2;
    params.bound = 2;
    DichotomyResult r = dichotomy_search(ps, spread, params);
    REQUIRE(r.kind == DichotomyResult::Kind::shatter);
    REQUIRE(r.shatter.has_value());
    CHECK(r.shatter->members.size() == 1);
    for (std::size_t mn : r.shatter->cell_minima) CHECK(mn >= 2);
    ShatterCheck check = shatters_blocks({ps.member(r.shatter->members[0])}, spread, 1,
                                         r.shatter->blocks, 2);
    CHECK(check.ok);

    // byte-identical record across runs
    DichotomyResult r2 = dichotomy_search(ps, spread, params);
    CHECK(io::dichotomy_record(r, ps, spread) == io::dichotomy_record(r2, ps, spread));
  }
  SUBCASE("tort over blocks (2,3,4) with B=2: decisive with the trivial class") {
    GroundSet g = GroundSet::numbered(9);
    Spread spread = make_spread({2, 3, 4}, g);
    SetSystem s = tort(spread);
    DichotomyParams params;
    params.depth = 2;
    params.threshold = 1;
    params.bound = 2;
    DichotomyResult r = dichotomy_search(s, spread, params);
    REQUIRE(r.kind == DichotomyResult::Kind::decisive);
    REQUIRE(r.decisive.has_value());
    CHECK(r.decisive->class_index == 0);  // C_0 = Ω
    CHECK(r.decisive->max_statistic <= 2);
    CHECK(r.decisive->decisive_at_bound);
  }
  SUBCASE("single-member system: inconclusive with the bound disabled, decisive at B>=0") {
    Spread sp = sp2();
    SetSystem s(sp.ground(), {sp.join_all()});
    DichotomyParams params;
    params.depth = 1;
    params.threshold = 1;
    params.bound = -1;
    DichotomyResult r = dichotomy_search(s, sp, params);
    CHECK(r.kind == DichotomyResult::Kind::inconclusive);
    CHECK_FALSE(r.inconclusive_reason.empty());

    params.bound = 0;
    DichotomyResult r2 = dichotomy_search(s, sp, params);
    CHECK(r2.kind == DichotomyResult::Kind::decisive);
  }
}

TEST_CASE("refined_structure") {
  SUBCASE("four distinct singletons with the square schedule") {
    GroundSet g = GroundSet::numbered(4);
    SetSystem s = nonempty_power_set_system(g);
    std::vector<MemberSet> chain;
    for (std::size_t i = 0; i < 4; ++i) chain.push_back(MemberSet(4, {i}));
    RefinedStructure r = refined_structure(s, chain);
    CHECK(r.schedule == std::vector<std::size_t>{1, 4});
    REQUIRE(r.spread.levels() == 2);
    CHECK(r.spread.block(1) == MemberSet(4, {0}));
    CHECK(r.spread.block(2) == MemberSet(4, {1, 2, 3}));
    CHECK(r.block_sizes == std::vector<std::size_t>{1, 3});
    CHECK(r.witness.kind == CanonicalKind::tmax);
  }
  SUBCASE("chain of length 1") {
    GroundSet g = GroundSet::numbered(2);
    SetSystem s = nonempty_power_set_system(g);
    RefinedStructure r = refined_structure(s, {MemberSet(2, {0})});
    CHECK(r.spread.levels() == 1);
    CHECK(r.spread.block(1).count() == 1);
  }
  SUBCASE("tort chain: singleton-trace members of one level") {
    // Each member misses a different point of the top block, so every prefix
    // keeps a private point per member and is incompressible.
    GroundSet g = GroundSet::numbered(20);
    Spread spread = make_spread({2, 3, 4, 5, 6}, g);
    SetSystem s = tort(spread);
    std::vector<MemberSet> chain;
    auto top_points = spread.block(5).indices();
    for (std::size_t i = 0; i < 5; ++i) {
      MemberSet x = spread.below(5);
      x.add(top_points[i]);
      chain.push_back(x);  // E_{>5} is empty at the truncation
    }
    for (std::size_t k = 1; k <= chain.size(); ++k) {
      std::vector<MemberSet> prefix(chain.begin(), chain.begin() + k);
      REQUIRE(is_incompressible(prefix).incompressible);
    }
    RefinedStructure r = refined_structure(s, chain);
    CHECK(r.schedule == std::vector<std::size_t>{1, 4});
    CHECK(r.spread.levels() == 2);
    CHECK(r.block_sizes == std::vector<std::size_t>{1, 3});
    CHECK(contains_canonical(s, r.spread, CanonicalKind::tmax).witness.has_value());
  }
  SUBCASE("compressible prefixes are rejected") {
    GroundSet g = GroundSet::numbered(3);
    SetSystem s = nonempty_power_set_system(g);
    std::vector<MemberSet> chain = {MemberSet(3, {0}), MemberSet(3, {1}),
                                    MemberSet(3, {0, 1})};
    CHECK_THROWS_AS(refined_structure(s, chain), std::invalid_argument);
  }
  SUBCASE("custom schedule must be strictly increasing and within the chain") {
    GroundSet g = GroundSet::numbered(4);
    SetSystem s = nonempty_power_set_system(g);
    std::vector<MemberSet> chain;
    for (std::size_t i = 0; i < 4; ++i) chain.push_back(MemberSet(4, {i}));
    CHECK_THROWS_AS(refined_structure(s, chain, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(refined_structure(s, chain, {1, 9}), std::invalid_argument);
    RefinedStructure r = refined_structure(s, chain, {2, 3, 4});
    CHECK(r.block_sizes == std::vector<std::size_t>{2, 1, 1});
  }
}
