#include "scs/lattice.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scs/instances.hpp"

namespace scs {
namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

Lattice m2() {
  return Lattice::build({"bot", "p", "np", "top"}, Pairs{{"bot", "p"}, {"bot", "np"}, {"p", "top"}, {"np", "top"}})
      .value();
}

TEST(Lattice, BuildsM2) {
  auto l = m2();
  EXPECT_EQ(l.size(), 4u);
  EXPECT_EQ(l.name(l.bottom()), "bot");
  EXPECT_EQ(l.name(l.top()), "top");
  EXPECT_EQ(l.name(l.join(l.at("p"), l.at("np"))), "top");
  EXPECT_EQ(l.name(l.meet(l.at("p"), l.at("np"))), "bot");
}

TEST(Lattice, OnePoint) {
  auto l = Lattice::build({"bot"}, Pairs{}).value();
  EXPECT_EQ(l.bottom(), l.top());
  EXPECT_TRUE(l.is_distributive());
  EXPECT_TRUE(l.join_irreducibles().empty());
}

TEST(Lattice, TakesTransitiveClosure) {
  auto l = Lattice::build({"a", "b", "c"}, Pairs{{"a", "b"}, {"b", "c"}}).value();
  EXPECT_TRUE(l.leq("a", "c"));
  EXPECT_FALSE(l.leq("c", "a"));
}

TEST(Lattice, HexagonHasAmbiguousLub) {
  // bot < a, b < c, d < top: {a, b} has the two minimal upper bounds c and d.
  auto built = Lattice::build({"bot", "a", "b", "c", "d", "top"},
                              Pairs{{"bot", "a"}, {"bot", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"},
                                    {"c", "top"}, {"d", "top"}});
  ASSERT_FALSE(built.ok());
  bool found = false;
  for (const auto& v : built.report().violations) {
    if (v.rule == "ambiguous-lub" && v.witness[0] == "a" && v.witness[1] == "b") {
      found = true;
      // witness lists the pair, then every minimal upper bound
      EXPECT_EQ(v.witness.size(), 4u);
    }
  }
  EXPECT_TRUE(found) << built.report().to_string();
  EXPECT_THROW(built.value(), ValidationFailed);
}

TEST(Lattice, RejectsCycle) {
  auto built = Lattice::build({"a", "b"}, Pairs{{"a", "b"}, {"b", "a"}});
  ASSERT_FALSE(built.ok());
  EXPECT_EQ(built.report().violations.front().rule, "antisymmetry");
}

TEST(Lattice, RejectsDuplicatesAndUnknowns) {
  EXPECT_EQ(Lattice::build({"a", "a"}, Pairs{}).report().violations.front().rule, "duplicate-element");
  EXPECT_EQ(Lattice::build({"a"}, Pairs{{"a", "z"}}).report().violations.front().rule, "unknown-element");
  EXPECT_FALSE(Lattice::build({}, Pairs{}).ok());
  // two incomparable points: no upper bound at all
  EXPECT_EQ(Lattice::build({"a", "b"}, Pairs{}).report().violations.front().rule, "no-upper-bound");
}

TEST(Lattice, EmptyJoinAndMeet) {
  auto l = m2();
  EXPECT_EQ(l.name(l.join(std::vector<Elem>{})), "bot");
  EXPECT_EQ(l.name(l.meet(std::vector<Elem>{})), "top");
  std::vector<Elem> both{l.at("p"), l.at("np")};
  EXPECT_EQ(l.name(l.join(both)), "top");
  EXPECT_EQ(l.name(l.meet(both)), "bot");
}

TEST(Lattice, PowersetJoinIsUnion) {
  auto l = powerset_lattice(3);
  EXPECT_EQ(l->name(l->join(l->at("{1}"), l->at("{2}"))), "{1,2}");
}

TEST(Lattice, LeqQueries) {
  auto l = m2();
  EXPECT_TRUE(l.leq("bot", "p"));
  EXPECT_FALSE(l.leq("p", "np"));
  for (Elem x = 0; x < l.size(); ++x) EXPECT_TRUE(l.leq(x, x));
}

TEST(Lattice, UnknownElementThrows) {
  auto l = m2();
  try {
    (void)l.at("q");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownElement);
  }
  EXPECT_THROW((void)l.leq(Elem{0}, Elem{9}), Error);
  EXPECT_THROW((void)l.join(std::vector<Elem>{7}), Error);
}

TEST(Lattice, Distributivity) {
  EXPECT_TRUE(m2().is_distributive());
  EXPECT_TRUE(chain_lattice(5)->is_distributive());

  auto m3 = m3_lattice();
  ASSERT_FALSE(m3->is_distributive());
  auto w = *m3->distributivity().witness;
  // the witness is three distinct atoms
  for (Elem x : w) {
    EXPECT_NE(x, m3->bottom());
    EXPECT_NE(x, m3->top());
  }
  EXPECT_NE(w[0], w[1]);
  EXPECT_NE(w[1], w[2]);
  EXPECT_NE(w[0], w[2]);
  EXPECT_NE(m3->join(w[0], m3->meet(w[1], w[2])), m3->meet(m3->join(w[0], w[1]), m3->join(w[0], w[2])));

  EXPECT_FALSE(n5_lattice()->is_distributive());
}

TEST(Lattice, HeytingImplicationOnM2) {
  auto l = m2();
  const Elem bot = l.at("bot"), p = l.at("p"), np = l.at("np");
  EXPECT_EQ(l.implies(p, np), np);
  EXPECT_EQ(l.implies(p, p), bot);
  EXPECT_EQ(l.implies(bot, p), p);
}

TEST(Lattice, ImplicationNeedsFrame) {
  auto m3 = m3_lattice();
  try {
    (void)m3->implies(0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FrameRequired);
  }
}

TEST(Lattice, JoinIrreducibles) {
  EXPECT_EQ(m2().join_irreducibles().size(), 2u);
  EXPECT_EQ(powerset_lattice(4)->join_irreducibles().size(), 4u);
  EXPECT_EQ(m3_lattice()->join_irreducibles().size(), 3u);
  EXPECT_EQ(chain_lattice(4)->join_irreducibles().size(), 3u);
}

TEST(Lattice, CoversAndHeights) {
  auto l = m2();
  EXPECT_EQ(l.covers().size(), 4u);
  auto h = l.heights();
  EXPECT_EQ(h[l.at("bot")], 0u);
  EXPECT_EQ(h[l.at("p")], 1u);
  EXPECT_EQ(h[l.at("top")], 2u);
  EXPECT_EQ(n5_lattice()->heights()[n5_lattice()->top()], 3u);
}

// Table-driven properties over a handful of lattices, checked against
// order-relation scans.
class LatticeLaws : public ::testing::TestWithParam<int> {
 protected:
  LatticePtr lattice() const {
    switch (GetParam()) {
      case 0: return powerset_lattice(3);
      case 1: return m3_lattice();
      case 2: return n5_lattice();
      case 3: return chain_lattice(4);
      default: {
        std::mt19937_64 rng(GetParam());
        return downset_lattice(4, random_poset(4, rng));
      }
    }
  }
};

TEST_P(LatticeLaws, JoinMeetMatchScansAndAbsorb) {
  auto l = lattice();
  for (Elem a = 0; a < l->size(); ++a)
    for (Elem b = 0; b < l->size(); ++b) {
      ASSERT_EQ(l->join(a, b), testing::scan_join(*l, a, b));
      ASSERT_EQ(l->meet(a, b), testing::scan_meet(*l, a, b));
      ASSERT_EQ(l->join(a, l->meet(a, b)), a);
      ASSERT_EQ(l->meet(a, l->join(a, b)), a);
    }
}

TEST_P(LatticeLaws, HeytingIdentities) {
  auto l = lattice();
  if (!l->is_distributive()) {
    EXPECT_THROW((void)l->implies(l->top(), l->bottom()), Error);
    return;
  }
  for (Elem c = 0; c < l->size(); ++c)
    for (Elem d = 0; d < l->size(); ++d) {
      const Elem imp = l->implies(c, d);
      ASSERT_EQ(imp, testing::scan_implies(*l, c, d));
      ASSERT_EQ(l->join(c, imp), l->join(c, d));
      ASSERT_TRUE(l->leq(imp, d));
      ASSERT_EQ(imp == l->bottom(), l->leq(d, c));
    }
}

INSTANTIATE_TEST_SUITE_P(Samples, LatticeLaws, ::testing::Range(0, 10));

}  // namespace
}  // namespace scs
