#include "scs/instances.hpp"

#include <gtest/gtest.h>

#include "scs/distributed_space.hpp"

namespace scs {
namespace {

AumannModel three_states() {
  AumannModel m;
  m.states = {"s1", "s2", "s3"};
  m.partitions = {{"1", {{"s1", "s2"}, {"s3"}}}, {"2", {{"s1"}, {"s2", "s3"}}}};
  return m;
}

TEST(Instances, M2) {
  auto s = m2_scs();
  EXPECT_EQ(s.lattice().name(s.apply(0, s.lattice().at("p"))), "np");
  EXPECT_EQ(s.lattice().name(s.apply(1, s.lattice().at("np"))), "np");
  EXPECT_EQ(s.lattice().name(s.lattice().bottom()), "bot");
}

TEST(Instances, Powersets) {
  EXPECT_EQ(powerset_lattice(0)->size(), 1u);
  EXPECT_EQ(powerset_lattice(2)->size(), 4u);
  EXPECT_TRUE(powerset_lattice(3)->is_distributive());
  EXPECT_EQ(powerset_lattice(6)->size(), 64u);
  EXPECT_THROW(powerset_lattice(7), Error);
  EXPECT_THROW(powerset_lattice(-1), Error);
}

TEST(Instances, DownsetLatticesAreDistributive) {
  std::mt19937_64 rng(0);
  for (int t = 0; t < 20; ++t) {
    auto l = downset_lattice(4, random_poset(4, rng));
    EXPECT_TRUE(l->is_distributive());
    EXPECT_GE(l->size(), 5u);
    EXPECT_LE(l->size(), 16u);
  }
  // antichain of 3 gives the full powerset
  std::vector<std::vector<bool>> none(3, std::vector<bool>(3, false));
  EXPECT_EQ(downset_lattice(3, none)->size(), 8u);
}

TEST(Instances, RandomScsIsSeeded) {
  std::mt19937_64 a(42), b(42);
  auto l = powerset_lattice(3);
  auto x = random_scs(l, 3, a);
  auto y = random_scs(l, 3, b);
  for (AgentId i = 0; i < 3; ++i) EXPECT_EQ(x.space(i).table(), y.space(i).table());
}

TEST(Aumann, Knowledge) {
  auto m = three_states();
  m.validate();
  const std::vector<std::string> s12{"s1", "s2"}, s1{"s1"}, s2{"s2"};
  EXPECT_EQ(knowledge(m, 0, m.event(s12)), m.event(s12));
  EXPECT_EQ(knowledge(m, 1, m.event(s1)), m.event(s1));
  EXPECT_EQ(knowledge(m, 0, m.event(s1)), 0u);
  EXPECT_EQ(knowledge(m, 0, 0b111), 0b111u);
  EXPECT_EQ(m.event_name(m.event(s12)), "{s1,s2}");
}

TEST(Aumann, DistributedKnowledge) {
  auto m = three_states();
  const std::vector<std::string> both{"1", "2"}, one{"1"};
  const std::vector<std::string> s2{"s2"};
  EXPECT_EQ(distributed_knowledge(m, both, m.event(s2)), m.event(s2));
  for (Event e = 0; e < 8; ++e) EXPECT_EQ(distributed_knowledge(m, one, e), knowledge(m, 0, e));
  EXPECT_EQ(distributed_knowledge(m, both, 0b111), 0b111u);
  const std::vector<std::string> ghost{"9"};
  EXPECT_THROW((void)distributed_knowledge(m, ghost, 1), Error);
}

TEST(Aumann, CompiledScsOrientation) {
  auto m = three_states();
  auto s = aumann_scs(m);
  const auto& l = s.lattice();
  EXPECT_EQ(l.size(), 8u);
  EXPECT_TRUE(l.is_distributive());
  EXPECT_EQ(l.name(l.bottom()), "{s1,s2,s3}");
  EXPECT_EQ(l.name(l.top()), "{}");
  const Elem e1 = aumann_element(s, m, 0b001), e2 = aumann_element(s, m, 0b010);
  EXPECT_EQ(l.join(e1, e2), aumann_element(s, m, 0));
  EXPECT_EQ(l.meet(e1, e2), aumann_element(s, m, 0b011));
  for (Event e = 0; e < 8; ++e)
    for (AgentId i = 0; i < 2; ++i) EXPECT_EQ(s.apply(i, aumann_element(s, m, e)), aumann_element(s, m, knowledge(m, i, e)));
}

TEST(Aumann, KnowledgeIsUnionOfBlocks) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    auto m = random_aumann_model(5, 3, rng);
    for (std::size_t i = 0; i < 3; ++i)
      for (Event e = 0; e < 32; ++e) {
        const Event k = knowledge(m, i, e);
        for (std::size_t st = 0; st < 5; ++st)
          if (k >> st & 1) ASSERT_EQ(m.cell(i, st) & ~k, 0u);
      }
  }
}

TEST(Aumann, DeltaIsDistributedKnowledge) {
  auto m = three_states();
  auto s = aumann_scs(m);
  auto d = delta_oracle(s, s.all_agents());
  const std::vector<std::string> both{"1", "2"};
  for (Event e = 0; e < 8; ++e)
    EXPECT_EQ(d.table(aumann_element(s, m, e)), aumann_element(s, m, distributed_knowledge(m, both, e)));
}

TEST(Aumann, RejectsBadPartitions) {
  auto m = three_states();
  m.partitions[0].second = {{"s1"}, {"s1", "s2", "s3"}};
  EXPECT_THROW(m.validate(), Error);
  m = three_states();
  m.partitions[0].second = {{"s1"}, {"s2"}};
  EXPECT_THROW(m.validate(), Error);
  m = three_states();
  m.partitions[0].second = {{"s1", "s2", "s3", "s4"}};
  EXPECT_THROW(m.validate(), Error);
  m = three_states();
  m.states = {"a", "b", "c", "d", "e", "f", "g"};
  EXPECT_THROW(m.validate(), Error);
}

}  // namespace
}  // namespace scs
