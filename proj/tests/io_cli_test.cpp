#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "cli.hpp"
#include "scs/io.hpp"

namespace scs {
namespace {

const std::string kModels = SCS_MODELS_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string model(const std::string& name) { return kModels + "/" + name; }

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

TEST(Io, LoadsM2File) {
  auto doc = io::read_model(model("m2.json"));
  EXPECT_EQ(doc.kind, io::ModelDocument::Kind::Scs);
  auto s = io::load_scs(doc);
  auto ref = m2_scs();
  ASSERT_EQ(s.agent_count(), 2u);
  for (AgentId i = 0; i < 2; ++i) {
    const AgentId j = ref.agent(s.agent_name(i));
    for (const auto& name : ref.lattice().names())
      EXPECT_EQ(s.lattice().name(s.apply(i, s.lattice().at(name))), ref.lattice().name(ref.apply(j, ref.lattice().at(name))));
  }
}

TEST(Io, RoundTrip) {
  auto s = io::load_scs(io::read_model(model("m2.json")));
  auto again = io::load_scs(io::read_model_string(io::to_json(s).dump()));
  EXPECT_EQ(io::to_json(again), io::to_json(s));
  auto d1 = delta(s, s.all_agents(), Algorithm::Part3);
  auto d2 = delta(again, again.all_agents(), Algorithm::Part3);
  EXPECT_EQ(io::to_json(s, d1), io::to_json(again, d2));
}

TEST(Io, SchemaErrors) {
  auto schema = [](const std::string& text) {
    try {
      (void)io::read_model_string(text);
    } catch (const Error& e) {
      return e.kind() == ErrorKind::Schema ? std::string(e.what()) : std::string("wrong kind");
    }
    return std::string("no error");
  };
  EXPECT_NE(schema("{\"lattice\": ").find("malformed JSON"), std::string::npos);
  EXPECT_NE(schema("{\"lattice\": {\"elements\": [\"a\"], \"order\": []}, \"extra\": 1}"), "no error");
  EXPECT_NE(schema("[]"), "no error");
  EXPECT_NE(schema("{\"lattice\": {\"elements\": [1], \"order\": []}}"), "no error");
  try {
    (void)io::read_model(model("partial_agent.json"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Schema);
    EXPECT_NE(std::string(e.what()).find("np"), std::string::npos);
  }
  EXPECT_THROW((void)io::read_model(model("does_not_exist.json")), Error);
}

TEST(Io, LatticeOnlyHasNoScs) {
  auto doc = io::read_model(model("powerset3.json"));
  EXPECT_EQ(doc.kind, io::ModelDocument::Kind::Lattice);
  EXPECT_TRUE(io::build_lattice(doc).ok());
  EXPECT_THROW((void)io::load_scs(doc), ValidationFailed);
}

TEST(Io, DotExport) {
  auto s = m2_scs();
  auto dot = io::to_dot(s.lattice(), &s);
  EXPECT_EQ(count(dot, "arrowhead=none"), 4u);
  EXPECT_EQ(count(dot, "constraint=false"), 8u);
  auto one = io::to_dot(*chain_lattice(1));
  EXPECT_EQ(count(one, "->"), 0u);
}

TEST(Cli, CheckExitCodes) {
  auto ok = run({"check", model("m2.json")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("distributive: yes"), std::string::npos);
  auto m3 = run({"check", model("m3.json")});
  EXPECT_EQ(m3.code, 2);
  EXPECT_NE(m3.out.find("(a, b, c)"), std::string::npos) << m3.out;
  EXPECT_EQ(run({"check", model("partial_agent.json")}).code, 1);
  EXPECT_EQ(run({"check", model("missing.json")}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
}

TEST(Cli, Delta) {
  auto r = run({"delta", model("m2.json"), "--group", "1,2", "--alg", "part3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["table"], (nlohmann::json{{"bot", "bot"}, {"p", "np"}, {"np", "bot"}, {"top", "np"}}));
  EXPECT_EQ(j["algorithm"], "part3");
  EXPECT_EQ(j["group"], (nlohmann::json{"1", "2"}));
  EXPECT_TRUE(j.contains("op_counts"));

  auto single = run({"delta", model("m2.json"), "--group", "1", "--json"});
  EXPECT_EQ(nlohmann::json::parse(single.out)["table"],
            (nlohmann::json{{"bot", "bot"}, {"p", "np"}, {"np", "p"}, {"top", "top"}}));

  auto at = run({"delta", model("m2.json"), "--group", "1,2", "--at", "np"});
  EXPECT_EQ(at.code, 0);
  EXPECT_NE(at.out.find("bot"), std::string::npos);

  auto frame = run({"delta", model("m3.json"), "--alg", "part3"});
  EXPECT_EQ(frame.code, 2);
  EXPECT_NE(frame.err.find("--alg oracle"), std::string::npos);
  EXPECT_EQ(run({"delta", model("m3.json"), "--alg", "oracle"}).code, 0);
  EXPECT_EQ(run({"delta", model("m2.json"), "--group", "9"}).code, 1);
  EXPECT_EQ(run({"delta", model("m2.json"), "--alg", "fast"}).code, 1);
  EXPECT_EQ(run({"delta", model("powerset2.json"), "--alg", "oracle", "--cap", "1"}).code, 2);
}

TEST(Cli, JsonIsDeterministic) {
  const std::vector<std::string> args{"delta", model("m2.json"), "--group", "1,2", "--alg", "part1", "--json"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> bench{"bench", model("powerset3.json"), "--random-agents", "3", "--seed", "4", "--json"};
  auto a = run(bench);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, run(bench).out);
}

TEST(Cli, Project) {
  auto agent = run({"project", model("m2.json"), "--kind", "agent", "--group", "1", "--at", "np"});
  EXPECT_EQ(agent.code, 0);
  EXPECT_NE(agent.out.find("p"), std::string::npos);
  auto group = run({"project", model("m2.json"), "--kind", "group", "--group", "1,2", "--at", "np"});
  EXPECT_EQ(group.code, 0);
  EXPECT_NE(group.out.find("top"), std::string::npos);
  auto join = run({"project", model("m2.json"), "--kind", "join", "--group", "1,2", "--at", "bot"});
  EXPECT_EQ(join.code, 0);
  EXPECT_NE(join.out.find("bot"), std::string::npos);
  EXPECT_EQ(run({"project", model("m2.json"), "--kind", "agent", "--group", "1,2", "--at", "np"}).code, 1);
  EXPECT_EQ(run({"project", model("m2.json"), "--kind", "agent", "--group", "1", "--at", "q"}).code, 1);
}

TEST(Cli, Extrude) {
  auto ok = run({"extrude", model("m2.json"), "--agent", "1", "--method", "sup", "--json"});
  ASSERT_EQ(ok.code, 0) << ok.err;
  auto j = nlohmann::json::parse(ok.out);
  EXPECT_EQ(j["table"], (nlohmann::json{{"bot", "bot"}, {"p", "np"}, {"np", "p"}, {"top", "top"}}));
  EXPECT_EQ(j["method"], "sup_preimage");
  auto bad = run({"extrude", model("m2.json"), "--agent", "2"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("not surjective, witness p"), std::string::npos);
  auto id = run({"extrude", model("powerset2.json"), "--agent", "1", "--method", "inf", "--json"});
  ASSERT_EQ(id.code, 0) << id.err;
  for (auto& [k, v] : nlohmann::json::parse(id.out)["table"].items()) EXPECT_EQ(k, v.get<std::string>());
}

TEST(Cli, Bench) {
  auto r = run({"bench", model("m2.json"), "--group", "1,2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("ok"), std::string::npos);
  auto single = run({"bench", model("m2.json"), "--group", "1", "--json"});
  ASSERT_EQ(single.code, 0);
  auto j = nlohmann::json::parse(single.out);
  EXPECT_TRUE(j["agreement"].get<bool>());
  // base case only: the recursive variants count identically
  EXPECT_EQ(j["variants"]["part1"]["op_counts"], j["variants"]["part2"]["op_counts"]);
  EXPECT_EQ(j["variants"]["part2"]["op_counts"], j["variants"]["part3"]["op_counts"]);
  EXPECT_EQ(j["variants"]["part3"]["op_counts"]["recursive_calls"], 4);
}

TEST(Cli, ExportDot) {
  auto m2 = run({"export-dot", model("m2.json")});
  EXPECT_EQ(m2.code, 0);
  EXPECT_EQ(count(m2.out, "arrowhead=none"), 4u);
  EXPECT_EQ(count(m2.out, "constraint=false"), 8u);
  auto one = run({"export-dot", model("one_point.json")});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(count(one.out, "->"), 0u);
  EXPECT_EQ(count(run({"export-dot", model("powerset3.json")}).out, "->"), 12u);
}

TEST(Cli, AumannCompile) {
  auto r = run({"aumann-compile", model("aumann3.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = io::read_model_string(r.out);
  auto s = io::load_scs(doc);
  EXPECT_EQ(s.lattice().size(), 8u);
  EXPECT_EQ(s.agent_count(), 2u);
}

}  // namespace
}  // namespace scs
