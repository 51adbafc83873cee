#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "dipt/checks.hpp"
#include "dipt/serialize.hpp"

using namespace dipt;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DIPT_BINARY) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("text forms") {
  const DiptElement x = DiptElement(DiptBasis::parse("[| |] @ vw")) - DiptElement(DiptBasis::parse("[(| |)] @ vw"));
  CHECK(to_text(x) == "-[(| |)] @ vw + [| |] @ vw");
  CHECK(to_text(Rational(2, 3) * x) == "-2/3 [(| |)] @ vw + 2/3 [| |] @ vw");
  CHECK(to_text(DiptElement()) == "0");
  CHECK(unital_str(unit_element(3) + from_body(x)) == "3 - [(| |)] @ vw + [| |] @ vw");
  CHECK(unital_str(unit_element()) == "1");
  CHECK(unital_str(from_body(x)) == "-[(| |)] @ vw + [| |] @ vw");
  CHECK(unital_str(UnitalElement()) == "0");
  const auto lines = to_lines(delta(DiptElement(DiptBasis::parse("[(| |)] @ vw"))));
  REQUIRE(lines.size() == 1);
  CHECK(lines[0] == "[|] @ v ⊗ [|] @ w : 1");
  CHECK(parse_unital_key("1") == kUnit);
  CHECK(key_str(parse_unital_key("[|] @ v")) == "[|] @ v");
}

TEST_CASE("tensor JSON round trip") {
  for (const auto& b : dipt_basis(4, "vw")) {
    const DiptTensor d = delta(DiptElement(b), {Rational(3, 2)});
    const json j = json::parse(to_json(d).dump());
    CHECK(tensor_from_json<DiptBasis>(j, [](std::string_view s) { return DiptBasis::parse(s); }) == d);
  }
  const UnitalTensor u = blacktriangle(UnitalElement(UnitalKey(DiptBasis::parse("[(| |) |] @ vwu"))));
  CHECK(tensor_from_json<UnitalKey>(to_json(u), parse_unital_key) == u);
  CHECK_THROWS_AS(tensor_from_json<DiptBasis>(json{{"arity", 2}}, [](std::string_view s) { return DiptBasis::parse(s); }),
                  std::invalid_argument);
  const json bad = json::parse(R"({"arity": 2, "terms": [{"keys": ["[|] @ v"], "coeff": "1"}]})");
  CHECK_THROWS_AS(tensor_from_json<DiptBasis>(bad, [](std::string_view s) { return DiptBasis::parse(s); }),
                  std::invalid_argument);
}

TEST_CASE("report JSON") {
  const json h = to_json(homology_report(2, 3, 2));
  CHECK(h["koszul_ok"] == true);
  CHECK(h["pieces"].size() == 5);
  CHECK(h["pieces"][0]["betti"] == 1);
  const json a = antipode_table(CoproductKind::SemiInfinitesimal, {DiptBasis::parse("[(| |)] @ vw")});
  CHECK(a["[(| |)] @ vw"] == "-[(| |)] @ vw + [| |] @ vw");
  const json d = distribution_json(word_element("a s", Rational(1, 2)) + word_element("s a", Rational(1, 2)));
  CHECK(d[0]["word"] == "a s");
  CHECK(d[1]["mass"] == "1/2");
}

TEST_CASE("suites") {
  CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
  const auto axioms = run_suite("axioms", {3, 0, 1});
  CHECK(all_ok(axioms));
  CHECK(axioms.size() == 7);
  const auto bialgebra = run_suite("bialgebra", {2, 0, 1});
  CHECK(all_ok(bialgebra));
  const auto deeper = check_prim_2as(3);
  CHECK_FALSE(deeper.ok);
  REQUIRE(deeper.witness);
  CHECK(deeper.witness->find("degree 3") != std::string::npos);
}

TEST_CASE("dims and prim commands") {
  auto r = run("dims dipt --max-degree 4");
  CHECK(r.code == 0);
  CHECK(r.out == "dipt: 1 2 6 22  expected 1 2 6 22  match=true\n");
  r = run("dims mag --max-degree 5 --json");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["operads"][0]["computed"] == json::array({1, 1, 3, 11, 45}));
  r = run("dims qndipt --max-degree 4");
  CHECK(r.out.find("qndipt: 1 2 2 2 ") == 0);
  CHECK(run("dims bogus").code == 2);
  CHECK(run("dims --max-degree 0").code == 2);

  r = run("prim semiinf --max-degree 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("1 1 3 11  expected 1 1 3 11  match=true") != std::string::npos);
  r = run("prim hopf --max-degree 3 --json");
  CHECK(json::parse(r.out)["hopf"]["kernel"] == json::array({1, 1, 4}));
  CHECK(run("prim both --max-degree 3").code == 0);
  CHECK(run("prim semiinf --t 0 --max-degree 3").code == 1);
  CHECK(run("prim --t 1/0").code == 2);
}

TEST_CASE("homology command") {
  auto r = run("homology --json");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["koszul_ok"] == true);
  r = run("homology --weight-cap 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("koszul_ok=true") != std::string::npos);
  r = run("homology --weight-cap 3 --inject-sign-fault --json");
  CHECK(r.code == 1);
  const json bad = json::parse(r.out);
  CHECK(bad["koszul_ok"] == false);
  CHECK(bad.contains("witness"));
}

TEST_CASE("verify command") {
  auto r = run("verify axioms --max-degree 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = run("verify dynamics --seed 5 --json");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["ok"] == true);
  r = run("verify bialgebra --max-degree 3");
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL ker reduced-triangle") != std::string::npos);
  CHECK(run("verify nonsense").code == 2);
}

TEST_CASE("antipode command") {
  auto r = run("antipode 1 --alphabet v");
  CHECK(r.code == 0);
  CHECK(r.out == "[|] @ v\n  S  = -[|] @ v\n  S' = -[|] @ v\nidentities_ok=true\n");
  r = run("antipode 2 --alphabet vw --json");
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["S'"]["[(| |)] @ vw"] == "-[(| |)] @ vw + [| |] @ vw");
  CHECK(j["identities_ok"] == true);
  CHECK(run("antipode 7 --max-degree 5").code == 2);
}

TEST_CASE("dynamics and delta commands") {
  const auto g = temp_file("dipt_two_rule.txt", "# two rules\ns -> s a : 1/2\ns -> a s : 1/2\n");
  auto r = run("dynamics " + g + " s 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("step 1  mass 1\n  a s : 1/2\n  s a : 1/2\n") != std::string::npos);
  r = run("dynamics " + g + " s 0 --json");
  const json j = json::parse(r.out);
  CHECK(j["steps"].size() == 1);
  CHECK(j["steps"][0]["distribution"][0]["mass"] == "1");
  CHECK(run("dynamics " + g + " q 1").code == 2);

  const auto closed = temp_file("dipt_closed.txt", "s -> s a : 1/3\ns -> a s : 2/3\na -> a a : 1\n");
  r = run("dynamics " + closed + " s 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("step 4  mass 1\n") != std::string::npos);

  const auto heavy = temp_file("dipt_heavy.txt", "s -> a s : 2\n");
  CHECK(run("dynamics " + heavy + " s 1").code == 2);
  r = run("dynamics " + heavy + " s 1 --free-weights");
  CHECK(r.code == 0);
  CHECK(r.out.find("a s : 2") != std::string::npos);

  const auto broken = temp_file("dipt_broken.txt", "s -> a s : 1\ns -> a\n");
  r = run("dynamics " + broken + " s 1");
  CHECK(r.code == 2);
  CHECK(r.out.find("line 2") != std::string::npos);

  const auto graph = temp_file("dipt_graph.txt", "arc v w 1/2\narc v u 1/2\narc w v 1\narc u v 1\n");
  r = run("dynamics " + graph + " v 1 --graph");
  CHECK(r.code == 0);
  CHECK(r.out.find("v u : 1/2") != std::string::npos);
  const auto sink = temp_file("dipt_sink.txt", "arc v w 1\n");
  CHECK(run("dynamics " + sink + " v 1 --graph").code == 2);

  r = run("delta '[(| |)] @ vw'");
  CHECK(r.code == 0);
  CHECK(r.out == "[|] @ v ⊗ [|] @ w : 1\n");
  r = run("delta '[(| |)] @ vw' --t 0 --json");
  CHECK(json::parse(r.out)["terms"].empty());
  CHECK(run("delta '[(| |)] @ v'").code == 2);
}
