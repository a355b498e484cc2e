#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

using nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CURVEXT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

ordered_json run_json(const std::string& args, int expect_code = 0) {
  RunResult r = run_cli(args + " --format json");
  INFO(r.out);
  REQUIRE(r.exit_code == expect_code);
  return ordered_json::parse(r.out);
}

std::string data_file(const std::string& name) {
  return std::string(CURVEXT_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("cohomology subcommand") {
  ordered_json j = run_json(
      "cohomology --kind trigonal --genus 10 --maroni 4,8 --bundle 6*g");
  CHECK(j["outputs"]["degree"] == 18);
  CHECK(j["outputs"]["h0"] == 10);
  CHECK(j["outputs"]["h1"] == 1);

  j = run_json("cohomology --kind hyperelliptic --genus 4 --bundle 3*g+1pts");
  CHECK(j["outputs"]["h0"] == 4);
  CHECK(j["outputs"]["degree"] == 7);

  j = run_json("cohomology --kind genus3 --bundle 4K-3pts");
  CHECK(j["outputs"]["degree"] == 13);
  CHECK(j["outputs"]["h0"] == 11);
}

TEST_CASE("corank subcommand") {
  ordered_json j = run_json("corank --kind hyperelliptic --genus 5 --degree 13");
  CHECK(j["outputs"]["cork"] == 12);
  CHECK(j["outputs"]["mult_corank"] == 0);
  CHECK(j["outputs"]["ribbon_dim"] == 11);

  j = run_json("corank --kind genus3 --bundle 4K-4pts:aligned");
  CHECK(j["outputs"]["cork"] == 3);

  j = run_json("corank --kind trigonal --genus 7 --maroni 3,6 --m 2");
  CHECK(j["outputs"]["cork"] == 2);

  // undetermined multiplication corank surfaces as a warning
  j = run_json("corank --kind hyperelliptic --genus 6 --bundle 4*g+1pts");
  CHECK(j["outputs"]["mult_corank"] == "undetermined");
  CHECK(j["warnings"].size() == 1);
}

TEST_CASE("classify subcommand") {
  ordered_json j = run_json("classify 10 36");
  REQUIRE(j["outputs"]["classes"].size() == 5);
  CHECK(j["outputs"]["classes"][0]["class"] == "planar delta=6 b=0");
  CHECK(j["outputs"]["classes"][4]["class"] == "bielliptic-cone");
  CHECK(j["outputs"]["only_cones"] == false);

  j = run_json("classify 4 11 --kind hyperelliptic");
  CHECK(j["outputs"]["extendable"] == "yes");
  CHECK(j["outputs"]["universal"]["ambient"] == 17);

  j = run_json("classify 3 8 --kind genus3 --bicanonical");
  REQUIRE(j["outputs"]["families"].size() == 2);
  CHECK(j["outputs"]["families"][1]["dim"] == 6);

  j = run_json("classify --kind genus3 --bundle 4K-4pts");
  CHECK(j["outputs"]["cork"] == 2);
  CHECK(j["outputs"]["family_dim"] == 1);
}

TEST_CASE("table subcommand") {
  ordered_json j = run_json("table genus3-lemma --d 13");
  REQUIRE(j["outputs"]["rows"].size() == 1);
  CHECK(j["outputs"]["rows"][0]["general"] == 1);
  CHECK(j["outputs"]["rows"][0]["aligned"] == 2);

  j = run_json("table trigonal --genus 9");
  REQUIRE(j["outputs"]["rows"].size() == 2);
  CHECK(j["outputs"]["rows"][0]["a"] == 5);
  CHECK(j["outputs"]["rows"][1]["a"] == 4);

  j = run_json("table trigonal");
  CHECK(j["outputs"]["rows"].size() == 12);

  j = run_json("table plurican-corank --cliff 2");
  REQUIRE(j["outputs"]["rows"].size() == 3);

  j = run_json("table plurican-corank --cliff 1");
  bool depends = false;
  for (const auto& row : j["outputs"]["rows"])
    depends = depends || row["cork"] == "depends";
  CHECK(depends);
}

TEST_CASE("universal subcommand") {
  ordered_json j = run_json("universal --family genus3 --degree 12");
  CHECK(j["outputs"]["tag"] == "genus3-degree-12-general");
  CHECK(j["outputs"]["dim"] == 3);

  j = run_json("universal --family genus3 --three-canonical");
  CHECK(j["outputs"]["dim"] == 4);
  CHECK(j["outputs"]["ambient"] == 12);

  j = run_json("universal --family hyperelliptic --genus 6 --degree 15");
  CHECK(j["outputs"]["dim"] == 15);
  CHECK(j["outputs"]["ambient"] == 23);
  CHECK(j["outputs"]["cork"] == 14);

  j = run_json(
      "universal --family pluricanonical --kind trigonal --genus 7 "
      "--maroni 3,6 --m 2");
  CHECK(j["outputs"]["deg"] == 24);
  CHECK(j["outputs"]["ambient"] == 19);

  j = run_json("universal --weights 1,1,1,3,3,3 --w 4 --m 3");
  CHECK(j["outputs"]["dim"] == 4);
  CHECK(j["outputs"]["ambient"] == 12);
  CHECK(j["outputs"]["degree"] == 12);

  j = run_json("universal --family genus3 --all");
  CHECK(j["outputs"]["records"].size() == 6);
}

TEST_CASE("family-dims subcommand") {
  ordered_json j = run_json("family-dims --genus 5 --mu 6 --b 3");
  CHECK(j["outputs"]["delta"] == 3);
  CHECK(j["outputs"]["moduli"] == 17);
  CHECK(j["outputs"]["ribbon_b_max"] == 11);

  j = run_json("family-dims --genus 3 --sweep");
  CHECK(j["outputs"]["rows"].size() == 5 * 8);
}

TEST_CASE("check-construction subcommand") {
  ordered_json j =
      run_json("check-construction " + data_file("klein_genus3.txt"));
  CHECK(j["outputs"]["holds"] == true);

  j = run_json("check-construction " + data_file("genus4.txt"));
  CHECK(j["outputs"]["holds"] == true);

  // a corrupted expected polynomial exits with the identity-failure code
  j = run_json("check-construction " + data_file("klein_genus3_bad.txt"), 4);
  CHECK(j["outputs"]["holds"] == false);
}

TEST_CASE("exit codes") {
  RunResult r = run_cli("cohomology --no-such-flag");
  CHECK(r.exit_code == 2);

  r = run_cli("corank --kind hyperelliptic --genus 5");  // no bundle given
  CHECK(r.exit_code == 2);

  r = run_cli("cohomology --kind hyperelliptic --genus 1 --bundle 2*g");
  CHECK(r.exit_code == 3);

  r = run_cli("universal --family hyperelliptic --genus 5 --degree 24");
  CHECK(r.exit_code == 3);

  r = run_cli("table trigonal --genus 4");
  CHECK(r.exit_code == 3);

  r = run_cli("cohomology --kind genus3 --bundle 4K+oops");
  CHECK(r.exit_code == 2);
}

TEST_CASE("json errors are structured") {
  RunResult r = run_cli(
      "universal --family hyperelliptic --genus 5 --degree 24 --format json");
  CHECK(r.exit_code == 3);
  ordered_json j = ordered_json::parse(r.out);
  CHECK(j["error"]["kind"] == "no-universal");
  CHECK(j["error"]["message"].is_string());
}

TEST_CASE("output is deterministic") {
  const std::string cmd = "classify 10 36 --format json";
  RunResult a = run_cli(cmd);
  RunResult b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  // round-trip: parse and re-dump reproduces the bytes modulo the trailing
  // newline the tool appends
  ordered_json j = ordered_json::parse(a.out);
  CHECK(j.dump(2) + "\n" == a.out);
}

TEST_CASE("human format renders the record") {
  RunResult r = run_cli("corank --kind hyperelliptic --genus 5 --degree 13");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("command: corank") != std::string::npos);
  CHECK(r.out.find("cork: 12") != std::string::npos);
  CHECK(r.out.find("rules:") != std::string::npos);

  r = run_cli("table trigonal --genus 9");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("class") != std::string::npos);
  CHECK(r.out.find("3E+") != std::string::npos);

  r = run_cli("report-all");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[criterion 1]") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
