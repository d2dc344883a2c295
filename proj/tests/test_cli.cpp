#include "hk/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = hk::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("cli: classify") {
  const Run r = cli({"classify", "--cycle", "3"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0] == "gk=1");
  CHECK(ls[1] == "two-connected-cycles: false");
  CHECK(ls[2] == "criteria-consistent: yes");

  CHECK(lines(cli({"classify", "--example-s4"}).out)[0] == "gk=2");

  const Run records = cli({"classify", "--cycle", "3", "--format",
                           "records"});
  CHECK(records.out.find("classification\tpolynomial\n") !=
        std::string::npos);
  CHECK(records.out.find("gk\t1\n") != std::string::npos);
}

TEST_CASE("cli: normalize and eq") {
  CHECK(cli({"normalize", "--cycle", "3", "212"}).out == "ab\n");
  CHECK(cli({"normalize", "--example-s4", "41234"}).out == "abcd\n");
  CHECK(cli({"normalize", "--cycle", "4", "--system", "Sprime", "31"}).out ==
        "ac\n");
  CHECK(cli({"eq", "--cycle", "3", "121", "212"}).out == "equal\n");
  CHECK(cli({"eq", "--cycle", "3", "12", "21"}).out == "not-equal\n");
  CHECK(cli({"eq", "--cycle", "3", "--format", "records", "121", "212"}).out ==
        "equal\ttrue\n");
}

TEST_CASE("cli: growth table") {
  const Run r = cli({"growth", "--cycle", "3", "--max-len", "8"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 10);
  CHECK(ls[0] == "0\t1");
  CHECK(ls[1] == "1\t3");
  for (int l = 2; l <= 8; ++l) {
    CHECK(ls[l] == std::to_string(l) + "\t6");
  }
  CHECK(ls[9] == "# classification: gk=1");

  const Run records =
      cli({"growth", "--cycle", "3", "--max-len", "2", "--format",
           "records"});
  CHECK(records.out ==
        "count.0\t1\ncount.1\t3\ncount.2\t6\nclassification\tpolynomial\n"
        "gk\t1\n");
}

TEST_CASE("cli: enumerate") {
  const Run r = cli({"enumerate", "--cycle", "3", "--max-len", "2"});
  CHECK(lines(r.out) == std::vector<std::string>{"1", "a", "b", "c", "ab",
                                                 "ac", "ba", "bc", "ca",
                                                 "cb"});
}

TEST_CASE("cli: obstructions") {
  const Run r =
      cli({"obstructions", "--example-s4", "--max-len", "11"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  CHECK(std::count(ls.begin(), ls.end(), "dabcd") == 1);
  CHECK(std::count(ls.begin(), ls.end(), "dabcabcd") == 1);
}

TEST_CASE("cli: basis exports") {
  const Run text = cli({"basis", "--cycle", "3"});
  CHECK(text.code == 0);
  CHECK(lines(text.out).size() == 9);
  CHECK(text.out.find("aba -> ab") != std::string::npos);

  const Run json = cli({"basis", "--cycle", "3", "--format", "json-like"});
  const auto parsed = nlohmann::json::parse(json.out);
  CHECK(parsed.size() == 9);
  CHECK(parsed[0].contains("lhs"));

  const Run dot = cli({"basis", "--cycle", "3", "--format", "dot-rules"});
  CHECK(dot.out.find("\"aba\" -> \"ab\"") != std::string::npos);

  const Run schema = cli({"basis", "--example-s4", "--schema"});
  CHECK(schema.out.find("T-ii: d<a,b,c>d") != std::string::npos);

  CHECK(cli({"basis", "--example-s4"}).code == 1);
  CHECK(cli({"basis", "--cycle", "12"}).code == 1);  // above the cap
}

TEST_CASE("cli: automaton export") {
  const Run r = cli({"automaton", "--cycle", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("digraph normal_words") != std::string::npos);
  const Run min = cli({"automaton", "--cycle", "3", "--minimize"});
  CHECK(min.code == 0);

  const std::string path = "/tmp/hk_test_dfa.dot";
  CHECK(cli({"automaton", "--cycle", "3", "--out", path}).code == 0);
  std::ifstream file(path);
  std::ostringstream content;
  content << file.rdbuf();
  CHECK(content.str() == r.out);
  std::remove(path.c_str());
}

TEST_CASE("cli: verification subcommands") {
  const Run confluence =
      cli({"confluence", "--cycle", "3", "--system", "T", "--max-len", "4"});
  CHECK(confluence.code == 0);
  CHECK(confluence.out.find("ok") == 0);

  const Run oracle = cli({"oracle-check", "--cycle", "3", "--max-len", "3"});
  CHECK(oracle.code == 0);
  CHECK(oracle.out.find("ok") == 0);

  const Run records = cli({"oracle-check", "--cycle", "3", "--max-len", "3",
                           "--format", "records"});
  CHECK(records.out.find("ok\ttrue\n") == 0);
}

TEST_CASE("cli: basis records format") {
  const Run r = cli({"basis", "--cycle", "3", "--format", "records"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rules\t9\n") == 0);
  CHECK(r.out.find("rule.0\t") != std::string::npos);
}

TEST_CASE("cli: a cycle given as a file still exports its basis") {
  const std::string path = "/tmp/hk_test_cycle4.g";
  {
    std::ofstream file(path);
    file << "n=4\n1->2\n2->3\n3->4\n4->1\n";
  }
  const Run r = cli({"basis", "--graph", path});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 39);
  std::remove(path.c_str());
  // a permuted order is accepted and changes normal forms
  CHECK(cli({"normalize", "--cycle", "4", "--order", "4,3,2,1", "13"}).out ==
        "ca\n");
}

TEST_CASE("cli: bad inputs exit with code 1") {
  CHECK(cli({"classify"}).code == 1);                      // no graph source
  CHECK(cli({"growth", "--cycle", "3", "--max-len", "-2"}).code == 1);
  CHECK(cli({"classify", "--cycle", "4", "--order", "1,2,x,4"}).code == 1);
  CHECK(cli({"classify", "--cycle", "4", "--order", "1,2"}).code == 1);
  CHECK(cli({"classify", "--cycle", "3", "--example-s4"}).code == 1);
  CHECK(cli({"classify", "--graph", "/does/not/exist"}).code == 1);
  CHECK(cli({"normalize", "--cycle", "3", "15"}).code == 1);  // bad letter
  CHECK(cli({"normalize", "--example-s4", "--system", "S", "12"}).code == 1);
  CHECK(cli({"growth", "--cycle", "3"}).code == 1);  // missing --max-len
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({}).code == 1);
  CHECK(cli({"enumerate", "--cycle", "3", "--max-len", "9", "--budget",
             "5"}).code == 1);
}

TEST_CASE("cli: output is deterministic") {
  const Run a = cli({"classify", "--example-s4"});
  const Run b = cli({"classify", "--example-s4"});
  CHECK(a.out == b.out);
  const Run d1 = cli({"automaton", "--example-s4"});
  const Run d2 = cli({"automaton", "--example-s4"});
  CHECK(d1.out == d2.out);
}

TEST_CASE("cli: help exits cleanly") {
  CHECK(cli({"--help"}).code == 0);
}
