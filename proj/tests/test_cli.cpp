#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "peakalg/cli.hpp"
#include "peakalg/nsqf.hpp"
#include "peakalg/qsym.hpp"

using namespace peakalg;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  Run r;
  r.code = run_cli(args, r.out, r.err);
  return r;
}

}  // namespace

TEST_CASE("status codes") {
  CHECK(exit_code(Status::Ok) == 0);
  CHECK(exit_code(Status::Verified) == 0);
  CHECK(exit_code(Status::Violation) == 2);
  CHECK(exit_code(Status::Error) == 1);
  CHECK(std::string(status_name(Status::Verified)) == "verified");
}

TEST_CASE("expand command") {
  const Run r = cli({"expand", "--basis", "Q", "--index", "2,1", "--to",
                     "S", "--format", "json"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("status") == "ok");
  const Json& payload = j.at("payload");
  CHECK(payload.at("from").at("basis") == "Q");
  CHECK(payload.at("from").at("index") == Json::array({2, 1}));
  CHECK(payload.at("to") == "S");
  const Json& result = payload.at("result");
  CHECK(result.at("basis") == "S");
  REQUIRE(result.at("terms").size() == 2);
  CHECK(result.at("terms")[0].at("index") == Json::array({2, 1}));
  CHECK(result.at("terms")[0].at("coeff") == "1");
  CHECK(result.at("terms")[1].at("index") == Json::array({3}));
  CHECK(result.at("terms")[1].at("coeff") == "2");

  const Run back = cli({"expand", "--basis", "S", "--index", "3,2", "--to",
                        "Q", "--format", "json"});
  REQUIRE(back.code == 0);
  const Json expected =
      element_json(expand_s(NSymElement::monomial(Basis::S,
                                                  Composition({3, 2}))));
  CHECK(Json::parse(back.out).at("payload").at("result") == expected);

  const Run dual = cli({"expand", "--basis", "SStar", "--index", "3,2,1",
                        "--to", "M", "--format", "json"});
  REQUIRE(dual.code == 0);
  CHECK(Json::parse(dual.out).at("payload").at("result") ==
        element_json(qsqf_star_m(Composition({3, 2, 1}))));

  const Run pretty = cli({"expand", "--basis", "R", "--index", "2,1",
                          "--to", "H", "--format", "pretty"});
  CHECK(pretty.out == "1*H[2,1] - 1*H[3]\n");

  const Run csv = cli({"expand", "--basis", "Q", "--index", "2,1", "--to",
                       "S", "--format", "csv"});
  CHECK(csv.out == "basis,index,coeff\nS,\"2,1\",1\nS,3,2\n");

  const Run cross = cli({"expand", "--basis", "Q", "--index", "2", "--to",
                         "M", "--format", "json"});
  CHECK(cross.code == 1);
  CHECK(cross.err.find("error") != std::string::npos);

  const Run bad = cli({"expand", "--basis", "Q", "--index", "2,x", "--to",
                       "S"});
  CHECK(bad.code == 1);
}

TEST_CASE("matrix command") {
  const Run r = cli({"matrix", "--n", "4", "--pair", "Q,S", "--format",
                     "json"});
  REQUIRE(r.code == 0);
  const Json payload = Json::parse(r.out).at("payload");
  CHECK(payload.at("n") == 4);
  CHECK(payload.at("rows") == "Q");
  CHECK(payload.at("cols") == "S");
  const Json index = Json::array({Json::array({2, 2}), Json::array({3, 1}),
                                  Json::array({4})});
  CHECK(payload.at("index") == index);
  const Json entries =
      Json::array({Json::array({"1", "2", "2"}), Json::array({"0", "1", "2"}),
                   Json::array({"0", "0", "1"})});
  CHECK(payload.at("entries") == entries);

  /* the JSON form feeds back into the matrix loader */
  const TransitionMatrix m = matrix_from_json(payload);
  CHECK(m == transition_matrix(4, MatrixPair::QS));

  const Run csv = cli({"matrix", "--n", "3", "--pair", "Q,S", "--format",
                       "csv"});
  CHECK(csv.out ==
        "Q\\S,\"(2,1)\",\"(3)\"\n\"(2,1)\",1,2\n\"(3)\",0,1\n");

  const Run pretty = cli({"matrix", "--n", "3", "--pair", "Q,S", "--format",
                          "pretty"});
  CHECK(pretty.out.find("Q\\S") != std::string::npos);
  CHECK(pretty.out.find("(2,1)") != std::string::npos);

  CHECK(cli({"matrix", "--n", "0", "--pair", "Q,S"}).code == 1);
  CHECK(cli({"matrix", "--n", "3", "--pair", "QS"}).code == 1);
  CHECK(cli({"matrix", "--n", "3", "--pair", "Q,R"}).code == 1);
}

TEST_CASE("verify command") {
  const Run r = cli({"verify", "--suite", "relations", "--format",
                     "pretty"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("[PASS]") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.find("checks passed") != std::string::npos);

  const Run j = cli({"verify", "--suite", "tableaux", "--format", "json"});
  REQUIRE(j.code == 0);
  const Json parsed = Json::parse(j.out);
  CHECK(parsed.at("status") == "verified");
  CHECK(parsed.at("payload").at("failed") == 0);
  CHECK(parsed.at("payload").at("suite") == "tableaux");

  CHECK(cli({"verify", "--suite", "bogus"}).code == 1);
}

TEST_CASE("scan command") {
  const Run bad = cli({"scan-conjecture", "--max-n", "2"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("error") != std::string::npos);

  const Run r = cli({"scan-conjecture", "--max-n", "5", "--jobs", "2",
                     "--format", "json"});
  REQUIRE(r.code == 0);
  const Json parsed = Json::parse(r.out);
  CHECK(parsed.at("status") == "verified");
  const Json& rows = parsed.at("payload").at("rows");
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    CHECK(row.at("nonnegative") == true);
    CHECK(row.at("integral") == true);
    CHECK(row.at("unitriangular") == true);
    CHECK(row.at("witness") == "");
  }

  const Run pretty = cli({"scan-conjecture", "--max-n", "4", "--format",
                          "pretty"});
  CHECK(pretty.out.find("status: verified") != std::string::npos);
}

TEST_CASE("pct command") {
  const Run r = cli({"pct", "--shape", "3,4,2", "--content", "2,2,1,4",
                     "--format", "json"});
  REQUIRE(r.code == 0);
  const Json payload = Json::parse(r.out).at("payload");
  CHECK(payload.at("count") == 4);
  CHECK(payload.at("weight_sum") == "28");
  const Json& first = payload.at("tableaux")[0];
  CHECK(first.at("rows") ==
        Json::array({Json::array({1, 1, 2}), Json::array({2, 3, 4, 4}),
                     Json::array({4, 4})}));
  CHECK(first.at("p") == 3);
  CHECK(first.at("m") == 0);

  const Run csv = cli({"pct", "--shape", "2,1", "--content", "1,1,1",
                       "--format", "csv"});
  CHECK(csv.out == "shape,rows,p,m\n\"2,1\",1 2|3,1,0\n");
}

TEST_CASE("pieri command") {
  const Run r = cli({"pieri", "--alpha", "2,2", "--s", "1", "--format",
                     "json"});
  REQUIRE(r.code == 0);
  const Json payload = Json::parse(r.out).at("payload");
  CHECK(payload.at("alpha") == Json::array({2, 2}));
  CHECK(payload.at("s") == 1);
  CHECK(payload.at("peak") == false);
  const Json& terms = payload.at("result").at("terms");
  REQUIRE(terms.size() == 3);
  CHECK(terms[0].at("index") == Json::array({2, 2, 1}));
  CHECK(terms[0].at("coeff") == "1");
  CHECK(terms[1].at("index") == Json::array({2, 3}));
  CHECK(terms[2].at("index") == Json::array({3, 2}));

  const Run peak = cli({"pieri", "--alpha", "2,1", "--s", "1", "--peak",
                        "--format", "json"});
  const Json pterms = Json::parse(peak.out).at("payload").at("result")
                          .at("terms");
  REQUIRE(pterms.size() == 2);
  CHECK(pterms[0].at("index") == Json::array({2, 2}));
  CHECK(pterms[0].at("coeff") == "2");
}

TEST_CASE("covers command") {
  const Run r = cli({"covers", "--alpha", "2", "--format", "pretty"});
  CHECK(r.out == "(2) -> (3)  row 1\n(2) -> (2,1)  row 2\n");

  const Run csv = cli({"covers", "--alpha", "2,1", "--format", "csv"});
  CHECK(csv.out == "lower,upper,row\n\"2,1\",\"3,1\",1\n\"2,1\",\"2,2\",2\n");

  CHECK(cli({"covers", "--alpha", "1,2"}).code == 1);
}

TEST_CASE("deterministic output") {
  const Run a = cli({"matrix", "--n", "5", "--pair", "Pi,Sbar", "--format",
                     "json"});
  const Run b = cli({"matrix", "--n", "5", "--pair", "Pi,Sbar", "--format",
                     "json"});
  CHECK(a.out == b.out);

  const Run c = cli({"expand", "--basis", "Q", "--index", "4", "--to", "Pi",
                     "--format", "json"});
  const Run d = cli({"expand", "--basis", "Q", "--index", "4", "--to", "Pi",
                     "--format", "json"});
  CHECK(c.out == d.out);
}

TEST_CASE("help and usage errors") {
  Run help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("peakalg") != std::string::npos);

  CHECK(cli({"bogus"}).code == 1);
  CHECK(cli({}).code == 1);
  CHECK(cli({"expand", "--basis", "Q"}).code == 1);
}
