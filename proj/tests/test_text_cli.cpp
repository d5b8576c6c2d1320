#include <doctest.h>

#include <sstream>

#include "schur_ohno/cli.hpp"
#include "schur_ohno/error.hpp"
#include "schur_ohno/text.hpp"

using namespace schur_ohno;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "schur_ohno");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// First number after `key` in key/value output.
double field(const std::string& text, const std::string& key) {
  std::istringstream is(text);
  std::string k, v;
  while (is >> k >> v) {
    if (k == key) return std::stod(v);
  }
  FAIL("missing " << key);
  return 0.0;
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("parsing") {
  CHECK(parse_partition("2,1") == Partition({2, 1}));
  CHECK(parse_partition("") == Partition(std::vector<int>{}));
  CHECK(parse_partition("3,0") == Partition({3}));
  CHECK_THROWS_AS(parse_partition("2,x"), InvalidArgument);
  CHECK(parse_ez("1,1,2,3") == EzIndex({1, 1, 2, 3}));
  CHECK(parse_rows("1 2 / 2") == std::vector<std::vector<int>>{{1, 2}, {2}});
  CHECK(parse_rows(" / 1  2") == std::vector<std::vector<int>>{{}, {1, 2}});
  CHECK_THROWS_AS(parse_index_spec("2,1", "", "1 2"), InvalidArgument);
  CHECK_THROWS_AS(parse_index_spec("1,2", "", "1 / 2"), InvalidArgument);

  CHECK(parse_complex("0.25") == std::complex<double>(0.25, 0));
  CHECK(parse_complex("0.25+0.5i") == std::complex<double>(0.25, 0.5));
  CHECK(parse_complex("-1e-3-2i") == std::complex<double>(-1e-3, -2));
  CHECK(parse_complex("2.5i") == std::complex<double>(0, 2.5));
  CHECK(parse_complex("-i") == std::complex<double>(0, -1));
  CHECK_THROWS_AS(parse_complex("1+"), InvalidArgument);
  CHECK_THROWS_AS(parse_complex("abc"), InvalidArgument);
}

TEST_CASE("printed indices and numbers re-parse") {
  for (const auto& [lam, mu, rows] : std::vector<std::tuple<std::string, std::string, std::string>>{
           {"2,1", "", "1 2 / 2"}, {"2,2", "1", "3 / 1 2"}, {"3,1,1", "1", "2 2 / 1 / 2"}}) {
    const auto k = parse_index_spec(lam, mu, rows);
    CHECK(parse_index_spec(format_partition(k.shape().outer()), format_partition(k.shape().inner()), format_rows(k)) ==
          k);
  }
  CHECK(parse_ez(format_ez(EzIndex({1, 2, 4}))) == EzIndex({1, 2, 4}));
  for (const std::complex<double> z : {std::complex<double>(0.1, -0.2), {1e-20, 3}, {-2.5, 0}, {0, -1e-7}}) {
    const auto back = parse_complex(format_complex(z));
    CHECK(std::abs(back - z) <= 1e-14 * std::abs(z));
  }
  CHECK(format_number(1.0 / 3.0) == "0.333333333333333");
}

TEST_CASE("cli zeta") {
  const auto r = run({"zeta", "--lambda", "1,1", "--k", "1 / 2", "--max-entry", "10000"});
  REQUIRE(r.code == 0);
  const auto v = field(r.out, "value");
  const auto e = field(r.out, "err_est");
  CHECK(std::abs(v - 1.2020569031595942) <= e);
  CHECK(field(r.out, "max_entry") == 10000);
  CHECK(run({"zeta", "--lambda", "2,1", "--k", "1 1 / 2"}).code == 3);
  CHECK(run({"zeta", "--lambda", "2,1", "--k", "1 x / 2"}).code == 2);
  CHECK(run({"zeta", "--lambda", "2,1", "--k", "1 / 2"}).code == 2);
  CHECK(run({"zeta"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"zeta", "--help"}).code == 0);
}

TEST_CASE("cli osum") {
  const auto r = run({"osum", "--lambda", "1,1", "--k", "1 / 2", "--ell", "1", "--max-entry", "10000"});
  REQUIRE(r.code == 0);
  CHECK(std::abs(field(r.out, "value") - 1.0823232337111382) <= field(r.out, "err_est"));
  const auto z = run({"zeta", "--lambda", "2,1", "--k", "1 2 / 2", "--max-entry", "50"});
  const auto o = run({"osum", "--lambda", "2,1", "--k", "1 2 / 2", "--max-entry", "50", "--ell", "0"});
  CHECK(z.out == o.out);
  CHECK(run({"osum", "--lambda", "1", "--k", "2", "--ell", "-1"}).code == 2);
}

TEST_CASE("cli dual") {
  CHECK(run({"dual", "--index", "1,2"}).out == "3\n");
  CHECK(run({"dual", "--index", "1,1,2,3"}).out == "1,2,4\n");
  CHECK(run({"dual", "--index", "2,1"}).code == 3);
  CHECK(run({"dual", "--lambda", "2,2", "--k", "2 2 / 2 2"}).code == 4);
  CHECK(run({"dual", "--lambda", "1,1", "--k", "1 / 2"}).out == "--lambda 1 --k \"3\"\n");
}

TEST_CASE("cli ohno") {
  const std::vector<std::string> base{"--lambda", "1,1", "--k", "1 / 2", "--max-entry", "3000"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> a{"ohno"};
    a.insert(a.end(), base.begin(), base.end());
    a.insert(a.end(), extra.begin(), extra.end());
    return run(a);
  };
  std::vector<std::string> zargs{"zeta"};
  zargs.insert(zargs.end(), base.begin(), base.end());
  std::vector<std::string> oargs{"osum", "--ell", "1"};
  oargs.insert(oargs.end(), base.begin(), base.end());
  CHECK(std::abs(field(with({"--s", "0"}).out, "value") - field(run(zargs).out, "value")) < 1e-10);
  CHECK(std::abs(field(with({"--s", "1"}).out, "value") - field(run(oargs).out, "value")) < 1e-10);

  const auto q = run({"ohno", "--lambda", "1,1", "--k", "1 / 2", "--max-entry", "60", "--s", "-0.5", "--method",
                      "quadrature"});
  const auto s = run({"ohno", "--lambda", "1,1", "--k", "1 / 2", "--max-entry", "60", "--s", "-0.5"});
  REQUIRE(q.code == 0);
  CHECK(std::abs(field(q.out, "value") - field(s.out, "value")) < 1e-8);

  CHECK(with({"--s", "-1.5"}).code == 2);
  CHECK(with({"--s", "0.5", "--method", "quadrature"}).code == 2);
  CHECK(with({"--s", "bad"}).code == 2);
  CHECK(with({"--method", "other"}).code == 2);
}

TEST_CASE("cli verify-duality") {
  const auto r = run({"verify-duality", "--index", "1,2", "--point", "-0.5", "--point", "0.25+0.5i", "--max-entry",
                      "2000"});
  CHECK(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(r.out.substr(0, r.out.find('\n')) == "re_s,im_s,re_lhs,im_lhs,re_rhs,im_rhs,abs_diff,err_lhs,err_rhs,pass");
  CHECK(rows[1][9] == "1");
  CHECK(rows[2][1] == "0.5");

  const auto self = run({"verify-duality", "--index", "2", "--re-from", "-0.5", "--re-to", "1", "--re-step", "0.5"});
  CHECK(self.code == 0);
  const auto srows = csv(self.out);
  CHECK(srows.size() == 5);
  for (std::size_t i = 1; i < srows.size(); ++i) CHECK(std::stod(srows[i][6]) == 0.0);

  CHECK(run({"verify-duality", "--lambda", "2,1", "--k", "3 / 2", "--mu", "1", "--point", "0"}).code == 4);
  CHECK(run({"verify-duality", "--lambda", "2,1", "--k", "3 / 2", "--mu", "1", "--dual-lambda", "2,1,1", "--dual-mu",
             "1", "--dual-k", "2 / 1 / 2", "--point", "0", "--max-entry", "200"})
            .code == 0);
  // A wrong pairing is reported, not hidden.
  CHECK(run({"verify-duality", "--index", "1,2", "--dual", "2", "--point", "0", "--max-entry", "2000"}).code == 1);
  CHECK(run({"verify-duality", "--index", "1,2"}).code == 2);
}

TEST_CASE("cli sweep") {
  const auto r = run({"sweep", "--index", "2", "--re-from", "-0.9", "--re-to", "3", "--re-step", "0.1",
                      "--max-entry", "500"});
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  CHECK(rows[0] == std::vector<std::string>{"re_s", "im_s", "re_I", "im_I", "err_est", "max_entry"});
  CHECK(rows.size() == 41);
  const auto z = run({"zeta", "--index", "2", "--max-entry", "500"});
  bool found = false;
  for (const auto& row : rows) {
    if (row[0] == "0" || row[0] == "-2.22044604925031e-16") {
      found = true;
      CHECK(std::abs(std::stod(row[2]) - field(z.out, "value")) < 1e-12);
    }
  }
  CHECK(found);
  CHECK(run({"sweep", "--index", "2", "--re-from", "0", "--re-to", "1", "--re-step", "0"}).code == 2);
  CHECK(run({"sweep", "--index", "2", "--re-from", "-1", "--re-to", "1", "--re-step", "0.5"}).code == 2);
}

TEST_CASE("cli writes to --out and reads the environment") {
  const std::string path = "cli_out_test.txt";
  const auto r = run({"dual", "--index", "1,2", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  setenv("SCHUR_OHNO_MAX_ENTRY", "7", 1);
  const auto z = run({"zeta", "--index", "2"});
  unsetenv("SCHUR_OHNO_MAX_ENTRY");
  CHECK(field(z.out, "max_entry") == 7);
  std::remove(path.c_str());
}
