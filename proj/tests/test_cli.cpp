#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "bgnlab/textio.hpp"
#include "cli.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = bgnlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("bgnlab_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary | std::ios::trunc) << text;
}

// params (5, 7) + binding key with x = 3, i.e. h = g^15.
void setup_57(const TempDir& dir, const std::string& backend = "transparent") {
  REQUIRE(cli({"params", "--p", "5", "--q", "7", "--backend", backend, "--seed", "7", "--out",
               dir / "ctx"}).code == 0);
  REQUIRE(cli({"keygen", "--mode", "binding", "--ctx", dir / "ctx", "--x", "3", "--ck-out",
               dir / "ck", "--secret-out", dir / "xk"}).code == 0);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("params") {
  TempDir dir;
  const Run t = cli({"params", "--bits-p", "3", "--bits-q", "3", "--backend", "transparent",
                     "--seed", "1", "--out", dir / "ctx"});
  CHECK(t.code == 0);
  const auto ctx = bgnlab::read_key_values(dir / "ctx");
  CHECK(ctx.get("p") == "5");
  CHECK(ctx.get("q") == "7");
  CHECK(ctx.get("n") == "35");
  CHECK(t.out.find("backend=transparent") != std::string::npos);

  const Run c = cli({"params", "--bits-p", "3", "--bits-q", "3", "--backend", "curve", "--seed",
                     "1", "--out", dir / "ctx_curve"});
  CHECK(c.code == 0);
  CHECK(c.out.find("field_prime=139\n") != std::string::npos);
  CHECK(c.out.find("cofactor=4\n") != std::string::npos);

  CHECK(cli({"params", "--bits-p", "3", "--bits-q", "3"}).code == 2);
  CHECK(cli({"params", "--bits-p", "1", "--bits-q", "3", "--out", dir / "x"}).code == 2);
  CHECK(cli({"params", "--bits-p", "65", "--bits-q", "3", "--out", dir / "x"}).code == 2);
  CHECK(cli({"params", "--p", "7", "--q", "5", "--out", dir / "x"}).code == 2);
  CHECK(cli({"bogus"}).code == 2);
  CHECK(cli({}).code == 2);
}

TEST_CASE("honest pipeline") {
  TempDir dir;
  setup_57(dir);
  CHECK(bgnlab::read_key_values(dir / "ck").get("h") == "G:15");
  const Run commit = cli({"commit", "--ck", dir / "ck", "--m", "1", "--r", "2", "--out",
                          dir / "c", "--opening-out", dir / "o"});
  CHECK(commit.code == 0);
  CHECK(commit.out == "c=G:31\n");
  CHECK(cli({"prove", "--ck", dir / "ck", "--opening", dir / "o", "--out", dir / "pi"}).code == 0);
  CHECK(slurp(dir / "pi") == "pi=G:27\n");
  const Run verify = cli({"verify", "--ck", dir / "ck", "--c", dir / "c", "--pi", dir / "pi"});
  CHECK(verify.code == 0);
  CHECK(verify.out == "accept\n");

  const Run ex = cli({"extract", "--ck", dir / "ck", "--secret", dir / "xk", "--c", dir / "c"});
  CHECK(ex.code == 0);
  CHECK(ex.out == "m=1\n");

  // Tampered proof: one digit changed.
  spill(dir / "pi_bad", "pi=G:26\n");
  CHECK(cli({"verify", "--ck", dir / "ck", "--c", dir / "c", "--pi", dir / "pi_bad"}).code == 1);
  // Malformed inputs.
  spill(dir / "pi_junk", "pi=G:zz\n");
  const Run junk = cli({"verify", "--ck", dir / "ck", "--c", dir / "c", "--pi", dir / "pi_junk"});
  CHECK(junk.code == 2);
  CHECK(junk.err.find("'pi'") != std::string::npos);
  spill(dir / "pi_missing", "c=G:1\n");
  CHECK(cli({"verify", "--ck", dir / "ck", "--c", dir / "c", "--pi", dir / "pi_missing"}).code == 2);
  CHECK(cli({"verify", "--ck", dir / "nope", "--c", dir / "c", "--pi", dir / "pi"}).code == 2);
  // wi_prove refuses non-bits.
  spill(dir / "o2", "m=2\nr=1\n");
  CHECK(cli({"prove", "--ck", dir / "ck", "--opening", dir / "o2", "--out", dir / "pi2"}).code == 2);
}

TEST_CASE("tampered proof on the curve backend") {
  TempDir dir;
  setup_57(dir, "curve");
  REQUIRE(cli({"commit", "--ck", dir / "ck", "--m", "0", "--r", "4", "--out", dir / "c",
               "--opening-out", dir / "o"}).code == 0);
  REQUIRE(cli({"prove", "--ck", dir / "ck", "--opening", dir / "o", "--out", dir / "pi"}).code == 0);
  CHECK(cli({"verify", "--ck", dir / "ck", "--c", dir / "c", "--pi", dir / "pi"}).code == 0);
  // Replace pi by g, a valid element that does not satisfy the equation.
  const std::string g = bgnlab::read_key_values(dir / "ck").get("g");
  spill(dir / "pi_bad", "pi=" + g + "\n");
  CHECK(cli({"verify", "--ck", dir / "ck", "--c", dir / "c", "--pi", dir / "pi_bad"}).code == 1);
  spill(dir / "pi_off", "pi=G:0,1\n");
  const Run off = cli({"verify", "--ck", dir / "ck", "--c", dir / "c", "--pi", dir / "pi_off"});
  CHECK(off.code == 2);
  CHECK(off.err.find("OffCurve") != std::string::npos);
}

TEST_CASE("forged pipeline and audit") {
  TempDir dir;
  setup_57(dir);
  const Run forge = cli({"forge", "--ck", dir / "ck", "--secret", dir / "xk", "--beta1", "2",
                         "--out", dir / "forgery"});
  CHECK(forge.code == 0);
  const auto rec = bgnlab::read_key_values(dir / "forgery");
  CHECK(rec.get("k_a") == "3");
  CHECK(rec.get("ell") == "4");
  CHECK(rec.get("alpha1") == "21");
  CHECK(rec.get("alpha2") == "12");
  CHECK(rec.get("beta2") == "4");
  CHECK(rec.get("c") == "G:26");
  CHECK(rec.get("pi") == "G:27");
  CHECK(forge.out.find("verification_passes=true") != std::string::npos);
  CHECK(forge.out.find("asserted_verdict=Invalid") != std::string::npos);

  CHECK(cli({"verify", "--ck", dir / "ck", "--c", dir / "forgery", "--pi", dir / "forgery"}).code ==
        0);
  const Run audit = cli({"audit", "--ck", dir / "ck", "--secret", dir / "xk", "--c", dir / "forgery"});
  CHECK(audit.code == 0);
  CHECK(audit.out.find("c_pow_q=G:7\n") != std::string::npos);
  CHECK(audit.out.find("c_over_g_pow_q=G:0\n") != std::string::npos);
  CHECK(audit.out.find("verdict=CommitsTo1\n") != std::string::npos);

  // --ctx supplies the factorization instead of the extraction key.
  CHECK(cli({"audit", "--ck", dir / "ck", "--ctx", dir / "ctx", "--c", dir / "forgery"}).out ==
        audit.out);
  CHECK(cli({"audit", "--ck", dir / "ck", "--c", dir / "forgery"}).code == 2);
}

TEST_CASE("trapdoor open") {
  TempDir dir;
  REQUIRE(cli({"params", "--p", "5", "--q", "7", "--out", dir / "ctx"}).code == 0);
  REQUIRE(cli({"keygen", "--mode", "hiding", "--ctx", dir / "ctx", "--x", "3", "--ck-out",
               dir / "ck", "--secret-out", dir / "tk"}).code == 0);
  CHECK(slurp(dir / "tk") == "kind=tk\nx=3\n");
  REQUIRE(cli({"commit", "--ck", dir / "ck", "--m", "0", "--r", "4", "--out", dir / "c",
               "--opening-out", dir / "o"}).code == 0);
  const Run open = cli({"open", "--ck", dir / "ck", "--secret", dir / "tk", "--c", dir / "c",
                        "--opening", dir / "o", "--m-new", "1", "--out", dir / "o2"});
  CHECK(open.code == 0);
  CHECK(slurp(dir / "o2") == "m=1\nr=27\n");
  spill(dir / "o_bad", "m=0\nr=5\n");
  CHECK(cli({"open", "--ck", dir / "ck", "--secret", dir / "tk", "--c", dir / "c", "--opening",
             dir / "o_bad", "--m-new", "1", "--out", dir / "o3"}).code == 1);
  // Extraction needs a binding key.
  CHECK(cli({"extract", "--ck", dir / "ck", "--secret", dir / "tk", "--c", dir / "c"}).code == 2);
}

TEST_CASE("census") {
  TempDir dir;
  REQUIRE(cli({"params", "--p", "3", "--q", "5", "--out", dir / "ctx"}).code == 0);
  REQUIRE(cli({"keygen", "--mode", "binding", "--ctx", dir / "ctx", "--x", "1", "--ck-out",
               dir / "ck", "--secret-out", dir / "xk"}).code == 0);
  const Run census = cli({"census", "--ck", dir / "ck", "--secret", dir / "xk", "--out",
                          dir / "table"});
  CHECK(census.code == 0);
  CHECK(census.out == slurp(dir / "table"));
  CHECK(census.out.find("c=2 accepting_pi_count=0 verdict=Invalid\n") != std::string::npos);
  CHECK(census.out.find("accepting_pairs=30\n") != std::string::npos);
  CHECK(census.out.find("accepting_c_Invalid=0\n") != std::string::npos);
}

TEST_CASE("seeded runs are byte-identical") {
  auto pipeline = [](const TempDir& dir, const std::string& backend) {
    REQUIRE(cli({"params", "--bits-p", "12", "--bits-q", "13", "--backend", backend, "--seed",
                 "99", "--out", dir / "ctx"}).code == 0);
    REQUIRE(cli({"keygen", "--mode", "binding", "--ctx", dir / "ctx", "--seed", "5", "--ck-out",
                 dir / "ck", "--secret-out", dir / "xk"}).code == 0);
    REQUIRE(cli({"commit", "--ck", dir / "ck", "--m", "1", "--seed", "6", "--out", dir / "c",
                 "--opening-out", dir / "o"}).code == 0);
    REQUIRE(cli({"prove", "--ck", dir / "ck", "--opening", dir / "o", "--out", dir / "pi"}).code ==
            0);
    REQUIRE(cli({"forge", "--ck", dir / "ck", "--secret", dir / "xk", "--seed", "8", "--out",
                 dir / "forgery"}).code == 0);
  };
  for (const std::string backend : {"transparent", "curve"}) {
    TempDir a, b;
    pipeline(a, backend);
    pipeline(b, backend);
    for (const std::string f : {"ctx", "ck", "xk", "c", "o", "pi", "forgery"}) {
      CHECK_MESSAGE(slurp(a / f) == slurp(b / f), backend, " ", f);
    }
    CHECK(cli({"verify", "--ck", a / "ck", "--c", a / "c", "--pi", a / "pi"}).code == 0);
    CHECK(cli({"verify", "--ck", a / "ck", "--c", a / "forgery", "--pi", a / "forgery"}).code == 0);
  }
}

TEST_CASE("selftest") {
  const Run st = cli({"selftest"});
  CHECK(st.code == 0);
  CHECK(st.out.find("FAIL") == std::string::npos);
}

}
