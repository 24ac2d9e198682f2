#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cliffrad/json_io.hpp"
#include "cliffrad/random.hpp"
#include "cliffrad/special.hpp"
#include "cliffrad/verify.hpp"

using namespace cliffrad;

TEST_CASE("multivector JSON round trip") {
  Rng rng(1);
  const Multivector a = random_multivector(4, rng);
  const json j = to_json(a);
  CHECK(j["m"] == 4);
  CHECK(max_abs_diff(multivector_from_json(j), a) == 0.0);
  CHECK(max_abs_diff(multivector_from_json(json::parse(j.dump())), a) == 0.0);

  const json e = json::parse(R"({"m":3,"terms":[{"blade":[1,2],"re":2.0,"im":-1.0}]})");
  const Multivector b = multivector_from_json(e);
  CHECK(b.coeff(Blade(0b011)) == cplx(2.0, -1.0));
  CHECK_THROWS_AS(multivector_from_json(json::parse(R"({"m":3,"terms":[{"blade":[4]}]})")), Error);
  CHECK_THROWS_AS(multivector_from_json(json::parse(R"({"terms":[]})")), Error);
}

TEST_CASE("polynomial JSON round trip") {
  Rng rng(2);
  const MVPolynomial p = random_polynomial(3, 3, rng);
  CHECK(max_abs_diff(polynomial_from_json(json::parse(to_json(p).dump())), p) == 0.0);
  const MVPolynomial z = zonal_poly(3, 2);
  const json jz = to_json(z);
  CHECK(jz["nvars"] == 6);
  const MVPolynomial back = polynomial_from_json(jz);
  CHECK(back.nvars() == 6);
  CHECK(max_abs_diff(back, z) == 0.0);
  CHECK_THROWS_AS(load_json_argument("{not json"), Error);
  CHECK_THROWS_AS(load_json_argument("/nonexistent/file.json"), Error);
}

TEST_CASE("frame JSON and file arguments") {
  Rng rng(3);
  const NullFrame f = random_frame(5, rng);
  const std::string path = "frame_roundtrip.json";
  {
    std::ofstream out(path);
    out << to_json(f).dump();
  }
  const NullFrame g = frame_from_json(load_json_argument(path));
  std::remove(path.c_str());
  CHECK(g.t() == f.t());
  CHECK(g.s() == f.s());
  CHECK_THROWS_AS(frame_from_json(json::parse(R"({"t":[1,0,0],"s":[1,0,0]})")), Error);
}

TEST_CASE("metadata block") {
  const json j = to_json(ResultMetadata{"derived", 1000, 7, 0.25});
  CHECK(j["mode"] == "derived");
  CHECK(j["samples"] == 1000);
  CHECK(j["seed"] == 7);
  CHECK(j["stderr-max"] == 0.25);
}

TEST_CASE("verify configuration limits") {
  VerifyConfig c;
  CHECK_NOTHROW(validate(c));
  c.m = 2;
  CHECK_THROWS_AS(validate(c), UsageError);
  c.m = 7;
  CHECK_THROWS_AS(validate(c), UsageError);
  c.m = 3;
  c.kmax = 99;
  CHECK_THROWS_AS(validate(c), UsageError);
  c.kmax = 2;
  c.spec.samples = 1;
  CHECK_THROWS_AS(validate(c), UsageError);
}

TEST_CASE("verify reports are deterministic and complete") {
  VerifyConfig c;
  c.m = 3;
  c.kmax = 2;
  c.spec = QuadratureSpec{20000, 9, true, 0};
  const VerifyReport a = run_verify(c);
  const VerifyReport b = run_verify(c);
  CHECK(a.to_jsonl() == b.to_jsonl());
  CHECK_FALSE(a.failed());
  CHECK(a.count(CheckStatus::discrepancy) == 3);
  CHECK(a.checks.size() == 23);
  for (std::size_t i = 1; i < a.checks.size(); ++i) CHECK(a.checks[i - 1].id < a.checks[i].id);
  for (const auto& r : a.checks) {
    CHECK_FALSE(r.anchor.empty());
    CHECK_FALSE(r.provenance.empty());
    if (r.status == CheckStatus::discrepancy) {
      CHECK_FALSE(r.oracle_value.is_null());
      CHECK_FALSE(r.printed_value.is_null());
    }
  }
  const json last = json::parse(a.to_jsonl().substr(a.to_jsonl().rfind('\n', a.to_jsonl().size() - 2) + 1));
  CHECK(last["status"] == "pass");
  CHECK(last["discrepancies"] == 3);
}
