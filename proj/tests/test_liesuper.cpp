#include <doctest.h>

#include "walg/algebra_io.hpp"
#include "walg/dual_bases.hpp"

using namespace walg;

TEST_CASE("scalar arithmetic and parsing") {
  Scalar a = Scalar::parse("1/2k + 3");
  Scalar b = Scalar::parse("-1/2*k^1 + i");
  CHECK((a + b) == Scalar::parse("3 + i"));
  CHECK((Scalar::i() * Scalar::i()) == Scalar(-1));
  CHECK(Scalar::parse("(1+i)").inverse() == Scalar::parse("1/2 - 1/2 i"));
  CHECK(Scalar::parse("k^3").str() == "k³");
  CHECK(Scalar::parse("-1/2 k^3").str() == "-(1/2)k³");
  CHECK(Scalar::parse(Scalar::parse("2k c - 1/3 i + k^2").serialize()) == Scalar::parse("2k c - 1/3 i + k^2"));
  CHECK_THROWS_AS(Scalar::k().inverse(), KDivisionError);
  Scalar kv = Scalar(2);
  CHECK(Scalar::parse("k^2 + c").substitute(&kv, nullptr) == Scalar::parse("4 + c"));
}

TEST_CASE("catalog algebras load and validate") {
  for (auto& e : catalog()) {
    CAPTURE(e.name);
    LieSuperalgebra g = load_algebra(e.name);
    CHECK(validate_algebra(g).empty());
    LieSuperalgebra back = parse_algebra(serialize_algebra(g));
    CHECK(back.brackets == g.brackets);
    CHECK(back.form == g.form);
  }
}

TEST_CASE("malformed algebra names the field") {
  std::string doc = R"({"name":"x","basis":[{"label":"a","parity":0}],"brackets":[{"i":0,"j":0,"coeffs":[[0,"1/0x"]]}],"form":[]})";
  try {
    parse_algebra(doc, "t.json");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("brackets[0].coeffs[0][1]") != std::string::npos);
  }
}

TEST_CASE("sl2 chain bases") {
  LieSuperalgebra g = load_algebra("sl2");
  DualBases b = build_dual_bases(g, DualBases::Even);
  REQUIRE(b.nchains() == 1);
  CHECK(verify_dual_bases(g, b).empty());
  // q^0_n = (E, -H, -2F), q_0^n = (F, -H/2, -E/2)
  CHECK(b.up[0][1] == Element{Scalar(), Scalar(-1), Scalar()});
  CHECK(b.up[0][2] == Element{Scalar(), Scalar(), Scalar(-2)});
  CHECK(b.low[0][1] == Element{Scalar(), Scalar(Rational(-1, 2)), Scalar()});
  CHECK(b.low[0][2] == Element{Scalar(Rational(-1, 2)), Scalar(), Scalar()});
}

TEST_CASE("osp(1|2) chain bases") {
  LieSuperalgebra g = load_algebra("osp12");
  DualBases b = build_dual_bases(g, DualBases::Odd);
  REQUIRE(b.nchains() == 1);
  CHECK(verify_dual_bases(g, b).empty());
  std::vector<Scalar> want{Scalar(1), Scalar(Rational(-1, 2)), Scalar(Rational(1, 2)), Scalar(Rational(-1, 2)),
                           Scalar(Rational(1, 4))};
  CHECK(b.norm[0] == want);
}

TEST_CASE("chain normalisations agree with the closed form") {
  for (auto& e : catalog()) {
    LieSuperalgebra g = load_algebra(e.name);
    for (auto kind : {DualBases::Even, DualBases::Odd}) {
      if (kind == DualBases::Odd && !g.osp) continue;
      CAPTURE(e.name);
      CAPTURE(kind);
      DualBases b = build_dual_bases(g, kind);
      CHECK(verify_dual_bases(g, b).empty());
      for (int j = 0; j < b.nchains(); ++j)
        for (int n = 0; n < b.length(j); ++n) {
          CAPTURE(j);
          CAPTURE(n);
          CHECK(b.norm[j][n] == closed_norm(b, j, n));
        }
    }
  }
}

TEST_CASE("chain tensor identities") {
  for (auto& e : catalog()) {
    LieSuperalgebra g = load_algebra(e.name);
    CAPTURE(e.name);
    CHECK(check_tensor_identity(g, build_dual_bases(g, DualBases::Even)).empty());
    if (g.osp) CHECK(check_tensor_identity(g, build_dual_bases(g, DualBases::Odd)).empty());
  }
}
