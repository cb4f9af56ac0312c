#include <gtest/gtest.h>

#include "dendri/dendri.hpp"
#include "oracles.hpp"

using namespace dendri;

namespace {

std::string data(const char* name) { return std::string(DENDRI_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Rational, JsonForms) {
  EXPECT_EQ(rational_from_json(json("3/6")), Rational(1, 2));
  EXPECT_EQ(rational_from_json(json(-4)), -4);
  EXPECT_EQ(rational_to_json(Rational(-3, 2)), json("-3/2"));
  EXPECT_THROW(rational_from_json(json(0.5)), Error);
  EXPECT_THROW(rational_from_json(json("1/0")), Error);
  EXPECT_THROW(rational_from_json(json("x")), Error);
}

TEST(AlgebraJson, RoundTrip) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Signature sig{1 + static_cast<int>(seed % 2), seed % 3 == 0 ? Context::Omega : (seed % 3 == 1 ? Context::Omega2 : Context::Omega3)};
    const FDAlgebra a = random_algebra(3, sig, seed);
    EXPECT_EQ(algebra_from_json(to_json(a)), a);
    EXPECT_EQ(algebra_from_json(parse_json_text(to_json(a).dump(), "x")), a);
  }
}

TEST(AlgebraJson, DataFilesMatchFixtures) {
  EXPECT_EQ(load_algebra(data("truncated_x5.json")), oracle::truncated_poly(5));
  EXPECT_EQ(load_algebra(data("q2.json")), oracle::componentwise(2));
  EXPECT_EQ(load_algebra(data("upper_triangular.json")), oracle::upper_triangular());
  EXPECT_EQ(load_algebra(data("tensor_cube_x2.json")), triassociative_tensor_cube(oracle::truncated_poly(2)));
  EXPECT_EQ(load_operator(data("integration_x5.json")).matrix(), oracle::integration(5).matrix());
  EXPECT_EQ(load_operator(data("ad_e12.json")).matrix(), oracle::ad_e12().matrix());
  EXPECT_EQ(load_operator(data("projection_q2.json")).matrix(), oracle::diagonal({1, 0}).matrix());
}

TEST(AlgebraJson, Errors) {
  auto parse = [](const char* text) { return algebra_from_json(parse_json_text(text, "t")); };
  EXPECT_THROW(parse("{"), Error);
  EXPECT_THROW(parse(R"({"context":"omega","nops":1,"ops":[]})"), Error);
  EXPECT_THROW(parse(R"({"dim":2,"context":"omega4","nops":1,"ops":[]})"), Error);
  EXPECT_THROW(parse(R"({"dim":2,"context":"omega","nops":1,"ops":[{"family":"left","index":1,"table":[]}]})"),
               SignatureError);
  EXPECT_THROW(parse(R"({"dim":2,"context":"omega","nops":1,"ops":[{"family":"base","index":1,"table":[[1,3,1,"1"]]}]})"),
               DimensionError);
  EXPECT_THROW(
      parse(R"({"dim":2,"context":"omega","nops":1,"ops":[{"family":"base","index":1,"table":[[1,1,1,"1"],[1,1,1,"2"]]}]})"),
      Error);
  EXPECT_THROW(parse(R"({"dim":2,"context":"omega","nops":1,"ops":[{"family":"base","index":1,"table":[[1,1,"1"]]}]})"),
               Error);
  EXPECT_THROW(load_algebra("/nonexistent.json"), Error);
}

TEST(OperatorJson, RoundTripAndErrors) {
  const LinearOperator r = oracle::integration(4, Rational(1, 3));
  EXPECT_EQ(operator_from_json(to_json(r)).matrix(), r.matrix());
  EXPECT_THROW(operator_from_json(parse_json_text(R"({"dim":2,"matrix":[["1","0"]]})", "t")), DimensionError);
  EXPECT_THROW(operator_from_json(parse_json_text(R"({"dim":2,"matrix":[["1","0"],["0"]]})", "t")), DimensionError);
}

TEST(BarJson, HasProjection) {
  const BarQuotient bq = bar_quotient(triassociative_tensor_cube(oracle::truncated_poly(2)), Mode::Tri);
  const json j = to_json(bq);
  EXPECT_EQ(j.at("bar_dim").get<int>(), bq.bar_dim);
  EXPECT_EQ(j.at("projection").size(), static_cast<std::size_t>(bq.bar_dim));
  EXPECT_EQ(algebra_from_json(j), bq.hat_algebra);
}

TEST(IdentityFile, RoundTrip) {
  const GeneratedIdentitySet set = generate_variety_identities(builtin("poisson"), Mode::Di);
  const std::string text = render_identity_file(set, {"tool: test"});
  EXPECT_EQ(text.rfind("# tool: test\n# nops: 2\n# context: omega2\n", 0), 0u);
  const IdentityFile f = parse_identity_file(text);
  EXPECT_EQ(f.signature, set.signature);
  const auto named = set.named();
  ASSERT_EQ(f.identities.size(), named.size());
  for (std::size_t k = 0; k < named.size(); ++k) {
    EXPECT_EQ(f.identities[k].id, named[k].id);
    EXPECT_EQ(f.identities[k].poly, named[k].poly);
  }
  EXPECT_EQ(render_identity_file(f.signature, f.identities, {"tool: test"}), text);
}

TEST(IdentityFile, DefaultsAndErrors) {
  const IdentityFile f = parse_identity_file("# nops: 1\n(x1 * x2) - (x2 * x1)\n");
  EXPECT_EQ(f.signature, omega(1));
  EXPECT_EQ(f.identities.at(0).id, "1");
  EXPECT_THROW(parse_identity_file("(x1 * x2)\n"), Error);
  EXPECT_THROW(parse_identity_file("# nops: 1\n# context: omega9\n(x1 * x2)\n"), Error);
  try {
    parse_identity_file("# nops: 1\n# context: omega2\n\n(x1 * x2)\n");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}
