#include "hypertoric/io.hpp"

#include "support/random_instances.hpp"

#include <gtest/gtest.h>

namespace hypertoric {
namespace {

TEST(PlainText, ParsesRowsAndSkipsBlankLines) {
  const IntMatrix m = parse_plain_matrix("\n1 0 -2 -2\n\n  0 1\t-3 -3  \n\n");
  EXPECT_EQ(m, (IntMatrix{{1, 0, -2, -2}, {0, 1, -3, -3}}));
}

TEST(PlainText, AcceptsLeadingPlus) {
  EXPECT_EQ(parse_plain_matrix("+3 -4\n"), (IntMatrix{{3, -4}}));
}

TEST(PlainText, RejectsRaggedRows) {
  try {
    parse_plain_matrix("1 2\n3\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(PlainText, RejectsNonIntegers) {
  EXPECT_THROW(parse_plain_matrix("1 2.5\n"), ParseError);
  EXPECT_THROW(parse_plain_matrix("1 x\n"), ParseError);
  EXPECT_THROW(parse_plain_matrix("1 -\n"), ParseError);
}

TEST(PlainText, BigIntegers) {
  const std::string big = "-123456789012345678901234567890123456789";
  const IntMatrix m = parse_plain_matrix(big + " 1\n");
  EXPECT_EQ(m(0, 0).str(), big);
  EXPECT_EQ(render_plain_matrix(m), big + " 1\n");
}

TEST(Json, ParsesMatrix) {
  const auto doc = parse_matrix_document(
      R"({"rows": 2, "cols": 4, "entries": [[1,0,-2,-2],[0,1,-3,-3]]})");
  EXPECT_EQ(doc.format, MatrixFormat::Json);
  EXPECT_EQ(doc.matrix, (IntMatrix{{1, 0, -2, -2}, {0, 1, -3, -3}}));
}

TEST(Json, BigIntegersStayExact) {
  const std::string big = "98765432109876543210987654321";
  const auto doc = parse_matrix_document(R"({"rows":1,"cols":2,"entries":[[)" + big +
                                         R"(, "-)" + big + R"("]]})");
  EXPECT_EQ(doc.matrix(0, 0).str(), big);
  EXPECT_EQ(doc.matrix(0, 1).str(), "-" + big);
  EXPECT_NE(render_matrix_document(doc).find(big), std::string::npos);
}

TEST(Json, EmptyDimensions) {
  const MatrixDocument doc{IntMatrix(3, 0), "-", MatrixFormat::Json};
  EXPECT_EQ(parse_matrix_document(render_matrix_document(doc)), doc);
}

TEST(Json, RejectsMalformedDocuments) {
  EXPECT_THROW(parse_matrix_document(R"({"rows": 1, "cols": 2})"), ParseError);
  EXPECT_THROW(parse_matrix_document(R"({"rows": 1, "cols": 2, "entries": [[1]]})"), ParseError);
  EXPECT_THROW(parse_matrix_document(R"({"rows": 2, "cols": 1, "entries": [[1]]})"), ParseError);
  EXPECT_THROW(parse_matrix_document(R"({"rows": 1, "cols": 1, "entries": [[1.5]]})"), ParseError);
  EXPECT_THROW(parse_matrix_document(R"({"rows": 1, "cols": 1, "entries": [[true]]})"), ParseError);
  EXPECT_THROW(parse_matrix_document(R"({"rows": -1, "cols": 1, "entries": []})"), ParseError);
  EXPECT_THROW(parse_matrix_document(R"({"rows": 1, )"), ParseError);
}

TEST(Json, WriterKeepsInsertionOrderAndEscapes) {
  const Json j = Json::object()
                     .set("z", Json::number(std::uint64_t{1}))
                     .set("a", Json::string("quote\" backslash\\ newline\n"))
                     .set("list", Json::numbers(IntVector{1, -2}))
                     .set("flag", Json::boolean(false))
                     .set("none", Json::null());
  const std::string text = j.dump();
  EXPECT_LT(text.find("\"z\""), text.find("\"a\""));
  EXPECT_NE(text.find(R"("quote\" backslash\\ newline\n")"), std::string::npos);
  EXPECT_NE(text.find("[1, -2]"), std::string::npos);
  const Json back = Json::parse(text);
  EXPECT_EQ(back.dump(), text);
  EXPECT_EQ(back.find("a")->as_string(), "quote\" backslash\\ newline\n");
}

TEST(RoundTrip, RandomMatricesBothFormats) {
  testing::Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m = testing::random_matrix(rng, testing::uniform(rng, 1, 6),
                                         testing::uniform(rng, 1, 6), -50, 50);
    m(0, 0) *= Integer("1000000000000000000000");
    for (auto format : {MatrixFormat::PlainText, MatrixFormat::Json}) {
      const MatrixDocument doc{m, "-", format};
      ASSERT_EQ(parse_matrix_document(render_matrix_document(doc)), doc);
    }
  }
}

}  // namespace
}  // namespace hypertoric
