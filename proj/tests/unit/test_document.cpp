#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hompre/document.hpp"
#include "hompre/errors.hpp"
#include "hompre/fixtures.hpp"

using namespace hompre;
using namespace hompre::fixtures;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::filesystem::path> data_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(HOMPRE_TEST_DATA))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::string expect_parse_error(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return {};
}

}  // namespace

TEST(Document, ShippedFilesRoundTripByteExact) {
  const auto files = data_files();
  ASSERT_GE(files.size(), 12u);
  std::set<Kind> kinds;
  for (const auto& f : files) {
    const std::string text = slurp(f);
    const Document d = parse_document(text);
    kinds.insert(d.kind());
    EXPECT_EQ(serialize(d), text) << f;
  }
  EXPECT_EQ(kinds.size(), 12u);
}

TEST(Document, F2Entry) {
  const Document d = parse_document(slurp(std::filesystem::path(HOMPRE_TEST_DATA) / "f2.json"));
  const auto& a = d.as<HomPreLieAlgebra>();
  EXPECT_EQ(a, F2());
  EXPECT_NE(serialize(d).find(R"({"i": 1, "j": 1, "k": 2, "c": "1"})"), std::string::npos);
}

TEST(Document, ValueRoundTrip) {
  for (const Document& d : {Document(F1()), Document(D1()), Document(B_H()), Document(LinearMap::diagonal({Scalar(1, 3), -2})),
                            Document(coadjoint_pre_lie_rep(F2c())), Document(adjoint_rep(sub_adjacent(F1())))}) {
    const std::string once = serialize(d);
    const std::string twice = serialize(parse_document(once));
    EXPECT_EQ(once, twice);
  }
}

TEST(Document, FractionsAndSigns) {
  const Document d = LinearMap::diagonal({Scalar(-1, 3), 2});
  EXPECT_NE(serialize(d).find(R"(["-1/3", "0"])"), std::string::npos);
  EXPECT_EQ(parse_document(serialize(d)).as<LinearMap>(), LinearMap::diagonal({Scalar(-1, 3), 2}));
}

TEST(Document, NotLowestTerms) {
  const auto msg = expect_parse_error(
      R"({"kind": "hom_pre_lie", "dim": 2, "product": [{"i": 1, "j": 1, "k": 2, "c": "2/4"}], "twist": [["1","0"],["0","1"]]})");
  EXPECT_NE(msg.find("not in lowest terms"), std::string::npos);
}

TEST(Document, TruncatedHasPosition) {
  const std::string text = slurp(std::filesystem::path(HOMPRE_TEST_DATA) / "f2.json");
  try {
    parse_document(text.substr(0, text.size() / 2));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GT(e.line(), 1u);
    EXPECT_GT(e.column(), 0u);
  }
}

TEST(Document, StructuralErrors) {
  EXPECT_NE(expect_parse_error(R"({"kind": "linear_map", "rows": 1, "cols": 1, "matrix": [["1"]], "extra": 1})")
                .find("unknown field"),
            std::string::npos);
  EXPECT_NE(expect_parse_error(R"({"kind": "linear_map", "rows": 1, "rows": 1, "cols": 1, "matrix": [["1"]]})")
                .find("duplicate key"),
            std::string::npos);
  EXPECT_NE(expect_parse_error(R"({"kind": "linear_map", "rows": 1, "cols": 2, "matrix": [["1"]]})").find("/matrix/0"),
            std::string::npos);
  EXPECT_NE(expect_parse_error(R"({"kind": "sheaf"})").find("unknown kind"), std::string::npos);
  expect_parse_error(R"({"kind": "linear_map", "rows": 1, "cols": 1, "matrix": [[1]]})");
  expect_parse_error(R"({"kind": "tensor2", "dim_left": 1, "dim_right": 1, "entries": [{"i": 0, "j": 1, "c": "1"}]})");
  expect_parse_error(
      R"({"kind": "tensor2", "dim_left": 1, "dim_right": 1, "entries": [{"i": 1, "j": 1, "c": "1"}, {"i": 1, "j": 1, "c": "2"}]})");
  expect_parse_error(R"({"kind": "linear_map", "rows": -1, "cols": 1, "matrix": []})");
  expect_parse_error("[1, 2]");
}

TEST(Document, WrongKindAccess) {
  const Document d = B_H();
  EXPECT_THROW(d.as<HomPreLieAlgebra>(), UnsupportedKind);
}

TEST(Document, Lists) {
  const std::vector<Document> docs{F0(), F2()};
  const std::string text = serialize_documents(docs);
  const auto back = parse_documents(text);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(serialize_documents(back), text);
  EXPECT_EQ(serialize_documents({}), "[]\n");
}

TEST(Document, ReportBody) {
  const auto body = serialize_report(validate_hom_pre_lie(FN()));
  EXPECT_NE(body.find(R"("valid": false)"), std::string::npos);
  EXPECT_NE(body.find(R"("witness": [1, 2, 2])"), std::string::npos);
}
