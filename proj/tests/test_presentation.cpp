#include <gtest/gtest.h>

#include <filesystem>

#include "tfg/expr.hpp"
#include "tfg/replay.hpp"

using namespace tfg;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_presentation(text, "doc");
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

const char* kMinimal = R"({"version": 1, "space": {"kind": "full_shift", "alphabet": ["0", "1"]},
  "bisections": [{"name": "s", "dom": ["0", "1"], "ran": ["1", "0"]}, {"name": "t", "dom": ["00"], "ran": ["1"]}],
  "basic": ["s"]})";

}  // namespace

TEST(Presentation, BundledFilesLoad) {
  std::size_t n = 0;
  for (const auto& e : std::filesystem::directory_iterator(data_dir()))
    if (e.path().extension() == ".json") {
      EXPECT_NO_THROW(load_presentation(e.path().string())) << e.path();
      ++n;
    }
  EXPECT_GE(n, 8u);
}

TEST(Presentation, StoredChecksHold) {
  for (const auto* name : {"full_shift_2", "odometer", "golden_mean", "bratteli"}) {
    const auto p = load_presentation(data_dir() + "/" + name + ".json");
    for (const auto& r : run_stored_checks(p)) EXPECT_EQ(r.status, Status::pass) << r.name << " " << r.detail;
  }
}

TEST(Presentation, Minimal) {
  const auto p = parse_presentation(kMinimal, "doc");
  EXPECT_EQ(p.bisections.size(), 2u);
  EXPECT_EQ(p.basic.size(), 1u);
  EXPECT_TRUE(evaluate("s^2", p).is_identity());
  EXPECT_TRUE(evaluate("tau(t)*tau(t)", p).is_identity());
}

TEST(Presentation, LoaderErrorsNameTheLocation) {
  EXPECT_NE(error_of("{").find("doc: json"), std::string::npos);
  EXPECT_NE(error_of(R"({"space": {}})").find("version"), std::string::npos);
  EXPECT_NE(error_of(R"({"version": 9})").find("unsupported schema version 9"), std::string::npos);
  EXPECT_NE(error_of(R"({"version": 1})").find("space: missing"), std::string::npos);
  EXPECT_NE(error_of(R"({"version": 1, "space": {"kind": "torus"}})").find("unknown space kind"), std::string::npos);
  EXPECT_NE(error_of(R"({"version": 1, "space": {"kind": "full_shift", "alphabet": ["0","1"]},
      "bisections": [{"name": "x", "dom": ["0"], "ran": ["0", "1"]}]})")
                .find("bisections[0]"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"version": 1, "space": {"kind": "full_shift", "alphabet": ["0","1"]},
      "bisections": [{"name": "x", "dom": ["0"], "ran": ["0"]}, {"name": "x", "dom": ["1"], "ran": ["1"]}]})")
                .find("duplicate name 'x'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"version": 1, "space": {"kind": "full_shift", "alphabet": ["0","1"]}, "basic": ["q"]})")
                .find("basic[0]: unknown bisection 'q'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"version": 1, "space": {"kind": "full_shift", "alphabet": ["0","1"]},
      "germ_semantics": "maybe"})")
                .find("germ_semantics"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"version": 1, "space": {"kind": "full_shift", "alphabet": ["0","1"]},
      "automata": [{"name": "c", "states": [{"name": "c", "transitions": [{"on": "0", "out": "0", "to": "id"}, {"on": "1", "out": "0", "to": "id"}]}]}]})")
                .find("automata[0]"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"version": 1, "quasicrystal": {"kind": "fibonacci", "box": [5, 1]}})").find("box"),
            std::string::npos);
}

TEST(Presentation, MissingFile) { EXPECT_THROW(load_presentation("/nonexistent/x.json"), Error); }

TEST(Expr, Grammar) {
  const auto p = parse_presentation(kMinimal, "doc");
  EXPECT_TRUE(evaluate("[s, s]", p).is_identity());
  EXPECT_TRUE(evaluate("(s*s)^-1 * id", p).is_identity());
  EXPECT_TRUE(*eval("s == s^-1", p).truth);
  EXPECT_FALSE(*eval("s != s^3", p).truth);
  EXPECT_TRUE(eval("s*s", p).element.has_value());
}

TEST(Expr, Errors) {
  const auto p = parse_presentation(kMinimal, "doc");
  EXPECT_THROW(evaluate("s*", p), Error);
  EXPECT_THROW(evaluate("u", p), Error);
  EXPECT_THROW(evaluate("t", p), Error);  // partial bisection
  EXPECT_THROW(evaluate("(s", p), Error);
  EXPECT_THROW(evaluate("s^x", p), Error);
  EXPECT_THROW(evaluate("tau(s)", p), Error);  // source meets range
}
