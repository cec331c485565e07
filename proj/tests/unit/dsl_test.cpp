#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ggp/dsl.hpp"
#include "helpers.hpp"

using namespace ggp;
using namespace ggp::dsl;

namespace {

const char* kPhi1 =
    "param phi1 on U(W,3,+) { A dim 1 sign + tempered sl2triv; B dim 2 sign + tempered sl2triv; }";

template <class E>
E expect_error(const std::string& text) {
  try {
    parse(text);
  } catch (const E& e) {
    return e;
  }
  FAIL("expected an error for: " << text);
  throw;
}

}  // namespace

TEST_CASE("the two-atom fixture parses") {
  const Document doc = parse(kPhi1);
  REQUIRE(doc.params.size() == 1);
  const Model model = build_model(doc);
  const LParameter& phi1 = model.param("phi1");
  CHECK(phi1.blocks() == mk_parameter({{fixtures::atom("A", 1), 1}, {fixtures::atom("B", 2), 1}}, {},
                                      skew_hermitian(3))
                             .blocks());
  CHECK(phi1.group() == skew_hermitian(3));
}

TEST_CASE("epsilon block fills the table") {
  const Document doc = parse(std::string(kPhi1) + " param c on U(W,3,+) { C dim 3 sign +; }" +
                             " epsilon { (A, C; psi2E) = -1; }");
  const Model model = build_model(doc);
  REQUIRE(model.has_table);
  const auto it = model.table.entries.find({AtomKey::from_parts({"A", "C"}, CharE()), PsiTag::psi2E});
  REQUIRE(it != model.table.entries.end());
  CHECK(it->second == Sign::minus());
}

TEST_CASE("dimension mismatch carries the engine's kind") {
  const auto e = expect_error<SemanticError>("param p on U(W,3,+) { A dim 1 sign + mult 2; B dim 2 sign +; }");
  CHECK(e.cause() == ErrorKind::DimensionMismatch);
  CHECK(e.pos() == SourcePos{1, 1});
}

TEST_CASE("syntax errors report position and expected tokens") {
  const auto e = expect_error<SyntaxError>("param p on U(W,3,+)\n  { A dim x");
  CHECK(e.pos() == SourcePos{2, 11});
  CHECK(e.expected() == std::vector<std::string>{"dimension"});
  CHECK(std::string(e.what()).find("2:11") != std::string::npos);
  const auto keys = expect_error<SyntaxError>("setting { psi = chi; }");
  CHECK(keys.expected().size() == 4);
}

TEST_CASE("characters must be declared before use") {
  const auto e = expect_error<SemanticError>("setting { chi = chi; }");
  CHECK(e.pos() == SourcePos{1, 17});
  CHECK_NOTHROW(parse("character chi omega; setting { chi = chi; }"));
}

TEST_CASE("character expressions normalise") {
  const Document a = parse("character chi omega; character e trivial; setting { chi = e*chi*e^-1; chi_v = chi^2*chi^3; }");
  const Document b = parse("character chi omega; character e trivial; setting { chi_v = chi^5; chi = chi; }");
  CHECK(a == b);
  CHECK(print(a) == print(b));
}

TEST_CASE("printing is canonical and round trips") {
  const std::string text =
      "task packet p; character chi omega; param p on U(V,2,-) [generic] { B dim 1 sign -; A dim 1 sign + twist chi; }"
      " base { omega_minus_one = -1; }";
  const Document doc = parse(text);
  const std::string printed = print(doc);
  CHECK(parse(printed) == doc);
  CHECK(print(parse(printed)) == printed);
  CHECK(printed.find("base { omega_minus_one = -1; }") == 0);
  CHECK(printed.find("  A dim 1 sign + twist chi;") != std::string::npos);
}

TEST_CASE("corpus") {
  namespace fs = std::filesystem;
  int ok = 0;
  int errors = 0;
  for (const auto& entry : fs::directory_iterator(GGP_CORPUS_DIR)) {
    if (entry.path().extension() != ".ggp") continue;
    std::ifstream in(entry.path());
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    std::istringstream header(text.substr(0, text.find('\n')));
    std::string hash, tag, expect, where, cause;
    header >> hash >> tag >> expect >> where >> cause;
    CAPTURE(entry.path().filename().string());
    if (expect == "ok") {
      ++ok;
      const Document doc = parse(text);
      CHECK(parse(print(doc)) == doc);
      CHECK(print(parse(print(doc))) == print(doc));
      continue;
    }
    ++errors;
    std::string kind;
    std::string pos;
    std::optional<ErrorKind> got_cause;
    try {
      parse(text);
      kind = "none";
    } catch (const SyntaxError& e) {
      kind = "SyntaxError";
      pos = e.pos().to_string();
    } catch (const SemanticError& e) {
      kind = "SemanticError";
      pos = e.pos().to_string();
      got_cause = e.cause();
    }
    CHECK(kind == expect);
    CHECK(pos == where);
    if (!cause.empty()) {
      REQUIRE(got_cause);
      CHECK(std::string(to_string(*got_cause)) == cause);
    }
  }
  CHECK(ok + errors >= 20);
  CHECK(errors > 0);
}
