#include "oracle.hpp"

#include "doc.hpp"

#include "cusg/corpus.hpp"
#include "cusg/finpom.hpp"
#include "cusg/named.hpp"

#include <gtest/gtest.h>

#include <set>

namespace {

using namespace cusg;
using namespace cusg::cli;

const char* kE1 =
    "# E_1\n"
    "elements: 0 1 inf\n"
    "add: 1 1 = inf\n"
    "add: 1 inf = inf\n"
    "add: inf inf = inf\n"
    "order: algebraic\n";

void expect_same(const SemigroupDoc& a, const SemigroupDoc& b) {
  ASSERT_EQ(a.kind, b.kind);
  if (a.kind == SemigroupDoc::Kind::Named) {
    EXPECT_EQ(a.named, b.named);
    return;
  }
  EXPECT_EQ(a.pom.n, b.pom.n);
  EXPECT_EQ(a.pom.add, b.pom.add);
  EXPECT_EQ(a.pom.leq, b.pom.leq);
  EXPECT_EQ(a.pom.zero, b.pom.zero);
  EXPECT_EQ(a.pom.names, b.pom.names);
  EXPECT_EQ(a.algebraic, b.algebraic);
  EXPECT_EQ(a.aux, b.aux);
  EXPECT_EQ(a.mul, b.mul);
  EXPECT_EQ(a.unit, b.unit);
}

ParseError parse_error_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return ParseError(-1, -1, "");
}

TEST(Document, ParsesElementaryOne) {
  SemigroupDoc d = parse_document(kE1);
  ASSERT_EQ(d.kind, SemigroupDoc::Kind::Finite);
  EXPECT_TRUE(d.algebraic);
  EXPECT_FALSE(d.has_aux());
  EXPECT_TRUE(oracle::verifies_isomorphism(d.pom, oracle::elementary(1), {0, 1, 2}));
}

TEST(Document, RoundTripsCorpusCarriers) {
  for (const auto& m : pom_corpus(555, 150, 6)) {
    SemigroupDoc d = finite_doc(m);
    SemigroupDoc back = parse_document(serialize(d));
    expect_same(d, back);
    expect_same(back, parse_document(serialize(back)));
  }
}

TEST(Document, RoundTripsAuxiliaryRelations) {
  for (const auto& w : finw_corpus(556, 80, 6)) {
    SemigroupDoc d = finite_doc(w.base);
    d.aux = w.aux;
    SemigroupDoc back = parse_document(serialize(d));
    expect_same(d, back);
    EXPECT_EQ(back.finw().aux, w.aux);
  }
}

TEST(Document, RoundTripsMultiplication) {
  FinPom e2 = make_elementary(2);
  SemigroupDoc d = finite_doc(e2);
  std::vector<int> mul(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) mul[a * 4 + b] = (a == 0 || b == 0) ? 0 : (a == 3 || b == 3 || a * b > 2) ? 3 : a * b;
  d.mul = mul;
  d.unit = 1;
  expect_same(d, parse_document(serialize(d)));
}

TEST(Document, RenamesUnusableNames) {
  FinPom m = make_elementary(1);
  m.names = {"zero", "a b", "a b"};
  SemigroupDoc d = finite_doc(m);
  std::set<std::string> names(d.pom.names.begin(), d.pom.names.end());
  EXPECT_EQ(names.size(), 3u);
  expect_same(d, parse_document(serialize(d)));
}

TEST(Document, ErrorsCarryPositions) {
  ParseError unknown = parse_error_of("elements: 0 a\nadd: a a = b\n");
  EXPECT_EQ(unknown.line, 2);
  EXPECT_EQ(unknown.column, 12);

  ParseError dup = parse_error_of("elements: 0 a a\n");
  EXPECT_EQ(dup.line, 1);
  EXPECT_EQ(dup.column, 15);

  ParseError key = parse_error_of("elements: 0 a\n\nfrob: a\n");
  EXPECT_EQ(key.line, 3);

  ParseError first = parse_error_of("add: a a = a\n");
  EXPECT_EQ(first.line, 1);

  // 1 ≤ 0 makes zero not least.
  ParseError order = parse_error_of("elements: 0 a\nadd: a a = a\nle: a 0\n");
  EXPECT_NE(std::string(order.what()).find("not a positively ordered monoid"), std::string::npos);
}

TEST(Document, MulNeedsUnit) {
  std::string text = std::string(kE1) + "mul: 1 1 = 1\n";
  EXPECT_THROW(parse_document(text), ParseError);
}

}  // namespace
