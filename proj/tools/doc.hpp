#pragma once

#include "cusg/completion.hpp"
#include "cusg/finpom.hpp"
#include "cusg/named.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cusg::cli {

// Malformed document. line/column are 1-based; 0 means "whole document".
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error(what), line(line), column(column) {}
  int line;
  int column;
};

// A finite carrier (.pom, or .w with an auxiliary relation) or a named semiring.
struct SemigroupDoc {
  enum class Kind { Finite, Named };
  Kind kind = Kind::Finite;

  NamedCu named;

  FinPom pom;
  bool algebraic = false;                       // `order: algebraic`
  std::optional<std::vector<std::uint8_t>> aux;  // `aux:` lines
  std::optional<std::vector<int>> mul;           // `mul:` lines
  int unit = -1;                                 // `unit:`

  bool has_aux() const { return aux.has_value(); }
  FinW finw() const;
};

// Text of a .pom/.w document. The order is closed reflexively and transitively; the
// result is validated (a pre-order is accepted when aux lines are present).
SemigroupDoc parse_document(std::string_view text);
std::string serialize(const SemigroupDoc& doc);

// A finite document built from a carrier, for emitting computed semigroups.
SemigroupDoc finite_doc(const FinPom& m);

}  // namespace cusg::cli
