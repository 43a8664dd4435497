#pragma once

#include "doc.hpp"
#include "report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cusg::cli {

struct Options {
  std::optional<std::int64_t> bound;
  int depth = 12;
  bool machine = false;
  bool replay = false;
  std::uint64_t seed = 1;
};

// A resolved operand: a document, or ℕ (only meaningful as a tensor factor).
struct Input {
  std::string label;
  SemigroupDoc doc;
  bool nat = false;
};

// A file path, `random:<size>`, `nat`, or a named semiring.
Input load_input(const std::string& arg, const Options& opt);

// Raised when --replay disagrees with an emitted witness.
class ReplayMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Report cmd_check(const Input& in, const std::vector<std::string>& props, const Options& opt);

struct TensorArgs {
  enum class Mode { Saturate, Identity, Leq, Aux } mode = Mode::Saturate;
  std::string f, g;
  std::int64_t cap = 4;  // truncation of ℕ
};
Report cmd_tensor(const Input& left, const Input& right, const TensorArgs& args, const Options& opt);

Report cmd_complete(const Input& in, bool gamma, const Options& opt);
Report cmd_classify(const Input& in, const Options& opt);

struct LimitArgs {
  std::optional<int> doubling;
  std::vector<std::string> maps;  // target names per source element, one string per map
  std::optional<int> stage;
};
Report cmd_limit(const std::vector<Input>& stages, const LimitArgs& args, const Options& opt);

Report cmd_functional(const Input& in, const std::vector<std::string>& at, const Options& opt);

Report cmd_compare(const Input& in, const std::string& a, const std::string& b,
                   const std::optional<std::string>& over, const Options& opt);

}  // namespace cusg::cli
