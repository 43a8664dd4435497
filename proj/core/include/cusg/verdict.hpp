#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cusg {

enum class Status { Holds, Fails, Unknown };

struct Verdict {
  Status status = Status::Holds;
  // Property or axiom that failed, e.g. "antisymmetry" or "O5".
  std::string tag;
  // Flat list of element indices and scalars; layout fixed per tag.
  std::vector<std::int64_t> witness;
  // Multiplier or search bound that was used.
  std::optional<std::int64_t> depth;
  std::string note;

  bool holds() const { return status == Status::Holds; }
  bool fails() const { return status == Status::Fails; }
  bool unknown() const { return status == Status::Unknown; }
};

Verdict make_holds(std::string note = {});
Verdict make_fails(std::string tag, std::vector<std::int64_t> witness, std::string note = {});
Verdict make_unknown(std::int64_t depth, std::string note = {});

const char* to_string(Status s);

}  // namespace cusg
