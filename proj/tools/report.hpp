#pragma once

#include "cusg/verdict.hpp"

#include <chrono>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace cusg::cli {

using json = nlohmann::ordered_json;

// One check. Informational records carry a value instead of a verdict and never
// influence the exit status.
struct Record {
  std::string check;
  Status status = Status::Holds;
  bool info = false;
  json value = nullptr;    // informational payload
  json witness = nullptr;
  json bounds = json::object();
  double millis = 0;
  std::string note;
};

struct Report {
  std::vector<std::string> command;
  std::vector<Record> records;
  json output = json::object();      // emitted documents and map tables
  std::vector<std::string> text;     // the same output, for humans

  Record& add(Record r) {
    records.push_back(std::move(r));
    return records.back();
  }
  // 1 if any verdict fails, else 2 if any is unknown, else 0.
  int exit_code() const;
  void print(std::ostream& out, bool machine) const;
};

class Stopwatch {
 public:
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace cusg::cli
