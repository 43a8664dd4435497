#include "report.hpp"

#include <iomanip>

namespace cusg::cli {

int Report::exit_code() const {
  bool unknown = false;
  for (const auto& r : records) {
    if (r.info) continue;
    if (r.status == Status::Fails) return 1;
    if (r.status == Status::Unknown) unknown = true;
  }
  return unknown ? 2 : 0;
}

void Report::print(std::ostream& out, bool machine) const {
  if (machine) {
    json doc;
    doc["schema"] = 1;
    doc["command"] = command;
    json recs = json::array();
    for (const auto& r : records) {
      json j;
      j["check"] = r.check;
      if (r.info) {
        j["value"] = r.value;
      } else {
        j["verdict"] = to_string(r.status);
      }
      if (!r.witness.is_null()) j["witness"] = r.witness;
      if (!r.bounds.empty()) j["bounds"] = r.bounds;
      j["wall_ms"] = r.millis;
      if (!r.note.empty()) j["note"] = r.note;
      recs.push_back(std::move(j));
    }
    doc["records"] = std::move(recs);
    if (!output.empty()) doc["output"] = output;
    doc["exit"] = exit_code();
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& r : records) {
    out << r.check << ": ";
    if (r.info) {
      out << (r.value.is_string() ? r.value.get<std::string>() : r.value.dump());
    } else {
      out << to_string(r.status);
    }
    bool multiline = r.witness.is_string() && r.witness.get<std::string>().find('\n') != std::string::npos;
    if (!r.witness.is_null() && !multiline) out << "  witness " << r.witness.dump();
    if (!r.bounds.empty()) out << "  bounds " << r.bounds.dump();
    out << "  (" << std::fixed << std::setprecision(2) << r.millis << " ms)";
    if (!r.note.empty()) out << "  " << r.note;
    out << '\n';
    if (multiline) {
      std::string cert = r.witness.get<std::string>();
      for (std::size_t start = 0, end; start < cert.size(); start = end + 1) {
        end = cert.find('\n', start);
        if (end == std::string::npos) end = cert.size();
        out << "  | " << cert.substr(start, end - start) << '\n';
      }
    }
  }
  for (const auto& line : text) out << line << '\n';
}

}  // namespace cusg::cli
