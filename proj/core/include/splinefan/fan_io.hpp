#ifndef SPLINEFAN_FAN_IO_HPP
#define SPLINEFAN_FAN_IO_HPP

#include <stdexcept>
#include <string>

#include "splinefan/fan.hpp"

namespace splinefan {

// Malformed document: bad JSON, missing fields, unparsable rationals.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally sound document whose fan fails validation.
struct ValidationError : std::runtime_error {
  FanError fan_error;
  explicit ValidationError(const FanError& e)
      : std::runtime_error(e.message()), fan_error(e) {}
};

// Fan document format (JSON):
//   { "dim": 3, "name": "optional",
//     "rays": [["1", "0", "0"], ["1/2", "1", "0"], ...],
//     "maximal_cones": [[0, 1, 2], ...] }
// Ray entries may be integers, integer strings, or "p/q" strings; rays are
// normalized to primitive integer vectors.
struct FanDocument {
  std::string name;
  Fan fan;
};

FanDocument parse_fan_document(const std::string& json_text);
FanDocument load_fan_document(const std::string& path);

std::string fan_document_json(const Fan& fan, const std::string& name);
void save_fan_document(const Fan& fan, const std::string& name, const std::string& path);

}  // namespace splinefan

#endif
