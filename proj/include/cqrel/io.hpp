#pragma once

// JSON forms:
//   CQ number / rotor : [c1, c@, ci, cj, ck, c@i, c@j, c@k]
//   event             : {"t": ..., "x": ..., "y": ..., "z": ...}

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

#include "cqrel/algebra.hpp"
#include "cqrel/minkowski.hpp"

namespace cqrel::io {

using json = nlohmann::json;

/// Malformed input; the message names the offending field.
class ParseError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Integral values become JSON integers so that 1.0 prints as 1; -0 prints as 0.
json number(double v);

json to_json(const CQNumber& v);
json to_json(const Event& e);

/// `what` names the value in error messages.
CQNumber cq_from_json(const json& j, std::string_view what = "value");
Event event_from_json(const json& j, std::string_view what = "event");

/// Parses text as JSON; wraps parser errors in ParseError naming `what`.
json parse(std::string_view text, std::string_view what);

}  // namespace cqrel::io
