// JSON form of a CodeSpec:
//   {"m":2,"n":6,"channel":{"kind":"BEC","eps":0.3},"K":6,"info_set":[...],
//    "frozen":[{"index":1,"value":0},...]}
// Indices are 1-based. Frozen entries not listed default to 0. For BSC the channel
// object is {"kind":"BSC","p":...}.
#pragma once

#include <string>

#include "polarmem/encoder.hpp"

namespace polarmem {

std::string code_spec_to_json(const CodeSpec& spec);

/// Throws ValidationError on malformed or inconsistent input.
CodeSpec code_spec_from_json(const std::string& text);

void write_code_spec(const std::string& path, const CodeSpec& spec);
CodeSpec read_code_spec(const std::string& path);

}  // namespace polarmem
