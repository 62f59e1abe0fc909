#pragma once

// JSON encoding of hereditarily finite sets: a set is an array of its
// members, canonical form being deduplicated and sorted. `2` is `[[],[[]]]`.
//
// The lenient reader additionally accepts
//   - non-negative integers as von Neumann numerals, and
//   - {"pairs": [[a, b], ...]} as the set of Kuratowski pairs ⟨a,b⟩.
// The strict reader accepts canonical arrays only.

#include <string>

#include <json.hpp>

#include "mk/error.hpp"
#include "mk/hfs.hpp"

namespace mk {

inline nlohmann::json to_json(const HfSet& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& m : s) arr.push_back(to_json(m));
  return arr;
}

inline std::string serialize(const HfSet& s) { return to_json(s).dump(); }

enum class ParseMode { Lenient, Strict };

inline HfSet from_json(const nlohmann::json& j, ParseMode mode = ParseMode::Lenient) {
  if (j.is_array()) {
    std::vector<HfSet> ms;
    ms.reserve(j.size());
    for (const auto& e : j) ms.push_back(from_json(e, mode));
    if (mode == ParseMode::Strict) {
      for (std::size_t i = 1; i < ms.size(); ++i)
        if (!(ms[i - 1] < ms[i]))
          throw Error(ErrorCode::NonCanonical,
                      "members out of canonical order or duplicated at index " +
                          std::to_string(i));
      return HfSet::from_sorted(std::move(ms));
    }
    return HfSet::of(std::move(ms));
  }
  if (mode == ParseMode::Strict)
    throw Error(ErrorCode::NonCanonical, "strict mode accepts nested arrays only");
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0)) {
    auto n = j.get<unsigned long long>();
    if (n > 64) throw Error(ErrorCode::ParseError, "numeral shorthand above 64");
    return numeral(n);
  }
  if (j.is_object() && j.contains("pairs") && j.size() == 1) {
    std::vector<HfSet> ps;
    for (const auto& p : j.at("pairs")) {
      if (!p.is_array() || p.size() != 2)
        throw Error(ErrorCode::ParseError, "each pair must be a two-element array");
      ps.push_back(ordered_pair(from_json(p[0], mode), from_json(p[1], mode)));
    }
    return HfSet::of(std::move(ps));
  }
  throw Error(ErrorCode::ParseError, "unsupported JSON value " + j.dump());
}

inline HfSet deserialize(const std::string& text, ParseMode mode = ParseMode::Lenient) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return from_json(j, mode);
}

}  // namespace mk
