#pragma once

#include <functional>
#include <string>
#include <vector>

#include "genalg/exactmath/integer.hpp"
#include "genalg/io/serialize.hpp"

namespace tamper {

using genalg::io::Json;

inline bool integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

inline void collect(const Json& j, const Json::json_pointer& at, std::vector<Json::json_pointer>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) collect(v, at / k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) collect(j[i], at / i, out);
  } else {
    out.push_back(at);
  }
}

/// One altered copy per leaf: integers are incremented, booleans flipped,
/// and other strings get their first character changed.
inline std::vector<Json> single_leaf_variants(const Json& cert) {
  std::vector<Json::json_pointer> leaves;
  collect(cert, Json::json_pointer{}, leaves);
  std::vector<Json> out;
  for (const auto& ptr : leaves) {
    Json copy = cert;
    Json& leaf = copy.at(ptr);
    if (leaf.is_boolean()) {
      leaf = !leaf.get<bool>();
    } else if (leaf.is_string() && integer_text(leaf.get<std::string>())) {
      leaf = genalg::to_string(genalg::Integer(genalg::parse_integer(leaf.get<std::string>()) + 1));
    } else if (leaf.is_string()) {
      std::string s = leaf.get<std::string>();
      if (s.empty()) {
        s = "x";
      } else {
        s[0] = s[0] == 'a' ? 'b' : 'a';
      }
      leaf = s;
    } else if (leaf.is_number_integer()) {
      leaf = leaf.get<long long>() + 1;
    } else if (leaf.is_null()) {
      leaf = 0;
    } else {
      continue;
    }
    out.push_back(std::move(copy));
  }
  return out;
}

}  // namespace tamper
