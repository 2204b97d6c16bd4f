#pragma once

#include <string>
#include <vector>

namespace asmtss {

/// One assertion of a verification suite. Values are exact and printed in
/// their canonical text form.
struct CheckRecord {
  std::string check;
  int n = 0;
  std::vector<std::string> point;
  std::string expected;
  std::string got;
  bool pass = false;
};

using Report = std::vector<CheckRecord>;

inline bool all_pass(const Report& r) {
  for (const auto& c : r)
    if (!c.pass) return false;
  return true;
}

inline void append(Report& to, const Report& from) { to.insert(to.end(), from.begin(), from.end()); }

template <class T>
std::vector<std::string> to_strings(const std::vector<T>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

}  // namespace asmtss
