#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "hdawz/params.hpp"

namespace hdawz {

// Key=value parameter source.  Accepted keys are exactly
//   p, n1, n2, sigma_v2, sigma_t2, i_eps, rate_r
// with '#' starting a comment and blank lines ignored.  Unknown keys are
// rejected.  A duplicate key keeps the last occurrence, which is also how
// overrides layer on top of file values.
class ParamSource {
 public:
  ParamSource() = default;

  static ParamSource from_file(const std::string& path);
  static ParamSource from_stream(std::istream& in, const std::string& origin);
  static ParamSource from_params(const SystemParams& params);

  // Applies one "key=value" override; throws ConfigParse on unknown keys or
  // malformed values.
  void set(const std::string& assignment);
  void set(const std::string& key, const std::string& value);

  // Requires all keys to be present.
  SystemParams build() const;

 private:
  std::map<std::string, double> values_;
};

}  // namespace hdawz
