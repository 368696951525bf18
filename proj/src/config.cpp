#include "hdawz/config.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace hdawz {

namespace {

constexpr std::array<const char*, 7> kKeys = {
    "p", "n1", "n2", "sigma_v2", "sigma_t2", "i_eps", "rate_r"};

bool known_key(const std::string& key) {
  for (const char* k : kKeys)
    if (key == k) return true;
  return false;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_value(const std::string& text, const std::string& where) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    raise(ErrorCode::ConfigParse, "malformed number '" + text + "' " + where);
  return value;
}

}  // namespace

ParamSource ParamSource::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::ConfigParse, "cannot open config file '" + path + "'");
  return from_stream(in, path);
}

ParamSource ParamSource::from_params(const SystemParams& params) {
  ParamSource source;
  source.values_["p"] = params.p;
  source.values_["n1"] = params.n1;
  source.values_["n2"] = params.n2;
  source.values_["sigma_v2"] = params.sigma_v2;
  source.values_["sigma_t2"] = params.sigma_t2;
  source.values_["i_eps"] = params.i_eps;
  source.values_["rate_r"] = params.rate_r;
  return source;
}

ParamSource ParamSource::from_stream(std::istream& in, const std::string& origin) {
  ParamSource source;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    std::ostringstream where;
    where << "(" << origin << ":" << lineno << ")";
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      raise(ErrorCode::ConfigParse, "expected key=value, got '" + line + "' " + where.str());
    source.set(trim(line.substr(0, eq)) + "=" + trim(line.substr(eq + 1)));
  }
  return source;
}

void ParamSource::set(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos)
    raise(ErrorCode::ConfigParse, "expected key=value, got '" + assignment + "'");
  set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

void ParamSource::set(const std::string& key, const std::string& value) {
  if (!known_key(key)) raise(ErrorCode::ConfigParse, "unknown key '" + key + "'");
  values_[key] = parse_value(value, "for key '" + key + "'");
}

SystemParams ParamSource::build() const {
  for (const char* k : kKeys)
    if (!values_.count(k))
      raise(ErrorCode::ConfigParse, std::string("missing key '") + k + "'");

  SystemParams params;
  params.p = values_.at("p");
  params.n1 = values_.at("n1");
  params.n2 = values_.at("n2");
  params.sigma_v2 = values_.at("sigma_v2");
  params.sigma_t2 = values_.at("sigma_t2");
  params.i_eps = values_.at("i_eps");
  params.rate_r = values_.at("rate_r");
  return params;
}

}  // namespace hdawz
