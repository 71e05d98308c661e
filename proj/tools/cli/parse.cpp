#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"
#include "dormant/error.hpp"

namespace dormant::cli {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(strip(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

long long parse_int(std::string_view token) {
  long long v = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw InvalidInput("not an integer: '" + std::string(token) + "'");
  }
  return v;
}

bool is_generic(std::string_view token) {
  std::string lower(token);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return lower == "generic";
}

}  // namespace

std::vector<Parameter> parse_params(Prime p, std::string_view text) {
  std::vector<Parameter> out;
  for (std::string_view token : split(text, ',')) {
    if (is_generic(token)) {
      out.push_back(Parameter::generic());
    } else {
      out.emplace_back(FpElem(p, parse_int(token)));
    }
  }
  return out;
}

std::vector<FpElem> parse_fp(Prime p, std::string_view text) {
  std::vector<FpElem> out;
  for (std::string_view token : split(text, ',')) out.emplace_back(p, parse_int(token));
  return out;
}

std::vector<RadiusClass> parse_radii(Prime p, std::string_view text) {
  std::vector<RadiusClass> out;
  if (strip(text).empty()) return out;
  for (std::string_view cls : split(text, '/')) {
    std::vector<int> elems;
    for (std::string_view token : split(cls, ',')) {
      const long long v = parse_int(token);
      elems.push_back(static_cast<int>(((v % p.value()) + p.value()) % p.value()));
    }
    out.push_back(RadiusClass::of(p, elems));
  }
  return out;
}

OverrideTable load_overrides(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read override file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return OverrideTable::from_json(buf.str());
}

}  // namespace dormant::cli
