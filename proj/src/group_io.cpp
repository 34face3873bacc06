#include "phigroup/group_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "phigroup/constructions.hpp"

namespace phigroup {

using nlohmann::json;

std::string group_to_json(const FiniteGroup& g) {
  json j;
  j["name"] = g.name();
  j["order"] = g.order();
  j["identity"] = g.identity();
  j["table"] = g.table_rows();
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j.dump() + "\n";
}

FiniteGroup group_from_json(std::string_view text, const GroupLimits& limits) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GroupSpecError(std::string("group json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("table") || !j.contains("identity"))
    throw GroupSpecError("group json: expected an object with \"table\" and \"identity\"");
  std::vector<std::vector<std::int64_t>> table;
  std::vector<std::string> labels;
  std::int64_t identity = 0;
  std::string name;
  try {
    table = j.at("table").get<std::vector<std::vector<std::int64_t>>>();
    identity = j.at("identity").get<std::int64_t>();
    name = j.value("name", std::string("G"));
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("order") && j.at("order").get<std::size_t>() != table.size())
      throw GroupSpecError("group json: \"order\" does not match the table size");
  } catch (const json::exception& e) {
    throw GroupSpecError(std::string("group json: ") + e.what());
  }
  check_order_cap(table.size(), limits);
  return FiniteGroup::from_cayley(table, identity, std::move(name), std::move(labels), limits);
}

FiniteGroup load_group_file(const std::string& path, const GroupLimits& limits) {
  std::ifstream in(path);
  if (!in) throw GroupSpecError("cannot open group file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return group_from_json(buffer.str(), limits);
}

namespace {

std::uint64_t parse_count(std::string_view text, std::string_view spec) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end || value == 0)
    throw GroupSpecError("malformed group spec '" + std::string(spec) + "': expected a positive integer, got '" +
                         std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i)
    if (i == text.size() || text[i] == sep) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  return parts;
}

std::vector<std::string_view> split_top_level(std::string_view text, std::string_view spec) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')' && --depth < 0) break;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw GroupSpecError("unbalanced parentheses in group spec '" + std::string(spec) + "'");
  return parts;
}

std::string_view strip_parens(std::string_view s) {
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

FiniteGroup parse_group_spec(std::string_view spec, const GroupLimits& limits) {
  spec = strip_parens(spec);
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw GroupSpecError("malformed group spec '" + std::string(spec) + "': missing ':'");
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view args = spec.substr(colon + 1);

  if (kind == "cyclic") return cyclic(parse_count(args, spec), limits);
  if (kind == "dihedral") return dihedral(parse_count(args, spec), limits);
  if (kind == "dicyclic") return dicyclic(parse_count(args, spec), limits);
  if (kind == "sym" || kind == "alt") {
    const std::uint64_t k = parse_count(args, spec);
    if (k > 6) throw GroupSpecError("permutation degree above 6 in '" + std::string(spec) + "'");
    return kind == "sym" ? symmetric(static_cast<unsigned>(k), limits)
                         : alternating(static_cast<unsigned>(k), limits);
  }
  if (kind == "abelian") {
    std::vector<std::uint64_t> factors;
    for (auto part : split(args, 'x')) factors.push_back(parse_count(part, spec));
    return abelian(factors, limits);
  }
  if (kind == "sdp") {
    const auto parts = split(args, ':');
    if (parts.size() != 3) throw GroupSpecError("malformed group spec '" + std::string(spec) + "': expected sdp:A:B:R");
    const SemidirectSpec s{parse_count(parts[0], spec), parse_count(parts[1], spec), parse_count(parts[2], spec)};
    if (!s.valid())
      throw GroupSpecError("invalid semidirect parameters in '" + std::string(spec) +
                           "': r must be a unit mod a with r^b = 1 mod a");
    return semidirect_cyclic(s, limits);
  }
  if (kind == "prod") {
    const auto parts = split_top_level(args, spec);
    if (parts.size() < 2) throw GroupSpecError("prod needs at least two factors in '" + std::string(spec) + "'");
    FiniteGroup g = parse_group_spec(parts[0], limits);
    for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, parse_group_spec(parts[i], limits), limits);
    return g;
  }
  if (kind == "file") {
    if (args.empty()) throw GroupSpecError("file spec needs a path");
    return load_group_file(std::string(args), limits);
  }
  throw GroupSpecError("unknown group kind '" + std::string(kind) + "'");
}

}  // namespace phigroup
