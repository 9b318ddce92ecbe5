#include "equisym/catalog.hpp"

#include <cctype>
#include <fstream>

#include "json.hpp"

namespace equisym {

namespace {

Group group_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail("catalog entry is not an object");
  const std::string name = j.value("name", std::string("external"));
  if (!j.contains("table")) fail("catalog entry '" + name + "' has no table");
  const int order = j.value("order", int(j["table"].size()));
  std::vector<std::vector<int>> table = j["table"].get<std::vector<std::vector<int>>>();
  if (int(table.size()) != order) fail("catalog entry '" + name + "': order/table mismatch");
  std::vector<int> gens;
  if (j.contains("generators")) gens = j["generators"].get<std::vector<int>>();
  std::vector<std::string> names;
  if (j.contains("element_names")) names = j["element_names"].get<std::vector<std::string>>();
  return make_external(name, table, gens, names);
}

}  // namespace

std::vector<Group> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open catalog file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail("catalog file " + path + ": " + e.what());
  }
  std::vector<Group> groups;
  if (j.is_array()) {
    for (const auto& entry : j) groups.push_back(group_from_json(entry));
  } else {
    groups.push_back(group_from_json(j));
  }
  return groups;
}

Group build_group(const std::string& spec) {
  if (spec.rfind("C:", 0) == 0) return make_cyclic(std::stoi(spec.substr(2)));
  if (spec.rfind("D:", 0) == 0) return make_dihedral(std::stoi(spec.substr(2)));
  if (spec.rfind("file:", 0) == 0) {
    std::string rest = spec.substr(5);
    std::string want;
    if (auto pos = rest.find('#'); pos != std::string::npos) {
      want = rest.substr(pos + 1);
      rest = rest.substr(0, pos);
    }
    auto groups = load_catalog(rest);
    if (want.empty()) {
      if (groups.size() != 1)
        fail("catalog " + rest + " holds " + std::to_string(groups.size()) +
             " groups; select one with #NAME");
      return std::move(groups.front());
    }
    for (auto& g : groups)
      if (g.name == want) return std::move(g);
    fail("catalog " + rest + " has no group named '" + want + "'");
  }
  fail("unknown group spec '" + spec + "' (expected C:n, D:n or file:PATH#NAME)");
  return {};  // unreachable
}

namespace {

long long parse_exponent(const std::string& s, std::size_t& i) {
  // caller sits just past '^'
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    fail("malformed exponent in element literal '" + s + "'");
  long long v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
  return neg ? -v : v;
}

}  // namespace

Elem parse_element(const Group& g, const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail("empty element literal");
  if (s[0] == '#') {
    const long long k = std::stoll(s.substr(1));
    if (k < 0 || k >= g.order) fail("element index " + s + " out of range");
    return Elem(k);
  }
  if (g.kind == GroupKind::External) {
    for (int k = 0; k < g.order; ++k)
      if (g.element_names[k] == raw || g.element_names[k] == s) return Elem(k);
    fail("unknown element '" + raw + "' of group " + g.name);
  }
  if (s == "1") return g.identity;
  // Product of atoms over the designated generators.
  Elem acc = g.identity;
  std::size_t i = 0;
  while (i < s.size()) {
    Elem atom;
    const char c = s[i];
    if (g.kind == GroupKind::Dihedral && c == 's') {
      atom = Elem(g.n_param);  // s
      ++i;
    } else if (g.kind == GroupKind::Dihedral && c == 'r') {
      ++i;
      long long e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        e = parse_exponent(s, i);
      }
      atom = g.pow(Elem(1), e);
    } else if (g.kind == GroupKind::Cyclic && c == 't') {
      ++i;
      long long e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        e = parse_exponent(s, i);
      }
      atom = g.pow(Elem(1), e);
    } else if (c == '1') {
      atom = g.identity;
      ++i;
    } else {
      fail("cannot parse element literal '" + raw + "' for group " + g.spec_string());
    }
    acc = g.mul(acc, atom);
  }
  return acc;
}

const std::string& element_name(const Group& g, Elem x) { return g.element_names[x]; }

}  // namespace equisym
