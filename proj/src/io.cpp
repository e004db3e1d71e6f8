#include "rs3/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rs3 {

namespace {

std::vector<std::string> string_array(const json& arr, const char* what) {
  if (!arr.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : arr) {
    if (!item.is_string())
      throw std::invalid_argument(std::string(what) + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

Universe universe_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("universe"))
    throw std::invalid_argument("document must be an object with a \"universe\" key");
  return Universe(string_array(doc["universe"], "\"universe\""));
}

Relation relation_from_json(const json& doc) {
  Universe u = universe_from_json(doc);
  if (!doc.contains("relation") || !doc["relation"].is_object())
    throw std::invalid_argument("relation file needs a \"relation\" object");
  std::vector<std::uint32_t> adj(u.size(), 0);
  for (const auto& [key, value] : doc["relation"].items()) {
    auto x = u.index_of(key);
    if (!x) throw std::invalid_argument("relation row for unknown element: " + key);
    adj[*x] = Subset::of_names(u, string_array(value, ("relation row \"" + key + "\"").c_str())).bits();
  }
  return Relation(u, std::move(adj));
}

json relation_to_json(const Relation& r) {
  const Universe& u = r.universe();
  json rows = json::object();
  for (std::size_t x = 0; x < u.size(); ++x)
    rows[u.name(x)] = Subset(u, r.successors(x)).element_names();
  return json{{"universe", u.names()}, {"relation", std::move(rows)}};
}

FunctionFamily family_from_json(const json& doc) {
  Universe u = universe_from_json(doc);
  if (!doc.contains("functions") || !doc["functions"].is_array())
    throw std::invalid_argument("family file needs a \"functions\" array");
  std::vector<TvFunction> members;
  for (const auto& entry : doc["functions"]) {
    std::vector<std::string> literals = string_array(entry, "function entry");
    if (literals.size() != u.size())
      throw std::invalid_argument("function entry has " + std::to_string(literals.size()) +
                                  " values for a universe of size " + std::to_string(u.size()));
    std::vector<Trit> vals;
    vals.reserve(literals.size());
    for (const std::string& lit : literals) {
      auto t = trit_from_string(lit);
      if (!t) throw std::invalid_argument("invalid trit literal: \"" + lit + "\"");
      vals.push_back(*t);
    }
    members.emplace_back(u, std::move(vals));
  }
  return FunctionFamily(u, std::move(members));
}

json family_to_json(const FunctionFamily& family) {
  json functions = json::array();
  for (const TvFunction& f : family.members()) functions.push_back(function_to_json(f));
  return json{{"universe", family.universe().names()}, {"functions", std::move(functions)}};
}

json subset_to_json(const Subset& s) { return json(s.element_names()); }

json pair_to_json(const ApproxPair& p) {
  return json{{"lower", subset_to_json(p.lower())}, {"upper", subset_to_json(p.upper())}};
}

json function_to_json(const TvFunction& f) {
  json arr = json::array();
  for (Trit t : f.values()) arr.push_back(trit_string(t));
  return arr;
}

json topology_to_json(const Topology& t) {
  json arr = json::array();
  for (const Subset& s : t.open_sets()) arr.push_back(subset_to_json(s));
  return arr;
}

Subset subset_from_csv(const Universe& u, const std::string& csv) {
  std::vector<std::string> names;
  if (!csv.empty()) {
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) names.push_back(item);
  }
  return Subset::of_names(u, names);
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("cannot parse " + path + ": " + e.what());
  }
  return doc;
}

Relation load_relation_file(const std::string& path) {
  return relation_from_json(load_json_file(path));
}

FunctionFamily load_family_file(const std::string& path) {
  return family_from_json(load_json_file(path));
}

}  // namespace rs3
