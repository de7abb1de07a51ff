#include "lfuzzy/set_collection.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lfuzzy/errors.hpp"

namespace lfuzzy {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

ordered_json parse_json(std::string_view text, std::string_view what) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ParseError(std::string(what) + ": not valid JSON");
  }
  return j;
}

std::vector<std::string> string_array(const ordered_json& j, std::string_view field) {
  if (!j.is_array()) {
    throw ParseError("field \"" + std::string(field) + "\" must be an array of strings");
  }
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) {
      throw ParseError("field \"" + std::string(field) +
                       "\" must be an array of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

SetCollection::SetCollection(UniverseRef universe,
                             std::vector<std::pair<std::string, FuzzySet>> sets)
    : universe_(std::move(universe)), sets_(std::move(sets)) {
  if (!universe_) throw DomainError("set collection without a universe");
  for (const auto& [name, set] : sets_) {
    require_same_universe(universe_, set.universe(), "set \"" + name + "\"");
  }
}

SetCollection SetCollection::from_json_text(std::string_view text) {
  ordered_json j = parse_json(text, "set file");
  if (!j.is_object()) throw ParseError("set file: top level must be an object");
  if (!j.contains("universe")) throw ParseError("set file: missing field \"universe\"");
  if (!j.contains("sets")) throw ParseError("set file: missing field \"sets\"");

  UniverseRef universe;
  try {
    universe = Universe::make(string_array(j["universe"], "universe"));
  } catch (const DomainError& e) {
    throw ParseError(std::string("set file: ") + e.what());
  }

  const auto& sets_node = j["sets"];
  if (!sets_node.is_object()) {
    throw ParseError("set file: field \"sets\" must be an object");
  }
  std::vector<std::pair<std::string, FuzzySet>> sets;
  for (const auto& [name, grades_node] : sets_node.items()) {
    auto grade_texts = string_array(grades_node, "sets." + name);
    if (grade_texts.size() != universe->size()) {
      throw ParseError("set \"" + name + "\" has " +
                       std::to_string(grade_texts.size()) +
                       " grades for a universe of size " +
                       std::to_string(universe->size()));
    }
    std::vector<Rational> grades;
    grades.reserve(grade_texts.size());
    for (std::size_t u = 0; u < grade_texts.size(); ++u) {
      try {
        grades.push_back(Rational::parse(grade_texts[u]));
      } catch (const Error& e) {
        throw ParseError("set \"" + name + "\", element \"" + universe->label(u) +
                         "\": " + e.what());
      }
    }
    sets.emplace_back(name, FuzzySet(universe, std::move(grades)));
  }
  return SetCollection(std::move(universe), std::move(sets));
}

SetCollection SetCollection::load(const std::string& path) {
  try {
    return from_json_text(read_file(path));
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

bool SetCollection::contains(std::string_view name) const {
  for (const auto& [n, s] : sets_) {
    if (n == name) return true;
  }
  return false;
}

const FuzzySet& SetCollection::at(std::string_view name) const {
  for (const auto& [n, s] : sets_) {
    if (n == name) return s;
  }
  throw DomainError("no set named \"" + std::string(name) + "\" in the collection");
}

std::string SetCollection::to_json_text(int indent) const {
  ordered_json j;
  j["universe"] = universe_->labels();
  ordered_json sets = ordered_json::object();
  for (const auto& [name, set] : sets_) {
    std::vector<std::string> grades;
    grades.reserve(set.size());
    for (const auto& g : set.grades()) grades.push_back(g.str());
    sets[name] = grades;
  }
  j["sets"] = std::move(sets);
  return j.dump(indent);
}

Partition partition_from_json_text(std::string_view text, UniverseRef universe) {
  ordered_json j = parse_json(text, "partition file");
  if (!j.is_object()) throw ParseError("partition file: top level must be an object");
  if (!j.contains("blocks")) throw ParseError("partition file: missing field \"blocks\"");
  const auto& blocks_node = j["blocks"];
  if (!blocks_node.is_array()) {
    throw ParseError("partition file: field \"blocks\" must be an array");
  }
  std::vector<std::vector<std::string>> blocks;
  blocks.reserve(blocks_node.size());
  for (std::size_t k = 0; k < blocks_node.size(); ++k) {
    blocks.push_back(string_array(blocks_node[k], "blocks[" + std::to_string(k) + "]"));
  }
  return Partition(std::move(universe), std::move(blocks));
}

Partition load_partition(const std::string& path, UniverseRef universe) {
  try {
    return partition_from_json_text(read_file(path), std::move(universe));
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace lfuzzy
