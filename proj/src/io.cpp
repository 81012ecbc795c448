#include "satlat/io.hpp"

#include <fstream>
#include <stdexcept>

namespace satlat {

namespace {

nlohmann::json parse_file(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument(std::string("cannot open ") + what +
                                " file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON in ") + what +
                                " file " + path + ": " + e.what());
  }
  return j;
}

}  // namespace

nlohmann::json family_to_json(const Family& f) {
  nlohmann::json sets = nlohmann::json::array();
  for (Mask m : f.members) sets.push_back(to_bitstring(m, f.n));
  return nlohmann::json{{"n", f.n}, {"sets", sets}};
}

Family family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("sets"))
    throw std::invalid_argument(
        "family JSON must be an object with \"n\" and \"sets\"");
  if (!j["n"].is_number_integer())
    throw std::invalid_argument("family ground size must be an integer");
  int n = j["n"].get<int>();
  if (n < 1 || n > kMaxGroundSize)
    throw std::invalid_argument("family ground size out of range [1, 24]: " +
                                std::to_string(n));
  if (!j["sets"].is_array())
    throw std::invalid_argument("family \"sets\" must be an array");
  std::vector<Mask> members;
  for (const auto& e : j["sets"]) {
    if (e.is_number_integer()) {
      long long v = e.get<long long>();
      if (v < 0 || v > full_mask(n))
        throw std::invalid_argument("set mask out of range for n=" +
                                    std::to_string(n) + ": " +
                                    std::to_string(v));
      members.push_back(static_cast<Mask>(v));
    } else if (e.is_string()) {
      auto m = mask_from_bitstring(e.get<std::string>(), n);
      if (!m)
        throw std::invalid_argument(
            "set bitstring must have length n over {0,1}: \"" +
            e.get<std::string>() + "\"");
      members.push_back(*m);
    } else {
      throw std::invalid_argument(
          "each set must be an integer mask or a bitstring");
    }
  }
  return Family(n, std::move(members));  // rejects duplicates
}

Family load_family_file(const std::string& path) {
  return family_from_json(parse_file(path, "family"));
}

void save_family_file(const Family& f, const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw std::invalid_argument("cannot write family file: " + path);
  out << family_to_json(f).dump(2) << '\n';
}

PosetSpec load_poset_file(const std::string& path) {
  nlohmann::json j = parse_file(path, "poset");
  if (!j.is_object() || !j.contains("size") || !j.contains("less"))
    throw std::invalid_argument(
        "poset JSON must be an object with \"size\" and \"less\"");
  if (!j["size"].is_number_integer())
    throw std::invalid_argument("poset size must be an integer");
  int size = j["size"].get<int>();
  if (!j["less"].is_array())
    throw std::invalid_argument("poset \"less\" must be an array of pairs");
  std::vector<std::pair<int, int>> rel;
  for (const auto& e : j["less"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw std::invalid_argument(
          "poset relation entries must be [i, j] integer pairs");
    rel.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::string label = "custom:" + path;
  if (j.contains("label") && j["label"].is_string())
    label = j["label"].get<std::string>();
  return PosetSpec(size, std::move(rel), std::move(label),
                   /*close_transitively=*/true);
}

}  // namespace satlat
