#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "finring/ring.hpp"
#include "finring/subgroup.hpp"

namespace finring {

using Json = nlohmann::json;

inline Json to_json(const Element& e) { return Json(e.coords); }

inline Json to_json(const AdditiveSubgroup& g) {
  Json basis = Json::array();
  for (const Element& b : g.basis()) basis.push_back(to_json(b));
  return basis;
}

/// {"orders":[...], "one":[...], "mul":[[[...],...],...], "label":"..."}
inline Json ring_to_json(const FiniteRing& r) {
  Json mul = Json::array();
  for (std::size_t i = 0; i < r.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < r.rank(); ++j) row.push_back(to_json(r.product(i, j)));
    mul.push_back(std::move(row));
  }
  Json j = {{"orders", r.orders()}, {"one", r.one().coords}, {"mul", std::move(mul)}};
  if (!r.label().empty()) j["label"] = r.label();
  return j;
}

inline FiniteRing ring_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw Error(Errc::IllFormedTable, "ring description must be a JSON object");
    auto orders = j.at("orders").get<std::vector<Coord>>();
    auto one = j.at("one").get<std::vector<Coord>>();
    auto mul = j.at("mul").get<ProductTable>();
    std::string label = j.contains("label") ? j.at("label").get<std::string>() : std::string();
    return make_ring(std::move(orders), std::move(mul), std::move(one), std::move(label));
  } catch (const Json::exception& e) {
    throw Error(Errc::IllFormedTable, std::string("malformed ring description: ") + e.what());
  }
}

inline FiniteRing load_ring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::IllFormedTable, path + ": " + e.what());
  }
  return ring_from_json(j);
}

inline void save_ring_file(const std::string& path, const FiniteRing& r) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IoError, "cannot write " + path);
  out << ring_to_json(r).dump(2) << '\n';
  if (!out) throw Error(Errc::IoError, "write failed for " + path);
}

}  // namespace finring
