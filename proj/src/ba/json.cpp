#include "monkbench/ba/json.hpp"

#include <fstream>

#include "monkbench/errors.hpp"

namespace monkbench {

Json presentation_to_json(const Presentation& p) {
  Json rows = Json::array();
  for (Row f : p.rows()) {
    Json bits = Json::array();
    for (std::size_t i = 0; i < p.width(); ++i) bits.push_back(static_cast<int>((f >> i) & 1U));
    rows.push_back(std::move(bits));
  }
  return Json{{"w", p.labels()}, {"F", std::move(rows)}};
}

PresentationPtr presentation_from_json(const Json& j, SizeCaps caps) {
  if (!j.is_object() || !j.contains("w") || !j.contains("F"))
    throw ParseError("presentation JSON needs \"w\" and \"F\"");
  if (!j["w"].is_array() || !j["F"].is_array()) throw ParseError("\"w\" and \"F\" must be arrays");
  std::vector<Label> w;
  for (const auto& l : j["w"]) {
    if (!l.is_number_unsigned()) throw ParseError("labels must be naturals");
    w.push_back(l.get<Label>());
  }
  if (!is_label_set(w)) throw ParseError("\"w\" must be strictly ascending");
  std::vector<Row> rows;
  for (const auto& r : j["F"]) {
    if (!r.is_array() || r.size() != w.size()) throw ParseError("each row of F needs one bit per label of w");
    Row f = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (!r[i].is_number_integer() || (r[i] != 0 && r[i] != 1)) throw ParseError("row entries must be 0 or 1");
      if (r[i] == 1) f |= Row{1} << i;
    }
    rows.push_back(f);
  }
  try {
    return make_presentation(std::move(w), std::move(rows), caps);
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }
}

Json element_to_json(const Element& e) { return Json{{"support", e.indices()}}; }

Element element_from_json(const Json& j, const PresentationPtr& p) {
  if (!j.is_object() || !j.contains("support") || !j["support"].is_array())
    throw ParseError("element JSON needs a \"support\" array");
  std::vector<std::size_t> idx;
  for (const auto& i : j["support"]) {
    if (!i.is_number_unsigned()) throw ParseError("support indices must be naturals");
    idx.push_back(i.get<std::size_t>());
  }
  try {
    return Element::from_indices(p, idx);
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace monkbench
