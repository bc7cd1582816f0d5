#include "monkbench/forcing/json.hpp"

#include <algorithm>

#include "monkbench/errors.hpp"

namespace monkbench {

namespace {

Json row_bits(Row f, std::size_t width) {
  Json bits = Json::array();
  for (std::size_t i = 0; i < width; ++i) bits.push_back(static_cast<int>((f >> i) & 1U));
  return bits;
}

std::vector<Label> labels_from_json(const Json& j, const char* field) {
  if (!j.is_array()) throw ParseError(std::string("\"") + field + "\" must be an array of labels");
  std::vector<Label> out;
  for (const auto& l : j) {
    if (!l.is_number_unsigned()) throw ParseError(std::string("\"") + field + "\" entries must be naturals");
    out.push_back(l.get<Label>());
  }
  return out;
}

}  // namespace

Json cutoff_to_json(Cutoff c) { return c.is_infinite() ? Json("inf") : Json(c.label()); }

Json delta_family_to_json(const DeltaFamily& fam) {
  Json conds = Json::array();
  for (const auto& c : fam.conditions) conds.push_back(presentation_to_json(*c));
  Json maps = Json::array();
  for (const auto& h : fam.maps) {
    Json pairs = Json::array();
    for (std::size_t i = 0; i < h.source().size(); ++i) pairs.push_back(Json::array({h.source()[i], h.target()[i]}));
    maps.push_back(std::move(pairs));
  }
  return Json{{"conditions", std::move(conds)}, {"root", fam.root}, {"maps", std::move(maps)}};
}

DeltaFamily delta_family_from_json(const Json& j, const PosetBounds& bounds) {
  if (!j.is_object() || !j.contains("conditions") || !j.contains("root") || !j.contains("maps"))
    throw ParseError("family JSON needs \"conditions\", \"root\" and \"maps\"");
  if (!j["conditions"].is_array() || !j["maps"].is_array()) throw ParseError("\"conditions\" and \"maps\" must be arrays");
  DeltaFamily fam;
  for (const auto& c : j["conditions"]) fam.conditions.push_back(presentation_from_json(c, bounds.caps()));
  for (const auto& c : fam.conditions) {
    try {
      bounds.check(*c);
    } catch (const UsageError& e) {
      throw ParseError(e.what());
    }
  }
  fam.root = labels_from_json(j["root"], "root");
  if (fam.conditions.empty()) throw ParseError("family has no conditions");
  const auto& w0 = fam.conditions[0]->labels();
  std::size_t l = 0;
  for (const auto& m : j["maps"]) {
    if (!m.is_array()) throw ParseError("each map must be an array of pairs");
    std::vector<std::pair<Label, Label>> pairs;
    for (const auto& pr : m) {
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_unsigned() || !pr[1].is_number_unsigned())
        throw ParseError("map entries must be [label, label] pairs");
      pairs.emplace_back(pr[0].get<Label>(), pr[1].get<Label>());
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<Label> src, dst;
    for (const auto& [a, b] : pairs) {
      src.push_back(a);
      dst.push_back(b);
    }
    if (src != w0)
      throw PreconditionError("b", "map " + std::to_string(l) + " is not defined on exactly w^p0");
    if (!is_label_set(dst)) throw PreconditionError("b", "map " + std::to_string(l) + " is not order-preserving");
    fam.maps.emplace_back(std::move(src), std::move(dst));
    ++l;
  }
  return fam;
}

Json amalgam_instance_to_json(const AmalgamInstance& inst) {
  Json j = delta_family_to_json(inst.family);
  j["tau"] = inst.tau.to_string();
  j["alpha0"] = inst.alpha0;
  return j;
}

AmalgamInstance amalgam_instance_from_json(const Json& j, const PosetBounds& bounds) {
  DeltaFamily fam = delta_family_from_json(j, bounds);
  if (!j.contains("tau") || !j["tau"].is_string()) throw ParseError("instance needs a \"tau\" string");
  if (!j.contains("alpha0")) throw ParseError("instance needs \"alpha0\"");
  Term tau = Term::parse(j["tau"].get<std::string>());
  return AmalgamInstance{std::move(fam), std::move(tau), labels_from_json(j["alpha0"], "alpha0")};
}

Json amalgam_result_to_json(const AmalgamResult& r, const AmalgamInstance& inst) {
  Json facts = Json::array();
  for (const auto& f : r.certificate.facts) facts.push_back(Json{{"name", f.name}, {"pass", f.pass}, {"detail", f.detail}});
  const std::size_t w0 = inst.family.conditions[0]->width();
  return Json{{"pass", r.certificate.all_pass()},
              {"facts", std::move(facts)},
              {"q", presentation_to_json(*r.q)},
              {"tau_star", r.tau_star.to_string()},
              {"gamma", cutoff_to_json(r.pair.gamma)},
              {"f0", row_bits(r.pair.f0, w0)},
              {"f1", row_bits(r.pair.f1, w0)},
              {"g", row_bits(r.g, r.q->width())}};
}

}  // namespace monkbench
