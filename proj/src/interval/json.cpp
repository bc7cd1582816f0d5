#include "monkbench/interval/json.hpp"

#include "monkbench/errors.hpp"

namespace monkbench {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  return j[name];
}

std::string string_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_string()) throw ParseError(std::string("\"") + name + "\" must be a string");
  return v.get<std::string>();
}

std::int64_t int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw ParseError(std::string("\"") + name + "\" must be an integer");
  return v.get<std::int64_t>();
}

Json line_to_json(const LineCut& c) {
  switch (c.kind) {
    case LineCut::Kind::NegInfinity: return Json{{"kind", "neg_inf"}};
    case LineCut::Kind::PosInfinity: return Json{{"kind", "pos_inf"}};
    case LineCut::Kind::RationalLeft: return Json{{"kind", "rational_left"}, {"q", rational_string(c.q)}};
    case LineCut::Kind::RationalRight: return Json{{"kind", "rational_right"}, {"q", rational_string(c.q)}};
    case LineCut::Kind::Irrational: return Json{{"kind", "irrational"}, {"d", c.d}, {"r", rational_string(c.q)}};
  }
  return {};
}

LineCut line_from_json(const Json& j) {
  const std::string kind = string_field(j, "kind");
  if (kind == "neg_inf") return LineCut::neg_infinity();
  if (kind == "pos_inf") return LineCut::pos_infinity();
  if (kind == "rational_left") return LineCut::left_of(parse_rational(string_field(j, "q")));
  if (kind == "rational_right") return LineCut::right_of(parse_rational(string_field(j, "q")));
  if (kind == "irrational") {
    try {
      return LineCut::irrational(int_field(j, "d"), parse_rational(string_field(j, "r")));
    } catch (const UsageError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown line cut kind '" + kind + "'");
}

Json endpoint_to_json(const Endpoint& e) {
  switch (e.tag) {
    case Endpoint::Tag::NegInf: return Json{{"tag", "neg_inf"}};
    case Endpoint::Tag::PosInf: return Json{{"tag", "pos_inf"}};
    case Endpoint::Tag::At: break;
  }
  return Json{{"tag", "point"}, {"block", e.point.block}, {"q", rational_string(e.point.q)}};
}

Endpoint endpoint_from_json(const Json& j) {
  const std::string tag = string_field(j, "tag");
  if (tag == "neg_inf") return Endpoint::neg_inf();
  if (tag == "pos_inf") return Endpoint::pos_inf();
  if (tag != "point") throw ParseError("unknown endpoint tag '" + tag + "'");
  Point p;
  p.block = j.contains("block") ? int_field(j, "block") : 0;
  p.q = j.contains("q") ? parse_rational(string_field(j, "q")) : Rational(0);
  return Endpoint::at(p);
}

}  // namespace

Json symcard_to_json(const SymCard& c) {
  switch (c.kind()) {
    case SymCard::Kind::Zero: return "zero";
    case SymCard::Kind::One: return "one";
    case SymCard::Kind::AlephZero: return "aleph0";
    case SymCard::Kind::Fin: return Json{{"kind", "fin"}, {"k", c.value()}};
    case SymCard::Kind::Reg: return Json{{"kind", "reg"}, {"token", c.token()}, {"rank", c.value()}};
  }
  return {};
}

SymCard symcard_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "zero") return SymCard::zero();
    if (s == "one") return SymCard::one();
    if (s == "aleph0") return SymCard::aleph0();
    throw ParseError("unknown cardinal '" + s + "'");
  }
  const std::string kind = string_field(j, "kind");
  if (kind == "fin") {
    std::int64_t k = int_field(j, "k");
    if (k < 0) throw ParseError("finite cardinal must be a natural");
    return SymCard::fin(static_cast<std::uint64_t>(k));
  }
  if (kind == "reg") {
    std::int64_t rank = int_field(j, "rank");
    std::string token = string_field(j, "token");
    if (rank < 0 || token.empty()) throw ParseError("regular cardinal needs a token and a natural rank");
    return SymCard::reg(std::move(token), static_cast<std::uint64_t>(rank));
  }
  throw ParseError("unknown cardinal kind '" + kind + "'");
}

Json cut_to_json(const Cut& c) {
  switch (c.kind) {
    case Cut::Kind::Position: return Json{{"kind", "position"}, {"k", c.index}};
    case Cut::Kind::Line: return line_to_json(c.line);
    case Cut::Kind::InBlock: return Json{{"kind", "in_block"}, {"block", c.index}, {"cut", line_to_json(c.line)}};
    case Cut::Kind::BetweenBlocks: return Json{{"kind", "between_blocks"}, {"block", c.index}};
    case Cut::Kind::Top: return Json{{"kind", "top"}};
  }
  return {};
}

Cut cut_from_json(const Json& j) {
  const std::string kind = string_field(j, "kind");
  if (kind == "position") return Cut::position(int_field(j, "k"));
  if (kind == "in_block") return Cut::in_block(int_field(j, "block"), line_from_json(field(j, "cut")));
  if (kind == "between_blocks") return Cut::between_blocks(int_field(j, "block"));
  if (kind == "top") return Cut::top();
  return Cut::on_line(line_from_json(j));
}

Json interval_elem_to_json(const IntervalElem& x) {
  Json out = Json::array();
  for (const auto& p : x.parts()) out.push_back(Json::array({endpoint_to_json(p.lo), endpoint_to_json(p.hi)}));
  return out;
}

IntervalElem interval_elem_from_json(const Json& j, const LinOrder& order) {
  if (!j.is_array()) throw ParseError("interval element must be a list of [lo, hi] pairs");
  std::vector<Interval> parts;
  for (const auto& pr : j) {
    if (!pr.is_array() || pr.size() != 2) throw ParseError("each interval is a [lo, hi] pair");
    parts.push_back({endpoint_from_json(pr[0]), endpoint_from_json(pr[1])});
  }
  try {
    return IntervalElem(order, std::move(parts));
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace monkbench
