#ifndef MONKBENCH_BA_JSON_HPP
#define MONKBENCH_BA_JSON_HPP

#include <json.hpp>

#include "monkbench/ba/presentation.hpp"

namespace monkbench {

using Json = nlohmann::ordered_json;

/// {"w":[labels ascending],"F":[[bits in w order],...]}; rows are written in
/// canonical order, so Element support indices refer to that order.
Json presentation_to_json(const Presentation& p);
/// ParseError on malformed input.
PresentationPtr presentation_from_json(const Json& j, SizeCaps caps = {});

/// {"support":[row indices]}.
Json element_to_json(const Element& e);
Element element_from_json(const Json& j, const PresentationPtr& p);

/// Reads a whole file as JSON; ParseError on I/O or syntax failure.
Json read_json_file(const std::string& path);

}  // namespace monkbench

#endif  // MONKBENCH_BA_JSON_HPP
