#ifndef MONKBENCH_INTERVAL_JSON_HPP
#define MONKBENCH_INTERVAL_JSON_HPP

#include "monkbench/ba/json.hpp"
#include "monkbench/interval/cut.hpp"

namespace monkbench {

/// "zero", "one", "aleph0", {"kind":"fin","k":k}, {"kind":"reg","token":t,"rank":r}.
Json symcard_to_json(const SymCard& c);
SymCard symcard_from_json(const Json& j);

/// {"kind":"position","k":k}, {"kind":"neg_inf"}, {"kind":"pos_inf"},
/// {"kind":"rational_left"|"rational_right","q":"n/d"},
/// {"kind":"irrational","d":d,"r":"n/d"},
/// {"kind":"in_block","block":i,"cut":<line cut>},
/// {"kind":"between_blocks","block":i}, {"kind":"top"}.
Json cut_to_json(const Cut& c);
Cut cut_from_json(const Json& j);

/// [[lo, hi], ...] with endpoints {"tag":"neg_inf"|"pos_inf"} or
/// {"tag":"point","block":b,"q":"n/d"}.
Json interval_elem_to_json(const IntervalElem& x);
IntervalElem interval_elem_from_json(const Json& j, const LinOrder& order);

}  // namespace monkbench

#endif  // MONKBENCH_INTERVAL_JSON_HPP
