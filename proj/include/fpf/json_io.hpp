#ifndef FPF_JSON_IO_HPP
#define FPF_JSON_IO_HPP

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "fpf/freyd.hpp"

// Wire formats:
//   ring    {"kind":"Z"} | {"kind":"Zmod","n":8} | {"kind":"GFp","p":5}
//           (optional "side":"R" marks the opposite ring)
//   module  {"gens":g,"rel":[[col],[col],...]} with column-major integer
//           relation columns of length g
//   functor {"rep":module} | {"tensor":module} | {"ext1":module}
//           | {"arrow":{"X":module,"Y":module,"phi":[[col],...]}}
// Entries that fit in 64 bits are numbers; larger ones are decimal strings.

namespace fpf {

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json ring_to_json(const RingSpec& ring);
RingSpec ring_from_json(const nlohmann::json& j);
// Accepts "Z", "Zmod:8", "GFp:5" or the JSON object form.
RingSpec ring_from_string(const std::string& s);

nlohmann::json module_to_json(const FpModule& m);
FpModule module_from_json(const nlohmann::json& j, const RingSpec& ring);

nlohmann::json functor_to_json(const FpFunctor& f);
FpFunctor functor_from_json(const nlohmann::json& j, const RingSpec& ring);

nlohmann::json invariants_to_json(const InvariantFactors& inv);

}  // namespace fpf

#endif
