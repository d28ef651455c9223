// JSON encoding of space specs, targets, configs, and results.
// Complex numbers are two-element arrays [re, im].
#pragma once

#include <nlohmann/json_fwd.hpp>

#include "rka/nbest.hpp"
#include "rka/result.hpp"
#include "rka/space.hpp"
#include "rka/target.hpp"

namespace rka::io {

using json = nlohmann::json;

json complex_to_json(Complex c);
Complex complex_from_json(const json& j);

json space_to_json(const SpaceSpec& spec);
SpaceSpec space_from_json(const json& j);

json target_to_json(const TargetSpec& t);
TargetSpec target_from_json(const json& j);

json result_to_json(const ApproxResult& r);

json tuple_to_json(const ParameterTuple& t);
ParameterTuple tuple_from_json(const json& j);

}  // namespace rka::io
