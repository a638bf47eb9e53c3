#pragma once

#include <json.hpp>

#include "tildeiso/isometry.hpp"
#include "tildeiso/overlap.hpp"
#include "tildeiso/transform.hpp"
#include "tildeiso/witness.hpp"

// JSON views of the report types. Keys are emitted in a fixed order and no
// value is a float, so parse + re-serialize is byte-identical.
namespace tildeiso {

using Json = nlohmann::ordered_json;

Json to_json(const EditOp& op, bool binary_alphabet = true);
Json to_json(const WitnessVerdict& verdict);
Json to_json(const ErrorOverlap& overlap, const Word& f);
Json to_json(const Construction& c);
Json to_json(const ClassificationReport& report);

// Compact per-shift summary like "r1:q2:SR/RS r2:q0 r3:q1:R".
std::string overlap_digest(const std::vector<ErrorOverlap>& overlaps);

}  // namespace tildeiso
