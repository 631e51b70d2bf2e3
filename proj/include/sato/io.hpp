#pragma once

#include <string>

#include "json.hpp"
#include "sato/gkm.hpp"
#include "sato/graded_poly.hpp"
#include "sato/partition.hpp"
#include "sato/schubert.hpp"

namespace sato {

using Json = nlohmann::ordered_json;

// Canonical JSON: generators in table order, terms by ascending exponent
// vector, partitions in PartitionOrder, coefficients as "p/q" strings.
Json to_json(const GradedPoly& p);
Json to_json(const Partition& p);
Json to_json(const MayaSequence& s);
Json to_json(const SchubertClass& x);
/// {"n":..,"l":..,"lambda":[..],"values":[{"vertex":[..],"poly":..}]};
/// `lambda` is omitted when not given.
Json to_json(const GKMClass& c, const Partition* lambda = nullptr);

/// Inverse readers; throw std::invalid_argument on schema violations.
GradedPoly graded_poly_from_json(const Json& j);
Partition partition_from_json(const Json& j);
MayaSequence maya_from_json(const Json& j);
SchubertClass schubert_from_json(const Json& j);

/// Human-readable form with ASCII names: psi, L1.., k0.., w, P1.., u,
/// m[i,j], c1.., C1.., u1...; "0" for zero.
std::string pretty(const GradedPoly& p);
std::string pretty_name(const std::string& generator);

}  // namespace sato
