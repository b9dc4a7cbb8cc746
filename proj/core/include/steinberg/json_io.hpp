#pragma once

#include <cstdint>

#include <json.hpp>

#include "steinberg/orbit_catalog.hpp"
#include "steinberg/partial_permutation.hpp"
#include "steinberg/partition.hpp"
#include "steinberg/prime_field.hpp"
#include "steinberg/signed_diagram.hpp"
#include "steinberg/steinberg_maps.hpp"
#include "steinberg/tableau.hpp"

namespace steinberg {

// Partition <-> array of ints.
void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

// Tableau <-> array of row arrays.
void to_json(nlohmann::json& j, const Tableau& t);
void from_json(const nlohmann::json& j, Tableau& t);

// SkewTableau <-> {"outer", "inner", "rows"} with null placeholders standing
// for the inner boxes at the front of each row.
void to_json(nlohmann::json& j, const SkewTableau& t);
void from_json(const nlohmann::json& j, SkewTableau& t);

// SignedYoungDiagram <-> array of sign strings such as "+-+".
void to_json(nlohmann::json& j, const SignedYoungDiagram& d);
void from_json(const nlohmann::json& j, SignedYoungDiagram& d);

// PartialPermutation <-> {"n", "word"}.
void to_json(nlohmann::json& j, const PartialPermutation& tau);
void from_json(const nlohmann::json& j, PartialPermutation& tau);

void to_json(nlohmann::json& j, const ImageClassEntry& entry);
void to_json(nlohmann::json& j, const ImageChecks& checks);
void to_json(nlohmann::json& j, const ImageReport& report);

// Matrices travel as arrays of row arrays of integers; signed values are
// reduced into the field on input.
nlohmann::json matrix_to_json(const PrimeFieldMatrix& m);
PrimeFieldMatrix matrix_from_json(const nlohmann::json& j,
                                  std::uint64_t prime = PrimeFieldMatrix::kDefaultPrime);

}  // namespace steinberg

namespace nlohmann {

// Triple <-> {"T1", "T2", "nu"}.
template <>
struct adl_serializer<steinberg::Triple> {
  static void to_json(json& j, const steinberg::Triple& t);
  static steinberg::Triple from_json(const json& j);
};

// OrbitRep <-> {"tau1", "tau2"}.
template <>
struct adl_serializer<steinberg::OrbitRep> {
  static void to_json(json& j, const steinberg::OrbitRep& omega);
  static steinberg::OrbitRep from_json(const json& j);
};

}  // namespace nlohmann
