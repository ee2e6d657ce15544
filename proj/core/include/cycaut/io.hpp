#pragma once

// JSON descriptors for codes and graphs, and text / JSON renderings of
// classifications and equivalence verdicts.

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "cycaut/autgroup.hpp"
#include "cycaut/codes.hpp"
#include "cycaut/equivalence.hpp"
#include "cycaut/graphs.hpp"

namespace cycaut {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Descriptor = std::variant<CyclicCode, CirculantGraph>;

/// `{"n":7,"q":2,"defining_set":[1]}` or
/// `{"n":9,"connection":[1,8],"directed":false}`. Throws ParseError.
Descriptor parse_descriptor(std::string_view json_text);

std::string to_json(const CyclicCode& code);
std::string to_json(const CirculantGraph& g);
std::string to_json(const Descriptor& d);

/// `{"tag":..,"name":..,"order":..,"order_exact":..,"evidence":{..}}`
std::string to_json(const AutClassification& c);
/// `PGammaL(3,2), order 168`
std::string to_text(const AutClassification& c);

/// `{"equivalent":..,"witness":..,"checked":..,"space":..}`
std::string to_json(const EquivalenceWitness& w);
/// `equivalent, witness multiplier a=2`
std::string to_text(const EquivalenceWitness& w);

}  // namespace cycaut
