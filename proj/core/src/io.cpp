#include "cycaut/io.hpp"

#include <json.hpp>

namespace cycaut {

namespace {

using json = nlohmann::json;

json order_json(const BigInt& v) {
  if (v <= std::numeric_limits<u64>::max()) return json(static_cast<u64>(v));
  return json(v.str());
}

json evidence_json(const AutClassification& c) {
  return std::visit(
      [&](const auto& e) -> json {
        using E = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<E, SymmetricEvidence>) {
          return {{"elementary", e.elementary}};
        } else if constexpr (std::is_same_v<E, AffineEvidence>) {
          return {{"multipliers", e.multipliers}, {"semidirect", {e.multipliers.size(), c.n}}};
        } else if constexpr (std::is_same_v<E, ProjectiveEvidence>) {
          return {{"d", e.d}, {"t", e.t}, {"labeling_unit", e.labeling_unit}};
        } else if constexpr (std::is_same_v<E, GolayEvidence>) {
          json j{{"dimension", e.dimension}};
          j["min_distance"] = e.min_distance ? json(*e.min_distance) : json(nullptr);
          return j;
        } else {
          json j{{"blocks", e.blocks}, {"multipliers", e.multipliers}};
          if (e.sylow) {
            j["sylow"] = {{"I", e.sylow->I}, {"s", e.sylow->s}, {"at_cap", e.sylow->at_cap}, {"exact", e.sylow->exact}};
          } else {
            j["sylow"] = nullptr;
          }
          return j;
        }
      },
      c.evidence);
}

template <class T>
T field_as(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("descriptor: missing \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("descriptor: bad value for \"") + key + "\"");
  }
}

}  // namespace

Descriptor parse_descriptor(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("descriptor: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("descriptor: expected a JSON object");
  const auto n = field_as<u64>(j, "n");
  try {
    if (j.contains("connection")) {
      const bool directed = j.contains("directed") ? field_as<bool>(j, "directed") : false;
      return CirculantGraph(n, field_as<std::vector<u64>>(j, "connection"), directed);
    }
    const auto q = field_as<u64>(j, "q");
    const auto seeds = field_as<std::vector<u64>>(j, "defining_set");
    for (u64 s : seeds) {
      if (s >= n) throw ParseError("descriptor: defining set element " + std::to_string(s) + " >= n");
    }
    if (!is_prime_power(q)) throw ParseError("descriptor: q = " + std::to_string(q) + " is not a prime power");
    return CyclicCode::from_defining_set(n, Field::of_order(q), seeds);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string to_json(const CyclicCode& code) {
  return json{{"n", code.length()}, {"q", code.q()}, {"defining_set", code.defining_set()}}.dump();
}

std::string to_json(const CirculantGraph& g) {
  return json{{"n", g.order()}, {"connection", g.connection()}, {"directed", g.directed()}}.dump();
}

std::string to_json(const Descriptor& d) {
  return std::visit([](const auto& x) { return to_json(x); }, d);
}

std::string to_json(const AutClassification& c) {
  json j{{"tag", to_string(c.tag)},
         {"name", c.name()},
         {"n", c.n},
         {"order", order_json(c.order)},
         {"order_exact", c.order_exact},
         {"evidence", evidence_json(c)}};
  return j.dump();
}

std::string to_text(const AutClassification& c) {
  std::string s = c.name();
  if (c.tag == AutTag::Symmetric && std::get<SymmetricEvidence>(c.evidence).elementary) s += " (elementary)";
  s += c.order_exact ? ", order " : ", order >= ";
  s += c.order.str();
  if (const auto* e = std::get_if<ImprimitiveEvidence>(&c.evidence); e && e->sylow) {
    s += ", Sylow p-subgroup order p^" + std::to_string(e->sylow->s) + (e->sylow->exact ? "" : " or more") +
         " (I = " + std::to_string(e->sylow->I) + (e->sylow->at_cap ? ", at cap" : "") + ")";
  }
  return s;
}

std::string to_json(const EquivalenceWitness& w) {
  json j{{"equivalent", w.equivalent()},
         {"checked", w.candidates_checked},
         {"space", w.search_space}};
  j["witness"] = w.equivalent() ? json(w.witness_string()) : json(nullptr);
  if (w.equivalent()) j["permutation"] = w.permutation().to_string();
  if (!w.reason.empty()) j["reason"] = w.reason;
  if (!w.warnings.empty()) j["warnings"] = w.warnings;
  return j.dump();
}

std::string to_text(const EquivalenceWitness& w) {
  if (w.equivalent()) return "equivalent, witness " + w.witness_string();
  if (!w.reason.empty()) return "not equivalent (" + w.reason + ")";
  return "not equivalent, checked " + std::to_string(w.candidates_checked) + " in " + w.search_space;
}

}  // namespace cycaut
