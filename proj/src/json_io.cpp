#include "sympieri/json_io.hpp"

#include <stdexcept>

#include "sympieri/character.hpp"

namespace sympieri {

namespace {

nlohmann::ordered_json diagram_to_json(const YoungDiagram& d) {
  return nlohmann::ordered_json(d.rows());
}

YoungDiagram diagram_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("diagram must be an array of rows");
  return YoungDiagram(j.get<std::vector<int>>());
}

nlohmann::ordered_json envelope(int rank) {
  nlohmann::ordered_json out;
  out["group"] = "Sp";
  out["rank"] = rank;
  out["summands"] = nlohmann::ordered_json::array();
  return out;
}

void check_envelope(const nlohmann::json& j) {
  if (!j.is_object() || j.value("group", "") != "Sp" || !j.contains("rank") ||
      !j.contains("summands"))
    throw std::invalid_argument("expected a {group, rank, summands} object");
}

}  // namespace

nlohmann::ordered_json decomposition_to_json(const Decomposition& dec, bool with_dimension) {
  nlohmann::ordered_json out = envelope(dec.rank);
  long long total_dim = 0;
  for (auto it = dec.terms.rbegin(); it != dec.terms.rend(); ++it) {
    nlohmann::ordered_json summand;
    summand["diagram"] = diagram_to_json(it->first);
    summand["multiplicity"] = it->second;
    out["summands"].push_back(std::move(summand));
    if (with_dimension) total_dim += it->second * sp_dim(it->first, dec.rank);
  }
  out["total_multiplicity"] = dec.total_multiplicity();
  if (with_dimension) out["total_dimension"] = total_dim;
  return out;
}

Decomposition decomposition_from_json(const nlohmann::json& j) {
  check_envelope(j);
  Decomposition dec{j.at("rank").get<int>(), {}};
  for (const auto& summand : j.at("summands"))
    dec.add(diagram_from_json(summand.at("diagram")), summand.at("multiplicity").get<long long>());
  return dec;
}

nlohmann::ordered_json branch_to_json(const std::vector<BranchTerm>& terms, int n,
                                      bool with_dimension) {
  nlohmann::ordered_json out = envelope(n);
  long long total_mult = 0;
  long long total_dim = 0;
  for (const BranchTerm& term : terms) {
    nlohmann::ordered_json summand;
    summand["diagram"] = diagram_to_json(term.e);
    long long mult = 0;
    nlohmann::ordered_json sl2 = nlohmann::ordered_json::array();
    for (const auto& [ell, count] : term.sl2) {
      sl2.push_back({{"weight", ell}, {"multiplicity", count}});
      mult += count;
      if (with_dimension) total_dim += count * (ell + 1) * sp_dim(term.e, n);
    }
    summand["multiplicity"] = mult;
    summand["sl2"] = std::move(sl2);
    out["summands"].push_back(std::move(summand));
    total_mult += mult;
  }
  out["total_multiplicity"] = total_mult;
  if (with_dimension) out["total_dimension"] = total_dim;
  return out;
}

std::vector<BranchTerm> branch_from_json(const nlohmann::json& j) {
  check_envelope(j);
  std::vector<BranchTerm> out;
  for (const auto& summand : j.at("summands")) {
    BranchTerm term{diagram_from_json(summand.at("diagram")), {}};
    for (const auto& entry : summand.at("sl2"))
      term.sl2[entry.at("weight").get<int>()] = entry.at("multiplicity").get<long long>();
    out.push_back(std::move(term));
  }
  return out;
}

}  // namespace sympieri
