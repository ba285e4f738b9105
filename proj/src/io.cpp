#include "flagpieri/io.hpp"

#include <algorithm>

#include "flagpieri/error.hpp"

namespace flagpieri {

namespace {

std::vector<std::pair<std::string, Coefficient>> sorted_records(const SchubertExpansion& e) {
  std::vector<std::pair<std::string, Coefficient>> records;
  for (const auto& [u, c] : e.terms()) records.emplace_back(to_string(u), c);
  std::sort(records.begin(), records.end());
  return records;
}

}  // namespace

nlohmann::json expansion_to_json(const SchubertExpansion& e) {
  auto out = nlohmann::json::array();
  for (const auto& [perm, coeff] : sorted_records(e)) {
    out.push_back({{"perm", perm}, {"coeff", coeff}});
  }
  return out;
}

SchubertExpansion expansion_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expansion must be a JSON array");
  std::vector<std::pair<Permutation, Coefficient>> records;
  int ambient = 0;
  for (const auto& record : j) {
    if (!record.is_object() || !record.contains("perm") || !record.contains("coeff") ||
        !record["perm"].is_string() || !record["coeff"].is_number_integer()) {
      throw ParseError("expansion records must be {\"perm\": string, \"coeff\": integer}");
    }
    auto u = parse_permutation(record["perm"].get<std::string>());
    ambient = std::max(ambient, u.degree());
    records.emplace_back(std::move(u), record["coeff"].get<Coefficient>());
  }
  SchubertExpansion out(ambient);
  for (const auto& [u, c] : records) {
    if (u.degree() != ambient) throw ParseError("expansion keys must share one degree");
    out.add(u, c);
  }
  return out;
}

nlohmann::json path_to_json(const BruhatPath& path) {
  auto steps = nlohmann::json::array();
  for (const auto& t : path.steps) steps.push_back({t.a, t.b});
  auto intermediates = nlohmann::json::array();
  for (const auto& w : path.chain()) intermediates.push_back(to_string(w));
  return {{"start", to_string(path.start)},
          {"k", path.k},
          {"steps", steps},
          {"intermediates", intermediates}};
}

BruhatPath path_from_json(const nlohmann::json& j) {
  try {
    BruhatPath path{parse_permutation(j.at("start").get<std::string>()), j.at("k").get<int>(), {}};
    for (const auto& step : j.at("steps")) {
      if (!step.is_array() || step.size() != 2) throw ParseError("steps must be [a, b] pairs");
      path.steps.emplace_back(step[0].get<int>(), step[1].get<int>());
    }
    path.validate();
    if (j.contains("intermediates")) {
      const auto chain = path.chain();
      const auto& listed = j.at("intermediates");
      if (listed.size() != chain.size()) throw ParseError("intermediates do not match the steps");
      for (std::size_t i = 0; i < chain.size(); ++i) {
        if (parse_permutation(listed[i].get<std::string>()) != chain[i]) {
          throw ParseError("intermediates do not match the steps");
        }
      }
    }
    return path;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed path: ") + e.what());
  } catch (const OutOfRange& e) {
    throw ParseError(std::string("malformed path: ") + e.what());
  }
}

std::string expansion_to_text(const SchubertExpansion& e) {
  std::string out;
  for (const auto& [perm, coeff] : sorted_records(e)) {
    out += perm + ' ' + std::to_string(coeff) + '\n';
  }
  return out;
}

std::string path_to_text(const BruhatPath& path) {
  std::string out = to_string(path.start);
  auto w = path.start;
  for (const auto& t : path.steps) {
    w = apply_transposition(w, t);
    out += " -(" + std::to_string(t.a) + "," + std::to_string(t.b) + ")-> " + to_string(w);
  }
  return out;
}

}  // namespace flagpieri
