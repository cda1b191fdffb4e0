#include "calogero/json_io.hpp"

namespace calogero {

ordered_json poly_to_json(const Poly& p, bool even) {
  ordered_json j;
  j["n"] = p.nvars();
  j["even"] = even;
  ordered_json msym_arr = ordered_json::array();
  for (const auto& [mu, c] : expand_in_msym(p, even)) {
    ordered_json entry;
    entry["mu"] = mu;
    entry["coeff"] = rational_str(c);
    msym_arr.push_back(entry);
  }
  j["msym"] = msym_arr;
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : p.sorted_terms()) {
    ordered_json entry;
    std::vector<int> expo(e.begin(), e.begin() + p.nvars());
    entry["e"] = expo;
    entry["coeff"] = rational_str(c);
    terms.push_back(entry);
  }
  j["terms"] = terms;
  return j;
}

ordered_json scalar_to_json(const ExactScalar& s) {
  ordered_json arr = ordered_json::array();
  for (const auto& [key, coeff] : s.terms()) {
    ordered_json entry;
    entry["halfPiExp"] = key.first;
    entry["sqrtOmega"] = key.second;
    entry["coeff"] = rational_str(coeff);
    arr.push_back(entry);
  }
  return arr;
}

ordered_json params_to_json(const Params& p) {
  ordered_json j;
  j["family"] = std::string(1, family_char(p.family));
  j["n"] = p.n;
  j["g0"] = rational_str(p.g0);
  j["g1"] = rational_str(p.g1);
  j["omega"] = rational_str(p.omega);
  return j;
}

ordered_json ortho_to_json(const OrthoPoly& p) {
  ordered_json j;
  j["schemaVersion"] = kSchemaVersion;
  ordered_json pj = params_to_json(p.params);
  for (auto& [k, v] : pj.items()) j[k] = v;
  j["lambda"] = p.lambda;
  j["normalization"] = p.normalization == Normalization::monic ? "monic" : "pieri";
  j["poly"] = poly_to_json(p.poly, p.params.family == Family::B);
  return j;
}

ordered_json decomposition_to_json(const HarmonicDecomposition& dec, const Params& params) {
  ordered_json j;
  j["schemaVersion"] = kSchemaVersion;
  ordered_json pj = params_to_json(params);
  for (auto& [k, v] : pj.items()) j[k] = v;
  j["lambda"] = dec.lambda;
  ordered_json terms = ordered_json::array();
  for (const auto& t : dec.terms) {
    ordered_json entry;
    entry["m"] = t.m;
    ordered_json radial = ordered_json::array();
    for (const auto& c : t.radial) radial.push_back(rational_str(c));
    entry["radial"] = radial;
    entry["harmonic"] = poly_to_json(t.harmonic, false);
    terms.push_back(entry);
  }
  j["terms"] = terms;
  return j;
}

Params params_from_json(const ordered_json& j) {
  Params p;
  p.family = parse_family(j.at("family").get<std::string>());
  p.n = j.at("n").get<int>();
  p.g0 = parse_rational(j.at("g0").get<std::string>());
  p.g1 = parse_rational(j.at("g1").get<std::string>());
  p.omega = parse_rational(j.at("omega").get<std::string>());
  p.validate();
  return p;
}

Poly poly_from_json(const ordered_json& j) {
  int n = j.at("n").get<int>();
  Poly p(n);
  if (j.contains("terms")) {
    for (const auto& entry : j.at("terms")) {
      auto expo = entry.at("e").get<std::vector<int>>();
      Poly::Expo e{};
      for (int i = 0; i < n && i < static_cast<int>(expo.size()); ++i)
        e[i] = static_cast<int16_t>(expo[static_cast<std::size_t>(i)]);
      p.add_term(e, parse_rational(entry.at("coeff").get<std::string>()));
    }
    return p;
  }
  bool even = j.value("even", false);
  for (const auto& entry : j.at("msym")) {
    Partition mu = entry.at("mu").get<Partition>();
    p += msym(mu, n, even) * parse_rational(entry.at("coeff").get<std::string>());
  }
  return p;
}

}  // namespace calogero
