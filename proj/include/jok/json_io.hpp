// JSON encodings shared by the library and the CLI. Elements carry their
// algebra inline; all other encodings follow the documented shapes.
#pragma once

#include <json.hpp>
#include <string>

#include "jok/algebra.hpp"
#include "jok/correspondence.hpp"
#include "jok/errors.hpp"
#include "jok/orbits.hpp"
#include "jok/peirce.hpp"
#include "jok/spectral.hpp"

namespace jok::io {

using nlohmann::json;

inline Family family_from_string(const std::string& s) {
  if (s == "symR") return Family::SymR;
  if (s == "hermC") return Family::HermC;
  if (s == "hermH") return Family::HermH;
  if (s == "spin") return Family::Spin;
  if (s == "albert") return Family::Albert;
  throw precondition_error("unknown algebra family '" + s +
                           "' (expected symR|hermC|hermH|spin|albert)");
}

inline json algebra_to_json(const Algebra& a) {
  return json{{"family", family_name(a->family)}, {"param", a->param}};
}

inline Algebra algebra_from_json(const json& j) {
  if (!j.contains("family") || !j.contains("param"))
    throw precondition_error("algebra JSON needs \"family\" and \"param\"");
  return make_algebra(family_from_string(j.at("family").get<std::string>()),
                      j.at("param").get<int>());
}

inline json element_to_json(const Element& x) {
  json coords = json::array();
  for (int i = 0; i < x.coords.size(); ++i) coords.push_back(x.coords[i]);
  return json{{"algebra", algebra_to_json(x.algebra)}, {"coords", coords}};
}

inline Element element_from_json(const json& j,
                                 const Algebra& fallback = nullptr) {
  Algebra a = fallback;
  if (j.contains("algebra")) {
    a = algebra_from_json(j.at("algebra"));
    if (fallback && !same_algebra(*a, *fallback))
      throw precondition_error(
          "element algebra does not match the requested --algebra");
  }
  if (!a)
    throw precondition_error(
        "element JSON has no \"algebra\" and no --algebra was given");
  if (!j.contains("coords"))
    throw precondition_error("element JSON needs \"coords\"");
  const auto& jc = j.at("coords");
  Eigen::VectorXd coords(jc.size());
  for (size_t i = 0; i < jc.size(); ++i) coords[i] = jc.at(i).get<double>();
  return Element(a, coords);
}

inline json signature_to_json(const Signature& s) {
  return json::array({s.plus, s.minus});
}

inline json spectral_to_json(const SpectralDecomposition& d) {
  json idem = json::array();
  for (const auto& c : d.idempotents) idem.push_back(element_to_json(c));
  return json{{"eigenvalues", d.eigenvalues},
              {"multiplicities", d.multiplicities},
              {"idempotents", idem},
              {"warnings", d.warnings}};
}

inline json peirce_to_json(const PeirceSystem& sys) {
  return json{{"idempotent", element_to_json(sys.idempotent)},
              {"dims", {sys.dims[0], sys.dims[1], sys.dims[2]}}};
}

inline json frobenius_to_json(const FrobeniusComparison& cmp) {
  auto triple = [](const std::array<Element, 3>& t) {
    return json::array({element_to_json(t[0]), element_to_json(t[1]),
                        element_to_json(t[2])});
  };
  return json{{"paper_triple", triple(cmp.paper_triple)},
              {"oracle_triple", triple(cmp.oracle_triple)},
              {"discrepancy",
               {cmp.discrepancy[0], cmp.discrepancy[1], cmp.discrepancy[2]}}};
}

inline json generic_sum_to_json(const GenericSumReport& r) {
  json devs = json::array();
  for (const auto& d : r.deviations) {
    devs.push_back(
        json{{"seed", d.seed}, {"observed", signature_to_json(d.observed)}});
  }
  return json{{"predicted", signature_to_json(r.predicted)},
              {"trials", r.trials},
              {"matches", r.matches},
              {"deviations", devs}};
}

inline json theta_to_json(const ThetaDescriptor& d) {
  return json{{"nu_symbol", d.nu_symbol},
              {"inducing_chain",
               json{{"S_structure", d.inducing_chain.S_structure},
                    {"xi", element_to_json(d.inducing_chain.xi)},
                    {"chi_symbol", d.inducing_chain.chi_symbol},
                    {"pi_label", d.inducing_chain.pi_label}}},
              {"formula", d.formula},
              {"notes", d.notes}};
}

inline json report_to_json(const CorrespondenceReport& r) {
  json dual;
  if (r.dual_space) dual = *r.dual_space;
  return json{{"stable_range", stable_range_name(r.stable_range)},
              {"total_signature", signature_to_json(r.total_signature)},
              {"dual_space", dual},
              {"extrapolated", r.extrapolated},
              {"extension_unique", r.extension_unique},
              {"notes", r.notes}};
}

}  // namespace jok::io
