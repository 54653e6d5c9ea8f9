#include "swdeg/json_io.hpp"

#include "swdeg/errors.hpp"

namespace swdeg {

using nlohmann::json;

namespace {

mpz_class mpz_from_json(const json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  throw PreconditionError("expected an integer (number or decimal string)");
}

}  // namespace

json group_to_json(const Group& group) {
  if (group.is_abelian()) {
    return json{{"kind", "abelian"}, {"orders", group.cyclic_orders()}};
  }
  return json{{"kind", "tabled"},
              {"name", group.table().name},
              {"order", group.order()}};
}

Group group_from_json(const json& j) {
  if (j.at("kind").get<std::string>() != "abelian") {
    throw UnsupportedError(
        "only abelian groups can be reconstructed from JSON (tabled groups "
        "need their character table file)");
  }
  return Group::abelian(j.at("orders").get<std::vector<long>>());
}

json pin2_to_json(const Pin2Elem& p) {
  json h = json::array();
  for (const auto& v : p.h_coeffs()) h.push_back(v.get_str());
  return json{{"h", h}, {"c", p.c_coeff().get_str()}};
}

Pin2Elem pin2_from_json(const json& j) {
  std::vector<mpz_class> h;
  for (const auto& v : j.at("h")) h.push_back(mpz_from_json(v));
  return Pin2Elem::from_parts(std::move(h), mpz_from_json(j.at("c")));
}

json equiv_to_json(const EquivElem& x) {
  json terms = json::array();
  for (const auto& [i, p] : x.terms()) {
    json term = pin2_to_json(p);
    term["irrep"] = x.group().is_abelian() ? json(x.group().irrep_tuple(i))
                                           : json(i);
    terms.push_back(std::move(term));
  }
  return json{{"group", group_to_json(x.group())}, {"terms", std::move(terms)}};
}

EquivElem equiv_from_json(const json& j) {
  Group group = group_from_json(j.at("group"));
  EquivElem x(group);
  for (const auto& term : j.at("terms")) {
    std::size_t irrep = group.irrep_index(term.at("irrep").get<std::vector<long>>());
    x.set_coeff(irrep, x.coeff(irrep) + pin2_from_json(term));
  }
  return x;
}

json vr_to_json(const VirtualRep& v) {
  json coeffs = json::array();
  for (const auto& [i, c] : v.coeffs()) {
    json entry{{"mult", c.get_str()}};
    entry["irrep"] =
        v.group().is_abelian() ? json(v.group().irrep_tuple(i)) : json(i);
    coeffs.push_back(std::move(entry));
  }
  return json{{"group", group_to_json(v.group())}, {"coeffs", std::move(coeffs)}};
}

VirtualRep vr_from_json(const json& j) {
  Group group = group_from_json(j.at("group"));
  VirtualRep v(group);
  for (const auto& entry : j.at("coeffs")) {
    std::size_t irrep = group.irrep_index(entry.at("irrep").get<std::vector<long>>());
    v.set_coeff(irrep, v.coeff(irrep) + mpz_from_json(entry.at("mult")));
  }
  return v;
}

json report_to_json(const VerificationReport& r) {
  return json{{"identity", r.identity},
              {"pass", r.pass},
              {"witnesses", r.witnesses},
              {"params", r.params},
              {"millis", r.millis}};
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.identity = j.at("identity").get<std::string>();
  r.pass = j.at("pass").get<bool>();
  r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  r.params = j.at("params").get<std::map<std::string, std::string>>();
  r.millis = j.value("millis", 0.0);
  return r;
}

}  // namespace swdeg
