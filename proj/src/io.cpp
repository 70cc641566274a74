#include "harmonia/io.hpp"

#include <stdexcept>

namespace harmonia {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

Json integer_to_json(const Integer& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) bad("integer string '" + j.get<std::string>() + "'");
    return z;
  }
  bad("expected an integer");
}

Json to_json(const Cyclotomic& x) {
  Json coeffs = Json::array();
  for (int i = 0; i < x.degree(); ++i) {
    Rational q = x.coeff(i);
    coeffs.push_back(Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())}));
  }
  return Json{{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  const Json& n = field(j, "conductor");
  if (!n.is_number_integer() || n.get<long>() < 1 || n.get<long>() > 100000) bad("conductor");
  const Json& cs = field(j, "coeffs");
  if (!cs.is_array()) bad("coeffs must be an array");
  std::vector<Rational> coeffs;
  for (const auto& c : cs) {
    if (!c.is_array() || c.size() != 2) bad("coefficient must be [num, den]");
    Integer den = integer_from_json(c[1]);
    if (den == 0) bad("zero denominator");
    coeffs.push_back(make_rational(integer_from_json(c[0]), den));
  }
  return Cyclotomic(n.get<int>(), coeffs);
}

Json to_json(const HPoly& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms())
    terms.push_back(Json{{"exp", Json::array({m.e[0], m.e[1], m.e[2], m.e[3]})}, {"coeff", to_json(c)}});
  return terms;
}

HPoly hpoly_from_json(const Json& j) {
  if (!j.is_array()) bad("polynomial must be a term list");
  HPoly f;
  for (const auto& t : j) {
    const Json& e = field(t, "exp");
    if (!e.is_array() || e.size() != 4) bad("exp must have four entries");
    Monomial m;
    for (int i = 0; i < 4; ++i) {
      if (!e[i].is_number_integer() || e[i].get<long>() < 0 || e[i].get<long>() > 100000) bad("exponent");
      m.e[i] = e[i].get<int>();
    }
    f.add_term(m, cyclotomic_from_json(field(t, "coeff")));
  }
  return f;
}

Space space_from_tag(const std::string& tag) {
  if (tag == "S3" || tag == "T" || tag == "O" || tag == "I") return Space::parse(tag, 0);
  if (tag.size() >= 2 && (tag[0] == 'L' || tag[0] == 'D')) {
    std::size_t used = 0;
    int param = 0;
    try {
      param = std::stoi(tag.substr(1), &used);
    } catch (const std::exception&) {
      bad("space tag '" + tag + "'");
    }
    if (used != tag.size() - 1) bad("space tag '" + tag + "'");
    return Space::parse(std::string(1, tag[0]), param);
  }
  bad("space tag '" + tag + "'");
}

Json to_json(const ModeBasis& mb) {
  Json base = Json::array(), basis = Json::array();
  for (const auto& f : mb.base_modes) base.push_back(to_json(f));
  for (const auto& f : mb.basis) basis.push_back(to_json(f));
  return Json{{"space", mb.space.tag()}, {"k", mb.k},         {"conductor", mb.conductor},
              {"base_modes", base},      {"basis", basis},    {"dimension", mb.dimension}};
}

ModeBasis mode_basis_from_json(const Json& j) {
  ModeBasis mb;
  const Json& s = field(j, "space");
  if (!s.is_string()) bad("space must be a string");
  mb.space = space_from_tag(s.get<std::string>());
  const Json& k = field(j, "k");
  if (!k.is_number_integer() || k.get<long>() < 0 || k.get<long>() > 100000) bad("k");
  mb.k = k.get<int>();
  if (j.contains("conductor") && j["conductor"].is_number_integer()) mb.conductor = j["conductor"].get<int>();
  for (const auto& f : field(j, "base_modes")) mb.base_modes.push_back(hpoly_from_json(f));
  const Json& basis = field(j, "basis");
  if (!basis.is_array()) bad("basis must be an array");
  for (const auto& f : basis) mb.basis.push_back(hpoly_from_json(f));
  mb.dimension = j.contains("dimension") && j["dimension"].is_number_integer()
                     ? j["dimension"].get<long>()
                     : static_cast<long>(mb.basis.size());
  return mb;
}

Json to_json(const BinaryGroup& g) {
  Json elems = Json::array();
  for (const auto& e : g.elements) elems.push_back(Json{{"z", to_json(e.z)}, {"w", to_json(e.w)}});
  return Json{{"name", g.name}, {"order", g.order()}, {"conductor", g.conductor}, {"elements", elems}};
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj{{"name", c.name}, {"pass", c.pass}};
    if (!c.witness.empty()) cj["witness"] = c.witness;
    checks.push_back(cj);
  }
  return Json{{"subject", r.subject}, {"overall", r.overall()}, {"checks", checks}};
}

}  // namespace harmonia
