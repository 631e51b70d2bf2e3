#include "sato/io.hpp"

#include <sstream>
#include <stdexcept>

namespace sato {

Json to_json(const GradedPoly& p) {
  Json gens = Json::array();
  for (const auto& g : p.table().generators()) gens.push_back({{"name", g.name}, {"weight", g.weight}});
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exps", e}, {"coeff", c.str()}});
  Json out;
  out["generators"] = std::move(gens);
  if (p.degree_cap()) out["degree_cap"] = *p.degree_cap();
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const MayaSequence& s) {
  Json out;
  out["d"] = s.d();
  out["head"] = s.head();
  return out;
}

Json to_json(const SchubertClass& x) {
  Json terms = Json::array();
  for (const auto& [p, c] : x.terms()) terms.push_back({{"partition", to_json(p)}, {"coeff", c.str()}});
  Json out;
  out["d"] = x.d();
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const GKMClass& c, const Partition* lambda) {
  Json out;
  out["n"] = c.graph().n();
  out["l"] = c.graph().l();
  if (lambda) out["lambda"] = to_json(*lambda);
  Json values = Json::array();
  for (std::size_t v = 0; v < c.graph().vertex_count(); ++v)
    values.push_back({{"vertex", c.graph().vertices()[v]}, {"poly", to_json(c.value(v))}});
  out["values"] = std::move(values);
  return out;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("JSON schema violation: " + what);
}

}  // namespace

GradedPoly graded_poly_from_json(const Json& j) {
  require(j.is_object() && j.contains("generators") && j.contains("terms"), "expected generators and terms");
  std::vector<Generator> gens;
  for (const auto& g : j.at("generators")) {
    require(g.contains("name") && g.at("name").is_string(), "generator name");
    require(g.contains("weight") && g.at("weight").is_number_unsigned(), "generator weight");
    gens.push_back({g.at("name").get<std::string>(), g.at("weight").get<unsigned>()});
  }
  std::optional<unsigned> cap;
  if (j.contains("degree_cap")) cap = j.at("degree_cap").get<unsigned>();
  GradedPoly p(make_table(std::move(gens)), cap);
  for (const auto& t : j.at("terms")) {
    require(t.contains("exps") && t.contains("coeff") && t.at("coeff").is_string(), "term");
    auto e = t.at("exps").get<Exponents>();
    require(e.size() == p.table().size(), "exponent vector length");
    p.add_term(e, Rational::parse(t.at("coeff").get<std::string>()));
  }
  return p;
}

Partition partition_from_json(const Json& j) {
  require(j.is_array(), "partition must be an array");
  try {
    return Partition(j.get<std::vector<int>>());
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(std::string("JSON schema violation: ") + e.what());
  }
}

MayaSequence maya_from_json(const Json& j) {
  require(j.is_object() && j.contains("d") && j.contains("head"), "maya sequence");
  try {
    return MayaSequence(j.at("d").get<long>(), j.at("head").get<std::vector<long>>());
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(std::string("JSON schema violation: ") + e.what());
  }
}

SchubertClass schubert_from_json(const Json& j) {
  require(j.is_object() && j.contains("d") && j.contains("terms"), "Schubert class");
  SchubertClass x(j.at("d").get<long>());
  for (const auto& t : j.at("terms")) {
    require(t.contains("partition") && t.contains("coeff"), "Schubert term");
    x.add_term(partition_from_json(t.at("partition")), Rational::parse(t.at("coeff").get<std::string>()));
  }
  return x;
}

std::string pretty_name(const std::string& name) {
  auto suffix = [&](const std::string& prefix) -> std::optional<std::string> {
    if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size()) return name.substr(prefix.size());
    return std::nullopt;
  };
  if (name == "omega") return "w";
  if (auto s = suffix("lambda_")) return "L" + *s;
  if (auto s = suffix("kappa_")) return "k" + *s;
  if (auto s = suffix("m_")) {
    auto us = s->find('_');
    if (us != std::string::npos) return "m[" + s->substr(0, us) + "," + s->substr(us + 1) + "]";
  }
  for (const char* p : {"P_", "c_", "C_", "e_", "u_"})
    if (auto s = suffix(p)) return std::string(1, p[0]) + *s;
  return name;
}

std::string pretty(const GradedPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += pretty_name(p.table()[i].name);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) os << mag.str();
    else if (mag == Rational(1)) os << mono;
    else os << mag.str() << '*' << mono;
  }
  return os.str();
}

}  // namespace sato
