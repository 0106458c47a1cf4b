#include "twist8/io/json_io.hpp"

#include <fstream>

namespace twist8 {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw JsonFormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t as_int(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw JsonFormatError(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::string as_string(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw JsonFormatError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Json encode_triple(const SignTriple& t) { return Json::array({t[0], t[1], t[2]}); }

ReductionType decode_type(const std::string& s) {
  try {
    return parse_reduction_type(s);
  } catch (const std::invalid_argument& e) {
    throw JsonFormatError(e.what());
  }
}

}  // namespace

Json encode(const Rational& x) { return to_string(x); }

Rational decode_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw JsonFormatError("rational must be a string or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw JsonFormatError(std::string("bad rational: ") + e.what());
  }
}

Json encode(const Curve& c) {
  return Json{{"a1", encode(c.a1())}, {"a2", encode(c.a2())}, {"a3", encode(c.a3())},
              {"a4", encode(c.a4())}, {"a6", encode(c.a6())}};
}

Curve decode_curve(const Json& j) {
  auto coeff = [&](const char* k) { return j.contains(k) ? decode_rational(j.at(k)) : Rational(0); };
  if (!j.is_object()) throw JsonFormatError("curve must be an object");
  // Short form {"a": .., "b": ..} is accepted as well.
  if (j.contains("a") && j.contains("b") && !j.contains("a4")) {
    try {
      return Curve::short_weierstrass(decode_rational(j.at("a")), decode_rational(j.at("b")));
    } catch (const std::domain_error& e) {
      throw JsonFormatError(e.what());
    }
  }
  try {
    return Curve(coeff("a1"), coeff("a2"), coeff("a3"), coeff("a4"), coeff("a6"));
  } catch (const std::domain_error& e) {
    throw JsonFormatError(e.what());
  }
}

Json encode(const X8Point& p) {
  return Json{{"t", encode(p.t)}, {"a0", encode(p.a0)}, {"a1", encode(p.a1)}, {"a2", encode(p.a2)}};
}

X8Point decode_point(const Json& j) {
  return {decode_rational(field(j, "t")), decode_rational(field(j, "a0")), decode_rational(field(j, "a1")),
          decode_rational(field(j, "a2"))};
}

Json encode(const ReductionInfo& r) {
  return Json{{"p", r.p}, {"type", to_string(r.type)}, {"np", r.np}, {"ap", r.ap}, {"vdelta", r.vdelta}};
}

ReductionInfo decode_reduction(const Json& j) {
  ReductionInfo r;
  r.p = as_int(j, "p");
  r.type = decode_type(as_string(j, "type"));
  r.np = as_int(j, "np");
  r.ap = as_int(j, "ap");
  r.vdelta = static_cast<long>(as_int(j, "vdelta"));
  return r;
}

Json encode(const TwistSystem& s) {
  return Json{{"r", s.r},
              {"a", encode(s.a)},
              {"b", encode(s.b)},
              {"variables", system_variables()},
              {"f", s.f.to_string()},
              {"g", s.g.to_string()},
              {"h", s.h.to_string()},
              {"forgetful_power", s.forgetful_power}};
}

TwistSystem decode_system(const Json& j) {
  TwistSystem s;
  s.r = static_cast<int>(as_int(j, "r"));
  s.a = decode_rational(field(j, "a"));
  s.b = decode_rational(field(j, "b"));
  try {
    s.f = parse_poly(as_string(j, "f"), system_variables()).with_variables(system_variables());
    s.g = parse_poly(as_string(j, "g"), system_variables()).with_variables(system_variables());
    s.h = parse_poly(as_string(j, "h"), system_variables()).with_variables(system_variables());
  } catch (const JsonFormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw JsonFormatError(std::string("bad polynomial: ") + e.what());
  }
  s.forgetful_power = static_cast<int>(as_int(j, "forgetful_power"));
  return s;
}

Json encode(const CongruenceRow& r) {
  return Json{{"p", r.p},           {"E", encode(r.e)},
              {"F", encode(r.f)},   {"apE_mod8", r.e_mod8},
              {"apF_mod8", r.f_mod8}, {"status", to_string(r.status)},
              {"reason", r.reason}};
}

CongruenceRow decode_row(const Json& j) {
  CongruenceRow r;
  r.p = as_int(j, "p");
  r.e = decode_reduction(field(j, "E"));
  r.f = decode_reduction(field(j, "F"));
  r.e_mod8 = static_cast<int>(as_int(j, "apE_mod8"));
  r.f_mod8 = static_cast<int>(as_int(j, "apF_mod8"));
  const std::string st = as_string(j, "status");
  if (st == "agree") {
    r.status = RowStatus::agree;
  } else if (st == "disagree") {
    r.status = RowStatus::disagree;
  } else if (st == "exception") {
    r.status = RowStatus::exception;
  } else {
    throw JsonFormatError("unknown status '" + st + "'");
  }
  r.reason = as_string(j, "reason");
  return r;
}

Json encode(const ValuationNote& n) {
  return Json{{"p", n.p}, {"typeE", to_string(n.e_type)}, {"typeF", to_string(n.f_type)}, {"vE", n.v_e}, {"vF", n.v_f}};
}

ValuationNote decode_note(const Json& j) {
  return {as_int(j, "p"), decode_type(as_string(j, "typeE")), decode_type(as_string(j, "typeF")),
          static_cast<long>(as_int(j, "vE")), static_cast<long>(as_int(j, "vF"))};
}

Json encode(const CongruenceReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back(encode(row));
  Json notes = Json::array();
  for (const auto& n : r.valuation_notes) notes.push_back(encode(n));
  return Json{{"E", encode(r.e)},
              {"F", encode(r.f)},
              {"r", r.r},
              {"bound", r.bound},
              {"pass", r.pass},
              {"exceptions", r.exceptions},
              {"witness", r.witness ? Json(*r.witness) : Json(nullptr)},
              {"j_distinct", r.j_distinct},
              {"valuation_notes", notes},
              {"rows", rows}};
}

CongruenceReport decode_report(const Json& j) {
  CongruenceReport r{decode_curve(field(j, "E")), decode_curve(field(j, "F")), 1, 0, {}, {}, false, std::nullopt,
                     false, {}};
  r.r = static_cast<int>(as_int(j, "r"));
  r.bound = as_int(j, "bound");
  r.pass = field(j, "pass").get<bool>();
  r.exceptions = field(j, "exceptions").get<std::vector<std::int64_t>>();
  if (!field(j, "witness").is_null()) r.witness = as_int(j, "witness");
  r.j_distinct = field(j, "j_distinct").get<bool>();
  for (const auto& n : field(j, "valuation_notes")) r.valuation_notes.push_back(decode_note(n));
  for (const auto& row : field(j, "rows")) r.rows.push_back(decode_row(row));
  return r;
}

Json encode(const ResidueMatrix& m) {
  const auto e = m.entries();
  return Json{{"n", m.modulus()},
              {"entries", Json::array({e[0], e[1], e[2], e[3]})},
              {"quotient", m.quotient() == ResidueMatrix::Quotient::none ? "none" : "pm_identity"}};
}

ResidueMatrix decode_matrix(const Json& j) {
  const auto e = field(j, "entries").get<std::vector<int>>();
  if (e.size() != 4) throw JsonFormatError("matrix needs four entries");
  const std::string q = as_string(j, "quotient");
  if (q != "none" && q != "pm_identity") throw JsonFormatError("unknown quotient '" + q + "'");
  return ResidueMatrix(static_cast<int>(as_int(j, "n")), e[0], e[1], e[2], e[3],
                       q == "none" ? ResidueMatrix::Quotient::none : ResidueMatrix::Quotient::plus_minus_identity);
}

Json encode(const GroupLemmaReport& r) {
  return Json{{"id", to_string(r.id)}, {"pass", r.pass}, {"details", r.details}};
}

GroupLemmaReport decode_lemma_report(const Json& j) {
  GroupLemmaReport r;
  try {
    r.id = parse_group_lemma(as_string(j, "id"));
  } catch (const JsonFormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw JsonFormatError(e.what());
  }
  r.pass = field(j, "pass").get<bool>();
  r.details = field(j, "details").get<std::vector<std::string>>();
  return r;
}

Json encode(const SignActionRow& r) {
  return Json{{"generator", r.name},
              {"matrix", encode(r.s)},
              {"kappa", r.kappa},
              {"sigma", Json::array({r.sigma[0] + 1, r.sigma[1] + 1, r.sigma[2] + 1})},
              {"sqrt_delta_action", r.sqrt_delta.to_string()},
              {"ratios", encode_triple(r.ratios)},
              {"cocycle_matrix", encode(r.cocycle)},
              {"pi_cocycle", encode_triple(r.pi_cocycle)},
              {"matches_printed", r.matches_printed},
              {"mismatches", r.mismatches}};
}

Json encode(const SignActionReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back(encode(row));
  return Json{{"pass", r.pass}, {"rows", rows}};
}

Json encode(const OracleReport& r) {
  return Json{{"r", r.r},
              {"mode", r.mode == OracleMode::algebra ? "algebra" : "split"},
              {"verdict", to_string(r.verdict)},
              {"factor", encode(r.factor)},
              {"theta2", r.reconstructed[0].to_string()},
              {"theta1", r.reconstructed[1].to_string()},
              {"theta0", r.reconstructed[2].to_string()}};
}

Json encode(const SweepHit& h) {
  Json j = encode(h.point);
  j["a"] = encode(h.a);
  j["b"] = encode(h.b);
  j["partner_on_system"] = h.partner_on_system;
  return j;
}

Curve read_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonFormatError("cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw JsonFormatError("'" + path + "': " + e.what());
  }
  return decode_curve(j);
}

}  // namespace twist8
