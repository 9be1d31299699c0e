#include "lamcf/json_io.hpp"

#include "lamcf/error.hpp"
#include "lamcf/hecke.hpp"

namespace lamcf::json {
namespace {

json from_terms(const std::vector<Int>& terms) {
  json out = json::array();
  for (const Int& t : terms) out.push_back(from_int(t));
  return out;
}

std::vector<Int> to_terms(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array of terms");
  std::vector<Int> out;
  for (const json& t : j) out.push_back(to_int(t));
  return out;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw Error(ErrorCode::ParseError, std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

}  // namespace

json from_int(const Int& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return json(static_cast<std::int64_t>(v.get_si()));
  return json(to_string(v));
}

Int to_int(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    return Int(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

json from_cf(const RegularCF& cf) {
  json out;
  out["prefix"] = from_terms(cf.prefix());
  out["period"] = cf.kind() == CfKind::EventuallyPeriodic ? from_terms(cf.period()) : json(nullptr);
  out["kind"] = std::string(to_string(cf.kind()));
  return out;
}

RegularCF to_cf(const json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  std::vector<Int> prefix = to_terms(field(j, "prefix"));
  if (kind == "finite") return RegularCF::finite(std::move(prefix));
  if (kind == "prefix") return RegularCF::prefix_only(std::move(prefix));
  if (kind == "periodic") return RegularCF::periodic(std::move(prefix), to_terms(field(j, "period")));
  throw Error(ErrorCode::ParseError, "unknown fraction kind '" + kind + "'");
}

json from_matrix(const IntMat2& m) {
  return json{{"a", to_string(m.a())}, {"b", to_string(m.b())}, {"c", to_string(m.c())},
              {"d", to_string(m.d())}};
}

IntMat2 to_matrix(const json& j) {
  return IntMat2(to_int(field(j, "a")), to_int(field(j, "b")), to_int(field(j, "c")),
                 to_int(field(j, "d")));
}

json from_surd(const QuadSurd& s) {
  return json{{"p", from_int(s.p())}, {"q", from_int(s.q())}, {"r", from_int(s.r())},
              {"D", from_int(s.D())}};
}

json from_boundary_point(const BoundaryPoint& x) {
  if (std::holds_alternative<Infinity>(x)) return json{{"kind", "infinity"}};
  if (auto* r = std::get_if<Rational>(&x)) {
    return json{{"kind", "rational"}, {"num", from_int(r->num())}, {"den", from_int(r->den())},
                {"approx", static_cast<double>(r->to_long_double())}};
  }
  const QuadSurd& s = std::get<QuadSurd>(x);
  json out = from_surd(s);
  out["kind"] = "surd";
  out["approx"] = static_cast<double>(s.to_long_double());
  return out;
}

json from_axis(const Axis& axis) {
  return json{{"endpoints", {from_boundary_point(axis.lo), from_boundary_point(axis.hi)}},
              {"trace", from_int(axis.trace)},
              {"length", axis.length}};
}

json from_surface(const SurfaceInvariants& s) {
  return json{{"level", s.level},         {"index", s.index},         {"cusps", s.cusps},
              {"elliptic2", s.elliptic2}, {"elliptic3", s.elliptic3}, {"genus", s.genus}};
}

json from_step(const LegendreStep& step) {
  return json{{"k", step.k},
              {"term", from_int(step.term)},
              {"gamma", from_matrix(step.gamma)},
              {"det", step.gamma.det()},
              {"trace", from_int(step.trace)},
              {"in_gamma0N", step.in_gamma0N},
              {"singleton_candidate", step.singleton_candidate},
              {"axis_length", step.axis_length}};
}

json from_delta(const SingularityData& delta) { return json(delta.doubled_parts()); }

json from_invariant(const LaminationInvariant& inv) {
  return json{{"level", inv.level},
              {"theta", from_cf(inv.theta)},
              {"delta", from_delta(inv.delta)},
              {"approximate", inv.approximate()}};
}

LaminationInvariant to_invariant(const json& j) {
  const std::int64_t level = field(j, "level").get<std::int64_t>();
  const json& parts = field(j, "delta");
  if (!parts.is_array()) throw Error(ErrorCode::ParseError, "delta must be an array");
  std::vector<std::int64_t> doubled;
  for (const json& p : parts) doubled.push_back(p.get<std::int64_t>());
  return make_invariant(to_cf(field(j, "theta")), delta_for_level(doubled, level), level);
}

}  // namespace lamcf::json
