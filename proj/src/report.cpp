#include "tmono/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace tmono {

namespace {

using nlohmann::json;

json coeffs_json(const IntPoly& p) {
  json a = json::array();
  if (p.is_zero()) a.push_back(0);
  for (const BigInt& c : p.coeffs()) {
    if (c.fits_slong_p()) a.push_back(c.get_si());
    else a.push_back(c.get_str());
  }
  return a;
}

json members_json(VertexSet s) {
  json a = json::array();
  for (std::size_t v : s.members()) a.push_back(v);
  return a;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string format_verdict(const MonomorphyVerdict& v) {
  std::ostringstream out;
  const std::string what = v.mode == Mode::skew ? "skew-spectrally" : "spectrally";
  if (v.monomorphic()) {
    out << v.k << "-" << what << " monomorphic\n";
    out << "common polynomial: " << format_human(*v.common) << "\n";
  } else {
    out << "not " << v.k << "-" << what << " monomorphic\n";
    out << "witness " << v.witness->alpha.to_string() << ": " << format_human(v.witness->poly_alpha) << "\n";
    out << "witness " << v.witness->beta.to_string() << ": " << format_human(v.witness->poly_beta) << "\n";
  }
  return out.str();
}

std::string verdict_to_json(const MonomorphyVerdict& v) {
  json j;
  j["mode"] = std::string(to_string(v.mode));
  j["k"] = v.k;
  j["monomorphic"] = v.monomorphic();
  if (v.common) {
    j["common"] = coeffs_json(*v.common);
  } else {
    j["witness"] = {{"alpha", members_json(v.witness->alpha)},
                    {"beta", members_json(v.witness->beta)},
                    {"poly_alpha", coeffs_json(v.witness->poly_alpha)},
                    {"poly_beta", coeffs_json(v.witness->poly_beta)}};
  }
  return j.dump();
}

std::string format_structure(const StructureReport& r) {
  std::ostringstream out;
  out << "vertices          " << r.out_degrees.size() << "\n";
  out << "out-degrees       ";
  for (std::size_t i = 0; i < r.out_degrees.size(); ++i) out << (i ? " " : "") << r.out_degrees[i];
  out << "\n";
  out << "3-cycles          " << r.three_cycle_count << "\n";
  out << "transitive        " << yes_no(r.is_transitive) << "\n";
  out << "regular           " << yes_no(r.is_regular) << "\n";
  out << "near-regular      " << yes_no(r.is_near_regular) << "\n";
  out << "doubly regular    " << yes_no(r.is_doubly_regular);
  if (r.t) out << " (t=" << *r.t << ")";
  out << "\n";
  out << "homogeneous       " << yes_no(r.is_homogeneous) << "\n";
  return out.str();
}

std::string structure_to_json(const StructureReport& r) {
  json j;
  j["n"] = r.out_degrees.size();
  j["out_degrees"] = r.out_degrees;
  j["three_cycle_count"] = r.three_cycle_count;
  j["is_transitive"] = r.is_transitive;
  j["is_regular"] = r.is_regular;
  j["is_near_regular"] = r.is_near_regular;
  j["is_doubly_regular"] = r.is_doubly_regular;
  j["is_homogeneous"] = r.is_homogeneous;
  j["t"] = r.t ? json(*r.t) : json(nullptr);
  return j.dump();
}

std::string skew_class_to_json(const SkewClass& c) {
  json j;
  j["class"] = std::string(to_string(c.tag));
  j["certificate"] = c.certificate ? members_json(*c.certificate) : json(nullptr);
  return j.dump();
}

std::string n2_class_to_json(N2Class c) {
  json j;
  j["class"] = std::string(to_string(c));
  return j.dump();
}

std::string format_verify(const VerifyResult& r) {
  std::ostringstream out;
  out << r.suite << ": " << r.checks << " checks, " << r.failures.size() << " failures\n";
  for (const auto& n : r.notes) out << "  " << n << "\n";
  for (const auto& f : r.failures) out << "  FAIL " << f << "\n";
  out << (r.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string verify_to_json(const VerifyResult& r) {
  json j;
  j["suite"] = r.suite;
  j["checks"] = r.checks;
  j["failures"] = r.failures;
  j["notes"] = r.notes;
  j["passed"] = r.passed();
  return j.dump();
}

}  // namespace tmono
