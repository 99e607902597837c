#pragma once

#include <string>

#include "tmono/skew.hpp"
#include "tmono/spectra.hpp"
#include "tmono/tournament.hpp"
#include "tmono/verify.hpp"

// Text and JSON renderings shared by the CLI and the Python bindings.
// Polynomial coefficients appear as JSON integers when they fit in 64 bits
// and as decimal strings otherwise.
namespace tmono {

std::string format_verdict(const MonomorphyVerdict& v);
std::string verdict_to_json(const MonomorphyVerdict& v);

std::string format_structure(const StructureReport& r);
std::string structure_to_json(const StructureReport& r);

std::string skew_class_to_json(const SkewClass& c);
std::string n2_class_to_json(N2Class c);

std::string format_verify(const VerifyResult& r);
std::string verify_to_json(const VerifyResult& r);

}  // namespace tmono
