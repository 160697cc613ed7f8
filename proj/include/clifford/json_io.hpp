#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "clifford/cl03.hpp"
#include "clifford/dirac_hestenes.hpp"
#include "clifford/matrices.hpp"
#include "clifford/multivector.hpp"
#include "clifford/verify.hpp"
#include "clifford/weyl_spinors.hpp"

namespace clifford::io {

using nlohmann::json;

/// "1" for the scalar blade, otherwise "e" + ascending generator digits
/// ("e13" for mask 0b101).
std::string blade_name(unsigned mask);
/// Inverse of blade_name; throws std::invalid_argument on malformed names,
/// out-of-range generators, or repeated digits.
unsigned blade_mask_from_name(const std::string& name, int dim);

/// {"signature": [p, q], "coeffs": {"1": ..., "e12": ...}} with zero
/// coefficients omitted — except a negative zero, which is kept so the
/// round trip is bit-exact.
json multivector_to_json(const Multivector& a);
Multivector multivector_from_json(const json& j);

/// Row-major array of [re, im] pairs.
json mat2_to_json(const rep::Mat2& m);
rep::Mat2 mat2_from_json(const json& j);
json mat4_to_json(const rep::Mat4& m);
rep::Mat4 mat4_from_json(const json& j);

json weyl_spinor_to_json(const weyl::WeylSpinor& s);
weyl::WeylSpinor weyl_spinor_from_json(const json& j);

json qpair_to_json(const cl03::QPair& q);
cl03::QPair qpair_from_json(const json& j);

/// {"branch": "plus"|"minus", "spin": "up"|"down", "p": [..], "m": ..}
json planewave_params_to_json(const dirac::PlaneWaveParams& params);
dirac::PlaneWaveParams planewave_params_from_json(const json& j);

json lounesto_to_json(const dirac::LounestoDecomposition& d, double reconstruction_residual);

/// Canonical verification report: suites sorted by name, checks by id, keys
/// alphabetical, and no timing fields, so equal runs serialize to equal
/// bytes.
json report_to_json(const std::vector<verify::SuiteReport>& suites);
std::string report_to_string(const std::vector<verify::SuiteReport>& suites);

}  // namespace clifford::io
