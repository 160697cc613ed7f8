#include "clifford/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace clifford::io {

namespace {

json complex_to_json(const rep::Complex& c) { return json::array({c.real(), c.imag()}); }

rep::Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string blade_name(unsigned mask) {
  if (mask == 0) return "1";
  std::string name = "e";
  for (int i = 1; i <= 4; ++i) {
    if (mask & (1u << (i - 1))) name += static_cast<char>('0' + i);
  }
  return name;
}

unsigned blade_mask_from_name(const std::string& name, int dim) {
  if (name == "1") return 0;
  if (name.size() < 2 || name[0] != 'e') throw std::invalid_argument("bad blade name: " + name);
  unsigned mask = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    const char ch = name[i];
    if (ch < '1' || ch > '0' + dim) throw std::invalid_argument("bad blade name: " + name);
    const unsigned bit = 1u << (ch - '1');
    if (mask & bit) throw std::invalid_argument("repeated generator in blade name: " + name);
    if (bit <= mask) throw std::invalid_argument("generators not ascending in blade name: " + name);
    mask |= bit;
  }
  return mask;
}

json multivector_to_json(const Multivector& a) {
  json coeffs = json::object();
  for (unsigned mask = 0; mask < a.size(); ++mask) {
    const double c = a[mask];
    if (c != 0.0 || std::signbit(c)) coeffs[blade_name(mask)] = c;
  }
  return {{"signature", {a.signature().p(), a.signature().q()}}, {"coeffs", coeffs}};
}

Multivector multivector_from_json(const json& j) {
  const auto& sig_j = j.at("signature");
  if (!sig_j.is_array() || sig_j.size() != 2) {
    throw std::invalid_argument("signature must be [p, q]");
  }
  const Signature sig(sig_j[0].get<int>(), sig_j[1].get<int>());
  Multivector a(sig);
  for (const auto& [name, value] : j.at("coeffs").items()) {
    a[blade_mask_from_name(name, sig.dim())] = value.get<double>();
  }
  return a;
}

json mat2_to_json(const rep::Mat2& m) {
  json rows = json::array();
  for (const rep::Complex& c : m.e) rows.push_back(complex_to_json(c));
  return rows;
}

rep::Mat2 mat2_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("expected 4 entries");
  rep::Mat2 m;
  for (std::size_t i = 0; i < 4; ++i) m.e[i] = complex_from_json(j[i]);
  return m;
}

json mat4_to_json(const rep::Mat4& m) {
  json rows = json::array();
  for (const rep::Complex& c : m.e) rows.push_back(complex_to_json(c));
  return rows;
}

rep::Mat4 mat4_from_json(const json& j) {
  if (!j.is_array() || j.size() != 16) throw std::invalid_argument("expected 16 entries");
  rep::Mat4 m;
  for (std::size_t i = 0; i < 16; ++i) m.e[i] = complex_from_json(j[i]);
  return m;
}

json weyl_spinor_to_json(const weyl::WeylSpinor& s) {
  return {{"kind", weyl::tag_name(s.kind)},
          {"c1", {s.c1.re, s.c1.im}},
          {"c2", {s.c2.re, s.c2.im}}};
}

weyl::WeylSpinor weyl_spinor_from_json(const json& j) {
  const auto& c1 = j.at("c1");
  const auto& c2 = j.at("c2");
  if (!c1.is_array() || c1.size() != 2 || !c2.is_array() || c2.size() != 2) {
    throw std::invalid_argument("spinor components must be [re, im]");
  }
  return {weyl::tag_from_name(j.at("kind").get<std::string>()),
          {c1[0].get<double>(), c1[1].get<double>()},
          {c2[0].get<double>(), c2[1].get<double>()}};
}

json qpair_to_json(const cl03::QPair& q) {
  return {{"plus", {q.plus.w, q.plus.x, q.plus.y, q.plus.z}},
          {"minus", {q.minus.w, q.minus.x, q.minus.y, q.minus.z}}};
}

cl03::QPair qpair_from_json(const json& j) {
  auto quat = [](const json& v) -> cl03::Quaternion {
    if (!v.is_array() || v.size() != 4) throw std::invalid_argument("quaternion must be [w,x,y,z]");
    return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>(), v[3].get<double>()};
  };
  return {quat(j.at("plus")), quat(j.at("minus"))};
}

json planewave_params_to_json(const dirac::PlaneWaveParams& params) {
  return {{"branch", params.branch == dirac::FrequencyBranch::Plus ? "plus" : "minus"},
          {"spin", params.spin == dirac::SpinLabel::Up ? "up" : "down"},
          {"p", {params.p[0], params.p[1], params.p[2]}},
          {"m", params.m}};
}

dirac::PlaneWaveParams planewave_params_from_json(const json& j) {
  dirac::PlaneWaveParams params;
  const std::string branch = j.at("branch").get<std::string>();
  if (branch == "plus") {
    params.branch = dirac::FrequencyBranch::Plus;
  } else if (branch == "minus") {
    params.branch = dirac::FrequencyBranch::Minus;
  } else {
    throw std::invalid_argument("branch must be \"plus\" or \"minus\"");
  }
  const std::string spin = j.at("spin").get<std::string>();
  if (spin == "up") {
    params.spin = dirac::SpinLabel::Up;
  } else if (spin == "down") {
    params.spin = dirac::SpinLabel::Down;
  } else {
    throw std::invalid_argument("spin must be \"up\" or \"down\"");
  }
  const auto& p = j.at("p");
  if (!p.is_array() || p.size() != 3) throw std::invalid_argument("p must have 3 components");
  for (std::size_t k = 0; k < 3; ++k) params.p[k] = p[k].get<double>();
  params.m = j.at("m").get<double>();
  if (!(params.m > 0.0)) throw std::invalid_argument("m must be positive");
  return params;
}

json lounesto_to_json(const dirac::LounestoDecomposition& d, double reconstruction_residual) {
  return {{"rho", d.rho},
          {"beta", d.beta},
          {"rotor", multivector_to_json(d.rotor)},
          {"reconstruction_residual", reconstruction_residual}};
}

json report_to_json(const std::vector<verify::SuiteReport>& suites) {
  std::vector<verify::SuiteReport> sorted = suites;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  json out;
  out["pass"] = verify::all_pass(sorted);
  json suites_j = json::array();
  for (const verify::SuiteReport& s : sorted) {
    std::vector<verify::CheckRecord> checks = s.checks;
    std::sort(checks.begin(), checks.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    json checks_j = json::array();
    for (const verify::CheckRecord& c : checks) {
      checks_j.push_back({{"id", c.id},
                          {"residual", c.residual},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass},
                          {"samples", c.samples}});
    }
    suites_j.push_back({{"name", s.name}, {"pass", s.pass}, {"checks", checks_j}});
  }
  out["suites"] = suites_j;
  return out;
}

std::string report_to_string(const std::vector<verify::SuiteReport>& suites) {
  return report_to_json(suites).dump(2) + "\n";
}

}  // namespace clifford::io
