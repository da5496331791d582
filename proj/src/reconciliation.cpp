#include "abvortex/reconciliation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <json.hpp>

#include "abvortex/cross_section.hpp"

namespace abvortex {

namespace {

using namespace std::complex_literals;

double rel_diff(double value, double reference) {
  const double scale = std::max(std::abs(reference), 1e-300);
  return std::abs(value - reference) / scale;
}

constexpr const char* kIdentity =
    "closed form = |f_standard - 2*pi*i*f_correction|^2 - (16*pi/k)*sin(D_-n)*sin(D_-n-1)"
    "*cos(D_-n - D_-n-1 + phi - 2*pi*alpha)";

constexpr const char* kMirror =
    "alpha -> -alpha with (|E_-n|, |E_-n-1|) swapped maps dsigma(phi) to dsigma(-phi)";

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

}  // namespace

double closed_form_via_amplitude(double k, double phi,
                                 const FluxDecomposition& flux,
                                 CorrectionPair d) {
  const auto a = amplitude_from_corrections(k, phi, flux, d);
  const std::complex<double> scale = -2.0i * kPi;
  const double cross = 16.0 * kPi / k * std::sin(d.minus_n) * std::sin(d.minus_n1) *
                       std::cos(d.minus_n - d.minus_n1 + phi - 2.0 * kPi * flux.alpha);
  return std::norm(a.f_standard + scale * a.f_correction) - cross;
}

bool ReconciliationReport::agreement() const {
  return std::all_of(rows.begin(), rows.end(), [&](const auto& r) {
    return r.max_rel_closed_vs_oracle <= agreement_tolerance;
  });
}

bool ReconciliationReport::identity_holds() const {
  return std::all_of(rows.begin(), rows.end(), [&](const auto& r) {
    return r.max_rel_identity_residual <= agreement_tolerance;
  });
}

std::string ReconciliationReport::verdict() const {
  if (agreement()) return "agreement";
  if (identity_holds())
    return "discrepancy: correction amplitude scaled by constant factor -2*pi*i "
           "and channel-channel cross term missing";
  return "discrepancy: unidentified";
}

std::vector<ReconciliationPoint> default_reconciliation_points() {
  return {
      {0.25, 2.0, {1.0, std::nullopt}},
      {1.4, 2.0, {1.0, 3.0}},
      {-0.6, 3.0, {0.5, 2.0}},
  };
}

ReconciliationReport reconcile(const std::vector<ReconciliationPoint>& points,
                               const std::vector<double>& phi_grid) {
  ReconciliationReport report;
  report.grid_points = phi_grid.size();
  for (double phi : phi_grid) {
    report.phi_min = report.phi_min == 0.0 ? std::abs(phi) : std::min(report.phi_min, std::abs(phi));
    report.phi_max = std::max(report.phi_max, std::abs(phi));
  }

  for (const auto& point : points) {
    ReconciliationRow row;
    row.point = point;
    const auto kin = Kinematics::natural(point.energy);
    const auto flux = decompose_flux(point.alpha);
    row.k = wavenumber(kin);
    row.corrections = corrections(flux, point.energy, point.spec);

    const auto mirror_flux = decompose_flux(-point.alpha);
    const ExtensionSpec mirror_spec{point.spec.e_bound_n1, point.spec.e_bound_n};
    const auto mirror_d = corrections(mirror_flux, point.energy, mirror_spec);

    row.min_closed_form = INFINITY;
    for (double phi : phi_grid) {
      const double closed = cross_section_from_corrections(row.k, phi, flux.alpha, row.corrections);
      const auto amp = amplitude_from_corrections(row.k, phi, flux, row.corrections);
      const double oracle = amp.cross_section();
      row.min_closed_form = std::min(row.min_closed_form, closed);
      row.max_rel_closed_vs_oracle =
          std::max(row.max_rel_closed_vs_oracle, rel_diff(closed, oracle));
      row.max_rel_standard_vs_oracle =
          std::max(row.max_rel_standard_vs_oracle,
                   rel_diff(std::norm(amp.f_standard),
                            standard_cross_section(row.k, phi, flux.alpha)));
      row.max_rel_identity_residual =
          std::max(row.max_rel_identity_residual,
                   rel_diff(closed_form_via_amplitude(row.k, phi, flux, row.corrections), closed));

      const double closed_reflected =
          cross_section_from_corrections(row.k, -phi, flux.alpha, row.corrections);
      const double oracle_reflected =
          amplitude_from_corrections(row.k, -phi, flux, row.corrections).cross_section();
      row.max_rel_mirror_closed = std::max(
          row.max_rel_mirror_closed,
          rel_diff(cross_section_from_corrections(row.k, phi, mirror_flux.alpha, mirror_d),
                   closed_reflected));
      row.max_rel_mirror_oracle = std::max(
          row.max_rel_mirror_oracle,
          rel_diff(amplitude_from_corrections(row.k, phi, mirror_flux, mirror_d).cross_section(),
                   oracle_reflected));
    }

    constexpr std::size_t kSteps = 1u << 14;
    row.sigma_perp_closed_form =
        transverse_from_corrections(row.k, flux.alpha, row.corrections, kSteps);
    row.sigma_perp_oracle = transverse_integral(
        [&](double phi) {
          return amplitude_from_corrections(row.k, phi, flux, row.corrections).cross_section() -
                 amplitude_from_corrections(row.k, -phi, flux, row.corrections).cross_section();
        },
        kSteps);

    row.probe_phi = 0.5 * kPi;
    row.closed_form_at_probe =
        cross_section_from_corrections(row.k, row.probe_phi, flux.alpha, row.corrections);
    row.oracle_at_probe =
        amplitude_from_corrections(row.k, row.probe_phi, flux, row.corrections).cross_section();
    report.rows.push_back(row);
  }
  return report;
}

ReconciliationReport reconcile_default() {
  return reconcile(default_reconciliation_points(), make_phi_grid(kPi / 180.0, kPi, 720));
}

std::string report_to_json(const ReconciliationReport& report) {
  // Hand-written so that numbers use a fixed format.
  std::string out;
  auto line = [&](int indent, const std::string& text) {
    out.append(static_cast<std::size_t>(indent), ' ');
    out += text;
    out += '\n';
  };
  auto num = [](const char* key, double v) {
    return std::string("\"") + key + "\": " + format_number(v);
  };
  auto opt = [](const char* key, const std::optional<double>& v) {
    return std::string("\"") + key + "\": " + (v ? format_number(*v) : std::string("null"));
  };

  line(0, "{");
  line(2, "\"kind\": \"ab_vortex reconciliation report\",");
  line(2, "\"comparison\": \"closed-form differential cross section vs |f|^2 of the partial-wave amplitude\",");
  line(2, "\"grid_points\": " + std::to_string(report.grid_points) + ",");
  line(2, num("phi_min", report.phi_min) + ",");
  line(2, num("phi_max", report.phi_max) + ",");
  line(2, num("agreement_tolerance", report.agreement_tolerance) + ",");
  line(2, std::string("\"agreement\": ") + (report.agreement() ? "true" : "false") + ",");
  line(2, std::string("\"identity_holds\": ") + (report.identity_holds() ? "true" : "false") + ",");
  line(2, "\"verdict\": \"" + report.verdict() + "\",");
  line(2, std::string("\"identity\": \"") + kIdentity + "\",");
  line(2, std::string("\"mirror_mapping\": \"") + kMirror + "\",");
  line(2, "\"points\": [");
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    line(4, "{");
    line(6, num("alpha", r.point.alpha) + ",");
    line(6, num("energy", r.point.energy) + ",");
    line(6, opt("e_bound_n", r.point.spec.e_bound_n) + ",");
    line(6, opt("e_bound_n1", r.point.spec.e_bound_n1) + ",");
    line(6, num("k", r.k) + ",");
    line(6, num("correction_n", r.corrections.minus_n) + ",");
    line(6, num("correction_n1", r.corrections.minus_n1) + ",");
    line(6, num("max_rel_closed_vs_oracle", r.max_rel_closed_vs_oracle) + ",");
    line(6, num("max_rel_standard_vs_oracle", r.max_rel_standard_vs_oracle) + ",");
    line(6, num("max_rel_identity_residual", r.max_rel_identity_residual) + ",");
    line(6, num("min_closed_form", r.min_closed_form) + ",");
    line(6, num("max_rel_mirror_closed", r.max_rel_mirror_closed) + ",");
    line(6, num("max_rel_mirror_oracle", r.max_rel_mirror_oracle) + ",");
    line(6, num("sigma_perp_closed_form", r.sigma_perp_closed_form) + ",");
    line(6, num("sigma_perp_oracle", r.sigma_perp_oracle) + ",");
    line(6, num("probe_phi", r.probe_phi) + ",");
    line(6, num("closed_form_at_probe", r.closed_form_at_probe) + ",");
    line(6, num("oracle_at_probe", r.oracle_at_probe));
    line(4, i + 1 == report.rows.size() ? "}" : "},");
  }
  line(2, "]");
  line(0, "}");
  return out;
}

std::string compare_report(const ReconciliationReport& fresh,
                           const std::string& stored_json, double rel_tol) {
  nlohmann::json a;
  nlohmann::json b;
  try {
    a = nlohmann::json::parse(report_to_json(fresh));
    b = nlohmann::json::parse(stored_json);
  } catch (const nlohmann::json::exception& e) {
    return std::string("stored report is not valid JSON: ") + e.what();
  }

  // Residual-type entries sit at rounding level and legitimately differ
  // between platforms; only their side of the tolerance matters.
  auto is_residual = [](const std::string& key) {
    return key.rfind("max_rel_", 0) == 0;
  };

  std::string diff;
  std::function<void(const nlohmann::json&, const nlohmann::json&, const std::string&)> walk =
      [&](const nlohmann::json& x, const nlohmann::json& y, const std::string& path) {
        if (!diff.empty()) return;
        const std::string key = path.substr(path.rfind('/') + 1);
        if (x.is_number() && y.is_number()) {
          const double u = x.get<double>();
          const double v = y.get<double>();
          if (is_residual(key)) {
            if ((u <= fresh.agreement_tolerance) != (v <= fresh.agreement_tolerance))
              diff = path + ": residual crosses tolerance (" + format_number(u) + " vs " +
                     format_number(v) + ")";
          } else if (std::abs(u - v) > rel_tol * std::max({std::abs(u), std::abs(v), 1e-300})) {
            diff = path + ": " + format_number(u) + " vs stored " + format_number(v);
          }
          return;
        }
        if (x.type() != y.type()) {
          diff = path + ": type differs";
          return;
        }
        if (x.is_object()) {
          if (x.size() != y.size()) {
            diff = path + ": key set differs";
            return;
          }
          for (auto it = x.begin(); it != x.end(); ++it) {
            if (!y.contains(it.key())) {
              diff = path + "/" + it.key() + ": missing from stored report";
              return;
            }
            walk(it.value(), y.at(it.key()), path + "/" + it.key());
          }
        } else if (x.is_array()) {
          if (x.size() != y.size()) {
            diff = path + ": length differs";
            return;
          }
          for (std::size_t i = 0; i < x.size(); ++i)
            walk(x[i], y[i], path + "/" + std::to_string(i));
        } else if (x != y) {
          diff = path + ": " + x.dump() + " vs stored " + y.dump();
        }
      };
  walk(a, b, "");
  return diff;
}

}  // namespace abvortex
