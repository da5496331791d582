#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "abvortex/flux.hpp"
#include "abvortex/phase_shifts.hpp"

namespace abvortex {

struct ReconciliationPoint {
  double alpha = 0.0;
  double energy = 1.0;
  ExtensionSpec spec;
};

/// Comparison of the closed-form cross section against |f|^2 from the
/// partial-wave amplitude at one parameter point, over a phi grid.
struct ReconciliationRow {
  ReconciliationPoint point;
  double k = 0.0;
  CorrectionPair corrections;

  double max_rel_closed_vs_oracle = 0.0;
  // |f_standard|^2 against the standard cross section.
  double max_rel_standard_vs_oracle = 0.0;
  // Closed form against |f_std + c f_corr|^2 - cross term, c = -2 pi i.
  double max_rel_identity_residual = 0.0;
  double min_closed_form = 0.0;
  // alpha -> -alpha with the two bound energies swapped, compared with
  // phi -> -phi at the original point.
  double max_rel_mirror_oracle = 0.0;
  double max_rel_mirror_closed = 0.0;

  double sigma_perp_closed_form = 0.0;  // quadrature of the closed form
  double sigma_perp_oracle = 0.0;       // quadrature of |f|^2

  double probe_phi = 0.0;
  double closed_form_at_probe = 0.0;
  double oracle_at_probe = 0.0;
};

struct ReconciliationReport {
  std::size_t grid_points = 0;
  double phi_min = 0.0;
  double phi_max = 0.0;
  double agreement_tolerance = 1e-10;
  std::vector<ReconciliationRow> rows;

  bool agreement() const;
  bool identity_holds() const;
  std::string verdict() const;
};

/// |f_std - 2 pi i f_corr|^2 - (16 pi/k) sin D_-n sin D_-n-1 cos(D_-n - D_-n-1 + phi - 2 pi alpha).
/// Equal to the closed-form cross section term by term.
double closed_form_via_amplitude(double k, double phi,
                                 const FluxDecomposition& flux,
                                 CorrectionPair d);

std::vector<ReconciliationPoint> default_reconciliation_points();

ReconciliationReport reconcile(const std::vector<ReconciliationPoint>& points,
                               const std::vector<double>& phi_grid);

/// The default run: default points on the default 720-point grid.
ReconciliationReport reconcile_default();

std::string report_to_json(const ReconciliationReport& report);

/// Compares a freshly generated report against stored JSON text. Returns an
/// empty string when they match (numbers to `rel_tol`), otherwise a
/// description of the first difference.
std::string compare_report(const ReconciliationReport& fresh,
                           const std::string& stored_json,
                           double rel_tol = 1e-9);

}  // namespace abvortex
