#include "spinlattice/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinlattice/error.hpp"

namespace spinlattice::spectra {

SpectrumResult eigen_symmetric(const model::HamiltonianMatrix& h) {
  if (h.basis && h.basis->size() != h.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix dimension differs from basis size");
  }
  Eigensystem es = symmetric_eigen(h.entries);
  SpectrumResult out;
  out.eigenvalues = std::move(es.values);
  out.eigenvectors = std::move(es.vectors);
  if (out.eigenvalues.empty()) return out;
  out.ground_vector = out.eigenvectors.column(0);
  if (h.basis && h.basis->sector().statistics == fock::Statistics::Fermion) {
    out.ground_spin = fock::total_spin_label(*h.basis, out.ground_vector);
  }
  return out;
}

SpinProjector::SpinProjector(const fock::Basis& basis, int twice_s) : twice_s_(twice_s) {
  const Eigensystem es = symmetric_eigen(fock::spin_squared_matrix(basis));
  const double s = 0.5 * twice_s;
  const double target = s * (s + 1.0);
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < es.values.size(); ++k) {
    if (std::abs(es.values[k] - target) < 1e-8) keep.push_back(k);
  }
  columns_ = DenseMatrix(basis.size(), keep.size());
  for (std::size_t c = 0; c < keep.size(); ++c)
    for (std::size_t r = 0; r < basis.size(); ++r) columns_(r, c) = es.vectors(r, keep[c]);
}

DenseMatrix SpinProjector::restrict(const DenseMatrix& h) const {
  if (h.rows() != columns_.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "projector and matrix come from different sectors");
  }
  if (columns_.cols() == 0) {
    throw Error(ErrorCode::EmptyBlock,
                "no states with 2S = " + std::to_string(twice_s_) + " in this sector");
  }
  return congruence(h, columns_);
}

double SpinProjector::ground_energy(const model::HamiltonianMatrix& h) const {
  return symmetric_eigen(restrict(h.entries)).values.front();
}

double singlet_energy(const model::DimensionlessCouplings& dc) {
  const double split = dc.u - dc.v - dc.j;
  return -2.0 * (std::sqrt(split * split + 1.0) - (dc.u + dc.v + dc.j));
}

double triplet_energy(const model::DimensionlessCouplings& dc) { return 4.0 * (dc.v - dc.j); }

double transition_point(double u, double v) {
  if (!std::isfinite(u) || !std::isfinite(v)) {
    throw Error(ErrorCode::InvalidArgument, "transition point needs finite couplings");
  }
  // Singlet minus triplet: nondecreasing plus strictly increasing in j.
  auto gap = [u, v](double j) {
    return singlet_energy({u, v, j}) - triplet_energy({u, v, j});
  };
  if (gap(0.0) > 0.0) {
    throw Error(ErrorCode::NoCrossing, "triplet is already below the singlet at J_ex = 0");
  }
  if (gap(0.0) == 0.0) return 0.0;

  double lo = 0.0;
  double hi = 1.0;
  while (gap(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) throw Error(ErrorCode::NoCrossing, "no crossing below J_ex/4J = 1e12");
  }
  for (int iter = 0; iter < 200 && hi - lo > kTransitionTolerance; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (gap(mid) >= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double transition_point_closed_form(double u, double v) {
  const double w = u - v;
  return 0.5 * (std::sqrt(w * w + 0.5) - w);
}

double transition_point_alternate(double u, double v) {
  return 0.5 * (std::abs(u - v) + 0.5 - (u + v));
}

FrequencySet evolution_frequencies(const model::CouplingSet& c, double hbar) {
  c.validate();
  if (!(hbar > 0.0)) throw Error(ErrorCode::InvalidArgument, "hbar must be positive");
  const auto dc = model::to_dimensionless(c);
  const double J = c.hop_j;
  const double U = c.onsite_u;

  FrequencySet f;
  f.hbar = hbar;
  const double hubbard_root = std::sqrt(16.0 * J * J + U * U);
  f.w1 = 0.5 * (hubbard_root + U) / hbar;
  f.w2 = 0.5 * (hubbard_root - U) / hbar;
  const double split = dc.u - dc.v - dc.j;
  const double root = std::sqrt(split * split + 1.0);
  const double sum = dc.u + dc.v + dc.j;
  f.w3 = 2.0 * J * (root + sum) / hbar;
  f.w4 = 2.0 * J * (root - sum) / hbar;
  f.w5 = (c.intersite_v - c.superexchange_jex) / hbar;
  return f;
}

ExtractedCouplings extract_couplings(const FrequencySet& f) {
  if (!(f.hbar > 0.0)) throw Error(ErrorCode::InvalidArgument, "hbar must be positive");
  if (f.w1 < f.w2) throw Error(ErrorCode::InvalidArgument, "expected w1 >= w2");
  if (!(f.w2 > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "w1 and w2 must be positive to recover J > 0");
  }
  const double hbar = f.hbar;
  ExtractedCouplings out;
  auto& c = out.couplings;
  c.hop_j = 0.5 * hbar * std::sqrt(f.w1 * f.w2);
  c.onsite_u = hbar * (f.w1 - f.w2);
  const double u_plus_v_plus_jex = hbar * (f.w3 - f.w4);
  const double v_minus_jex = hbar * f.w5;
  c.intersite_v = 0.5 * (u_plus_v_plus_jex - c.onsite_u + v_minus_jex);
  c.superexchange_jex = 0.5 * (u_plus_v_plus_jex - c.onsite_u - v_minus_jex);

  const auto dc = model::to_dimensionless(c);
  const double split = dc.u - dc.v - dc.j;
  const double expected = 4.0 * c.hop_j * std::sqrt(split * split + 1.0);
  const double observed = hbar * (f.w3 + f.w4);
  out.residual = std::abs(observed - expected) / std::max(std::abs(observed), 1e-300);
  if (out.residual > kFrequencyConsistencyTolerance) {
    throw Error(ErrorCode::InconsistentFrequencies,
                "w3 + w4 disagrees with the recovered couplings (relative residual " +
                    std::to_string(out.residual) + ")");
  }
  return out;
}

}  // namespace spinlattice::spectra
