#include "spinlattice/fock.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "spinlattice/error.hpp"

namespace spinlattice::fock {

namespace {

constexpr std::size_t kMaxSectorDimension = 5'000'000;

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

double parity_sign(int count) { return count % 2 == 0 ? 1.0 : -1.0; }

// Occupied fermionic modes in canonical order (up modes, then down modes).
std::vector<std::size_t> occupied_modes(const FockState& s) {
  const std::size_t n = s.n_sites();
  std::vector<std::size_t> modes;
  for (std::size_t i = 0; i < n; ++i)
    if (s.up()[i]) modes.push_back(i);
  for (std::size_t i = 0; i < s.down().size(); ++i)
    if (s.down()[i]) modes.push_back(n + i);
  return modes;
}

// Builds the state whose creation string is `images` (in the given operator
// order) and returns it with the sign of sorting that string.
Amplitude from_mode_string(std::vector<std::size_t> images, std::size_t n_sites) {
  int inversions = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[i] > images[j]) ++inversions;
  std::vector<std::uint8_t> up(n_sites, 0);
  std::vector<std::uint8_t> down(n_sites, 0);
  for (std::size_t m : images) {
    if (m < n_sites) {
      up[m] = 1;
    } else {
      down[m - n_sites] = 1;
    }
  }
  return {FockState(std::move(up), std::move(down)), parity_sign(inversions)};
}

void check_site(const FockState& s, std::size_t site) {
  if (site >= s.n_sites()) {
    throw Error(ErrorCode::InvalidArgument, "site " + std::to_string(site) + " out of range");
  }
}

void check_boson_spin(Spin spin) {
  if (spin != Spin::Up) {
    throw Error(ErrorCode::InvalidArgument, "spinless bosons only occupy the spin-up list");
  }
}

using SparseVector = std::map<FockState, double>;

// Applies sum_i a+_{i,to} a_{i,from}, i.e. S+ (from = Down) or S- (from = Up).
SparseVector apply_ladder(const SparseVector& in, Spin from) {
  SparseVector out;
  for (const auto& [state, weight] : in) {
    for (std::size_t i = 0; i < state.n_sites(); ++i) {
      auto removed = annihilate(state, i, from, Statistics::Fermion);
      if (!removed) continue;
      auto added = create(removed->state, i, opposite(from), Statistics::Fermion);
      if (!added) continue;
      out[added->state] += weight * removed->coefficient * added->coefficient;
    }
  }
  return out;
}

}  // namespace

FockState::FockState(std::vector<std::uint8_t> up, std::vector<std::uint8_t> down)
    : up_(std::move(up)), down_(std::move(down)) {
  if (!down_.empty() && down_.size() != up_.size()) {
    throw Error(ErrorCode::InvalidArgument, "up and down occupation lists differ in length");
  }
}

int FockState::occupation(std::size_t site, Spin spin) const {
  if (spin == Spin::Up) return up_.at(site);
  return down_.empty() ? 0 : down_.at(site);
}

int FockState::site_occupation(std::size_t site) const {
  return occupation(site, Spin::Up) + occupation(site, Spin::Down);
}

int FockState::n_up() const noexcept {
  int n = 0;
  for (auto x : up_) n += x;
  return n;
}

int FockState::n_down() const noexcept {
  int n = 0;
  for (auto x : down_) n += x;
  return n;
}

int FockState::modes_before(std::size_t site, Spin spin) const {
  int count = 0;
  if (spin == Spin::Up) {
    for (std::size_t i = 0; i < site; ++i) count += up_[i];
    return count;
  }
  for (auto x : up_) count += x;
  for (std::size_t i = 0; i < site; ++i) count += down_[i];
  return count;
}

FockState FockState::with_occupation(std::size_t site, Spin spin, int value) const {
  FockState copy = *this;
  auto& list = spin == Spin::Up ? copy.up_ : copy.down_;
  if (list.empty()) list.assign(up_.size(), 0);
  list.at(site) = static_cast<std::uint8_t>(value);
  return copy;
}

std::string FockState::to_string() const {
  std::string out = "|";
  for (std::size_t i = 0; i < n_sites(); ++i) {
    if (i > 0) out += ',';
    if (down_.empty()) {
      out += std::to_string(up_[i]);
      continue;
    }
    std::string site;
    if (up_[i]) site += 'u';
    if (down_[i]) site += 'd';
    out += site.empty() ? "0" : site;
  }
  return out + ">";
}

std::optional<std::size_t> Basis::index_of(const FockState& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t sector_dimension(const Sector& sector) {
  const auto n = static_cast<std::size_t>(sector.n_sites);
  if (sector.statistics == Statistics::Fermion) {
    return binomial(n, static_cast<std::size_t>(sector.n_up)) *
           binomial(n, static_cast<std::size_t>(sector.n_down));
  }
  const auto particles = static_cast<std::size_t>(sector.n_up);
  return binomial(n + particles - 1, particles);
}

Basis enumerate_states(int n_sites, int n_up, int n_down, Statistics statistics) {
  if (n_sites < 1 || n_up < 0 || n_down < 0) {
    throw Error(ErrorCode::InvalidSector, "need n_sites >= 1 and nonnegative particle counts");
  }
  if (statistics == Statistics::Fermion && (n_up > n_sites || n_down > n_sites)) {
    throw Error(ErrorCode::InvalidSector, "fermionic particle count exceeds number of sites");
  }
  if (statistics == Statistics::Boson && n_down != 0) {
    throw Error(ErrorCode::InvalidSector, "spinless bosons carry no spin-down particles");
  }
  if (statistics == Statistics::Boson && n_up > 255) {
    throw Error(ErrorCode::InvalidSector, "bosonic occupation exceeds 255 per site");
  }

  Basis basis;
  basis.sector_ = {n_sites, n_up, n_down, statistics};
  if (sector_dimension(basis.sector_) > kMaxSectorDimension) {
    throw Error(ErrorCode::SectorTooLarge, "sector dimension exceeds enumeration cap");
  }
  const auto n = static_cast<std::size_t>(n_sites);

  // Occupation lists for `particles` items, in decreasing lexicographic order.
  auto configurations = [n](int particles, int max_per_site) {
    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> current(n, 0);
    std::function<void(std::size_t, int)> fill = [&](std::size_t site, int left) {
      if (site == n) {
        if (left == 0) out.push_back(current);
        return;
      }
      for (int k = std::min(left, max_per_site); k >= 0; --k) {
        current[site] = static_cast<std::uint8_t>(k);
        fill(site + 1, left - k);
      }
      current[site] = 0;
    };
    fill(0, particles);
    return out;
  };

  if (statistics == Statistics::Boson) {
    for (auto& up : configurations(n_up, n_up)) basis.states_.emplace_back(std::move(up), std::vector<std::uint8_t>{});
  } else {
    const auto ups = configurations(n_up, 1);
    const auto downs = configurations(n_down, 1);
    basis.states_.reserve(ups.size() * downs.size());
    for (const auto& up : ups)
      for (const auto& down : downs) basis.states_.emplace_back(up, down);
  }
  for (std::size_t i = 0; i < basis.states_.size(); ++i) basis.index_.emplace(basis.states_[i], i);
  return basis;
}

std::optional<Amplitude> annihilate(const FockState& s, std::size_t site, Spin spin,
                                    Statistics statistics) {
  check_site(s, site);
  const int n = s.occupation(site, spin);
  if (statistics == Statistics::Boson) {
    check_boson_spin(spin);
    if (n == 0) return std::nullopt;
    return Amplitude{s.with_occupation(site, spin, n - 1), std::sqrt(static_cast<double>(n))};
  }
  if (n == 0) return std::nullopt;
  return Amplitude{s.with_occupation(site, spin, 0), parity_sign(s.modes_before(site, spin))};
}

std::optional<Amplitude> create(const FockState& s, std::size_t site, Spin spin,
                                Statistics statistics) {
  check_site(s, site);
  const int n = s.occupation(site, spin);
  if (statistics == Statistics::Boson) {
    check_boson_spin(spin);
    if (n == 255) return std::nullopt;
    return Amplitude{s.with_occupation(site, spin, n + 1), std::sqrt(static_cast<double>(n + 1))};
  }
  if (n == 1) return std::nullopt;
  return Amplitude{s.with_occupation(site, spin, 1), parity_sign(s.modes_before(site, spin))};
}

std::optional<Amplitude> apply_hop(const FockState& s, std::size_t from_site, std::size_t to_site,
                                   Spin spin, Statistics statistics) {
  check_site(s, from_site);
  check_site(s, to_site);
  if (from_site == to_site) {
    throw Error(ErrorCode::InvalidArgument, "hop requires distinct sites");
  }
  auto removed = annihilate(s, from_site, spin, statistics);
  if (!removed) return std::nullopt;
  auto added = create(removed->state, to_site, spin, statistics);
  if (!added) return std::nullopt;
  added->coefficient *= removed->coefficient;
  return added;
}

std::optional<Amplitude> apply_exchange(const FockState& s, std::size_t site_a, std::size_t site_b) {
  check_site(s, site_a);
  check_site(s, site_b);
  if (site_a == site_b) {
    throw Error(ErrorCode::InvalidArgument, "exchange requires distinct sites");
  }
  constexpr auto kF = Statistics::Fermion;
  for (Spin sigma : {Spin::Up, Spin::Down}) {
    const Spin bar = opposite(sigma);
    // Rightmost operator acts first.
    auto step1 = annihilate(s, site_a, bar, kF);
    if (!step1) continue;
    auto step2 = annihilate(step1->state, site_b, sigma, kF);
    if (!step2) continue;
    auto step3 = create(step2->state, site_b, bar, kF);
    if (!step3) continue;
    auto step4 = create(step3->state, site_a, sigma, kF);
    if (!step4) continue;
    step4->coefficient *= step1->coefficient * step2->coefficient * step3->coefficient;
    return step4;
  }
  return std::nullopt;
}

Amplitude apply_site_permutation(const FockState& s, std::span<const std::size_t> permutation) {
  const std::size_t n = s.n_sites();
  if (permutation.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "permutation length differs from site count");
  }
  if (s.down().empty()) {
    // Bosonic: plain relabeling.
    std::vector<std::uint8_t> up(n, 0);
    for (std::size_t i = 0; i < n; ++i) up.at(permutation[i]) = s.up()[i];
    return {FockState(std::move(up), {}), 1.0};
  }
  std::vector<std::size_t> images;
  for (std::size_t m : occupied_modes(s)) {
    images.push_back(m < n ? permutation[m] : n + permutation[m - n]);
  }
  return from_mode_string(std::move(images), n);
}

Amplitude apply_spin_flip(const FockState& s) {
  const std::size_t n = s.n_sites();
  std::vector<std::size_t> images;
  for (std::size_t m : occupied_modes(s)) images.push_back(m < n ? m + n : m - n);
  return from_mode_string(std::move(images), n);
}

DenseMatrix spin_squared_matrix(const Basis& basis) {
  if (basis.sector().statistics != Statistics::Fermion) {
    throw Error(ErrorCode::InvalidSector, "total spin is defined for spinful fermions only");
  }
  const std::size_t dim = basis.size();
  const double sz = 0.5 * (basis.sector().n_up - basis.sector().n_down);
  DenseMatrix m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const SparseVector ket{{basis[j], 1.0}};
    SparseVector lowered_raised = apply_ladder(apply_ladder(ket, Spin::Up), Spin::Down);
    SparseVector raised_lowered = apply_ladder(apply_ladder(ket, Spin::Down), Spin::Up);
    m(j, j) += sz * sz;
    for (const auto* part : {&lowered_raised, &raised_lowered}) {
      for (const auto& [state, weight] : *part) {
        const auto i = basis.index_of(state);
        if (!i) throw Error(ErrorCode::InvalidSector, "S^2 left the particle-number sector");
        m(*i, j) += 0.5 * weight;
      }
    }
  }
  return m;
}

std::string SpinLabel::to_string() const {
  auto half = [](int twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  };
  if (mixed()) return "Mixed(Sz=" + half(twice_sz) + ")";
  return "S=" + half(*twice_s) + ",Sz=" + half(twice_sz);
}

SpinLabel total_spin_label(const Basis& basis, std::span<const double> vector) {
  return total_spin_label(basis, spin_squared_matrix(basis), vector);
}

SpinLabel total_spin_label(const Basis& basis, const DenseMatrix& spin_squared,
                           std::span<const double> vector) {
  if (vector.size() != basis.size()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length " + std::to_string(vector.size()) +
                                                  " differs from basis size " +
                                                  std::to_string(basis.size()));
  }
  if (std::abs(norm(vector) - 1.0) > 1e-8) {
    throw Error(ErrorCode::InvalidArgument, "spin label needs a normalized vector");
  }
  SpinLabel label;
  label.twice_sz = basis.sector().n_up - basis.sector().n_down;

  if (spin_squared.rows() != basis.size() || !spin_squared.square()) {
    throw Error(ErrorCode::DimensionMismatch, "S^2 matrix does not match the basis");
  }
  const std::vector<double> image = multiply(spin_squared, vector);
  const double expectation = dot(vector, image);
  double residual = 0.0;
  for (std::size_t i = 0; i < vector.size(); ++i) {
    const double r = image[i] - expectation * vector[i];
    residual += r * r;
  }
  if (std::sqrt(residual) > kSpinEigenTolerance) return label;

  const int twice_s = static_cast<int>(std::lround(std::sqrt(1.0 + 4.0 * expectation) - 1.0));
  const double s = 0.5 * twice_s;
  if (twice_s < std::abs(label.twice_sz) || (twice_s - label.twice_sz) % 2 != 0 ||
      std::abs(s * (s + 1.0) - expectation) > kSpinEigenTolerance) {
    return label;
  }
  label.twice_s = twice_s;
  return label;
}

}  // namespace spinlattice::fock
