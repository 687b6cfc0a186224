#include "ghwlab/cyclotomy.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ghwlab {

namespace {

std::vector<std::complex<double>> roots_of_unity(std::uint32_t p) {
  std::vector<std::complex<double>> zeta(p);
  for (std::uint32_t k = 0; k < p; ++k) zeta[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / p);
  return zeta;
}

// Sum of zeta^t weighted by exact counts, so the only rounding is in the final p terms.
std::complex<double> from_histogram(const std::vector<std::uint64_t>& hist,
                                    const std::vector<std::complex<double>>& zeta) {
  std::complex<double> acc = 0.0;
  for (std::size_t t = 0; t < hist.size(); ++t)
    if (hist[t] != 0) acc += static_cast<double>(hist[t]) * zeta[t];
  return acc;
}

}  // namespace

Cyclotomy::Cyclotomy(std::shared_ptr<const Field> field, std::uint32_t N) : field_(std::move(field)), N_(N) {
  if (N == 0 || field_->group_order() % N != 0)
    throw std::invalid_argument("N = " + std::to_string(N) + " does not divide Q - 1 = " +
                                std::to_string(field_->group_order()));
}

std::vector<Element> Cyclotomy::members(std::uint32_t i) const {
  std::vector<Element> out;
  out.reserve(class_size());
  for (std::uint32_t k = 0; k < class_size(); ++k)
    out.push_back(field_->exp(static_cast<std::int64_t>(i) + static_cast<std::int64_t>(k) * N_));
  return out;
}

std::complex<double> gauss_period(const Cyclotomy& cyc, Element arg) {
  const Field& f = cyc.field();
  std::vector<std::uint64_t> hist(f.characteristic(), 0);
  for (std::uint32_t k = 0; k < cyc.class_size(); ++k)
    ++hist[f.absolute_trace(f.mul(arg, f.exp(static_cast<std::int64_t>(k) * cyc.N())))];
  return from_histogram(hist, roots_of_unity(f.characteristic()));
}

GaussPeriodTable gauss_periods(const Cyclotomy& cyc) {
  const Field& f = cyc.field();
  const std::uint32_t p = f.characteristic();
  GaussPeriodTable table{cyc.N(), cyc.class_size(), {}};
  table.values.assign(cyc.N(), 0.0);
  auto zeta = roots_of_unity(p);

  // eta_i = sum over y in C_i of psi(y); one pass over F_Q^*. Histograms beat direct
  // summation only when a class has more elements than there are trace values.
  if (cyc.class_size() > p) {
    std::vector<std::vector<std::uint64_t>> hist(cyc.N(), std::vector<std::uint64_t>(p, 0));
    for (std::uint32_t k = 0; k < f.group_order(); ++k) ++hist[k % cyc.N()][f.absolute_trace(f.exp(k))];
    for (std::uint32_t i = 0; i < cyc.N(); ++i) table.values[i] = from_histogram(hist[i], zeta);
  } else {
    for (std::uint32_t k = 0; k < f.group_order(); ++k) table.values[k % cyc.N()] += zeta[f.absolute_trace(f.exp(k))];
  }
  return table;
}

std::optional<int> semiprimitive_j(std::uint64_t p, std::uint64_t N) {
  if (N <= 2) throw std::invalid_argument("semiprimitive_j: N must exceed 2");
  if (std::gcd(p, N) != 1) throw std::invalid_argument("semiprimitive_j: gcd(p, N) != 1");
  std::uint64_t pw = p % N;
  for (int j = 1;; ++j) {
    if (pw == N - 1) return j;
    if (pw == 1) return std::nullopt;  // reached ord_N(p) without hitting -1
    pw = static_cast<std::uint64_t>(static_cast<unsigned __int128>(pw) * p % N);
  }
}

}  // namespace ghwlab
