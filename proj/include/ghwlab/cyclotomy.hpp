#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ghwlab/finite_field.hpp"

namespace ghwlab {

// The N cyclotomy classes C_i = gamma^i <gamma^N> of F_Q^*.
class Cyclotomy {
 public:
  Cyclotomy(std::shared_ptr<const Field> field, std::uint32_t N);

  const Field& field() const { return *field_; }
  std::uint32_t N() const { return N_; }
  std::uint32_t class_size() const { return field_->group_order() / N_; }

  // log(x) mod N; throws std::domain_error for x = 0.
  std::uint32_t class_index(Element x) const {
    if (x == 0) throw std::domain_error("class_index: zero has no cyclotomy class");
    return field_->log(x) % N_;
  }
  bool in_class(Element x, std::uint32_t i) const { return x != 0 && field_->log(x) % N_ == i; }

  std::vector<Element> members(std::uint32_t i) const;

 private:
  std::shared_ptr<const Field> field_;
  std::uint32_t N_;
};

// sum_{x in C_0} zeta_p^{Tr(arg x)}. At arg = 0 every term is 1.
std::complex<double> gauss_period(const Cyclotomy& cyc, Element arg);

// eta_i = Gauss period at gamma^i for i in [0, N).
struct GaussPeriodTable {
  std::uint32_t N = 0;
  std::uint32_t class_size = 0;
  std::vector<std::complex<double>> values;

  // Period at an arbitrary argument: eta_{log(arg) mod N}, or the class size at zero.
  std::complex<double> at(const Field& field, Element arg) const {
    if (arg == 0) return {static_cast<double>(class_size), 0.0};
    return values[field.log(arg) % N];
  }
};

GaussPeriodTable gauss_periods(const Cyclotomy& cyc);

// Smallest j >= 1 with p^j == -1 (mod N), if any. Requires N > 2 and gcd(p, N) = 1.
std::optional<int> semiprimitive_j(std::uint64_t p, std::uint64_t N);

}  // namespace ghwlab
