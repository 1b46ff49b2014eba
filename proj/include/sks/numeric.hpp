#ifndef SKS_NUMERIC_HPP
#define SKS_NUMERIC_HPP

#include <complex>
#include <cstdint>

namespace sks {

// Compensated (Kahan) accumulator. All long sums in the library run through
// this in a fixed lexicographic term order, so results are bit-reproducible.
class KahanSum {
public:
  void add(double x) {
    const double y = x - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class ComplexKahanSum {
public:
  void add(std::complex<double> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
  KahanSum re_, im_;
};

// Maps 64 random bits to [0,1). Used instead of uniform_real_distribution so
// that identical seeds give identical streams on any standard library.
inline double bits_to_unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace sks

#endif
