#ifndef SKS_SYMBOL_HPP
#define SKS_SYMBOL_HPP

#include <Eigen/Dense>
#include <atomic>
#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "sks/kernel.hpp"
#include "sks/lattice.hpp"

namespace sks {

// Periodized symbol of the kernel over the dual translates:
//
//   Υ^{-1}(z) = Σ_m F(K)(z + D·m),          D = 2π(A^{-1})^T   (frequency)
//             = |det A| Σ_m K(-A^T m) exp(i<Am, z>)            (spatial)
//
// The two truncated forms are computed independently; their agreement is the
// Poisson-summation check. No argument reduction is performed: the value is
// the literal truncated sum, so periodicity is a genuine property of the
// truncation, not an artifact.
class SymbolFunction {
public:
  // freq/spatial truncation 0 means: derive from the kernel tail radii so
  // the first omitted term is below 1e-17 of the leading term for every z
  // up to one cell diameter plus two dual periods away from the origin.
  SymbolFunction(std::shared_ptr<const Lattice> lattice,
                 std::shared_ptr<const KernelInterface> kernel,
                 int freq_truncation = 0, int spatial_truncation = 0);

  double inverse_frequency(const Eigen::VectorXd& z) const;
  std::complex<double> inverse_spatial(const Eigen::VectorXd& z) const;
  // Υ(z) = 1 / Υ^{-1}(z)
  double upsilon(const Eigen::VectorXd& z) const;

  // Minimum of inverse_frequency over fundamental_domain_grid(N).
  double check_nondegeneracy(int grid_per_axis) const;

  // max over zs of |freq form - Re(spatial form)|.
  double poisson_residual(std::span<const Eigen::VectorXd> zs) const;

  int freq_truncation() const { return freq_trunc_; }
  int spatial_truncation() const { return spatial_trunc_; }
  double min_symbol_seen() const { return min_symbol_seen_.load(); }

  const Lattice& lattice() const { return *lattice_; }
  const KernelInterface& kernel() const { return *kernel_; }
  std::shared_ptr<const Lattice> lattice_ptr() const { return lattice_; }
  std::shared_ptr<const KernelInterface> kernel_ptr() const { return kernel_; }

private:
  void record_min(double v) const;

  std::shared_ptr<const Lattice> lattice_;
  std::shared_ptr<const KernelInterface> kernel_;
  int freq_trunc_;
  int spatial_trunc_;
  std::vector<double> freq_translates_;   // D·m, flat, lex order
  std::vector<double> spatial_points_;    // A·m, flat, lex order
  std::vector<double> spatial_weights_;   // |det A|·K(-A^T m), lex order
  mutable std::atomic<double> min_symbol_seen_;
};

}  // namespace sks

#endif
