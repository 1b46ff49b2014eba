#ifndef SKS_LATTICE_HPP
#define SKS_LATTICE_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

#include "sks/errors.hpp"

namespace sks {

inline constexpr std::size_t kDefaultIndexCap = 10'000'000;

// Finite set of integer vectors in Z^n, stored flat in lexicographic order
// (first coordinate slowest). The ordering is the reduction order of every
// truncated lattice sum in the library.
struct IndexSet {
  int dim = 0;
  std::vector<int> flat;

  std::size_t count() const { return dim == 0 ? 0 : flat.size() / dim; }
  std::span<const int> operator[](std::size_t i) const {
    return {flat.data() + i * static_cast<std::size_t>(dim),
            static_cast<std::size_t>(dim)};
  }
};

// All m in Z^dim with |m|_inf <= radius, lexicographic; size (2r+1)^dim.
IndexSet enumerate_box(int dim, int radius, std::size_t cap = kDefaultIndexCap);

// Position of index s inside enumerate_box(dim, radius); -1 if outside.
std::ptrdiff_t box_position(std::span<const int> s, int radius);

// The lattice A·Z^n together with its dual translate basis 2π(A^{-1})^T.
// Immutable after construction; all member calls are pure.
class Lattice {
public:
  explicit Lattice(Eigen::MatrixXd generator);

  int dim() const { return dim_; }
  const Eigen::MatrixXd& generator() const { return generator_; }
  const Eigen::MatrixXd& inverse() const { return inverse_; }
  // D = 2π (A^{-1})^T; columns span the dual translate set.
  const Eigen::MatrixXd& dual_basis() const { return dual_basis_; }
  double abs_det() const { return abs_det_; }
  double cond_estimate() const { return cond_estimate_; }

  // A·m
  Eigen::VectorXd point(std::span<const int> m) const;
  // D·l
  Eigen::VectorXd dual_point(std::span<const int> l) const;

private:
  int dim_;
  Eigen::MatrixXd generator_;
  Eigen::MatrixXd inverse_;
  Eigen::MatrixXd dual_basis_;
  double abs_det_;
  double cond_estimate_;
};

// Uniform half-open grid on the dual fundamental domain: the N^n points
// D·(j/N), j in {0,..,N-1}^n, lexicographic in j, stored flat row-major.
std::vector<double> fundamental_domain_grid(const Lattice& lat,
                                            int points_per_axis,
                                            std::size_t cap = kDefaultIndexCap);

}  // namespace sks

#endif
