#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "occ/common.hpp"

namespace occ::vir {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Truncated vacuum module of the Virasoro algebra at central charge c:
// basis L(-n_1)...L(-n_k)|0> with n_1 >= ... >= n_k >= 2 and total weight
// <= depth. The commutation relation used throughout is
//   [L(m), L(n)] = (m - n) L(m+n) + (c/12)(m^3 - m) delta_{m+n,0}.
class VacuumModule {
 public:
  VacuumModule(cplx c, int depth);

  cplx c() const { return c_; }
  int depth() const { return depth_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int weight(int idx) const { return weights_[idx]; }
  const std::vector<std::vector<int>>& basis() const { return basis_; }

  // Matrix of L(n) on the truncated basis; |n| <= depth.
  const Mat& l(int n) const;

  // exp(-(sum_j A[j-1] L(sign*j))) as a matrix; the grading truncation makes
  // the exponential series terminate.
  Mat exp_l(const std::vector<cplx>& A, int sign) const;

  // Diagonal a0^{-L(0)} with powers on the fixed log branch.
  Mat l0_scale(cplx a0) const;

  // <vac| exp(-L_+(A)) a0^{-L(0)} exp(-L_-(B)) |vac>.
  cplx vacuum_amplitude(const std::vector<cplx>& A, const std::vector<cplx>& B,
                        cplx a0) const;

 private:
  cplx c_;
  int depth_;
  std::vector<std::vector<int>> basis_;
  std::vector<int> weights_;
  std::map<std::vector<int>, int> index_;
  std::map<int, Mat> lmats_;

  std::map<std::vector<int>, cplx> apply_l(int m,
                                           const std::vector<int>& word) const;
  std::map<std::vector<int>, cplx> insert_creation(
      int b, const std::vector<int>& word) const;
};

// Shared immutable module cache keyed by (c, depth).
const VacuumModule& vacuum_module(cplx c, int depth);

}  // namespace occ::vir
