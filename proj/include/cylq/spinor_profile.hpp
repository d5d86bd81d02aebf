#pragma once

#include <string>
#include <vector>

namespace cylq {

/// Branch of the coupled two-component solution: the two components are
/// related by Z_-(z) = +Z_+(-z-b) (symmetric) or Z_-(z) = -Z_+(-z-b)
/// (antisymmetric). The antisymmetric branch is the symmetric one with
/// the coupling sign reversed.
enum class Branch { symmetric, antisymmetric };

inline double branch_sign(Branch br) { return br == Branch::symmetric ? 1.0 : -1.0; }

inline std::string branch_name(Branch br) {
  return br == Branch::symmetric ? "symmetric" : "antisymmetric";
}

/// Sampled two-component axial profile. Energy eigenstates have real
/// components. `normalized` records whether the discrete norm
/// sum (Z+^2 + Z-^2) dz was scaled to 1.
struct SpinorProfile {
  std::vector<double> z;
  std::vector<double> zplus;
  std::vector<double> zminus;
  int ell = 0;
  double energy = 0.0;
  Branch branch = Branch::symmetric;
  bool normalized = false;
  /// L2 size of each perturbative order's contribution, |eps|^k ||f_k||;
  /// a non-decreasing step indicates the expansion is outside its
  /// comfortable range.
  std::vector<double> term_norms;
  bool converging = true;
};

}  // namespace cylq
