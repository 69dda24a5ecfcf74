#pragma once

#include <sstream>
#include <string>

#include "equistream/so3/harmonics.hpp"

namespace equistream::so3 {

// Machine-readable statement of every basis/normalization choice, consumed
// by the test suite and by foreign-language oracles. key=value, one per
// line; '#' starts a comment.
inline std::string conventions_manifest() {
  std::ostringstream os;
  os.precision(17);
  os << "# equistream conventions manifest\n";
  os << "m_ordering=ascending_-l_to_l\n";
  os << "harmonic_normalization=orthonormal\n";
  os << "y00=" << kY00 << "\n";
  os << "complex_basis=condon_shortley\n";
  os << "real_basis_change=x_m = (i/sqrt2)(z_m - (-1)^m z_{-m}) [m<0]; z_0 "
        "[m=0]; (1/sqrt2)(z_m + (-1)^m z_{-m}) [m>0]\n";
  os << "l1_value_map=(m=-1,0,1) -> sqrt(3/4pi) * (y, z, -x)\n";
  os << "transformation_side=value_vectors_left: solid(l, R r) = D(l,R) "
        "solid(l, r); feature blocks right-multiply by D^T\n";
  os << "cg_source=complex_racah_conjugated_on_all_three_legs\n";
  os << "cg_frobenius_norm_sq_per_path=2*l_out+1\n";
  os << "cg_odd_path_phase=-i\n";
  os << "eaas_reindex_coefficients=m_f=0 slice of cg_real; the printed "
        "odd-branch factor -2(-1)^{m_o} of the source convention is "
        "absorbed by this basis normalization\n";
  os << "translation_weights=w(l,u) = sqrt(binom(2l,2u) * 4pi * (2l+1) / "
        "((2u+1)(2(l-u)+1))), for R^l(a+b) = sum_u w(l,u) (R^u(a) x "
        "R^{l-u}(b))^l\n";
  os << "max_degree_tables=" << kMaxDegree << "\n";
  os << "irreps_default_max_degree=4\n";
  return os.str();
}

}  // namespace equistream::so3
