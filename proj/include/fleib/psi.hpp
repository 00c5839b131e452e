#ifndef FLEIB_PSI_HPP
#define FLEIB_PSI_HPP

#include <vector>

#include "fleib/multipoly.hpp"

namespace fleib {

// Transition polynomials psi_3..psi_{n+1} in the variables
// y, z_3, ..., z_{n+1} (variable 0 is y; variable j >= 1 is z_{j+2}).
// psi_t is triangular: z_t enters linearly with coefficient 1 and the rest
// involves only y and z_3..z_{t-1}; all coefficients are integers.
struct PsiSystem {
    int n = 3;
    std::vector<MultiPoly> polys; // polys[t-3] = psi_t, t = 3..n+1

    const MultiPoly& psi(int t) const { return polys.at(t - 3); }
    int var_count() const { return n; } // y plus z_3..z_{n+1}
    // Variable index of z_s (s in 3..n+1) inside the polynomials.
    static int z_index(int s) { return s - 2; }
};

// Builds the system by the weighted recursion
//   psi_t = z_t - sum_{k=3}^{t-1} ( sum_m C(k-1, k-1-m) y^m S_{t,k,m} ) psi_k
// where S_{t,k,1} = z_{t+2-k} and, for m >= 2, S_{t,k,m} sums the products
//   z_{t+3-i_{m-1}} z_{i_{m-1}+3-i_{m-2}} ... z_{i_2+3-i_1} z_{i_1+3-k-m}
// over chains k+m <= i_1 <= ... <= i_{m-1} <= t; psi_{n+1} = z_{n+1}.
// Earlier psi_k are reused, never re-expanded.
PsiSystem psi_generate(int n);

} // namespace fleib

#endif
