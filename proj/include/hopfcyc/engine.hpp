#pragma once

#include "hopfcyc/complex.hpp"
#include "hopfcyc/instances.hpp"

namespace hopfcyc {

struct HomologyReport {
    std::vector<int> dims;                      // per degree 0..n_max
    std::vector<std::vector<int>> weight_dims;  // per weight block (graded case)
    std::vector<long> weights;                  // block labels
    bool weight_stable = true;                  // blocks unchanged when cap raised
};

/// Hochschild homology of the b-complex of a cyclic module; graded instances
/// are computed per weight block <= weight_cap and summed. Throws
/// NotTruncatable for instances without a homology-compatible grading.
HomologyReport hochschild_homology(const CyclicModule& m, int n_max, long weight_cap);

struct CyclicHomologyReport {
    std::vector<int> dims;                          // HC_n
    std::vector<std::vector<int>> weight_dims;
    std::vector<long> weights;
    bool weight_stable = true;
    // stabilized periodic dimensions over the window, per parity; valid only
    // when the tail of HC_n, HC_{n-2}, ... has settled
    int hp_even = -1, hp_odd = -1;
    bool stabilized_even = false, stabilized_odd = false;
};

CyclicHomologyReport cyclic_homology(const CyclicModule& m, int n_max, long weight_cap);

/// Agreement guard: HC via the unnormalized CC bicomplex on a finite instance.
std::vector<int> cyclic_homology_cc_guard(const CyclicModule& m, int n_max, long bound);

struct KaroubiReport {
    std::vector<int> hc_dims;
    std::vector<int> karoubi_dims;  // sum of H_{n-2i}
    std::vector<int> hochschild;
    bool equal = false;
};

/// Theorem-4.1-style comparison for cocommutative H with the pair (eps, 1):
/// HC_n versus the direct sum of Hochschild groups.
KaroubiReport karoubi_compare(const HopfAlgebra& H, int n_max, long weight_cap);

struct HpReport {
    std::vector<int> hc_cohomology;  // HC^n of the CM cocyclic module, n = 0..window
    int hp0 = -1, hp1 = -1;          // stabilized values
    bool stabilized = false;
    std::vector<int> coalgebra_cohomology;  // cobar H^i
    int cobar_hp0 = -1, cobar_hp1 = -1;
    bool equal = false;
    int window = 0;
};

/// Theorem-4.2 desk check for a finite-dimensional commutative Hopf algebra:
/// HP^0/HP^1 from the cocyclic bicomplex versus the cobar complex with trivial
/// coefficients.
HpReport commutative_hp_compare(const HopfAlgebra& H, int n_max);

}  // namespace hopfcyc
