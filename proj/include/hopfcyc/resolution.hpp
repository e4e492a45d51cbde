#pragma once

#include "hopfcyc/hopf.hpp"
#include "hopfcyc/sparse.hpp"

namespace hopfcyc {

/// Element of H (x) H^op with multiplication (a|b)(a'|b') = aa' | b'b.
using HeWord = std::pair<BasisWord, BasisWord>;
using HeElement = Combo<HeWord>;

HeElement he_one(const HopfAlgebra& H);
HeElement he_of(const HopfAlgebra& H, const Element& a, const Element& b);
HeElement he_mul(const HopfAlgebra& H, const HeElement& x, const HeElement& y);
Element he_collapse(const HopfAlgebra& H, const HeElement& x);  // a|b -> ab
std::string he_to_string(const HopfAlgebra& H, const HeElement& x);

/// Element of a free H^e-module with named generators: coefficients per
/// generator index.
using ModWord = std::pair<HeWord, int>;
using ModElement = Combo<ModWord>;

/// Free resolution of H over H^e given by ranks and differentials with
/// H^e-entries; degree n differential maps M_n -> M_{n-1} (degree 0 is the
/// base module H^e itself, with the multiplication augmentation to H).
struct ResolutionData {
    const HopfAlgebra* H = nullptr;
    std::string name;
    std::vector<std::vector<std::string>> gens;  // per degree
    // diff[n][src] = list of (coefficient in H^e, target index in degree n-1)
    std::vector<std::vector<std::vector<std::pair<HeElement, int>>>> diff;

    int max_degree() const { return static_cast<int>(gens.size()) - 1; }
    int rank(int n) const { return static_cast<int>(gens[static_cast<size_t>(n)].size()); }
    int gen_index(int degree, const std::string& name) const;

    ModElement apply_diff(int n, const ModElement& x) const;  // B-linear extension
};

struct ErratumEntry {
    std::string id;
    std::string location;   // e.g. "family 2p+4, source thS(p+2), term 4"
    std::string printed;    // transcription as printed
    std::string corrected;  // shipped datum
    std::string note;       // what identity the correction restores
};

struct ResolutionBundle {
    ResolutionData data;
    std::vector<ErratumEntry> errata_applied;
};

/// Load "uqsl2" or "aslq2" from the data directory. For aslq2 the p-indexed
/// differential families are instantiated up to degree_cap. Errata from the
/// companion ledger file are applied unless apply_errata is false.
ResolutionBundle load_resolution(const std::string& name, const HopfAlgebra& H, int degree_cap,
                                 const std::string& data_dir, bool apply_errata = true);

struct ResolutionCheck {
    bool pass = true;
    long composites_checked = 0;
    std::vector<std::string> failures;  // "d_{n} d_{n+1} != 0 at <gen>: residual ..."
};

/// d.d = 0 for every generator up to degree_cap, plus the augmentation
/// identity mu . d_1 = 0.
ResolutionCheck verify_resolution(const ResolutionData& r, int degree_cap);

struct BaseChangeResult {
    std::vector<int> dims;
    std::vector<std::vector<std::pair<std::string, std::string>>> representatives;
    // per degree: list of (generator name, coefficient) pairs
};

/// Apply characters to the two tensor factors of every coefficient
/// (chi_first on a, chi_second on b in a|b), producing a complex of
/// k-vector spaces; returns homology with named representatives.
BaseChangeResult base_change_homology(const ResolutionData& r, const Character& chi_first,
                                      const Character& chi_second, int n_max);

struct HomotopyCheck {
    bool pass = true;
    long checked = 0;
    std::vector<std::string> failures;
};

/// Contracting homotopy evaluators of the uqsl2 resolution:
/// S_-1 : H -> M_0,  S_n : M_n -> M_(n+1) (zero for n >= 3).
struct UqHomotopyMaps {
    std::function<ModElement(const Element&)> s_minus1;
    std::function<ModElement(const ModElement&)> s0, s1, s2;
};
UqHomotopyMaps uqsl2_homotopy_maps(const ResolutionData& r);

/// The contracting homotopy of the uqsl2 resolution: S d + d S = id on module
/// generators tensored with PBW words sigma^l x^m y^n, |l| <= lmax,
/// m, n <= dmax; also checks the augmentation level and S_n = 0 for n >= 3.
HomotopyCheck verify_homotopy_uqsl2(const ResolutionData& r, int lmax, int dmax);

/// Chain map into the bar resolution lifted inductively through the bar
/// contraction s(a_0 (x) ... ) = 1 (x) a_0 (x) ...; verified degreewise.
struct ComparisonLift {
    // f[n][gen] as an element of Bar_n = H^{(x)(n+2)}
    std::vector<std::vector<TensorElement>> f;
    bool chain_map_verified = false;
    long checked = 0;
    std::vector<std::string> failures;
};

ComparisonLift comparison_lift(const ResolutionData& r, int degree_cap);

/// The bar resolution of kG as a ResolutionData (used as the second pipeline
/// in the Hochschild cross-validation).
ResolutionData bar_resolution(const HopfAlgebra& H, int degree_cap, long degree_bound);

}  // namespace hopfcyc
