#pragma once

#include <functional>

#include "hopfcyc/hopf.hpp"

namespace hopfcyc {

/// A (co)simplicial/(co)cyclic module given by operator evaluators on sparse
/// tensor elements. Level n of a module with slot_offset s has n+s tensor
/// slots over the factor algebra; level 0 with offset 0 is the ground field
/// (empty tensor words).
struct CyclicModule {
    std::string name;
    const Algebra* alg = nullptr;
    FieldId field = FieldId::rationals();
    int slot_offset = 0;
    bool has_cyclic = true;
    GradingKind grading = GradingKind::Finite;

    // face(n, i): level n -> n-1, i = 0..n
    std::function<TensorElement(int, int, const TensorElement&)> face;
    // degeneracy(n, i): level n -> n+1, i = 0..n
    std::function<TensorElement(int, int, const TensorElement&)> degeneracy;
    // cyclic(n): level n -> n
    std::function<TensorElement(int, const TensorElement&)> cyclic;
    // spanning tensor words at level n, total degree <= bound (finite: all)
    std::function<std::vector<TensorWord>(int, long)> level_words;
    // words of exact total weight w (graded instances only)
    std::function<std::vector<TensorWord>(int, long)> level_words_weight;

    int slots(int level) const { return level + slot_offset; }
};

struct CocyclicModule {
    std::string name;
    const Algebra* alg = nullptr;
    FieldId field = FieldId::rationals();
    int slot_offset = 0;

    // coface(n, i): level n-1 -> n, i = 0..n
    std::function<TensorElement(int, int, const TensorElement&)> coface;
    // codegeneracy(n, i): level n+1 -> n, i = 0..n
    std::function<TensorElement(int, int, const TensorElement&)> codegeneracy;
    // cocyclic(n): level n -> n
    std::function<TensorElement(int, const TensorElement&)> cocyclic;
    std::function<std::vector<TensorWord>(int, long)> level_words;

    int slots(int level) const { return level + slot_offset; }
};

/// Level-indexed linear map between modules.
struct CyclicMap {
    std::string name;
    const CyclicModule* src = nullptr;
    const CyclicModule* dst = nullptr;
    std::function<TensorElement(int, const TensorElement&)> apply;
};

// ---------------------------------------------------------------------------
// constructors

/// The Hopf-algebra cyclic module for a modular pair in involution. Levels are
/// H^{(x)n} with level 0 = k. The pair is validated with
/// check_modular_involution unless `unchecked`.
CyclicModule build_hopf_cyclic(const HopfAlgebra& H, const ModularPair& pair,
                               bool unchecked = false, long check_degree_bound = 3);

/// Standard cyclic module C_*(A) of an algebra: levels A^{(x)(n+1)}.
CyclicModule build_algebra_cyclic(const Algebra& A);

struct PathSpace {
    CyclicModule simplicial;          // E H as a simplicial module (cyclic when flagged)
    bool cyclic_available = false;    // requires cocommutativity
    std::function<TensorElement(int, const TensorElement&)> extra_degeneracy;  // prepend 1
};

/// Path space E H of the (epsilon, 1) module: levels H^{(x)(n+1)}; the cyclic
/// operator t_n is installed only for cocommutative H (throws
/// NotCocommutative when `require_cyclic` and the flag is missing).
PathSpace build_path_space(const HopfAlgebra& H, bool require_cyclic = false);

/// Connes-Moscovici cocyclic module of H for (delta, sigma); levels H^{(x)n}.
CocyclicModule build_cm_cocyclic(const HopfAlgebra& H, const ModularPair& pair);

/// Prop-4.3-style cocyclic module on levels H^{(x)(n+1)} for commutative H.
CocyclicModule build_commutative_cocyclic(const HopfAlgebra& H);

// ---------------------------------------------------------------------------
// verification

struct AxiomReport {
    bool pass = true;
    long checked = 0;
    std::vector<std::string> failures;
    void merge(const CheckReport& r, const std::string& tag);
};

/// Simplicial identities plus, when present, the extra cyclic relations
///   tau^(n+1) = id,  d_i tau = tau d_{i-1},  d_0 tau = d_n,
///   s_i tau = tau s_{i-1},  s_0 tau = tau^2 s_n,
/// on every spanning word of total degree <= D at levels <= n_max.
AxiomReport verify_cyclic_axioms(const CyclicModule& m, int n_max, long degree_bound);
AxiomReport verify_cocyclic_axioms(const CocyclicModule& m, int n_max, long degree_bound);

/// Commutation of a map with faces, degeneracies and (optionally) tau.
AxiomReport verify_cyclic_map(const CyclicMap& f, int n_max, long degree_bound,
                              bool check_cyclic = true);

/// Path-space contraction: the extra degeneracy s satisfies d_0 s = id and
/// d_{i+1} s = s d_i, hence b s + s b = id levelwise.
AxiomReport verify_path_contraction(const PathSpace& E, int n_max, long degree_bound);

// ---------------------------------------------------------------------------
// the paper's maps

/// gamma: C_*(A) -> Hopf cyclic module, from a sigma-invariant delta-trace.
/// Validates the trace axioms (TraceAxiomsFail) unless `unchecked`.
CyclicMap map_gamma(const CyclicModule& CA, const CyclicModule& HH, const TraceFunctional& tr,
                    const CoactionStructure& coaction, const ModularPair& pair,
                    bool unchecked = false, long check_degree_bound = 2);

/// theta: Hopf cyclic module at (epsilon, sigma) -> C_*(H); needs S_sigma^2 = id
/// (InvolutionFails with witness otherwise).
CyclicMap map_theta(const CyclicModule& HH, const CyclicModule& CH, const HopfAlgebra& H,
                    const Element& sigma, long check_degree_bound = 3);

/// pi: E H -> B H, drops the zeroth factor through the counit.
CyclicMap projection_pi(const CyclicModule& EH, const CyclicModule& BH, const HopfAlgebra& H);

/// psi: CM cocyclic module -> commutative cocyclic module, h |-> 1 (x) h.
struct CocyclicMap {
    std::string name;
    const CocyclicModule* src = nullptr;
    const CocyclicModule* dst = nullptr;
    std::function<TensorElement(int, const TensorElement&)> apply;
};
CocyclicMap map_psi(const CocyclicModule& CM, const CocyclicModule& EH, const HopfAlgebra& H);
AxiomReport verify_cocyclic_map(const CocyclicMap& f, int n_max, long degree_bound);

// ---------------------------------------------------------------------------
// Mac Lane isomorphism

struct MacLanePair {
    CyclicModule hochschild;  // M (x) H^{(x)n} with bimodule faces
    CyclicModule twisted;     // H^{(x)n} (x) M~ with the conjugation action
    CyclicMap theta;          // hochschild -> twisted
    CyclicMap theta_inv;

    /// Re-point theta/theta_inv at the member modules; required after the
    /// struct has been moved or copied.
    void rebind() {
        theta.src = &hochschild;
        theta.dst = &twisted;
        theta_inv.src = &twisted;
        theta_inv.dst = &hochschild;
    }
};

/// Bimodule M = H with left/right multiplication.
MacLanePair maclane_self(const HopfAlgebra& H);
/// Bimodule M = k with left action via the character chi and right action via
/// the counit.
MacLanePair maclane_trivial(const HopfAlgebra& H, const Character& chi);

/// theta and theta^{-1} are mutually inverse simplicial isomorphisms.
AxiomReport verify_maclane(MacLanePair& ml, int n_max, long degree_bound);

// ---------------------------------------------------------------------------
// Connes boundary

/// B = (1 - lambda) s N with s = tau . (last degeneracy), lambda = (-1)^n tau,
/// N = sum lambda^i, projected to the normalized complex (words with a unit
/// factor dropped; requires a word unit).
TensorElement connes_B(const CyclicModule& m, int level, const TensorElement& x);
/// b = sum (-1)^i d_i projected to the normalized complex.
TensorElement normalized_b(const CyclicModule& m, int level, const TensorElement& x);

}  // namespace hopfcyc
