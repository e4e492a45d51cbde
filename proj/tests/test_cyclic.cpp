#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfcyc/cyclic.hpp"
#include "hopfcyc/errors.hpp"
#include "hopfcyc/instances.hpp"

using namespace hopfcyc;

namespace {
const FieldId Q = FieldId::rationals();
const FieldId Qq = FieldId::rational_functions();
}  // namespace

TEST_CASE("group algebra tau matches the classifying-space formula") {
    GroupAlgebra G(GroupTable::builtin("Z4"), Q);
    ModularPair pair = make_modular_pair(G, "epsilon,1");
    CyclicModule m = build_hopf_cyclic(G, pair);
    // tau(g1, g2) = ((g1 g2)^-1, g1)
    BasisWord g1 = G.element_by_name("z1"), g2 = G.element_by_name("z2");
    TensorElement t = m.cyclic(2, tensor_of_words(Q, {g1, g2}));
    CHECK(t == tensor_of_words(Q, {G.element_by_name("z1"), g1}));
    // tau_1 on a grouplike is the inverse
    CHECK(m.cyclic(1, tensor_of_words(Q, {g1})) ==
          tensor_of_words(Q, {G.element_by_name("z3")}));
    // faces: eps on the left, product in the middle, character on the right
    CHECK(m.face(2, 1, tensor_of_words(Q, {g1, g2})) ==
          tensor_of_words(Q, {G.element_by_name("z3")}));
    CHECK(m.face(1, 1, tensor_of_words(Q, {g1})) == scalar_tensor(Q, Scalar::one(Q)));
}

TEST_CASE("character face on aslq2 level 1") {
    ASLq2 A;
    ModularPair pair = make_modular_pair(A, "delta,1");
    CyclicModule m = build_hopf_cyclic(A, pair, false, 2);
    TensorElement x = tensor_of_words(Qq, {A.word_ijkl(1, 0, 0, 0)});
    // delta_1(x) = delta(x) = q
    CHECK(m.face(1, 1, x) == scalar_tensor(Qq, Scalar::q_power(1)));
}

TEST_CASE("cyclic axiom suite passes for group algebras") {
    for (const char* g : {"Z2", "Z3", "Z4", "S3"}) {
        GroupAlgebra G(GroupTable::builtin(g), Q);
        ModularPair pair = make_modular_pair(G, "epsilon,1");
        CyclicModule m = build_hopf_cyclic(G, pair);
        AxiomReport rep = verify_cyclic_axioms(m, g == std::string("S3") ? 2 : 3, 0);
        CHECK(rep.pass);
        CHECK(rep.checked > 0);
    }
}

TEST_CASE("cyclic axiom suite passes for T(V), uqsl2, aslq2") {
    TensorAlgebra T(2, Q);
    CyclicModule mt = build_hopf_cyclic(T, make_modular_pair(T, "epsilon,1"), false, 3);
    CHECK(verify_cyclic_axioms(mt, 2, 2).pass);

    UqSl2 U;
    CyclicModule mu = build_hopf_cyclic(U, make_modular_pair(U, "epsilon,sigma_inv"), false, 2);
    CHECK(verify_cyclic_axioms(mu, 2, 2).pass);

    ASLq2 A;
    CyclicModule ma = build_hopf_cyclic(A, make_modular_pair(A, "delta,1"), false, 2);
    CHECK(verify_cyclic_axioms(ma, 2, 2).pass);
}

TEST_CASE("converse: non-involutive pair fails (2.2) at level 1 with witness") {
    ASLq2 A;
    ModularPair bad = make_modular_pair(A, "epsilon,1");
    CHECK_THROWS_AS(build_hopf_cyclic(A, bad, false, 2), InvalidPair);
    CyclicModule m = build_hopf_cyclic(A, bad, /*unchecked=*/true);
    // tau_1^2(u) = S^2(u) = q^2 u != u
    TensorElement u = tensor_of_words(Qq, {A.word_ijkl(0, 1, 0, 0)});
    CHECK(m.cyclic(1, m.cyclic(1, u)) == u.scaled(Scalar::q_power(2)));
    AxiomReport rep = verify_cyclic_axioms(m, 1, 1);
    CHECK(!rep.pass);
    bool found = false;
    for (const auto& s : rep.failures)
        if (s.find("tau^(n+1)") != std::string::npos && s.find("(u)") != std::string::npos)
            found = true;
    CHECK(found);
}

TEST_CASE("converse: non-grouplike sigma substitute is caught and fails (2.2)") {
    GroupAlgebra G(GroupTable::builtin("Z3"), Q);
    // sigma = 2 z - z^2 has eps(sigma) = 1 but is not grouplike
    Element sigma(Q, G.element_by_name("z1"));
    sigma = sigma.scaled(Scalar::from_int(Q, 2));
    sigma.add(G.element_by_name("z2"), -Scalar::one(Q));
    ModularPair pair{&G, Character::counit(&G), sigma, "(epsilon,2z-z2)"};
    CheckReport inv = check_modular_involution(pair, 0);
    CHECK(!inv.pass);
    CyclicModule m = build_hopf_cyclic(G, pair, /*unchecked=*/true);
    AxiomReport rep = verify_cyclic_axioms(m, 1, 0);
    CHECK(!rep.pass);
}

TEST_CASE("non-central sigma in kS3 fails the involution") {
    GroupAlgebra G(GroupTable::builtin("S3"), Q);
    ModularPair pair = make_modular_pair(G, "epsilon,s");  // a transposition
    CheckReport inv = check_modular_involution(pair, 0);
    CHECK(!inv.pass);
    CyclicModule m = build_hopf_cyclic(G, pair, /*unchecked=*/true);
    AxiomReport rep = verify_cyclic_axioms(m, 1, 0);
    CHECK(!rep.pass);
}

TEST_CASE("algebra cyclic module: standard operators and axioms") {
    GroupAlgebra G(GroupTable::builtin("Z3"), Q);
    CyclicModule m = build_algebra_cyclic(G);
    BasisWord a0 = G.element_by_name("z1"), a1 = G.element_by_name("z2");
    // tau is rotation
    CHECK(m.cyclic(1, tensor_of_words(Q, {a0, a1})) == tensor_of_words(Q, {a1, a0}));
    // last face wraps: d_2(a0, a1, a2) = (a2 a0, a1)
    BasisWord a2 = G.element_by_name("z1");
    CHECK(m.face(2, 2, tensor_of_words(Q, {a0, a1, a2})) ==
          tensor_of_words(Q, {G.element_by_name("z2"), a1}));
    CHECK(verify_cyclic_axioms(m, 3, 0).pass);
}

TEST_CASE("path space: operators, contraction, cyclic structure") {
    GroupAlgebra G(GroupTable::builtin("Z4"), Q);
    PathSpace E = build_path_space(G);
    CHECK(E.cyclic_available);
    BasisWord g0 = G.element_by_name("z1"), g1 = G.element_by_name("z3");
    // t(g0, g1) = (g0 g1, g1^-1)
    CHECK(E.simplicial.cyclic(1, tensor_of_words(Q, {g0, g1})) ==
          tensor_of_words(Q, {G.element_by_name("e"), G.element_by_name("z1")}));
    // t^2 = id at level 1
    TensorElement x = tensor_of_words(Q, {g0, g1});
    CHECK(E.simplicial.cyclic(1, E.simplicial.cyclic(1, x)) == x);
    CHECK(verify_cyclic_axioms(E.simplicial, 3, 0).pass);
    CHECK(verify_path_contraction(E, 3, 0).pass);

    // requesting the cyclic structure on a non-cocommutative instance throws
    ASLq2 A;
    CHECK_THROWS_AS(build_path_space(A, /*require_cyclic=*/true), NotCocommutative);
    // but the simplicial part is fine
    PathSpace EA = build_path_space(A);
    CHECK(!EA.cyclic_available);
    CHECK(verify_cyclic_axioms(EA.simplicial, 2, 2).pass);
    CHECK(verify_path_contraction(EA, 2, 2).pass);
}

TEST_CASE("projection pi is a cyclic map for cocommutative H") {
    GroupAlgebra G(GroupTable::builtin("Z3"), Q);
    ModularPair pair = make_modular_pair(G, "epsilon,1");
    CyclicModule BH = build_hopf_cyclic(G, pair);
    PathSpace E = build_path_space(G);
    CyclicMap pi = projection_pi(E.simplicial, BH, G);
    // pi(1 (x) g1 (x) g2) = g1 (x) g2
    BasisWord e = G.element_by_name("e"), g1 = G.element_by_name("z1"), g2 = G.element_by_name("z2");
    CHECK(pi.apply(2, tensor_of_words(Q, {e, g1, g2})) == tensor_of_words(Q, {g1, g2}));
    CHECK(verify_cyclic_map(pi, 3, 0).pass);

    // simplicial-only commutation for aslq2
    ASLq2 A;
    CyclicModule BA = build_hopf_cyclic(A, make_modular_pair(A, "epsilon,1"), true);
    PathSpace EA = build_path_space(A);
    CyclicMap piA = projection_pi(EA.simplicial, BA, A);
    // pi(x (x) y) = eps(x) y = y
    CHECK(piA.apply(1, tensor_of_words(Qq, {A.word_ijkl(1, 0, 0, 0), A.word_ijkl(0, 0, 0, 1)})) ==
          tensor_of_words(Qq, {A.word_ijkl(0, 0, 0, 1)}));
    CHECK(verify_cyclic_map(piA, 2, 2, /*check_cyclic=*/false).pass);
}

TEST_CASE("gamma is a cyclic map and gamma.theta = Tr(sigma) id on kZ4") {
    GroupAlgebra G(GroupTable::builtin("Z4"), Q);
    ModularPair pair = make_modular_pair(G, "epsilon,z2");
    CyclicModule CH = build_algebra_cyclic(G);
    CyclicModule HH = build_hopf_cyclic(G, pair);
    CoactionStructure co = self_coaction(G);
    Element sigma = pair.sigma;
    TraceFunctional tr{&G, [sigma](const BasisWord& w) { return sigma.coeff(w); }, "indicator"};

    CyclicMap gamma = map_gamma(CH, HH, tr, co, pair);
    CHECK(verify_cyclic_map(gamma, 3, 0).pass);

    // gamma(g0 (x) g1) = [g0 g1 = sigma] g1
    BasisWord z1 = G.element_by_name("z1");
    CHECK(gamma.apply(1, tensor_of_words(Q, {z1, z1})) == tensor_of_words(Q, {z1}));
    CHECK(gamma.apply(1, tensor_of_words(Q, {z1, G.element_by_name("z2")})).is_zero());
    // level 0: gamma(a0) = Tr(a0)
    CHECK(gamma.apply(0, tensor_of_words(Q, {G.element_by_name("z2")})) ==
          scalar_tensor(Q, Scalar::one(Q)));

    CyclicMap theta = map_theta(HH, CH, G, pair.sigma);
    CHECK(verify_cyclic_map(theta, 3, 0).pass);
    // theta(g1 (x) g2) = (sigma (g1 g2)^-1, g1, g2)
    BasisWord g1 = G.element_by_name("z1"), g2 = G.element_by_name("z2");
    CHECK(theta.apply(2, tensor_of_words(Q, {g1, g2})) ==
          tensor_of_words(Q, {G.element_by_name("z3"), g1, g2}));
    // theta at level 0 sends 1 to sigma
    CHECK(theta.apply(0, scalar_tensor(Q, Scalar::one(Q))) ==
          tensor_of_words(Q, {G.element_by_name("z2")}));

    // Tr(sigma) = 1, so gamma . theta = id on levels <= 3
    for (int n = 0; n <= 3; ++n)
        for (const auto& w : HH.level_words(n, 0)) {
            TensorElement x = tensor_of_words(Q, w);
            CHECK(gamma.apply(n, theta.apply(n, x)) == x);
        }
}

TEST_CASE("theta requires the involution") {
    ASLq2 A;
    CyclicModule CH = build_algebra_cyclic(A);
    CyclicModule HH = build_hopf_cyclic(A, make_modular_pair(A, "epsilon,1"), true);
    CHECK_THROWS_AS(map_theta(HH, CH, A, A.one(), 2), InvolutionFails);
}

TEST_CASE("gamma rejects a trace that fails the axioms") {
    GroupAlgebra G(GroupTable::builtin("Z4"), Q);
    ModularPair pair = make_modular_pair(G, "epsilon,1");
    CyclicModule CH = build_algebra_cyclic(G);
    CyclicModule HH = build_hopf_cyclic(G, pair);
    CoactionStructure co = self_coaction(G);
    // eps is not sigma-invariant for sigma = 1 (witness any g != 1)
    TraceFunctional eps{&G, [&](const BasisWord& w) { return G.counit_word(w); }, "eps"};
    CHECK_THROWS_AS(map_gamma(CH, HH, eps, co, pair), TraceAxiomsFail);
}

TEST_CASE("Mac Lane isomorphism for kS3 with M = kS3") {
    GroupAlgebra G(GroupTable::builtin("S3"), Q);
    MacLanePair ml = maclane_self(G);
    ml.rebind();
    // theta(m (x) g1 (x) g2) = (g1, g2, m g1 g2) on grouplikes
    BasisWord m = G.element_by_name("s"), g1 = G.element_by_name("r"), g2 = G.element_by_name("r2");
    TensorElement x = tensor_of_words(Q, {m, g1, g2});
    BasisWord mg1g2 = G.element_by_name("s");  // s * r * r2 = s
    CHECK(ml.theta.apply(2, x) == tensor_of_words(Q, {g1, g2, mg1g2}));
    AxiomReport rep = verify_maclane(ml, 2, 0);
    CHECK(rep.pass);

    // trivial coefficients: theta is the identity permutation
    MacLanePair mk = maclane_trivial(G, Character::counit(&G));
    AxiomReport rep2 = verify_maclane(mk, 3, 0);
    CHECK(rep2.pass);
}

TEST_CASE("CM cocyclic module and psi into the commutative cocyclic module") {
    FunctionAlgebra F(GroupTable::builtin("Z3"), Q);
    ModularPair pair = make_modular_pair(F, "epsilon,1");
    CocyclicModule cm = build_cm_cocyclic(F, pair);
    CHECK(verify_cocyclic_axioms(cm, 2, 0).pass);
    CocyclicModule eh = build_commutative_cocyclic(F);
    CHECK(verify_cocyclic_axioms(eh, 2, 0).pass);
    CocyclicMap psi = map_psi(cm, eh, F);
    CHECK(verify_cocyclic_map(psi, 2, 0).pass);

    // laurent: tau(z^a (x) z^b) = z^a (x) z^(a-b) at level 1
    LaurentAlgebra L(Q);
    CocyclicModule el = build_commutative_cocyclic(L);
    TensorElement t = el.cocyclic(1, tensor_of_words(Q, {L.z_power(2), L.z_power(5)}));
    CHECK(t == tensor_of_words(Q, {L.z_power(2), L.z_power(-3)}));
    // d_{n+1} appends 1; psi(h1) = 1 (x) h1
    CHECK(el.coface(2, 2, tensor_of_words(Q, {L.z_power(1), L.z_power(2)})) ==
          tensor_of_words(Q, {L.z_power(1), L.z_power(2), L.z_power(0)}));
    CHECK(verify_cocyclic_axioms(el, 2, 3).pass);
    ModularPair lp = make_modular_pair(L, "epsilon,1");
    CocyclicModule cl = build_cm_cocyclic(L, lp);
    CHECK(verify_cocyclic_axioms(cl, 2, 3).pass);
    CocyclicMap psil = map_psi(cl, el, L);
    CHECK(verify_cocyclic_map(psil, 2, 3).pass);

    auto s3 = build_instance("group:S3", Q);
    CHECK_THROWS_AS(build_commutative_cocyclic(*s3), NotCommutative);
}

TEST_CASE("Connes B and normalized b: B^2 = 0 and bB + Bb = 0 on random chains") {
    std::mt19937 rng(4242);
    auto rnd = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    auto run = [&](const HopfAlgebra& H, const ModularPair& pair, long bound, int trials) {
        CyclicModule m = build_hopf_cyclic(H, pair, true);
        const FieldId& f = H.field();
        BasisWord unit = H.unit_word();
        int checked = 0;
        while (checked < trials) {
            int n = rnd(1, 2);
            auto words = m.level_words(n, bound);
            // random normalized chain: combination of unit-free words
            TensorElement x(f);
            for (int t = 0; t < 3; ++t) {
                const TensorWord& w = words[static_cast<size_t>(rnd(0, static_cast<int>(words.size()) - 1))];
                bool degenerate = false;
                for (const auto& s : w)
                    if (s == unit) degenerate = true;
                if (!degenerate) x.add(w, Scalar::from_int(f, rnd(1, 5)));
            }
            if (x.is_zero()) continue;
            TensorElement Bx = connes_B(m, n, x);
            CHECK(connes_B(m, n + 1, Bx).is_zero());
            TensorElement anti = normalized_b(m, n + 1, Bx) + connes_B(m, n - 1, normalized_b(m, n, x));
            CHECK(anti.is_zero());
            ++checked;
        }
    };

    GroupAlgebra G(GroupTable::builtin("Z3"), Q);
    run(G, make_modular_pair(G, "epsilon,1"), 0, 40);
    TensorAlgebra T(2, Q);
    run(T, make_modular_pair(T, "epsilon,1"), 2, 40);
    UqSl2 U;
    run(U, make_modular_pair(U, "epsilon,sigma_inv"), 1, 25);
}

TEST_CASE("B(1) at level 0 vanishes after normalization") {
    GroupAlgebra G(GroupTable::builtin("Z3"), Q);
    CyclicModule m = build_hopf_cyclic(G, make_modular_pair(G, "epsilon,1"));
    // level 0 is k; B lands in the degenerate subspace
    CHECK(connes_B(m, 0, scalar_tensor(Q, Scalar::one(Q))).is_zero());
}
