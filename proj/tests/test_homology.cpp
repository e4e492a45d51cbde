#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfcyc/engine.hpp"
#include "hopfcyc/errors.hpp"
#include "hopfcyc/resolution.hpp"
#include "oracles.hpp"

using namespace hopfcyc;

namespace {
const FieldId Q = FieldId::rationals();
}  // namespace

TEST_CASE("group homology over Q and F2 matches the periodic-resolution oracle") {
    // kZ2 over Q: (1,0,0,0,0); over F2: (1,1,1,1,1)
    {
        GroupAlgebra G(GroupTable::builtin("Z2"), Q);
        CyclicModule m = build_hopf_cyclic(G, make_modular_pair(G, "epsilon,1"));
        HomologyReport rep = hochschild_homology(m, 4, 0);
        CHECK(rep.dims == oracle::cyclic_group_homology(2, Q, 4));
        CHECK(rep.dims == std::vector<int>{1, 0, 0, 0, 0});
    }
    {
        FieldId F2 = FieldId::prime(2);
        GroupAlgebra G(GroupTable::builtin("Z2"), F2);
        CyclicModule m = build_hopf_cyclic(G, make_modular_pair(G, "epsilon,1"));
        HomologyReport rep = hochschild_homology(m, 4, 0);
        CHECK(rep.dims == oracle::cyclic_group_homology(2, F2, 4));
        CHECK(rep.dims == std::vector<int>{1, 1, 1, 1, 1});
    }
    {
        GroupAlgebra G(GroupTable::builtin("Z3"), Q);
        CyclicModule m = build_hopf_cyclic(G, make_modular_pair(G, "epsilon,1"));
        CHECK(hochschild_homology(m, 3, 0).dims == oracle::cyclic_group_homology(3, Q, 3));
    }
}

TEST_CASE("tensor algebra Hochschild homology: H_0 = k, H_1 = V, rest 0") {
    TensorAlgebra T(2, Q);
    CyclicModule m = build_hopf_cyclic(T, make_modular_pair(T, "epsilon,1"), false, 2);
    HomologyReport rep = hochschild_homology(m, 3, 3);
    CHECK(rep.dims == std::vector<int>{1, 2, 0, 0});
    CHECK(rep.weight_stable);
}

TEST_CASE("cyclic homology of kZ3 over Q is (1,0,1,0,1)") {
    GroupAlgebra G(GroupTable::builtin("Z3"), Q);
    CyclicModule m = build_hopf_cyclic(G, make_modular_pair(G, "epsilon,1"));
    CyclicHomologyReport rep = cyclic_homology(m, 4, 0);
    CHECK(rep.dims == std::vector<int>{1, 0, 1, 0, 1});
    CHECK(rep.hp_even == 1);
    CHECK(rep.hp_odd == 0);
    CHECK(rep.stabilized_even);
    CHECK(rep.stabilized_odd);

    // agreement guard: the unnormalized CC bicomplex gives the same dims
    std::vector<int> guard = cyclic_homology_cc_guard(m, 3, 0);
    CHECK(guard == std::vector<int>{1, 0, 1, 0});
}

TEST_CASE("cyclic homology of kZ2 over F2 is floor(n/2)+1") {
    FieldId F2 = FieldId::prime(2);
    GroupAlgebra G(GroupTable::builtin("Z2"), F2);
    CyclicModule m = build_hopf_cyclic(G, make_modular_pair(G, "epsilon,1"));
    CyclicHomologyReport rep = cyclic_homology(m, 6, 0);
    CHECK(rep.dims == std::vector<int>{1, 1, 2, 2, 3, 3, 4});
    // cc-bicomplex guard on a small window
    CHECK(cyclic_homology_cc_guard(m, 3, 0) == std::vector<int>{1, 1, 2, 2});
}

TEST_CASE("karoubi comparison for kZ3/Q, kZ2/F2, T(V), and U(g) for dim g = 1") {
    {
        GroupAlgebra G(GroupTable::builtin("Z3"), Q);
        KaroubiReport rep = karoubi_compare(G, 4, 0);
        CHECK(rep.equal);
        CHECK(rep.hc_dims == std::vector<int>{1, 0, 1, 0, 1});
    }
    {
        FieldId F2 = FieldId::prime(2);
        GroupAlgebra G(GroupTable::builtin("Z2"), F2);
        KaroubiReport rep = karoubi_compare(G, 6, 0);
        CHECK(rep.equal);
        for (int n = 0; n <= 6; ++n) CHECK(rep.hc_dims[static_cast<size_t>(n)] == n / 2 + 1);
        CHECK(rep.karoubi_dims == oracle::karoubi_sum(rep.hochschild));
    }
    {
        TensorAlgebra T(2, Q);
        KaroubiReport rep = karoubi_compare(T, 5, 3);
        CHECK(rep.equal);
        CHECK(rep.hc_dims == std::vector<int>{1, 2, 1, 2, 1, 2});
    }
    {
        // U(g) for the 1-dimensional abelian g = polynomials in one variable
        TensorAlgebra T(1, Q);
        KaroubiReport rep = karoubi_compare(T, 4, 3);
        CHECK(rep.equal);
        CHECK(rep.hochschild == std::vector<int>{1, 1, 0, 0, 0});
        CHECK(rep.hc_dims == std::vector<int>{1, 1, 1, 1, 1});
    }
}

TEST_CASE("instances without a homology grading are rejected") {
    UqSl2 U;
    CyclicModule m = build_hopf_cyclic(U, make_modular_pair(U, "epsilon,sigma_inv"), false, 2);
    CHECK_THROWS_AS(hochschild_homology(m, 2, 2), NotTruncatable);
    LaurentAlgebra L(Q);
    CyclicModule ml = build_hopf_cyclic(L, make_modular_pair(L, "epsilon,1"), false, 2);
    CHECK_THROWS_AS(cyclic_homology(ml, 2, 2), NotTruncatable);
}

TEST_CASE("weight-split soundness for T(V)") {
    TensorAlgebra T(2, Q);
    CyclicModule m = build_hopf_cyclic(T, make_modular_pair(T, "epsilon,1"), false, 2);
    HomologyReport a = hochschild_homology(m, 3, 2);
    HomologyReport b = hochschild_homology(m, 3, 3);
    CHECK(a.weight_stable);
    CHECK(b.weight_stable);
    // dims in weights <= 2 agree between the two caps
    for (size_t i = 0; i < a.weight_dims.size(); ++i) CHECK(a.weight_dims[i] == b.weight_dims[i]);
}

TEST_CASE("euler characteristic identity on bounded blocks") {
    // per-weight blocks of T(V) are bounded complexes
    TensorAlgebra T(2, Q);
    CyclicModule m = build_hopf_cyclic(T, make_modular_pair(T, "epsilon,1"), false, 2);
    for (long w = 0; w <= 3; ++w) {
        MaterializedCyclic mc = materialize(m, 5, 3, w);
        NormalizedComplex nc = normalize_complex(mc, m.alg);
        std::vector<int> h = hochschild_dims(nc, 4);
        std::vector<int> dims(nc.dims.begin(), nc.dims.begin() + 5);
        // the block vanishes above level w, so the window is the whole complex
        CHECK(euler_check(dims, h));
    }
}

TEST_CASE("HP of function algebras matches the cobar side (Theorem 4.2 desk check)") {
    {
        FunctionAlgebra F(GroupTable::builtin("Z2"), Q);
        HpReport rep = commutative_hp_compare(F, 4);
        CHECK(rep.hp0 == 1);
        CHECK(rep.hp1 == 0);
        CHECK(rep.cobar_hp0 == 1);
        CHECK(rep.cobar_hp1 == 0);
        CHECK(rep.stabilized);
        CHECK(rep.equal);
    }
    {
        FunctionAlgebra F(GroupTable::builtin("Z3"), Q);
        HpReport rep = commutative_hp_compare(F, 4);
        CHECK(rep.hp0 == 1);
        CHECK(rep.hp1 == 0);
        CHECK(rep.equal);
    }
    {
        // the trivial Hopf algebra k = k^{trivial group}
        GroupTable t = GroupTable::cyclic(1);
        FunctionAlgebra F(t, Q);
        HpReport rep = commutative_hp_compare(F, 4);
        CHECK(rep.hp0 == 1);
        CHECK(rep.hp1 == 0);
        CHECK(rep.equal);
    }
    auto s3 = build_instance("group:S3", Q);
    CHECK_THROWS_AS(commutative_hp_compare(*s3, 2), NotCommutative);
}

TEST_CASE("hochschild cross-validation: cyclic-module pipeline vs bar resolution") {
    for (const char* g : {"Z2", "Z3"}) {
        GroupAlgebra G(GroupTable::builtin(g), Q);
        CyclicModule m = build_hopf_cyclic(G, make_modular_pair(G, "epsilon,1"));
        std::vector<int> via_module = hochschild_homology(m, 3, 0).dims;

        ResolutionData bar = bar_resolution(G, 4, 0);
        ResolutionCheck check = verify_resolution(bar, 4);
        CHECK(check.pass);
        Character eps = Character::counit(&G);
        BaseChangeResult bc = base_change_homology(bar, eps, eps, 3);
        CHECK(bc.dims == via_module);
    }
}
