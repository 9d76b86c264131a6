#include <doctest.h>

#include "alc.hpp"
#include "gen.hpp"
#include "lfoc/sketch.hpp"
#include "oracles.hpp"

using namespace lfoc;

namespace {

FootprintRef two_features() {
    return std::make_shared<Footprint>(
        "F", Kind::Set, std::vector<Feature>{{"P", CatObject::set({"p"})}, {"R", CatObject::set({"p1", "p2"})}});
}

FootprintRef cat_footprint() {
    auto comp = CatObject::graph({"pv1", "pv2", "pv3"},
                                 {{"pe1", "pv1", "pv2"}, {"pe2", "pv2", "pv3"}, {"pe3", "pv1", "pv3"}});
    auto id = CatObject::graph({"pv"}, {{"pe", "pv", "pv"}});
    return std::make_shared<Footprint>("CAT", Kind::Graph, std::vector<Feature>{{"comp", comp}, {"id", id}});
}

Morphism to(const CatObject& dom, const CatObject& cod, std::vector<std::uint32_t> vs) {
    return Morphism(dom, cod, std::move(vs), {});
}

Expr p_at(const CatObject& x, std::uint32_t i) { return Expr::atomic(x, "P", to(CatObject::set({"p"}), x, {i})); }
Expr r_at(const CatObject& x, std::uint32_t i, std::uint32_t j) {
    return Expr::atomic(x, "R", to(CatObject::set({"p1", "p2"}), x, {i, j}));
}

} // namespace

TEST_CASE("translation and reduct are functorial") {
    auto fp = two_features();
    gen::ExprGen g(fp, 3);
    auto x = CatObject::set({"a", "b"});
    auto sets = oracle::small_sets(3);
    for (int i = 0; i < 10; ++i) {
        auto e = g(x);
        for (const auto& k : sets) {
            for (const auto& binding : hom_set(x, k)) {
                Constraint c(e, binding);
                CHECK(translate_constraint(identity(k), c) == c);
                for (const auto& l : sets) {
                    for (const auto& phi : hom_set(k, l)) {
                        auto tc = translate_constraint(phi, c);
                        CHECK(tc.binding().cod() == l);
                        for (const auto& m : sets) {
                            if (m.size() > 2) continue;
                            for (const auto& psi : hom_set(l, m)) {
                                REQUIRE(translate_constraint(compose(phi, psi), c) ==
                                        translate_constraint(psi, tc));
                            }
                        }
                    }
                }
            }
        }
    }
    auto s = gen::random_structure(fp, CatObject::set({"u0", "u1"}), g.rng());
    auto k = CatObject::set({"a", "b"});
    for (const auto& a : hom_set(k, s.carrier())) {
        Interpretation i{a, s};
        CHECK(reduct(identity(k), i).map == a);
        for (const auto& phi : hom_set(CatObject::set({"c"}), k)) {
            for (const auto& psi : hom_set(CatObject::set({"d", "e"}), CatObject::set({"c"}))) {
                auto lhs = reduct(compose(psi, phi), i);
                auto rhs = reduct(psi, reduct(phi, i));
                CHECK(lhs.map == rhs.map);
                CHECK(lhs.structure == s);
            }
        }
    }
    CHECK_THROWS_AS(translate_constraint(identity(CatObject::set({"z"})), Constraint(Expr::top(x), identity(x))),
                    BoundaryError);
}

TEST_CASE("satisfaction") {
    auto fp = two_features();
    std::mt19937 rng(1);
    auto s = gen::random_structure(fp, CatObject::set({"u0", "u1", "u2"}), rng);
    auto k = CatObject::set({"a", "b"});
    for (const auto& a : hom_set(k, s.carrier())) {
        CHECK(satisfies({a, s}, Constraint(Expr::top(k), identity(k))));
        CHECK_FALSE(satisfies({a, s}, Constraint(Expr::bot(k), identity(k))));
    }
}

TEST_CASE("concept assertions agree with direct membership") {
    std::vector<std::string> cs{"A", "B"}, rs{"r"};
    auto fp = alc::footprint(cs, rs);
    std::mt19937 rng(4);
    auto names = CatObject::set({"ann", "ben", "cy"});
    for (int i = 0; i < 30; ++i) {
        auto cpt = alc::random_concept(rng, cs, rs, 2);
        auto I = alc::random_interp(rng, cs, rs, 3);
        auto u = alc::to_structure(fp, I);
        std::size_t fresh = 0;
        auto p1 = CatObject::set({"p1"});
        auto e = alc::translate(cpt, p1, fresh);
        REQUIRE(wf_check(e, *fp).ok());
        auto ext = alc::extension(cpt, I);
        for (const auto& a : hom_set(names, u.carrier())) {
            for (std::uint32_t ind = 0; ind < 3; ++ind) {
                Constraint assertion(e, to(p1, names, {ind}));
                CHECK(satisfies({a, u}, assertion) == (ext.count(a.vertex_map()[ind]) > 0));
            }
        }
    }
}

TEST_CASE("satisfaction condition on random triples") {
    auto fp = two_features();
    gen::ExprGen g(fp, 21);
    std::uniform_int_distribution<std::size_t> size(0, 3);
    for (int i = 0; i < 150; ++i) {
        auto x = CatObject::set(oracle::names("x", 1 + i % 2));
        auto e = g(x);
        auto k = CatObject::set(oracle::names("k", size(g.rng())));
        auto l = CatObject::set(oracle::names("l", size(g.rng())));
        auto bindings = hom_set(x, k);
        auto phis = hom_set(k, l);
        if (bindings.empty() || phis.empty()) continue;
        Constraint c(e, bindings[g.rng()() % bindings.size()]);
        const auto& phi = phis[g.rng()() % phis.size()];
        auto s = gen::random_structure(fp, CatObject::set(oracle::names("u", 1 + size(g.rng()) % 3)), g.rng());
        for (const auto& a : hom_set(l, s.carrier())) {
            REQUIRE(check_satisfaction_condition(phi, c, {a, s}));
        }
    }
    // quantified constraint across a collapsing context morphism
    auto k = CatObject::set({"a", "b"});
    auto l = CatObject::set({"c"});
    auto phi = to(k, l, {0, 0});
    auto y = CatObject::set({"a", "b", "z"});
    auto e = Expr::exists(Morphism::inclusion(k, y), Expr::conj(r_at(y, 0, 2), r_at(y, 2, 1)));
    Constraint c(e, identity(k));
    std::mt19937 rng(2);
    for (int i = 0; i < 20; ++i) {
        auto s = gen::random_structure(fp, CatObject::set({"u0", "u1", "u2"}), rng);
        for (const auto& a : hom_set(l, s.carrier())) CHECK(check_satisfaction_condition(phi, c, {a, s}));
    }
}

TEST_CASE("models") {
    auto fp = two_features();
    std::mt19937 rng(8);
    auto s = gen::random_structure(fp, CatObject::set({"u0", "u1"}), rng);
    auto k = CatObject::set({"a", "b"});
    CHECK(models(Sketch("S", fp, k), s).size() == hom_set(k, s.carrier()).size());
    CHECK(models(Sketch("S", fp, k, {Constraint(Expr::bot(k), identity(k))}), s).empty());
    auto other = CatObject::set({"z"});
    CHECK_THROWS_AS(Sketch("S", fp, k, {Constraint(Expr::top(other), identity(other))}), BoundaryError);
    CHECK_THROWS_AS(Sketch("S", fp, k, {Constraint(Expr::atomic(k, "Q", to(CatObject::set({"p"}), k, {0})), identity(k))}),
                    ValidationError);
}

TEST_CASE("ABox models agree with direct ABox checking") {
    std::vector<std::string> cs{"A", "B"}, rs{"r", "s"};
    auto fp = alc::footprint(cs, rs);
    std::mt19937 rng(12);
    auto names = CatObject::set({"ann", "ben", "cy"});
    auto p1 = CatObject::set({"p1"});
    auto p12 = CatObject::set({"p1", "p2"});
    for (int i = 0; i < 25; ++i) {
        // three concept assertions and two role assertions
        std::vector<std::pair<alc::C, std::uint32_t>> concept_asserts;
        std::vector<std::tuple<std::string, std::uint32_t, std::uint32_t>> role_asserts;
        std::vector<Constraint> abox;
        for (int j = 0; j < 3; ++j) {
            auto c = alc::random_concept(rng, cs, rs, 2);
            std::uint32_t ind = rng() % 3;
            concept_asserts.emplace_back(c, ind);
            std::size_t fresh = 0;
            abox.emplace_back(alc::translate(c, p1, fresh), to(p1, names, {ind}));
        }
        for (int j = 0; j < 2; ++j) {
            std::string r = rs[rng() % 2];
            std::uint32_t x = rng() % 3, y = rng() % 3;
            role_asserts.emplace_back(r, x, y);
            abox.emplace_back(Expr::atomic(r, identity(p12)), to(p12, names, {x, y}));
        }
        Sketch sketch("ABox", fp, names, abox);
        auto I = alc::random_interp(rng, cs, rs, 3);
        I.domain = 3;
        auto u = alc::to_structure(fp, I);
        std::set<std::vector<std::uint32_t>> expected;
        oracle::odometer(3, 3, [&](const std::vector<std::uint32_t>& a) {
            bool ok = true;
            for (const auto& [c, ind] : concept_asserts) ok = ok && alc::extension(c, I).count(a[ind]) > 0;
            for (const auto& [r, x, y] : role_asserts) ok = ok && I.roles.at(r).count({a[x], a[y]}) > 0;
            if (ok) expected.insert(a);
        });
        std::set<std::vector<std::uint32_t>> got;
        for (const auto& m : models(sketch, u)) got.insert({m.vertex_map().begin(), m.vertex_map().end()});
        CHECK(got == expected);
    }
}

TEST_CASE("entailment") {
    auto fp = two_features();
    auto reg = StructureRegistry::enumerated(fp, {2, 0});
    auto k = CatObject::set({"a", "b"});
    auto id = identity(k);
    Constraint pa(p_at(k, 0), id), pb(p_at(k, 1), id), rab(r_at(k, 0, 1), id);
    Constraint both(Expr::conj(p_at(k, 0), r_at(k, 0, 1)), id);

    auto v = entails(k, {pa, rab}, {pa, rab}, reg);
    CHECK(v.holds);
    CHECK(v.scope == reg.describe());
    CHECK(entails(k, {pa}, {}, reg).holds);
    CHECK(entails(k, {Constraint(Expr::bot(k), id)}, {pb, rab}, reg).holds);
    CHECK(entails(k, {both}, {pa, rab}, reg).holds);
    CHECK(entails(k, {pa, rab}, {both}, reg).holds);

    auto no = entails(k, {pa}, {pb}, reg);
    CHECK_FALSE(no.holds);
    REQUIRE(no.counterexample);
    // the witness really is a counterexample
    auto witness = reg.structures();
    auto it = std::find_if(witness.begin(), witness.end(), [&](const Structure& s) { return s.name() == no.counterexample->structure; });
    REQUIRE(it != witness.end());
    CHECK(satisfies({no.counterexample->assignment, *it}, pa));
    CHECK_FALSE(satisfies({no.counterexample->assignment, *it}, pb));

    // transitivity on random constraint sets
    gen::ExprGen g(fp, 17, {1, 2, true, true, true});
    for (int i = 0; i < 30; ++i) {
        std::vector<Constraint> a{Constraint(g(k), id)}, b{Constraint(g(k), id)}, c{Constraint(g(k), id)};
        if (entails(k, a, b, reg).holds && entails(k, b, c, reg).holds) CHECK(entails(k, a, c, reg).holds);
        CHECK(entails(k, a, a, reg).holds);
    }
}

TEST_CASE("sketch morphisms") {
    auto fp = two_features();
    auto reg = StructureRegistry::enumerated(fp, {2, 0});
    auto k = CatObject::set({"a", "b"});
    auto l = CatObject::set({"a", "b", "c"});
    Sketch s("S", fp, k, {Constraint(p_at(k, 0), identity(k))});
    CHECK(check_sketch_morphism(identity(k), s, s, reg).holds);
    Sketch bot("B", fp, l, {Constraint(Expr::bot(l), identity(l))});
    for (const auto& phi : hom_set(k, l)) CHECK(check_sketch_morphism(phi, s, bot, reg).holds);
    auto inc = Morphism::inclusion(k, l);
    Sketch bigger("T", fp, l, {Constraint(p_at(l, 0), identity(l)), Constraint(r_at(l, 2, 1), identity(l))});
    CHECK(check_sketch_morphism(inc, s, bigger, reg).holds);
    Sketch unrelated("U", fp, l, {Constraint(p_at(l, 2), identity(l))});
    CHECK_FALSE(check_sketch_morphism(inc, s, unrelated, reg).holds);
    CHECK_THROWS_AS(check_sketch_morphism(identity(l), s, bigger, reg), BoundaryError);
}

TEST_CASE("sketch pushouts") {
    auto fp = two_features();
    auto k = CatObject::set({"a", "b"});
    auto m = CatObject::set({"c"});
    Sketch left("L", fp, k, {Constraint(p_at(k, 0), identity(k)), Constraint(r_at(k, 0, 1), identity(k))});
    Sketch right("R", fp, m, {Constraint(p_at(m, 0), identity(m))});

    auto init = initial_object(Kind::Set);
    auto disjoint = sketch_pushout(initial_morphism(k), initial_morphism(m), left, right);
    CHECK(disjoint.sketch.context().size() == 3);
    CHECK(disjoint.sketch.constraints().size() == 3);

    auto shared = CatObject::set({"s"});
    auto f = to(shared, k, {0});
    auto g = to(shared, m, {0});
    auto glued = sketch_pushout(f, g, left, right);
    CHECK(glued.sketch.context().size() == 2);
    // P(a) and P(c) land on the same element but keep distinct arities and bindings
    CHECK(glued.sketch.constraints().size() == 3);
    auto twice = sketch_pushout(f, f, left, left);
    CHECK(twice.sketch.context().size() == 3);
    CHECK(twice.sketch.constraints().size() == 4);
    auto same = sketch_pushout(identity(k), identity(k), left, left);
    CHECK(same.sketch.constraints().size() == 2);
    CHECK(compose(f, glued.inj_left) == compose(g, glued.inj_right));
}

TEST_CASE("minimal and maximal semantical sketches") {
    auto fp = two_features();
    std::mt19937 rng(5);
    for (int i = 0; i < 20; ++i) {
        auto u = gen::random_structure(fp, CatObject::set(oracle::names("u", 1 + i % 3)), rng);
        auto min = structure_to_sketch_min(u);
        CHECK(min.context() == u.carrier());
        CHECK(min.constraints().size() == u.interpretation("P").size() + u.interpretation("R").size());
        auto ms = models(min, u);
        CHECK(std::find(ms.begin(), ms.end(), identity(u.carrier())) != ms.end());

        auto p = fp->arity("P"), r = fp->arity("R");
        auto atoms = structure_to_sketch_max(u, {Expr::atomic("P", identity(p)), Expr::atomic("R", identity(r))});
        CHECK(atoms == min);
        auto tops = structure_to_sketch_max(u, {Expr::top(r)});
        CHECK(tops.constraints().size() == hom_set(r, u.carrier()).size());
    }
    Structure empty("E", fp, CatObject::set({"u0"}), {});
    CHECK(structure_to_sketch_min(empty).constraints().empty());
}

TEST_CASE("sibling expression adds two constraints to the maximal sketch") {
    auto fp = std::make_shared<Footprint>(
        "FOL", Kind::Set,
        std::vector<Feature>{{"male", CatObject::set({"p"})}, {"parent", CatObject::set({"p1", "p2", "p3"})}});
    auto carrier = CatObject::set({"alice", "bob", "carol", "dave"});
    auto par = fp->arity("parent");
    Structure fam("Family", fp, carrier, {{"parent", {to(par, carrier, {0, 2, 3}), to(par, carrier, {1, 2, 3})}}});
    auto p = CatObject::set({"p"});
    auto y = CatObject::set({"p", "x1", "x2", "x3"});
    auto sib = Expr::exists(Morphism::inclusion(p, y), Expr::conj(Expr::atomic(y, "parent", to(par, y, {0, 2, 3})),
                                                                 Expr::atomic(y, "parent", to(par, y, {1, 2, 3}))));
    auto base = structure_to_sketch_max(fam, {});
    auto with = structure_to_sketch_max(fam, {sib});
    CHECK(with.constraints().size() - base.constraints().size() == 2);
}

TEST_CASE("minimal sketch is a full embedding") {
    auto fp = two_features();
    auto reg = StructureRegistry::enumerated(fp, {2, 0});
    auto all = reg.structures();
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < all.size(); i += 3) {
        for (std::size_t j = 0; j < all.size(); j += 5) {
            const auto& u = all[i];
            const auto& v = all[j];
            auto su = structure_to_sketch_min(u), sv = structure_to_sketch_min(v);
            for (const auto& s : hom_set(u.carrier(), v.carrier())) {
                REQUIRE(is_structure_hom(s, u, v) == check_sketch_morphism(s, su, sv, reg).holds);
                ++pairs;
            }
        }
    }
    CHECK(pairs > 0);
}

TEST_CASE("initial model") {
    auto fp = two_features();
    std::mt19937 rng(3);
    auto u = gen::random_structure(fp, CatObject::set({"a", "b"}), rng);
    CHECK(check_initial_model(u, StructureRegistry::from_list("R", fp, {u})).holds);

    auto reg = StructureRegistry::enumerated(fp, {2, 0});
    auto canonical = reg.structures()[7];
    auto v = check_initial_model(canonical, reg);
    CHECK(v.holds);
    CHECK(v.scope == reg.describe());
    CHECK_THROWS_AS(check_initial_model(u, reg), ValidationError);

    Structure empty("E", fp, CatObject::set({"u0"}), {});
    auto list = StructureRegistry::from_list("L", fp, {empty, u});
    CHECK(check_initial_model(empty, list).holds);
    CHECK(models(structure_to_sketch_min(empty), u).size() == hom_set(empty.carrier(), u.carrier()).size());

    auto cat = cat_footprint();
    auto cat_reg = StructureRegistry::enumerated(cat, {1, 1});
    for (const auto& s : cat_reg.structures()) CHECK(check_initial_model(s, cat_reg).holds);
}
