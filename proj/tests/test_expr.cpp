#include <doctest.h>

#include "gen.hpp"
#include "lfoc/expr.hpp"
#include "oracles.hpp"

using namespace lfoc;

namespace {

FootprintRef fol() {
    return std::make_shared<Footprint>(
        "FOL", Kind::Set,
        std::vector<Feature>{{"male", CatObject::set({"p"})}, {"parent", CatObject::set({"p1", "p2", "p3"})}});
}

Morphism at(const CatObject& arity, const CatObject& x, const std::vector<std::string>& images) {
    std::unordered_map<std::string, std::string> m;
    for (std::size_t i = 0; i < images.size(); ++i) m[arity.vertices()[i]] = images[i];
    return Morphism::from_names(arity, x, m);
}

struct Family {
    FootprintRef fp = fol();
    CatObject carrier = CatObject::set({"alice", "bob", "carol", "dave"});
    Structure s{"Family", fp, carrier,
                {{"parent",
                  {at(fp->arity("parent"), carrier, {"alice", "carol", "dave"}),
                   at(fp->arity("parent"), carrier, {"bob", "carol", "dave"})}}}};
};

// {p} |> exists {p,x1,x2,x3} . parent(p,x2,x3) and parent(x1,x2,x3)
Expr sibling(const FootprintRef& fp) {
    auto p = CatObject::set({"p"});
    auto y = CatObject::set({"p", "x1", "x2", "x3"});
    auto par = fp->arity("parent");
    auto body = Expr::conj(Expr::atomic(y, "parent", at(par, y, {"p", "x2", "x3"})),
                           Expr::atomic(y, "parent", at(par, y, {"x1", "x2", "x3"})));
    return Expr::exists(Morphism::inclusion(p, y), body);
}

std::vector<oracle::RawMap> raws(const std::vector<Morphism>& ms) {
    std::vector<oracle::RawMap> out;
    for (const auto& m : ms) out.push_back(oracle::raw(m));
    return out;
}

} // namespace

TEST_CASE("wf_check") {
    auto fp = fol();
    auto x = CatObject::set({"a", "b"});
    CHECK(wf_check(Expr::top(x), *fp).ok());
    CHECK(wf_check(sibling(fp), *fp).ok());

    auto bad_delta = Expr::atomic(x, "male", at(fp->arity("male"), CatObject::set({"z"}), {"z"}));
    CHECK_FALSE(wf_check(bad_delta, *fp).ok());
    auto unknown = Expr::atomic(x, "female", at(fp->arity("male"), x, {"a"}));
    CHECK_FALSE(wf_check(unknown, *fp).ok());
    auto mixed = Expr::conj(Expr::top(x), Expr::top(CatObject::set({"a"})));
    auto report = wf_check(mixed, *fp);
    CHECK_FALSE(report.ok());
}

TEST_CASE("sibling expression on the family structure") {
    Family fam;
    auto e = sibling(fam.fp);
    auto sols = solutions(e, fam.s);
    std::vector<std::string> got;
    for (const auto& a : sols) got.push_back(a.image_name("p"));
    CHECK(got == std::vector<std::string>{"alice", "bob"});

    // independent oracle over all 4^4 assignments of (p, x1, x2, x3)
    std::set<std::vector<std::uint32_t>> parents;
    for (const auto& m : fam.s.interpretation("parent")) parents.insert({m.vertex_map().begin(), m.vertex_map().end()});
    std::set<std::uint32_t> brute;
    oracle::odometer(4, 4, [&](const std::vector<std::uint32_t>& v) {
        if (parents.count({v[0], v[2], v[3]}) && parents.count({v[1], v[2], v[3]})) brute.insert(v[0]);
    });
    std::set<std::uint32_t> engine;
    for (const auto& a : sols) engine.insert(a.vertex_map()[0]);
    CHECK(engine == brute);
    CHECK(is_constructive(e));
    CHECK(is_constructive(e, true));
}

TEST_CASE("semantic clauses") {
    Family fam;
    auto x = CatObject::set({"p"});
    auto all = hom_set(x, fam.carrier);
    CHECK(solutions(Expr::top(x), fam.s).size() == all.size());
    CHECK(solutions(Expr::bot(x), fam.s).empty());

    SUBCASE("atomic at the identity is membership") {
        auto par = fam.fp->arity("parent");
        auto e = Expr::atomic("parent", identity(par));
        for (const auto& a : hom_set(par, fam.carrier)) CHECK(holds(a, e, fam.s) == fam.s.contains("parent", a));
    }
    SUBCASE("false premise makes both conditionals true") {
        auto y = CatObject::set({"p", "q"});
        auto step = Morphism::inclusion(x, y);
        for (const auto& a : all) {
            CHECK(holds(a, Expr::exists(Expr::bot(x), step, Expr::bot(y)), fam.s));
            CHECK(holds(a, Expr::forall(Expr::bot(x), step, Expr::bot(y)), fam.s));
        }
    }
    SUBCASE("no extensions: forall holds, exists fails") {
        // step collapsing two variables; assignments that separate them have no extension
        auto two = CatObject::set({"p", "q"});
        auto one = CatObject::set({"r"});
        auto collapse = Morphism::from_names(two, one, {{"p", "r"}, {"q", "r"}});
        auto a = at(two, fam.carrier, {"alice", "bob"});
        CHECK(extensions(collapse, a).empty());
        CHECK(holds(a, Expr::forall(Expr::top(two), collapse, Expr::bot(one)), fam.s));
        CHECK_FALSE(holds(a, Expr::exists(Expr::top(two), collapse, Expr::top(one)), fam.s));
    }
    SUBCASE("boundary mismatch") {
        auto wrong = at(CatObject::set({"q"}), fam.carrier, {"alice"});
        CHECK_THROWS_AS(holds(wrong, Expr::top(x), fam.s), BoundaryError);
    }
}

TEST_CASE("boolean clauses and De Morgan on random structures") {
    auto fp = std::make_shared<Footprint>(
        "F", Kind::Set, std::vector<Feature>{{"P", CatObject::set({"p"})}, {"R", CatObject::set({"p1", "p2"})}});
    gen::ExprGen g(fp, 11);
    auto x = CatObject::set({"a", "b"});
    for (int i = 0; i < 60; ++i) {
        auto e = g(x);
        auto f = g(x);
        auto carrier = CatObject::set(oracle::names("u", 1 + i % 3));
        auto s = gen::random_structure(fp, carrier, g.rng());
        Evaluator ev(s);
        auto se = raws(ev.solutions(e));
        auto sf = raws(ev.solutions(f));
        std::vector<oracle::RawMap> inter, uni;
        std::set_intersection(se.begin(), se.end(), sf.begin(), sf.end(), std::back_inserter(inter));
        std::set_union(se.begin(), se.end(), sf.begin(), sf.end(), std::back_inserter(uni));
        CHECK(raws(ev.solutions(Expr::conj(e, f))) == inter);
        CHECK(raws(ev.solutions(Expr::disj(e, f))) == uni);
        CHECK(raws(ev.solutions(Expr::negate(Expr::conj(e, f)))) ==
              raws(ev.solutions(Expr::disj(Expr::negate(e), Expr::negate(f)))));
        // conditional forall = not premise, or not exists not
        auto y = CatObject::set({"a", "b", "c"});
        auto step = Morphism::inclusion(x, y);
        auto body = g(y);
        CHECK(raws(ev.solutions(Expr::forall(e, step, body))) ==
              raws(ev.solutions(Expr::disj(Expr::negate(e), Expr::negate(Expr::exists(step, Expr::negate(body)))))));
        auto all = hom_set(x, carrier);
        CHECK(se.size() <= all.size());
    }
}

TEST_CASE("closed formulas") {
    Family fam;
    auto init = initial_object(Kind::Set);
    auto someone_male = Expr::exists(Morphism::inclusion(init, CatObject::set({"p"})),
                                     Expr::atomic("male", identity(CatObject::set({"p"}))));
    CHECK(solutions(someone_male, fam.s).empty());
    auto sib = sibling(fam.fp);
    auto someone_sibling = Expr::exists(Morphism::inclusion(init, CatObject::set({"p"})), sib);
    auto sols = solutions(someone_sibling, fam.s);
    REQUIRE(sols.size() == 1);
    CHECK(sols.front() == initial_morphism(fam.carrier));
}

TEST_CASE("canonical keys ignore bound names") {
    auto fp = fol();
    auto e1 = sibling(fp);
    auto p = CatObject::set({"p"});
    auto y = CatObject::set({"p", "y1", "y2", "y3"});
    auto par = fp->arity("parent");
    auto e2 = Expr::exists(Morphism::inclusion(p, y),
                           Expr::conj(Expr::atomic(y, "parent", at(par, y, {"p", "y2", "y3"})),
                                      Expr::atomic(y, "parent", at(par, y, {"y1", "y2", "y3"}))));
    CHECK(e1 == e2);
    auto e3 = Expr::exists(Morphism::inclusion(p, y),
                           Expr::conj(Expr::atomic(y, "parent", at(par, y, {"p", "y3", "y2"})),
                                      Expr::atomic(y, "parent", at(par, y, {"y1", "y2", "y3"}))));
    CHECK_FALSE(e1 == e3);
    CHECK(e1.depth() == 1);
    CHECK(Expr::conj(e1, Expr::negate(e1)).depth() == 1);
}

TEST_CASE("substitution") {
    auto fp = fol();
    auto x = CatObject::set({"a", "b"});
    auto z = CatObject::set({"c"});
    auto t = Morphism::from_names(x, z, {{"a", "c"}, {"b", "c"}});
    CHECK(substitute(Expr::top(x), t) == Expr::top(z));
    CHECK(substitute(Expr::top(x), t).arity() == z);
    auto e = sibling(fp);
    CHECK(substitute(e, identity(e.arity())) == e);
    CHECK_THROWS_AS(substitute(e, t), BoundaryError);
}

TEST_CASE("substitution is semantically correct on carriers up to 3") {
    auto fp = std::make_shared<Footprint>(
        "F", Kind::Set, std::vector<Feature>{{"P", CatObject::set({"p"})}, {"R", CatObject::set({"p1", "p2"})}});
    gen::ExprGen g(fp, 5);
    auto x = CatObject::set({"a", "b"});
    std::vector<CatObject> targets{CatObject::set({"c"}), CatObject::set({"c", "d"}), CatObject::set({"a", "b", "c"})};
    for (int i = 0; i < 40; ++i) {
        auto e = g(x);
        for (const auto& z : targets) {
            for (const auto& t : hom_set(x, z)) {
                auto st = substitute(e, t);
                REQUIRE(wf_check(st, *fp).ok());
                for (std::size_t n = 1; n <= 3; ++n) {
                    auto s = gen::random_structure(fp, CatObject::set(oracle::names("u", n)), g.rng());
                    Evaluator ev(s);
                    for (const auto& a : hom_set(z, s.carrier())) {
                        REQUIRE(ev.holds(a, st) == ev.holds(compose(t, a), e));
                    }
                }
            }
        }
    }
}

TEST_CASE("substitution on graph arities") {
    auto loop = CatObject::graph({"pv"}, {{"pe", "pv", "pv"}});
    auto fp = std::make_shared<Footprint>("G", Kind::Graph, std::vector<Feature>{{"id", loop}});
    gen::ExprGen g(fp, 9);
    auto x = CatObject::graph({"a", "b"}, {{"f", "a", "b"}});
    auto z = CatObject::graph({"c"}, {{"l", "c", "c"}});
    auto t = hom_set(x, z).front();
    for (int i = 0; i < 20; ++i) {
        auto e = g(x);
        auto st = substitute(e, t);
        for (const auto& carrier : oracle::small_graphs(2, 2)) {
            auto s = gen::random_structure(fp, carrier, g.rng());
            Evaluator ev(s);
            for (const auto& a : hom_set(z, carrier)) REQUIRE(ev.holds(a, st) == ev.holds(compose(t, a), e));
        }
    }
}

TEST_CASE("is_constructive") {
    auto x = CatObject::set({"p"});
    auto y = CatObject::set({"p", "q"});
    auto step = Morphism::inclusion(x, y);
    auto male = Expr::atomic(x, "male", identity(x));
    CHECK(is_constructive(Expr::top(x)));
    CHECK(is_constructive(Expr::bot(x)));
    CHECK(is_constructive(male));
    CHECK_FALSE(is_constructive(Expr::negate(Expr::top(x))));
    CHECK_FALSE(is_constructive(Expr::forall(step, Expr::top(y))));
    auto guarded = Expr::exists(male, step, Expr::bot(y));
    CHECK(is_constructive(guarded));
    CHECK_FALSE(is_constructive(guarded, true));
}

TEST_CASE("a guarded existential is not preserved by homomorphisms") {
    // vacuous premise in S becomes satisfied in T, where the body is Bot
    auto fp = fol();
    auto x = CatObject::set({"p"});
    auto male = Expr::atomic(x, "male", identity(x));
    auto e = Expr::exists(male, Morphism::inclusion(x, CatObject::set({"p", "q"})), Expr::bot(CatObject::set({"p", "q"})));
    auto c = CatObject::set({"u"});
    Structure s("S", fp, c, {});
    Structure t("T", fp, c, {{"male", {at(fp->arity("male"), c, {"u"})}}});
    REQUIRE(is_structure_hom(identity(c), s, t));
    auto a = at(x, c, {"u"});
    CHECK(holds(a, e, s));
    CHECK_FALSE(holds(a, e, t));
}
