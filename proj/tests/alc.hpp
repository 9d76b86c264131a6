#pragma once

// A direct ALC evaluator over explicit interpretations, independent of the
// expression engine, plus the translation of concepts into expressions.

#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lfoc/expr.hpp"

namespace alc {

struct Concept {
    enum class Op { Name, Top, Bot, Not, And, Or, All, Some } op;
    std::string name; // concept name, or role for All/Some
    std::shared_ptr<const Concept> a, b;
};
using C = std::shared_ptr<const Concept>;

inline C name(std::string n) { return std::make_shared<Concept>(Concept{Concept::Op::Name, std::move(n), nullptr, nullptr}); }
inline C top() { return std::make_shared<Concept>(Concept{Concept::Op::Top, "", nullptr, nullptr}); }
inline C bot() { return std::make_shared<Concept>(Concept{Concept::Op::Bot, "", nullptr, nullptr}); }
inline C neg(C x) { return std::make_shared<Concept>(Concept{Concept::Op::Not, "", std::move(x), nullptr}); }
inline C conj(C x, C y) { return std::make_shared<Concept>(Concept{Concept::Op::And, "", std::move(x), std::move(y)}); }
inline C disj(C x, C y) { return std::make_shared<Concept>(Concept{Concept::Op::Or, "", std::move(x), std::move(y)}); }
inline C all(std::string r, C x) { return std::make_shared<Concept>(Concept{Concept::Op::All, std::move(r), std::move(x), nullptr}); }
inline C some(std::string r, C x) { return std::make_shared<Concept>(Concept{Concept::Op::Some, std::move(r), std::move(x), nullptr}); }

struct Interp {
    std::size_t domain = 0;
    std::map<std::string, std::set<std::size_t>> concepts;
    std::map<std::string, std::set<std::pair<std::size_t, std::size_t>>> roles;
};

inline std::set<std::size_t> extension(const C& c, const Interp& I) {
    std::set<std::size_t> out;
    for (std::size_t d = 0; d < I.domain; ++d) {
        bool in = false;
        switch (c->op) {
        case Concept::Op::Name: in = I.concepts.at(c->name).count(d) > 0; break;
        case Concept::Op::Top: in = true; break;
        case Concept::Op::Bot: in = false; break;
        case Concept::Op::Not: in = extension(c->a, I).count(d) == 0; break;
        case Concept::Op::And: in = extension(c->a, I).count(d) && extension(c->b, I).count(d); break;
        case Concept::Op::Or: in = extension(c->a, I).count(d) || extension(c->b, I).count(d); break;
        case Concept::Op::All: {
            auto inner = extension(c->a, I);
            in = true;
            for (const auto& [x, y] : I.roles.at(c->name)) {
                if (x == d && !inner.count(y)) in = false;
            }
            break;
        }
        case Concept::Op::Some: {
            auto inner = extension(c->a, I);
            for (const auto& [x, y] : I.roles.at(c->name)) {
                if (x == d && inner.count(y)) in = true;
            }
            break;
        }
        }
        if (in) out.insert(d);
    }
    return out;
}

inline lfoc::FootprintRef footprint(const std::vector<std::string>& concepts, const std::vector<std::string>& roles) {
    std::vector<lfoc::Feature> fs;
    for (const auto& c : concepts) fs.push_back({c, lfoc::CatObject::set({"p"})});
    for (const auto& r : roles) fs.push_back({r, lfoc::CatObject::set({"p1", "p2"})});
    return std::make_shared<lfoc::Footprint>("ALC", lfoc::Kind::Set, fs);
}

inline std::string element(std::size_t i) { return "d" + std::to_string(i); }

inline lfoc::Structure to_structure(const lfoc::FootprintRef& fp, const Interp& I) {
    using namespace lfoc;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < I.domain; ++i) names.push_back(element(i));
    auto carrier = CatObject::set(names);
    std::map<std::string, std::vector<Morphism>> interp;
    for (const auto& [c, ext] : I.concepts) {
        for (auto d : ext) interp[c].push_back(Morphism(fp->arity(c), carrier, {static_cast<std::uint32_t>(d)}, {}));
    }
    for (const auto& [r, pairs] : I.roles) {
        for (auto [x, y] : pairs) {
            interp[r].push_back(Morphism(fp->arity(r), carrier,
                                         {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)}, {}));
        }
    }
    return Structure("I", fp, carrier, interp);
}

// {x} |> C, following the restriction encodings with fresh variables.
inline lfoc::Expr translate(const C& c, const lfoc::CatObject& x, std::size_t& fresh) {
    using namespace lfoc;
    switch (c->op) {
    case Concept::Op::Name: return Expr::atomic(x, c->name, Morphism(CatObject::set({"p"}), x, {0}, {}));
    case Concept::Op::Top: return Expr::top(x);
    case Concept::Op::Bot: return Expr::bot(x);
    case Concept::Op::Not: return Expr::negate(translate(c->a, x, fresh));
    case Concept::Op::And: return Expr::conj(translate(c->a, x, fresh), translate(c->b, x, fresh));
    case Concept::Op::Or: return Expr::disj(translate(c->a, x, fresh), translate(c->b, x, fresh));
    case Concept::Op::All:
    case Concept::Op::Some: {
        auto inner_arity = CatObject::set({"p1"});
        auto inner = translate(c->a, inner_arity, fresh);
        auto y = CatObject::set({x.vertices()[0], "x" + std::to_string(fresh++)});
        auto sigma = Morphism(inner_arity, y, {1}, {});
        auto role = Expr::atomic(y, c->name, Morphism(CatObject::set({"p1", "p2"}), y, {0, 1}, {}));
        auto moved = substitute(inner, sigma);
        auto step = Morphism::inclusion(x, y);
        if (c->op == Concept::Op::All) return Expr::forall(step, Expr::implies(role, moved));
        return Expr::exists(step, Expr::conj(role, moved));
    }
    }
    return Expr::bot(x);
}

inline C random_concept(std::mt19937& rng, const std::vector<std::string>& concepts,
                        const std::vector<std::string>& roles, int depth) {
    std::uniform_int_distribution<int> d(0, 9);
    std::uniform_int_distribution<std::size_t> pc(0, concepts.size() - 1), pr(0, roles.size() - 1);
    int r = d(rng);
    if (depth == 0 || r < 3) {
        if (r == 0) return top();
        if (r == 1) return bot();
        return name(concepts[pc(rng)]);
    }
    switch (r) {
    case 3: return neg(random_concept(rng, concepts, roles, depth - 1));
    case 4: return conj(random_concept(rng, concepts, roles, depth - 1), random_concept(rng, concepts, roles, depth - 1));
    case 5: return disj(random_concept(rng, concepts, roles, depth - 1), random_concept(rng, concepts, roles, depth - 1));
    case 6:
    case 7: return all(roles[pr(rng)], random_concept(rng, concepts, roles, depth - 1));
    default: return some(roles[pr(rng)], random_concept(rng, concepts, roles, depth - 1));
    }
}

inline Interp random_interp(std::mt19937& rng, const std::vector<std::string>& concepts,
                            const std::vector<std::string>& roles, std::size_t max_domain) {
    std::uniform_int_distribution<std::size_t> dom(1, max_domain);
    std::bernoulli_distribution coin(0.4);
    Interp I;
    I.domain = dom(rng);
    for (const auto& c : concepts) {
        auto& s = I.concepts[c];
        for (std::size_t d = 0; d < I.domain; ++d)
            if (coin(rng)) s.insert(d);
    }
    for (const auto& r : roles) {
        auto& s = I.roles[r];
        for (std::size_t x = 0; x < I.domain; ++x)
            for (std::size_t y = 0; y < I.domain; ++y)
                if (coin(rng)) s.insert({x, y});
    }
    return I;
}

} // namespace alc
