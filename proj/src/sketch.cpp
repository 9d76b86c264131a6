#include "lfoc/sketch.hpp"

#include <algorithm>

#include "detail.hpp"

namespace lfoc {

Constraint::Constraint(Expr expr, Morphism binding) : expr_(std::move(expr)), binding_(std::move(binding)) {
    if (!(binding_.dom() == expr_.arity())) {
        throw BoundaryError("constraint: binding " + binding_.describe() + " does not start at the arity " +
                            expr_.arity().describe());
    }
    key_ = expr_.key() + "@" + detail::maps_text(binding_);
}

namespace {

void normalize(std::vector<Constraint>& cs) {
    std::sort(cs.begin(), cs.end(), [](const Constraint& a, const Constraint& b) { return a.key() < b.key(); });
    cs.erase(std::unique(cs.begin(), cs.end(), [](const Constraint& a, const Constraint& b) { return a.key() == b.key(); }),
             cs.end());
}

} // namespace

Sketch::Sketch(std::string name, FootprintRef footprint, CatObject context, std::vector<Constraint> constraints)
    : name_(std::move(name)), footprint_(std::move(footprint)), context_(std::move(context)),
      constraints_(std::move(constraints)) {
    if (context_.kind() != footprint_->kind()) {
        throw KindError("sketch '" + name_ + "': " + std::string(to_string(context_.kind())) +
                        " context for a " + std::string(to_string(footprint_->kind())) + " footprint");
    }
    for (const auto& c : constraints_) {
        if (!(c.binding().cod() == context_)) {
            throw BoundaryError("sketch '" + name_ + "': constraint binding " + c.binding().describe() +
                                " does not land in the context " + context_.describe());
        }
        auto report = wf_check(c.expr(), *footprint_);
        if (!report.ok()) {
            throw ValidationError("sketch '" + name_ + "': " + report.violations.front());
        }
    }
    normalize(constraints_);
}

bool Sketch::contains(const Constraint& c) const {
    if (!(c.binding().cod() == context_)) {
        return false;
    }
    auto it = std::lower_bound(constraints_.begin(), constraints_.end(), c.key(),
                               [](const Constraint& a, const std::string& k) { return a.key() < k; });
    return it != constraints_.end() && it->key() == c.key();
}

Sketch Sketch::renamed(std::string name) const {
    Sketch out = *this;
    out.name_ = std::move(name);
    return out;
}

Sketch Sketch::with(std::vector<Constraint> more) const {
    more.insert(more.end(), constraints_.begin(), constraints_.end());
    return Sketch(name_, footprint_, context_, std::move(more));
}

bool Sketch::operator==(const Sketch& other) const {
    if (!(context_ == other.context_) || constraints_.size() != other.constraints_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < constraints_.size(); ++i) {
        if (constraints_[i].key() != other.constraints_[i].key()) {
            return false;
        }
    }
    return *footprint_ == *other.footprint_;
}

// ---------------------------------------------------------------------------

Constraint translate_constraint(const Morphism& phi, const Constraint& c) {
    if (!(phi.dom() == c.binding().cod())) {
        throw BoundaryError("constraint translation: " + phi.describe() + " does not start at the context " +
                            c.binding().cod().describe());
    }
    return Constraint(c.expr(), compose(c.binding(), phi));
}

std::vector<Constraint> translate_constraints(const Morphism& phi, const std::vector<Constraint>& cs) {
    std::vector<Constraint> out;
    out.reserve(cs.size());
    for (const auto& c : cs) {
        out.push_back(translate_constraint(phi, c));
    }
    return out;
}

Interpretation reduct(const Morphism& phi, const Interpretation& i) {
    if (!(phi.cod() == i.map.dom())) {
        throw BoundaryError("reduct: " + phi.describe() + " does not end at the context " + i.map.dom().describe());
    }
    return Interpretation{compose(phi, i.map), i.structure};
}

bool satisfies(Evaluator& ev, const Morphism& map, const Constraint& c) {
    if (!(map.dom() == c.binding().cod())) {
        throw BoundaryError("satisfaction: interpretation " + map.describe() + " does not start at the context " +
                            c.binding().cod().describe());
    }
    return ev.holds(compose(c.binding(), map), c.expr());
}

bool satisfies_all(Evaluator& ev, const Morphism& map, const std::vector<Constraint>& cs) {
    return std::all_of(cs.begin(), cs.end(), [&](const Constraint& c) { return satisfies(ev, map, c); });
}

bool satisfies(const Interpretation& i, const Constraint& c) {
    Evaluator ev(i.structure);
    return satisfies(ev, i.map, c);
}

bool check_satisfaction_condition(const Morphism& phi, const Constraint& c, const Interpretation& i) {
    bool lhs = satisfies(reduct(phi, i), c);
    bool rhs = satisfies(i, translate_constraint(phi, c));
    return lhs == rhs;
}

std::vector<Morphism> models(const Sketch& sketch, const Structure& structure) {
    Evaluator ev(structure);
    std::vector<Morphism> out;
    for_each_hom(sketch.context(), structure.carrier(), [&](const Morphism& a) {
        if (satisfies_all(ev, a, sketch.constraints())) {
            out.push_back(a);
        }
        return true;
    });
    return out;
}

Verdict entails(const CatObject& context, const std::vector<Constraint>& premises,
                const std::vector<Constraint>& conclusions, const StructureRegistry& registry) {
    for (const auto* cs : {&premises, &conclusions}) {
        for (const auto& c : *cs) {
            if (!(c.binding().cod() == context)) {
                throw BoundaryError("entailment: constraint bound into " + c.binding().cod().describe() +
                                    ", not the context " + context.describe());
            }
        }
    }
    Verdict verdict;
    verdict.scope = registry.describe();
    if (context.kind() != registry.footprint()->kind()) {
        throw KindError("entailment: " + std::string(to_string(context.kind())) + " context over a " +
                        std::string(to_string(registry.footprint()->kind())) + " registry");
    }
    registry.for_each([&](const Structure& u) {
        Evaluator ev(u);
        for_each_hom(context, u.carrier(), [&](const Morphism& a) {
            if (!satisfies_all(ev, a, premises)) {
                return true;
            }
            for (std::size_t k = 0; k < conclusions.size(); ++k) {
                if (!satisfies(ev, a, conclusions[k])) {
                    verdict.holds = false;
                    verdict.counterexample =
                        Counterexample{u.name(), a, "conclusion " + std::to_string(k) + " fails"};
                    return false;
                }
            }
            return true;
        });
        return verdict.holds;
    });
    return verdict;
}

Verdict check_sketch_morphism(const Morphism& phi, const Sketch& source, const Sketch& target,
                              const StructureRegistry& registry) {
    if (!(phi.dom() == source.context()) || !(phi.cod() == target.context())) {
        throw BoundaryError("sketch morphism: " + phi.describe() + " does not go from the context of '" +
                            source.name() + "' to the context of '" + target.name() + "'");
    }
    return entails(target.context(), target.constraints(), translate_constraints(phi, source.constraints()), registry);
}

SketchPushout sketch_pushout(const Morphism& f, const Morphism& g, const Sketch& left, const Sketch& right,
                             std::string name) {
    if (!(f.cod() == left.context()) || !(g.cod() == right.context())) {
        throw BoundaryError("sketch pushout: the span does not end at the contexts of '" + left.name() + "' and '" +
                            right.name() + "'");
    }
    auto po = pushout(f, g);
    auto cs = translate_constraints(po.inj_left, left.constraints());
    auto rs = translate_constraints(po.inj_right, right.constraints());
    cs.insert(cs.end(), rs.begin(), rs.end());
    Sketch s(std::move(name), left.footprint(), po.apex, std::move(cs));
    return SketchPushout{std::move(s), std::move(po.inj_left), std::move(po.inj_right)};
}

Sketch structure_to_sketch_min(const Structure& structure) {
    std::vector<Constraint> cs;
    for (const auto& f : structure.footprint()->features()) {
        auto e = Expr::atomic(f.name, identity(f.arity));
        for (const auto& a : structure.interpretation(f.name)) {
            cs.emplace_back(e, a);
        }
    }
    return Sketch("min(" + structure.name() + ")", structure.footprint(), structure.carrier(), std::move(cs));
}

Sketch structure_to_sketch_max(const Structure& structure, const std::vector<Expr>& universe) {
    Evaluator ev(structure);
    std::vector<Constraint> cs;
    for (const auto& e : universe) {
        for (const auto& a : ev.solutions(e)) {
            cs.emplace_back(e, a);
        }
    }
    return Sketch("max(" + structure.name() + ")", structure.footprint(), structure.carrier(), std::move(cs));
}

Verdict check_initial_model(const Structure& structure, const StructureRegistry& registry) {
    if (!registry.contains(structure)) {
        throw ValidationError("initial model check: structure '" + structure.name() + "' is not in " +
                              registry.describe());
    }
    auto sketch = structure_to_sketch_min(structure);
    Verdict verdict;
    verdict.scope = registry.describe();
    const auto& carrier = structure.carrier();
    registry.for_each([&](const Structure& v) {
        Evaluator ev(v);
        for_each_hom(carrier, v.carrier(), [&](const Morphism& a) {
            if (!satisfies_all(ev, a, sketch.constraints())) {
                return true;
            }
            // mediators s: U -> V with id;s = a
            std::size_t mediators = 0;
            for_each_hom(carrier, v.carrier(), [&](const Morphism& s) {
                if (compose(identity(carrier), s) == a && is_structure_hom(s, structure, v)) {
                    ++mediators;
                }
                return true;
            });
            if (mediators != 1) {
                verdict.holds = false;
                verdict.counterexample =
                    Counterexample{v.name(), a, std::to_string(mediators) + " mediating homomorphisms"};
                return false;
            }
            return true;
        });
        return verdict.holds;
    });
    return verdict;
}

} // namespace lfoc
