#include "lfoc/rules.hpp"

#include <algorithm>

namespace lfoc {

SketchRule::SketchRule(std::string name, Sketch lhs, Sketch rhs, Morphism r)
    : name_(std::move(name)), lhs_(std::move(lhs)), rhs_(std::move(rhs)), r_(std::move(r)) {
    if (!(r_.dom() == lhs_.context()) || !(r_.cod() == rhs_.context())) {
        throw BoundaryError("rule '" + name_ + "': " + r_.describe() + " does not go from " +
                            lhs_.context().describe() + " to " + rhs_.context().describe());
    }
    if (!(*lhs_.footprint() == *rhs_.footprint())) {
        throw ValidationError("rule '" + name_ + "': both sides must share one footprint");
    }
}

std::vector<Expr> SketchRule::expressions() const {
    std::vector<Expr> out;
    for (const auto* side : {&lhs_, &rhs_}) {
        for (const auto& c : side->constraints()) {
            if (std::find(out.begin(), out.end(), c.expr()) == out.end()) {
                out.push_back(c.expr());
            }
        }
    }
    return out;
}

bool is_match(const Morphism& phi, const Sketch& pattern, const Sketch& target) {
    if (!(phi.dom() == pattern.context()) || !(phi.cod() == target.context())) {
        return false;
    }
    return std::all_of(pattern.constraints().begin(), pattern.constraints().end(),
                       [&](const Constraint& c) { return target.contains(translate_constraint(phi, c)); });
}

std::vector<Morphism> find_matches(const Sketch& pattern, const Sketch& target) {
    std::vector<Morphism> out;
    for_each_hom(pattern.context(), target.context(), [&](const Morphism& phi) {
        if (is_match(phi, pattern, target)) {
            out.push_back(phi);
        }
        return true;
    });
    return out;
}

namespace {

std::optional<Morphism> unextendable_model(Evaluator& ev, const SketchRule& rule) {
    std::optional<Morphism> failure;
    for_each_hom(rule.lhs().context(), ev.structure().carrier(), [&](const Morphism& a) {
        if (!satisfies_all(ev, a, rule.lhs().constraints())) {
            return true;
        }
        bool extended = false;
        for_each_extension(rule.r(), a, [&](const Morphism& b) {
            extended = satisfies_all(ev, b, rule.rhs().constraints());
            return !extended;
        });
        if (!extended) {
            failure = a;
            return false;
        }
        return true;
    });
    return failure;
}

} // namespace

Verdict is_conservative(const Structure& structure, const SketchRule& rule) {
    Evaluator ev(structure);
    Verdict v;
    v.scope = "structure '" + structure.name() + "'";
    if (auto a = unextendable_model(ev, rule)) {
        v.holds = false;
        v.counterexample = Counterexample{structure.name(), *a, "lhs model of rule '" + rule.name() +
                                                                   "' has no extension to an rhs model"};
    }
    return v;
}

Verdict is_sound(const SketchRule& rule, const StructureRegistry& registry) {
    Verdict v;
    v.scope = registry.describe();
    registry.for_each([&](const Structure& u) {
        auto local = is_conservative(u, rule);
        if (!local.holds) {
            v.holds = false;
            v.counterexample = std::move(local.counterexample);
        }
        return v.holds;
    });
    return v;
}

bool is_closed_at(const Sketch& sketch, const SketchRule& rule, const Morphism& phi) {
    bool found = false;
    for_each_extension(rule.r(), phi, [&](const Morphism& b) {
        found = is_match(b, rule.rhs(), sketch);
        return !found;
    });
    return found;
}

Closedness is_closed(const Sketch& sketch, const SketchRule& rule) {
    Closedness out;
    for_each_hom(rule.lhs().context(), sketch.context(), [&](const Morphism& phi) {
        if (is_match(phi, rule.lhs(), sketch) && !is_closed_at(sketch, rule, phi)) {
            out.closed = false;
            out.failing_match = phi;
            return false;
        }
        return true;
    });
    return out;
}

SketchPushout apply_rule_with_injections(const Sketch& sketch, const SketchRule& rule, const Morphism& phi) {
    if (!is_match(phi, rule.lhs(), sketch)) {
        throw ValidationError("apply: " + phi.describe() + " is not a match of the lhs of rule '" + rule.name() +
                              "' in sketch '" + sketch.name() + "'");
    }
    return sketch_pushout(phi, rule.r(), sketch, rule.rhs(), sketch.name());
}

Sketch apply_rule(const Sketch& sketch, const SketchRule& rule, const Morphism& phi) {
    return apply_rule_with_injections(sketch, rule, phi).sketch;
}

SaturationResult saturate(const Sketch& sketch, const std::vector<SketchRule>& rules, const SaturationLimits& limits) {
    SaturationResult result{sketch, SaturationStatus::Closed, 0, ""};
    while (true) {
        std::optional<Sketch> next;
        for (const auto& rule : rules) {
            for_each_hom(rule.lhs().context(), result.sketch.context(), [&](const Morphism& phi) {
                if (is_match(phi, rule.lhs(), result.sketch) && !is_closed_at(result.sketch, rule, phi)) {
                    next = apply_rule(result.sketch, rule, phi);
                    return false;
                }
                return true;
            });
            if (next) {
                break;
            }
        }
        if (!next) {
            return result;
        }
        if (result.steps >= limits.max_steps) {
            result.reason = "step limit " + std::to_string(limits.max_steps) + " reached";
        } else if (next->context().vertex_count() > limits.max_vertices) {
            result.reason = "vertex limit " + std::to_string(limits.max_vertices) + " would be exceeded";
        } else if (next->context().edge_count() > limits.max_edges) {
            result.reason = "edge limit " + std::to_string(limits.max_edges) + " would be exceeded";
        }
        if (!result.reason.empty()) {
            result.status = SaturationStatus::BudgetExhausted;
            return result;
        }
        result.sketch = std::move(*next);
        ++result.steps;
    }
}

namespace {

Sketch at_identity(const FootprintRef& fp, const CatObject& x, std::vector<Expr> es) {
    std::vector<Constraint> cs;
    for (auto& e : es) {
        cs.emplace_back(std::move(e), identity(x));
    }
    return Sketch(x.describe(), fp, x, std::move(cs));
}

} // namespace

SketchRule unfold_rule(const FootprintRef& footprint, const Expr& conjunction) {
    if (conjunction.kind() != ExprKind::And) {
        throw ValidationError("unfold rule: expression is not a conjunction");
    }
    const auto& x = conjunction.arity();
    return SketchRule("unfold", at_identity(footprint, x, {conjunction}),
                      at_identity(footprint, x, {conjunction.left(), conjunction.right()}), identity(x));
}

SketchRule fold_rule(const FootprintRef& footprint, const Expr& conjunction) {
    if (conjunction.kind() != ExprKind::And) {
        throw ValidationError("fold rule: expression is not a conjunction");
    }
    const auto& x = conjunction.arity();
    return SketchRule("fold", at_identity(footprint, x, {conjunction.left(), conjunction.right()}),
                      at_identity(footprint, x, {conjunction}), identity(x));
}

SketchRule modus_ponens_rule(const FootprintRef& footprint, const Expr& conditional) {
    if (conditional.kind() != ExprKind::Exists) {
        throw ValidationError("modus ponens rule: expression is not an existential");
    }
    const auto& x = conditional.arity();
    const auto& y = conditional.step().cod();
    return SketchRule("modus_ponens", at_identity(footprint, x, {conditional.premise(), conditional}),
                      at_identity(footprint, y, {conditional.body()}), conditional.step());
}

SketchRule intro_rule(const FootprintRef& footprint, const Expr& e) {
    const auto& x = e.arity();
    return SketchRule("intro", at_identity(footprint, x, {}), at_identity(footprint, x, {e}), identity(x));
}

Equivalence check_equivalence(const Structure& structure, const SketchRule& rule) {
    Equivalence out;
    out.conservative = is_conservative(structure, rule).holds;
    out.closed = is_closed(structure_to_sketch_max(structure, rule.expressions()), rule).closed;
    return out;
}

} // namespace lfoc
