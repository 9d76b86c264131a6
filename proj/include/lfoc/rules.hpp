#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lfoc/sketch.hpp"

namespace lfoc {

/// `lhs =r=> rhs` with `r: context(lhs) -> context(rhs)`.
class SketchRule {
public:
    SketchRule(std::string name, Sketch lhs, Sketch rhs, Morphism r);

    const std::string& name() const noexcept { return name_; }
    const Sketch& lhs() const noexcept { return lhs_; }
    const Sketch& rhs() const noexcept { return rhs_; }
    const Morphism& r() const noexcept { return r_; }

    /// Expressions of both sides, deduplicated, lhs first.
    std::vector<Expr> expressions() const;

private:
    std::string name_;
    Sketch lhs_;
    Sketch rhs_;
    Morphism r_;
};

/// `phi` translates every constraint of `pattern` into one of `target`.
bool is_match(const Morphism& phi, const Sketch& pattern, const Sketch& target);
/// All matches of `pattern` in `target`, in canonical order.
std::vector<Morphism> find_matches(const Sketch& pattern, const Sketch& target);

/// Every model of the lhs in `structure` extends along r to a model of the rhs.
/// The counterexample is the first unextendable lhs model.
Verdict is_conservative(const Structure& structure, const SketchRule& rule);
/// Conservative in every structure of the registry.
Verdict is_sound(const SketchRule& rule, const StructureRegistry& registry);

struct Closedness {
    bool closed = true;
    std::optional<Morphism> failing_match;
    explicit operator bool() const noexcept { return closed; }
};

/// Closed relative to the single match `phi`.
bool is_closed_at(const Sketch& sketch, const SketchRule& rule, const Morphism& phi);
Closedness is_closed(const Sketch& sketch, const SketchRule& rule);

/// Pushout of the span `context(sketch) <-phi- context(lhs) -r-> context(rhs)`,
/// with the sketch's constraints moved along the left injection and the
/// rhs constraints along the right one. Sketch names are kept.
SketchPushout apply_rule_with_injections(const Sketch& sketch, const SketchRule& rule, const Morphism& phi);
Sketch apply_rule(const Sketch& sketch, const SketchRule& rule, const Morphism& phi);

struct SaturationLimits {
    std::size_t max_steps = 100;
    std::size_t max_vertices = 16;
    std::size_t max_edges = 16;
};

enum class SaturationStatus { Closed, BudgetExhausted };

struct SaturationResult {
    Sketch sketch;
    SaturationStatus status;
    std::size_t steps = 0;
    /// Which limit tripped, empty when closed.
    std::string reason;
};

/// Applies rules at non-closed matches (rules in order, matches in canonical
/// order, restarting after each application) until closed or a limit trips.
/// An application that would exceed a size limit is not performed.
SaturationResult saturate(const Sketch& sketch, const std::vector<SketchRule>& rules, const SaturationLimits& limits);

/// `(X, {e@id}) => (X, {left@id, right@id})` for `e = left and right`.
SketchRule unfold_rule(const FootprintRef& footprint, const Expr& conjunction);
/// The converse of `unfold_rule`.
SketchRule fold_rule(const FootprintRef& footprint, const Expr& conjunction);
/// `(X, {p@id, e@id}) =t=> (Y, {body@id})` for `e = given p exists t . body`.
SketchRule modus_ponens_rule(const FootprintRef& footprint, const Expr& conditional);
/// `(X, {}) => (X, {e@id})`.
SketchRule intro_rule(const FootprintRef& footprint, const Expr& e);

struct Equivalence {
    bool conservative = false;
    bool closed = false;
    bool agree() const noexcept { return conservative == closed; }
};

/// Conservativity of the rule in `structure` against closedness of the
/// maximal semantical sketch over the rule's own expressions.
Equivalence check_equivalence(const Structure& structure, const SketchRule& rule);

} // namespace lfoc
