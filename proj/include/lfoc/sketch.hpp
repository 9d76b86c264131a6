#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lfoc/cat.hpp"
#include "lfoc/expr.hpp"
#include "lfoc/footprint.hpp"

namespace lfoc {

/// An expression bound into a context: `(X |> e, binding: X -> K)`.
class Constraint {
public:
    Constraint(Expr expr, Morphism binding);

    const Expr& expr() const noexcept { return expr_; }
    const Morphism& binding() const noexcept { return binding_; }
    /// Expression key plus the binding's maps; equal keys mean equal constraints
    /// within one context.
    const std::string& key() const noexcept { return key_; }

    bool operator==(const Constraint& other) const { return key_ == other.key_ && binding_.cod() == other.binding_.cod(); }

private:
    Expr expr_;
    Morphism binding_;
    std::string key_;
};

/// A context object with a finite set of constraints, kept sorted by key and
/// duplicate-free.
class Sketch {
public:
    Sketch(std::string name, FootprintRef footprint, CatObject context, std::vector<Constraint> constraints = {});

    const std::string& name() const noexcept { return name_; }
    const FootprintRef& footprint() const noexcept { return footprint_; }
    const CatObject& context() const noexcept { return context_; }
    const std::vector<Constraint>& constraints() const noexcept { return constraints_; }

    bool contains(const Constraint& c) const;
    Sketch renamed(std::string name) const;
    Sketch with(std::vector<Constraint> more) const;

    /// Same context and constraint set (names of sketches ignored).
    bool operator==(const Sketch& other) const;

private:
    std::string name_;
    FootprintRef footprint_;
    CatObject context_;
    std::vector<Constraint> constraints_;
};

/// An interpretation `(a, U)` of a context in a structure.
struct Interpretation {
    Morphism map;
    Structure structure;
};

/// Witness for a failed check: an interpretation in a named structure.
struct Counterexample {
    std::string structure;
    Morphism assignment;
    std::string detail;
};

/// Outcome of a check quantified over a registry. `scope` names the registry.
struct Verdict {
    bool holds = true;
    std::string scope;
    std::optional<Counterexample> counterexample;

    explicit operator bool() const noexcept { return holds; }
};

Constraint translate_constraint(const Morphism& phi, const Constraint& c);
std::vector<Constraint> translate_constraints(const Morphism& phi, const std::vector<Constraint>& cs);

Interpretation reduct(const Morphism& phi, const Interpretation& i);

bool satisfies(const Interpretation& i, const Constraint& c);
/// Same, reusing the evaluator's memo; `map` lands in its structure's carrier.
bool satisfies(Evaluator& ev, const Morphism& map, const Constraint& c);
bool satisfies_all(Evaluator& ev, const Morphism& map, const std::vector<Constraint>& cs);

/// `satisfies(reduct(phi, i), c) == satisfies(i, translate(phi, c))`.
bool check_satisfaction_condition(const Morphism& phi, const Constraint& c, const Interpretation& i);

/// All models of the sketch in `structure`, in canonical order.
std::vector<Morphism> models(const Sketch& sketch, const Structure& structure);

/// `C` entails `D` at context `K` over every structure of the registry.
Verdict entails(const CatObject& context, const std::vector<Constraint>& premises,
                const std::vector<Constraint>& conclusions, const StructureRegistry& registry);

/// `phi` is a sketch morphism S -> T relative to the registry.
Verdict check_sketch_morphism(const Morphism& phi, const Sketch& source, const Sketch& target,
                              const StructureRegistry& registry);

struct SketchPushout {
    Sketch sketch;
    Morphism inj_left;
    Morphism inj_right;
};

/// Glues two sketches along a span of context morphisms `f: C -> left`, `g: C -> right`.
SketchPushout sketch_pushout(const Morphism& f, const Morphism& g, const Sketch& left, const Sketch& right,
                             std::string name = "pushout");

/// Atomic facts of a structure: one constraint `(arity(P) |> P(id), a)` per `a` in `[[P]]`.
Sketch structure_to_sketch_min(const Structure& structure);
/// Every `(e, a)` with `e` in `universe` and `a` a solution of `e`.
Sketch structure_to_sketch_max(const Structure& structure, const std::vector<Expr>& universe);

/// Every model of the minimal sketch of `structure` in the registry factors
/// through exactly one structure homomorphism. Throws if `structure` is not
/// in the registry.
Verdict check_initial_model(const Structure& structure, const StructureRegistry& registry);

} // namespace lfoc
