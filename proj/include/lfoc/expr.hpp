#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "lfoc/cat.hpp"
#include "lfoc/footprint.hpp"

namespace lfoc {

enum class ExprKind { Atomic, Top, Bot, And, Or, Not, Exists, Forall };

/// A first-order feature expression `X |> e`: an immutable tree whose nodes
/// all carry their arity object X.
///
/// The factories do not check well-formedness; `wf_check` does.
class Expr {
public:
    static Expr atomic(CatObject arity, std::string feature, Morphism delta);
    /// Atomic expression at arity `cod(delta)`.
    static Expr atomic(std::string feature, Morphism delta);
    static Expr top(CatObject arity);
    static Expr bot(CatObject arity);
    static Expr conj(Expr left, Expr right);
    static Expr disj(Expr left, Expr right);
    static Expr negate(Expr inner);
    /// Conditional quantifiers: premise at X, step X -> Y, body at Y.
    static Expr exists(Expr premise, Morphism step, Expr body);
    static Expr forall(Expr premise, Morphism step, Expr body);
    /// Unconditional forms (premise = top).
    static Expr exists(Morphism step, Expr body);
    static Expr forall(Morphism step, Expr body);
    /// Propositional implication: a universal quantifier along the identity.
    static Expr implies(Expr premise, Expr body);

    ExprKind kind() const noexcept;
    const CatObject& arity() const noexcept;

    const std::string& feature() const;   // Atomic
    const Morphism& delta() const;        // Atomic
    const Expr& left() const;             // And, Or
    const Expr& right() const;            // And, Or
    const Expr& inner() const;            // Not
    const Expr& premise() const;          // Exists, Forall
    const Morphism& step() const;         // Exists, Forall
    const Expr& body() const;             // Exists, Forall

    bool is_quantifier() const noexcept;
    /// Quantifier nesting depth.
    std::size_t depth() const;

    /// Canonical key: the tree with every arity object reduced to its shape,
    /// so expressions differing only in bound names compare equal.
    const std::string& key() const noexcept;
    bool operator==(const Expr& other) const { return key() == other.key(); }

    /// Identity of the underlying node (stable while any copy is alive).
    const void* node_id() const noexcept { return node_.get(); }

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

/// Ok iff every node is well-formed against the footprint.
ValidationReport wf_check(const Expr& e, const Footprint& footprint);

/// Evaluates expressions over one structure, memoizing per (node, assignment).
/// An evaluator belongs to a single query; it is not shared between threads.
class Evaluator {
public:
    explicit Evaluator(Structure structure);

    /// `a` is a solution of `e`: dom(a) = arity(e), cod(a) = carrier.
    bool holds(const Morphism& a, const Expr& e);
    /// All solutions, in canonical order.
    std::vector<Morphism> solutions(const Expr& e);

    const Structure& structure() const noexcept { return structure_; }

private:
    struct Table {
        Expr keep_alive;
        std::unordered_map<std::u32string, bool> values;
    };
    bool eval(const Morphism& a, const Expr& e);

    Structure structure_;
    std::unordered_map<const void*, Table> memo_;
};

bool holds(const Morphism& a, const Expr& e, const Structure& structure);
std::vector<Morphism> solutions(const Expr& e, const Structure& structure);

/// Translates `e` along `t: arity(e) -> Z`. Quantifier steps are moved with
/// chosen pushouts, so the result is determined up to bound renaming.
Expr substitute(const Expr& e, const Morphism& t);

/// No negation and no universal quantifier. `strict` additionally requires
/// every existential premise to be `top`.
bool is_constructive(const Expr& e, bool strict = false);

} // namespace lfoc
