#include "lfoc/expr.hpp"

#include <algorithm>
#include <optional>

#include "detail.hpp"

namespace lfoc {

struct Expr::Node {
    ExprKind kind;
    CatObject arity;
    std::string feature;
    std::optional<Morphism> morphism; // delta (Atomic) or step (quantifiers)
    std::vector<Expr> children;       // And/Or: l,r; Not: inner; quantifiers: premise, body
    std::string key;
};

namespace {

std::string shape_key(const CatObject& x) {
    std::string out = x.kind() == Kind::Set ? "S" : "G";
    out += std::to_string(x.vertex_count());
    if (x.kind() == Kind::Graph) {
        out += ":";
        for (const auto& e : x.edges()) {
            out += std::to_string(e.source) + ">" + std::to_string(e.target) + ",";
        }
    }
    return out;
}

} // namespace

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

namespace {

std::string_view kind_tag(ExprKind kind) {
    switch (kind) {
    case ExprKind::Atomic: return "A";
    case ExprKind::Top: return "T";
    case ExprKind::Bot: return "F";
    case ExprKind::And: return "&";
    case ExprKind::Or: return "|";
    case ExprKind::Not: return "!";
    case ExprKind::Exists: return "E";
    case ExprKind::Forall: return "U";
    }
    return "?";
}

} // namespace

Expr Expr::atomic(CatObject arity, std::string feature, Morphism delta) {
    auto node = std::make_shared<Node>();
    node->kind = ExprKind::Atomic;
    node->key = "A{" + shape_key(arity) + "}" + feature + "{" + shape_key(delta.dom()) + "}" + detail::maps_text(delta);
    node->arity = std::move(arity);
    node->feature = std::move(feature);
    node->morphism = std::move(delta);
    return Expr(std::move(node));
}

Expr Expr::atomic(std::string feature, Morphism delta) {
    CatObject arity = delta.cod();
    return atomic(std::move(arity), std::move(feature), std::move(delta));
}

Expr Expr::top(CatObject arity) {
    auto node = std::make_shared<Node>();
    node->kind = ExprKind::Top;
    node->key = "T{" + shape_key(arity) + "}";
    node->arity = std::move(arity);
    return Expr(std::move(node));
}

Expr Expr::bot(CatObject arity) {
    auto node = std::make_shared<Node>();
    node->kind = ExprKind::Bot;
    node->key = "F{" + shape_key(arity) + "}";
    node->arity = std::move(arity);
    return Expr(std::move(node));
}

namespace {

template <class NodeT, class ExprT>
std::shared_ptr<NodeT> binary(ExprKind kind, ExprT left, ExprT right) {
    auto node = std::make_shared<NodeT>();
    node->kind = kind;
    node->arity = left.arity();
    node->key = std::string(kind_tag(kind)) + "(" + left.key() + "," + right.key() + ")";
    node->children = {std::move(left), std::move(right)};
    return node;
}

template <class NodeT, class ExprT>
std::shared_ptr<NodeT> quantifier(ExprKind kind, ExprT premise, Morphism step, ExprT body) {
    auto node = std::make_shared<NodeT>();
    node->kind = kind;
    node->arity = premise.arity();
    node->key = std::string(kind_tag(kind)) + "(" + premise.key() + ";{" + shape_key(step.cod()) + "}" +
                detail::maps_text(step) + ";" + body.key() + ")";
    node->morphism = std::move(step);
    node->children = {std::move(premise), std::move(body)};
    return node;
}

} // namespace

Expr Expr::conj(Expr left, Expr right) { return Expr(binary<Node>(ExprKind::And, std::move(left), std::move(right))); }
Expr Expr::disj(Expr left, Expr right) { return Expr(binary<Node>(ExprKind::Or, std::move(left), std::move(right))); }

Expr Expr::negate(Expr inner) {
    auto node = std::make_shared<Node>();
    node->kind = ExprKind::Not;
    node->arity = inner.arity();
    node->key = "!(" + inner.key() + ")";
    node->children = {std::move(inner)};
    return Expr(std::move(node));
}

Expr Expr::exists(Expr premise, Morphism step, Expr body) {
    return Expr(quantifier<Node>(ExprKind::Exists, std::move(premise), std::move(step), std::move(body)));
}

Expr Expr::forall(Expr premise, Morphism step, Expr body) {
    return Expr(quantifier<Node>(ExprKind::Forall, std::move(premise), std::move(step), std::move(body)));
}

Expr Expr::exists(Morphism step, Expr body) {
    Expr premise = top(step.dom());
    return exists(std::move(premise), std::move(step), std::move(body));
}

Expr Expr::forall(Morphism step, Expr body) {
    Expr premise = top(step.dom());
    return forall(std::move(premise), std::move(step), std::move(body));
}

Expr Expr::implies(Expr premise, Expr body) {
    Morphism step = identity(premise.arity());
    return forall(std::move(premise), std::move(step), std::move(body));
}

ExprKind Expr::kind() const noexcept { return node_->kind; }
const CatObject& Expr::arity() const noexcept { return node_->arity; }

namespace {

[[noreturn]] void wrong_kind(std::string_view accessor) {
    throw ValidationError("expression accessor '" + std::string(accessor) + "' used on the wrong node kind");
}

} // namespace

const std::string& Expr::feature() const {
    if (node_->kind != ExprKind::Atomic) wrong_kind("feature");
    return node_->feature;
}

const Morphism& Expr::delta() const {
    if (node_->kind != ExprKind::Atomic) wrong_kind("delta");
    return *node_->morphism;
}

const Expr& Expr::left() const {
    if (node_->kind != ExprKind::And && node_->kind != ExprKind::Or) wrong_kind("left");
    return node_->children[0];
}

const Expr& Expr::right() const {
    if (node_->kind != ExprKind::And && node_->kind != ExprKind::Or) wrong_kind("right");
    return node_->children[1];
}

const Expr& Expr::inner() const {
    if (node_->kind != ExprKind::Not) wrong_kind("inner");
    return node_->children[0];
}

bool Expr::is_quantifier() const noexcept {
    return node_->kind == ExprKind::Exists || node_->kind == ExprKind::Forall;
}

const Expr& Expr::premise() const {
    if (!is_quantifier()) wrong_kind("premise");
    return node_->children[0];
}

const Morphism& Expr::step() const {
    if (!is_quantifier()) wrong_kind("step");
    return *node_->morphism;
}

const Expr& Expr::body() const {
    if (!is_quantifier()) wrong_kind("body");
    return node_->children[1];
}

std::size_t Expr::depth() const {
    std::size_t d = 0;
    for (const auto& c : node_->children) {
        d = std::max(d, c.depth());
    }
    return is_quantifier() ? d + 1 : d;
}

const std::string& Expr::key() const noexcept { return node_->key; }

// ---------------------------------------------------------------------------

namespace {

void wf_walk(const Expr& e, const Footprint& fp, const std::string& path, ValidationReport& report) {
    auto fail = [&](const std::string& msg) { report.violations.push_back(path + ": " + msg); };
    if (e.arity().kind() != fp.kind()) {
        fail("arity " + e.arity().describe() + " is not of kind " + std::string(to_string(fp.kind())));
        return;
    }
    switch (e.kind()) {
    case ExprKind::Atomic: {
        const auto* feature = fp.find(e.feature());
        if (!feature) {
            fail("unknown feature '" + e.feature() + "'");
            return;
        }
        if (!(e.delta().dom() == feature->arity)) {
            fail("atomic '" + e.feature() + "': substitution domain " + e.delta().dom().describe() +
                 " is not the feature arity " + feature->arity.describe());
        }
        if (!(e.delta().cod() == e.arity())) {
            fail("atomic '" + e.feature() + "': substitution codomain " + e.delta().cod().describe() +
                 " is not the expression arity " + e.arity().describe());
        }
        return;
    }
    case ExprKind::Top:
    case ExprKind::Bot:
        return;
    case ExprKind::And:
    case ExprKind::Or: {
        const char* op = e.kind() == ExprKind::And ? "and" : "or";
        for (const auto* child : {&e.left(), &e.right()}) {
            if (!(child->arity() == e.arity())) {
                fail(std::string(op) + ": operand arity " + child->arity().describe() + " differs from " +
                     e.arity().describe());
            }
        }
        wf_walk(e.left(), fp, path + "." + op + "[0]", report);
        wf_walk(e.right(), fp, path + "." + op + "[1]", report);
        return;
    }
    case ExprKind::Not:
        if (!(e.inner().arity() == e.arity())) {
            fail("not: operand arity differs from " + e.arity().describe());
        }
        wf_walk(e.inner(), fp, path + ".not", report);
        return;
    case ExprKind::Exists:
    case ExprKind::Forall: {
        const char* q = e.kind() == ExprKind::Exists ? "exists" : "forall";
        if (!(e.premise().arity() == e.arity())) {
            fail(std::string(q) + ": premise arity " + e.premise().arity().describe() + " differs from " +
                 e.arity().describe());
        }
        if (!(e.step().dom() == e.arity())) {
            fail(std::string(q) + ": step domain " + e.step().dom().describe() + " differs from " +
                 e.arity().describe());
        }
        if (!(e.body().arity() == e.step().cod())) {
            fail(std::string(q) + ": body arity " + e.body().arity().describe() + " differs from step codomain " +
                 e.step().cod().describe());
        }
        wf_walk(e.premise(), fp, path + "." + q + ".given", report);
        wf_walk(e.body(), fp, path + "." + q + ".body", report);
        return;
    }
    }
}

} // namespace

ValidationReport wf_check(const Expr& e, const Footprint& footprint) {
    ValidationReport report;
    wf_walk(e, footprint, "expr", report);
    return report;
}

// ---------------------------------------------------------------------------

Evaluator::Evaluator(Structure structure) : structure_(std::move(structure)) {}

bool Evaluator::holds(const Morphism& a, const Expr& e) {
    if (!(a.dom() == e.arity())) {
        throw BoundaryError("evaluation: interpretation " + a.describe() + " does not start at the arity " +
                            e.arity().describe());
    }
    if (!(a.cod() == structure_.carrier())) {
        throw BoundaryError("evaluation: interpretation " + a.describe() + " does not land in the carrier of '" +
                            structure_.name() + "'");
    }
    return eval(a, e);
}

bool Evaluator::eval(const Morphism& a, const Expr& e) {
    switch (e.kind()) {
    case ExprKind::Top:
        return true;
    case ExprKind::Bot:
        return false;
    case ExprKind::Atomic:
        return structure_.contains(e.feature(), compose(e.delta(), a));
    case ExprKind::And:
        return eval(a, e.left()) && eval(a, e.right());
    case ExprKind::Or:
        return eval(a, e.left()) || eval(a, e.right());
    case ExprKind::Not:
        return !eval(a, e.inner());
    case ExprKind::Exists:
    case ExprKind::Forall:
        break;
    }
    auto [slot, fresh] = memo_.try_emplace(e.node_id(), Table{e, {}});
    auto key = detail::map_key(a);
    if (auto it = slot->second.values.find(key); it != slot->second.values.end()) {
        return it->second;
    }
    bool result = true;
    if (eval(a, e.premise())) {
        const bool existential = e.kind() == ExprKind::Exists;
        bool found = false;
        bool all = true;
        for_each_extension(e.step(), a, [&](const Morphism& b) {
            if (eval(b, e.body())) {
                found = true;
                return !existential;
            }
            all = false;
            return existential;
        });
        result = existential ? found : all;
    }
    // re-lookup: the recursive calls may have rehashed the memo
    memo_.at(e.node_id()).values.emplace(std::move(key), result);
    return result;
}

std::vector<Morphism> Evaluator::solutions(const Expr& e) {
    if (e.arity().kind() != structure_.carrier().kind()) {
        throw KindError("solutions: expression of kind " + std::string(to_string(e.arity().kind())) +
                        " over a " + std::string(to_string(structure_.carrier().kind())) + " carrier");
    }
    std::vector<Morphism> out;
    for_each_hom(e.arity(), structure_.carrier(), [&](const Morphism& a) {
        if (eval(a, e)) {
            out.push_back(a);
        }
        return true;
    });
    return out;
}

bool holds(const Morphism& a, const Expr& e, const Structure& structure) {
    Evaluator ev(structure);
    return ev.holds(a, e);
}

std::vector<Morphism> solutions(const Expr& e, const Structure& structure) {
    Evaluator ev(structure);
    return ev.solutions(e);
}

// ---------------------------------------------------------------------------

Expr substitute(const Expr& e, const Morphism& t) {
    if (!(t.dom() == e.arity())) {
        throw BoundaryError("substitution: " + t.describe() + " does not start at the arity " + e.arity().describe());
    }
    switch (e.kind()) {
    case ExprKind::Atomic:
        return Expr::atomic(t.cod(), e.feature(), compose(e.delta(), t));
    case ExprKind::Top:
        return Expr::top(t.cod());
    case ExprKind::Bot:
        return Expr::bot(t.cod());
    case ExprKind::And:
        return Expr::conj(substitute(e.left(), t), substitute(e.right(), t));
    case ExprKind::Or:
        return Expr::disj(substitute(e.left(), t), substitute(e.right(), t));
    case ExprKind::Not:
        return Expr::negate(substitute(e.inner(), t));
    case ExprKind::Exists:
    case ExprKind::Forall: {
        // span Y <-step- X -t-> Z; the body moves along Y -> W, the step becomes Z -> W
        auto po = pushout(e.step(), t);
        Expr premise = substitute(e.premise(), t);
        Expr body = substitute(e.body(), po.inj_left);
        if (e.kind() == ExprKind::Exists) {
            return Expr::exists(std::move(premise), std::move(po.inj_right), std::move(body));
        }
        return Expr::forall(std::move(premise), std::move(po.inj_right), std::move(body));
    }
    }
    throw ValidationError("substitution: unknown expression node");
}

bool is_constructive(const Expr& e, bool strict) {
    switch (e.kind()) {
    case ExprKind::Atomic:
    case ExprKind::Top:
    case ExprKind::Bot:
        return true;
    case ExprKind::And:
    case ExprKind::Or:
        return is_constructive(e.left(), strict) && is_constructive(e.right(), strict);
    case ExprKind::Not:
    case ExprKind::Forall:
        return false;
    case ExprKind::Exists:
        if (strict && e.premise().kind() != ExprKind::Top) {
            return false;
        }
        return is_constructive(e.premise(), strict) && is_constructive(e.body(), strict);
    }
    return false;
}

} // namespace lfoc
