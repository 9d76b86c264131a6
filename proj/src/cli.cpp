#include "lfoc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <functional>

#include "lfoc/dsl.hpp"

namespace lfoc {

namespace {

using nlohmann::json;

class UsageError : public Error {
public:
    using Error::Error;
};

json j_morphism(const Morphism& m) {
    json map = json::object();
    for (std::size_t i = 0; i < m.dom().vertex_count(); ++i) {
        map[m.dom().vertices()[i]] = m.cod().vertices()[m.vertex_map()[i]];
    }
    for (std::size_t i = 0; i < m.dom().edge_count(); ++i) {
        map[m.dom().edges()[i].name] = m.cod().edges()[m.edge_map()[i]].name;
    }
    return {{"source", print_object(m.dom())}, {"target", print_object(m.cod())}, {"map", map}};
}

json j_morphisms(const std::vector<Morphism>& ms) {
    json out = json::array();
    for (const auto& m : ms) out.push_back(j_morphism(m));
    return out;
}

json j_constraint(const Constraint& c) {
    return {{"expr", print_expr(c.expr())}, {"arity", print_object(c.expr().arity())}, {"binding", j_morphism(c.binding())}};
}

json j_sketch(const Sketch& s) {
    json cs = json::array();
    for (const auto& c : s.constraints()) cs.push_back(j_constraint(c));
    return {{"name", s.name()}, {"footprint", s.footprint()->name()}, {"context", print_object(s.context())}, {"constraints", cs}};
}

json j_verdict(const Verdict& v) {
    json out = {{"holds", v.holds}, {"scope", v.scope}};
    if (v.counterexample) {
        out["counterexample"] = {{"structure", v.counterexample->structure},
                                 {"assignment", j_morphism(v.counterexample->assignment)},
                                 {"detail", v.counterexample->detail}};
    }
    return out;
}

template <class M>
const typename M::mapped_type& lookup(const M& map, const std::string& name, const std::string& what) {
    auto it = map.find(name);
    if (it == map.end()) throw UsageError("unknown " + what + " '" + name + "'");
    return it->second;
}

struct RegistryFlags {
    std::string registry;
    std::string max_carrier;
};

void add_registry_flags(CLI::App* cmd, RegistryFlags& flags) {
    cmd->add_option("--registry", flags.registry, "registry name in the document, or a .lfoc file defining one");
    cmd->add_option("--max-carrier", flags.max_carrier, "enumerate all structures with carriers up to N[,M] (vertices,edges)");
}

CarrierBounds parse_bounds(const std::string& text) {
    auto comma = text.find(',');
    try {
        std::size_t used = 0;
        CarrierBounds b;
        auto head = text.substr(0, comma);
        b.max_vertices = std::stoul(head, &used);
        if (used != head.size()) throw std::invalid_argument(text);
        b.max_edges = b.max_vertices;
        if (comma != std::string::npos) {
            auto tail = text.substr(comma + 1);
            b.max_edges = std::stoul(tail, &used);
            if (used != tail.size()) throw std::invalid_argument(text);
        }
        return b;
    } catch (const std::logic_error&) {
        throw UsageError("--max-carrier expects N or N,M, got '" + text + "'");
    }
}

StructureRegistry resolve_registry(const Document& doc, const std::filesystem::path& doc_path, const FootprintRef& fp,
                                   const RegistryFlags& flags) {
    if (flags.registry.empty() && flags.max_carrier.empty()) {
        throw UsageError("this command quantifies over structures: pass --max-carrier N[,M] or --registry NAME|FILE");
    }
    if (!flags.registry.empty() && !flags.max_carrier.empty()) {
        throw UsageError("--registry and --max-carrier are mutually exclusive");
    }
    if (!flags.max_carrier.empty()) return StructureRegistry::enumerated(fp, parse_bounds(flags.max_carrier));
    std::optional<StructureRegistry> reg;
    if (doc.registries.count(flags.registry)) {
        reg = doc.registry(flags.registry);
    } else {
        std::filesystem::path p = flags.registry;
        if (!std::filesystem::exists(p)) p = doc_path.parent_path() / flags.registry;
        if (!std::filesystem::exists(p)) throw UsageError("unknown registry '" + flags.registry + "'");
        auto other = parse_file(p);
        if (other.registries.size() != 1) {
            throw UsageError("registry file '" + p.string() + "' must define exactly one registry");
        }
        reg = other.registry(other.registries.begin()->first);
    }
    if (!(*reg->footprint() == *fp)) {
        throw UsageError("registry footprint '" + reg->footprint()->name() + "' does not match '" + fp->name() + "'");
    }
    return *reg;
}

json j_bounds(const StructureRegistry& reg) {
    if (!reg.is_enumerated()) return nullptr;
    if (reg.footprint()->kind() == Kind::Set) return {{"max_elements", reg.bounds().max_vertices}};
    return {{"max_vertices", reg.bounds().max_vertices}, {"max_edges", reg.bounds().max_edges}};
}

struct Output {
    json body;
    int code = 0;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Feature-expression logic over finite sets and graphs", "lfoc"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "lfoc 1.0");

    std::string file;
    RegistryFlags reg_flags;
    std::function<Output(const Document&)> action;
    std::string command;

    auto sub = [&](const std::string& name, const std::string& desc) {
        auto* cmd = app.add_subcommand(name, desc);
        cmd->add_option("document", file, "the .lfoc document")->required();
        return cmd;
    };
    auto registry_of = [&](const Document& doc, const FootprintRef& fp) {
        return resolve_registry(doc, file, fp, reg_flags);
    };
    auto with_scope = [](json body, const StructureRegistry& reg) {
        body["bounds"] = j_bounds(reg);
        return body;
    };

    // solve
    std::string expr_name, structure_name;
    auto* solve = sub("solve", "solutions of a named expression in a structure");
    solve->add_option("--expr", expr_name)->required();
    solve->add_option("--structure", structure_name)->required();
    solve->final_callback([&] {
        action = [&](const Document& doc) {
            const auto& ne = lookup(doc.expressions, expr_name, "expression");
            const auto& u = lookup(doc.structures, structure_name, "structure");
            if (ne.footprint != u.footprint()->name()) throw UsageError("expression and structure use different footprints");
            auto sols = solutions(ne.expr, u);
            return Output{{{"expr", print_expr(ne.expr)}, {"structure", u.name()}, {"count", sols.size()},
                           {"solutions", j_morphisms(sols)}},
                          0};
        };
    });

    // check
    std::string interp_name;
    auto* check = sub("check", "does an interpretation satisfy its sketch");
    check->add_option("--interpretation", interp_name)->required();
    check->final_callback([&] {
        action = [&](const Document& doc) {
            const auto& ni = lookup(doc.interpretations, interp_name, "interpretation");
            const auto& sk = doc.sketches.at(ni.sketch);
            Evaluator ev(doc.structures.at(ni.structure));
            json failing = json::array();
            for (const auto& c : sk.constraints()) {
                if (!satisfies(ev, ni.map, c)) failing.push_back(j_constraint(c));
            }
            bool holds = failing.empty();
            json body = {{"holds", holds}, {"sketch", ni.sketch}, {"structure", ni.structure},
                         {"interpretation", j_morphism(ni.map)}};
            if (!holds) body["failing_constraints"] = failing;
            return Output{body, holds ? 0 : 1};
        };
    });

    // models
    std::string sketch_name;
    auto* models_cmd = sub("models", "all models of a sketch in a structure");
    models_cmd->add_option("--sketch", sketch_name)->required();
    models_cmd->add_option("--structure", structure_name)->required();
    models_cmd->final_callback([&] {
        action = [&](const Document& doc) {
            const auto& sk = lookup(doc.sketches, sketch_name, "sketch");
            const auto& u = lookup(doc.structures, structure_name, "structure");
            auto ms = models(sk, u);
            return Output{{{"sketch", sk.name()}, {"structure", u.name()}, {"count", ms.size()}, {"models", j_morphisms(ms)}},
                          0};
        };
    });

    // entail
    std::string premises, conclusions;
    auto* entail = sub("entail", "do the premises entail the conclusions over a registry");
    entail->add_option("--premises", premises, "sketch whose constraints are assumed")->required();
    entail->add_option("--conclusions", conclusions, "sketch over the same context")->required();
    add_registry_flags(entail, reg_flags);
    entail->final_callback([&] {
        action = [&](const Document& doc) {
            const auto& p = lookup(doc.sketches, premises, "sketch");
            const auto& c = lookup(doc.sketches, conclusions, "sketch");
            if (!(p.context() == c.context())) throw UsageError("premises and conclusions must share one context");
            auto reg = registry_of(doc, p.footprint());
            auto v = entails(p.context(), p.constraints(), c.constraints(), reg);
            return Output{with_scope(j_verdict(v), reg), v.holds ? 0 : 1};
        };
    });

    // morphism
    std::string map_name, source_name, target_name;
    auto* morphism_cmd = sub("morphism", "is a context morphism a sketch morphism");
    morphism_cmd->add_option("--map", map_name)->required();
    morphism_cmd->add_option("--source", source_name)->required();
    morphism_cmd->add_option("--target", target_name)->required();
    add_registry_flags(morphism_cmd, reg_flags);
    morphism_cmd->final_callback([&] {
        action = [&](const Document& doc) {
            const auto& m = lookup(doc.morphisms, map_name, "morphism");
            const auto& s = lookup(doc.sketches, source_name, "sketch");
            const auto& t = lookup(doc.sketches, target_name, "sketch");
            auto reg = registry_of(doc, s.footprint());
            auto v = check_sketch_morphism(m, s, t, reg);
            return Output{with_scope(j_verdict(v), reg), v.holds ? 0 : 1};
        };
    });

    // pushout
    std::string f_name, g_name;
    std::vector<std::string> pushout_sketches;
    auto* pushout_cmd = sub("pushout", "pushout of a span, optionally gluing two sketches");
    pushout_cmd->add_option("--f", f_name, "left leg")->required();
    pushout_cmd->add_option("--g", g_name, "right leg")->required();
    pushout_cmd->add_option("--sketches", pushout_sketches, "LEFT,RIGHT sketches on the legs' targets")
        ->delimiter(',')
        ->expected(2);
    pushout_cmd->final_callback([&] {
        action = [&](const Document& doc) {
            const auto& f = lookup(doc.morphisms, f_name, "morphism");
            const auto& g = lookup(doc.morphisms, g_name, "morphism");
            if (!(f.dom() == g.dom())) throw UsageError("--f and --g must share a domain");
            if (pushout_sketches.empty()) {
                auto po = pushout(f, g);
                return Output{{{"apex", print_object(po.apex)},
                               {"inj_left", j_morphism(po.inj_left)},
                               {"inj_right", j_morphism(po.inj_right)}},
                              0};
            }
            const auto& l = lookup(doc.sketches, pushout_sketches[0], "sketch");
            const auto& r = lookup(doc.sketches, pushout_sketches[1], "sketch");
            auto po = sketch_pushout(f, g, l, r);
            return Output{{{"apex", print_object(po.sketch.context())},
                           {"sketch", j_sketch(po.sketch)},
                           {"inj_left", j_morphism(po.inj_left)},
                           {"inj_right", j_morphism(po.inj_right)}},
                          0};
        };
    });

    // match
    std::string pattern_name;
    auto* match = sub("match", "matches of a pattern sketch in a target sketch");
    match->add_option("--pattern", pattern_name)->required();
    match->add_option("--target", target_name)->required();
    match->final_callback([&] {
        action = [&](const Document& doc) {
            const auto& p = lookup(doc.sketches, pattern_name, "sketch");
            const auto& t = lookup(doc.sketches, target_name, "sketch");
            auto ms = find_matches(p, t);
            return Output{{{"pattern", p.name()}, {"target", t.name()}, {"count", ms.size()}, {"matches", j_morphisms(ms)}},
                          0};
        };
    });

    // closed
    std::string rule_name;
    auto* closed = sub("closed", "is a sketch closed under a rule");
    closed->add_option("--sketch", sketch_name)->required();
    closed->add_option("--rule", rule_name)->required();
    closed->final_callback([&] {
        action = [&](const Document& doc) {
            const auto& k = lookup(doc.sketches, sketch_name, "sketch");
            const auto& r = lookup(doc.rules, rule_name, "rule");
            auto c = is_closed(k, r);
            json body = {{"closed", c.closed}, {"sketch", k.name()}, {"rule", r.name()}};
            if (c.failing_match) body["failing_match"] = j_morphism(*c.failing_match);
            return Output{body, c.closed ? 0 : 1};
        };
    });

    // conservative
    auto* conservative = sub("conservative", "is a rule conservative in a structure");
    conservative->add_option("--structure", structure_name)->required();
    conservative->add_option("--rule", rule_name)->required();
    conservative->final_callback([&] {
        action = [&](const Document& doc) {
            const auto& u = lookup(doc.structures, structure_name, "structure");
            const auto& r = lookup(doc.rules, rule_name, "rule");
            auto v = is_conservative(u, r);
            return Output{j_verdict(v), v.holds ? 0 : 1};
        };
    });

    // sound
    auto* sound = sub("sound", "is a rule conservative in every structure of a registry");
    sound->add_option("--rule", rule_name)->required();
    add_registry_flags(sound, reg_flags);
    sound->final_callback([&] {
        action = [&](const Document& doc) {
            const auto& r = lookup(doc.rules, rule_name, "rule");
            auto reg = registry_of(doc, r.lhs().footprint());
            auto v = is_sound(r, reg);
            return Output{with_scope(j_verdict(v), reg), v.holds ? 0 : 1};
        };
    });

    // apply
    std::size_t index = 0;
    auto* apply = sub("apply", "apply a rule at one of its matches");
    apply->add_option("--sketch", sketch_name)->required();
    apply->add_option("--rule", rule_name)->required();
    apply->add_option("--index", index, "which match, in canonical order")->capture_default_str();
    apply->final_callback([&] {
        action = [&](const Document& doc) {
            const auto& k = lookup(doc.sketches, sketch_name, "sketch");
            const auto& r = lookup(doc.rules, rule_name, "rule");
            auto ms = find_matches(r.lhs(), k);
            if (ms.empty()) return Output{{{"applied", false}, {"matches", 0}}, 1};
            if (index >= ms.size()) {
                throw UsageError("--index " + std::to_string(index) + " out of range: " + std::to_string(ms.size()) +
                                 " matches");
            }
            auto res = apply_rule_with_injections(k, r, ms[index]);
            return Output{{{"applied", true},
                           {"matches", ms.size()},
                           {"match", j_morphism(ms[index])},
                           {"sketch", j_sketch(res.sketch)},
                           {"inj_sketch", j_morphism(res.inj_left)},
                           {"inj_rhs", j_morphism(res.inj_right)}},
                          0};
        };
    });

    // saturate
    std::vector<std::string> rule_names;
    std::string ruleset_name;
    SaturationLimits limits;
    auto* saturate_cmd = sub("saturate", "apply rules until closed or a limit is reached");
    saturate_cmd->add_option("--sketch", sketch_name)->required();
    auto* rules_opt = saturate_cmd->add_option("--rules", rule_names)->delimiter(',');
    auto* ruleset_opt = saturate_cmd->add_option("--ruleset", ruleset_name);
    rules_opt->excludes(ruleset_opt);
    saturate_cmd->add_option("--max-steps", limits.max_steps)->capture_default_str();
    saturate_cmd->add_option("--max-vertices", limits.max_vertices)->capture_default_str();
    saturate_cmd->add_option("--max-edges", limits.max_edges)->capture_default_str();
    saturate_cmd->final_callback([&] {
        action = [&](const Document& doc) {
            const auto& k = lookup(doc.sketches, sketch_name, "sketch");
            std::vector<SketchRule> rs;
            if (!ruleset_name.empty()) {
                lookup(doc.rulesets, ruleset_name, "ruleset");
                rs = doc.ruleset(ruleset_name);
            } else if (!rule_names.empty()) {
                for (const auto& n : rule_names) rs.push_back(lookup(doc.rules, n, "rule"));
            } else {
                throw UsageError("saturate needs --rules or --ruleset");
            }
            auto res = saturate(k, rs, limits);
            bool closed_ok = res.status == SaturationStatus::Closed;
            json body = {{"status", closed_ok ? "closed" : "budget_exhausted"},
                         {"steps", res.steps},
                         {"sketch", j_sketch(res.sketch)},
                         {"limits",
                          {{"max_steps", limits.max_steps},
                           {"max_vertices", limits.max_vertices},
                           {"max_edges", limits.max_edges}}}};
            if (!closed_ok) body["reason"] = res.reason;
            return Output{body, closed_ok ? 0 : 1};
        };
    });

    // elemdiag
    std::vector<std::string> expr_names;
    auto* elemdiag = sub("elemdiag", "minimal and maximal semantical sketches of a structure");
    elemdiag->add_option("--structure", structure_name)->required();
    elemdiag->add_option("--exprs", expr_names, "expressions for the maximal sketch (default: all of the footprint)")
        ->delimiter(',');
    elemdiag->final_callback([&] {
        action = [&](const Document& doc) {
            const auto& u = lookup(doc.structures, structure_name, "structure");
            std::vector<Expr> universe;
            std::vector<std::string> used = expr_names;
            if (used.empty()) {
                for (const auto& [n, ne] : doc.expressions) {
                    if (ne.footprint == u.footprint()->name()) used.push_back(n);
                }
            }
            for (const auto& n : used) {
                const auto& ne = lookup(doc.expressions, n, "expression");
                if (ne.footprint != u.footprint()->name()) throw UsageError("expression '" + n + "' has another footprint");
                universe.push_back(ne.expr);
            }
            return Output{{{"structure", u.name()},
                           {"exprs", used},
                           {"min", j_sketch(structure_to_sketch_min(u))},
                           {"max", j_sketch(structure_to_sketch_max(u, universe))}},
                          0};
        };
    });

    // equiv
    auto* equiv = sub("equiv", "compare conservativity with closedness of the maximal semantical sketch");
    equiv->add_option("--structure", structure_name)->required();
    equiv->add_option("--rule", rule_name)->required();
    equiv->final_callback([&] {
        action = [&](const Document& doc) {
            const auto& u = lookup(doc.structures, structure_name, "structure");
            const auto& r = lookup(doc.rules, rule_name, "rule");
            auto e = check_equivalence(u, r);
            return Output{{{"conservative", e.conservative}, {"closed", e.closed}, {"agree", e.agree()},
                           {"structure", u.name()}, {"rule", r.name()}},
                          e.agree() ? 0 : 1};
        };
    });

    // initial
    auto* initial = sub("initial", "is a structure the initial model of its minimal sketch");
    initial->add_option("--structure", structure_name)->required();
    add_registry_flags(initial, reg_flags);
    initial->final_callback([&] {
        action = [&](const Document& doc) {
            const auto& u = lookup(doc.structures, structure_name, "structure");
            auto reg = registry_of(doc, u.footprint());
            auto v = check_initial_model(u, reg);
            return Output{with_scope(j_verdict(v), reg), v.holds ? 0 : 1};
        };
    });

    std::vector<const char*> argv{"lfoc"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    command = app.get_subcommands().front()->get_name();
    try {
        auto doc = parse_file(file);
        auto result = action(doc);
        result.body["schema"] = "lfoc/1";
        result.body["command"] = command;
        out << result.body.dump(2) << "\n";
        return result.code;
    } catch (const ParseError& e) {
        err << file << ":" << e.what() << "\n";
    } catch (const Error& e) {
        err << "lfoc " << command << ": " << e.what() << "\n";
    }
    return 2;
}

} // namespace lfoc
