#include "lfoc/dsl.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace lfoc {

namespace {

enum class Tok { Id, Str, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

bool id_start(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool id_char(char c) { return id_start(c) || c == '\''; }

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
        } else if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            while (i < src.size() && src[i] != '\n') advance(1);
        } else if (id_start(c)) {
            std::size_t j = i;
            while (j < src.size() && id_char(src[j])) ++j;
            out.push_back({Tok::Id, src.substr(i, j - i), line, col});
            advance(j - i);
        } else if (c == '"') {
            std::size_t j = i + 1;
            while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
            if (j >= src.size() || src[j] != '"') {
                throw ParseError("unterminated string", line, col, "\"");
            }
            out.push_back({Tok::Str, src.substr(i + 1, j - i - 1), line, col});
            advance(j - i + 1);
        } else if ((c == '-' || c == '=') && i + 1 < src.size() && src[i + 1] == '>') {
            out.push_back({Tok::Punct, src.substr(i, 2), line, col});
            advance(2);
        } else if (std::string_view("{}[]();:,.=@").find(c) != std::string_view::npos) {
            out.push_back({Tok::Punct, std::string(1, c), line, col});
            advance(1);
        } else {
            throw ParseError("unexpected character", line, col, std::string(1, c));
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> toks, Document& doc, std::filesystem::path base_dir, std::set<std::filesystem::path>& seen)
        : toks_(std::move(toks)), doc_(doc), base_dir_(std::move(base_dir)), seen_(seen) {}

    void document(bool local);

private:
    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    bool at(std::string_view text) const { return peek().kind != Tok::Str && peek().kind != Tok::End && peek().text == text; }
    bool accept(std::string_view text) {
        if (at(text)) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const { fail_at(peek(), msg); }
    [[noreturn]] static void fail_at(const Token& t, const std::string& msg) {
        throw ParseError(msg, t.line, t.column, t.kind == Tok::End ? "end of input" : t.text);
    }
    void expect(std::string_view text) {
        if (!accept(text)) fail("expected '" + std::string(text) + "'");
    }
    std::string ident() {
        if (peek().kind != Tok::Id) fail("expected an identifier");
        return toks_[pos_++].text;
    }

    template <class F>
    auto located(const Token& t, F&& f) -> decltype(f()) {
        try {
            return f();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            fail_at(t, e.what());
        }
    }

    void declare(Document::Decl kind, const std::string& name, const Token& where, bool exists) {
        if (exists) fail_at(where, "duplicate definition of '" + name + "'");
        if (local_) doc_.order.emplace_back(kind, name);
    }

    void statement();
    CatObject object();
    CatObject object_literal();
    Morphism morphism(const CatObject& dom, const CatObject& cod);
    void skip_morphism();
    FootprintRef footprint_ref();
    Expr expr(const Footprint& fp, const CatObject& x);
    Expr conj(const Footprint& fp, const CatObject& x);
    Expr unary(const Footprint& fp, const CatObject& x);
    Expr atom(const Footprint& fp, const CatObject& x);
    std::vector<std::string> name_list();

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    Document& doc_;
    std::filesystem::path base_dir_;
    std::set<std::filesystem::path>& seen_;
    bool local_ = true;
    bool base_seen_ = false;
};

void Parser::document(bool local) {
    local_ = local;
    while (peek().kind != Tok::End) statement();
}

void merge(Document& into, const Document& from, const Token& where) {
    auto clash = [&](const auto& a, const auto& b) {
        for (const auto& [k, v] : b) {
            if (a.count(k)) {
                throw ParseError("imported definition '" + k + "' clashes with an existing one", where.line,
                                 where.column, where.text);
            }
        }
    };
    clash(into.objects, from.objects);
    clash(into.morphisms, from.morphisms);
    clash(into.footprints, from.footprints);
    clash(into.expressions, from.expressions);
    clash(into.structures, from.structures);
    clash(into.sketches, from.sketches);
    clash(into.rules, from.rules);
    clash(into.registries, from.registries);
    clash(into.rulesets, from.rulesets);
    clash(into.interpretations, from.interpretations);
    into.objects.insert(from.objects.begin(), from.objects.end());
    into.morphisms.insert(from.morphisms.begin(), from.morphisms.end());
    into.footprints.insert(from.footprints.begin(), from.footprints.end());
    into.expressions.insert(from.expressions.begin(), from.expressions.end());
    into.structures.insert(from.structures.begin(), from.structures.end());
    into.sketches.insert(from.sketches.begin(), from.sketches.end());
    into.rules.insert(from.rules.begin(), from.rules.end());
    into.registries.insert(from.registries.begin(), from.registries.end());
    into.rulesets.insert(from.rulesets.begin(), from.rulesets.end());
    into.interpretations.insert(from.interpretations.begin(), from.interpretations.end());
}

void Parser::statement() {
    const Token start = peek();
    if (start.kind != Tok::Id) fail("expected a declaration");
    const std::string kw = ident();
    if (kw == "base") {
        if (base_seen_) fail_at(start, "base kind declared twice");
        if (!doc_.order.empty() || !doc_.imports.empty()) fail_at(start, "base must come first");
        std::string k = ident();
        if (k == "set") {
            doc_.base = Kind::Set;
        } else if (k == "graph") {
            doc_.base = Kind::Graph;
        } else {
            fail_at(toks_[pos_ - 1], "base kind must be 'set' or 'graph'");
        }
        base_seen_ = true;
        expect(";");
        return;
    }
    if (!base_seen_) fail_at(start, "document must start with 'base set;' or 'base graph;'");

    if (kw == "import") {
        if (peek().kind != Tok::Str) fail("expected a quoted path");
        const Token path_tok = toks_[pos_++];
        expect(";");
        auto path = base_dir_ / path_tok.text;
        auto canon = std::filesystem::weakly_canonical(path);
        if (local_) doc_.imports.push_back(path_tok.text);
        if (seen_.count(canon)) return;
        seen_.insert(canon);
        std::ifstream in(path);
        if (!in) fail_at(path_tok, "cannot open import '" + path.string() + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        Document sub;
        Parser p(lex(buf.str()), sub, path.parent_path(), seen_);
        p.document(false);
        if (sub.base != doc_.base) fail_at(path_tok, "imported document has a different base kind");
        merge(doc_, sub, path_tok);
        return;
    }
    if (kw == "object") {
        const Token name_tok = peek();
        auto name = ident();
        expect("=");
        auto x = object();
        expect(";");
        declare(Document::Decl::Object, name, name_tok, doc_.objects.count(name) > 0);
        doc_.objects.emplace(name, x);
        return;
    }
    if (kw == "morphism") {
        const Token name_tok = peek();
        auto name = ident();
        expect(":");
        auto dom = object();
        expect("->");
        auto cod = object();
        expect("=");
        auto m = morphism(dom, cod);
        expect(";");
        declare(Document::Decl::Morphism, name, name_tok, doc_.morphisms.count(name) > 0);
        doc_.morphisms.emplace(name, m);
        return;
    }
    if (kw == "footprint") {
        const Token name_tok = peek();
        auto name = ident();
        expect("{");
        std::vector<Feature> fs;
        while (!accept("}")) {
            auto f = ident();
            expect(":");
            auto x = object();
            expect(";");
            fs.push_back({f, x});
        }
        auto fp = located(name_tok, [&] { return std::make_shared<const Footprint>(name, doc_.base, fs); });
        declare(Document::Decl::Footprint, name, name_tok, doc_.footprints.count(name) > 0);
        doc_.footprints.emplace(name, fp);
        return;
    }
    if (kw == "expr") {
        const Token name_tok = peek();
        auto name = ident();
        expect(":");
        auto fp_name = peek().text;
        auto fp = footprint_ref();
        expect("on");
        auto x = object();
        expect("=");
        const Token body_tok = peek();
        auto e = expr(*fp, x);
        expect(";");
        auto report = wf_check(e, *fp);
        if (!report.ok()) fail_at(body_tok, report.violations.front());
        declare(Document::Decl::Expr, name, name_tok, doc_.expressions.count(name) > 0);
        doc_.expressions.emplace(name, NamedExpr{fp_name, e});
        return;
    }
    if (kw == "structure") {
        const Token name_tok = peek();
        auto name = ident();
        expect(":");
        auto fp = footprint_ref();
        expect("on");
        auto carrier = object();
        expect("{");
        std::map<std::string, std::vector<Morphism>> interp;
        while (!accept("}")) {
            const Token f_tok = peek();
            auto f = ident();
            const auto* feature = fp->find(f);
            if (!feature) fail_at(f_tok, "unknown feature '" + f + "'");
            if (interp.count(f)) fail_at(f_tok, "feature '" + f + "' listed twice");
            auto& slot = interp[f];
            expect("=");
            expect("{");
            if (!accept("}")) {
                do {
                    slot.push_back(morphism(feature->arity, carrier));
                } while (accept(","));
                expect("}");
            }
            expect(";");
        }
        Structure s(name, fp, carrier, std::move(interp));
        auto report = validate_structure(s);
        if (!report.ok()) fail_at(name_tok, report.violations.front());
        declare(Document::Decl::Structure, name, name_tok, doc_.structures.count(name) > 0);
        doc_.structures.emplace(name, s);
        return;
    }
    if (kw == "sketch") {
        const Token name_tok = peek();
        auto name = ident();
        expect(":");
        auto fp = footprint_ref();
        expect("on");
        auto context = object();
        expect("{");
        std::vector<Constraint> cs;
        while (!accept("}")) {
            expect("constraint");
            const Token c_tok = peek();
            std::optional<Expr> e;
            if (accept("over")) {
                auto x = object();
                expect(":");
                e = expr(*fp, x);
            } else if (accept(":")) {
                e = expr(*fp, context);
            } else {
                auto ename = ident();
                auto it = doc_.expressions.find(ename);
                if (it == doc_.expressions.end()) fail_at(c_tok, "unknown expression '" + ename + "'");
                if (!(*doc_.footprints.at(it->second.footprint) == *fp)) {
                    fail_at(c_tok, "expression '" + ename + "' belongs to another footprint");
                }
                e = it->second.expr;
            }
            Morphism binding = accept("@") ? morphism(e->arity(), context)
                                           : located(c_tok, [&] { return Morphism::inclusion(e->arity(), context); });
            expect(";");
            auto report = wf_check(*e, *fp);
            if (!report.ok()) fail_at(c_tok, report.violations.front());
            cs.emplace_back(*e, binding);
        }
        auto sk = located(name_tok, [&] { return Sketch(name, fp, context, cs); });
        declare(Document::Decl::Sketch, name, name_tok, doc_.sketches.count(name) > 0);
        doc_.sketches.emplace(name, sk);
        return;
    }
    if (kw == "rule") {
        const Token name_tok = peek();
        auto name = ident();
        expect(":");
        auto sketch_ref = [&]() -> const Sketch& {
            const Token t = peek();
            auto n = ident();
            auto it = doc_.sketches.find(n);
            if (it == doc_.sketches.end()) fail_at(t, "unknown sketch '" + n + "'");
            return it->second;
        };
        const Sketch& lhs = sketch_ref();
        expect("=>");
        const Sketch& rhs = sketch_ref();
        const Token via_tok = peek();
        Morphism r = accept("via") ? morphism(lhs.context(), rhs.context())
                                   : located(via_tok, [&] { return Morphism::inclusion(lhs.context(), rhs.context()); });
        expect(";");
        auto rule = located(name_tok, [&] { return SketchRule(name, lhs, rhs, r); });
        declare(Document::Decl::Rule, name, name_tok, doc_.rules.count(name) > 0);
        doc_.rules.emplace(name, rule);
        return;
    }
    if (kw == "registry" || kw == "ruleset") {
        const Token name_tok = peek();
        auto name = ident();
        expect("=");
        auto names = name_list();
        expect(";");
        for (const auto& n : names) {
            bool known = kw == "registry" ? doc_.structures.count(n) > 0 : doc_.rules.count(n) > 0;
            if (!known) fail_at(name_tok, "unknown " + std::string(kw == "registry" ? "structure" : "rule") + " '" + n + "'");
        }
        if (kw == "registry") {
            if (names.empty()) fail_at(name_tok, "registry '" + name + "' is empty");
            declare(Document::Decl::Registry, name, name_tok, doc_.registries.count(name) > 0);
            doc_.registries.emplace(name, names);
            located(name_tok, [&] { return doc_.registry(name); });
        } else {
            declare(Document::Decl::Ruleset, name, name_tok, doc_.rulesets.count(name) > 0);
            doc_.rulesets.emplace(name, names);
        }
        return;
    }
    if (kw == "interpretation") {
        const Token name_tok = peek();
        auto name = ident();
        expect(":");
        const Token s_tok = peek();
        auto sk = ident();
        if (!doc_.sketches.count(sk)) fail_at(s_tok, "unknown sketch '" + sk + "'");
        expect("in");
        const Token u_tok = peek();
        auto u = ident();
        if (!doc_.structures.count(u)) fail_at(u_tok, "unknown structure '" + u + "'");
        expect("=");
        auto m = morphism(doc_.sketches.at(sk).context(), doc_.structures.at(u).carrier());
        expect(";");
        declare(Document::Decl::Interpretation, name, name_tok, doc_.interpretations.count(name) > 0);
        doc_.interpretations.emplace(name, NamedInterpretation{sk, u, m});
        return;
    }
    fail_at(start, "unknown declaration '" + kw + "'");
}

std::vector<std::string> Parser::name_list() {
    std::vector<std::string> out;
    expect("{");
    if (accept("}")) return out;
    do {
        out.push_back(ident());
    } while (accept(","));
    expect("}");
    return out;
}

FootprintRef Parser::footprint_ref() {
    const Token t = peek();
    auto n = ident();
    auto it = doc_.footprints.find(n);
    if (it == doc_.footprints.end()) fail_at(t, "unknown footprint '" + n + "'");
    return it->second;
}

CatObject Parser::object() {
    if (at("obj")) return object_literal();
    const Token t = peek();
    auto n = ident();
    auto it = doc_.objects.find(n);
    if (it == doc_.objects.end()) fail_at(t, "unknown object '" + n + "'");
    return it->second;
}

CatObject Parser::object_literal() {
    const Token start = peek();
    expect("obj");
    expect("{");
    std::vector<std::string> vs;
    std::vector<EdgeSpec> es;
    if (doc_.base == Kind::Set) {
        while (!accept("}")) {
            vs.push_back(ident());
            accept(",");
        }
        return located(start, [&] { return CatObject::set(vs); });
    }
    while (!accept("}")) {
        const Token sec = peek();
        auto tag = ident();
        if (tag == "v") {
            while (!at(";") && !at("}")) {
                vs.push_back(ident());
                accept(",");
            }
        } else if (tag == "e") {
            while (!at(";") && !at("}")) {
                EdgeSpec e;
                e.name = ident();
                expect(":");
                e.source = ident();
                expect("->");
                e.target = ident();
                es.push_back(e);
                accept(",");
            }
        } else {
            fail_at(sec, "expected 'v' or 'e' in a graph literal");
        }
        accept(";");
    }
    return located(start, [&] { return CatObject::graph(vs, es); });
}

// Images of unmapped edges are inferred when exactly one edge fits.
Morphism complete(const CatObject& dom, const CatObject& cod, std::unordered_map<std::string, std::string> names) {
    for (const auto& e : dom.edges()) {
        if (names.count(e.name)) continue;
        auto s = names.find(dom.vertices()[e.source]);
        auto t = names.find(dom.vertices()[e.target]);
        if (s == names.end() || t == names.end()) continue;
        auto si = cod.vertex_index(s->second);
        auto ti = cod.vertex_index(t->second);
        if (!si || !ti) continue;
        std::optional<std::string> only;
        std::size_t count = 0;
        for (const auto& c : cod.edges()) {
            if (c.source == *si && c.target == *ti) {
                only = c.name;
                ++count;
            }
        }
        if (count == 1) names[e.name] = *only;
    }
    return Morphism::from_names(dom, cod, names);
}

Morphism Parser::morphism(const CatObject& dom, const CatObject& cod) {
    const Token start = peek();
    if (accept("id")) {
        return located(start, [&] { return Morphism::inclusion(dom, cod); });
    }
    std::unordered_map<std::string, std::string> names;
    if (accept("[")) {
        while (!accept("]")) {
            const Token from_tok = peek();
            auto from = ident();
            expect("->");
            auto to = ident();
            if (!names.emplace(from, to).second) fail_at(from_tok, "'" + from + "' mapped twice");
            if (!accept(";") && !accept(",") && !at("]")) fail("expected ';' or ']'");
        }
        return located(start, [&] { return complete(dom, cod, names); });
    }
    if (accept("(")) {
        std::vector<std::string> images;
        if (!accept(")")) {
            do {
                images.push_back(ident());
            } while (accept(","));
            expect(")");
        }
        if (images.size() != dom.vertex_count()) {
            fail_at(start, "tuple has " + std::to_string(images.size()) + " entries for " +
                               std::to_string(dom.vertex_count()) + " vertices");
        }
        for (std::size_t i = 0; i < images.size(); ++i) names[dom.vertices()[i]] = images[i];
        return located(start, [&] { return complete(dom, cod, names); });
    }
    auto n = ident();
    auto it = doc_.morphisms.find(n);
    if (it == doc_.morphisms.end()) fail_at(start, "unknown morphism '" + n + "'");
    if (!(it->second.dom() == dom) || !(it->second.cod() == cod)) {
        fail_at(start, "morphism '" + n + "' does not go from " + dom.describe() + " to " + cod.describe());
    }
    return it->second;
}

void Parser::skip_morphism() {
    if (accept("[")) {
        while (!accept("]")) {
            if (peek().kind == Tok::End) fail("unterminated morphism literal");
            ++pos_;
        }
    } else if (accept("(")) {
        while (!accept(")")) {
            if (peek().kind == Tok::End) fail("unterminated tuple");
            ++pos_;
        }
    } else {
        ident();
    }
}

Expr Parser::expr(const Footprint& fp, const CatObject& x) {
    Expr e = conj(fp, x);
    while (accept("or")) e = Expr::disj(e, conj(fp, x));
    return e;
}

Expr Parser::conj(const Footprint& fp, const CatObject& x) {
    Expr e = unary(fp, x);
    while (accept("and")) e = Expr::conj(e, unary(fp, x));
    return e;
}

Expr Parser::unary(const Footprint& fp, const CatObject& x) {
    if (accept("not")) return Expr::negate(unary(fp, x));
    if (at("given") || at("exists") || at("forall")) {
        Expr premise = Expr::top(x);
        if (accept("given")) premise = unary(fp, x);
        const Token q = peek();
        bool existential = accept("exists");
        if (!existential && !accept("forall")) fail("expected 'exists' or 'forall'");
        std::size_t map_pos = pos_;
        bool has_map = !at("into");
        if (has_map) skip_morphism();
        expect("into");
        auto y = object();
        std::size_t after = pos_;
        Morphism step = [&] {
            if (!has_map) return located(q, [&] { return Morphism::inclusion(x, y); });
            pos_ = map_pos;
            auto m = morphism(x, y);
            pos_ = after;
            return m;
        }();
        expect(".");
        Expr body = expr(fp, y);
        return existential ? Expr::exists(premise, step, body) : Expr::forall(premise, step, body);
    }
    return atom(fp, x);
}

Expr Parser::atom(const Footprint& fp, const CatObject& x) {
    const Token t = peek();
    if (accept("top")) return Expr::top(x);
    if (accept("bot")) return Expr::bot(x);
    if (accept("(")) {
        Expr e = expr(fp, x);
        expect(")");
        return e;
    }
    auto n = ident();
    bool has_map = at("[") || at("(");
    if (const auto* f = fp.find(n)) {
        Morphism delta = has_map ? morphism(f->arity, x)
                                 : located(t, [&] { return Morphism::inclusion(f->arity, x); });
        return Expr::atomic(x, n, delta);
    }
    auto it = doc_.expressions.find(n);
    if (it == doc_.expressions.end()) fail_at(t, "unknown feature or expression '" + n + "'");
    const Expr& named = it->second.expr;
    if (!(*doc_.footprints.at(it->second.footprint) == fp)) {
        fail_at(t, "expression '" + n + "' belongs to another footprint");
    }
    if (!has_map && named.arity() == x) return named;
    Morphism sub = has_map ? morphism(named.arity(), x)
                           : located(t, [&] { return Morphism::inclusion(named.arity(), x); });
    return located(t, [&] { return substitute(named, sub); });
}

// ---------------------------------------------------------------------------

std::string section_list(const std::vector<std::string>& names) {
    std::string out;
    for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
    return out;
}

} // namespace

StructureRegistry Document::registry(const std::string& name) const {
    auto it = registries.find(name);
    if (it == registries.end()) throw ValidationError("unknown registry '" + name + "'");
    std::vector<Structure> list;
    for (const auto& s : it->second) list.push_back(structures.at(s));
    if (list.empty()) throw ValidationError("registry '" + name + "' is empty");
    return StructureRegistry::from_list(name, list.front().footprint(), list);
}

std::vector<SketchRule> Document::ruleset(const std::string& name) const {
    auto it = rulesets.find(name);
    if (it == rulesets.end()) throw ValidationError("unknown ruleset '" + name + "'");
    std::vector<SketchRule> out;
    for (const auto& r : it->second) out.push_back(rules.at(r));
    return out;
}

Document parse_document(const std::string& text, const std::filesystem::path& base_dir) {
    Document doc;
    std::set<std::filesystem::path> seen;
    Parser p(lex(text), doc, base_dir, seen);
    p.document(true);
    return doc;
}

Document parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), path.parent_path());
}

std::string print_object(const CatObject& x) {
    if (x.kind() == Kind::Set) {
        std::string out = "obj {";
        for (const auto& v : x.vertices()) out += " " + v;
        return out + " }";
    }
    std::string out = "obj {";
    if (x.vertex_count() > 0) {
        out += " v";
        for (const auto& v : x.vertices()) out += " " + v;
        out += ";";
    }
    if (x.edge_count() > 0) {
        out += " e";
        bool first = true;
        for (const auto& e : x.edges()) {
            out += (first ? " " : ", ") + e.name + ": " + x.vertices()[e.source] + "->" + x.vertices()[e.target];
            first = false;
        }
        out += ";";
    }
    return out + " }";
}

std::string print_morphism(const Morphism& m) {
    std::string out = "[";
    bool first = true;
    const auto& dom = m.dom();
    const auto& cod = m.cod();
    for (std::size_t i = 0; i < dom.vertex_count(); ++i) {
        out += (first ? "" : "; ") + dom.vertices()[i] + "->" + cod.vertices()[m.vertex_map()[i]];
        first = false;
    }
    for (std::size_t i = 0; i < dom.edge_count(); ++i) {
        out += (first ? "" : "; ") + dom.edges()[i].name + "->" + cod.edges()[m.edge_map()[i]].name;
        first = false;
    }
    return out + "]";
}

std::string print_expr(const Expr& e) {
    switch (e.kind()) {
    case ExprKind::Atomic: return e.feature() + print_morphism(e.delta());
    case ExprKind::Top: return "top";
    case ExprKind::Bot: return "bot";
    case ExprKind::And: return "(" + print_expr(e.left()) + " and " + print_expr(e.right()) + ")";
    case ExprKind::Or: return "(" + print_expr(e.left()) + " or " + print_expr(e.right()) + ")";
    case ExprKind::Not: return "(not " + print_expr(e.inner()) + ")";
    case ExprKind::Exists:
    case ExprKind::Forall: {
        std::string out = "(";
        if (e.premise().kind() != ExprKind::Top) out += "given " + print_expr(e.premise()) + " ";
        out += e.kind() == ExprKind::Exists ? "exists " : "forall ";
        out += print_morphism(e.step()) + " into " + print_object(e.step().cod()) + " . " + print_expr(e.body());
        return out + ")";
    }
    }
    return "bot";
}

std::string print_document(const Document& doc) {
    std::ostringstream out;
    out << "base " << to_string(doc.base) << ";\n";
    for (const auto& imp : doc.imports) out << "import \"" << imp << "\";\n";
    auto footprint_name = [&](const FootprintRef& fp) { return fp->name(); };
    for (const auto& [kind, name] : doc.order) {
        out << "\n";
        switch (kind) {
        case Document::Decl::Object:
            out << "object " << name << " = " << print_object(doc.objects.at(name)) << ";\n";
            break;
        case Document::Decl::Morphism: {
            const auto& m = doc.morphisms.at(name);
            out << "morphism " << name << " : " << print_object(m.dom()) << " -> " << print_object(m.cod()) << " = "
                << print_morphism(m) << ";\n";
            break;
        }
        case Document::Decl::Footprint: {
            out << "footprint " << name << " {\n";
            for (const auto& f : doc.footprints.at(name)->features()) {
                out << "  " << f.name << " : " << print_object(f.arity) << ";\n";
            }
            out << "}\n";
            break;
        }
        case Document::Decl::Expr: {
            const auto& ne = doc.expressions.at(name);
            out << "expr " << name << " : " << ne.footprint << " on " << print_object(ne.expr.arity()) << " =\n  "
                << print_expr(ne.expr) << ";\n";
            break;
        }
        case Document::Decl::Structure: {
            const auto& s = doc.structures.at(name);
            out << "structure " << name << " : " << footprint_name(s.footprint()) << " on " << print_object(s.carrier())
                << " {\n";
            for (const auto& f : s.footprint()->features()) {
                out << "  " << f.name << " = {";
                bool first = true;
                for (const auto& a : s.interpretation(f.name)) {
                    out << (first ? " " : ", ") << print_morphism(a);
                    first = false;
                }
                out << " };\n";
            }
            out << "}\n";
            break;
        }
        case Document::Decl::Sketch: {
            const auto& sk = doc.sketches.at(name);
            out << "sketch " << name << " : " << footprint_name(sk.footprint()) << " on " << print_object(sk.context())
                << " {\n";
            for (const auto& c : sk.constraints()) {
                out << "  constraint over " << print_object(c.expr().arity()) << " : " << print_expr(c.expr()) << " @ "
                    << print_morphism(c.binding()) << ";\n";
            }
            out << "}\n";
            break;
        }
        case Document::Decl::Rule: {
            const auto& r = doc.rules.at(name);
            out << "rule " << name << " : " << r.lhs().name() << " => " << r.rhs().name() << " via "
                << print_morphism(r.r()) << ";\n";
            break;
        }
        case Document::Decl::Registry:
            out << "registry " << name << " = { " << section_list(doc.registries.at(name)) << " };\n";
            break;
        case Document::Decl::Ruleset:
            out << "ruleset " << name << " = { " << section_list(doc.rulesets.at(name)) << " };\n";
            break;
        case Document::Decl::Interpretation: {
            const auto& i = doc.interpretations.at(name);
            out << "interpretation " << name << " : " << i.sketch << " in " << i.structure << " = "
                << print_morphism(i.map) << ";\n";
            break;
        }
        }
    }
    return out.str();
}

namespace {

template <class M, class Eq>
bool same_map(const M& a, const M& b, Eq eq) {
    if (a.size() != b.size()) return false;
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
        if (ia->first != ib->first || !eq(ia->second, ib->second)) return false;
    }
    return true;
}

} // namespace

bool same_document(const Document& a, const Document& b) {
    if (a.base != b.base || a.imports != b.imports || a.order != b.order) return false;
    auto eq = [](const auto& x, const auto& y) { return x == y; };
    return same_map(a.objects, b.objects, eq) && same_map(a.morphisms, b.morphisms, eq) &&
           same_map(a.footprints, b.footprints, [](const FootprintRef& x, const FootprintRef& y) { return *x == *y; }) &&
           same_map(a.expressions, b.expressions,
                    [](const NamedExpr& x, const NamedExpr& y) {
                        return x.footprint == y.footprint && x.expr == y.expr && x.expr.arity() == y.expr.arity();
                    }) &&
           same_map(a.structures, b.structures,
                    [](const Structure& x, const Structure& y) { return x == y && x.name() == y.name(); }) &&
           same_map(a.sketches, b.sketches, [](const Sketch& x, const Sketch& y) { return x == y && x.name() == y.name(); }) &&
           same_map(a.rules, b.rules,
                    [](const SketchRule& x, const SketchRule& y) {
                        return x.lhs() == y.lhs() && x.rhs() == y.rhs() && x.r() == y.r() &&
                               x.lhs().name() == y.lhs().name() && x.rhs().name() == y.rhs().name();
                    }) &&
           same_map(a.registries, b.registries, eq) && same_map(a.rulesets, b.rulesets, eq) &&
           same_map(a.interpretations, b.interpretations, [](const NamedInterpretation& x, const NamedInterpretation& y) {
               return x.sketch == y.sketch && x.structure == y.structure && x.map == y.map;
           });
}

} // namespace lfoc
