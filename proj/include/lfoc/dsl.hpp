#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lfoc/rules.hpp"

namespace lfoc {

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column, std::string token)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message +
                (token.empty() ? "" : " (at '" + token + "')")),
          line_(line), column_(column), token_(std::move(token)) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& token() const noexcept { return token_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string token_;
};

struct NamedExpr {
    std::string footprint;
    Expr expr;
};

struct NamedInterpretation {
    std::string sketch;
    std::string structure;
    Morphism map;
};

/// A parsed `.lfoc` file. Definitions from imports are resolvable but only
/// local definitions are listed in `order` and printed.
struct Document {
    enum class Decl { Object, Morphism, Footprint, Expr, Structure, Sketch, Rule, Registry, Ruleset, Interpretation };

    Kind base = Kind::Set;
    std::vector<std::string> imports;
    std::vector<std::pair<Decl, std::string>> order;

    std::map<std::string, CatObject> objects;
    std::map<std::string, Morphism> morphisms;
    std::map<std::string, FootprintRef> footprints;
    std::map<std::string, NamedExpr> expressions;
    std::map<std::string, Structure> structures;
    std::map<std::string, Sketch> sketches;
    std::map<std::string, SketchRule> rules;
    std::map<std::string, std::vector<std::string>> registries;
    std::map<std::string, std::vector<std::string>> rulesets;
    std::map<std::string, NamedInterpretation> interpretations;

    StructureRegistry registry(const std::string& name) const;
    std::vector<SketchRule> ruleset(const std::string& name) const;
};

/// `base_dir` resolves `import` paths.
Document parse_document(const std::string& text, const std::filesystem::path& base_dir = ".");
Document parse_file(const std::filesystem::path& path);

std::string print_document(const Document& doc);

/// Printing helpers used by the document printer and the JSON output.
std::string print_object(const CatObject& x);
std::string print_morphism(const Morphism& m);
std::string print_expr(const Expr& e);

/// Same base, same local definitions, each structurally equal.
bool same_document(const Document& a, const Document& b);

} // namespace lfoc
