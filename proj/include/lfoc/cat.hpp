#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lfoc/error.hpp"

// Finite base categories: finite sets and finite directed multigraphs.
//
// A set is stored as a graph without edges; the kind tag keeps the two
// categories apart. Every object carries ordered name lists, which fixes
// a canonical enumeration order for hom-sets and canonical names for
// pushout apexes.

namespace lfoc {

enum class Kind { Set, Graph };

std::string_view to_string(Kind kind);

struct Edge {
    std::string name;
    std::uint32_t source;
    std::uint32_t target;

    bool operator==(const Edge&) const = default;
};

/// Edge given by names, used to build graph objects.
struct EdgeSpec {
    std::string name;
    std::string source;
    std::string target;
};

class CatObject {
public:
    /// The empty set.
    CatObject();

    static CatObject set(std::vector<std::string> elements);
    static CatObject graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges);
    /// Graph from index-based edges; `edges[i].source/target` index into `vertices`.
    static CatObject graph_indexed(std::vector<std::string> vertices, std::vector<Edge> edges);
    static CatObject empty(Kind kind);

    Kind kind() const noexcept;
    /// Elements (set kind) or vertices (graph kind).
    std::span<const std::string> vertices() const noexcept;
    std::span<const Edge> edges() const noexcept;
    std::size_t vertex_count() const noexcept;
    std::size_t edge_count() const noexcept;
    /// Total number of names (vertices plus edges).
    std::size_t size() const noexcept { return vertex_count() + edge_count(); }
    bool is_empty() const noexcept { return size() == 0; }

    std::optional<std::uint32_t> vertex_index(std::string_view name) const;
    std::optional<std::uint32_t> edge_index(std::string_view name) const;
    bool has_name(std::string_view name) const;

    /// Structural (name-for-name) equality.
    bool operator==(const CatObject& other) const;
    /// Equality ignoring names: same kind, counts, and edge incidences.
    bool same_shape(const CatObject& other) const;
    bool same_data(const CatObject& other) const noexcept { return data_ == other.data_; }

    /// Compact text form, e.g. `{a b}` or `{v a b; e f: a->b}`.
    std::string describe() const;

private:
    struct Data;
    explicit CatObject(std::shared_ptr<const Data> data);
    std::shared_ptr<const Data> data_;
};

/// A structure-preserving map between two objects of the same kind.
///
/// Component maps are stored as indices into the codomain's name lists.
class Morphism {
public:
    /// Validating constructor: kinds agree, maps are total and in range,
    /// and (graph kind) the homomorphism law holds.
    Morphism(CatObject dom, CatObject cod, std::vector<std::uint32_t> vertex_map,
             std::vector<std::uint32_t> edge_map = {});

    /// Build from a name assignment covering every vertex and edge of `dom`.
    static Morphism from_names(CatObject dom, CatObject cod,
                               const std::unordered_map<std::string, std::string>& assignment);
    /// The name-preserving map; every name of `dom` must occur in `cod` with the same role.
    static Morphism inclusion(CatObject dom, CatObject cod);

    const CatObject& dom() const noexcept { return dom_; }
    const CatObject& cod() const noexcept { return cod_; }
    std::span<const std::uint32_t> vertex_map() const noexcept { return vertex_map_; }
    std::span<const std::uint32_t> edge_map() const noexcept { return edge_map_; }
    std::uint32_t vertex_image(std::uint32_t v) const { return vertex_map_.at(v); }
    std::uint32_t edge_image(std::uint32_t e) const { return edge_map_.at(e); }

    /// Image of a domain name (vertex or edge).
    const std::string& image_name(std::string_view name) const;

    bool is_injective() const;
    bool is_surjective() const;
    bool is_bijective() const { return is_injective() && is_surjective(); }
    bool is_identity() const;
    /// True when every name is mapped to the equally named item of the codomain.
    bool is_name_preserving() const;

    /// Same boundary objects and same component maps.
    bool operator==(const Morphism& other) const;
    /// Canonical order: lexicographic over the component maps (vertices first).
    /// Only meaningful between morphisms with equal boundaries.
    std::strong_ordering compare_maps(const Morphism& other) const;
    bool same_maps(const Morphism& other) const noexcept {
        return vertex_map_ == other.vertex_map_ && edge_map_ == other.edge_map_;
    }

    std::string describe() const;

    struct Unchecked {};
    Morphism(Unchecked, CatObject dom, CatObject cod, std::vector<std::uint32_t> vertex_map,
             std::vector<std::uint32_t> edge_map) noexcept;

private:
    CatObject dom_;
    CatObject cod_;
    std::vector<std::uint32_t> vertex_map_;
    std::vector<std::uint32_t> edge_map_;
};

struct MorphismLess {
    bool operator()(const Morphism& a, const Morphism& b) const { return a.compare_maps(b) < 0; }
};

struct PushoutResult {
    CatObject apex;
    Morphism inj_left;
    Morphism inj_right;
};

/// Diagrammatic composition `f;g` (first f, then g).
Morphism compose(const Morphism& f, const Morphism& g);
Morphism identity(const CatObject& object);

CatObject initial_object(Kind kind);
Morphism initial_morphism(const CatObject& object);

/// Partial assignment used to constrain hom enumeration; unset entries are free.
struct PartialAssignment {
    std::vector<std::optional<std::uint32_t>> vertices;
    std::vector<std::optional<std::uint32_t>> edges;
};

/// Visits every morphism `from -> to` agreeing with `fixed`, in canonical
/// order, by backtracking with early pruning on the homomorphism law.
/// The visitor returns false to stop. Returns false iff stopped early.
bool for_each_hom(const CatObject& from, const CatObject& to, const PartialAssignment& fixed,
                  const std::function<bool(const Morphism&)>& visit);
bool for_each_hom(const CatObject& from, const CatObject& to,
                  const std::function<bool(const Morphism&)>& visit);

/// All morphisms `from -> to` in canonical order.
std::vector<Morphism> hom_set(const CatObject& from, const CatObject& to);
std::size_t count_homs(const CatObject& from, const CatObject& to);

/// Visits every `b: cod(t) -> cod(a)` with `t;b = a`.
bool for_each_extension(const Morphism& t, const Morphism& a,
                        const std::function<bool(const Morphism&)>& visit);
std::vector<Morphism> extensions(const Morphism& t, const Morphism& a);

/// True iff `t;b = a`.
bool is_extension(const Morphism& b, const Morphism& t, const Morphism& a);

/// Chosen pushout of the span `cod(f) <- dom(f) = dom(g) -> cod(g)`.
///
/// The apex is the quotient of the disjoint union of both codomains. Classes
/// are ordered by their least member (left-side names before right-side
/// names) and named after it; a right-side name that clashes with a name
/// already in use is tagged with primes.
PushoutResult pushout(const Morphism& f, const Morphism& g);

std::optional<Morphism> find_isomorphism(const CatObject& a, const CatObject& b);
bool is_isomorphic(const CatObject& a, const CatObject& b);

/// All automorphisms of an object, identity first.
std::vector<Morphism> automorphisms(const CatObject& object);

} // namespace lfoc
