#include "lfoc/cat.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace lfoc {

std::string_view to_string(Kind kind) {
    return kind == Kind::Set ? "set" : "graph";
}

struct CatObject::Data {
    Kind kind = Kind::Set;
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    // name -> index; edges are offset by vertices.size()
    std::unordered_map<std::string, std::uint32_t> index;
};

namespace {

void check_unique(std::unordered_map<std::string, std::uint32_t>& index, const std::string& name,
                  std::uint32_t slot) {
    if (name.empty()) {
        throw ValidationError("object names must be non-empty");
    }
    if (!index.emplace(name, slot).second) {
        throw ValidationError("duplicate name '" + name + "' in object");
    }
}

} // namespace

CatObject::CatObject() : CatObject(empty(Kind::Set)) {}

CatObject::CatObject(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

CatObject CatObject::set(std::vector<std::string> elements) {
    auto data = std::make_shared<Data>();
    data->kind = Kind::Set;
    for (std::uint32_t i = 0; i < elements.size(); ++i) {
        check_unique(data->index, elements[i], i);
    }
    data->vertices = std::move(elements);
    return CatObject(std::move(data));
}

CatObject CatObject::graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
    auto data = std::make_shared<Data>();
    data->kind = Kind::Graph;
    for (std::uint32_t i = 0; i < vertices.size(); ++i) {
        check_unique(data->index, vertices[i], i);
    }
    const auto offset = static_cast<std::uint32_t>(vertices.size());
    data->vertices = std::move(vertices);
    for (std::uint32_t i = 0; i < edges.size(); ++i) {
        const auto& es = edges[i];
        check_unique(data->index, es.name, offset + i);
        auto src = data->index.find(es.source);
        auto tgt = data->index.find(es.target);
        if (src == data->index.end() || src->second >= offset) {
            throw ValidationError("edge '" + es.name + "' has unknown source vertex '" + es.source + "'");
        }
        if (tgt == data->index.end() || tgt->second >= offset) {
            throw ValidationError("edge '" + es.name + "' has unknown target vertex '" + es.target + "'");
        }
        data->edges.push_back(Edge{es.name, src->second, tgt->second});
    }
    return CatObject(std::move(data));
}

CatObject CatObject::graph_indexed(std::vector<std::string> vertices, std::vector<Edge> edges) {
    auto data = std::make_shared<Data>();
    data->kind = Kind::Graph;
    for (std::uint32_t i = 0; i < vertices.size(); ++i) {
        check_unique(data->index, vertices[i], i);
    }
    const auto offset = static_cast<std::uint32_t>(vertices.size());
    for (std::uint32_t i = 0; i < edges.size(); ++i) {
        check_unique(data->index, edges[i].name, offset + i);
        if (edges[i].source >= offset || edges[i].target >= offset) {
            throw ValidationError("edge '" + edges[i].name + "' has an out-of-range endpoint");
        }
    }
    data->vertices = std::move(vertices);
    data->edges = std::move(edges);
    return CatObject(std::move(data));
}

CatObject CatObject::empty(Kind kind) {
    if (kind == Kind::Set) {
        static const auto empty_set = std::make_shared<const Data>();
        return CatObject(empty_set);
    }
    auto data = std::make_shared<Data>();
    data->kind = Kind::Graph;
    return CatObject(std::move(data));
}

Kind CatObject::kind() const noexcept { return data_->kind; }
std::span<const std::string> CatObject::vertices() const noexcept { return data_->vertices; }
std::span<const Edge> CatObject::edges() const noexcept { return data_->edges; }
std::size_t CatObject::vertex_count() const noexcept { return data_->vertices.size(); }
std::size_t CatObject::edge_count() const noexcept { return data_->edges.size(); }

std::optional<std::uint32_t> CatObject::vertex_index(std::string_view name) const {
    auto it = data_->index.find(std::string(name));
    if (it == data_->index.end() || it->second >= data_->vertices.size()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<std::uint32_t> CatObject::edge_index(std::string_view name) const {
    auto it = data_->index.find(std::string(name));
    if (it == data_->index.end() || it->second < data_->vertices.size()) {
        return std::nullopt;
    }
    return static_cast<std::uint32_t>(it->second - data_->vertices.size());
}

bool CatObject::has_name(std::string_view name) const {
    return data_->index.contains(std::string(name));
}

bool CatObject::operator==(const CatObject& other) const {
    if (data_ == other.data_) {
        return true;
    }
    return data_->kind == other.data_->kind && data_->vertices == other.data_->vertices &&
           data_->edges == other.data_->edges;
}

bool CatObject::same_shape(const CatObject& other) const {
    if (data_ == other.data_) {
        return true;
    }
    if (data_->kind != other.data_->kind || vertex_count() != other.vertex_count() ||
        edge_count() != other.edge_count()) {
        return false;
    }
    for (std::size_t i = 0; i < edge_count(); ++i) {
        if (data_->edges[i].source != other.data_->edges[i].source ||
            data_->edges[i].target != other.data_->edges[i].target) {
            return false;
        }
    }
    return true;
}

std::string CatObject::describe() const {
    std::string out = "{";
    if (kind() == Kind::Set) {
        for (std::size_t i = 0; i < vertex_count(); ++i) {
            out += (i ? " " : "") + data_->vertices[i];
        }
        return out + "}";
    }
    out += "v";
    for (const auto& v : data_->vertices) {
        out += " " + v;
    }
    if (!data_->edges.empty()) {
        out += "; e";
        for (std::size_t i = 0; i < edge_count(); ++i) {
            const auto& e = data_->edges[i];
            out += (i ? ", " : " ") + e.name + ": " + data_->vertices[e.source] + "->" +
                   data_->vertices[e.target];
        }
    }
    return out + "}";
}

// ---------------------------------------------------------------------------
// Morphism

Morphism::Morphism(Unchecked, CatObject dom, CatObject cod, std::vector<std::uint32_t> vertex_map,
                   std::vector<std::uint32_t> edge_map) noexcept
    : dom_(std::move(dom)), cod_(std::move(cod)), vertex_map_(std::move(vertex_map)),
      edge_map_(std::move(edge_map)) {}

Morphism::Morphism(CatObject dom, CatObject cod, std::vector<std::uint32_t> vertex_map,
                   std::vector<std::uint32_t> edge_map)
    : dom_(std::move(dom)), cod_(std::move(cod)), vertex_map_(std::move(vertex_map)),
      edge_map_(std::move(edge_map)) {
    if (dom_.kind() != cod_.kind()) {
        throw KindError("morphism between objects of different kinds: " + dom_.describe() + " -> " +
                        cod_.describe());
    }
    if (vertex_map_.size() != dom_.vertex_count() || edge_map_.size() != dom_.edge_count()) {
        throw ValidationError("morphism component maps are not total on " + dom_.describe());
    }
    for (auto v : vertex_map_) {
        if (v >= cod_.vertex_count()) {
            throw ValidationError("morphism vertex image out of range in " + cod_.describe());
        }
    }
    for (std::size_t i = 0; i < edge_map_.size(); ++i) {
        auto e = edge_map_[i];
        if (e >= cod_.edge_count()) {
            throw ValidationError("morphism edge image out of range in " + cod_.describe());
        }
        const auto& de = dom_.edges()[i];
        const auto& ce = cod_.edges()[e];
        if (vertex_map_[de.source] != ce.source || vertex_map_[de.target] != ce.target) {
            throw ValidationError("map violates the homomorphism law at edge '" + de.name + "'");
        }
    }
}

Morphism Morphism::from_names(CatObject dom, CatObject cod,
                              const std::unordered_map<std::string, std::string>& assignment) {
    std::vector<std::uint32_t> vmap;
    std::vector<std::uint32_t> emap;
    for (const auto& v : dom.vertices()) {
        auto it = assignment.find(v);
        if (it == assignment.end()) {
            throw ValidationError("morphism does not assign '" + v + "'");
        }
        auto target = cod.vertex_index(it->second);
        if (!target) {
            throw ValidationError("'" + it->second + "' is not a " +
                                  (dom.kind() == Kind::Set ? "element" : "vertex") + " of " +
                                  cod.describe());
        }
        vmap.push_back(*target);
    }
    for (const auto& e : dom.edges()) {
        auto it = assignment.find(e.name);
        if (it == assignment.end()) {
            throw ValidationError("morphism does not assign '" + e.name + "'");
        }
        auto target = cod.edge_index(it->second);
        if (!target) {
            throw ValidationError("'" + it->second + "' is not an edge of " + cod.describe());
        }
        emap.push_back(*target);
    }
    for (const auto& [name, image] : assignment) {
        if (!dom.has_name(name)) {
            throw ValidationError("'" + name + "' is not a name of " + dom.describe());
        }
    }
    return Morphism(std::move(dom), std::move(cod), std::move(vmap), std::move(emap));
}

Morphism Morphism::inclusion(CatObject dom, CatObject cod) {
    std::unordered_map<std::string, std::string> assignment;
    for (const auto& v : dom.vertices()) {
        assignment.emplace(v, v);
    }
    for (const auto& e : dom.edges()) {
        assignment.emplace(e.name, e.name);
    }
    return from_names(std::move(dom), std::move(cod), assignment);
}

const std::string& Morphism::image_name(std::string_view name) const {
    if (auto v = dom_.vertex_index(name)) {
        return cod_.vertices()[vertex_map_[*v]];
    }
    if (auto e = dom_.edge_index(name)) {
        return cod_.edges()[edge_map_[*e]].name;
    }
    throw ValidationError("'" + std::string(name) + "' is not a name of " + dom_.describe());
}

namespace {

bool injective(std::span<const std::uint32_t> map) {
    std::unordered_set<std::uint32_t> seen;
    for (auto x : map) {
        if (!seen.insert(x).second) {
            return false;
        }
    }
    return true;
}

bool surjective(std::span<const std::uint32_t> map, std::size_t n) {
    std::vector<bool> hit(n, false);
    for (auto x : map) {
        hit[x] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

} // namespace

bool Morphism::is_injective() const { return injective(vertex_map_) && injective(edge_map_); }

bool Morphism::is_surjective() const {
    return surjective(vertex_map_, cod_.vertex_count()) && surjective(edge_map_, cod_.edge_count());
}

bool Morphism::is_identity() const {
    if (!(dom_ == cod_)) {
        return false;
    }
    for (std::uint32_t i = 0; i < vertex_map_.size(); ++i) {
        if (vertex_map_[i] != i) {
            return false;
        }
    }
    for (std::uint32_t i = 0; i < edge_map_.size(); ++i) {
        if (edge_map_[i] != i) {
            return false;
        }
    }
    return true;
}

bool Morphism::is_name_preserving() const {
    for (std::size_t i = 0; i < vertex_map_.size(); ++i) {
        if (dom_.vertices()[i] != cod_.vertices()[vertex_map_[i]]) {
            return false;
        }
    }
    for (std::size_t i = 0; i < edge_map_.size(); ++i) {
        if (dom_.edges()[i].name != cod_.edges()[edge_map_[i]].name) {
            return false;
        }
    }
    return true;
}

bool Morphism::operator==(const Morphism& other) const {
    return same_maps(other) && dom_ == other.dom_ && cod_ == other.cod_;
}

std::strong_ordering Morphism::compare_maps(const Morphism& other) const {
    if (auto c = vertex_map_ <=> other.vertex_map_; c != 0) {
        return c;
    }
    return edge_map_ <=> other.edge_map_;
}

std::string Morphism::describe() const {
    std::string out = "[";
    bool first = true;
    for (std::size_t i = 0; i < vertex_map_.size(); ++i) {
        out += (first ? "" : "; ") + dom_.vertices()[i] + "->" + cod_.vertices()[vertex_map_[i]];
        first = false;
    }
    for (std::size_t i = 0; i < edge_map_.size(); ++i) {
        out += (first ? "" : "; ") + dom_.edges()[i].name + "->" + cod_.edges()[edge_map_[i]].name;
        first = false;
    }
    return out + "]";
}

// ---------------------------------------------------------------------------
// Category operations

Morphism compose(const Morphism& f, const Morphism& g) {
    if (!(f.cod() == g.dom())) {
        throw BoundaryError("cannot compose: codomain " + f.cod().describe() +
                            " differs from domain " + g.dom().describe());
    }
    std::vector<std::uint32_t> vmap(f.vertex_map().size());
    std::vector<std::uint32_t> emap(f.edge_map().size());
    for (std::size_t i = 0; i < vmap.size(); ++i) {
        vmap[i] = g.vertex_map()[f.vertex_map()[i]];
    }
    for (std::size_t i = 0; i < emap.size(); ++i) {
        emap[i] = g.edge_map()[f.edge_map()[i]];
    }
    return Morphism(Morphism::Unchecked{}, f.dom(), g.cod(), std::move(vmap), std::move(emap));
}

Morphism identity(const CatObject& object) {
    std::vector<std::uint32_t> vmap(object.vertex_count());
    std::vector<std::uint32_t> emap(object.edge_count());
    std::iota(vmap.begin(), vmap.end(), 0U);
    std::iota(emap.begin(), emap.end(), 0U);
    return Morphism(Morphism::Unchecked{}, object, object, std::move(vmap), std::move(emap));
}

CatObject initial_object(Kind kind) { return CatObject::empty(kind); }

Morphism initial_morphism(const CatObject& object) {
    return Morphism(Morphism::Unchecked{}, initial_object(object.kind()), object, {}, {});
}

namespace {

constexpr std::uint32_t kFree = UINT32_MAX;

class HomSearch {
public:
    HomSearch(const CatObject& from, const CatObject& to,
              const std::function<bool(const Morphism&)>& visit)
        : from_(from), to_(to), visit_(visit), vmap_(from.vertex_count(), kFree),
          emap_(from.edge_count(), kFree), fixed_v_(from.vertex_count(), kFree),
          fixed_e_(from.edge_count(), kFree), closing_(from.vertex_count()),
          between_(to.vertex_count() * to.vertex_count()) {
        for (std::uint32_t e = 0; e < from.edge_count(); ++e) {
            const auto& edge = from.edges()[e];
            closing_[std::max(edge.source, edge.target)].push_back(e);
        }
        const auto n = to.vertex_count();
        for (std::uint32_t e = 0; e < to.edge_count(); ++e) {
            const auto& edge = to.edges()[e];
            between_[edge.source * n + edge.target].push_back(e);
        }
    }

    // Seeds fixed images; returns false when they are already inconsistent.
    bool seed(const PartialAssignment& fixed) {
        auto pin_vertex = [&](std::uint32_t v, std::uint32_t image) {
            if (image >= to_.vertex_count()) {
                return false;
            }
            if (fixed_v_[v] != kFree && fixed_v_[v] != image) {
                return false;
            }
            fixed_v_[v] = image;
            return true;
        };
        for (std::size_t v = 0; v < fixed.vertices.size() && v < fixed_v_.size(); ++v) {
            if (fixed.vertices[v] && !pin_vertex(static_cast<std::uint32_t>(v), *fixed.vertices[v])) {
                return false;
            }
        }
        for (std::size_t e = 0; e < fixed.edges.size() && e < fixed_e_.size(); ++e) {
            if (!fixed.edges[e]) {
                continue;
            }
            const auto image = *fixed.edges[e];
            if (image >= to_.edge_count()) {
                return false;
            }
            fixed_e_[e] = image;
            const auto& de = from_.edges()[e];
            const auto& ce = to_.edges()[image];
            if (!pin_vertex(de.source, ce.source) || !pin_vertex(de.target, ce.target)) {
                return false;
            }
        }
        return true;
    }

    bool run() { return assign_vertex(0); }

private:
    bool closing_edges_feasible(std::uint32_t v) const {
        const auto n = to_.vertex_count();
        for (auto e : closing_[v]) {
            const auto& edge = from_.edges()[e];
            if (between_[vmap_[edge.source] * n + vmap_[edge.target]].empty()) {
                return false;
            }
        }
        return true;
    }

    bool assign_vertex(std::uint32_t v) {
        if (v == from_.vertex_count()) {
            return assign_edge(0);
        }
        auto try_image = [&](std::uint32_t image) {
            vmap_[v] = image;
            if (!closing_edges_feasible(v)) {
                return true;
            }
            return assign_vertex(v + 1);
        };
        if (fixed_v_[v] != kFree) {
            return try_image(fixed_v_[v]);
        }
        for (std::uint32_t image = 0; image < to_.vertex_count(); ++image) {
            if (!try_image(image)) {
                return false;
            }
        }
        return true;
    }

    bool assign_edge(std::uint32_t e) {
        if (e == from_.edge_count()) {
            return visit_(Morphism(Morphism::Unchecked{}, from_, to_, vmap_, emap_));
        }
        const auto& edge = from_.edges()[e];
        const auto& candidates = between_[vmap_[edge.source] * to_.vertex_count() + vmap_[edge.target]];
        for (auto image : candidates) {
            if (fixed_e_[e] != kFree && fixed_e_[e] != image) {
                continue;
            }
            emap_[e] = image;
            if (!assign_edge(e + 1)) {
                return false;
            }
        }
        return true;
    }

    const CatObject& from_;
    const CatObject& to_;
    const std::function<bool(const Morphism&)>& visit_;
    std::vector<std::uint32_t> vmap_;
    std::vector<std::uint32_t> emap_;
    std::vector<std::uint32_t> fixed_v_;
    std::vector<std::uint32_t> fixed_e_;
    std::vector<std::vector<std::uint32_t>> closing_;
    std::vector<std::vector<std::uint32_t>> between_;
};

void require_same_kind(const CatObject& a, const CatObject& b, std::string_view what) {
    if (a.kind() != b.kind()) {
        throw KindError(std::string(what) + ": objects of different kinds (" +
                        std::string(to_string(a.kind())) + " vs " + std::string(to_string(b.kind())) + ")");
    }
}

} // namespace

bool for_each_hom(const CatObject& from, const CatObject& to, const PartialAssignment& fixed,
                  const std::function<bool(const Morphism&)>& visit) {
    require_same_kind(from, to, "hom enumeration");
    HomSearch search(from, to, visit);
    if (!search.seed(fixed)) {
        return true;
    }
    return search.run();
}

bool for_each_hom(const CatObject& from, const CatObject& to,
                  const std::function<bool(const Morphism&)>& visit) {
    return for_each_hom(from, to, PartialAssignment{}, visit);
}

std::vector<Morphism> hom_set(const CatObject& from, const CatObject& to) {
    std::vector<Morphism> out;
    for_each_hom(from, to, [&](const Morphism& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

std::size_t count_homs(const CatObject& from, const CatObject& to) {
    std::size_t n = 0;
    for_each_hom(from, to, [&](const Morphism&) {
        ++n;
        return true;
    });
    return n;
}

bool for_each_extension(const Morphism& t, const Morphism& a,
                        const std::function<bool(const Morphism&)>& visit) {
    if (!(t.dom() == a.dom())) {
        throw BoundaryError("extension: " + t.dom().describe() + " is not the domain of " + a.describe());
    }
    PartialAssignment fixed;
    fixed.vertices.resize(t.cod().vertex_count());
    fixed.edges.resize(t.cod().edge_count());
    for (std::size_t x = 0; x < t.vertex_map().size(); ++x) {
        auto& slot = fixed.vertices[t.vertex_map()[x]];
        if (slot && *slot != a.vertex_map()[x]) {
            return true;
        }
        slot = a.vertex_map()[x];
    }
    for (std::size_t x = 0; x < t.edge_map().size(); ++x) {
        auto& slot = fixed.edges[t.edge_map()[x]];
        if (slot && *slot != a.edge_map()[x]) {
            return true;
        }
        slot = a.edge_map()[x];
    }
    return for_each_hom(t.cod(), a.cod(), fixed, visit);
}

std::vector<Morphism> extensions(const Morphism& t, const Morphism& a) {
    std::vector<Morphism> out;
    for_each_extension(t, a, [&](const Morphism& b) {
        out.push_back(b);
        return true;
    });
    return out;
}

bool is_extension(const Morphism& b, const Morphism& t, const Morphism& a) {
    if (!(t.dom() == a.dom()) || !(t.cod() == b.dom()) || !(b.cod() == a.cod())) {
        throw BoundaryError("extension check: boundaries of " + b.describe() + ", " + t.describe() +
                            ", " + a.describe() + " do not form a triangle");
    }
    return compose(t, b).same_maps(a);
}

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        // the smaller index stays root, so roots are least members
        if (a < b) {
            parent[b] = a;
        } else if (b < a) {
            parent[a] = b;
        }
    }
};

} // namespace

PushoutResult pushout(const Morphism& f, const Morphism& g) {
    if (!(f.dom() == g.dom())) {
        throw BoundaryError("pushout: " + f.describe() + " and " + g.describe() + " do not form a span");
    }
    require_same_kind(f.cod(), g.cod(), "pushout");
    const CatObject& left = f.cod();
    const CatObject& right = g.cod();
    const auto nlv = static_cast<std::uint32_t>(left.vertex_count());
    const auto nle = static_cast<std::uint32_t>(left.edge_count());
    const auto nrv = right.vertex_count();
    const auto nre = right.edge_count();

    UnionFind vertices(nlv + nrv);
    UnionFind edges(nle + nre);
    for (std::size_t x = 0; x < f.vertex_map().size(); ++x) {
        vertices.unite(f.vertex_map()[x], nlv + g.vertex_map()[x]);
    }
    for (std::size_t x = 0; x < f.edge_map().size(); ++x) {
        edges.unite(f.edge_map()[x], nle + g.edge_map()[x]);
    }

    auto member_name = [&](bool edge, std::uint32_t i) -> const std::string& {
        if (!edge) {
            return i < nlv ? left.vertices()[i] : right.vertices()[i - nlv];
        }
        return i < nle ? left.edges()[i].name : right.edges()[i - nle].name;
    };

    // Roots are least members; enumerate them in index order.
    std::vector<std::uint32_t> vclass(nlv + nrv);
    std::vector<std::uint32_t> vroots;
    for (std::uint32_t i = 0; i < nlv + nrv; ++i) {
        if (vertices.find(i) == i) {
            vroots.push_back(i);
        }
    }
    std::vector<std::uint32_t> eclass(nle + nre);
    std::vector<std::uint32_t> eroots;
    for (std::uint32_t i = 0; i < nle + nre; ++i) {
        if (edges.find(i) == i) {
            eroots.push_back(i);
        }
    }
    for (std::uint32_t i = 0; i < nlv + nrv; ++i) {
        vclass[i] = static_cast<std::uint32_t>(
            std::lower_bound(vroots.begin(), vroots.end(), vertices.find(i)) - vroots.begin());
    }
    for (std::uint32_t i = 0; i < nle + nre; ++i) {
        eclass[i] = static_cast<std::uint32_t>(
            std::lower_bound(eroots.begin(), eroots.end(), edges.find(i)) - eroots.begin());
    }

    std::unordered_set<std::string> used;
    for (auto r : vroots) {
        if (r < nlv) {
            used.insert(member_name(false, r));
        }
    }
    for (auto r : eroots) {
        if (r < nle) {
            used.insert(member_name(true, r));
        }
    }
    auto fresh = [&](std::string name) {
        while (used.contains(name)) {
            name += "'";
        }
        used.insert(name);
        return name;
    };

    std::vector<std::string> apex_vertices;
    for (auto r : vroots) {
        apex_vertices.push_back(r < nlv ? member_name(false, r) : fresh(member_name(false, r)));
    }
    std::vector<Edge> apex_edges;
    for (auto r : eroots) {
        std::string name = r < nle ? member_name(true, r) : fresh(member_name(true, r));
        std::uint32_t src = 0;
        std::uint32_t tgt = 0;
        if (r < nle) {
            src = vclass[left.edges()[r].source];
            tgt = vclass[left.edges()[r].target];
        } else {
            src = vclass[nlv + right.edges()[r - nle].source];
            tgt = vclass[nlv + right.edges()[r - nle].target];
        }
        apex_edges.push_back(Edge{std::move(name), src, tgt});
    }

    CatObject apex = left.kind() == Kind::Set ? CatObject::set(std::move(apex_vertices))
                                              : CatObject::graph_indexed(std::move(apex_vertices),
                                                                         std::move(apex_edges));

    std::vector<std::uint32_t> lv(nlv), le(nle), rv(nrv), re(nre);
    for (std::uint32_t i = 0; i < nlv; ++i) lv[i] = vclass[i];
    for (std::uint32_t i = 0; i < nle; ++i) le[i] = eclass[i];
    for (std::uint32_t i = 0; i < nrv; ++i) rv[i] = vclass[nlv + i];
    for (std::uint32_t i = 0; i < nre; ++i) re[i] = eclass[nle + i];

    Morphism inj_left(Morphism::Unchecked{}, left, apex, std::move(lv), std::move(le));
    Morphism inj_right(Morphism::Unchecked{}, right, apex, std::move(rv), std::move(re));
    return PushoutResult{std::move(apex), std::move(inj_left), std::move(inj_right)};
}

std::optional<Morphism> find_isomorphism(const CatObject& a, const CatObject& b) {
    if (a.kind() != b.kind() || a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
        return std::nullopt;
    }
    std::optional<Morphism> found;
    for_each_hom(a, b, [&](const Morphism& m) {
        if (m.is_bijective()) {
            found = m;
            return false;
        }
        return true;
    });
    return found;
}

bool is_isomorphic(const CatObject& a, const CatObject& b) { return find_isomorphism(a, b).has_value(); }

std::vector<Morphism> automorphisms(const CatObject& object) {
    std::vector<Morphism> out;
    for_each_hom(object, object, [&](const Morphism& m) {
        if (m.is_bijective()) {
            out.push_back(m);
        }
        return true;
    });
    // identity is the least bijection in canonical order
    return out;
}

} // namespace lfoc
