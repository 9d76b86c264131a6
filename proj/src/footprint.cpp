#include "lfoc/footprint.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "detail.hpp"

namespace lfoc {

Footprint::Footprint(std::string name, Kind kind, std::vector<Feature> features)
    : name_(std::move(name)), kind_(kind), features_(std::move(features)) {
    for (std::size_t i = 0; i < features_.size(); ++i) {
        const auto& f = features_[i];
        if (f.arity.kind() != kind_) {
            throw KindError("feature '" + f.name + "' of footprint '" + name_ + "' has a " +
                            std::string(to_string(f.arity.kind())) + " arity in a " +
                            std::string(to_string(kind_)) + " footprint");
        }
        if (!index_.emplace(f.name, i).second) {
            throw ValidationError("duplicate feature '" + f.name + "' in footprint '" + name_ + "'");
        }
    }
}

const Feature* Footprint::find(std::string_view feature) const {
    auto it = index_.find(feature);
    return it == index_.end() ? nullptr : &features_[it->second];
}

const CatObject& Footprint::arity(std::string_view feature) const {
    if (const auto* f = find(feature)) {
        return f->arity;
    }
    throw ValidationError("unknown feature '" + std::string(feature) + "' in footprint '" + name_ + "'");
}

bool Footprint::operator==(const Footprint& other) const {
    if (this == &other) {
        return true;
    }
    if (name_ != other.name_ || kind_ != other.kind_ || features_.size() != other.features_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < features_.size(); ++i) {
        if (features_[i].name != other.features_[i].name || !(features_[i].arity == other.features_[i].arity)) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

struct Structure::Data {
    std::string name;
    FootprintRef footprint;
    CatObject carrier;
    std::map<std::string, std::vector<Morphism>> interpretation;
    std::map<std::string, std::unordered_set<detail::MapKey>, std::less<>> members;
};

Structure::Structure(std::string name, FootprintRef footprint, CatObject carrier,
                     std::map<std::string, std::vector<Morphism>> interpretation) {
    if (!footprint) {
        throw ValidationError("structure '" + name + "' has no footprint");
    }
    auto data = std::make_shared<Data>();
    data->name = std::move(name);
    data->carrier = std::move(carrier);
    for (const auto& f : footprint->features()) {
        interpretation.try_emplace(f.name);
    }
    for (auto& [feature, set] : interpretation) {
        std::sort(set.begin(), set.end(), MorphismLess{});
        set.erase(std::unique(set.begin(), set.end(),
                              [](const Morphism& a, const Morphism& b) { return a == b; }),
                  set.end());
        auto& members = data->members[feature];
        for (const auto& m : set) {
            members.insert(detail::map_key(m));
        }
    }
    data->footprint = std::move(footprint);
    data->interpretation = std::move(interpretation);
    data_ = std::move(data);
}

const std::string& Structure::name() const noexcept { return data_->name; }
const FootprintRef& Structure::footprint() const noexcept { return data_->footprint; }
const CatObject& Structure::carrier() const noexcept { return data_->carrier; }
const std::map<std::string, std::vector<Morphism>>& Structure::interpretation() const noexcept {
    return data_->interpretation;
}

const std::vector<Morphism>& Structure::interpretation(std::string_view feature) const {
    auto it = data_->interpretation.find(std::string(feature));
    if (it == data_->interpretation.end()) {
        throw ValidationError("structure '" + data_->name + "' has no feature '" + std::string(feature) + "'");
    }
    return it->second;
}

bool Structure::contains(std::string_view feature, const Morphism& a) const {
    auto it = data_->members.find(feature);
    if (it == data_->members.end()) {
        throw ValidationError("structure '" + data_->name + "' has no feature '" + std::string(feature) + "'");
    }
    return it->second.contains(detail::map_key(a));
}

Structure Structure::renamed(std::string name) const {
    Structure copy = *this;
    auto data = std::make_shared<Data>(*data_);
    data->name = std::move(name);
    copy.data_ = std::move(data);
    return copy;
}

bool Structure::operator==(const Structure& other) const {
    if (data_ == other.data_) {
        return true;
    }
    return *data_->footprint == *other.data_->footprint && data_->carrier == other.data_->carrier &&
           data_->interpretation == other.data_->interpretation;
}

ValidationReport validate_structure(const Structure& structure) {
    ValidationReport report;
    const auto& fp = *structure.footprint();
    if (structure.carrier().kind() != fp.kind()) {
        report.violations.push_back("carrier " + structure.carrier().describe() + " is not of kind " +
                                    std::string(to_string(fp.kind())));
        return report;
    }
    for (const auto& [feature, set] : structure.interpretation()) {
        const auto* f = fp.find(feature);
        if (!f) {
            report.violations.push_back("feature '" + feature + "' is not declared in footprint '" + fp.name() + "'");
            continue;
        }
        for (const auto& a : set) {
            if (!(a.dom() == f->arity)) {
                report.violations.push_back("feature '" + feature + "': interpretation " + a.describe() +
                                            " has domain " + a.dom().describe() + ", expected arity " +
                                            f->arity.describe());
                continue;
            }
            if (!(a.cod() == structure.carrier())) {
                report.violations.push_back("feature '" + feature + "': interpretation " + a.describe() +
                                            " does not land in the carrier");
                continue;
            }
            // re-run the checked constructor: membership in the hom-set
            try {
                Morphism(a.dom(), a.cod(), {a.vertex_map().begin(), a.vertex_map().end()},
                         {a.edge_map().begin(), a.edge_map().end()});
            } catch (const Error& e) {
                report.violations.push_back("feature '" + feature + "': interpretation " + a.describe() +
                                            " is not a morphism: " + e.what());
            }
        }
    }
    return report;
}

bool is_structure_hom(const Morphism& s, const Structure& source, const Structure& target) {
    if (!(s.dom() == source.carrier()) || !(s.cod() == target.carrier())) {
        throw BoundaryError("structure homomorphism check: " + s.describe() + " does not go from the carrier of '" +
                            source.name() + "' to the carrier of '" + target.name() + "'");
    }
    if (!(*source.footprint() == *target.footprint())) {
        throw ValidationError("structure homomorphism check: '" + source.name() + "' and '" + target.name() +
                              "' have different footprints");
    }
    for (const auto& [feature, set] : source.interpretation()) {
        for (const auto& a : set) {
            if (!target.contains(feature, compose(a, s))) {
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

std::vector<std::string> numbered(const char* prefix, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(prefix + std::to_string(i));
    }
    return out;
}

double binomial(double n, double k) {
    double r = 1;
    for (double i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

double carrier_count(Kind kind, const CarrierBounds& bounds) {
    if (kind == Kind::Set) {
        return static_cast<double>(bounds.max_vertices + 1);
    }
    double total = 1; // empty graph
    for (std::size_t n = 1; n <= bounds.max_vertices; ++n) {
        const double pairs = static_cast<double>(n * n);
        for (std::size_t m = 0; m <= bounds.max_edges; ++m) {
            total += binomial(pairs + static_cast<double>(m) - 1, static_cast<double>(m));
        }
    }
    return total;
}

void graphs_with(std::size_t n, std::size_t m, std::vector<CatObject>& out) {
    std::vector<std::uint32_t> pairs(m, 0);
    const auto limit = static_cast<std::uint32_t>(n * n);
    auto vertices = numbered("v", n);
    auto emit = [&] {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < m; ++i) {
            edges.push_back(Edge{"e" + std::to_string(i), static_cast<std::uint32_t>(pairs[i] / n),
                                 static_cast<std::uint32_t>(pairs[i] % n)});
        }
        out.push_back(CatObject::graph_indexed(vertices, std::move(edges)));
    };
    if (m == 0) {
        emit();
        return;
    }
    // non-decreasing sequences over [0, n*n)
    while (true) {
        emit();
        std::size_t i = m;
        while (i > 0 && pairs[i - 1] + 1 == limit) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++pairs[i - 1];
        for (std::size_t j = i; j < m; ++j) {
            pairs[j] = pairs[i - 1];
        }
    }
}

} // namespace

std::vector<CatObject> enumerate_carriers(Kind kind, const CarrierBounds& bounds, bool iso_dedup) {
    std::vector<CatObject> all;
    if (kind == Kind::Set) {
        for (std::size_t n = 0; n <= bounds.max_vertices; ++n) {
            all.push_back(CatObject::set(numbered("u", n)));
        }
        return all;
    }
    all.push_back(CatObject::empty(Kind::Graph));
    for (std::size_t n = 1; n <= bounds.max_vertices; ++n) {
        for (std::size_t m = 0; m <= bounds.max_edges; ++m) {
            graphs_with(n, m, all);
        }
    }
    if (!iso_dedup) {
        return all;
    }
    std::vector<CatObject> kept;
    for (const auto& g : all) {
        bool seen = std::any_of(kept.begin(), kept.end(), [&](const CatObject& k) { return is_isomorphic(k, g); });
        if (!seen) {
            kept.push_back(g);
        }
    }
    return kept;
}

double estimate_structure_count(const Footprint& footprint, const CarrierBounds& bounds) {
    double total = 0;
    for (const auto& carrier : enumerate_carriers(footprint.kind(), bounds)) {
        double bits = 0;
        for (const auto& f : footprint.features()) {
            bits += static_cast<double>(count_homs(f.arity, carrier));
        }
        total += std::pow(2.0, bits);
    }
    return total;
}

StructureEnumerator::StructureEnumerator(FootprintRef footprint, CarrierBounds bounds, EnumerationOptions options)
    : footprint_(std::move(footprint)), bounds_(bounds), options_(options) {
    const double carriers = carrier_count(footprint_->kind(), bounds_);
    if (carriers > options_.safety_cap) {
        throw BudgetError("refusing to enumerate: about " + std::to_string(static_cast<long long>(carriers)) +
                          " carriers exceed the safety cap of " +
                          std::to_string(static_cast<long long>(options_.safety_cap)));
    }
    const double estimate = estimate_structure_count(*footprint_, bounds_);
    if (estimate > options_.safety_cap) {
        throw BudgetError("refusing to enumerate: about " + std::to_string(estimate) +
                          " structures exceed the safety cap of " +
                          std::to_string(static_cast<long long>(options_.safety_cap)));
    }
    carriers_ = enumerate_carriers(footprint_->kind(), bounds_, options_.iso_dedup);
}

bool StructureEnumerator::load_carrier() {
    if (carrier_ >= carriers_.size()) {
        return false;
    }
    const auto& carrier = carriers_[carrier_];
    homs_.clear();
    std::size_t total = 0;
    for (const auto& f : footprint_->features()) {
        homs_.push_back(hom_set(f.arity, carrier));
        total += homs_.back().size();
    }
    bits_.assign(total, false);
    exhausted_ = false;
    permuted_.clear();
    if (options_.iso_dedup) {
        for (const auto& sigma : automorphisms(carrier)) {
            if (sigma.is_identity()) {
                continue;
            }
            std::vector<std::vector<std::uint32_t>> perm;
            for (const auto& homs : homs_) {
                std::vector<std::uint32_t> p;
                for (const auto& h : homs) {
                    auto image = compose(h, sigma);
                    auto it = std::lower_bound(homs.begin(), homs.end(), image, MorphismLess{});
                    p.push_back(static_cast<std::uint32_t>(it - homs.begin()));
                }
                perm.push_back(std::move(p));
            }
            permuted_.push_back(std::move(perm));
        }
    }
    loaded_ = true;
    return true;
}

bool StructureEnumerator::is_canonical(const std::vector<bool>& bits) const {
    // the yielded representative is the one whose bit vector is least under
    // comparison from the highest bit down
    for (const auto& perm : permuted_) {
        std::vector<bool> image(bits.size(), false);
        std::size_t offset = 0;
        for (std::size_t f = 0; f < perm.size(); ++f) {
            for (std::size_t h = 0; h < perm[f].size(); ++h) {
                if (bits[offset + h]) {
                    image[offset + perm[f][h]] = true;
                }
            }
            offset += perm[f].size();
        }
        for (std::size_t i = bits.size(); i-- > 0;) {
            if (image[i] != bits[i]) {
                if (!image[i]) {
                    return false;
                }
                break;
            }
        }
    }
    return true;
}

std::optional<Structure> StructureEnumerator::next() {
    while (true) {
        if (!loaded_ && !load_carrier()) {
            return std::nullopt;
        }
        if (exhausted_) {
            ++carrier_;
            loaded_ = false;
            continue;
        }
        const auto current = bits_;
        // binary increment
        std::size_t i = 0;
        while (i < bits_.size() && bits_[i]) {
            bits_[i] = false;
            ++i;
        }
        if (i == bits_.size()) {
            exhausted_ = true;
        } else {
            bits_[i] = true;
        }
        if (!permuted_.empty() && !is_canonical(current)) {
            continue;
        }
        std::map<std::string, std::vector<Morphism>> interpretation;
        std::size_t offset = 0;
        for (std::size_t f = 0; f < homs_.size(); ++f) {
            auto& set = interpretation[footprint_->features()[f].name];
            for (std::size_t h = 0; h < homs_[f].size(); ++h) {
                if (current[offset + h]) {
                    set.push_back(homs_[f][h]);
                }
            }
            offset += homs_[f].size();
        }
        return Structure(footprint_->name() + "#" + std::to_string(produced_++), footprint_,
                         carriers_[carrier_], std::move(interpretation));
    }
}

std::vector<Structure> enumerate_structures(const FootprintRef& footprint, const CarrierBounds& bounds,
                                            EnumerationOptions options) {
    StructureEnumerator cursor(footprint, bounds, options);
    std::vector<Structure> out;
    while (auto s = cursor.next()) {
        out.push_back(std::move(*s));
    }
    return out;
}

// ---------------------------------------------------------------------------

StructureRegistry StructureRegistry::from_list(std::string name, FootprintRef footprint,
                                               std::vector<Structure> structures) {
    for (const auto& s : structures) {
        if (!(*s.footprint() == *footprint)) {
            throw ValidationError("registry '" + name + "': structure '" + s.name() +
                                  "' does not share the registry footprint '" + footprint->name() + "'");
        }
    }
    StructureRegistry r;
    r.description_ = "registry '" + name + "' (" + std::to_string(structures.size()) + " structures)";
    r.footprint_ = std::move(footprint);
    r.list_ = std::move(structures);
    return r;
}

StructureRegistry StructureRegistry::enumerated(FootprintRef footprint, CarrierBounds bounds,
                                                EnumerationOptions options) {
    // fail early on oversized bounds
    StructureEnumerator probe(footprint, bounds, options);
    StructureRegistry r;
    r.description_ = "all structures of footprint '" + footprint->name() + "' with carriers of at most ";
    if (footprint->kind() == Kind::Set) {
        r.description_ += std::to_string(bounds.max_vertices) + " elements";
    } else {
        r.description_ += std::to_string(bounds.max_vertices) + " vertices and " +
                          std::to_string(bounds.max_edges) + " edges";
    }
    if (options.iso_dedup) {
        r.description_ += " (up to isomorphism)";
    }
    r.footprint_ = std::move(footprint);
    r.bounds_ = bounds;
    r.options_ = options;
    return r;
}

void StructureRegistry::for_each(const std::function<bool(const Structure&)>& visit) const {
    if (list_) {
        for (const auto& s : *list_) {
            if (!visit(s)) {
                return;
            }
        }
        return;
    }
    StructureEnumerator cursor(footprint_, bounds_, options_);
    while (auto s = cursor.next()) {
        if (!visit(*s)) {
            return;
        }
    }
}

std::vector<Structure> StructureRegistry::structures() const {
    std::vector<Structure> out;
    for_each([&](const Structure& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

bool StructureRegistry::contains(const Structure& structure) const {
    bool found = false;
    for_each([&](const Structure& s) {
        found = s == structure;
        return !found;
    });
    return found;
}

} // namespace lfoc
