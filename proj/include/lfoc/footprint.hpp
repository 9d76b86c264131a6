#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lfoc/cat.hpp"

namespace lfoc {

struct Feature {
    std::string name;
    CatObject arity;
};

/// Feature symbols with their arity objects, all of one kind.
class Footprint {
public:
    Footprint(std::string name, Kind kind, std::vector<Feature> features);

    const std::string& name() const noexcept { return name_; }
    Kind kind() const noexcept { return kind_; }
    /// Features in declaration order.
    const std::vector<Feature>& features() const noexcept { return features_; }
    const Feature* find(std::string_view feature) const;
    const CatObject& arity(std::string_view feature) const;

    bool operator==(const Footprint& other) const;

private:
    std::string name_;
    Kind kind_;
    std::vector<Feature> features_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

using FootprintRef = std::shared_ptr<const Footprint>;

/// A carrier together with, per feature, a finite set of valid interpretations.
///
/// Construction does not validate; use `validate_structure`. Interpretations
/// are kept sorted in canonical order with duplicates removed.
class Structure {
public:
    Structure(std::string name, FootprintRef footprint, CatObject carrier,
              std::map<std::string, std::vector<Morphism>> interpretation);

    const std::string& name() const noexcept;
    const FootprintRef& footprint() const noexcept;
    const CatObject& carrier() const noexcept;
    /// Interpretations of every footprint feature (missing features map to empty sets).
    const std::map<std::string, std::vector<Morphism>>& interpretation() const noexcept;
    const std::vector<Morphism>& interpretation(std::string_view feature) const;

    /// Membership of `a` (with dom = arity(feature), cod = carrier) in the feature's set.
    bool contains(std::string_view feature, const Morphism& a) const;

    Structure renamed(std::string name) const;

    /// Same footprint, carrier and interpretation sets (names of structures ignored).
    bool operator==(const Structure& other) const;

private:
    struct Data;
    std::shared_ptr<const Data> data_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate_structure(const Structure& structure);

/// True iff `s` maps every valid interpretation of S to a valid one of T.
bool is_structure_hom(const Morphism& s, const Structure& source, const Structure& target);

/// Bounds for exhaustive carrier enumeration. For set footprints only
/// `max_vertices` (elements) is used.
struct CarrierBounds {
    std::size_t max_vertices = 0;
    std::size_t max_edges = 0;
};

struct EnumerationOptions {
    bool iso_dedup = false;
    /// Refuse when the estimated number of structures exceeds this.
    double safety_cap = 5e6;
};

/// All carriers of `kind` within `bounds`, canonically named (`u0..` for sets,
/// `v0..`/`e0..` for graphs). Graph edges are listed as a sorted multiset of
/// (source, target) pairs, so edge reorderings are not repeated.
std::vector<CatObject> enumerate_carriers(Kind kind, const CarrierBounds& bounds, bool iso_dedup = false);

/// Estimated number of structures `enumerate_structures` would yield.
double estimate_structure_count(const Footprint& footprint, const CarrierBounds& bounds);

/// Cursor over all structures of a footprint within carrier bounds:
/// carriers in `enumerate_carriers` order, then every subset of every
/// feature's hom-set (binary counter order). Each cursor is independent.
class StructureEnumerator {
public:
    StructureEnumerator(FootprintRef footprint, CarrierBounds bounds, EnumerationOptions options = {});

    std::optional<Structure> next();

private:
    bool load_carrier();
    bool is_canonical(const std::vector<bool>& bits) const;

    FootprintRef footprint_;
    CarrierBounds bounds_;
    EnumerationOptions options_;
    std::vector<CatObject> carriers_;
    std::size_t carrier_ = 0;
    bool loaded_ = false;
    // per carrier
    std::vector<std::vector<Morphism>> homs_;
    std::vector<bool> bits_;
    bool exhausted_ = false;
    std::vector<std::vector<std::vector<std::uint32_t>>> permuted_; // [automorphism][feature*][hom] -> hom index
    std::size_t produced_ = 0;
};

std::vector<Structure> enumerate_structures(const FootprintRef& footprint, const CarrierBounds& bounds,
                                            EnumerationOptions options = {});

/// The finite stand-in for the chosen category of structures: either an
/// explicit list, or bounded exhaustive enumeration.
class StructureRegistry {
public:
    static StructureRegistry from_list(std::string name, FootprintRef footprint, std::vector<Structure> structures);
    static StructureRegistry enumerated(FootprintRef footprint, CarrierBounds bounds, EnumerationOptions options = {});

    const FootprintRef& footprint() const noexcept { return footprint_; }
    /// Human-readable scope, e.g. `registry 'R' (3 structures)` or
    /// `all structures of 'FOL' with carriers <= 2 elements`.
    const std::string& describe() const noexcept { return description_; }
    bool is_enumerated() const noexcept { return !list_.has_value(); }
    const CarrierBounds& bounds() const noexcept { return bounds_; }

    /// Visits structures in registry order; the visitor returns false to stop.
    void for_each(const std::function<bool(const Structure&)>& visit) const;
    std::vector<Structure> structures() const;
    bool contains(const Structure& structure) const;

private:
    StructureRegistry() = default;
    FootprintRef footprint_;
    std::optional<std::vector<Structure>> list_;
    CarrierBounds bounds_{};
    EnumerationOptions options_{};
    std::string description_;
};

} // namespace lfoc
