#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rfh/matrix.hpp"

namespace rfh {

/// Grading of the Novikov ring: either the trivial case (plain coefficients,
/// no formal variable) or the periodic case with a formal variable T of even
/// positive degree.
class NovikovGrading {
public:
    static NovikovGrading trivial() { return NovikovGrading(0); }

    static NovikovGrading periodic(int deg_t)
    {
        if (deg_t <= 0 || deg_t % 2 != 0)
            throw Error(ErrorKind::DomainError,
                        "deg_T must be a positive even integer, got " + std::to_string(deg_t));
        return NovikovGrading(deg_t);
    }

    bool is_periodic() const { return deg_t_ != 0; }

    int deg_t() const
    {
        if (!is_periodic())
            throw Error(ErrorKind::DomainError, "trivial grading has no deg_T");
        return deg_t_;
    }

    bool operator==(const NovikovGrading&) const = default;

private:
    explicit NovikovGrading(int d) : deg_t_(d) {}
    int deg_t_;
};

struct Generator {
    std::string label;
    int degree = 0;

    bool operator==(const Generator&) const = default;
};

/// Ordered basis of a free graded module. Generators are kept sorted by
/// (degree, label) so every derived matrix is reproducible across runs.
class GradedBasis {
public:
    GradedBasis() = default;
    explicit GradedBasis(std::vector<Generator> gens);

    std::size_t size() const { return gens_.size(); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& operator[](std::size_t i) const { return gens_[i]; }

    bool contains(const std::string& label) const { return index_.count(label) != 0; }
    int degree_of(const std::string& label) const;

    bool operator==(const GradedBasis& rhs) const { return gens_ == rhs.gens_; }
    bool operator!=(const GradedBasis& rhs) const { return !(*this == rhs); }

private:
    std::vector<Generator> gens_;
    std::map<std::string, std::size_t> index_;
};

/// One element g * T^t_power of a single-degree component.
struct ComponentElement {
    std::string label;
    int generator_degree = 0;
    int t_power = 0;

    bool operator==(const ComponentElement&) const = default;
};

/// All pairs (g, a) with deg(g) + a*deg_T = d (periodic) or deg(g) = d with
/// a = 0 (trivial), in basis order.
std::vector<ComponentElement> degree_component_basis(const GradedBasis& basis,
                                                     const NovikovGrading& grading, int d);

struct MapEntry {
    std::string from;
    std::string to;
    Rat coeff;

    bool operator==(const MapEntry&) const = default;
};

struct Violation {
    std::string message;
};

/// A Λ-linear map of graded modules with a fixed degree shift. The grading
/// forces the Laurent exponent of every entry to
/// (deg(from) + shift - deg(to)) / deg_T, so only the coefficient of each
/// (from, to) pair is stored. Entries with coefficient zero are dropped.
class GradedMap {
public:
    GradedMap() : shift_(0), grading_(NovikovGrading::trivial()), ring_(Ring::Z) {}

    GradedMap(GradedBasis source, GradedBasis target, int shift, NovikovGrading grading,
              Ring ring, std::vector<MapEntry> entries);

    static GradedMap zero(GradedBasis source, GradedBasis target, int shift,
                          NovikovGrading grading, Ring ring)
    {
        return GradedMap(std::move(source), std::move(target), shift, grading, ring, {});
    }

    const GradedBasis& source() const { return source_; }
    const GradedBasis& target() const { return target_; }
    int shift() const { return shift_; }
    const NovikovGrading& grading() const { return grading_; }
    Ring ring() const { return ring_; }
    const std::vector<MapEntry>& entries() const { return entries_; }

    bool is_zero() const;
    bool is_endomorphism() const { return source_ == target_; }

    /// Laurent exponent forced by the degrees of the two labels. Only valid
    /// when the congruence holds (i.e. validate() found no violation there).
    int forced_exponent(const std::string& from, const std::string& to) const;

    bool operator==(const GradedMap& rhs) const;

private:
    GradedBasis source_, target_;
    int shift_;
    NovikovGrading grading_;
    Ring ring_;
    std::vector<MapEntry> entries_;  // sorted by (from, to); zero coefficients dropped
};

/// Every entry violating the degree congruence, referring to an unknown
/// label, or duplicating a (from, to) pair. Empty result means valid.
std::vector<Violation> validate(const GradedMap& map);

inline bool is_valid(const GradedMap& map) { return validate(map).empty(); }

/// Exact matrix of the map from the degree-d component of the source to the
/// degree-(d + shift) component of the target. Throws InvalidMap when
/// validate() reports violations.
ExactMatrix degree_slice(const GradedMap& map, int d);

GradedMap add(const GradedMap& f, const GradedMap& g);
GradedMap compose(const GradedMap& f, const GradedMap& g);  // f after g
GradedMap scale(const Rat& c, const GradedMap& f);

/// c * T^k * id on the given basis; shift is k * deg_T. With the trivial
/// grading only k = 0 is meaningful.
GradedMap scalar_tpower_identity(const GradedBasis& basis, const NovikovGrading& grading,
                                 Ring ring, const Rat& c, int k);

} // namespace rfh
