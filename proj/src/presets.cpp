#include "rfh/presets.hpp"

#include <sstream>

namespace rfh {

namespace {

Int int_pow(Int base, int exp)
{
    Int out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

Int factorial(int n)
{
    Int out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

std::string h_label(int i)
{
    return "h^" + std::to_string(i);
}

// Homology basis of the n-dimensional quadric, n >= 2. Generators are the
// powers of the hyperplane class down to the middle degree, then the
// half-dimensional classes (one for odd n, the pair a, b for even n), then
// their products with powers of the hyperplane class down to the point.
GradedBasis quadric_basis(int n)
{
    int m = n / 2;
    std::vector<Generator> gens;
    if (n % 2 == 1) {
        for (int i = 0; i <= m; ++i) gens.push_back({h_label(i), 2 * n - 2 * i});
        gens.push_back({"a", n - 1});
        for (int j = 1; j + 1 <= m; ++j) gens.push_back({"a.h^" + std::to_string(j), n - 1 - 2 * j});
        if (m >= 1) gens.push_back({"pt", 0});
    } else {
        for (int i = 0; i <= m - 1; ++i) gens.push_back({h_label(i), 2 * n - 2 * i});
        gens.push_back({"a", n});
        gens.push_back({"b", n});
        for (int j = 1; j + 1 <= m; ++j) gens.push_back({"a.h^" + std::to_string(j), n - 2 * j});
        gens.push_back({"pt", 0});
    }
    return GradedBasis(std::move(gens));
}

// Quantum intersection product with the hyperplane class on the quadric.
// Classical except on the degree-2 and degree-0 generators, where one
// quantum correction each appears.
GradedMap quadric_h_product(int n, Ring ring)
{
    int m = n / 2;
    GradedBasis basis = quadric_basis(n);
    NovikovGrading grading = NovikovGrading::periodic(2 * n);
    std::vector<MapEntry> e;
    if (n % 2 == 1) {
        for (int i = 0; i + 1 <= m; ++i) e.push_back({h_label(i), h_label(i + 1), 1});
        e.push_back({h_label(m), "a", 2});  // h^(m+1) = 2a
        auto a_chain = [&](int j) {
            return j == 0 ? std::string("a") : (j == m ? std::string("pt") : "a.h^" + std::to_string(j));
        };
        for (int j = 0; j + 1 <= m - 1; ++j) e.push_back({a_chain(j), a_chain(j + 1), 1});
        e.push_back({a_chain(m - 1), "pt", 1});
        e.push_back({a_chain(m - 1), h_label(0), 1});  // quantum part of the degree-2 class
        e.push_back({"pt", h_label(1), 1});
    } else {
        for (int i = 0; i + 1 <= m - 1; ++i) e.push_back({h_label(i), h_label(i + 1), 1});
        e.push_back({h_label(m - 1), "a", 1});  // h^m = a + b
        e.push_back({h_label(m - 1), "b", 1});
        auto a_chain = [&](int j) {
            return j == m ? std::string("pt") : "a.h^" + std::to_string(j);
        };
        if (m >= 2) {
            e.push_back({"a", "a.h^1", 1});
            e.push_back({"b", "a.h^1", 1});
            for (int j = 1; j + 1 <= m - 1; ++j) e.push_back({a_chain(j), a_chain(j + 1), 1});
            e.push_back({a_chain(m - 1), "pt", 1});
            e.push_back({a_chain(m - 1), h_label(0), 1});
            e.push_back({"pt", h_label(1), 1});
        } else {
            // Middle classes already sit in degree 2; the quantum correction
            // lands on them symmetrically, and the point maps to a + b.
            e.push_back({"a", "pt", 1});
            e.push_back({"a", h_label(0), 1});
            e.push_back({"b", "pt", 1});
            e.push_back({"b", h_label(0), 1});
            e.push_back({"pt", "a", 1});
            e.push_back({"pt", "b", 1});
        }
    }
    return GradedMap(basis, basis, -2, grading, ring, std::move(e));
}

GradedBasis hypersurface_top_basis(int n)
{
    std::vector<Generator> gens;
    for (int i = 0; i <= n - 1; ++i)
        gens.push_back({"x^" + std::to_string(i), 2 * n - 2 * i - 2});
    gens.push_back({"y", 0});
    std::size_t prim = primitive_middle_rank(n, n + 1);
    for (std::size_t j = 1; j <= prim; ++j)
        gens.push_back({"u^" + std::to_string(j), n});
    return GradedBasis(std::move(gens));
}

} // namespace

GysinProblem preset_unit_cotangent_sphere(int k)
{
    if (k < 2)
        throw Error(ErrorKind::DomainError, "unit cotangent bundle preset needs k >= 2");

    GysinProblem p;
    p.ring = Ring::Z;
    p.metadata.m_w = 1;
    p.metadata.k_const = 1;

    if (k == 2) {
        // Diagonal model: two critical points in degrees 0 and 2, deg T = 2,
        // and the sphere count contributes 2 * T^{-1} * id.
        p.label = "unit-cotangent-sphere(k=2)";
        p.grading = NovikovGrading::periodic(2);
        p.dim_sigma = 2;
        p.basis = GradedBasis({{"p^0", 0}, {"p^1", 2}});
        GradedMap quantum_cap(p.basis, p.basis, -2, p.grading, p.ring,
                              {{"p^1", "p^0", -2}, {"p^0", "p^1", -2}});
        p.delta_c_coeff = 2;
        p.delta = add(quantum_cap,
                      scalar_tpower_identity(p.basis, p.grading, p.ring, p.delta_c_coeff, -1));
        return p;
    }

    int n = k - 1;
    p.label = "unit-cotangent-sphere(k=" + std::to_string(k) + ")";
    p.grading = NovikovGrading::periodic(2 * n);
    p.dim_sigma = 2 * n;
    p.delta = scale(-1, quadric_h_product(n, p.ring));
    p.basis = p.delta.source();
    return p;
}

Int hypersurface_euler_characteristic(int n, int d)
{
    if (n < 1 || d < 1)
        throw Error(ErrorKind::DomainError, "Euler characteristic needs n >= 1 and d >= 1");
    Int t = int_pow(Int(1 - d), n + 2) - 1;
    return t / d + (n + 2);
}

std::size_t primitive_middle_rank(int n, int d)
{
    Int chi = hypersurface_euler_characteristic(n, d);
    Int b = n % 2 == 0 ? chi - (n + 1) : (n + 1) - chi;
    if (b < 0)
        throw Error(ErrorKind::Internal, "negative primitive rank");
    return static_cast<std::size_t>(b.convert_to<long long>());
}

GysinProblem preset_hypersurface_complement(int n, int d, Ring ring)
{
    if (n < 0 || d < 1 || d > n + 1)
        throw Error(ErrorKind::DomainError, "hypersurface complement needs 0 <= n and 1 <= d <= n+1");
    bool top_degree = d == n + 1 && n >= 1;
    if ((d >= 3 || top_degree) && ring != Ring::Q)
        throw Error(ErrorKind::DomainError,
                    top_degree ? "degree n+1 hypersurface complements are rational-only: "
                                 "no integral basis is known for the eigenvector encoding"
                               : "hypersurface complements of degree >= 3 are rational-only");

    GysinProblem p;
    std::ostringstream label;
    label << "hypersurface-complement(n=" << n << ",d=" << d << "," << ring_name(ring) << ")";
    p.label = label.str();
    p.ring = ring;
    p.dim_sigma = 2 * n;
    p.metadata.m_w = d;
    p.metadata.k_const = d;

    if (d == 1 && n == 0) {
        // A point in the projective line: only the sphere count survives.
        p.grading = NovikovGrading::periodic(2);
        p.basis = GradedBasis({{"pt", 0}});
        p.delta_c_coeff = 1;
        p.delta = scalar_tpower_identity(p.basis, p.grading, p.ring, p.delta_c_coeff, -1);
        return p;
    }

    if (d == 1) {
        // Projective n-space: powers of the hyperplane class, with the top
        // quantum power wrapping to the fundamental class.
        p.grading = NovikovGrading::periodic(2 * (n + 1));
        std::vector<Generator> gens;
        for (int i = 0; i <= n; ++i) gens.push_back({h_label(i), 2 * n - 2 * i});
        p.basis = GradedBasis(std::move(gens));
        std::vector<MapEntry> e;
        for (int i = 0; i + 1 <= n; ++i) e.push_back({h_label(i), h_label(i + 1), -1});
        e.push_back({h_label(n), h_label(0), -1});
        p.delta = GradedMap(p.basis, p.basis, -2, p.grading, p.ring, std::move(e));
        return p;
    }

    if (d == 2 && n >= 2) {
        p.grading = NovikovGrading::periodic(2 * n);
        p.delta = scale(-2, quadric_h_product(n, ring));
        p.basis = p.delta.source();
        return p;
    }

    if (d <= n) {
        // Quantum-power basis e^i = (hyperplane)^(*i) plus primitive middle
        // classes; the single wrap relation makes the map banded.
        p.grading = NovikovGrading::periodic(2 * (n - d + 2));
        std::vector<Generator> gens;
        for (int i = 0; i <= n; ++i) gens.push_back({"e^" + std::to_string(i), 2 * n - 2 * i});
        std::size_t prim = primitive_middle_rank(n, d);
        for (std::size_t j = 1; j <= prim; ++j) gens.push_back({"u^" + std::to_string(j), n});
        p.basis = GradedBasis(std::move(gens));
        std::vector<MapEntry> e;
        for (int i = 0; i + 1 <= n; ++i)
            e.push_back({"e^" + std::to_string(i), "e^" + std::to_string(i + 1), -d});
        e.push_back({"e^" + std::to_string(n), "e^" + std::to_string(d - 1),
                     Rat(-int_pow(Int(d), d + 1))});
        p.delta = GradedMap(p.basis, p.basis, -2, p.grading, p.ring, std::move(e));
        return p;
    }

    // d = n + 1: lower-triangular encoding in the eigenvector-style basis,
    // with the sphere-count correction folded into the diagonal.
    p.grading = NovikovGrading::periodic(2);
    p.basis = hypersurface_top_basis(n);
    Int diag = factorial(n + 2);
    Int beta = factorial(n + 2) - int_pow(Int(n + 1), n + 2);
    std::vector<MapEntry> e;
    for (int i = 0; i <= n - 1; ++i) {
        std::string xi = "x^" + std::to_string(i);
        e.push_back({xi, xi, Rat(diag)});
        if (i + 1 <= n - 1) e.push_back({xi, "x^" + std::to_string(i + 1), -(n + 1)});
    }
    e.push_back({"y", "y", Rat(beta)});
    std::size_t prim = primitive_middle_rank(n, n + 1);
    for (std::size_t j = 1; j <= prim; ++j)
        e.push_back({"u^" + std::to_string(j), "u^" + std::to_string(j), Rat(diag)});
    p.delta = GradedMap(p.basis, p.basis, -2, p.grading, p.ring, std::move(e));
    p.delta_c_coeff = Rat(factorial(n + 1));
    return p;
}

GradedMap hypersurface_top_delta_from_relations(int n)
{
    if (n < 1)
        throw Error(ErrorKind::DomainError, "needs n >= 1");
    GradedBasis basis = hypersurface_top_basis(n);
    NovikovGrading grading = NovikovGrading::periodic(2);
    Int nf = factorial(n + 1);
    // Quantum product with the hyperplane class in the eigenvector basis.
    std::vector<MapEntry> e;
    for (int i = 0; i <= n - 1; ++i) {
        std::string xi = "x^" + std::to_string(i);
        e.push_back({xi, xi, Rat(-nf)});
        if (i + 1 <= n - 1) e.push_back({xi, "x^" + std::to_string(i + 1), 1});
    }
    e.push_back({"y", "y", Rat(int_pow(Int(n + 1), n + 1) - nf)});
    std::size_t prim = primitive_middle_rank(n, n + 1);
    for (std::size_t j = 1; j <= prim; ++j)
        e.push_back({"u^" + std::to_string(j), "u^" + std::to_string(j), Rat(-nf)});
    GradedMap h_star(basis, basis, -2, grading, Ring::Q, std::move(e));
    GradedMap sphere_term = scalar_tpower_identity(basis, grading, Ring::Q, Rat(nf), -1);
    return add(scale(-(n + 1), h_star), sphere_term);
}

GysinProblem preset_flag_f3(Ring ring)
{
    GysinProblem p;
    p.label = std::string("flag-f3(") + ring_name(ring) + ")";
    p.ring = ring;
    p.grading = NovikovGrading::periodic(4);
    p.dim_sigma = 6;
    p.metadata.m_w = 1;
    p.metadata.k_const = 1;
    p.basis = GradedBasis({{"pt", 0}, {"a^2", 2}, {"b^2", 2}, {"a", 4}, {"b", 4}, {"F3", 6}});
    // Quantum product with -(a + b), expanded from the flag-manifold ring
    // relations; the Euler class of the bundle is Poincare dual to a + b.
    std::vector<MapEntry> e = {
        {"F3", "a", -1},
        {"F3", "b", -1},
        {"a", "a^2", -2},
        {"a", "b^2", -1},
        {"a", "F3", -1},
        {"b", "a^2", -1},
        {"b", "b^2", -2},
        {"b", "F3", -1},
        {"a^2", "b", -1},
        {"a^2", "pt", -1},
        {"b^2", "a", -1},
        {"b^2", "pt", -1},
        {"pt", "a^2", -1},
        {"pt", "b^2", -1},
        {"pt", "F3", -2},
    };
    p.delta = GradedMap(p.basis, p.basis, -2, p.grading, p.ring, std::move(e));
    return p;
}

GysinProblem preset_classical_circle_bundle(const std::string& label, const GradedBasis& basis,
                                            const GradedMap& cap_map, int dim_sigma,
                                            std::optional<GradedMap> boundary)
{
    if (cap_map.shift() != -2 || cap_map.source() != basis || cap_map.target() != basis)
        throw Error(ErrorKind::ShapeMismatch, "cap map must be a shift -2 endomorphism of the basis");
    if (cap_map.grading().is_periodic())
        throw Error(ErrorKind::ShapeMismatch, "classical problems use the trivial grading");
    GysinProblem p;
    p.label = label;
    p.ring = cap_map.ring();
    p.grading = NovikovGrading::trivial();
    p.dim_sigma = dim_sigma;
    p.basis = basis;
    p.delta = cap_map;
    p.boundary = std::move(boundary);
    return p;
}

GysinProblem preset_classical_lens(int k)
{
    if (k < 0)
        throw Error(ErrorKind::DomainError, "Euler number parameter must be >= 0 (bundle e = -k)");
    GradedBasis basis({{"h^0", 2}, {"h^1", 0}});
    GradedMap cap(basis, basis, -2, NovikovGrading::trivial(), Ring::Z,
                  {{"h^0", "h^1", -k}});
    return preset_classical_circle_bundle("classical-lens(k=" + std::to_string(k) + ")", basis, cap,
                                          2);
}

std::vector<PresetInfo> list_presets()
{
    return {
        {"classical-lens", "k >= 0 (circle bundle over the projective line, Euler number -k)"},
        {"flag-f3", "ring = Q | Z (default Q)"},
        {"hypersurface-complement", "n >= 0, 1 <= d <= n+1, ring = Z | Q (d >= 3 requires Q)"},
        {"unit-cotangent-sphere", "k >= 2 (ring Z)"},
    };
}

namespace {

int param_int(const std::map<std::string, std::string>& params, const std::string& key)
{
    auto it = params.find(key);
    if (it == params.end())
        throw Error(ErrorKind::DomainError, "missing preset parameter --" + key);
    try {
        std::size_t pos = 0;
        int v = std::stoi(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::DomainError, "parameter --" + key + " must be an integer");
    }
}

} // namespace

GysinProblem make_preset(const std::string& name, const std::map<std::string, std::string>& params)
{
    auto ring_or = [&](Ring fallback) {
        auto it = params.find("ring");
        return it == params.end() ? fallback : ring_from_string(it->second);
    };
    if (name == "unit-cotangent-sphere") return preset_unit_cotangent_sphere(param_int(params, "k"));
    if (name == "hypersurface-complement") {
        int n = param_int(params, "n");
        int d = param_int(params, "d");
        return preset_hypersurface_complement(n, d, ring_or(d >= 3 ? Ring::Q : Ring::Z));
    }
    if (name == "flag-f3") return preset_flag_f3(ring_or(Ring::Q));
    if (name == "classical-lens") return preset_classical_lens(param_int(params, "k"));
    throw Error(ErrorKind::DomainError, "unknown preset \"" + name + "\"");
}

std::vector<GysinProblem> all_test_presets()
{
    std::vector<GysinProblem> out;
    for (int k = 2; k <= 6; ++k) out.push_back(preset_unit_cotangent_sphere(k));
    for (int n = 0; n <= 3; ++n) out.push_back(preset_hypersurface_complement(n, 1, Ring::Z));
    for (int n = 2; n <= 5; ++n) out.push_back(preset_hypersurface_complement(n, 2, Ring::Z));
    out.push_back(preset_hypersurface_complement(3, 3, Ring::Q));
    out.push_back(preset_hypersurface_complement(4, 3, Ring::Q));
    out.push_back(preset_hypersurface_complement(4, 4, Ring::Q));
    out.push_back(preset_hypersurface_complement(5, 3, Ring::Q));
    for (int n = 1; n <= 4; ++n) out.push_back(preset_hypersurface_complement(n, n + 1, Ring::Q));
    out.push_back(preset_flag_f3(Ring::Q));
    out.push_back(preset_flag_f3(Ring::Z));
    return out;
}

} // namespace rfh
