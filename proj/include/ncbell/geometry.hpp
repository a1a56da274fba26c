#pragma once

// Measurement shapes: sets of antipodal Bloch-vector pairs (binary-outcome
// qubit measurements), and the operational identities their effects satisfy.
//
// Index conventions, frozen project-wide:
//   effect index        (a, x)  ->  2*x + a          (setting-major)
//   effects             E_{a|x} = (1 + (-1)^a m_x.sigma)/2
//   operator basis for vectorization: {1, sx, sy, sz} (identities are
//   invariant under any fixed choice; this one keeps rational shapes rational).

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ncbell/errors.hpp"
#include "ncbell/exact_matrix.hpp"
#include "ncbell/scalar.hpp"

namespace ncbell {

struct BlochVector {
    double x = 0, y = 0, z = 0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    BlochVector operator-() const { return {-x, -y, -z}; }
    double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }
};

enum class ShapeName { Square, Octahedron, Cube, Icosahedron, Dodecahedron };

enum class ArithMode { Rational, Golden, Float };

inline std::string to_string(ShapeName n) {
    switch (n) {
        case ShapeName::Square: return "square";
        case ShapeName::Octahedron: return "octahedron";
        case ShapeName::Cube: return "cube";
        case ShapeName::Icosahedron: return "icosahedron";
        case ShapeName::Dodecahedron: return "dodecahedron";
    }
    return "?";
}

inline std::optional<ShapeName> shape_name_from_string(const std::string& s) {
    if (s == "square") return ShapeName::Square;
    if (s == "octahedron") return ShapeName::Octahedron;
    if (s == "cube") return ShapeName::Cube;
    if (s == "icosahedron") return ShapeName::Icosahedron;
    if (s == "dodecahedron") return ShapeName::Dodecahedron;
    return std::nullopt;
}

// Exact outcome-0 direction vectors, uniformly scaled per shape (the common
// positive norm factors out of every identity and polytope computation).
template <class S>
using ExactVectors = std::vector<std::array<S, 3>>;

struct MeasurementShape {
    std::string name;                                   // label, may be "custom"
    std::optional<ShapeName> builtin;                   // set for named shapes
    std::vector<std::array<BlochVector, 2>> settings;   // [outcome 0, outcome 1]

    std::size_t num_settings() const { return settings.size(); }
    static constexpr int num_outcomes = 2;

    ArithMode mode() const {
        if (!builtin) return ArithMode::Float;
        switch (*builtin) {
            case ShapeName::Icosahedron:
            case ShapeName::Dodecahedron: return ArithMode::Golden;
            default: return ArithMode::Rational;
        }
    }
};

namespace detail {

inline constexpr double kUnitTol = 1e-12;

inline void validate_settings(const std::vector<std::array<BlochVector, 2>>& settings) {
    if (settings.empty()) throw InvalidShapeError("shape has no settings");
    for (std::size_t i = 0; i < settings.size(); ++i) {
        const auto& [v0, v1] = settings[i];
        if (std::fabs(v0.norm() - 1.0) > kUnitTol || std::fabs(v1.norm() - 1.0) > kUnitTol)
            throw InvalidShapeError("setting " + std::to_string(i) + ": vector is not unit norm");
        BlochVector s{v0.x + v1.x, v0.y + v1.y, v0.z + v1.z};
        if (s.norm() > kUnitTol)
            throw InvalidShapeError("setting " + std::to_string(i) + ": outcomes are not antipodal");
    }
    for (std::size_t i = 0; i < settings.size(); ++i)
        for (std::size_t j = i + 1; j < settings.size(); ++j) {
            BlochVector a = settings[i][0];
            for (const auto& b : {settings[j][0], settings[j][1]}) {
                BlochVector diff{a.x - b.x, a.y - b.y, a.z - b.z};
                if (diff.norm() < kUnitTol)
                    throw InvalidShapeError("settings " + std::to_string(i) + " and " +
                                            std::to_string(j) + " share a vector pair");
            }
        }
}

inline ExactVectors<Rational> rational_vectors(ShapeName n) {
    auto R = [](long v) { return Rational(v); };
    switch (n) {
        case ShapeName::Square:
            // orientation frozen to +-x, +-z
            return {{R(1), R(0), R(0)}, {R(0), R(0), R(1)}};
        case ShapeName::Octahedron:
            return {{R(1), R(0), R(0)}, {R(0), R(1), R(0)}, {R(0), R(0), R(1)}};
        case ShapeName::Cube:
            return {{R(1), R(1), R(1)},
                    {R(1), R(1), R(-1)},
                    {R(1), R(-1), R(1)},
                    {R(1), R(-1), R(-1)}};
        default: throw InvalidShapeError("shape has no rational coordinates");
    }
}

inline ExactVectors<Golden> golden_vectors(ShapeName n) {
    Golden ZERO(0), ONE(1), PHI = Golden::phi();
    Golden INVPHI = PHI - ONE;  // 1/phi = phi - 1
    switch (n) {
        case ShapeName::Icosahedron:
            // common norm sqrt(1+phi^2)
            return {{ZERO, ONE, PHI},  {ZERO, ONE, -PHI}, {ONE, PHI, ZERO},
                    {ONE, -PHI, ZERO}, {PHI, ZERO, ONE},  {PHI, ZERO, -ONE}};
        case ShapeName::Dodecahedron:
            // common norm sqrt(3)
            return {{-ONE, -ONE, -ONE},     {-PHI, INVPHI, ZERO}, {-PHI, -INVPHI, ZERO},
                    {-ONE, -ONE, ONE},      {ZERO, -PHI, INVPHI}, {ONE, -ONE, -ONE},
                    {ZERO, -PHI, -INVPHI},  {-ONE, ONE, -ONE},    {-INVPHI, ZERO, -PHI},
                    {INVPHI, ZERO, -PHI}};
        default: throw InvalidShapeError("shape has no golden-ratio coordinates");
    }
}

template <class S>
std::vector<std::array<BlochVector, 2>> settings_from_exact(const ExactVectors<S>& vs) {
    std::vector<std::array<BlochVector, 2>> out;
    for (const auto& v : vs) {
        double x = to_double(v[0]), y = to_double(v[1]), z = to_double(v[2]);
        double n = std::sqrt(x * x + y * y + z * z);
        BlochVector m{x / n, y / n, z / n};
        out.push_back({m, -m});
    }
    return out;
}

// Effect matrix: 4 rows (operator basis {1, sx, sy, sz}), 2*Delta columns
// indexed 2*x+a. Column for E_{a|x} is (1, (-1)^a m_x)/2; the overall 1/2 and
// the shape's common norm factor are dropped (they do not change the null space).
template <class S>
Matrix<S> effect_matrix(const ExactVectors<S>& vs) {
    Matrix<S> m(4, Row<S>(2 * vs.size(), S(0)));
    for (std::size_t x = 0; x < vs.size(); ++x)
        for (int a = 0; a < 2; ++a) {
            S sgn = a == 0 ? S(1) : S(-1);
            m[0][2 * x + a] = S(1);
            for (int c = 0; c < 3; ++c) m[1 + c][2 * x + a] = sgn * vs[x][c];
        }
    return m;
}

inline ExactVectors<double> float_vectors(const MeasurementShape& shape) {
    ExactVectors<double> vs;
    for (const auto& s : shape.settings) vs.push_back({s[0].x, s[0].y, s[0].z});
    return vs;
}

}  // namespace detail

inline MeasurementShape make_shape(ShapeName name) {
    MeasurementShape s;
    s.name = to_string(name);
    s.builtin = name;
    switch (name) {
        case ShapeName::Square:
        case ShapeName::Octahedron:
        case ShapeName::Cube:
            s.settings = detail::settings_from_exact(detail::rational_vectors(name));
            break;
        case ShapeName::Icosahedron:
        case ShapeName::Dodecahedron:
            s.settings = detail::settings_from_exact(detail::golden_vectors(name));
            break;
    }
    return s;
}

inline MeasurementShape make_shape(const std::string& name) {
    auto n = shape_name_from_string(name);
    if (!n) throw InvalidShapeError("unknown shape name: " + name);
    return make_shape(*n);
}

inline MeasurementShape make_shape(std::vector<std::array<BlochVector, 2>> settings,
                                   std::string label = "custom") {
    detail::validate_settings(settings);
    MeasurementShape s;
    s.name = std::move(label);
    s.settings = std::move(settings);
    return s;
}

// custom shape from outcome-0 directions; antipodes are implied
inline MeasurementShape make_shape(const std::vector<BlochVector>& directions,
                                   std::string label = "custom") {
    std::vector<std::array<BlochVector, 2>> settings;
    for (const auto& v : directions) settings.push_back({v, -v});
    return make_shape(std::move(settings), std::move(label));
}

// ---------------------------------------------------------------------------

enum class IdentityKind { Trivial, Nontrivial };

struct IdentityRow {
    std::vector<double> coeffs;  // index 2*x + a
    IdentityKind kind = IdentityKind::Trivial;
};

struct OperationalIdentitySet {
    std::size_t num_settings = 0;
    std::vector<IdentityRow> rows;  // minimal generating set, trivial rows first

    // exact coefficients mirroring `rows`, present for built-in shapes
    std::variant<std::monostate, Matrix<Rational>, Matrix<Golden>> exact;

    std::size_t size() const { return rows.size(); }
    std::size_t nontrivial_count() const {
        std::size_t n = 0;
        for (const auto& r : rows)
            if (r.kind == IdentityKind::Nontrivial) ++n;
        return n;
    }
};

namespace detail {

// Structured generating set: completeness-difference rows (trivial) first,
// then a completion of the effect-matrix null space reduced modulo them.
template <class S>
Matrix<S> identity_rows(const ExactVectors<S>& vs, std::size_t* trivial_count) {
    const std::size_t delta = vs.size();
    const std::size_t m = 2 * delta;
    Matrix<S> rows;
    for (std::size_t x = 0; x + 1 < delta; ++x) {
        Row<S> t(m, S(0));
        t[2 * x] = S(1);
        t[2 * x + 1] = S(1);
        t[2 * (x + 1)] = S(-1);
        t[2 * (x + 1) + 1] = S(-1);
        rows.push_back(std::move(t));
    }
    *trivial_count = rows.size();

    Matrix<S> ns = null_space(effect_matrix(vs));
    // working copy in rref form for modular reduction
    Matrix<S> red = rows;
    auto pivots = rref_inplace(red);
    for (auto& v : ns) {
        // reduce v modulo current row span
        Row<S> w = v;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            S f = w[pivots[r]];
            if (ScalarOps<S>::is_zero(f)) continue;
            for (std::size_t j = 0; j < m; ++j) w[j] -= f * red[r][j];
        }
        bool zero = true;
        for (const auto& e : w)
            if (!ScalarOps<S>::is_zero(e)) { zero = false; break; }
        if (zero) continue;
        normalize_ray(w);
        rows.push_back(w);
        red.push_back(std::move(w));
        pivots = rref_inplace(red);
    }
    return rows;
}

template <class S>
OperationalIdentitySet build_identity_set(const ExactVectors<S>& vs) {
    std::size_t trivial = 0;
    Matrix<S> rows = identity_rows(vs, &trivial);
    OperationalIdentitySet out;
    out.num_settings = vs.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        IdentityRow r;
        r.kind = i < trivial ? IdentityKind::Trivial : IdentityKind::Nontrivial;
        for (const auto& c : rows[i]) r.coeffs.push_back(to_double(c));
        out.rows.push_back(std::move(r));
    }
    if constexpr (!std::is_same_v<S, double>) out.exact = std::move(rows);
    return out;
}

}  // namespace detail

inline OperationalIdentitySet derive_identities(const MeasurementShape& shape) {
    switch (shape.mode()) {
        case ArithMode::Rational:
            return detail::build_identity_set(detail::rational_vectors(*shape.builtin));
        case ArithMode::Golden:
            return detail::build_identity_set(detail::golden_vectors(*shape.builtin));
        case ArithMode::Float:
            return detail::build_identity_set(detail::float_vectors(shape));
    }
    throw InvalidShapeError("unreachable");
}

// residual of one identity row applied to the shape's effect operators,
// measured as the max-norm of the resulting operator's basis coefficients
inline double identity_residual(const MeasurementShape& shape, const std::vector<double>& coeffs) {
    double acc[4] = {0, 0, 0, 0};
    for (std::size_t x = 0; x < shape.num_settings(); ++x)
        for (int a = 0; a < 2; ++a) {
            double c = coeffs.at(2 * x + a) / 2.0;
            const BlochVector& m = shape.settings[x][a];
            acc[0] += c;
            acc[1] += c * m.x;
            acc[2] += c * m.y;
            acc[3] += c * m.z;
        }
    double r = 0;
    for (double v : acc) r = std::max(r, std::fabs(v));
    return r;
}

}  // namespace ncbell
