#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>

#include "sqm/expr.hpp"
#include "sqm/jet.hpp"

namespace sqm {

enum class Boundary { Periodic, Dirichlet };

/// A parametric surface patch (s1, s2) -> E^3 on [0,L1] x [0,L2].
///
/// The embedding is supplied as a jet evaluator returning the three
/// coordinates with exact first and second partials; expression-backed
/// patches route through the DSL, tests may wrap arbitrary evaluators
/// (e.g. rigid motions of another patch).
struct SurfacePatch {
    using Evaluator = std::function<std::array<Jet2, 3>(double s1, double s2)>;

    std::string name;
    Evaluator evaluate;
    double L1 = 1.0, L2 = 1.0;
    Boundary bc1 = Boundary::Dirichlet;
    Boundary bc2 = Boundary::Dirichlet;
    /// Degeneracy threshold on |e1 x e2| (domain units assumed O(1)).
    double immersion_tol = 1e-12;
};

/// Build a patch from three coordinate expression strings. Symbols are
/// validated against {s1, s2} + params up front.
SurfacePatch make_patch(const std::string& name, const std::string& x_expr,
                        const std::string& y_expr, const std::string& z_expr, double L1,
                        double L2, Boundary bc1, Boundary bc2,
                        const std::map<std::string, double>& params);

} // namespace sqm
