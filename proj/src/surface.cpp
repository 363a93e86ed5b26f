#include "sqm/surface.hpp"

#include <set>

namespace sqm {

SurfacePatch make_patch(const std::string& name, const std::string& x_expr,
                        const std::string& y_expr, const std::string& z_expr, double L1,
                        double L2, Boundary bc1, Boundary bc2,
                        const std::map<std::string, double>& params) {
    Expression ex = parse(x_expr);
    Expression ey = parse(y_expr);
    Expression ez = parse(z_expr);

    std::set<std::string> declared;
    for (const auto& [k, v] : params) declared.insert(k);
    ex.validate_symbols(declared);
    ey.validate_symbols(declared);
    ez.validate_symbols(declared);

    SurfacePatch patch;
    patch.name = name;
    patch.L1 = L1;
    patch.L2 = L2;
    patch.bc1 = bc1;
    patch.bc2 = bc2;
    patch.evaluate = [ex, ey, ez, params](double s1, double s2) -> std::array<Jet2, 3> {
        return {ex.eval_jet2(s1, s2, params), ey.eval_jet2(s1, s2, params),
                ez.eval_jet2(s1, s2, params)};
    };
    return patch;
}

} // namespace sqm
