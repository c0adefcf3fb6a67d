#include "gradsym/charts.hpp"

#include "gradsym/errors.hpp"

namespace gradsym {

namespace {

Scalar var(int n, int i) { return Scalar::variable(n, i); }
Scalar num(int n, long v) { return Scalar(n, Rational(v)); }

// Conformal factor 4/(1+u^2+v^2)^2 of the stereographic round sphere.
Scalar sphere_factor(int n, int u, int v) {
  return num(n, 4) / (num(n, 1) + var(n, u) * var(n, u) + var(n, v) * var(n, v)).pow(2);
}

// Metric f*I and symplectic form f dx^{2k} ^ dx^{2k+1} on each coordinate pair.
ChartGeometry conformal_pairs(const std::string& name, std::vector<std::string> coords,
                              const std::vector<Scalar>& factors) {
  const int n = static_cast<int>(coords.size());
  Matrix g = zero_matrix(n, n, n), w = zero_matrix(n, n, n);
  for (int k = 0; k < n / 2; ++k) {
    const Scalar& f = factors[k];
    g[2 * k][2 * k] = f;
    g[2 * k + 1][2 * k + 1] = f;
    w[2 * k][2 * k + 1] = f;
    w[2 * k + 1][2 * k] = -f;
  }
  return ChartGeometry(name, std::move(coords), std::move(g), std::move(w));
}

// Fubini-Study metric on the affine chart C^m of CP^m, real coordinates
// (x1, y1, ..., xm, ym). With h_{jk} = (delta_{jk}(1+|z|^2) - conj(z_j) z_k)/(1+|z|^2)^2,
// g = Re h and w = -Im h in the real frame.
ChartGeometry fubini_study(const std::string& name, int m) {
  const int n = 2 * m;
  Scalar r2 = num(n, 1);
  for (int i = 0; i < n; ++i) r2 += var(n, i) * var(n, i);
  const Scalar scale = r2.pow(2).inverse();
  Matrix g = zero_matrix(n, n, n), w = zero_matrix(n, n, n);
  std::vector<std::string> coords;
  for (int j = 0; j < m; ++j) {
    coords.push_back("x" + std::to_string(j + 1));
    coords.push_back("y" + std::to_string(j + 1));
    for (int k = 0; k < m; ++k) {
      const Scalar xj = var(n, 2 * j), yj = var(n, 2 * j + 1), xk = var(n, 2 * k), yk = var(n, 2 * k + 1);
      const Scalar re = ((j == k ? r2 : num(n, 0)) - (xj * xk + yj * yk)) * scale;
      const Scalar im = (yj * xk - xj * yk) * scale;
      g[2 * j][2 * k] = re;
      g[2 * j + 1][2 * k + 1] = re;
      g[2 * j][2 * k + 1] = im;
      g[2 * j + 1][2 * k] = -im;
      w[2 * j][2 * k] = -im;
      w[2 * j][2 * k + 1] = re;
      w[2 * j + 1][2 * k] = -re;
      w[2 * j + 1][2 * k + 1] = -im;
    }
  }
  return ChartGeometry(name, std::move(coords), std::move(g), std::move(w));
}

}  // namespace

const std::vector<BuiltinChartInfo>& builtin_charts() {
  static const std::vector<BuiltinChartInfo> charts = {
      {"flat2", "R^2, g = dx^2 + dy^2, w = dx^dy (Kahler, R = 0)", ChartKind::kahler},
      {"flat4", "R^4, Euclidean metric, w = dx^dy + dz^dw (Kahler product, R = 0)", ChartKind::kahler},
      {"sphere2", "stereographic S^2, g = 4(dx^2+dy^2)/(1+x^2+y^2)^2, matching area form (Kahler)",
       ChartKind::kahler},
      {"halfplane", "hyperbolic half-plane, g = (dx^2+dy^2)/y^2, w = dx^dy/y^2 (Kahler)", ChartKind::kahler},
      {"sphere2x2", "S^2 x S^2 in stereographic coordinates (Kahler, dimension 4, R != 0)", ChartKind::kahler},
      {"cp2", "CP^2 with the Fubini-Study metric on an affine chart (Kahler, dimension 4, irreducible R)",
       ChartKind::kahler},
      {"tlift1", "tangent bundle of R with g = dq^2 (para-Kahler)", ChartKind::para_kahler},
      {"tlift1q", "tangent bundle of R with g = (1+q^2) dq^2 (para-Kahler)", ChartKind::para_kahler},
  };
  return charts;
}

const BuiltinChartInfo& builtin_chart_info(const std::string& name) {
  for (const auto& c : builtin_charts())
    if (c.name == name) return c;
  throw UsageError("unknown built-in chart '" + name + "'");
}

Matrix builtin_base_metric(const std::string& name) {
  if (name == "tlift1") return Matrix{{num(2, 1)}};
  if (name == "tlift1q") return Matrix{{num(2, 1) + var(2, 0) * var(2, 0)}};
  return {};
}

ChartGeometry builtin_chart(const std::string& name) {
  builtin_chart_info(name);
  if (name == "flat2") return conformal_pairs(name, {"x", "y"}, {num(2, 1)});
  if (name == "flat4") return conformal_pairs(name, {"x", "y", "z", "w"}, {num(4, 1), num(4, 1)});
  if (name == "sphere2") return conformal_pairs(name, {"x", "y"}, {sphere_factor(2, 0, 1)});
  if (name == "halfplane") return conformal_pairs(name, {"x", "y"}, {(var(2, 1) * var(2, 1)).inverse()});
  if (name == "sphere2x2")
    return conformal_pairs(name, {"x", "y", "z", "w"}, {sphere_factor(4, 0, 1), sphere_factor(4, 2, 3)});
  if (name == "cp2") return fubini_study(name, 2);
  return tangent_lift_chart(name, 1, builtin_base_metric(name));
}

}  // namespace gradsym
