#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace qrel {

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
};

/// Downhill-simplex minimization of f over R^n, no derivatives. The initial
/// simplex is x0 plus one vertex per coordinate displaced by `step`. Stops
/// when the simplex value spread falls below ftol or after max_iter steps.
inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    std::vector<double> x0, double step, double ftol,
                                    int max_iter) {
    const size_t n = x0.size();
    std::vector<std::vector<double>> verts(n + 1, x0);
    for (size_t i = 0; i < n; ++i) verts[i + 1][i] += step;
    std::vector<double> fv(n + 1);
    for (size_t i = 0; i <= n; ++i) fv[i] = f(verts[i]);

    const double alpha = 1.0, gamma = 2.0, beta = 0.5, delta = 0.5;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        std::vector<size_t> ord(n + 1);
        std::iota(ord.begin(), ord.end(), size_t{0});
        std::sort(ord.begin(), ord.end(), [&](size_t a, size_t b) { return fv[a] < fv[b]; });
        const size_t best = ord[0], worst = ord[n], second = ord[n - 1];
        if (std::abs(fv[worst] - fv[best]) <= ftol) break;

        std::vector<double> centroid(n, 0.0);
        for (size_t k = 0; k <= n; ++k) {
            if (k == worst) continue;
            for (size_t i = 0; i < n; ++i) centroid[i] += verts[k][i];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double t) {
            std::vector<double> p(n);
            for (size_t i = 0; i < n; ++i) p[i] = centroid[i] + t * (centroid[i] - verts[worst][i]);
            return p;
        };

        std::vector<double> xr = blend(alpha);
        const double fr = f(xr);
        if (fr < fv[best]) {
            std::vector<double> xe = blend(gamma);
            const double fe = f(xe);
            if (fe < fr) {
                verts[worst] = std::move(xe);
                fv[worst] = fe;
            } else {
                verts[worst] = std::move(xr);
                fv[worst] = fr;
            }
        } else if (fr < fv[second]) {
            verts[worst] = std::move(xr);
            fv[worst] = fr;
        } else {
            const bool outside = fr < fv[worst];
            std::vector<double> xc = blend(outside ? beta : -beta);
            const double fc = f(xc);
            if (fc < (outside ? fr : fv[worst])) {
                verts[worst] = std::move(xc);
                fv[worst] = fc;
            } else {
                // Shrink toward the best vertex.
                for (size_t k = 0; k <= n; ++k) {
                    if (k == best) continue;
                    for (size_t i = 0; i < n; ++i)
                        verts[k][i] = verts[best][i] + delta * (verts[k][i] - verts[best][i]);
                    fv[k] = f(verts[k]);
                }
            }
        }
    }

    size_t best = 0;
    for (size_t k = 1; k <= n; ++k)
        if (fv[k] < fv[best]) best = k;
    return {verts[best], fv[best], iter};
}

}  // namespace qrel
