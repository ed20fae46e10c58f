#include "irrev/models.hpp"

#include <cmath>

namespace irrev {

namespace {

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

} // namespace

Mat3 se2_exp(double omega, const Vec2& u) {
    double cw = std::cos(omega), sw = std::sin(omega);
    // V(omega) = (sin w / w) I + ((1 - cos w)/w) J, V(0) = I
    double v00, v01;
    if (omega == 0.0) {
        v00 = 1.0;
        v01 = 0.0;
    } else {
        v00 = sw / omega;
        v01 = (1.0 - cw) / omega;
    }
    // V = [[v00, -v01], [v01, v00]]
    Mat3 m{};
    m[0][0] = cw;  m[0][1] = -sw; m[0][2] = v00 * u[0] - v01 * u[1];
    m[1][0] = sw;  m[1][1] = cw;  m[1][2] = v01 * u[0] + v00 * u[1];
    m[2][0] = 0.0; m[2][1] = 0.0; m[2][2] = 1.0;
    return m;
}

SE2Momentum se2_coadjoint(const GroupElementSE2& g, const SE2Momentum& mu) {
    double cw = std::cos(g.angle), sw = std::sin(g.angle);
    // R p + zeta J v, with J = [[0,-1],[1,0]]
    SE2Momentum out;
    out.zeta = mu.zeta;
    out.p[0] = cw * mu.p[0] - sw * mu.p[1] - mu.zeta * g.translation[1];
    out.p[1] = sw * mu.p[0] + cw * mu.p[1] + mu.zeta * g.translation[0];
    return out;
}

GalileiMomentum galilei_coadjoint_algebra(const GalileiAlgebraElement& xi,
                                          const GalileiMomentum& mu) {
    GalileiMomentum out;
    Vec3 a = cross(xi.xi, mu.zeta);
    Vec3 b = cross(xi.beta, mu.g);
    Vec3 c = cross(xi.gamma, mu.p);
    for (int i = 0; i < 3; ++i) out.zeta[i] = -a[i] - b[i] - c[i];
    Vec3 xg = cross(xi.xi, mu.g);
    for (int i = 0; i < 3; ++i) out.g[i] = -xg[i] - xi.eps * mu.p[i];
    Vec3 xp = cross(xi.xi, mu.p);
    for (int i = 0; i < 3; ++i) out.p[i] = -xp[i];
    out.E = dot(xi.beta, mu.p);
    return out;
}

} // namespace irrev
