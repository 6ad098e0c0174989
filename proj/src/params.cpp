#include "origon/params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace origon {

namespace {

std::string fmt_deg(double rad) {
    std::ostringstream os;
    os << rad / DEG << " deg";
    return os.str();
}

}  // namespace

std::vector<ValidationIssue> validate(const GadgetParams& p, GadgetMode mode) {
    std::vector<ValidationIssue> out;
    auto fail = [&](const std::string& cond, const std::string& detail) {
        out.push_back({cond, detail});
    };
    const double a = p.alpha, bl = p.beta_l, br = p.beta_r;
    if (!(a > 0.0 && a < PI)) fail("0 < alpha < pi", "alpha = " + fmt_deg(a));
    if (!(a < bl + br)) fail("alpha < beta_l + beta_r", fmt_deg(a) + " !< " + fmt_deg(bl + br));
    if (!(bl < a + br)) fail("beta_l < alpha + beta_r", fmt_deg(bl) + " !< " + fmt_deg(a + br));
    if (!(br < a + bl)) fail("beta_r < alpha + beta_l", fmt_deg(br) + " !< " + fmt_deg(a + bl));
    if (!(a + bl + br < TAU)) fail("alpha + beta_l + beta_r < tau", fmt_deg(a + bl + br));
    if (!(p.scale > 0.0)) fail("scale > 0", "scale = " + std::to_string(p.scale));
    if (mode == GadgetMode::Conventional || mode == GadgetMode::DivisionPreamble) {
        if (!(a + bl + br > PI))
            fail("alpha + beta_l + beta_r > pi", fmt_deg(a + bl + br));
        if (p.delta_l != 0.0 || p.delta_r != 0.0)
            fail("delta_l = delta_r = 0",
                 fmt_deg(p.delta_l) + ", " + fmt_deg(p.delta_r));
    } else {
        for (Side s : kSides) {
            double d = p.delta(s);
            std::string nm = std::string("delta_") + (s == Side::Left ? "l" : "r");
            if (!(d >= 0.0)) fail(nm + " >= 0", fmt_deg(d));
            if (!(d < p.beta(s))) fail(nm + " < beta", fmt_deg(d) + " !< " + fmt_deg(p.beta(s)));
            if (!(d < PI / 2)) fail(nm + " < pi/2", fmt_deg(d));
        }
        if (!(p.gamma() + p.delta_l + p.delta_r < PI))
            fail("gamma + delta_l + delta_r < pi", fmt_deg(p.gamma() + p.delta_l + p.delta_r));
    }
    return out;
}

double gamma_sigma(const GadgetParams& p, Side s) {
    double g = p.gamma();
    double ds = p.delta(s), d_oth = p.delta_other(s);
    // 1 - cos g written as 2 sin^2(g/2): exact at small gamma.
    double num = 2.0 * std::sin(g / 2) * std::sin(g / 2) + std::sin(g) * std::tan(d_oth);
    double den = std::sin(g) + std::cos(g) * std::tan(d_oth) + std::tan(ds);
    return std::atan2(num, den);
}

double r_of(const GadgetParams& p) {
    double gl = gamma_sigma(p, Side::Left);
    return 1.0 / (std::cos(gl) - std::sin(gl) * std::tan(p.delta_l));
}

double lambda_of(const GadgetParams& p) {
    double a = p.alpha, bl = p.beta_l, br = p.beta_r;
    double sa = std::sin(a);
    double v = 1.0 - (std::cos(bl) * std::cos(bl) + std::cos(br) * std::cos(br)
                      - 2.0 * std::cos(a) * std::cos(bl) * std::cos(br)) / (sa * sa);
    return std::sqrt(v);
}

DerivedQuantities derive(const GadgetParams& p) {
    DerivedQuantities d;
    d.gamma = p.gamma();
    d.gamma_l = gamma_sigma(p, Side::Left);
    d.gamma_r = gamma_sigma(p, Side::Right);
    d.r = r_of(p);
    d.lambda = lambda_of(p);
    return d;
}

void require_valid(const GadgetParams& p, GadgetMode mode) {
    auto issues = validate(p, mode);
    if (issues.empty()) return;
    std::ostringstream os;
    os << "invalid parameters:";
    for (const auto& it : issues) os << " [" << it.condition << "] " << it.detail;
    throw std::domain_error(os.str());
}

double theta_arm(const GadgetParams& p, Side s) {
    return -PI / 2 + side_sign(s) * p.gamma() / 2;
}

double theta_ell(const GadgetParams& p, Side s) {
    return theta_arm(p, s) + side_sign(s) * p.delta(s);
}

double theta_j(const GadgetParams& p, Side s) {
    return theta_arm(p, s) + side_sign(s) * p.beta(s);
}

}  // namespace origon
