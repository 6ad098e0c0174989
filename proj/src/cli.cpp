#include "origon/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "origon/conventional.hpp"
#include "origon/critical.hpp"
#include "origon/division.hpp"
#include "origon/fold_io.hpp"
#include "origon/improved.hpp"
#include "origon/interference.hpp"
#include "origon/validator.hpp"

namespace origon {

namespace {

struct ParamOpts {
    double alpha = 0, beta_l = 0, beta_r = 0, delta_l = 0, delta_r = 0, scale = 1.0;

    GadgetParams make() const {
        return {alpha * DEG, beta_l * DEG, beta_r * DEG, delta_l * DEG, delta_r * DEG, scale};
    }
};

void add_param_opts(CLI::App* sub, ParamOpts& po, bool with_delta) {
    sub->add_option("--alpha", po.alpha, "extruded angle alpha (deg)")->required();
    sub->add_option("--beta-l", po.beta_l, "left base angle beta_L (deg)")->required();
    sub->add_option("--beta-r", po.beta_r, "right base angle beta_R (deg)")->required();
    if (with_delta) {
        sub->add_option("--delta-l", po.delta_l, "left hem offset delta_L (deg)");
        sub->add_option("--delta-r", po.delta_r, "right hem offset delta_R (deg)");
    }
    sub->add_option("--scale", po.scale, "length of the extruded edge AB");
}

struct PhiOpts {
    double phi_l = 0, psi_l = 0;
    std::string epsilon;   // "L:VAL" or "R:VAL", degrees
    std::string select;
    CLI::Option* phi_opt = nullptr;
    CLI::Option* psi_opt = nullptr;
};

void add_phi_opts(CLI::App* sub, PhiOpts& po) {
    auto* a = sub->add_option("--phi-l", po.phi_l, "left opening angle phi_L (deg)");
    auto* b = sub->add_option("--psi-l", po.psi_l, "left tilt psi_L = gamma_L - phi_L (deg)");
    auto* c = sub->add_option("--epsilon", po.epsilon,
                              "ear offset as SIDE:DEG, e.g. L:12.5 or R:0");
    auto* d = sub->add_option("--select", po.select,
                              "named choice: balanced, left-critical, right-critical, orthogonal")
                  ->check(CLI::IsMember(
                      {"balanced", "left-critical", "right-critical", "orthogonal"}));
    a->excludes(b)->excludes(c)->excludes(d);
    b->excludes(c)->excludes(d);
    c->excludes(d);
    po.phi_opt = a;
    po.psi_opt = b;
}

DParameterization phi_selection(const PhiOpts& po) {
    if (po.phi_opt->count() > 0) return ByPhiL{po.phi_l * DEG};
    if (po.psi_opt->count() > 0) return ByPsiL{po.psi_l * DEG};
    if (!po.epsilon.empty()) {
        auto colon = po.epsilon.find(':');
        if (colon == std::string::npos)
            throw std::domain_error("--epsilon expects SIDE:DEG, e.g. L:12.5");
        std::string side = po.epsilon.substr(0, colon);
        double val = 0;
        try {
            val = std::stod(po.epsilon.substr(colon + 1));
        } catch (const std::exception&) {
            throw std::domain_error("--epsilon expects SIDE:DEG, e.g. L:12.5");
        }
        if (side == "L" || side == "l") return ByEpsilon{Side::Left, val * DEG};
        if (side == "R" || side == "r") return ByEpsilon{Side::Right, val * DEG};
        throw std::domain_error("--epsilon side must be L or R");
    }
    if (po.select == "left-critical") return LeftCritical{};
    if (po.select == "right-critical") return RightCritical{};
    if (po.select == "orthogonal") return Orthogonal{};
    return Balanced{};
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
}

std::string fmt_pt(Point2 p) { return "(" + fmt(p.x) + ", " + fmt(p.y) + ")"; }

void write_text(const std::string& path, const std::string& content, std::ostream& out) {
    if (path == "-") {
        out << content;
        return;
    }
    std::ofstream ofs(path, std::ios::binary);
    if (!ofs) throw std::runtime_error("cannot open " + path + " for writing");
    ofs << content;
    if (!ofs) throw std::runtime_error("failed writing " + path);
}

std::string read_text(const std::string& path) {
    std::ifstream ifs(path, std::ios::binary);
    if (!ifs) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << ifs.rdbuf();
    return ss.str();
}

Tolerance env_tolerance() {
    Tolerance tol;
    if (const char* e = std::getenv("ORIGON_ANGLE_EPS")) {
        char* end = nullptr;
        double v = std::strtod(e, &end);
        if (end != e && v > 0) tol.angle_eps = v;
    }
    return tol;
}

// Shared tail of every construction command: report foldability, write files.
struct OutputOpts {
    std::string fold_path, svg_path;
};

void add_output_opts(CLI::App* sub, OutputOpts& oo) {
    sub->add_option("--fold", oo.fold_path, "write FOLD JSON to this path ('-' for stdout)");
    sub->add_option("--svg", oo.svg_path, "write SVG to this path ('-' for stdout)");
}

int finish_cp(const CreasePattern& cp, const OutputOpts& oo, std::ostream& out) {
    FoldabilityReport rep = kawasaki_check(cp, env_tolerance());
    out << "vertices: " << cp.vertices.size() << "  edges: " << cp.edges.size() << "\n";
    out << "flat-foldability: " << (rep.pass ? "PASS" : "FAIL") << " (" << rep.checked()
        << " vertices checked, " << rep.crossings << " crossings, worst error "
        << fmt(rep.worst_err) << ")\n";
    if (!rep.pass) {
        for (const VertexCheck& c : rep.checks)
            if (!c.pass)
                out << "  vertex " << c.vertex << (c.label.empty() ? "" : " [" + c.label + "]")
                    << " " << c.kind << ": sum " << fmt(c.value) << " expected "
                    << fmt(c.expected) << "\n";
    }
    if (!oo.fold_path.empty()) write_text(oo.fold_path, to_fold(cp), out);
    if (!oo.svg_path.empty()) write_text(oo.svg_path, to_svg(cp), out);
    return rep.pass ? 0 : 1;
}

std::vector<double> parse_csv_doubles(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw std::domain_error(std::string(what) + ": cannot parse '" + item + "'");
        }
    }
    if (out.empty()) throw std::domain_error(std::string(what) + ": empty list");
    return out;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"origon: origami extrusion gadget toolkit (angles in degrees)"};
    app.require_subcommand(1);
    int rc = 0;

    // ----- check -----
    auto* check = app.add_subcommand("check", "validate gadget parameters");
    ParamOpts check_po;
    std::string check_mode = "improved";
    add_param_opts(check, check_po, true);
    check->add_option("--mode", check_mode, "conventional, improved, or division")
        ->check(CLI::IsMember({"conventional", "improved", "division"}));
    check->callback([&]() {
        GadgetMode mode = check_mode == "conventional" ? GadgetMode::Conventional
                         : check_mode == "division"    ? GadgetMode::DivisionPreamble
                                                       : GadgetMode::Improved;
        GadgetParams p = check_po.make();
        auto issues = validate(p, mode);
        if (issues.empty()) {
            out << "valid " << check_mode << " parameters\n";
            out << "gamma = " << fmt(p.gamma() / DEG) << " deg\n";
            if (mode != GadgetMode::Conventional) {
                DerivedQuantities dq = derive(p);
                out << "gamma_l = " << fmt(dq.gamma_l / DEG) << " deg, gamma_r = "
                    << fmt(dq.gamma_r / DEG) << " deg\n";
                out << "r = " << fmt(dq.r) << ", lambda = " << fmt(dq.lambda) << "\n";
            }
        } else {
            for (const auto& is : issues)
                out << "invalid [" << is.condition << "] " << is.detail << "\n";
            rc = 1;
        }
    });

    // ----- conventional -----
    auto* conv = app.add_subcommand("conventional", "pyramid-supported gadget crease pattern");
    ParamOpts conv_po;
    OutputOpts conv_oo;
    add_param_opts(conv, conv_po, false);
    add_output_opts(conv, conv_oo);
    conv->callback([&]() {
        ConventionalGeometry g = build_conventional(conv_po.make());
        out << "C = " << fmt_pt(g.c) << "\n";
        for (Side s : kSides)
            out << "D_" << side_name(s) << " = " << fmt_pt(g.d_of(s)) << "  |BD| = "
                << fmt(conventional_bd(g.params, s)) << "\n";
        out << "pyramid feasible: " << (pyramid_feasible(g) ? "yes" : "no") << "\n";
        rc = finish_cp(conventional_cp(g), conv_oo, out);
    });

    // ----- improved -----
    auto* impr = app.add_subcommand("improved", "flat-back gadget crease pattern");
    ParamOpts impr_po;
    PhiOpts impr_phi;
    OutputOpts impr_oo;
    int impr_variant = 1;
    add_param_opts(impr, impr_po, true);
    add_phi_opts(impr, impr_phi);
    add_output_opts(impr, impr_oo);
    impr->add_option("--variant", impr_variant, "ear mountain/valley convention (1 or 2)")
        ->check(CLI::Range(1, 2));
    impr->callback([&]() {
        GadgetParams p = impr_po.make();
        double phi_l = resolve_phi_l(p, phi_selection(impr_phi));
        ImprovedGeometry g = build_improved(p, phi_l);
        out << "phi_l = " << fmt(g.phi_l / DEG) << " deg, phi_r = " << fmt(g.phi_r / DEG)
            << " deg\n";
        out << "psi_l = " << fmt(g.psi(Side::Left) / DEG) << " deg, psi_r = "
            << fmt(g.psi(Side::Right) / DEG) << " deg\n";
        out << "D = " << fmt_pt(g.d) << "\n";
        for (Side s : kSides) {
            int i = static_cast<int>(s);
            out << "E_" << side_name(s) << " = " << fmt_pt(g.e[i]);
            if (g.g[i]) out << "  G_" << side_name(s) << " = " << fmt_pt(*g.g[i]);
            if (g.h[i]) out << "  H_" << side_name(s) << " = " << fmt_pt(*g.h[i]);
            if (g.side_critical(s)) out << "  (critical)";
            out << "\n";
        }
        rc = finish_cp(improved_cp(g, impr_variant), impr_oo, out);
    });

    // ----- critical-angles -----
    auto* crit = app.add_subcommand("critical-angles",
                                    "critical opening angles and the admissible phi_L range");
    ParamOpts crit_po;
    add_param_opts(crit, crit_po, true);
    crit->callback([&]() {
        GadgetParams p = crit_po.make();
        require_valid(p, GadgetMode::Improved);
        CriticalAngleConstruction ca = zeta_geometric(p);
        PhiLInterval iv = phi_l_interval(p);
        out << "gamma = " << fmt(p.gamma() / DEG) << " deg\n";
        out << "zeta_l = " << fmt(ca.zeta_l / DEG) << " deg\n";
        out << "zeta_r = " << fmt(ca.zeta_r / DEG) << " deg\n";
        out << "phi_l range = [" << fmt(iv.lo / DEG) << ", " << fmt(iv.hi / DEG) << "] deg\n";
        out << "left-critical phi_l = " << fmt(iv.hi / DEG) << " deg\n";
        out << "right-critical phi_l = " << fmt(iv.lo / DEG) << " deg\n";
    });

    // ----- interference -----
    auto* intf = app.add_subcommand("interference",
                                    "extrusion-height interference coefficients");
    ParamOpts intf_po;
    PhiOpts intf_phi;
    add_param_opts(intf, intf_po, true);
    add_phi_opts(intf, intf_phi);
    intf->callback([&]() {
        GadgetParams p = intf_po.make();
        double phi_l = resolve_phi_l(p, phi_selection(intf_phi));
        InterferenceSummary s = interference_summary(p, phi_l);
        out << "phi_l = " << fmt(s.phi_l / DEG) << " deg, lambda = " << fmt(s.lambda) << "\n";
        for (Side sd : kSides) {
            const SideInterference& si = s.of(sd);
            out << "side " << side_name(sd) << ": kappa_in = " << fmt(si.kappa_in)
                << ", kappa_out = " << fmt(si.kappa_out) << ", kappa_conv = "
                << fmt(si.kappa_conv) << "\n";
        }
        out << "pair L-in R-out: " << fmt(s.of(Side::Left).kappa_in + s.of(Side::Right).kappa_out)
            << "\n";
        out << "pair R-in L-out: " << fmt(s.of(Side::Right).kappa_in + s.of(Side::Left).kappa_out)
            << "\n";
    });

    // ----- optimize-prism -----
    auto* prism = app.add_subcommand("optimize-prism",
                                     "best opening angle for a regular n-gon prism extrusion");
    int prism_n = 4;
    bool prism_csv = false;
    prism->add_option("--n", prism_n, "number of prism sides (>= 3)")->required();
    prism->add_flag("--csv", prism_csv, "emit one CSV row (with header)");
    prism->callback([&]() {
        PrismOptimum o = optimize_prism(prism_n);
        if (prism_csv) {
            out << "n,t_l,phi_l_deg,psi_l_deg,kappa_min,kappa_0,kappa_conv\n";
            out << o.n << "," << fmt(o.t_l) << "," << fmt(o.phi_l / DEG) << ","
                << fmt(o.psi_l / DEG) << "," << fmt(o.kappa_min) << "," << fmt(o.kappa_0) << ","
                << fmt(o.kappa_conv) << "\n";
            return;
        }
        out << "n = " << o.n << "\n";
        out << "t_l = tan(phi_l/2) = " << fmt(o.t_l) << "\n";
        out << "phi_l = " << fmt(o.phi_l / DEG) << " deg, psi_l = " << fmt(o.psi_l / DEG)
            << " deg\n";
        out << "kappa_min = " << fmt(o.kappa_min) << "  (max height " << fmt(1.0 / o.kappa_min)
            << ")\n";
        out << "kappa_0 = " << fmt(o.kappa_0) << "  (max height " << fmt(1.0 / o.kappa_0)
            << ")\n";
        out << "kappa_conv = " << fmt(o.kappa_conv) << "  (max height " << fmt(1.0 / o.kappa_conv)
            << ")\n";
        out << "height gain over psi_l = 0: " << fmt(o.kappa_0 / o.kappa_min) << "\n";
        out << "height gain over pyramid-supported: " << fmt(o.kappa_conv / o.kappa_min) << "\n";
    });

    // ----- divide -----
    auto* div = app.add_subcommand("divide", "stacked division of a flat-back gadget");
    ParamOpts div_po;
    OutputOpts div_oo;
    int div_d = 1;
    std::string div_ratios, div_phis;
    double div_phi_l = 0;
    bool div_phi_set = false;
    std::vector<int> div_invert;
    add_param_opts(div, div_po, false);
    div->add_option("--d", div_d, "number of levels")->required();
    div->add_option("--ratios", div_ratios, "comma-separated level widths (default equal)");
    auto* div_phi_opt =
        div->add_option("--phi-l", div_phi_l, "left opening angle for every level (deg)");
    div->add_option("--phi-levels", div_phis,
                    "comma-separated per-level left opening angles (deg)");
    div->add_option("--invert-level", div_invert,
                    "flip the pleat at this level (repeatable, levels 2..d)");
    add_output_opts(div, div_oo);
    div->callback([&]() {
        div_phi_set = div_phi_opt->count() > 0;
        GadgetParams p = div_po.make();
        DivisionSpec spec;
        spec.d = div_d;
        if (div_ratios.empty())
            spec.ratios.assign(std::max(div_d, 0), 1.0);
        else
            spec.ratios = parse_csv_doubles(div_ratios, "--ratios");
        if (!div_phis.empty()) {
            spec.phi_l_levels = parse_csv_doubles(div_phis, "--phi-levels");
            for (double& v : spec.phi_l_levels) v *= DEG;
        } else if (div_phi_set) {
            spec.phi_l_levels.assign(std::max(div_d, 0), div_phi_l * DEG);
        } else {
            require_valid(p, GadgetMode::DivisionPreamble);
            spec.phi_l_levels.assign(std::max(div_d, 0), phi_l_interval(p).mid());
        }
        spec.inverted_levels = div_invert;
        DivisionGeometry dv = build_division(p, spec);
        out << "d = " << dv.d << ", r = " << fmt(dv.r) << "\n";
        out << "ratios:";
        for (int n = 1; n <= dv.d; ++n) out << " " << fmt(dv.spec.ratios[n - 1]);
        out << "\n";
        for (int n = 1; n <= dv.d; ++n) {
            out << "level " << n << ": phi_l = " << fmt(dv.phi[0][n] / DEG) << " deg";
            if (dv.spec.level_inverted(n)) out << " (inverted)";
            out << ", coef_D = " << fmt(dv.dcoef[n]);
            out << ", coef_G_L = " << fmt(division_gcoef(p, Side::Left, dv.phi[0][n]));
            out << ", coef_G_R = " << fmt(division_gcoef(p, Side::Right, dv.phi[1][n]));
            out << "\n  ";
            out << "D: " << (dv.dd[n] ? "yes" : "no");
            out << ", D': " << (n < dv.d && dv.dprime[n] ? "yes" : "no");
            for (Side s : kSides) {
                int i = static_cast<int>(s);
                out << ", G_" << side_name(s) << ": "
                    << (dv.g[i][n] ? (dist(*dv.g[i][n], dv.e[i][n]) <= 1e-9 ? "at E" : "yes")
                                   : (dv.j[i][n] ? "no (J instead)" : "no"));
            }
            out << "\n";
        }
        rc = finish_cp(division_cp(dv), div_oo, out);
    });

    // ----- check-cp -----
    auto* ccp = app.add_subcommand("check-cp", "flat-foldability report for a FOLD file");
    std::string ccp_in;
    ccp->add_option("--in", ccp_in, "FOLD file to check")->required();
    ccp->callback([&]() {
        CreasePattern cp = from_fold(read_text(ccp_in));
        out << "construction: " << cp.construction << "\n";
        OutputOpts none;
        rc = finish_cp(cp, none, out);
    });

    // ----- export -----
    auto* exp = app.add_subcommand("export", "re-serialize a FOLD file (canonical FOLD or SVG)");
    std::string exp_in;
    OutputOpts exp_oo;
    exp->add_option("--in", exp_in, "FOLD file to read")->required();
    add_output_opts(exp, exp_oo);
    exp->callback([&]() {
        if (exp_oo.fold_path.empty() && exp_oo.svg_path.empty())
            throw CLI::RequiredError("--fold or --svg");
        CreasePattern cp = from_fold(read_text(exp_in));
        if (!exp_oo.fold_path.empty()) write_text(exp_oo.fold_path, to_fold(cp), out);
        if (!exp_oo.svg_path.empty()) write_text(exp_oo.svg_path, to_svg(cp), out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace origon
