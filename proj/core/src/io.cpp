#include "szego/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace szego {

using nlohmann::json;

namespace {

Complex complex_from_json(const json& j) {
    return {j.value("re", 0.0), j.value("im", 0.0)};
}

json complex_to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::vector<ZeroSpec> zero_list_from_json(const json& arr) {
    std::vector<ZeroSpec> out;
    for (const auto& item : arr)
        out.push_back({complex_from_json(item), item.value("mult", 1)});
    return out;
}

}  // namespace

WeightSpec weight_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        raise(ErrorKind::Config, std::string("weight JSON parse failure: ") + e.what());
    }
    const std::string kind = j.value("kind", "");
    if (kind == "polynomial") return WeightSpec::polynomial(zero_list_from_json(j.value("zeros", json::array())));
    if (kind == "rational")
        return WeightSpec::rational(zero_list_from_json(j.value("zeros", json::array())),
                                    zero_list_from_json(j.value("poles", json::array())));
    if (kind == "essential") {
        if (!j.contains("a")) raise(ErrorKind::Config, "essential weight needs the center 'a'");
        const std::string sign = j.value("sign", "plus");
        if (sign != "plus" && sign != "minus") raise(ErrorKind::Config, "sign must be plus or minus");
        return WeightSpec::essential(complex_from_json(j["a"]),
                                     sign == "plus" ? EssentialSign::Plus : EssentialSign::Minus);
    }
    if (kind == "log_laurent") {
        std::map<int, Complex> given;
        for (const auto& item : j.value("coeffs", json::array()))
            given[item.value("k", 0)] = complex_from_json(item);
        int kmax = 0;
        for (const auto& [k, v] : given) kmax = std::max(kmax, std::abs(k));
        std::vector<Complex> half(static_cast<std::size_t>(kmax) + 1, 0.0);
        for (const auto& [k, v] : given) {
            const std::size_t idx = static_cast<std::size_t>(std::abs(k));
            const Complex as_positive = k < 0 ? std::conj(v) : v;
            if (half[idx] != Complex(0.0, 0.0) && std::abs(half[idx] - as_positive) > kCircleTol)
                raise(ErrorKind::Config, "log-Laurent coefficients violate l_{-k} = conj(l_k)");
            half[idx] = as_positive;
        }
        return WeightSpec::log_laurent(half);
    }
    raise(ErrorKind::Config, "unknown weight kind '" + kind + "'");
}

WeightSpec weight_from_json_file(const std::string& path) {
    return weight_from_json_text(read_text_file(path));
}

std::string weight_to_json_text(const WeightSpec& spec) {
    json j;
    switch (spec.kind()) {
        case WeightKind::PolynomialModSq:
        case WeightKind::RationalModSq: {
            j["kind"] = spec.kind() == WeightKind::PolynomialModSq ? "polynomial" : "rational";
            json zeros = json::array();
            for (const auto& z : spec.given_zeros()) {
                json item = complex_to_json(z.location);
                item["mult"] = z.multiplicity;
                zeros.push_back(item);
            }
            j["zeros"] = zeros;
            if (spec.kind() == WeightKind::RationalModSq) {
                json poles = json::array();
                for (const auto& p : spec.given_poles()) {
                    json item = complex_to_json(p.location);
                    item["mult"] = p.multiplicity;
                    poles.push_back(item);
                }
                j["poles"] = poles;
            }
            break;
        }
        case WeightKind::EssentialExp:
            j["kind"] = "essential";
            j["a"] = complex_to_json(spec.essential_center());
            j["sign"] = spec.essential_sign() == EssentialSign::Plus ? "plus" : "minus";
            break;
        case WeightKind::LogLaurent: {
            j["kind"] = "log_laurent";
            json coeffs = json::array();
            for (std::size_t k = 0; k < spec.log_coeffs().size(); ++k) {
                json item = complex_to_json(spec.log_coeffs()[k]);
                item["k"] = static_cast<int>(k);
                coeffs.push_back(item);
            }
            j["coeffs"] = coeffs;
            break;
        }
    }
    return j.dump(2);
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_text_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) raise(ErrorKind::Io, "cannot open " + tmp + " for writing");
        out << content;
        if (!out) raise(ErrorKind::Io, "short write to " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) raise(ErrorKind::Io, "rename " + tmp + " -> " + path + ": " + ec.message());
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorKind::Io, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Complex> read_point_csv(const std::string& path) {
    std::istringstream in(read_text_file(path));
    std::vector<Complex> pts;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double re = 0.0, im = 0.0;
        if (std::sscanf(line.c_str(), "%lf,%lf", &re, &im) == 2) pts.push_back({re, im});
    }
    if (pts.empty()) raise(ErrorKind::Config, "no points parsed from " + path);
    return pts;
}

namespace {

std::string fmt_svg(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

}  // namespace

std::string render_svg_zeros(std::span<const Complex> zeros, std::span<const GuideCircle> guides,
                             std::span<const Complex> pole_markers) {
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
           "viewBox=\"-1.15 -1.15 2.3 2.3\">\n";
    svg << "<rect x=\"-1.15\" y=\"-1.15\" width=\"2.3\" height=\"2.3\" fill=\"white\"/>\n";
    svg << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"black\" stroke-width=\"0.004\"/>\n";
    for (const auto& g : guides) {
        svg << "<circle cx=\"0\" cy=\"0\" r=\"" << fmt_svg(g.radius)
            << "\" fill=\"none\" stroke=\"gray\" stroke-width=\"0.004\"";
        if (g.dashed) svg << " stroke-dasharray=\"0.03,0.02\"";
        svg << "/>\n";
    }
    for (const auto& p : pole_markers) {
        const double x = p.real(), y = -p.imag();  // SVG y grows downward
        const double s = 0.02;
        svg << "<path d=\"M " << fmt_svg(x - s) << " " << fmt_svg(y - s) << " L " << fmt_svg(x + s)
            << " " << fmt_svg(y + s) << " M " << fmt_svg(x - s) << " " << fmt_svg(y + s) << " L "
            << fmt_svg(x + s) << " " << fmt_svg(y - s)
            << "\" stroke=\"red\" stroke-width=\"0.006\" fill=\"none\"/>\n";
    }
    for (const auto& z : zeros) {
        svg << "<circle cx=\"" << fmt_svg(z.real()) << "\" cy=\"" << fmt_svg(-z.imag())
            << "\" r=\"0.008\" fill=\"black\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string szego_dump_json(const SzegoData& data) {
    json j;
    j["tau"] = data.tau;
    j["rho_hat"] = data.rho_hat;
    json lc = json::array();
    for (std::size_t k = 0; k < data.fourier.coeffs.size(); ++k)
        lc.push_back({{"k", static_cast<int>(k)},
                      {"re", data.fourier.coeffs[k].real()},
                      {"im", data.fourier.coeffs[k].imag()}});
    j["l_coeffs"] = lc;
    json cc = json::array();
    for (int k = data.c_min(); k <= data.c_max(); ++k) {
        const Complex c = data.c_at(k);
        cc.push_back({{"k", k}, {"re", c.real()}, {"im", c.imag()}});
    }
    j["c_coeffs"] = cc;
    j["fourier_nodes"] = data.fourier.node_count;
    j["fourier_tail_bound"] = data.fourier.tail_bound;
    return j.dump(2);
}

std::string oracle_json(const OracleResult& result) {
    json j;
    j["precision"] = result.precision.name();
    json alphas = json::array();
    for (std::size_t n = 0; n < result.alphas.size(); ++n) {
        const Complex a = result.alpha(static_cast<int>(n));
        alphas.push_back({{"n", static_cast<int>(n)}, {"re", a.real()}, {"im", a.imag()}});
    }
    j["alphas"] = alphas;
    json kappas = json::array();
    for (std::size_t n = 0; n < result.kappas.size(); ++n)
        kappas.push_back({{"n", static_cast<int>(n)}, {"value", result.kappa(static_cast<int>(n))}});
    j["kappas"] = kappas;
    json monic = json::array();
    for (std::size_t n = 0; n < result.monic.size(); ++n) {
        json row = json::array();
        for (const auto& c : result.monic[n]) {
            const Complex v = to_std(c);
            row.push_back({{"re", v.real()}, {"im", v.imag()}});
        }
        monic.push_back(row);
    }
    j["monic"] = monic;
    return j.dump();
}

std::string compare_json(const CompareReport& report) {
    json j;
    j["all_within_bounds"] = report.all_within_bounds;
    json rows = json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"n", r.n},
                        {"alpha_err", r.alpha_err},
                        {"alpha_bound", r.alpha_bound},
                        {"kappa_err", r.kappa_err},
                        {"kappa_bound", r.kappa_bound},
                        {"coeff_err", r.coeff_err},
                        {"coeff_bound", r.coeff_bound},
                        {"within_bounds", r.within_bounds}});
    }
    j["rows"] = rows;
    return j.dump(2);
}

std::string clock_json(const ClockReport& report, const ClockPrediction& prediction) {
    json j;
    j["n"] = report.n;
    j["count_in_window"] = report.count;
    j["window"] = report.window;
    j["prediction"] = {{"m", prediction.m},
                       {"rho", prediction.rho},
                       {"v_n", prediction.v_n},
                       {"radius", prediction.radius},
                       {"spacing", prediction.spacing}};
    j["spacing_mean_normalized"] = report.spacing_mean;
    j["spacing_max_dev"] = report.spacing_max_dev;
    j["radius_median"] = report.radius_median;
    j["radius_mean_abs_dev"] = report.radius_mean_abs_dev;
    json gaps = json::array();
    for (const auto& g : report.gaps) {
        gaps.push_back({{"arg_before", g.arg_before},
                        {"arg_after", g.arg_after},
                        {"normalized_width", g.normalized_width},
                        {"nearest_kind", g.nearest_kind},
                        {"nearest", complex_to_json(g.nearest_object)}});
    }
    j["gaps"] = gaps;
    return j.dump(2);
}

std::string saddle_json(const SaddleData& saddle, Complex alpha_asymptotic) {
    json j;
    j["kind"] = saddle.kind == EssentialSign::Plus ? "plus" : "minus";
    j["a"] = saddle.a;
    j["n"] = saddle.n;
    j["t_plus"] = complex_to_json(saddle.t_plus);
    j["t_minus"] = complex_to_json(saddle.t_minus);
    j["psi_at_saddle"] = complex_to_json(saddle.psi_at_saddle);
    j["F_at_saddle"] = complex_to_json(saddle.F_at_saddle);
    j["alpha_asymptotic"] = complex_to_json(alpha_asymptotic);
    return j.dump(2);
}

std::string zero_clusters_csv(std::span<const ZeroCluster> clusters) {
    std::ostringstream out;
    out << "re,im,cluster_size\n";
    for (const auto& c : clusters)
        out << fmt17(c.location.real()) << "," << fmt17(c.location.imag()) << "," << c.count << "\n";
    return out.str();
}

std::string verblunsky_csv(std::span<const VerblunskyEstimate> estimates, int n_min) {
    std::ostringstream out;
    out << "n,re_alpha,im_alpha,bound,re_leading,im_leading,gap_bound\n";
    for (std::size_t i = 0; i < estimates.size(); ++i) {
        const auto& e = estimates[i];
        out << (n_min + static_cast<int>(i)) << "," << fmt17(e.alpha.real()) << ","
            << fmt17(e.alpha.imag()) << "," << fmt17(e.bound) << "," << fmt17(e.leading_order.real())
            << "," << fmt17(e.leading_order.imag()) << "," << fmt17(e.gap_bound) << "\n";
    }
    return out.str();
}

std::string kappa_csv(std::span<const RealWithBound> kappas, int n_min) {
    std::ostringstream out;
    out << "n,kappa,bound\n";
    for (std::size_t i = 0; i < kappas.size(); ++i)
        out << (n_min + static_cast<int>(i)) << "," << fmt17(kappas[i].value) << ","
            << fmt17(kappas[i].bound) << "\n";
    return out.str();
}

std::string phi_csv(std::span<const PhiRow> rows) {
    std::ostringstream out;
    out << "re_z,im_z,re_phi,im_phi,bound\n";
    for (const auto& r : rows)
        out << fmt17(r.z.real()) << "," << fmt17(r.z.imag()) << "," << fmt17(r.phi.real()) << ","
            << fmt17(r.phi.imag()) << "," << fmt17(r.bound) << "\n";
    return out.str();
}

std::string approx_csv(std::span<const ApproxRow> rows) {
    std::ostringstream out;
    out << "re_z,im_z,re,im\n";
    for (const auto& r : rows)
        out << fmt17(r.z.real()) << "," << fmt17(r.z.imag()) << "," << fmt17(r.value.real()) << ","
            << fmt17(r.value.imag()) << "\n";
    return out.str();
}

std::string psi_csv(std::span<const PsiRow> rows) {
    std::ostringstream out;
    out << "re_z,im_z,re_psi,im_psi\n";
    for (const auto& r : rows)
        out << fmt17(r.z.real()) << "," << fmt17(r.z.imag()) << "," << fmt17(r.psi_minus_saddle.real())
            << "," << fmt17(r.psi_minus_saddle.imag()) << "\n";
    return out.str();
}

}  // namespace szego
