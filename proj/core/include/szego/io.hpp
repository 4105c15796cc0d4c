#pragma once

#include <span>
#include <string>
#include <vector>

#include "szego/asymptotics.hpp"
#include "szego/oracle.hpp"

namespace szego {

// weight configuration JSON, the schema shared by every subcommand
WeightSpec weight_from_json_text(const std::string& text);
WeightSpec weight_from_json_file(const std::string& path);
std::string weight_to_json_text(const WeightSpec& spec);

// 17 significant digits, enough to round-trip binary64
std::string fmt17(double x);

// temp file + rename in the target directory
void write_text_atomic(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// grid CSV: one "re,im" pair per line, optional header
std::vector<Complex> read_point_csv(const std::string& path);

struct GuideCircle {
    double radius = 1.0;
    bool dashed = false;
};

// Deterministic SVG: fixed viewport [-1.15, 1.15]^2, unit circle, optional
// guide circles, zero markers (radius 0.008 in plot units), pole crosses.
std::string render_svg_zeros(std::span<const Complex> zeros, std::span<const GuideCircle> guides,
                             std::span<const Complex> pole_markers);

std::string szego_dump_json(const SzegoData& data);
std::string oracle_json(const OracleResult& result);
std::string compare_json(const CompareReport& report);
std::string clock_json(const ClockReport& report, const ClockPrediction& prediction);
std::string saddle_json(const SaddleData& saddle, Complex alpha_asymptotic);

std::string zero_clusters_csv(std::span<const ZeroCluster> clusters);
std::string verblunsky_csv(std::span<const VerblunskyEstimate> estimates, int n_min);
std::string kappa_csv(std::span<const RealWithBound> kappas, int n_min);

struct PhiRow {
    Complex z;
    Complex phi;
    double bound = 0.0;
};
std::string phi_csv(std::span<const PhiRow> rows);

struct ApproxRow {
    Complex z;
    Complex value;
};
std::string approx_csv(std::span<const ApproxRow> rows);

struct PsiRow {
    Complex z;
    Complex psi_minus_saddle;
};
std::string psi_csv(std::span<const PsiRow> rows);

}  // namespace szego
