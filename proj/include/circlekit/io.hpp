#pragma once

#include <string>
#include <vector>

#include "circlekit/decompose.hpp"
#include "circlekit/forms.hpp"
#include "circlekit/kernel.hpp"
#include "circlekit/kernelpair.hpp"
#include "circlekit/measure.hpp"
#include "circlekit/trigpoly.hpp"

// JSON and CSV codecs. Emission is deterministic (sorted keys, shortest
// round-trip floats), so emit(load(emit(x))) == emit(x) byte for byte.
namespace circlekit::io {

std::string to_json(const TrigPoly& p);
TrigPoly trigpoly_from_json(const std::string& text);

std::string to_json(const AnalyticPoly& g);
AnalyticPoly analytic_from_json(const std::string& text);

std::string to_json(const CircleMeasure& mu);
CircleMeasure measure_from_json(const std::string& text);

std::string to_json(const KernelGram& g);
KernelGram gram_from_json(const std::string& text);

std::string to_json(const FormPair& fp);
FormPair form_pair_from_json(const std::string& text);

std::string to_json(const FormDecomposition& fd);
FormDecomposition form_decomposition_from_json(const std::string& text);

std::string to_json(const FiniteKernel& k);
FiniteKernel finite_kernel_from_json(const std::string& text);

std::string to_json(const DecompositionReport& rep);
DecompositionReport decomposition_report_from_json(const std::string& text);

// Radial-limit trace: one row per (theta, r) with Re H_b and the Fatou
// quotient (1-|b|^2)/|1-b|^2. Columns: theta, r, re_H, fatou_quotient.
std::string radial_trace_csv(const std::vector<double>& thetas,
                             const std::vector<double>& radii,
                             const std::vector<std::vector<double>>& re_H,
                             const std::vector<std::vector<double>>& fatou);

// Columns: N, ac_mass, rn_residual, intersection_rank.
std::string decompose_trace_csv(const std::vector<TraceEntry>& traces);

// Columns: j, moment_re, moment_im, series_re, series_im, abs_diff.
std::string halfcircle_csv(const HalfCircleReport& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace circlekit::io
