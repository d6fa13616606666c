#include "csv.h"
#include "subseaflush/errors.h"
#include "subseaflush/scenario.h"
#include "subseaflush/units.h"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace subseaflush {

void MeasuredCurve::validate() const
{
    if (points.size() < 2) {
        throw ValidationError(
            fmt::format("curve {}: at least 2 points are required, found {}", source, points.size()));
    }
    if (!(injection_rate_m3h > 0.0)) {
        throw ValidationError(fmt::format("curve {}: injection rate must be > 0", source));
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        if (!(p.time_s >= 0.0)) {
            throw ValidationError(fmt::format("curve {}: point {} has negative time", source, i));
        }
        if (!(p.oil_fraction >= 0.0 && p.oil_fraction <= 1.0)) {
            throw ValidationError(
                fmt::format("curve {}: point {} oil_fraction must be in [0, 1]", source, i));
        }
        if (i > 0 && !(p.time_s > points[i - 1].time_s)) {
            throw ValidationError(fmt::format(
                "curve {}: times must be strictly increasing (point {} at {} s)", source, i,
                p.time_s));
        }
    }
}

MeasuredCurve load_measured_curve(const std::string& path, double injection_rate_m3h)
{
    const auto table = csv::read_file(path);
    const int t_col = table.column("time_s");
    const int a_col = table.column("oil_fraction");
    if (t_col < 0 || a_col < 0) {
        throw ValidationError(fmt::format("{}: header must contain time_s,oil_fraction", path));
    }
    MeasuredCurve curve;
    curve.source = path;
    curve.injection_rate_m3h = injection_rate_m3h;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto ctx = fmt::format("{}:{}", path, table.line_numbers[i]);
        const auto& row = table.rows[i];
        curve.points.push_back({csv::to_double(row[static_cast<std::size_t>(t_col)], ctx),
                                csv::to_double(row[static_cast<std::size_t>(a_col)], ctx)});
    }
    curve.validate();
    return curve;
}

FitReport fit_model_to_curve(const MeasuredCurve& curve, const FlushSystem& system)
{
    curve.validate();
    system.validate();

    FitReport r;
    double sum_sq = 0.0;
    for (const auto& p : curve.points) {
        const double model =
            oil_fraction_at(system, FlushSchedule{curve.injection_rate_m3h, p.time_s});
        const double res = p.oil_fraction - model;
        r.model_fraction.push_back(model);
        r.residual.push_back(res);
        sum_sq += res * res;
        r.max_abs_error = std::max(r.max_abs_error, std::abs(res));
    }
    r.rmse = std::sqrt(sum_sq / static_cast<double>(curve.points.size()));
    r.terminal_model_fraction = r.model_fraction.back();

    // ln(a/a0) = -(q/V) t, regressed through the origin over usable points.
    double s_ty = 0.0;
    double s_tt = 0.0;
    for (const auto& p : curve.points) {
        if (p.time_s > 0.0 && p.oil_fraction > 0.0) {
            s_ty += p.time_s * std::log(p.oil_fraction / system.initial_oil_fraction);
            s_tt += p.time_s * p.time_s;
        }
    }
    if (s_tt > 0.0) {
        const double rate_constant = -s_ty / s_tt;
        if (rate_constant > 0.0) {
            r.fitted_volume_m3 = units::m3h_to_m3s(curve.injection_rate_m3h) / rate_constant;
        }
    }
    return r;
}

} // namespace subseaflush
