#include "subseaflush/equipment.h"

#include "csv.h"
#include "subseaflush/errors.h"
#include "subseaflush/units.h"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace subseaflush {

namespace {

constexpr double kOdMatchTolerance = 1e-6;

std::optional<double> optional_cell(const csv::Table& t, const std::vector<std::string>& row,
                                    const char* column, const std::string& context)
{
    const int c = t.column(column);
    if (c < 0 || row[static_cast<std::size_t>(c)].empty()) {
        return std::nullopt;
    }
    return csv::to_double(row[static_cast<std::size_t>(c)], fmt::format("{} {}", context, column));
}

double required_cell(const csv::Table& t, const std::vector<std::string>& row, const char* column,
                     const std::string& context)
{
    auto v = optional_cell(t, row, column, context);
    if (!v) {
        throw ValidationError(fmt::format("{}: column '{}' is required", context, column));
    }
    return *v;
}

std::string format_optional(const std::optional<double>& v)
{
    return v ? fmt::format("{}", *v) : std::string{};
}

} // namespace

std::string_view to_string(ConduitKind kind)
{
    switch (kind) {
    case ConduitKind::CoiledTubing:
        return "coiled-tubing";
    case ConduitKind::FlexibleSteelPipe:
        return "flexible-steel-pipe";
    }
    return "coiled-tubing";
}

ConduitKind conduit_kind_from_string(std::string_view text)
{
    if (text == "coiled-tubing") {
        return ConduitKind::CoiledTubing;
    }
    if (text == "flexible-steel-pipe") {
        return ConduitKind::FlexibleSteelPipe;
    }
    throw ValidationError(fmt::format(
        "unknown conduit kind '{}' (expected coiled-tubing or flexible-steel-pipe)", text));
}

void ReelSpec::validate() const
{
    if (!(tubing_stack_height_in >= 0.0 && drum_width_in >= 0.0 && core_diameter_in >= 0.0
          && k_factor >= 0.0)) {
        throw ValidationError("reel spec: stack height, drum width, core diameter and K must "
                              "be non-negative");
    }
}

void ConduitProduct::validate() const
{
    if (!(internal_diameter_in > 0.0)) {
        throw ValidationError(fmt::format("product {}: internal diameter must be > 0", name));
    }
    if (!(outside_diameter_in >= internal_diameter_in)) {
        throw ValidationError(fmt::format("product {}: OD must not be below ID", name));
    }
    if (max_working_pressure_pa && !(*max_working_pressure_pa > 0.0)) {
        throw ValidationError(fmt::format("product {}: max working pressure must be > 0", name));
    }
    if (k_factor && !(*k_factor >= 0.0)) {
        throw ValidationError(fmt::format("product {}: K factor must be >= 0", name));
    }
}

ReelLength reel_capacity(const ReelSpec& spec)
{
    spec.validate();
    const double a = spec.tubing_stack_height_in;
    const double feet = (a + spec.core_diameter_in) * a * spec.drum_width_in * spec.k_factor;
    return {feet, units::ft_to_m(feet)};
}

double spool_volume(const ReelSpec& spec)
{
    spec.validate();
    const double outer = spec.core_diameter_in + 2.0 * spec.tubing_stack_height_in;
    const double cubic_in = units::kPi / 4.0 * outer * outer * spec.drum_width_in;
    return cubic_in * std::pow(units::kMetersPerInch, 3);
}

double conduit_linear_mass(const ConduitProduct& product, double material_density_kg_m3)
{
    product.validate();
    if (!(material_density_kg_m3 > 0.0)) {
        throw ValidationError("material density must be > 0");
    }
    const double od = units::inch_to_m(product.outside_diameter_in);
    const double id = units::inch_to_m(product.internal_diameter_in);
    return units::kPi / 4.0 * (od * od - id * id) * material_density_kg_m3;
}

Feasibility pressure_feasibility(const ConduitProduct& product, double required_dp_pa)
{
    if (!product.max_working_pressure_pa) {
        throw ValidationError(
            fmt::format("product {} has no published working pressure", product.name));
    }
    const double margin = *product.max_working_pressure_pa - required_dp_pa;
    return {product.name, margin >= 0.0, margin};
}

double geometric_k_factor(double outside_diameter_in)
{
    if (!(outside_diameter_in > 0.0)) {
        throw ValidationError("geometric_k_factor: OD must be > 0");
    }
    return units::kPi / (12.0 * outside_diameter_in * outside_diameter_in);
}

KFactorTable KFactorTable::builtin()
{
    KFactorTable t;
    t.entries_ = {{1.75, 0.086}, {2.375, 0.046}, {3.5, 0.021}, {3.7, 0.020},
                  {4.5, 0.013},  {5.7, 0.008},   {7.5, 0.005}};
    return t;
}

KFactorTable KFactorTable::load_csv(const std::string& path)
{
    const auto table = csv::read_file(path);
    if (table.column("od_in") < 0 || table.column("k_factor") < 0) {
        throw ValidationError(fmt::format("{}: header must contain od_in,k_factor", path));
    }
    KFactorTable t;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto ctx = fmt::format("{}:{}", path, table.line_numbers[i]);
        const double od = required_cell(table, table.rows[i], "od_in", ctx);
        const double k = required_cell(table, table.rows[i], "k_factor", ctx);
        if (!(od > 0.0 && k > 0.0)) {
            throw ValidationError(fmt::format("{}: od_in and k_factor must be > 0", ctx));
        }
        t.insert(od, k);
    }
    return t;
}

std::optional<double> KFactorTable::lookup(double outside_diameter_in) const
{
    for (const auto& e : entries_) {
        if (std::abs(e.outside_diameter_in - outside_diameter_in) < kOdMatchTolerance) {
            return e.k_factor;
        }
    }
    return std::nullopt;
}

void KFactorTable::insert(double outside_diameter_in, double k_factor)
{
    for (auto& e : entries_) {
        if (std::abs(e.outside_diameter_in - outside_diameter_in) < kOdMatchTolerance) {
            e.k_factor = k_factor;
            return;
        }
    }
    entries_.push_back({outside_diameter_in, k_factor});
}

ConduitCatalog ConduitCatalog::builtin()
{
    using units::bar_to_pa;
    using units::psi_to_pa;
    constexpr auto ct = ConduitKind::CoiledTubing;
    constexpr auto flex = ConduitKind::FlexibleSteelPipe;

    ConduitCatalog c;
    c.products_ = {
        {"HV-70", 1.5, 1.75, ct, bar_to_pa(510.0), std::nullopt, 50, 50, 25, 9.6},
        {"HS-70", 2.0, 2.375, ct, bar_to_pa(641.0), std::nullopt, 50, 50, 39, 22.7},
        {"CT-3.0", 3.0, 3.5, ct, std::nullopt, std::nullopt, 100, 50, 50, 47.8},
        {"CT-4.0", 4.0, 4.5, ct, std::nullopt, std::nullopt, 100, 50, 72, 91.0},
    };
    struct FlexRow {
        const char* size;
        double id, od, core, width, stack, nominal;
    };
    const FlexRow flex_rows[] = {
        {"1.5", 1.5, 3.7, 38, 50, 73, 32.4},
        {"2.0", 2.0, 4.5, 41, 50, 93, 49.3},
        {"3.0", 3.0, 5.7, 53, 100, 76, 80.5},
        {"4.0", 4.0, 7.5, 69, 100, 100, 138.6},
    };
    for (const auto& r : flex_rows) {
        for (double psi : {5000.0, 15000.0}) {
            c.products_.push_back({fmt::format("COFLEXIP-{}-{}K", r.size, psi / 1000.0), r.id, r.od,
                                   flex, psi_to_pa(psi), std::nullopt, r.core, r.width, r.stack,
                                   r.nominal});
        }
    }
    return c;
}

ConduitCatalog ConduitCatalog::load_csv(const std::string& path)
{
    return from_table(csv::read_file(path), path);
}

ConduitCatalog ConduitCatalog::parse_csv(const std::string& text, const std::string& source)
{
    return from_table(csv::parse(text, source), source);
}

ConduitCatalog ConduitCatalog::from_table(const csv::Table& table, const std::string& path)
{
    for (const char* col : {"name", "id_in", "od_in", "kind", "max_wp_bar", "k_factor"}) {
        if (table.column(col) < 0) {
            throw ValidationError(fmt::format("{}: missing catalog column '{}'", path, col));
        }
    }
    ConduitCatalog c;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        const auto ctx = fmt::format("{}:{}", path, table.line_numbers[i]);
        ConduitProduct p;
        p.name = row[static_cast<std::size_t>(table.column("name"))];
        if (p.name.empty()) {
            throw ValidationError(fmt::format("{}: product name is empty", ctx));
        }
        p.internal_diameter_in = required_cell(table, row, "id_in", ctx);
        p.outside_diameter_in = required_cell(table, row, "od_in", ctx);
        p.kind = conduit_kind_from_string(row[static_cast<std::size_t>(table.column("kind"))]);
        if (auto wp = optional_cell(table, row, "max_wp_bar", ctx)) {
            p.max_working_pressure_pa = units::bar_to_pa(*wp);
        }
        p.k_factor = optional_cell(table, row, "k_factor", ctx);
        p.core_diameter_in = optional_cell(table, row, "core_in", ctx).value_or(0.0);
        p.drum_width_in = optional_cell(table, row, "width_in", ctx).value_or(0.0);
        p.stack_height_in = optional_cell(table, row, "stack_in", ctx).value_or(0.0);
        p.nominal_mass_kg_m = optional_cell(table, row, "nominal_mass_kg_m", ctx);
        c.add(std::move(p));
    }
    return c;
}

const ConduitProduct& ConduitCatalog::find(std::string_view name) const
{
    auto it = std::find_if(products_.begin(), products_.end(),
                           [&](const ConduitProduct& p) { return p.name == name; });
    if (it == products_.end()) {
        throw ValidationError(fmt::format("unknown product '{}'", name));
    }
    return *it;
}

void ConduitCatalog::add(ConduitProduct product)
{
    product.validate();
    for (const auto& p : products_) {
        if (p.name == product.name) {
            throw ValidationError(fmt::format("duplicate product '{}'", product.name));
        }
    }
    products_.push_back(std::move(product));
}

std::string ConduitCatalog::to_csv() const
{
    std::string out =
        "name,id_in,od_in,kind,max_wp_bar,k_factor,core_in,width_in,stack_in,nominal_mass_kg_m\n";
    for (const auto& p : products_) {
        std::optional<double> wp_bar;
        if (p.max_working_pressure_pa) {
            wp_bar = units::pa_to_bar(*p.max_working_pressure_pa);
        }
        out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", p.name, p.internal_diameter_in,
                           p.outside_diameter_in, to_string(p.kind), format_optional(wp_bar),
                           format_optional(p.k_factor), p.core_diameter_in, p.drum_width_in,
                           p.stack_height_in, format_optional(p.nominal_mass_kg_m));
    }
    return out;
}

double resolve_k_factor(const ConduitProduct& product, KFactorSource source,
                        const KFactorTable& table)
{
    if (product.k_factor) {
        return *product.k_factor;
    }
    if (source == KFactorSource::Table) {
        if (auto k = table.lookup(product.outside_diameter_in)) {
            return *k;
        }
    }
    return geometric_k_factor(product.outside_diameter_in);
}

ReelSpec reel_spec_for(const ConduitProduct& product, KFactorSource source,
                       const KFactorTable& table)
{
    return {product.stack_height_in, product.drum_width_in, product.core_diameter_in,
            resolve_k_factor(product, source, table)};
}

ReelResult size_reel(const ConduitProduct& product, const ReelSpec& spec,
                     double material_density_kg_m3, double required_length_m)
{
    ReelResult r;
    r.product = product.name;
    r.spec = spec;
    r.capacity = reel_capacity(spec);
    r.spool_volume_m3 = spool_volume(spec);
    r.linear_mass_kg_m = conduit_linear_mass(product, material_density_kg_m3);
    r.total_mass_t = r.linear_mass_kg_m * r.capacity.meters / 1000.0;
    r.required_length_m = required_length_m;
    r.capacity_short = r.capacity.meters < required_length_m;
    return r;
}

} // namespace subseaflush
