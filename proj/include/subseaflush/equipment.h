#pragma once

// Supply-conduit catalog and reel drum sizing.
//
// Reel capacity follows the coiled-tubing drum rule
//     L[ft] = (A + C) * A * B * K
// with A the stack height, B the drum width, C the core diameter (inches).
// K depends on the conduit OD; for square packing of the wraps it is
// pi / (12 * OD^2), which is what the published K tables tabulate rounded.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace subseaflush {

namespace csv {
struct Table;
}

enum class ConduitKind { CoiledTubing, FlexibleSteelPipe };

std::string_view to_string(ConduitKind kind);
ConduitKind conduit_kind_from_string(std::string_view text);

struct ReelSpec {
    double tubing_stack_height_in = 0.0; // A
    double drum_width_in = 0.0;          // B
    double core_diameter_in = 0.0;       // C
    double k_factor = 0.0;               // K

    void validate() const;
};

struct ConduitProduct {
    std::string name;
    double internal_diameter_in = 0.0;
    double outside_diameter_in = 0.0;
    ConduitKind kind = ConduitKind::CoiledTubing;
    // Unset when the catalog does not publish a rating.
    std::optional<double> max_working_pressure_pa;
    // Explicit K; when unset it is derived from the OD.
    std::optional<double> k_factor;
    // Drum used to store this product.
    double core_diameter_in = 0.0;
    double drum_width_in = 0.0;
    double stack_height_in = 0.0;
    // Catalog nominal mass, echoed in reports only.
    std::optional<double> nominal_mass_kg_m;

    void validate() const;
};

struct ReelLength {
    double feet = 0.0;
    double meters = 0.0;
};

struct ReelResult {
    std::string product;
    ReelSpec spec;
    ReelLength capacity;
    double spool_volume_m3 = 0.0;
    double linear_mass_kg_m = 0.0;
    double total_mass_t = 0.0;
    double required_length_m = 0.0;
    bool capacity_short = false;
};

struct Feasibility {
    std::string product;
    bool pass = false;
    double margin_pa = 0.0;
};

inline constexpr double kSteelDensity = 7850.0;

ReelLength reel_capacity(const ReelSpec& spec);

// Full outer cylinder of the loaded drum, (pi/4) (C + 2A)^2 B, in m3.
double spool_volume(const ReelSpec& spec);

double conduit_linear_mass(const ConduitProduct& product, double material_density_kg_m3);

Feasibility pressure_feasibility(const ConduitProduct& product, double required_dp_pa);

double geometric_k_factor(double outside_diameter_in);

// OD-keyed K lookup (exact OD match within 1e-6 in).
class KFactorTable {
public:
    struct Entry {
        double outside_diameter_in;
        double k_factor;
    };

    static KFactorTable builtin();
    // CSV with header od_in,k_factor.
    static KFactorTable load_csv(const std::string& path);

    std::optional<double> lookup(double outside_diameter_in) const;
    void insert(double outside_diameter_in, double k_factor);
    const std::vector<Entry>& entries() const { return entries_; }

private:
    std::vector<Entry> entries_;
};

enum class KFactorSource { Geometric, Table };

class ConduitCatalog {
public:
    // HV-70, HS-70 and the larger CT sizes, plus flexible steel pipe in
    // 5000 psi and 15000 psi ratings.
    static ConduitCatalog builtin();
    // CSV with header
    //   name,id_in,od_in,kind,max_wp_bar,k_factor[,core_in,width_in,stack_in,nominal_mass_kg_m]
    // Empty cells leave optional fields unset.
    static ConduitCatalog load_csv(const std::string& path);
    static ConduitCatalog parse_csv(const std::string& text, const std::string& source);

    const ConduitProduct& find(std::string_view name) const;
    const std::vector<ConduitProduct>& products() const { return products_; }
    void add(ConduitProduct product);

    std::string to_csv() const;

private:
    static ConduitCatalog from_table(const csv::Table& table, const std::string& path);

    std::vector<ConduitProduct> products_;
};

// K for a product: explicit value, then (for KFactorSource::Table) the table,
// then the square-packing value.
double resolve_k_factor(const ConduitProduct& product, KFactorSource source,
                        const KFactorTable& table);

ReelSpec reel_spec_for(const ConduitProduct& product, KFactorSource source,
                       const KFactorTable& table);

ReelResult size_reel(const ConduitProduct& product, const ReelSpec& spec,
                     double material_density_kg_m3, double required_length_m);

} // namespace subseaflush
