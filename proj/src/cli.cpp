#include "olq/cli.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "olq/assay.hpp"
#include "olq/budget.hpp"
#include "olq/fom.hpp"
#include "olq/gates.hpp"
#include "olq/species.hpp"
#include "olq/trap.hpp"

namespace olq::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepSpec {
    std::string variable;
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;

    std::vector<double> grid() const {
        if (!(step > 0)) throw UsageError("sweep: step must be positive");
        if (stop < start) throw UsageError("sweep: stop must be >= start");
        std::vector<double> values;
        const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
        values.reserve(count + 1);
        for (long i = 0; i <= count; ++i) values.push_back(start + i * step);
        return values;
    }
};

SweepSpec parse_sweep(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw UsageError("sweep: expected var=start:stop:step");
    SweepSpec spec;
    spec.variable = text.substr(0, eq);
    const std::string range = text.substr(eq + 1);
    std::istringstream stream(range);
    std::string part;
    std::vector<double> parts;
    while (std::getline(stream, part, ':')) {
        try {
            parts.push_back(std::stod(part));
        } catch (const std::exception&) {
            throw UsageError("sweep: malformed number '" + part + "'");
        }
    }
    if (parts.size() != 3) throw UsageError("sweep: expected var=start:stop:step");
    spec.start = parts[0];
    spec.stop = parts[1];
    spec.step = parts[2];
    return spec;
}

// Rows of (name, value-or-text) for table mode; CSV mode uses explicit writers.
class Table {
public:
    void add(const std::string& name, double value) {
        rows_.emplace_back(name, format_double(value));
    }
    void add(const std::string& name, const std::string& text) {
        rows_.emplace_back(name, text);
    }
    void print(std::ostream& out) const {
        std::size_t width = 0;
        for (const auto& [name, _] : rows_) width = std::max(width, name.size());
        for (const auto& [name, text] : rows_) {
            out << name << std::string(width - name.size(), ' ') << "  " << text << "\n";
        }
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}
    void header(const std::vector<std::string>& names) {
        join(names);
    }
    void row(const std::vector<std::string>& cells) { join(cells); }

private:
    void join(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }
    std::ostream& out_;
};

std::string opt_cell(const std::optional<double>& value) {
    return value ? format_double(*value) : std::string();
}

// ---------------------------------------------------------------------------
// shared option bundles

struct CommonOpts {
    std::string format = "table";
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    // every option may appear once in a config file and once on the command
    // line; the later (command-line) value wins
    cmd->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"table", "csv"}));
    cmd->add_option("--output", opts.output, "Write output to this path instead of stdout");
    std::string ignored;
    cmd->add_option("--config", ignored,
                    "Config file with 'key = value' lines and # comments; "
                    "command-line flags override file values");
}

// The config file format: one `key = value` per line, # starts a comment,
// blank lines ignored. Keys are long option names without the leading dashes.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open config file: " + path);
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    int line_number = 0;
    const auto trim = [](std::string s) {
        const auto begin = s.find_first_not_of(" \t\r");
        const auto end = s.find_last_not_of(" \t\r");
        return begin == std::string::npos ? std::string() : s.substr(begin, end - begin + 1);
    };
    while (std::getline(file, line)) {
        ++line_number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError("config line " + std::to_string(line_number) +
                             ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw UsageError("config line " + std::to_string(line_number) + ": empty key");
        }
        if (key == "config") throw UsageError("config: nested config files are not supported");
        entries.emplace_back(key, value);
    }
    return entries;
}

// Expands `sub --config file ...` into `sub --key=value ... (file entries first,
// command-line flags after, so the flags win)`.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    if (args.empty()) return args;
    std::string config_path;
    std::vector<std::string> passthrough;
    passthrough.push_back(args[0]);
    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& arg = args[i];
        if (arg == "--config") {
            if (i + 1 >= args.size()) throw UsageError("--config needs a file path");
            config_path = args[++i];
        } else if (arg.rfind("--config=", 0) == 0) {
            config_path = arg.substr(9);
        } else {
            passthrough.push_back(arg);
        }
    }
    if (config_path.empty()) return args;

    std::vector<std::string> expanded;
    expanded.push_back(passthrough[0]);
    for (const auto& [key, value] : read_config_file(config_path)) {
        expanded.push_back("--" + key + "=" + value);
    }
    expanded.insert(expanded.end(), passthrough.begin() + 1, passthrough.end());
    return expanded;
}

struct SpeciesOpts {
    std::string name = "cs";
    std::optional<double> gamma_over_recoil;
    std::optional<double> nuclear_spin;
    std::optional<double> gamma_si;
};

void add_species(CLI::App* cmd, SpeciesOpts& opts) {
    cmd->add_option("--species", opts.name, "Species name from the registry (cs, rb, na)");
    cmd->add_option("--species-gamma-over-recoil", opts.gamma_over_recoil,
                    "Override hbar*Gamma/E_R [dimensionless]");
    cmd->add_option("--species-nuclear-spin", opts.nuclear_spin,
                    "Override the nuclear spin I [half-integer]");
    cmd->add_option("--species-gamma-si", opts.gamma_si,
                    "Override the linewidth Gamma [rad/s] used for SI output");
}

AtomSpecies resolve_species(const SpeciesOpts& opts) {
    AtomSpecies species;
    try {
        species = find_species(opts.name);
    } catch (const std::invalid_argument&) {
        if (!opts.gamma_over_recoil || !opts.nuclear_spin) throw;
        species.name = opts.name;
    }
    if (opts.gamma_over_recoil) species.gamma_over_recoil = *opts.gamma_over_recoil;
    if (opts.nuclear_spin) {
        species.nuclear_spin = *opts.nuclear_spin;
        species.f_up = species.nuclear_spin + 0.5;
        species.f_down = species.nuclear_spin - 0.5;
    }
    if (opts.gamma_si) species.gamma_si = *opts.gamma_si;
    species.validate();
    return species;
}

std::ostream& select_output(const CommonOpts& opts, std::ofstream& file, std::ostream& fallback) {
    if (opts.output.empty()) return fallback;
    file.open(opts.output);
    if (!file) throw std::runtime_error("cannot open output file: " + opts.output);
    return file;
}

// ---------------------------------------------------------------------------
// trap

struct TrapArgs {
    CommonOpts common;
    SpeciesOpts species;
    double intensity = 1e5;
    double detuning = 5.8e3;
    std::optional<double> depth;
    std::optional<double> theta;
};

void run_trap(const TrapArgs& args, std::ostream& out) {
    const AtomSpecies species = resolve_species(args.species);
    LatticeConfig lattice;
    lattice.intensity_ratio = args.intensity;
    lattice.detuning_ratio = args.detuning;
    lattice.polarization_angle = args.theta.value_or(0.0);
    lattice.well_depth = args.depth;
    const TrapModel trap = derive_trap(species, lattice);

    std::optional<double> scatter_si;
    if (species.gamma_si) scatter_si = rate_to_per_second(trap.scatter_rate, species);
    std::optional<double> dz_lambda;
    if (args.theta) dz_lambda = transport_displacement(*args.theta);

    if (args.common.format == "csv") {
        CsvWriter csv(out);
        csv.header({"species", "well_depth_er", "omega_osc_er", "lamb_dicke",
                    "ground_width_kl", "scatter_rate_gamma", "scatter_rate_per_s",
                    "transport_dz_lambda"});
        csv.row({species.name, format_double(trap.well_depth), format_double(trap.omega_osc),
                 format_double(trap.lamb_dicke), format_double(trap.ground_width),
                 format_double(trap.scatter_rate), opt_cell(scatter_si), opt_cell(dz_lambda)});
        return;
    }
    Table table;
    table.add("species", species.name);
    table.add("well_depth [E_R]", trap.well_depth);
    table.add("omega_osc [E_R/hbar]", trap.omega_osc);
    table.add("lamb_dicke", trap.lamb_dicke);
    table.add("ground_width [1/k_L]", trap.ground_width);
    table.add("scatter_rate [Gamma]", trap.scatter_rate);
    if (scatter_si) table.add("scatter_rate [1/s]", *scatter_si);
    if (dz_lambda) table.add("transport_dz [lambda]", *dz_lambda);
    table.print(out);
}

// ---------------------------------------------------------------------------
// kappa

struct KappaArgs {
    CommonOpts common;
    std::string protocol;
    std::optional<double> eta;
    std::optional<double> eta_perp;
    std::optional<double> eta_par;
    std::optional<double> dz;
    bool optimize = false;
    std::string method = "closed-form";
    bool near_field = false;
    int pol_q = 0;
    std::optional<std::string> sweep;
};

double require(const std::optional<double>& value, const char* flag) {
    if (!value) throw UsageError(std::string("missing required flag ") + flag);
    return *value;
}

FomResult kappa_point(const KappaArgs& args) {
    QuadratureOptions quad_opts;
    quad_opts.treatment = args.near_field ? KernelTreatment::near_field : KernelTreatment::full;
    const bool quadrature = args.method == "quadrature";

    if (args.protocol == "separated-wells") {
        const double eta = require(args.eta, "--eta");
        const double dz = require(args.dz, "--dz");
        if (!quadrature) return kappa_separated_wells(eta, dz);
        return kappa_quadrature(PacketPair::isotropic(eta, dz * eta), args.pol_q, quad_opts);
    }
    if (args.protocol == "ellipsoid") {
        const double perp = require(args.eta_perp, "--eta-perp");
        const double par = require(args.eta_par, "--eta-par");
        if (!quadrature) return kappa_ellipsoid(perp, par);
        return kappa_quadrature(PacketPair::ellipsoidal(perp, par), args.pol_q, quad_opts);
    }
    if (args.protocol == "swap") {
        if (quadrature) {
            throw UsageError("the swap protocol has no Gaussian quadrature route");
        }
        return kappa_swap(require(args.eta, "--eta"));
    }
    throw UsageError("unknown protocol: " + args.protocol);
}

const char* method_name(FomMethod method) {
    return method == FomMethod::quadrature ? "quadrature" : "closed-form";
}

void emit_fom_csv(CsvWriter& csv, double parameter, const FomResult& fom) {
    csv.row({format_double(parameter), format_double(fom.kappa), opt_cell(fom.mean_f),
             opt_cell(fom.mean_g), method_name(fom.method)});
}

void run_kappa(KappaArgs args, std::ostream& out) {
    if (args.sweep && args.optimize) {
        throw UsageError("--sweep and --optimize are mutually exclusive");
    }

    if (args.sweep) {
        const SweepSpec spec = parse_sweep(*args.sweep);
        CsvWriter csv(out);
        csv.header({"parameter", "kappa", "mean_f", "mean_g", "method"});
        for (double value : spec.grid()) {
            if (spec.variable == "dz") {
                args.dz = value;
            } else if (spec.variable == "eta") {
                args.eta = value;
            } else if (spec.variable == "eta-perp") {
                args.eta_perp = value;
            } else if (spec.variable == "eta-par") {
                args.eta_par = value;
            } else {
                throw UsageError("kappa sweep variable must be one of dz, eta, eta-perp, eta-par");
            }
            emit_fom_csv(csv, value, kappa_point(args));
        }
        return;
    }

    if (args.optimize) {
        double location;
        FomResult fom;
        std::string location_name;
        if (args.protocol == "separated-wells") {
            std::tie(location, fom) = optimize_separation(require(args.eta, "--eta"));
            location_name = "dz_bar_opt";
        } else if (args.protocol == "ellipsoid") {
            std::tie(location, fom) = optimize_aspect_ratio(require(args.eta_perp, "--eta-perp"));
            location_name = "ratio_opt";
        } else {
            throw UsageError("--optimize applies to the separated-wells and ellipsoid protocols");
        }
        if (args.common.format == "csv") {
            CsvWriter csv(out);
            csv.header({"parameter", "kappa", "mean_f", "mean_g", "method"});
            emit_fom_csv(csv, location, fom);
            return;
        }
        Table table;
        table.add("protocol", args.protocol);
        table.add(location_name, location);
        table.add("kappa", fom.kappa);
        table.add("abs_kappa", std::abs(fom.kappa));
        if (fom.c_kappa) table.add("c_kappa", *fom.c_kappa);
        table.print(out);
        return;
    }

    const FomResult fom = kappa_point(args);
    if (args.common.format == "csv") {
        const double parameter = args.dz ? *args.dz
                                 : args.eta_par ? *args.eta_par
                                                : args.eta.value_or(0.0);
        CsvWriter csv(out);
        csv.header({"parameter", "kappa", "mean_f", "mean_g", "method"});
        emit_fom_csv(csv, parameter, fom);
        return;
    }
    Table table;
    table.add("protocol", args.protocol);
    table.add("method", method_name(fom.method));
    table.add("kappa", fom.kappa);
    table.add("abs_kappa", std::abs(fom.kappa));
    if (fom.c_kappa) table.add("c_kappa", *fom.c_kappa);
    if (fom.mean_f) table.add("mean_f", *fom.mean_f);
    if (fom.mean_g) table.add("mean_g", *fom.mean_g);
    if (fom.convergence) table.add("convergence", *fom.convergence);
    table.print(out);
}

// ---------------------------------------------------------------------------
// gate

struct GateArgs {
    CommonOpts common;
    std::string protocol;
    double chi = 1.0;
    std::optional<double> eta;
    std::optional<double> eta_perp;
    std::optional<double> eta_par;
    std::optional<double> dz;
};

void emit_unitary(const Eigen::MatrixXcd& u, const std::string& format, std::ostream& out,
                  CsvWriter* csv) {
    if (csv) {
        for (Eigen::Index i = 0; i < u.rows(); ++i) {
            for (Eigen::Index j = 0; j < u.cols(); ++j) {
                csv->row({"unitary_re", std::to_string(i), std::to_string(j),
                          format_double(u(i, j).real())});
                csv->row({"unitary_im", std::to_string(i), std::to_string(j),
                          format_double(u(i, j).imag())});
            }
        }
        return;
    }
    (void)format;
    out << "unitary real part\n";
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        for (Eigen::Index j = 0; j < u.cols(); ++j) {
            out << (j ? "," : "") << format_double(u(i, j).real());
        }
        out << "\n";
    }
    out << "unitary imaginary part\n";
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        for (Eigen::Index j = 0; j < u.cols(); ++j) {
            out << (j ? "," : "") << format_double(u(i, j).imag());
        }
        out << "\n";
    }
}

void run_gate(const GateArgs& args, std::ostream& out) {
    const bool csv_mode = args.common.format == "csv";

    if (args.protocol == "swap") {
        const double eta = args.eta.value_or(0.05);
        const SqrtSwapResult gate = sqrt_swap_gate(args.chi);
        const FomResult fom = kappa_swap(eta);
        const double success = std::exp(-std::numbers::pi / std::abs(fom.kappa));
        if (csv_mode) {
            CsvWriter csv(out);
            csv.header({"record", "i", "j", "value"});
            csv.row({"tau", "", "", format_double(gate.tau)});
            csv.row({"kappa", "", "", format_double(fom.kappa)});
            csv.row({"success_probability", "", "", format_double(success)});
            csv.row({"leakage", "", "", format_double(gate.leakage)});
            emit_unitary(gate.unitary, args.common.format, out, &csv);
            return;
        }
        Table table;
        table.add("gate", std::string("sqrt-swap"));
        table.add("tau [1/Gamma]", gate.tau);
        table.add("kappa", fom.kappa);
        table.add("success_probability", success);
        table.add("leakage", gate.leakage);
        table.print(out);
        emit_unitary(gate.unitary, args.common.format, out, nullptr);
        return;
    }

    // conditional-phase protocols: kappa from the chosen geometry
    FomResult fom;
    if (args.protocol == "separated-wells") {
        fom = kappa_separated_wells(require(args.eta, "--eta"), require(args.dz, "--dz"));
    } else if (args.protocol == "ellipsoid") {
        fom = kappa_ellipsoid(require(args.eta_perp, "--eta-perp"),
                              require(args.eta_par, "--eta-par"));
    } else {
        throw UsageError("unknown protocol: " + args.protocol);
    }
    const CphaseResult gate = cphase_gate(fom, args.chi);
    const Eigen::Matrix4cd cnot = compose_cnot(gate.unitary);
    if (csv_mode) {
        CsvWriter csv(out);
        csv.header({"record", "i", "j", "value"});
        csv.row({"tau", "", "", format_double(gate.tau)});
        csv.row({"kappa", "", "", format_double(fom.kappa)});
        csv.row({"success_probability", "", "", format_double(gate.success_probability)});
        csv.row({"leakage", "", "", format_double(0.0)});
        emit_unitary(gate.unitary, args.common.format, out, &csv);
        return;
    }
    Table table;
    table.add("gate", std::string("cphase"));
    table.add("tau [1/Gamma]", gate.tau);
    table.add("kappa", fom.kappa);
    table.add("success_probability", gate.success_probability);
    table.add("leakage", 0.0);
    table.print(out);
    emit_unitary(gate.unitary, args.common.format, out, nullptr);
    out << "cnot real part (H * cphase * H)\n";
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out << (j ? "," : "") << format_double(cnot(i, j).real());
        }
        out << "\n";
    }
}

// ---------------------------------------------------------------------------
// budget

struct BudgetArgs {
    CommonOpts common;
    SpeciesOpts species;
    double ckappa = 0.015;
    double n = 2.0;
    double intensity = 1e5;
    std::optional<double> detuning;
    std::optional<std::string> sweep;
};

void run_budget(BudgetArgs args, std::ostream& out) {
    BudgetInput input;
    input.species = resolve_species(args.species);
    input.c_kappa = args.ckappa;
    input.n_cycles = args.n;
    input.intensity_ratio = args.intensity;

    if (args.sweep) {
        const SweepSpec spec = parse_sweep(*args.sweep);
        CsvWriter csv(out);
        csv.header({"parameter", "p_catalysis", "p_lattice", "p_total", "optimal_detuning"});
        for (double value : spec.grid()) {
            if (spec.variable == "intensity") {
                input.intensity_ratio = value;
            } else if (spec.variable == "n") {
                input.n_cycles = value;
            } else if (spec.variable == "ckappa") {
                input.c_kappa = value;
            } else if (spec.variable == "detuning") {
                csv.row({format_double(value), format_double(p_catalysis(input, value)),
                         format_double(p_lattice(input, value)),
                         format_double(p_total(input, value)), format_double(value)});
                continue;
            } else {
                throw UsageError(
                    "budget sweep variable must be one of intensity, n, ckappa, detuning");
            }
            const BudgetResult opt = optimize_detuning(input);
            csv.row({format_double(value), format_double(opt.p_catalysis),
                     format_double(opt.p_lattice), format_double(opt.p_total),
                     format_double(opt.optimal_detuning)});
        }
        return;
    }

    if (args.detuning) {
        const double detuning = *args.detuning;
        if (args.common.format == "csv") {
            CsvWriter csv(out);
            csv.header({"parameter", "p_catalysis", "p_lattice", "p_total", "optimal_detuning"});
            csv.row({format_double(detuning), format_double(p_catalysis(input, detuning)),
                     format_double(p_lattice(input, detuning)),
                     format_double(p_total(input, detuning)), format_double(detuning)});
            return;
        }
        Table table;
        table.add("detuning [Gamma]", detuning);
        table.add("p_catalysis", p_catalysis(input, detuning));
        table.add("p_lattice", p_lattice(input, detuning));
        table.add("p_total", p_total(input, detuning));
        table.print(out);
        return;
    }

    const BudgetResult opt = optimize_detuning(input);
    if (args.common.format == "csv") {
        CsvWriter csv(out);
        csv.header({"parameter", "p_catalysis", "p_lattice", "p_total", "optimal_detuning"});
        csv.row({format_double(opt.optimal_detuning), format_double(opt.p_catalysis),
                 format_double(opt.p_lattice), format_double(opt.p_total),
                 format_double(opt.optimal_detuning)});
        return;
    }
    Table table;
    table.add("optimal_detuning [Gamma]", opt.optimal_detuning);
    table.add("p_total", opt.p_total);
    table.add("p_catalysis", opt.p_catalysis);
    table.add("p_lattice", opt.p_lattice);
    table.add("gamma_lattice [Gamma]", opt.gamma_lattice);
    table.add("p_total_first_order", opt.p_total_first_order);
    table.add("p_closed_form", opt.p_closed_form);
    table.add("detuning_closed_form [Gamma]", opt.detuning_closed_form);
    if (opt.at_bracket_edge) {
        table.add("warning", std::string("optimum at the search-window edge"));
    }
    table.print(out);
}

// ---------------------------------------------------------------------------
// assay

struct AssayArgs {
    CommonOpts common;
    std::int64_t pairs = 1000;
    double error = 0.1;
    double alpha = 0.5;
    int cycles = 2;
    std::uint64_t seed = 1;
    double flip_probability = 0.0;
    bool expected = false;
};

void run_assay(const AssayArgs& args, std::ostream& out) {
    AssayConfig config;
    config.n_pairs = args.pairs;
    config.true_error = args.error;
    config.alpha = args.alpha;
    config.n_cycles = args.cycles;
    config.seed = args.seed;
    config.flip_probability = args.flip_probability;

    const AssayRecord record = args.expected ? expected_counts(config) : simulate(config);

    if (args.common.format == "csv") {
        CsvWriter csv(out);
        csv.header({"cycle", "paired", "new_unpaired", "target_total"});
        for (std::size_t i = 0; i < record.cycles.size(); ++i) {
            const auto& c = record.cycles[i];
            csv.row({std::to_string(i + 1), format_double(c.paired),
                     format_double(c.new_unpaired), format_double(c.target_total)});
        }
        return;
    }
    Table table;
    for (std::size_t i = 0; i < record.cycles.size(); ++i) {
        const auto& c = record.cycles[i];
        std::ostringstream line;
        line << "paired " << format_double(c.paired) << ", new unpaired "
             << format_double(c.new_unpaired) << ", target total "
             << format_double(c.target_total);
        table.add("cycle " + std::to_string(i + 1), line.str());
    }
    if (record.cycles.size() >= 2) {
        table.add("estimated_error", estimate_error(record));
    }
    table.print(out);
}

}  // namespace

std::string format_double(double value) {
    std::array<char, 32> buffer{};
    const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"optical-lattice qubit gate design calculations"};
    app.require_subcommand(0, 1);

    TrapArgs trap_args;
    auto* trap_cmd = app.add_subcommand("trap", "Trap and transport parameters");
    add_common(trap_cmd, trap_args.common);
    add_species(trap_cmd, trap_args.species);
    trap_cmd->add_option("--intensity", trap_args.intensity, "Beam intensity I1/I0");
    trap_cmd->add_option("--detuning", trap_args.detuning,
                         "Lattice detuning Delta_L/Gamma (positive = blue)");
    trap_cmd->add_option("--depth", trap_args.depth,
                         "Well depth U0/E_R (otherwise derived from intensity and detuning)");
    trap_cmd->add_option("--theta", trap_args.theta,
                         "Angle between the beam polarizations [rad, in [0, pi))");

    KappaArgs kappa_args;
    auto* kappa_cmd = app.add_subcommand("kappa", "Dipole-dipole figure of merit");
    add_common(kappa_cmd, kappa_args.common);
    kappa_cmd->add_option("--protocol", kappa_args.protocol, "Gate geometry")
        ->check(CLI::IsMember({"ellipsoid", "separated-wells", "swap"}))
        ->required();
    kappa_cmd->add_option("--eta", kappa_args.eta, "Lamb-Dicke parameter k_L*x0");
    kappa_cmd->add_option("--eta-perp", kappa_args.eta_perp, "Transverse Lamb-Dicke parameter");
    kappa_cmd->add_option("--eta-par", kappa_args.eta_par, "Longitudinal Lamb-Dicke parameter");
    kappa_cmd->add_option("--dz", kappa_args.dz, "Well separation Delta z/x0");
    kappa_cmd->add_flag("--optimize", kappa_args.optimize,
                        "Maximize |kappa| over the protocol's geometry parameter");
    kappa_cmd->add_option("--method", kappa_args.method, "Evaluation route")
        ->check(CLI::IsMember({"closed-form", "quadrature"}));
    kappa_cmd->add_flag("--near-field", kappa_args.near_field,
                        "Quadrature with the quasi-static kernel term only");
    kappa_cmd->add_option("--pol-q", kappa_args.pol_q,
                          "Catalysis polarization component q (-1, 0, +1)")
        ->check(CLI::Range(-1, 1));
    kappa_cmd->add_option("--sweep", kappa_args.sweep,
                          "Sweep var=start:stop:step over dz, eta, eta-perp or eta-par (CSV)");

    GateArgs gate_args;
    auto* gate_cmd = app.add_subcommand("gate", "Gate unitaries, timing and success probability");
    add_common(gate_cmd, gate_args.common);
    gate_cmd->add_option("--protocol", gate_args.protocol, "Gate protocol")
        ->check(CLI::IsMember({"ellipsoid", "separated-wells", "swap"}))
        ->required();
    gate_cmd->add_option("--chi", gate_args.chi, "Interaction scale chi [Gamma]");
    gate_cmd->add_option("--eta", gate_args.eta, "Lamb-Dicke parameter");
    gate_cmd->add_option("--eta-perp", gate_args.eta_perp, "Transverse Lamb-Dicke parameter");
    gate_cmd->add_option("--eta-par", gate_args.eta_par, "Longitudinal Lamb-Dicke parameter");
    gate_cmd->add_option("--dz", gate_args.dz, "Well separation Delta z/x0");

    BudgetArgs budget_args;
    auto* budget_cmd = app.add_subcommand("budget", "Spontaneous-scattering error budget");
    add_common(budget_cmd, budget_args.common);
    add_species(budget_cmd, budget_args.species);
    budget_cmd->add_option("--ckappa", budget_args.ckappa, "Protocol prefactor |kappa|*eta^3");
    budget_cmd->add_option("--n", budget_args.n, "Gate duration in trap periods");
    budget_cmd->add_option("--intensity", budget_args.intensity, "Beam intensity I1/I0");
    budget_cmd->add_option("--detuning", budget_args.detuning,
                           "Evaluate at this detuning Delta_L/Gamma instead of optimizing");
    budget_cmd->add_option("--sweep", budget_args.sweep,
                           "Sweep var=start:stop:step over intensity, n, ckappa or detuning (CSV)");

    AssayArgs assay_args;
    auto* assay_cmd = app.add_subcommand("assay", "Ensemble CNOT/flushing error measurement");
    add_common(assay_cmd, assay_args.common);
    assay_cmd->add_option("--pairs", assay_args.pairs, "Initial paired-qubit count N");
    assay_cmd->add_option("--error", assay_args.error, "True gate error probability P");
    assay_cmd->add_option("--alpha", assay_args.alpha,
                          "Fraction of errors losing the control but not the target");
    assay_cmd->add_option("--cycles", assay_args.cycles, "Number of CNOT/flush cycles");
    assay_cmd->add_option("--seed", assay_args.seed, "PRNG seed");
    assay_cmd->add_option("--flip-probability", assay_args.flip_probability,
                          "Spurious flip probability for unpaired targets");
    assay_cmd->add_flag("--expected", assay_args.expected,
                        "Emit deterministic expected counts instead of sampling");

    std::vector<std::string> working = args;
    try {
        if (!working.empty() &&
            (working[0] == "trap" || working[0] == "kappa" || working[0] == "gate" ||
             working[0] == "budget" || working[0] == "assay")) {
            working = expand_config(working);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    std::vector<std::string> reversed(working.rbegin(), working.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        std::ofstream file;
        if (trap_cmd->parsed()) {
            run_trap(trap_args, select_output(trap_args.common, file, out));
        } else if (kappa_cmd->parsed()) {
            run_kappa(kappa_args, select_output(kappa_args.common, file, out));
        } else if (gate_cmd->parsed()) {
            run_gate(gate_args, select_output(gate_args.common, file, out));
        } else if (budget_cmd->parsed()) {
            run_budget(budget_args, select_output(budget_args.common, file, out));
        } else if (assay_cmd->parsed()) {
            run_assay(assay_args, select_output(assay_args.common, file, out));
        } else {
            out << app.help();
        }
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace olq::cli
