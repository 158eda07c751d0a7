#include "mobius/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "mobius/oracle.hpp"
#include "mobius/reference_tables.hpp"
#include "mobius/specfun.hpp"
#include "mobius/spectrum.hpp"

namespace mobius::cli {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ModelParams default_model() { return tables::reference_model(1); }

struct ParsedArgs {
    std::string command;
    std::map<std::string, std::string> options;
};

ParsedArgs parse_args(const std::vector<std::string>& args) {
    ParsedArgs out;
    if (args.empty()) throw DomainError("usage", "missing subcommand");
    out.command = args[0];
    for (size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.rfind("--", 0) != 0)
            throw DomainError("usage", "unexpected argument: " + a);
        if (i + 1 >= args.size())
            throw DomainError("usage", "missing value for " + a);
        out.options[a.substr(2)] = args[++i];
    }
    return out;
}

std::string option_or(const ParsedArgs& p, const std::string& key,
                      const std::string& fallback) {
    auto it = p.options.find(key);
    return it == p.options.end() ? fallback : it->second;
}

double to_double(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw DomainError("usage", "option --" + key + " expects a number, got " + v);
    }
}

int to_int(const std::string& key, const std::string& v) {
    const double x = to_double(key, v);
    if (x != std::floor(x))
        throw DomainError("usage", "option --" + key + " expects an integer");
    return static_cast<int>(x);
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(to_double(key, item));
    return out;
}

ModelParams model_from_options(const ParsedArgs& p) {
    auto it = p.options.find("config");
    if (it == p.options.end()) return default_model();
    return load_model(it->second);
}

// writes either to the file named by --out or to the stream
class Sink {
public:
    Sink(const ParsedArgs& p, std::ostream& fallback) : stream_(&fallback) {
        auto it = p.options.find("out");
        if (it != p.options.end()) {
            file_.open(it->second);
            if (!file_) throw DomainError("out", "cannot write " + it->second);
            stream_ = &file_;
        }
    }
    std::ostream& out() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

} // namespace

std::vector<SweepPoint> run_sweep(const SweepSpec& spec) {
    if (spec.steps < 2) throw DomainError("steps", "must be >= 2");
    if (!(spec.start < spec.stop)) throw DomainError("sweep", "start must be < stop");
    const bool integer_grid =
        spec.variable == SweepVariable::NMax || spec.variable == SweepVariable::N;
    if (spec.variable == SweepVariable::N)
        throw DomainError("sweep", "n is swept by the spectrum command");

    std::vector<SweepPoint> points;
    if (integer_grid) {
        const int lo = static_cast<int>(std::lround(spec.start));
        const int hi = static_cast<int>(std::lround(spec.stop));
        for (int k = lo; k <= hi; ++k) {
            thermo::ThermoInput in = spec.input;
            in.n_max = k;
            points.push_back({double(k), thermo::thermo_suite(spec.model, in)});
        }
        return points;
    }

    for (int i = 0; i < spec.steps; ++i) {
        const double x =
            spec.start + (spec.stop - spec.start) * i / (spec.steps - 1);
        ModelParams model = spec.model;
        thermo::ThermoInput in = spec.input;
        switch (spec.variable) {
        case SweepVariable::Tau0: {
            FieldConfig f = model.field();
            f.tau0 = x;
            model = model.with_field(f);
            break;
        }
        case SweepVariable::Zeta: {
            FieldConfig f = model.field();
            f.zeta = x;
            model = model.with_field(f);
            break;
        }
        case SweepVariable::Beta:
            in.beta = x;
            break;
        case SweepVariable::M:
            in.m = x;
            break;
        default:
            break;
        }
        points.push_back({x, thermo::thermo_suite(model, in)});
    }
    return points;
}

ReproReport reproduce_table(int table) {
    ReproReport report;
    const ModelParams base = tables::reference_model(table);

    for (const auto& cell : tables::reference_cells()) {
        if (cell.table != table) continue;
        FieldConfig f = base.field();
        f.zeta = cell.zeta;
        f.tau0 = cell.tau0;
        const ModelParams model = base.with_field(f);
        ReproRow row;
        row.table = table;
        row.n = cell.n;
        row.m = cell.m;
        row.zeta = cell.zeta;
        row.tau0 = cell.tau0;
        row.computed = spectrum::energy(model, {cell.n, cell.m});
        row.paper_value = cell.value;
        row.abs_dev = std::fabs(row.computed - cell.value);
        row.rel_dev = row.abs_dev / std::fabs(cell.value);
        row.convention_confirmed = row.abs_dev <= 5e-4;
        row.sign_agreement = (row.computed >= 0.0) == (cell.value >= 0.0);
        report.rows.push_back(row);
    }

    // structural checks mirror the qualitative content of the tables
    {
        FieldConfig f = base.field();
        f.zeta = 0.0;
        f.tau0 = 0.0;
        const ModelParams model = base.with_field(f);
        bool ok = true;
        double worst = 0.0;
        for (int n = 0; n <= 3; ++n) {
            const double d = std::fabs(spectrum::energy(model, {n, 1.0}) -
                                       spectrum::energy(model, {n, -1.0}));
            worst = std::max(worst, d);
            ok = ok && d <= 1e-12;
        }
        report.checks.push_back(
            {"zero_field_degeneracy", ok, "max |E(n,1)-E(n,-1)| = " + fmt17(worst)});
    }
    {
        FieldConfig f = base.field();
        f.zeta = 0.2;
        f.tau0 = 0.0;
        const ModelParams model = base.with_field(f);
        bool ok = true;
        double least = 1e300;
        for (int n = 0; n <= 3; ++n) {
            const double d = std::fabs(spectrum::energy(model, {n, 1.0}) -
                                       spectrum::energy(model, {n, -1.0}));
            least = std::min(least, d);
            ok = ok && d > 1e-6;
        }
        report.checks.push_back(
            {"flux_breaks_degeneracy", ok, "min |E(n,1)-E(n,-1)| = " + fmt17(least)});
    }
    {
        bool ok = true;
        for (const double m : {0.0, -1.0, 1.0}) {
            for (const auto& [z, t] : std::vector<std::pair<double, double>>{
                     {0.0, 0.0}, {0.2, 0.0}, {0.0, 0.2}, {0.2, 0.2}}) {
                FieldConfig f = base.field();
                f.zeta = z;
                f.tau0 = t;
                const ModelParams model = base.with_field(f);
                for (int n = 0; n < 3; ++n)
                    ok = ok && spectrum::energy(model, {n + 1, m}) <
                                   spectrum::energy(model, {n, m});
            }
        }
        report.checks.push_back(
            {"energy_decreasing_in_n", ok, "strict decrease over n = 0..3"});
    }
    {
        int agree = 0;
        for (const auto& row : report.rows) agree += row.sign_agreement;
        report.checks.push_back(
            {"sign_agreement_count", true,
             std::to_string(agree) + "/" + std::to_string(report.rows.size()) +
                 " cells match the reference sign"});
    }

    report.convention_note =
        "computed values use the natural-units preset (hbar=mu=e=c=k_B=1); "
        "the reference tables are published in eV without a stated conversion, "
        "so per-cell deviations report the offset rather than asserting it away";
    return report;
}

FigureData figure_data(int id, char panel) {
    if (id < 1 || id > 16) throw DomainError("figure", "id must be 1..16");
    if (panel < 'a' || panel > 'd') throw DomainError("figure", "panel must be a..d");

    static const char* kObservable[17] = {
        "",  "Z", "U", "C", "S", "F", "I", "chi", "M",
        "Z", "U", "C", "S", "F", "M", "chi", "I"};
    const std::string y_name = kObservable[id];
    const FluxModel flux = id <= 8 ? FluxModel::Linear : FluxModel::Exponential;

    ModelParams model = default_model();
    FieldConfig f = model.field();
    f.flux_model = flux;
    f.zeta = 0.2;
    f.tau0 = 0.2;
    model = model.with_field(f);

    thermo::ThermoInput in;
    in.beta = 1.0;
    in.m = 0.0;
    in.n_max = 3;
    in.method = thermo::Method::PoissonClosedForm;

    SweepSpec spec(model, in);
    switch (panel) {
    case 'a':
        spec.variable = SweepVariable::Tau0;
        spec.start = 0.0;
        spec.stop = 2.0;
        spec.steps = 200;
        break;
    case 'b':
        spec.variable = SweepVariable::Zeta;
        spec.start = 0.0;
        spec.stop = 10.0;
        spec.steps = 200;
        break;
    case 'c':
        spec.variable = SweepVariable::Beta;
        spec.start = 0.1;
        spec.stop = 5.0;
        spec.steps = 200;
        break;
    default:
        spec.variable = SweepVariable::NMax;
        spec.start = 0.0;
        spec.stop = 20.0;
        spec.steps = 21;
        break;
    }

    FigureData data;
    data.id = id;
    data.panel = panel;
    data.y_name = y_name;
    switch (spec.variable) {
    case SweepVariable::Tau0: data.x_name = "tau0"; break;
    case SweepVariable::Zeta: data.x_name = "zeta"; break;
    case SweepVariable::Beta: data.x_name = "beta"; break;
    default: data.x_name = "n_max"; break;
    }

    for (const auto& pt : run_sweep(spec)) {
        data.x.push_back(pt.x);
        const auto& p = pt.props;
        double y = 0.0;
        if (y_name == "Z") y = p.Z;
        else if (y_name == "U") y = p.U;
        else if (y_name == "C") y = p.C;
        else if (y_name == "S") y = p.S;
        else if (y_name == "F") y = p.F;
        else if (y_name == "M") y = p.M;
        else if (y_name == "chi") y = p.chi;
        else y = p.I_persistent;
        data.y.push_back(y);
    }
    return data;
}

namespace {

void add_check(ValidationSummary& s, const std::string& name, bool pass,
               const std::string& detail) {
    s.checks.push_back({name, pass, detail});
}

void validation_fast(ValidationSummary& s) {
    // model validation behaves as specified
    {
        bool ok = true;
        try {
            tables::reference_model(1);
        } catch (const Error&) {
            ok = false;
        }
        try {
            RawModel bad;
            bad.potential = {0.2, 1.0, 1.0, 0.1, 0.3, 0.0};
            validate(bad);
            ok = false;
        } catch (const DomainError&) {
        }
        add_check(s, "model_validation", ok, "canonical model accepted, alpha=0 rejected");
    }
    // special-function identity erfi = (2/sqrt(pi)) e^{x^2} dawson
    {
        double worst = 0.0;
        for (int i = 0; i <= 100; ++i) {
            const double x = -5.0 + 0.1 * i;
            const double lhs = specfun::erfi(x);
            const double rhs = 1.1283791670955126 * std::exp(x * x) *
                               specfun::dawson(x);
            const double scale = std::max(1.0, std::fabs(lhs));
            worst = std::max(worst, std::fabs(lhs - rhs) / scale);
        }
        add_check(s, "erfi_dawson_identity", worst <= 1e-14,
                  "max rel dev " + fmt17(worst));
    }
    // scaled erfi stays finite far beyond the double range
    {
        const auto v = specfun::erfi_scaled(40.0);
        const bool ok = std::isfinite(v.mantissa) && v.log_scale > 1500.0;
        add_check(s, "erfi_scaled_finite", ok,
                  "erfi_scaled(40) log-magnitude " + fmt17(v.log_abs()));
    }
    // generic quantization root-solve agrees with the closed form
    {
        const ModelParams model = tables::reference_model(1);
        double worst = 0.0;
        for (int n = 0; n <= 3; ++n) {
            const double e_closed = spectrum::energy(model, {n, 0.0});
            const double e_solved = spectrum::energy_via_nufa(model, {n, 0.0});
            worst = std::max(worst, std::fabs(e_solved - e_closed) /
                                        std::fabs(e_closed));
        }
        add_check(s, "quantization_closure", worst <= 1e-12,
                  "max rel dev " + fmt17(worst));
    }
    // degeneracy and monotonicity structure
    {
        const auto report = reproduce_table(1);
        bool ok = true;
        for (const auto& c : report.checks)
            if (c.name != "sign_agreement_count") ok = ok && c.pass;
        add_check(s, "table_structure", ok, "degeneracy and monotonicity checks");
    }
    // closed form equals boundary terms + quadrature at beta = 1
    {
        const ModelParams model = tables::reference_model(1);
        thermo::ThermoInput in;
        in.beta = 1.0;
        const auto tc = thermo::thermo_coefficients(model, in.m, in.n_max);
        auto f = [&](double x) {
            const double d = x + tc.nu;
            const double g = tc.big_xi / (2.0 * d) + d / 2.0;
            return std::exp(in.beta * (tc.p * g * g - tc.q_shift));
        };
        const auto quad = oracle::quad_adaptive(f, 0.0, in.n_max + 1.0, 1e-12);
        const double z_ref = 0.5 * (f(0.0) - f(in.n_max + 1.0)) + quad.value;
        const double z = thermo::partition_poisson(model, in);
        const double dev = std::fabs(z - z_ref) / z_ref;
        add_check(s, "poisson_quadrature_identity", dev <= 1e-8,
                  "rel dev " + fmt17(dev));
    }
    // derivative consistency of the closed forms at beta = 1
    {
        const ModelParams model = tables::reference_model(1);
        thermo::ThermoInput in;
        in.beta = 1.0;
        auto lnz = [&](double b) {
            thermo::ThermoInput v = in;
            v.beta = b;
            return thermo::log_partition(model, v);
        };
        const double u = thermo::internal_energy(model, in);
        const double u_fd = -oracle::richardson_derivative(
            lnz, in.beta, oracle::DerivativeOrder::First);
        const double dev = std::fabs(u - u_fd) / std::max(1.0, std::fabs(u));
        add_check(s, "internal_energy_derivative", dev <= 1e-6,
                  "rel dev " + fmt17(dev));
    }
    // golden regression of the two partition routes
    {
        const ModelParams model = tables::reference_model(1);
        thermo::ThermoInput in;
        in.beta = 1.0;
        const double zd = thermo::partition_direct(model, in);
        const double zp = thermo::partition_poisson(model, in);
        const bool ok = std::fabs(zd - 3.8772142468740351) < 1e-12 &&
                        std::fabs(zp - 3.8692563131825934) < 1e-12;
        add_check(s, "partition_golden_values", ok,
                  "Z_direct " + fmt17(zd) + ", Z_closed " + fmt17(zp));
    }
}

void validation_full(ValidationSummary& s) {
    // quadrature identity across the beta grid, both flux models
    {
        double worst = 0.0;
        for (int table : {1, 2}) {
            const ModelParams model = tables::reference_model(table);
            for (double beta : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
                thermo::ThermoInput in;
                in.beta = beta;
                const auto tc = thermo::thermo_coefficients(model, in.m, in.n_max);
                auto f = [&](double x) {
                    const double d = x + tc.nu;
                    const double g = tc.big_xi / (2.0 * d) + d / 2.0;
                    return std::exp(beta * (tc.p * g * g - tc.q_shift));
                };
                const auto quad =
                    oracle::quad_adaptive(f, 0.0, in.n_max + 1.0, 1e-12);
                const double z_ref =
                    0.5 * (f(0.0) - f(in.n_max + 1.0)) + quad.value;
                const double z = thermo::partition_poisson(model, in);
                worst = std::max(worst, std::fabs(z - z_ref) / z_ref);
            }
        }
        add_check(s, "poisson_quadrature_grid", worst <= 1e-8,
                  "max rel dev " + fmt17(worst));
    }
    // numerical eigenvalues of the approximated radial equation vs the
    // closed form; reported honestly (see README on the known gap)
    {
        const ModelParams model = tables::reference_model(1);
        double worst = 0.0;
        const auto eig = oracle::ode_eigenvalues(model, 0.0, {0, 1, 2, 3});
        for (int n = 0; n <= 3; ++n) {
            const double e_closed = spectrum::energy(model, {n, 0.0});
            worst = std::max(worst, std::fabs(eig.energies[n] - e_closed) /
                                        std::fabs(e_closed));
        }
        add_check(s, "ode_oracle_agreement", worst <= 1e-6,
                  "max rel dev " + fmt17(worst));
    }
}

} // namespace

ValidationSummary run_validation(ValidateLevel level) {
    ValidationSummary summary;
    validation_fast(summary);
    if (level == ValidateLevel::Full) validation_full(summary);
    summary.all_pass = true;
    for (const auto& c : summary.checks) summary.all_pass &= c.pass;
    return summary;
}

namespace {

int cmd_spectrum(const ParsedArgs& p, std::ostream& out, std::ostream& err) {
    const ModelParams model = model_from_options(p);
    const int n_min = to_int("n-min", option_or(p, "n-min", "0"));
    const int n_max = to_int("n-max", option_or(p, "n-max", "3"));
    const std::vector<double> ms =
        parse_list("m-list", option_or(p, "m-list", "-1,0,1"));
    const std::string format = option_or(p, "format", "csv");
    Sink sink(p, out);

    struct Row { int n; double m, e; };
    std::vector<Row> rows;
    try {
        for (int n = n_min; n <= n_max; ++n)
            for (double m : ms)
                rows.push_back({n, m, spectrum::energy(model, {n, m})});
    } catch (const ComplexExponent& e) {
        err << "spectrum: " << e.what() << '\n';
        return kExitNoBoundState;
    }

    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows)
            j.push_back({{"n", r.n}, {"m", r.m}, {"E", r.e}});
        sink.out() << j.dump(2) << '\n';
    } else {
        sink.out() << "n,m,E\n";
        for (const auto& r : rows)
            sink.out() << r.n << ',' << fmt17(r.m) << ',' << fmt17(r.e) << '\n';
    }
    return kExitOk;
}

int cmd_tables(const ParsedArgs& p, std::ostream& out, std::ostream&) {
    const std::string which = option_or(p, "which", "table1");
    int table = 0;
    if (which == "table1") table = 1;
    else if (which == "table2") table = 2;
    else throw DomainError("usage", "--which expects table1 or table2");

    const auto report = reproduce_table(table);
    const std::string format = option_or(p, "format", "json");
    Sink sink(p, out);

    if (format == "csv") {
        sink.out() << "table,n,m,zeta,tau0,computed,paper_value,abs_dev,rel_dev,"
                      "convention_confirmed,sign_agreement\n";
        for (const auto& r : report.rows)
            sink.out() << r.table << ',' << r.n << ',' << fmt17(r.m) << ','
                       << fmt17(r.zeta) << ',' << fmt17(r.tau0) << ','
                       << fmt17(r.computed) << ',' << fmt17(r.paper_value)
                       << ',' << fmt17(r.abs_dev) << ',' << fmt17(r.rel_dev)
                       << ',' << r.convention_confirmed << ','
                       << r.sign_agreement << '\n';
        return kExitOk;
    }

    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : report.rows)
        j["rows"].push_back({{"table", r.table},
                             {"n", r.n},
                             {"m", r.m},
                             {"zeta", r.zeta},
                             {"tau0", r.tau0},
                             {"computed", r.computed},
                             {"paper_value", r.paper_value},
                             {"abs_dev", r.abs_dev},
                             {"rel_dev", r.rel_dev},
                             {"convention_confirmed", r.convention_confirmed},
                             {"sign_agreement", r.sign_agreement}});
    j["checks"] = nlohmann::json::array();
    for (const auto& c : report.checks)
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["convention_note"] = report.convention_note;
    sink.out() << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_figure(const ParsedArgs& p, std::ostream& out, std::ostream& err) {
    if (p.options.find("id") == p.options.end()) {
        err << "figure: --id is required\n";
        return kExitUsage;
    }
    const int id = to_int("id", p.options.at("id"));
    const std::string panel_str = option_or(p, "panel", "a");
    if (panel_str.size() != 1) {
        err << "figure: --panel expects a single letter a..d\n";
        return kExitUsage;
    }
    FigureData data;
    try {
        data = figure_data(id, panel_str[0]);
    } catch (const DomainError& e) {
        err << "figure: " << e.what() << '\n';
        return kExitUsage;
    }
    Sink sink(p, out);
    sink.out() << data.x_name << ',' << data.y_name << '\n';
    for (size_t i = 0; i < data.x.size(); ++i)
        sink.out() << fmt17(data.x[i]) << ',' << fmt17(data.y[i]) << '\n';
    return kExitOk;
}

int cmd_thermo(const ParsedArgs& p, std::ostream& out, std::ostream&) {
    ModelParams model = model_from_options(p);
    thermo::ThermoInput in;
    in.beta = to_double("beta", option_or(p, "beta", "1"));
    in.m = to_double("m", option_or(p, "m", "0"));
    in.n_max = to_int("n-max", option_or(p, "n-max", "3"));
    const std::string method = option_or(p, "method", "poisson");
    if (method == "direct") in.method = thermo::Method::DirectSum;
    else if (method == "poisson") in.method = thermo::Method::PoissonClosedForm;
    else throw DomainError("usage", "--method expects direct or poisson");

    const std::string format = option_or(p, "format", "csv");
    Sink sink(p, out);

    std::vector<SweepPoint> points;
    std::string x_name = "beta";
    if (p.options.count("sweep") != 0u) {
        SweepSpec spec(model, in);
        const std::string var = p.options.at("sweep");
        if (var == "tau0") spec.variable = SweepVariable::Tau0;
        else if (var == "zeta") spec.variable = SweepVariable::Zeta;
        else if (var == "beta") spec.variable = SweepVariable::Beta;
        else if (var == "n_max") spec.variable = SweepVariable::NMax;
        else if (var == "m") spec.variable = SweepVariable::M;
        else throw DomainError("usage", "--sweep expects tau0|zeta|beta|n_max|m");
        x_name = var;
        spec.start = to_double("start", option_or(p, "start", "0.1"));
        spec.stop = to_double("stop", option_or(p, "stop", "5"));
        spec.steps = to_int("steps", option_or(p, "steps", "200"));
        points = run_sweep(spec);
    } else {
        points.push_back({in.beta, thermo::thermo_suite(model, in)});
    }

    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& pt : points)
            j.push_back({{x_name, pt.x},
                         {"Z", pt.props.Z},
                         {"F", pt.props.F},
                         {"U", pt.props.U},
                         {"S", pt.props.S},
                         {"C", pt.props.C},
                         {"M", pt.props.M},
                         {"chi", pt.props.chi},
                         {"I", pt.props.I_persistent},
                         {"method_deviation", pt.props.method_deviation}});
        sink.out() << j.dump(2) << '\n';
        return kExitOk;
    }
    sink.out() << x_name << ",Z,F,U,S,C,M,chi,I,method_deviation\n";
    for (const auto& pt : points) {
        const auto& r = pt.props;
        sink.out() << fmt17(pt.x) << ',' << fmt17(r.Z) << ',' << fmt17(r.F)
                   << ',' << fmt17(r.U) << ',' << fmt17(r.S) << ','
                   << fmt17(r.C) << ',' << fmt17(r.M) << ',' << fmt17(r.chi)
                   << ',' << fmt17(r.I_persistent) << ','
                   << fmt17(r.method_deviation) << '\n';
    }
    return kExitOk;
}

int cmd_validate(const ParsedArgs& p, std::ostream& out, std::ostream&) {
    const std::string level_str = option_or(p, "level", "fast");
    ValidateLevel level;
    if (level_str == "fast") level = ValidateLevel::Fast;
    else if (level_str == "full") level = ValidateLevel::Full;
    else throw DomainError("usage", "--level expects fast or full");

    const auto summary = run_validation(level);
    Sink sink(p, out);
    nlohmann::json j;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : summary.checks)
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["all_pass"] = summary.all_pass;
    sink.out() << j.dump(2) << '\n';
    return summary.all_pass ? kExitOk : kExitValidationFailure;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    ParsedArgs parsed;
    try {
        parsed = parse_args(args);
    } catch (const DomainError& e) {
        err << "usage: mobius <spectrum|tables|figure|thermo|validate> [--options]\n"
            << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (parsed.command == "spectrum") return cmd_spectrum(parsed, out, err);
        if (parsed.command == "tables") return cmd_tables(parsed, out, err);
        if (parsed.command == "figure") return cmd_figure(parsed, out, err);
        if (parsed.command == "thermo") return cmd_thermo(parsed, out, err);
        if (parsed.command == "validate") return cmd_validate(parsed, out, err);
        err << "unknown subcommand: " << parsed.command << '\n';
        return kExitUsage;
    } catch (const ComplexExponent& e) {
        err << "error: " << e.what() << '\n';
        return kExitNoBoundState;
    } catch (const NoBoundState& e) {
        err << "error: " << e.what() << '\n';
        return kExitNoBoundState;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return e.field() == "usage" ? kExitUsage : kExitConfigError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidationFailure;
    }
}

} // namespace mobius::cli
