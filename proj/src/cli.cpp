#include "cqrel/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include "cqrel/algebra.hpp"
#include "cqrel/electrodynamics.hpp"
#include "cqrel/errors.hpp"
#include "cqrel/field_library.hpp"
#include "cqrel/io.hpp"
#include "cqrel/kernels.hpp"
#include "cqrel/lorentz.hpp"
#include "cqrel/minkowski.hpp"
#include "cqrel/random.hpp"
#include "cqrel/verify.hpp"

namespace cqrel::cli {

namespace {

using io::json;

class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Reads each "-" argument from stdin; stdin is consumed once and shared.
class Inputs {
  public:
    explicit Inputs(std::istream& in) : in_(in) {}

    json load(const std::string& arg, const std::string& what) {
        if (arg != "-") return io::parse(arg, what);
        if (!stdin_) {
            std::string text((std::istreambuf_iterator<char>(in_)), std::istreambuf_iterator<char>());
            stdin_ = io::parse(text, what + " (stdin)");
        }
        return *stdin_;
    }

  private:
    std::istream& in_;
    std::optional<json> stdin_;
};

std::array<double, 3> parse_triple(const std::string& text, const std::string& flag) {
    std::array<double, 3> v{};
    std::stringstream ss(text);
    std::string item;
    std::size_t n = 0;
    while (std::getline(ss, item, ',')) {
        if (n >= 3) throw UsageError(flag + ": expected three comma-separated numbers");
        try {
            std::size_t used = 0;
            v[n] = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(flag + ": component " + std::to_string(n) + " ('" + item + "') is not a number");
        }
        ++n;
    }
    if (n != 3) throw UsageError(flag + ": expected three comma-separated numbers");
    return v;
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const double h = std::stod(item, &used);
            if (used != item.size() || !(h > 0.0)) throw std::invalid_argument(item);
            v.push_back(h);
        } catch (const std::exception&) {
            throw UsageError(flag + ": '" + item + "' is not a positive number");
        }
    }
    if (v.size() < 2) throw UsageError(flag + ": need at least two step sizes");
    return v;
}

// Options shared by the field commands.
struct FieldOptions {
    std::string field = "plane-wave";
    std::string backend = "analytic";
    double h = 1e-3;
    int samples = 16;
    std::uint64_t seed = 1;
    std::optional<double> tol;
    bool json = false;
};

void add_field_options(CLI::App* cmd, FieldOptions& o) {
    cmd->add_option("--field", o.field, "Field name or JSON {\"name\":..., \"seed\":..., \"degree\":..., \"amplitude\":...}");
    cmd->add_option("--backend", o.backend, "analytic | fd2 | fd4");
    cmd->add_option("--h", o.h, "Finite-difference step")->check(CLI::PositiveNumber);
    cmd->add_option("--samples", o.samples, "Number of random sample events in [-1, 1]^4")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "Seed for sample events (and field, unless the JSON sets one)");
    cmd->add_option("--tol", o.tol, "Pass threshold")->check(CLI::NonNegativeNumber);
    cmd->add_flag("--json", o.json, "Emit JSON");
}

struct ResolvedField {
    FieldCase fc;
    DiffBackend backend;
    std::vector<Event> samples;
};

ResolvedField resolve(const FieldOptions& o, Inputs& inputs) {
    FieldCaseOptions fco;
    fco.seed = o.seed;
    std::string name = o.field;
    if (!o.field.empty() && (o.field.front() == '{' || o.field == "-")) {
        const json desc = inputs.load(o.field, "--field");
        if (!desc.is_object() || !desc.contains("name") || !desc["name"].is_string()) {
            throw io::ParseError("--field: expected an object with a string \"name\"");
        }
        name = desc["name"].get<std::string>();
        try {
            if (desc.contains("seed")) fco.seed = desc["seed"].get<std::uint64_t>();
            if (desc.contains("degree")) fco.degree = desc["degree"].get<int>();
            if (desc.contains("amplitude")) fco.amplitude = desc["amplitude"].get<double>();
        } catch (const json::exception&) {
            throw io::ParseError("--field: seed, degree and amplitude must be numbers");
        }
    }
    ResolvedField r;
    try {
        r.fc = make_case(name, fco);
        r.backend = DiffBackend{parse_mode(o.backend), o.h};
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Rng rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
    for (int n = 0; n < o.samples; ++n) r.samples.push_back(rng.event());
    return r;
}

// Analytic: 1e-10. Finite differences: 100 h^order plus a rounding floor.
double default_tolerance(const DiffBackend& b) {
    if (b.mode == DiffMode::kAnalytic) return 1e-10;
    return 100.0 * std::pow(b.h, stencil_order(b.mode)) + 1e-6;
}

json field_header(const ResolvedField& r, const FieldOptions& o, double tol) {
    return {{"field", r.fc.name},      {"backend", std::string(mode_name(r.backend.mode))},
            {"h", r.backend.h},        {"samples", o.samples},
            {"seed", o.seed},          {"tolerance", tol}};
}

int finish(bool pass, const json& report, bool as_json, const std::string& text, std::ostream& out) {
    if (as_json) {
        out << report.dump(2) << "\n";
    } else {
        out << text << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitOk : kExitVerificationFailed;
}

int maxwell_check(const FieldOptions& o, const std::string& sweep, Inputs& inputs, std::ostream& out) {
    const ResolvedField r = resolve(o, inputs);
    const double tol = o.tol.value_or(default_tolerance(r.backend));
    const MaxwellReport report = maxwell_report(r.fc.potential, r.fc.current, r.samples, r.backend);
    const bool pass = report.norms.overall_max() <= tol && report.norms.df_defect_max <= tol;

    json j = field_header(r, o, tol);
    json residuals = json::object();
    std::ostringstream text;
    text << "maxwell-check " << r.fc.name << " (" << mode_name(r.backend.mode) << ", h = " << r.backend.h << ")\n";
    for (std::size_t n = 0; n < kBasisSize; ++n) {
        const std::string label(kResidualLabels[n]);
        residuals[label] = {{"max", report.norms.max_abs[n]}, {"rms", report.norms.rms(n)}};
        text << "  " << label << "  max " << report.norms.max_abs[n] << "  rms " << report.norms.rms(n) << "\n";
    }
    j["residuals"] = residuals;
    j["df_imaginary_defect_max"] = report.norms.df_defect_max;
    text << "  DF + conj(DF)*  max " << report.norms.df_defect_max << "\n";

    if (!sweep.empty()) {
        if (r.backend.mode == DiffMode::kAnalytic) throw UsageError("--h-sweep requires --backend fd2 or fd4");
        const std::vector<double> steps = parse_list(sweep, "--h-sweep");
        const ConvergenceStudy study = convergence_study(r.fc.potential, r.fc.current, r.samples, r.backend.mode, steps);
        json points = json::array();
        for (const ConvergencePoint& p : study.points) {
            points.push_back({{"h", p.h}, {"max", p.max_abs}, {"rms", p.rms}});
            text << "  h = " << p.h << "  max " << p.max_abs << "  rms " << p.rms << "\n";
        }
        j["convergence"] = {{"mode", std::string(mode_name(study.mode))}, {"points", points}, {"order", study.order}};
        text << "  observed order " << study.order << "\n";
    }
    j["pass"] = pass;
    return finish(pass, j, o.json, text.str(), out);
}

int lagrangian_check(const FieldOptions& o, Inputs& inputs, std::ostream& out) {
    const ResolvedField r = resolve(o, inputs);
    const double tol = o.tol.value_or(1e-12);
    double worst = 0.0;
    json points = json::array();
    for (const Event& e : r.samples) {
        const LagrangianForms f = lagrangian_density(r.fc.potential, r.fc.current, e, r.backend, 1.0);
        worst = std::max(worst, std::abs(f.component - f.cq));
        points.push_back({{"event", io::to_json(e)}, {"component", f.component}, {"cq", f.cq}});
    }
    const bool pass = worst <= tol;
    json j = field_header(r, o, tol);
    j["max_form_difference"] = worst;
    j["points"] = points;
    j["pass"] = pass;
    std::ostringstream text;
    text << "lagrangian-check " << r.fc.name << ": max |component - cq| = " << worst << "\n";
    return finish(pass, j, o.json, text.str(), out);
}

int lorenz_check(const FieldOptions& o, Inputs& inputs, std::ostream& out) {
    const ResolvedField r = resolve(o, inputs);
    const double tol = o.tol.value_or(default_tolerance(r.backend));
    double worst = 0.0;
    for (const Event& e : r.samples) worst = std::max(worst, std::abs(lorenz_residual(r.fc.potential, e, r.backend)));
    const bool pass = worst <= tol;
    json j = field_header(r, o, tol);
    j["max_lorenz_residual"] = worst;
    j["in_lorenz_gauge"] = pass;
    j["pass"] = pass;
    std::ostringstream text;
    text << "lorenz-check " << r.fc.name << ": max |dt phi + div A| = " << worst << "\n";
    return finish(pass, j, o.json, text.str(), out);
}

int wave_check(const FieldOptions& o, Inputs& inputs, std::ostream& out) {
    const ResolvedField r = resolve(o, inputs);
    const double tol = o.tol.value_or(default_tolerance(r.backend));
    double wave_max = 0.0;
    double diff_max = 0.0;
    for (const Event& e : r.samples) {
        const CQNumber wave = wave_residual(r.fc.potential, r.fc.current, e, r.backend, tol);
        const MaxwellEntry m = maxwell_residual(r.fc.potential, r.fc.current, e, r.backend);
        wave_max = std::max(wave_max, max_abs(wave));
        diff_max = std::max(diff_max, distance(wave, CQNumber(m.residual)));
    }
    const bool pass = diff_max <= tol && wave_max <= tol;
    json j = field_header(r, o, tol);
    j["max_wave_residual"] = wave_max;
    j["max_wave_minus_maxwell"] = diff_max;
    j["pass"] = pass;
    std::ostringstream text;
    text << "wave-check " << r.fc.name << ": max |D D̄ A + J| = " << wave_max
         << ", max |wave - maxwell| = " << diff_max << "\n";
    return finish(pass, j, o.json, text.str(), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Special relativity and electrodynamics with complex quaternions", "cqrel"};
    app.require_subcommand(1);
    // --h is the step size, so help is long-form only.
    app.set_help_flag("--help", "Print this help message and exit");
    Inputs inputs(in);
    std::function<int()> action;

    // mul
    std::string mul_a, mul_b;
    auto* mul_cmd = app.add_subcommand("mul", "Product of two CQ numbers");
    mul_cmd->add_option("a", mul_a, "JSON array of 8 coefficients")->required();
    mul_cmd->add_option("b", mul_b, "JSON array of 8 coefficients")->required();
    mul_cmd->callback([&] {
        action = [&] {
            const CQNumber a = io::cq_from_json(inputs.load(mul_a, "a"), "a");
            const CQNumber b = io::cq_from_json(inputs.load(mul_b, "b"), "b");
            out << io::to_json(a * b).dump() << "\n";
            return kExitOk;
        };
    });

    // conj
    std::string conj_a, conj_kind = "quaternion";
    auto* conj_cmd = app.add_subcommand("conj", "Complex (*), quaternionic (bar) or both conjugations");
    conj_cmd->add_option("a", conj_a, "JSON array of 8 coefficients")->required();
    conj_cmd->add_option("--kind", conj_kind, "complex | quaternion | both")
        ->check(CLI::IsMember({"complex", "quaternion", "both"}));
    conj_cmd->callback([&] {
        action = [&] {
            const CQNumber a = io::cq_from_json(inputs.load(conj_a, "a"), "a");
            const CQNumber r = conj_kind == "complex" ? conj_complex(a) : conj_kind == "both" ? conj_both(a) : conj_quaternion(a);
            out << io::to_json(r).dump() << "\n";
            return kExitOk;
        };
    });

    // rotate / boost
    std::string rot_axis, boost_dir;
    double rot_angle = 0.0, boost_rapidity = 0.0;
    auto* rot_cmd = app.add_subcommand("rotate", "Rotor for a rotation by --angle radians about --axis");
    rot_cmd->add_option("--axis", rot_axis, "nx,ny,nz")->required();
    rot_cmd->add_option("--angle", rot_angle, "Angle in radians")->required();
    rot_cmd->callback([&] {
        action = [&] {
            const auto n = parse_triple(rot_axis, "--axis");
            out << io::to_json(rotor_rotation(UnitDirection(n[0], n[1], n[2]), rot_angle).value()).dump() << "\n";
            return kExitOk;
        };
    });
    auto* boost_cmd = app.add_subcommand("boost", "Rotor for a boost with --rapidity along --dir");
    boost_cmd->add_option("--dir", boost_dir, "nx,ny,nz")->required();
    boost_cmd->add_option("--rapidity", boost_rapidity, "Rapidity (v = tanh)")->required();
    boost_cmd->callback([&] {
        action = [&] {
            const auto n = parse_triple(boost_dir, "--dir");
            out << io::to_json(rotor_boost(UnitDirection(n[0], n[1], n[2]), boost_rapidity).value()).dump() << "\n";
            return kExitOk;
        };
    });

    // transform
    std::string tr_rotor, tr_event;
    double tr_tol = 1e-10;
    auto* tr_cmd = app.add_subcommand("transform", "Apply a rotor to an event (or an array of events)");
    tr_cmd->add_option("--rotor", tr_rotor, "JSON array of 8 coefficients")->required();
    tr_cmd->add_option("--event", tr_event, "JSON event object or array of events")->required();
    tr_cmd->add_option("--tol", tr_tol, "Allowed deviation of w w̄ from 1")->check(CLI::NonNegativeNumber);
    tr_cmd->callback([&] {
        action = [&] {
            const Rotor w = Rotor::from_value(io::cq_from_json(inputs.load(tr_rotor, "--rotor"), "--rotor"), tr_tol);
            const json ev = inputs.load(tr_event, "--event");
            if (ev.is_array()) {
                kernels::EventBatch batch(ev.size());
                for (std::size_t n = 0; n < ev.size(); ++n)
                    batch.set(n, io::event_from_json(ev[n], "--event[" + std::to_string(n) + "]"));
                kernels::EventBatch result;
                kernels::transform_events(w, batch, result);
                json arr = json::array();
                for (std::size_t n = 0; n < result.size(); ++n) arr.push_back(io::to_json(result.get(n)));
                out << arr.dump() << "\n";
            } else {
                out << io::to_json(apply_contravariant(w, io::event_from_json(ev, "--event"))).dump() << "\n";
            }
            return kExitOk;
        };
    });

    // interval / scalar-product
    std::string iv_event, sp_p, sp_q;
    auto* iv_cmd = app.add_subcommand("interval", "Proper interval t^2 - x^2 - y^2 - z^2 of an event");
    iv_cmd->add_option("--event", iv_event, "JSON event object")->required();
    iv_cmd->callback([&] {
        action = [&] {
            const Event e = io::event_from_json(inputs.load(iv_event, "--event"), "--event");
            out << io::number(proper_interval(embed(e))).dump() << "\n";
            return kExitOk;
        };
    });
    auto* sp_cmd = app.add_subcommand("scalar-product", "Minkowski scalar product <p, q>");
    sp_cmd->add_option("--p", sp_p, "JSON event object")->required();
    sp_cmd->add_option("--q", sp_q, "JSON event object")->required();
    sp_cmd->callback([&] {
        action = [&] {
            const Event p = io::event_from_json(inputs.load(sp_p, "--p"), "--p");
            const Event q = io::event_from_json(inputs.load(sp_q, "--q"), "--q");
            out << io::number(scalar_product(embed(p), embed(q))).dump() << "\n";
            return kExitOk;
        };
    });

    // field-strength
    FieldOptions fs_opts;
    std::string fs_event;
    auto* fs_cmd = app.add_subcommand("field-strength", "F, E and B of a built-in potential at an event");
    add_field_options(fs_cmd, fs_opts);
    fs_cmd->add_option("--event", fs_event, "JSON event object")->required();
    fs_cmd->callback([&] {
        action = [&] {
            const ResolvedField r = resolve(fs_opts, inputs);
            const Event e = io::event_from_json(inputs.load(fs_event, "--event"), "--event");
            const CQNumber f = field_strength(r.fc.potential, e, r.backend);
            const ElectricMagnetic eb = extract_EB(f, 1e-9);
            json j{{"field", r.fc.name},
                   {"event", io::to_json(e)},
                   {"F", io::to_json(f)},
                   {"E", {io::number(eb.e[0]), io::number(eb.e[1]), io::number(eb.e[2])}},
                   {"B", {io::number(eb.b[0]), io::number(eb.b[1]), io::number(eb.b[2])}}};
            out << (fs_opts.json ? j.dump(2) : j.dump()) << "\n";
            return kExitOk;
        };
    });

    // maxwell-check, lagrangian-check, lorenz-check, wave-check
    FieldOptions mx_opts, lg_opts, lz_opts, wv_opts;
    std::string mx_sweep;
    auto* mx_cmd = app.add_subcommand("maxwell-check", "Residual norms of DF + J over random sample events");
    add_field_options(mx_cmd, mx_opts);
    mx_cmd->add_option("--h-sweep", mx_sweep, "Comma-separated step sizes for a convergence study");
    mx_cmd->callback([&] { action = [&] { return maxwell_check(mx_opts, mx_sweep, inputs, out); }; });

    auto* lg_cmd = app.add_subcommand("lagrangian-check", "Component vs CQ form of the Lagrangian density");
    add_field_options(lg_cmd, lg_opts);
    lg_cmd->callback([&] { action = [&] { return lagrangian_check(lg_opts, inputs, out); }; });

    auto* lz_cmd = app.add_subcommand("lorenz-check", "Lorenz gauge residual dt phi + div A");
    add_field_options(lz_cmd, lz_opts);
    lz_cmd->callback([&] { action = [&] { return lorenz_check(lz_opts, inputs, out); }; });

    auto* wv_cmd = app.add_subcommand("wave-check", "Wave-equation form D D̄ A + J against DF + J");
    add_field_options(wv_cmd, wv_opts);
    wv_cmd->callback([&] { action = [&] { return wave_check(wv_opts, inputs, out); }; });

    // verify-identities
    std::uint64_t vf_seed = 42;
    std::optional<double> vf_tol;
    bool vf_json = false;
    bool vf_fault = false;
    auto* vf_cmd = app.add_subcommand("verify-identities", "Run the full identity suite");
    vf_cmd->add_option("--seed", vf_seed, "Seed");
    vf_cmd->add_option("--tol", vf_tol, "Replace every check's tolerance")->check(CLI::NonNegativeNumber);
    vf_cmd->add_flag("--json", vf_json, "Emit JSON");
    vf_cmd->add_flag("--inject-table-fault", vf_fault, "Test hook: run with a corrupted multiplication table")
        ->group("");
    vf_cmd->callback([&] {
        action = [&] {
            VerifyOptions opts;
            opts.seed = vf_seed;
            opts.tolerance = vf_tol;
            StructureConstants corrupted = kStructureConstants;
            if (vf_fault) {
                corrupted.table[kI][kJ].sign = static_cast<std::int8_t>(-corrupted.table[kI][kJ].sign);
                opts.table = &corrupted;
            }
            const VerificationReport report = verify_identities(opts);
            if (vf_json) {
                out << report.to_json().dump(2) << "\n";
            } else {
                out << report.to_text();
            }
            return report.pass() ? kExitOk : kExitVerificationFailed;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        return action();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const io::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidDirection& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace cqrel::cli
