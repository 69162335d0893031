// Command-line front end: membership tests, certified constructions,
// emptiness and general-position probes, threshold scans. Every report is
// JSON (or CSV for scans), carries the seed, and is byte-reproducible.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "terracini/reports.hpp"

namespace {

using namespace terracini;

struct CommonOpts {
    std::string field = "q";  // "q" or "fp:<p>"
    std::uint64_t seed = 0;
    bool fast = false;
    std::string out;  // empty = stdout
};

void write_output(const CommonOpts& opts, const std::string& text) {
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opts.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output path: " + opts.out);
    f << text;
}

std::optional<std::uint64_t> parse_fp(const std::string& field) {
    if (field == "q" || field == "Q") return std::nullopt;
    if (field.rfind("fp:", 0) == 0 || field.rfind("Fp:", 0) == 0)
        return std::stoull(field.substr(3));
    throw InvalidInput("unknown field spec: " + field + " (expected q or fp:<prime>)");
}

RankStrategy make_strategy(const CommonOpts& opts) {
    return opts.fast ? RankStrategy::multi_prime(3, 31, opts.seed)
                     : RankStrategy::fraction_free();
}

Json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot read file: " + path);
    return Json::parse(f);
}

// "a..b" inclusive range
std::pair<unsigned, unsigned> parse_range(const std::string& s) {
    const auto pos = s.find("..");
    if (pos == std::string::npos) {
        const unsigned v = static_cast<unsigned>(std::stoul(s));
        return {v, v};
    }
    return {static_cast<unsigned>(std::stoul(s.substr(0, pos))),
            static_cast<unsigned>(std::stoul(s.substr(pos + 2)))};
}

template <class F>
RationalCurve<F> parse_curve(const F& field, const std::string& curve_spec,
                             const std::string& curve_file, unsigned n) {
    if (!curve_file.empty()) return rational_curve_from_json(field, load_json(curve_file));
    if (curve_spec == "line") return line_curve(field, n);
    if (curve_spec.rfind("rnc:", 0) == 0)
        return rational_normal_curve(field, static_cast<unsigned>(std::stoul(curve_spec.substr(4))));
    throw InvalidInput("unknown curve: " + curve_spec + " (expected line, rnc:<d>, or a file)");
}

int cmd_thresholds(const CommonOpts& opts, unsigned n, unsigned m, unsigned e) {
    const auto t = thresholds(n, m, e);
    write_output(opts, dump_report(report_envelope("thresholds", opts.seed, threshold_to_json(t))));
    return 0;
}

template <class F>
int cmd_membership_typed(const F& field, const CommonOpts& opts, const Json& pts_doc, unsigned d) {
    const auto set = point_set_from_json(field, pts_doc);
    MembershipVerdict v;
    if constexpr (F::is_prime_field) {
        v = membership(field, set, d);
    } else {
        v = membership(field, set, d, make_strategy(opts));
    }
    Json report{{"input", Json{{"d", d}, {"points", point_set_to_json(field, set)}}},
                {"verdict", verdict_to_json(v)}};
    write_output(opts, dump_report(report_envelope("membership", opts.seed, report)));
    return 0;
}

int cmd_membership(const CommonOpts& opts, const std::string& points_path, unsigned d,
                   bool field_given) {
    const Json doc = load_json(points_path);
    std::string field_spec = opts.field;
    if (!field_given && doc.contains("field")) {
        const auto& f = doc.at("field");
        field_spec = f.is_string() ? "q" : "fp:" + std::to_string(f.at("Fp").get<std::uint64_t>());
    }
    if (const auto p = parse_fp(field_spec)) return cmd_membership_typed(PrimeField(*p), opts, doc, d);
    return cmd_membership_typed(RationalField{}, opts, doc, d);
}

int cmd_construct_rational(const CommonOpts& opts, unsigned n, unsigned m,
                           const std::string& curve_spec, const std::string& curve_file,
                           std::optional<std::size_t> k) {
    if (const auto p = parse_fp(opts.field)) {
        PrimeField field(*p);
        const auto curve = parse_curve(field, curve_spec, curve_file, n);
        const auto ex = construct_on_rational_curve(field, n, m, curve, k, opts.seed);
        write_output(opts,
                     dump_report(report_envelope("construct", opts.seed, example_to_json(field, ex))));
        return 0;
    }
    RationalField field;
    const auto curve = parse_curve(field, curve_spec, curve_file, n);
    const auto ex = construct_on_rational_curve(field, n, m, curve, k, opts.seed, make_strategy(opts));
    write_output(opts,
                 dump_report(report_envelope("construct", opts.seed, example_to_json(field, ex))));
    return 0;
}

int cmd_construct_elliptic(const CommonOpts& opts, unsigned dprime, std::uint64_t p,
                           const std::string& a, const std::string& b, const std::string& base) {
    if (parse_fp(opts.field)) p = *parse_fp(opts.field);
    if (opts.field == "q" || opts.field == "Q") {
        if (!base.empty()) {
            RationalField field;
            const auto curve =
                make_weierstrass(field, field.from_string(a), field.from_string(b));
            const auto comma = base.find(',');
            if (comma == std::string::npos) throw InvalidInput("--base expects x,y");
            const auto bp = ECPoint<RationalField>::affine(
                field.from_string(base.substr(0, comma)), field.from_string(base.substr(comma + 1)));
            if (!ec_on_curve(field, curve, bp)) throw InvalidInput("base point is not on the curve");
            const auto ex = construct_elliptic_even(
                field, curve, dprime, opts.seed, ECPoint<RationalField>::infinity(),
                std::optional<ECPoint<RationalField>>(bp));
            write_output(opts, dump_report(report_envelope("construct", opts.seed,
                                                           example_to_json(field, ex))));
            return 0;
        }
        // no base point supplied: fall through to the default prime field
    }
    PrimeField field(p);
    const auto curve = make_weierstrass(field, field.from_string(a), field.from_string(b));
    const auto ex = construct_elliptic_even(field, curve, dprime, opts.seed);
    write_output(opts,
                 dump_report(report_envelope("construct", opts.seed, example_to_json(field, ex))));
    return 0;
}

int cmd_probe_rnc(const CommonOpts& opts, unsigned dprime, std::size_t k, int trials) {
    ProbeReport report;
    if (const auto p = parse_fp(opts.field)) {
        report = probe_emptiness_rnc(PrimeField(*p), dprime, k, trials, opts.seed);
    } else {
        report = probe_emptiness_rnc(RationalField{}, dprime, k, trials, opts.seed);
    }
    write_output(opts, dump_report(report_envelope("probe", opts.seed, probe_to_json(report))));
    return 0;
}

int cmd_probe_elliptic_odd(const CommonOpts& opts, unsigned dprime, std::size_t k, int trials,
                           std::uint64_t p, const std::string& a, const std::string& b) {
    PrimeField field(parse_fp(opts.field).value_or(p));
    const auto curve = make_weierstrass(field, field.from_string(a), field.from_string(b));
    const auto report = probe_emptiness_elliptic_odd(field, curve, dprime, k, trials, opts.seed);
    write_output(opts, dump_report(report_envelope("probe", opts.seed, probe_to_json(report))));
    return 0;
}

int cmd_ah(const CommonOpts& opts, unsigned n, unsigned d, std::size_t k, int trials) {
    ProbeReport report;
    if (const auto p = parse_fp(opts.field)) {
        report = ah_probe(PrimeField(*p), n, d, k, trials, opts.seed);
    } else {
        report = ah_probe(RationalField{}, n, d, k, trials, opts.seed, make_strategy(opts));
    }
    write_output(opts, dump_report(report_envelope("ah", opts.seed, probe_to_json(report))));
    return 0;
}

int cmd_scan(const CommonOpts& opts, unsigned n, const std::string& m_range,
             const std::string& curve_spec, const std::string& curve_file,
             const std::string& format) {
    RationalField field;
    const auto [m_lo, m_hi] = parse_range(m_range);
    std::ostringstream csv;
    csv << scan_csv_header();
    Json rows = Json::array();
    for (unsigned m = m_lo; m <= m_hi; ++m) {
        const auto curve = parse_curve(field, curve_spec, curve_file, n);
        const auto t = thresholds(n, m, curve.degree);
        std::optional<CertifiedExample<RationalField>> ex;
        if (t.feasible)
            ex = construct_on_rational_curve(field, n, m, curve, std::nullopt,
                                             derive_seed(opts.seed, m), make_strategy(opts));
        csv << scan_csv_row(t, ex ? &*ex : nullptr);
        Json row{{"thresholds", threshold_to_json(t)}};
        row["example"] = ex ? example_to_json(field, *ex) : Json(nullptr);
        rows.push_back(std::move(row));
    }
    if (format == "csv") {
        write_output(opts, csv.str());
    } else {
        write_output(opts, dump_report(report_envelope("scan", opts.seed, rows)));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Terracini locus toolkit: exact membership tests, certified example "
                 "constructions, and emptiness probes for Veronese re-embeddings"};
    app.require_subcommand(1);
    app.fallthrough();  // allow global flags after the subcommand name

    CommonOpts opts;
    app.add_option("--field", opts.field, "working field: q or fp:<prime>")->capture_default_str();
    app.add_option("--seed", opts.seed, "RNG seed (echoed in the report)");
    app.add_flag("--fast", opts.fast, "multi-prime Monte Carlo ranks instead of fraction-free");
    app.add_option("--out", opts.out, "output path (default: stdout)");

    auto* sub_thresholds = app.add_subcommand("thresholds", "curve-based existence thresholds");
    unsigned th_n = 2, th_m = 1, th_e = 1;
    sub_thresholds->add_option("--n", th_n, "ambient projective dimension")->required();
    sub_thresholds->add_option("--m", th_m, "Veronese degree")->required();
    sub_thresholds->add_option("--e", th_e, "auxiliary curve degree")->capture_default_str();

    auto* sub_membership = app.add_subcommand("membership", "decide Terracini membership");
    std::string points_path;
    unsigned mem_d = 1;
    sub_membership->add_option("--points", points_path, "point set JSON file")->required();
    sub_membership->add_option("--d", mem_d, "Veronese degree")->required();
    unsigned mem_n = 0;
    sub_membership->add_option("--n", mem_n, "ambient dimension (checked against the file)");

    auto* sub_construct = app.add_subcommand("construct", "build certified non-empty examples");
    sub_construct->require_subcommand(1);
    auto* con_rational = sub_construct->add_subcommand("rational", "points on a rational curve");
    unsigned cr_n = 2, cr_m = 4;
    long cr_k = -1;
    std::string cr_curve = "line", cr_curve_file;
    con_rational->add_option("--n", cr_n)->required();
    con_rational->add_option("--m", cr_m)->required();
    con_rational->add_option("--k", cr_k, "cardinality (default: minimal feasible k)");
    con_rational->add_option("--curve", cr_curve, "line or rnc:<d>")->capture_default_str();
    con_rational->add_option("--curve-file", cr_curve_file, "curve JSON document");
    auto* con_elliptic =
        sub_construct->add_subcommand("elliptic", "2-torsion divisor halving on a plane cubic");
    unsigned ce_dprime = 2;
    std::uint64_t ce_p = 10007;
    std::string ce_a = "1", ce_b = "1", ce_base;
    con_elliptic->add_option("--dprime", ce_dprime, "re-embedding degree (must be even)")->required();
    con_elliptic->add_option("--p", ce_p, "prime modulus")->capture_default_str();
    con_elliptic->add_option("--a", ce_a, "curve coefficient a")->capture_default_str();
    con_elliptic->add_option("--b", ce_b, "curve coefficient b")->capture_default_str();
    con_elliptic->add_option("--base", ce_base, "rational base point x,y (enables field q)");

    auto* sub_probe = app.add_subcommand("probe", "emptiness evidence by sampling");
    sub_probe->require_subcommand(1);
    auto* probe_rnc = sub_probe->add_subcommand("rnc", "rational normal curve targets");
    unsigned pr_dprime = 2;
    std::size_t pr_k = 1;
    int pr_trials = 100;
    probe_rnc->add_option("--dprime", pr_dprime)->required();
    probe_rnc->add_option("--k", pr_k)->required();
    probe_rnc->add_option("--trials", pr_trials)->capture_default_str();
    auto* probe_ell = sub_probe->add_subcommand("elliptic-odd", "odd-degree cubic re-embeddings");
    unsigned pe_dprime = 3;
    std::size_t pe_k = 4;
    int pe_trials = 100;
    std::uint64_t pe_p = 10007;
    std::string pe_a = "1", pe_b = "1";
    probe_ell->add_option("--dprime", pe_dprime)->required();
    probe_ell->add_option("--k", pe_k)->required();
    probe_ell->add_option("--trials", pe_trials)->capture_default_str();
    probe_ell->add_option("--p", pe_p)->capture_default_str();
    probe_ell->add_option("--a", pe_a)->capture_default_str();
    probe_ell->add_option("--b", pe_b)->capture_default_str();

    auto* sub_ah = app.add_subcommand("ah", "general-position rank probe");
    unsigned ah_n = 2, ah_d = 3;
    std::size_t ah_k = 1;
    int ah_trials = 50;
    sub_ah->add_option("--n", ah_n)->required();
    sub_ah->add_option("--d", ah_d)->required();
    sub_ah->add_option("--k", ah_k)->required();
    sub_ah->add_option("--trials", ah_trials)->capture_default_str();

    auto* sub_scan = app.add_subcommand("scan", "threshold + construction table over a range of m");
    unsigned sc_n = 2;
    std::string sc_m = "3..8", sc_curve = "line", sc_curve_file, sc_format = "csv";
    sub_scan->add_option("--n", sc_n)->required();
    sub_scan->add_option("--m", sc_m, "inclusive range a..b")->required();
    sub_scan->add_option("--curve", sc_curve)->capture_default_str();
    sub_scan->add_option("--curve-file", sc_curve_file);
    sub_scan->add_option("--format", sc_format, "csv or json")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    }

    if (const char* env_seed = std::getenv("TERRACINI_SEED")) opts.seed = std::stoull(env_seed);

    try {
        if (*sub_thresholds) return cmd_thresholds(opts, th_n, th_m, th_e);
        if (*sub_membership)
            return cmd_membership(opts, points_path, mem_d, app.count("--field") > 0);
        if (*con_rational)
            return cmd_construct_rational(opts, cr_n, cr_m, cr_curve, cr_curve_file,
                                          cr_k < 0 ? std::nullopt
                                                   : std::optional<std::size_t>(cr_k));
        if (*con_elliptic) return cmd_construct_elliptic(opts, ce_dprime, ce_p, ce_a, ce_b, ce_base);
        if (*probe_rnc) return cmd_probe_rnc(opts, pr_dprime, pr_k, pr_trials);
        if (*probe_ell) return cmd_probe_elliptic_odd(opts, pe_dprime, pe_k, pe_trials, pe_p, pe_a, pe_b);
        if (*sub_ah) return cmd_ah(opts, ah_n, ah_d, ah_k, ah_trials);
        if (*sub_scan) return cmd_scan(opts, sc_n, sc_m, sc_curve, sc_curve_file, sc_format);
    } catch (const terracini::Infeasible& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
