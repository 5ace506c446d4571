// Command line front end for the generalized Reed-Muller calculator.
//
//   grmtool params affine --q 3 --n 2 --d 2
//   grmtool params projective --q 3 --n 2 --d 2 --oracle
//   grmtool spectrum affine --q 2 --n 3 --d 2 --csv
//   grmtool construct --family config-s --q 7 --n 2 --d 3
//   grmtool construct --family norm-form --q 2 --s 2 --g '<polynomial JSON>'
//   grmtool weight-of word.json
//   grmtool verify --suite delta --grid default --json
//
// Exit codes: 0 success (flagged checks included), 1 verification failure,
// 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "grm/constructions.hpp"
#include "grm/json_io.hpp"

namespace {

using grm::ordered_json;

grm::AffineForm unit_form(std::uint32_t n, std::uint32_t axis) {
    grm::AffineForm form;
    form.coeffs.assign(n, 0);
    form.coeffs.at(axis) = 1;
    return form;
}

ordered_json parse_json_text(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
    }
}

std::uint32_t parse_u32(const std::string& token, const std::string& entry) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(token, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != token.size() || token.empty() || v > 0xffffffffUL)
        throw std::invalid_argument("bad grid entry '" + entry +
                                    "': expected [affine:|projective:]q,n,d");
    return static_cast<std::uint32_t>(v);
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

grm::CodeKind natural_kind(const std::string& suite) {
    if (suite == "proj-min" || suite == "proj-second") return grm::CodeKind::projective;
    return grm::CodeKind::affine;
}

// grammar: "default", or semicolon-separated entries "q,n,d", each with an
// optional "affine:" or "projective:" prefix; bare entries take the suite's
// natural variant
std::vector<grm::GridPoint> parse_grid(const std::string& text, grm::CodeKind natural) {
    std::vector<grm::GridPoint> out;
    if (trim(text) == "default") return out;
    std::stringstream ss(text);
    std::string entry;
    while (std::getline(ss, entry, ';')) {
        entry = trim(entry);
        if (entry.empty()) continue;
        grm::GridPoint gp;
        gp.variant = natural;
        std::string triple = entry;
        auto colon = entry.find(':');
        if (colon != std::string::npos) {
            std::string kind = trim(entry.substr(0, colon));
            if (kind == "affine")
                gp.variant = grm::CodeKind::affine;
            else if (kind == "projective")
                gp.variant = grm::CodeKind::projective;
            else
                throw std::invalid_argument("bad grid entry '" + entry +
                                            "': unknown variant '" + kind + "'");
            triple = entry.substr(colon + 1);
        }
        std::vector<std::string> parts;
        std::stringstream ts(triple);
        std::string tok;
        while (std::getline(ts, tok, ',')) parts.push_back(trim(tok));
        if (parts.size() != 3)
            throw std::invalid_argument("bad grid entry '" + entry +
                                        "': expected [affine:|projective:]q,n,d");
        gp.q = parse_u32(parts[0], entry);
        gp.n = parse_u32(parts[1], entry);
        gp.d = parse_u32(parts[2], entry);
        out.push_back(gp);
    }
    if (out.empty()) throw std::invalid_argument("grid '" + text + "' names no points");
    return out;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
    CLI::App app{"affine and projective generalized Reed-Muller code calculator"};
    app.require_subcommand(1);
    app.fallthrough();

    int workers = 1;
    std::int64_t budget = grm::default_enum_budget();
    app.add_option("--workers", workers, "enumeration worker threads")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    app.add_option("--budget", budget,
                   "point-evaluation budget for enumerations (env GRM_ENUM_BUDGET)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::uint32_t q = 0, n = 0, d = 0;
    bool oracle = false;
    bool as_csv = false, as_json = false;

    auto* params = app.add_subcommand("params", "closed-form code parameters");
    params->require_subcommand(1);
    auto* params_affine = params->add_subcommand("affine", "length, dimension, w1, w2");
    params_affine->add_option("--q", q, "field size")->required();
    params_affine->add_option("--n", n, "number of variables")->required();
    params_affine->add_option("--d", d, "degree bound")->required();
    auto* params_proj =
        params->add_subcommand("projective", "length, dimension, w1, second-weight bracket");
    params_proj->add_option("--q", q, "field size")->required();
    params_proj->add_option("--n", n, "projective dimension")->required();
    params_proj->add_option("--d", d, "form degree")->required();
    params_proj->add_flag("--oracle", oracle, "append the brute-forced second weight");

    auto* spectrum = app.add_subcommand("spectrum", "full weight distribution by enumeration");
    spectrum->require_subcommand(1);
    auto* spectrum_affine = spectrum->add_subcommand("affine", "affine code spectrum");
    auto* spectrum_proj = spectrum->add_subcommand("projective", "projective code spectrum");
    for (auto* sub : {spectrum_affine, spectrum_proj}) {
        sub->add_option("--q", q, "field size")->required();
        sub->add_option("--n", n, "number of variables / projective dimension")->required();
        sub->add_option("--d", d, "degree bound")->required();
        sub->add_flag("--csv", as_csv, "emit weight,count rows instead of JSON");
    }

    std::string family, shifts_text, g_text;
    std::uint32_t ext_degree = 0;
    auto* construct = app.add_subcommand("construct", "build an extremal codeword");
    construct
        ->add_option("--family", family,
                     "maximal | arrangement | config-s | config-t | norm-form")
        ->required()
        ->check(CLI::IsMember(
            {"maximal", "arrangement", "config-s", "config-t", "norm-form"}));
    construct->add_option("--q", q, "field size (base prime for norm-form)");
    construct->add_option("--n", n, "number of variables");
    construct->add_option("--d", d, "degree bound");
    construct->add_option("--shifts", shifts_text,
                          "arrangement only: JSON array of shift arrays, block i along X_{i+1}");
    construct->add_option("--s", ext_degree, "norm-form only: extension degree");
    construct->add_option("--g", g_text,
                          "norm-form only: polynomial JSON over the extension field");

    std::string input_path = "-";
    auto* weight_of = app.add_subcommand("weight-of", "weight of a polynomial JSON word");
    weight_of->add_option("file", input_path, "polynomial JSON file, - for stdin");

    std::string suite, grid_text = "default";
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(grm::suite_names()));
    verify->add_option("--grid", grid_text, "default, or 'q,n,d;q,n,d;...'")
        ->capture_default_str();
    verify->add_flag("--json", as_json, "emit the report as JSON (default)");
    verify->add_flag("--csv", as_csv, "emit the report as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto ibudget = static_cast<std::int64_t>(budget);
    auto uworkers = static_cast<std::uint32_t>(workers);

    if (params_affine->parsed()) {
        emit(grm::params_to_json(grm::grm_params(q, n, d)));
        return 0;
    }
    if (params_proj->parsed()) {
        grm::PgrmParams p = grm::pgrm_params(q, n, d);
        std::optional<std::int64_t> w2;
        if (oracle) {
            grm::GridPoint gp{q, n, d, grm::CodeKind::projective};
            w2 = grm::kth_weight(grm::enum_spectrum(gp, ibudget, uworkers), 2);
        }
        emit(grm::params_to_json(p, w2));
        return 0;
    }
    if (spectrum_affine->parsed() || spectrum_proj->parsed()) {
        grm::GridPoint gp{q, n, d,
                          spectrum_proj->parsed() ? grm::CodeKind::projective
                                                  : grm::CodeKind::affine};
        grm::WeightDistribution dist = grm::enum_spectrum(gp, ibudget, uworkers);
        if (as_csv)
            std::cout << grm::spectrum_to_csv(dist);
        else
            emit(grm::spectrum_to_json(gp, dist));
        return 0;
    }
    if (construct->parsed()) {
        ordered_json out;
        if (family == "norm-form") {
            grm::require(q >= 2 && ext_degree >= 2, "norm-form needs --q and --s >= 2");
            grm::require(!g_text.empty(), "norm-form needs --g");
            grm::Field base = grm::Field::from_order(q);
            grm::require(base.m() == 1, "norm-form base field must be prime");
            grm::ReducedPoly g = grm::poly_from_json(parse_json_text(g_text));
            grm::require(g.field().p() == base.p() && g.field().m() == ext_degree,
                         "--g must live over GF(q^s)");
            grm::NormFormSpec spec{grm::ExtensionMap(base, g.field()), g,
                                   static_cast<std::uint32_t>(g.total_degree())};
            grm::ReducedPoly f = grm::norm_form(spec);
            out = grm::poly_to_json(f);
            out["family"] = family;
            out["field"] = grm::field_to_json(base);
            out["ext_field"] = grm::field_to_json(g.field());
            out["zeros"] = grm::count_zeros_affine(f);
        } else {
            grm::require(q >= 2 && n >= 1, "family needs --q and --n");
            grm::Field field = grm::Field::from_order(q);
            grm::ReducedPoly f(field, n);
            std::int64_t predicted = 0;
            if (family == "maximal") {
                grm::SplitAB ab = grm::split_ab(d, q);
                std::uint32_t nforms = ab.b > 0 ? ab.a + 1 : ab.a;
                std::vector<grm::AffineForm> dirs;
                for (std::uint32_t i = 0; i < nforms; ++i) dirs.push_back(unit_form(n, i));
                std::vector<grm::felem> a_shifts(ab.a, 0);
                std::vector<grm::felem> b_shifts;
                for (std::uint32_t i = 0; i < ab.b; ++i)
                    b_shifts.push_back(static_cast<grm::felem>(i));
                f = grm::maximal_codeword(field, n, d, dirs, 1, a_shifts, b_shifts);
                predicted = grm::checked_pow(q, n) - grm::min_distance_affine(q, n, d);
            } else {
                grm::Arrangement arr{field, n, {}};
                if (family == "arrangement") {
                    grm::require(!shifts_text.empty(), "arrangement needs --shifts");
                    ordered_json js = parse_json_text(shifts_text);
                    grm::require(js.is_array() && !js.empty(),
                                 "--shifts must be a nonempty JSON array of arrays");
                    std::uint32_t axis = 0;
                    for (const auto& block : js) {
                        grm::require(block.is_array(), "each shift block must be an array");
                        grm::HyperplaneBlock blk{unit_form(n, axis++), {}};
                        for (const auto& sh : block) {
                            grm::require(sh.is_number_integer(), "shifts must be integers");
                            auto v = sh.get<std::int64_t>();
                            grm::require(v >= 0 && v < static_cast<std::int64_t>(q),
                                         "shift out of field range");
                            blk.shifts.push_back(static_cast<grm::felem>(v));
                        }
                        arr.blocks.push_back(std::move(blk));
                    }
                    grm::detail::validate_arrangement(arr);
                } else if (family == "config-s") {
                    arr = grm::config_S(field, n, d, unit_form(n, 0), unit_form(n, 1));
                } else {
                    arr = grm::config_T(field, n, d, unit_form(n, 0), unit_form(n, 1),
                                        unit_form(n, 2));
                }
                f = grm::arrangement_poly(arr);
                predicted = grm::arrangement_zeros(arr);
            }
            out = grm::poly_to_json(f);
            out["family"] = family;
            out["field"] = grm::field_to_json(field);
            out["zeros_predicted"] = predicted;
            out["zeros"] = grm::count_zeros_affine(f);
        }
        emit(out);
        return 0;
    }
    if (weight_of->parsed()) {
        grm::ReducedPoly f = grm::poly_from_json(parse_json_text(read_input(input_path)));
        std::int64_t length = grm::checked_pow(f.field().q(), f.nvars());
        std::int64_t zeros = grm::count_zeros_affine(f);
        ordered_json out;
        out["length"] = length;
        out["degree"] = f.total_degree();
        out["zeros"] = zeros;
        out["weight"] = length - zeros;
        emit(out);
        return 0;
    }
    if (verify->parsed()) {
        grm::require(!(as_json && as_csv), "choose one of --json and --csv");
        auto grid = parse_grid(grid_text, natural_kind(suite));
        grm::VerificationReport rep = grm::run_suite(suite, grid, ibudget, uworkers);
        if (as_csv)
            std::cout << grm::report_to_csv(rep);
        else
            emit(grm::report_to_json(rep));
        return rep.ok() ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
