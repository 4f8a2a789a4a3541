#include "hypell/cli.hpp"

#include "hypell/jsonio.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace hypell {

namespace {

Json read_json_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        return Json::parse(in, nullptr, true, true);
    }
    std::ifstream f(path);
    if (!f) throw BadInputError("cannot open input file: " + path);
    return Json::parse(f, nullptr, true, true);
}

void write_output(const Json& j, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw BadInputError("cannot open output file: " + path);
    f << j.dump(2) << "\n";
}

int run_periods(const std::string& input, const std::string& output, unsigned digits,
                std::istream& in, std::ostream& out) {
    set_working_digits(digits);
    CurveDocument doc = curve_from_json(read_json_input(input, in));
    PeriodData P = period_matrix(doc.branch, digits);
    CharacteristicDictionary D = characteristic_dictionary(P);
    write_output(period_data_to_json(P, D), output, out);
    return 0;
}

int run_reconstruct(const std::string& input, const std::string& output, unsigned digits, int genus,
                    const Real& tol, std::istream& in, std::ostream& out) {
    set_working_digits(digits);
    Json j = read_json_input(input, in);
    RiemannMatrix Z = riemann_from_json(j, genus);
    Real eps = digits_eps(8);

    Json result;
    if (genus == 2) {
        SymmetricModel m = genus2_symmetric_from_Z(Z, eps, tol);
        result = model_to_json(m);
        result["discriminant"] = cplx_to_json(model_discriminant(m));
        result["discriminant_nullwerte"] = cplx_to_json(genus2_discriminant_from_Z(Z, eps));
    } else if (genus == 3) {
        SymmetricModel m = genus3_symmetric_from_Z(Z, eps, tol);
        result = model_to_json(m);
        result["discriminant"] = cplx_to_json(model_discriminant(m));
    } else {
        throw BadInputError("reconstruct: genus must be 2 or 3");
    }
    write_output(result, output, out);
    return 0;
}

int run_invariants(const std::string& input, const std::string& output, unsigned digits,
                   std::istream& in, std::ostream& out) {
    set_working_digits(digits);
    Json j = read_json_input(input, in);

    Json result;
    if (j.contains("coefficients") || j.contains("G")) {
        // model document: genus-2 symmetric coefficients
        std::vector<Rat> G;
        if (j.contains("G")) {
            for (const Json& v : j["G"]) G.push_back(parse_rat(v.get<std::string>()));
        } else {
            for (const Json& v : j["coefficients"]) {
                Cplx c = cplx_from_json(v);
                if (!(c.im == 0)) throw BadInputError("invariants: model coefficients must be rational");
                auto r = rationalize(c.re, Int("1000000000000"), digits_eps(10));
                if (!r) throw BadInputError("invariants: model coefficients must be rational");
                G.push_back(*r);
            }
        }
        if (G.size() != 3) throw BadInputError("invariants: genus-2 model needs three coefficients");
        SymmetricCoefficients2 sc{G[0], G[1], G[2], 1};
        IgusaClebschTuple t = igusa_from_symmetric(sc);
        result["igusa_clebsch"] = Json{{"I2", rat_to_string(t.I2)},
                                       {"I4", rat_to_string(t.I4)},
                                       {"I6", rat_to_string(t.I6)},
                                       {"I10", rat_to_string(t.I10)}};
    } else {
        CurveDocument doc = curve_from_json(j);
        if (doc.branch.g == 2 && doc.rational) {
            IgusaClebschTuple t = igusa_from_roots_oracle(*doc.rational);
            result["igusa_clebsch"] = Json{{"I2", rat_to_string(t.I2)},
                                           {"I4", rat_to_string(t.I4)},
                                           {"I6", rat_to_string(t.I6)},
                                           {"I10", rat_to_string(t.I10)}};
        }
        if (doc.rational) {
            const RationalBranchSet& B = *doc.rational;
            Json discs = Json::array();
            for (int i = 0; i < B.size(); ++i)
                for (int k = i + 1; k < B.size(); ++k) {
                    Rat d = symmetric_discriminant_exact(B, i, k);
                    Json entry{{"i", i + 1}, {"j", k + 1}, {"value", rat_to_string(d)}};
                    Json numf = Json::array(), denf = Json::array();
                    Int num = d.get_num() < 0 ? Int(-d.get_num()) : d.get_num();
                    if (num != 0 && num != 1)
                        for (const auto& [p, e] : factorize(num))
                            numf.push_back(Json::array({p.get_str(), e}));
                    if (d.get_den() != 1)
                        for (const auto& [p, e] : factorize(d.get_den()))
                            denf.push_back(Json::array({p.get_str(), e}));
                    entry["numerator_factorization"] = numf;
                    entry["denominator_factorization"] = denf;
                    discs.push_back(entry);
                }
            result["symmetric_discriminants"] = discs;
            Json primes = Json::array();
            for (const Int& p : bad_reduction_locus_odd(B)) primes.push_back(p.get_str());
            result["bad_reduction_odd"] = primes;
            QPoly f = B.poly();
            result["curve_discriminant"] = rat_to_string(qpoly_discriminant(f));
        } else {
            // numeric branch points: report the symmetric discriminant of (1,2)
            Json discs = Json::array();
            Cplx d = symmetric_discriminant(doc.branch, 0, 1, 4 * doc.branch.g);
            discs.push_back(Json{{"i", 1}, {"j", 2}, {"value", cplx_to_json(d)}});
            result["symmetric_discriminants"] = discs;
        }
    }
    write_output(result, output, out);
    return 0;
}

int run_igusa_invert(const std::string& input, const std::string& output, unsigned digits,
                     std::istream& in, std::ostream& out) {
    set_working_digits(digits);
    Json j = read_json_input(input, in);
    const Json& src = j.contains("igusa_clebsch") ? j["igusa_clebsch"] : j;
    IgusaClebschTuple t{parse_rat(src.at("I2").get<std::string>()),
                        parse_rat(src.at("I4").get<std::string>()),
                        parse_rat(src.at("I6").get<std::string>()),
                        parse_rat(src.at("I10").get<std::string>())};
    InverseOptions opt;
    opt.digits = digits;
    opt.tol = pow(Real(10), -static_cast<int>(digits) / 3);
    std::vector<InverseCandidate> cands = symmetric_from_igusa(t, opt);
    Json arr = Json::array();
    for (const InverseCandidate& c : cands) {
        Json e{{"G1", cplx_to_json(c.G1)},
               {"G2", cplx_to_json(c.G2)},
               {"G3", cplx_to_json(c.G3)},
               {"r", cplx_to_json(c.r)},
               {"exact", c.exact}};
        if (c.coeffs)
            e["exact_coefficients"] = Json::array({rat_to_string(c.coeffs->G1), rat_to_string(c.coeffs->G2),
                                                   rat_to_string(c.coeffs->G3)});
        arr.push_back(e);
    }
    write_output(Json{{"candidates", arr}}, output, out);
    return 0;
}

int run_verify(const std::string& suite, const std::string& output, unsigned digits,
               std::uint64_t seed, const Real& tol_scale, std::ostream& out) {
    set_working_digits(digits);
    Real eps = digits_eps(8);
    std::vector<IdentityReport> reports;
    auto append = [&](std::vector<IdentityReport> rs) {
        for (IdentityReport& r : rs) reports.push_back(std::move(r));
    };
    bool all = suite == "all";
    if (all || suite == "jacobi") append(suite_jacobi(eps, Real("1e-12") * tol_scale));
    if (all || suite == "rosenhain") append(suite_rosenhain(seed, 20, eps, Real("1e-9") * tol_scale));
    if (all || suite == "thomae") append(suite_thomae(eps, Real("1e-7") * tol_scale, seed));
    if (all || suite == "frobenius") append(suite_frobenius(eps, Real("1e-6") * tol_scale));
    if (all || suite == "igusa") append(suite_igusa_product(eps, Real("1e-6") * tol_scale));
    if (reports.empty()) throw BadInputError("verify: unknown suite: " + suite);

    Json doc;
    doc["suite"] = suite;
    doc["seed"] = seed;
    doc["digits"] = digits;
    doc["reports"] = reports_to_json(reports);
    bool ok = true;
    for (const IdentityReport& r : reports) ok = ok && r.passed;
    doc["all_passed"] = ok;
    write_output(doc, output, out);
    return ok ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"symmetric hyperelliptic curve models, Nullwerte and period matrices"};
    app.require_subcommand(1);

    unsigned digits = 50;
    std::string input = "-", output = "-";
    std::string tol_str = "1e-8";

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        cmd->add_option("--digits", digits, "working precision in decimal digits");
        cmd->add_option("--output,-o", output, "output file ('-' for stdout)");
        cmd->add_option("--tol", tol_str, "tolerance for consistency checks");
        if (with_input) cmd->add_option("input", input, "input file ('-' for stdin)");
    };

    CLI::App* periods = app.add_subcommand("periods", "period matrix and characteristic dictionary");
    add_common(periods, true);

    int genus = 2;
    CLI::App* rec = app.add_subcommand("reconstruct", "symmetric model from a normalized period matrix");
    add_common(rec, true);
    rec->add_option("--genus", genus, "genus of the period matrix (2 or 3)");

    CLI::App* inv = app.add_subcommand("invariants", "invariants of a curve or model document");
    add_common(inv, true);

    CLI::App* igi = app.add_subcommand("igusa-invert", "symmetric coefficients with prescribed invariants");
    add_common(igi, true);

    std::string suite = "all";
    std::uint64_t seed = 1;
    CLI::App* ver = app.add_subcommand("verify", "run the identity verification suites");
    add_common(ver, false);
    ver->add_option("--suite", suite, "thomae|rosenhain|frobenius|igusa|jacobi|all");
    ver->add_option("--seed", seed, "random seed for the sweeps");

    std::vector<std::string> argv_like(args.begin(), args.end());
    std::reverse(argv_like.begin(), argv_like.end());
    try {
        app.parse(argv_like);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "{\"error\":\"bad_arguments\",\"message\":\"" << e.what() << "\"}\n";
        return 2;
    }

    try {
        Real tol = parse_real(tol_str);
        if (periods->parsed()) return run_periods(input, output, digits, in, out);
        if (rec->parsed()) return run_reconstruct(input, output, digits, genus, tol, in, out);
        if (inv->parsed()) return run_invariants(input, output, digits, in, out);
        if (igi->parsed()) return run_igusa_invert(input, output, digits, in, out);
        if (ver->parsed()) return run_verify(suite, output, digits, seed, Real(1), out);
        err << "{\"error\":\"bad_arguments\",\"message\":\"no subcommand\"}\n";
        return 2;
    } catch (const HyperellipticityError& e) {
        err << "{\"error\":\"hyperellipticity\",\"message\":\"" << e.what() << "\"}\n";
        return 4;
    } catch (const InversionError& e) {
        err << "{\"error\":\"inversion\",\"message\":\"" << e.what() << "\"}\n";
        return 5;
    } catch (const NonConvergenceError& e) {
        err << "{\"error\":\"non_convergence\",\"message\":\"" << e.what() << "\"}\n";
        return 3;
    } catch (const BadInputError& e) {
        err << "{\"error\":\"bad_input\",\"message\":\"" << e.what() << "\"}\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "{\"error\":\"bad_input\",\"message\":\"" << e.what() << "\"}\n";
        return 2;
    } catch (const std::exception& e) {
        err << "{\"error\":\"internal\",\"message\":\"" << e.what() << "\"}\n";
        return 3;
    }
}

}  // namespace hypell
