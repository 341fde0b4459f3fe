// Command-line front end: synthesis, verification and code generation of
// multiplication algorithms, plus the tower/bound data and the reproduction
// suite. Exit codes: 0 success, 1 verification/reproduction failure, 2 usage
// error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "bilmul/json_io.hpp"
#include "bilmul/report.hpp"

namespace {

using namespace bilmul;

// For degrees beyond the place inventory, multiply through a coprime
// factorization n = m * t with both factors synthesizable: the degree-t
// algorithm is lifted to GF(2^m) coefficients and composed with the
// degree-m algorithm. Smallest usable m wins.
BilinearAlgorithm synthesize_any(int n) {
    if (n >= 1 && n <= 17) return synthesize(n);
    for (int m = 2; m <= 17; ++m) {
        if (n % m != 0) continue;
        int t = n / m;
        if (t < 2 || t > 17 || std::gcd(m, t) != 1) continue;
        return compose(scalar_extend(synthesize(t), m), synthesize(m));
    }
    throw CLI::ValidationError(
        "--n", "degree " + std::to_string(n) +
                   " is out of direct range [1,17] and has no coprime factorization m*t with both factors in [2,17]");
}

BilinearAlgorithm load_algorithm(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--file", "cannot open " + path);
    Json j;
    in >> j;
    return algorithm_from_json(j);
}

void print_algorithm_text(std::ostream& out, const BilinearAlgorithm& alg) {
    out << "n: " << alg.n << "\n";
    out << "rank: " << alg.rank << "\n";
    out << "modulus: " << alg.field.modulus.to_hex() << "\n";
    for (int l = 0; l < alg.rank; ++l) {
        out << "  " << l << ": a=" << alg.a_forms[static_cast<std::size_t>(l)].to_hex()
            << " b=" << alg.b_forms[static_cast<std::size_t>(l)].to_hex()
            << " c=" << alg.c_vecs[static_cast<std::size_t>(l)].to_hex() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bilinear multiplication algorithms for binary fields"};
    app.require_subcommand(1);

    int n = 2;
    bool as_json = false;
    std::string file;
    bool exhaustive = false;
    long long random_count = 0;
    std::string step_name;

    bool plan_only = false;
    auto* synth = app.add_subcommand("synthesize", "build a verified multiplication algorithm for GF(2^n)");
    synth->add_option("--n", n, "extension degree")->required();
    synth->add_flag("--json", as_json, "emit the algorithm as JSON");
    synth->add_flag("--plan", plan_only, "emit the evaluation plan instead of the algorithm (n <= 17)");

    auto* ver = app.add_subcommand("verify", "check a stored algorithm against field multiplication");
    ver->add_option("--file", file, "algorithm JSON file")->required();
    auto* exh_flag = ver->add_flag("--exhaustive", exhaustive, "check all input pairs (n <= 12)");
    ver->add_option("--random", random_count, "check this many seeded random pairs")->excludes(exh_flag);

    auto* bounds = app.add_subcommand("bounds", "tensor-rank bound report for GF(2^n)");
    bounds->add_option("--n", n, "extension degree")->required();

    auto* sel = app.add_subcommand("select-step", "tower step hosting a degree-n extension");
    sel->add_option("--n", n, "extension degree")->required();

    auto* count = app.add_subcommand("count-places", "recomputed place counts for a tower step");
    count->add_option("--step", step_name, "one of H1, H11, H2, H21")->required();

    auto* cg = app.add_subcommand("codegen", "straight-line XOR/AND program from a stored algorithm");
    cg->add_option("--file", file, "algorithm JSON file")->required();

    app.add_subcommand("report", "run the full reproduction suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (synth->parsed()) {
            if (plan_only) {
                std::cout << plan_to_json(plan_places(n)).dump(2) << "\n";
                return 0;
            }
            BilinearAlgorithm alg = synthesize_any(n);
            if (as_json)
                std::cout << algorithm_to_json(alg).dump(2) << "\n";
            else
                print_algorithm_text(std::cout, alg);
            return 0;
        }
        if (ver->parsed()) {
            BilinearAlgorithm alg = load_algorithm(file);
            bool ok;
            if (exhaustive)
                ok = verify(alg, VerifyMode::exhaustive);
            else if (random_count > 0)
                ok = verify(alg, VerifyMode::random, static_cast<std::uint64_t>(random_count));
            else
                ok = alg.n <= 12 ? verify(alg, VerifyMode::exhaustive) : verify(alg, VerifyMode::random, 100000);
            std::cout << (ok ? "verified" : "FAILED") << "\n";
            return ok ? 0 : 1;
        }
        if (bounds->parsed()) {
            std::cout << bound_report_to_json(bound_report(n)).dump(2) << "\n";
            return 0;
        }
        if (sel->parsed()) {
            std::cout << step_to_json(select_step(n)).dump(2) << "\n";
            return 0;
        }
        if (count->parsed()) {
            std::cout << place_counts_to_json(curve_step_from_name(step_name)).dump(2) << "\n";
            return 0;
        }
        if (cg->parsed()) {
            std::cout << codegen(load_algorithm(file));
            return 0;
        }
        // report
        return print_report(std::cout);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
