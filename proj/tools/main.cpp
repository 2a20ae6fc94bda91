#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "slfactor/json_io.hpp"
#include "slfactor/realize.hpp"
#include "slfactor/steinberg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitUnsupported = 3;

slf::Field parse_field(const std::string& tag) {
    if (tag == "q") return slf::Field::rationals();
    if (tag.rfind("gf:", 0) == 0) {
        std::uint64_t p = 0;
        try {
            p = std::stoull(tag.substr(3));
        } catch (const std::exception&) {
            throw slf::input_error("bad field tag '" + tag + "', expected q or gf:<prime>");
        }
        return slf::Field::gf(p);
    }
    throw slf::input_error("bad field tag '" + tag + "', expected q or gf:<prime>");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw slf::input_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw slf::input_error("cannot write '" + path + "'");
    out << text << "\n";
}

int cmd_factor(const std::string& matrix_path, const std::string& out_path,
               const std::string& field_tag, bool do_simplify) {
    slf::Field field = parse_field(field_tag);
    slf::PolyMatrix m = slf::matrix_from_json(read_file(matrix_path), field);
    if (m.n() < 3)
        throw slf::unsupported_zero_search(
            "matrices of dimension " + std::to_string(m.n()) +
            " are not supported: for n = 2 the Cohn matrix shows SL_2 exceeds "
            "the elementary subgroup");

    slf::Factorization f = slf::realize(m);
    if (do_simplify) f = slf::simplify(f);
    if (!slf::verify(f, m)) {
        std::cerr << "internal error: factorization failed verification\n";
        return kExitVerifyFailed;
    }
    write_output(out_path, slf::factorization_to_json(f));
    return kExitOk;
}

int cmd_verify(const std::string& matrix_path, const std::string& fact_path,
               const std::string& field_tag) {
    slf::Field field = parse_field(field_tag);
    slf::PolyMatrix m = slf::matrix_from_json(read_file(matrix_path), field);
    slf::Factorization f =
        slf::factorization_from_json(read_file(fact_path), m.ring()->field);
    if (f.n != m.n()) {
        std::cerr << "dimension mismatch: matrix is " << m.n() << " x " << m.n()
                  << ", factorization is for n = " << f.n << "\n";
        return kExitVerifyFailed;
    }
    if (!slf::verify(f, m)) {
        std::cerr << "verification failed: product of factors differs from the matrix\n";
        return kExitVerifyFailed;
    }
    std::cout << "ok: product of " << f.factors.size() << " factors matches\n";
    return kExitOk;
}

int cmd_simplify(const std::string& fact_path, const std::string& out_path,
                 const std::string& field_tag) {
    slf::Field field = parse_field(field_tag);
    slf::Factorization f = slf::factorization_from_json(read_file(fact_path), field);
    slf::Factorization simplified = slf::simplify(f);
    if (slf::product_of(simplified) != slf::product_of(f)) {
        std::cerr << "internal error: simplification changed the product\n";
        return kExitVerifyFailed;
    }
    write_output(out_path, slf::factorization_to_json(simplified));
    return kExitOk;
}

int cmd_gen(std::size_t n, std::size_t vars, std::size_t count, std::uint64_t seed,
            const std::string& field_tag, const std::string& matrix_path,
            const std::string& truth_path) {
    if (n < 2) throw slf::input_error("gen: need n >= 2");
    slf::Field field = parse_field(field_tag);
    std::vector<std::string> names;
    for (std::size_t k = 0; k < vars; ++k) names.push_back("x" + std::to_string(k + 1));
    slf::RingPtr ring = slf::make_ring(field, names);

    std::mt19937_64 rng(seed);
    slf::Factorization f = slf::random_elementary_factors(rng, n, ring, count, 2, 2);
    slf::PolyMatrix m = slf::product_of(f);

    write_output(matrix_path, slf::matrix_to_json(m));
    write_output(truth_path, slf::factorization_to_json(f));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"factor determinant-1 polynomial matrices into elementary matrices"};
    app.require_subcommand(1);

    std::string matrix_path, fact_path, out_path, field_tag = "q", truth_path;
    bool do_simplify = false;
    std::size_t gen_n = 3, gen_vars = 2, gen_count = 4;
    std::uint64_t gen_seed = 0;

    CLI::App* factor = app.add_subcommand("factor", "factor a matrix");
    factor->add_option("matrix", matrix_path, "matrix JSON file")->required();
    factor->add_flag("--simplify", do_simplify, "apply Steinberg simplification");
    factor->add_option("--field", field_tag, "coefficient field: q or gf:<prime>");
    factor->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "check a factorization against a matrix");
    verify->add_option("matrix", matrix_path, "matrix JSON file")->required();
    verify->add_option("factorization", fact_path, "factorization JSON file")->required();
    verify->add_option("--field", field_tag, "coefficient field: q or gf:<prime>");

    CLI::App* simp = app.add_subcommand("simplify", "shorten a factorization");
    simp->add_option("factorization", fact_path, "factorization JSON file")->required();
    simp->add_option("--field", field_tag, "coefficient field: q or gf:<prime>");
    simp->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* gen = app.add_subcommand("gen", "generate a random elementary product");
    gen->add_option("--n", gen_n, "matrix dimension");
    gen->add_option("--vars", gen_vars, "number of ring variables");
    gen->add_option("--factors", gen_count, "number of elementary factors");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--field", field_tag, "coefficient field: q or gf:<prime>");
    gen->add_option("-o,--output", matrix_path, "matrix output file (default stdout)");
    gen->add_option("--truth", truth_path, "factorization output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (factor->parsed()) return cmd_factor(matrix_path, out_path, field_tag, do_simplify);
        if (verify->parsed()) return cmd_verify(matrix_path, fact_path, field_tag);
        if (simp->parsed()) return cmd_simplify(fact_path, out_path, field_tag);
        if (gen->parsed())
            return cmd_gen(gen_n, gen_vars, gen_count, gen_seed, field_tag, matrix_path,
                           truth_path);
    } catch (const slf::unsupported_zero_search& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const slf::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const slf::not_unimodular_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const slf::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
