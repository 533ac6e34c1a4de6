#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "jk/constructions.hpp"
#include "jk/exact.hpp"
#include "jk/interlacing.hpp"
#include "jk/io.hpp"
#include "jk/reproduce.hpp"
#include "jk/search.hpp"
#include "jk/spectra.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
    double tol = jk::kDefaultParityTol;
    uint64_t seed = 0;
    std::string format = "json";
    std::string out;
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(g.out);
        if (!f) throw jk::ParseError("cannot write output file: " + g.out);
        f << text;
    }
}

std::string spectrum_csv(const jk::SpectrumSplit& s) {
    std::ostringstream out;
    out.precision(17);
    out << "parity,value\n";
    for (double v : s.even_values) out << "even," << v << "\n";
    for (double v : s.odd_values) out << "odd," << v << "\n";
    return out.str();
}

std::string records_csv(const std::vector<jk::TrialRecord>& recs) {
    std::ostringstream out;
    out.precision(17);
    out << "trial_index,n,rank,symmetry_class,seed,weak,interlacing,strong,"
           "min_parity,max_parity,margin_min,margin_max,violation\n";
    for (const auto& r : recs)
        out << r.trial_index << "," << r.n << "," << r.rank << "," << (r.skew ? "Skew" : "Symmetric") << ","
            << r.seed << "," << r.weak_holds << "," << r.interlacing_holds << "," << r.strong_holds << ","
            << r.min_parity << "," << r.max_parity << "," << r.margin_min << "," << r.margin_max << ","
            << r.violation << "\n";
    return out.str();
}

jk::MatrixPair load_pair(const std::string& a_path, const std::string& b_path) {
    return {jk::load_matrix(a_path), jk::load_matrix(b_path)};
}

int run(int argc, char** argv) {
    CLI::App app{"Jordan-Kronecker spectra, interlacing checks and exact certificates"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--tol", g.tol, "parity classification tolerance");
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--format", g.format, "output format: json|csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", g.out, "write output to PATH instead of stdout");

    std::string a_path, b_path;
    auto* spectrum = app.add_subcommand("spectrum", "even/odd spectrum of A⊗B + B⊗A");
    spectrum->add_option("a", a_path, "matrix file for A")->required();
    spectrum->add_option("b", b_path, "matrix file for B")->required();

    std::string property = "all";
    auto* check = app.add_subcommand("check", "interlacing property verdicts");
    check->add_option("a", a_path, "matrix file for A")->required();
    check->add_option("b", b_path, "matrix file for B")->required();
    check->add_option("--property", property, "weak|interlacing|strong|all")
        ->check(CLI::IsMember({"weak", "interlacing", "strong", "all"}));

    std::string fixture_id, witness_path, shift_str = "19/2";
    auto* certify = app.add_subcommand("certify", "exact skew-extremal certificate");
    certify->add_option("fixture", fixture_id, "fixture id (e.g. A0B0)");
    certify->add_option("--a", a_path, "matrix file for A");
    certify->add_option("--b", b_path, "matrix file for B");
    certify->add_option("--witness", witness_path, "skew witness matrix file");
    certify->add_option("--shift", shift_str, "rational shift, e.g. 19/2");

    jk::SearchConfig cfg;
    auto* search = app.add_subcommand("search", "seeded randomized counterexample search");
    search->add_option("--n-min", cfg.n_min, "minimum dimension");
    search->add_option("--n-max", cfg.n_max, "maximum dimension");
    search->add_option("--rank-min", cfg.rank_min, "minimum rank");
    search->add_option("--rank-max", cfg.rank_max, "maximum rank");
    search->add_flag("--skew", cfg.skew, "skew-symmetric pairs");
    search->add_option("--trials", cfg.trials, "number of trials");
    search->add_option("--properties", cfg.properties, "properties to check");
    search->add_flag("--conjecture", cfg.conjecture_mode, "positive definite pairs only");
    search->add_option("--threads", cfg.threads, "worker threads");
    std::string summary_path;
    search->add_option("--summary", summary_path, "write summary JSON to PATH");

    std::string gen_spec;
    std::string gen_prefix = "pair";
    auto* generate = app.add_subcommand("generate", "emit a constructed matrix pair");
    generate->add_option("spec", gen_spec, "generator spec JSON (inline or @file)")->required();
    generate->add_option("--prefix", gen_prefix, "output path prefix");

    std::string repro_id;
    auto* reproduce = app.add_subcommand("reproduce", "consolidated reproduction suites");
    reproduce->add_option("id", repro_id, "table1|example12|appendixA|exampleA2|lemma-commuting|lie-section3")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (spectrum->parsed()) {
        const auto [a, b] = load_pair(a_path, b_path);
        const jk::SpectrumSplit split = jk::spectrum_split(a, b, g.tol);
        emit(g, g.format == "csv" ? spectrum_csv(split) : jk::spectrum_to_json(split).dump(2));
        return 0;
    }

    if (check->parsed()) {
        const auto [a, b] = load_pair(a_path, b_path);
        const jk::SpectrumSplit split = jk::spectrum_split(a, b, g.tol);
        const jk::InterlaceReport r = jk::check_all(split, jk::interlace_tol(a, b));
        emit(g, jk::report_to_json(r).dump(2));
        bool ok = true;
        if (property == "weak" || property == "all") ok = ok && r.weak.holds;
        if (property == "interlacing" || property == "all") ok = ok && r.full.holds;
        if (property == "strong" || property == "all") ok = ok && r.strong.holds;
        return ok ? 0 : 1;
    }

    if (certify->parsed()) {
        jk::RationalMatrix ra, rb, rw;
        std::string pair_id = fixture_id;
        if (!fixture_id.empty()) {
            const jk::Fixture fx = jk::fixture(fixture_id);
            if (!fx.witness) throw jk::UnknownFixture("fixture has no skew witness: " + fixture_id);
            ra = jk::RationalMatrix::from_dense(fx.a);
            rb = jk::RationalMatrix::from_dense(fx.b);
            rw = jk::RationalMatrix::from_dense(*fx.witness);
        } else {
            if (a_path.empty() || b_path.empty() || witness_path.empty())
                throw jk::ParseError("certify needs a fixture id or --a/--b/--witness files");
            ra = jk::RationalMatrix::from_dense(jk::load_matrix(a_path));
            rb = jk::RationalMatrix::from_dense(jk::load_matrix(b_path));
            rw = jk::RationalMatrix::from_dense(jk::load_matrix(witness_path));
            pair_id = a_path + "," + b_path;
        }
        jk::Rational shift;
        try {
            shift = jk::Rational(shift_str);
            shift.canonicalize();
        } catch (const std::invalid_argument&) {
            throw jk::NotRational("bad shift: " + shift_str);
        }
        const jk::CounterexampleCertificate cert = jk::certify_skew_extremal(pair_id, ra, rb, rw, shift);
        emit(g, jk::certificate_to_json(cert).dump(2));
        return cert.min_eigvec_skew ? 0 : 1;
    }

    if (search->parsed()) {
        cfg.seed = g.seed;
        cfg.tol_factor = 1e-8;
        const jk::SearchResult res = jk::run_search(cfg);
        std::string body = g.format == "csv" ? records_csv(res.records) : jk::records_to_jsonl(res.records);
        emit(g, body);
        const json summary = res.summary.to_json(cfg);
        if (!summary_path.empty()) {
            std::ofstream f(summary_path);
            f << summary.dump(2) << "\n";
        } else if (!g.out.empty()) {
            std::cout << summary.dump(2) << "\n";
        } else {
            std::cerr << summary.dump(2) << "\n";
        }
        return 0;
    }

    if (generate->parsed()) {
        std::string text = gen_spec;
        if (!text.empty() && text[0] == '@') {
            std::ifstream f(text.substr(1));
            if (!f) throw jk::ParseError("cannot open spec file: " + text.substr(1));
            std::stringstream ss;
            ss << f.rdbuf();
            text = ss.str();
        }
        const json spec = json::parse(text);
        const std::string family = spec.at("family").get<std::string>();
        jk::MatrixPair pair;
        if (family == "ladder") {
            pair = jk::ladder(spec.at("k").get<int>(), spec.at("m").get<int>(), spec.at("n").get<int>(),
                              spec.value("eps", 1e-3));
        } else if (family == "RankK") {
            pair = jk::random_pair(spec.at("n").get<int>(), spec.at("k").get<int>(),
                                   spec.value("skew", false), spec.value("seed", g.seed));
        } else if (family == "DiagAntiBand") {
            pair = jk::diag_antiband_pair(spec.at("n").get<int>(), spec.at("k").get<int>(),
                                          spec.value("seed", g.seed));
        } else if (family == "Tridiag") {
            std::optional<std::pair<int, int>> moved;
            if (spec.contains("moved"))
                moved = std::pair<int, int>{spec["moved"][0].get<int>(), spec["moved"][1].get<int>()};
            pair = jk::tridiag_pair(spec.at("n").get<int>(), spec.value("seed", g.seed), moved);
        } else if (family == "Commuting") {
            pair = jk::commuting_pair(spec.at("n").get<int>(), spec.value("seed", g.seed));
        } else if (family == "Fixture") {
            const jk::Fixture fx = jk::fixture(spec.at("id").get<std::string>());
            pair = {fx.a, fx.b};
        } else {
            throw jk::ParseError("unknown generator family: " + family);
        }
        jk::save_matrix(pair.first, gen_prefix + "_A.txt");
        jk::save_matrix(pair.second, gen_prefix + "_B.txt");
        std::cout << gen_prefix << "_A.txt " << gen_prefix << "_B.txt\n";
        return 0;
    }

    if (reproduce->parsed()) {
        const auto claims = jk::reproduce(repro_id);
        std::ostringstream out;
        for (const auto& c : claims) {
            out << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
            if (!c.detail.empty()) out << "  [" << c.detail << "]";
            out << "\n";
        }
        emit(g, out.str());
        return jk::all_pass(claims) ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const jk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
