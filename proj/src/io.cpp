#include "jk/io.hpp"

#include <fstream>
#include <sstream>

namespace jk {

using nlohmann::json;

DenseMatrix parse_matrix(const std::string& text) {
    const size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty matrix input");
    if (text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw ParseError(std::string("bad matrix JSON: ") + e.what());
        }
        if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
            throw ParseError("matrix JSON needs rows, cols, entries");
        const int rows = j["rows"].get<int>();
        const int cols = j["cols"].get<int>();
        std::vector<double> e;
        e.reserve(static_cast<size_t>(rows) * cols);
        for (const auto& row : j["entries"]) {
            if (static_cast<int>(row.size()) != cols) throw ParseError("ragged entries row");
            for (const auto& x : row) e.push_back(x.get<double>());
        }
        if (static_cast<int>(j["entries"].size()) != rows) throw ParseError("entries row count mismatch");
        return DenseMatrix(rows, cols, std::move(e));
    }
    std::istringstream in(text);
    int rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows <= 0 || cols <= 0) throw ParseError("expected header line: rows cols");
    std::vector<double> e(static_cast<size_t>(rows) * cols);
    for (double& x : e)
        if (!(in >> x)) throw ParseError("too few matrix entries");
    double extra;
    if (in >> extra) throw ParseError("trailing data after matrix entries");
    return DenseMatrix(rows, cols, std::move(e));
}

DenseMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_matrix(ss.str());
}

std::string format_matrix(const DenseMatrix& m) {
    std::ostringstream out;
    out.precision(17);
    out << m.rows() << " " << m.cols() << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
        out << "\n";
    }
    return out.str();
}

void save_matrix(const DenseMatrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write matrix file: " + path);
    out << format_matrix(m);
}

json matrix_to_json(const DenseMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

json spectrum_to_json(const SpectrumSplit& s) {
    auto parity_name = [](Parity p) {
        return p == Parity::Even ? "even" : p == Parity::Odd ? "odd" : "mixed";
    };
    json j;
    j["n"] = s.n;
    j["even_values"] = s.even_values;
    j["odd_values"] = s.odd_values;
    j["block_residual"] = s.block_residual;
    j["classification_tol"] = s.classification_tol;
    double min_v = 0, max_v = 0;
    std::string min_p = "even", max_p = "even";
    if (!s.even_values.empty()) {
        min_v = s.even_values.back();
        max_v = s.even_values.front();
    }
    if (!s.odd_values.empty()) {
        if (s.odd_values.back() < min_v) {
            min_v = s.odd_values.back();
            min_p = "odd";
        }
        if (s.odd_values.front() > max_v) {
            max_v = s.odd_values.front();
            max_p = "odd";
        }
    }
    j["min_value"] = min_v;
    j["min_parity"] = min_p;
    j["max_value"] = max_v;
    j["max_parity"] = max_p;
    if (s.even_vectors.cols() > 0 && min_p == "even") j["min_vector_parity"] = parity_name(classify_parity(s.even_vectors.col(s.even_vectors.cols() - 1), s.classification_tol));
    if (s.odd_vectors.cols() > 0 && min_p == "odd") j["min_vector_parity"] = parity_name(classify_parity(s.odd_vectors.col(s.odd_vectors.cols() - 1), s.classification_tol));
    return j;
}

json report_to_json(const InterlaceReport& r) {
    json weak{{"holds", r.weak.holds},
              {"lhs_min_even", r.weak.lhs_min_even},
              {"rhs_min_odd", r.weak.rhs_min_odd},
              {"lhs_max_odd", r.weak.lhs_max_odd},
              {"rhs_max_even", r.weak.rhs_max_even}};
    json full{{"holds", r.full.holds}};
    if (r.full.first_violation) {
        const auto& v = *r.full.first_violation;
        full["first_violation"] = json{{"i", v.i}, {"lower", v.lower}, {"beta", v.beta}, {"upper", v.upper}};
    } else {
        full["first_violation"] = nullptr;
    }
    json strong{{"holds", r.strong.holds}};
    strong["first_violation"] = r.strong.first_violation ? json(*r.strong.first_violation) : json(nullptr);
    return json{{"weak", weak}, {"full", full}, {"strong", strong}, {"tol", r.tol}};
}

json certificate_to_json(const CounterexampleCertificate& c) {
    json pd{{"verdict", c.pd_evidence.positive_definite ? "PositiveDefinite" : "NotPD"}};
    json pivots = json::array();
    for (const auto& p : c.pd_evidence.pivots) pivots.push_back(to_string(p));
    pd["pivot_chain"] = std::move(pivots);
    if (c.pd_evidence.witness) {
        json w = json::array();
        for (const auto& x : *c.pd_evidence.witness) w.push_back(to_string(x));
        pd["witness"] = std::move(w);
    }
    json j{{"pair_id", c.pair_id},
           {"skew_rayleigh", to_string(c.skew_rayleigh)},
           {"even_lower_bound", to_string(c.even_lower_bound)},
           {"pd_evidence", std::move(pd)},
           {"conclusion", c.min_eigvec_skew ? "MinEigvecSkew" : "CertificateFails"}};
    if (!c.failed_stage.empty()) j["failed_stage"] = c.failed_stage;
    return j;
}

}  // namespace jk
