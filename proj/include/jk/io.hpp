#pragma once

#include <json.hpp>
#include <string>

#include "jk/exact.hpp"
#include "jk/interlacing.hpp"
#include "jk/spectra.hpp"

namespace jk {

struct ParseError : Error {
    using Error::Error;
};

/// Text format: first line "rows cols", then whitespace-separated rows.
/// A leading '{' switches to JSON: {"rows":r,"cols":c,"entries":[[…],…]}.
DenseMatrix parse_matrix(const std::string& text);
DenseMatrix load_matrix(const std::string& path);
std::string format_matrix(const DenseMatrix& m);
void save_matrix(const DenseMatrix& m, const std::string& path);

nlohmann::json matrix_to_json(const DenseMatrix& m);
nlohmann::json spectrum_to_json(const SpectrumSplit& s);
nlohmann::json report_to_json(const InterlaceReport& r);
nlohmann::json certificate_to_json(const CounterexampleCertificate& c);

}  // namespace jk
