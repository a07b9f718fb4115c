/**
 * Command-line surface: system documents (JSON), orchestration of the
 * library computations, deterministic JSON emission and SVG rendering.
 * run_cli is the whole tool behind a testable interface; the tropcli binary
 * is a thin wrapper around it.
 */

#ifndef TROP_CLI_HPP
#define TROP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "trop/intersect.hpp"
#include "trop/oracle.hpp"
#include "trop/series.hpp"

namespace trop {

/// Malformed or schema-violating input; maps to exit code 2.
struct InputError : Error {
  using Error::Error;
};

enum class ValuationModel { PAdic, Parameter, Explicit };

struct SystemDocument {
  int dim = 0;
  ValuationModel model = ValuationModel::Explicit;
  Int prime = Int(2);
  /// One entry per polynomial; literal is absent for explicit-weight input.
  std::vector<std::optional<LiteralPolynomial>> literals;
  std::vector<TropicalPolynomial> polynomials;
  std::vector<TruncatedSeries> series;
  std::vector<Fan> fans;
};

SystemDocument parse_system(const std::string& text);

/// Exit codes: 0 success, 1 usage error, 2 invalid input, 3 computation
/// refusal (NotIsolated, GenericityFailure, CertificateInsufficient,
/// NotFinite and kin).  JSON goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace trop

#endif  // TROP_CLI_HPP
