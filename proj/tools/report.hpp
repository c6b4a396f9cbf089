#ifndef SERRECHECK_TOOLS_REPORT_HPP
#define SERRECHECK_TOOLS_REPORT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "serrecheck/complex.hpp"
#include "serrecheck/linalg.hpp"

// Reports behind the serrecheck CLI. Every command builds a JSON document;
// the human-readable text is rendered from that same document, so both
// renderings always carry the same verdict data.
//
// Schema (all commands):
//   command      "homology" | "check" | "oracle" | "profile" | "gen"
//   input        { source, void, dim, n_vertices, n_facets, f_vector, warnings }
//   results      command-specific array, one entry per field (oracle --gen:
//                one entry per complex)
//   timing_ms    { phase: milliseconds }
//   exit_code    0 holds / agree, 1 fails / disagree
//
// Betti arrays start at degree -1. Faces and witnesses are vertex-label
// lists. Each witness carries "revalidated", the result of rechecking it
// with direct link homology.

namespace serrecheck::report {

using json = nlohmann::ordered_json;

/// Bad arguments, unreadable input or an unknown generator: exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Input {
    std::string source;
    Complex complex;
    std::vector<std::string> warnings;
    double load_ms = 0;
};

enum class Mode { Serre, Sequential };

/**
 * Builds a complex from a pseudo-path:
 *   rp2 | bowtie | simplex:N | boundary-simplex:N | cycle:N | cone:<spec>
 *   random:seed=S,n=N,dim=D,f=F   (keys optional; `seed` falls back to
 *                                  `default_seed`, then 1)
 *   any designed fixture name (two-triangles, torus, ...)
 * A leading "gen:" is accepted and ignored.
 */
Complex generate(std::string_view spec, std::optional<std::uint64_t> default_seed = std::nullopt);

/// Names accepted by generate() besides the parameterized forms.
std::vector<std::string> generator_names();

/// "gen:..." goes to generate(), anything else is read as a facet file.
Input load_input(std::string_view source, std::optional<std::uint64_t> default_seed = std::nullopt);

/// Comma-separated list of "q" or primes. Empty input means {Q}.
std::vector<FieldSpec> parse_fields(std::string_view list);

json homology_report(const Input& in, const std::vector<FieldSpec>& fields);
json check_report(const Input& in, int r, const std::vector<FieldSpec>& fields, Mode mode, bool audit);
json oracle_report(const Input& in, const std::vector<FieldSpec>& fields, std::optional<int> rmax);
/// The oracle run over `count` random complexes drawn from the standard
/// corpus specs starting at `seed`.
json oracle_corpus_report(std::size_t count, std::uint64_t seed, const std::vector<FieldSpec>& fields,
                          std::optional<int> rmax);
json profile_report(const Input& in, const std::vector<FieldSpec>& fields);
json gen_report(const Input& in);

int exit_code(const json& report);
std::string render_text(const json& report);

}  // namespace serrecheck::report

#endif  // SERRECHECK_TOOLS_REPORT_HPP
