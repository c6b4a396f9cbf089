#ifndef SERRECHECK_FACET_IO_HPP
#define SERRECHECK_FACET_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "serrecheck/complex.hpp"

// Facet list format: UTF-8 text, one facet per line, vertex tokens split on
// ASCII whitespace, '#' starts a comment that runs to end of line, blank
// lines ignored.

namespace serrecheck {

struct ParsedComplex {
    Complex complex;
    std::vector<std::string> warnings;
};

ParsedComplex parse_facet_text(std::string_view text);

/// Throws std::runtime_error if the file cannot be read.
ParsedComplex parse_facet_file(const std::filesystem::path& path);

/// One facet per line in canonical order. The complex {∅} has no
/// representation in this format and is rejected with std::invalid_argument.
std::string write_facet_text(const Complex& K);

}  // namespace serrecheck

#endif  // SERRECHECK_FACET_IO_HPP
