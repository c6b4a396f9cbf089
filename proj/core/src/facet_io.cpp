#include "serrecheck/facet_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace serrecheck {

namespace {

bool is_ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

ParsedComplex parse_facet_text(std::string_view text) {
    std::vector<std::vector<std::string>> raw;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        auto line = text.substr(pos, eol - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<std::string> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && is_ascii_space(line[i])) ++i;
            std::size_t start = i;
            while (i < line.size() && !is_ascii_space(line[i])) ++i;
            if (i > start) tokens.emplace_back(line.substr(start, i - start));
        }
        if (!tokens.empty()) raw.push_back(std::move(tokens));
        pos = eol + 1;
    }

    ParsedComplex out{Complex::from_facets(raw), {}};
    if (raw.empty()) out.warnings.push_back("no facets found; input is the void complex");
    return out;
}

ParsedComplex parse_facet_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw std::runtime_error("error while reading " + path.string());
    return parse_facet_text(buf.str());
}

std::string write_facet_text(const Complex& K) {
    if (!K.is_void() && K.dim() == -1)
        throw std::invalid_argument("the complex {∅} cannot be written as a facet list");
    std::string out;
    for (const auto& f : K.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out += ' ';
            out += K.label(f[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace serrecheck
