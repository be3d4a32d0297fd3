#include "citnet/pajek.hpp"

#include "citnet/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace citnet {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

// Splits a line into whitespace separated tokens; a double-quoted run is one token.
std::vector<std::string> tokenize(std::string_view line, std::size_t line_no) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '"') {
            const auto close = line.find('"', i + 1);
            if (close == std::string_view::npos) throw ParseError(line_no, "unterminated quoted label");
            tokens.emplace_back(line.substr(i + 1, close - i - 1));
            i = close + 1;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        tokens.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

std::uint64_t parse_count(const std::string& token, std::size_t line_no, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line_no, std::string("expected ") + what + ", got '" + token + "'");
    }
    return value;
}

VertexId parse_vertex(const std::string& token, std::uint64_t n, std::size_t line_no) {
    const auto id = parse_count(token, line_no, "a vertex id");
    if (id < 1 || id > n) {
        throw ParseError(line_no, "vertex id " + token + " out of range 1.." + std::to_string(n));
    }
    return static_cast<VertexId>(id - 1);
}

double parse_weight(const std::string& token, std::size_t line_no) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
        throw ParseError(line_no, "non-numeric weight '" + token + "'");
    }
    if (value < 0.0) throw ParseError(line_no, "negative weight '" + token + "'");
    return value;
}

std::string quote_label(const std::string& label) {
    std::string out = label;
    std::replace(out.begin(), out.end(), '"', '\'');
    return "\"" + out + "\"";
}

}  // namespace

Network parse_pajek(std::istream& in) {
    enum class Section { None, Vertices, Arcs };
    Section section = Section::None;
    std::optional<std::uint64_t> n;
    std::vector<std::string> labels;
    std::vector<Arc> arcs;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '%') continue;

        if (line.front() == '*') {
            const auto tokens = tokenize(line, line_no);
            const std::string keyword = lower(tokens.front());
            if (keyword == "*network") continue;
            if (keyword == "*vertices") {
                if (n) throw ParseError(line_no, "duplicate *Vertices header");
                if (tokens.size() < 2) throw ParseError(line_no, "*Vertices needs a vertex count");
                if (tokens.size() > 2) throw ParseError(line_no, "two-mode *Vertices headers are not supported");
                n = parse_count(tokens[1], line_no, "a vertex count");
                if (*n >= std::numeric_limits<VertexId>::max()) throw ParseError(line_no, "vertex count too large");
                labels.resize(*n);
                for (std::uint64_t v = 0; v < *n; ++v) labels[v] = std::to_string(v + 1);
                section = Section::Vertices;
                continue;
            }
            if (keyword == "*arcs") {
                if (!n) throw ParseError(line_no, "*Arcs before *Vertices");
                section = Section::Arcs;
                continue;
            }
            if (keyword == "*edges") {
                throw ParseError(line_no, "*Edges section: undirected lines are not supported, citation networks are directed");
            }
            throw ParseError(line_no, "unsupported section " + tokens.front());
        }

        const auto tokens = tokenize(line, line_no);
        switch (section) {
            case Section::None:
                throw ParseError(line_no, "data before *Vertices header");
            case Section::Vertices: {
                const VertexId v = parse_vertex(tokens[0], *n, line_no);
                if (tokens.size() >= 2) labels[v] = tokens[1];
                break;
            }
            case Section::Arcs: {
                if (tokens.size() < 2) throw ParseError(line_no, "arc line needs tail and head");
                Arc arc;
                arc.tail = parse_vertex(tokens[0], *n, line_no);
                arc.head = parse_vertex(tokens[1], *n, line_no);
                if (tokens.size() >= 3) arc.weight = parse_weight(tokens[2], line_no);
                arcs.push_back(arc);
                break;
            }
        }
    }
    if (!n) throw ParseError(line_no, "missing *Vertices header");
    return Network(std::move(labels), std::move(arcs));
}

Network parse_pajek(const std::string& text) {
    std::istringstream in(text);
    return parse_pajek(in);
}

Network read_pajek_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return parse_pajek(in);
}

void write_pajek(std::ostream& out, const Network& net, const WeightVector* weights) {
    if (weights && weights->size() != net.arc_count()) throw ArgumentError("weights do not match arc count");
    out << "*Vertices " << net.vertex_count() << '\n';
    for (VertexId v = 0; v < net.vertex_count(); ++v) {
        out << (v + 1) << ' ' << quote_label(net.label(v)) << '\n';
    }
    out << "*Arcs\n";
    for (ArcId a = 0; a < net.arc_count(); ++a) {
        const Arc& arc = net.arc(a);
        out << (arc.tail + 1) << ' ' << (arc.head + 1) << ' '
            << (weights ? weights->str(a) : format_real(arc.weight)) << '\n';
    }
}

std::string write_pajek(const Network& net, const WeightVector* weights) {
    std::ostringstream out;
    write_pajek(out, net, weights);
    return out.str();
}

void write_vec(std::ostream& out, const WeightVector& values) {
    out << "*Vertices " << values.size() << '\n';
    for (std::size_t i = 0; i < values.size(); ++i) out << values.str(i) << '\n';
}

void write_vec(std::ostream& out, std::span<const double> values) {
    out << "*Vertices " << values.size() << '\n';
    for (double v : values) out << format_real(v) << '\n';
}

void write_clu(std::ostream& out, std::span<const std::size_t> classes) {
    out << "*Vertices " << classes.size() << '\n';
    for (auto c : classes) out << c << '\n';
}

}  // namespace citnet
