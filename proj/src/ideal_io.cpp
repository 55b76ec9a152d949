#include "slp/ideal_io.hpp"

#include <fstream>
#include <sstream>

namespace slp {

namespace {

struct Cursor {
    std::string origin;
    int line = 0;

    [[noreturn]] void fail_at(int column, const std::string& message) const {
        std::ostringstream out;
        out << origin << ":" << line << ":" << column << ": " << message;
        fail(ErrorKind::ParseError, out.str());
    }
};

bool skippable(const std::string& line) {
    for (char c : line) {
        if (c == '#')
            return true;
        if (!isspace(static_cast<unsigned char>(c)))
            return false;
    }
    return true;
}

/// Parse one nonnegative integer starting at pos; advances pos past it.
int parse_uint(const std::string& line, std::size_t& pos, const Cursor& cursor) {
    while (pos < line.size() && isspace(static_cast<unsigned char>(line[pos])))
        ++pos;
    std::size_t start = pos;
    if (pos >= line.size())
        cursor.fail_at(static_cast<int>(pos + 1), "expected a nonnegative integer");
    if (!isdigit(static_cast<unsigned char>(line[pos])))
        cursor.fail_at(static_cast<int>(pos + 1),
                       std::string("expected a nonnegative integer, found '") + line[pos] + "'");
    long value = 0;
    while (pos < line.size() && isdigit(static_cast<unsigned char>(line[pos]))) {
        value = value * 10 + (line[pos] - '0');
        if (value > 1'000'000)
            cursor.fail_at(static_cast<int>(start + 1), "integer too large");
        ++pos;
    }
    if (pos < line.size() && !isspace(static_cast<unsigned char>(line[pos])))
        cursor.fail_at(static_cast<int>(pos + 1),
                       std::string("unexpected character '") + line[pos] + "' after integer");
    return static_cast<int>(value);
}

void expect_end(const std::string& line, std::size_t pos, const Cursor& cursor) {
    while (pos < line.size()) {
        if (line[pos] == '#')
            return;
        if (!isspace(static_cast<unsigned char>(line[pos])))
            cursor.fail_at(static_cast<int>(pos + 1),
                           std::string("unexpected trailing character '") + line[pos] + "'");
        ++pos;
    }
}

}  // namespace

MonomialIdeal parse_ideal_text(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    Cursor cursor{origin, 0};
    std::string line;

    enum class State { WantVars, WantGens, Generators } state = State::WantVars;
    int num_vars = 0;
    std::vector<Monomial> generators;

    while (std::getline(in, line)) {
        ++cursor.line;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (skippable(line))
            continue;

        switch (state) {
        case State::WantVars: {
            std::size_t pos = line.find("vars:");
            if (pos == std::string::npos || line.find_first_not_of(" \t") != pos)
                cursor.fail_at(1, "expected 'vars: N'");
            std::size_t after = pos + 5;
            num_vars = parse_uint(line, after, cursor);
            if (num_vars < 1)
                cursor.fail_at(static_cast<int>(after), "vars must be at least 1");
            expect_end(line, after, cursor);
            state = State::WantGens;
            break;
        }
        case State::WantGens: {
            std::size_t pos = line.find("gens:");
            if (pos == std::string::npos || line.find_first_not_of(" \t") != pos)
                cursor.fail_at(1, "expected 'gens:'");
            expect_end(line, pos + 5, cursor);
            state = State::Generators;
            break;
        }
        case State::Generators: {
            Monomial g;
            std::size_t pos = 0;
            for (int v = 0; v < num_vars; ++v)
                g.exponents.push_back(parse_uint(line, pos, cursor));
            expect_end(line, pos, cursor);
            generators.push_back(std::move(g));
            break;
        }
        }
    }
    if (state == State::WantVars)
        fail(ErrorKind::ParseError, origin + ": missing 'vars:' header");
    if (state == State::WantGens)
        fail(ErrorKind::ParseError, origin + ": missing 'gens:' section");
    return MonomialIdeal(num_vars, std::move(generators));
}

MonomialIdeal parse_ideal_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), ErrorKind::ParseError, path + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_ideal_text(buffer.str(), path);
}

std::string format_ideal_file(const MonomialIdeal& ideal) {
    std::ostringstream out;
    out << "vars: " << ideal.num_vars() << "\n";
    out << "gens:\n";
    for (const Monomial& g : ideal.generators()) {
        for (std::size_t i = 0; i < g.exponents.size(); ++i) {
            if (i)
                out << ' ';
            out << g.exponents[i];
        }
        out << "\n";
    }
    return out.str();
}

std::string text_digest(const std::string& text) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << "fnv1a:" << std::hex << hash;
    return out.str();
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), ErrorKind::ParseError, path + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return text_digest(buffer.str());
}

}  // namespace slp
