#include "qlwb/quantum_io.hpp"
#include "qlwb/error.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

namespace qlwb {

using json = nlohmann::json;

namespace {
    auto trim(std::string s) -> std::string
    {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    }

    auto parse_json(std::string_view text) -> json
    {
        try {
            return json::parse(text);
        }
        catch (const json::parse_error & e) {
            throw InputError(std::string("invalid JSON: ") + e.what());
        }
    }

    auto entry_text(const json & j) -> std::string
    {
        if (j.is_string())
            return j.get<std::string>();
        if (j.is_number_integer())
            return std::to_string(j.get<long long>());
        throw InputError("matrix entries must be strings or integers");
    }

    auto parse_matrix(const json & j, int dim) -> ExactMatrix
    {
        if (! j.is_array() || static_cast<int>(j.size()) != dim)
            throw InputError("matrix must have " + std::to_string(dim) + " rows");
        ExactMatrix m(dim);
        for (int r = 0; r < dim; ++r) {
            if (! j[r].is_array() || static_cast<int>(j[r].size()) != dim)
                throw InputError("matrix row must have " + std::to_string(dim) + " entries");
            for (int c = 0; c < dim; ++c)
                m(r, c) = parse_gaussian(entry_text(j[r][c]));
        }
        return m;
    }

    auto matrix_json(const ExactMatrix & m) -> json
    {
        json rows = json::array();
        for (int r = 0; r < m.dim(); ++r) {
            json row = json::array();
            for (int c = 0; c < m.dim(); ++c)
                row.push_back(format_gaussian(m(r, c)));
            rows.push_back(row);
        }
        return rows;
    }

    auto read_dim(const json & j) -> int
    {
        if (! j.is_object() || ! j.contains("dim") || ! j["dim"].is_number_integer())
            throw InputError("expected an object with an integer \"dim\"");
        int dim = j["dim"].get<int>();
        if (dim < 1)
            throw InputError("dimension must be positive");
        return dim;
    }
}

auto parse_system(std::string_view text) -> Gf2System
{
    Gf2System sys;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int declared = -1;
    int max_var = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto h = line.find('#'); h != std::string::npos)
            line = line.substr(0, h);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.rfind("variables:", 0) == 0) {
            try {
                declared = std::stoi(line.substr(10));
            }
            catch (const std::exception &) {
                throw ParseError("invalid variable count", line_no);
            }
            if (declared < 1)
                throw ParseError("variable count must be positive", line_no);
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected '='", line_no);
        auto rhs = trim(line.substr(eq + 1));
        if (rhs != "0" && rhs != "1")
            throw ParseError("right-hand side must be 0 or 1", line_no);
        std::vector<int> vars;
        std::set<int> seen;
        std::stringstream terms(line.substr(0, eq));
        std::string tok;
        while (std::getline(terms, tok, '+')) {
            tok = trim(tok);
            if (tok.size() < 2 || tok[0] != 'x' || tok.find_first_not_of("0123456789", 1) != std::string::npos)
                throw ParseError("expected a variable x<k>, got '" + tok + "'", line_no);
            int k = std::stoi(tok.substr(1));
            if (k < 1)
                throw ParseError("variables are numbered from 1", line_no);
            if (! seen.insert(k).second)
                throw ParseError("variable x" + std::to_string(k) + " repeated in one equation", line_no);
            vars.push_back(k - 1);
            max_var = std::max(max_var, k);
        }
        sys.equations.push_back(std::move(vars));
        sys.rhs.push_back(rhs == "1");
    }
    if (sys.equations.empty())
        throw ParseError("system has no equations", line_no);
    if (declared >= 0 && declared < max_var)
        throw ParseError("variable count below the largest variable index", line_no);
    sys.variables = declared >= 0 ? declared : max_var;
    return sys;
}

auto write_system(const Gf2System & system) -> std::string
{
    std::ostringstream out;
    out << "variables: " << system.variables << '\n';
    for (std::size_t e = 0; e < system.equations.size(); ++e) {
        for (std::size_t i = 0; i < system.equations[e].size(); ++i)
            out << (i ? " + " : "") << 'x' << system.equations[e][i] + 1;
        out << " = " << (system.rhs[e] & 1) << '\n';
    }
    return out.str();
}

auto parse_operators(std::string_view json_text) -> std::vector<ExactMatrix>
{
    auto j = parse_json(json_text);
    int dim = read_dim(j);
    if (! j.contains("operators") || ! j["operators"].is_array())
        throw InputError("expected an \"operators\" array");
    std::vector<ExactMatrix> ops;
    for (auto & m : j["operators"])
        ops.push_back(parse_matrix(m, dim));
    return ops;
}

auto write_operators(const std::vector<ExactMatrix> & ops) -> std::string
{
    json j;
    j["dim"] = ops.empty() ? 0 : ops[0].dim();
    j["operators"] = json::array();
    for (auto & m : ops)
        j["operators"].push_back(matrix_json(m));
    return j.dump(1) + "\n";
}

auto parse_representation(std::string_view json_text, const Hypergraph & h) -> Representation
{
    auto j = parse_json(json_text);
    int dim = read_dim(j);
    if (! j.contains("projections") || ! j["projections"].is_object())
        throw InputError("expected a \"projections\" object");
    const auto & p = j["projections"];
    for (auto it = p.begin(); it != p.end(); ++it)
        h.vertex(it.key());
    Representation rep;
    for (auto & v : h.vertices) {
        if (! p.contains(v))
            throw InputError("no projection for vertex '" + v + "'");
        const auto & e = p[v];
        if (e.contains("matrix"))
            rep.push_back(parse_matrix(e["matrix"], dim));
        else if (e.contains("span")) {
            std::vector<Vector> span;
            for (auto & row : e["span"]) {
                if (! row.is_array() || static_cast<int>(row.size()) != dim)
                    throw InputError("span vector for '" + v + "' must have " + std::to_string(dim) + " entries");
                Vector vec;
                for (auto & x : row)
                    vec.push_back(parse_rational(entry_text(x)));
                span.push_back(std::move(vec));
            }
            rep.push_back(ExactMatrix::projection(span, dim));
        }
        else
            throw InputError("projection for '" + v + "' needs \"span\" or \"matrix\"");
    }
    return rep;
}

auto write_representation(const Hypergraph & h, const Representation & rep) -> std::string
{
    json j;
    j["dim"] = rep.empty() ? 0 : rep[0].dim();
    j["projections"] = json::object();
    for (std::size_t i = 0; i < h.vertices.size() && i < rep.size(); ++i)
        j["projections"][h.vertices[i]] = {{"matrix", matrix_json(rep[i])}};
    return j.dump(1) + "\n";
}

auto parse_vectors(std::string_view text) -> std::vector<Vector>
{
    std::vector<Vector> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto h = line.find('#'); h != std::string::npos)
            line = line.substr(0, h);
        for (auto & c : line)
            if (c == ',')
                c = ' ';
        std::istringstream toks(line);
        std::string tok;
        Vector v;
        while (toks >> tok) {
            try {
                v.push_back(parse_rational(tok));
            }
            catch (const InputError & e) {
                throw ParseError(e.what(), line_no);
            }
        }
        if (v.empty())
            continue;
        if (! out.empty() && v.size() != out[0].size())
            throw ParseError("vector length differs from the first vector", line_no);
        out.push_back(std::move(v));
    }
    return out;
}

auto write_vectors(const std::vector<Vector> & vectors) -> std::string
{
    std::ostringstream out;
    for (auto & v : vectors) {
        for (std::size_t i = 0; i < v.size(); ++i)
            out << (i ? " " : "") << format_rational(v[i]);
        out << '\n';
    }
    return out.str();
}

}
