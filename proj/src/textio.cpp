#include "drz/textio.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace drz {

namespace {

Matrix parse_matrix_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError(1, "matrix JSON needs rows, cols, entries");
    std::size_t rows = j["rows"].get<std::size_t>();
    std::size_t cols = j["cols"].get<std::size_t>();
    const auto& entries = j["entries"];
    if (!entries.is_array() || entries.size() != rows)
        throw ParseError(1, "entries must be an array of " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = entries[i];
        if (!row.is_array() || row.size() != cols)
            throw ParseError(1, "row " + std::to_string(i + 1) + " must have " +
                                    std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) {
            const auto& cell = row[k];
            if (cell.is_string())
                m(i, k) = parse_rational(cell.get<std::string>());
            else if (cell.is_number_integer())
                m(i, k) = rat(cell.get<long>());
            else
                throw ParseError(1, "matrix entries must be strings or integers");
        }
    }
    return m;
}

}  // namespace

Matrix parse_matrix(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError(1, "empty matrix input");
    if (text[first] == '{') {
        try {
            return parse_matrix_json(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(1, std::string("bad matrix JSON: ") + e.what());
        }
    }

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long rows = -1, cols = -1;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (ls >> rows >> cols) break;
        std::string tok;
        std::istringstream probe(line);
        if (probe >> tok) throw ParseError(lineno, "expected 'rows cols' header");
    }
    if (rows < 0 || cols < 0) throw ParseError(lineno, "missing or negative matrix header");
    Matrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (long i = 0; i < rows; ++i) {
        std::string tok;
        for (long k = 0; k < cols; ++k) {
            if (!(in >> tok))
                throw ParseError(lineno, "matrix body ended early at entry (" +
                                             std::to_string(i + 1) + "," +
                                             std::to_string(k + 1) + ")");
            try {
                m(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) =
                    parse_rational(tok);
            } catch (const std::exception& e) {
                throw ParseError(lineno, e.what());
            }
        }
    }
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

Matrix parse_matrix_file(const std::string& path) { return parse_matrix(read_file(path)); }

std::string matrix_to_text(const Matrix& m) {
    std::ostringstream os;
    os << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << to_string(m(i, j));
        }
        os << '\n';
    }
    return os.str();
}

std::string matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    nlohmann::json j{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
    return j.dump();
}

AntiTriangularBlocks parse_blocks(const std::string& text) {
    // Split on blank lines into three chunks.
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> chunks{""};
    bool last_blank = false;
    while (std::getline(in, line)) {
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (blank) {
            last_blank = true;
            continue;
        }
        if (last_blank && !chunks.back().empty()) chunks.emplace_back();
        last_blank = false;
        chunks.back() += line + '\n';
    }
    if (chunks.size() != 3 || chunks.back().empty())
        throw ParseError(1, "blocks file must hold exactly three matrices (A, B, C) "
                            "separated by blank lines");
    Matrix a = parse_matrix(chunks[0]);
    Matrix b = parse_matrix(chunks[1]);
    Matrix c = parse_matrix(chunks[2]);
    return AntiTriangularBlocks(std::move(a), std::move(b), std::move(c));
}

AntiTriangularBlocks parse_blocks_file(const std::string& path) {
    return parse_blocks(read_file(path));
}

std::string digest(const Matrix& m) {
    std::string text = matrix_to_text(m);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << m.rows() << 'x' << m.cols() << '/' << std::hex << (h & 0xffffffffull);
    return os.str();
}

}  // namespace drz
