#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercut/boundary.hpp"
#include "hypercut/collapse.hpp"
#include "hypercut/simplex.hpp"

namespace hypercut {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Complex file format: first line "n d"; each non-empty line one d-face as
// d+1 ascending space-separated integers; '#' starts a comment line.
inline FaceSet read_complex(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_content_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t i = 0;
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            if (i == line.size() || line[i] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_content_line(header)) throw ParseError(lineno, "missing 'n d' header");
    int n = 0, d = 0;
    {
        std::istringstream ss(header);
        std::string extra;
        if (!(ss >> n >> d) || (ss >> extra))
            throw ParseError(lineno, "header must be exactly 'n d'");
    }
    if (n <= 0 || d < 0 || d >= n) throw ParseError(lineno, "need 0 <= d < n");

    FaceSet fs(n, d);
    std::string body;
    while (next_content_line(body)) {
        std::istringstream ss(body);
        std::vector<Vertex> verts;
        Vertex v;
        while (ss >> v) verts.push_back(v);
        if (!ss.eof()) throw ParseError(lineno, "malformed vertex id");
        if (static_cast<int>(verts.size()) != d + 1)
            throw ParseError(lineno, "face must have exactly " + std::to_string(d + 1) + " vertices");
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (verts[i] < 0 || verts[i] >= n) throw ParseError(lineno, "vertex out of range");
            if (i > 0 && verts[i - 1] >= verts[i])
                throw ParseError(lineno, "vertices must be strictly ascending");
        }
        fs.insert_index(static_cast<std::uint32_t>(colex_rank(verts)));
    }
    return fs;
}

inline FaceSet read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_complex(in);
}

// Canonical writer: faces in colex order, byte-stable.
inline void write_complex(const FaceSet& fs, std::ostream& out) {
    out << fs.n << ' ' << fs.d << '\n';
    for (std::size_t i = 0; i < fs.size(); ++i) out << fs.simplex_at(i) << '\n';
}

inline void write_complex_file(const FaceSet& fs, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_complex(fs, out);
}

// SMS triplet format: header "rows cols M", 1-based "i j value" entries,
// "0 0 0" terminator.
inline void write_sms(const BoundaryMatrix& m, std::ostream& out) {
    out << matrix_rows(m) << ' ' << matrix_cols(m) << " M\n";
    if (std::holds_alternative<Gf2Matrix>(m)) {
        const auto& g = std::get<Gf2Matrix>(m);
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j)
                if (g.get(i, j)) out << i + 1 << ' ' << j + 1 << " 1\n";
    } else {
        const auto& q = std::get<ExactMatrix>(m);
        for (std::size_t i = 0; i < q.rows(); ++i)
            for (std::size_t j = 0; j < q.cols(); ++j)
                if (q.at(i, j) != 0) out << i + 1 << ' ' << j + 1 << ' ' << q.at(i, j) << '\n';
    }
    out << "0 0 0\n";
}

inline ExactMatrix read_sms(std::istream& in) {
    std::size_t rows = 0, cols = 0;
    std::string tag;
    if (!(in >> rows >> cols >> tag)) throw ParseError(1, "malformed SMS header");
    ExactMatrix m(rows, cols);
    long long i = 0, j = 0;
    std::string val;
    int entry = 0;
    while (in >> i >> j >> val) {
        ++entry;
        if (i == 0 && j == 0) return m;
        if (i < 1 || j < 1 || i > static_cast<long long>(rows) || j > static_cast<long long>(cols))
            throw ParseError(entry + 1, "SMS entry out of range");
        m.at(i - 1, j - 1) = BigInt(val);
    }
    throw ParseError(entry + 1, "missing SMS terminator");
}

inline ExactMatrix read_sms_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_sms(in);
}

// CollapseSequence audit format: one "tau -> sigma" line per step.
inline void write_collapse_sequence(const CollapseSequence& seq, std::ostream& out) {
    for (const auto& step : seq.steps)
        out << step.exposed << " -> " << step.removed << '\n';
    if (!seq.collapsed()) {
        out << "# residual " << seq.residual() << '\n';
        for (std::size_t i = 0; i < seq.remaining.size(); ++i)
            out << "# " << seq.remaining.simplex_at(i) << '\n';
    }
}

// Replays a serialized sequence against a starting complex; true iff every
// step was legal (exposed at its turn) and all faces got removed.
inline bool replay_collapse(const FaceSet& start, const CollapseSequence& seq) {
    std::vector<char> alive(start.ambient_count(), 0);
    for (std::uint32_t f : start.idx) alive[f] = 1;
    std::size_t left = start.size();
    for (const auto& step : seq.steps) {
        const auto tau = static_cast<std::uint32_t>(colex_rank(step.exposed.v));
        const auto sigma = static_cast<std::uint32_t>(colex_rank(step.removed.v));
        if (!alive[sigma]) return false;
        std::size_t cofaces = 0;
        for (std::uint64_t i = 0; i < start.ambient_count(); ++i) {
            if (!alive[i]) continue;
            for (const auto& [r, v] : boundary_column(start.d, static_cast<std::uint32_t>(i))) {
                (void)v;
                if (r == tau) ++cofaces;
            }
        }
        if (cofaces != 1) return false;
        alive[sigma] = 0;
        --left;
    }
    return left == seq.residual();
}

// Versioned structured-text report ("format: 1", key-value lines, witness
// blocks in the complex file format).
class ReportWriter {
  public:
    explicit ReportWriter(std::ostream& out, const std::string& kind) : out_(out) {
        out_ << "format: 1\n";
        out_ << "kind: " << kind << '\n';
    }
    template <typename T>
    void field(const std::string& key, const T& value) {
        out_ << key << ": " << value << '\n';
    }
    void block(const std::string& label, const FaceSet& fs) {
        out_ << label << ":\n";
        write_complex(fs, out_);
        out_ << "end\n";
    }

  private:
    std::ostream& out_;
};

}  // namespace hypercut
