#include "blkd/io.hpp"

#include <fstream>
#include <sstream>

namespace blkd {

namespace {

// strips comments; returns false for blank lines
bool content_of(const std::string& raw, std::string& out) {
    std::string s = raw;
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t start = s.find_first_not_of(" \t");
    if (start == std::string::npos) return false;
    out = s.substr(start);
    return true;
}

struct LineReader {
    std::istream& in;
    int line_no = 0;
    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            if (content_of(raw, out)) return true;
        }
        return false;
    }
};

long parse_long(const std::string& tok, int line) {
    try {
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer, got '" + tok + "'");
    }
}

}  // namespace

Blockade read_instance(std::istream& in) {
    LineReader rd{in};
    std::string s;
    if (!rd.next(s)) throw ParseError(rd.line_no, "empty input");

    long k = -1, n = -1;
    {
        std::istringstream hs(s);
        std::string word, ktok, ntok;
        hs >> word >> ktok >> ntok;
        if (word != "blockade" || ktok.rfind("k=", 0) != 0 || ntok.rfind("n=", 0) != 0)
            throw ParseError(rd.line_no, "expected header 'blockade k=<k> n=<n>'");
        k = parse_long(ktok.substr(2), rd.line_no);
        n = parse_long(ntok.substr(2), rd.line_no);
        if (k < 1 || n < 0) throw ParseError(rd.line_no, "bad k or n");
    }

    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
    std::vector<bool> have(static_cast<std::size_t>(k), false);
    for (long b = 0; b < k; ++b) {
        if (!rd.next(s)) throw ParseError(rd.line_no, "expected block line");
        std::istringstream ls(s);
        std::string word, idx;
        ls >> word >> idx;
        if (word != "block" || idx.empty() || idx.back() != ':')
            throw ParseError(rd.line_no, "expected 'block <i>: ...'");
        long i = parse_long(idx.substr(0, idx.size() - 1), rd.line_no);
        if (i < 0 || i >= k) throw ParseError(rd.line_no, "block index out of range");
        if (have[std::size_t(i)]) throw ParseError(rd.line_no, "duplicate block index");
        have[std::size_t(i)] = true;
        std::string tok;
        while (ls >> tok) {
            long v = parse_long(tok, rd.line_no);
            if (v < 0 || v >= n) throw ParseError(rd.line_no, "vertex index out of range");
            blocks[std::size_t(i)].push_back(int(v));
        }
        if (blocks[std::size_t(i)].empty()) throw ParseError(rd.line_no, "empty block");
    }

    if (!rd.next(s) || s != "edges:") throw ParseError(rd.line_no, "expected 'edges:'");

    Graph g(static_cast<int>(n));
    while (rd.next(s)) {
        std::istringstream ls(s);
        std::string ut, vt, extra;
        if (!(ls >> ut >> vt)) throw ParseError(rd.line_no, "expected edge 'u v'");
        if (ls >> extra) throw ParseError(rd.line_no, "trailing tokens on edge line");
        long u = parse_long(ut, rd.line_no), v = parse_long(vt, rd.line_no);
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(rd.line_no, "vertex index out of range");
        if (u == v) throw ParseError(rd.line_no, "self-loop");
        g.add_edge(int(u), int(v));  // duplicates are idempotent
    }

    return Blockade(std::move(g), std::move(blocks));
}

Blockade read_instance_string(const std::string& text) {
    std::istringstream in(text);
    return read_instance(in);
}

Blockade read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_instance(in);
}

std::string write_instance(const Blockade& b) {
    std::ostringstream out;
    out << "blockade k=" << b.length() << " n=" << b.g.n() << "\n";
    for (int i = 0; i < b.length(); ++i) {
        out << "block " << i << ":";
        for (int v : b.blocks[i]) out << " " << v;
        out << "\n";
    }
    out << "edges:\n";
    for (auto [u, v] : b.g.edges()) out << u << " " << v << "\n";
    return out.str();
}

void write_instance_file(const Blockade& b, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << write_instance(b);
}

Pattern read_pattern_string(const std::string& text) {
    std::istringstream in(text);
    LineReader rd{in};
    std::string s;
    if (!rd.next(s)) throw ParseError(rd.line_no, "empty pattern");
    long n = -1, ordered = 0;
    {
        std::istringstream hs(s);
        std::string word, ntok, otok;
        hs >> word >> ntok >> otok;
        if (word != "pattern" || ntok.rfind("n=", 0) != 0 || otok.rfind("ordered=", 0) != 0)
            throw ParseError(rd.line_no, "expected header 'pattern n=<k> ordered=<0|1>'");
        n = parse_long(ntok.substr(2), rd.line_no);
        ordered = parse_long(otok.substr(8), rd.line_no);
        if (n < 1 || (ordered != 0 && ordered != 1)) throw ParseError(rd.line_no, "bad pattern header");
    }
    if (!rd.next(s) || s != "edges:") throw ParseError(rd.line_no, "expected 'edges:'");
    Pattern p{Graph(int(n)), ordered == 1};
    while (rd.next(s)) {
        std::istringstream ls(s);
        std::string ut, vt;
        if (!(ls >> ut >> vt)) throw ParseError(rd.line_no, "expected edge 'u v'");
        long u = parse_long(ut, rd.line_no), v = parse_long(vt, rd.line_no);
        if (u < 0 || u >= n || v < 0 || v >= n || u == v) throw ParseError(rd.line_no, "bad edge");
        p.g.add_edge(int(u), int(v));
    }
    return p;
}

Pattern read_pattern_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_pattern_string(ss.str());
}

std::string write_pattern(const Pattern& p) {
    std::ostringstream out;
    out << "pattern n=" << p.g.n() << " ordered=" << (p.ordered ? 1 : 0) << "\n";
    out << "edges:\n";
    for (auto [u, v] : p.g.edges()) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace blkd
