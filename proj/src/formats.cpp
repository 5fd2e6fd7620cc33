#include "hyperlearn/formats.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hyperlearn/errors.hpp"

namespace hyperlearn {
namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos < line.size()) {
        const size_t space = line.find(' ', pos);
        if (space == std::string::npos) {
            out.push_back(line.substr(pos));
            break;
        }
        if (space == pos) throw ParseError("unexpected double space");
        out.push_back(line.substr(pos, space - pos));
        pos = space + 1;
    }
    if (!line.empty() && line.back() == ' ') throw ParseError("trailing space");
    return out;
}

uint64_t parse_uint(const std::string& token) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("expected an unsigned integer, got '" + token + "'");
    errno = 0;
    char* end = nullptr;
    const uint64_t value = std::strtoull(token.c_str(), &end, 10);
    if (errno != 0 || end != token.c_str() + token.size())
        throw ParseError("integer out of range: '" + token + "'");
    return value;
}

// Header "kind key1=v1 key2=v2 ...": returns the values in key order.
std::vector<uint64_t> parse_header(std::istream& in, const std::string& kind,
                                   const std::vector<std::string>& keys) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("missing header line");
    const std::vector<std::string> tokens = split_tokens(line);
    if (tokens.size() != keys.size() + 1 || tokens[0] != kind)
        throw ParseError("malformed " + kind + " header");
    std::vector<uint64_t> values;
    for (size_t i = 0; i < keys.size(); ++i) {
        const std::string& tok = tokens[i + 1];
        const std::string prefix = keys[i] + "=";
        if (tok.rfind(prefix, 0) != 0)
            throw ParseError("expected " + prefix + "<int> in " + kind + " header");
        values.push_back(parse_uint(tok.substr(prefix.size())));
    }
    return values;
}

std::string next_line(std::istream& in, const char* what) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(std::string("missing ") + what);
    return line;
}

void reject_trailing(std::istream& in) {
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) throw ParseError("unexpected trailing content");
}

} // namespace

void write_mdnf(std::ostream& out, const Mdnf& f) {
    out << "mdnf n=" << f.var_count() << '\n';
    for (const Monomial& t : f.terms()) {
        for (size_t i = 0; i < t.vars().size(); ++i) {
            if (i) out << ' ';
            out << t.vars()[i];
        }
        out << '\n';
    }
}

Mdnf read_mdnf(std::istream& in) {
    const auto header = parse_header(in, "mdnf", {"n"});
    const auto n = static_cast<uint32_t>(header[0]);
    std::vector<Monomial> terms;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            reject_trailing(in); // blank lines are allowed only at the very end
            break;
        }
        std::vector<uint32_t> vars;
        for (const std::string& tok : split_tokens(line)) {
            const uint64_t v = parse_uint(tok);
            if (v == 0 || v > n) throw ParseError("term index out of range");
            if (!vars.empty() && v <= vars.back())
                throw ParseError("term indices must be strictly ascending");
            vars.push_back(static_cast<uint32_t>(v));
        }
        terms.emplace_back(std::move(vars));
    }
    return Mdnf(n, std::move(terms));
}

void write_cff(std::ostream& out, const DesignMatrix& A) {
    out << "cff n=" << A.n << " s=" << A.s << " r=" << A.r << " m=" << A.rows.size()
        << " verified=" << static_cast<int>(A.state) << '\n';
    for (const Assignment& row : A.rows) out << row.to_bit_string() << '\n';
}

DesignMatrix read_cff(std::istream& in) {
    const auto header = parse_header(in, "cff", {"n", "s", "r", "m", "verified"});
    DesignMatrix A;
    A.n = static_cast<uint32_t>(header[0]);
    A.s = static_cast<uint32_t>(header[1]);
    A.r = static_cast<uint32_t>(header[2]);
    const uint64_t m = header[3];
    if (header[4] > 2) throw ParseError("verified flag must be 0, 1 or 2");
    A.state = static_cast<VerifyState>(header[4]);
    A.rows.reserve(m);
    for (uint64_t i = 0; i < m; ++i) {
        const std::string line = next_line(in, "design row");
        if (line.size() != A.n) throw ParseError("design row has wrong length");
        A.rows.push_back(Assignment::from_bits(line));
    }
    reject_trailing(in);
    return A;
}

void write_phf(std::ostream& out, const HashFamily& P) {
    out << "phf n=" << P.n << " q=" << P.q << " d=" << P.d << " N=" << P.funcs.size() << '\n';
    for (const auto& func : P.funcs) {
        for (size_t i = 0; i < func.size(); ++i) {
            if (i) out << ' ';
            out << func[i];
        }
        out << '\n';
    }
}

HashFamily read_phf(std::istream& in) {
    const auto header = parse_header(in, "phf", {"n", "q", "d", "N"});
    HashFamily P;
    P.n = static_cast<uint32_t>(header[0]);
    P.q = static_cast<uint32_t>(header[1]);
    P.d = static_cast<uint32_t>(header[2]);
    const uint64_t nfuncs = header[3];
    P.funcs.reserve(nfuncs);
    for (uint64_t k = 0; k < nfuncs; ++k) {
        const std::string line = next_line(in, "hash function row");
        const std::vector<std::string> tokens = split_tokens(line);
        if (tokens.size() != P.n) throw ParseError("hash function row has wrong length");
        std::vector<uint32_t> func;
        func.reserve(P.n);
        for (const std::string& tok : tokens) {
            const uint64_t v = parse_uint(tok);
            if (v == 0 || v > P.q) throw ParseError("hash value out of range");
            func.push_back(static_cast<uint32_t>(v));
        }
        P.funcs.push_back(std::move(func));
    }
    reject_trailing(in);
    return P;
}

void write_transcript(std::ostream& out, const Transcript& t) {
    out << "transcript n=" << t.n << " k=" << t.queries.size() << '\n';
    for (size_t i = 0; i < t.queries.size(); ++i)
        out << t.queries[i].to_bit_string() << ' ' << int(t.answers[i] ? 1 : 0) << '\n';
}

Transcript read_transcript(std::istream& in) {
    const auto header = parse_header(in, "transcript", {"n", "k"});
    Transcript t;
    t.n = static_cast<uint32_t>(header[0]);
    const uint64_t k = header[1];
    t.queries.reserve(k);
    t.answers.reserve(k);
    for (uint64_t i = 0; i < k; ++i) {
        const std::string line = next_line(in, "transcript row");
        if (line.size() != t.n + 2 || line[t.n] != ' ')
            throw ParseError("malformed transcript row");
        t.queries.push_back(Assignment::from_bits({line.data(), t.n}));
        const char a = line[t.n + 1];
        if (a != '0' && a != '1') throw ParseError("transcript answer must be 0 or 1");
        t.answers.push_back(a == '1');
    }
    t.batches = t.queries.empty() ? 0 : 1;
    reject_trailing(in);
    return t;
}

std::string mdnf_to_string(const Mdnf& f) {
    std::ostringstream out;
    write_mdnf(out, f);
    return out.str();
}

Mdnf mdnf_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_mdnf(in);
}

void save_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << contents;
    if (!out.flush()) throw Error("write failed: " + path);
}

std::string load_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace hyperlearn
