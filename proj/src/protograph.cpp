#include "scldpc/protograph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace scldpc {

int BaseMatrix::row_degree(int row) const {
    int d = 0;
    for (int j = 0; j < v; ++j) d += at(row, j);
    return d;
}

int BaseMatrix::col_degree(int col) const {
    int d = 0;
    for (int i = 0; i < c; ++i) d += at(i, col);
    return d;
}

int BaseMatrix::total_edges() const {
    return std::accumulate(entries.begin(), entries.end(), 0);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Regular: return "regular";
        case Family::RA: return "ra";
        case Family::ARJA: return "arja";
        case Family::ModifiedRA: return "modified_ra";
        case Family::ModifiedARJA: return "modified_arja";
    }
    return "?";
}

int Protograph::punctured_count() const {
    int n = 0;
    for (auto b : punctured) n += b ? 1 : 0;
    return n;
}

std::vector<int> Protograph::var_degrees() const {
    std::vector<int> d(v(), 0);
    for (int j = 0; j < v(); ++j) d[j] = base.col_degree(j);
    return d;
}

std::vector<int> Protograph::chk_degrees() const {
    std::vector<int> d(c(), 0);
    for (int i = 0; i < c(); ++i) d[i] = base.row_degree(i);
    return d;
}

std::vector<EdgeInstance> Protograph::edge_instances() const {
    std::vector<EdgeInstance> out;
    out.reserve(static_cast<size_t>(base.total_edges()));
    for (int i = 0; i < c(); ++i)
        for (int j = 0; j < v(); ++j)
            for (int m = 0; m < base.at(i, j); ++m)
                out.push_back({static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(i)});
    return out;
}

std::vector<MultiEdge> Protograph::multi_edges() const {
    std::vector<MultiEdge> out;
    for (int i = 0; i < c(); ++i)
        for (int j = 0; j < v(); ++j)
            if (int m = base.at(i, j); m > 0)
                out.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), m});
    return out;
}

void Protograph::validate() const {
    const size_t nv = static_cast<size_t>(v());
    const size_t nc = static_cast<size_t>(c());
    if (var_position.size() != nv || var_layer.size() != nv || var_chain.size() != nv ||
        punctured.size() != nv || chk_position.size() != nc || chk_layer.size() != nc ||
        chk_chain.size() != nc)
        throw std::logic_error("Protograph: annotation sizes inconsistent");
    for (const auto& e : base.entries)
        if (e < 0) throw std::logic_error("Protograph: negative multiplicity");
    for (int j = 0; j < v(); ++j)
        if (base.col_degree(j) == 0) throw std::logic_error("Protograph: all-zero column");
    // handshake is automatic for a shared matrix; recompute both ways anyway
    long var_sum = 0, chk_sum = 0;
    for (int j = 0; j < v(); ++j) var_sum += base.col_degree(j);
    for (int i = 0; i < c(); ++i) chk_sum += base.row_degree(i);
    if (var_sum != chk_sum) throw std::logic_error("Protograph: handshake violated");
}

Rational design_rate(const Protograph& p) {
    const std::int64_t tx = p.v() - p.punctured_count();
    if (tx == 0) throw std::invalid_argument("design_rate: no transmitted variables");
    return Rational(p.v() - p.c(), tx);
}

DegreeProfile degree_profile(const Protograph& p) {
    return {p.var_degrees(), p.chk_degrees()};
}

namespace {

void write_int_list(std::ostringstream& os, const std::vector<int>& xs) {
    for (size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
}

std::vector<int> read_int_list(std::istringstream& is) {
    std::vector<int> out;
    int x;
    while (is >> x) out.push_back(x);
    return out;
}

}  // namespace

std::string to_text(const Protograph& p) {
    std::ostringstream os;
    os << p.c() << " " << p.v() << "\n";
    for (int i = 0; i < p.c(); ++i) {
        for (int j = 0; j < p.v(); ++j) os << (j ? " " : "") << p.base.at(i, j);
        os << "\n";
    }
    if (p.punctured_count() > 0) {
        os << "#punctured:";
        for (int j = 0; j < p.v(); ++j)
            if (p.punctured[j]) os << " " << j;
        os << "\n";
    }
    os << "#positions: ";
    write_int_list(os, p.var_position);
    os << " | ";
    write_int_list(os, p.chk_position);
    os << "\n";
    if (p.layers > 0) {
        os << "#layers: ";
        write_int_list(os, p.var_layer);
        os << " | ";
        write_int_list(os, p.chk_layer);
        os << "\n";
        os << "#chains: ";
        write_int_list(os, p.var_chain);
        os << " | ";
        write_int_list(os, p.chk_chain);
        os << "\n";
    }
    os << "#meta: family=" << family_name(p.component.family) << " J=" << p.component.J
       << " K=" << p.component.K << " q=" << p.component.q << " L=" << p.component.L
       << " T=" << p.layers << " v_unc=" << p.v_unc << " a=" << p.acc_extra << "\n";
    return os.str();
}

Protograph protograph_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("protograph_from_text: empty input");
    std::istringstream hdr(line);
    int c = 0, v = 0;
    if (!(hdr >> c >> v) || c <= 0 || v <= 0)
        throw std::invalid_argument("protograph_from_text: bad header");
    Protograph p;
    p.base = BaseMatrix(c, v);
    for (int i = 0; i < c; ++i) {
        if (!std::getline(in, line))
            throw std::invalid_argument("protograph_from_text: truncated matrix");
        std::istringstream row(line);
        for (int j = 0; j < v; ++j) {
            int e;
            if (!(row >> e) || e < 0)
                throw std::invalid_argument("protograph_from_text: bad entry");
            p.base.at(i, j) = e;
        }
    }
    p.var_position.assign(v, 1);
    p.chk_position.assign(c, 1);
    p.var_layer.assign(v, 0);
    p.chk_layer.assign(c, 0);
    p.var_chain.assign(v, 0);
    p.chk_chain.assign(c, 0);
    p.punctured.assign(v, 0);

    auto split_pair = [&](const std::string& body, std::vector<int>& a, std::vector<int>& b,
                          size_t na, size_t nb, const char* what) {
        auto bar = body.find('|');
        if (bar == std::string::npos)
            throw std::invalid_argument(std::string("protograph_from_text: missing | in ") + what);
        std::istringstream va(body.substr(0, bar)), vb(body.substr(bar + 1));
        a = read_int_list(va);
        b = read_int_list(vb);
        if (a.size() != na || b.size() != nb)
            throw std::invalid_argument(std::string("protograph_from_text: bad length in ") + what);
    };

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("#punctured:", 0) == 0) {
            std::istringstream is(line.substr(11));
            for (int idx : read_int_list(is)) {
                if (idx < 0 || idx >= v)
                    throw std::invalid_argument("protograph_from_text: punctured index out of range");
                p.punctured[idx] = 1;
            }
        } else if (line.rfind("#positions:", 0) == 0) {
            split_pair(line.substr(11), p.var_position, p.chk_position, v, c, "#positions");
        } else if (line.rfind("#layers:", 0) == 0) {
            split_pair(line.substr(8), p.var_layer, p.chk_layer, v, c, "#layers");
        } else if (line.rfind("#chains:", 0) == 0) {
            split_pair(line.substr(8), p.var_chain, p.chk_chain, v, c, "#chains");
        } else if (line.rfind("#meta:", 0) == 0) {
            std::istringstream is(line.substr(6));
            std::string kv;
            while (is >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) continue;
                const std::string key = kv.substr(0, eq);
                const std::string val = kv.substr(eq + 1);
                if (key == "family") {
                    if (val == "regular") p.component.family = Family::Regular;
                    else if (val == "ra") p.component.family = Family::RA;
                    else if (val == "arja") p.component.family = Family::ARJA;
                    else if (val == "modified_ra") p.component.family = Family::ModifiedRA;
                    else if (val == "modified_arja") p.component.family = Family::ModifiedARJA;
                    else throw std::invalid_argument("protograph_from_text: unknown family");
                } else {
                    const int x = std::stoi(val);
                    if (key == "J") p.component.J = x;
                    else if (key == "K") p.component.K = x;
                    else if (key == "q") p.component.q = x;
                    else if (key == "L") p.component.L = x;
                    else if (key == "T") p.layers = x;
                    else if (key == "v_unc") p.v_unc = x;
                    else if (key == "a") p.acc_extra = x;
                }
            }
        } else {
            throw std::invalid_argument("protograph_from_text: unknown annotation line");
        }
    }
    p.validate();
    return p;
}

std::uint64_t protograph_hash(const Protograph& p) {
    const std::string s = to_text(p);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace scldpc
