#pragma once

// Plain-text module files and chart serialization (TSV and SVG).
//
// Module file format, one directive per line ('#' starts a comment):
//   module <name>
//   gen <id> <degree>
//   sq1 <id> = <id> [+ <id>]*
//   sq2 <id> = <id> [+ <id>]*
//   window <lo> <hi>
// Every id must be declared by a gen line before use; omitted sq lines mean
// the zero map.  Loading validates the A(1) relations.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "a1mod/ext.hpp"
#include "a1mod/module.hpp"

namespace a1mod::io {

struct ParsedGen {
    std::string id;
    int degree = 0;
    int lineno = 0;
};

inline A1Module parse_module(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string name = "module";
    std::vector<ParsedGen> gens;
    std::map<std::string, int> index;  // id -> position among gens
    struct SqLine {
        int k;
        std::string src;
        std::vector<std::string> dsts;
        int lineno;
    };
    std::vector<SqLine> sqlines;
    bool have_window = false;
    int wlo = 0, whi = 0;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream ls(stripped);
        std::string word;
        if (!(ls >> word)) continue;
        auto fail = [&](const std::string& msg) {
            throw ParseError("line " + std::to_string(lineno) + ": " + msg);
        };
        if (word == "module") {
            if (!(ls >> name)) fail("missing module name");
        } else if (word == "gen") {
            ParsedGen g;
            g.lineno = lineno;
            if (!(ls >> g.id >> g.degree)) fail("expected: gen <id> <degree>");
            if (index.count(g.id)) fail("duplicate generator id '" + g.id + "'");
            index[g.id] = static_cast<int>(gens.size());
            gens.push_back(g);
        } else if (word == "sq1" || word == "sq2") {
            SqLine s;
            s.k = (word == "sq1") ? 1 : 2;
            s.lineno = lineno;
            std::string eq;
            if (!(ls >> s.src >> eq) || eq != "=") fail("expected: " + word + " <id> = <id> [+ <id>]*");
            std::string tok;
            bool expect_id = true;
            while (ls >> tok) {
                if (tok == "+") {
                    if (expect_id) fail("misplaced '+'");
                    expect_id = true;
                    continue;
                }
                if (!expect_id) fail("missing '+' between ids");
                s.dsts.push_back(tok);
                expect_id = false;
            }
            if (s.dsts.empty() || expect_id) fail("missing right-hand side");
            sqlines.push_back(std::move(s));
        } else if (word == "window") {
            if (!(ls >> wlo >> whi)) fail("expected: window <lo> <hi>");
            have_window = true;
        } else {
            fail("unknown directive '" + word + "'");
        }
    }
    if (gens.empty()) return zero_module(name);
    int lo = gens[0].degree, hi = gens[0].degree;
    for (auto& g : gens) {
        lo = std::min(lo, g.degree);
        hi = std::max(hi, g.degree);
    }
    std::vector<int> dims(static_cast<std::size_t>(hi - lo + 1), 0);
    std::map<std::string, int> col_of;  // id -> column within its degree
    for (auto& g : gens) {
        col_of[g.id] = dims[static_cast<std::size_t>(g.degree - lo)];
        dims[static_cast<std::size_t>(g.degree - lo)]++;
    }
    A1Module m = make_module(name, lo, std::move(dims));
    for (auto& s : sqlines) {
        auto it = index.find(s.src);
        if (it == index.end() || gens[static_cast<std::size_t>(it->second)].lineno > s.lineno)
            throw ParseError("line " + std::to_string(s.lineno) + ": id '" + s.src +
                             "' not declared before use");
        int src_deg = gens[static_cast<std::size_t>(it->second)].degree;
        for (auto& dst : s.dsts) {
            auto jt = index.find(dst);
            if (jt == index.end() || gens[static_cast<std::size_t>(jt->second)].lineno > s.lineno)
                throw ParseError("line " + std::to_string(s.lineno) + ": id '" + dst +
                                 "' not declared before use");
            int dst_deg = gens[static_cast<std::size_t>(jt->second)].degree;
            if (dst_deg != src_deg + s.k)
                throw ParseError("line " + std::to_string(s.lineno) + ": sq" + std::to_string(s.k) +
                                 " must raise degree by exactly " + std::to_string(s.k) + " ('" +
                                 s.src + "' in degree " + std::to_string(src_deg) + ", '" + dst +
                                 "' in degree " + std::to_string(dst_deg) + ")");
            auto& store = (s.k == 1) ? m.sq1 : m.sq2;
            auto& mat = store[static_cast<std::size_t>(src_deg - m.lo)];
            std::size_t r = static_cast<std::size_t>(col_of[dst]);
            std::size_t c = static_cast<std::size_t>(col_of[s.src]);
            mat.set(r, c, !mat.get(r, c));
        }
    }
    if (have_window) m.window = Window{wlo, whi, false, false};
    validate(m);
    return m;
}

inline std::string gen_id(int degree, int col) {
    std::string d = std::to_string(degree);
    for (auto& ch : d)
        if (ch == '-') ch = 'm';
    return "g" + d + "_" + std::to_string(col);
}

inline std::string write_module(const A1Module& m) {
    std::ostringstream out;
    out << "module " << (m.name.empty() ? "module" : m.name) << "\n";
    if (m.window) {
        // The loader treats both window edges conservatively (truncation
        // edges).  An exact edge means the module is authoritatively zero
        // beyond it, so the declared window may be widened there; this keeps
        // profiles computed after a round trip identical.
        int wlo = m.window->lo - (m.window->lo_exact ? 8 : 0);
        int whi = m.window->hi + (m.window->hi_exact ? 8 : 0);
        out << "window " << wlo << " " << whi << "\n";
    }
    for (int n = m.min_deg(); n <= m.max_deg(); ++n)
        for (int j = 0; j < m.dim(n); ++j) out << "gen " << gen_id(n, j) << " " << n << "\n";
    for (int k : {1, 2}) {
        for (int n = m.min_deg(); n <= m.max_deg(); ++n) {
            gf2::BitMatrix mat = m.sq(k, n);
            for (int c = 0; c < m.dim(n); ++c) {
                std::vector<std::string> dsts;
                for (int r = 0; r < m.dim(n + k); ++r)
                    if (mat.get(static_cast<std::size_t>(r), static_cast<std::size_t>(c)))
                        dsts.push_back(gen_id(n + k, r));
                if (dsts.empty()) continue;
                out << "sq" << k << " " << gen_id(n, c) << " =";
                for (std::size_t i = 0; i < dsts.size(); ++i)
                    out << (i ? " + " : " ") << dsts[i];
                out << "\n";
            }
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Charts

inline std::string chart_tsv(const ExtChart& ch) {
    std::ostringstream out;
    for (auto& [k, d] : ch.dims)
        out << k.s << "\t" << k.t << "\t" << k.eps << "\t" << d << "\n";
    for (auto& n : ch.notes) out << "# " << n << "\n";
    auto emit_actions = [&](const char* label, const std::map<ChartKey, gf2::BitMatrix>& acts,
                            int dt) {
        for (auto& [k, mat] : acts) {
            std::size_t r = gf2::rank(mat);
            if (!r) continue;
            out << "# " << label << " (" << k.s << "," << k.t << "," << k.eps << ")->(" << k.s + 1
                << "," << k.t + dt << "," << k.eps << ") rank=" << r << "\n";
        }
    };
    emit_actions("h0", ch.h0_action, 1);
    emit_actions("h1", ch.h1_action, 2);
    return out.str();
}

// Deterministic SVG chart in Adams coordinates: dots per cell, vertical h0
// segments, diagonal h1 segments.  Fixed layout constants; byte-identical
// output for identical charts.
inline std::string chart_svg(const ExtChart& ch) {
    const int cell = 24, margin = 36, dot_r = 3;
    int cols = ch.x_max - ch.x_min + 1;
    int rows = ch.s_max - ch.s_min + 1;
    int width = 2 * margin + cell * cols;
    int height = 2 * margin + cell * rows;
    auto px = [&](int x) { return margin + cell * (x - ch.x_min) + cell / 2; };
    auto py = [&](int s) { return height - margin - cell * (s - ch.s_min) - cell / 2; };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    // axes
    out << "<line x1=\"" << margin / 2 << "\" y1=\"" << py(ch.s_min) + cell / 2 + 4 << "\" x2=\""
        << width - margin / 2 << "\" y2=\"" << py(ch.s_min) + cell / 2 + 4
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    // dots: dim d spreads d dots horizontally inside the cell
    auto dot_x = [&](const ChartKey& k, int i, int d) {
        int x = px(k.t - k.s);
        return x + (2 * i - (d - 1)) * (dot_r + 1);
    };
    for (auto& [k, mat] : ch.h0_action) {
        if (ch.dim(k.s + 1, k.t + 1, k.eps) == 0) continue;
        if (gf2::rank(mat) == 0) continue;
        out << "<line x1=\"" << px(k.t - k.s) << "\" y1=\"" << py(k.s) << "\" x2=\""
            << px(k.t - k.s) << "\" y2=\"" << py(k.s + 1) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    for (auto& [k, mat] : ch.h1_action) {
        if (ch.dim(k.s + 1, k.t + 2, k.eps) == 0) continue;
        if (gf2::rank(mat) == 0) continue;
        out << "<line x1=\"" << px(k.t - k.s) << "\" y1=\"" << py(k.s) << "\" x2=\""
            << px(k.t - k.s + 1) << "\" y2=\"" << py(k.s + 1)
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    for (auto& [k, d] : ch.dims) {
        const char* fill = k.eps ? "none" : "black";
        for (int i = 0; i < d; ++i)
            out << "<circle cx=\"" << dot_x(k, i, d) << "\" cy=\"" << py(k.s) << "\" r=\"" << dot_r
                << "\" fill=\"" << fill << "\" stroke=\"black\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace a1mod::io
