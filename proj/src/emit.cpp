#include "orbita/emit.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "orbita/errors.hpp"

namespace orbita::io {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string Table::to_csv() const {
    std::string out;
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        out += header[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

Table parse_csv(const std::string& text) {
    Table t;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (first) {
            t.header = cells;
            first = false;
        } else {
            t.rows.push_back(cells);
        }
    }
    return t;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open output file " + path);
    f << text;
}

std::string spectrum_band_tag(const WeightVector& w, const quantize::SpectrumRow& row,
                              long d_of_l, const quantize::SpectrumTable& table) {
    for (const auto& m : table.pi.members)
        if (m.l == row.l && m.k == row.k) return "Pi";
    if (row.l == 0) return "Pi";
    bool bottom = row.k == 1;
    bool top = row.k == d_of_l;
    if (bottom && row.v == 0.0) return row.l <= w.lambda() ? "S3" : "P-";
    if (bottom) return "P-";
    if (top) {
        double vmax = static_cast<double>(quantize::volume_closed(
            std::lround(w.lambda()), std::lround(w.mu()), row.l));
        if (row.v == vmax && row.l <= w.mu()) return "S1";
        return "P+";
    }
    return "";
}

SpectrumFile make_spectrum_file(const WeightVector& w,
                                const quantize::SpectrumTable& table,
                                int curve_samples) {
    SpectrumFile f;
    f.states.header = {"L", "k", "ku", "Q", "V", "band"};
    long lambda = std::lround(w.lambda()), mu = std::lround(w.mu());
    for (const auto& r : table.rows) {
        long d = quantize::multiplicity_k_rule(lambda, mu, r.l);
        f.states.rows.push_back({num(static_cast<double>(r.l)),
                                 num(static_cast<double>(r.k)), num(r.k_u), num(r.q),
                                 num(r.v), spectrum_band_tag(w, r, d, table)});
    }

    f.band_lines.header = {"band", "L", "Q"};
    orbit::BandCatalog cat = orbit::band_catalog(w);
    for (const auto& b : cat.bands) {
        if (b.stability == orbit::Stability::Saddle) continue;
        for (int i = 0; i < curve_samples; ++i) {
            double l = b.l_min + (b.l_max - b.l_min) * i / (curve_samples - 1.0);
            f.band_lines.rows.push_back(
                {orbit::band_kind_name(b.kind), num(l), num(b.q_of_l(l))});
        }
    }

    // Spacing annotations: group the bottom (and top) states by their target
    // volume level; a single mixed-parity chain reads dL=1, split parity
    // chains read dL=2.
    auto annotate = [&](bool top, const char* name) {
        // distance of the odd-L chain from the band edge decides the split:
        // even-L edge rows sit exactly on the curve, so a one-level offset
        // still joins into a single dL=1 chain; a two-level offset decouples
        // the parities into separate dL=2 chains
        double gap = 0;
        for (const auto& r : table.rows) {
            if (r.l % 2 == 0 || r.l == 0) continue;
            long d = quantize::multiplicity_k_rule(lambda, mu, r.l);
            double vmax = static_cast<double>(quantize::volume_closed(lambda, mu, r.l));
            if (!top && r.k == 1) {
                gap = r.v;
                break;
            }
            if (top && r.k == d) {
                gap = vmax - r.v;
                break;
            }
        }
        std::ostringstream os;
        os << name << ": dL=" << (gap <= 1.0 ? 1 : 2);
        if (gap > 1.0) os << " (parity split)";
        f.gap_notes.push_back(os.str());
    };
    annotate(false, "P-");
    annotate(true, "P+");
    f.gap_notes.push_back("S3: dL=2");
    f.gap_notes.push_back("S1: dL=2");
    return f;
}

Table make_band_table(const WeightVector&, const orbit::BandCatalog& cat,
                      int l_steps) {
    Table t;
    t.header = {"band", "L",    "p", "Q", "P1", "P2",       "P3",
                "beta", "Gamma", "x", "y", "E",  "stability"};
    for (const auto& b : cat.bands) {
        for (int i = 0; i <= l_steps; ++i) {
            double l = b.l_min + (b.l_max - b.l_min) * i / static_cast<double>(l_steps);
            orbit::EigenTriple e = b.eigen_of_l(l);
            auto xy = orbit::shape_projection(e);
            t.rows.push_back({orbit::band_kind_name(b.kind), num(l), num(b.p_of_l(l)),
                              num(b.q_of_l(l)), num(e.p1), num(e.p2), num(e.p3),
                              num(e.beta), num(e.gamma_shape), num(xy[0]), num(xy[1]),
                              num(b.energy_factor(l)),
                              orbit::stability_name(b.stability)});
        }
    }
    return t;
}

namespace {

std::string svg_polyline(const std::vector<std::array<double, 2>>& pts,
                         const char* color, bool dashed) {
    std::ostringstream os;
    os << "<polyline fill=\"none\" stroke=\"" << color << "\"";
    if (dashed) os << " stroke-dasharray=\"6,4\"";
    os << " stroke-width=\"1.5\" points=\"";
    for (const auto& p : pts) os << p[0] << ',' << p[1] << ' ';
    os << "\"/>\n";
    return os.str();
}

} // namespace

std::string bands_svg(const WeightVector& w, const orbit::BandCatalog& cat,
                      int l_steps) {
    // shape plane, x in [0, beta_max], y in [0, beta_max]
    double bmax = w.sl(0) / w.s1() * 1.15;
    auto map = [&](double x, double y) -> std::array<double, 2> {
        return {40.0 + x / bmax * 520.0, 560.0 - y / bmax * 520.0};
    };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
          "viewBox=\"0 0 600 600\">\n";
    os << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
    // shaded admissible region: polygon along the band curves
    std::vector<std::array<double, 2>> hull;
    for (const auto& b : cat.bands) {
        if (b.stability == orbit::Stability::Saddle) continue;
        for (int i = 0; i <= l_steps; ++i) {
            double l = b.l_min + (b.l_max - b.l_min) * i / static_cast<double>(l_steps);
            auto xy = orbit::shape_projection(b.eigen_of_l(l));
            hull.push_back(map(xy[0], xy[1]));
        }
    }
    os << "<polygon fill=\"#d9e8f5\" stroke=\"none\" points=\"";
    for (const auto& p : hull) os << p[0] << ',' << p[1] << ' ';
    os << "\"/>\n";
    for (const auto& b : cat.bands) {
        std::vector<std::array<double, 2>> pts;
        for (int i = 0; i <= l_steps; ++i) {
            double l = b.l_min + (b.l_max - b.l_min) * i / static_cast<double>(l_steps);
            auto xy = orbit::shape_projection(b.eigen_of_l(l));
            pts.push_back(map(xy[0], xy[1]));
        }
        bool dashed = b.kind == orbit::BandKind::S3 || b.kind == orbit::BandKind::Pplus;
        const char* color = b.stability == orbit::Stability::Saddle ? "#c0c0c0"
                            : b.stability == orbit::Stability::Minimum ? "#1f77b4"
                                                                       : "#d62728";
        os << svg_polyline(pts, color, dashed);
        // arrow marker at the midpoint in the direction of increasing L
        if (pts.size() > 2) {
            auto a = pts[pts.size() / 2 - 1], c = pts[pts.size() / 2 + 1];
            os << "<line x1=\"" << a[0] << "\" y1=\"" << a[1] << "\" x2=\"" << c[0]
               << "\" y2=\"" << c[1]
               << "\" stroke=\"black\" stroke-width=\"1\" marker-end=\"url(#ar)\"/>\n";
        }
    }
    os << "<defs><marker id=\"ar\" markerWidth=\"8\" markerHeight=\"8\" refX=\"4\" "
          "refY=\"2\" orient=\"auto\"><path d=\"M0,0 L6,2 L0,4 z\"/></marker></defs>\n";
    os << "</svg>\n";
    return os.str();
}

std::string spectrum_svg(const WeightVector& w, const quantize::SpectrumTable& table) {
    double lmax = w.lambda() + w.mu();
    double qlo = w.p3, qhi = w.p1;
    auto map = [&](double l, double q) -> std::array<double, 2> {
        return {40.0 + l / lmax * 540.0, 560.0 - (q - qlo) / (qhi - qlo) * 520.0};
    };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
          "viewBox=\"0 0 600 600\">\n<rect width=\"600\" height=\"600\" "
          "fill=\"white\"/>\n";
    orbit::BandCatalog cat = orbit::band_catalog(w);
    for (const auto& b : cat.bands) {
        if (b.stability == orbit::Stability::Saddle) continue;
        std::vector<std::array<double, 2>> pts;
        for (int i = 0; i <= 128; ++i) {
            double l = b.l_min + (b.l_max - b.l_min) * i / 128.0;
            pts.push_back(map(l, b.q_of_l(l)));
        }
        bool dashed = b.kind == orbit::BandKind::S3 || b.kind == orbit::BandKind::Pplus;
        os << svg_polyline(pts, "#888888", dashed);
    }
    for (const auto& r : table.rows) {
        auto p = map(static_cast<double>(r.l), r.q);
        os << "<circle cx=\"" << p[0] << "\" cy=\"" << p[1]
           << "\" r=\"2.4\" fill=\"black\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string to_json(const Table& t, const std::string& meta_json) {
    std::ostringstream os;
    os << "{\n  \"meta\": " << meta_json << ",\n  \"columns\": [";
    for (size_t i = 0; i < t.header.size(); ++i)
        os << (i ? "," : "") << '"' << t.header[i] << '"';
    os << "],\n  \"rows\": [\n";
    for (size_t r = 0; r < t.rows.size(); ++r) {
        os << "    [";
        for (size_t i = 0; i < t.rows[r].size(); ++i) {
            const std::string& c = t.rows[r][i];
            bool numeric = !c.empty() && (std::isdigit(c[0]) || c[0] == '-' ||
                                          c[0] == '+' || c[0] == '.');
            os << (i ? "," : "");
            if (numeric)
                os << c;
            else
                os << '"' << c << '"';
        }
        os << (r + 1 < t.rows.size() ? "],\n" : "]\n");
    }
    os << "  ]\n}\n";
    return os.str();
}

} // namespace orbita::io
