#pragma once

#include <string>
#include <vector>

#include "orbita/bands.hpp"
#include "orbita/quantize.hpp"
#include "orbita/weights.hpp"

namespace orbita::io {

/// Format a double with 17 significant digits, '.' decimal point.
std::string num(double v);

/// One emitted table: header + rows of formatted cells.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_csv() const; // LF endings, UTF-8
};

struct SpectrumFile {
    Table states;      // L,k,ku,Q,V,band
    Table band_lines;  // band,L,Q (catalog curves on a fine grid)
    std::vector<std::string> gap_notes; // per-polyline spacing annotations
};

/// Band tag of a spectrum row: the bottom row follows the lower equilibrium
/// family (axial for L <= lambda, else p-minus), the top row the upper one;
/// sequence members are tagged "Pi".
std::string spectrum_band_tag(const WeightVector& w, const quantize::SpectrumRow& row,
                              long d_of_l, const quantize::SpectrumTable& table);

SpectrumFile make_spectrum_file(const WeightVector& w,
                                const quantize::SpectrumTable& table,
                                int curve_samples = 129);

/// Band table over an L grid: band,L,p,Q,P1,P2,P3,beta,Gamma,x,y,E,stability.
Table make_band_table(const WeightVector& w, const orbit::BandCatalog& cat,
                      int l_steps);

/// Minimal standalone SVG with the shape-plane band curves and arrows.
std::string bands_svg(const WeightVector& w, const orbit::BandCatalog& cat,
                      int l_steps);
/// SVG of the quantized (L,Q) spectrum with the band polylines.
std::string spectrum_svg(const WeightVector& w, const quantize::SpectrumTable& table);

/// Meta + rows JSON document (schema: {"meta": {...}, "rows": [[...], ...]}).
std::string to_json(const Table& t, const std::string& meta_json);

/// Parse a CSV produced by Table::to_csv back into cells.
Table parse_csv(const std::string& text);

/// Write text to a file (LF endings preserved).
void write_file(const std::string& path, const std::string& text);

} // namespace orbita::io
