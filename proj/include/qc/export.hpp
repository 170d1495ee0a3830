#pragma once

#include <string>
#include <vector>

#include "qc/algebra.hpp"
#include "qc/icosian.hpp"
#include "qc/roots.hpp"
#include "qc/scheme.hpp"

namespace qc {

std::string coords_to_text(const Coords& c);
Coords coords_from_text(const std::string& s);

/// Exact-first point-set formats; float columns are convenience only.
std::string points_to_csv(const Scheme& s, const std::vector<QcPoint>& pts);
std::vector<QcPoint> points_from_csv(const Scheme& s, const std::string& text);
std::string points_to_json(const Scheme& s, const std::vector<QcPoint>& pts);
std::vector<QcPoint> points_from_json(const Scheme& s, const std::string& text);

/// Rendering-only views (1e-12 float precision): SVG for 1- and 2-dimensional
/// physical spaces, OBJ vertices for 3-dimensional ones.
std::string points_to_svg(const Scheme& s, const std::vector<QcPoint>& pts);
std::string points_to_obj(const Scheme& s, const std::vector<QcPoint>& pts);

/// Multiplication table of generators; labels are integral chain indices for
/// the fibonacci schemes and coordinate tuples otherwise.
struct JordanTable {
    std::vector<Coords> rows, cols;
    std::vector<std::string> row_labels, col_labels;
    // cell[i][j] = list of (label, coefficient)
    std::vector<std::vector<std::vector<std::pair<std::string, Rat>>>> cells;
};
JordanTable make_jordan_table(const Scheme& s, const std::vector<Coords>& rows,
                              const std::vector<Coords>& cols);
std::string jordan_table_markdown(const JordanTable& t);
std::string jordan_table_csv(const JordanTable& t);
std::string jordan_table_json(const JordanTable& t);

std::string group_table_to_json(const IcosianGroupTable& t);
std::string roots_to_csv(const RootSystem& rs);

std::string generator_label(const Scheme& s, const Coords& c);

}  // namespace qc
