#include "qc/export.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace qc {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

}  // namespace

std::string coords_to_text(const Coords& c) {
    std::string s;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) s += ";";
        s += c[k].str();
    }
    return s;
}

Coords coords_from_text(const std::string& s) {
    Coords c;
    for (const auto& part : split(s, ';')) {
        auto g = GoldenInt::parse(part);
        if (!g) throw std::invalid_argument("bad coordinate text: " + part);
        c.push_back(*g);
    }
    return c;
}

std::string points_to_csv(const Scheme& s, const std::vector<QcPoint>& pts) {
    std::ostringstream out;
    out << "scheme," << s.name << "\n";
    for (int k = 0; k < s.pairs; ++k) out << "coord_" << k << ",";
    for (int k = 0; k < s.phys_dim; ++k) out << "phys_" << k << ",";
    for (int k = 0; k < s.inner_dim; ++k) out << "star_" << k << ",";
    for (int k = 0; k < s.phys_dim; ++k)
        out << "approx_phys_" << k << (k + 1 < s.phys_dim ? "," : "");
    out << "\n";
    for (const auto& p : pts) {
        for (int k = 0; k < s.pairs; ++k) out << p.coords[k].str() << ",";
        VecR phys = s.phys_of(p.coords);
        for (int k = 0; k < s.phys_dim; ++k) out << phys[k].str() << ",";
        for (int k = 0; k < s.inner_dim; ++k) out << p.star[k].str() << ",";
        for (int k = 0; k < s.phys_dim; ++k)
            out << fmt_double(phys[k].approx()) << (k + 1 < s.phys_dim ? "," : "");
        out << "\n";
    }
    return out.str();
}

std::vector<QcPoint> points_from_csv(const Scheme& s, const std::string& text) {
    std::vector<QcPoint> pts;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        if (line.empty() || lineno <= 2) continue;  // banner + header
        auto cells = split(line, ',');
        if (static_cast<int>(cells.size()) < s.pairs)
            throw std::invalid_argument("csv: truncated row");
        Coords c(s.pairs);
        for (int k = 0; k < s.pairs; ++k) {
            auto g = GoldenInt::parse(cells[k]);
            if (!g) throw std::invalid_argument("csv: bad coordinate " + cells[k]);
            c[k] = *g;
        }
        pts.push_back(s.make_point(c));
    }
    return pts;
}

std::string points_to_json(const Scheme& s, const std::vector<QcPoint>& pts) {
    nlohmann::json j;
    j["schema"] = "qc.points/1";
    j["scheme"] = s.name;
    j["count"] = pts.size();
    j["points"] = nlohmann::json::array();
    for (const auto& p : pts) {
        nlohmann::json jp;
        for (int k = 0; k < s.pairs; ++k) jp["coords"].push_back(p.coords[k].str());
        VecR phys = s.phys_of(p.coords);
        for (int k = 0; k < s.phys_dim; ++k) {
            jp["phys"].push_back(phys[k].str());
            jp["approx_phys"].push_back(phys[k].approx());
        }
        for (int k = 0; k < s.inner_dim; ++k) jp["star"].push_back(p.star[k].str());
        j["points"].push_back(std::move(jp));
    }
    return j.dump(1);
}

std::vector<QcPoint> points_from_json(const Scheme& s, const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("points JSON: parse error");
    if (j.value("schema", "") != "qc.points/1")
        throw std::invalid_argument("points JSON: unknown schema");
    std::vector<QcPoint> pts;
    for (const auto& jp : j.at("points")) {
        Coords c;
        for (const auto& cs : jp.at("coords")) {
            auto g = GoldenInt::parse(cs.get<std::string>());
            if (!g) throw std::invalid_argument("points JSON: bad coordinate");
            c.push_back(*g);
        }
        pts.push_back(s.make_point(c));
    }
    return pts;
}

std::string points_to_svg(const Scheme& s, const std::vector<QcPoint>& pts) {
    if (s.phys_dim > 2) throw std::invalid_argument("svg export needs a 1D or 2D scheme");
    double sin72 = std::sqrt(GoldenRat(Rat(5, 8), Rat(1, 8)).approx());
    std::vector<std::pair<double, double>> xy;
    double max_abs = 1.0;
    for (const auto& p : pts) {
        VecR phys = s.phys_of(p.coords);
        double x = phys[0].approx();
        double y = s.phys_dim == 2 ? phys[1].approx() : 0.0;
        if (s.kind == SchemeKind::penrose) y *= sin72;
        xy.emplace_back(x, y);
        max_abs = std::max({max_abs, std::fabs(x), std::fabs(y)});
    }
    double scale = 480.0 / max_abs;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
           "viewBox=\"0 0 1000 1000\">\n"
        << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
    for (auto [x, y] : xy)
        out << "<circle cx=\"" << fmt_double(500 + scale * x) << "\" cy=\""
            << fmt_double(500 - scale * y) << "\" r=\"3\" fill=\"black\"/>\n";
    out << "</svg>\n";
    return out.str();
}

std::string points_to_obj(const Scheme& s, const std::vector<QcPoint>& pts) {
    if (s.phys_dim != 3) throw std::invalid_argument("obj export needs a 3D scheme");
    std::ostringstream out;
    out << "# " << pts.size() << " vertices\n";
    for (const auto& p : pts) {
        VecR phys = s.phys_of(p.coords);
        out << "v " << fmt_double(phys[0].approx()) << " " << fmt_double(phys[1].approx()) << " "
            << fmt_double(phys[2].approx()) << "\n";
    }
    return out.str();
}

std::string generator_label(const Scheme& s, const Coords& c) {
    if (s.kind == SchemeKind::fibonacci) {
        auto idx = fibonacci_index(c[0]);
        if (idx) return "L" + std::to_string(*idx);
    }
    std::string lbl = "L(";
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) lbl += ",";
        lbl += c[k].a().get_str() + "," + c[k].b().get_str();
    }
    return lbl + ")";
}

JordanTable make_jordan_table(const Scheme& s, const std::vector<Coords>& rows,
                              const std::vector<Coords>& cols) {
    JordanTable t;
    t.rows = rows;
    t.cols = cols;
    for (const auto& r : rows) t.row_labels.push_back(generator_label(s, r));
    for (const auto& c : cols) t.col_labels.push_back(generator_label(s, c));
    for (const auto& r : rows) {
        AlgebraElement lr = AlgebraElement::generator(s.make_point(r));
        t.cells.emplace_back();
        for (const auto& c : cols) {
            AlgebraElement prod =
                jordan_product(s, lr, AlgebraElement::generator(s.make_point(c)));
            std::vector<std::pair<std::string, Rat>> cell;
            for (const auto& [x, coeff] : prod.terms())
                cell.emplace_back(generator_label(s, x), coeff);
            t.cells.back().push_back(std::move(cell));
        }
    }
    return t;
}

namespace {

std::string cell_text(const std::vector<std::pair<std::string, Rat>>& cell) {
    if (cell.empty()) return "0";
    if (cell.size() == 1 && cell[0].second == 1) return cell[0].first;
    // common 1/2 coefficients render in the compact split form
    bool halves = cell.size() == 2 && cell[0].second == Rat(1, 2) && cell[1].second == Rat(1, 2);
    if (halves) return "1/2(" + cell[0].first + "+" + cell[1].first + ")";
    std::string s;
    for (const auto& [lbl, c] : cell) {
        if (!s.empty()) s += "+";
        s += c.get_str() + "*" + lbl;
    }
    return s;
}

}  // namespace

std::string jordan_table_markdown(const JordanTable& t) {
    std::ostringstream out;
    out << "| o |";
    for (const auto& c : t.col_labels) out << " " << c << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < t.col_labels.size(); ++i) out << "---|";
    out << "\n";
    for (std::size_t i = 0; i < t.row_labels.size(); ++i) {
        out << "| " << t.row_labels[i] << " |";
        for (const auto& cell : t.cells[i]) out << " " << cell_text(cell) << " |";
        out << "\n";
    }
    return out.str();
}

std::string jordan_table_csv(const JordanTable& t) {
    std::ostringstream out;
    out << "o";
    for (const auto& c : t.col_labels) out << "," << c;
    out << "\n";
    for (std::size_t i = 0; i < t.row_labels.size(); ++i) {
        out << t.row_labels[i];
        for (const auto& cell : t.cells[i]) out << "," << cell_text(cell);
        out << "\n";
    }
    return out.str();
}

std::string jordan_table_json(const JordanTable& t) {
    nlohmann::json j;
    j["schema"] = "qc.jordan-table/1";
    j["rows"] = t.row_labels;
    j["cols"] = t.col_labels;
    j["cells"] = nlohmann::json::array();
    for (const auto& row : t.cells) {
        nlohmann::json jr = nlohmann::json::array();
        for (const auto& cell : row) {
            nlohmann::json jc = nlohmann::json::array();
            for (const auto& [lbl, c] : cell) jc.push_back({{"label", lbl}, {"coeff", c.get_str()}});
            jr.push_back(std::move(jc));
        }
        j["cells"].push_back(std::move(jr));
    }
    return j.dump(1);
}

std::string group_table_to_json(const IcosianGroupTable& t) {
    nlohmann::json j;
    j["schema"] = "qc.icosian-group/1";
    j["order"] = t.elements.size();
    j["elements"] = nlohmann::json::array();
    for (std::size_t i = 0; i < t.elements.size(); ++i) {
        nlohmann::json je;
        je["index"] = i;
        GoldenRat half(Rat(1, 2));
        for (int k = 0; k < 4; ++k)
            je["components"].push_back((t.elements[i].doubled(k).to_rat() * half).str());
        je["a5"] = t.a5_image[i].cycles();
        j["elements"].push_back(std::move(je));
    }
    j["product_index"] = t.product_index;
    return j.dump(1);
}

std::string roots_to_csv(const RootSystem& rs) {
    std::ostringstream out;
    out << "system," << rs.name << "\n";
    for (int k = 0; k < rs.ambient_dim; ++k)
        out << "x_" << k << (k + 1 < rs.ambient_dim ? "," : "\n");
    for (const auto& r : rs.roots) {
        for (int k = 0; k < rs.ambient_dim; ++k)
            out << r[k].str() << (k + 1 < rs.ambient_dim ? "," : "\n");
    }
    return out.str();
}

}  // namespace qc
