#include "jointspec/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "jointspec/errors.hpp"

namespace jointspec {
namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const std::string& where) {
    const std::string t = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
        throw ParseError(where + ": cannot parse number '" + t + "'");
    return value;
}

std::string fixed3(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

std::string short_label(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", std::abs(x) < 1e-12 ? 0.0 : x);
    return buf;
}

nlohmann::json rational_pair(const RationalPoint& p, int dim) {
    auto to_d = [](const Rational& r) {
        return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
    };
    if (dim == 1) return nlohmann::json::array({to_d(p.x)});
    return nlohmann::json::array({to_d(p.x), to_d(p.y)});
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_spectrum_csv(std::ostream& os, const JointSpectrum& js) {
    os << "hbar";
    for (int i = 1; i <= js.dim; ++i) os << ",lambda" << i;
    os << ",multiplicity\n";
    for (const auto& p : js.points) {
        os << format_double(js.param.hbar);
        for (const double c : p.coords) os << ',' << format_double(c);
        os << ',' << p.multiplicity << '\n';
    }
}

JointSpectrum read_spectrum_csv(std::istream& is, const std::string& source) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError(source + ": empty file");
    const auto header = split_csv(trim(line));
    const std::size_t columns = header.size();
    if (columns < 3 || columns > 4 || trim(header.front()) != "hbar" ||
        trim(header.back()) != "multiplicity")
        throw ParseError(source + ":1: expected header hbar,lambda1[,lambda2],multiplicity");
    const int d = static_cast<int>(columns) - 2;
    for (int i = 0; i < d; ++i)
        if (trim(header[static_cast<std::size_t>(i) + 1]) != "lambda" + std::to_string(i + 1))
            throw ParseError(source + ":1: unexpected column name '" + header[i + 1] + "'");

    std::map<std::vector<double>, int> merged;
    std::optional<double> hbar;
    long line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const std::string where = source + ":" + std::to_string(line_no);
        const auto cells = split_csv(trim(line));
        if (cells.size() != columns)
            throw ParseError(where + ": expected " + std::to_string(columns) + " columns, got " +
                             std::to_string(cells.size()));
        const double h = parse_double(cells[0], where);
        if (hbar && *hbar != h) throw ParseError(where + ": rows with different hbar in one spectrum");
        hbar = h;
        std::vector<double> coords;
        for (int i = 0; i < d; ++i) coords.push_back(parse_double(cells[i + 1], where));
        const double mult = parse_double(cells.back(), where);
        if (mult < 1.0 || mult != std::floor(mult))
            throw ParseError(where + ": multiplicity must be a positive integer");
        merged[coords] += static_cast<int>(mult);
    }
    // A header-only file is an empty spectrum; its hbar is unknown and left at the default.
    JointSpectrum js{hbar ? SemiclassicalParam::from_hbar(*hbar) : SemiclassicalParam{}, d, {}, 0.0};
    for (auto& [coords, mult] : merged) js.points.push_back({coords, mult});
    js.sort_points();
    return js;
}

JointSpectrum read_spectrum_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return read_spectrum_csv(in, path);
}

void write_samples_csv(std::ostream& os, const PointCloud& samples) {
    for (Eigen::Index c = 0; c < samples.cols(); ++c) os << (c ? "," : "") << 'f' << c + 1;
    os << '\n';
    for (Eigen::Index r = 0; r < samples.rows(); ++r) {
        for (Eigen::Index c = 0; c < samples.cols(); ++c)
            os << (c ? "," : "") << format_double(samples(r, c));
        os << '\n';
    }
}

void write_convergence_csv(std::ostream& os, const ConvergenceStudy& study) {
    os << "k,hbar,hausdorff\n";
    for (const auto& r : study.rows)
        os << r.k << ',' << format_double(r.hbar) << ',' << format_double(r.distance) << '\n';
    os << "# alpha=" << format_double(study.exponent)
       << ",intercept=" << format_double(study.intercept) << '\n';
}

nlohmann::json hull_json(const Hull& hull) {
    nlohmann::json j;
    if (const auto* iv = std::get_if<Interval>(&hull)) {
        j["dim"] = 1;
        j["vertices"] = {{iv->lo}, {iv->hi}};
        return j;
    }
    const auto& poly = std::get<ConvexPolygon>(hull);
    j["dim"] = 2;
    j["degenerate"] = poly.degenerate;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : poly.vertices) j["vertices"].push_back({v.x, v.y});
    return j;
}

nlohmann::json polytope_json(const Polytope& polytope, const DelzantReport& delzant) {
    nlohmann::json j;
    j["dim"] = polytope.dim;
    j["vertices"] = nlohmann::json::array();
    j["vertices_exact"] = nlohmann::json::array();
    for (const auto& v : polytope.vertices) {
        j["vertices"].push_back(rational_pair(v, polytope.dim));
        if (polytope.dim == 1)
            j["vertices_exact"].push_back({to_string(v.x)});
        else
            j["vertices_exact"].push_back({to_string(v.x), to_string(v.y)});
    }
    j["edge_normals"] = nlohmann::json::array();
    for (const auto& n : polytope.edge_normals) {
        if (polytope.dim == 1)
            j["edge_normals"].push_back({n.x});
        else
            j["edge_normals"].push_back({n.x, n.y});
    }
    j["delzant"] = delzant.delzant;
    j["certificates"] = nlohmann::json::array();
    for (const auto& c : delzant.certificates)
        j["certificates"].push_back({{"vertex", rational_pair(c.vertex, 2)},
                                     {"edge_out", {c.edge_out.x, c.edge_out.y}},
                                     {"edge_in", {c.edge_in.x, c.edge_in.y}},
                                     {"determinant", c.determinant}});
    j["residuals"] = nlohmann::json::object();
    return j;
}

nlohmann::json polytope_json(const RecoveryReport& report) {
    nlohmann::json j = polytope_json(report.recovered, report.delzant);
    auto& r = j["residuals"];
    r["extrapolation"] = report.extrapolation.residual;
    r["extrapolation_fit"] = report.extrapolation.fit_residual;
    r["rounding_tolerance"] = report.rounding_tolerance;
    r["rounding_max_delta"] = report.rounding.max();
    r["rounding_vertex_deltas"] = report.rounding.vertex;
    r["lattice"] = nlohmann::json::array();
    for (const auto& fit : report.lattice_fits)
        r["lattice"].push_back({{"k", fit.k},
                                {"origin", fit.origin},
                                {"spacing", fit.spacing},
                                {"residual", fit.residual}});
    r["hbar"] = nlohmann::json::array();
    for (const auto& h : report.hulls) r["hbar"].push_back(h.hbar);
    return j;
}

std::string render_spectrum_svg(const JointSpectrum& js) {
    constexpr double width = 640.0, height = 480.0;
    constexpr double left = 70.0, right = 20.0, top = 30.0, bottom = 50.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    const bool strip = js.dim == 1;

    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    if (!js.points.empty()) {
        xmin = xmax = js.points.front().coords[0];
        ymin = ymax = strip ? 0.0 : js.points.front().coords[1];
        for (const auto& p : js.points) {
            xmin = std::min(xmin, p.coords[0]);
            xmax = std::max(xmax, p.coords[0]);
            if (!strip) {
                ymin = std::min(ymin, p.coords[1]);
                ymax = std::max(ymax, p.coords[1]);
            }
        }
    }
    auto pad = [](double& lo, double& hi) {
        const double span = hi - lo;
        const double margin = span > 0.0 ? 0.05 * span : 0.5;
        lo -= margin;
        hi += margin;
    };
    pad(xmin, xmax);
    if (strip) {
        ymin = -1.0;
        ymax = 1.0;
    } else {
        pad(ymin, ymax);
    }
    auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * plot_w; };
    auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * plot_h; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
       << "\" fill=\"white\"/>\n"
       << "<text x=\"" << fixed3(width / 2) << "\" y=\"18\" text-anchor=\"middle\" "
       << "font-family=\"sans-serif\" font-size=\"13\">joint spectrum, "
       << (js.points.empty() ? std::string("empty") : "hbar = " + short_label(js.param.hbar))
       << "</text>\n";

    // Axes with five ticks each.
    os << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
       << "<line x1=\"" << fixed3(left) << "\" y1=\"" << fixed3(top + plot_h) << "\" x2=\""
       << fixed3(left + plot_w) << "\" y2=\"" << fixed3(top + plot_h) << "\"/>\n";
    if (!strip)
        os << "<line x1=\"" << fixed3(left) << "\" y1=\"" << fixed3(top) << "\" x2=\""
           << fixed3(left) << "\" y2=\"" << fixed3(top + plot_h) << "\"/>\n";
    os << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 4.0;
        os << "<text class=\"tick\" x=\"" << fixed3(px(xv)) << "\" y=\"" << fixed3(top + plot_h + 18)
           << "\" text-anchor=\"middle\">" << short_label(xv) << "</text>\n";
        if (!strip) {
            const double yv = ymin + (ymax - ymin) * i / 4.0;
            os << "<text class=\"tick\" x=\"" << fixed3(left - 6) << "\" y=\"" << fixed3(py(yv) + 4)
               << "\" text-anchor=\"end\">" << short_label(yv) << "</text>\n";
        }
    }
    os << "<text x=\"" << fixed3(left + plot_w / 2) << "\" y=\"" << fixed3(height - 10)
       << "\" text-anchor=\"middle\">lambda1</text>\n";
    if (!strip)
        os << "<text x=\"16\" y=\"" << fixed3(top + plot_h / 2) << "\" text-anchor=\"middle\" "
           << "transform=\"rotate(-90 16 " << fixed3(top + plot_h / 2) << ")\">lambda2</text>\n";
    os << "</g>\n<g fill=\"#1f4e9c\" stroke=\"none\">\n";
    for (const auto& p : js.points) {
        const double r = 2.5 * std::sqrt(static_cast<double>(p.multiplicity));
        os << "<circle cx=\"" << fixed3(px(p.coords[0])) << "\" cy=\""
           << fixed3(strip ? py(0.0) : py(p.coords[1])) << "\" r=\"" << fixed3(r) << "\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace jointspec
