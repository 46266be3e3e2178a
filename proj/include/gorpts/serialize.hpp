#ifndef GORPTS_SERIALIZE_HPP
#define GORPTS_SERIALIZE_HPP

#include "gorpts/construction.hpp"
#include "gorpts/errors.hpp"
#include "gorpts/gorenstein.hpp"
#include "gorpts/verify.hpp"

#include <json.hpp>

#include <cctype>
#include <istream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace gorpts {

using json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::string> point_strings(const ProjPoint& p) {
    std::vector<std::string> out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out.push_back(p[i].str());
    return out;
}

} // namespace detail

inline json config_to_json(const LineConfig& cfg) {
    json j;
    std::vector<std::string> ratios;
    for (const auto& a : cfg.points) ratios.push_back(a[0].str() + "/" + a[1].str());
    j["A"] = ratios;
    j["Ia"] = cfg.ia.values();
    j["Ib"] = cfg.ib.values();
    return j;
}

/// Canonical integer coordinates as decimal strings; "verified" present
/// only when verification ran.
inline json gorenstein_to_json(const GorensteinResult& gr, const LineConfig& cfg,
                               std::optional<bool> verified) {
    json j;
    j["h_vector"] = gr.h;
    j["config"] = config_to_json(cfg);
    json pts = json::array();
    for (const auto& p : gr.points) pts.push_back(detail::point_strings(p));
    j["points"] = pts;
    j["labels"] = gr.labels;
    if (verified) j["verified"] = *verified;
    return j;
}

/// Header row, 4 integer columns, quoted label column.
inline std::string points_to_csv(const GorensteinResult& gr) {
    std::ostringstream os;
    os << "x0,x1,x2,x3,label\n";
    for (std::size_t i = 0; i < gr.points.size(); ++i) {
        const auto& p = gr.points[i];
        for (std::size_t c = 0; c < 4; ++c) os << p[c].str() << ',';
        os << '"' << gr.labels[i] << "\"\n";
    }
    return os.str();
}

inline std::vector<ProjPoint> points_from_json(const json& j) {
    if (!j.contains("points") || !j["points"].is_array())
        throw validation_error("point file: missing \"points\" array");
    std::vector<ProjPoint> pts;
    for (const auto& row : j["points"]) {
        std::vector<Rational> c;
        for (const auto& x : row) {
            if (x.is_string())
                c.push_back(Rational::parse(x.get<std::string>()));
            else if (x.is_number_integer())
                c.push_back(Rational(x.get<long long>()));
            else
                throw validation_error("point file: coordinate is neither string nor integer");
        }
        pts.emplace_back(std::move(c));
    }
    return pts;
}

inline std::vector<ProjPoint> points_from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("x0", 0) != 0)
        throw validation_error("point file: missing CSV header row");
    std::vector<ProjPoint> pts;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<Rational> c;
        std::size_t pos = 0;
        for (int field = 0; field < 4; ++field) {
            const std::size_t comma = line.find(',', pos);
            const std::string tok = line.substr(pos, comma == std::string::npos
                                                         ? std::string::npos
                                                         : comma - pos);
            c.push_back(Rational::parse(tok));
            if (comma == std::string::npos) {
                if (field != 3) throw validation_error("point file: row with fewer than 4 columns");
                pos = line.size();
            } else {
                pos = comma + 1;
            }
        }
        pts.emplace_back(std::move(c)); // label column, if any, is ignored
    }
    return pts;
}

/// Accepts the JSON emitted by the point commands or the CSV format;
/// detected by the leading character.
inline std::vector<ProjPoint> parse_points(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) throw validation_error("point file: empty");
    if (text[i] == '{') {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded()) throw validation_error("point file: malformed JSON");
        return points_from_json(j);
    }
    std::istringstream csv(text.substr(i));
    return points_from_csv(csv);
}

inline json form_to_json(const LinearForm& f) {
    json out = json::array();
    for (std::size_t i = 0; i < f.size(); ++i) out.push_back(f[i].str());
    return out;
}

inline json stick_to_json(const StickFigure& sf, const StickCheckReport& rep) {
    json j;
    j["config"] = config_to_json(sf.config());
    j["rows"] = sf.row_values();
    j["cols"] = sf.col_values();

    json lines = json::array();
    for (int i = 0; i < sf.rows(); ++i)
        for (int jj = 0; jj < sf.cols(); ++jj) {
            json l;
            l["i"] = sf.row_values()[i];
            l["j"] = sf.col_values()[jj];
            l["forms"] = json::array({form_to_json(sf.line(i, jj).form_a()),
                                      form_to_json(sf.line(i, jj).form_b())});
            lines.push_back(l);
        }
    j["lines"] = lines;

    json inter = json::array();
    const auto& u = sf.row_values();
    const auto& v = sf.col_values();
    for (int i = 0; i < sf.rows(); ++i)
        for (int jj = 0; jj < sf.cols(); ++jj)
            for (int l = jj + 1; l < sf.cols(); ++l) {
                auto pt = intersect_lines(sf, {u[i], v[jj]}, {u[i], v[l]});
                json e;
                e["lines"] = json::array({json::array({u[i], v[jj]}), json::array({u[i], v[l]})});
                e["point"] = detail::point_strings(*pt);
                inter.push_back(e);
            }
    for (int jj = 0; jj < sf.cols(); ++jj)
        for (int i = 0; i < sf.rows(); ++i)
            for (int k = i + 1; k < sf.rows(); ++k) {
                auto pt = intersect_lines(sf, {u[i], v[jj]}, {u[k], v[jj]});
                json e;
                e["lines"] = json::array({json::array({u[i], v[jj]}), json::array({u[k], v[jj]})});
                e["point"] = detail::point_strings(*pt);
                inter.push_back(e);
            }
    j["intersections"] = inter;

    json rp = json::array(), cp = json::array();
    for (const auto& f : sf.row_planes()) rp.push_back(form_to_json(f));
    for (const auto& f : sf.col_planes()) cp.push_back(form_to_json(f));
    j["row_planes"] = rp;
    j["col_planes"] = cp;

    j["stick_figure_check"] = rep.pass ? "pass" : rep.message;
    return j;
}

} // namespace gorpts

#endif
