#include "kmodem/io.h"

#include "kmodem/errors.h"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace kmodem {

using nlohmann::json;

namespace {

json point_to_json(const Point& p) { return json::array({scalar_str(p.x), scalar_str(p.y)}); }

Point point_from_json(const json& a) {
    if (!a.is_array() || a.size() != 2) fail(Errc::BadParams, "point must be a two-element array");
    return Point{scalar_parse(a[0].get<std::string>()), scalar_parse(a[1].get<std::string>())};
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Errc::BadParams, "malformed JSON");
    return j;
}

} // namespace

Polygon read_polygon_json(const std::string& text) {
    json j = parse(text);
    PolygonClass cls = PolygonClass::Unclassified;
    if (j.contains("class")) {
        std::string c = j["class"].get<std::string>();
        if (c == "monotone") cls = PolygonClass::Monotone;
        else if (c == "orthogonal") cls = PolygonClass::MonotoneOrthogonal;
        else fail(Errc::BadParams, "unknown polygon class '" + c + "'");
    }
    if (!j.contains("vertices")) fail(Errc::BadParams, "polygon file lacks vertices");
    std::vector<Point> verts;
    for (const auto& v : j["vertices"]) verts.push_back(point_from_json(v));
    return Polygon(std::move(verts), cls);
}

std::string write_polygon_json(const Polygon& p) {
    json j;
    j["class"] = p.orthogonal_shape() ? "orthogonal" : "monotone";
    json vs = json::array();
    for (const Point& v : p.vertices()) vs.push_back(point_to_json(v));
    j["vertices"] = vs;
    return j.dump(2) + "\n";
}

ModemPlan read_plan_json(const std::string& text) {
    json j = parse(text);
    ModemPlan plan;
    plan.k = j.at("k").get<int>();
    for (const auto& m : j.at("modems")) {
        Modem md;
        md.position = point_from_json(m.at("pos"));
        md.k = plan.k;
        if (m.contains("note")) md.note = m["note"].get<std::string>();
        plan.modems.push_back(std::move(md));
    }
    return plan;
}

std::string write_plan_json(const ModemPlan& plan) {
    json j;
    j["k"] = plan.k;
    json ms = json::array();
    for (const Modem& m : plan.modems) ms.push_back(json{{"pos", point_to_json(m.position)}, {"note", m.note}});
    j["modems"] = ms;
    return j.dump(2) + "\n";
}

FamilySidecar read_witnesses_json(const std::string& text) {
    json j = parse(text);
    FamilySidecar s;
    s.family = j.at("family").get<std::string>();
    s.k = j.at("k").get<int>();
    s.t = j.at("t").get<int>();
    for (const auto& w : j.at("witnesses")) s.witnesses.push_back(point_from_json(w));
    return s;
}

std::string write_witnesses_json(const InstanceFamily& fam) {
    json j;
    switch (fam.family) {
        case FamilyKind::MonotoneSpikes: j["family"] = "spikes"; break;
        case FamilyKind::OrthoCorridors: j["family"] = "corridors"; break;
        case FamilyKind::OrthoBoxesK1: j["family"] = "boxes-k1"; break;
    }
    j["k"] = fam.k;
    j["t"] = fam.t;
    json ws = json::array();
    for (const Point& w : fam.witnesses) ws.push_back(point_to_json(w));
    j["witnesses"] = ws;
    return j.dump(2) + "\n";
}

std::string write_certificate_json(const CoverageCertificate& cert) {
    json j;
    j["verdict"] = cert.covered ? "covered" : "uncovered";
    if (cert.witness) j["witness"] = point_to_json(*cert.witness);
    j["cells_checked"] = cert.cells_checked;
    j["per_modem_max_crossings"] = cert.per_modem_max;
    return j.dump(2) + "\n";
}

std::string render_svg(const Polygon& p, const std::vector<Modem>& modems,
                       const std::vector<Point>& witnesses, const RenderOptions& opt) {
    double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
    for (const Point& v : p.vertices()) {
        minx = std::min(minx, to_double(v.x));
        maxx = std::max(maxx, to_double(v.x));
        miny = std::min(miny, to_double(v.y));
        maxy = std::max(maxy, to_double(v.y));
    }
    double pad = 1.0;
    double s = opt.scale;
    auto X = [&](const Scalar& x) { return (to_double(x) - minx + pad) * s; };
    auto Y = [&](const Scalar& y) { return (maxy - to_double(y) + pad) * s; };
    double w = (maxx - minx + 2 * pad) * s, h = (maxy - miny + 2 * pad) * s;

    std::ostringstream out;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h << "' viewBox='0 0 "
        << w << " " << h << "'>\n";
    out << "<polygon points='";
    for (const Point& v : p.vertices()) out << X(v.x) << "," << Y(v.y) << " ";
    out << "' fill='#eef3f7' stroke='#223' stroke-width='" << opt.stroke << "'/>\n";
    for (const Modem& m : modems) {
        out << "<circle cx='" << X(m.position.x) << "' cy='" << Y(m.position.y) << "' r='" << 0.3 * s
            << "' fill='#c22' ><title>" << m.note << "</title></circle>\n";
    }
    for (const Point& wpt : witnesses) {
        double r = 0.22 * s;
        out << "<rect x='" << X(wpt.x) - r << "' y='" << Y(wpt.y) - r << "' width='" << 2 * r << "' height='"
            << 2 * r << "' fill='#282' />\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::BadParams, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spew_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Errc::BadParams, "cannot write '" + path + "'");
    out << content;
}

} // namespace kmodem
