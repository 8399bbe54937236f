#include "nok/io.hpp"

namespace nok {

using nlohmann::json;

json rat_to_json(const Rat& x) { return x.str(); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat((long)j.get<long long>());
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    throw std::invalid_argument("rational: expected \"p/q\" string or integer");
}

json qvec_to_json(const QVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_to_json(x));
    return a;
}

QVec qvec_from_json(const json& j) {
    QVec v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

json valvector_to_json(const ValVector& v) {
    return json{{"a", v.p}, {"b", v.q}};
}

ValVector valvector_from_json(const json& j) {
    return ValVector{j.at("a").get<std::vector<long>>(), j.at("b").get<std::vector<long>>()};
}

json polygon_to_json(const NewtonPolygon& P) {
    auto pieces = [](const std::vector<BoundaryPiece>& ps) {
        json a = json::array();
        for (const auto& p : ps) a.push_back({rat_to_json(p.slope), rat_to_json(p.intercept)});
        return a;
    };
    return json{{"c", rat_to_json(P.cap())},
                {"lower", pieces(P.lower_pieces())},
                {"upper", pieces(P.upper_pieces())}};
}

NewtonPolygon polygon_from_json(const json& j) {
    auto pieces = [](const json& a) {
        std::vector<BoundaryPiece> ps;
        for (const auto& p : a) ps.push_back({rat_from_json(p.at(0)), rat_from_json(p.at(1))});
        return ps;
    };
    return NewtonPolygon(rat_from_json(j.at("c")), pieces(j.at("lower")), pieces(j.at("upper")));
}

json hpoly_to_json(const HPolyhedron& H) {
    json rows = json::array();
    for (const auto& r : H.rows)
        rows.push_back({{"normal", qvec_to_json(r.normal)}, {"offset", rat_to_json(r.offset)}});
    return json{{"dim", H.dim}, {"rows", rows}};
}

json vpoly_to_json(const VPolytope& V) {
    json verts = json::array(), rays = json::array();
    for (const auto& v : V.vertices) verts.push_back(qvec_to_json(v));
    for (const auto& r : V.rays) rays.push_back(qvec_to_json(r));
    return json{{"dim", V.dim}, {"vertices", verts}, {"rays", rays}};
}

}  // namespace nok
