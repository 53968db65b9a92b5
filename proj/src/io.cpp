#include "ucox/io.hpp"

#include <sstream>
#include <stdexcept>

namespace ucox {

json aut_to_json(const Automorphism& f) {
    json j;
    j["rank"] = f.rank();
    json moves = json::array();
    for (auto& m : f.moves()) {
        if (auto* pc = std::get_if<PartialConj>(&m))
            moves.push_back({{"kind", "pc"}, {"set", pc->set}, {"i", pc->i}});
        else {
            auto& s = std::get<Swap>(m);
            moves.push_back({{"kind", "swap"}, {"i", s.i}, {"j", s.j}});
        }
    }
    j["moves"] = moves;
    json images = json::array();
    for (auto& w : f.images()) images.push_back(w.str());
    j["images"] = images;
    return j;
}

Automorphism aut_from_json(const json& j) {
    int n = j.at("rank").get<int>();
    std::vector<GeneratorMove> moves;
    for (auto& m : j.at("moves")) {
        std::string kind = m.at("kind").get<std::string>();
        if (kind == "pc")
            moves.push_back(PartialConj{m.at("set").get<std::vector<int>>(), m.at("i").get<int>()});
        else if (kind == "swap")
            moves.push_back(Swap{m.at("i").get<int>(), m.at("j").get<int>()});
        else
            throw std::invalid_argument("unknown move kind '" + kind + "'");
    }
    Automorphism f = Automorphism::from_moves(n, std::move(moves));
    if (j.contains("images")) {
        const auto& imgs = j.at("images");
        if (static_cast<int>(imgs.size()) != n) throw std::invalid_argument("image count does not match rank");
        for (int i = 0; i < n; ++i)
            if (Word::parse(n, imgs[i].get<std::string>()) != f.images()[i])
                throw std::invalid_argument("image of x" + std::to_string(i + 1) + " does not match the move word");
    }
    return f;
}

json core_to_json(const CoreGraph& g) {
    json j;
    j["rank"] = g.rank();
    j["vertices"] = g.vertex_count();
    j["base"] = g.base();
    auto sig = kurosh_signature(g);
    j["signature"] = {sig.k, sig.r};
    json adj = json::object();
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int i = 1; i <= g.rank(); ++i) {
            int w = g.next(v, i);
            if (w != CoreGraph::kNone) adj[std::to_string(v) + ":" + std::to_string(i)] = std::to_string(w);
        }
    j["adjacency"] = adj;
    return j;
}

json star_to_json(const StarClass& s) {
    return {{"rank", s.rank}, {"k", s.k}, {"corank1", s.codes()}};
}

StarClass star_from_json(const json& j) {
    int n = j.at("rank").get<int>();
    std::vector<FreeFactorClass> classes;
    for (auto& c : j.at("corank1")) {
        auto cls = FreeFactorClass::from_code(c.get<std::string>());
        if (cls.code != c.get<std::string>()) throw std::invalid_argument("non-canonical code in star");
        classes.push_back(cls);
    }
    StarClass s = StarClass::of(n, classes);
    if (j.contains("k") && j.at("k").get<int>() != s.k) throw std::invalid_argument("k does not match corank-1 count");
    return s;
}

json tree_to_json(const SplittingTree& t) {
    json j;
    j["rank"] = t.rank;
    json vs = json::array();
    for (int v = 0; v < t.vertex_count(); ++v) {
        json gens = json::array();
        for (auto& w : t.vertex_groups[v]) gens.push_back(w.str());
        vs.push_back({{"id", v}, {"generators", gens}});
    }
    j["vertices"] = vs;
    json es = json::array();
    for (auto& [a, b] : t.edges) es.push_back({a, b});
    j["edges"] = es;
    return j;
}

SplittingTree tree_from_json(const json& j) {
    SplittingTree t;
    t.rank = j.at("rank").get<int>();
    for (auto& v : j.at("vertices")) {
        std::vector<Word> gens;
        for (auto& w : v.at("generators")) gens.push_back(Word::parse(t.rank, w.get<std::string>()));
        t.vertex_groups.push_back(gens);
    }
    for (auto& e : j.at("edges")) t.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return t;
}

std::string tree_to_dot(const SplittingTree& t) {
    std::ostringstream os;
    os << "graph splitting {\n";
    for (int v = 0; v < t.vertex_count(); ++v) {
        os << "  v" << v << " [label=\"";
        if (t.vertex_groups[v].empty()) os << "1";
        else os << "<" << format_word_list(t.vertex_groups[v]) << ">";
        os << "\"];\n";
    }
    for (auto& [a, b] : t.edges) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

json ball_to_json(const BallReport& b) {
    json j;
    j["kind"] = to_string(b.kind);
    j["center"] = b.center ? star_to_json(*b.center) : json();
    j["radius"] = b.radius;
    j["complexity_bound"] = b.complexity_bound;
    j["truncated"] = b.truncated;
    json vs = json::array();
    for (auto& v : b.vertices) vs.push_back(star_to_json(v));
    j["vertices"] = vs;
    json es = json::array();
    for (auto& [x, y] : b.edges) es.push_back({x, y});
    j["edges"] = es;
    return j;
}

BallReport ball_from_json(const json& j) {
    BallReport b;
    b.kind = parse_kind(j.at("kind").get<std::string>());
    if (!j.at("center").is_null()) b.center = star_from_json(j.at("center"));
    b.radius = j.at("radius").get<int>();
    b.complexity_bound = j.at("complexity_bound").get<int>();
    b.truncated = j.at("truncated").get<bool>();
    for (auto& v : j.at("vertices")) b.vertices.push_back(star_from_json(v));
    for (auto& e : j.at("edges")) b.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return b;
}

json triangle_to_json(const TriangleReport& r) {
    json j;
    j["type"] = to_string(r.type);
    j["refinement_class"] = star_to_json(r.refinement);
    if (r.fourth) j["fourth_vertex"] = star_to_json(*r.fourth);
    if (r.bounded_search) {
        j["search"] = {{"complexity_bound", r.bound}, {"candidates_checked", r.candidates_checked}};
    }
    return j;
}

}  // namespace ucox
