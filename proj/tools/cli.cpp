#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ucox/complex.hpp"
#include "ucox/io.hpp"
#include "ucox/subgroup.hpp"
#include "ucox/verify.hpp"

namespace ucox::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) parts.push_back(cur);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

int parse_int(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument("expected an integer, got '" + s + "'");
    return v;
}

std::vector<int> parse_ints(const std::string& s, char sep) {
    std::vector<int> r;
    if (s.empty()) return r;
    for (auto& p : split(s, sep)) r.push_back(parse_int(p));
    return r;
}

std::string read_source(const std::string& text) {
    if (text.empty() || text[0] != '@') return text;
    std::ifstream in(text.substr(1));
    if (!in) throw std::invalid_argument("cannot read file '" + text.substr(1) + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_json(const std::string& s) {
    auto p = s.find_first_not_of(" \t\r\n");
    return p != std::string::npos && (s[p] == '{' || s[p] == '[');
}

json parse_json(const std::string& s) {
    try {
        return json::parse(s);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

int require_rank(int rank) {
    if (rank < 1) throw std::invalid_argument("--rank is required for this command");
    return rank;
}

// Rank inferred from the largest letter when not given.
int word_rank(int rank, const std::vector<std::string>& words) {
    if (rank > 0) return rank;
    int m = 1;
    for (auto& w : words)
        for (auto& p : split(w, '.'))
            if (p != "e" && !p.empty()) m = std::max(m, parse_int(p));
    return m;
}

Automorphism parse_term(int n, const std::string& term) {
    auto parts = split(term, ':');
    const std::string& head = parts[0];
    auto need = [&](std::size_t k) {
        if (parts.size() != k) throw std::invalid_argument("malformed automorphism term '" + term + "'");
    };
    if (head == "id") {
        need(1);
        return Automorphism::identity(n);
    }
    if (head == "sigma" || head == "swap") {
        need(2);
        auto ij = parse_ints(parts[1], ',');
        if (ij.size() != 2) throw std::invalid_argument("'" + head + "' takes two indices");
        return head == "sigma" ? sigma(n, ij[0], ij[1]) : swap_aut(n, ij[0], ij[1]);
    }
    if (head == "pc") {
        need(3);
        return partial_conj(n, parse_ints(parts[1], '.'), parse_int(parts[2]));
    }
    if (head == "F") {
        need(2);
        return F(n, parse_int(parts[1]));
    }
    if (head == "Fw") {
        need(3);
        int i = parse_int(parts[1]);
        Word w = Word::parse(n, parts[2]);
        if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
        Automorphism f = conj_generator(i, w);
        if (f.rank() != n) throw std::invalid_argument("rank mismatch");
        return f;
    }
    if (head == "ad") {
        need(2);
        return inner(Word::parse(n, parts[1]));
    }
    throw std::invalid_argument("unknown automorphism term '" + term + "' (valid: id, sigma:j,i, swap:i,j, pc:S:i, "
                                "F:i, Fw:i:w, ad:w)");
}

std::vector<Word> parse_gens(int n, const std::string& text) {
    auto gens = parse_word_list(n, text);
    if (gens.empty()) throw std::invalid_argument("empty generator list");
    return gens;
}

std::string class_str(const FreeFactorClass& c) { return "<" + format_word_list(c.generators) + ">"; }

void print_aut(std::ostream& out, const Automorphism& f, bool as_json) {
    if (as_json) {
        out << aut_to_json(f).dump(2) << "\n";
        return;
    }
    for (int i = 1; i <= f.rank(); ++i) out << "x" << i << " -> " << f.image(i).str() << "\n";
}

void print_star(std::ostream& out, const StarClass& s, bool as_json) {
    if (as_json) {
        out << star_to_json(s).dump(2) << "\n";
        return;
    }
    out << "W_" << s.k << "-star in W_" << s.rank << " with " << s.leaves() << " corank-1 classes\n";
    for (auto& c : s.corank1) out << "  " << class_str(c) << "  " << c.code << "\n";
}

}  // namespace

Automorphism parse_aut(int rank, const std::string& text0) {
    std::string text = read_source(text0);
    if (looks_like_json(text)) {
        auto f = aut_from_json(parse_json(text));
        if (rank > 0 && f.rank() != rank) throw std::invalid_argument("automorphism rank does not match --rank");
        return f;
    }
    int n = require_rank(rank);
    Automorphism f = Automorphism::identity(n);
    for (auto& term : split(text, '*')) f = compose(f, parse_term(n, term));
    return f;
}

StarClass parse_star(int rank, const std::string& text0) {
    std::string text = read_source(text0);
    if (looks_like_json(text)) {
        json j = parse_json(text);
        StarClass s = j.contains("corank1") ? star_from_json(j) : star_class(tree_from_json(j));
        if (rank > 0 && s.rank != rank) throw std::invalid_argument("star rank does not match --rank");
        return s;
    }
    int n = require_rank(rank);
    std::vector<FreeFactorClass> classes;
    for (auto& part : split(text, '|')) classes.push_back(FreeFactorClass::of(n, parse_gens(n, part)));
    auto r = refine(classes);
    if (!r) throw std::invalid_argument("the given classes are not the corank-1 classes of a star");
    StarClass s = StarClass::of(n, classes);
    if (!(r->cls == s)) throw std::invalid_argument("the given classes are not the corank-1 classes of a star");
    return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Free splittings and stars of universal Coxeter groups", "ucox"};
    app.require_subcommand(1);
    app.fallthrough();
    int rank = 0;
    bool as_json = false;
    app.add_option("-n,--rank", rank, "Rank n of W_n");
    app.add_flag("--json", as_json, "Machine-readable output");

    // word
    auto* word = app.add_subcommand("word", "Words in W_n")->require_subcommand(1);
    std::string w1, w2;
    auto* w_norm = word->add_subcommand("normalize", "Reduce a word");
    w_norm->add_option("w", w1, "Word, e.g. 1.2.2.3")->required();
    auto* w_conj = word->add_subcommand("conj", "Decide conjugacy of two words");
    w_conj->add_option("w", w1)->required();
    w_conj->add_option("v", w2)->required();

    // aut
    auto* aut = app.add_subcommand("aut", "Automorphisms")->require_subcommand(1);
    std::string f1, f2, aw;
    auto* a_comp = aut->add_subcommand("compose", "Compose f o g");
    a_comp->add_option("f", f1)->required();
    a_comp->add_option("g", f2)->required();
    auto* a_apply = aut->add_subcommand("apply", "Apply f to a word");
    a_apply->add_option("f", f1)->required();
    a_apply->add_option("w", aw)->required();
    auto* a_oeq = aut->add_subcommand("outer-eq", "Decide equality in Out(W_n)");
    a_oeq->add_option("f", f1)->required();
    a_oeq->add_option("g", f2)->required();
    auto* a_cn = aut->add_subcommand("cn", "Class permutation and membership in C_n");
    a_cn->add_option("f", f1)->required();
    auto* a_fam = aut->add_subcommand("family", "Expand a named automorphism");
    a_fam->add_option("expr", f1)->required();

    // subgroup
    auto* sub = app.add_subcommand("subgroup", "Finitely generated subgroups")->require_subcommand(1);
    std::string g1, g2, sw;
    bool as_dot = false;
    auto* s_core = sub->add_subcommand("core", "Core graph of a subgroup");
    s_core->add_option("gens", g1, "Comma separated generators")->required();
    s_core->add_flag("--dot", as_dot, "Graphviz output");
    auto* s_mem = sub->add_subcommand("member", "Membership test");
    s_mem->add_option("gens", g1)->required();
    s_mem->add_option("w", sw)->required();
    auto* s_conj = sub->add_subcommand("conj", "Conjugacy of two subgroups");
    s_conj->add_option("a", g1)->required();
    s_conj->add_option("b", g2)->required();
    auto* s_ff = sub->add_subcommand("freefactor", "Free factor test");
    s_ff->add_option("gens", g1)->required();
    auto* s_int = sub->add_subcommand("intersect", "Intersection of two subgroups");
    s_int->add_option("a", g1)->required();
    s_int->add_option("b", g2)->required();

    // star
    auto* star = app.add_subcommand("star", "Stars and compatibility")->require_subcommand(1);
    std::string st1, st2, center, keep;
    auto* t_make = star->add_subcommand("make", "Standard star with the given center letters");
    t_make->add_option("center", center, "Comma separated letters; empty for a trivial center")->required();
    auto* t_canon = star->add_subcommand("canon", "Canonical form of a star");
    t_canon->add_option("star", st1)->required();
    auto* t_act = star->add_subcommand("act", "Image of a star under an automorphism");
    t_act->add_option("f", f1)->required();
    t_act->add_option("star", st1)->required();
    auto* t_compat = star->add_subcommand("compatible", "Decide compatibility of two stars");
    t_compat->add_option("s", st1)->required();
    t_compat->add_option("t", st2)->required();
    auto* t_refine = star->add_subcommand("refine", "Common refinement of corank-1 classes");
    t_refine->add_option("classes", st1, "Generator lists joined by '|'")->required();
    auto* t_collapse = star->add_subcommand("collapse", "Collapse a star onto some of its classes");
    t_collapse->add_option("star", st1)->required();
    t_collapse->add_option("--keep", keep, "Comma separated 0-based class indices to keep")->required();

    // complex
    auto* cx = app.add_subcommand("complex", "Complexes of stars")->require_subcommand(1);
    std::string kind_s = "X", s3, map, s0;
    std::vector<std::string> images;
    int bound = 16, depth = 1, conj_len = 3;
    std::string format = "text";
    auto* c_adj = cx->add_subcommand("adjacent", "Adjacency in a complex");
    c_adj->add_option("--kind", kind_s, "L, Y, Xtilde, X or Xprime");
    c_adj->add_option("s", st1)->required();
    c_adj->add_option("t", st2)->required();
    auto* c_tri = cx->add_subcommand("triangle", "Classify a triangle and search for a fourth vertex");
    c_tri->add_option("s1", st1)->required();
    c_tri->add_option("s2", st2)->required();
    c_tri->add_option("s3", s3)->required();
    c_tri->add_option("--bound", bound, "Complexity bound");
    auto* c_ball = cx->add_subcommand("ball", "Bounded neighborhood of a star");
    c_ball->add_option("--kind", kind_s);
    c_ball->add_option("s", st1)->required();
    c_ball->add_option("--bound", bound, "Complexity bound");
    c_ball->add_option("--depth", depth, "Generation depth");
    c_ball->add_option("--conj-len", conj_len, "Conjugator length");
    c_ball->add_option("--format", format, "text, json or dot");
    auto* c_ind = cx->add_subcommand("induce", "Induced maps X -> X' and Y -> L");
    c_ind->add_option("map", map, "X-Xprime or Y-L")->required();
    c_ind->add_option("images", images, "Image stars")->required();
    c_ind->add_option("--star", st1, "Source star (X-Xprime)");
    c_ind->add_option("--s0", s0, "Distinguished class generators (X-Xprime)");
    auto* c_exp = cx->add_subcommand("export", "Convert a ball JSON document");
    c_exp->add_option("ball", st1, "Ball JSON or @file")->required();
    c_exp->add_option("--format", format, "json or dot");

    // verify
    auto* ver = app.add_subcommand("verify", "Randomized verification suites");
    std::string suite, replay_file;
    std::uint64_t seed = 1;
    int only_case = -1;
    bool list = false;
    ver->add_option("suite", suite, "Suite name");
    ver->add_option("--seed", seed, "Random seed");
    ver->add_option("--bound", bound, "Complexity bound");
    ver->add_option("--case", only_case, "Run a single case");
    ver->add_option("--replay", replay_file, "Re-run a failure payload");
    ver->add_flag("--list", list, "List suites");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        auto* sel = &app;
        while (!sel->get_subcommands().empty()) sel = sel->get_subcommands().front();
        err << sel->help();
        return kUsage;
    }

    try {
        if (word->parsed()) {
            if (w_norm->parsed()) {
                int n = word_rank(rank, {w1});
                out << Word::parse(n, w1).str() << "\n";
            } else {
                int n = word_rank(rank, {w1, w2});
                Word a = Word::parse(n, w1), b = Word::parse(n, w2);
                auto g = are_conjugate(a, b);
                if (as_json)
                    out << json{{"conjugate", g.has_value()}, {"conjugator", g ? json(g->str()) : json()}}.dump() << "\n";
                else if (g)
                    out << "conjugate: g = " << g->str() << "\n";
                else
                    out << "not conjugate\n";
            }
            return kOk;
        }
        if (aut->parsed()) {
            if (a_comp->parsed()) {
                print_aut(out, compose(parse_aut(rank, f1), parse_aut(rank, f2)), as_json);
            } else if (a_apply->parsed()) {
                Automorphism f = parse_aut(rank, f1);
                out << f.apply(Word::parse(f.rank(), aw)).str() << "\n";
            } else if (a_oeq->parsed()) {
                Automorphism f = parse_aut(rank, f1), g = parse_aut(rank, f2);
                auto h = equal_outer(f, g);
                if (as_json)
                    out << json{{"equal", h.has_value()}, {"conjugator", h ? json(h->str()) : json()}}.dump() << "\n";
                else if (h)
                    out << "equal in Out: g = ad_h o f with h = " << h->str() << "\n";
                else
                    out << "not equal in Out\n";
            } else if (a_cn->parsed()) {
                Automorphism f = parse_aut(rank, f1);
                auto p = class_permutation(f);
                if (as_json) {
                    out << json{{"permutation", p}, {"in_Cn", in_Cn(f)}}.dump() << "\n";
                } else {
                    out << "class permutation:";
                    for (int x : p) out << " " << x;
                    out << "\n" << (in_Cn(f) ? "in C_n" : "not in C_n") << "\n";
                }
            } else {
                print_aut(out, parse_aut(rank, f1), as_json);
            }
            return kOk;
        }
        if (sub->parsed()) {
            int n = require_rank(rank);
            CoreGraph a = CoreGraph::from_generators(n, parse_gens(n, g1));
            if (s_core->parsed()) {
                if (as_dot) {
                    out << core_to_dot(a);
                } else if (as_json) {
                    json j = core_to_json(a);
                    j["code"] = canonical_code(a);
                    out << j.dump(2) << "\n";
                } else {
                    auto sig = kurosh_signature(a);
                    out << "vertices " << a.vertex_count() << "\n";
                    out << "signature k=" << sig.k << " r=" << sig.r << "\n";
                    out << "code " << canonical_code(a) << "\n";
                    out << "basis " << format_word_list(a.generators_from_core()) << "\n";
                }
            } else if (s_mem->parsed()) {
                bool m = member(a, Word::parse(n, sw));
                out << (as_json ? json{{"member", m}}.dump() : std::string(m ? "member" : "not a member")) << "\n";
            } else if (s_conj->parsed()) {
                CoreGraph b = CoreGraph::from_generators(n, parse_gens(n, g2));
                auto g = conjugate_subgroups(a, b);
                if (as_json)
                    out << json{{"conjugate", g.has_value()}, {"conjugator", g ? json(g->str()) : json()}}.dump() << "\n";
                else if (g)
                    out << "conjugate: g A g^-1 = B with g = " << g->str() << "\n";
                else
                    out << "not conjugate\n";
            } else if (s_ff->parsed()) {
                auto r = is_free_factor(a);
                if (as_json) {
                    json j{{"verdict", to_string(r.verdict)}, {"moves_used", r.moves_used}};
                    if (r.witness) {
                        j["standard_letters"] = r.standard_letters;
                        j["witness"] = aut_to_json(*r.witness);
                    }
                    out << j.dump(2) << "\n";
                } else {
                    out << to_string(r.verdict) << "\n";
                    if (r.witness) {
                        out << "standard letters:";
                        for (int x : r.standard_letters) out << " " << x;
                        out << "\nwitness:";
                        for (auto& m : r.witness->moves()) out << " " << move_str(m);
                        out << "\n";
                    }
                }
                if (r.verdict == Verdict::Inconclusive) return kFailed;
            } else {
                CoreGraph b = CoreGraph::from_generators(n, parse_gens(n, g2));
                CoreGraph c = intersect(a, b);
                auto gens = c.generators_from_core();
                if (as_json)
                    out << json{{"generators", format_word_list(gens)}, {"code", gens.empty() ? "" : canonical_code(c)}}.dump()
                        << "\n";
                else
                    out << (gens.empty() ? std::string("trivial") : format_word_list(gens)) << "\n";
            }
            return kOk;
        }
        if (star->parsed()) {
            if (t_make->parsed()) {
                int n = require_rank(rank);
                SplittingTree t = standard_star(n, parse_ints(center, ','));
                if (as_json) {
                    json j = star_to_json(star_class(t));
                    j["tree"] = tree_to_json(t);
                    out << j.dump(2) << "\n";
                } else {
                    print_star(out, star_class(t), false);
                }
            } else if (t_canon->parsed()) {
                print_star(out, parse_star(rank, st1), as_json);
            } else if (t_act->parsed()) {
                StarClass s = parse_star(rank, st1);
                print_star(out, act(parse_aut(s.rank, f1), s), as_json);
            } else if (t_compat->parsed()) {
                StarClass s = parse_star(rank, st1), t = parse_star(rank, st2);
                bool ok = is_compatible(s, t);
                if (as_json)
                    out << json{{"compatible", ok}}.dump() << "\n";
                else
                    out << (ok ? "compatible" : "incompatible") << "\n";
            } else if (t_refine->parsed()) {
                int n = require_rank(rank);
                std::vector<FreeFactorClass> classes;
                for (auto& part : split(st1, '|')) classes.push_back(FreeFactorClass::of(n, parse_gens(n, part)));
                auto r = refine(classes);
                if (!r) {
                    out << (as_json ? json{{"compatible", false}}.dump() : std::string("incompatible")) << "\n";
                    return kFailed;
                }
                if (as_json) {
                    json j = star_to_json(r->cls);
                    j["witness"] = tree_to_json(r->witness);
                    out << j.dump(2) << "\n";
                } else {
                    print_star(out, r->cls, false);
                    out << "witness:\n";
                    for (int v = 0; v < r->witness.vertex_count(); ++v)
                        out << "  v" << v << " <" << format_word_list(r->witness.vertex_groups[v]) << ">\n";
                }
            } else {
                StarClass s = parse_star(rank, st1);
                std::vector<FreeFactorClass> kept;
                for (int idx : parse_ints(keep, ',')) {
                    if (idx < 0 || idx >= s.leaves()) throw std::invalid_argument("class index out of range");
                    kept.push_back(s.corank1[idx]);
                }
                if (kept.empty()) throw std::invalid_argument("keep at least one class");
                print_star(out, StarClass::of(s.rank, kept), as_json);
            }
            return kOk;
        }
        if (cx->parsed()) {
            ComplexKind kind = parse_kind(kind_s);
            if (c_adj->parsed()) {
                bool a = adjacent(kind, parse_star(rank, st1), parse_star(rank, st2));
                out << (as_json ? json{{"adjacent", a}}.dump() : std::string(a ? "adjacent" : "not adjacent")) << "\n";
            } else if (c_tri->parsed()) {
                BallOptions opts;
                opts.complexity = bound;
                auto r = fourth_vertex(parse_star(rank, st1), parse_star(rank, st2), parse_star(rank, s3), opts);
                if (as_json) {
                    out << triangle_to_json(r).dump(2) << "\n";
                } else {
                    out << "type " << to_string(r.type) << "\n";
                    out << "refinement W_" << r.refinement.k << "-star\n";
                    if (r.fourth) {
                        out << "fourth vertex:\n";
                        print_star(out, *r.fourth, false);
                    } else {
                        out << "no fourth vertex within complexity bound " << r.bound << " (" << r.candidates_checked
                            << " candidates checked)\n";
                    }
                }
            } else if (c_ball->parsed()) {
                BallOptions opts;
                opts.complexity = bound;
                opts.depth = depth;
                opts.conj_len = conj_len;
                auto b = neighbors_bounded(kind, parse_star(rank, st1), opts);
                if (format == "text" && !as_json) {
                    out << "kind " << to_string(b.kind) << "\n";
                    out << "complexity bound " << b.complexity_bound << "\n";
                    out << "vertices " << b.vertices.size() << "\n";
                    out << "edges " << b.edges.size() << "\n";
                    out << "candidate pool " << b.pool_size << "\n";
                    out << "truncated " << (b.truncated ? "yes" : "no") << "\n";
                } else {
                    out << export_ball(b, as_json ? "json" : format);
                }
            } else if (c_ind->parsed()) {
                std::vector<StarClass> ims;
                for (auto& im : images) ims.push_back(parse_star(rank, im));
                StarClass r;
                if (map == "X-Xprime") {
                    if (st1.empty() || s0.empty()) throw std::invalid_argument("X-Xprime needs --star and --s0");
                    StarClass s = parse_star(rank, st1);
                    r = induced_image_X_to_Xprime(s, FreeFactorClass::of(s.rank, parse_gens(s.rank, s0)), ims);
                } else if (map == "Y-L") {
                    r = induced_image_Y_to_L(ims);
                } else {
                    throw std::invalid_argument("unknown map '" + map + "' (valid: X-Xprime, Y-L)");
                }
                print_star(out, r, as_json);
            } else {
                BallReport b = ball_from_json(parse_json(read_source(st1)));
                out << export_ball(b, as_json ? "json" : (format == "text" ? "dot" : format));
            }
            return kOk;
        }
        // verify
        if (list) {
            for (auto& s : verify::suites()) out << s.name << "  " << s.description << "\n";
            return kOk;
        }
        verify::SuiteResult r;
        if (!replay_file.empty()) {
            r = verify::replay(parse_json(read_source("@" + replay_file)));
        } else {
            if (suite.empty()) throw std::invalid_argument("missing suite name (see verify --list)");
            verify::SuiteParams p;
            p.rank = rank;
            p.seed = seed;
            p.bound = bound;
            if (only_case >= 0) p.only_case = only_case;
            r = verify::run_suite(suite, p);
        }
        if (as_json) {
            out << verify::result_to_json(r).dump(2) << "\n";
        } else {
            out << "suite " << r.suite << "\n";
            out << "seed " << r.params.seed << "\n";
            out << "ranks";
            for (int n : r.ranks) out << " " << n;
            out << "\ncases " << r.cases_run << "\n";
            out << "failures " << r.failures.size() << "\n";
            for (auto& f : r.failures) out << verify::failure_payload(r, f).dump() << "\n";
            out << (r.ok() ? "PASS" : "FAIL") << "\n";
        }
        err << "wall time " << r.wall_seconds << " s\n";
        return r.ok() ? kOk : kFailed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    }
}

}  // namespace ucox::cli
