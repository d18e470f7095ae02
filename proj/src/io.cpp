#include "srd/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace srd::io {

std::string digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path);
    out << contents;
    if (!out)
        throw Error("write to " + path + " failed");
}

json labeling_to_json(const Labeling& f) {
    json labels = json::array();
    for (Label l : f)
        labels.push_back(value(l));
    return json{{"labels", labels}};
}

Labeling labeling_from_json(const json& j) {
    const json* labels = nullptr;
    if (j.is_object() && j.contains("labels"))
        labels = &j["labels"];
    else if (j.is_object() && j.contains("result") && j["result"].is_object() && j["result"].contains("labels"))
        labels = &j["result"]["labels"];
    if (!labels || !labels->is_array())
        throw ParseError(ParseErrorKind::MalformedLine, 1, "expected an object with a \"labels\" array");
    Labeling f;
    for (const auto& v : *labels) {
        if (!v.is_number_integer())
            throw ParseError(ParseErrorKind::MalformedLine, 1, "labels must be integers");
        f.push_back(label_from_int(v.get<int>()));
    }
    return f;
}

json to_json(const MrssInstance& inst) {
    return json{{"k", inst.k}, {"m", inst.m}, {"vectors", inst.vectors}, {"target", inst.target}};
}

MrssInstance mrss_from_json(const json& j) {
    MrssInstance inst;
    try {
        inst.k = j.at("k").get<int>();
        inst.m = j.at("m").get<int>();
        inst.vectors = j.at("vectors").get<std::vector<std::vector<int>>>();
        inst.target = j.at("target").get<std::vector<int>>();
    } catch (const json::exception& e) {
        throw ParseError(ParseErrorKind::MalformedLine, 1, std::string("mrss instance: ") + e.what());
    }
    validate(inst);
    return inst;
}

RbdsInstance parse_rbds(std::string_view text) {
    RbdsInstance inst;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    long long declared = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#')
            continue;
        std::string rest;
        if (!header) {
            long long xs, ys, m, k;
            if (tag != "p" || !(ls >> xs >> ys >> m >> k) || (ls >> rest) || xs < 0 || ys < 0 || m < 0)
                throw ParseError(ParseErrorKind::MalformedHeader, lineno, "expected \"p <|X|> <|Y|> <m> <k>\"");
            inst.x_count = static_cast<int>(xs);
            inst.y_count = static_cast<int>(ys);
            inst.k = static_cast<int>(k);
            declared = m;
            header = true;
            continue;
        }
        long long x, y;
        if (tag != "e" || !(ls >> x >> y) || (ls >> rest))
            throw ParseError(ParseErrorKind::MalformedLine, lineno, "expected \"e <x> <y>\"");
        if (x < 1 || x > inst.x_count || y < 1 || y > inst.y_count)
            throw ParseError(ParseErrorKind::EndpointOutOfRange, lineno, "endpoint out of range");
        std::pair<int, int> e{static_cast<int>(x - 1), static_cast<int>(y - 1)};
        for (const auto& seen : inst.edges)
            if (seen == e)
                throw ParseError(ParseErrorKind::DuplicateEdge, lineno, "repeated edge");
        inst.edges.push_back(e);
    }
    if (!header)
        throw ParseError(ParseErrorKind::MalformedHeader, lineno + 1, "missing header");
    if (static_cast<long long>(inst.edges.size()) != declared)
        throw ParseError(ParseErrorKind::EdgeCountMismatch, lineno,
                         "header declares " + std::to_string(declared) + " edges, found " +
                             std::to_string(inst.edges.size()));
    return inst;
}

std::string write_rbds(const RbdsInstance& inst) {
    std::ostringstream out;
    out << "p " << inst.x_count << ' ' << inst.y_count << ' ' << inst.edges.size() << ' ' << inst.k << '\n';
    for (auto [x, y] : inst.edges)
        out << "e " << x + 1 << ' ' << y + 1 << '\n';
    return out.str();
}

json to_json(const Verdict& v) {
    json violations = json::array();
    for (const auto& x : v.violations)
        violations.push_back({{"vertex", x.vertex}, {"reason", std::string(reason_name(x.reason))}});
    return json{{"valid", v.valid()}, {"violations", violations}};
}

json to_json(const SolveResult& r) {
    json j = labeling_to_json(r.witness);
    j["optimum"] = r.optimum;
    j["algo"] = std::string(algo_name(r.algo));
    j["explored"] = r.explored;
    j["certified"] = r.certified;
    return j;
}

json to_json(const NdPartition& p) {
    json classes = json::array();
    for (int i = 0; i < p.type_count(); ++i)
        classes.push_back({{"kind", p.kind[i] == ClassKind::Clique ? "clique" : "independent"},
                           {"vertices", p.classes[i]}});
    return json{{"t", p.type_count()}, {"classes", classes}};
}

namespace {

json witness_json(const ClassWitness& w) {
    if (const auto* s = std::get_if<SplitPartition>(&w))
        return {{"kind", "split"}, {"clique", s->clique}, {"independent", s->independent}};
    if (const auto* b = std::get_if<Bipartition>(&w))
        return {{"kind", "bipartition"}, {"left", b->left}, {"right", b->right}};
    if (const auto* f = std::get_if<FeedbackVertexSet>(&w))
        return {{"kind", "feedback_vertex_set"}, {"vertices", f->vertices}};
    if (const auto* c = std::get_if<VertexCover>(&w))
        return {{"kind", "vertex_cover"}, {"vertices", c->vertices}};
    return nullptr;
}

}  // namespace

json sidecar(const ReductionOutput& out) {
    json roles = json::array();
    for (const auto& r : out.roles)
        roles.push_back({{"tag", r.tag}, {"index", r.index}});
    return json{{"reduction", std::string(reduction_name(out.kind))},
                {"k_prime", out.k_prime},
                {"roles", roles},
                {"witness", witness_json(out.witness)}};
}

}  // namespace srd::io
