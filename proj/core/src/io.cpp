#include "cyclerev/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cyclerev {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("json parse error: ") + e.what());
    }
}

int require_int(const ordered_json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string("expected integer for ") + what);
    return j.get<int>();
}

}  // namespace

std::string write_digraph(const Digraph& d, GraphFormat format) {
    switch (format) {
        case GraphFormat::Json: {
            ordered_json j;
            j["n"] = d.vertex_count();
            auto arcs = ordered_json::array();
            for (const auto& [u, v] : d.arcs()) arcs.push_back(ordered_json::array({u, v}));
            j["arcs"] = std::move(arcs);
            return j.dump() + "\n";
        }
        case GraphFormat::EdgeList: {
            std::ostringstream out;
            out << d.vertex_count() << " " << d.arc_count() << "\n";
            for (const auto& [u, v] : d.arcs()) out << u << " " << v << "\n";
            return out.str();
        }
        case GraphFormat::Dot: {
            std::ostringstream out;
            out << "digraph D {\n";
            std::vector<char> touched(d.vertex_count(), 0);
            for (const auto& [u, v] : d.arcs()) touched[u] = touched[v] = 1;
            for (int v = 0; v < d.vertex_count(); ++v)
                if (!touched[v]) out << "  " << v << ";\n";
            for (const auto& [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
            out << "}\n";
            return out.str();
        }
    }
    throw std::invalid_argument("write_digraph: unknown format");
}

Digraph read_digraph(const std::string& text, GraphFormat format) {
    switch (format) {
        case GraphFormat::Json: {
            auto j = parse_json(text);
            if (!j.is_object() || !j.contains("n") || !j.contains("arcs"))
                throw std::invalid_argument("digraph json: need object with \"n\" and \"arcs\"");
            int n = require_int(j["n"], "\"n\"");
            if (!j["arcs"].is_array())
                throw std::invalid_argument("digraph json: \"arcs\" must be an array");
            std::vector<Arc> arcs;
            for (std::size_t i = 0; i < j["arcs"].size(); ++i) {
                const auto& pair = j["arcs"][i];
                if (!pair.is_array() || pair.size() != 2)
                    throw std::invalid_argument("digraph json: arc " + std::to_string(i) +
                                                " must be a [tail, head] pair");
                arcs.push_back({require_int(pair[0], "arc tail"), require_int(pair[1], "arc head")});
            }
            return Digraph(n, std::move(arcs));
        }
        case GraphFormat::EdgeList: {
            std::istringstream in(text);
            std::string line;
            if (!std::getline(in, line))
                throw std::invalid_argument("edge list: missing \"n m\" header line");
            std::istringstream header(line);
            long long n = -1, m = -1;
            if (!(header >> n >> m) || n < 0 || m < 0)
                throw std::invalid_argument("edge list line 1: expected \"n m\"");
            std::string extra;
            if (header >> extra)
                throw std::invalid_argument("edge list line 1: trailing field \"" + extra + "\"");
            std::vector<Arc> arcs;
            for (long long i = 0; i < m; ++i) {
                if (!std::getline(in, line))
                    throw std::invalid_argument("edge list line " + std::to_string(i + 2) +
                                                ": missing (expected " + std::to_string(m) +
                                                " arcs)");
                std::istringstream row(line);
                int u, v;
                if (!(row >> u >> v))
                    throw std::invalid_argument("edge list line " + std::to_string(i + 2) +
                                                ": expected \"u v\"");
                if (row >> extra)
                    throw std::invalid_argument("edge list line " + std::to_string(i + 2) +
                                                ": trailing field \"" + extra + "\"");
                arcs.push_back({u, v});
            }
            while (std::getline(in, line))
                if (!line.empty())
                    throw std::invalid_argument("edge list: unexpected content after " +
                                                std::to_string(m) + " arcs: \"" + line + "\"");
            return Digraph(static_cast<int>(n), std::move(arcs));
        }
        case GraphFormat::Dot:
            throw std::invalid_argument("dot is an export-only format");
    }
    throw std::invalid_argument("read_digraph: unknown format");
}

std::string write_sequence(const ReversalSequence& s) {
    ordered_json j;
    auto cycles = ordered_json::array();
    for (const auto& c : s.cycles) cycles.push_back(c.vertices());
    j["cycles"] = std::move(cycles);
    return j.dump() + "\n";
}

ReversalSequence read_sequence(const std::string& text) {
    auto j = parse_json(text);
    if (!j.is_object() || !j.contains("cycles") || !j["cycles"].is_array())
        throw std::invalid_argument("sequence json: need object with \"cycles\" array");
    ReversalSequence s;
    for (std::size_t i = 0; i < j["cycles"].size(); ++i) {
        const auto& verts = j["cycles"][i];
        if (!verts.is_array())
            throw std::invalid_argument("sequence json: cycle " + std::to_string(i) +
                                        " must be a vertex array");
        std::vector<int> vs;
        for (const auto& v : verts) vs.push_back(require_int(v, "cycle vertex"));
        try {
            s.cycles.emplace_back(std::move(vs));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("sequence json: cycle " + std::to_string(i) + ": " +
                                        e.what());
        }
    }
    return s;
}

std::string write_bicover(const Bicover& b) {
    Bicover sorted = b;
    std::sort(sorted.part_one.begin(), sorted.part_one.end());
    std::sort(sorted.part_two.begin(), sorted.part_two.end());
    ordered_json j;
    j["part_one"] = sorted.part_one;
    j["part_two"] = sorted.part_two;
    return j.dump() + "\n";
}

Bicover read_bicover(const std::string& text) {
    auto j = parse_json(text);
    if (!j.is_object() || !j.contains("part_one") || !j.contains("part_two") ||
        !j["part_one"].is_array() || !j["part_two"].is_array())
        throw std::invalid_argument(
            "bicover json: need object with \"part_one\" and \"part_two\" arrays");
    Bicover b;
    for (const auto& v : j["part_one"]) b.part_one.push_back(require_int(v, "part_one vertex"));
    for (const auto& v : j["part_two"]) b.part_two.push_back(require_int(v, "part_two vertex"));
    return b;
}

std::string write_trace_csv(const std::vector<ReductionStep>& trace) {
    std::ostringstream out;
    out << "step,cycle_length,backward_before,backward_after,sigma_before,sigma_after\n";
    for (const auto& t : trace)
        out << t.step << "," << t.cycle_length << "," << t.backward_before << ","
            << t.backward_after << "," << t.sigma_before.str() << "," << t.sigma_after.str()
            << "\n";
    return out.str();
}

GraphFormat parse_format(const std::string& name) {
    if (name == "json") return GraphFormat::Json;
    if (name == "edgelist") return GraphFormat::EdgeList;
    if (name == "dot") return GraphFormat::Dot;
    throw std::invalid_argument("unknown format \"" + name + "\" (json|edgelist|dot)");
}

}  // namespace cyclerev
