#include "bedkit/classes.hpp"

#include <bit>
#include <sstream>

#include "bedkit/canonical.hpp"
#include "bedkit/minor.hpp"

namespace bedkit {

namespace {

bool is_forest(const Graph& g) {
    // acyclic: every block has at most 2 vertices
    for (uint64_t b : blocks(g).blocks)
        if (std::popcount(b) > 2) return false;
    return true;
}

bool is_cactus(const Graph& g) {
    for (uint64_t bmask : blocks(g).blocks) {
        int size = std::popcount(bmask);
        if (size <= 2) continue;
        Graph b = g.induced_subgraph(bmask);
        if (b.edge_count() != b.n()) return false;  // biconnected with n edges = cycle
    }
    return true;
}

bool builtin_contains(Builtin which, const Graph& g) {
    switch (which) {
        case Builtin::Edgeless: return g.edge_count() == 0;
        case Builtin::K0K1: return g.n() <= 1;
        case Builtin::Forests: return is_forest(g);
        case Builtin::Outerplanar:
            return excludes_all(g, {complete_graph(4), complete_bipartite(2, 3)});
        case Builtin::Cactus: return is_cactus(g);
    }
    return false;
}

const char* builtin_name(Builtin which) {
    switch (which) {
        case Builtin::Edgeless: return "E";
        case Builtin::K0K1: return "E'";
        case Builtin::Forests: return "forests";
        case Builtin::Outerplanar: return "outerplanar";
        case Builtin::Cactus: return "cactus";
    }
    return "?";
}

}  // namespace

ClassSpec ClassSpec::builtin(Builtin which) {
    ClassSpec s;
    s.kind_ = Kind::BuiltinPred;
    s.builtin_ = which;
    s.label_ = builtin_name(which);
    s.minor_closed_ = true;  // all provided builtins are minor-closed
    return s;
}

ClassSpec ClassSpec::builtin_by_name(const std::string& name) {
    if (name == "E" || name == "edgeless") return builtin(Builtin::Edgeless);
    if (name == "E'" || name == "k0k1") return builtin(Builtin::K0K1);
    if (name == "forests") return builtin(Builtin::Forests);
    if (name == "outerplanar") return builtin(Builtin::Outerplanar);
    if (name == "cactus") return builtin(Builtin::Cactus);
    throw std::invalid_argument("unknown builtin class: " + name);
}

ClassSpec ClassSpec::from_obstructions(std::vector<Graph> obstructions, std::string label) {
    if (obstructions.empty())
        throw std::invalid_argument("obstruction set must be non-empty");
    for (const Graph& z : obstructions) {
        if (z.n() == 0)
            throw std::invalid_argument("obstruction set must not contain K0");
        if (z.n() == 1)
            throw std::invalid_argument(
                "obstruction set must not contain K1 (represented class would be trivial)");
    }
    if (!is_antichain(obstructions))
        throw std::invalid_argument("obstruction set must be a minor antichain");
    ClassSpec s;
    s.kind_ = Kind::Obstructions;
    s.obstructions_ = std::move(obstructions);
    if (label.empty()) {
        label = "excl{";
        for (size_t i = 0; i < s.obstructions_.size(); ++i) {
            if (i) label += ",";
            label += to_graph6(s.obstructions_[i]);
        }
        label += "}";
    }
    s.label_ = std::move(label);
    s.minor_closed_ = true;
    return s;
}

ClassSpec ClassSpec::block_closure_of(const ClassSpec& base) {
    ClassSpec s;
    s.kind_ = Kind::BlockClosure;
    s.base_ = std::make_shared<const ClassSpec>(base);
    s.label_ = "B(" + base.label() + ")";
    s.minor_closed_ = base.is_minor_closed();
    return s;
}

bool ClassSpec::contains(const Graph& g) const {
    if (g.n() == 0) return true;  // K0 belongs to every represented class
    switch (kind_) {
        case Kind::BuiltinPred: return builtin_contains(builtin_, g);
        case Kind::Obstructions: return excludes_all(g, obstructions_);
        case Kind::BlockClosure: return block_closure_contains(*base_, g);
    }
    return false;
}

std::string ClassSpec::to_text() const {
    std::ostringstream os;
    os << "class " << label_ << "\n";
    switch (kind_) {
        case Kind::BuiltinPred:
            os << "builtin " << builtin_name(builtin_) << "\n";
            break;
        case Kind::Obstructions:
            os << "obstructions\n";
            for (const Graph& z : obstructions_) os << to_graph6(z) << "\n";
            break;
        case Kind::BlockClosure:
            throw std::invalid_argument("block-closure specs have no file form");
    }
    return os.str();
}

ClassSpec ClassSpec::parse(const std::string& text) {
    std::istringstream is(text);
    std::string line, label;
    if (!std::getline(is, line) || line.rfind("class ", 0) != 0)
        throw std::invalid_argument("class spec: expected \"class <label>\" header");
    label = line.substr(6);
    if (!std::getline(is, line))
        throw std::invalid_argument("class spec: missing kind line");
    if (line.rfind("builtin ", 0) == 0) {
        ClassSpec s = builtin_by_name(line.substr(8));
        s.label_ = label;
        return s;
    }
    if (line == "obstructions") {
        std::vector<Graph> obs;
        while (std::getline(is, line)) {
            if (line.empty() || line[0] == '#') continue;
            obs.push_back(from_graph6(line));
        }
        return from_obstructions(std::move(obs), label);
    }
    throw std::invalid_argument("class spec: expected \"builtin <name>\" or \"obstructions\"");
}

bool apex_contains(const ClassSpec& spec, const Graph& g) {
    if (g.n() == 0) return spec.contains(g);
    for (int v = 0; v < g.n(); ++v)
        if (spec.contains(g.delete_vertex(v))) return true;
    return false;
}

bool block_closure_contains(const ClassSpec& spec, const Graph& g) {
    for (uint64_t b : blocks(g).blocks)
        if (!spec.contains(g.induced_subgraph(b))) return false;
    return true;
}

bool connected_closure_contains(const ClassSpec& spec, const Graph& g) {
    for (uint64_t c : connected_components(g))
        if (!spec.contains(g.induced_subgraph(c))) return false;
    return true;
}

bool level_contains(const ClassSpec& spec, int k, const Graph& g) {
    if (k < 0) throw std::invalid_argument("level_contains: negative level");
    if (g.n() == 0) return true;
    std::string key = canonical_key(g) + "|" + std::to_string(k);
    auto& memo = spec.memo();
    {
        std::lock_guard<std::mutex> lock(memo.mutex);
        auto it = memo.level.find(key);
        if (it != memo.level.end()) {
            ++memo.hits;
            return it->second;
        }
        ++memo.misses;
    }
    bool result = true;
    for (uint64_t bmask : blocks(g).blocks) {
        Graph b = g.induced_subgraph(bmask);
        bool block_ok;
        if (k == 0) {
            block_ok = spec.contains(b);
        } else {
            // b in A(spec^(k-1))
            block_ok = false;
            for (int v = 0; v < b.n() && !block_ok; ++v)
                block_ok = level_contains(spec, k - 1, b.delete_vertex(v));
        }
        if (!block_ok) {
            result = false;
            break;
        }
    }
    std::lock_guard<std::mutex> lock(memo.mutex);
    memo.level.emplace(std::move(key), result);
    return result;
}

}  // namespace bedkit
