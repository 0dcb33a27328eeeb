#ifndef BEDKIT_CLASSES_HPP
#define BEDKIT_CLASSES_HPP

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "bedkit/graph.hpp"

namespace bedkit {

enum class Builtin {
    Edgeless,       // E
    K0K1,           // E' = {K0, K1}
    Forests,
    Outerplanar,    // excl({K4, K2,3})
    Cactus,         // every block is an edge, a vertex, or a cycle
};

// A hereditary base class G, represented either by a finite obstruction set
// (excl semantics) or by a built-in predicate. K0 belongs to every class.
// Copies share memo tables; all members are immutable after construction.
class ClassSpec {
public:
    static ClassSpec builtin(Builtin which);
    static ClassSpec builtin_by_name(const std::string& name);
    // Validated at construction: non-empty minor antichain, no K0 or K1.
    static ClassSpec from_obstructions(std::vector<Graph> obstructions,
                                       std::string label = "");
    // Membership in B(base): every block of g lies in base.
    static ClassSpec block_closure_of(const ClassSpec& base);

    const std::string& label() const { return label_; }
    bool is_minor_closed() const { return minor_closed_; }
    bool is_obstruction_kind() const { return kind_ == Kind::Obstructions; }
    const std::vector<Graph>& obstructions() const { return obstructions_; }

    bool contains(const Graph& g) const;

    // Serialization: "class <label>" then "builtin <name>" or "obstructions"
    // followed by graph6 lines.
    std::string to_text() const;
    static ClassSpec parse(const std::string& text);

    struct Memo {
        std::mutex mutex;
        std::unordered_map<std::string, int> bed;                   // canon -> value
        std::unordered_map<std::string, int> ed;                    // canon -> value
        std::unordered_map<std::string, bool> level;                // canon|k -> bool
        size_t hits = 0, misses = 0;
    };
    Memo& memo() const { return *memo_; }

private:
    enum class Kind { BuiltinPred, Obstructions, BlockClosure };
    ClassSpec() = default;

    Kind kind_ = Kind::BuiltinPred;
    Builtin builtin_ = Builtin::Edgeless;
    std::vector<Graph> obstructions_;
    std::shared_ptr<const ClassSpec> base_;  // for BlockClosure
    std::string label_;
    bool minor_closed_ = true;
    std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

// Membership in A(spec): some single vertex deletion lands in spec.
// K0 is in A(spec) iff K0 is in spec (always true under the K0 convention).
bool apex_contains(const ClassSpec& spec, const Graph& g);

// Membership in B(spec): every block lies in spec; vacuously true for K0.
bool block_closure_contains(const ClassSpec& spec, const Graph& g);

// Membership in C(spec): every connected component lies in spec.
bool connected_closure_contains(const ClassSpec& spec, const Graph& g);

// Membership in spec^(k): level 0 is B(spec), level k is B(A(spec^(k-1))).
// Memoized on (canonical form, level).
bool level_contains(const ClassSpec& spec, int k, const Graph& g);

}  // namespace bedkit

#endif
