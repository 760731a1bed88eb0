#ifndef TRILINK_DIAGRAM_HPP
#define TRILINK_DIAGRAM_HPP

#include <string>
#include <string_view>
#include <vector>

namespace trilink {

// One end of an arrow: a slot on a component. Components are numbered from 1;
// positions run 0..size-1 along the component. On a based component the order
// is linear, with the base point sitting before position 0. On a closed
// component positions are cyclic and the origin is an arbitrary cut.
struct endpoint {
    int component = 0;
    int position = 0;

    friend bool operator==(const endpoint& a, const endpoint& b) {
        return a.component == b.component && a.position == b.position;
    }
    friend bool operator<(const endpoint& a, const endpoint& b) {
        if (a.component != b.component) return a.component < b.component;
        return a.position < b.position;
    }
};

// A crossing of the underlying diagram. The arrow points from the over-passage
// (tail, written "O" in gauss code) to the under-passage (head, "U").
struct arrow {
    std::string id;
    int sign = +1;
    endpoint tail;
    endpoint head;

    friend bool operator==(const arrow& a, const arrow& b) {
        return a.id == b.id && a.sign == b.sign && a.tail == b.tail && a.head == b.head;
    }
};

struct component_info {
    bool based = true;
    int size = 0;  // number of endpoint slots

    friend bool operator==(const component_info& a, const component_info& b) {
        return a.based == b.based && a.size == b.size;
    }
};

// Immutable value type for a Gauss diagram. All transformations below return
// new diagrams. Abstract (possibly non-realizable) diagrams are accepted
// everywhere; realizability is never checked.
struct gauss_diagram {
    std::vector<component_info> components;
    std::vector<arrow> arrows;

    int component_count() const { return static_cast<int>(components.size()); }
    int arrow_count() const { return static_cast<int>(arrows.size()); }
    // Index into arrows, or -1.
    int find_arrow(std::string_view id) const;

    friend bool operator==(const gauss_diagram& a, const gauss_diagram& b) {
        return a.components == b.components && a.arrows == b.arrows;
    }
};

// Dense occupancy map (component, position) -> (arrow index, end). Requires a
// structurally valid diagram; building it on an invalid one throws.
struct endpoint_ref {
    int arrow_index = -1;
    bool is_head = false;
};
class endpoint_table {
  public:
    explicit endpoint_table(const gauss_diagram& d);
    const endpoint_ref& at(int component, int position) const {
        return slots_[component - 1][position];
    }

  private:
    std::vector<std::vector<endpoint_ref>> slots_;
};

// Checks every diagram invariant and returns the violations (empty = ok):
// arrow ids unique, each id one tail and one head, endpoints in range and
// hit exactly once, signs in {+1,-1}.
std::vector<std::string> validate(const gauss_diagram& d);
inline bool is_valid(const gauss_diagram& d) { return validate(d).empty(); }

// Switches every crossing; an involution.
gauss_diagram mirror(const gauss_diagram& d);

// Reverses the arrow with the given id and negates its sign; an involution
// per arrow. Throws std::invalid_argument on unknown ids.
gauss_diagram crossing_change(const gauss_diagram& d, std::string_view id);

enum class slide { forward, backward };

// Slides the base point of a based component past one adjacent endpoint.
// Forward moves it past the endpoint at position 0 (cyclically the sequence
// (a,b,c) becomes (b,c,a)); backward is the inverse. Throws on closed
// components; a component with no endpoints is returned unchanged.
gauss_diagram move_base_point(const gauss_diagram& d, int component, slide dir);

// Canonical form: arrows sorted by tail endpoint and renamed 1..n in that
// order. equivalent() compares diagrams up to this renaming.
gauss_diagram canonical(const gauss_diagram& d);
bool equivalent(const gauss_diagram& a, const gauss_diagram& b);

// The n-component diagram with no arrows (components based by default).
gauss_diagram empty_diagram(int n_components, bool based = true);

}  // namespace trilink

#endif
