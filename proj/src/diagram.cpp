#include "trilink/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace trilink {

int gauss_diagram::find_arrow(std::string_view id) const {
    for (int i = 0; i < arrow_count(); ++i)
        if (arrows[i].id == id) return i;
    return -1;
}

endpoint_table::endpoint_table(const gauss_diagram& d) {
    auto violations = validate(d);
    if (!violations.empty())
        throw std::invalid_argument("endpoint_table: invalid diagram: " + violations.front());
    slots_.resize(d.components.size());
    for (size_t c = 0; c < d.components.size(); ++c)
        slots_[c].resize(d.components[c].size);
    for (int a = 0; a < d.arrow_count(); ++a) {
        const arrow& ar = d.arrows[a];
        slots_[ar.tail.component - 1][ar.tail.position] = {a, false};
        slots_[ar.head.component - 1][ar.head.position] = {a, true};
    }
}

std::vector<std::string> validate(const gauss_diagram& d) {
    std::vector<std::string> out;
    const int nc = d.component_count();
    for (int c = 0; c < nc; ++c)
        if (d.components[c].size < 0)
            out.push_back("component " + std::to_string(c + 1) + " has negative size");

    std::set<std::string> ids;
    for (const arrow& a : d.arrows) {
        if (a.id.empty()) out.push_back("arrow with empty id");
        if (!ids.insert(a.id).second) out.push_back("duplicate arrow id '" + a.id + "'");
        if (a.sign != +1 && a.sign != -1)
            out.push_back("arrow '" + a.id + "' has sign outside {+1,-1}");
        if (a.tail == a.head)
            out.push_back("arrow '" + a.id + "' has coincident tail and head");
        for (const endpoint* e : {&a.tail, &a.head}) {
            if (e->component < 1 || e->component > nc) {
                out.push_back("arrow '" + a.id + "' references missing component " +
                              std::to_string(e->component));
            } else if (e->position < 0 || e->position >= d.components[e->component - 1].size) {
                out.push_back("arrow '" + a.id + "' has dangling endpoint " +
                              std::to_string(e->component) + ":" + std::to_string(e->position));
            }
        }
    }

    // Every in-range slot must be hit exactly once.
    std::map<std::pair<int, int>, int> hits;
    for (const arrow& a : d.arrows)
        for (const endpoint* e : {&a.tail, &a.head})
            if (e->component >= 1 && e->component <= nc && e->position >= 0 &&
                e->position < d.components[e->component - 1].size)
                ++hits[{e->component, e->position}];
    for (int c = 1; c <= nc; ++c)
        for (int p = 0; p < d.components[c - 1].size; ++p) {
            auto it = hits.find({c, p});
            int n = it == hits.end() ? 0 : it->second;
            if (n == 0)
                out.push_back("unused slot " + std::to_string(c) + ":" + std::to_string(p));
            else if (n > 1)
                out.push_back("slot " + std::to_string(c) + ":" + std::to_string(p) +
                              " used " + std::to_string(n) + " times");
        }
    return out;
}

gauss_diagram mirror(const gauss_diagram& d) {
    gauss_diagram m = d;
    for (arrow& a : m.arrows) {
        std::swap(a.tail, a.head);
        a.sign = -a.sign;
    }
    return m;
}

gauss_diagram crossing_change(const gauss_diagram& d, std::string_view id) {
    int idx = d.find_arrow(id);
    if (idx < 0)
        throw std::invalid_argument("crossing_change: unknown crossing id '" + std::string(id) +
                                    "'");
    gauss_diagram r = d;
    std::swap(r.arrows[idx].tail, r.arrows[idx].head);
    r.arrows[idx].sign = -r.arrows[idx].sign;
    return r;
}

gauss_diagram move_base_point(const gauss_diagram& d, int component, slide dir) {
    if (component < 1 || component > d.component_count())
        throw std::invalid_argument("move_base_point: no component " + std::to_string(component));
    const component_info& info = d.components[component - 1];
    if (!info.based)
        throw std::invalid_argument("move_base_point: component " + std::to_string(component) +
                                    " is closed");
    const int n = info.size;
    if (n == 0) return d;  // flagged no-op

    gauss_diagram r = d;
    for (arrow& a : r.arrows)
        for (endpoint* e : {&a.tail, &a.head})
            if (e->component == component) {
                if (dir == slide::forward)
                    e->position = (e->position + n - 1) % n;
                else
                    e->position = (e->position + 1) % n;
            }
    return r;
}

gauss_diagram canonical(const gauss_diagram& d) {
    gauss_diagram c = d;
    std::sort(c.arrows.begin(), c.arrows.end(),
              [](const arrow& a, const arrow& b) { return a.tail < b.tail; });
    for (size_t i = 0; i < c.arrows.size(); ++i) c.arrows[i].id = std::to_string(i + 1);
    return c;
}

bool equivalent(const gauss_diagram& a, const gauss_diagram& b) {
    return canonical(a) == canonical(b);
}

gauss_diagram empty_diagram(int n_components, bool based) {
    gauss_diagram d;
    d.components.assign(n_components, component_info{based, 0});
    return d;
}

}  // namespace trilink
