#ifndef TRILINK_BOUQUET_HPP
#define TRILINK_BOUQUET_HPP

#include <map>
#include <string>
#include <vector>

#include "trilink/diagram.hpp"

namespace trilink {

// A based flat-vertex 3-bouquet graph, presented combinatorially: the vertex
// Gauss word read around the disk boundary from the base point (six letters,
// each of the three edge letters twice), plus the crossing traversal of each
// loop read from its first occurrence in the word to its second.
struct traversal_token {
    bool over = true;  // O = over-passage, U = under-passage
    std::string id;
    int sign = +1;

    friend bool operator==(const traversal_token& a, const traversal_token& b) {
        return a.over == b.over && a.id == b.id && a.sign == b.sign;
    }
};

struct bouquet_presentation {
    std::vector<char> vertex_word;                        // length 6
    std::map<char, std::vector<traversal_token>> edges;  // letter -> traversal

    friend bool operator==(const bouquet_presentation& a, const bouquet_presentation& b) {
        return a.vertex_word == b.vertex_word && a.edges == b.edges;
    }
};

// Checks: the word is a Gauss word on the three edge letters, every crossing
// id occurs exactly once as O and once as U with equal signs.
std::vector<std::string> validate_bouquet(const bouquet_presentation& b);

// Compiles to a based 3-component Gauss diagram: components ordered by first
// occurrence in the vertex word, oriented first-to-second occurrence, each
// based at the cut through the flat vertex.
gauss_diagram compile_bouquet(const bouquet_presentation& b);

// Moves the base point on the disk boundary: rotates the vertex word left by
// `shift`. A letter whose occurrences straddle the cut changes orientation:
// its traversal reverses, and crossings with exactly one passage on a
// reversed edge change sign.
bouquet_presentation cyclic_rebase(const bouquet_presentation& b, int shift);

// Switches every crossing (O and U passages swap roles, signs negate);
// compiles to the mirror image of compile_bouquet(b).
bouquet_presentation bouquet_mirror(const bouquet_presentation& b);

// File format:
//   bouquet
//   vertex: <l1> <l2> <l3> <l4> <l5> <l6>
//   edge <letter>: <tok> <tok> ...
// with the gauss-code token grammar. Serialization emits edge lines in
// first-occurrence order.
bouquet_presentation parse_bouquet(const std::string& text);
std::string serialize_bouquet(const bouquet_presentation& b);
bouquet_presentation load_bouquet_file(const std::string& path);

}  // namespace trilink

#endif
