#ifndef TRILINK_PERMUTATION_HPP
#define TRILINK_PERMUTATION_HPP

#include <array>
#include <stdexcept>
#include <string>

namespace trilink {

// A permutation of {1,2,3}, written as the image tuple (s(1), s(2), s(3)).
// Used to bind the pattern circle placeholders (i, j, k) to components:
// circle i -> component s(1), circle j -> s(2), circle k -> s(3).
struct permutation {
    std::array<int, 3> image{1, 2, 3};

    int operator()(int x) const { return image[x - 1]; }

    int parity() const {
        int inversions = 0;
        for (int x = 0; x < 3; ++x)
            for (int y = x + 1; y < 3; ++y)
                if (image[x] > image[y]) ++inversions;
        return inversions % 2 == 0 ? +1 : -1;
    }

    bool is_valid() const {
        int seen = 0;
        for (int v : image) {
            if (v < 1 || v > 3) return false;
            seen |= 1 << v;
        }
        return seen == 0b1110;
    }

    // Composition (this after other): (a*b)(x) = a(b(x)).
    permutation after(const permutation& other) const {
        permutation r;
        for (int x = 1; x <= 3; ++x) r.image[x - 1] = (*this)(other(x));
        return r;
    }

    // Cycle-style display name: "id", "(12)", "(123)", ...
    std::string name() const;

    friend bool operator==(const permutation& a, const permutation& b) {
        return a.image == b.image;
    }
    friend bool operator<(const permutation& a, const permutation& b) {
        return a.image < b.image;
    }
};

// All of S3 in a fixed order: id, (123), (132), (12), (13), (23).
// The first three are even, the last three odd.
const std::array<permutation, 6>& s3();
const std::array<permutation, 3>& s3_even();
const std::array<permutation, 3>& s3_odd();

// Lookup by display name ("id", "(12)", ...). Throws on unknown names.
permutation permutation_by_name(const std::string& name);

}  // namespace trilink

#endif
