#include "trilink/permutation.hpp"

namespace trilink {

namespace {
const std::array<permutation, 6> k_s3 = {{
    {{1, 2, 3}},  // id
    {{2, 3, 1}},  // (123)
    {{3, 1, 2}},  // (132)
    {{2, 1, 3}},  // (12)
    {{3, 2, 1}},  // (13)
    {{1, 3, 2}},  // (23)
}};
const std::array<permutation, 3> k_even = {{k_s3[0], k_s3[1], k_s3[2]}};
const std::array<permutation, 3> k_odd = {{k_s3[3], k_s3[4], k_s3[5]}};
const std::array<const char*, 6> k_names = {"id", "(123)", "(132)", "(12)", "(13)", "(23)"};
}  // namespace

const std::array<permutation, 6>& s3() { return k_s3; }
const std::array<permutation, 3>& s3_even() { return k_even; }
const std::array<permutation, 3>& s3_odd() { return k_odd; }

std::string permutation::name() const {
    for (size_t i = 0; i < k_s3.size(); ++i)
        if (k_s3[i] == *this) return k_names[i];
    throw std::logic_error("permutation:::name: not a permutation of {1,2,3}");
}

permutation permutation_by_name(const std::string& name) {
    for (size_t i = 0; i < k_s3.size(); ++i)
        if (name == k_names[i]) return k_s3[i];
    throw std::invalid_argument("unknown permutation name: '" + name + "'");
}

}  // namespace trilink
