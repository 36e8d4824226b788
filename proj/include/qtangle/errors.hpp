#pragma once

#include <stdexcept>
#include <string>

namespace qtangle {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct wrong_length : error {
    using error::error;
};
struct not_normalizable : error {
    using error::error;
};
struct norm_too_far_off : error {
    using error::error;
};
struct qubit_out_of_range : error {
    using error::error;
};
struct hermiticity_violated : error {
    using error::error;
};
struct wrong_qubit_count : error {
    using error::error;
};
struct equal_indices : error {
    using error::error;
};
struct repeated_indices : error {
    using error::error;
};
struct size_mismatch : error {
    using error::error;
};
struct unknown_name : error {
    using error::error;
};
struct bad_parameters : error {
    using error::error;
};

}  // namespace qtangle
