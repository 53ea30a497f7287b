#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qltc {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct shape_error : error {
    using error::error;
};

struct rank_deficient_error : error {
    using error::error;
};

// An enumeration or table would exceed the configured work cap.
struct too_large_error : error {
    using error::error;
};

struct not_commuting_error : error {
    using error::error;
};

// Soundness is undefined when the check matrix has zero image.
struct trivial_code_error : error {
    using error::error;
};

struct bad_parameter_error : error {
    using error::error;
};

struct bad_index_error : error {
    using error::error;
};

// Rejection sampling exhausted its retry budget.
struct sampling_error : error {
    using error::error;
};

struct parse_error : error {
    parse_error(std::size_t line, const std::string& what)
        : error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

struct degree_overflow_error : error {
    using error::error;
};

struct io_error : error {
    using error::error;
};

struct validation_error : error {
    using error::error;
};

}  // namespace qltc
