#pragma once

#include <stdexcept>
#include <string>

namespace qf {

// Base class for everything thrown on purpose by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mathematically invalid input: failed axioms, non-automorphisms, bad indices.
struct domain_error : error {
    using error::error;
};

// A configured resource bound was exceeded (group closure, chain rank, ...).
struct resource_error : error {
    using error::error;
};

// Malformed text input; carries a 1-based line number when known.
struct parse_error : error {
    int line = 0;
    explicit parse_error(const std::string& msg, int line_no = 0)
        : error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
};

}  // namespace qf
