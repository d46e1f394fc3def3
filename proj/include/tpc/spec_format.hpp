#pragma once

// Line-oriented algebra description files:
//
//   # comment
//   field 2
//   vertex 1
//   arrow a 2 1          # label source target
//   rel g.a              # terms: [k*]arrow(.arrow)*, joined by '+'
//   rel b.c + 2*d.e
//
// Coefficients are reduced mod p.

#include <cstddef>
#include <stdexcept>
#include <string>

#include "tpc/algebra.hpp"

namespace tpc {

class SpecParseError : public std::runtime_error {
public:
    SpecParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

BoundQuiverSpec parse_spec(const std::string& text);
BoundQuiverSpec load_spec_file(const std::string& path);
/// Writes `spec` back in the file format; parse_spec(format_spec(s)) == s.
std::string format_spec(const BoundQuiverSpec& spec);

}  // namespace tpc
