#pragma once

// Plain-text instance files.
//
//   QSPP 1
//   n <vertices>
//   m <arcs>
//   s <source>
//   t <target>
//   arc <id> <head> <tail>        (m lines, ids 0 .. m-1 in order)
//   c
//   <m rationals>
//   Q sparse <k>                  followed by k lines "<e> <f> <value>",
//                                 each setting q_ef and q_fe
//   Q dense                       followed by m rows of m rationals
//
// Rationals are written as bare integers or "p/q". Tokens are separated by
// arbitrary whitespace; lines starting with '#' are comments.

#include <string>
#include <string_view>

#include "qspp/instance.hpp"

namespace qspp {

/// Sparse Q when it is symmetric with zero diagonal, dense otherwise. Arc
/// labels are not written.
std::string write_instance(const QsppInstance& inst);

/// Throws ParseError with the offending token position.
QsppInstance read_instance(std::string_view text);

/// File helpers; throw std::runtime_error when the file cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

/// Linear cost vector in the "c" block syntax: "c" and one line of values.
std::string format_cost_vector(const CostVector& c);

}  // namespace qspp
