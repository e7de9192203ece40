#ifndef SRR_MATRIX_FILE_HPP
#define SRR_MATRIX_FILE_HPP

#include <string>
#include <string_view>

#include "srr/generator_matrix.hpp"

namespace srr {

/**
 * Text format:
 *
 *     # comment
 *     q k n [p e c_0 ... c_e]
 *     k rows of n element codes
 *
 * The bracketed part selects F_{p^e} with modulus c_0 + c_1 x + ... + c_e x^e
 * and is required when q is not prime.  Blank lines and everything after '#'
 * are ignored.  Throws ParseError naming the line, or the field and matrix
 * validation errors.
 */
GeneratorMatrix parse_matrix_file(std::string_view text);

/// Reads and parses a file; ParseError when it cannot be opened.
GeneratorMatrix load_matrix_file(const std::string& path, std::string* contents = nullptr);

}   // namespace srr

#endif
