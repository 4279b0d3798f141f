#pragma once

// Text forms used by the CLI and configs.
//
//   word    := letter (' '+ letter)*         read cyclically
//   letter  := label exp? ':' perm exp?      exp is ' (conjugate transpose), at most once
//   perm    := 'I' | 'T' | 'G(' theta ',' b ',' d ')'      theta in {1, -1}
//   pattern := "1*1*" | "uu*uu*" | "a a* b b*"
//   spec    := 't=' theta (',b=' size)? (',d=' size)?       an omitted size is N / other
//   size    := integer | 'N' | 'N/' k | 'N^' alpha | 'N^(' p '/' q ')' | '{' N ':' v (';' N ':' v)* '}'
//   grid    := integer (',' integer)*
//
// Errors are ParseError with the 0-based column of the offending character.

#include <cstddef>
#include <string>
#include <vector>

#include "ptlab/freeness.hpp"
#include "ptlab/moments.hpp"

namespace ptlab::grammar {

perms::EntryPermutation parse_perm(const std::string& text, std::size_t n);
moments::Word parse_word(const std::string& text, std::size_t n);
moments::Pattern parse_pattern(const std::string& text);
freeness::SizeExpr parse_size(const std::string& text);
freeness::TransposeSpec parse_transpose_spec(const std::string& text);
std::vector<std::size_t> parse_grid(const std::string& text);

}  // namespace ptlab::grammar
