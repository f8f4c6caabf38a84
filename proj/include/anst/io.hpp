#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "anst/cosets.hpp"
#include "anst/weights.hpp"
#include "anst/weyl.hpp"

namespace anst {

// "[3,4,1,2]", "s2*s1*s3*s2" or "e". A word or "e" needs the rank from n.
Permutation parse_permutation(const std::string& text, std::optional<int> n = std::nullopt);
// Components separated by ';'.
MultiWeylElement parse_multi(const std::string& text, std::optional<int> n = std::nullopt);
// "1,3" or "-".
SimpleRootSet parse_root_set(const std::string& text, int n);
BlockSet parse_block_set(const std::string& text, int r, int k);
// "3,1,0,0;2,2,0,0".
IntegralWeight parse_weight(const std::string& text);

std::string word_str(const std::vector<int>& letters);

// Runs one CLI invocation; args excludes the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace anst
