#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gapped/core.hpp"
#include "gapped/runs.hpp"

namespace gapped {

enum class InputFormat { Bytes, Ints };

InputFormat parse_input_format(std::string_view name);

// Throw std::runtime_error on unreadable input and std::invalid_argument on malformed integers.
Word parse_word(std::string_view data, InputFormat format);
Word read_word(std::istream& in, InputFormat format);
Word read_word_file(const std::string& path, InputFormat format);

// bLeft \t armLen \t gapLen \n per record.
std::string format_tsv(const std::vector<GappedRepeat>& items);
std::string format_tsv(const std::vector<GappedPalindrome>& items);

// Exact decimal when it terminates within 6 places, else rounded to 6 places.
std::string format_rational(const Rational& r);

}  // namespace gapped
