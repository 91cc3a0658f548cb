#pragma once

#include "bp/term.hpp"

#include <string>
#include <string_view>

namespace bp {

class ParseError : public std::runtime_error {
public:
    ParseError(size_t position, std::string expected);

    size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    size_t position_;
    std::string expected_;
};

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := [coeff] factor+
//   factor := 'b' | 'P' nat | '1'
//   coeff  := nat
// 'P' takes its decimal index with no whitespace in between; juxtaposition
// of factors is the (unnormalized) free product; coefficients are reduced
// mod p while the digits are read.
Element parse_expression(std::string_view src, const Prime& p);

}  // namespace bp
