#pragma once

// Text encoding of elements: comma-separated 1-based images with '-' for an
// undefined point, e.g. "2,-,1". The degree is the number of entries.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "vgreen/elements.hpp"
#include "vgreen/enumerate.hpp"
#include "vgreen/errors.hpp"

namespace vgreen {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// 0-based images with undefined_point for '-'; range checked against the
// entry count.
inline std::vector<std::uint8_t> parse_images(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    tokens.push_back(trim(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  const auto n = tokens.size();
  if (n > max_degree) {
    throw ParseError("element has " + std::to_string(n) +
                     " entries; at most " + std::to_string(max_degree) +
                     " supported");
  }
  std::vector<std::uint8_t> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto tok = tokens[i];
    if (tok == "-") {
      images.push_back(undefined_point);
      continue;
    }
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError("entry " + std::to_string(i + 1) + " ('" +
                       std::string(tok) + "') is not a point or '-'");
    }
    if (value < 1 || value > n) {
      throw ParseError("entry " + std::to_string(i + 1) + " = " +
                       std::to_string(value) + " out of range 1.." +
                       std::to_string(n));
    }
    images.push_back(static_cast<std::uint8_t>(value - 1));
  }
  return images;
}

}  // namespace detail

template <Element E>
E parse_element(std::string_view text) {
  return E::from_images(detail::parse_images(text));
}

template <Element E>
std::string format_element(const E& x) {
  std::string out;
  for (std::size_t i = 0; i < x.degree(); ++i) {
    if (i) out += ',';
    if (x.defined_at(i)) {
      out += std::to_string(x[i] + 1);
    } else {
      out += '-';
    }
  }
  return out;
}

}  // namespace vgreen
