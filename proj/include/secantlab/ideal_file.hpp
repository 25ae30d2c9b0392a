#ifndef SECANTLAB_IDEAL_FILE_HPP
#define SECANTLAB_IDEAL_FILE_HPP

// Plain-text ideal description:
//
//   # comment
//   field: 32003
//   vars: x y z w
//   x*z - y^2
//   x*w - y*z
//
// "field" is optional (default prime), "vars" is required and must precede
// the generators, one generator per line.

#include <optional>
#include <sstream>
#include <string>

#include "secantlab/groebner.hpp"

namespace secantlab {

inline Ideal parse_ideal_file(const std::string& text, std::optional<std::uint64_t> prime = std::nullopt) {
  std::uint64_t p = kDefaultPrime;
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::size_t here = offset;
    offset += line.size() + 1;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      if (names.empty()) throw ParseError(here + first, "generator before 'vars:' line");
      lines.emplace_back(here, line);
      continue;
    }
    std::string key = line.substr(first, colon - first);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    std::istringstream value(line.substr(colon + 1));
    if (key == "field") {
      long long v = 0;
      std::string rest;
      if (!(value >> v) || v < 2 || (value >> rest)) throw ParseError(here + colon + 1, "expected a prime after 'field:'");
      p = static_cast<std::uint64_t>(v);
    } else if (key == "vars") {
      if (!names.empty()) throw ParseError(here + first, "duplicate 'vars:' line");
      std::string v;
      while (value >> v) {
        for (char& c : v)
          if (c == ',') c = ' ';
        std::istringstream parts(v);
        std::string part;
        while (parts >> part) names.push_back(part);
      }
      if (names.empty()) throw ParseError(here + colon + 1, "'vars:' needs at least one variable");
    } else {
      throw ParseError(here + first, "unknown key '" + key + "'");
    }
  }
  if (names.empty()) throw ParseError(offset, "missing 'vars:' line");
  if (prime) p = *prime;
  RingPtr R = make_ring(std::move(names), p);
  std::vector<Polynomial> gens;
  for (const auto& [at, src] : lines) {
    try {
      gens.push_back(parse_polynomial(src, R));
    } catch (const ParseError& e) {
      throw ParseError(at + e.offset(), e.reason());
    }
  }
  return Ideal(R, std::move(gens));
}

}  // namespace secantlab

#endif  // SECANTLAB_IDEAL_FILE_HPP
