#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>

#include "algebroid/circle.hpp"
#include "algebroid/liealg.hpp"
#include "algebroid/symbol.hpp"

namespace algebroid {

// Every reader throws Error(ParseError) with the line of a syntax error or
// the JSON path of a bad field. Writers emit canonical text: keys sorted,
// two-space indentation, trailing newline, rationals as "p" or "p/q".

LieAlgebra parse_lie_algebra(std::string_view text);
std::string serialize(const LieAlgebra& g);

/// `dim_E` and `action`; the algebra comes from elsewhere.
Representation parse_representation(std::string_view text, const LieAlgebra& g);
std::string serialize(const Representation& r);

struct CircleFile {
  CircleAlgebroid algebroid;
  std::pair<std::size_t, std::size_t> N_range;

  friend bool operator==(const CircleFile&, const CircleFile&) = default;
};

CircleFile parse_circle(std::string_view text);
std::string serialize(const CircleFile& c);

FiberData parse_fiber(std::string_view text);
std::string serialize(const FiberData& f);

/// True when the document is an algebroid file (has a "kind" field).
bool looks_like_circle(std::string_view text);

std::string read_file(const std::filesystem::path& path);

}  // namespace algebroid
