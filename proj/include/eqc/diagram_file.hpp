#pragma once

#include "eqc/analysis.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eqc {

struct DiagramOptions {
  std::optional<int> max_degree;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<Polynomial>> hsop;  // elements of H*(BG)

  bool operator==(const DiagramOptions&) const = default;
};

struct ParsedDiagram {
  GroupDiagram diagram;
  DiagramOptions options;
};

// Line-oriented format:
//
//   [diagram]     G, H, K-, K+ as group expressions
//   [embeddings]  H_in_K-, H_in_K+, K-_in_G, K+_in_G:
//                 standard | id | kinds (id, chain, finite per factor) | gen -> poly, ...
//   [quotients]   K-/H, K+/H: S^k or P3
//   [options]     max_degree, format, seed, hsop
//
// `#` starts a comment. Missing embeddings default to `standard`.
ParsedDiagram parse_diagram_text(std::string_view text);
ParsedDiagram parse_diagram(const std::filesystem::path& path);

std::string render_diagram(const ParsedDiagram& parsed);

}  // namespace eqc
