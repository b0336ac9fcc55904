#include "eqc/diagram_file.hpp"

#include "eqc/error.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace eqc {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

struct Entry {
  std::string value;
  int line = 0;
};

using Section = std::map<std::string, Entry>;

const std::map<std::string, std::vector<std::string>>& allowed_keys() {
  static const std::map<std::string, std::vector<std::string>> keys{
      {"diagram", {"G", "H", "K-", "K+"}},
      {"embeddings", {"H_in_K-", "H_in_K+", "K-_in_G", "K+_in_G"}},
      {"quotients", {"K-/H", "K+/H"}},
      {"options", {"max_degree", "format", "seed", "hsop"}},
  };
  return keys;
}

template <typename F>
auto at_line(int line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    if (e.line() > 0) throw;
    throw ParseError(e.what(), line);
  } catch (const Error& e) {
    throw ParseError(e.what(), line);
  }
}

const Entry& require(const std::map<std::string, Section>& sections, const std::string& section,
                     const std::string& key) {
  auto s = sections.find(section);
  if (s == sections.end()) throw ParseError("missing section [" + section + "]");
  auto k = s->second.find(key);
  if (k == s->second.end()) throw ParseError("missing key '" + key + "' in [" + section + "]");
  return k->second;
}

InclusionKind parse_kind(const std::string& s) {
  if (s == "id" || s == "identity") return InclusionKind::Identity;
  if (s == "chain") return InclusionKind::Chain;
  if (s == "finite") return InclusionKind::FiniteIntoAtom;
  throw ParseError("unknown inclusion kind '" + s + "' (expected id, chain or finite)");
}

Embedding parse_embedding(const std::optional<Entry>& entry, const GroupExpr& sub, const GroupExpr& sup) {
  if (!entry) return standard_embedding(sub, sup);
  return at_line(entry->line, [&]() -> Embedding {
    const std::string& v = entry->value;
    if (v == "standard") return standard_embedding(sub, sup);
    if (v == "id") return identity_embedding(sub, sup);
    if (v.find("->") == std::string::npos) {
      InclusionSpec spec;
      for (const auto& k : split(v, ',')) spec.kinds.push_back(parse_kind(k));
      return kinds_embedding(sub, sup, std::move(spec));
    }
    const GradedRing src = invariant_ring(sup);
    const GradedRing dst = invariant_ring(sub);
    std::vector<std::optional<Polynomial>> images(src.size());
    for (const auto& item : split(v, ',')) {
      const auto arrow = item.find("->");
      if (arrow == std::string::npos) throw ParseError("expected 'gen -> polynomial', got '" + item + "'");
      const std::string name = trim(item.substr(0, arrow));
      auto idx = src.index_of(name);
      if (!idx) throw ParseError("'" + name + "' is not a generator of H*(B" + to_string(sup) + ")");
      if (images[*idx]) throw ParseError("generator '" + name + "' given twice");
      images[*idx] = parse_polynomial(item.substr(arrow + 2), dst);
    }
    std::vector<Polynomial> resolved;
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (!images[i]) throw ParseError("no image given for generator '" + src.generators()[i].name + "'");
      resolved.push_back(std::move(*images[i]));
    }
    return explicit_embedding(sub, sup, std::move(resolved));
  });
}

}  // namespace

ParsedDiagram parse_diagram_text(std::string_view text) {
  std::map<std::string, Section> sections;
  std::string current;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("malformed section header '" + line + "'", line_no);
      current = trim(line.substr(1, line.size() - 2));
      if (!allowed_keys().contains(current)) throw ParseError("unknown section [" + current + "]", line_no);
      if (sections.contains(current)) throw ParseError("duplicate section [" + current + "]", line_no);
      sections[current];
      continue;
    }
    if (current.empty()) throw ParseError("entry outside of any section", line_no);
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto& keys = allowed_keys().at(current);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ParseError("unknown key '" + key + "' in [" + current + "]", line_no);
    }
    if (value.empty()) throw ParseError("empty value for '" + key + "'", line_no);
    if (!sections[current].emplace(key, Entry{value, line_no}).second) {
      throw ParseError("duplicate key '" + key + "'", line_no);
    }
  }

  auto group = [&](const std::string& key) {
    const Entry& e = require(sections, "diagram", key);
    return at_line(e.line, [&] { return parse_group(e.value); });
  };
  auto quotient = [&](const std::string& key) {
    const Entry& e = require(sections, "quotients", key);
    return at_line(e.line, [&] { return parse_quotient(e.value); });
  };
  auto optional_entry = [&](const std::string& section, const std::string& key) -> std::optional<Entry> {
    auto s = sections.find(section);
    if (s == sections.end()) return std::nullopt;
    auto k = s->second.find(key);
    if (k == s->second.end()) return std::nullopt;
    return k->second;
  };

  ParsedDiagram out;
  GroupDiagram& d = out.diagram;
  d.G = group("G");
  d.H = group("H");
  d.Kminus = group("K-");
  d.Kplus = group("K+");
  d.minus_quotient = quotient("K-/H");
  d.plus_quotient = quotient("K+/H");
  d.h_in_kminus = parse_embedding(optional_entry("embeddings", "H_in_K-"), d.H, d.Kminus);
  d.h_in_kplus = parse_embedding(optional_entry("embeddings", "H_in_K+"), d.H, d.Kplus);
  d.kminus_in_g = parse_embedding(optional_entry("embeddings", "K-_in_G"), d.Kminus, d.G);
  d.kplus_in_g = parse_embedding(optional_entry("embeddings", "K+_in_G"), d.Kplus, d.G);

  if (auto e = optional_entry("options", "max_degree")) {
    out.options.max_degree = at_line(e->line, [&] {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(e->value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != e->value.size() || v < 0 || v % 2 != 0) {
        throw ParseError("max_degree must be a nonnegative even integer, got '" + e->value + "'");
      }
      return v;
    });
  }
  if (auto e = optional_entry("options", "format")) {
    if (e->value != "text" && e->value != "json") {
      throw ParseError("format must be text or json, got '" + e->value + "'", e->line);
    }
    out.options.format = e->value;
  }
  if (auto e = optional_entry("options", "seed")) {
    out.options.seed = at_line(e->line, [&] {
      std::size_t used = 0;
      std::uint64_t v = 0;
      try {
        v = std::stoull(e->value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != e->value.size()) throw ParseError("seed must be a nonnegative integer, got '" + e->value + "'");
      return v;
    });
  }
  if (auto e = optional_entry("options", "hsop")) {
    const GradedRing base = invariant_ring(d.G);
    out.options.hsop = at_line(e->line, [&] {
      std::vector<Polynomial> elems;
      for (const auto& item : split(e->value, ',')) elems.push_back(parse_polynomial(item, base));
      return elems;
    });
  }
  return out;
}

ParsedDiagram parse_diagram(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read diagram file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diagram_text(buf.str());
}

namespace {

std::string render_embedding(const Embedding& e) {
  switch (e.source) {
    case Embedding::Source::Standard: return "standard";
    case Embedding::Source::Identity: return "id";
    case Embedding::Source::Kinds: {
      std::string out;
      for (auto k : e.inclusion->kinds) {
        if (!out.empty()) out += ", ";
        out += kind_name(k);
      }
      return out;
    }
    case Embedding::Source::Explicit: {
      std::string out;
      const auto& gens = e.map.source().generators();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!out.empty()) out += ", ";
        out += gens[i].name + " -> " + to_string(e.map.images()[i], e.map.target());
      }
      // A map from the scalars has no generators to list.
      return out.empty() ? "standard" : out;
    }
  }
  return "standard";
}

}  // namespace

std::string render_diagram(const ParsedDiagram& parsed) {
  const GroupDiagram& d = parsed.diagram;
  std::ostringstream out;
  out << "[diagram]\n"
      << "G = " << to_string(d.G) << "\n"
      << "H = " << to_string(d.H) << "\n"
      << "K- = " << to_string(d.Kminus) << "\n"
      << "K+ = " << to_string(d.Kplus) << "\n\n"
      << "[embeddings]\n"
      << "H_in_K- = " << render_embedding(d.h_in_kminus) << "\n"
      << "H_in_K+ = " << render_embedding(d.h_in_kplus) << "\n"
      << "K-_in_G = " << render_embedding(d.kminus_in_g) << "\n"
      << "K+_in_G = " << render_embedding(d.kplus_in_g) << "\n\n"
      << "[quotients]\n"
      << "K-/H = " << to_string(d.minus_quotient) << "\n"
      << "K+/H = " << to_string(d.plus_quotient) << "\n";
  const DiagramOptions& o = parsed.options;
  if (o.max_degree || o.format || o.seed || o.hsop) {
    out << "\n[options]\n";
    if (o.max_degree) out << "max_degree = " << *o.max_degree << "\n";
    if (o.format) out << "format = " << *o.format << "\n";
    if (o.seed) out << "seed = " << *o.seed << "\n";
    if (o.hsop) {
      const GradedRing base = invariant_ring(d.G);
      out << "hsop = ";
      for (std::size_t i = 0; i < o.hsop->size(); ++i) {
        if (i) out << ", ";
        out << to_string((*o.hsop)[i], base);
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace eqc
