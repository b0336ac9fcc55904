#include "eqc/report.hpp"

#include <sstream>

namespace eqc {

using nlohmann::ordered_json;

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Analyze: return "analyze";
    case Command::Hilbert: return "hilbert";
    case Command::Kernel: return "kernel";
    case Command::CheckFormality: return "check-formality";
    case Command::Basis: return "basis";
  }
  return "?";
}

namespace {

std::string embedding_source(const Embedding& e) {
  switch (e.source) {
    case Embedding::Source::Standard: return "standard";
    case Embedding::Source::Identity: return "id";
    case Embedding::Source::Kinds: return "kinds";
    case Embedding::Source::Explicit: return "explicit";
  }
  return "?";
}

ordered_json embedding_json(const Embedding& e) {
  ordered_json images = ordered_json::object();
  const auto& gens = e.map.source().generators();
  for (std::size_t i = 0; i < gens.size(); ++i) images[gens[i].name] = to_string(e.map.images()[i], e.map.target());
  return {{"source", embedding_source(e)}, {"images", images}};
}

ordered_json element_json(const KernelElement& v, const ModuleSetup& s) {
  return {{"degree", v.degree}, {"element", to_string(v, s)}};
}

ordered_json sequence_json(const std::vector<Polynomial>& seq, const GradedRing& base) {
  ordered_json out = ordered_json::array();
  for (const auto& z : seq) out.push_back(to_string(z, base));
  return out;
}

ordered_json kernel_json(const KernelAnalysis& ka, Command command) {
  const KernelModule& km = ka.module;
  const ModuleSetup& s = km.setup();
  ordered_json k;
  k["applicable"] = true;
  k["max_degree"] = km.max_degree();

  ordered_json degrees = ordered_json::array();
  for (const auto& row : ka.splitting.degrees) {
    degrees.push_back({{"degree", row.degree},
                       {"left", row.left},
                       {"right", row.right},
                       {"bottom", row.bottom},
                       {"kernel", row.kernel},
                       {"surjective", row.surjective},
                       {"dimension_identity", row.dimension_identity}});
  }
  k["splitting"] = {{"surjective", ka.splitting.surjective},
                    {"dimension_identity", ka.splitting.dimension_identity},
                    {"degrees", degrees}};

  ordered_json dims = ordered_json::array();
  for (int d = 0; d <= km.max_degree(); d += 2) dims.push_back(km.slice_dim(d));
  k["slice_dims"] = dims;

  if (command == Command::Kernel || command == Command::Analyze) {
    ordered_json slices = ordered_json::array();
    for (int d = 0; d <= km.max_degree(); d += 2) {
      ordered_json basis = ordered_json::array();
      for (const auto& v : km.slice_elements(d)) basis.push_back(to_string(v, s));
      slices.push_back({{"degree", d}, {"dim", km.slice_dim(d)}, {"basis", basis}});
    }
    k["slices"] = slices;
  }

  if (command != Command::Kernel) {
    ordered_json gens = ordered_json::array();
    for (const auto& g : ka.generators) gens.push_back(element_json(g, s));
    k["generators"] = gens;
  }

  if (ka.freeness && command != Command::Kernel) {
    const FreenessResult& f = *ka.freeness;
    ordered_json fr;
    fr["verdict"] = verdict_name(f.verdict);
    fr["up_to_degree"] = f.max_degree;
    ordered_json basis_degrees = ordered_json::array();
    ordered_json basis = ordered_json::array();
    for (const auto& b : f.basis) {
      basis_degrees.push_back(b.degree);
      basis.push_back(element_json(b, s));
    }
    fr["basis_degrees"] = basis_degrees;
    fr["basis"] = basis;
    fr["first_mismatch"] = f.first_mismatch ? ordered_json(*f.first_mismatch) : ordered_json(nullptr);
    if (f.witness) {
      fr["witness"] = {{"element", to_string(f.witness->element, s)},
                       {"degree", f.witness->element.degree},
                       {"annihilator", to_string(f.witness->annihilator, s.base)},
                       {"verified_by_substitution", ka.witness_verified.value_or(false)}};
    } else {
      fr["witness"] = nullptr;
    }
    k["freeness"] = fr;
  }

  if (command == Command::Hilbert || command == Command::Analyze || command == Command::Basis) {
    ordered_json h;
    h["coefficients"] = ka.hilbert.truncated;
    if (ka.hilbert.closed_form) {
      h["closed_form"] = format_closed_form(*ka.hilbert.closed_form);
      h["numerator"] = ka.hilbert.closed_form->numerator;
      h["denominator"] = ka.hilbert.closed_form->denominator;
    } else {
      h["closed_form"] = nullptr;
    }
    k["hilbert"] = h;
  }

  if (command == Command::Analyze && !ka.cm_attempts.empty()) {
    ordered_json attempts = ordered_json::array();
    for (const auto& a : ka.cm_attempts) {
      ordered_json entry{{"attempt", a.attempt},
                         {"sequence", sequence_json(a.elements, s.base)},
                         {"verified", a.result.verified},
                         {"length", a.result.length},
                         {"horizon", a.result.horizon}};
      if (a.result.failure) {
        entry["failure"] = {{"index", a.result.failure->index + 1},
                            {"degree", a.result.failure->degree},
                            {"element", to_string(a.result.failure->element, s)}};
      } else {
        entry["failure"] = nullptr;
      }
      attempts.push_back(entry);
    }
    const auto& last = ka.cm_attempts.back();
    k["cohen_macaulay"] = {{"verified", last.result.verified},
                           {"length", last.result.length},
                           {"horizon", last.result.horizon},
                           {"sequence", sequence_json(last.elements, s.base)},
                           {"attempts", attempts}};
  }

  if (ka.oracle) {
    k["oracle"] = {{"max_degree", ka.oracle->max_degree},
                   {"agrees", ka.oracle->agrees},
                   {"mismatched_degrees", ka.oracle->mismatched_degrees}};
  }
  return k;
}

}  // namespace

ordered_json to_json(const AnalysisReport& r, Command command) {
  const ValidatedDiagram& v = r.validated;
  const GroupDiagram& d = v.diagram;
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command_name(command);
  j["diagram"] = {{"G", to_string(d.G)},
                  {"H", to_string(d.H)},
                  {"K-", to_string(d.Kminus)},
                  {"K+", to_string(d.Kplus)},
                  {"quotients", {{"K-/H", to_string(d.minus_quotient)}, {"K+/H", to_string(d.plus_quotient)}}},
                  {"embeddings",
                   {{"H_in_K-", embedding_json(d.h_in_kminus)},
                    {"H_in_K+", embedding_json(d.h_in_kplus)},
                    {"K-_in_G", embedding_json(d.kminus_in_g)},
                    {"K+_in_G", embedding_json(d.kplus_in_g)}}}};
  j["ranks"] = {{"G", rank(d.G)}, {"H", rank(d.H)}, {"K-", rank(d.Kminus)}, {"K+", rank(d.Kplus)}};
  j["normalization"] = {{"swapped", v.swapped}, {"b", v.rank_kminus}, {"rank_K+", v.rank_kplus}};
  j["case"] = case_name(r.case_label);
  j["formality"] = {{"formal", r.formality.formal},
                    {"max_isotropy_rank", r.formality.max_isotropy_rank},
                    {"rank_G", r.formality.rank_g}};
  j["krull_dimension"] = r.formality.krull_dimension;

  ordered_json pcs = ordered_json::array();
  for (const auto& pc : r.poincare_checks) {
    pcs.push_back({{"quotient", pc.label},
                   {"rank_drop", pc.rank_drop},
                   {"surjective", pc.surjectivity.surjective},
                   {"up_to_degree", r.options.max_degree}});
  }
  j["poincare_checks"] = pcs;

  if (command != Command::CheckFormality) {
    if (r.kernel) {
      j["kernel"] = kernel_json(*r.kernel, command);
    } else {
      j["kernel"] = {{"applicable", false}, {"note", r.kernel_note}};
    }
  }

  j["issues"] = r.issues;
  ordered_json diag{{"max_degree", r.options.max_degree}, {"seed", r.options.seed}, {"oracle", r.options.oracle}};
  if (r.elapsed_ms) diag["elapsed_ms"] = *r.elapsed_ms;
  j["diagnostics"] = diag;
  return j;
}

std::string render_json(const ordered_json& report) { return report.dump(2) + "\n"; }

namespace {

std::string join_numbers(const ordered_json& arr) {
  std::string out;
  for (const auto& x : arr) {
    if (!out.empty()) out += " ";
    out += x.dump();
  }
  return out;
}

std::string join_strings(const ordered_json& arr, const char* sep) {
  std::string out;
  for (const auto& x : arr) {
    if (!out.empty()) out += sep;
    out += x.get<std::string>();
  }
  return out;
}

}  // namespace

std::string render_text(const ordered_json& j) {
  std::ostringstream out;
  const std::string command = j.at("command");
  const auto& d = j.at("diagram");
  out << "diagram: G = " << d.at("G").get<std::string>() << ", H = " << d.at("H").get<std::string>()
      << ", K- = " << d.at("K-").get<std::string>() << ", K+ = " << d.at("K+").get<std::string>() << "\n";
  out << "quotients: K-/H = " << d.at("quotients").at("K-/H").get<std::string>()
      << ", K+/H = " << d.at("quotients").at("K+/H").get<std::string>() << "\n";
  const auto& r = j.at("ranks");
  const auto& n = j.at("normalization");
  out << "ranks: G " << r.at("G") << ", H " << r.at("H") << ", K- " << r.at("K-") << ", K+ " << r.at("K+");
  if (n.at("swapped").get<bool>()) out << " (K- and K+ exchanged so that rank K+ <= rank K-)";
  out << "\n";
  out << "b = " << n.at("b") << "\n";
  out << "case: " << j.at("case").get<std::string>() << "\n";

  const auto& f = j.at("formality");
  const int max_rank = f.at("max_isotropy_rank");
  const int rank_g = f.at("rank_G");
  out << "equivariantly formal: " << (f.at("formal").get<bool>() ? "yes" : "no") << " (max isotropy rank " << max_rank
      << (max_rank == rank_g ? " = " : " < ") << "rank G " << rank_g << ")\n";
  out << "krull dimension: " << j.at("krull_dimension") << "\n";
  for (const auto& pc : j.at("poincare_checks")) {
    out << "poincare sphere " << pc.at("quotient").get<std::string>() << ": rank drop "
        << (pc.at("rank_drop").get<bool>() ? "ok" : "FAILED") << ", restriction "
        << (pc.at("surjective").get<bool>() ? "surjective" : "NOT surjective") << " up to degree "
        << pc.at("up_to_degree") << "\n";
  }

  if (j.contains("kernel")) {
    const auto& k = j.at("kernel");
    if (!k.at("applicable").get<bool>()) {
      out << "kernel: " << k.at("note").get<std::string>() << "\n";
    } else {
      const int top = k.at("max_degree");
      const auto& sp = k.at("splitting");
      out << "splitting: difference map " << (sp.at("surjective").get<bool>() ? "surjective" : "NOT surjective")
          << " in every even degree <= " << top << "; dim ker = dim left + dim right - dim bottom "
          << (sp.at("dimension_identity").get<bool>() ? "holds" : "FAILS") << "\n";
      if (k.contains("slices")) {
        for (const auto& s : k.at("slices")) {
          out << "slice " << s.at("degree") << ": dim " << s.at("dim");
          if (!s.at("basis").empty()) out << ": " << join_strings(s.at("basis"), ", ");
          out << "\n";
        }
      } else {
        out << "slice dims (even degrees): " << join_numbers(k.at("slice_dims")) << "\n";
      }
      if (k.contains("generators")) {
        out << "generators:\n";
        for (const auto& g : k.at("generators")) {
          out << "  degree " << g.at("degree") << ": " << g.at("element").get<std::string>() << "\n";
        }
      }
      if (k.contains("freeness")) {
        const auto& fr = k.at("freeness");
        out << "freeness: " << fr.at("verdict").get<std::string>() << " up to degree " << fr.at("up_to_degree") << "\n";
        if (fr.at("verdict") == "FREE") out << "basis degrees: " << join_numbers(fr.at("basis_degrees")) << "\n";
        if (!fr.at("witness").is_null()) {
          const auto& w = fr.at("witness");
          out << "torsion witness: " << w.at("annihilator").get<std::string>() << " * "
              << w.at("element").get<std::string>() << " = 0 (substitution check "
              << (w.at("verified_by_substitution").get<bool>() ? "passed" : "FAILED") << ")\n";
        }
      }
      if (k.contains("hilbert")) {
        const auto& h = k.at("hilbert");
        if (!h.at("closed_form").is_null()) out << "hilbert: " << h.at("closed_form").get<std::string>() << "\n";
        out << "hilbert coefficients: " << join_numbers(h.at("coefficients")) << "\n";
      }
      if (k.contains("cohen_macaulay")) {
        const auto& cm = k.at("cohen_macaulay");
        if (cm.at("verified").get<bool>()) {
          out << "cohen-macaulay: regular sequence of length " << cm.at("length") << " verified up to degree "
              << cm.at("horizon") << ": " << join_strings(cm.at("sequence"), ", ") << "\n";
        } else {
          out << "cohen-macaulay: NOT verified\n";
        }
        for (const auto& a : cm.at("attempts")) {
          if (a.at("failure").is_null()) continue;
          const auto& fl = a.at("failure");
          out << "  attempt " << a.at("attempt") << " (" << join_strings(a.at("sequence"), ", ") << "): element "
              << fl.at("index") << " not regular at degree " << fl.at("degree") << " on "
              << fl.at("element").get<std::string>() << "\n";
        }
      }
      if (k.contains("oracle")) {
        const auto& o = k.at("oracle");
        out << "oracle: " << (o.at("agrees").get<bool>() ? "agrees" : "DISAGREES") << " up to degree "
            << o.at("max_degree") << "\n";
      }
    }
  }

  const auto& issues = j.at("issues");
  if (issues.empty()) {
    out << "cross-checks: ok\n";
  } else {
    for (const auto& i : issues) out << "cross-check FAILED: " << i.get<std::string>() << "\n";
  }
  const auto& diag = j.at("diagnostics");
  out << "max degree: " << diag.at("max_degree") << ", seed: " << diag.at("seed");
  if (diag.contains("elapsed_ms")) out << ", elapsed: " << diag.at("elapsed_ms").get<double>() << " ms";
  out << "\n";
  return out.str();
}

}  // namespace eqc
