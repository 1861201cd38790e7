#pragma once

// JSON and text renderings of verification reports. The JSON layout is
// described by schema/verification_report.schema.json; all numbers are
// exact integers.

#include <ostream>

#include <json.hpp>

#include "chainendo/verify.hpp"

namespace chainendo {

inline nlohmann::json endo_json(const Endo& e) {
  return {{"table", e.table()}, {"runs", format_runs(e)}};
}

inline nlohmann::json to_json(const Bounds& b) {
  nlohmann::json j = {{"n_min", b.n_min}, {"n_max", b.n_max}, {"max_witnesses", b.max_witnesses},
                      {"ceiling", b.ceiling}};
  j["A"] = b.vertices ? nlohmann::json(*b.vertices) : nlohmann::json(nullptr);
  j["l"] = b.lower ? nlohmann::json(*b.lower) : nlohmann::json(nullptr);
  j["m"] = b.upper ? nlohmann::json(*b.upper) : nlohmann::json(nullptr);
  j["p"] = b.p ? nlohmann::json(*b.p) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json to_json(const Witness& w) {
  nlohmann::json endos = nlohmann::json::object();
  for (const auto& [name, e] : w.endos) endos[name] = endo_json(e);
  nlohmann::json j = {{"n", w.n}, {"A", w.vertices}, {"endos", endos}, {"detail", w.detail}};
  j["l"] = w.lower ? nlohmann::json(*w.lower) : nlohmann::json(nullptr);
  j["m"] = w.upper ? nlohmann::json(*w.upper) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const Witness& w : r.witnesses) witnesses.push_back(to_json(w));
  return {{"claim", std::string(to_string(r.claim))},
          {"holds", r.holds()},
          {"searched", r.searched},
          {"violations", r.violations},
          {"witnesses", witnesses},
          {"elapsed_ms", r.elapsed.count()},
          {"bounds", to_json(r.bounds)},
          {"notes", r.notes}};
}

inline void write_witness_text(std::ostream& out, const Witness& w) {
  out << "  witness: n=" << w.n << " A={";
  for (std::size_t i = 0; i < w.vertices.size(); ++i) out << (i ? "," : "") << w.vertices[i];
  out << '}';
  if (w.lower) out << " l=" << *w.lower;
  if (w.upper) out << " m=" << *w.upper;
  out << "\n    " << w.detail << '\n';
  for (const auto& [name, e] : w.endos) {
    out << "    " << name << " = " << format_table(e) << "  " << format_runs(e) << '\n';
  }
}

inline void write_text(std::ostream& out, const VerificationReport& r) {
  out << to_string(r.claim) << ": " << (r.holds() ? "HOLDS" : "VIOLATED") << "  searched=" << r.searched
      << " violations=" << r.violations << " elapsed_ms=" << r.elapsed.count() << '\n';
  for (const Witness& w : r.witnesses) write_witness_text(out, w);
  for (const std::string& note : r.notes) out << "  note: " << note << '\n';
}

}  // namespace chainendo
