#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hx/classify.hpp"
#include "hx/theorems.hpp"

namespace hx {

/// Load a structure document: {name, m, n, elements, zero, one,
/// f: [{args, value[]}], g: [{args, value}]}. Rows may be supplied once
/// per multiset of arguments; the loader expands all permutations.
/// Conflicting or missing rows raise input_error.
FiniteHyperring load_structure_json(const nlohmann::json& doc,
                                    std::string* name_out = nullptr);
FiniteHyperring load_structure_file(const std::string& path,
                                    std::string* name_out = nullptr);

/// Emit a document that round-trips through load_structure_json. Elements
/// are renamed canonically to a0..a{N-1}; the original labels are kept in
/// a name_map field. One row per argument multiset (non-decreasing tuples).
nlohmann::json emit_structure(const FiniteHyperring& h,
                              const std::string& name);

/// Resolve element names against the structure's labels (falling back to
/// canonical a{i} names); unknown names raise input_error.
Elem resolve_element(const FiniteHyperring& h, const std::string& name);
Subset resolve_subset(const FiniteHyperring& h,
                      const std::vector<std::string>& names);

/// Machine report documents. All share a format_version field and sorted
/// keys, so byte-identical runs produce byte-identical files.
extern const int kReportFormatVersion;

nlohmann::json report_json(const ValidationReport& rep);
nlohmann::json report_json(const FiniteHyperring& h, const Classification& cl);
nlohmann::json report_json(const TheoremReport& rep);

std::string subset_names(const FiniteHyperring& h, const Subset& x);

}  // namespace hx
