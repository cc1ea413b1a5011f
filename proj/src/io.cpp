#include "hx/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>

namespace hx {

using nlohmann::json;

const int kReportFormatVersion = 1;

namespace {

json require_field(const json& doc, const char* key) {
  if (!doc.contains(key))
    throw input_error(std::string("structure document: missing field '") +
                      key + "'");
  return doc.at(key);
}

std::uint32_t small_uint(const json& v, const char* key) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() < 2 ||
      v.get<std::uint64_t>() > 16)
    throw input_error(std::string("structure document: '") + key +
                      "' must be an integer in [2, 16]");
  return v.get<std::uint32_t>();
}

std::string tuple_text(const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out + ")";
}

}  // namespace

FiniteHyperring load_structure_json(const json& doc, std::string* name_out) {
  if (!doc.is_object())
    throw input_error("structure document: expected an object");
  const std::uint32_t m = small_uint(require_field(doc, "m"), "m");
  const std::uint32_t n = small_uint(require_field(doc, "n"), "n");
  const json jelems = require_field(doc, "elements");
  if (!jelems.is_array() || jelems.empty())
    throw input_error("structure document: 'elements' must be a nonempty list");
  std::vector<std::string> labels;
  std::map<std::string, Elem> index;
  for (const auto& je : jelems) {
    if (!je.is_string())
      throw input_error("structure document: element names must be strings");
    const std::string name = je.get<std::string>();
    if (index.count(name))
      throw input_error("structure document: duplicate element '" + name +
                        "'");
    index[name] = static_cast<Elem>(labels.size());
    labels.push_back(name);
  }
  if (labels.size() > 64)
    throw input_error("structure document: more than 64 elements");
  const std::uint32_t size = static_cast<std::uint32_t>(labels.size());

  auto resolve = [&](const json& jname) {
    if (!jname.is_string() || !index.count(jname.get<std::string>()))
      throw input_error("structure document: unknown element '" +
                        (jname.is_string() ? jname.get<std::string>()
                                           : jname.dump()) +
                        "'");
    return index.at(jname.get<std::string>());
  };
  const Elem zero = resolve(require_field(doc, "zero"));
  const Elem one = resolve(require_field(doc, "one"));

  auto row_args = [&](const json& row, std::uint32_t arity) {
    const json jargs = require_field(row, "args");
    if (!jargs.is_array() || jargs.size() != arity)
      throw input_error("structure document: row args must list exactly " +
                        std::to_string(arity) + " elements");
    std::vector<Elem> args;
    for (const auto& ja : jargs) args.push_back(resolve(ja));
    return args;
  };
  auto fold_index = [&](const std::vector<Elem>& args) {
    std::size_t idx = 0;
    for (Elem a : args) idx = idx * size + a;
    return idx;
  };
  auto names_of = [&](const std::vector<Elem>& args) {
    std::vector<std::string> out;
    for (Elem a : args) out.push_back(labels[a]);
    return out;
  };

  // Expand each row over all permutations of its argument multiset;
  // a permutation already filled with a different value is a conflict.
  std::size_t f_count = 1;
  for (std::uint32_t i = 0; i < m; ++i) f_count *= size;
  std::vector<Subset> f_table(f_count, Subset(size, 0));
  std::vector<bool> f_set(f_count, false);
  for (const auto& row : require_field(doc, "f")) {
    std::vector<Elem> args = row_args(row, m);
    const json jval = require_field(row, "value");
    if (!jval.is_array() || jval.empty())
      throw input_error("structure document: f value must be a nonempty list");
    Subset value = Subset::empty_set(size);
    for (const auto& jv : jval) value.add(resolve(jv));
    std::vector<Elem> perm = args;
    std::sort(perm.begin(), perm.end());
    do {
      const std::size_t idx = fold_index(perm);
      if (f_set[idx] && !(f_table[idx] == value))
        throw input_error("structure document: conflicting f rows at " +
                          tuple_text(names_of(perm)));
      f_table[idx] = value;
      f_set[idx] = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::size_t g_count = 1;
  for (std::uint32_t i = 0; i < n; ++i) g_count *= size;
  std::vector<Elem> g_table(g_count, 0);
  std::vector<bool> g_set(g_count, false);
  for (const auto& row : require_field(doc, "g")) {
    std::vector<Elem> args = row_args(row, n);
    const Elem value = resolve(require_field(row, "value"));
    std::vector<Elem> perm = args;
    std::sort(perm.begin(), perm.end());
    do {
      const std::size_t idx = fold_index(perm);
      if (g_set[idx] && g_table[idx] != value)
        throw input_error("structure document: conflicting g rows at " +
                          tuple_text(names_of(perm)));
      g_table[idx] = value;
      g_set[idx] = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  auto check_total = [&](const std::vector<bool>& filled, std::uint32_t arity,
                         const char* table) {
    for_each_tuple(size, arity, [&](std::span<const Elem> t) {
      std::vector<Elem> args(t.begin(), t.end());
      if (!filled[fold_index(args)])
        throw input_error(std::string("structure document: ") + table +
                          " row missing for " + tuple_text(names_of(args)));
    });
  };
  check_total(f_set, m, "f");
  check_total(g_set, n, "g");

  if (name_out) {
    *name_out = doc.contains("name") && doc.at("name").is_string()
                    ? doc.at("name").get<std::string>()
                    : std::string("structure");
  }
  return FiniteHyperring(m, n, size, std::move(f_table), std::move(g_table),
                         zero, one, std::move(labels));
}

FiniteHyperring load_structure_file(const std::string& path,
                                    std::string* name_out) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open structure file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw input_error("structure file " + path + ": " + e.what());
  }
  return load_structure_json(doc, name_out);
}

json emit_structure(const FiniteHyperring& h, const std::string& name) {
  const std::uint32_t size = h.size();
  auto canon = [](Elem a) { return "a" + std::to_string(a); };
  json doc;
  doc["name"] = name;
  doc["m"] = h.m();
  doc["n"] = h.n();
  json elems = json::array();
  json name_map = json::object();
  for (Elem a = 0; a < size; ++a) {
    elems.push_back(canon(a));
    name_map[canon(a)] = h.label(a);
  }
  doc["elements"] = std::move(elems);
  doc["name_map"] = std::move(name_map);
  doc["zero"] = canon(h.zero());
  doc["one"] = canon(h.one());

  json frows = json::array();
  json grows = json::array();
  auto emit_rows = [&](std::uint32_t arity, auto&& fn) {
    for_each_tuple(size, arity, [&](std::span<const Elem> t) {
      // One row per multiset: keep only non-decreasing tuples.
      for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i - 1] > t[i]) return;
      std::vector<Elem> args(t.begin(), t.end());
      json row;
      json jargs = json::array();
      for (Elem a : args) jargs.push_back(canon(a));
      row["args"] = std::move(jargs);
      fn(args, row);
    });
  };
  emit_rows(h.m(), [&](const std::vector<Elem>& args, json& row) {
    json val = json::array();
    h.f(args).for_each([&](Elem e) { val.push_back(canon(e)); });
    row["value"] = std::move(val);
    frows.push_back(std::move(row));
  });
  emit_rows(h.n(), [&](const std::vector<Elem>& args, json& row) {
    row["value"] = canon(h.g(args));
    grows.push_back(std::move(row));
  });
  doc["f"] = std::move(frows);
  doc["g"] = std::move(grows);
  return doc;
}

Elem resolve_element(const FiniteHyperring& h, const std::string& name) {
  for (Elem a = 0; a < h.size(); ++a)
    if (h.label(a) == name) return a;
  for (Elem a = 0; a < h.size(); ++a)
    if ("a" + std::to_string(a) == name) return a;
  throw input_error("unknown element name: " + name);
}

Subset resolve_subset(const FiniteHyperring& h,
                      const std::vector<std::string>& names) {
  Subset out = Subset::empty_set(h.size());
  for (const auto& name : names) out.add(resolve_element(h, name));
  return out;
}

std::string subset_names(const FiniteHyperring& h, const Subset& x) {
  std::string out = "{";
  bool first = true;
  x.for_each([&](Elem e) {
    if (!first) out += ",";
    out += h.label(e);
    first = false;
  });
  return out + "}";
}

json report_json(const ValidationReport& rep) {
  json doc;
  doc["format_version"] = kReportFormatVersion;
  doc["kind"] = "validation";
  doc["ok"] = rep.ok();
  json viols = json::array();
  for (const auto& v : rep.violations) {
    json jv;
    jv["axiom"] = v.axiom;
    jv["witness"] = v.witness;
    jv["detail"] = v.detail;
    viols.push_back(std::move(jv));
  }
  doc["violations"] = std::move(viols);
  return doc;
}

json report_json(const FiniteHyperring& h, const Classification& cl) {
  json doc;
  doc["format_version"] = kReportFormatVersion;
  doc["kind"] = "classification";
  doc["verdict"] = to_string(cl.verdict);
  doc["ok"] = cl.ok();
  if (cl.witness_s) doc["witness_s"] = h.label(*cl.witness_s);
  if (cl.refutation) {
    json jr;
    json tup = json::array();
    for (Elem e : cl.refutation->tuple) tup.push_back(h.label(e));
    jr["tuple"] = std::move(tup);
    json ideals = json::array();
    for (const auto& I : cl.refutation->ideal_tuple)
      ideals.push_back(subset_names(h, I.members));
    jr["ideal_tuple"] = std::move(ideals);
    jr["s"] = h.label(cl.refutation->s);
    jr["detail"] = cl.refutation->detail;
    doc["refutation"] = std::move(jr);
  }
  return doc;
}

json report_json(const TheoremReport& rep) {
  json doc;
  doc["format_version"] = kReportFormatVersion;
  doc["kind"] = "theorem";
  doc["id"] = rep.id;
  doc["title"] = rep.title;
  doc["total"] = rep.total;
  doc["hypothesis_met"] = rep.hypothesis_met;
  doc["filtered"] = rep.filtered;
  doc["partial"] = rep.partial;
  doc["confirmed"] = rep.confirmed();
  doc["notes"] = rep.notes;
  doc["wall_time_ms"] = rep.wall_time_ms;
  json viols = json::array();
  for (const auto& v : rep.violations) {
    json jv;
    jv["structure"] = v.structure;
    jv["detail"] = v.detail;
    viols.push_back(std::move(jv));
  }
  doc["violations"] = std::move(viols);
  return doc;
}

}  // namespace hx
