#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hx/analytic.hpp"
#include "hx/construct.hpp"
#include "hx/io.hpp"
#include "hx/theorems.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_names(std::string csv) {
  // Accept the same surrounding braces the reports print: {a,b} == a,b.
  if (csv.size() >= 2 && csv.front() == '{' && csv.back() == '}')
    csv = csv.substr(1, csv.size() - 2);
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

/// A structure argument is a file path, a builtin id (k3, z<k>), or one of
/// the witness-mode ids (modular(p,k,m,n), unit-interval-max) that only
/// `classify` understands.
hx::FiniteHyperring resolve_structure(const std::string& spec,
                                      std::string* name) {
  if (std::ifstream probe(spec); probe.good())
    return hx::load_structure_file(spec, name);
  if (spec == "k3") {
    if (name) *name = "k3";
    return hx::three_element_demo();
  }
  if (spec.size() > 1 && spec[0] == 'z') {
    try {
      unsigned k = std::stoul(spec.substr(1));
      if (k >= 2 && k <= 64) {
        if (name) *name = spec;
        return hx::ring_zk(k);
      }
    } catch (const std::exception&) {
    }
  }
  throw hx::input_error("not a structure file or builtin id: " + spec);
}

void write_report(const std::string& path, const nlohmann::json& doc) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw hx::input_error("cannot write report file: " + path);
  out << doc.dump(2) << "\n";
}

int cmd_validate(const std::string& structure, const std::string& report_path,
                 bool json_out) {
  std::string name;
  hx::FiniteHyperring h = resolve_structure(structure, &name);
  const hx::ValidationReport& rep = h.validate();
  nlohmann::json doc = hx::report_json(rep);
  doc["structure"] = name;
  write_report(report_path, doc);
  if (json_out) {
    std::cout << doc.dump(2) << "\n";
  } else if (rep.ok()) {
    std::cout << name << ": valid (" << h.size() << " elements, (" << h.m()
              << "," << h.n() << ")-structure)\n";
  } else {
    std::cout << name << ": INVALID\n" << rep.summary();
  }
  return rep.ok() ? kExitOk : kExitPropertyFailure;
}

int cmd_ideals(const std::string& structure, const std::string& report_path,
               bool json_out) {
  std::string name;
  hx::FiniteHyperring h = resolve_structure(structure, &name);
  h.validate();
  h.require_validated();
  auto lattice = hx::enumerate_hyperideals(h, h.size());
  nlohmann::json doc;
  doc["format_version"] = hx::kReportFormatVersion;
  doc["kind"] = "ideals";
  doc["structure"] = name;
  nlohmann::json items = nlohmann::json::array();
  for (const auto& P : lattice) {
    nlohmann::json item;
    item["members"] = hx::subset_names(h, P.members);
    item["proper"] = !(P.members == h.full());
    if (!(P.members == h.full())) {
      item["prime"] = hx::is_prime(h, P);
      item["primary"] = hx::is_primary(h, P);
      item["maximal"] = hx::is_maximal(h, P);
    }
    items.push_back(std::move(item));
  }
  doc["hyperideals"] = std::move(items);
  write_report(report_path, doc);
  if (json_out) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << name << ": " << lattice.size() << " hyperideals\n";
    for (const auto& item : doc["hyperideals"]) {
      std::cout << "  " << item["members"].get<std::string>();
      if (item["proper"].get<bool>()) {
        std::cout << (item["prime"].get<bool>() ? " prime" : "")
                  << (item["primary"].get<bool>() ? " primary" : "")
                  << (item["maximal"].get<bool>() ? " maximal" : "");
      } else {
        std::cout << " (K)";
      }
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_radical(const std::string& structure, const std::string& ideal_csv,
                const std::string& report_path, bool json_out) {
  std::string name;
  hx::FiniteHyperring h = resolve_structure(structure, &name);
  h.validate();
  h.require_validated();
  hx::Hyperideal P{hx::resolve_subset(h, split_names(ideal_csv))};
  hx::AxiomViolation why;
  if (!hx::is_hyperideal(h, P.members, &why))
    throw hx::precondition_error("--ideal is not a hyperideal: " + why.detail);
  hx::Hyperideal by_primes = hx::radical_by_primes(h, P);
  hx::Hyperideal by_powers = hx::radical_by_powers(h, P);
  const bool agree = by_primes == by_powers;
  nlohmann::json doc;
  doc["format_version"] = hx::kReportFormatVersion;
  doc["kind"] = "radical";
  doc["structure"] = name;
  doc["ideal"] = hx::subset_names(h, P.members);
  doc["radical"] = hx::subset_names(h, by_primes.members);
  doc["oracles_agree"] = agree;
  write_report(report_path, doc);
  if (json_out)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << "rad(" << hx::subset_names(h, P.members) << ") = "
              << hx::subset_names(h, by_primes.members)
              << (agree ? "" : "  ORACLE MISMATCH: by powers = " +
                                   hx::subset_names(h, by_powers.members))
              << "\n";
  return agree ? kExitOk : kExitPropertyFailure;
}

int classify_modular(const hx::analytic::ModularStructure& st,
                     const std::string& ideal, const std::string& phi,
                     const std::string& delta,
                     const std::string& report_path, bool json_out) {
  namespace an = hx::analytic;
  an::ModIdeal P = an::mod_parse_ideal(st, ideal);
  an::ModClassification cl = an::mod_classify(st, P, phi, delta);
  nlohmann::json doc;
  doc["format_version"] = hx::kReportFormatVersion;
  doc["kind"] = "classification";
  doc["structure"] = st.id();
  doc["ideal"] = an::mod_ideal_text(st, P);
  doc["verdict"] = hx::to_string(cl.verdict);
  doc["detail"] = cl.detail;
  nlohmann::json tup = nlohmann::json::array();
  for (const auto& v : cl.refutation) tup.push_back(v.str());
  doc["refutation"] = std::move(tup);
  write_report(report_path, doc);
  if (json_out) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << st.id() << " P=" << an::mod_ideal_text(st, P) << " phi=" << phi
              << " delta=" << delta << " S={1}: " << hx::to_string(cl.verdict)
              << "\n";
    if (!cl.refutation.empty()) {
      std::cout << "  witness: (";
      for (std::size_t i = 0; i < cl.refutation.size(); ++i)
        std::cout << (i ? "," : "") << cl.refutation[i].str();
      std::cout << ")\n";
    }
    if (!cl.detail.empty()) std::cout << "  " << cl.detail << "\n";
  }
  return cl.verdict != hx::Verdict::fails ? kExitOk : kExitPropertyFailure;
}

int classify_unit_interval(const std::string& ideal, const std::string& phi,
                           const std::string& delta, const std::string& mulset,
                           const std::string& report_path, bool json_out) {
  namespace an = hx::analytic;
  an::UIInterval P = an::ui_parse_interval(ideal);
  an::UIMulSet S = an::ui_parse_mulset(mulset.empty() ? "{1}" : mulset);
  an::UIClassification cl = an::ui_classify(P, phi, delta, S);
  nlohmann::json doc;
  doc["format_version"] = hx::kReportFormatVersion;
  doc["kind"] = "classification";
  doc["structure"] = "unit-interval-max";
  doc["ideal"] = an::ui_text(P);
  doc["mulset"] = S.text();
  doc["verdict"] = hx::to_string(cl.verdict);
  doc["detail"] = cl.detail;
  doc["disjointness_ok"] = cl.disjointness_ok;
  nlohmann::json tup = nlohmann::json::array();
  for (const auto& r : cl.refutation) tup.push_back(an::rational_text(r));
  doc["refutation"] = std::move(tup);
  write_report(report_path, doc);
  if (json_out) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "unit-interval-max P=" << an::ui_text(P) << " phi=" << phi
              << " delta=" << delta << " S=" << S.text() << ": "
              << hx::to_string(cl.verdict) << "\n";
    if (!cl.detail.empty()) std::cout << "  " << cl.detail << "\n";
  }
  return cl.verdict != hx::Verdict::fails ? kExitOk : kExitPropertyFailure;
}

int cmd_classify(const std::string& structure, const std::string& ideal_csv,
                 const std::string& phi_id, const std::string& delta_id,
                 const std::string& mulset_csv, bool strong,
                 const std::string& report_path, bool json_out) {
  if (auto st = hx::analytic::parse_modular(structure)) {
    if (strong)
      throw hx::input_error("--strong is not available in witness mode");
    return classify_modular(*st, ideal_csv, phi_id, delta_id, report_path,
                            json_out);
  }
  if (structure == "unit-interval-max") {
    if (strong)
      throw hx::input_error("--strong is not available in witness mode");
    return classify_unit_interval(ideal_csv, phi_id, delta_id, mulset_csv,
                                  report_path, json_out);
  }
  std::string name;
  hx::FiniteHyperring h = resolve_structure(structure, &name);
  h.validate();
  h.require_validated();
  hx::Hyperideal P{hx::resolve_subset(h, split_names(ideal_csv))};
  hx::AxiomViolation why;
  if (!hx::is_hyperideal(h, P.members, &why))
    throw hx::precondition_error("--ideal is not a hyperideal: " + why.detail);
  hx::Subset sbits = mulset_csv.empty()
                         ? hx::Subset::singleton(h.size(), h.one())
                         : hx::resolve_subset(h, split_names(mulset_csv));
  if (!hx::is_multiplicative(h, sbits))
    throw hx::precondition_error("--mulset is not multiplicative: " +
                                 hx::subset_names(h, sbits));
  hx::MultiplicativeSet S{sbits};
  hx::IdealMap phi = hx::builtin_phi(phi_id);
  hx::IdealMap delta = hx::builtin_delta(delta_id);
  hx::Classification cl =
      strong ? hx::is_strongly_phi_delta_S_primary(h, P, phi, delta, S)
             : hx::is_phi_delta_S_primary(h, P, phi, delta, S);
  nlohmann::json doc = hx::report_json(h, cl);
  doc["structure"] = name;
  doc["ideal"] = hx::subset_names(h, P.members);
  doc["phi"] = phi_id;
  doc["delta"] = delta_id;
  doc["mulset"] = hx::subset_names(h, sbits);
  doc["strong"] = strong;
  write_report(report_path, doc);
  if (json_out) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << name << " P=" << hx::subset_names(h, P.members)
              << " phi=" << phi_id << " delta=" << delta_id
              << " S=" << hx::subset_names(h, sbits)
              << (strong ? " (strong)" : "") << ": "
              << hx::to_string(cl.verdict) << "\n";
    if (cl.witness_s)
      std::cout << "  associated to s=" << h.label(*cl.witness_s) << "\n";
    if (cl.refutation) std::cout << "  " << cl.refutation->detail << "\n";
  }
  return cl.ok() ? kExitOk : kExitPropertyFailure;
}

int cmd_product(const std::string& file_a, const std::string& file_b,
                const std::string& report_path, bool json_out) {
  std::string name_a, name_b;
  hx::FiniteHyperring h1 = resolve_structure(file_a, &name_a);
  hx::FiniteHyperring h2 = resolve_structure(file_b, &name_b);
  h1.validate();
  h2.validate();
  h1.require_validated();
  h2.require_validated();
  hx::ProductStructure pr = hx::direct_product(h1, h2);
  nlohmann::json doc = hx::emit_structure(pr.structure, name_a + "x" + name_b);
  write_report(report_path, doc);
  if (json_out || report_path.empty())
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << name_a << "x" << name_b << ": " << pr.structure.size()
              << " elements, written to " << report_path << "\n";
  return kExitOk;
}

int cmd_localize(const std::string& structure, const std::string& mulset_csv,
                 const std::string& report_path, bool json_out) {
  std::string name;
  hx::FiniteHyperring h = resolve_structure(structure, &name);
  h.validate();
  h.require_validated();
  hx::Subset sbits = hx::resolve_subset(h, split_names(mulset_csv));
  if (!hx::is_multiplicative(h, sbits))
    throw hx::precondition_error("--mulset is not multiplicative: " +
                                 hx::subset_names(h, sbits));
  hx::FractionStructure fr = hx::localize(h, hx::MultiplicativeSet{sbits});
  nlohmann::json doc = hx::emit_structure(
      fr.structure, name + "@" + hx::subset_names(h, sbits));
  write_report(report_path, doc);
  if (json_out || report_path.empty())
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << name << "@" << hx::subset_names(h, sbits) << ": "
              << fr.structure.size() << " elements, written to " << report_path
              << "\n";
  return kExitOk;
}

int cmd_theorems(const std::string& structure, const std::string& only_csv,
                 unsigned max_mulset_size, const std::string& report_path,
                 bool json_out) {
  hx::SweepBudget budget;
  budget.max_mulset_size = max_mulset_size;
  std::vector<hx::CorpusEntry> corpus;
  if (structure.empty()) {
    corpus = hx::build_corpus(budget);
  } else {
    std::string name;
    hx::FiniteHyperring h = resolve_structure(structure, &name);
    corpus.push_back(hx::CorpusEntry{name, "base", std::move(h)});
  }
  std::vector<std::string> only = split_names(only_csv);
  for (const auto& id : only)
    if (!hx::is_theorem_id(id)) throw hx::input_error("unknown theorem id: " + id);
  std::vector<hx::TheoremReport> reports;
  if (only.empty()) {
    reports = hx::run_all(corpus, budget);
  } else {
    for (const auto& id : only)
      reports.push_back(hx::run_theorem(id, corpus, budget));
  }
  std::uint64_t violation_count = 0;
  nlohmann::json doc;
  doc["format_version"] = hx::kReportFormatVersion;
  doc["kind"] = "theorem-sweep";
  doc["corpus_size"] = corpus.size();
  nlohmann::json items = nlohmann::json::array();
  for (const auto& r : reports) {
    violation_count += r.violations.size();
    items.push_back(hx::report_json(r));
  }
  doc["reports"] = std::move(items);
  doc["total_violations"] = violation_count;
  write_report(report_path, doc);
  if (json_out) {
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::printf("%-4s %-55s total=%-8llu met=%-7llu violations=%zu%s\n",
                  r.id.c_str(), r.title.c_str(),
                  static_cast<unsigned long long>(r.total),
                  static_cast<unsigned long long>(r.hypothesis_met),
                  r.violations.size(), r.partial ? " [partial]" : "");
      for (const auto& v : r.violations)
        std::cout << "       " << v.structure << ": " << v.detail << "\n";
      for (const auto& note : r.notes) std::cout << "       note: " << note << "\n";
    }
    std::cout << (violation_count == 0 ? "all confirmed"
                                       : "violations found")
              << " (" << reports.size() << " properties, corpus of "
              << corpus.size() << ")\n";
  }
  return violation_count == 0 ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Krasner (m,n)-hyperring verification workbench"};
  app.require_subcommand(1);

  std::string structure, structure_b, ideal, phi = "phi0", delta = "delta0";
  std::string mulset, only, report_path;
  bool json_out = false, strong = false;
  unsigned max_mulset_size = 4;

  auto add_common = [&](CLI::App* sub, bool need_structure) {
    auto* opt = sub->add_option("--structure", structure,
                                "structure file or builtin id");
    if (need_structure) opt->required();
    sub->add_option("--report", report_path, "write a machine report here");
    sub->add_flag("--json", json_out, "machine report on standard output");
  };

  auto* validate = app.add_subcommand("validate", "check every axiom");
  add_common(validate, true);

  auto* ideals = app.add_subcommand("ideals", "enumerate the hyperideal lattice");
  add_common(ideals, true);

  auto* radical = app.add_subcommand("radical", "radical of a hyperideal");
  add_common(radical, true);
  radical->add_option("--ideal", ideal, "hyperideal members (comma-separated)")
      ->required();

  auto* classify = app.add_subcommand("classify", "primary classification");
  add_common(classify, true);
  classify->add_option("--ideal", ideal, "hyperideal members")->required();
  classify->add_option("--phi", phi, "reduction id");
  classify->add_option("--delta", delta, "expansion id");
  classify->add_option("--mulset", mulset, "multiplicative set (default {1})");
  classify->add_flag("--strong", strong, "hyperideal-tuple variant");

  auto* product = app.add_subcommand("product", "direct product of two structures");
  add_common(product, true);
  product->add_option("--structure2", structure_b, "second factor")->required();

  auto* localize = app.add_subcommand("localize", "structure of fractions");
  add_common(localize, true);
  localize->add_option("--mulset", mulset, "multiplicative set")->required();

  auto* theorems = app.add_subcommand("theorems", "corpus property sweep");
  add_common(theorems, false);
  theorems->add_option("--only", only, "theorem ids (comma-separated)");
  theorems->add_option("--max-mulset-size", max_mulset_size,
                       "multiplicative-set size cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(structure, report_path, json_out);
    if (ideals->parsed()) return cmd_ideals(structure, report_path, json_out);
    if (radical->parsed())
      return cmd_radical(structure, ideal, report_path, json_out);
    if (classify->parsed())
      return cmd_classify(structure, ideal, phi, delta, mulset, strong,
                          report_path, json_out);
    if (product->parsed())
      return cmd_product(structure, structure_b, report_path, json_out);
    if (localize->parsed())
      return cmd_localize(structure, mulset, report_path, json_out);
    if (theorems->parsed())
      return cmd_theorems(structure, only, max_mulset_size, report_path,
                          json_out);
  } catch (const hx::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hx::precondition_error& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hx::budget_error& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hx::construction_error& e) {
    std::cerr << "construction failed: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
