#pragma once

#include <ostream>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "cli_common.hpp"

namespace vgreen::cli {

template <class E>
using rules_for =
    std::conditional_t<std::is_same_v<E, PartialPerm>, IsClassRules, TClassRules>;

template <Element E>
json family_header(const char* command, const E& a) {
  return {{"command", command},
          {"family", std::string(to_string(family_traits<E>::family))},
          {"n", a.degree()},
          {"a", format_element(a)},
          {"rank_a", a.rank()}};
}

template <Element E>
json class_json(const VariantSemigroup<E>& v, const std::vector<index_t>& members,
                const RunConfig& cfg) {
  json c = {{"representative", format_element(v.element(members.front()))},
            {"size", members.size()}};
  if (cfg.full || members.size() <= cfg.threshold) {
    c["members"] = element_list(v, members);
  } else {
    c["members_elided"] = true;
  }
  return c;
}

inline std::vector<std::vector<index_t>> distinct_sets(
    std::vector<std::vector<index_t>> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

// ---------------------------------------------------------------- green

template <Element E>
int cmd_green(const RunConfig& cfg, std::ostream& out) {
  if (cfg.a.empty()) throw UsageError("--a is required");
  const auto a = parse_with_degree<E>(cfg.a, cfg.n, "--a");
  const auto rel = parse_relation(cfg.relation);
  const auto modes = parse_modes(cfg.mode);
  if (cfg.method != "brute" && cfg.method != "closed" && cfg.method != "both") {
    throw UsageError("unknown method '" + cfg.method + "'");
  }
  const bool want_brute = cfg.method != "closed";
  const bool want_closed = cfg.method != "brute";

  VariantSemigroup<E> v(a, cfg.engine);
  json doc = family_header("green", a);
  doc["relation"] = std::string(to_string(rel));
  doc["results"] = json::array();
  doc["diff"] = json::array();

  struct Block {
    std::string method;
    std::vector<std::vector<index_t>> classes;
  };
  std::vector<Block> blocks;
  GreenClassification brute;
  if (want_brute) {
    brute = green_classes_brute(v, rel);
    blocks.push_back({"brute", brute.classes()});
  }
  bool mismatch = false;
  std::vector<std::pair<std::string, std::vector<ClassMismatch>>> diffs;
  if (want_closed) {
    const rules_for<E> rules(a);
    for (auto mode : modes) {
      auto sets = closed_form_sets(rules, v, rel, mode);
      if (want_brute) {
        auto mm = compare_with_brute(sets, brute);
        mismatch |= !mm.empty();
        diffs.emplace_back(std::string(to_string(mode)), std::move(mm));
      }
      blocks.push_back({std::string(to_string(mode)), distinct_sets(std::move(sets))});
    }
  }

  if (cfg.format == "json") {
    for (const auto& b : blocks) {
      json classes = json::array();
      for (const auto& c : b.classes) classes.push_back(class_json(v, c, cfg));
      doc["results"].push_back(
          {{"method", b.method}, {"class_count", b.classes.size()}, {"classes", classes}});
    }
    for (const auto& [mode, mm] : diffs) {
      for (const auto& m : mm) {
        doc["diff"].push_back({{"mode", mode},
                               {"element", format_element(v.element(m.element))},
                               {"closed_form", element_list(v, m.closed_form)},
                               {"brute", element_list(v, m.brute)}});
      }
    }
    out << doc.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "method,class,representative,size,members\n";
    for (const auto& b : blocks) {
      for (std::size_t i = 0; i < b.classes.size(); ++i) {
        const auto& c = b.classes[i];
        std::string members;
        for (std::size_t k = 0; k < c.size(); ++k) {
          if (k) members += ' ';
          members += format_element(v.element(c[k]));
        }
        out << b.method << ',' << i << ",\"" << format_element(v.element(c.front()))
            << "\"," << c.size() << ",\"" << members << "\"\n";
      }
    }
  } else if (cfg.format == "text") {
    out << "green family=" << family_traits<E>::name << " n=" << a.degree()
        << " a=" << format_element(a) << " rank(a)=" << a.rank()
        << " relation=" << to_string(rel) << '\n';
    for (const auto& b : blocks) {
      out << b.method << ": " << b.classes.size() << " classes\n";
      for (const auto& c : b.classes) {
        out << "  ";
        if (cfg.full || c.size() <= cfg.threshold) {
          out << element_set_text(v, c);
        } else {
          out << "[" << format_element(v.element(c.front())) << "] ... (" << c.size()
              << " elements)";
        }
        out << '\n';
      }
    }
    for (const auto& [mode, mm] : diffs) {
      out << "diff " << mode << " vs brute: ";
      if (mm.empty()) {
        out << "none\n";
        continue;
      }
      out << mm.size() << " elements\n";
      for (const auto& m : mm) {
        out << "  [" << format_element(v.element(m.element))
            << "] closed-form " << element_set_text(v, m.closed_form) << " brute "
            << element_set_text(v, m.brute) << '\n';
      }
    }
  } else {
    throw UsageError("green supports --format text|json|csv");
  }
  return mismatch ? 1 : 0;
}

// ---------------------------------------------------------------- verify

struct DeformationCheck {
  json record;
  bool corrected_ok = true;
  bool paper_literal_d_differs = false;
  std::size_t errata = 0;
};

template <Element E>
std::vector<CountRow> count_rows(const E& a, const EngineOptions& engine) {
  if constexpr (std::is_same_v<E, PartialPerm>) {
    return count_is_classes(a, engine).rows();
  } else {
    return count_t_classes(a, engine).rows();
  }
}

template <Element E>
DeformationCheck check_deformation(const E& a, const EngineOptions& engine) {
  DeformationCheck chk;
  VariantSemigroup<E> v(a, engine);
  const auto g = green_structure_brute(v);
  const rules_for<E> rules(a);
  json agreement = json::object();
  json failures = json::array();
  for (auto rel : {Relation::r, Relation::l, Relation::h, Relation::d}) {
    auto mm = compare_with_brute(closed_form_sets(rules, v, rel, Mode::corrected),
                                 g.get(rel));
    agreement[std::string(to_string(rel))] = mm.empty();
    if (!mm.empty()) {
      chk.corrected_ok = false;
      failures.push_back({{"relation", std::string(to_string(rel))},
                          {"element", format_element(v.element(mm.front().element))},
                          {"closed_form", element_list(v, mm.front().closed_form)},
                          {"brute", element_list(v, mm.front().brute)}});
    }
  }
  const bool d_equals_j = compare_partitions(g.d, g.j).equal;
  if (!d_equals_j) chk.corrected_ok = false;

  auto literal = compare_with_brute(closed_form_sets(rules, v, Relation::d, Mode::paper_literal), g.d);
  chk.paper_literal_d_differs = !literal.empty();
  json literal_json = {{"agrees", literal.empty()}, {"mismatched_elements", literal.size()}};
  if (!literal.empty()) {
    const auto& m = literal.front();
    literal_json["first_mismatch"] = {{"element", format_element(v.element(m.element))},
                                      {"closed_form_size", m.closed_form.size()},
                                      {"brute", element_list(v, m.brute)}};
  }

  json errata = json::array();
  for (const auto& row : count_rows(a, engine)) {
    const auto flag = row.flag();
    if (flag == "mismatch") chk.corrected_ok = false;
    if (flag != "ok" && flag != "unverified") {
      ++chk.errata;
      errata.push_back(count_rows_json({row}).front());
    }
  }

  chk.record = {{"a", format_element(a)},
                {"rank_a", a.rank()},
                {"corrected_agreement", agreement},
                {"d_equals_j", d_equals_j},
                {"corrected_failures", failures},
                {"paper_literal_d", literal_json},
                {"count_errata", errata}};
  return chk;
}

template <Element E>
int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto deformations = select_deformations<E>(cfg, true);
  const auto n = deformations.front().degree();
  json doc = {{"command", "verify"},
              {"family", std::string(to_string(family_traits<E>::family))},
              {"n", n},
              {"deformations", json::array()}};
  std::size_t failures = 0;
  std::size_t literal = 0;
  std::size_t errata = 0;
  std::vector<DeformationCheck> checks;
  for (const auto& a : deformations) {
    auto chk = check_deformation(a, cfg.engine);
    failures += !chk.corrected_ok;
    literal += chk.paper_literal_d_differs;
    errata += chk.errata;
    doc["deformations"].push_back(chk.record);
    checks.push_back(std::move(chk));
  }
  doc["summary"] = {{"deformations", deformations.size()},
                    {"corrected_failures", failures},
                    {"paper_literal_d_discrepancies", literal},
                    {"count_errata", errata},
                    {"passed", failures == 0}};
  if (cfg.format == "json") {
    out << doc.dump(2) << '\n';
  } else if (cfg.format == "text") {
    out << "verify family=" << family_traits<E>::name << " n=" << n
        << " deformations=" << deformations.size() << '\n';
    out << "a            p  R  L  H  D   D=J  literal-D  count-errata\n";
    for (const auto& chk : checks) {
      const auto& r = chk.record;
      auto mark = [](bool ok) { return ok ? "ok " : "XX "; };
      std::string a = r["a"];
      a.resize(std::max<std::size_t>(a.size(), 12), ' ');
      out << a << ' ' << r["rank_a"].get<std::size_t>() << "  "
          << mark(r["corrected_agreement"]["R"]) << mark(r["corrected_agreement"]["L"])
          << mark(r["corrected_agreement"]["H"]) << mark(r["corrected_agreement"]["D"])
          << ' ' << (r["d_equals_j"].get<bool>() ? "yes" : "NO ") << "  "
          << (chk.paper_literal_d_differs
                  ? std::to_string(r["paper_literal_d"]["mismatched_elements"]
                                       .get<std::size_t>()) + " differ"
                  : std::string("agrees"))
          << "  " << chk.errata << '\n';
      for (const auto& e : r["count_errata"]) {
        out << "    erratum " << e["side"].get<std::string>() << ' '
            << e["quantity"].get<std::string>() << ": paper=" << e["paper_value"].dump()
            << " corrected=" << e["corrected_value"].dump()
            << " enumerated=" << e["enumerated_value"].dump() << '\n';
      }
    }
    out << "summary: corrected failures=" << failures
        << " paper-literal D discrepancies=" << literal << " count errata=" << errata
        << (failures == 0 ? "  PASS" : "  FAIL") << '\n';
  } else {
    throw UsageError("verify supports --format text|json");
  }
  return failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------- count

inline void write_count_csv_row(std::ostream& out, const std::string& family,
                                std::size_t n, const std::string& a, std::size_t p,
                                const CountRow& row) {
  auto opt = [](const std::optional<count_t>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  out << family << ',' << n << ",\"" << a << "\"," << p << ',' << row.side << ','
      << row.quantity << ',' << opt(row.paper) << ',' << opt(row.corrected) << ','
      << opt(row.enumerated) << ',' << row.flag() << '\n';
}

template <Element E>
int cmd_count(const RunConfig& cfg, std::ostream& out) {
  const auto deformations = select_deformations<E>(cfg, true);
  const std::string family(to_string(family_traits<E>::family));
  bool ok = true;
  json doc = {{"command", "count"}, {"family", family}, {"reports", json::array()}};
  if (cfg.format == "csv") {
    out << "family,n,a,p,side,quantity,paper_value,corrected_value,enumerated_value,flag\n";
  } else if (cfg.format != "json" && cfg.format != "text") {
    throw UsageError("count supports --format text|json|csv");
  }
  for (const auto& a : deformations) {
    const auto rows = count_rows(a, cfg.engine);
    for (const auto& r : rows) ok &= r.flag() != "mismatch";
    const auto text = format_element(a);
    if (cfg.format == "csv") {
      for (const auto& r : rows) write_count_csv_row(out, family, a.degree(), text, a.rank(), r);
    } else if (cfg.format == "json") {
      json rep = {{"n", a.degree()}, {"a", text}, {"p", a.rank()}};
      if constexpr (std::is_same_v<E, Transformation>) {
        rep["fiber_sizes"] = count_t_classes_formula(a).fiber_sizes;
      }
      rep["rows"] = count_rows_json(rows);
      doc["reports"].push_back(rep);
    } else {
      out << "count family=" << family_traits<E>::name << " n=" << a.degree()
          << " a=" << text << " p=" << a.rank() << '\n';
      out << "side  quantity                 paper  corrected  enumerated  flag\n";
      for (const auto& r : rows) {
        auto cell = [](const std::optional<count_t>& v, std::size_t w) {
          std::string s = v ? std::to_string(*v) : "-";
          if (s.size() < w) s.insert(0, w - s.size(), ' ');
          return s;
        };
        std::string side = r.side;
        side.resize(6, ' ');
        std::string q = r.quantity;
        q.resize(std::max<std::size_t>(q.size(), 22), ' ');
        out << side << q << cell(r.paper, 7) << cell(r.corrected, 11)
            << cell(r.enumerated, 12) << "  " << r.flag() << '\n';
      }
    }
  }
  if (cfg.format == "json") {
    doc["passed"] = ok;
    out << doc.dump(2) << '\n';
  }
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------- eggbox

template <Element E>
int cmd_eggbox(const RunConfig& cfg, std::ostream& out) {
  if (cfg.a.empty()) throw UsageError("--a is required");
  const auto a = parse_with_degree<E>(cfg.a, cfg.n, "--a");
  VariantSemigroup<E> v(a, cfg.engine);
  const auto g = green_structure_brute(v);
  auto label = [&](const std::vector<index_t>& cell) {
    std::string s;
    if (!cfg.full && cell.size() > cfg.threshold) {
      return format_element(v.element(cell.front())) + " ... (" +
             std::to_string(cell.size()) + ")";
    }
    for (std::size_t k = 0; k < cell.size(); ++k) {
      if (k) s += "<br/>";
      s += format_element(v.element(cell[k]));
    }
    return s;
  };

  if (cfg.format == "dot") {
    out << "graph eggbox {\n";
    out << "  label=\"" << family_traits<E>::name << "_" << a.degree()
        << " variant, a = " << format_element(a) << "\";\n";
    out << "  node [shape=plaintext];\n";
    for (index_t d = 0; d < g.d.size(); ++d) {
      const auto box = egg_box(g, d);
      out << "  subgraph cluster_" << d << " {\n";
      out << "    label=\"D" << d << ": " << format_element(v.element(g.d.representative(d)))
          << " (" << g.d.members(d).size() << " elements, " << box.rows.size() << "x"
          << box.columns.size() << ")\";\n";
      out << "    d" << d
          << " [label=<<table border=\"0\" cellborder=\"1\" cellspacing=\"0\">";
      for (const auto& row : box.cells) {
        out << "<tr>";
        for (const auto& cell : row) out << "<td>" << label(cell) << "</td>";
        out << "</tr>";
      }
      out << "</table>>];\n  }\n";
    }
    out << "}\n";
  } else if (cfg.format == "json") {
    json doc = family_header("eggbox", a);
    doc["d_classes"] = json::array();
    for (index_t d = 0; d < g.d.size(); ++d) {
      const auto box = egg_box(g, d);
      json cells = json::array();
      for (const auto& row : box.cells) {
        json r = json::array();
        for (const auto& cell : row) r.push_back(class_json(v, cell, cfg));
        cells.push_back(r);
      }
      doc["d_classes"].push_back(
          {{"representative", format_element(v.element(g.d.representative(d)))},
           {"size", g.d.members(d).size()},
           {"rows", box.rows.size()},
           {"columns", box.columns.size()},
           {"cells", cells}});
    }
    out << doc.dump(2) << '\n';
  } else {
    throw UsageError("eggbox supports --format dot|json");
  }
  return 0;
}

// ---------------------------------------------------------------- iso / dual

inline int cmd_iso(const RunConfig& cfg, std::ostream& out) {
  if (cfg.a.empty() || cfg.b.empty()) throw UsageError("--a and --b are required");
  const auto a = parse_with_degree<PartialPerm>(cfg.a, cfg.n, "--a");
  const auto b = parse_with_degree<PartialPerm>(cfg.b, a.degree(), "--b");
  json doc = {{"command", "iso"},
              {"n", a.degree()},
              {"a", format_element(a)},
              {"b", format_element(b)},
              {"rank_a", a.rank()},
              {"rank_b", b.rank()}};
  const auto result = iso_witness(a, b);
  int code = 0;
  if (const auto* mm = std::get_if<RankMismatch>(&result)) {
    doc["status"] = "rank-mismatch";
    doc["note"] = "not isomorphic by the rank classification of IS_n variants (cited, not checked)";
    if (cfg.format == "json") {
      out << doc.dump(2) << '\n';
    } else {
      out << "rank-mismatch: rank(a)=" << mm->rank_a << " rank(b)=" << mm->rank_b
          << "; not isomorphic by the rank classification (cited, not checked)\n";
    }
    return 0;
  }
  const auto& w = std::get<IsoWitness>(result);
  doc["status"] = "witness";
  doc["g"] = format_element(w.g);
  doc["h"] = format_element(w.h);
  doc["g_b_h_equals_a"] = compose(compose(w.g, b), w.h) == a;
  if (a.degree() <= brute_cap) {
    const auto ver = verify_isomorphism(w, a, b);
    doc["verified"] = ver.holds();
    if (ver.counterexample) {
      doc["counterexample"] = {format_element(ver.counterexample->first),
                               format_element(ver.counterexample->second)};
    }
    code = ver.holds() ? 0 : 1;
  } else {
    doc["verified"] = nullptr;
  }
  if (cfg.format == "json") {
    out << doc.dump(2) << '\n';
  } else {
    out << "witness: phi(x) = h x g with g=" << format_element(w.g)
        << " h=" << format_element(w.h) << '\n';
    out << "g b h = a: " << (doc["g_b_h_equals_a"].get<bool>() ? "yes" : "NO") << '\n';
    if (doc["verified"].is_null()) {
      out << "homomorphism check skipped (n > " << brute_cap << ")\n";
    } else {
      out << "bijective homomorphism: "
          << (doc["verified"].get<bool>() ? "verified" : "FAILED") << '\n';
    }
  }
  return code;
}

inline int cmd_dual(const RunConfig& cfg, std::ostream& out) {
  const auto deformations = select_deformations<PartialPerm>(cfg, true);
  json doc = {{"command", "dual"},
              {"n", deformations.front().degree()},
              {"results", json::array()}};
  bool all = true;
  for (const auto& a : deformations) {
    const auto rep = dual_check(a);
    all &= rep.holds();
    json r = {{"a", format_element(a)},
              {"product_identity", rep.product_identity_holds},
              {"class_correspondence", rep.class_correspondence_holds}};
    if (rep.counterexample) {
      r["counterexample"] = {format_element(rep.counterexample->first),
                             format_element(rep.counterexample->second)};
    }
    doc["results"].push_back(r);
    if (cfg.format != "json") {
      out << "dual a=" << format_element(a) << ": " << (rep.holds() ? "pass" : "FAIL");
      if (rep.counterexample) {
        out << " counterexample x=" << format_element(rep.counterexample->first)
            << " y=" << format_element(rep.counterexample->second);
      }
      out << '\n';
    }
  }
  doc["passed"] = all;
  if (cfg.format == "json") {
    out << doc.dump(2) << '\n';
  } else {
    out << (all ? "all pass" : "FAILED") << " (" << deformations.size()
        << " deformations)\n";
  }
  return all ? 0 : 1;
}

}  // namespace vgreen::cli
