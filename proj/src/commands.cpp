#include "bdg/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <vector>

#include <json.hpp>

#include "bdg/class_analysis.hpp"
#include "bdg/divisor_graph.hpp"
#include "bdg/family_checks.hpp"
#include "bdg/group_graph.hpp"
#include "bdg/table_group.hpp"

namespace bdg {

namespace {

using json = nlohmann::ordered_json;

std::string shape_name(const GraphShape& s) {
  switch (s.kind) {
    case GraphShape::Kind::CompleteBipartite:
      return "K_{" + std::to_string(s.m) + "," + std::to_string(s.n) + "}";
    case GraphShape::Kind::Path:
      return "path of length " + std::to_string(s.length);
    case GraphShape::Kind::Cycle:
      return "cycle of length " + std::to_string(s.length);
    case GraphShape::Kind::Other:
      return "other";
  }
  return "other";
}

json shape_to_json(const GraphShape& s) {
  json j;
  switch (s.kind) {
    case GraphShape::Kind::CompleteBipartite:
      j["kind"] = "complete_bipartite";
      j["m"] = s.m;
      j["n"] = s.n;
      break;
    case GraphShape::Kind::Path:
      j["kind"] = "path";
      j["length"] = s.length;
      break;
    case GraphShape::Kind::Cycle:
      j["kind"] = "cycle";
      j["length"] = s.length;
      break;
    case GraphShape::Kind::Other:
      j["kind"] = "other";
      break;
  }
  j["components"] = s.invariants.components;
  j["diameters"] = s.invariants.diameters;
  if (s.invariants.girth)
    j["girth"] = *s.invariants.girth;
  else
    j["girth"] = nullptr;
  return j;
}

std::string join_sizes(const std::set<std::uint64_t>& sizes) {
  std::string s = "{";
  for (auto it = sizes.begin(); it != sizes.end(); ++it) {
    if (it != sizes.begin()) s += ", ";
    s += std::to_string(*it);
  }
  return s + "}";
}

void check_command_gate(std::uint32_t p, const CommandOptions& opts) {
  std::uint32_t gate = effective_gate(opts);
  if (p > gate)
    throw GateError("p = " + std::to_string(p) + " exceeds the enumeration gate (max " +
                    std::to_string(gate) + "); pass --allow-large to override");
}

// The full end-to-end report for one parameter: presentation, automorphism
// relations, center, witness classes, stratum sets, and the graph shape.
VerificationReport full_verify_report(const FamilyGroup& g, std::uint32_t gate) {
  const std::uint32_t p = g.p();
  const std::uint64_t pu = p;
  VerificationReport report = verify_presentation(g);

  VerificationReport dihedral = verify_dihedral_action(action_matrices(g), p);
  report.checks.insert(report.checks.end(), dihedral.checks.begin(), dihedral.checks.end());
  report.overall = report.overall && dihedral.overall;

  report.add("fixed space of a on E/<z>", "0", std::to_string(fixed_space_of_a(p)));
  report.add("fixed space of b on E/<z>", std::to_string(p - 1),
             std::to_string(fixed_space_of_b(p)));

  // Witness classes. The 2p witness is x1 (its <a>-orbit {x1,..,x_{p-1},
  // x1..x_{p-1}} is reversal-stable, so the class is the orbit and its
  // z-translate); the 4p witness is x1 y1.
  auto class_size = [&g](const GroupElement& u) { return conjugacy_class_of(g, u).size; };
  report.add("|x1^G| = 2p", std::to_string(2 * pu), std::to_string(class_size(g.gen_x(1))));
  report.add("|(x1 y1)^G| = 4p", std::to_string(4 * pu),
             std::to_string(class_size(g.multiply(g.gen_x(1), g.gen_y(1)))));
  report.add("|(x1 x_{p-1})^G| = 2p", std::to_string(2 * pu),
             std::to_string(class_size(g.multiply(g.gen_x(1), g.gen_x(p - 1)))));
  report.add("|a^G| = 2^{2p-1} p", std::to_string((std::uint64_t{1} << (2 * p - 1)) * pu),
             std::to_string(class_size(g.gen_a())));
  report.add("|b^G| = 2^{p-1} p^2", std::to_string((std::uint64_t{1} << (p - 1)) * pu * pu),
             std::to_string(class_size(g.gen_b())));
  report.add("|(x1 b)^G| = 2^p p^2", std::to_string((std::uint64_t{1} << p) * pu * pu),
             std::to_string(class_size(g.multiply(g.gen_x(1), g.gen_b()))));

  if (p <= 7) {
    report.add("|C_E(b)| = 2^p", std::to_string(std::uint64_t{1} << p),
               std::to_string(centralizer_of_b_in_e(g).size()));
    std::set<std::uint64_t> orbit_sizes = m_orbit_sizes_on_e(g);
    bool ok = true;
    for (std::uint64_t s : orbit_sizes) ok = ok && (s == pu || s == 2 * pu);
    report.add_bool("M-orbit sizes on E \\ Z(E) within {p, 2p}", ok);
  }

  // Everything below needs the full class partition.
  ClassTable table = class_table(g, gate);

  std::uint64_t order_sum = 0;
  for (const auto& c : table.classes) order_sum += c.size;
  report.add("class equation sum", std::to_string(g.order()), std::to_string(order_sum));
  report.add("|Z(G)| = 2p", std::to_string(2 * pu), std::to_string(table.center_order));

  // The size-1 representatives are the central elements; they must be
  // exactly the n1^i z^k.
  bool center_matches = true;
  for (const auto& c : table.classes) {
    if (c.size != 1) continue;
    const GroupElement& u = c.representative;
    if (u.n2_exp || u.x_bits.any() || u.y_bits.any() || u.a_exp || u.b_exp)
      center_matches = false;
  }
  report.add_bool("Z(G) = <n1, z>", center_matches);

  std::set<std::uint64_t> expected_sizes = {
      2 * pu, 4 * pu, (std::uint64_t{1} << (2 * p - 1)) * pu,
      (std::uint64_t{1} << (p - 1)) * pu * pu, (std::uint64_t{1} << p) * pu * pu};
  report.add("noncentral class sizes", join_sizes(expected_sizes),
             join_sizes(noncentral_class_sizes(table)));

  std::map<Stratum, std::set<std::uint64_t>> strata;
  for (const auto& c : table.classes) {
    if (c.size == 1) continue;
    strata[stratum_of(c.representative)].insert(c.size);
  }
  report.add("class sizes in N \\ Z(G)", join_sizes({2 * pu, 4 * pu}),
             join_sizes(strata[Stratum::InsideN]));
  report.add("class sizes in <N,a> \\ N", join_sizes({(std::uint64_t{1} << (2 * p - 1)) * pu}),
             join_sizes(strata[Stratum::RotationCoset]));
  report.add("class sizes outside <N,a>",
             join_sizes({(std::uint64_t{1} << (p - 1)) * pu * pu,
                         (std::uint64_t{1} << p) * pu * pu}),
             join_sizes(strata[Stratum::ReflectionCoset]));

  GraphShape shape = classify_shape(build_bdg(noncentral_class_sizes(table)));
  report.add("B(G) = K_{2,5}", "K_{2,5}", shape_name(shape));
  return report;
}

void render_report_text(const VerificationReport& report, std::uint32_t p, std::ostream& out) {
  out << "verify p=" << p << "\n";
  for (const auto& c : report.checks) {
    out << c.name << ": " << (c.passed ? "PASS" : "FAIL");
    if (!c.passed) out << " (expected " << c.expected << ", got " << c.actual << ")";
    out << "\n";
  }
}

void render_report_json(const VerificationReport& report, std::uint32_t p, std::ostream& out) {
  json doc;
  doc["p"] = p;
  doc["overall"] = report.overall;
  doc["checks"] = json::array();
  for (const auto& c : report.checks) {
    doc["checks"].push_back(
        {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"passed", c.passed}});
  }
  out << doc.dump(2) << "\n";
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const GateError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

std::uint32_t effective_gate(const CommandOptions& opts) {
  if (opts.allow_large) return kMaxEnumerationPrime;
  std::uint32_t gate = kDefaultEnumerationGate;
  if (opts.gate_override) gate = std::min(*opts.gate_override, kMaxEnumerationPrime);
  return gate;
}

std::optional<std::uint32_t> gate_from_env() {
  const char* raw = std::getenv("BDG_MAX_P");
  if (!raw) return std::nullopt;
  char* end = nullptr;
  unsigned long v = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0)
    throw std::invalid_argument("BDG_MAX_P is not a positive integer: " + std::string(raw));
  return static_cast<std::uint32_t>(std::min<unsigned long>(v, kMaxEnumerationPrime));
}

int run_verify(std::uint32_t p, const CommandOptions& opts, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&]() -> int {
    FamilyGroup g{GroupParams{p}};
    check_command_gate(p, opts);
    VerificationReport report = full_verify_report(g, effective_gate(opts));
    if (opts.format == "json")
      render_report_json(report, p, out);
    else
      render_report_text(report, p, out);
    return report.overall ? 0 : 1;
  });
}

int run_classes(std::uint32_t p, const CommandOptions& opts, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&]() -> int {
    FamilyGroup g{GroupParams{p}};
    check_command_gate(p, opts);
    ClassTable table = class_table(g, effective_gate(opts));
    if (opts.format == "json") {
      json doc;
      doc["p"] = p;
      doc["order"] = g.order();
      doc["center_order"] = table.center_order;
      doc["classes"] = json::array();
      for (const auto& c : table.classes)
        doc["classes"].push_back(
            {{"rep", g.element_index(c.representative)}, {"size", c.size}});
      out << doc.dump(2) << "\n";
    } else {
      out << "p " << p << "\n";
      out << "order " << g.order() << "\n";
      out << "center_order " << table.center_order << "\n";
      out << "classes " << table.classes.size() << "\n";
      for (const auto& c : table.classes)
        out << "rep " << g.element_index(c.representative) << " ("
            << to_word_string(g, c.representative) << ") size " << c.size << "\n";
    }
    return 0;
  });
}

int run_graph(const GraphSource& source, const CommandOptions& opts, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&]() -> int {
    int provided = (source.sizes ? 1 : 0) + (source.p ? 1 : 0) + (source.table_path ? 1 : 0);
    if (provided != 1)
      throw std::invalid_argument("graph needs exactly one of --sizes, --p, --table");

    BipartiteDivisorGraph graph;
    if (source.sizes) {
      graph = build_bdg(*source.sizes);
    } else if (source.p) {
      FamilyGroup g{GroupParams{*source.p}};
      check_command_gate(*source.p, opts);
      graph = bdg_of_group(g, effective_gate(opts));
    } else {
      graph = bdg_of_group(TableGroup::from_file(*source.table_path));
    }

    GraphShape shape = classify_shape(graph);
    if (opts.format == "json") {
      json doc;
      doc["primes"] = graph.prime_vertices;
      doc["sizes"] = graph.size_vertices;
      doc["edges"] = json::array();
      for (const auto& [q, x] : graph.edges) doc["edges"].push_back({q, x});
      doc["shape"] = shape_to_json(shape);
      out << doc.dump(2) << "\n";
    } else if (opts.format == "dot") {
      out << "graph bdg {\n";
      for (std::uint64_t q : graph.prime_vertices) out << "  p_" << q << ";\n";
      for (std::uint64_t x : graph.size_vertices) out << "  n_" << x << ";\n";
      for (const auto& [q, x] : graph.edges) out << "  p_" << q << " -- n_" << x << ";\n";
      out << "}\n";
    } else {
      out << "primes:";
      for (std::uint64_t q : graph.prime_vertices) out << " " << q;
      out << "\nsizes:";
      for (std::uint64_t x : graph.size_vertices) out << " " << x;
      out << "\nedges: " << graph.edges.size() << "\n";
      out << "shape: " << shape_name(shape) << "\n";
      out << "components: " << shape.invariants.components << "\n";
      out << "diameters:";
      for (std::uint32_t d : shape.invariants.diameters) out << " " << d;
      out << "\ngirth: ";
      if (shape.invariants.girth)
        out << *shape.invariants.girth;
      else
        out << "infinite";
      out << "\n";
    }
    return 0;
  });
}

}  // namespace bdg
