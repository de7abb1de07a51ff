#include "lfuzzy/audit/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace lfuzzy::audit {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json config_to_json(const SearchConfig& c) {
  ordered_json j;
  j["universe_size"] = c.universe_size;
  j["grid_levels"] = c.grid_levels;
  j["mode"] = to_string(c.mode);
  if (c.mode == SearchMode::Random) {
    j["trials"] = c.trials;
    j["seed"] = c.seed;
  }
  j["case_cap"] = c.case_cap;
  return j;
}

std::string config_line(const SearchConfig& c) {
  std::ostringstream out;
  out << "config: n=" << c.universe_size << " g=" << c.grid_levels
      << " mode=" << to_string(c.mode);
  if (c.mode == SearchMode::Random) {
    out << " trials=" << c.trials << " seed=" << c.seed;
  }
  out << " cap=" << c.case_cap;
  return out.str();
}

ordered_json witness_to_json(const Witness& w) {
  ordered_json j;
  j["found_at"] = {{"universe_size", w.universe_size}, {"grid_levels", w.grid_levels}};
  j["universe"] = w.universe->labels();
  ordered_json sets = ordered_json::object();
  std::vector<std::string> crisp_roles;
  for (const auto& ws : w.sets) {
    std::vector<std::string> grades;
    grades.reserve(ws.set.size());
    for (const auto& g : ws.set.grades()) grades.push_back(g.str());
    sets[ws.role] = grades;
    if (ws.crisp) crisp_roles.push_back(ws.role);
  }
  j["sets"] = std::move(sets);
  if (!crisp_roles.empty()) j["crisp_roles"] = crisp_roles;
  return j;
}

ordered_json result_to_json(const AuditResult& r) {
  ordered_json j;
  j["property"] = r.property_id;
  j["theorem"] = r.theorem;
  j["verdict"] = to_string(r.verdict);
  j["mode"] = to_string(r.stats.mode);
  j["space"] = r.stats.space;
  j["cases"] = r.stats.cases;
  if (!r.note.empty()) j["note"] = r.note;
  if (r.witness) j["witness"] = witness_to_json(*r.witness);
  return j;
}

std::string witness_line(const Witness& w) {
  std::ostringstream out;
  out << "witness (n=" << w.universe_size << " g=" << w.grid_levels << "):";
  for (std::size_t i = 0; i < w.sets.size(); ++i) {
    out << (i ? ", " : " ") << w.sets[i].role << "=" << w.sets[i].set.str();
  }
  return out.str();
}

char verdict_letter(Verdict v) {
  switch (v) {
    case Verdict::Holds: return 'H';
    case Verdict::Refuted: return 'R';
    case Verdict::Inconclusive: return 'I';
  }
  return '?';
}

}  // namespace

std::string Witness::sets_file_json(int indent) const {
  ordered_json j;
  j["universe"] = universe->labels();
  ordered_json sets = ordered_json::object();
  for (const auto& ws : this->sets) {
    std::vector<std::string> grades;
    grades.reserve(ws.set.size());
    for (const auto& g : ws.set.grades()) grades.push_back(g.str());
    sets[ws.role] = grades;
  }
  j["sets"] = std::move(sets);
  return j.dump(indent);
}

unsigned Report::refuted_theorems() const {
  return static_cast<unsigned>(
      std::count_if(results.begin(), results.end(), [](const AuditResult& r) {
        return r.theorem && r.verdict == Verdict::Refuted;
      }));
}

std::string Report::text() const {
  std::ostringstream out;
  out << "audit " << title << "\n" << config_line(config) << "\n";
  out << "properties: " << results.size() << "\n\n";

  std::size_t id_width = 8;
  for (const auto& r : results) id_width = std::max(id_width, r.property_id.size());

  unsigned holds = 0, refuted = 0, inconclusive = 0;
  for (const auto& r : results) {
    switch (r.verdict) {
      case Verdict::Holds: ++holds; break;
      case Verdict::Refuted: ++refuted; break;
      case Verdict::Inconclusive: ++inconclusive; break;
    }
    std::string verdict(to_string(r.verdict));
    verdict.resize(12, ' ');
    std::string id = r.property_id;
    id.resize(id_width + 2, ' ');
    out << "[" << verdict << "] " << id << "cases=" << r.stats.cases
        << " space=" << r.stats.space;
    if (r.theorem && r.verdict == Verdict::Refuted) out << "  THEOREM REFUTED";
    out << "\n";
    if (r.witness) {
      out << std::string(15, ' ') << witness_line(*r.witness) << "\n";
    }
    if (!r.note.empty()) {
      out << std::string(15, ' ') << "note: " << r.note << "\n";
    }
  }

  out << "\nsummary: " << holds << " holds, " << refuted << " refuted, " << inconclusive
      << " inconclusive; theorem refutations: " << refuted_theorems() << "\n";
  out << "result: " << (pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string Report::json_text(int indent) const {
  ordered_json j;
  j["command"] = "audit";
  j["suite"] = title;
  j["config"] = config_to_json(config);
  ordered_json results_json = ordered_json::array();
  unsigned holds = 0, refuted = 0, inconclusive = 0;
  for (const auto& r : results) {
    switch (r.verdict) {
      case Verdict::Holds: ++holds; break;
      case Verdict::Refuted: ++refuted; break;
      case Verdict::Inconclusive: ++inconclusive; break;
    }
    results_json.push_back(result_to_json(r));
  }
  j["results"] = std::move(results_json);
  j["summary"] = {{"holds", holds},
                  {"refuted", refuted},
                  {"inconclusive", inconclusive},
                  {"theorem_refutations", refuted_theorems()},
                  {"pass", pass()}};
  return j.dump(indent);
}

std::string grid_text(const AxiomGrid& grid) {
  std::ostringstream out;
  out << "scalar axiom grid\n" << config_line(grid.config) << "\n";
  out << "legend: H=holds R=refuted I=inconclusive\n\n";

  std::size_t label_width = 7, mnemonic_width = 8;
  for (const auto& row : grid.rows) {
    label_width = std::max(label_width, row.label.size());
    mnemonic_width = std::max(mnemonic_width, row.mnemonic.size());
  }

  auto pad = [&](std::string s, std::size_t width) {
    s.resize(std::max(s.size(), width), ' ');
    return s;
  };

  out << pad("measure", label_width + 2) << pad("mnemonic", mnemonic_width + 2);
  for (std::string_view col : axiom_column_ids()) {
    out << pad(std::string(col == "and-transitive" ? "tr" : col), 4);
  }
  out << "\n";
  for (const auto& row : grid.rows) {
    out << pad(row.label, label_width + 2) << pad(row.mnemonic, mnemonic_width + 2);
    for (const auto& cell : row.cells) {
      out << pad(std::string(1, verdict_letter(cell.verdict)), 4);
    }
    out << "\n";
  }
  out << "\n(tr = and-transitive)\n";
  return out.str();
}

std::string grid_csv(const AxiomGrid& grid) {
  std::ostringstream out;
  out << "measure,mnemonic";
  for (std::string_view col : axiom_column_ids()) out << "," << col;
  out << "\n";
  for (const auto& row : grid.rows) {
    out << row.label << "," << row.mnemonic;
    for (const auto& cell : row.cells) out << "," << to_string(cell.verdict);
    out << "\n";
  }
  return out.str();
}

std::string grid_json_text(const AxiomGrid& grid, int indent) {
  ordered_json j;
  j["command"] = "grid";
  j["config"] = config_to_json(grid.config);
  std::vector<std::string> columns;
  for (std::string_view col : axiom_column_ids()) columns.emplace_back(col);
  j["columns"] = columns;
  ordered_json rows = ordered_json::array();
  for (const auto& row : grid.rows) {
    ordered_json r;
    r["measure"] = row.label;
    r["mnemonic"] = row.mnemonic;
    ordered_json cells = ordered_json::object();
    for (std::size_t k = 0; k < row.cells.size(); ++k) {
      cells[std::string(axiom_column_ids()[k])] = result_to_json(row.cells[k]);
    }
    r["cells"] = std::move(cells);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(indent);
}

}  // namespace lfuzzy::audit
