#include "hombra/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace hombra {

namespace {

using nlohmann::json;

json sparse_json(const SparseVec& v) {
  json out = json::array();
  for (const auto& [i, c] : v) out.push_back(json::array({i, c.to_string()}));
  return out;
}

json witness_json(const Witness& w) {
  return {{"indices", w.indices}, {"lhs", sparse_json(w.lhs)}, {"rhs", sparse_json(w.rhs)}};
}

const char* verdict_name(Verdict v) { return v == Verdict::Pass ? "pass" : "fail"; }

json entry_json(const AxiomEntry& e) {
  json out = {{"name", e.name},
              {"verdict", verdict_name(e.verdict)},
              {"checked", e.checked},
              {"skipped", e.skipped},
              {"hypothesis_met", e.hypothesis_met}};
  if (e.witness) out["witness"] = witness_json(*e.witness);
  if (!e.note.empty()) out["note"] = e.note;
  return out;
}

json entries_json(const AxiomReport& r) {
  json out = json::array();
  for (const auto& e : r.entries) out.push_back(entry_json(e));
  return out;
}

json flags_json(const FlagSet& f) {
  return {{"alpha_multiplicative", f.alpha_multiplicative}, {"beta_comultiplicative", f.beta_comultiplicative},
          {"alpha_invertible", f.alpha_invertible},         {"beta_invertible", f.beta_invertible},
          {"commutative", f.commutative},                   {"cocommutative", f.cocommutative}};
}

json optional_json(const std::optional<unsigned>& k) { return k ? json(*k) : json(nullptr); }

json verdict_json(const PropositionVerdict& v) {
  json out = {{"name", v.name}, {"hypotheses_met", v.hypotheses}, {"min_exponent", optional_json(v.min_exponent)}};
  if (v.witness) out["witness"] = witness_json(*v.witness);
  if (!v.strict.empty()) {
    json strict = json::array();
    for (const auto& e : v.strict) strict.push_back(entry_json(e));
    out["strict"] = std::move(strict);
  }
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

std::string entry_detail(const AxiomEntry& e) {
  std::string out;
  if (e.witness) {
    std::string idx;
    for (const auto i : e.witness->indices) idx += (idx.empty() ? "" : ",") + std::to_string(i);
    out = "at (" + idx + "): " + describe(e.witness->lhs) + " vs " + describe(e.witness->rhs);
  }
  if (!e.note.empty()) out += (out.empty() ? "" : "; ") + e.note;
  return out;
}

struct Table {
  std::vector<std::vector<std::string>> rows;

  std::string render() const {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
      width.resize(std::max(width.size(), row.size()));
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += "  " + line + "\n";
    }
    return out;
  }
};

void add_entries(Table& t, const AxiomReport& r) {
  for (const auto& e : r.entries) t.rows.push_back({e.name, e.verdict == Verdict::Pass ? "PASS" : "FAIL", entry_detail(e)});
}

}  // namespace

std::string describe(const SparseVec& v) {
  if (v.empty()) return "0";
  std::string out = "{";
  bool first = true;
  for (const auto& [i, c] : v) {
    out += (first ? "" : ", ") + std::to_string(i) + ": " + c.to_string();
    first = false;
  }
  return out + "}";
}

std::string render_json(const Report& r) {
  json out;
  out["structure"] = {{"source", r.source}, {"kind", r.kind}, {"dim", r.dim}, {"basis", r.basis}};
  if (r.flags) out["flags"] = flags_json(*r.flags);
  out["axioms"] = entries_json(r.axioms);
  if (r.strict || r.relative) {
    json antipode = json::object();
    if (r.strict) antipode["strict"] = entries_json(*r.strict);
    if (r.relative) {
      const auto& rel = *r.relative;
      json relative;
      json b = json::array();
      for (const auto& e : rel.report.entries) {
        if (e.name == "a_commutes_with_alpha") relative["a"] = entry_json(e);
        if (e.name == "b_unit" || e.name == "b_counit") b.push_back(entry_json(e));
        if (e.name == "c_relative_inverse") relative["c"] = entry_json(e);
      }
      relative["b"] = std::move(b);
      relative["k_uniform"] = optional_json(rel.k_uniform);
      json per = json::array();
      for (const auto& k : rel.k_per_basis) per.push_back(optional_json(k));
      relative["k_per_basis"] = std::move(per);
      antipode["relative"] = std::move(relative);
    }
    out["antipode"] = std::move(antipode);
  }
  if (r.propositions) {
    json props = json::array();
    for (const auto& v : r.propositions->verdicts) props.push_back(verdict_json(v));
    out["propositions"] = std::move(props);
  }
  return out.dump(2) + "\n";
}

std::string render_text(const Report& r) {
  std::string out = "structure " + r.source + " (" + r.kind + ", dim " + std::to_string(r.dim) + ")\n";
  if (r.flags) {
    const FlagSet& f = *r.flags;
    Table t;
    auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
    t.rows = {{"alpha_multiplicative", yes(f.alpha_multiplicative)},
              {"beta_comultiplicative", yes(f.beta_comultiplicative)},
              {"alpha_invertible", yes(f.alpha_invertible)},
              {"beta_invertible", yes(f.beta_invertible)},
              {"commutative", yes(f.commutative)},
              {"cocommutative", yes(f.cocommutative)}};
    out += "\nflags\n" + t.render();
  }
  if (!r.axioms.entries.empty()) {
    Table t;
    add_entries(t, r.axioms);
    out += "\naxioms\n" + t.render();
  }
  if (r.strict) {
    Table t;
    add_entries(t, *r.strict);
    out += "\nstrict antipode\n" + t.render();
  }
  if (r.relative) {
    Table t;
    add_entries(t, r.relative->report);
    out += "\nrelative antipode\n" + t.render();
    Table k;
    k.rows.push_back({"basis", "k"});
    for (std::size_t i = 0; i < r.relative->k_per_basis.size(); ++i) {
      const auto& v = r.relative->k_per_basis[i];
      k.rows.push_back({i < r.basis.size() ? r.basis[i] : std::to_string(i), v ? std::to_string(*v) : "none"});
    }
    k.rows.push_back({"uniform", r.relative->k_uniform ? std::to_string(*r.relative->k_uniform) : "none"});
    out += k.render();
  }
  if (r.propositions) {
    Table t;
    t.rows.push_back({"proposition", "hypotheses", "min_exponent", "detail"});
    for (const auto& v : r.propositions->verdicts) {
      std::string detail = v.note;
      if (v.witness && v.min_exponent && *v.min_exponent > 0) {
        std::string idx;
        for (const auto i : v.witness->indices) idx += (idx.empty() ? "" : ",") + std::to_string(i);
        detail += std::string(detail.empty() ? "" : "; ") + "fails below at (" + idx + ")";
      }
      for (const auto& e : v.strict) {
        detail += std::string(detail.empty() ? "" : "; ") + e.name + " " + (e.verdict == Verdict::Pass ? "PASS" : "FAIL");
      }
      t.rows.push_back({v.name, v.hypotheses_met() ? "met" : "not met",
                        v.min_exponent ? std::to_string(*v.min_exponent) : "not found", detail});
    }
    out += "\npropositions\n" + t.render();
  }
  return out;
}

}  // namespace hombra
