#pragma once

// JSON and CSV emission for every report type, plus parsers for the two
// certificate schemas so emitted evidence can be fed back and revalidated.
// Key order is fixed (ordered maps), so output is byte-deterministic.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fmplab/extremal.hpp"
#include "fmplab/fractional.hpp"
#include "fmplab/graph.hpp"
#include "fmplab/graph6.hpp"
#include "fmplab/matching.hpp"
#include "fmplab/preclusion.hpp"
#include "fmplab/properties.hpp"

namespace fmplab {

using ordered_json = nlohmann::ordered_json;

inline ordered_json json_graph_info(const Graph& g) {
  ordered_json j;
  j["n"] = g.order();
  j["m"] = g.edge_count();
  j["graph6"] = to_graph6(g);
  return j;
}

inline ordered_json json_edge_list(const std::vector<Edge>& edges) {
  ordered_json arr = ordered_json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

// {"kind":"fpm"|"no_fpm", "matching":[[u,v,num,den]...],
//  "partition":[[...]...], "witness_S":[...]} — matching/partition present
// on the positive side, witness_S on the negative side when known. Odd
// partition blocks are listed in Hamiltonian-cycle order; pairs as [u,v].
inline ordered_json json_fpm(const FpmResult& r) {
  ordered_json j;
  j["kind"] = r.has ? "fpm" : "no_fpm";
  if (r.has && r.certificate) {
    if (r.certificate->matching) {
      ordered_json arr = ordered_json::array();
      for (const auto& [e, tw] : r.certificate->matching->entries())
        arr.push_back({e.u, e.v, 1, tw == 1 ? 2 : 1});
      j["matching"] = std::move(arr);
    }
    if (r.certificate->partition) {
      ordered_json arr = ordered_json::array();
      for (const PartitionBlock& b : *r.certificate->partition)
        arr.push_back(b.cycle ? *b.cycle : b.vertices);
      j["partition"] = std::move(arr);
    }
  }
  if (!r.has && r.witness) j["witness_S"] = r.witness->s.to_vector();
  return j;
}

// {"fmp":v, "witness":{"S":[...],"I":[...],"T":[[u,v]...]}, "method":"..."}
inline ordered_json json_fmp(const PreclusionResult& r) {
  ordered_json j;
  j["fmp"] = r.value;
  if (r.witness) {
    ordered_json w;
    w["S"] = r.witness->s.to_vector();
    w["I"] = r.witness->i.to_vector();
    w["T"] = json_edge_list(r.witness->t.edges());
    j["witness"] = std::move(w);
  }
  j["method"] = r.method;
  return j;
}

inline ordered_json json_rational(const Rational& q) {
  ordered_json j;
  j["num"] = q.num;
  j["den"] = q.den;
  j["text"] = q.str();
  return j;
}

inline ordered_json json_matching(const Matching& m) {
  return json_edge_list(m.edges());
}

inline ordered_json json_property(const PropertyResult& r) {
  ordered_json j;
  j["name"] = r.name;
  j["checked"] = r.checked;
  j["violations"] = r.violations;
  if (!r.first_violation.empty()) j["first_violation"] = r.first_violation;
  j["pass"] = r.pass();
  return j;
}

// --- extremal records ----------------------------------------------------

inline std::string csv_extremal_header() {
  return "n,k,value,lower,upper,witness_graph6,strategy,status";
}

inline std::string csv_extremal_row(const ExtremalRecord& r) {
  auto cell = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  return std::to_string(r.n) + "," + std::to_string(r.k) + "," +
         cell(r.value) + "," + cell(r.lower) + "," + cell(r.upper) + "," +
         r.witness_graph6.value_or("") + "," + r.strategy + "," + r.status;
}

inline ordered_json json_extremal(const ExtremalRecord& r) {
  ordered_json j;
  j["quantity"] = r.quantity;
  j["n"] = r.n;
  j["k"] = r.k;
  if (r.value) j["value"] = *r.value;
  if (r.lower) j["lower"] = *r.lower;
  if (r.upper) j["upper"] = *r.upper;
  if (r.witness_graph6) j["witness_graph6"] = *r.witness_graph6;
  j["strategy"] = r.strategy;
  j["status"] = r.status;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline ordered_json json_threshold(const ThresholdReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["all_pass"] = r.all_pass;
  ordered_json arr = ordered_json::array();
  for (const ThresholdEntry& e : r.entries) {
    ordered_json je;
    je["complement"] = e.complement_name;
    je["graph6"] = e.graph6;
    je["delta"] = e.delta;
    je["fmp"] = e.fmp_value;
    je["ok"] = e.ok;
    arr.push_back(std::move(je));
  }
  j["graphs"] = std::move(arr);
  return j;
}

inline ordered_json json_s2(const S2Report& r) {
  ordered_json j;
  j["n"] = r.n;
  j["edge_cap"] = r.edge_cap;
  j["complete"] = r.complete;
  j["found"] = r.found;
  if (r.counterexample_graph6) j["counterexample"] = *r.counterexample_graph6;
  ordered_json arr = ordered_json::array();
  for (const S2LevelProgress& p : r.levels) {
    ordered_json jp;
    jp["edges"] = p.edges;
    jp["ranks_done"] = p.ranks_done;
    jp["ranks_total"] = p.ranks_total;
    jp["candidates"] = p.candidates;
    arr.push_back(std::move(jp));
  }
  j["levels"] = std::move(arr);
  return j;
}

inline ordered_json json_f_verify(const FVerifyReport& r) {
  ordered_json j;
  j["record"] = json_extremal(r.record);
  j["dense_side_ok"] = r.upper_ok;
  j["witness_ok"] = r.witness_ok;
  j["complete"] = r.complete;
  j["graphs_checked"] = r.graphs_checked;
  if (r.counterexample_graph6) j["counterexample"] = *r.counterexample_graph6;
  return j;
}

// --- parse-back for revalidation -------------------------------------------

// Rebuilds an FpmResult from json_fpm output. Malformed input raises
// ParseError; semantic defects are left to the check_* validators.
inline FpmResult parse_fpm_json(const ordered_json& j) {
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ParseError("certificate: missing kind", 0);
  std::string kind = j["kind"].get<std::string>();
  FpmResult r{kind == "fpm", std::nullopt, std::nullopt};
  if (kind != "fpm" && kind != "no_fpm")
    throw ParseError("certificate: unknown kind " + kind, 0);
  if (r.has) {
    FpmCertificate cert;
    if (j.contains("matching")) {
      std::vector<std::pair<Edge, int>> entries;
      for (const auto& row : j["matching"]) {
        if (!row.is_array() || row.size() != 4)
          throw ParseError("certificate: matching rows are [u,v,num,den]", 0);
        int u = row[0].get<int>(), v = row[1].get<int>();
        int num = row[2].get<int>(), den = row[3].get<int>();
        if (num != 1 || (den != 1 && den != 2))
          throw ParseError("certificate: edge weight must be 1/2 or 1", 0);
        entries.emplace_back(Edge(u, v), den == 2 ? 1 : 2);
      }
      cert.matching = HalfIntegralMatching(std::move(entries));
    }
    if (j.contains("partition")) {
      std::vector<PartitionBlock> blocks;
      for (const auto& row : j["partition"]) {
        if (!row.is_array() || row.empty())
          throw ParseError("certificate: partition blocks are vertex arrays", 0);
        std::vector<int> verts = row.get<std::vector<int>>();
        PartitionBlock b;
        if (verts.size() == 2) {
          b.vertices = verts;
        } else {
          b.cycle = verts;
          std::sort(verts.begin(), verts.end());
          b.vertices = verts;
        }
        blocks.push_back(std::move(b));
      }
      cert.partition = std::move(blocks);
    }
    if (!cert.matching && !cert.partition)
      throw ParseError("certificate: fpm kind without evidence", 0);
    r.certificate = std::move(cert);
  } else if (j.contains("witness_S")) {
    r.witness = NoFpmWitness{VertexSet::of(j["witness_S"].get<std::vector<int>>())};
  }
  return r;
}

// Rebuilds (value, witness) from json_fmp output.
inline std::pair<int, std::optional<FmpWitness>> parse_fmp_json(
    const ordered_json& j) {
  if (!j.contains("fmp") || !j["fmp"].is_number_integer())
    throw ParseError("result: missing fmp value", 0);
  int value = j["fmp"].get<int>();
  std::optional<FmpWitness> w;
  if (j.contains("witness")) {
    const auto& jw = j["witness"];
    if (!jw.contains("S") || !jw.contains("I") || !jw.contains("T"))
      throw ParseError("result: witness needs S, I and T", 0);
    std::vector<Edge> t;
    for (const auto& row : jw["T"]) {
      if (!row.is_array() || row.size() != 2)
        throw ParseError("result: T rows are [u,v]", 0);
      t.emplace_back(row[0].get<int>(), row[1].get<int>());
    }
    w = FmpWitness{VertexSet::of(jw["S"].get<std::vector<int>>()),
                   VertexSet::of(jw["I"].get<std::vector<int>>()),
                   EdgeSet(std::move(t))};
  }
  return {value, std::move(w)};
}

}  // namespace fmplab
