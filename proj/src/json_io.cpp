#include "katospec/json_io.hpp"

#include <cstdio>

namespace katospec {

namespace {

const ordered_json& field(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::BadInput, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const ordered_json& j, const char* key) {
  const ordered_json& v = field(j, key);
  if (!v.is_number_integer())
    throw Error(ErrorCode::BadInput, std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const ordered_json& v, const char* what) {
  if (!v.is_array())
    throw Error(ErrorCode::BadInput, std::string(what) + " must be an array of integers");
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_number_integer())
      throw Error(ErrorCode::BadInput, std::string(what) + " must contain only integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<Mask> mask_list(const ordered_json& v, int width, const char* what) {
  if (!v.is_array())
    throw Error(ErrorCode::BadInput, std::string(what) + " must be an array of point lists");
  std::vector<Mask> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(mask_from_members(int_list(e, what), width));
  return out;
}

std::string hash_hex(std::uint64_t h) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

FiniteMonoid monoid_from_json(const ordered_json& j) {
  int order = int_field(j, "order");
  int unit = int_field(j, "unit");
  const ordered_json& rows = field(j, "table");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(order < 0 ? 0 : order))
    throw Error(ErrorCode::BadInput, "table must have one row per element");
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(order) * order);
  for (const auto& row : rows) {
    std::vector<int> r = int_list(row, "table row");
    if (r.size() != static_cast<std::size_t>(order))
      throw Error(ErrorCode::BadInput, "table rows must have one entry per element");
    table.insert(table.end(), r.begin(), r.end());
  }
  return validate_monoid(order, unit, std::move(table));
}

FinitePoset poset_from_json(const ordered_json& j) {
  int size = int_field(j, "size");
  std::vector<std::pair<int, int>> pairs;
  if (j.contains("le")) {
    const ordered_json& le = field(j, "le");
    if (!le.is_array()) throw Error(ErrorCode::BadInput, "\"le\" must be an array of pairs");
    for (const auto& e : le) {
      std::vector<int> p = int_list(e, "\"le\" entry");
      if (p.size() != 2) throw Error(ErrorCode::BadInput, "\"le\" entries must be [x, y] pairs");
      pairs.push_back({p[0], p[1]});
    }
  }
  return make_poset(size, pairs);
}

FiniteSpace space_from_json(const ordered_json& j) {
  int size = int_field(j, "size");
  const char* key = j.contains("opens") ? "opens" : "base";
  return from_open_family(size, mask_list(field(j, key), size, key));
}

BasedSpace based_space_from_json(const ordered_json& j) {
  int size = int_field(j, "size");
  if (j.contains("base")) {
    std::vector<Mask> base = mask_list(field(j, "base"), size, "base");
    return make_based_space(from_open_family(size, base), base);
  }
  FiniteSpace space = from_open_family(size, mask_list(field(j, "opens"), size, "opens"));
  std::vector<Mask> base = space.opens;
  return make_based_space(std::move(space), std::move(base));
}

FiniteRing ring_from_json(const ordered_json& j) {
  return make_ring(int_list(field(j, "factors"), "\"factors\""));
}

ordered_json json_of(const Mask& m) { return m.members(); }

ordered_json json_of(const FiniteMonoid& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.order; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.order; ++j) row.push_back(m.mul(i, j));
    rows.push_back(std::move(row));
  }
  return {{"order", m.order}, {"unit", m.unit}, {"table", std::move(rows)}};
}

ordered_json json_of(const FinitePoset& p) {
  ordered_json below = ordered_json::array();
  for (const auto& b : p.below) below.push_back(json_of(b));
  return {{"size", p.size}, {"below", std::move(below)}};
}

ordered_json json_of(const FiniteSpace& x) {
  ordered_json opens = ordered_json::array();
  for (const auto& u : x.opens) opens.push_back(json_of(u));
  return {{"size", x.size}, {"opens", std::move(opens)}};
}

ordered_json json_of(const SpecSpace& s) {
  ordered_json points = ordered_json::array();
  for (const auto& p : s.points) points.push_back(json_of(p));
  ordered_json d = ordered_json::array();
  for (const auto& m : s.d_base) d.push_back(json_of(m));
  return {{"points", std::move(points)}, {"d_base", std::move(d)}, {"order", json_of(s.order)}};
}

ordered_json json_of(const ExpSpace& e) {
  ordered_json classes = ordered_json::array();
  for (const auto& pt : e.points)
    classes.push_back({{"filter", json_of(pt.filter)}, {"rep", json_of(pt.canonical_rep)}});
  ordered_json tilde = ordered_json::array();
  for (const auto& t : e.tilde_base) tilde.push_back(json_of(t));
  return {{"classes", std::move(classes)}, {"tilde_base", std::move(tilde)}, {"i", e.i_map}};
}

ordered_json json_of(const StarCertificate& c) {
  return {{"holds", c.holds},
          {"artinian_justified", c.artinian_justified},
          {"exhaustive_ran", c.exhaustive_ran},
          {"pairs_checked", c.pairs_checked}};
}

ordered_json json_of(const ConditionReport& r) {
  ordered_json j = {{"t0", r.t0},
                    {"blob_base", r.blob_base},
                    {"intersections_ok", r.intersections_ok},
                    {"star", r.star},
                    {"verdict", r.verdict()}};
  j["t0_failure"] = r.t0_failure ? ordered_json({r.t0_failure->first, r.t0_failure->second})
                                 : ordered_json(nullptr);
  j["blob_base_failure"] =
      r.blob_base_failure ? json_of(*r.blob_base_failure) : ordered_json(nullptr);
  j["intersections_failure"] =
      r.intersections_failure ? json_of(*r.intersections_failure) : ordered_json(nullptr);
  return j;
}

ordered_json json_of(const ExpCharReport& r) {
  return {{"blob_base_and_closures", r.blob_base_and_closures},
          {"blob_base_mcjs", r.blob_base_mcjs},
          {"some_base_mcjs", r.some_base_mcjs},
          {"some_base_fixed_point", r.some_base_fixed_point},
          {"some_space_exponential", r.some_space_exponential},
          {"agree", r.agree}};
}

ordered_json json_of(const HochsterReport& r) {
  return {{"t0", r.t0},
          {"compact_open_base", r.compact_open_base},
          {"sober", r.sober},
          {"verdict", r.verdict()}};
}

ordered_json json_of(const ClassificationResult& r) {
  ordered_json j;
  j["is_spectrum"] = r.is_spectrum;
  j["witness_monoid"] = r.witness_monoid ? json_of(*r.witness_monoid) : ordered_json(nullptr);
  ordered_json legend = ordered_json::array();
  for (const auto& m : r.witness_legend) legend.push_back(json_of(m));
  j["witness_legend"] = std::move(legend);
  j["witness_homeo"] = r.witness_homeo ? ordered_json(*r.witness_homeo) : ordered_json(nullptr);
  j["failed_condition"] = r.failed_condition ? ordered_json(*r.failed_condition) : ordered_json(nullptr);
  return j;
}

ordered_json json_of(const SuiteResult& r) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json checks;
    for (std::size_t i = 0; i < row.checks.size(); ++i) checks[row.checks[i]] = row.results[i];
    rows.push_back({{"kind", row.kind},
                    {"param", row.param},
                    {"index", row.index},
                    {"hash", hash_hex(row.canonical_hash)},
                    {"is_spectrum", row.is_spectrum},
                    {"checks", std::move(checks)}});
  }
  return {{"max_order", r.max_order},
          {"max_size", r.max_size},
          {"seed", r.seed},
          {"monoids_checked", r.monoids_checked},
          {"spaces_checked", r.spaces_checked},
          {"all_pass", r.all_pass()},
          {"failures", r.failures},
          {"rows", std::move(rows)}};
}

std::string dump_json(const ordered_json& j) { return j.dump(2); }

}  // namespace katospec
