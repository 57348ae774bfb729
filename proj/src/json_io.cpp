#include "agree/json_io.hpp"

#include <cstdio>
#include <istream>

#include "agree/search.hpp"

namespace agree {

namespace {

std::string mask_hex(Mask m) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(m));
  return buf;
}

Mask parse_mask_hex(const std::string& s, std::size_t index) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos, 16);
  } catch (const std::exception&) {
    throw ParseError("field 'masks[" + std::to_string(index) +
                     "]': not a hex mask: '" + s + "'");
  }
  if (pos != s.size()) {
    throw ParseError("field 'masks[" + std::to_string(index) +
                     "]': trailing characters in '" + s + "'");
  }
  return v;
}

}  // namespace

std::string digest_hex(std::uint64_t value) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx",
                static_cast<unsigned long long>(value));
  return buf;
}

nlohmann::json family_to_json(const Family& fam, bool hex) {
  nlohmann::json j;
  j["n"] = fam.n();
  if (hex) {
    auto& masks = j["masks"] = nlohmann::json::array();
    for (Mask m : fam.members()) masks.push_back(mask_hex(m));
  } else {
    auto& sets = j["sets"] = nlohmann::json::array();
    for (Mask m : fam.members()) sets.push_back(mask_coords(m));
  }
  return j;
}

Family family_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("family document must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw ParseError("field 'n': required integer");
  }
  const int n = j["n"].get<int>();
  if (n < 1 || n > kMaxAlgebraCoords) {
    throw ParseError("field 'n': must be in [1, 63], got " + std::to_string(n));
  }
  const GroundSet ground(n);

  const bool has_sets = j.contains("sets");
  const bool has_masks = j.contains("masks");
  if (has_sets == has_masks) {
    throw ParseError("family object needs exactly one of 'sets' or 'masks'");
  }

  std::vector<Mask> members;
  if (has_sets) {
    const auto& sets = j["sets"];
    if (!sets.is_array()) throw ParseError("field 'sets': must be an array");
    members.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const auto& set = sets[i];
      if (!set.is_array()) {
        throw ParseError("field 'sets[" + std::to_string(i) +
                         "]': must be an array of coordinates");
      }
      Mask m = 0;
      for (const auto& c : set) {
        if (!c.is_number_integer()) {
          throw ParseError("field 'sets[" + std::to_string(i) +
                           "]': coordinates must be integers");
        }
        const int coord = c.get<int>();
        if (coord < 1 || coord > n) {
          throw ParseError("field 'sets[" + std::to_string(i) +
                           "]': coordinate " + std::to_string(coord) +
                           " out of range for n=" + std::to_string(n));
        }
        m |= coord_bit(coord);
      }
      members.push_back(m);
    }
  } else {
    const auto& masks = j["masks"];
    if (!masks.is_array()) throw ParseError("field 'masks': must be an array");
    members.reserve(masks.size());
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (!masks[i].is_string()) {
        throw ParseError("field 'masks[" + std::to_string(i) +
                         "]': must be a hex string");
      }
      const Mask m = parse_mask_hex(masks[i].get<std::string>(), i);
      if (!ground.contains(m)) {
        throw ParseError("field 'masks[" + std::to_string(i) + "]': mask " +
                         mask_hex(m) + " has bits outside n=" +
                         std::to_string(n));
      }
      members.push_back(m);
    }
  }
  return Family(ground, std::move(members));
}

Family family_from_stream(std::istream& in, const std::string& source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
  try {
    return family_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(source + ": " + e.what());
  }
}

nlohmann::json witness_to_json(const TupleWitness& w, GroundSet ground) {
  nlohmann::json j;
  auto& sets = j["sets"] = nlohmann::json::array();
  for (Mask m : w.sets) sets.push_back(mask_coords(m));
  j["and"] = mask_coords(w.and_mask);
  j["or"] = mask_coords(w.or_mask);
  j["agreement_count"] = w.agreement_count;
  j["disagreement_count"] = ground.n() - w.agreement_count;
  return j;
}

nlohmann::json trace_to_json(const SquashTrace& trace) {
  nlohmann::json j;
  j["initial"] = {{"nontrivial", trace.initial_nontrivial},
                  {"size", trace.initial_size},
                  {"digest", digest_hex(trace.initial_digest)}};
  auto& steps = j["steps"] = nlohmann::json::array();
  for (const SquashStep& s : trace.steps) {
    nlohmann::json step = {{"j", s.coord},
                           {"digest", digest_hex(s.digest)},
                           {"nontrivial", s.nontrivial},
                           {"size", s.size}};
    if (s.family) step["family"] = family_to_json(*s.family);
    steps.push_back(std::move(step));
  }
  switch (trace.outcome) {
    case SquashOutcome::stayed_nontrivial_down_closed:
      j["outcome"] = {{"kind", "stayed"}};
      break;
    case SquashOutcome::lost_nontriviality:
      j["outcome"] = {{"kind", "lost"}, {"j", trace.loss_coord}};
      break;
    case SquashOutcome::trivial_at_entry:
      j["outcome"] = {{"kind", "trivial_at_entry"}};
      break;
  }
  return j;
}

nlohmann::json search_result_to_json(const SearchResult& res) {
  const SearchParams& p = res.params;
  nlohmann::json params = {
      {"n", p.n},
      {"r", p.r},
      {"t", p.t},
      {"require_nontrivial", p.require_nontrivial},
      {"enumerate_all_maximum", p.enumerate_all_maximum},
      {"jobs", p.jobs},
      {"theorem_range", theorem_range(p.n, p.r, p.t)},
  };
  params["node_limit"] =
      p.node_limit ? nlohmann::json(*p.node_limit) : nlohmann::json(nullptr);
  params["bound"] = (p.n >= p.r + p.t)
                        ? nlohmann::json(theorem_bound(p.n, p.r, p.t))
                        : nlohmann::json(nullptr);

  nlohmann::json j;
  j["params"] = std::move(params);
  j["optimum"] = res.optimum;
  j["feasible"] = res.feasible;
  j["exact"] = res.exact;
  j["witness"] = family_to_json(res.witness);
  if (res.all_maximum_canonical) {
    auto& arr = j["all_maximum_canonical"] = nlohmann::json::array();
    for (const Family& f : *res.all_maximum_canonical) {
      arr.push_back(family_to_json(f));
    }
  }
  j["stats"] = {{"nodes_explored", res.stats.nodes_explored},
                {"prunes_by_bound", res.stats.prunes_by_bound},
                {"prunes_by_feasibility", res.stats.prunes_by_feasibility}};
  if (res.params.enumerate_all_maximum) {
    j["stats"]["maximum_families_found"] = res.stats.maximum_families_found;
  }
  return j;
}

nlohmann::json uniqueness_to_json(const UniquenessReport& rep) {
  nlohmann::json j;
  j["params"] = {{"n", rep.n}, {"r", rep.r}, {"t", rep.t}};
  j["bound"] = rep.bound;
  j["optimum"] = rep.optimum;
  j["inconclusive"] = rep.inconclusive;
  j["optimum_matches_bound"] = rep.optimum_matches_bound;
  j["maximum_family_count"] = rep.maximum_family_count;
  j["class_count"] = rep.class_count;
  j["expected_class_found"] = rep.expected_class_found;
  j["trivial_families_of_equal_size_exist"] =
      rep.trivial_families_of_equal_size_exist;
  j["pass"] = rep.pass;
  auto& arr = j["classes"] = nlohmann::json::array();
  for (const Family& f : rep.classes) arr.push_back(family_to_json(f));
  return j;
}

}  // namespace agree
