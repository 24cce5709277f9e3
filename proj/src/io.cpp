#include "oag/io.hpp"

#include <fstream>

namespace oag {

json indexset_to_json(const IndexSet& s) {
  json j;
  j["period"] = s.period();
  j["middle"] = json::array();
  for (long long k : s.middle()) j["middle"].push_back(k);
  j["hi"] = {{"threshold", s.hi_threshold()}, {"residues", json::array()}};
  for (long long r : s.hi_residues()) j["hi"]["residues"].push_back(r);
  j["lo"] = {{"threshold", s.lo_threshold()}, {"residues", json::array()}};
  for (long long r : s.lo_residues()) j["lo"]["residues"].push_back(r);
  return j;
}

IndexSet indexset_from_json(const json& j) {
  std::set<long long> middle, lo_res, hi_res;
  for (const auto& v : j.at("middle")) middle.insert(v.get<long long>());
  for (const auto& v : j.at("hi").at("residues")) hi_res.insert(v.get<long long>());
  for (const auto& v : j.at("lo").at("residues")) lo_res.insert(v.get<long long>());
  return IndexSet::from_parts(j.at("period").get<long long>(),
                              j.at("lo").at("threshold").get<long long>(),
                              j.at("hi").at("threshold").get<long long>(), middle, lo_res,
                              hi_res);
}

json group_element_to_json(const GroupElement& g) {
  json a = json::array();
  for (int i = 0; i < g.rank(); ++i) a.push_back(to_string(g.coord(i)));
  return a;
}

GroupElement group_element_from_json(const json& j) {
  std::vector<Rational> coords;
  for (const auto& v : j) coords.push_back(parse_rational(v.get<std::string>()));
  return GroupElement(std::move(coords));
}

json blockset_to_json(const BlockSet& d) {
  json j;
  j["format"] = "blockset-v1";
  j["rank"] = d.rank();
  j["nonneg"] = d.nonneg();
  j["blocks"] = json::array();
  for (const auto& b : d.blocks()) {
    json bj;
    bj["base"] = group_element_to_json(b.base());
    bj["pattern"] = json::array();
    for (const auto& p : b.pattern()) bj["pattern"].push_back(group_element_to_json(p));
    bj["indices"] = indexset_to_json(b.indices());
    j["blocks"].push_back(std::move(bj));
  }
  return j;
}

BlockSet blockset_from_json(const json& j) {
  if (j.value("format", "blockset-v1") != std::string("blockset-v1"))
    throw Error("unsupported blockset format");
  int rank = j.at("rank").get<int>();
  bool nonneg = j.value("nonneg", false);
  std::vector<Block> blocks;
  for (const auto& bj : j.at("blocks")) {
    GroupElement base = group_element_from_json(bj.at("base"));
    std::vector<GroupElement> pattern;
    for (const auto& p : bj.at("pattern")) pattern.push_back(group_element_from_json(p));
    blocks.push_back(Block(base, std::move(pattern), indexset_from_json(bj.at("indices"))));
  }
  return BlockSet::validate(rank, std::move(blocks), nonneg);
}

json stdform_to_json(const StdForm& x) {
  json j;
  j["format"] = "stdform-v1";
  j["points"] = json::array();
  for (const auto& f : x.point_families())
    j["points"].push_back(
        {{"w", indexset_to_json(f.w)}, {"lambda", to_string(f.lambda)}});
  j["intervals"] = json::array();
  for (const auto& f : x.interval_families())
    j["intervals"].push_back({{"w", indexset_to_json(f.w)},
                              {"lo", to_string(f.lo)},
                              {"hi", to_string(f.hi)}});
  return j;
}

StdForm stdform_from_json(const json& j) {
  if (j.value("format", "stdform-v1") != std::string("stdform-v1"))
    throw Error("unsupported stdform format");
  std::vector<PointFamily> pts;
  std::vector<IntervalFamily> ivs;
  for (const auto& f : j.at("points"))
    pts.push_back(PointFamily{indexset_from_json(f.at("w")),
                              parse_rational(f.at("lambda").get<std::string>())});
  for (const auto& f : j.at("intervals"))
    ivs.push_back(IntervalFamily{indexset_from_json(f.at("w")),
                                 parse_rational(f.at("lo").get<std::string>()),
                                 parse_rational(f.at("hi").get<std::string>())});
  return StdForm(std::move(pts), std::move(ivs));
}

json inp_instance_to_json(const InpPatternInstance& inst) {
  json j;
  j["columns"] = inst.columns;
  j["dense"] = inst.dense;
  j["rows"] = json::array();
  for (const auto& row : inst.rows) {
    json rj;
    rj["level"] = row.level;
    rj["k_inconsistency"] = row.k_inconsistency;
    rj["intervals"] = json::array();
    for (const auto& [lo, hi] : row.intervals)
      rj["intervals"].push_back({{"lo", lo.str()}, {"hi", hi.str()}});
    j["rows"].push_back(std::move(rj));
  }
  j["paths"] = json::array();
  for (const auto& [path, x] : inst.paths) {
    json pj;
    pj["columns"] = path;
    pj["realizer"] = x.str();
    j["paths"].push_back(std::move(pj));
  }
  return j;
}

json decomposition_to_json(const Decomposition& dec) {
  json j;
  j["pieces"] = json::array();
  for (const auto& p : dec.pieces) {
    json pj;
    pj["eta"] = p.eta.str();
    pj["set"] = blockset_to_json(p.set);
    j["pieces"].push_back(std::move(pj));
  }
  j["points"] = json::array();
  for (const auto& p : dec.points) j["points"].push_back(p.str());
  j["interval_piece_counts"] = dec.interval_piece_counts;
  j["generator_lengths"] = dec.generator_lengths;
  return j;
}

json sigma_cover_to_json(const SigmaCover& cover) {
  json j;
  j["mu"] = cover.mu;
  j["intervals"] = json::array();
  for (const auto& iv : cover.intervals) {
    json ij;
    ij["lo"] = iv.lo ? json(iv.lo->str()) : json(nullptr);
    ij["hi"] = iv.hi ? json(iv.hi->str()) : json(nullptr);
    ij["sigma"] = json::array();
    for (const auto& g : iv.sigma) ij["sigma"].push_back(g.str());
    j["intervals"].push_back(std::move(ij));
  }
  j["leftover"] = json::array();
  for (const auto& p : cover.leftover) j["leftover"].push_back(p.str());
  return j;
}

BlockSet load_blockset(const std::string& path) { return blockset_from_json(load_json(path)); }

void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace oag
