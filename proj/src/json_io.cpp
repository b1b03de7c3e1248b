#include "rouquier/json_io.hpp"

#include <cstdio>
#include <map>
#include <stdexcept>

namespace rouquier {

Json to_json(const Partition& p) {
  Json out = Json::array();
  for (int part : p.parts()) out.push_back(part);
  return out;
}

Json to_json(const MultiPartition& lambda) {
  Json out = Json::array();
  for (const auto& c : lambda.components()) out.push_back(to_json(c));
  return out;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("partition parts must be integers");
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));
}

MultiPartition multipartition_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("multipartition must be a non-empty JSON array of arrays");
  std::vector<Partition> comps;
  for (const auto& c : j) comps.push_back(partition_from_json(c));
  return MultiPartition(std::move(comps));
}

MultiPartition parse_multipartition(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed multipartition literal: ") + e.what());
  }
  return multipartition_from_json(j);
}

Json to_json(const ChargedSymbol& symbol) {
  Json rows = Json::array();
  for (const auto& row : symbol.rows) rows.push_back(row.entries);
  return rows;
}

Json to_json(const ContentMultiset& content) { return content.sorted_values(); }

Json to_json(const EssentialHyperplane& h) {
  if (std::holds_alternative<NHyperplane>(h)) return Json{{"type", "N"}};
  const auto& p = std::get<PairHyperplane>(h);
  return Json{{"type", "pair"}, {"k", p.k}, {"s", p.s}, {"t", p.t}};
}

EssentialHyperplane hyperplane_from_json(const Json& j) {
  const auto type = j.at("type").get<std::string>();
  if (type == "N") return NHyperplane{};
  if (type == "pair")
    return PairHyperplane{j.at("k").get<int>(), j.at("s").get<int>(), j.at("t").get<int>()};
  throw std::invalid_argument("unknown hyperplane type: " + type);
}

Json to_json(const SetPartition& sp, const std::vector<MultiPartition>& chars) {
  if (chars.size() != sp.universe())
    throw std::invalid_argument("set partition and character list differ in size");
  Json blocks = Json::array();
  for (const auto& block : sp.blocks()) {
    Json members = Json::array();
    for (std::size_t i : block) members.push_back(to_json(chars[i]));
    blocks.push_back(std::move(members));
  }
  return Json{{"blocks", std::move(blocks)}};
}

SetPartition set_partition_from_json(const Json& j, int d, int r) {
  const auto chars = enumerate_multipartitions(d, r);
  std::map<MultiPartition, std::size_t> index;
  for (std::size_t i = 0; i < chars.size(); ++i) index.emplace(chars[i], i);
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& block : j.at("blocks")) {
    auto& out = blocks.emplace_back();
    for (const auto& member : block) {
      auto it = index.find(multipartition_from_json(member));
      if (it == index.end()) throw std::invalid_argument("block member is not a character of G(d,1,r)");
      out.push_back(it->second);
    }
  }
  return SetPartition::from_blocks(chars.size(), std::move(blocks));
}

namespace {

std::string binomial_key_string(const BinomialKey& key) {
  return "(" + std::to_string(key.k) + "," + std::to_string(key.s) + "," + std::to_string(key.t) + ")";
}

BinomialKey binomial_key_from_string(const std::string& s) {
  BinomialKey key;
  char tail = 0;
  if (std::sscanf(s.c_str(), "(%d,%d,%d%c", &key.k, &key.s, &key.t, &tail) != 4 || tail != ')')
    throw std::invalid_argument("malformed binomial key: " + s);
  return key;
}

}  // namespace

Json to_json(const FactoredSchurElement& f) {
  Json xm1 = Json::object();
  for (const auto& [c, e] : f.xminus1) xm1[std::to_string(c)] = e;
  Json bins = Json::object();
  for (const auto& [key, e] : f.binomials) bins[binomial_key_string(key)] = e;
  return Json{{"sign", f.sign},      {"x", f.x_exponent}, {"u", f.u_exponents},
              {"xminus1", xm1},      {"binomials", bins}};
}

FactoredSchurElement factored_schur_from_json(const Json& j) {
  FactoredSchurElement f;
  f.sign = j.at("sign").get<int>();
  f.x_exponent = j.at("x").get<long long>();
  f.u_exponents = j.at("u").get<std::vector<long long>>();
  f.d = static_cast<int>(f.u_exponents.size());
  for (const auto& [c, e] : j.at("xminus1").items()) f.xminus1[std::stoi(c)] = e.get<long long>();
  for (const auto& [k, e] : j.at("binomials").items())
    f.binomials[binomial_key_from_string(k)] = e.get<long long>();
  return f;
}

Json to_json(const SpecializedSchurData& s) {
  Json scalars = Json::object();
  for (const auto& [w, e] : s.degenerate_scalars) scalars[std::to_string(w)] = e;
  Json integers = Json::object();
  for (const auto& [c, e] : s.integer_content) integers[std::to_string(c)] = e;
  return Json{{"a", s.q_valuation},
              {"A", s.q_degree},
              {"degenerate_scalars", scalars},
              {"integer_content", integers},
              {"bad_primes", s.supporting_primes()}};
}

Json to_json(const Specialization& phi) {
  return Json{{"d", phi.d}, {"r", phi.r}, {"weights", phi.weights}, {"n", phi.n}};
}

Json to_json(const BlockReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    Json witnesses = Json::array();
    for (const auto& w : f.witnesses) witnesses.push_back(to_json(w));
    failures.push_back(Json{{"check", f.check}, {"message", f.message}, {"witnesses", witnesses}});
  }
  return Json{{"specialization", to_json(report.phi)},
              {"checks", report.checks_run},
              {"passed", report.passed()},
              {"failures", failures}};
}

}  // namespace rouquier
