#pragma once

// Certificates: a Beauville structure plus its verification report as a
// canonical JSON document (sorted keys, integers only, newline-terminated).

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "bvl/beauville.hpp"

namespace bvl {

using Json = nlohmann::json;

inline constexpr int kCertificateFormat = 1;

inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace detail {

inline std::uint64_t to_u64(wide_t v) {
  if (v >> 64) throw CapExceeded("period exceeds 64 bits");
  return static_cast<std::uint64_t>(v);
}

inline Json images_json(const Permutation& p) {
  Json a = Json::array();
  for (std::size_t i = 0; i < p.degree(); ++i) a.push_back(static_cast<int>(p[i]) + 1);
  return a;
}

inline Permutation permutation_from_json(const Json& a, int n) {
  if (!a.is_array() || a.size() != static_cast<std::size_t>(n)) throw ParseError("permutation of wrong length");
  std::vector<point_t> img;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& v : a) {
    if (!v.is_number_integer()) throw ParseError("permutation entry is not an integer");
    const auto x = v.get<long long>();
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x - 1)]) throw ParseError("permutation is not a bijection");
    seen[static_cast<std::size_t>(x - 1)] = true;
    img.push_back(static_cast<point_t>(x - 1));
  }
  return Permutation::from_images(std::move(img));
}

inline Json type_json(const ProductType& t) { return Json::array({to_u64(t[0]), to_u64(t[1]), to_u64(t[2])}); }

}  // namespace detail

/// The report part of a certificate: verdicts, proof tags and evidence digests.
inline Json report_json(const VerificationReport& r) {
  Json rep;
  rep["condition1"] = r.condition1();
  rep["condition2"] = r.condition2();
  rep["condition3"] = r.condition3.holds;
  Json gen = Json::array();
  for (const auto& g : r.generation) {
    Json j;
    j["coordinate_proofs"] = g.coordinate_proofs;
    j["separated_by_invariants"] = g.pairs_separated_by_invariants;
    j["separated_by_search"] = g.pairs_separated_by_search;
    j["equivalent_pairs"] = g.equivalent_pairs.size();
    Json gs = Json::array();
    for (const auto& c : g.goursat) gs.push_back(Json::array({c.i + 1, c.j + 1, c.full ? 1 : 0}));
    j["pair_subgroup_checks"] = gs;
    gen.push_back(j);
  }
  rep["generation"] = gen;
  rep["hyperbolic"] = Json::array({r.hyperbolic[0], r.hyperbolic[1]});

  // One digest per prime over its (element pair, m, verdict) decisions in order.
  std::map<std::uint64_t, std::uint64_t> digests;
  std::map<std::uint64_t, std::uint64_t> decisions;
  for (const auto& c : r.condition3.checks) {
    auto& h = digests.try_emplace(c.p, 0xcbf29ce484222325ULL).first->second;
    for (std::size_t m = 0; m < c.conjugate.size(); ++m) {
      h = fnv1a(std::to_string(c.e1) + "," + std::to_string(c.e2) + "," + std::to_string(m + 1) + "," +
                    (c.conjugate[m] ? "1" : "0") + ";",
                h);
      ++decisions[c.p];
    }
  }
  Json primes = Json::object();
  for (const auto& [p, h] : digests)
    primes[std::to_string(p)] = Json{{"decisions", decisions[p]}, {"digest", h}};
  rep["condition3_primes"] = primes;
  return rep;
}

inline Json certificate_body(const BeauvilleStructure& s) {
  Json c;
  c["format"] = kCertificateFormat;
  c["group"] = {{"family", "alternating"}, {"n", s.n}, {"k", s.k}};
  Json triples = Json::array();
  for (const auto& t : s.triples) {
    Json j;
    const char* names[3] = {"a", "b", "c"};
    for (int e = 0; e < 3; ++e) {
      Json comps = Json::array();
      for (const auto& g : t.coords) comps.push_back(detail::images_json(g.at(e)));
      j[names[e]] = comps;
    }
    triples.push_back(j);
  }
  c["triples"] = triples;
  c["types"] = Json::array({detail::type_json(s.report.types[0]), detail::type_json(s.report.types[1])});
  c["report"] = report_json(s.report);
  Json params = Json::object();
  for (const auto& [k, v] : s.params) params[k] = v;
  Json coords = Json::array();
  for (const auto& t : s.triples) {
    Json side = Json::array();
    for (const auto& g : t.coords) side.push_back(g.provenance);
    coords.push_back(side);
  }
  c["provenance"] = {{"recipe", s.recipe}, {"params", params}, {"seed", s.seed}, {"coordinates", coords}};
  return c;
}

inline std::uint64_t content_digest(const Json& body) {
  Json b = body;
  b.erase("content_digest");
  return fnv1a(b.dump());
}

/// Canonical text of the certificate, newline-terminated.
inline std::string emit_certificate(const BeauvilleStructure& s) {
  Json c = certificate_body(s);
  c["content_digest"] = content_digest(c);
  return c.dump(1) + "\n";
}

struct CertificateCheck {
  bool ok = false;
  std::string failure;  // the first failed condition or mismatch
  VerificationReport report;
  std::size_t n = 0, k = 0;
};

/// Parses a certificate; throws ParseError if it is malformed.
inline std::pair<Json, std::array<ProductTriple, 2>> parse_certificate(const std::string& text) {
  Json c;
  try {
    c = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    if (!c.is_object() || c.at("format") != kCertificateFormat) throw ParseError("unknown certificate format");
    const auto& g = c.at("group");
    const int n = g.at("n").get<int>();
    const auto k = g.at("k").get<std::size_t>();
    if (n < 5 || n > 64 || k < 1) throw ParseError("group descriptor out of range");
    const auto& tr = c.at("triples");
    if (!tr.is_array() || tr.size() != 2) throw ParseError("expected two triples");
    std::array<ProductTriple, 2> out;
    for (int i = 0; i < 2; ++i) {
      const auto& a = tr[i].at("a");
      const auto& b = tr[i].at("b");
      const auto& cc = tr[i].at("c");
      if (!a.is_array() || a.size() != k || b.size() != k || cc.size() != k)
        throw ParseError("triple " + std::to_string(i + 1) + " does not have k coordinates");
      for (std::size_t j = 0; j < k; ++j)
        out[i].coords.push_back({detail::permutation_from_json(a[j], n), detail::permutation_from_json(b[j], n),
                                 detail::permutation_from_json(cc[j], n), {}, {}});
    }
    c.at("content_digest").get<std::uint64_t>();
    c.at("report");
    c.at("types");
    return {std::move(c), std::move(out)};
  } catch (const Json::exception& e) {
    throw ParseError(std::string("certificate field missing or mistyped: ") + e.what());
  }
}

/// Full re-verification from the stored permutations alone, then comparison
/// of the stored types, report and digest with the recomputed ones.
inline CertificateCheck verify_certificate(const std::string& text) {
  auto [c, triples] = parse_certificate(text);
  CertificateCheck r;
  r.n = c["group"]["n"].get<std::size_t>();
  r.k = c["group"]["k"].get<std::size_t>();
  r.report = verify_pair(triples[0], triples[1]);
  if (!r.report.ok()) {
    r.failure = r.report.failure();
    return r;
  }
  if (c["types"] != Json::array({detail::type_json(r.report.types[0]), detail::type_json(r.report.types[1])})) {
    r.failure = "stored types differ from the recomputed types";
    return r;
  }
  if (c["report"] != report_json(r.report)) {
    r.failure = "stored report differs from the recomputed report";
    return r;
  }
  if (c["group"] != Json{{"family", "alternating"}, {"n", r.n}, {"k", r.k}}) {
    r.failure = "group descriptor is not canonical";
    return r;
  }
  if (c["content_digest"].get<std::uint64_t>() != content_digest(c)) {
    r.failure = "content digest mismatch";
    return r;
  }
  r.ok = true;
  return r;
}

}  // namespace bvl
