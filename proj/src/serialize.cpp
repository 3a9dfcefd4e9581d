#include "sfill/serialize.hpp"

#include <stdexcept>

#include "sfill/chain_io.hpp"
#include "sfill/digest.hpp"

namespace sfill {

Json chain_to_json(const Chain& c) {
  Json j;
  j["field"] = field_name(c.field());
  j["n"] = c.n();
  j["dim"] = c.dim();
  Json terms = Json::array();
  for (const Term& t : c.terms()) {
    Json term;
    term["coef"] = c.field() == Field::F2 ? std::string("1") : format_rational(t.coef);
    term["vertices"] = t.simplex.vertices();
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

Chain chain_from_json(const Json& j) {
  const Field f = parse_field(j.at("field").get<std::string>());
  const int n = j.at("n").get<int>();
  const int dim = j.at("dim").get<int>();
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    Rational q(t.at("coef").get<std::string>());
    q.canonicalize();
    terms.push_back({Simplex::from_vertices(t.at("vertices").get<std::vector<int>>()), q});
  }
  return Chain::from_terms(f, n, dim, std::move(terms));
}

std::string certificate_digest(const FillCertificate& c) {
  return sha256_hex(emit_chain(c.target) + emit_chain(c.filling));
}

namespace {

Json frames_to_json(const std::vector<TranscriptFrame>& frames) {
  Json arr = Json::array();
  for (const auto& f : frames) {
    Json j;
    j["depth"] = f.depth;
    j["d"] = f.d;
    j["m"] = f.m;
    if (f.pivot) j["pivot"] = f.pivot;
    j["method"] = f.method;
    if (f.pivot) {
      j["lower_deficit"] = f.lower_deficit;
      j["child_deficit"] = f.child_deficit;
    }
    j["deficit"] = f.deficit;
    if (!f.note.empty()) j["note"] = f.note;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<TranscriptFrame> frames_from_json(const Json& arr) {
  std::vector<TranscriptFrame> out;
  for (const auto& j : arr) {
    TranscriptFrame f;
    f.depth = j.at("depth");
    f.d = j.at("d");
    f.m = j.at("m");
    f.pivot = j.value("pivot", 0);
    f.method = j.at("method");
    f.lower_deficit = j.value("lower_deficit", std::int64_t{0});
    f.child_deficit = j.value("child_deficit", std::int64_t{0});
    f.deficit = j.at("deficit");
    f.note = j.value("note", std::string());
    out.push_back(std::move(f));
  }
  return out;
}

Json profiles_to_json(const std::vector<DegreeProfile>& ps) {
  Json arr = Json::array();
  for (const auto& p : ps) {
    Json j;
    j["m"] = p.m;
    j["pivot"] = p.pivot;
    j["first_pivot"] = p.first_pivot;
    j["case"] = p.case_label;
    j["first_pivot_degree"] = p.first_pivot_degree;
    j["vertices"] = p.vertices;
    j["a"] = p.a;
    j["b"] = p.b;
    j["degree"] = p.deg;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace

Json certificate_to_json(const FillCertificate& c) {
  Json j;
  j["schema_version"] = kCertificateSchema;
  j["kind"] = "fill_certificate";
  j["target"] = chain_to_json(c.target);
  j["universe"] = vertices_of(c.universe);
  j["filling"] = chain_to_json(c.filling);
  j["deficit"] = c.deficit;
  Json p;
  p["applicable"] = c.parity.applicable;
  p["holds"] = c.parity.holds;
  p["cycle_size_mod2"] = c.parity.cycle_size_mod2;
  p["binomial_mod2"] = c.parity.binomial_mod2;
  j["parity"] = std::move(p);
  j["transcript"] = frames_to_json(c.transcript);
  if (!c.profiles.empty()) j["degree_profiles"] = profiles_to_json(c.profiles);
  j["digest"] = certificate_digest(c);
  return j;
}

FillCertificate certificate_from_json(const Json& j) {
  if (j.value("schema_version", 0) != kCertificateSchema) throw std::runtime_error("unsupported certificate schema");
  FillCertificate c;
  c.target = chain_from_json(j.at("target"));
  c.filling = chain_from_json(j.at("filling"));
  for (int v : j.at("universe").get<std::vector<int>>()) c.universe |= vertex_bit(v);
  c.deficit = j.at("deficit").get<std::int64_t>();
  c.parity = parity_status(c.target, vertex_count(c.universe));
  c.transcript = frames_from_json(j.at("transcript"));
  if (j.at("digest").get<std::string>() != certificate_digest(c)) throw std::runtime_error("certificate digest mismatch");
  if (auto why = check_certificate(c); !why.empty()) throw std::runtime_error("certificate rejected: " + why);
  return c;
}

Json hamiltonian_to_json(const HamiltonianResult& h) {
  Json j;
  j["schema_version"] = kCertificateSchema;
  j["kind"] = "hamiltonian";
  j["n"] = h.n;
  j["d"] = h.d;
  j["field"] = field_name(h.field);
  j["outcome"] = outcome_name(h.outcome);
  j["sigma"] = h.sigma.vertices();
  j["cycle_size"] = h.cycle.size();
  j["deficit"] = h.deficit;
  if (!h.reason.empty()) j["reason"] = h.reason;
  if (!h.note.empty()) j["note"] = h.note;
  j["cycle"] = chain_to_json(h.cycle);
  j["certificate"] = certificate_to_json(h.certificate);
  return j;
}

Json max_cycle_to_json(const MaxCycleResult& r) {
  Json j;
  j["schema_version"] = kCertificateSchema;
  j["kind"] = "max_simple_cycle";
  j["n"] = r.n;
  j["d"] = r.d;
  j["field"] = field_name(r.field);
  j["max_size"] = r.max_size;
  j["examined"] = r.examined;
  j["witness"] = chain_to_json(r.witness);
  return j;
}

Json verify_report_to_json(const VerifyReport& r) {
  Json j;
  j["schema_version"] = kCertificateSchema;
  j["kind"] = "engine_verification";
  j["n"] = r.n;
  j["d"] = r.d;
  j["cycles"] = r.cycles;
  j["engine_outputs"] = r.engine_outputs;
  j["outputs_found_in_census"] = r.outputs_found_in_census;
  j["census_complete"] = r.census.complete;
  j["hypertrees"] = r.census.trees;
  j["deficit_one_fillings"] = r.census.deficit_one;
  j["ok"] = r.ok();
  j["discrepancies"] = r.discrepancies;
  return j;
}

Json collapse_report_to_json(const CollapseReport& r) {
  Json j;
  j["schema_version"] = kCertificateSchema;
  j["kind"] = "collapse_report";
  j["collapsed_fully"] = r.collapsed_fully;
  Json seq = Json::array();
  for (const auto& st : r.sequence) seq.push_back({{"face", st.face.vertices()}, {"removed", st.removed.vertices()}});
  j["sequence"] = std::move(seq);
  Json res = Json::array();
  for (Simplex s : r.residue) res.push_back(s.vertices());
  j["residue"] = std::move(res);
  return j;
}

Json census_summary_to_json(const CensusReport& r) {
  Json j;
  j["schema_version"] = kCertificateSchema;
  j["kind"] = "filling_census";
  j["field"] = "F2";
  j["n"] = r.n;
  j["d"] = r.d;
  j["slack"] = r.slack;
  j["complete"] = r.complete;
  j["nodes"] = r.nodes;
  j["hypertrees"] = r.trees;
  j["deficit_one_fillings"] = r.deficit_one;
  j["nonzero_cycles"] = r.nonzero_cycles;
  j["min_fillings_deficit_le1"] = r.min_total;
  j["cycles_without_zero_deficit"] = r.cycles_without_zero;
  j["cycles_without_deficit_le1"] = r.cycles_without_le1;
  return j;
}

}  // namespace sfill
