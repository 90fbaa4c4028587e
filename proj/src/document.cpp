#include "ainf/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace ainf {

using J = nlohmann::ordered_json;

namespace {

const J& field(const J& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw DocumentError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw DocumentError(path, std::string("missing field '") + key + "'");
  return *it;
}

const J* optional_field(const J& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

void allow_only(const J& obj, std::initializer_list<const char*> keys, const std::string& path) {
  if (!obj.is_object()) throw DocumentError(path, "expected an object");
  std::set<std::string> ok(keys.begin(), keys.end());
  for (const auto& [k, v] : obj.items())
    if (!ok.count(k)) throw DocumentError(path, "unknown field '" + k + "'");
}

const J& array_at(const J& obj, const char* key, const std::string& path) {
  const J& a = field(obj, key, path);
  if (!a.is_array()) throw DocumentError(path + "/" + key, "expected an array");
  return a;
}

int get_int(const J& j, const std::string& path) {
  if (!j.is_number_integer()) throw DocumentError(path, "expected an integer");
  return j.get<int>();
}

std::string get_string(const J& j, const std::string& path) {
  if (!j.is_string()) throw DocumentError(path, "expected a string");
  return j.get<std::string>();
}

Rational get_rational(const J& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw DocumentError(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw DocumentError(path, e.what());
  }
}

int get_index(const J& j, const std::string& path, int dim) {
  const int i = get_int(j, path);
  if (i < 0 || i >= dim) throw DocumentError(path, "index " + std::to_string(i) + " out of range");
  return i;
}

Tuple get_tuple(const J& j, const std::string& path, int dim) {
  if (!j.is_array()) throw DocumentError(path, "expected an index list");
  Tuple t;
  for (std::size_t k = 0; k < j.size(); ++k) t.push_back(get_index(j[k], path + "/" + std::to_string(k), dim));
  return t;
}

Combination get_covector(const J& j, const std::string& path, int dim) {
  if (!j.is_array()) throw DocumentError(path, "expected a list of [index, \"p/q\"] pairs");
  Combination c;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string p = path + "/" + std::to_string(k);
    if (!j[k].is_array() || j[k].size() != 2) throw DocumentError(p, "expected [index, \"p/q\"]");
    add_term(c, get_index(j[k][0], p + "/0", dim), get_rational(j[k][1], p + "/1"));
  }
  return c;
}

J covector_json(const Combination& c) {
  J a = J::array();
  for (const auto& [i, v] : c) a.push_back(J::array({i, to_string(v)}));
  return a;
}

std::string at(const std::string& path, const char* key, std::size_t k) {
  return path + "/" + key + "/" + std::to_string(k);
}

// ---------------------------------------------------------------- pieces

BasisPtr parse_basis(const J& j, const std::string& path) {
  allow_only(j, {"labels", "degrees", "unit"}, path);
  const J& labels = array_at(j, "labels", path);
  const J& degrees = array_at(j, "degrees", path);
  if (labels.size() != degrees.size()) throw DocumentError(path, "labels and degrees differ in length");
  if (labels.empty()) throw DocumentError(path, "empty basis");
  std::vector<BasisEntry> entries;
  for (std::size_t k = 0; k < labels.size(); ++k)
    entries.push_back({get_string(labels[k], at(path, "labels", k)), get_int(degrees[k], at(path, "degrees", k))});
  std::optional<int> unit;
  if (const J* u = optional_field(j, "unit")) unit = get_index(*u, path + "/unit", static_cast<int>(entries.size()));
  try {
    return std::make_shared<const GradedBasis>(std::move(entries), unit);
  } catch (const StructureError& e) {
    throw DocumentError(path, e.what());
  }
}

J basis_json(const GradedBasis& b) {
  J j;
  J labels = J::array(), degrees = J::array();
  for (const auto& e : b.entries()) {
    labels.push_back(e.label);
    degrees.push_back(e.degree);
  }
  j["labels"] = labels;
  j["degrees"] = degrees;
  j["unit"] = b.unit() ? J(*b.unit()) : J(nullptr);
  return j;
}

MultilinearTable parse_table(const J& rows, const std::string& path, BasisPtr source, BasisPtr target, int shift) {
  MultilinearTable t(source, target, shift);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::string p = path + "/" + std::to_string(k);
    allow_only(rows[k], {"inputs", "output", "coeff"}, p);
    Tuple in = get_tuple(field(rows[k], "inputs", p), p + "/inputs", source->size());
    if (in.empty()) throw DocumentError(p + "/inputs", "entries need at least one input");
    const int out = get_index(field(rows[k], "output", p), p + "/output", target->size());
    const Rational c = get_rational(field(rows[k], "coeff", p), p + "/coeff");
    try {
      t.add(in, out, c);
    } catch (const StructureError& e) {
      throw DocumentError(p, e.what());
    }
  }
  return t;
}

J table_json(const MultilinearTable& t) {
  J rows = J::array();
  t.for_each([&](const Tuple& in, const Combination& v) {
    for (const auto& [o, c] : v) {
      J r;
      r["inputs"] = in;
      r["output"] = o;
      r["coeff"] = to_string(c);
      rows.push_back(r);
    }
  });
  return rows;
}

CyclicPairing parse_pairing(const J& j, const std::string& path, BasisPtr basis) {
  allow_only(j, {"degree", "entries"}, path);
  const int d = get_int(field(j, "degree", path), path + "/degree");
  const J& rows = array_at(j, "entries", path);
  std::map<std::pair<int, int>, Rational> entries;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::string p = at(path, "entries", k);
    allow_only(rows[k], {"left", "right", "value"}, p);
    const int l = get_index(field(rows[k], "left", p), p + "/left", basis->size());
    const int r = get_index(field(rows[k], "right", p), p + "/right", basis->size());
    entries[{l, r}] += get_rational(field(rows[k], "value", p), p + "/value");
  }
  try {
    return CyclicPairing(basis, d, std::move(entries));
  } catch (const StructureError& e) {
    throw DocumentError(path, e.what());
  }
}

J pairing_json(const CyclicPairing& p) {
  J j;
  j["degree"] = p.degree();
  J rows = J::array();
  for (const auto& [key, v] : p.entries()) {
    J r;
    r["left"] = key.first;
    r["right"] = key.second;
    r["value"] = to_string(v);
    rows.push_back(r);
  }
  j["entries"] = rows;
  return j;
}

InnerProductMap parse_phi(const J& j, const std::string& path, BasisPtr basis) {
  allow_only(j, {"degree", "pq_cap", "components"}, path);
  InnerProductMap phi(basis, get_int(field(j, "degree", path), path + "/degree"),
                      get_int(field(j, "pq_cap", path), path + "/pq_cap"));
  const J& rows = array_at(j, "components", path);
  const int n = basis->size();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::string p = at(path, "components", k);
    allow_only(rows[k], {"p", "q", "left", "center", "right", "covector"}, p);
    const int pp = get_int(field(rows[k], "p", p), p + "/p");
    const int qq = get_int(field(rows[k], "q", p), p + "/q");
    Tuple left = get_tuple(field(rows[k], "left", p), p + "/left", n);
    Tuple right = get_tuple(field(rows[k], "right", p), p + "/right", n);
    if (static_cast<int>(left.size()) != pp) throw DocumentError(p + "/left", "length differs from p");
    if (static_cast<int>(right.size()) != qq) throw DocumentError(p + "/right", "length differs from q");
    Tuple in = left;
    in.push_back(get_index(field(rows[k], "center", p), p + "/center", n));
    in.insert(in.end(), right.begin(), right.end());
    Combination cov = get_covector(field(rows[k], "covector", p), p + "/covector", n);
    try {
      Combination cur = phi.covector(pp, in);
      add_scaled(cur, cov, 1);
      phi.set(pp, in, cur);
    } catch (const StructureError& e) {
      throw DocumentError(p, e.what());
    }
  }
  return phi;
}

J phi_json(const InnerProductMap& phi) {
  J j;
  j["degree"] = phi.degree();
  j["pq_cap"] = phi.pq_cap();
  J rows = J::array();
  for (const auto& [key, cov] : phi.entries()) {
    const auto& [p, in] = key;
    J r;
    r["p"] = p;
    r["q"] = static_cast<int>(in.size()) - 1 - p;
    r["left"] = Tuple(in.begin(), in.begin() + p);
    r["center"] = in[p];
    r["right"] = Tuple(in.begin() + p + 1, in.end());
    r["covector"] = covector_json(cov);
    rows.push_back(r);
  }
  j["components"] = rows;
  return j;
}

struct ParsedAlgebra {
  AlgebraPtr algebra;
  std::optional<CyclicPairing> pairing;
};

ParsedAlgebra parse_algebra(const J& j, const std::string& path) {
  BasisPtr basis = parse_basis(field(j, "basis", path), path + "/basis");
  const int cap = get_int(field(j, "arity_cap", path), path + "/arity_cap");
  MultilinearTable m = parse_table(array_at(j, "m", path), path + "/m", basis, basis, 1);
  ParsedAlgebra out;
  try {
    out.algebra = std::make_shared<const AInfAlgebra>(basis, std::move(m), cap);
  } catch (const StructureError& e) {
    throw DocumentError(path, e.what());
  }
  if (const J* p = optional_field(j, "pairing")) out.pairing = parse_pairing(*p, path + "/pairing", basis);
  return out;
}

ArtinScalar parse_artin(const J& j, const std::string& path, int eps_order) {
  if (!j.is_array()) throw DocumentError(path, "expected rows of t-coefficients per ε power");
  if (static_cast<int>(j.size()) > eps_order) throw DocumentError(path, "more ε powers than eps_order");
  ArtinScalar a(eps_order);
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string p = path + "/" + std::to_string(e);
    if (!j[e].is_array()) throw DocumentError(p, "expected a list of t-coefficients");
    for (std::size_t s = 0; s < j[e].size(); ++s)
      a.add(static_cast<int>(e), static_cast<int>(s), get_rational(j[e][s], p + "/" + std::to_string(s)));
  }
  return a;
}

ArtinVec parse_artin_vec(const J& j, const std::string& path, int dim, int eps_order) {
  if (!j.is_array()) throw DocumentError(path, "expected a list of components");
  ArtinVec v(dim, ArtinScalar(eps_order));
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string p = path + "/" + std::to_string(k);
    allow_only(j[k], {"index", "coeffs"}, p);
    const int i = get_index(field(j[k], "index", p), p + "/index", dim);
    v[i] += parse_artin(field(j[k], "coeffs", p), p + "/coeffs", eps_order);
  }
  return v;
}

J artin_vec_json(const ArtinVec& v) {
  J a = J::array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    J r;
    r["index"] = static_cast<int>(i);
    r["coeffs"] = artin_to_json(v[i]);
    a.push_back(r);
  }
  return a;
}

std::string get_id(const J& j, const std::string& path, std::set<std::string>& seen) {
  std::string id = get_string(field(j, "id", path), path + "/id");
  if (!seen.insert(id).second) throw DocumentError(path + "/id", "duplicate id '" + id + "'");
  return id;
}

}  // namespace

J artin_to_json(const ArtinScalar& a) {
  J rows = J::array();
  int last = -1;
  for (int e = 0; e < a.eps_order(); ++e)
    if (!a.rows()[e].empty()) last = e;
  for (int e = 0; e <= last; ++e) {
    J row = J::array();
    for (const auto& c : a.rows()[e]) row.push_back(to_string(c));
    rows.push_back(row);
  }
  return rows;
}

J series_to_json(const FormalSeries& s) {
  J terms = J::array();
  for (const auto& [m, c] : s.terms()) terms.push_back(J::array({m, to_string(c)}));
  return terms;
}

// ---------------------------------------------------------------- document

AInfMorphism AlgebraDocument::morphism(const std::string& id) const {
  for (const auto& m : morphisms)
    if (m.id == id) return AInfMorphism(m.source, algebra, m.h, m.arity_cap);
  throw DocumentError("/morphisms", "no morphism with id '" + id + "'");
}

std::optional<InnerProductMap> AlgebraDocument::shi() const {
  if (phi) return phi;
  if (pairing) return shi_from_cyclic(*pairing);
  return std::nullopt;
}

AlgebraDocument load_document(const J& j) {
  allow_only(j,
             {"schema_version", "name", "description", "basis", "arity_cap", "m", "pairing", "phi", "morphisms",
              "cochains", "eps_order", "mc", "gauge", "expect_fail"},
             "");
  AlgebraDocument doc;
  doc.schema_version = get_int(field(j, "schema_version", ""), "/schema_version");
  if (doc.schema_version != kSchemaVersion)
    throw DocumentError("/schema_version", "unsupported schema version " + std::to_string(doc.schema_version));
  doc.name = get_string(field(j, "name", ""), "/name");
  if (const J* d = optional_field(j, "description")) doc.description = get_string(*d, "/description");
  ParsedAlgebra main = parse_algebra(j, "");
  doc.algebra = main.algebra;
  doc.pairing = main.pairing;
  const BasisPtr basis = doc.algebra->basis();
  const int dim = basis->size();
  if (const J* p = optional_field(j, "phi")) doc.phi = parse_phi(*p, "/phi", basis);
  std::set<std::string> ids;
  if (const J* ms = optional_field(j, "morphisms")) {
    if (!ms->is_array()) throw DocumentError("/morphisms", "expected an array");
    for (std::size_t k = 0; k < ms->size(); ++k) {
      const std::string p = "/morphisms/" + std::to_string(k);
      const J& row = (*ms)[k];
      allow_only(row, {"id", "arity_cap", "source", "entries"}, p);
      std::string id = get_id(row, p, ids);
      const J& src = field(row, "source", p);
      allow_only(src, {"basis", "arity_cap", "m", "pairing"}, p + "/source");
      ParsedAlgebra s = parse_algebra(src, p + "/source");
      const int cap = get_int(field(row, "arity_cap", p), p + "/arity_cap");
      MultilinearTable h = parse_table(array_at(row, "entries", p), p + "/entries", s.algebra->basis(), basis, 0);
      if (h.max_arity() > cap) throw DocumentError(p, "entries above the arity cap");
      doc.morphisms.push_back({std::move(id), s.algebra, s.pairing, std::move(h), cap});
    }
  }
  if (const J* cs = optional_field(j, "cochains")) {
    if (!cs->is_array()) throw DocumentError("/cochains", "expected an array");
    for (std::size_t k = 0; k < cs->size(); ++k) {
      const std::string p = "/cochains/" + std::to_string(k);
      const J& row = (*cs)[k];
      allow_only(row, {"id", "degree", "components"}, p);
      std::string id = get_id(row, p, ids);
      HochschildCochain alpha(basis, get_int(field(row, "degree", p), p + "/degree"));
      const J& comps = array_at(row, "components", p);
      for (std::size_t c = 0; c < comps.size(); ++c) {
        const std::string q = at(p, "components", c);
        allow_only(comps[c], {"inputs", "covector"}, q);
        Tuple in = get_tuple(field(comps[c], "inputs", q), q + "/inputs", dim);
        Combination cov = get_covector(field(comps[c], "covector", q), q + "/covector", dim);
        try {
          Combination cur = alpha.covector(in);
          add_scaled(cur, cov, 1);
          alpha.set(in, cur);
        } catch (const StructureError& e) {
          throw DocumentError(q, e.what());
        }
      }
      doc.cochains.push_back({std::move(id), std::move(alpha)});
    }
  }
  if (const J* e = optional_field(j, "eps_order")) {
    doc.eps_order = get_int(*e, "/eps_order");
    if (doc.eps_order < 1) throw DocumentError("/eps_order", "must be positive");
  }
  if (const J* ms = optional_field(j, "mc")) {
    if (!ms->is_array()) throw DocumentError("/mc", "expected an array");
    for (std::size_t k = 0; k < ms->size(); ++k) {
      const std::string p = "/mc/" + std::to_string(k);
      allow_only((*ms)[k], {"id", "b"}, p);
      std::string id = get_id((*ms)[k], p, ids);
      doc.mc.push_back({std::move(id), parse_artin_vec(field((*ms)[k], "b", p), p + "/b", dim, doc.eps_order)});
    }
  }
  if (const J* gs = optional_field(j, "gauge")) {
    if (!gs->is_array()) throw DocumentError("/gauge", "expected an array");
    for (std::size_t k = 0; k < gs->size(); ++k) {
      const std::string p = "/gauge/" + std::to_string(k);
      const J& row = (*gs)[k];
      allow_only(row, {"id", "b0", "c"}, p);
      std::string id = get_id(row, p, ids);
      doc.gauge.push_back({std::move(id), parse_artin_vec(field(row, "b0", p), p + "/b0", dim, doc.eps_order),
                           parse_artin_vec(field(row, "c", p), p + "/c", dim, doc.eps_order)});
    }
  }
  if (const J* ef = optional_field(j, "expect_fail")) {
    if (!ef->is_array()) throw DocumentError("/expect_fail", "expected an array");
    for (std::size_t k = 0; k < ef->size(); ++k)
      doc.expect_fail.push_back(get_string((*ef)[k], "/expect_fail/" + std::to_string(k)));
  }
  return doc;
}

AlgebraDocument load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError(path.string(), "cannot open file");
  J j;
  try {
    j = J::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(path.string(), std::string("invalid JSON: ") + e.what());
  }
  try {
    return load_document(j);
  } catch (const DocumentError& e) {
    throw DocumentError(path.string() + "#" + e.where(), e.detail());
  }
}

J save_document(const AlgebraDocument& doc) {
  J j;
  j["schema_version"] = doc.schema_version;
  j["name"] = doc.name;
  if (!doc.description.empty()) j["description"] = doc.description;
  j["basis"] = basis_json(*doc.algebra->basis());
  j["arity_cap"] = doc.algebra->arity_cap();
  j["m"] = table_json(doc.algebra->m());
  if (doc.pairing) j["pairing"] = pairing_json(*doc.pairing);
  if (doc.phi) j["phi"] = phi_json(*doc.phi);
  if (!doc.morphisms.empty()) {
    J ms = J::array();
    for (const auto& m : doc.morphisms) {
      J r;
      r["id"] = m.id;
      r["arity_cap"] = m.arity_cap;
      J src;
      src["basis"] = basis_json(*m.source->basis());
      src["arity_cap"] = m.source->arity_cap();
      src["m"] = table_json(m.source->m());
      if (m.source_pairing) src["pairing"] = pairing_json(*m.source_pairing);
      r["source"] = src;
      r["entries"] = table_json(m.h);
      ms.push_back(r);
    }
    j["morphisms"] = ms;
  }
  if (!doc.cochains.empty()) {
    J cs = J::array();
    for (const auto& c : doc.cochains) {
      J r;
      r["id"] = c.id;
      r["degree"] = c.alpha.degree();
      J comps = J::array();
      for (const auto& [in, cov] : c.alpha.entries()) {
        J e;
        e["inputs"] = in;
        e["covector"] = covector_json(cov);
        comps.push_back(e);
      }
      r["components"] = comps;
      cs.push_back(r);
    }
    j["cochains"] = cs;
  }
  if (!doc.mc.empty() || !doc.gauge.empty() || doc.eps_order != 4) j["eps_order"] = doc.eps_order;
  if (!doc.mc.empty()) {
    J ms = J::array();
    for (const auto& m : doc.mc) ms.push_back(J{{"id", m.id}, {"b", artin_vec_json(m.b)}});
    j["mc"] = ms;
  }
  if (!doc.gauge.empty()) {
    J gs = J::array();
    for (const auto& g : doc.gauge)
      gs.push_back(J{{"id", g.id}, {"b0", artin_vec_json(g.b0)}, {"c", artin_vec_json(g.c)}});
    j["gauge"] = gs;
  }
  if (!doc.expect_fail.empty()) j["expect_fail"] = doc.expect_fail;
  return j;
}

void save_file(const AlgebraDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DocumentError(path.string(), "cannot write file");
  out << save_document(doc).dump(2) << "\n";
}

}  // namespace ainf
