#include "qreg/json_io.hpp"

#include <cstdio>
#include <fstream>

namespace qreg {

namespace {

mpz_class mpz_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw FormatError("expected integer or integer string");
}

json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

}  // namespace

json quadnum_to_json(const QuadNum& q) {
  return json::array({mpz_to_json(q.rat_part().get_num()),
                      mpz_to_json(q.rat_part().get_den()),
                      mpz_to_json(q.irr_part().get_num()),
                      mpz_to_json(q.irr_part().get_den()),
                      json(q.radicand())});
}

QuadNum quadnum_from_json(const json& j) {
  if (!j.is_array() || j.size() != 5) throw FormatError("quadnum: need a 5-tuple");
  mpq_class a(mpz_from_json(j[0]), mpz_from_json(j[1]));
  mpq_class b(mpz_from_json(j[2]), mpz_from_json(j[3]));
  a.canonicalize();
  b.canonicalize();
  return QuadNum(a, b, j[4].get<unsigned long>());
}

json gram_to_json(const GramSet& x) {
  json gram = json::array();
  unsigned long D = 1;
  for (std::size_t i = 0; i < x.size; ++i)
    for (std::size_t j = 0; j < x.size; ++j) {
      gram.push_back(quadnum_to_json(x.gram.at(i, j)));
      if (x.gram.at(i, j).radicand() != 1) D = x.gram.at(i, j).radicand();
    }
  return json{{"size", x.size},
              {"ambient_dim", x.ambient_dim},
              {"D", D},
              {"gram", gram},
              {"labels", x.labels}};
}

GramSet gram_from_json(const json& j) {
  GramSet x;
  x.size = j.at("size").get<std::size_t>();
  x.ambient_dim = j.at("ambient_dim").get<std::size_t>();
  const json& g = j.at("gram");
  if (g.size() != x.size * x.size) throw FormatError("gram: wrong entry count");
  x.gram = ExactMatrix(x.size, x.size);
  for (std::size_t i = 0; i < x.size; ++i)
    for (std::size_t k = 0; k < x.size; ++k)
      x.gram.at(i, k) = quadnum_from_json(g[i * x.size + k]);
  if (j.contains("labels"))
    x.labels = j.at("labels").get<std::vector<std::string>>();
  else
    for (std::size_t i = 0; i < x.size; ++i) x.labels.push_back(std::to_string(i));
  x.validate();
  return x;
}

json scheme_to_json(const AssociationScheme& s) {
  std::size_t n = s.points();
  unsigned d = s.classes();
  json rel = json::array();
  for (std::size_t i = 0; i < n * n; ++i) rel.push_back(s.rel_table()[i]);
  json p = json::array();
  for (unsigned i = 0; i <= d; ++i)
    for (unsigned jj = 0; jj <= d; ++jj)
      for (unsigned k = 0; k <= d; ++k) p.push_back(s.p(i, jj, k));
  json m = json::array();
  for (auto& mi : s.multiplicities()) m.push_back(mpz_to_json(mi));
  auto mat = [&](const ExactMatrix& M) {
    json out = json::array();
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t jj = 0; jj <= d; ++jj)
        out.push_back(quadnum_to_json(M.at(i, jj)));
    return out;
  };
  json q = json::array();
  for (unsigned i = 0; i <= d; ++i)
    for (unsigned jj = 0; jj <= d; ++jj)
      for (unsigned k = 0; k <= d; ++k) q.push_back(quadnum_to_json(s.krein(i, jj, k)));
  auto qs = s.q_structure();
  json qsj{{"is_q_polynomial", qs.is_q_polynomial},
           {"is_q_bipartite", qs.is_q_bipartite},
           {"is_q_antipodal", qs.is_q_antipodal},
           {"antipodal_class_count", qs.antipodal_class_count},
           {"ordering", qs.ordering}};
  return json{{"n", n},           {"d", d},
              {"D", s.radicand()}, {"rel", rel},
              {"p", p},           {"k", s.valencies()},
              {"m", m},           {"P", mat(s.P())},
              {"Q", mat(s.Q())},  {"q", q},
              {"q_structure", qsj}};
}

AssociationScheme scheme_from_json(const json& j) {
  std::size_t n = j.at("n").get<std::size_t>();
  const json& rel = j.at("rel");
  if (rel.size() != n * n) throw FormatError("scheme: wrong relation count");
  std::vector<std::uint8_t> r(n * n);
  for (std::size_t i = 0; i < n * n; ++i) r[i] = rel[i].get<std::uint8_t>();
  auto s = AssociationScheme::from_relations(n, std::move(r));
  if (j.contains("d") && j.at("d").get<unsigned>() != s.classes())
    throw FormatError("scheme: recorded class count differs from the table");
  if (j.contains("k") && j.at("k").get<std::vector<long>>() != s.valencies())
    throw FormatError("scheme: recorded valencies differ from recomputed ones");
  return s;
}

namespace {

std::string pack_bits(const std::vector<std::uint8_t>& bits) {
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    int v = 0;
    for (std::size_t b = 0; b < 4 && i + b < bits.size(); ++b)
      v |= (bits[i + b] ? 1 : 0) << b;
    out.push_back(hex[v]);
  }
  return out;
}

std::vector<std::uint8_t> unpack_bits(const std::string& s, std::size_t count) {
  std::vector<std::uint8_t> bits(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    if (i / 4 >= s.size()) throw FormatError("bit string too short");
    char c = s[i / 4];
    int v = c >= 'a' ? c - 'a' + 10 : c - '0';
    bits[i] = (v >> (i % 4)) & 1;
  }
  return bits;
}

}  // namespace

json design_to_json(const SymmetricDesign& d) {
  return json{{"v", d.v}, {"k", d.k}, {"lambda", d.lambda},
              {"incidence", pack_bits(d.incidence)}};
}

SymmetricDesign design_from_json(const json& j) {
  std::size_t v = j.at("v").get<std::size_t>();
  auto d = verify_design(v, unpack_bits(j.at("incidence").get<std::string>(), v * v));
  if (j.contains("k") && j.at("k").get<long>() != d.k)
    throw FormatError("design: recorded k differs from recomputed value");
  if (j.contains("lambda") && j.at("lambda").get<long>() != d.lambda)
    throw FormatError("design: recorded lambda differs from recomputed value");
  return d;
}

json lsd_to_json(const LinkedSystem& sys) {
  json inc = json::array();
  for (std::size_t i = 0; i < sys.fibers(); ++i)
    for (std::size_t j = 0; j < sys.fibers(); ++j) {
      if (i == j) continue;
      inc.push_back(json{{"i", i}, {"j", j}, {"bits", pack_bits(sys.incidences()[i][j])}});
    }
  return json{{"f", sys.fibers()},
              {"v", sys.fiber_size()},
              {"k", sys.k()},
              {"lambda", sys.lambda()},
              {"incidences", inc}};
}

LinkedSystem lsd_from_json(const json& j) {
  std::size_t f = j.at("f").get<std::size_t>();
  std::size_t v = j.at("v").get<std::size_t>();
  std::vector<std::vector<std::vector<std::uint8_t>>> inc(
      f, std::vector<std::vector<std::uint8_t>>(f));
  for (const auto& e : j.at("incidences")) {
    std::size_t i = e.at("i").get<std::size_t>(), jj = e.at("j").get<std::size_t>();
    if (i >= f || jj >= f || i == jj) throw FormatError("linked system: pair index");
    inc[i][jj] = unpack_bits(e.at("bits").get<std::string>(), v * v);
  }
  return LinkedSystem::verify(f, v, std::move(inc));
}

json mub_to_json(const MUBSet& m) {
  json bases = json::array();
  for (auto& b : m.bases) {
    json basis = json::array();
    for (auto& vec : b) {
      json coords = json::array();
      for (auto& c : vec) coords.push_back(quadnum_to_json(c));
      basis.push_back(coords);
    }
    bases.push_back(basis);
  }
  return json{{"d", m.d}, {"D", m.D}, {"f", m.f}, {"bases", bases}};
}

MUBSet mub_from_json(const json& j) {
  std::size_t d = j.at("d").get<std::size_t>();
  std::vector<std::vector<std::vector<QuadNum>>> bases;
  for (const auto& basis : j.at("bases")) {
    bases.emplace_back();
    for (const auto& vec : basis) {
      if (vec.size() != d) throw FormatError("mub: vector length");
      std::vector<QuadNum> coords;
      for (const auto& c : vec) coords.push_back(quadnum_from_json(c));
      bases.back().push_back(std::move(coords));
    }
  }
  return verify_mub(std::move(bases));
}

json cc_to_json(const CoherentConfiguration& cc) {
  json tensor = json::array();
  for (auto& [key, cnt] : cc.tensor)
    tensor.push_back(json::array({key[0], key[1], key[2], cnt}));
  return json{{"n", cc.n},
              {"fibers", cc.fiber},
              {"rel", cc.rel},
              {"num_fibers", cc.num_fibers},
              {"num_relations", cc.num_relations},
              {"tensor", tensor}};
}

CoherentConfiguration cc_from_json(const json& j) {
  std::size_t n = j.at("n").get<std::size_t>();
  auto fiber = j.at("fibers").get<std::vector<std::size_t>>();
  auto rel = j.at("rel").get<std::vector<std::uint32_t>>();
  return verify_cc(n, fiber, rel);
}

namespace {

const char* mode_name(ScanMode m) {
  switch (m) {
    case ScanMode::exhaustive: return "exhaustive";
    case ScanMode::sampled: return "sampled";
    default: return "structured";
  }
}

}  // namespace

std::string tensor_digest(const RegularityReport& r) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  for (auto& [type, counts] : r.tensor) {
    for (auto t : type) mix(t);
    for (auto c : counts) mix(static_cast<std::uint64_t>(c));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json regularity_report_to_json(const RegularityReport& r, bool include_tensor) {
  json out{{"level", r.level},
           {"verdict", r.verdict},
           {"mode", mode_name(r.mode)},
           {"samples", r.samples},
           {"seed", r.seed},
           {"tensor_digest", tensor_digest(r)}};
  if (r.witness) {
    out["witness"] = json{{"tuple", r.witness->tuple},
                          {"type", r.witness->type},
                          {"counts_seen", r.witness->counts_seen},
                          {"counts_ref", r.witness->counts_ref}};
  } else {
    out["witness"] = nullptr;
  }
  if (include_tensor) {
    json t = json::array();
    for (auto& [type, counts] : r.tensor)
      t.push_back(json{{"type", type}, {"counts", counts}});
    out["tensor"] = t;
  }
  return out;
}

void write_code_file(const BinaryCode& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  for (auto& w : c.words) {
    for (auto b : w) out << (b ? '1' : '0');
    out << '\n';
  }
}

BinaryCode read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  BinaryCode c;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::uint8_t> bits;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] != '0' && line[i] != '1')
        throw FormatError(path + ":" + std::to_string(lineno) + ":" +
                          std::to_string(i + 1) + ": expected 0 or 1");
      bits.push_back(line[i] == '1');
    }
    if (c.words.empty())
      c.length = bits.size();
    else if (bits.size() != c.length)
      throw FormatError(path + ":" + std::to_string(lineno) + ": ragged word length");
    c.words.push_back(std::move(bits));
  }
  return c;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
  return j;
}

void write_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace qreg
