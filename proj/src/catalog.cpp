#include "gohom/catalog.hpp"

#include <fstream>
#include <sstream>

namespace gohom {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  size_t b = s.find_last_not_of(" \t\r\n");
  return (a == std::string::npos) ? "" : s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(strip(item));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

AlgebraTag parse_algebra(const std::string& s) {
  AlgebraTag tag;
  auto colon = s.find(':');
  if (colon == std::string::npos) {
    tag.family = s;
    if (tag.dim() == 0) throw Error("catalog: bad algebra tag '" + s + "'");
  } else {
    tag.family = s.substr(0, colon);
    tag.n = std::stoi(s.substr(colon + 1));
  }
  return tag;
}

std::vector<IsotropySummand> parse_rho(const std::string& s) {
  std::vector<IsotropySummand> out;
  for (const std::string& part : split(s, ';')) {
    IsotropySummand sum;
    std::string body = part;
    if (body.rfind("dim=", 0) == 0) {
      sum.recorded_dim = std::stoi(body.substr(4));
      out.push_back(sum);
      continue;
    }
    auto x = body.find('x');
    if (x != std::string::npos && body[0] != '(') {
      sum.mult = std::stoi(body.substr(0, x));
      body = body.substr(x + 1);
    }
    if (body.front() != '(' || body.back() != ')')
      throw Error("catalog: bad weight '" + part + "'");
    WeightVector w;
    for (const std::string& c : split(body.substr(1, body.size() - 2), ','))
      w.coeffs.push_back(std::stoi(c));
    sum.weight = w;
    out.push_back(sum);
  }
  return out;
}

ExpectedIsotropy parse_iso(const std::string& s) {
  ExpectedIsotropy iso;
  auto colon = s.find(':');
  if (colon == std::string::npos) {
    iso.tag = s;
  } else {
    iso.tag = s.substr(0, colon);
    iso.dim = std::stoi(s.substr(colon + 1));
  }
  if (iso.tag != "trivial" && iso.tag != "trivial-note" &&
      iso.tag != "finite" && iso.tag != "torus" && iso.tag != "subgroup")
    throw Error("catalog: bad isotropy tag '" + s + "'");
  return iso;
}

int rho_real_dim(const AlgebraTag& k, const std::vector<IsotropySummand>& rho) {
  int total = 0;
  for (const auto& s : rho) {
    if (!s.weight) {
      total += s.recorded_dim;
      continue;
    }
    if (!k.classical())
      throw Error("catalog: weight summand needs classical k");
    auto [fam, rank] = root_system_of(k.family, k.n);
    total += s.mult * static_cast<int>(weyl_dimension(fam, rank, *s.weight));
  }
  return total;
}

Embedding build_embedding_for(AlgebraPtr k_alg, const AlgebraTag& g,
                              const std::string& emb_spec) {
  if (emb_spec == "block") {
    AlgebraPtr g_alg = build_classical(g.family, g.n);
    return block_embedding(k_alg, g_alg);
  }
  if (emb_spec.rfind("rep:", 0) == 0) {
    Representation rep = build_rep_tree(k_alg, emb_spec.substr(4));
    Embedding e = embedding_from_rep(rep);
    if (g.family != "so" || e.target->n() != g.n)
      throw Error("catalog: rep tree target so(" +
                  std::to_string(e.target->n()) + ") does not match " +
                  g.str());
    return e;
  }
  throw RepNotConstructible("catalog: no embedding recipe '" + emb_spec + "'");
}

}  // namespace

bool AlgebraTag::classical() const {
  return family == "su" || family == "so" || family == "sp";
}

int AlgebraTag::dim() const {
  if (family == "su") return n * n - 1;
  if (family == "so") return n * (n - 1) / 2;
  if (family == "sp") return n * (2 * n + 1);
  if (family == "G2") return 14;
  if (family == "F4") return 52;
  if (family == "E6") return 78;
  if (family == "E7") return 133;
  if (family == "E8") return 248;
  return 0;
}

std::string AlgebraTag::str() const {
  return classical() ? family + "(" + std::to_string(n) + ")" : family;
}

Catalog::Catalog(const std::string& data_path) {
  std::ifstream in(data_path);
  if (!in) throw Error("catalog: cannot open " + data_path);
  std::string line;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line, '|');
    if (fields.size() != 9)
      throw Error("catalog: expected 9 fields in '" + line + "'");
    PairEntry e;
    e.case_id = fields[0];
    e.k = parse_algebra(fields[1]);
    e.g1 = parse_algebra(fields[2]);
    e.rho1 = parse_rho(fields[3]);
    e.g2 = parse_algebra(fields[4]);
    e.rho2 = parse_rho(fields[5]);
    e.iso1 = parse_iso(fields[6]);
    e.iso2 = parse_iso(fields[7]);
    for (const std::string& f : split(fields[8], ',')) {
      if (f.empty()) continue;
      if (f == "constructible") e.constructible = true;
      else if (f == "needs_review") e.needs_review = true;
      else if (f.rfind("emb1=", 0) == 0) e.emb1 = f.substr(5);
      else if (f.rfind("emb2=", 0) == 0) e.emb2 = f.substr(5);
      else throw Error("catalog: unknown flag '" + f + "'");
    }
    entries_.push_back(std::move(e));
  }
}

const PairEntry& Catalog::lookup(const std::string& case_id) const {
  for (const auto& e : entries_)
    if (e.case_id == case_id) return e;
  throw UnknownCase("catalog: no case '" + case_id + "'");
}

int Catalog::count_with_prefix(char type) const {
  int n = 0;
  for (const auto& e : entries_)
    if (!e.case_id.empty() && e.case_id[0] == type) ++n;
  return n;
}

Embedding build_entry_embedding(const PairEntry& entry, int factor) {
  if (!entry.constructible)
    throw RepNotConstructible("catalog: " + entry.case_id +
                              " is not constructible");
  AlgebraPtr k_alg = build_classical(entry.k.family, entry.k.n);
  return factor == 1 ? build_embedding_for(k_alg, entry.g1, entry.emb1)
                     : build_embedding_for(k_alg, entry.g2, entry.emb2);
}

SpacePtr build_entry_space(const PairEntry& entry) {
  if (!entry.constructible)
    throw RepNotConstructible("catalog: " + entry.case_id +
                              " is not constructible");
  AlgebraPtr k_alg = build_classical(entry.k.family, entry.k.n);
  Embedding e1 = build_embedding_for(k_alg, entry.g1, entry.emb1);
  Embedding e2 = build_embedding_for(k_alg, entry.g2, entry.emb2);
  return build_pair_space(k_alg, e1.target, e1, e2.target, e2);
}

Representation isotropy_rep(const Embedding& emb) {
  const auto& g = *emb.target;
  MatrixXd Lt = g.killing_chol().transpose();
  MatrixXd U = Lt * emb.map;
  Eigen::JacobiSVD<MatrixXd> svd(U, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > 1e-10 * sv[0]) ++rank;
  if (rank != emb.source->dim())
    throw RankDeficient("isotropy_rep: embedding map is rank deficient");
  MatrixXd comp = svd.matrixU().rightCols(U.rows() - rank);
  MatrixXd P = Lt.triangularView<Eigen::Upper>().solve(comp);
  MatrixXd BP = g.killing() * P;

  Representation rep;
  rep.algebra = emb.source;
  rep.module_dim = static_cast<int>(P.cols());
  rep.label = "isotropy(" + emb.source->name() + " in " + g.name() + ")";
  for (int j = 0; j < emb.source->dim(); ++j) {
    VectorXd zj = emb.map.col(j);
    MatrixXd op(rep.module_dim, rep.module_dim);
    for (int i = 0; i < rep.module_dim; ++i)
      op.col(i) = BP.transpose() * g.bracket(zj, P.col(i));
    rep.operators.push_back(0.5 * (op - op.transpose()));
  }
  return rep;
}

ValidationReport validate_entry(const PairEntry& entry) {
  ValidationReport rep;
  rep.case_id = entry.case_id;
  rep.dim_k = entry.k.dim();
  rep.dim_g1 = entry.g1.dim();
  rep.dim_g2 = entry.g2.dim();
  try {
    rep.rho1_dim = rho_real_dim(entry.k, entry.rho1);
    rep.rho2_dim = rho_real_dim(entry.k, entry.rho2);
  } catch (const Error& err) {
    rep.pass = false;
    rep.message = err.what();
    return rep;
  }
  bool ok1 = rep.dim_g1 == rep.dim_k + rep.rho1_dim;
  bool ok2 = rep.dim_g2 == rep.dim_k + rep.rho2_dim;
  if (!ok1 || !ok2) {
    rep.pass = false;
    rep.message = "dimension identity fails";
    return rep;
  }
  if (entry.constructible) {
    try {
      SpacePtr space = build_entry_space(entry);
      rep.c1 = space->c1();
      rep.c2 = space->c2();
    } catch (const Error& err) {
      rep.pass = false;
      rep.message = std::string("construction failed: ") + err.what();
      return rep;
    }
  }
  rep.pass = true;
  rep.message = "ok";
  return rep;
}

std::string classify_expected(const PairEntry& entry) {
  auto dim0 = [](const ExpectedIsotropy& i) {
    return i.tag == "trivial" || i.tag == "trivial-note" || i.tag == "finite";
  };
  if (dim0(entry.iso1) || dim0(entry.iso2)) return "case1";
  if (entry.iso1.tag == "torus" || entry.iso2.tag == "torus") return "case2";
  return "neither";
}

IsotropyCrossCheck cross_check_isotropy(const PairEntry& entry, int trials,
                                        std::uint64_t seed) {
  if (!entry.constructible)
    throw RepNotConstructible("cross_check_isotropy: " + entry.case_id +
                              " is not constructible");
  IsotropyCrossCheck out;
  out.case_id = entry.case_id;
  AlgebraPtr k_alg = build_classical(entry.k.family, entry.k.n);
  Embedding e1 = build_embedding_for(k_alg, entry.g1, entry.emb1);
  Embedding e2 = build_embedding_for(k_alg, entry.g2, entry.emb2);
  out.rep1 = generic_stabilizer(isotropy_rep(e1), trials, seed);
  out.rep2 = generic_stabilizer(isotropy_rep(e2), trials, seed);

  auto matches = [](const StabilizerReport& r, const ExpectedIsotropy& e) {
    if (r.dim != e.expected_dim()) return false;
    if (e.abelian_expected() && r.cls != StabilizerClass::torus) return false;
    return true;
  };
  out.matches_expected =
      matches(out.rep1, entry.iso1) && matches(out.rep2, entry.iso2);
  out.classification = classify_pair(out.rep1, out.rep2);
  out.alarm = out.classification == "neither";
  return out;
}

}  // namespace gohom
