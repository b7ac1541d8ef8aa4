#include "commands.hpp"

#include "gkz/matrixio.hpp"
#include "gkz/volume.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>

namespace gkzcli {

using namespace gkz;

namespace {

constexpr int kExitOk = 0, kExitInternal = 3, kExitInconclusive = 4;

Json rf_to_json(const RatFunc& f) {
  Json j;
  Json num = Json::array(), den = Json::array();
  for (const auto& c : f.num_coeffs()) num.push_back(rat_to_string(c));
  for (const auto& c : f.den_coeffs()) den.push_back(rat_to_string(c));
  j["num"] = num;
  j["den"] = den;
  j["str"] = f.to_string();
  return j;
}

Json rfvec_to_json(const RFVec& v) {
  Json j = Json::array();
  for (const auto& f : v) j.push_back(rf_to_json(f));
  return j;
}

Json monomial_to_json(const Monomial& m) {
  Json j = Json::array();
  for (int i = 0; i < m.nvars(); ++i) j.push_back(m[i]);
  return j;
}

Json pair_to_json(const StandardPair& p, int nvars, int m) {
  Json j;
  j["eta"] = monomial_to_json(p.eta);
  Json sig = Json::array();
  for (int s : p.sigma) sig.push_back(s + 1);
  j["sigma"] = sig;
  j["str"] = p.to_string();
  j["class"] = classify_pair(p, nvars, m) == PairClass::TopDimensional ? "top-dimensional" : "embedded";
  return j;
}

Json ideal_to_json(const BinomialIdeal& I) {
  Json gens = Json::array();
  for (const auto& mo : I.monomials) {
    Json g;
    g["monomial"] = monomial_to_json(mo);
    g["str"] = mo.to_string();
    gens.push_back(g);
  }
  for (const auto& b : I.binomials) {
    Json g;
    g["plus"] = monomial_to_json(b.plus);
    g["minus"] = monomial_to_json(b.minus);
    g["str"] = b.to_string();
    gens.push_back(g);
  }
  return gens;
}

Json exponent_to_json(const FakeExponent& fe) {
  Json j;
  j["vector"] = rfvec_to_json(fe.v);
  j["str"] = rfvec_to_string(fe.v);
  j["source_pair"] = fe.source.to_string();
  Json ns = Json::array();
  for (int i : fe.nsupp) ns.push_back(i + 1);
  j["nsupp"] = ns;
  j["minimal"] = to_string(fe.minimal);
  return j;
}

Json matrix_to_json(const IntMatrix& A) {
  Json rows = Json::array();
  for (int i = 0; i < A.rows(); ++i) {
    Json r = Json::array();
    for (int j = 0; j < A.cols(); ++j) r.push_back(rat_to_string(Rat(A.at(i, j))));
    rows.push_back(r);
  }
  return rows;
}

Json weight_to_json(const std::vector<Rat>& w) {
  Json j = Json::array();
  for (const auto& q : w) j.push_back(rat_to_string(q));
  return j;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long ms() const {
    return static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
  }
};

Json report_header(const char* command, const Options& opt, const Configuration& cfg) {
  Json doc;
  doc["schema"] = 1;
  doc["command"] = command;
  doc["seed"] = opt.seed;
  Json input;
  input["path"] = opt.matrix_path;
  input["d"] = cfg.d();
  input["n"] = cfg.n();
  input["matrix"] = matrix_to_json(cfg.matrix());
  doc["input"] = input;
  return doc;
}

int emit(Json& doc, const Options& opt, const Timer& timer, int code) {
  doc["timing_ms"] = timer.ms();
  if (opt.json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << render_text(doc);
  return code;
}

Configuration load_configuration(const Options& opt) {
  IntMatrix A = read_matrix_file(opt.matrix_path);
  return Configuration::make(A);
}

std::vector<Rat> choose_weight(const Options& opt, const Configuration& cfg) {
  if (opt.weight.empty()) return default_refined_weight(cfg, 0);
  std::vector<Rat> w = parse_rational_vector(opt.weight);
  if (static_cast<int>(w.size()) != cfg.n()) throw Error("--weight length must equal n");
  return w;
}

bool strict_gate(const Json& doc) { return doc.contains("warnings") && !doc["warnings"].empty(); }

}  // namespace

RatFunc parse_symbolic_entry(const std::string& s) {
  // sum of signed terms; a term is RATIONAL, RATIONAL['*']a, or a
  RatFunc acc(0);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= s.size()) {
      if (first) throw Error("empty entry");
      break;
    }
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw Error("expected '+' or '-' in entry '" + s + "'");
    }
    first = false;
    Rat coeff(1);
    bool have_coeff = false;
    size_t start = i;
    while (i < s.size() && (isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    if (i > start) {
      coeff = parse_rat(s.substr(start, i - start));
      have_coeff = true;
    }
    skip_ws();
    if (i < s.size() && s[i] == '*') {
      ++i;
      skip_ws();
    }
    bool have_alpha = false;
    if (i < s.size() && s[i] == 'a') {
      have_alpha = true;
      ++i;
    }
    if (!have_coeff && !have_alpha) throw Error("malformed entry '" + s + "'");
    RatFunc term = have_alpha ? RatFunc::alpha() * RatFunc(coeff) : RatFunc(coeff);
    acc += sign < 0 ? -term : term;
  }
  return acc;
}

std::vector<RatFunc> parse_symbolic_vector(const std::string& s) {
  std::vector<RatFunc> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(parse_symbolic_entry(tok));
  if (v.empty()) throw Error("empty vector literal");
  return v;
}

std::vector<Rat> parse_rational_vector(const std::string& s) {
  std::vector<Rat> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(parse_rat(tok));
  if (v.empty()) throw Error("empty vector literal");
  return v;
}

namespace {

void render_node(const Json& node, const std::string& key, int indent, std::ostringstream& os) {
  std::string pad(static_cast<size_t>(indent) * 2, ' ');
  if (node.is_object()) {
    if (!key.empty()) os << pad << key << ":\n";
    for (auto it = node.begin(); it != node.end(); ++it)
      render_node(it.value(), it.key(), indent + (key.empty() ? 0 : 1), os);
    return;
  }
  if (node.is_array()) {
    bool scalars = std::all_of(node.begin(), node.end(), [](const Json& x) { return !x.is_structured(); });
    if (scalars) {
      os << pad << key << ": [";
      for (size_t i = 0; i < node.size(); ++i) {
        if (i) os << ", ";
        const Json& x = node[i];
        if (x.is_string())
          os << x.get<std::string>();
        else
          os << x.dump();
      }
      os << "]\n";
      return;
    }
    os << pad << key << ": (" << node.size() << ")\n";
    for (const auto& x : node) {
      if (x.is_object() && x.contains("str")) {
        os << pad << "  - " << x["str"].get<std::string>();
        if (x.contains("class")) os << "  [" << x["class"].get<std::string>() << "]";
        if (x.contains("minimal")) os << "  minimal=" << x["minimal"].get<std::string>();
        if (x.contains("nsupp")) {
          os << "  nsupp={";
          for (size_t i = 0; i < x["nsupp"].size(); ++i) os << (i ? "," : "") << x["nsupp"][i].dump();
          os << "}";
        }
        if (x.contains("verified")) os << "  verified=" << x["verified"].dump();
        os << "\n";
      } else {
        render_node(x, "-", indent + 1, os);
      }
    }
    return;
  }
  if (node.is_string())
    os << pad << key << ": " << node.get<std::string>() << "\n";
  else
    os << pad << key << ": " << node.dump() << "\n";
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream os;
  for (auto it = doc.begin(); it != doc.end(); ++it) render_node(it.value(), it.key(), 0, os);
  return os.str();
}

int cmd_analyze(const Options& opt) {
  Timer timer;
  Configuration cfg = load_configuration(opt);
  Json doc = report_header("analyze", opt, cfg);

  BinomialIdeal IA = toric_ideal(cfg);
  doc["toric_ideal"] = ideal_to_json(IA);
  doc["toric_ideal_size"] = IA.size();

  std::vector<Rat> w = choose_weight(opt, cfg);
  doc["weight"] = weight_to_json(w);
  BinomialIdeal ini = initial_ideal(cfg, w);
  doc["initial_ideal"] = ideal_to_json(ini);
  doc["initial_ideal_monomial"] = is_monomial_ideal(ini);

  Json warnings = Json::array();
  BigInt vol = normalized_volume(cfg.matrix());
  doc["volume"] = rat_to_string(Rat(vol));
  if (is_monomial_ideal(ini)) {
    MonomialIdeal M = MonomialIdeal::from_binomial_ideal(ini);
    auto pairs = standard_pairs(M);
    Json jp = Json::array();
    int top = 0;
    for (const auto& p : pairs) {
      jp.push_back(pair_to_json(p, cfg.n(), cfg.m()));
      if (classify_pair(p, cfg.n(), cfg.m()) == PairClass::TopDimensional) ++top;
    }
    doc["standard_pairs"] = jp;
    doc["standard_pair_count"] = pairs.size();
    doc["degree"] = top;
    if (BigInt(top) != vol) {
      doc["error"] = "volume and standard-pair degree disagree";
      doc["warnings"] = warnings;
      return emit(doc, opt, timer, kExitInternal);
    }
  } else {
    warnings.push_back("initial ideal is not monomial under the chosen weight; standard pairs skipped");
  }
  doc["generic"] = is_generic(cfg);
  doc["cohen_macaulay"] = to_string(is_cohen_macaulay_generic(cfg));
  doc["warnings"] = warnings;
  return emit(doc, opt, timer, kExitOk);
}

int cmd_exceptional(const Options& opt) {
  Timer timer;
  Configuration cfg = load_configuration(opt);
  Json doc = report_header("exceptional", opt, cfg);

  RankCertificate cert = rank_certificate(cfg, opt.seed, opt.cap, opt.radius);
  Json jc;
  jc["volume"] = rat_to_string(Rat(cert.vol));
  if (cert.no_embedded_pair) {
    jc["verdict"] = "no-embedded-pair";
    jc["asserted_lower_bound"] = rat_to_string(Rat(cert.asserted_lower_bound));
    doc["certificate"] = jc;
    doc["warnings"] = Json::array();
    return emit(doc, opt, timer, kExitOk);
  }
  jc["verdict"] = cert.jump_proven ? "rank-jump-certified" : "rank-jump-not-certified";
  jc["pivot"] = cert.selection->pivot + 1;
  Json perm = Json::array();
  for (int p : cert.selection->perm) perm.push_back(p + 1);
  jc["column_permutation"] = perm;
  jc["embedded_pair"] = pair_to_json(cert.selection->pair, cfg.n(), cfg.m());
  jc["initial_ideal_refined"] = cert.selection->refined;
  jc["beta_line"] = rfvec_to_string(cert.beta);
  jc["beta"] = rfvec_to_json(cert.beta);
  jc["beta_prime"] = rfvec_to_json(cert.beta_prime);
  jc["base_exponent"] = rfvec_to_string(cert.eta_alpha_me1);
  Json jk = Json::array();
  for (const auto& u : cert.K) jk.push_back(exponent_to_json(u));
  jc["kernel"] = jk;
  jc["kernel_dim"] = cert.kernel_dim;
  Json jw = Json::array();
  for (const auto& u : cert.witnesses) jw.push_back(exponent_to_json(u));
  jc["cokernel_witnesses"] = jw;
  jc["extra_span_dim"] = cert.extra_span_dim;
  jc["asserted_lower_bound"] = rat_to_string(Rat(cert.asserted_lower_bound));
  jc["logfree_lower_bound"] = cert.logfree_count_beta;
  jc["headline_lower_bound"] = rat_to_string(Rat(cert.headline_lower_bound));
  Json excl;
  Json e1 = Json::array(), e2 = Json::array();
  for (const auto& q : cert.alpha.excluded_consistency) e1.push_back(rat_to_string(q));
  for (const auto& q : cert.alpha.excluded_zero_first) e2.push_back(rat_to_string(q));
  excl["pair_consistency"] = e1;
  excl["zero_first_coordinate"] = e2;
  jc["alpha_exclusions"] = excl;
  doc["certificate"] = jc;
  Json warnings = Json::array();
  for (const auto& w : cert.warnings) warnings.push_back(w);
  doc["warnings"] = warnings;
  int code = (opt.strict && strict_gate(doc)) ? kExitInconclusive : kExitOk;
  return emit(doc, opt, timer, code);
}

int cmd_series(const Options& opt) {
  Timer timer;
  Configuration cfg = load_configuration(opt);
  Json doc = report_header("series", opt, cfg);
  if (opt.beta.empty()) throw Error("--beta is required for the series command");
  RFVec beta = parse_symbolic_vector(opt.beta);
  if (static_cast<int>(beta.size()) != cfg.d()) throw Error("--beta length must equal d");
  std::vector<Rat> w = choose_weight(opt, cfg);
  doc["weight"] = weight_to_json(w);
  doc["beta"] = rfvec_to_json(beta);
  doc["radius"] = opt.radius;

  Json warnings = Json::array();
  std::vector<RFVec> targets;
  if (opt.all) {
    FakeExponentResult F = fake_exponents(cfg, beta, w, opt.cap);
    for (const auto& fe : F.exponents) {
      if (fe.minimal == TriState::Yes) targets.push_back(fe.v);
      if (fe.minimal == TriState::InconclusiveAtCap)
        warnings.push_back("minimality inconclusive for " + rfvec_to_string(fe.v));
    }
  } else {
    if (opt.exponent.empty()) throw Error("--exponent or --all is required for the series command");
    RFVec v = parse_symbolic_vector(opt.exponent);
    if (static_cast<int>(v.size()) != cfg.n()) throw Error("--exponent length must equal n");
    RFVec Av = apply_matrix(cfg.matrix(), v);
    for (int r = 0; r < cfg.d(); ++r)
      if (Av[r] != beta[r]) throw Error("exponent does not solve A v = beta");
    TriState minimal = has_minimal_negative_support(cfg, v, opt.cap);
    if (minimal == TriState::No) throw Error("exponent does not have minimal negative support");
    if (minimal == TriState::InconclusiveAtCap)
      warnings.push_back("minimal negative support inconclusive at cap");
    targets.push_back(v);
  }

  BinomialIdeal IA = toric_ideal(cfg);
  Json out = Json::array();
  for (const auto& v : targets) {
    TruncatedSeries s = canonical_series(cfg, v, opt.radius);
    Json js;
    js["exponent"] = rfvec_to_json(v);
    js["str"] = series_to_string(s);
    js["terms"] = s.terms.size();
    js["verified"] = verify_solution(cfg, beta, s, IA);
    out.push_back(js);
  }
  doc["series"] = out;
  doc["warnings"] = warnings;
  int code = (opt.strict && strict_gate(doc)) ? kExitInconclusive : kExitOk;
  return emit(doc, opt, timer, code);
}

int cmd_stdpairs(const Options& opt) {
  Timer timer;
  Configuration cfg = load_configuration(opt);
  Json doc = report_header("stdpairs", opt, cfg);
  std::vector<Rat> w = choose_weight(opt, cfg);
  doc["weight"] = weight_to_json(w);
  BinomialIdeal ini = initial_ideal(cfg, w);
  if (!is_monomial_ideal(ini)) throw Error("initial ideal is not monomial; choose a generic --weight");
  MonomialIdeal M = MonomialIdeal::from_binomial_ideal(ini);
  auto pairs = standard_pairs(M);
  Json jp = Json::array();
  int top = 0;
  for (const auto& p : pairs) {
    jp.push_back(pair_to_json(p, cfg.n(), cfg.m()));
    if (classify_pair(p, cfg.n(), cfg.m()) == PairClass::TopDimensional) ++top;
  }
  doc["standard_pairs"] = jp;
  doc["standard_pair_count"] = pairs.size();
  doc["degree"] = top;
  doc["chain_property"] = check_chain_property(M);
  doc["warnings"] = Json::array();
  return emit(doc, opt, timer, kExitOk);
}

int cmd_toric(const Options& opt) {
  Timer timer;
  Configuration cfg = load_configuration(opt);
  Json doc = report_header("toric", opt, cfg);
  BinomialIdeal IA = toric_ideal(cfg);
  doc["toric_ideal"] = ideal_to_json(IA);
  doc["toric_ideal_size"] = IA.size();
  doc["generic"] = is_generic(cfg);
  doc["warnings"] = Json::array();
  return emit(doc, opt, timer, kExitOk);
}

}  // namespace gkzcli
