// breuil: command-line front end for the rank-1 classification, characters,
// Condition A, Fontaine-Laffaille reduction and the extension diagram.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "breuil/breuil.hpp"

using json = nlohmann::json;
using namespace breuil;

namespace {

constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Global {
  int p = 0;
  int r = 0;
  int n = 0;
  std::string poly;
  long long generator = -1;
  std::string format = "json";
  std::string out;
  unsigned long long seed = 0;
};

struct Output {
  std::string command;
  json params = json::object();
  json inputs = json::object();
  Report checks;
  json derived = json::object();
};

// ---- field elements ----

std::string ff_str(FF x) { return x.is_zero() ? "0" : "g^" + std::to_string(x.log); }

FF parse_ff(const FiniteField& F, const std::string& s) {
  try {
    if (s.rfind("g^", 0) == 0) {
      long long k = std::stoll(s.substr(2));
      return F.gen_pow(k);
    }
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw UsageError("bad field element '" + s + "'");
    return F.from_int(v);
  } catch (const std::logic_error&) {
    throw UsageError("bad field element '" + s + "' (use 0, an integer, or g^k)");
  }
}

FF parse_nonzero(const FiniteField& F, const std::string& s, const char* what) {
  FF x = parse_ff(F, s);
  if (x.is_zero()) throw UsageError(std::string(what) + " must be nonzero");
  return x;
}

IndexSet parse_subset(int r, const std::vector<int>& items) {
  for (int i : items)
    if (i < 0 || i >= r) throw UsageError("subset element " + std::to_string(i) + " outside [0, r)");
  return IndexSet::from_list(r, items);
}

json subset_json(const IndexSet& J) { return J.to_list(); }

// ---- params ----

Params make_params(const Global& g) {
  if (g.p == 0 || g.r == 0) throw UsageError("-p and -r are required");
  int n = g.n == 0 ? g.r : g.n;
  try {
    if (g.poly.empty() && g.generator < 0) return Params::make(g.p, g.r, n);
    if (g.poly.empty() || g.generator < 0) throw UsageError("--poly and --generator go together");
    std::vector<int> mod;
    std::stringstream ss(g.poly);
    std::string tok;
    while (std::getline(ss, tok, ',')) mod.push_back(std::stoi(tok));
    return Params::make(g.p, g.r, n, mod, static_cast<std::uint32_t>(g.generator));
  } catch (const Error& ex) {
    throw UsageError(ex.what());
  } catch (const std::logic_error&) {
    throw UsageError("bad --poly list");
  }
}

json rank1_json(const BrRank1& X) {
  return json{{"kappa", X.kappa}, {"m", X.m}, {"mu", X.mu}, {"a", ff_str(X.a)}};
}

json char_json(const GKChar& c) { return json{{"tame_exponent", c.tame.t}, {"unram", ff_str(c.unram)}}; }

BrRank1 read_rank1(const Params& P, int kappa, const std::vector<long long>& m, const std::vector<long>& mu,
                   const std::string& a, const char* label) {
  BrRank1 X{kappa, m, mu, parse_nonzero(P.field(), a, "scalar")};
  if (!in_range(P, X)) throw UsageError(std::string(label) + ": invariants out of range");
  if (!recurrence_holds(P, X)) throw UsageError(std::string(label) + ": mu recurrence fails");
  return X;
}

// ---- rendering ----

json checks_json(const Report& rep) {
  json arr = json::array();
  for (const auto& c : rep.checks()) {
    json j{{"name", c.name}, {"pass", c.pass}};
    if (c.index) j["index"] = *c.index;
    if (!c.pass && !c.witness.empty()) j["witness"] = c.witness;
    arr.push_back(j);
  }
  return arr;
}

json to_document(const Output& o) {
  return json{{"schema_version", kSchemaVersion},
              {"command", o.command},
              {"params", o.params},
              {"inputs", o.inputs},
              {"checks", checks_json(o.checks)},
              {"derived", o.derived},
              {"summary",
               {{"checks", o.checks.checks().size()},
                {"failed", o.checks.count_failed()},
                {"pass", o.checks.all_pass()}}}};
}

std::string render(const Output& o, const std::string& format, bool color) {
  std::ostringstream os;
  if (format == "json") {
    os << to_document(o).dump(2) << "\n";
  } else if (format == "tsv") {
    os << "kind\tname\tindex\tpass\tdetail\n";
    for (const auto& c : o.checks.checks())
      os << "check\t" << c.name << "\t" << (c.index ? std::to_string(*c.index) : "") << "\t" << (c.pass ? 1 : 0)
         << "\t" << c.witness << "\n";
    for (const auto& [k, v] : o.derived.items()) os << "derived\t" << k << "\t\t\t" << v.dump() << "\n";
    os << "summary\tpass\t\t" << (o.checks.all_pass() ? 1 : 0) << "\t" << o.checks.count_failed() << " failed\n";
  } else {
    auto paint = [&](bool pass) -> std::string {
      if (!color) return pass ? "PASS" : "FAIL";
      return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
    };
    os << o.command << "  " << o.params.dump() << "\n";
    if (!o.inputs.empty()) os << "inputs  " << o.inputs.dump() << "\n";
    for (const auto& c : o.checks.checks()) {
      os << "  " << paint(c.pass) << "  " << c.name;
      if (c.index) os << "[" << *c.index << "]";
      if (!c.pass && !c.witness.empty()) os << "  " << c.witness;
      os << "\n";
    }
    for (const auto& [k, v] : o.derived.items()) os << "  " << k << " = " << v.dump() << "\n";
    os << (o.checks.all_pass() ? "all checks pass" : std::to_string(o.checks.count_failed()) + " check(s) failed")
       << " (" << o.checks.checks().size() << " total)\n";
  }
  return os.str();
}

// ---- commands ----

struct Rank1Args {
  int kappa = 2;
  std::vector<long long> m;
  std::vector<long> mu;
  std::string a = "1";
};

void add_rank1_opts(CLI::App* sc, Rank1Args& x, const std::string& suffix) {
  sc->add_option("--m" + suffix, x.m, "filtration exponents m_i")->delimiter(',')->required();
  sc->add_option("--mu" + suffix, x.mu, "descent exponents mu_i")->delimiter(',')->required();
  sc->add_option("--a" + suffix, x.a, "unramified scalar (0, integer, or g^k)");
}

Output cmd_classify(const Params& P, const Rank1Args& x) {
  Output o;
  BrRank1 X{x.kappa, x.m, x.mu, parse_nonzero(P.field(), x.a, "scalar")};
  o.inputs = rank1_json(X);
  if (!in_range(P, X)) throw UsageError("invariants out of range for this level");
  for (int i = 0; i < P.r(); ++i) {
    long next = X.mu[P.idx(i + 1)];
    long want = P.mod_e(static_cast<long long>(P.p()) * (X.mu[i] + X.m[i]));
    o.checks.add("recurrence", i, next == want, "mu_{i+1}=" + std::to_string(next) + ", expected " + std::to_string(want));
  }
  MuFil fil = mu_fil(P, X);
  o.derived["mu_fil"] = fil;
  auto ex = tst_char_exponents(P, X);
  o.derived["char_exponents"] = ex;
  bool agree = std::all_of(ex.begin(), ex.end(), [&](long t) { return t == ex[0]; });
  o.checks.add("char_consistent", agree, "exponents differ across indices");
  if (agree) o.derived["char"] = char_json(tst_char(P, X));
  o.derived["etale"] = is_etale(P, X);
  o.derived["multiplicative"] = is_multiplicative(X);
  return o;
}

Output cmd_char(const Params& P, const std::vector<long long>& c, const std::string& unram) {
  Output o;
  if (static_cast<int>(c.size()) != P.r()) throw UsageError("--c must have r entries");
  o.inputs = json{{"c", c}, {"unram", unram}};
  GKChar ch{omega_product(P, c), parse_nonzero(P.field(), unram, "unramified scalar")};
  o.derived["char"] = char_json(ch);
  return o;
}

Output cmd_class_j(const Params& P, const std::vector<int>& J_items, long long t, const std::string& unram) {
  Output o;
  IndexSet J = parse_subset(P.r(), J_items);
  GKChar psi{make_tame(P, t), parse_nonzero(P.field(), unram, "unramified scalar")};
  o.inputs = json{{"J", subset_json(J)}, {"tame_exponent", t}, {"unram", ff_str(psi.unram)}};
  BrRank1 X = class_j(P, J, psi);
  o.checks.add("valid", validate(P, X), "recurrence fails");
  o.checks.add("char_round_trip", tst_char(P, X) == psi, "character differs");
  o.derived["object"] = rank1_json(X);
  o.derived["mu_fil"] = mu_fil(P, X);
  return o;
}

std::pair<BrRank1, BrRank1> read_pair(const Params& P, int kappa, const Rank1Args& A, const Rank1Args& B, Output& o) {
  BrRank1 X = read_rank1(P, kappa, A.m, A.mu, A.a, "A");
  BrRank1 Y = read_rank1(P, kappa, B.m, B.mu, B.a, "B");
  o.inputs = json{{"A", rank1_json(X)}, {"B", rank1_json(Y)}};
  if (tst_char(P, X) != tst_char(P, Y)) throw UsageError("A and B have different characters");
  return {X, Y};
}

Output cmd_hom(const Params& P, int kappa, const Rank1Args& A, const Rank1Args& B) {
  Output o;
  auto [X, Y] = read_pair(P, kappa, A, B, o);
  auto v = hom_exists(P, X, Y);
  o.derived["mu_fil_A"] = mu_fil(P, X);
  o.derived["mu_fil_B"] = mu_fil(P, Y);
  o.derived["exists"] = v.has_value();
  if (v) o.derived["valuations"] = *v;
  return o;
}

Output cmd_max(const Params& P, int kappa, const Rank1Args& A, const Rank1Args& B) {
  Output o;
  auto [X, Y] = read_pair(P, kappa, A, B, o);
  Pushout po = max_pushout(P, X, Y);
  MuFil fa = mu_fil(P, X), fb = mu_fil(P, Y);
  for (int i = 0; i < P.r(); ++i) {
    o.checks.add("gamma_fil_is_max", i, po.gamma_fil[i] == std::max(fa[i], fb[i]), "not the maximum");
    o.checks.add("c_between", i,
                 po.C.m[i] >= std::min(X.m[i], Y.m[i]) && po.C.m[i] <= std::max(X.m[i], Y.m[i]), "outside [min, max]");
  }
  o.checks.add("valid", validate(P, po.C), "recurrence fails");
  o.checks.add("char_preserved", tst_char(P, po.C) == tst_char(P, X), "character changed");
  o.derived["C"] = rank1_json(po.C);
  o.derived["n"] = po.n;
  o.derived["gamma_fil"] = po.gamma_fil;
  o.derived["v_A"] = po.vA;
  o.derived["v_B"] = po.vB;
  return o;
}

json solutions_json(const std::vector<WeightSolution>& sols) {
  json arr = json::array();
  for (const auto& s : sols) arr.push_back(json{{"J", subset_json(s.J)}, {"a", s.w.a}, {"b", s.w.b}});
  return arr;
}

Output cmd_weights(const Params& P, long long t1, long long t2, bool any_a, bool any_b) {
  Output o;
  o.inputs = json{{"psi1", P.mod_e(t1)}, {"psi2", P.mod_e(t2)}, {"require_a_zero", !any_a}, {"require_regular", !any_b}};
  auto sols = condition_A_solve(P, make_tame(P, t1), make_tame(P, t2), !any_a, !any_b);
  for (std::size_t k = 0; k < sols.size(); ++k)
    o.checks.add("solution_checks", static_cast<int>(k),
                 condition_A_check(P, make_tame(P, t1), make_tame(P, t2), sols[k].w, sols[k].J), "returned pair fails");
  o.derived["solutions"] = solutions_json(sols);
  return o;
}

Output cmd_fl(const Params& P, const std::vector<int>& m, const std::string& x) {
  Output o;
  FLRank1 D{m, parse_nonzero(P.field(), x, "FL scalar")};
  o.inputs = json{{"m", m}, {"xbar", ff_str(D.xbar)}};
  try {
    check_fl(P, D);
  } catch (const Error& ex) {
    throw UsageError(ex.what());
  }
  BrRank1 X = fl_reduce(P, D);
  o.checks.add("reduction_valid", validate(P, X), "recurrence fails");
  o.checks.add("char_matches", tst_char(P, X) == fl_char(P, D), "characters differ");
  o.derived["fl_char"] = char_json(fl_char(P, D));
  o.derived["reduction"] = rank1_json(X);
  return o;
}

json exponents_json(const DerivedExponents& D) {
  return json{{"muP", D.muP},   {"muPP", D.muPP}, {"n", D.nn},     {"s", D.ss},       {"r", D.rr},
              {"cP", D.cP},     {"cPP", D.cPP},   {"gammaP", D.gP}, {"gammaPP", D.gPP}, {"muP_fil", D.filP},
              {"muPP_fil", D.filPP}, {"nuP_fil", D.nuP}, {"nuPP_fil", D.nuPP}};
}

struct GeeArgs {
  std::vector<int> J;
  std::vector<int> b;
  std::string a = "1";
  std::string bscalar = "1";
  std::vector<std::string> lambda;
  std::string corrupt = "none";
  bool objects = false;
};

Output cmd_verify331(const Params& P, const GeeArgs& x) {
  Output o;
  const auto& F = P.field();
  if (static_cast<int>(x.b.size()) != P.r()) throw UsageError("--b must have r entries");
  GeeParams G{parse_subset(P.r(), x.J), x.b, parse_nonzero(F, x.a, "a"), parse_nonzero(F, x.bscalar, "bscalar"),
              std::vector<FF>(P.r(), FF{})};
  if (!x.lambda.empty()) {
    if (static_cast<int>(x.lambda.size()) != P.r()) throw UsageError("--lambda must have r entries");
    for (int i = 0; i < P.r(); ++i) G.lambda[i] = parse_ff(F, x.lambda[i]);
  }
  json lam = json::array();
  for (FF l : G.lambda) lam.push_back(ff_str(l));
  o.inputs = json{{"J", subset_json(G.J)}, {"b", G.b},         {"a", ff_str(G.a)},
                  {"bscalar", ff_str(G.bscalar)}, {"lambda", lam}, {"corrupt", x.corrupt}};
  Report pre = check_params(P, G);
  if (!pre.all_pass()) {
    const Check* c = pre.first_failure();
    throw UsageError("invalid parameters: " + c->name + (c->index ? "[" + std::to_string(*c->index) + "]" : "") + " " +
                     c->witness);
  }
  Corruption cor;
  if (x.corrupt == "cprime") cor.perturb_cP = true;
  else if (x.corrupt == "matching") cor.drop_matching = true;
  else if (x.corrupt != "none") throw UsageError("--corrupt must be none, cprime or matching");

  ChainRing R(P);
  Verify331Result res = verify_331(R, G, cor);
  o.checks = res.report;
  if (res.derived) o.derived["exponents"] = exponents_json(*res.derived);
  if (res.display) {
    const auto& d = *res.display;
    o.derived["display"] = json{{"muP_fil", d.filP_display},  {"muPP_fil", d.filPP_display},
                                {"gammaP", d.gP_display},     {"gammaPP", d.gPP_display},
                                {"muP_fil_agrees", d.filP_agrees}, {"muPP_fil_agrees", d.filPP_agrees},
                                {"gammaP_agrees", d.gP_agrees},    {"gammaPP_agrees", d.gPP_agrees}};
  }
  if (res.maps) {
    const auto& m = *res.maps;
    o.derived["maps"] = json{{"f_M", m.fM},     {"f_N", m.fN},     {"fPP_M", m.fppM},
                             {"fPP_N", m.fppN}, {"fP_M", m.fpM},   {"fP_N", m.fpN}};
  }
  if (res.pushouts) o.derived["pushouts"] = json{{"CP", rank1_json(res.pushouts->first)}, {"CPP", rank1_json(res.pushouts->second)}};
  if (x.objects && res.objects) {
    const auto& O = *res.objects;
    o.derived["objects"] = json{{"M", to_json(R, O.M)},     {"MPP", to_json(R, O.Mpp)}, {"MP", to_json(R, O.Mp)},
                                {"N", to_json(R, O.N)},     {"NPP", to_json(R, O.Npp)}, {"NP", to_json(R, O.Np)},
                                {"C", to_json(R, O.C)},     {"CPP", to_json(R, O.Cpp)}, {"CP", to_json(R, O.Cp)}};
  }
  return o;
}

struct SweepArgs {
  std::vector<int> p_set{5};
  std::vector<int> r_set{1, 2};
  std::string mode = "lemmas";
  unsigned threads = 0;
  std::size_t sample = 0;
  long long t1 = 0, t2 = 0;
  bool have_t = false;
};

std::string point_label(const GeeParams& G) {
  std::ostringstream os;
  os << "J=" << json(G.J.to_list()).dump() << " b=" << json(G.b).dump() << " a=" << ff_str(G.a)
     << " bscalar=" << ff_str(G.bscalar) << " lambda=[";
  for (std::size_t i = 0; i < G.lambda.size(); ++i) os << (i ? "," : "") << ff_str(G.lambda[i]);
  os << "]";
  return os.str();
}

Output cmd_sweep(const SweepArgs& x, unsigned long long seed) {
  Output o;
  if (x.mode != "lemmas" && x.mode != "verify331" && x.mode != "weights")
    throw UsageError("--mode must be lemmas, verify331 or weights");
  if (x.mode == "weights" && !x.have_t) throw UsageError("mode weights needs --t1 and --t2");
  o.inputs = json{{"p_set", x.p_set}, {"r_set", x.r_set}, {"mode", x.mode}, {"seed", seed}, {"sample", x.sample}};
  if (x.mode == "weights") o.inputs["t"] = {x.t1, x.t2};

  std::vector<std::pair<int, int>> frames;
  std::size_t total = 0;
  for (int p : x.p_set) {
    for (int r : x.r_set) {
      if (p < 5 || !is_prime(p) || r < 1) throw UsageError("sweep needs odd primes p >= 5 and r >= 1");
      if (ipow(p, r) > (1LL << 22)) throw UsageError("p^r too large for a desk-scale sweep");
      frames.emplace_back(p, r);
      if (x.mode == "weights") total += 1;
      else if (x.mode == "lemmas") total += count_sweep_points(p, r, 1, false);
      else total += count_sweep_points(p, r, 2, true);
    }
  }
  if (total > kMaxSweepPoints) throw UsageError("sweep exceeds " + std::to_string(kMaxSweepPoints) + " points");

  json blocks = json::array();
  for (auto [p, r] : frames) {
    Params P = Params::make(p, r);
    json block{{"p", p}, {"r", r}};
    if (x.mode == "weights") {
      auto sols = condition_A_solve(P, make_tame(P, x.t1), make_tame(P, x.t2), true, true);
      block["solutions"] = solutions_json(sols);
      block["points"] = 1;
      block["failed"] = 0;
      blocks.push_back(block);
      continue;
    }
    std::vector<GeeParams> pts = x.mode == "lemmas"
                                     ? sweep_points(P, {P.field().one()}, FF{}, false)
                                     : sweep_points(P, {P.field().one(), P.field().generator()}, P.field().generator());
    if (x.sample > 0 && x.sample < pts.size()) {
      std::vector<std::size_t> idx(pts.size());
      for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
      std::mt19937_64 rng(seed ^ (static_cast<unsigned long long>(p) << 32) ^ static_cast<unsigned long long>(r));
      std::shuffle(idx.begin(), idx.end(), rng);
      idx.resize(x.sample);
      std::sort(idx.begin(), idx.end());
      std::vector<GeeParams> keep;
      for (std::size_t k : idx) keep.push_back(pts[k]);
      pts = std::move(keep);
    }
    std::optional<ChainRing> R;
    if (x.mode == "verify331") R.emplace(P);
    std::function<Report(std::size_t)> eval = [&](std::size_t k) {
      if (x.mode == "lemmas") {
        Report rep;
        try {
          rep = check_lemmas(P, pts[k], derive(P, pts[k]));
        } catch (const Error& ex) {
          rep.add("derive", false, ex.what());
        }
        return rep;
      }
      return verify_331(*R, pts[k]).report;
    };
    std::vector<Report> reps = parallel_map<Report>(pts.size(), eval, x.threads);
    std::size_t failed = 0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      bool ok = reps[k].all_pass();
      if (!ok) ++failed;
      std::string w;
      if (!ok) {
        const Check* c = reps[k].first_failure();
        w = point_label(pts[k]) + ": " + c->name + (c->index ? "[" + std::to_string(*c->index) + "]" : "") + " " +
            c->witness;
      }
      o.checks.add("p" + std::to_string(p) + "_r" + std::to_string(r), static_cast<int>(k), ok, w);
    }
    block["points"] = pts.size();
    block["failed"] = failed;
    blocks.push_back(block);
  }
  o.derived["blocks"] = blocks;
  return o;
}

void emit(const Output& o, const Global& g) {
  bool to_stdout = g.out.empty();
  bool color = g.format == "human" && to_stdout && std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout));
  std::string text = render(o, g.format, color);
  if (to_stdout) {
    std::cout << text;
    std::cout.flush();
  } else {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw UsageError("cannot open " + g.out + " for writing");
    f << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-1 Breuil modules, characters and the reducible extension diagram"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("-p", g.p, "residue characteristic");
  app.add_option("-r", g.r, "degree of the residue field k over F_p");
  app.add_option("-n", g.n, "degree of the coefficient field E over F_p (multiple of r; default r)");
  app.add_option("--poly", g.poly, "modulus of E, coefficients low to high, comma separated");
  app.add_option("--generator", g.generator, "base-p code of the multiplicative generator of E");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "tsv", "human"}));
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--seed", g.seed, "seed for sampled sweeps");

  Rank1Args r1;
  auto* classify = app.add_subcommand("classify", "validate a rank-1 object and compute its character");
  classify->add_option("--kappa", r1.kappa, "level kappa in [2, p-1]");
  add_rank1_opts(classify, r1, "");

  std::vector<long long> char_c;
  std::string char_unram = "1";
  auto* chr = app.add_subcommand("char", "normalize a product of fundamental characters");
  chr->add_option("--c", char_c, "exponents c_i")->delimiter(',')->required();
  chr->add_option("--unram", char_unram, "unramified scalar");

  std::vector<int> cj_J;
  long long cj_t = 0;
  std::string cj_unram = "1";
  auto* cj = app.add_subcommand("class-j", "the class-J object with a given character");
  cj->add_option("--J", cj_J, "subset J (comma separated; omit for the empty set)")->delimiter(',');
  cj->add_option("--t", cj_t, "tame exponent")->required();
  cj->add_option("--unram", cj_unram, "unramified scalar");

  int pair_kappa = 2;
  Rank1Args ra, rb;
  auto* hom = app.add_subcommand("hom", "existence of a morphism A -> B between rank-1 objects");
  auto* mx = app.add_subcommand("max", "maximal common over-object of two rank-1 objects");
  for (auto* sc : {hom, mx}) {
    sc->add_option("--kappa", pair_kappa, "level kappa in [2, p-1]");
    add_rank1_opts(sc, ra, "A");
    add_rank1_opts(sc, rb, "B");
  }

  long long w_t1 = 0, w_t2 = 0;
  bool any_a = false, any_b = false;
  auto* weights = app.add_subcommand("weights", "solve Condition A for a pair of tame characters");
  weights->add_option("--t1", w_t1, "tame exponent of the sub character")->required();
  weights->add_option("--t2", w_t2, "tame exponent of the quotient character")->required();
  weights->add_flag("--any-a", any_a, "allow nonzero a_i");
  weights->add_flag("--any-b", any_b, "allow non-regular b_i");

  std::vector<int> fl_m;
  std::string fl_x = "1";
  auto* fl = app.add_subcommand("fl", "reduce a rank-1 Fontaine-Laffaille module");
  fl->add_option("--m", fl_m, "Hodge exponents in [0, p-2]")->delimiter(',')->required();
  fl->add_option("--x", fl_x, "residue of the Frobenius scalar");

  GeeArgs ga;
  auto* v331 = app.add_subcommand("verify331", "build and verify the full extension diagram");
  v331->add_option("--J", ga.J, "subset J (comma separated; omit for the empty set)")->delimiter(',');
  v331->add_option("--b", ga.b, "regular exponents b_i")->delimiter(',')->required();
  v331->add_option("--a", ga.a, "scalar a");
  v331->add_option("--bscalar", ga.bscalar, "scalar b");
  v331->add_option("--lambda", ga.lambda, "extension parameters lambda_i (zero outside J)")->delimiter(',');
  v331->add_option("--corrupt", ga.corrupt, "deliberate corruption: none, cprime, matching");
  v331->add_flag("--objects", ga.objects, "include the nine serialized objects");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "exhaustive runs over parameter points");
  sweep->add_option("--p-set", sa.p_set, "primes")->delimiter(',');
  sweep->add_option("--r-set", sa.r_set, "residue degrees")->delimiter(',');
  sweep->add_option("--mode", sa.mode, "lemmas, verify331 or weights");
  sweep->add_option("--threads", sa.threads, "worker threads (0 = all cores)");
  sweep->add_option("--sample", sa.sample, "evaluate a seeded random subset of this many points per frame");
  auto* t1opt = sweep->add_option("--t1", sa.t1, "tame exponent of the sub character (weights mode)");
  auto* t2opt = sweep->add_option("--t2", sa.t2, "tame exponent of the quotient character (weights mode)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    int rc = app.exit(ex);
    return rc == 0 ? 0 : 2;
  }

  try {
    Output o;
    if (sweep->parsed()) {
      sa.have_t = t1opt->count() > 0 && t2opt->count() > 0;
      o = cmd_sweep(sa, g.seed);
      o.command = "sweep";
    } else {
      Params P = make_params(g);
      if (classify->parsed()) o = cmd_classify(P, r1), o.command = "classify";
      else if (chr->parsed()) o = cmd_char(P, char_c, char_unram), o.command = "char";
      else if (cj->parsed()) o = cmd_class_j(P, cj_J, cj_t, cj_unram), o.command = "class-j";
      else if (hom->parsed()) o = cmd_hom(P, pair_kappa, ra, rb), o.command = "hom";
      else if (mx->parsed()) o = cmd_max(P, pair_kappa, ra, rb), o.command = "max";
      else if (weights->parsed()) o = cmd_weights(P, w_t1, w_t2, any_a, any_b), o.command = "weights";
      else if (fl->parsed()) o = cmd_fl(P, fl_m, fl_x), o.command = "fl";
      else if (v331->parsed()) o = cmd_verify331(P, ga), o.command = "verify331";
      o.params = params_to_json(P);
    }
    emit(o, g);
    return o.checks.all_pass() ? 0 : 1;
  } catch (const UsageError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
